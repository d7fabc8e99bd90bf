//! Bivariate truncated power series: the Gregory generating function built
//! from logarithms by exact division.

use mzv::{Series, Var};

fn main() -> mzv::Result<()> {
    let order = 6;
    let lx = Series::log_one_plus(Var::X, order);
    let ly = Series::log_one_plus(Var::Y, order);
    let x = Series::var(order, Var::X);
    let y = Series::var(order, Var::Y);

    let num = y.mul(&lx.mul(&lx)?)?.sub(&x.mul(&ly.mul(&ly)?)?)?;
    let den = lx.sub(&ly)?;
    let num1 = Series::div_xy_difference(&num)?;
    let den1 = Series::div_xy_difference(&den)?;
    let g = Series::div_unit(&num1.truncate(order - 1), &den1.truncate(order - 1))?;
    println!(
        "(y log^2(1+x) - x log^2(1+y)) / (log(1+x) - log(1+y)) =\n  {}",
        g.truncate(4)
    );

    // x + y is not divisible by x - y
    let bad = x.add(&y)?;
    println!(
        "(x + y) / (x - y): {}",
        Series::div_xy_difference(&bad).unwrap_err()
    );
    Ok(())
}
