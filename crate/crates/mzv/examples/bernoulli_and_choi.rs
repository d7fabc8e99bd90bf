//! Bernoulli numbers and polynomials, higher-order Bernoulli polynomials and
//! the depth-r Hurwitz-type zeta at negative integers.

use mzv::{
    bernoulli_higher_order, bernoulli_number, bernoulli_poly, choi_identity_check, choi_value, rat,
    zeta_neg,
};

fn main() {
    for n in [0, 1, 2, 4, 12, 20] {
        println!("B_{n} = {}", bernoulli_number(n));
    }
    println!("B_3(Y) = {}", bernoulli_poly(3));
    println!("B_2^(3)(Y) = {}", bernoulli_higher_order(2, 3));
    for l in 0..5 {
        println!("zeta(-{l}) = {}", zeta_neg(l));
    }

    let z = rat(1, 3);
    for r in 1..=3 {
        println!("zeta({r}; -2; {z}) = {}", choi_value(r, 2, &z).unwrap());
    }
    println!(
        "splitting identity r=4, m=2, l=3: {}",
        choi_identity_check(4, 2, 3, &z).unwrap()
    );
}
