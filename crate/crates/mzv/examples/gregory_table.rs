//! Generalized Gregory coefficients and their link to coefficients and
//! reverse values at the origin.

use mzv::asym::{gregory_origin_sum, i_partition_check};
use mzv::{c_ir, gregory, mzf_rev, rev_via_gregory, IndexTuple, ShiftVector};

fn main() {
    for m in 0..=4 {
        let row: Vec<String> = (0..=4).map(|n| gregory(m, n).to_string()).collect();
        println!("G({m},*): {}", row.join("\t"));
    }
    for r in 1..=4usize {
        let c = c_ir(1, &IndexTuple::zeros(r), &ShiftVector::ones(r)).unwrap();
        println!("C_{{1,{r}}}(0) = {c} = G(1,{})", r + 1);
    }
    for r in 1..=5 {
        println!(
            "r={r}: origin value {} = Gregory sum {}  partition ok: {}",
            mzf_rev(&IndexTuple::zeros(r)),
            gregory_origin_sum(r),
            i_partition_check(r).unwrap()
        );
    }
    let l: IndexTuple = "1,2".parse().unwrap();
    println!(
        "rev (1,2): {} via Gregory {}",
        mzf_rev(&l),
        rev_via_gregory(&l)
    );
}
