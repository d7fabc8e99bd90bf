//! Regular and reverse values of multiple zeta functions at non-positive
//! integers, computed by recurrence and cross-checked with the Stirling
//! closed form and the depth-r formulas.

use mzv::{akiyama_tanigawa_rev, mzf_reg, mzf_rev, mzf_rev_stirling, IndexTuple};

fn main() {
    for s in ["0", "0,0", "1,1", "0,1", "1,0", "2,1,0", "0,0,0,3"] {
        let l: IndexTuple = s.parse().unwrap();
        let rev = mzf_rev(&l);
        println!(
            "l = ({s}):  regular {}  reverse {}  closed form agrees: {}",
            mzf_reg(&l),
            rev,
            mzf_rev_stirling(&l) == rev
        );
    }
    let l = IndexTuple::new(vec![0, 0, 0, 2]).unwrap();
    println!(
        "(0,0,0,2) by formula: {}",
        akiyama_tanigawa_rev(4, 2).unwrap() == mzf_rev(&l)
    );
}
