//! Star values and the sign relation between star and non-star values,
//! including the pairs `(0, odd)` where the relation breaks down.

use mzv::{mzf_reg, mzsf_reg, mzsf_rev, mzsf_rev_stirling, sign_theorem_check, IndexTuple};

fn main() {
    let mut ok = 0;
    let grid: Vec<_> = IndexTuple::all_up_to(4, 5)
        .into_iter()
        .filter(|l| l.entries()[0] >= 1)
        .collect();
    for l in &grid {
        if sign_theorem_check(l, false).unwrap() && sign_theorem_check(l, true).unwrap() {
            ok += 1;
        }
    }
    println!(
        "sign relation holds on {ok} of {} tuples with l_1 >= 1",
        grid.len()
    );

    for l2 in [1, 3, 5] {
        let l = IndexTuple::new(vec![0, l2]).unwrap();
        println!("(0,{l2}): value {}  star {}", mzf_reg(&l), mzsf_reg(&l));
    }

    let l: IndexTuple = "2,1,1".parse().unwrap();
    println!(
        "star reverse (2,1,1) = {} (closed form {})",
        mzsf_rev(&l),
        mzsf_rev_stirling(&l)
    );
}
