//! Asymptotic coefficients `C^(d)(-l; a)` and the staircase coefficients
//! `C_{i,r}` by definition, recurrence and explicit formula.

use mzv::{
    asym_coeff, c_ir, c_ir_explicit, c_ir_recurrence, parity_check, rat, DirectionVector,
    IndexTuple, ShiftVector,
};

fn main() {
    let ones = ShiftVector::ones(2);
    for (l, d) in [("0,1", "0"), ("0,1", "1"), ("1,1", "0"), ("1,1", "1")] {
        let l: IndexTuple = l.parse().unwrap();
        let d: DirectionVector = d.parse().unwrap();
        println!(
            "C^{d}(-l), l = ({l}): {}",
            asym_coeff(&l, &d, &ones).unwrap()
        );
    }

    let l: IndexTuple = "1,0,2".parse().unwrap();
    let a = ShiftVector::new(vec![rat(1, 2), rat(1, 3), rat(1, 1)]).unwrap();
    for i in 1..=3 {
        let def = c_ir(i, &l, &a).unwrap();
        let rec = c_ir_recurrence(i, &l, &a).unwrap();
        let exp = c_ir_explicit(i, &l, &a)
            .map(|v| v.to_string())
            .unwrap_or_else(|_| "n/a".into());
        println!("C_{{{i},3}}({l}; {a}) = {def}  recurrence {rec}  explicit {exp}");
    }
    println!(
        "parity relation at i=2: {}",
        parity_check(2, &l, &a).unwrap()
    );
}
