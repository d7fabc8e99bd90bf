//! Stirling numbers, their shifted polynomial versions, and the inverse
//! pair of sequence transforms.

use mzv::{
    int, rat, stirling_first, stirling_poly_second, stirling_second, stirling_transform,
    TransformDirection,
};

fn main() {
    println!(
        "s(5,m): {:?}",
        (0..=5)
            .map(|m| stirling_first(5, m).to_string())
            .collect::<Vec<_>>()
    );
    println!(
        "S(5,m): {:?}",
        (0..=5)
            .map(|m| stirling_second(5, m).to_string())
            .collect::<Vec<_>>()
    );
    for m in 0..=3 {
        println!("S(3,{m},Y) = {}", stirling_poly_second(3, m));
    }

    let y = rat(1, 2);
    let a: Vec<_> = (1..=6).map(|k| int(k * k)).collect();
    let b = stirling_transform(TransformDirection::FirstToSecond, &a, &y);
    let back = stirling_transform(TransformDirection::SecondToFirst, &b, &y);
    println!("a       = {}", join(&a));
    println!("T(a)    = {}", join(&b));
    println!("T^-1 T a = a: {}", back == a);
}

fn join(v: &[mzv::Rational]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}
