//! Runs every identity suite, optionally with random extra samples:
//! `cargo run --example verify_all -- 7` seeds the sampler with 7.

use mzv::verify::{run, Bounds, Suite};

fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok());
    let bounds = Bounds {
        seed,
        samples: 20,
        ..Bounds::default()
    };
    let mut ok = true;
    for report in run(Suite::All, &bounds) {
        ok &= report.passed();
        println!("{report}");
    }
    std::process::exit(if ok { 0 } else { 1 });
}
