//! Classifies elements of `sl(2,R)` up to `λ·Ad g` and checks the explicit
//! normalizing pairs on seeded random samples.
//!
//!     cargo run --example sl2_orbits -- 42

use flagstrat::lowrank::sl2::{normalizer_error, sl2_classify, sl2_normalizer, sl2_suite};
use flagstrat::rational::{frac, q};

fn main() -> flagstrat::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0);
    let samples = [
        (q(0), q(-1), q(1)),
        (q(1), q(0), q(0)),
        (q(0), q(1), q(0)),
        (q(3), q(2), q(-5)),
        (q(2), q(1), q(0)),
        (q(1), q(-1), q(1)),
        (frac(1, 2), q(1), frac(-1, 4)),
        (q(0), q(2), q(0)),
    ];
    for (a, b, c) in samples {
        let class = sl2_classify(a, b, c);
        let n = sl2_normalizer(a, b, c)?;
        println!(
            "[[{a}, {b}], [{c}, {}]] -> {}  lambda = {:.6}  g = {:?}  err = {:.1e}  exact: {:?}",
            -a,
            class.tag,
            n.lambda,
            n.g.map(|r| r.map(|x| (x * 1e6).round() / 1e6)),
            normalizer_error(a, b, c, &n),
            n.exact
        );
    }
    let report = sl2_suite(seed, 1000, 1000);
    println!("\nseed {seed}:");
    for c in &report.classes {
        println!("  {}: max error {:.2e}, {} exact checks", c.tag, c.max_error, c.exact_checked);
    }
    println!("  invariance failures: {}/{}", report.invariance_failures, report.invariance_trials);
    Ok(())
}
