//! The grading of the roots by an elliptic element, its dominant form, and
//! the finite count of weighted partitions over `u⁺`.
//!
//!     cargo run --example grading -- G2 1 -2

use flagstrat::elliptic::{count_weighted_partitions, dominant_form, grade, EllipticElement};
use flagstrat::rational::{parse_q, q};
use flagstrat::rootsys::RootSystem;

fn main() -> flagstrat::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (label, coeffs) = match args.split_first() {
        Some((l, rest)) if !rest.is_empty() => (l.clone(), rest.iter().map(|s| parse_q(s)).collect::<Result<Vec<_>, _>>()?),
        _ => ("G2".to_string(), vec![q(1), q(-2)]),
    };
    let rs = RootSystem::from_label(&label)?;
    let t = EllipticElement::new(coeffs);
    let g = grade(&rs, &t)?;
    println!("{label}, -iT = {:?}", t.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>());
    for (level, roots) in &g.levels {
        let names: Vec<String> = roots.iter().map(|&i| rs.root(i).to_string()).collect();
        println!("  g^{level:<4} {}", names.join(", "));
    }
    let levi: Vec<String> = g.levi.iter().map(|&i| rs.root(i).to_string()).collect();
    println!("  levi roots: {}", levi.join(", "));
    println!("  {:?}", g.dims);

    let (w, dom) = dominant_form(&rs, &t)?;
    println!(
        "dominant form {:?} via w = {:?}",
        dom.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>(),
        w.word_one_based()
    );

    let dominant = grade(&rs, &dom)?;
    let omega = dominant.omega_weights();
    for theta in 0..=4 {
        let n = count_weighted_partitions(&omega, q(theta))?.len();
        println!("  partitions of {theta} by weights {:?}: {n}", omega.iter().map(ToString::to_string).collect::<Vec<_>>());
    }
    Ok(())
}
