//! Weyl group orders, reduced words, and the factorization `W = W₁ · W¹`
//! for both a standard and a nonstandard Levi root set in G2.

use std::collections::BTreeSet;

use flagstrat::rootsys::{Root, RootSystem};
use flagstrat::weyl::{coset_sets, factorize, is_standard_levi, WeylGroup, DEFAULT_WEYL_CAP};

fn show(rs: &RootSystem, group: &WeylGroup, levi_roots: &[[i64; 2]]) -> flagstrat::Result<()> {
    let mut levi = BTreeSet::new();
    for r in levi_roots {
        let root = Root(r.to_vec());
        levi.insert(rs.require_index(&root)?);
        levi.insert(rs.require_index(&root.neg())?);
    }
    let sets = coset_sets(rs, group, &levi)?;
    let names: Vec<String> = levi.iter().map(|&i| rs.root(i).to_string()).collect();
    println!(
        "levi {{{}}} (standard: {}): |W1| = {}, |W^1| = {}",
        names.join(", "),
        is_standard_levi(rs, &levi),
        sets.levi.len(),
        sets.cosets.len()
    );
    for &s in &sets.cosets {
        let sigma = group.element(s);
        let inv: Vec<String> = sigma.inversion_set().roots(rs).iter().map(ToString::to_string).collect();
        println!("  sigma = {:<14} Phi = {{{}}}", format!("{:?}", sigma.word_one_based()), inv.join(", "));
    }
    let w = group.longest();
    let (t, s) = factorize(rs, group, &sets, w)?;
    println!(
        "  longest {:?} = {:?} * {:?}",
        w.word_one_based(),
        group.element(t).word_one_based(),
        group.element(s).word_one_based()
    );
    Ok(())
}

fn main() -> flagstrat::Result<()> {
    for label in ["A2", "B2", "G2"] {
        let rs = RootSystem::from_label(label)?;
        let group = WeylGroup::enumerate(&rs, DEFAULT_WEYL_CAP)?;
        let words: Vec<String> = group.elements().iter().map(|w| format!("{:?}", w.word_one_based())).collect();
        println!("|W({label})| = {}: {}", group.order(), words.join(" "));
    }
    println!();
    let rs = RootSystem::from_label("G2")?;
    let group = WeylGroup::enumerate(&rs, DEFAULT_WEYL_CAP)?;
    show(&rs, &group, &[[1, 0]])?;
    show(&rs, &group, &[[2, 1]])?;
    Ok(())
}
