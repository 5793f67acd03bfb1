//! Generalized Bruhat cells of the flag manifold for G2 with a dominant
//! elliptic element, together with the per-cell counting identities.

use flagstrat::bruhat::{closure_codim_consistency, counting_identities, expected_dense_set, stratify};
use flagstrat::elliptic::{grade, EllipticElement};
use flagstrat::rootsys::RootSystem;
use flagstrat::weyl::{coset_sets, WeylGroup, DEFAULT_WEYL_CAP};

fn main() -> flagstrat::Result<()> {
    let label = std::env::args().nth(1).unwrap_or_else(|| "G2".into());
    let rs = RootSystem::from_label(&label)?;
    let group = WeylGroup::enumerate(&rs, DEFAULT_WEYL_CAP)?;
    let mut coeffs = vec![0; rs.rank()];
    *coeffs.last_mut().unwrap() = 1;
    let graded = grade(&rs, &EllipticElement::from_integers(&coeffs))?;
    let strat = stratify(&rs, &group, &graded)?;
    let sets = coset_sets(&rs, &group, &graded.levi)?;

    println!("{label}, -iT = {coeffs:?}: r = {}, |W1| = {}", graded.dims.r, strat.levi_group_order);
    for cell in &strat.cells {
        let gamma: Vec<String> = cell.gamma.iter().map(|&i| rs.root(i).to_string()).collect();
        let ids = counting_identities(&rs, &group, &sets, group.element(cell.sigma), &graded)?;
        println!(
            "  {:<16} n = {}  dim = {:<3} identities {}  gamma = {{{}}}",
            format!("{:?}", group.element(cell.sigma).word_one_based()),
            cell.n,
            cell.cell_dim,
            if ids.all_hold() { "ok" } else { "FAIL" },
            gamma.join(", ")
        );
    }
    let codim = closure_codim_consistency(&strat);
    println!("codimension histogram {:?}, unique open cell: {}", codim.histogram, codim.unique_minimum);
    let dense: std::collections::BTreeSet<usize> = strat.dense_o.iter().map(|&i| strat.cells[i].sigma).collect();
    println!("dense set matches e + simple reflections off the levi: {}", dense == expected_dense_set(&rs, &group, &graded));
    Ok(())
}
