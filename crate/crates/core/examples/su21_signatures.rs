//! Signatures of the six invariant pseudo-Kähler metrics on the flag
//! manifold of SU(2,1), with their Gram matrices on `(b, c, x, y, z, w)`.

use flagstrat::lowrank::su21::su21_signature_table;

fn main() -> flagstrat::Result<()> {
    let table = su21_signature_table()?;
    println!(
        "Omega antisymmetric: {}, nondegenerate: {}",
        table.omega_antisymmetric, table.omega_nondegenerate
    );
    for m in &table.metrics {
        let diag: Vec<String> = (0..6).map(|i| m.gram[i][i].to_string()).collect();
        let offdiag = (0..6).any(|i| (0..6).any(|j| i != j && m.gram[i][j] != 0.into()));
        println!(
            "g{}: ({}, {})  diag = [{}]{}  j^2 = -1: {}",
            m.index,
            m.negatives,
            m.positives,
            diag.join(", "),
            if offdiag { " (not diagonal)" } else { "" },
            m.squares_to_minus_one
        );
    }
    Ok(())
}
