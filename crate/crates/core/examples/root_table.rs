//! Prints the positive roots of a finite root system in canonical order,
//! with heights and the Cartan integers against the simple roots.
//!
//!     cargo run --example root_table -- G2

use flagstrat::rootsys::RootSystem;

fn main() -> flagstrat::Result<()> {
    let label = std::env::args().nth(1).unwrap_or_else(|| "G2".into());
    let rs = RootSystem::from_label(&label)?;
    println!("{label}: rank {}, {} positive roots, dim g = {}", rs.rank(), rs.num_positive(), rs.dim_algebra());
    println!("cartan matrix: {:?}", rs.cartan().rows());
    println!("symmetrizer:   {:?}", rs.symmetrizer().iter().map(ToString::to_string).collect::<Vec<_>>());
    println!();
    for r in rs.positive_roots() {
        let ints: Vec<String> = (0..rs.rank())
            .map(|j| rs.cartan_integer(r, rs.simple_root(j)).to_string())
            .collect();
        println!("{:>3}  {:<14} {:?}  <r, a_j^v> = [{}]", r.height(), r.to_string(), r.coords(), ints.join(", "));
    }
    Ok(())
}
