//! Decides the fundamental-system criterion for the worked G2 and A2 cases
//! and lists every accepted system.

use flagstrat::elliptic::EllipticElement;
use flagstrat::realform::{accepted_witnesses, criterion_s, known_vector_field_note, InnerInvolution};
use flagstrat::rootsys::RootSystem;
use flagstrat::weyl::{WeylGroup, DEFAULT_WEYL_CAP};

fn main() -> flagstrat::Result<()> {
    let cases: [(&str, [i64; 2]); 5] = [("G2", [1, -2]), ("G2", [1, -3]), ("A2", [1, 0]), ("A2", [0, 1]), ("A2", [0, 0])];
    let z = InnerInvolution::new(vec![0, 1]);
    for (label, c) in cases {
        let rs = RootSystem::from_label(label)?;
        let group = WeylGroup::enumerate(&rs, DEFAULT_WEYL_CAP)?;
        let t = EllipticElement::from_integers(&c);
        let v = criterion_s(&rs, &group, &t, &z)?;
        print!("{label} -iT = {c:?}, Z = {:?}: ", z.coweight());
        match (&v.witness, v.failure_reason) {
            (Some(w), _) => {
                let roots: Vec<String> = w.roots.iter().map(|r| r.root.to_string()).collect();
                println!("holds, first witness {{{}}} from w = {:?}", roots.join(", "), w.word);
            }
            (None, Some(reason)) => println!("fails ({reason:?})"),
            (None, None) => println!("fails"),
        }
        for sys in accepted_witnesses(&rs, &group, &t, &z)? {
            let roots: Vec<String> = sys.roots.iter().map(|&i| rs.root(i).to_string()).collect();
            println!("    accepted {{{}}}", roots.join(", "));
        }
        if let Some(note) = known_vector_field_note(label, &t, &z) {
            println!("    {note}");
        }
    }
    Ok(())
}
