//! Multiplicity-free irreducibles of each simple type, checked against Freudenthal.
use charlattice::reps::{irreducible, is_multiplicity_free, multiplicity_free_catalog};
use charlattice::rootsys::SimpleType;

fn main() -> charlattice::Result<()> {
    let types = [SimpleType::a(3), SimpleType::b(4), SimpleType::c(3), SimpleType::d(5),
                 SimpleType::e(6), SimpleType::e(7), SimpleType::G2];
    for t in types {
        for e in multiplicity_free_catalog(t, 100) {
            let mf = is_multiplicity_free(&irreducible(t, &e.hw)?);
            println!("{t:4} {:?} dim {:3} {} (multiplicity free: {mf})", e.hw, e.dim, e.names.join(" = "));
        }
    }
    Ok(())
}
