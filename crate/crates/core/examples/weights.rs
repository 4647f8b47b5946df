//! Weyl dimensions and Freudenthal weight multiplicities.
use charlattice::reps::{irreducible, weyl_dimension, HighestWeight, SemisimpleAlgebra};
use charlattice::rootsys::{build_root_system, SimpleType};

fn main() -> charlattice::Result<()> {
    let e8: SemisimpleAlgebra = "E8".parse()?;
    let adj = HighestWeight::new(&e8, vec![vec![0, 0, 0, 0, 0, 0, 0, 1]])?;
    println!("dim E8 adjoint = {}", weyl_dimension(&e8, &adj)?);

    let rs = build_root_system(SimpleType::G2)?;
    let mults = charlattice::reps::dominant_multiplicities(&rs, &[2, 0]);
    println!("G2 V(2ω1) dominant multiplicities:");
    for (w, m) in &mults {
        println!("  {w:?} × {m}");
    }

    let fc = irreducible(SimpleType::a(2), &[1, 1])?;
    println!("sl3 adjoint: dim {}, {} distinct weights, zero weight × {}",
        fc.dim(), fc.num_distinct(), fc.max_multiplicity());
    Ok(())
}
