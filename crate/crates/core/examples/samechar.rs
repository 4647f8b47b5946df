//! Two representations of different algebras with the same formal character:
//! the 7-dimensional G2 module and Std ⊕ Std∨ ⊕ 1 of sl3.
use charlattice::charmatch::same_formal_character;
use charlattice::reps::{irreducible, FormalCharacter};
use charlattice::rootsys::SimpleType;

fn main() -> charlattice::Result<()> {
    let g2 = irreducible(SimpleType::G2, &[1, 0])?;
    let std = irreducible(SimpleType::a(2), &[1, 0])?;
    let sum = std
        .direct_sum(&std.dual())?
        .direct_sum(&FormalCharacter::trivial(std.algebra.clone(), 1))?;
    match same_formal_character(&g2, &sum) {
        Some(iso) => {
            println!("isomorphic; witness verifies: {}", iso.verify());
            for row in &iso.map {
                let r: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                println!("  [{}]", r.join(", "));
            }
        }
        None => println!("not isomorphic"),
    }
    println!("G2 vs sl3 Std: {:?}", same_formal_character(&g2, &std).map(|_| ()));
    Ok(())
}
