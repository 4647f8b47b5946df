//! Writing and reading the JSON character file format.
use charlattice::reps::irreducible;
use charlattice::rootsys::{diagram_automorphisms, SimpleType};
use charlattice::verify::CharacterFile;

fn main() -> charlattice::Result<()> {
    let t = SimpleType::a(2);
    let fc = irreducible(t, &[1, 0])?;
    let auts = diagram_automorphisms(t)?;
    let inv = auts.nontrivial_involutions().next();
    let text = CharacterFile::from_character(&fc, inv).emit();
    println!("{text}");
    let back = CharacterFile::parse(&text)?;
    assert_eq!(back.character()?, fc);
    println!("roundtrip ok, involution present: {}", back.lattice_involution()?.is_some());
    Ok(())
}
