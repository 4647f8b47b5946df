//! Root systems, Weyl orbits and the equal-rank subsystems of E8.
use charlattice::rootsys::{build_root_system, equal_rank_subsystems, orbit_of, SimpleType};

fn main() -> charlattice::Result<()> {
    for t in [SimpleType::a(3), SimpleType::b(3), SimpleType::G2, SimpleType::F4] {
        let rs = build_root_system(t)?;
        println!("{t}: {} positive roots, |W| = {}", rs.positive_roots().len(), t.weyl_group_order());
        println!("  cartan {:?}", rs.cartan_matrix);
    }

    let g2 = build_root_system(SimpleType::G2)?;
    let orbit = orbit_of(&g2.cartan_matrix, &[1, 0]);
    println!("G2 orbit of ω1: {orbit:?}");

    let e8 = build_root_system(SimpleType::e(8))?;
    for sub in equal_rank_subsystems(&e8)? {
        println!("E8 ⊃ {sub}");
    }
    Ok(())
}
