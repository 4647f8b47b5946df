//! Full-projection subalgebras of a product and their ranks.
use charlattice::goursat::{goursat_rank, verify_goursat_lemma, GoursatSpec};
use charlattice::rootsys::SimpleType;

fn main() -> charlattice::Result<()> {
    let a2 = SimpleType::a(2);
    let factors = vec![a2, a2, SimpleType::G2];
    let diag = GoursatSpec::new(factors.clone(), vec![vec![0, 1], vec![2]])?;
    println!("{diag}: rank {}", goursat_rank(&diag)?);
    println!("{}: rank {}", GoursatSpec::full(factors.clone()), goursat_rank(&GoursatSpec::full(factors.clone()))?);

    let report = verify_goursat_lemma(&[a2, a2, a2, SimpleType::a(1)])?;
    println!("checked {} partitions, holds: {}", report.specs_checked, report.holds());
    Ok(())
}
