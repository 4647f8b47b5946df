//! Factoring multisets in Z and Z² under Minkowski product.
use charlattice::abmultiset::{factorizations, multiset_product, GroupMultiset};

fn main() -> charlattice::Result<()> {
    let c = GroupMultiset::from_ints(&[0, 1, 2, 3, 4, 5, 6, 7]);
    for profile in [[2, 4], [4, 2]] {
        let decs = factorizations(&c, &profile)?;
        println!("{c} with sizes {profile:?}: {} classes", decs.len());
        for d in decs {
            let parts: Vec<String> = d.factors.iter().map(|f| f.to_string()).collect();
            println!("  {}", parts.join(" · "));
        }
    }

    let a = GroupMultiset::from_vectors(2, vec![vec![0, 0], vec![1, 0], vec![0, 1]])?;
    let b = GroupMultiset::from_vectors(2, vec![vec![0, 0], vec![2, 1]])?;
    let c = multiset_product(&a, &b)?;
    let decs = factorizations(&c, &[3, 2])?;
    println!("{c}: {} classes of 3 × 2 factorizations", decs.len());
    Ok(())
}
