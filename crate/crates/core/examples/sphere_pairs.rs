//! Homology of polyhedral products of sphere pairs and their complement duality.
//!
//! Run with `cargo run --example sphere_pairs`.

use polyprod::cli::render_graded;
use polyprod::complex::{rp2_six, SimplicialComplex, VertexSet};
use polyprod::homology::Coefficients;
use polyprod::spaces::{sphere_pair_duality_check, sphere_pair_homology, SpherePairSystem};

fn main() -> polyprod::Result<()> {
    let z = Coefficients::Z;
    // S^2 × S^1 ∪ S^1 × S^2 inside S^2 × S^2.
    let k = SimplicialComplex::simplex_boundary(VertexSet::range(1, 2)?);
    let sys = SpherePairSystem::parse("1:1,1:1")?;
    let report = sphere_pair_homology(&k, &sys)?;
    println!("K = S^0, pairs {sys}");
    print!("hat:\n{}", render_graded(&report.hat, z));
    print!("bar:\n{}", render_graded(&report.bar, z));
    print!("total:\n{}", render_graded(&report.total, z));
    for c in report.ledger.iter().filter(|c| c.source_degree.is_some()).take(4) {
        println!("  {:?} sigma={} omega={} shift {} -> degree {}: {}", c.part, c.sigma, c.omega, c.shift, c.degree, c.group);
    }

    // Torsion in a slice survives into the space.
    let rp2 = rp2_six();
    let sys = SpherePairSystem::new(vec![(1, 0); 6])?;
    let report = sphere_pair_homology(&rp2, &sys)?;
    let torsion: Vec<i32> = report.total.iter().filter(|(_, g)| !g.is_free()).map(|(d, _)| d).collect();
    println!("RP^2 with six (S^2, S^0) pairs: torsion in degrees {torsion:?}");

    // Duality between the space and its complement in the product of spheres.
    let verdict = sphere_pair_duality_check(&k, &SpherePairSystem::parse("3:1,2:0")?)?;
    println!("total dimension r = {}, duality holds: {}", verdict.total_dim, verdict.holds());
    Ok(())
}
