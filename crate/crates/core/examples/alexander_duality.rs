//! An explicit chain-level witness for combinatorial Alexander duality on slices.
//!
//! Run with `cargo run --example alexander_duality`.

use polyprod::cli::render_graded;
use polyprod::complex::{IndexPair, SimplicialComplex, VertexSet};
use polyprod::hochster::alexander_duality_witness;
use polyprod::homology::Coefficients;

fn main() -> polyprod::Result<()> {
    let s = VertexSet::range(1, 5)?;
    let k = SimplicialComplex::from_lists(&[1, 2, 3, 4, 5], &[&[1, 2], &[2, 3], &[3, 4], &[4, 1], &[5]])?;
    let pair = IndexPair::new(VertexSet::EMPTY, VertexSet::range(1, 4)?)?;
    let w = alexander_duality_witness(&k, pair, s)?;
    println!("slice {pair} of K and slice {} of the dual", IndexPair { sigma: w.dual_sigma, omega: pair.omega });
    print!("H~(slice):\n{}", render_graded(&w.homology, Coefficients::Z));
    print!("H~^*(dual slice):\n{}", render_graded(&w.dual_cohomology, Coefficients::Z));
    for d in &w.degrees {
        println!(
            "degree {} -> codegree {}: {}x{} matrix, sign {:?}",
            d.degree,
            d.dual_degree,
            d.matrix.rows(),
            d.matrix.cols(),
            d.sign
        );
    }
    println!("signed permutation: {}", w.is_signed_permutation());
    println!("chain map: {}", w.is_chain_map());
    println!("groups agree: {}", w.groups_agree());
    Ok(())
}
