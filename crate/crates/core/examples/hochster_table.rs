//! The bigraded table of slice homologies and its behaviour under composition.
//!
//! Run with `cargo run --example hochster_table`.

use polyprod::cli::render_graded;
use polyprod::complex::{SimplicialComplex, VertexSet};
use polyprod::hochster::{hochster_composition_formula, hochster_table};
use polyprod::homology::Coefficients;

fn main() -> polyprod::Result<()> {
    let z = Coefficients::Z;
    let circle = SimplicialComplex::simplex_boundary(VertexSet::range(1, 3)?);
    let table = hochster_table(&circle, z, None)?;
    println!("nonzero entries of the table for ∂Δ^2 (internal degree = reduced + 1):");
    for (pair, g) in table.nonzero() {
        print!("{pair}\n{}", render_graded(g, z));
    }
    print!("total:\n{}", render_graded(&table.total(), z));

    // Each table entry of a composition factors into entries of K and the L_k.
    let k = SimplicialComplex::from_lists(&[1, 2], &[&[1], &[2]])?;
    let ls = vec![
        SimplicialComplex::simplex_boundary(VertexSet::range(1, 2)?),
        SimplicialComplex::from_lists(&[3, 4, 5], &[&[3, 4], &[5]])?,
    ];
    let pieces = hochster_composition_formula(&k, &ls, z)?;
    let nonzero = pieces.iter().filter(|p| !p.direct.is_zero()).count();
    let agree = pieces.iter().filter(|p| p.agrees()).count();
    println!("composition: {} pieces, {nonzero} nonzero, {agree} agree with the product formula", pieces.len());
    Ok(())
}
