//! The composition complex 𝒮(K; L_1, …, L_m) and its homology.
//!
//! Run with `cargo run --example composition`.

use polyprod::cli::render_graded;
use polyprod::complex::{composition_complex, SimplicialComplex, VertexSet};
use polyprod::hochster::composition_homology;
use polyprod::homology::Coefficients;

fn main() -> polyprod::Result<()> {
    // K = S^0 on {1,2}; each L_k a circle on its own block.
    let k = SimplicialComplex::simplex_boundary(VertexSet::range(1, 2)?);
    let ls = vec![
        SimplicialComplex::simplex_boundary(VertexSet::range(1, 3)?),
        SimplicialComplex::simplex_boundary(VertexSet::range(4, 6)?),
    ];
    let comp = composition_complex(&k, &ls)?;
    println!("𝒮(K; L1, L2) has {} faces on {}", comp.num_faces(), comp.ground());
    println!("f-vector (from the empty face): {:?}", comp.f_vector());

    // Direct homology against the tensor formula H~(K) ⊗ H~(L1) ⊗ H~(L2), shifted by the join.
    let q = Coefficients::Q;
    let cmp = composition_homology(&k, &ls, q)?;
    print!("direct:\n{}", render_graded(&cmp.direct, q));
    print!("formula:\n{}", render_graded(&cmp.formula, q));
    println!("agree: {}", cmp.agrees());

    // Duality commutes with composition.
    let duals: Vec<SimplicialComplex> = ls.iter().map(|l| l.dual(l.ground())).collect::<Result<_, _>>()?;
    let rhs = composition_complex(&k.dual(k.ground())?, &duals)?;
    println!("dual of 𝒮 equals 𝒮 of duals: {}", comp.dual(comp.ground())? == rhs);
    Ok(())
}
