//! Polyhedral products of finite point sets and the set identities they satisfy.
//!
//! Run with `cargo run --example finite_models`.

use polyprod::complex::{SimplicialComplex, SimplicialPair, SimplicialPairSeq, VertexSet};
use polyprod::spaces::{
    complement_identity_check, finite_product, ghost_factorization_check, substitution_identity_check,
    FiniteSpacePair,
};

fn main() -> polyprod::Result<()> {
    // K = two points; X = {a, b, c}, A = {a}.
    let k = SimplicialComplex::from_lists(&[1, 2], &[&[1], &[2]])?;
    let pair = FiniteSpacePair::new(['a', 'b', 'c'], ['a'])?;
    let z = finite_product(&k, &[pair.clone(), pair.clone()])?;
    let tuples: Vec<String> = z.iter().map(|t| t.iter().collect()).collect();
    println!("𝒵(K; X, A) = {{{}}}", tuples.join(", "));

    let verdict = complement_identity_check(&k, &[pair.clone(), pair.clone()])?;
    println!("complement identity holds: {}", verdict.holds());

    // A void A_k splits off a cone factor.
    let ghost = FiniteSpacePair::new(['x', 'y'], [])?;
    let boundary = SimplicialComplex::simplex_boundary(VertexSet::range(1, 3)?);
    let v = ghost_factorization_check(&boundary, &[pair.clone(), ghost, pair.clone()])?;
    println!("ghost factorization holds: {}", v.holds());

    // Substituting simplicial pairs into K, then finite pairs into the result.
    let inner = SimplicialPairSeq::from_local(vec![
        SimplicialPair::new(
            SimplicialComplex::simplex(VertexSet::range(1, 2)?),
            SimplicialComplex::from_lists(&[1, 2], &[&[1], &[2]])?,
        )?,
        SimplicialPair::new(
            SimplicialComplex::simplex(VertexSet::range(1, 1)?),
            SimplicialComplex::empty_face(VertexSet::range(1, 1)?),
        )?,
    ])?;
    let leaves = vec![pair.clone(); inner.ground().len()];
    let v = substitution_identity_check(&k, &inner, &leaves)?;
    println!("substitution identity holds: {} ({} tuples)", v.holds(), v.lhs.len());
    Ok(())
}
