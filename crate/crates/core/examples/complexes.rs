//! Building complexes and taking duals, links, slices and joins.
//!
//! Run with `cargo run --example complexes`.

use polyprod::complex::{join, IndexPair, SimplicialComplex, VertexSet};

fn show(name: &str, k: &SimplicialComplex) {
    let facets: Vec<String> = k.facets().iter().map(|f| f.to_string()).collect();
    let body = if k.is_void() { "void".to_string() } else { facets.join(" ") };
    println!("{name:<18} ground {}  facets: {body}", k.ground());
}

fn main() -> polyprod::Result<()> {
    let s = VertexSet::range(1, 4)?;

    // The dual of the boundary of the tetrahedron is {∅}.
    let boundary = SimplicialComplex::simplex_boundary(s);
    show("boundary", &boundary);
    show("dual", &boundary.dual(s)?);

    // One vertex on a two-vertex ground is its own dual.
    let point = SimplicialComplex::from_lists(&[1, 2], &[&[1]])?;
    println!("{{1}} on {{1,2}} self-dual: {}", point.is_self_dual());

    // A ghost vertex: 4 is in the ground but not in any face.
    let path = SimplicialComplex::from_lists(&[1, 2, 3, 4], &[&[1, 2], &[2, 3]])?;
    show("path", &path);
    show("dual of path", &path.dual(s)?);

    // The two extreme complexes swap under duality.
    show("void dual", &SimplicialComplex::void(s).dual(s)?);
    show("{∅} dual", &SimplicialComplex::empty_face(s).dual(s)?);

    let sigma = VertexSet::from_labels([2])?;
    show("link of 2", &path.link(sigma)?);

    // K_{σ,ω} = link of σ restricted to ω.
    let pair = IndexPair::new(sigma, VertexSet::from_labels([1, 3, 4])?)?;
    show(&format!("slice {pair}"), &path.slice(pair)?);

    let edge = SimplicialComplex::from_lists(&[5, 6], &[&[5], &[6]])?;
    show("path * S^0", &join(&[path, edge])?);
    Ok(())
}
