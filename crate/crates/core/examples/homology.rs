//! Reduced homology and cohomology over Z, Q and F_p.
//!
//! Run with `cargo run --example homology`.

use polyprod::cli::render_graded;
use polyprod::complex::{rp2_six, SimplicialComplex, VertexSet};
use polyprod::homology::{reduced_cohomology, reduced_homology, relative_homology, Coefficients};

fn main() -> polyprod::Result<()> {
    let rp2 = rp2_six();
    for coeff in [Coefficients::Z, Coefficients::Q, Coefficients::prime(2)?, Coefficients::prime(3)?] {
        print!("H~(RP^2; {coeff}):\n{}", render_graded(&reduced_homology(&rp2, coeff), coeff));
    }
    // Torsion moves up one degree in cohomology.
    print!("H~^*(RP^2; z):\n{}", render_graded(&reduced_cohomology(&rp2, Coefficients::Z), Coefficients::Z));

    // {∅} has H~_{-1} = Z; the void complex has nothing at all.
    let g = VertexSet::range(1, 2)?;
    print!("H~({{∅}}):\n{}", render_graded(&reduced_homology(&SimplicialComplex::empty_face(g), Coefficients::Z), Coefficients::Z));
    print!("H~(void):\n{}", render_graded(&reduced_homology(&SimplicialComplex::void(g), Coefficients::Z), Coefficients::Z));

    // H_*(Δ^ω, L) is H~_{*-1}(L).
    let circle = SimplicialComplex::simplex_boundary(VertexSet::range(1, 3)?);
    let rel = relative_homology(circle.ground(), &circle, Coefficients::Z)?;
    print!("H(Δ^2, ∂Δ^2):\n{}", render_graded(&rel.groups, Coefficients::Z));
    println!("boundary isomorphism holds: {}", rel.boundary_iso);
    Ok(())
}
