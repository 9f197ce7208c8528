//! Reduced simplicial (co)homology over `Z`, `Q` and `F_p`.

mod chain;
pub mod field;
mod group;
mod induced;
mod matrix;
mod snf;

use std::fmt;

use num_traits::One;

pub use chain::AugmentedChainComplex;
pub use group::{graded_tensor, FgAbelianGroup, GradedGroup};
pub use induced::{
    inclusion_ranks, induced_inclusion_map, integral_split_status, DegreeMap, InclusionRanks,
    SplitStatus,
};
pub use matrix::{IntegerMatrix, Matrix};
pub use snf::{invariant_factors, rank_mod_p, smith_normal_form};

use crate::complex::{SimplicialComplex, VertexSet};
use crate::error::{Error, Result};

/// A coefficient field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldCoeff {
    Rationals,
    Prime(u64),
}

impl FieldCoeff {
    /// Rejects non-primes and moduli above `u32::MAX`.
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(FieldCoeff::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coefficients {
    Integers,
    Field(FieldCoeff),
}

impl Coefficients {
    pub const Z: Coefficients = Coefficients::Integers;
    pub const Q: Coefficients = Coefficients::Field(FieldCoeff::Rationals);

    pub fn prime(p: u64) -> Result<Self> {
        FieldCoeff::prime(p).map(Coefficients::Field)
    }

    pub fn is_field(self) -> bool {
        matches!(self, Coefficients::Field(_))
    }
}

impl fmt::Display for Coefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficients::Integers => f.write_str("z"),
            Coefficients::Field(FieldCoeff::Rationals) => f.write_str("q"),
            Coefficients::Field(FieldCoeff::Prime(p)) => write!(f, "p:{p}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 || p > u32::MAX as u64 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Rank of `m` over the coefficient field, or over `Q` for integers.
fn matrix_rank(m: &Matrix<i64>, coeff: Coefficients) -> usize {
    match coeff {
        Coefficients::Field(FieldCoeff::Prime(p)) => rank_mod_p(m, p),
        _ => invariant_factors(m).len(),
    }
}

fn torsion_of(m: &Matrix<i64>) -> impl Iterator<Item = num_bigint::BigInt> {
    invariant_factors(m).into_iter().filter(|d| !d.is_one())
}

/// Homology of an augmented chain complex, degrees `-1` and up.
pub fn chain_homology(c: &AugmentedChainComplex, coeff: Coefficients) -> GradedGroup {
    let mut out = GradedGroup::zero();
    let Some(top) = c.top_degree() else { return out };
    let ranks: Vec<usize> = (-1..=top + 1).map(|d| matrix_rank(&c.boundary(d), coeff)).collect();
    let rank_at = |d: i32| ranks[(d + 1) as usize];
    for n in -1..=top {
        let free = c.dim(n) - rank_at(n) - rank_at(n + 1);
        let g = match coeff {
            Coefficients::Integers => FgAbelianGroup::new(free, torsion_of(&c.boundary(n + 1))),
            Coefficients::Field(_) => FgAbelianGroup::free(free),
        };
        out.set(n, g);
    }
    out
}

/// Cohomology computed from the cochain complex itself: the torsion of
/// `H^n` comes from the Smith form of `δ^{n-1}`.
pub fn chain_cohomology(c: &AugmentedChainComplex, coeff: Coefficients) -> GradedGroup {
    let mut out = GradedGroup::zero();
    let Some(top) = c.top_degree() else { return out };
    let ranks: Vec<usize> = (-2..=top).map(|d| matrix_rank(&c.coboundary(d), coeff)).collect();
    let rank_at = |d: i32| ranks[(d + 2) as usize];
    for n in -1..=top {
        let free = c.dim(n) - rank_at(n) - rank_at(n - 1);
        let g = match coeff {
            Coefficients::Integers => FgAbelianGroup::new(free, torsion_of(&c.coboundary(n - 1))),
            Coefficients::Field(_) => FgAbelianGroup::free(free),
        };
        out.set(n, g);
    }
    out
}

pub fn reduced_homology(k: &SimplicialComplex, coeff: Coefficients) -> GradedGroup {
    chain_homology(&AugmentedChainComplex::of_complex(k), coeff)
}

pub fn reduced_cohomology(k: &SimplicialComplex, coeff: Coefficients) -> GradedGroup {
    chain_cohomology(&AugmentedChainComplex::of_complex(k), coeff)
}

/// Alternating count of faces, the empty face counted in degree `-1`.
pub fn euler_characteristic(k: &SimplicialComplex) -> i64 {
    AugmentedChainComplex::of_complex(k).euler_characteristic()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelativeHomology {
    /// `H_*(Δ^ω, L)`.
    pub groups: GradedGroup,
    /// Whether `H_*(Δ^ω, L) ≅ H̃_{*-1}(L)` holds degreewise.
    pub boundary_iso: bool,
}

/// Homology of `(Δ^ω, L)` on the basis of nonfaces of `L` inside `ω`.
///
/// `L = Δ^ω` gives the zero complex. The boundary isomorphism holds whenever
/// `Δ^ω` is acyclic, i.e. for every nonempty `ω`.
pub fn relative_homology(
    omega: VertexSet,
    l: &SimplicialComplex,
    coeff: Coefficients,
) -> Result<RelativeHomology> {
    if let Some(face) = l.faces().iter().find(|f| !f.is_subset(omega)) {
        let vertex = face.difference(omega).min().expect("face leaves omega");
        return Err(Error::NotInGround { vertex });
    }
    let groups = chain_homology(&AugmentedChainComplex::relative(omega, l), coeff);
    let boundary_iso = groups == reduced_homology(l, coeff).shift(1);
    Ok(RelativeHomology { groups, boundary_iso })
}
