//! Maps on reduced homology induced by inclusions `A ⊆ X`.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

use super::chain::AugmentedChainComplex;
use super::field::{independent_columns, nullspace, solve, Field, PrimeField, Rationals};
use super::{reduced_homology, Coefficients, FieldCoeff, GradedGroup};

/// `ι_d : H̃_d(A) → H̃_d(X)` in chosen homology bases.
#[derive(Debug, Clone)]
pub struct DegreeMap<E> {
    pub degree: i32,
    /// `dim H̃_d(X)` rows, `dim H̃_d(A)` columns.
    pub matrix: Vec<Vec<E>>,
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
}

impl<E> DegreeMap<E> {
    pub fn kernel_dim(&self) -> usize {
        self.source_dim - self.rank
    }

    pub fn image_dim(&self) -> usize {
        self.rank
    }

    pub fn cokernel_dim(&self) -> usize {
        self.target_dim - self.rank
    }
}

/// Homology representatives in degree `d`: cycles completing a basis of the
/// boundaries to a basis of the cycles.
struct HomologyBasis<E> {
    boundaries: Vec<Vec<E>>,
    reps: Vec<Vec<E>>,
}

fn homology_basis<F: Field>(f: &F, c: &AugmentedChainComplex, d: i32) -> HomologyBasis<F::Elem> {
    let dim = c.dim(d);
    let to_field = |m: &super::Matrix<i64>| -> Vec<Vec<F::Elem>> {
        (0..m.rows()).map(|i| m.row(i).iter().map(|&x| f.from_i64(x)).collect()).collect()
    };
    let bd_in = c.boundary(d);
    let cycles = nullspace(f, &to_field(&bd_in), bd_in.cols());
    let bd_out = c.boundary(d + 1);
    let out = to_field(&bd_out);
    let all_b: Vec<Vec<F::Elem>> =
        (0..bd_out.cols()).map(|j| out.iter().map(|row| row[j].clone()).collect()).collect();
    let boundaries: Vec<Vec<F::Elem>> = independent_columns(f, &all_b, dim)
        .into_iter()
        .map(|j| all_b[j].clone())
        .collect();
    let mut stacked = boundaries.clone();
    stacked.extend(cycles.iter().cloned());
    let reps = independent_columns(f, &stacked, dim)
        .into_iter()
        .filter(|&j| j >= boundaries.len())
        .map(|j| stacked[j].clone())
        .collect();
    HomologyBasis { boundaries, reps }
}

/// Matrices of the inclusion-induced maps in every degree where either side
/// is nonzero.
pub fn induced_inclusion_map<F: Field>(
    f: &F,
    a: &SimplicialComplex,
    x: &SimplicialComplex,
) -> Result<Vec<DegreeMap<F::Elem>>> {
    if a.ground() != x.ground() {
        return Err(Error::GroundMismatch);
    }
    if let Some(face) = a.faces().iter().find(|s| !x.contains(**s)) {
        return Err(Error::NotASubcomplex { face: face.to_string() });
    }
    let ca = AugmentedChainComplex::of_complex(a);
    let cx = AugmentedChainComplex::of_complex(x);
    let Some(top) = cx.top_degree() else { return Ok(Vec::new()) };
    let mut maps = Vec::new();
    for d in -1..=top {
        let ha = homology_basis(f, &ca, d);
        let hx = homology_basis(f, &cx, d);
        if ha.reps.is_empty() && hx.reps.is_empty() {
            continue;
        }
        let nb = hx.boundaries.len();
        let mut cols = hx.boundaries.clone();
        cols.extend(hx.reps.iter().cloned());
        let mut matrix = vec![vec![f.zero(); ha.reps.len()]; hx.reps.len()];
        for (j, rep) in ha.reps.iter().enumerate() {
            let mut pushed = vec![f.zero(); cx.dim(d)];
            for (i, cell) in ca.basis(d).iter().enumerate() {
                let pos = cx.basis(d).iter().position(|c| c == cell).expect("subcomplex cell");
                pushed[pos] = rep[i].clone();
            }
            let coords = solve(f, &cols, &pushed).expect("a cycle of A is a cycle of X");
            for (i, row) in matrix.iter_mut().enumerate() {
                row[j] = coords[nb + i].clone();
            }
        }
        let rank = if matrix.is_empty() {
            0
        } else {
            super::field::rank(f, &matrix, ha.reps.len())
        };
        maps.push(DegreeMap {
            degree: d,
            matrix,
            source_dim: ha.reps.len(),
            target_dim: hx.reps.len(),
            rank,
        });
    }
    Ok(maps)
}

/// Kernel, image and cokernel dimensions of `ι_d` in one degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InclusionRanks {
    pub degree: i32,
    pub kernel: usize,
    pub image: usize,
    pub cokernel: usize,
}

pub fn inclusion_ranks(
    a: &SimplicialComplex,
    x: &SimplicialComplex,
    coeff: FieldCoeff,
) -> Result<Vec<InclusionRanks>> {
    fn summarize<E>(maps: Vec<DegreeMap<E>>) -> Vec<InclusionRanks> {
        maps.iter()
            .map(|m| InclusionRanks {
                degree: m.degree,
                kernel: m.kernel_dim(),
                image: m.image_dim(),
                cokernel: m.cokernel_dim(),
            })
            .collect()
    }
    Ok(match coeff {
        FieldCoeff::Rationals => summarize(induced_inclusion_map(&Rationals, a, x)?),
        FieldCoeff::Prime(p) => summarize(induced_inclusion_map(&PrimeField::new(p), a, x)?),
    })
}

/// Whether `ι: H̃(A) → H̃(X)` is known to have free kernel, image and
/// cokernel over `Z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SplitStatus {
    Split,
    Unsupported(String),
}

/// Certifies integral splitness from sufficient conditions only: `A = X`
/// with free homology, `H̃(X) = 0` with `H̃(A)` free (ι is onto), or
/// `H̃(A) = 0` with `H̃(X)` free.
pub fn integral_split_status(a: &SimplicialComplex, x: &SimplicialComplex) -> SplitStatus {
    let ha: GradedGroup = reduced_homology(a, Coefficients::Integers);
    let hx: GradedGroup = reduced_homology(x, Coefficients::Integers);
    if a == x && ha.is_free() {
        return SplitStatus::Split;
    }
    if hx.is_zero() && ha.is_free() {
        return SplitStatus::Split;
    }
    if ha.is_zero() && hx.is_free() {
        return SplitStatus::Split;
    }
    SplitStatus::Unsupported(format!(
        "no splitness certificate for H(A) = {ha:?}, H(X) = {hx:?}"
    ))
}
