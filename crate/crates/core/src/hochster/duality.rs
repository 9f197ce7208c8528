//! Combinatorial Alexander duality between slices of `K` and of its dual.
//!
//! For `L = K_{σ,ω}` and `M = (K°)_{σ̃,ω}` with `σ̃ = S ∖ (σ ∪ ω)`, a subset
//! `η ⊆ ω` is a nonface of `L` exactly when `ω ∖ η` is a face of `M`. The map
//! `η ↦ ±(ω ∖ η)*` therefore identifies the relative chains `C_p(Δ^ω, L)` with
//! the cochains `C^{|ω|-p-2}(M)`. Combined with the boundary isomorphism
//! `H_p(Δ^ω, L) ≅ H̃_{p-1}(L)` this gives `H̃_j(L) ≅ H̃^{|ω|-j-3}(M)`.

use crate::complex::{IndexPair, SimplicialComplex, VertexSet};
use crate::error::{Error, Result};
use crate::homology::{
    chain_cohomology, reduced_cohomology, reduced_homology, AugmentedChainComplex, Coefficients,
    GradedGroup, Matrix,
};

/// The chain map in one relative degree.
#[derive(Debug, Clone)]
pub struct WitnessDegree {
    /// Relative chain degree `p = |η| - 1`.
    pub degree: i32,
    /// Target cochain degree `|ω| - p - 2`.
    pub dual_degree: i32,
    /// Rows indexed by the cochain basis, columns by the relative basis.
    pub matrix: Matrix<i64>,
    /// `ε` with `ψ_{p-1} ∘ d_p = ε · δ ∘ ψ_p`; `None` if no sign works.
    pub sign: Option<i8>,
}

#[derive(Debug, Clone)]
pub struct DualityWitness {
    pub pair: IndexPair,
    /// `σ̃`.
    pub dual_sigma: VertexSet,
    pub slice: SimplicialComplex,
    pub dual_slice: SimplicialComplex,
    pub degrees: Vec<WitnessDegree>,
    /// `H̃_*(K_{σ,ω})`, reduced degrees.
    pub homology: GradedGroup,
    /// `H̃^*((K°)_{σ̃,ω})`, reduced degrees, computed from cochains.
    pub dual_cohomology: GradedGroup,
}

impl DualityWitness {
    /// Every degree map is a bijection of bases with `±1` entries.
    pub fn is_signed_permutation(&self) -> bool {
        self.degrees.iter().all(|w| is_signed_permutation(&w.matrix))
    }

    /// Every degree admits a sign making `ψ` intertwine `d` and `δ`.
    pub fn is_chain_map(&self) -> bool {
        self.degrees.iter().all(|w| w.sign.is_some())
    }

    /// `H̃_j(K_{σ,ω}) ≅ H̃^{|ω|-j-3}((K°)_{σ̃,ω})` for every `j`.
    pub fn groups_agree(&self) -> bool {
        let n = self.pair.omega.len() as i32;
        let lhs_ok = self
            .homology
            .iter()
            .all(|(j, g)| self.dual_cohomology.get(n - j - 3) == *g);
        let rhs_ok = self
            .dual_cohomology
            .iter()
            .all(|(d, g)| self.homology.get(n - d - 3) == *g);
        lhs_ok && rhs_ok
    }

    pub fn holds(&self) -> bool {
        self.is_signed_permutation() && self.is_chain_map() && self.groups_agree()
    }
}

fn is_signed_permutation(m: &Matrix<i64>) -> bool {
    if m.rows() != m.cols() {
        return false;
    }
    let mut col_hits = vec![0usize; m.cols()];
    for i in 0..m.rows() {
        let mut hits = 0;
        for (j, &x) in m.row(i).iter().enumerate() {
            match x {
                0 => {}
                1 | -1 => {
                    hits += 1;
                    col_hits[j] += 1;
                }
                _ => return false,
            }
        }
        if hits != 1 {
            return false;
        }
    }
    col_hits.iter().all(|&h| h == 1)
}

/// Parity of the shuffle placing sorted `eta` before sorted `rest`.
pub fn shuffle_sign(eta: VertexSet, rest: VertexSet) -> i64 {
    let inversions: usize = eta.iter().map(|a| rest.iter().filter(|&b| b < a).count()).sum();
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Builds `ψ(η) = sgn(η, ω∖η) · (ω∖η)*` and checks it degree by degree.
pub fn alexander_duality_witness(
    k: &SimplicialComplex,
    pair: IndexPair,
    s: VertexSet,
) -> Result<DualityWitness> {
    if pair.omega.is_empty() {
        return Err(Error::EmptyOmega);
    }
    if let Some(v) = pair.sigma.intersection(pair.omega).min() {
        return Err(Error::NotDisjoint { vertex: v });
    }
    if let Some(v) = pair.sigma.union(pair.omega).difference(s).min() {
        return Err(Error::OutsideRelativeSet { vertex: v });
    }
    let dual = k.dual(s)?;
    let k_on_s = k.with_ground(s)?;
    let slice = k_on_s.slice(pair)?;
    let dual_sigma = pair.complement_sigma(s);
    let dual_slice = dual.slice(IndexPair { sigma: dual_sigma, omega: pair.omega })?;

    let omega = pair.omega;
    let n = omega.len() as i32;
    let rel = AugmentedChainComplex::relative(omega, &slice);
    let coch = AugmentedChainComplex::of_complex(&dual_slice);

    let psi = |p: i32| -> Matrix<i64> {
        let src = rel.basis(p);
        let dst = coch.basis(n - p - 2);
        let mut m = Matrix::zeros(dst.len(), src.len());
        for (j, &eta) in src.iter().enumerate() {
            let rest = omega.difference(eta);
            if let Some(i) = dst.iter().position(|&c| c == rest) {
                m.set(i, j, shuffle_sign(eta, rest));
            }
        }
        m
    };

    let mut degrees = Vec::new();
    for p in -1..n {
        let q = n - p - 2;
        let matrix = psi(p);
        // ψ_{p-1} ∘ d_p  versus  δ^q ∘ ψ_p, both maps C_p → C^{q+1}.
        let lhs = psi(p - 1).mul(&rel.boundary(p));
        let rhs = coch.coboundary(q).mul(&matrix);
        // Moving the deleted vertex across the shuffle costs (-1)^p, so try
        // that sign first; it is also what degrees with zero composites get.
        let eps: i64 = if p.rem_euclid(2) == 0 { 1 } else { -1 };
        let sign = if lhs == rhs.map(|x| eps * x) {
            Some(eps as i8)
        } else if lhs == rhs.map(|x| -eps * x) {
            Some(-eps as i8)
        } else {
            None
        };
        degrees.push(WitnessDegree { degree: p, dual_degree: q, matrix, sign });
    }

    let homology = reduced_homology(&slice, Coefficients::Integers);
    let dual_cohomology = chain_cohomology(&coch, Coefficients::Integers);
    Ok(DualityWitness { pair, dual_sigma, slice, dual_slice, degrees, homology, dual_cohomology })
}

/// Group-level comparison for one pair, without building the chain map.
pub fn duality_groups_agree(k: &SimplicialComplex, pair: IndexPair, s: VertexSet) -> Result<bool> {
    if pair.omega.is_empty() {
        return Err(Error::EmptyOmega);
    }
    let l = k.with_ground(s)?.slice(pair)?;
    let m = k.dual(s)?.slice(IndexPair { sigma: pair.complement_sigma(s), omega: pair.omega })?;
    let h = reduced_homology(&l, Coefficients::Integers);
    let c = reduced_cohomology(&m, Coefficients::Integers);
    let n = pair.omega.len() as i32;
    Ok(h.iter().all(|(j, g)| c.get(n - j - 3) == *g) && c.iter().all(|(d, g)| h.get(n - d - 3) == *g))
}
