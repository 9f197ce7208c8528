//! Homology of polyhedral product complexes from the homology of the pieces.

use rayon::prelude::*;

use crate::complex::{
    composition_complex, polyhedral_complex, IndexPair, SimplicialComplex, SimplicialPairSeq,
    VertexSet,
};
use crate::error::{Error, Result};
use crate::homology::{
    graded_tensor, inclusion_ranks, reduced_homology, Coefficients, FgAbelianGroup, FieldCoeff,
    GradedGroup,
};

use super::table::{hochster_table, BigradedTable};

/// Formula side against the directly computed side, reduced degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaComparison {
    pub formula: GradedGroup,
    pub direct: GradedGroup,
}

impl FormulaComparison {
    pub fn agrees(&self) -> bool {
        self.formula == self.direct
    }
}

fn check_blocks(k: &SimplicialComplex, count: usize) -> Result<()> {
    let m = k.ground().len();
    if m != count {
        return Err(Error::BlockMismatch(format!(
            "outer complex has {m} vertices but {count} factors were given"
        )));
    }
    Ok(())
}

/// `H̃(𝒮(K; L_1, …, L_m)) ≅ H̃(K) ⊗ H̃(L_1) ⊗ ⋯ ⊗ H̃(L_m)` under the join
/// degree rule, next to the homology of the composition itself.
pub fn composition_homology(
    k: &SimplicialComplex,
    ls: &[SimplicialComplex],
    coeff: Coefficients,
) -> Result<FormulaComparison> {
    check_blocks(k, ls.len())?;
    let mut factors = vec![reduced_homology(k, coeff)];
    factors.extend(ls.iter().map(|l| reduced_homology(l, coeff)));
    let formula = graded_tensor(&factors, coeff.is_field())?;
    let direct = reduced_homology(&composition_complex(k, ls)?, coeff);
    Ok(FormulaComparison { formula, direct })
}

/// Index data attached to one `(σ, ω)` of the composition's ground.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HochsterPieceFormula {
    pub pair: IndexPair,
    /// `σ̂ = {k | σ_k ∉ L_k, ω_k = ∅}`, as outer vertex labels.
    pub sigma_hat: VertexSet,
    /// `ω̂ = {k | ω_k ≠ ∅}`.
    pub omega_hat: VertexSet,
    /// `(k, (σ_k, ω_k))` for every block with `ω_k ≠ ∅`; `k` is 0-based.
    pub factors: Vec<(usize, IndexPair)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PieceComparison {
    pub piece: HochsterPieceFormula,
    /// Internal degrees, as in the Hochster table.
    pub direct: GradedGroup,
    pub formula: GradedGroup,
}

impl PieceComparison {
    pub fn agrees(&self) -> bool {
        self.direct == self.formula
    }
}

pub fn piece_formula(
    outer: &[u32],
    ls: &[SimplicialComplex],
    pair: IndexPair,
) -> HochsterPieceFormula {
    let mut sigma_hat = VertexSet::EMPTY;
    let mut omega_hat = VertexSet::EMPTY;
    let mut factors = Vec::new();
    for (idx, (l, &v)) in ls.iter().zip(outer).enumerate() {
        let g = l.ground();
        let local = IndexPair { sigma: pair.sigma.intersection(g), omega: pair.omega.intersection(g) };
        if !local.omega.is_empty() {
            omega_hat = omega_hat.with(v);
            factors.push((idx, local));
        } else if !l.contains(local.sigma) {
            sigma_hat = sigma_hat.with(v);
        }
    }
    HochsterPieceFormula { pair, sigma_hat, omega_hat, factors }
}

/// Tensor of internal-degree groups: internal degrees add.
fn internal_tensor(factors: &[GradedGroup], over_field: bool) -> Result<GradedGroup> {
    let reduced: Vec<GradedGroup> = factors.iter().map(|g| g.shift(-1)).collect();
    Ok(graded_tensor(&reduced, over_field)?.shift(1))
}

/// Compares every entry of the composition's Hochster table with
/// `H^{σ̂,ω̂}(K) ⊗ ⨂_{ω_k ≠ ∅} H^{σ_k,ω_k}(L_k)`.
pub fn hochster_composition_formula(
    k: &SimplicialComplex,
    ls: &[SimplicialComplex],
    coeff: Coefficients,
) -> Result<Vec<PieceComparison>> {
    check_blocks(k, ls.len())?;
    if let Some(i) = ls.iter().position(SimplicialComplex::is_void) {
        return Err(Error::VoidFactor(i + 1));
    }
    let comp = composition_complex(k, ls)?;
    let outer = k.ground().to_vec();
    let k_table = hochster_table(k, coeff, None)?;
    let l_tables: Vec<BigradedTable> =
        ls.iter().map(|l| hochster_table(l, coeff, None)).collect::<Result<_>>()?;
    let direct = hochster_table(&comp, coeff, None)?;
    direct
        .entries()
        .par_iter()
        .map(|(pair, lhs)| {
            let piece = piece_formula(&outer, ls, *pair);
            let mut factors = vec![k_table
                .get(IndexPair { sigma: piece.sigma_hat, omega: piece.omega_hat })
                .expect("full table")
                .clone()];
            for &(idx, local) in &piece.factors {
                factors.push(l_tables[idx].get(local).expect("full table").clone());
            }
            let formula = internal_tensor(&factors, coeff.is_field())?;
            Ok(PieceComparison { piece, direct: lhs.clone(), formula })
        })
        .collect()
}

/// Over a field, `H̃(𝒮(K; X̲, A̲))` as the sum over `(σ̂, ω̂)` of
/// `H̃(K_{σ̂,ω̂}) ⊗ ⨂_k P_k`, where `P_k` is `coker ι_k` for `k ∈ σ̂`,
/// `ker ι_k` for `k ∈ ω̂` and `im ι_k` otherwise (`ι_k : H̃(A_k) → H̃(X_k)`).
pub fn polyhedral_homology_formula(
    k: &SimplicialComplex,
    pairs: &SimplicialPairSeq,
    field: FieldCoeff,
) -> Result<FormulaComparison> {
    check_blocks(k, pairs.len())?;
    let coeff = Coefficients::Field(field);
    let mut pieces: Vec<[GradedGroup; 3]> = Vec::new(); // [coker, ker, im]
    for p in pairs.pairs() {
        let mut g: [GradedGroup; 3] = Default::default();
        for r in inclusion_ranks(p.a(), p.x(), field)? {
            g[0].set(r.degree, FgAbelianGroup::free(r.cokernel));
            g[1].set(r.degree, FgAbelianGroup::free(r.kernel));
            g[2].set(r.degree, FgAbelianGroup::free(r.image));
        }
        pieces.push(g);
    }
    let outer = k.ground().to_vec();
    let table = hochster_table(k, coeff, None)?;
    let mut formula = GradedGroup::zero();
    for (pair, entry) in table.nonzero() {
        let mut factors = vec![entry.shift(-1)];
        for (idx, &v) in outer.iter().enumerate() {
            let which = if pair.sigma.contains(v) {
                0
            } else if pair.omega.contains(v) {
                1
            } else {
                2
            };
            factors.push(pieces[idx][which].clone());
        }
        formula = formula.direct_sum(&graded_tensor(&factors, true)?);
    }
    let direct = reduced_homology(&polyhedral_complex(k, pairs)?, coeff);
    Ok(FormulaComparison { formula, direct })
}
