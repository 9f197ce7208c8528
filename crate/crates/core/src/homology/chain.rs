use std::collections::HashMap;

use crate::complex::{SimplicialComplex, VertexSet};

use super::matrix::Matrix;

/// Augmented chain complex with one basis element per cell `η`, placed in
/// degree `|η| - 1` (so `∅` sits in degree `-1`).
///
/// The cells need not form a complex: the boundary of a cell keeps only the
/// codimension-one faces that are themselves cells. For a complex this is the
/// usual boundary; for the nonfaces of `L` inside `Δ^ω` it is the boundary of
/// the quotient `C(Δ^ω) / C(L)`.
#[derive(Debug, Clone)]
pub struct AugmentedChainComplex {
    /// `bases[d + 1]` lists the degree-`d` cells in lexicographic order.
    bases: Vec<Vec<VertexSet>>,
    index: HashMap<VertexSet, usize>,
}

impl AugmentedChainComplex {
    pub fn from_cells(cells: impl IntoIterator<Item = VertexSet>) -> Self {
        let mut bases: Vec<Vec<VertexSet>> = Vec::new();
        for c in cells {
            let slot = c.len();
            if bases.len() <= slot {
                bases.resize(slot + 1, Vec::new());
            }
            bases[slot].push(c);
        }
        let mut index = HashMap::new();
        for b in &mut bases {
            b.sort_by(|x, y| x.lex_cmp(*y));
            b.dedup();
            for (i, c) in b.iter().enumerate() {
                index.insert(*c, i);
            }
        }
        AugmentedChainComplex { bases, index }
    }

    pub fn of_complex(k: &SimplicialComplex) -> Self {
        Self::from_cells(k.faces().iter().copied())
    }

    /// Cells `η ⊆ ω` with `η ∉ L`: the basis of `C(Δ^ω, L)`.
    pub fn relative(omega: VertexSet, l: &SimplicialComplex) -> Self {
        Self::from_cells(omega.subsets().filter(|&eta| !l.contains(eta)))
    }

    /// Highest degree with a nonempty basis, or `None` for the zero complex.
    pub fn top_degree(&self) -> Option<i32> {
        self.bases.iter().rposition(|b| !b.is_empty()).map(|i| i as i32 - 1)
    }

    pub fn basis(&self, degree: i32) -> &[VertexSet] {
        usize::try_from(degree + 1)
            .ok()
            .and_then(|i| self.bases.get(i))
            .map_or(&[], Vec::as_slice)
    }

    pub fn dim(&self, degree: i32) -> usize {
        self.basis(degree).len()
    }

    pub fn is_zero(&self) -> bool {
        self.top_degree().is_none()
    }

    /// Matrix of `∂_d : C_d → C_{d-1}`, columns indexed by `basis(d)`.
    /// Deleting the `i`-th smallest vertex carries the sign `(-1)^i`.
    pub fn boundary(&self, degree: i32) -> Matrix<i64> {
        let src = self.basis(degree);
        let dst = self.basis(degree - 1);
        let mut m = Matrix::zeros(dst.len(), src.len());
        for (j, cell) in src.iter().enumerate() {
            for (i, v) in cell.iter().enumerate() {
                let face = cell.without(v);
                if let Some(&row) = self.index.get(&face) {
                    m.set(row, j, if i % 2 == 0 { 1 } else { -1 });
                }
            }
        }
        m
    }

    /// `δ^d : C^d → C^{d+1}`, the transpose of `∂_{d+1}`.
    pub fn coboundary(&self, degree: i32) -> Matrix<i64> {
        self.boundary(degree + 1).transpose()
    }

    /// Every `∂_{d} ∘ ∂_{d+1}` vanishes.
    pub fn check_square_zero(&self) -> bool {
        let Some(top) = self.top_degree() else { return true };
        (0..=top).all(|d| {
            let a = self.boundary(d);
            let b = self.boundary(d + 1);
            a.cols() == 0 || b.cols() == 0 || a.mul(&b).is_zero()
        })
    }

    /// Alternating sum of basis sizes, degree `-1` included.
    pub fn euler_characteristic(&self) -> i64 {
        let Some(top) = self.top_degree() else { return 0 };
        (-1..=top)
            .map(|d| if d.rem_euclid(2) == 0 { self.dim(d) as i64 } else { -(self.dim(d) as i64) })
            .sum()
    }
}
