//! Finite point-set models of polyhedral product spaces.
//!
//! A space is a finite set of points and a product is a set of tuples, so the
//! set identities between polyhedral products can be checked exactly.

use std::collections::BTreeSet;

use crate::complex::{polyhedral_complex, SimplicialComplex, SimplicialPairSeq, VertexSet};
use crate::error::{Error, Result};

pub type TupleSet<P> = BTreeSet<Vec<P>>;

/// `(X, A)` with `A ⊆ X`; either may be empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSpacePair<P> {
    x: BTreeSet<P>,
    a: BTreeSet<P>,
}

impl<P: Ord + Clone> FiniteSpacePair<P> {
    pub fn new(x: impl IntoIterator<Item = P>, a: impl IntoIterator<Item = P>) -> Result<Self> {
        let x: BTreeSet<P> = x.into_iter().collect();
        let a: BTreeSet<P> = a.into_iter().collect();
        if !a.is_subset(&x) {
            return Err(Error::NotASubset);
        }
        Ok(FiniteSpacePair { x, a })
    }

    pub fn x(&self) -> &BTreeSet<P> {
        &self.x
    }

    pub fn a(&self) -> &BTreeSet<P> {
        &self.a
    }

    /// `(X, X ∖ A)`.
    pub fn complement(&self) -> Self {
        FiniteSpacePair { x: self.x.clone(), a: self.x.difference(&self.a).cloned().collect() }
    }
}

fn check_count(k: &SimplicialComplex, count: usize) -> Result<()> {
    let m = k.ground().len();
    if m != count {
        return Err(Error::ParamCount { expected: m, got: count });
    }
    Ok(())
}

/// `𝒵(K; X̲, A̲) = ∪_{τ∈K} D(τ)` with `D(τ) = Π (X_k if k ∈ τ else A_k)`.
/// Pair `k` belongs to the `k`-th smallest vertex of `K`'s ground.
pub fn finite_product<P: Ord + Clone>(
    k: &SimplicialComplex,
    pairs: &[FiniteSpacePair<P>],
) -> Result<TupleSet<P>> {
    check_count(k, pairs.len())?;
    let outer = k.ground().to_vec();
    let mut out = TupleSet::new();
    if k.is_void() {
        return Ok(out);
    }
    // A tuple lies in the union iff the coordinates outside A_k form a face.
    let mut partial: Vec<(Vec<P>, VertexSet)> = vec![(Vec::new(), VertexSet::EMPTY)];
    for (p, &v) in pairs.iter().zip(&outer) {
        let mut next = Vec::new();
        for (tuple, tau) in &partial {
            for point in &p.x {
                let tau = if p.a.contains(point) { *tau } else { tau.with(v) };
                if k.contains(tau) {
                    let mut t = tuple.clone();
                    t.push(point.clone());
                    next.push((t, tau));
                }
            }
        }
        partial = next;
    }
    out.extend(partial.into_iter().map(|(t, _)| t));
    Ok(out)
}

/// Result of comparing two tuple sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityVerdict<P> {
    pub lhs: TupleSet<P>,
    pub rhs: TupleSet<P>,
}

impl<P: Ord + Clone> IdentityVerdict<P> {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }

    /// Smallest tuple in exactly one of the two sides.
    pub fn counterexample(&self) -> Option<Vec<P>> {
        self.lhs.symmetric_difference(&self.rhs).next().cloned()
    }
}

fn full_product<P: Ord + Clone>(pairs: &[FiniteSpacePair<P>]) -> TupleSet<P> {
    let mut acc: Vec<Vec<P>> = vec![Vec::new()];
    for p in pairs {
        acc = acc
            .iter()
            .flat_map(|t| {
                p.x.iter().map(move |x| {
                    let mut t = t.clone();
                    t.push(x.clone());
                    t
                })
            })
            .collect();
    }
    acc.into_iter().collect()
}

/// `(X_1 × ⋯ × X_m) ∖ 𝒵(K; X̲, A̲)` against `𝒵(K°; X̲, A̲^c)`, the dual taken
/// relative to `K`'s ground.
pub fn complement_identity_check<P: Ord + Clone>(
    k: &SimplicialComplex,
    pairs: &[FiniteSpacePair<P>],
) -> Result<IdentityVerdict<P>> {
    let z = finite_product(k, pairs)?;
    let lhs = full_product(pairs).difference(&z).cloned().collect();
    let comp: Vec<FiniteSpacePair<P>> = pairs.iter().map(FiniteSpacePair::complement).collect();
    let rhs = finite_product(&k.dual(k.ground())?, &comp)?;
    Ok(IdentityVerdict { lhs, rhs })
}

/// `𝒵(K; Y̲, B̲)` against `𝒵(𝒮(K; X̲, A̲); U̲, C̲)`, where
/// `Y_k = 𝒵(X_k; U̲_k, C̲_k)` and `B_k = 𝒵(A_k; U̲_k, C̲_k)`.
///
/// `leaves[i]` belongs to the `i`-th smallest vertex of the inner ground.
/// Nested tuples are flattened in vertex order before comparing.
pub fn substitution_identity_check<P: Ord + Clone>(
    k: &SimplicialComplex,
    inner: &SimplicialPairSeq,
    leaves: &[FiniteSpacePair<P>],
) -> Result<IdentityVerdict<P>> {
    let ground = inner.ground();
    if leaves.len() != ground.len() {
        return Err(Error::ParamCount { expected: ground.len(), got: leaves.len() });
    }
    let leaf_of = |v: u32| &leaves[ground.rank_of(v)];
    let mut outer_pairs = Vec::with_capacity(inner.len());
    let mut block_vertices = Vec::with_capacity(inner.len());
    for p in inner.pairs() {
        let verts = p.ground().to_vec();
        let local: Vec<FiniteSpacePair<P>> = verts.iter().map(|&v| leaf_of(v).clone()).collect();
        let y = finite_product(p.x(), &local)?;
        let b = finite_product(p.a(), &local)?;
        outer_pairs.push(FiniteSpacePair { x: y, a: b });
        block_vertices.extend(verts);
    }
    let nested = finite_product(k, &outer_pairs)?;
    // Position in the flattened nested tuple -> position in vertex order.
    let target: Vec<usize> = block_vertices.iter().map(|&v| ground.rank_of(v)).collect();
    let lhs = nested
        .into_iter()
        .map(|blocks| {
            let flat: Vec<P> = blocks.into_iter().flatten().collect();
            let mut out = flat.clone();
            for (i, p) in flat.into_iter().enumerate() {
                out[target[i]] = p;
            }
            out
        })
        .collect();
    let rhs = finite_product(&polyhedral_complex(k, inner)?, leaves)?;
    Ok(IdentityVerdict { lhs, rhs })
}

/// With `S = {k | A_k = ∅}`: `𝒵(K; X̲, A̲)` against
/// `𝒵(link_K S; X̲′, A̲′) × Π_{k∈S} X_k`, coordinates put back in order.
pub fn ghost_factorization_check<P: Ord + Clone>(
    k: &SimplicialComplex,
    pairs: &[FiniteSpacePair<P>],
) -> Result<IdentityVerdict<P>> {
    let lhs = finite_product(k, pairs)?;
    let outer = k.ground().to_vec();
    let mut s = VertexSet::EMPTY;
    let mut rest = Vec::new();
    let mut ghost_pairs = Vec::new();
    for (p, &v) in pairs.iter().zip(&outer) {
        if p.a.is_empty() {
            s = s.with(v);
            ghost_pairs.push(p.clone());
        } else {
            rest.push(p.clone());
        }
    }
    let core = finite_product(&k.link(s)?, &rest)?;
    let full: Vec<FiniteSpacePair<P>> = ghost_pairs
        .iter()
        .map(|p| FiniteSpacePair { x: p.x.clone(), a: p.x.clone() })
        .collect();
    let cones = full_product(&full);
    let mut rhs = TupleSet::new();
    for c in &core {
        for g in &cones {
            let (mut ci, mut gi) = (c.iter(), g.iter());
            let t: Vec<P> = outer
                .iter()
                .map(|&v| if s.contains(v) { gi.next() } else { ci.next() }.expect("arity").clone())
                .collect();
            rhs.insert(t);
        }
    }
    Ok(IdentityVerdict { lhs, rhs })
}
