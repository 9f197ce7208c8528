use super::{join, SimplicialComplex, VertexSet};
use crate::error::{Error, Result};

/// A simplicial pair `(X, A)` with `A ⊆ X` on a common ground. `A` may be void.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialPair {
    x: SimplicialComplex,
    a: SimplicialComplex,
}

impl SimplicialPair {
    pub fn new(x: SimplicialComplex, a: SimplicialComplex) -> Result<Self> {
        if x.ground() != a.ground() {
            return Err(Error::GroundMismatch);
        }
        if let Some(f) = a.faces().iter().find(|f| !x.contains(**f)) {
            return Err(Error::NotASubcomplex { face: f.to_string() });
        }
        Ok(SimplicialPair { x, a })
    }

    /// `(Δ^{ground}, L)`.
    pub fn cone(l: SimplicialComplex) -> Self {
        SimplicialPair { x: SimplicialComplex::simplex(l.ground()), a: l }
    }

    pub fn x(&self) -> &SimplicialComplex {
        &self.x
    }

    pub fn a(&self) -> &SimplicialComplex {
        &self.a
    }

    pub fn ground(&self) -> VertexSet {
        self.x.ground()
    }
}

/// Pairs `(X_k, A_k)` on pairwise disjoint blocks. Block `k` is paired with
/// the `k`-th smallest vertex of the outer complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialPairSeq {
    pairs: Vec<SimplicialPair>,
    ground: VertexSet,
}

impl SimplicialPairSeq {
    pub fn new(pairs: Vec<SimplicialPair>) -> Result<Self> {
        let mut ground = VertexSet::EMPTY;
        for p in &pairs {
            if let Some(v) = ground.intersection(p.ground()).min() {
                return Err(Error::OverlappingGrounds { vertex: v });
            }
            ground = ground.union(p.ground());
        }
        Ok(SimplicialPairSeq { pairs, ground })
    }

    /// Pairs given on local grounds are moved onto consecutive blocks
    /// `{s_{k-1}+1, …, s_k}` in order.
    pub fn from_local(pairs: Vec<SimplicialPair>) -> Result<Self> {
        let mut offset = 0u32;
        let mut moved = Vec::with_capacity(pairs.len());
        for p in pairs {
            let n = p.ground().len() as u32;
            moved.push(SimplicialPair {
                x: p.x.shift_to_block(offset)?,
                a: p.a.shift_to_block(offset)?,
            });
            offset += n;
        }
        Self::new(moved)
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[SimplicialPair] {
        &self.pairs
    }

    /// Union of the block grounds.
    pub fn ground(&self) -> VertexSet {
        self.ground
    }

    /// Block sizes `n_1, …, n_m`.
    pub fn block_sizes(&self) -> Vec<usize> {
        self.pairs.iter().map(|p| p.ground().len()).collect()
    }

    /// Blockwise slices `((X_k)_{σ_k,ω_k}, (A_k)_{σ_k,ω_k})`.
    pub fn slice(&self, pair: super::IndexPair) -> Result<Self> {
        if let Some(v) = pair.sigma.union(pair.omega).difference(self.ground).min() {
            return Err(Error::NotInGround { vertex: v });
        }
        let pairs = self
            .pairs
            .iter()
            .map(|p| {
                let g = p.ground();
                let local = super::IndexPair {
                    sigma: pair.sigma.intersection(g),
                    omega: pair.omega.intersection(g),
                };
                SimplicialPair { x: p.x.slice_unchecked(local), a: p.a.slice_unchecked(local) }
            })
            .collect();
        Self::new(pairs)
    }
}

/// `𝒮(K; X̲, A̲) = ∪_{τ∈K} S(τ)` where `S(τ)` joins `X_k` for `k ∈ τ` and
/// `A_k` otherwise. The result lives on the union of the block grounds.
///
/// A subset `σ` with block traces `σ_k` lies in the union exactly when every
/// `σ_k ∈ X_k` and `{k | σ_k ∉ A_k} ∈ K`.
pub fn polyhedral_complex(
    k: &SimplicialComplex,
    pairs: &SimplicialPairSeq,
) -> Result<SimplicialComplex> {
    let outer: Vec<u32> = k.ground().to_vec();
    if outer.len() != pairs.len() {
        return Err(Error::BlockMismatch(format!(
            "outer complex has {} vertices but {} pairs were given",
            outer.len(),
            pairs.len()
        )));
    }
    let ground = pairs.ground();
    if k.is_void() {
        return Ok(SimplicialComplex::void(ground));
    }
    // (trace, index of the outer vertex if the trace leaves A_k)
    let mut partial: Vec<(VertexSet, VertexSet)> = vec![(VertexSet::EMPTY, VertexSet::EMPTY)];
    for (p, &v) in pairs.pairs().iter().zip(&outer) {
        let mut next = Vec::new();
        for &(face, tau) in &partial {
            for &f in p.x.faces() {
                let tau = if p.a.contains(f) { tau } else { tau.with(v) };
                if k.contains(tau) {
                    next.push((face.union(f), tau));
                }
            }
        }
        partial = next;
    }
    Ok(SimplicialComplex::from_faces(ground, partial.into_iter().map(|(f, _)| f).collect()))
}

/// `𝒮(K; L_1, …, L_m)`: the polyhedral product complex of the pairs `(Δ^{block k}, L_k)`.
pub fn composition_complex(
    k: &SimplicialComplex,
    ls: &[SimplicialComplex],
) -> Result<SimplicialComplex> {
    let pairs = SimplicialPairSeq::new(ls.iter().cloned().map(SimplicialPair::cone).collect())?;
    polyhedral_complex(k, &pairs)
}

/// Splitting off the blocks whose `A_k` is void.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GhostFactorization {
    /// Outer vertices `S = {k | A_k void}`.
    pub ghost: VertexSet,
    /// `𝒮(link_K S; X̲′, A̲′)` over the remaining blocks.
    pub core: SimplicialComplex,
    /// `X_k` for `k ∈ S`, in block order.
    pub cone_factors: Vec<SimplicialComplex>,
}

impl GhostFactorization {
    /// Join of the core with every cone factor.
    pub fn assemble(&self) -> Result<SimplicialComplex> {
        let mut all = vec![self.core.clone()];
        all.extend(self.cone_factors.iter().cloned());
        join(&all)
    }
}

pub fn ghost_factorization(
    k: &SimplicialComplex,
    pairs: &SimplicialPairSeq,
) -> Result<GhostFactorization> {
    let outer: Vec<u32> = k.ground().to_vec();
    if outer.len() != pairs.len() {
        return Err(Error::BlockMismatch(format!(
            "outer complex has {} vertices but {} pairs were given",
            outer.len(),
            pairs.len()
        )));
    }
    let mut ghost = VertexSet::EMPTY;
    let mut rest = Vec::new();
    let mut cone_factors = Vec::new();
    for (p, &v) in pairs.pairs().iter().zip(&outer) {
        if p.a().is_void() {
            ghost = ghost.with(v);
            cone_factors.push(p.x().clone());
        } else {
            rest.push(p.clone());
        }
    }
    let link = k.link(ghost)?;
    let core = polyhedral_complex(&link, &SimplicialPairSeq::new(rest)?)?;
    Ok(GhostFactorization { ghost, core, cone_factors })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[u32]) -> VertexSet {
        VertexSet::from_labels(v.iter().copied()).unwrap()
    }

    fn cx(ground: &[u32], facets: &[&[u32]]) -> SimplicialComplex {
        SimplicialComplex::from_lists(ground, facets).unwrap()
    }

    /// Literal union of joins over the faces of K.
    fn union_of_joins(k: &SimplicialComplex, pairs: &SimplicialPairSeq) -> SimplicialComplex {
        let outer = k.ground().to_vec();
        let mut acc = SimplicialComplex::void(pairs.ground());
        for &tau in k.faces() {
            let factors: Vec<_> = pairs
                .pairs()
                .iter()
                .zip(&outer)
                .map(|(p, v)| if tau.contains(*v) { p.x().clone() } else { p.a().clone() })
                .collect();
            acc = acc.union(&join(&factors).unwrap()).unwrap();
        }
        acc
    }

    fn boundary_pairs() -> SimplicialPairSeq {
        SimplicialPairSeq::new(vec![
            SimplicialPair::cone(SimplicialComplex::simplex_boundary(s(&[1, 2]))),
            SimplicialPair::cone(SimplicialComplex::simplex_boundary(s(&[3, 4]))),
        ])
        .unwrap()
    }

    #[test]
    fn full_simplex_gives_join_of_xs() {
        let pairs = boundary_pairs();
        let k = SimplicialComplex::simplex(s(&[1, 2]));
        let xs: Vec<_> = pairs.pairs().iter().map(|p| p.x().clone()).collect();
        assert_eq!(polyhedral_complex(&k, &pairs).unwrap(), join(&xs).unwrap());
    }

    #[test]
    fn empty_face_gives_join_of_as() {
        let pairs = boundary_pairs();
        let k = SimplicialComplex::empty_face(s(&[1, 2]));
        let r#as: Vec<_> = pairs.pairs().iter().map(|p| p.a().clone()).collect();
        assert_eq!(polyhedral_complex(&k, &pairs).unwrap(), join(&r#as).unwrap());
    }

    #[test]
    fn boundary_composition_is_boundary_of_four_simplex() {
        let pairs = boundary_pairs();
        let k = SimplicialComplex::simplex_boundary(s(&[1, 2]));
        let expect = SimplicialComplex::simplex_boundary(s(&[1, 2, 3, 4]));
        assert_eq!(union_of_joins(&k, &pairs), expect);
        assert_eq!(polyhedral_complex(&k, &pairs).unwrap(), expect);
        let ls = vec![
            SimplicialComplex::simplex_boundary(s(&[1, 2])),
            SimplicialComplex::simplex_boundary(s(&[3, 4])),
        ];
        assert_eq!(composition_complex(&k, &ls).unwrap(), expect);
    }

    #[test]
    fn single_block_compositions() {
        let l = cx(&[1, 2, 3], &[&[1, 2], &[3]]);
        let e = SimplicialComplex::empty_face(s(&[1]));
        assert_eq!(composition_complex(&e, std::slice::from_ref(&l)).unwrap(), l);
        let d = SimplicialComplex::simplex(s(&[1]));
        assert_eq!(
            composition_complex(&d, std::slice::from_ref(&l)).unwrap(),
            SimplicialComplex::simplex(s(&[1, 2, 3]))
        );
        let v = SimplicialComplex::void(s(&[1]));
        assert!(composition_complex(&v, &[l]).unwrap().is_void());
    }

    #[test]
    fn block_mismatch_is_rejected() {
        let k = SimplicialComplex::simplex(s(&[1, 2, 3]));
        assert!(matches!(
            polyhedral_complex(&k, &boundary_pairs()),
            Err(Error::BlockMismatch(_))
        ));
    }

    #[test]
    fn pair_requires_subcomplex() {
        let x = cx(&[1, 2], &[&[1]]);
        let a = cx(&[1, 2], &[&[2]]);
        assert!(matches!(SimplicialPair::new(x, a), Err(Error::NotASubcomplex { .. })));
    }

    #[test]
    fn ghost_factorization_without_void_is_trivial() {
        let pairs = boundary_pairs();
        let k = SimplicialComplex::simplex_boundary(s(&[1, 2]));
        let g = ghost_factorization(&k, &pairs).unwrap();
        assert!(g.cone_factors.is_empty());
        assert_eq!(g.core, polyhedral_complex(&k, &pairs).unwrap());
    }

    #[test]
    fn ghost_factorization_outside_k_is_void() {
        let pairs = SimplicialPairSeq::new(vec![
            SimplicialPair::cone(SimplicialComplex::void(s(&[1]))),
            SimplicialPair::cone(SimplicialComplex::void(s(&[2]))),
        ])
        .unwrap();
        let k = SimplicialComplex::simplex_boundary(s(&[1, 2]));
        let g = ghost_factorization(&k, &pairs).unwrap();
        assert!(g.core.is_void());
        assert!(polyhedral_complex(&k, &pairs).unwrap().is_void());
        assert_eq!(g.assemble().unwrap(), polyhedral_complex(&k, &pairs).unwrap());
    }

    #[test]
    fn ghost_factorization_on_full_simplex() {
        let x1 = cx(&[1, 2], &[&[1], &[2]]);
        let x2 = cx(&[3, 4], &[&[3, 4]]);
        let a2 = cx(&[3, 4], &[&[3], &[4]]);
        let pairs = SimplicialPairSeq::new(vec![
            SimplicialPair::new(x1.clone(), SimplicialComplex::void(s(&[1, 2]))).unwrap(),
            SimplicialPair::new(x2.clone(), a2.clone()).unwrap(),
        ])
        .unwrap();
        let k = SimplicialComplex::simplex(s(&[1, 2]));
        let g = ghost_factorization(&k, &pairs).unwrap();
        assert_eq!(g.ghost, s(&[1]));
        assert_eq!(g.cone_factors, vec![x1]);
        let inner = SimplicialPairSeq::new(vec![SimplicialPair::new(x2, a2).unwrap()]).unwrap();
        let link = k.link(s(&[1])).unwrap();
        assert_eq!(g.core, polyhedral_complex(&link, &inner).unwrap());
        assert_eq!(g.assemble().unwrap(), union_of_joins(&k, &pairs));
    }

    #[test]
    fn from_local_moves_blocks() {
        let l = SimplicialComplex::simplex_boundary(s(&[1, 2]));
        let seq = SimplicialPairSeq::from_local(vec![
            SimplicialPair::cone(l.clone()),
            SimplicialPair::cone(l),
        ])
        .unwrap();
        assert_eq!(seq.ground(), s(&[1, 2, 3, 4]));
        assert_eq!(seq.block_sizes(), vec![2, 2]);
    }
}
