//! Simplicial complexes on labelled ground sets and their purely
//! combinatorial constructions: links, slices, duals, joins and polyhedral
//! product complexes.
//!
//! The void complex `{}` (no faces at all) and the complex `{∅}` (only the
//! empty face) are different values. Vertices of the ground set that are not
//! faces (ghost vertices) are allowed.

mod pairs;
pub mod random;
mod vertex_set;

use std::fmt;

use crate::error::{Error, Result};

pub use pairs::{
    composition_complex, ghost_factorization, polyhedral_complex, GhostFactorization,
    SimplicialPair, SimplicialPairSeq,
};
pub use vertex_set::{Labels, Subsets, VertexSet, MAX_LABEL};

/// Whether a complex has any face at all.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum State {
    Void,
    Nonvoid,
}

/// A downward closed family of subsets of a finite ground set.
///
/// Faces are kept sorted by their bit encoding; a nonvoid complex always
/// contains the empty face.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    ground: VertexSet,
    faces: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// The void complex `{}` on `ground`.
    pub fn void(ground: VertexSet) -> Self {
        SimplicialComplex { ground, faces: Vec::new() }
    }

    /// The complex `{∅}` on `ground`; every vertex is a ghost.
    pub fn empty_face(ground: VertexSet) -> Self {
        SimplicialComplex { ground, faces: vec![VertexSet::EMPTY] }
    }

    /// The full simplex `Δ^S` with `S = ground`.
    pub fn simplex(ground: VertexSet) -> Self {
        let mut faces: Vec<_> = ground.subsets().collect();
        faces.sort_unstable();
        SimplicialComplex { ground, faces }
    }

    /// `∂Δ^S = Δ^S ∖ {S}`. For `S = ∅` this is the void complex.
    pub fn simplex_boundary(ground: VertexSet) -> Self {
        let mut faces: Vec<_> = ground.subsets().filter(|&f| f != ground).collect();
        faces.sort_unstable();
        SimplicialComplex { ground, faces }
    }

    /// Downward closure of `facets`. An empty facet list gives the void
    /// complex and `[∅]` gives `{∅}`.
    pub fn from_facets(ground: VertexSet, facets: &[VertexSet]) -> Result<Self> {
        for f in facets {
            if let Some(v) = f.difference(ground).min() {
                return Err(Error::NotInGround { vertex: v });
            }
        }
        let mut faces: Vec<VertexSet> = facets.iter().flat_map(|f| f.subsets()).collect();
        faces.sort_unstable();
        faces.dedup();
        Ok(SimplicialComplex { ground, faces })
    }

    /// Convenience constructor from label lists.
    pub fn from_lists(ground: &[u32], facets: &[&[u32]]) -> Result<Self> {
        let g = VertexSet::from_labels(ground.iter().copied())?;
        let fs = facets
            .iter()
            .map(|f| VertexSet::from_labels(f.iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        Self::from_facets(g, &fs)
    }

    /// Builds the complex whose faces are the subsets of `ground` accepted by
    /// `is_face`. The caller guarantees the predicate is downward closed.
    pub fn from_predicate(ground: VertexSet, mut is_face: impl FnMut(VertexSet) -> bool) -> Self {
        let mut faces: Vec<_> = ground.subsets().filter(|&s| is_face(s)).collect();
        faces.sort_unstable();
        debug_assert!(is_down_closed(&faces));
        SimplicialComplex { ground, faces }
    }

    /// Builds a complex from an already downward closed face list.
    pub(crate) fn from_faces(ground: VertexSet, mut faces: Vec<VertexSet>) -> Self {
        faces.sort_unstable();
        faces.dedup();
        debug_assert!(faces.iter().all(|f| f.is_subset(ground)));
        debug_assert!(is_down_closed(&faces));
        SimplicialComplex { ground, faces }
    }

    pub fn ground(&self) -> VertexSet {
        self.ground
    }

    pub fn state(&self) -> State {
        if self.faces.is_empty() {
            State::Void
        } else {
            State::Nonvoid
        }
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    /// Faces sorted by bit encoding.
    pub fn faces(&self) -> &[VertexSet] {
        &self.faces
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn contains(&self, face: VertexSet) -> bool {
        self.faces.binary_search(&face).is_ok()
    }

    /// Union of all faces.
    pub fn support(&self) -> VertexSet {
        self.faces.iter().fold(VertexSet::EMPTY, |acc, &f| acc.union(f))
    }

    /// Largest face dimension; `None` for the void complex, `Some(-1)` for `{∅}`.
    pub fn dim(&self) -> Option<i32> {
        self.faces.iter().map(|f| f.len() as i32 - 1).max()
    }

    /// Faces with exactly `size` vertices, in lexicographic order.
    pub fn faces_of_size(&self, size: usize) -> Vec<VertexSet> {
        let mut out: Vec<_> = self.faces.iter().copied().filter(|f| f.len() == size).collect();
        out.sort_by(|a, b| a.lex_cmp(*b));
        out
    }

    /// Maximal faces in lexicographic order.
    pub fn facets(&self) -> Vec<VertexSet> {
        let mut out: Vec<VertexSet> = self
            .faces
            .iter()
            .copied()
            .filter(|&f| {
                self.ground.difference(f).iter().all(|v| !self.contains(f.with(v)))
            })
            .collect();
        out.sort_by(|a, b| a.lex_cmp(*b));
        out
    }

    /// Face counts by size: entry `i` counts faces with `i` vertices.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0usize; self.ground.len() + 1];
        for face in &self.faces {
            f[face.len()] += 1;
        }
        while f.len() > 1 && *f.last().unwrap() == 0 {
            f.pop();
        }
        if self.is_void() {
            f.clear();
        }
        f
    }

    /// `link_K σ = {τ | σ ∪ τ ∈ K, σ ∩ τ = ∅}` on the ground `K.ground ∖ σ`.
    pub fn link(&self, sigma: VertexSet) -> Result<Self> {
        self.require_in_ground(sigma)?;
        let ground = self.ground.difference(sigma);
        if !self.contains(sigma) {
            return Ok(Self::void(ground));
        }
        let faces = self
            .faces
            .iter()
            .filter(|f| sigma.is_subset(**f))
            .map(|f| f.difference(sigma))
            .collect();
        Ok(Self::from_faces(ground, faces))
    }

    /// Faces contained in `omega`, on the ground `omega`.
    pub fn restrict(&self, omega: VertexSet) -> Result<Self> {
        self.require_in_ground(omega)?;
        let faces = self.faces.iter().copied().filter(|f| f.is_subset(omega)).collect();
        Ok(Self::from_faces(omega, faces))
    }

    /// `K_{σ,ω} = {τ ⊆ ω | σ ∪ τ ∈ K}` on the ground `ω`.
    pub fn slice(&self, pair: IndexPair) -> Result<Self> {
        self.require_in_ground(pair.sigma.union(pair.omega))?;
        Ok(self.slice_unchecked(pair))
    }

    pub(crate) fn slice_unchecked(&self, pair: IndexPair) -> Self {
        let IndexPair { sigma, omega } = pair;
        if !self.contains(sigma) {
            return Self::void(omega);
        }
        let faces = self
            .faces
            .iter()
            .filter(|f| sigma.is_subset(**f) && f.difference(sigma).is_subset(omega))
            .map(|f| f.difference(sigma))
            .collect();
        Self::from_faces(omega, faces)
    }

    /// The dual relative to `s`: `K° = {S ∖ σ | σ ⊆ S, σ ∉ K}`.
    pub fn dual(&self, s: VertexSet) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::EmptyRelativeSet);
        }
        if let Some(v) = self.ground.difference(s).min() {
            return Err(Error::OutsideRelativeSet { vertex: v });
        }
        Ok(Self::from_predicate(s, |tau| !self.contains(s.difference(tau))))
    }

    /// The same faces on a different ground; the support must fit.
    pub fn with_ground(&self, ground: VertexSet) -> Result<Self> {
        if let Some(v) = self.support().difference(ground).min() {
            return Err(Error::NotInGround { vertex: v });
        }
        Ok(SimplicialComplex { ground, faces: self.faces.clone() })
    }

    /// Union of two complexes on the same ground.
    pub fn union(&self, other: &Self) -> Result<Self> {
        self.same_ground(other)?;
        let mut faces = self.faces.clone();
        faces.extend_from_slice(&other.faces);
        Ok(Self::from_faces(self.ground, faces))
    }

    /// Intersection of two complexes on the same ground.
    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.same_ground(other)?;
        let faces = self.faces.iter().copied().filter(|f| other.contains(*f)).collect();
        Ok(Self::from_faces(self.ground, faces))
    }

    /// Whether every face of `self` is a face of `other`.
    pub fn is_subcomplex_of(&self, other: &Self) -> bool {
        self.faces.iter().all(|f| other.contains(*f))
    }

    /// Renames vertices with an order-preserving-or-not injective map.
    pub fn relabel(&self, map: impl Fn(u32) -> u32) -> Result<Self> {
        let mapset = |s: VertexSet| VertexSet::from_labels(s.iter().map(&map));
        let ground = mapset(self.ground)?;
        if ground.len() != self.ground.len() {
            return Err(Error::BlockMismatch("relabelling is not injective".into()));
        }
        let faces = self.faces.iter().map(|&f| mapset(f)).collect::<Result<Vec<_>>>()?;
        Ok(Self::from_faces(ground, faces))
    }

    /// Moves the ground set order-preservingly onto `offset+1 ..= offset+n`.
    pub fn shift_to_block(&self, offset: u32) -> Result<Self> {
        let g = self.ground;
        self.relabel(|v| offset + g.rank_of(v) as u32 + 1)
    }

    /// Whether `K = K°` relative to its ground.
    pub fn is_self_dual(&self) -> bool {
        !self.ground.is_empty() && self.dual(self.ground).map(|d| &d == self).unwrap_or(false)
    }

    fn require_in_ground(&self, s: VertexSet) -> Result<()> {
        match s.difference(self.ground).min() {
            Some(v) => Err(Error::NotInGround { vertex: v }),
            None => Ok(()),
        }
    }

    fn same_ground(&self, other: &Self) -> Result<()> {
        if self.ground == other.ground {
            Ok(())
        } else {
            Err(Error::GroundMismatch)
        }
    }
}

/// `Y_1 ∗ ⋯ ∗ Y_m` for complexes on pairwise disjoint grounds. The join of
/// an empty list is `{∅}` on the empty ground.
pub fn join(factors: &[SimplicialComplex]) -> Result<SimplicialComplex> {
    let mut ground = VertexSet::EMPTY;
    for k in factors {
        if let Some(v) = ground.intersection(k.ground).min() {
            return Err(Error::OverlappingGrounds { vertex: v });
        }
        ground = ground.union(k.ground);
    }
    let mut faces = vec![VertexSet::EMPTY];
    for k in factors {
        if k.is_void() {
            return Ok(SimplicialComplex::void(ground));
        }
        let mut next = Vec::with_capacity(faces.len() * k.faces.len());
        for a in &faces {
            for b in &k.faces {
                next.push(a.union(*b));
            }
        }
        faces = next;
    }
    Ok(SimplicialComplex::from_faces(ground, faces))
}

fn is_down_closed(faces: &[VertexSet]) -> bool {
    faces.iter().all(|f| {
        f.iter().all(|v| faces.binary_search(&f.without(v)).is_ok())
    })
}

/// A pair `(σ, ω)` of disjoint vertex sets.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct IndexPair {
    pub sigma: VertexSet,
    pub omega: VertexSet,
}

impl IndexPair {
    pub fn new(sigma: VertexSet, omega: VertexSet) -> Result<Self> {
        match sigma.intersection(omega).min() {
            Some(v) => Err(Error::NotDisjoint { vertex: v }),
            None => Ok(IndexPair { sigma, omega }),
        }
    }

    /// `σ̃ = S ∖ (σ ∪ ω)`.
    pub fn complement_sigma(&self, s: VertexSet) -> VertexSet {
        s.difference(self.sigma.union(self.omega))
    }

    /// Every disjoint pair inside `ground`, in ternary-counter order: the
    /// `i`-th smallest vertex carries digit `i` (0 = neither, 1 = σ, 2 = ω).
    pub fn all(ground: VertexSet) -> DisjointPairs {
        let n = ground.len() as u32;
        DisjointPairs { ground, index: 0, total: 3u64.pow(n) }
    }

    /// Decodes the `index`-th pair of [`IndexPair::all`].
    pub fn from_ternary(ground: VertexSet, mut index: u64) -> IndexPair {
        let mut sigma = VertexSet::EMPTY;
        let mut omega = VertexSet::EMPTY;
        for v in ground.iter() {
            match index % 3 {
                1 => sigma = sigma.with(v),
                2 => omega = omega.with(v),
                _ => {}
            }
            index /= 3;
        }
        IndexPair { sigma, omega }
    }
}

impl fmt::Display for IndexPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sigma={} omega={}", self.sigma, self.omega)
    }
}

pub struct DisjointPairs {
    ground: VertexSet,
    index: u64,
    total: u64,
}

impl Iterator for DisjointPairs {
    type Item = IndexPair;

    fn next(&mut self) -> Option<IndexPair> {
        if self.index >= self.total {
            return None;
        }
        let p = IndexPair::from_ternary(self.ground, self.index);
        self.index += 1;
        Some(p)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.index) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for DisjointPairs {}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplicialComplex(ground={}, facets=", self.ground)?;
        if self.is_void() {
            return write!(f, "void)");
        }
        write!(f, "[")?;
        for (i, s) in self.facets().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "])")
    }
}

/// The six-vertex real projective plane.
pub fn rp2_six() -> SimplicialComplex {
    SimplicialComplex::from_lists(
        &[1, 2, 3, 4, 5, 6],
        &[
            &[1, 2, 4],
            &[1, 2, 6],
            &[1, 3, 5],
            &[1, 3, 6],
            &[1, 4, 5],
            &[2, 3, 4],
            &[2, 3, 5],
            &[2, 5, 6],
            &[3, 4, 6],
            &[4, 5, 6],
        ],
    )
    .expect("static facets")
}

/// Every simplicial complex on `ground` (including `{}` and `{∅}`), in a
/// fixed order. Only feasible for grounds of at most 4 vertices.
pub fn all_complexes(ground: VertexSet) -> Vec<SimplicialComplex> {
    let n = ground.len();
    assert!(n <= 4, "exhaustive enumeration is limited to 4 vertices");
    let subsets = 1usize << n;
    let mut out = Vec::new();
    'family: for family in 0u64..(1u64 << subsets) {
        for s in 0..subsets {
            if family >> s & 1 == 1 {
                for bit in 0..n {
                    let t = s & !(1 << bit);
                    if family >> t & 1 == 0 {
                        continue 'family;
                    }
                }
            }
        }
        let faces = (0..subsets)
            .filter(|s| family >> s & 1 == 1)
            .map(|s| ground.deposit(s as u64))
            .collect();
        out.push(SimplicialComplex::from_faces(ground, faces));
    }
    out
}
