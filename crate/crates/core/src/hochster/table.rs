use std::collections::HashMap;

use rayon::prelude::*;

use crate::complex::{IndexPair, SimplicialComplex, VertexSet};
use crate::error::{Error, Result};
use crate::homology::{reduced_homology, Coefficients, GradedGroup};

/// `(σ, ω) ↦ H^{σ,ω}_*(K) = H̃_{*-1}(K_{σ,ω})`, stored in the internal
/// degree `*` (one above the reduced degree).
#[derive(Debug, Clone)]
pub struct BigradedTable {
    ground: VertexSet,
    coeff: Coefficients,
    entries: Vec<(IndexPair, GradedGroup)>,
    index: HashMap<IndexPair, usize>,
}

impl BigradedTable {
    pub fn ground(&self) -> VertexSet {
        self.ground
    }

    pub fn coeff(&self) -> Coefficients {
        self.coeff
    }

    /// Entries in request order (ternary order for a full table).
    pub fn entries(&self) -> &[(IndexPair, GradedGroup)] {
        &self.entries
    }

    pub fn get(&self, pair: IndexPair) -> Option<&GradedGroup> {
        self.index.get(&pair).map(|&i| &self.entries[i].1)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = &(IndexPair, GradedGroup)> {
        self.entries.iter().filter(|(_, g)| !g.is_zero())
    }

    /// Direct sum of all entries, in internal degrees.
    pub fn total(&self) -> GradedGroup {
        self.entries.iter().fold(GradedGroup::zero(), |acc, (_, g)| acc.direct_sum(g))
    }
}

/// Single entry `H̃_{*-1}(K_{σ,ω})` in internal degrees.
pub fn hochster_entry(k: &SimplicialComplex, pair: IndexPair, coeff: Coefficients) -> Result<GradedGroup> {
    Ok(reduced_homology(&k.slice(pair)?, coeff).shift(1))
}

/// The table over `pairs`, or over every disjoint pair of the ground when
/// `pairs` is `None`. Entries are computed in parallel and kept in order.
pub fn hochster_table(
    k: &SimplicialComplex,
    coeff: Coefficients,
    pairs: Option<&[IndexPair]>,
) -> Result<BigradedTable> {
    let ground = k.ground();
    let keys: Vec<IndexPair> = match pairs {
        Some(p) => {
            for pair in p {
                if let Some(v) = pair.sigma.intersection(pair.omega).min() {
                    return Err(Error::NotDisjoint { vertex: v });
                }
                if let Some(v) = pair.sigma.union(pair.omega).difference(ground).min() {
                    return Err(Error::NotInGround { vertex: v });
                }
            }
            p.to_vec()
        }
        None => IndexPair::all(ground).collect(),
    };
    let entries: Vec<(IndexPair, GradedGroup)> = keys
        .par_iter()
        .map(|&p| (p, reduced_homology(&k.slice_unchecked(p), coeff).shift(1)))
        .collect();
    let index = entries.iter().enumerate().map(|(i, (p, _))| (*p, i)).collect();
    Ok(BigradedTable { ground, coeff, entries, index })
}
