//! Random complexes for the property suites.

use rand::seq::SliceRandom;
use rand::Rng;

use super::{SimplicialComplex, SimplicialPair, VertexSet};

/// How facets are drawn before the downward closure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FacetDistribution {
    /// Facet count uniform in `[0, 2^n]`, each facet a uniform subset.
    Uniform,
    /// Facet count uniform in `[1, n + 2]`, each facet of uniformly drawn
    /// size. Produces complexes with nontrivial homology far more often.
    Sized,
}

#[derive(Debug, Clone, Copy)]
pub struct RandomComplexConfig {
    pub facets: FacetDistribution,
    /// Probability of returning `{}`; the same probability applies to `{∅}`.
    pub degenerate_prob: f64,
}

impl Default for RandomComplexConfig {
    fn default() -> Self {
        RandomComplexConfig { facets: FacetDistribution::Uniform, degenerate_prob: 0.05 }
    }
}

impl RandomComplexConfig {
    pub fn sized() -> Self {
        RandomComplexConfig { facets: FacetDistribution::Sized, ..Self::default() }
    }
}

pub fn random_complex<R: Rng + ?Sized>(rng: &mut R, ground: VertexSet) -> SimplicialComplex {
    random_complex_with(rng, ground, &RandomComplexConfig::default())
}

pub fn random_complex_with<R: Rng + ?Sized>(
    rng: &mut R,
    ground: VertexSet,
    cfg: &RandomComplexConfig,
) -> SimplicialComplex {
    let roll: f64 = rng.gen();
    if roll < cfg.degenerate_prob {
        return SimplicialComplex::void(ground);
    }
    if roll < 2.0 * cfg.degenerate_prob {
        return SimplicialComplex::empty_face(ground);
    }
    let n = ground.len();
    let labels = ground.to_vec();
    let facets: Vec<VertexSet> = match cfg.facets {
        FacetDistribution::Uniform => {
            let count = rng.gen_range(0..=(1usize << n));
            (0..count).map(|_| ground.deposit(rng.gen::<u64>() & mask(n))).collect()
        }
        FacetDistribution::Sized => {
            let count = rng.gen_range(1..=n + 2);
            (0..count)
                .map(|_| {
                    let size = rng.gen_range(0..=n);
                    let chosen = labels.choose_multiple(rng, size).copied();
                    VertexSet::from_labels(chosen).expect("labels from a valid ground")
                })
                .collect()
        }
    };
    SimplicialComplex::from_facets(ground, &facets).expect("facets inside ground")
}

/// A random subcomplex of `x`: its intersection with an independent random
/// complex, so `{}` and `{∅}` both occur.
pub fn random_subcomplex<R: Rng + ?Sized>(
    rng: &mut R,
    x: &SimplicialComplex,
    cfg: &RandomComplexConfig,
) -> SimplicialComplex {
    let other = random_complex_with(rng, x.ground(), cfg);
    x.intersection(&other).expect("same ground")
}

pub fn random_pair<R: Rng + ?Sized>(
    rng: &mut R,
    ground: VertexSet,
    cfg: &RandomComplexConfig,
) -> SimplicialPair {
    let x = random_complex_with(rng, ground, cfg);
    let a = random_subcomplex(rng, &x, cfg);
    SimplicialPair::new(x, a).expect("a is a subcomplex of x")
}

/// `{1, …, n}` with `n` uniform in `lo..=hi`.
pub fn random_ground<R: Rng + ?Sized>(rng: &mut R, lo: usize, hi: usize) -> VertexSet {
    let n = rng.gen_range(lo..=hi) as u32;
    VertexSet::range(1, n).expect("n <= 64")
}

/// Random block sizes, each at least one, summing to at most `max_total`,
/// with `1..=max_blocks` blocks.
pub fn random_blocks<R: Rng + ?Sized>(rng: &mut R, max_blocks: usize, max_total: usize) -> Vec<usize> {
    let m = rng.gen_range(1..=max_blocks.min(max_total));
    let mut sizes = vec![1usize; m];
    let extra = rng.gen_range(0..=max_total - m);
    for _ in 0..extra {
        let k = rng.gen_range(0..m);
        sizes[k] += 1;
    }
    sizes
}

fn mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}
