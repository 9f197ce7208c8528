use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Finitely generated abelian group `Z^rank ⊕ Z/d_1 ⊕ ⋯ ⊕ Z/d_k` in
/// invariant-factor form (`d_1 | d_2 | ⋯`, every `d_i ≥ 2`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FgAbelianGroup {
    rank: usize,
    torsion: Vec<BigInt>,
}

impl FgAbelianGroup {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        FgAbelianGroup { rank, torsion: Vec::new() }
    }

    /// Accepts any list of nonzero cyclic orders; units are dropped and the
    /// rest is brought into invariant-factor form.
    pub fn new(rank: usize, cyclic: impl IntoIterator<Item = BigInt>) -> Self {
        let mut d: Vec<BigInt> = cyclic
            .into_iter()
            .map(|x| x.abs())
            .filter(|x| !x.is_zero() && !x.is_one())
            .collect();
        let n = d.len();
        for i in 0..n {
            for j in i + 1..n {
                let g = d[i].gcd(&d[j]);
                let l = &d[i] / &g * &d[j];
                d[i] = g;
                d[j] = l;
            }
        }
        d.retain(|x| !x.is_one());
        FgAbelianGroup { rank, torsion: d }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        Self::new(
            self.rank + other.rank,
            self.torsion.iter().chain(&other.torsion).cloned(),
        )
    }

    /// Number of torsion factors divisible by `p`.
    pub fn p_torsion_count(&self, p: u64) -> usize {
        let p = BigInt::from(p);
        self.torsion.iter().filter(|d| (*d % &p).is_zero()).count()
    }

    /// Renders free parts as `Z^r` even for `r = 1`.
    pub fn render_with_exponent(&self) -> String {
        self.render(true)
    }

    fn render(&self, explicit: bool) -> String {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 if !explicit => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

impl fmt::Display for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

/// Degree-indexed family of groups; zero groups are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GradedGroup {
    groups: BTreeMap<i32, FgAbelianGroup>,
}

impl GradedGroup {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn concentrated(degree: i32, g: FgAbelianGroup) -> Self {
        let mut out = Self::zero();
        out.set(degree, g);
        out
    }

    pub fn set(&mut self, degree: i32, g: FgAbelianGroup) {
        if g.is_zero() {
            self.groups.remove(&degree);
        } else {
            self.groups.insert(degree, g);
        }
    }

    pub fn add_at(&mut self, degree: i32, g: &FgAbelianGroup) {
        let sum = self.get(degree).direct_sum(g);
        self.set(degree, sum);
    }

    pub fn get(&self, degree: i32) -> FgAbelianGroup {
        self.groups.get(&degree).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.groups.is_empty()
    }

    /// Nonzero degrees in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = (i32, &FgAbelianGroup)> {
        self.groups.iter().map(|(&d, g)| (d, g))
    }

    pub fn degrees(&self) -> impl Iterator<Item = i32> + '_ {
        self.groups.keys().copied()
    }

    pub fn shift(&self, by: i32) -> Self {
        GradedGroup { groups: self.groups.iter().map(|(&d, g)| (d + by, g.clone())).collect() }
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (d, g) in other.iter() {
            out.add_at(d, g);
        }
        out
    }

    pub fn total_rank(&self) -> usize {
        self.groups.values().map(FgAbelianGroup::rank).sum()
    }

    pub fn is_free(&self) -> bool {
        self.groups.values().all(FgAbelianGroup::is_free)
    }

    /// Alternating sum of ranks.
    pub fn euler_characteristic(&self) -> i64 {
        self.iter()
            .map(|(d, g)| if d.rem_euclid(2) == 0 { g.rank() as i64 } else { -(g.rank() as i64) })
            .sum()
    }
}

/// Tensor product of reduced homologies under the join degree rule: a tuple of
/// factor degrees `(d_0, …, d_m)` lands in degree `d_0 + ⋯ + d_m + m`.
///
/// The empty product is `Z` in degree `-1` (the homology of `{∅}`). With
/// `over_field` every group is read as a vector space of its rank; otherwise
/// torsion is rejected.
pub fn graded_tensor(factors: &[GradedGroup], over_field: bool) -> Result<GradedGroup> {
    if !over_field {
        for f in factors {
            if let Some((d, _)) = f.iter().find(|(_, g)| !g.is_free()) {
                return Err(Error::TorsionUnderIntegers { degree: d });
            }
        }
    }
    // Accumulate in "unreduced" degrees e = d + 1, which simply add.
    let mut acc: BTreeMap<i32, usize> = BTreeMap::from([(0, 1)]);
    for f in factors {
        let mut next: BTreeMap<i32, usize> = BTreeMap::new();
        for (&e, &r) in &acc {
            for (d, g) in f.iter() {
                if g.rank() > 0 {
                    *next.entry(e + d + 1).or_default() += r * g.rank();
                }
            }
        }
        acc = next;
    }
    let mut out = GradedGroup::zero();
    for (e, r) in acc {
        out.set(e - 1, FgAbelianGroup::free(r));
    }
    Ok(out)
}
