//! Homology of `𝒵(K; S^{r_k+1}, S^{q_k})` read off from the Hochster table
//! of `K`, and the duality with its complement over `K°`.

use std::fmt;

use crate::complex::{IndexPair, SimplicialComplex, VertexSet};
use crate::error::{Error, Result};
use crate::homology::{reduced_cohomology, reduced_homology, Coefficients, FgAbelianGroup, GradedGroup};

/// Parameters `(r_k, q_k)` with `0 ≤ q_k ≤ r_k`; pair `k` is `(S^{r_k+1}, S^{q_k})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpherePairSystem {
    params: Vec<(u32, u32)>,
}

impl SpherePairSystem {
    pub fn new(params: impl IntoIterator<Item = (i64, i64)>) -> Result<Self> {
        let params = params
            .into_iter()
            .map(|(r, q)| {
                if q < 0 || q > r || r > u32::MAX as i64 {
                    Err(Error::SphereParams { r, q })
                } else {
                    Ok((r as u32, q as u32))
                }
            })
            .collect::<Result<_>>()?;
        Ok(SpherePairSystem { params })
    }

    /// Parses `r:q,r:q,...`.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = |msg: String| Error::Parse { line: 1, msg };
        let mut out = Vec::new();
        for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (r, q) = item.split_once(':').ok_or_else(|| bad(format!("expected r:q, got `{item}`")))?;
            let r: i64 = r.trim().parse().map_err(|_| bad(format!("bad integer `{r}`")))?;
            let q: i64 = q.trim().parse().map_err(|_| bad(format!("bad integer `{q}`")))?;
            out.push((r, q));
        }
        Self::new(out)
    }

    pub fn params(&self) -> &[(u32, u32)] {
        &self.params
    }

    pub fn len(&self) -> usize {
        self.params.len()
    }

    pub fn is_empty(&self) -> bool {
        self.params.is_empty()
    }

    /// `r = Σ (r_k + 1)`.
    pub fn total_dim(&self) -> i32 {
        self.params.iter().map(|&(r, _)| r as i32 + 1).sum()
    }

    /// `(r_k, r_k - q_k)`: `S^{r+1} ∖ S^q ≃ S^{r-q}`.
    pub fn complement(&self) -> Self {
        SpherePairSystem { params: self.params.iter().map(|&(r, q)| (r, r - q)).collect() }
    }
}

impl fmt::Display for SpherePairSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.params.iter().map(|(r, q)| format!("{r}:{q}")).collect();
        f.write_str(&parts.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Part {
    Hat,
    Bar,
    RelativeHat,
    RelativeBar,
}

/// One summand of a report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contribution {
    pub part: Part,
    pub sigma: VertexSet,
    pub omega: VertexSet,
    /// `t = Σ_{σ}(r_k+1) + Σ_{ω} q_k`.
    pub shift: i32,
    /// Reduced degree `j` of the slice group; `None` for hat summands.
    pub source_degree: Option<i32>,
    pub degree: i32,
    pub group: FgAbelianGroup,
}

/// `H_*(M) = Ĥ_*(M) ⊕ H̄_*(M)`, plus the relative parts of `(X̃, M)`, or the
/// same data in cohomology.
#[derive(Debug, Clone)]
pub struct SpaceHomologyReport {
    pub cohomology: bool,
    pub hat: GradedGroup,
    pub bar: GradedGroup,
    pub total: GradedGroup,
    pub relative_hat: GradedGroup,
    pub relative_bar: GradedGroup,
    pub ledger: Vec<Contribution>,
}

impl SpaceHomologyReport {
    /// Re-sums the ledger and compares with the stored parts.
    pub fn ledger_consistent(&self) -> bool {
        let mut sums: [GradedGroup; 4] = Default::default();
        for c in &self.ledger {
            sums[c.part as usize].add_at(c.degree, &c.group);
        }
        sums[0] == self.hat
            && sums[1] == self.bar
            && sums[2] == self.relative_hat
            && sums[3] == self.relative_bar
            && self.hat.direct_sum(&self.bar) == self.total
    }
}

fn check_params(k: &SimplicialComplex, sys: &SpherePairSystem) -> Result<Vec<u32>> {
    let outer = k.ground().to_vec();
    if outer.len() != sys.len() {
        return Err(Error::ParamCount { expected: outer.len(), got: sys.len() });
    }
    Ok(outer)
}

fn report(k: &SimplicialComplex, sys: &SpherePairSystem, cohomology: bool) -> Result<SpaceHomologyReport> {
    let outer = check_params(k, sys)?;
    let ground = k.ground();
    let weight = |s: VertexSet, f: &dyn Fn(u32, u32) -> u32| -> i32 {
        outer
            .iter()
            .zip(sys.params())
            .filter(|(v, _)| s.contains(**v))
            .map(|(_, &(r, q))| f(r, q) as i32)
            .sum()
    };
    let mut ledger = Vec::new();
    let mut sigmas: Vec<VertexSet> = ground.subsets().collect();
    sigmas.sort();
    for sigma in sigmas {
        let part = if k.contains(sigma) { Part::Hat } else { Part::RelativeHat };
        let shift = weight(sigma, &|r, _| r + 1);
        ledger.push(Contribution {
            part,
            sigma,
            omega: VertexSet::EMPTY,
            shift,
            source_degree: None,
            degree: shift,
            group: FgAbelianGroup::free(1),
        });
    }
    for pair in IndexPair::all(ground).filter(|p| !p.omega.is_empty()) {
        let slice = k.slice(pair)?;
        let groups = if cohomology {
            reduced_cohomology(&slice, Coefficients::Integers)
        } else {
            reduced_homology(&slice, Coefficients::Integers)
        };
        let shift = weight(pair.sigma, &|r, _| r + 1) + weight(pair.omega, &|_, q| q);
        for (j, g) in groups.iter() {
            let degree = j + 1 + shift;
            for (part, degree) in [(Part::Bar, degree), (Part::RelativeBar, degree + 1)] {
                ledger.push(Contribution {
                    part,
                    sigma: pair.sigma,
                    omega: pair.omega,
                    shift,
                    source_degree: Some(j),
                    degree,
                    group: g.clone(),
                });
            }
        }
    }
    let mut sums: [GradedGroup; 4] = Default::default();
    for c in &ledger {
        sums[c.part as usize].add_at(c.degree, &c.group);
    }
    let [hat, bar, relative_hat, relative_bar] = sums;
    let total = hat.direct_sum(&bar);
    Ok(SpaceHomologyReport { cohomology, hat, bar, total, relative_hat, relative_bar, ledger })
}

/// Integral homology of `M = 𝒵(K; S^{r_k+1}, S^{q_k})`. Parameter `k` belongs
/// to the `k`-th smallest vertex of `K`'s ground.
///
/// The hat part has one `Z` per face `σ` in degree `Σ_σ(r_k+1)`. A class in
/// `H̃_j(K_{σ,ω})`, `ω ≠ ∅`, sits in degree `j + 1 + t`.
pub fn sphere_pair_homology(k: &SimplicialComplex, sys: &SpherePairSystem) -> Result<SpaceHomologyReport> {
    report(k, sys, false)
}

/// The same decomposition in integral cohomology, built from the reduced
/// cohomology of the slices.
pub fn sphere_pair_cohomology(k: &SimplicialComplex, sys: &SpherePairSystem) -> Result<SpaceHomologyReport> {
    report(k, sys, true)
}

#[derive(Debug, Clone)]
pub struct SphereDualityVerdict {
    /// `r = Σ (r_k + 1)`.
    pub total_dim: i32,
    pub space: SpaceHomologyReport,
    /// Cohomology report of `M^c` over `K°` with parameters `(r_k, r_k - q_k)`.
    pub complement: SpaceHomologyReport,
    pub mismatches: Vec<String>,
}

impl SphereDualityVerdict {
    pub fn holds(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Checks `H̄_d(M) ≅ H̄^{r-d-1}(M^c)` and `Ĥ_d(M) ≅ Ĥ^{r-d}(X̃, M^c)`, both
/// degreewise and summand by summand (`(σ, ω) ↔ (σ̃, ω)` for bar classes,
/// `σ ↔ [m] ∖ σ` for hat classes).
pub fn sphere_pair_duality_check(k: &SimplicialComplex, sys: &SpherePairSystem) -> Result<SphereDualityVerdict> {
    check_params(k, sys)?;
    let ground = k.ground();
    let r = sys.total_dim();
    let space = sphere_pair_homology(k, sys)?;
    let complement = sphere_pair_cohomology(&k.dual(ground)?, &sys.complement())?;
    let mut mismatches = Vec::new();

    for (lhs, rhs, name, off) in [
        (&space.bar, &complement.bar, "bar", 1),
        (&space.hat, &complement.relative_hat, "hat", 0),
    ] {
        for d in lhs.degrees().chain(rhs.degrees().map(|e| r - e - off)) {
            let (a, b) = (lhs.get(d), rhs.get(r - d - off));
            if a != b {
                mismatches.push(format!("{name} degree {d}: {a} against {b} in degree {}", r - d - off));
            }
        }
    }

    let find = |part: Part, sigma: VertexSet, omega: VertexSet, src: Option<i32>| {
        complement
            .ledger
            .iter()
            .filter(|c| c.part == part && c.sigma == sigma && c.omega == omega && c.source_degree == src)
            .collect::<Vec<_>>()
    };
    let mut matched = 0;
    for c in &space.ledger {
        let (part, sigma, src, degree) = match c.part {
            Part::Bar => (
                Part::Bar,
                IndexPair { sigma: c.sigma, omega: c.omega }.complement_sigma(ground),
                c.source_degree.map(|j| c.omega.len() as i32 - j - 3),
                r - c.degree - 1,
            ),
            Part::Hat => (Part::RelativeHat, ground.difference(c.sigma), None, r - c.degree),
            _ => continue,
        };
        let partner = find(part, sigma, c.omega, src);
        match partner.as_slice() {
            [p] if p.group == c.group && p.degree == degree => matched += 1,
            _ => mismatches.push(format!(
                "no partner for sigma={:?} omega={:?} source {:?} in degree {}",
                c.sigma.to_vec(),
                c.omega.to_vec(),
                c.source_degree,
                c.degree
            )),
        }
    }
    let expected = complement.ledger.iter().filter(|c| matches!(c.part, Part::Bar | Part::RelativeHat)).count();
    if matched != expected {
        mismatches.push(format!("{matched} summands paired but the complement has {expected}"));
    }
    Ok(SphereDualityVerdict { total_dim: r, space, complement, mismatches })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(l: &[u32]) -> VertexSet {
        VertexSet::from_labels(l.iter().copied()).unwrap()
    }

    fn sys(p: &[(i64, i64)]) -> SpherePairSystem {
        SpherePairSystem::new(p.iter().copied()).unwrap()
    }

    fn graded(items: &[(i32, usize)]) -> GradedGroup {
        let mut g = GradedGroup::zero();
        for &(d, r) in items {
            g.set(d, FgAbelianGroup::free(r));
        }
        g
    }

    #[test]
    fn rejects_bad_params() {
        assert_eq!(SpherePairSystem::new([(1, 2)]).unwrap_err(), Error::SphereParams { r: 1, q: 2 });
        assert!(SpherePairSystem::new([(1, -1)]).is_err());
        let k = SimplicialComplex::empty_face(vs(&[1, 2]));
        assert_eq!(
            sphere_pair_homology(&k, &sys(&[(1, 0)])).unwrap_err(),
            Error::ParamCount { expected: 2, got: 1 }
        );
    }

    #[test]
    fn parse_round_trip() {
        let s = SpherePairSystem::parse("1:0, 3:1").unwrap();
        assert_eq!(s.params(), &[(1, 0), (3, 1)]);
        assert_eq!(s.to_string(), "1:0,3:1");
        assert!(SpherePairSystem::parse("1-0").is_err());
    }

    #[test]
    fn zero_sphere() {
        let rep = sphere_pair_homology(&SimplicialComplex::empty_face(vs(&[1])), &sys(&[(1, 0)])).unwrap();
        assert_eq!(rep.total, graded(&[(0, 2)]));
        assert!(rep.ledger_consistent());
    }

    #[test]
    fn four_spheres() {
        let k = SimplicialComplex::simplex_boundary(vs(&[1, 2]));
        let rep = sphere_pair_homology(&k, &sys(&[(1, 0), (1, 0)])).unwrap();
        assert_eq!(rep.bar, graded(&[(1, 1), (2, 2)]));
        assert_eq!(rep.total, graded(&[(0, 1), (1, 1), (2, 4)]));
        assert!(rep.ledger_consistent());
    }

    #[test]
    fn void_is_empty_space() {
        let rep = sphere_pair_homology(&SimplicialComplex::void(vs(&[1, 2])), &sys(&[(1, 0), (2, 1)])).unwrap();
        assert!(rep.total.is_zero());
    }

    #[test]
    fn products_of_spheres() {
        // K = Δ: product of the big spheres; K = {∅}: product of the small ones.
        let p = sys(&[(1, 0), (2, 1)]);
        let full = sphere_pair_homology(&SimplicialComplex::simplex(vs(&[1, 2])), &p).unwrap();
        assert_eq!(full.total, graded(&[(0, 1), (2, 1), (3, 1), (5, 1)]));
        let base = sphere_pair_homology(&SimplicialComplex::empty_face(vs(&[1, 2])), &p).unwrap();
        assert_eq!(base.total, graded(&[(0, 2), (1, 2)]));
    }

    #[test]
    fn duality_examples() {
        let k = SimplicialComplex::simplex_boundary(vs(&[1, 2]));
        let v = sphere_pair_duality_check(&k, &sys(&[(1, 0), (1, 0)])).unwrap();
        assert!(v.holds(), "{:?}", v.mismatches);
        assert_eq!(v.total_dim, 4);
        assert_eq!(v.complement.bar, graded(&[(1, 2), (2, 1)]));

        let v = sphere_pair_duality_check(&SimplicialComplex::empty_face(vs(&[1])), &sys(&[(3, 1)])).unwrap();
        assert!(v.holds(), "{:?}", v.mismatches);
        assert_eq!(v.space.bar, graded(&[(1, 1)]));
        assert_eq!(v.complement.bar, graded(&[(2, 1)]));

        let v = sphere_pair_duality_check(&SimplicialComplex::simplex(vs(&[1, 2, 3])), &sys(&[(0, 0); 3])).unwrap();
        assert!(v.holds() && v.space.bar.is_zero() && v.complement.bar.is_zero());
    }

    #[test]
    fn duality_with_torsion() {
        let v = sphere_pair_duality_check(&crate::complex::rp2_six(), &sys(&[(1, 0), (2, 1), (1, 1), (0, 0), (3, 2), (1, 0)]))
            .unwrap();
        assert!(v.holds(), "{:?}", v.mismatches);
        assert!(!v.space.bar.is_free());
    }
}
