//! Seeded randomized verification suites, one per identity.
//!
//! Trial `i` of a run with seed `s` uses its own generator seeded with
//! `s + i`, so any trial can be replayed alone. Failing instances are shrunk
//! by dropping facets (and finite points) while the failure persists.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::complex::random::{random_blocks, random_complex_with, random_ground, random_pair, RandomComplexConfig};
use crate::complex::{
    composition_complex, polyhedral_complex, IndexPair, SimplicialComplex, SimplicialPair, SimplicialPairSeq,
    VertexSet,
};
use crate::error::{Error, Result};
use crate::hochster::{alexander_duality_witness, composition_homology, hochster_composition_formula};
use crate::homology::Coefficients;
use crate::spaces::{
    complement_identity_check, finite_product, ghost_factorization_check, sphere_pair_duality_check,
    substitution_identity_check, FiniteSpacePair, SpherePairSystem,
};

use super::document::ComplexDocument;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Dual,
    SliceDual,
    ComposeDual,
    ComposeSlice,
    Alexander,
    CompositionHomology,
    HochsterComposition,
    Complement,
    Substitution,
    SphereDuality,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Dual,
        Suite::SliceDual,
        Suite::ComposeDual,
        Suite::ComposeSlice,
        Suite::Alexander,
        Suite::CompositionHomology,
        Suite::HochsterComposition,
        Suite::Complement,
        Suite::Substitution,
        Suite::SphereDuality,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Dual => "dual",
            Suite::SliceDual => "slice-dual",
            Suite::ComposeDual => "compose-dual",
            Suite::ComposeSlice => "compose-slice",
            Suite::Alexander => "alexander",
            Suite::CompositionHomology => "composition-homology",
            Suite::HochsterComposition => "hochster-composition",
            Suite::Complement => "complement",
            Suite::Substitution => "substitution",
            Suite::SphereDuality => "sphere-duality",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    pub max_vertices: usize,
    pub trials: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { max_vertices: 6, trials: 100, seed: 0 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialOutcome {
    pub seed: u64,
    /// `None` on success; otherwise the reason and the minimized instance.
    pub failure: Option<String>,
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: Suite,
    pub outcomes: Vec<TrialOutcome>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.failure.is_none())
    }

    pub fn failures(&self) -> usize {
        self.outcomes.iter().filter(|o| o.failure.is_some()).count()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for o in &self.outcomes {
            let verdict = if o.failure.is_some() { "FAIL" } else { "PASS" };
            out.push_str(&format!("TRIAL {} {} {}\n", o.seed, self.suite, verdict));
            if let Some(f) = &o.failure {
                for line in f.lines() {
                    out.push_str(&format!("  {line}\n"));
                }
            }
        }
        let n = self.outcomes.len();
        let status = if self.passed() { "PASS" } else { "FAIL" };
        out.push_str(&format!("{} {}/{} trials passed: {status}\n", self.suite, n - self.failures(), n));
        out
    }
}

/// An instance that can be checked, shrunk and printed.
pub trait Case: Clone + Send + Sync {
    /// `Err` describes the violated identity.
    fn check(&self) -> std::result::Result<(), String>;
    fn shrink(&self) -> Vec<Self>;
    fn render(&self) -> String;
}

/// Greedy shrinking: take the first smaller candidate that still fails.
pub fn minimize<C: Case>(case: C) -> (C, String) {
    let mut cur = case;
    let mut reason = cur.check().err().unwrap_or_default();
    for _ in 0..10_000 {
        let next = cur.shrink().into_iter().find_map(|c| c.check().err().map(|r| (c, r)));
        match next {
            Some((c, r)) => {
                cur = c;
                reason = r;
            }
            None => break,
        }
    }
    (cur, reason)
}

fn outcome<C: Case>(seed: u64, case: C) -> TrialOutcome {
    if case.check().is_ok() {
        return TrialOutcome { seed, failure: None };
    }
    let (small, reason) = minimize(case);
    TrialOutcome { seed, failure: Some(format!("{reason}\n{}", small.render())) }
}

/// Complexes with one facet removed, the ground kept.
pub fn drop_one_facet(k: &SimplicialComplex) -> Vec<SimplicialComplex> {
    if k.is_void() {
        return Vec::new();
    }
    let facets = k.facets();
    (0..facets.len())
        .map(|i| {
            let rest: Vec<VertexSet> =
                facets.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &f)| f).collect();
            SimplicialComplex::from_facets(k.ground(), &rest).expect("same ground")
        })
        .collect()
}

fn doc(k: &SimplicialComplex) -> String {
    ComplexDocument::from_complex(k, None).render_inline()
}

fn config<R: Rng>(rng: &mut R) -> RandomComplexConfig {
    if rng.gen_bool(0.5) {
        RandomComplexConfig::default()
    } else {
        RandomComplexConfig::sized()
    }
}

fn err_str(e: Error) -> String {
    format!("error: {e}")
}

// ---- dual ----

#[derive(Clone)]
pub struct DualCase {
    pub k: SimplicialComplex,
    pub l: SimplicialComplex,
}

impl Case for DualCase {
    fn check(&self) -> std::result::Result<(), String> {
        let s = self.k.ground();
        let d = |x: &SimplicialComplex| x.dual(s).map_err(err_str);
        if d(&d(&self.k)?)? != self.k {
            return Err("dual is not an involution".into());
        }
        let (dk, dl) = (d(&self.k)?, d(&self.l)?);
        if d(&self.k.union(&self.l).map_err(err_str)?)? != dk.intersection(&dl).map_err(err_str)? {
            return Err("dual of a union is not the intersection of duals".into());
        }
        if d(&self.k.intersection(&self.l).map_err(err_str)?)? != dk.union(&dl).map_err(err_str)? {
            return Err("dual of an intersection is not the union of duals".into());
        }
        Ok(())
    }

    fn shrink(&self) -> Vec<Self> {
        let mut out: Vec<Self> = drop_one_facet(&self.k).into_iter().map(|k| DualCase { k, l: self.l.clone() }).collect();
        out.extend(drop_one_facet(&self.l).into_iter().map(|l| DualCase { k: self.k.clone(), l }));
        out
    }

    fn render(&self) -> String {
        format!("K: {}\nL: {}", doc(&self.k), doc(&self.l))
    }
}

pub fn dual_case<R: Rng>(rng: &mut R, max_vertices: usize) -> DualCase {
    let g = random_ground(rng, 1, max_vertices.max(1));
    let cfg = config(rng);
    DualCase { k: random_complex_with(rng, g, &cfg), l: random_complex_with(rng, g, &cfg) }
}

// ---- slice-dual ----

#[derive(Clone)]
pub struct SliceDualCase {
    pub k: SimplicialComplex,
}

impl Case for SliceDualCase {
    fn check(&self) -> std::result::Result<(), String> {
        let s = self.k.ground();
        let dk = self.k.dual(s).map_err(err_str)?;
        for p in IndexPair::all(s).filter(|p| !p.omega.is_empty()) {
            let lhs = self.k.slice(p).and_then(|l| l.dual(p.omega)).map_err(err_str)?;
            let rhs = dk.slice(IndexPair { sigma: p.complement_sigma(s), omega: p.omega }).map_err(err_str)?;
            if lhs != rhs {
                return Err(format!("dual of the slice differs from the slice of the dual at {p}"));
            }
        }
        Ok(())
    }

    fn shrink(&self) -> Vec<Self> {
        drop_one_facet(&self.k).into_iter().map(|k| SliceDualCase { k }).collect()
    }

    fn render(&self) -> String {
        format!("K: {}", doc(&self.k))
    }
}

pub fn slice_dual_case<R: Rng>(rng: &mut R, max_vertices: usize) -> SliceDualCase {
    let g = random_ground(rng, 1, max_vertices.max(1));
    let cfg = config(rng);
    SliceDualCase { k: random_complex_with(rng, g, &cfg) }
}

// ---- compositions ----

/// Outer complex on `[m]` and factors on consecutive blocks.
#[derive(Clone)]
pub struct CompositionCase {
    pub k: SimplicialComplex,
    pub ls: Vec<SimplicialComplex>,
}

impl CompositionCase {
    fn shrink_with(&self) -> Vec<Self> {
        let mut out: Vec<Self> =
            drop_one_facet(&self.k).into_iter().map(|k| CompositionCase { k, ls: self.ls.clone() }).collect();
        for i in 0..self.ls.len() {
            for l in drop_one_facet(&self.ls[i]) {
                let mut ls = self.ls.clone();
                ls[i] = l;
                out.push(CompositionCase { k: self.k.clone(), ls });
            }
        }
        out
    }

    fn render_parts(&self) -> String {
        let mut s = format!("K: {}", doc(&self.k));
        for (i, l) in self.ls.iter().enumerate() {
            s.push_str(&format!("\nL{}: {}", i + 1, doc(l)));
        }
        s
    }
}

/// Block sizes summing to at most `max_total`, outer complex on `[m]` and
/// random factors on the blocks.
pub fn composition_case<R: Rng>(rng: &mut R, max_blocks: usize, max_total: usize, nonvoid: bool) -> CompositionCase {
    let sizes = random_blocks(rng, max_blocks, max_total.max(1));
    let m = sizes.len() as u32;
    let cfg = config(rng);
    let k = random_complex_with(rng, VertexSet::range(1, m).expect("small"), &cfg);
    let mut offset = 0u32;
    let ls = sizes
        .iter()
        .map(|&n| {
            let g = VertexSet::range(offset + 1, offset + n as u32).expect("small");
            offset += n as u32;
            loop {
                let l = random_complex_with(rng, g, &cfg);
                if !(nonvoid && l.is_void()) {
                    break l;
                }
            }
        })
        .collect();
    CompositionCase { k, ls }
}

#[derive(Clone)]
pub struct ComposeDualCase(pub CompositionCase);

impl Case for ComposeDualCase {
    fn check(&self) -> std::result::Result<(), String> {
        let CompositionCase { k, ls } = &self.0;
        let comp = composition_complex(k, ls).map_err(err_str)?;
        let lhs = comp.dual(comp.ground()).map_err(err_str)?;
        let duals = ls.iter().map(|l| l.dual(l.ground())).collect::<Result<Vec<_>>>().map_err(err_str)?;
        let rhs = composition_complex(&k.dual(k.ground()).map_err(err_str)?, &duals).map_err(err_str)?;
        if lhs != rhs {
            return Err("dual of the composition differs from the composition of duals".into());
        }
        if k.is_self_dual() && ls.iter().all(SimplicialComplex::is_self_dual) && !comp.is_self_dual() {
            return Err("composition of self-dual complexes is not self-dual".into());
        }
        Ok(())
    }

    fn shrink(&self) -> Vec<Self> {
        self.0.shrink_with().into_iter().map(ComposeDualCase).collect()
    }

    fn render(&self) -> String {
        self.0.render_parts()
    }
}

#[derive(Clone)]
pub struct ComposeSliceCase {
    pub k: SimplicialComplex,
    pub pairs: SimplicialPairSeq,
    pub indices: Vec<IndexPair>,
}

impl Case for ComposeSliceCase {
    fn check(&self) -> std::result::Result<(), String> {
        let comp = polyhedral_complex(&self.k, &self.pairs).map_err(err_str)?;
        for &p in &self.indices {
            let lhs = comp.slice(p).map_err(err_str)?;
            let rhs = self.pairs.slice(p).and_then(|s| polyhedral_complex(&self.k, &s)).map_err(err_str)?;
            if lhs != rhs {
                return Err(format!("slice of the polyhedral complex differs at {p}"));
            }
        }
        Ok(())
    }

    fn shrink(&self) -> Vec<Self> {
        let mut out = Vec::new();
        if self.indices.len() > 1 {
            for i in 0..self.indices.len() {
                out.push(ComposeSliceCase { indices: vec![self.indices[i]], ..self.clone() });
            }
        }
        for k in drop_one_facet(&self.k) {
            out.push(ComposeSliceCase { k, ..self.clone() });
        }
        for i in 0..self.pairs.len() {
            let p = &self.pairs.pairs()[i];
            let mut variants: Vec<SimplicialPair> = drop_one_facet(p.x())
                .into_iter()
                .map(|x| {
                    let a = p.a().intersection(&x).expect("same ground");
                    SimplicialPair::new(x, a).expect("subcomplex")
                })
                .collect();
            variants.extend(drop_one_facet(p.a()).into_iter().map(|a| SimplicialPair::new(p.x().clone(), a).expect("subcomplex")));
            for v in variants {
                let mut ps = self.pairs.pairs().to_vec();
                ps[i] = v;
                out.push(ComposeSliceCase { pairs: SimplicialPairSeq::new(ps).expect("same blocks"), ..self.clone() });
            }
        }
        out
    }

    fn render(&self) -> String {
        let mut s = format!("K: {}", doc(&self.k));
        for (i, p) in self.pairs.pairs().iter().enumerate() {
            s.push_str(&format!("\nX{}: {}\nA{}: {}", i + 1, doc(p.x()), i + 1, doc(p.a())));
        }
        let idx: Vec<String> = self.indices.iter().map(IndexPair::to_string).collect();
        s.push_str(&format!("\npairs: {}", idx.join("; ")));
        s
    }
}

pub fn compose_slice_case<R: Rng>(rng: &mut R, max_total: usize) -> ComposeSliceCase {
    let sizes = random_blocks(rng, 4, max_total.max(1));
    let m = sizes.len() as u32;
    let cfg = config(rng);
    let k = random_complex_with(rng, VertexSet::range(1, m).expect("small"), &cfg);
    let mut offset = 0u32;
    let ps = sizes
        .iter()
        .map(|&n| {
            let g = VertexSet::range(offset + 1, offset + n as u32).expect("small");
            offset += n as u32;
            random_pair(rng, g, &cfg)
        })
        .collect();
    let pairs = SimplicialPairSeq::new(ps).expect("disjoint blocks");
    let ground = pairs.ground();
    let total = 3u64.pow(ground.len() as u32);
    let indices = if total <= 729 {
        IndexPair::all(ground).collect()
    } else {
        (0..64).map(|_| IndexPair::from_ternary(ground, rng.gen_range(0..total))).collect()
    };
    ComposeSliceCase { k, pairs, indices }
}

// ---- alexander ----

#[derive(Clone)]
pub struct AlexanderCase {
    pub k: SimplicialComplex,
}

impl Case for AlexanderCase {
    fn check(&self) -> std::result::Result<(), String> {
        let s = self.k.ground();
        for p in IndexPair::all(s).filter(|p| !p.omega.is_empty()) {
            let w = alexander_duality_witness(&self.k, p, s).map_err(err_str)?;
            if !w.is_signed_permutation() {
                return Err(format!("witness is not a signed permutation at {p}"));
            }
            if !w.is_chain_map() {
                return Err(format!("witness is not a chain map at {p}"));
            }
            if !w.groups_agree() {
                return Err(format!("homology {:?} does not match dual cohomology {:?} at {p}", w.homology, w.dual_cohomology));
            }
        }
        Ok(())
    }

    fn shrink(&self) -> Vec<Self> {
        drop_one_facet(&self.k).into_iter().map(|k| AlexanderCase { k }).collect()
    }

    fn render(&self) -> String {
        format!("K: {}", doc(&self.k))
    }
}

pub fn alexander_case<R: Rng>(rng: &mut R, max_vertices: usize) -> AlexanderCase {
    let g = random_ground(rng, 1, max_vertices.max(1));
    AlexanderCase { k: random_complex_with(rng, g, &RandomComplexConfig::sized()) }
}

// ---- composition homology ----

#[derive(Clone)]
pub struct CompositionHomologyCase(pub CompositionCase);

impl Case for CompositionHomologyCase {
    fn check(&self) -> std::result::Result<(), String> {
        let CompositionCase { k, ls } = &self.0;
        match composition_homology(k, ls, Coefficients::Z) {
            Ok(c) if !c.agrees() => return Err(format!("integral formula {:?} but direct {:?}", c.formula, c.direct)),
            Ok(_) | Err(Error::TorsionUnderIntegers { .. }) => {}
            Err(e) => return Err(err_str(e)),
        }
        let c = composition_homology(k, ls, Coefficients::Q).map_err(err_str)?;
        if !c.agrees() {
            return Err(format!("rational formula {:?} but direct {:?}", c.formula, c.direct));
        }
        Ok(())
    }

    fn shrink(&self) -> Vec<Self> {
        self.0.shrink_with().into_iter().map(CompositionHomologyCase).collect()
    }

    fn render(&self) -> String {
        self.0.render_parts()
    }
}

#[derive(Clone)]
pub struct HochsterCompositionCase(pub CompositionCase);

impl Case for HochsterCompositionCase {
    fn check(&self) -> std::result::Result<(), String> {
        let CompositionCase { k, ls } = &self.0;
        if ls.iter().any(SimplicialComplex::is_void) {
            return Ok(());
        }
        let report = match hochster_composition_formula(k, ls, Coefficients::Z) {
            Err(Error::TorsionUnderIntegers { .. }) => hochster_composition_formula(k, ls, Coefficients::Q),
            r => r,
        }
        .map_err(err_str)?;
        match report.iter().find(|r| !r.agrees()) {
            Some(r) => Err(format!(
                "piece {} (hat sigma={} omega={}): formula {:?}, direct {:?}",
                r.piece.pair, r.piece.sigma_hat, r.piece.omega_hat, r.formula, r.direct
            )),
            None => Ok(()),
        }
    }

    fn shrink(&self) -> Vec<Self> {
        self.0.shrink_with().into_iter().map(HochsterCompositionCase).collect()
    }

    fn render(&self) -> String {
        self.0.render_parts()
    }
}

// ---- finite models ----

fn random_finite_pair<R: Rng>(rng: &mut R, max_points: u8) -> FiniteSpacePair<u8> {
    let n = rng.gen_range(0..=max_points);
    let x: Vec<u8> = (0..n).collect();
    let a: Vec<u8> = x.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
    FiniteSpacePair::new(x, a).expect("subset")
}

fn shrink_finite(p: &FiniteSpacePair<u8>) -> Vec<FiniteSpacePair<u8>> {
    let mut out = Vec::new();
    for &pt in p.x() {
        let x = p.x().iter().copied().filter(|&q| q != pt);
        let a = p.a().iter().copied().filter(|&q| q != pt);
        out.push(FiniteSpacePair::new(x, a).expect("subset"));
    }
    for &pt in p.a() {
        let a = p.a().iter().copied().filter(|&q| q != pt);
        out.push(FiniteSpacePair::new(p.x().iter().copied(), a).expect("subset"));
    }
    out
}

fn render_finite(p: &FiniteSpacePair<u8>) -> String {
    let s = |set: &std::collections::BTreeSet<u8>| {
        let v: Vec<String> = set.iter().map(u8::to_string).collect();
        format!("{{{}}}", v.join(","))
    };
    format!("X={} A={}", s(p.x()), s(p.a()))
}

#[derive(Clone)]
pub struct ComplementCase {
    pub k: SimplicialComplex,
    pub pairs: Vec<FiniteSpacePair<u8>>,
}

impl Case for ComplementCase {
    fn check(&self) -> std::result::Result<(), String> {
        let v = complement_identity_check(&self.k, &self.pairs).map_err(err_str)?;
        if !v.holds() {
            return Err(format!("complement identity fails at tuple {:?}", v.counterexample()));
        }
        let comp: Vec<_> = self.pairs.iter().map(FiniteSpacePair::complement).collect();
        let dual = self.k.dual(self.k.ground()).map_err(err_str)?;
        let back = complement_identity_check(&dual, &comp).map_err(err_str)?;
        let z = finite_product(&self.k, &self.pairs).map_err(err_str)?;
        if !back.holds() || back.lhs != z {
            return Err("complement of the complement is not the original space".into());
        }
        let g = ghost_factorization_check(&self.k, &self.pairs).map_err(err_str)?;
        if !g.holds() {
            return Err(format!("ghost factorization fails at tuple {:?}", g.counterexample()));
        }
        Ok(())
    }

    fn shrink(&self) -> Vec<Self> {
        let mut out: Vec<Self> =
            drop_one_facet(&self.k).into_iter().map(|k| ComplementCase { k, pairs: self.pairs.clone() }).collect();
        for i in 0..self.pairs.len() {
            for p in shrink_finite(&self.pairs[i]) {
                let mut pairs = self.pairs.clone();
                pairs[i] = p;
                out.push(ComplementCase { k: self.k.clone(), pairs });
            }
        }
        out
    }

    fn render(&self) -> String {
        let mut s = format!("K: {}", doc(&self.k));
        for (i, p) in self.pairs.iter().enumerate() {
            s.push_str(&format!("\npair{}: {}", i + 1, render_finite(p)));
        }
        s
    }
}

pub fn complement_case<R: Rng>(rng: &mut R, max_vertices: usize) -> ComplementCase {
    let g = random_ground(rng, 1, max_vertices.clamp(1, 4));
    let cfg = config(rng);
    let k = match rng.gen_range(0..10) {
        0 => SimplicialComplex::void(g),
        1 => SimplicialComplex::simplex(g),
        _ => random_complex_with(rng, g, &cfg),
    };
    let pairs = (0..g.len()).map(|_| random_finite_pair(rng, 3)).collect();
    ComplementCase { k, pairs }
}

#[derive(Clone)]
pub struct SubstitutionCase {
    pub k: SimplicialComplex,
    pub inner: SimplicialPairSeq,
    pub leaves: Vec<FiniteSpacePair<u8>>,
}

impl Case for SubstitutionCase {
    fn check(&self) -> std::result::Result<(), String> {
        let v = substitution_identity_check(&self.k, &self.inner, &self.leaves).map_err(err_str)?;
        match v.counterexample() {
            Some(t) => Err(format!("substitution identity fails at tuple {t:?}")),
            None => Ok(()),
        }
    }

    fn shrink(&self) -> Vec<Self> {
        let mut out: Vec<Self> = drop_one_facet(&self.k).into_iter().map(|k| SubstitutionCase { k, ..self.clone() }).collect();
        for i in 0..self.leaves.len() {
            for p in shrink_finite(&self.leaves[i]) {
                let mut leaves = self.leaves.clone();
                leaves[i] = p;
                out.push(SubstitutionCase { leaves, ..self.clone() });
            }
        }
        out
    }

    fn render(&self) -> String {
        let mut s = format!("K: {}", doc(&self.k));
        for (i, p) in self.inner.pairs().iter().enumerate() {
            s.push_str(&format!("\nX{}: {}\nA{}: {}", i + 1, doc(p.x()), i + 1, doc(p.a())));
        }
        for (i, p) in self.leaves.iter().enumerate() {
            s.push_str(&format!("\nleaf{}: {}", i + 1, render_finite(p)));
        }
        s
    }
}

pub fn substitution_case<R: Rng>(rng: &mut R, max_vertices: usize) -> SubstitutionCase {
    let max_total = max_vertices.clamp(1, 6);
    let m = rng.gen_range(1..=3.min(max_total));
    let cfg = config(rng);
    let k = random_complex_with(rng, VertexSet::range(1, m as u32).expect("small"), &cfg);
    let mut offset = 0u32;
    let mut ps = Vec::new();
    for i in 0..m {
        let room = max_total - offset as usize - (m - i - 1);
        let n = rng.gen_range(1..=2.min(room)) as u32;
        let g = VertexSet::range(offset + 1, offset + n).expect("small");
        offset += n;
        ps.push(random_pair(rng, g, &cfg));
    }
    let inner = SimplicialPairSeq::new(ps).expect("disjoint blocks");
    let leaves = (0..offset).map(|_| random_finite_pair(rng, 2)).collect();
    SubstitutionCase { k, inner, leaves }
}

// ---- sphere duality ----

#[derive(Clone)]
pub struct SphereDualityCase {
    pub k: SimplicialComplex,
    pub sys: SpherePairSystem,
}

impl Case for SphereDualityCase {
    fn check(&self) -> std::result::Result<(), String> {
        let v = sphere_pair_duality_check(&self.k, &self.sys).map_err(err_str)?;
        if !v.space.ledger_consistent() || !v.complement.ledger_consistent() {
            return Err("ledger does not reproduce the graded groups".into());
        }
        match v.mismatches.first() {
            Some(m) => Err(m.clone()),
            None => Ok(()),
        }
    }

    fn shrink(&self) -> Vec<Self> {
        drop_one_facet(&self.k).into_iter().map(|k| SphereDualityCase { k, sys: self.sys.clone() }).collect()
    }

    fn render(&self) -> String {
        format!("K: {}\nspheres: {}", doc(&self.k), self.sys)
    }
}

pub fn random_sphere_system<R: Rng>(rng: &mut R, m: usize, max_r: i64) -> SpherePairSystem {
    let params: Vec<(i64, i64)> = (0..m)
        .map(|_| {
            let r = rng.gen_range(0..=max_r);
            (r, rng.gen_range(0..=r))
        })
        .collect();
    SpherePairSystem::new(params).expect("valid bounds")
}

pub fn sphere_duality_case<R: Rng>(rng: &mut R, max_vertices: usize) -> SphereDualityCase {
    let g = random_ground(rng, 1, max_vertices.max(1));
    let cfg = config(rng);
    let k = random_complex_with(rng, g, &cfg);
    let sys = random_sphere_system(rng, g.len(), 3);
    SphereDualityCase { k, sys }
}

// ---- driver ----

pub fn run_trial(suite: Suite, max_vertices: usize, seed: u64) -> TrialOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rng = &mut rng;
    let n = max_vertices;
    match suite {
        Suite::Dual => outcome(seed, dual_case(rng, n)),
        Suite::SliceDual => outcome(seed, slice_dual_case(rng, n)),
        Suite::ComposeDual => outcome(seed, ComposeDualCase(composition_case(rng, 4, n, false))),
        Suite::ComposeSlice => outcome(seed, compose_slice_case(rng, n)),
        Suite::Alexander => outcome(seed, alexander_case(rng, n)),
        Suite::CompositionHomology => outcome(seed, CompositionHomologyCase(composition_case(rng, 3, n, false))),
        Suite::HochsterComposition => outcome(seed, HochsterCompositionCase(composition_case(rng, 3, n, true))),
        Suite::Complement => outcome(seed, complement_case(rng, n)),
        Suite::Substitution => outcome(seed, substitution_case(rng, n)),
        Suite::SphereDuality => outcome(seed, sphere_duality_case(rng, n)),
    }
}

/// Runs the trials in parallel; outcomes come back in seed order.
pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Result<SuiteReport> {
    if cfg.max_vertices == 0 || cfg.max_vertices > 12 {
        return Err(Error::Unsupported(format!("max-vertices must be in 1..=12, got {}", cfg.max_vertices)));
    }
    let outcomes = (0..cfg.trials as u64)
        .into_par_iter()
        .map(|i| run_trial(suite, cfg.max_vertices, cfg.seed.wrapping_add(i)))
        .collect();
    Ok(SuiteReport { suite, outcomes })
}
