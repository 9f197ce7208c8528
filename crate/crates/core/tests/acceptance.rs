//! Acceptance run: one line per criterion, exit status 1 if any fails.
//!
//! Every identity is checked twice where possible: once on objects built by
//! the small brute-force oracles below, and once against the library.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use polyprod::complex::random::{random_blocks, random_complex_with, random_ground, random_pair, RandomComplexConfig};
use polyprod::complex::{
    all_complexes, composition_complex, polyhedral_complex, rp2_six, IndexPair, SimplicialComplex, SimplicialPair,
    SimplicialPairSeq, VertexSet,
};
use polyprod::hochster::{alexander_duality_witness, hochster_composition_formula};
use polyprod::homology::{
    euler_characteristic, invariant_factors, reduced_homology, Coefficients, FgAbelianGroup, GradedGroup, Matrix,
};
use polyprod::spaces::{
    complement_identity_check, finite_product, sphere_pair_duality_check, sphere_pair_homology,
    substitution_identity_check, FiniteSpacePair, SpherePairSystem,
};
use polyprod::Error;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn vs(l: &[u32]) -> VertexSet {
    VertexSet::from_labels(l.iter().copied()).unwrap()
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn mixed_config<R: Rng>(rng: &mut R) -> RandomComplexConfig {
    if rng.gen_bool(0.5) {
        RandomComplexConfig::default()
    } else {
        RandomComplexConfig::sized()
    }
}

// ---------------------------------------------------------------------------
// Set-level oracles: a complex is a set of sorted label lists.

type Faces = BTreeSet<Vec<u32>>;

fn faces(k: &SimplicialComplex) -> Faces {
    k.faces().iter().map(|f| f.to_vec()).collect()
}

fn subsets_of(s: &[u32]) -> Vec<Vec<u32>> {
    (0u64..1 << s.len())
        .map(|mask| s.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect())
        .collect()
}

fn minus(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().copied().filter(|v| !b.contains(v)).collect()
}

fn union(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut u: Vec<u32> = a.iter().chain(b).copied().collect();
    u.sort_unstable();
    u.dedup();
    u
}

fn oracle_dual(k: &Faces, s: &[u32]) -> Faces {
    subsets_of(s).into_iter().filter(|sig| !k.contains(sig)).map(|sig| minus(s, &sig)).collect()
}

fn oracle_slice(k: &Faces, sigma: &[u32], omega: &[u32]) -> Faces {
    subsets_of(omega).into_iter().filter(|t| k.contains(&union(sigma, t))).collect()
}

fn oracle_join(parts: &[&Faces]) -> Faces {
    let mut acc: Faces = [Vec::new()].into();
    for p in parts {
        acc = acc.iter().flat_map(|a| p.iter().map(move |b| union(a, b))).collect();
    }
    acc
}

/// Literal union over faces `τ` of the joins of `X_k` (`k ∈ τ`) and `A_k`.
fn oracle_polyhedral(outer: &[u32], k: &Faces, xs: &[Faces], as_: &[Faces]) -> Faces {
    let mut out = Faces::new();
    for tau in k {
        let parts: Vec<&Faces> =
            outer.iter().enumerate().map(|(i, v)| if tau.contains(v) { &xs[i] } else { &as_[i] }).collect();
        out.extend(oracle_join(&parts));
    }
    out
}

fn full_simplex(ground: &[u32]) -> Faces {
    subsets_of(ground).into_iter().collect()
}

// ---------------------------------------------------------------------------
// Rank polynomials over Q, reduced degrees.

type Ranks = BTreeMap<i32, usize>;

fn q_ranks(k: &SimplicialComplex) -> Ranks {
    reduced_homology(k, Coefficients::Q).iter().map(|(d, g)| (d, g.rank())).collect()
}

/// Internal degrees (reduced + 1) add under the tensor product.
fn tensor_internal(factors: &[Ranks]) -> Ranks {
    let mut acc: Ranks = [(0, 1)].into();
    for f in factors {
        let mut next = Ranks::new();
        for (&a, &x) in &acc {
            for (&b, &y) in f {
                *next.entry(a + b).or_default() += x * y;
            }
        }
        acc = next;
    }
    acc.retain(|_, v| *v > 0);
    acc
}

fn shift(r: &Ranks, by: i32) -> Ranks {
    r.iter().map(|(d, v)| (d + by, *v)).collect()
}

// ---------------------------------------------------------------------------
// Criterion 1

fn criterion_1() -> Outcome {
    let expected = [2usize, 3, 6, 20, 168];
    let mut exhaustive = 0;
    for n in 0..=4u32 {
        let g = if n == 0 { VertexSet::EMPTY } else { VertexSet::range(1, n).unwrap() };
        let all = all_complexes(g);
        ensure(all.len() == expected[n as usize], || format!("{} complexes on {n} vertices", all.len()))?;
        if n == 0 {
            continue;
        }
        let labels = g.to_vec();
        let duals: Vec<SimplicialComplex> = all.iter().map(|k| k.dual(g).unwrap()).collect();
        for (k, d) in all.iter().zip(&duals) {
            ensure(faces(d) == oracle_dual(&faces(k), &labels), || format!("dual of {k:?}"))?;
            ensure(&d.dual(g).unwrap() == k, || format!("involution fails on {k:?}"))?;
        }
        for (i, k) in all.iter().enumerate() {
            for (j, l) in all.iter().enumerate() {
                let u = k.union(l).unwrap().dual(g).unwrap();
                let x = k.intersection(l).unwrap().dual(g).unwrap();
                ensure(u == duals[i].intersection(&duals[j]).unwrap(), || format!("De Morgan (union) on {k:?}, {l:?}"))?;
                ensure(x == duals[i].union(&duals[j]).unwrap(), || format!("De Morgan (intersection) on {k:?}, {l:?}"))?;
                exhaustive += 1;
            }
        }
    }
    let random = 10_000u64;
    (0..random).into_par_iter().try_for_each(|i| {
        let mut r = rng(1_000_000 + i);
        let g = random_ground(&mut r, 1, 8);
        let cfg = mixed_config(&mut r);
        let k = random_complex_with(&mut r, g, &cfg);
        let l = random_complex_with(&mut r, g, &cfg);
        let labels = g.to_vec();
        let (dk, dl) = (k.dual(g).unwrap(), l.dual(g).unwrap());
        ensure(faces(&dk) == oracle_dual(&faces(&k), &labels), || format!("dual of {k:?}"))?;
        ensure(dk.dual(g).unwrap() == k, || format!("involution fails on {k:?}"))?;
        let ku: Faces = faces(&k).union(&faces(&l)).cloned().collect();
        let ki: Faces = faces(&k).intersection(&faces(&l)).cloned().collect();
        let (odk, odl) = (oracle_dual(&faces(&k), &labels), oracle_dual(&faces(&l), &labels));
        ensure(oracle_dual(&ku, &labels) == odk.intersection(&odl).cloned().collect(), || "oracle De Morgan".into())?;
        ensure(k.union(&l).unwrap().dual(g).unwrap() == dk.intersection(&dl).unwrap(), || format!("De Morgan on {k:?}, {l:?}"))?;
        ensure(faces(&k.intersection(&l).unwrap().dual(g).unwrap()) == oracle_dual(&ki, &labels), || "dual of intersection".into())?;
        ensure(k.intersection(&l).unwrap().dual(g).unwrap() == dk.union(&dl).unwrap(), || format!("De Morgan on {k:?}, {l:?}"))
    })?;
    Ok(format!("{exhaustive} exhaustive pairs on <= 4 vertices, {random} random complexes on <= 8 vertices"))
}

// ---------------------------------------------------------------------------
// Criterion 2

struct BlockInstance {
    k: SimplicialComplex,
    pairs: SimplicialPairSeq,
    ls: Vec<SimplicialComplex>,
}

fn block_instance(seed: u64, max_blocks: usize, max_total: usize) -> BlockInstance {
    let mut r = rng(seed);
    let sizes = random_blocks(&mut r, max_blocks, max_total);
    let cfg = mixed_config(&mut r);
    let k = random_complex_with(&mut r, VertexSet::range(1, sizes.len() as u32).unwrap(), &cfg);
    let mut offset = 0u32;
    let mut ps = Vec::new();
    let mut ls = Vec::new();
    for &n in &sizes {
        let g = VertexSet::range(offset + 1, offset + n as u32).unwrap();
        offset += n as u32;
        ps.push(random_pair(&mut r, g, &cfg));
        ls.push(random_complex_with(&mut r, g, &cfg));
    }
    BlockInstance { k, pairs: SimplicialPairSeq::new(ps).unwrap(), ls }
}

fn random_index_pair<R: Rng>(r: &mut R, ground: VertexSet) -> IndexPair {
    IndexPair::from_ternary(ground, r.gen_range(0..3u64.pow(ground.len() as u32)))
}

fn criterion_2() -> Outcome {
    let trials = 1000u64;
    (0..trials).into_par_iter().try_for_each(|i| {
        let inst = block_instance(2_000_000 + i, 4, 10);
        let mut r = rng(2_500_000 + i);
        let outer = inst.k.ground().to_vec();
        let kf = faces(&inst.k);
        let xs: Vec<Faces> = inst.pairs.pairs().iter().map(|p| faces(p.x())).collect();
        let as_: Vec<Faces> = inst.pairs.pairs().iter().map(|p| faces(p.a())).collect();
        let poly = polyhedral_complex(&inst.k, &inst.pairs).unwrap();
        let opoly = oracle_polyhedral(&outer, &kf, &xs, &as_);
        ensure(faces(&poly) == opoly, || format!("polyhedral complex differs from the union of joins: {:?}", inst.k))?;

        // Slices of the dual against duals of slices, on the polyhedral complex.
        let s = poly.ground();
        let sl = s.to_vec();
        let dpoly = oracle_dual(&opoly, &sl);
        for _ in 0..8 {
            let p = random_index_pair(&mut r, s);
            if p.omega.is_empty() {
                continue;
            }
            let (sig, om) = (p.sigma.to_vec(), p.omega.to_vec());
            let lhs = oracle_dual(&oracle_slice(&opoly, &sig, &om), &om);
            let rhs = oracle_slice(&dpoly, &p.complement_sigma(s).to_vec(), &om);
            ensure(lhs == rhs, || format!("slice duality fails at {p}"))?;
            let lib = poly.slice(p).unwrap().dual(p.omega).unwrap();
            ensure(faces(&lib) == lhs, || format!("library slice duality differs at {p}"))?;
            ensure(lib == poly.dual(s).unwrap().slice(IndexPair { sigma: p.complement_sigma(s), omega: p.omega }).unwrap(), || {
                format!("library slice of dual differs at {p}")
            })?;
        }

        // Slice of a polyhedral complex is the polyhedral complex of the slices.
        for _ in 0..8 {
            let p = random_index_pair(&mut r, s);
            let (sig, om) = (p.sigma.to_vec(), p.omega.to_vec());
            let lhs = oracle_slice(&opoly, &sig, &om);
            let block = |f: &Faces, g: VertexSet| {
                oracle_slice(f, &p.sigma.intersection(g).to_vec(), &p.omega.intersection(g).to_vec())
            };
            let grounds: Vec<VertexSet> = inst.pairs.pairs().iter().map(SimplicialPair::ground).collect();
            let sx: Vec<Faces> = xs.iter().zip(&grounds).map(|(f, &g)| block(f, g)).collect();
            let sa: Vec<Faces> = as_.iter().zip(&grounds).map(|(f, &g)| block(f, g)).collect();
            ensure(lhs == oracle_polyhedral(&outer, &kf, &sx, &sa), || format!("slice of composition fails at {p}"))?;
            let lib = polyhedral_complex(&inst.k, &inst.pairs.slice(p).unwrap()).unwrap();
            ensure(faces(&lib) == lhs && lib == poly.slice(p).unwrap(), || format!("library slice of composition differs at {p}"))?;
        }

        // Dual of a composition is the composition of duals.
        let comp = composition_complex(&inst.k, &inst.ls).unwrap();
        let cground = comp.ground().to_vec();
        let deltas: Vec<Faces> = inst.ls.iter().map(|l| full_simplex(&l.ground().to_vec())).collect();
        let lf: Vec<Faces> = inst.ls.iter().map(faces).collect();
        let ocomp = oracle_polyhedral(&outer, &kf, &deltas, &lf);
        ensure(faces(&comp) == ocomp, || "composition differs from the union of joins".into())?;
        let ldual: Vec<Faces> = inst.ls.iter().zip(&lf).map(|(l, f)| oracle_dual(f, &l.ground().to_vec())).collect();
        let rhs = oracle_polyhedral(&outer, &oracle_dual(&kf, &outer), &deltas, &ldual);
        ensure(oracle_dual(&ocomp, &cground) == rhs, || format!("dual of composition fails for {:?}", inst.k))?;
        let lib_duals: Vec<SimplicialComplex> = inst.ls.iter().map(|l| l.dual(l.ground()).unwrap()).collect();
        let lib = composition_complex(&inst.k.dual(inst.k.ground()).unwrap(), &lib_duals).unwrap();
        ensure(lib == comp.dual(comp.ground()).unwrap() && faces(&lib) == rhs, || "library dual of composition differs".into())
    })?;
    Ok(format!("{trials} random instances, total ground <= 10, three identities each"))
}

// ---------------------------------------------------------------------------
// Criterion 3

type Tuples = BTreeSet<Vec<u8>>;

fn oracle_product(outer: &[u32], k: &Faces, pairs: &[(Vec<u8>, Vec<u8>)]) -> Tuples {
    let mut out = Tuples::new();
    for tau in k {
        let mut acc: Vec<Vec<u8>> = vec![Vec::new()];
        for (i, v) in outer.iter().enumerate() {
            let pts = if tau.contains(v) { &pairs[i].0 } else { &pairs[i].1 };
            acc = acc.iter().flat_map(|t| pts.iter().map(move |&p| [t.clone(), vec![p]].concat())).collect();
        }
        out.extend(acc);
    }
    out
}

fn random_points<R: Rng>(r: &mut R, max: u8) -> (Vec<u8>, Vec<u8>) {
    let x: Vec<u8> = (0..r.gen_range(0..=max)).collect();
    let a = x.iter().copied().filter(|_| r.gen_bool(0.5)).collect();
    (x, a)
}

fn to_finite(p: &(Vec<u8>, Vec<u8>)) -> FiniteSpacePair<u8> {
    FiniteSpacePair::new(p.0.clone(), p.1.clone()).unwrap()
}

fn criterion_3() -> Outcome {
    let (complement_trials, substitution_trials) = (1000u64, 500u64);
    (0..complement_trials).into_par_iter().try_for_each(|i| {
        let mut r = rng(3_000_000 + i);
        let g = random_ground(&mut r, 1, 4);
        let cfg = mixed_config(&mut r);
        let k = match i % 10 {
            0 => SimplicialComplex::void(g),
            1 => SimplicialComplex::simplex(g),
            _ => random_complex_with(&mut r, g, &cfg),
        };
        let pairs: Vec<(Vec<u8>, Vec<u8>)> = (0..g.len()).map(|_| random_points(&mut r, 3)).collect();
        let outer = g.to_vec();
        let kf = faces(&k);
        let z = oracle_product(&outer, &kf, &pairs);
        let full = oracle_product(&outer, &full_simplex(&outer), &pairs);
        let lhs: Tuples = full.difference(&z).cloned().collect();
        let comp: Vec<(Vec<u8>, Vec<u8>)> = pairs.iter().map(|(x, a)| (x.clone(), minus_u8(x, a))).collect();
        let rhs = oracle_product(&outer, &oracle_dual(&kf, &outer), &comp);
        ensure(lhs == rhs, || format!("complement identity fails on {k:?}"))?;
        let fin: Vec<FiniteSpacePair<u8>> = pairs.iter().map(to_finite).collect();
        ensure(finite_product(&k, &fin).unwrap() == z, || "library product differs from oracle".into())?;
        let v = complement_identity_check(&k, &fin).unwrap();
        ensure(v.holds() && v.lhs == lhs, || format!("library complement check fails on {k:?}"))?;
        // Taking the complement twice returns the original set.
        let twice = oracle_product(&outer, &oracle_dual(&oracle_dual(&kf, &outer), &outer), &pairs);
        ensure(twice == z, || "double complement differs".into())
    })?;

    (0..substitution_trials).into_par_iter().try_for_each(|i| {
        let mut r = rng(3_500_000 + i);
        let m = r.gen_range(1..=3u32);
        let cfg = mixed_config(&mut r);
        let k = random_complex_with(&mut r, VertexSet::range(1, m).unwrap(), &cfg);
        let mut offset = 0u32;
        let mut inner = Vec::new();
        for _ in 0..m {
            let n = r.gen_range(1..=2u32);
            inner.push(random_pair(&mut r, VertexSet::range(offset + 1, offset + n).unwrap(), &cfg));
            offset += n;
        }
        let leaves: Vec<(Vec<u8>, Vec<u8>)> = (0..offset).map(|_| random_points(&mut r, 2)).collect();
        let inner = SimplicialPairSeq::new(inner).unwrap();
        let outer = k.ground().to_vec();

        // Y_k, B_k as tuple sets over the block's leaves, then the nested product.
        let mut blocks = Vec::new();
        for p in inner.pairs() {
            let g = p.ground().to_vec();
            let local: Vec<(Vec<u8>, Vec<u8>)> = g.iter().map(|&v| leaves[v as usize - 1].clone()).collect();
            blocks.push((oracle_product(&g, &faces(p.x()), &local), oracle_product(&g, &faces(p.a()), &local)));
        }
        let mut lhs = Tuples::new();
        for tau in faces(&k) {
            let mut acc: Vec<Vec<u8>> = vec![Vec::new()];
            for (i, v) in outer.iter().enumerate() {
                let set = if tau.contains(v) { &blocks[i].0 } else { &blocks[i].1 };
                acc = acc.iter().flat_map(|t| set.iter().map(move |s| [t.clone(), s.clone()].concat())).collect();
            }
            lhs.extend(acc);
        }
        let xs: Vec<Faces> = inner.pairs().iter().map(|p| faces(p.x())).collect();
        let as_: Vec<Faces> = inner.pairs().iter().map(|p| faces(p.a())).collect();
        let poly = oracle_polyhedral(&outer, &faces(&k), &xs, &as_);
        let ground: Vec<u32> = (1..=offset).collect();
        let rhs = oracle_product(&ground, &poly, &leaves);
        ensure(lhs == rhs, || format!("substitution identity fails on {k:?}"))?;
        let fin: Vec<FiniteSpacePair<u8>> = leaves.iter().map(to_finite).collect();
        let v = substitution_identity_check(&k, &inner, &fin).unwrap();
        ensure(v.holds() && v.rhs == rhs, || format!("library substitution check fails on {k:?}"))
    })?;
    Ok(format!("{complement_trials} complement instances, {substitution_trials} substitution instances"))
}

fn minus_u8(x: &[u8], a: &[u8]) -> Vec<u8> {
    x.iter().copied().filter(|p| !a.contains(p)).collect()
}

// ---------------------------------------------------------------------------
// Criterion 4

fn rp2_family() -> Vec<SimplicialComplex> {
    let rp2 = rp2_six();
    let g7 = VertexSet::range(1, 7).unwrap();
    let cone_facets: Vec<VertexSet> = rp2.facets().iter().map(|f| f.with(7)).collect();
    vec![
        rp2.clone(),
        SimplicialComplex::from_facets(g7, &cone_facets).unwrap(),
        rp2.with_ground(g7).unwrap(),
    ]
}

fn alexander_corpus() -> Vec<SimplicialComplex> {
    let mut corpus = rp2_family();
    let mut i = 0u64;
    while corpus.len() < 500 {
        let mut r = rng(4_000_000 + i);
        i += 1;
        let g = random_ground(&mut r, 1, 7);
        let cfg = if i.is_multiple_of(4) { RandomComplexConfig::default() } else { RandomComplexConfig::sized() };
        corpus.push(random_complex_with(&mut r, g, &cfg));
    }
    corpus
}

fn criterion_4() -> Outcome {
    let corpus = alexander_corpus();
    let results: Vec<(usize, usize)> = corpus
        .par_iter()
        .map(|k| {
            let s = k.ground();
            let mut checked = 0;
            let mut torsion = 0;
            for p in IndexPair::all(s).filter(|p| !p.omega.is_empty()) {
                let w = alexander_duality_witness(k, p, s).map_err(|e| e.to_string())?;
                ensure(w.is_signed_permutation(), || format!("not a signed permutation: {k:?} at {p}"))?;
                ensure(w.is_chain_map(), || format!("not a chain map: {k:?} at {p}"))?;
                ensure(w.groups_agree(), || format!("groups differ: {k:?} at {p}"))?;
                checked += 1;
                if w.homology.iter().any(|(_, g)| !g.torsion().is_empty()) {
                    torsion += 1;
                }
            }
            Ok((checked, torsion))
        })
        .collect::<Result<_, String>>()?;
    let checked: usize = results.iter().map(|r| r.0).sum();
    let torsion: usize = results.iter().map(|r| r.1).sum();
    ensure(torsion >= 3, || format!("only {torsion} slices with torsion"))?;
    Ok(format!("{} complexes, {checked} pairs with omega nonempty, {torsion} with torsion", corpus.len()))
}

// ---------------------------------------------------------------------------
// Criterion 5

/// Outer complex on `[m]` and factors on consecutive blocks. With `homological`
/// set, every factor is redrawn until its reduced homology is nonzero, so the
/// composition itself has homology.
fn composition_instance(seed: u64, max_total: usize, homological: bool) -> (SimplicialComplex, Vec<SimplicialComplex>) {
    let mut r = rng(seed);
    let sizes = random_blocks(&mut r, 3, max_total);
    let cfg = RandomComplexConfig::sized();
    let draw = |r: &mut ChaCha8Rng, g: VertexSet| {
        for _ in 0..200 {
            let x = random_complex_with(r, g, &cfg);
            if !homological || !reduced_homology(&x, Coefficients::Q).is_zero() {
                return x;
            }
        }
        SimplicialComplex::simplex_boundary(g)
    };
    let k = draw(&mut r, VertexSet::range(1, sizes.len() as u32).unwrap());
    let mut offset = 0u32;
    let ls = sizes
        .iter()
        .map(|&n| {
            let g = VertexSet::range(offset + 1, offset + n as u32).unwrap();
            offset += n as u32;
            draw(&mut r, g)
        })
        .collect();
    (k, ls)
}

fn is_free(k: &SimplicialComplex) -> bool {
    reduced_homology(k, Coefficients::Z).is_free()
}

fn free_compositions(count: usize, seed: u64, max_total: usize) -> Vec<(SimplicialComplex, Vec<SimplicialComplex>)> {
    let mut out = Vec::new();
    let mut i = 0u64;
    while out.len() < count {
        let (k, ls) = composition_instance(seed + i, max_total, i.is_multiple_of(2));
        i += 1;
        if is_free(&k) && ls.iter().all(is_free) {
            out.push((k, ls));
        }
    }
    out
}

fn integral_ranks(k: &SimplicialComplex) -> Result<Ranks, String> {
    let h = reduced_homology(k, Coefficients::Z);
    ensure(h.is_free(), || format!("torsion in {k:?}"))?;
    Ok(h.iter().map(|(d, g)| (d, g.rank())).collect())
}

fn homology_sphere_list() -> Vec<SimplicialComplex> {
    let mut list: Vec<SimplicialComplex> =
        (1..=4).map(|n| SimplicialComplex::simplex_boundary(VertexSet::range(1, n).unwrap())).collect();
    for n in 4..=5u32 {
        let edges: Vec<VertexSet> = (1..=n).map(|i| vs(&[i, i % n + 1])).collect();
        list.push(SimplicialComplex::from_facets(VertexSet::range(1, n).unwrap(), &edges).unwrap());
    }
    list
}

fn criterion_5() -> Outcome {
    let instances = free_compositions(200, 5_000_000, 9);
    let nonzero = instances
        .par_iter()
        .map(|(k, ls)| {
            let comp = composition_complex(k, ls).unwrap();
            let outer = k.ground().to_vec();
            let deltas: Vec<Faces> = ls.iter().map(|l| full_simplex(&l.ground().to_vec())).collect();
            let lf: Vec<Faces> = ls.iter().map(faces).collect();
            ensure(faces(&comp) == oracle_polyhedral(&outer, &faces(k), &deltas, &lf), || "composition differs".into())?;
            let mut factors = vec![shift(&integral_ranks(k)?, 1)];
            for l in ls {
                factors.push(shift(&integral_ranks(l)?, 1));
            }
            let formula = shift(&tensor_internal(&factors), -(factors.len() as i32));
            // Degrees of a join: sum of reduced degrees plus (number of factors - 1).
            let formula: Ranks = formula.iter().map(|(d, v)| (d + factors.len() as i32 - 1, *v)).collect();
            let direct = integral_ranks(&comp)?;
            ensure(direct == formula, || format!("formula {formula:?} but direct {direct:?} for {k:?} {ls:?}"))?;
            Ok(usize::from(!direct.is_empty()))
        })
        .collect::<Result<Vec<_>, String>>()?
        .into_iter()
        .sum::<usize>();

    // Compositions of homology spheres are homology spheres.
    let spheres = homology_sphere_list();
    let mut closure = 0;
    for k in &spheres {
        let m = k.ground().len();
        for start in 0..spheres.len() {
            let ls: Vec<SimplicialComplex> = (0..m).map(|i| spheres[(start + i) % spheres.len()].clone()).collect();
            let total: usize = ls.iter().map(|l| l.ground().len()).sum();
            if total > 12 {
                continue;
            }
            let mut offset = 0u32;
            let moved: Vec<SimplicialComplex> = ls
                .iter()
                .map(|l| {
                    let x = l.shift_to_block(offset).unwrap();
                    offset += l.ground().len() as u32;
                    x
                })
                .collect();
            let h = reduced_homology(&composition_complex(k, &moved).unwrap(), Coefficients::Z);
            let expected: i32 = std::iter::once(k).chain(&ls).map(|x| x.dim().unwrap()).sum::<i32>() + m as i32;
            ensure(h == GradedGroup::concentrated(expected, FgAbelianGroup::free(1)), || {
                format!("{k:?} composed with {ls:?} gives {h:?}")
            })?;
            closure += 1;
        }
    }
    Ok(format!(
        "{} free instances ({nonzero} with nonzero homology), {closure} homology-sphere compositions",
        instances.len()
    ))
}

// ---------------------------------------------------------------------------
// Criterion 6

fn criterion_6() -> Outcome {
    let mut instances = Vec::new();
    let mut i = 0u64;
    while instances.len() < 50 {
        let (k, ls) = composition_instance(6_000_000 + i, 8, i.is_multiple_of(2));
        i += 1;
        if ls.iter().all(|l| !l.is_void()) {
            instances.push((k, ls));
        }
    }
    let pieces: Vec<(usize, usize)> = instances
        .par_iter()
        .map(|(k, ls)| {
            let comp = composition_complex(k, ls).unwrap();
            let ground = comp.ground();
            let report = match hochster_composition_formula(k, ls, Coefficients::Z) {
                Err(Error::TorsionUnderIntegers { .. }) => hochster_composition_formula(k, ls, Coefficients::Q),
                r => r,
            }
            .map_err(|e| e.to_string())?;
            ensure(report.len() == 3usize.pow(ground.len() as u32), || "missing pieces".into())?;
            ensure(report.iter().all(|r| r.agrees()), || format!("library piece formula fails for {k:?} {ls:?}"))?;

            // Independent recomputation over Q.
            let outer = k.ground().to_vec();
            let mut nonzero = 0;
            for p in IndexPair::all(ground) {
                let mut sigma_hat = VertexSet::EMPTY;
                let mut omega_hat = VertexSet::EMPTY;
                let mut factors = Vec::new();
                for (l, &v) in ls.iter().zip(&outer) {
                    let g = l.ground();
                    let local = IndexPair { sigma: p.sigma.intersection(g), omega: p.omega.intersection(g) };
                    if !local.omega.is_empty() {
                        omega_hat = omega_hat.with(v);
                        factors.push(shift(&q_ranks(&l.slice(local).unwrap()), 1));
                    } else if !l.contains(local.sigma) {
                        sigma_hat = sigma_hat.with(v);
                    }
                }
                factors.insert(0, shift(&q_ranks(&k.slice(IndexPair { sigma: sigma_hat, omega: omega_hat }).unwrap()), 1));
                let formula = tensor_internal(&factors);
                let direct = shift(&q_ranks(&comp.slice(p).unwrap()), 1);
                ensure(formula == direct, || format!("piece {p}: formula {formula:?}, direct {direct:?}"))?;
                nonzero += usize::from(!direct.is_empty());
            }
            Ok((report.len(), nonzero))
        })
        .collect::<Result<Vec<_>, String>>()?;
    let nonzero: usize = pieces.iter().map(|p| p.1).sum();
    let pieces: usize = pieces.iter().map(|p| p.0).sum();
    Ok(format!("{} instances, {pieces} pieces ({nonzero} nonzero), total ground <= 8", instances.len()))
}

// ---------------------------------------------------------------------------
// Criterion 7: cellular model of products of sphere pairs.

/// Faces of `∂Δ^{r+2}` as bitmasks over `r + 3` points, and which of them lie
/// in `∂Δ^{q+1}` on the first `q + 2` points.
fn sphere_faces(r: u32, q: u32) -> (Vec<u64>, Vec<bool>) {
    let n = r + 3;
    let full = (1u64 << n) - 1;
    let small = (1u64 << (q + 2)) - 1;
    let faces: Vec<u64> = (1..full).collect();
    let in_a = faces.iter().map(|&f| f & !small == 0 && f != small).collect();
    (faces, in_a)
}

fn face_boundary(f: u64) -> Vec<(u64, i64)> {
    let mut out = Vec::new();
    let mut sign = 1;
    for i in 0..64 {
        if f >> i & 1 == 1 {
            let g = f & !(1 << i);
            if g != 0 {
                out.push((g, sign));
            }
            sign = -sign;
        }
    }
    out
}

/// Unreduced integral homology of `𝒵(K; ∂Δ^{r+2}, ∂Δ^{q+1})` from the
/// product cell structure. Also returns the number of path components of the
/// 1-skeleton, counted with a union-find.
fn cellular_homology(k: &SimplicialComplex, params: &[(u32, u32)]) -> (GradedGroup, usize) {
    let outer = k.ground().to_vec();
    let spheres: Vec<(Vec<u64>, Vec<bool>)> = params.iter().map(|&(r, q)| sphere_faces(r, q)).collect();
    let mut cells: Vec<Vec<u64>> = vec![Vec::new()];
    let mut taus: Vec<VertexSet> = vec![VertexSet::EMPTY];
    for (i, (fs, in_a)) in spheres.iter().enumerate() {
        let mut next = Vec::new();
        let mut next_tau = Vec::new();
        for (c, &tau) in cells.iter().zip(&taus) {
            for (&f, &a) in fs.iter().zip(in_a) {
                let t = if a { tau } else { tau.with(outer[i]) };
                if k.contains(t) {
                    let mut c = c.clone();
                    c.push(f);
                    next.push(c);
                    next_tau.push(t);
                }
            }
        }
        cells = next;
        taus = next_tau;
    }
    if k.is_void() {
        cells.clear();
    }
    let dim = |c: &[u64]| c.iter().map(|f| f.count_ones() as usize - 1).sum::<usize>();
    let top = cells.iter().map(|c| dim(c)).max();
    let Some(top) = top else { return (GradedGroup::zero(), 0) };
    let mut by_dim: Vec<Vec<Vec<u64>>> = vec![Vec::new(); top + 1];
    for c in cells {
        by_dim[dim(&c)].push(c);
    }
    let index: Vec<HashMap<Vec<u64>, usize>> =
        by_dim.iter().map(|cs| cs.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect()).collect();
    let boundary = |d: usize| -> Matrix<i64> {
        let mut m = Matrix::zeros(by_dim[d - 1].len(), by_dim[d].len());
        for (j, c) in by_dim[d].iter().enumerate() {
            let mut before = 0;
            for (slot, &f) in c.iter().enumerate() {
                let eps = if before % 2 == 0 { 1 } else { -1 };
                for (g, s) in face_boundary(f) {
                    let mut face = c.clone();
                    face[slot] = g;
                    let i = index[d - 1][&face];
                    m.set(i, j, m.get(i, j) + eps * s);
                }
                before += f.count_ones() as usize - 1;
            }
        }
        m
    };
    let factors: Vec<Vec<BigInt>> = (0..=top + 1)
        .map(|d| if d == 0 || d > top { Vec::new() } else { invariant_factors(&boundary(d)) })
        .collect();
    let mut h = GradedGroup::zero();
    for d in 0..=top {
        let rank = by_dim[d].len() - factors[d].len() - factors[d + 1].len();
        let torsion = factors[d + 1].iter().filter(|x| !x.is_one()).cloned();
        h.set(d as i32, FgAbelianGroup::new(rank, torsion));
    }

    let mut parent: Vec<usize> = (0..by_dim[0].len()).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    if top >= 1 {
        for c in &by_dim[1] {
            let ends: Vec<usize> = c
                .iter()
                .enumerate()
                .filter(|(_, f)| f.count_ones() == 2)
                .flat_map(|(slot, &f)| {
                    face_boundary(f).into_iter().map(move |(g, _)| {
                        let mut e = c.clone();
                        e[slot] = g;
                        e
                    })
                })
                .map(|e| index[0][&e])
                .collect();
            let (a, b) = (find(&mut parent, ends[0]), find(&mut parent, ends[1]));
            parent[a] = b;
        }
    }
    let components = (0..parent.len()).filter(|&x| find(&mut parent, x) == x).count();
    (h, components)
}

fn graded(items: &[(i32, usize)]) -> GradedGroup {
    let mut g = GradedGroup::zero();
    for &(d, r) in items {
        g.set(d, FgAbelianGroup::free(r));
    }
    g
}

fn sphere_corpus() -> Vec<SimplicialComplex> {
    let mut corpus = vec![
        rp2_six(),
        SimplicialComplex::void(vs(&[1, 2, 3])),
        SimplicialComplex::empty_face(vs(&[1, 2])),
        SimplicialComplex::simplex(vs(&[1, 2, 3, 4])),
        SimplicialComplex::simplex_boundary(vs(&[1, 2, 3, 4, 5])),
    ];
    let mut i = 0u64;
    while corpus.len() < 200 {
        let mut r = rng(7_000_000 + i);
        i += 1;
        let g = random_ground(&mut r, 1, 6);
        let cfg = mixed_config(&mut r);
        corpus.push(random_complex_with(&mut r, g, &cfg));
    }
    corpus
}

fn random_spheres<R: Rng>(r: &mut R, m: usize, max_r: u32) -> SpherePairSystem {
    SpherePairSystem::new((0..m).map(|_| {
        let rr = r.gen_range(0..=max_r) as i64;
        (rr, r.gen_range(0..=rr))
    }))
    .unwrap()
}

fn criterion_7() -> Outcome {
    // The two fixed cases, each against the cellular model.
    let e1 = SimplicialComplex::empty_face(vs(&[1]));
    let s0 = SpherePairSystem::new([(1, 0)]).unwrap();
    let rep = sphere_pair_homology(&e1, &s0).unwrap();
    let (cell, comps) = cellular_homology(&e1, s0.params());
    ensure(rep.total == graded(&[(0, 2)]) && cell == rep.total && comps == 2, || format!("S^0 case: {:?}", rep.total))?;

    let bd = SimplicialComplex::simplex_boundary(vs(&[1, 2]));
    let four = SpherePairSystem::new([(1, 0), (1, 0)]).unwrap();
    let rep = sphere_pair_homology(&bd, &four).unwrap();
    let (cell, comps) = cellular_homology(&bd, four.params());
    let expected = graded(&[(0, 1), (1, 1), (2, 4)]);
    ensure(rep.total == expected && cell == expected && comps == 1, || format!("four-sphere case: {:?}", rep.total))?;

    // Duality over the corpus.
    let corpus = sphere_corpus();
    corpus.par_iter().enumerate().try_for_each(|(i, k)| {
        let mut r = rng(7_500_000 + i as u64);
        let sys = random_spheres(&mut r, k.ground().len(), 3);
        let v = sphere_pair_duality_check(k, &sys).map_err(|e| e.to_string())?;
        ensure(v.space.ledger_consistent() && v.complement.ledger_consistent(), || "ledger inconsistent".into())?;
        ensure(v.holds(), || format!("duality fails for {k:?} with {sys}: {:?}", v.mismatches))
    })?;

    // The report against the cellular model on small random instances.
    let mut cross = 0;
    for i in 0..60u64 {
        let mut r = rng(7_800_000 + i);
        let m = r.gen_range(1..=3);
        let max_r = if m == 3 { 0 } else { 2 };
        let g = VertexSet::range(1, m).unwrap();
        let cfg = mixed_config(&mut r);
        let k = random_complex_with(&mut r, g, &cfg);
        let sys = random_spheres(&mut r, m as usize, max_r);
        let rep = sphere_pair_homology(&k, &sys).unwrap();
        let (cell, comps) = cellular_homology(&k, sys.params());
        ensure(rep.total == cell, || format!("{k:?} with {sys}: report {:?}, cellular {cell:?}", rep.total))?;
        ensure(rep.total.get(0).rank() == comps, || "degree 0 rank differs from component count".into())?;
        cross += 1;
    }
    Ok(format!("2 fixed cases, {} corpus complexes, {cross} cellular cross-checks", corpus.len()))
}

// ---------------------------------------------------------------------------
// Criterion 8

fn consistent(k: &SimplicialComplex) -> Result<(), String> {
    let z = reduced_homology(k, Coefficients::Z);
    let q = reduced_homology(k, Coefficients::Q);
    ensure(z.euler_characteristic() == euler_characteristic(k), || format!("Euler characteristic of {k:?}"))?;
    let f = k.f_vector();
    let alternating: i64 = f.iter().enumerate().map(|(i, &n)| if i % 2 == 0 { -(n as i64) } else { n as i64 }).sum();
    ensure(alternating == euler_characteristic(k), || format!("f-vector Euler characteristic of {k:?}"))?;
    let degrees: BTreeSet<i32> = z.degrees().chain(q.degrees()).collect();
    for &d in &degrees {
        ensure(z.get(d).rank() == q.get(d).rank(), || format!("rational rank in degree {d} of {k:?}"))?;
    }
    for p in [2u64, 3] {
        let fp = reduced_homology(k, Coefficients::prime(p).unwrap());
        let lo = degrees.iter().chain(fp.degrees().collect::<Vec<_>>().iter()).min().copied().unwrap_or(0);
        let hi = degrees.iter().chain(fp.degrees().collect::<Vec<_>>().iter()).max().copied().unwrap_or(0);
        for d in lo..=hi + 1 {
            let expected = z.get(d).rank() + z.get(d).p_torsion_count(p) + z.get(d - 1).p_torsion_count(p);
            ensure(fp.get(d).rank() == expected, || format!("F_{p} rank in degree {d} of {k:?}"))?;
        }
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    for n in 1..=7u32 {
        let h = reduced_homology(&SimplicialComplex::simplex_boundary(VertexSet::range(1, n).unwrap()), Coefficients::Z);
        ensure(h == GradedGroup::concentrated(n as i32 - 2, FgAbelianGroup::free(1)), || format!("boundary of {n}-simplex: {h:?}"))?;
    }
    let h = reduced_homology(&rp2_six(), Coefficients::Z);
    let z2 = FgAbelianGroup::new(0, [BigInt::from(2)]);
    ensure(h == GradedGroup::concentrated(1, z2), || format!("RP2: {h:?}"))?;

    let mut touched: Vec<SimplicialComplex> = Vec::new();
    for n in 1..=4u32 {
        touched.extend(all_complexes(VertexSet::range(1, n).unwrap()));
    }
    touched.extend(alexander_corpus());
    touched.extend(sphere_corpus());
    for (k, ls) in free_compositions(200, 5_000_000, 9) {
        touched.push(composition_complex(&k, &ls).unwrap());
        touched.push(k);
        touched.extend(ls);
    }
    touched.par_iter().try_for_each(consistent)?;
    Ok(format!("boundaries n <= 7, RP2 = Z/2 in degree 1, {} complexes consistent", touched.len()))
}

// ---------------------------------------------------------------------------

fn main() {
    let criteria: [(u32, &str, fn() -> Outcome); 8] = [
        (1, "dual involution and De Morgan laws", criterion_1),
        (2, "slice duality, slices and duals of compositions", criterion_2),
        (3, "finite-model complement and substitution identities", criterion_3),
        (4, "combinatorial Alexander duality with chain witness", criterion_4),
        (5, "homology of compositions", criterion_5),
        (6, "piecewise bigraded composition formula", criterion_6),
        (7, "sphere-pair homology and complement duality", criterion_7),
        (8, "homology engine sanity", criterion_8),
    ];
    let filter: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    for (n, name, run) in criteria {
        if !filter.is_empty() && !filter.contains(&n) {
            continue;
        }
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {n} PASS: {name} ({detail}; {secs:.1}s)"),
            Err(e) => {
                failed += 1;
                println!("criterion {n} FAIL: {name} ({e}; {secs:.1}s)");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
