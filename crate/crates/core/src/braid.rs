//! Hurwitz action of the three-strand braid group on triples, at four
//! levels: G2 matrices, norm-3 octonions, the invariants `p1..p4`, and
//! points `(x, y, z)` of a symmetric Fricke cubic.

use std::collections::{HashMap, HashSet};
use std::hash::Hash;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::fricke::{p_invariants_unchecked, phi, phi_inv, PInvariants, SurfacePoint};
use crate::g2::{conj_map_unchecked, G2Element};
use crate::octonion::{half_unit_unchecked, Vector7};
use crate::scalar::{Complex, Rational, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BraidGen {
    B1,
    B1Inv,
    B2,
    B2Inv,
}

impl BraidGen {
    pub const ALL: [BraidGen; 4] = [BraidGen::B1, BraidGen::B1Inv, BraidGen::B2, BraidGen::B2Inv];

    pub fn inverse(self) -> Self {
        match self {
            BraidGen::B1 => BraidGen::B1Inv,
            BraidGen::B1Inv => BraidGen::B1,
            BraidGen::B2 => BraidGen::B2Inv,
            BraidGen::B2Inv => BraidGen::B2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BraidGen::B1 => "b1",
            BraidGen::B1Inv => "b1^-1",
            BraidGen::B2 => "b2",
            BraidGen::B2Inv => "b2^-1",
        }
    }
}

/// A word in the braid generators, applied left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BraidWord(pub Vec<BraidGen>);

impl BraidWord {
    pub fn new(gens: Vec<BraidGen>) -> Self {
        BraidWord(gens)
    }

    /// Cancel adjacent inverse pairs until none remain.
    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<BraidGen> = Vec::with_capacity(self.0.len());
        for &g in &self.0 {
            if out.last() == Some(&g.inverse()) {
                out.pop();
            } else {
                out.push(g);
            }
        }
        BraidWord(out)
    }

    pub fn inverse(&self) -> Self {
        BraidWord(self.0.iter().rev().map(|g| g.inverse()).collect())
    }

    pub fn apply<T>(&self, state: &T, act: impl Fn(BraidGen, &T) -> T) -> T
    where
        T: Clone,
    {
        self.0.iter().fold(state.clone(), |s, &g| act(g, &s))
    }
}

/// Hurwitz moves on a triple of group elements:
/// `b1: (g1, g2, g3) -> (g2, g2^-1 g1 g2, g3)`,
/// `b2: (g1, g2, g3) -> (g1, g3, g3^-1 g2 g3)`.
pub fn braid_triple<S: Scalar>(gen: BraidGen, t: &[G2Element<S>; 3]) -> [G2Element<S>; 3] {
    let [g1, g2, g3] = t;
    let conj = |by: &G2Element<S>, x: &G2Element<S>| by.inverse().compose(x).compose(by);
    match gen {
        BraidGen::B1 => [g2.clone(), conj(g2, g1), g3.clone()],
        BraidGen::B1Inv => [g1.compose(g2).compose(&g1.inverse()), g1.clone(), g3.clone()],
        BraidGen::B2 => [g1.clone(), g3.clone(), conj(g3, g2)],
        BraidGen::B2Inv => [g1.clone(), g2.compose(g3).compose(&g2.inverse()), g2.clone()],
    }
}

/// The same moves on the octonions `v_i` with `g_i = T_{a(v_i)}`:
/// `b1: (v1, v2, v3) -> (v2, conj(w2) v1 w2, v3)` with `w2 = (1 + v2)/2`.
pub fn braid_oct<S: Scalar>(gen: BraidGen, t: &[Vector7<S>; 3], tol: f64) -> Result<[Vector7<S>; 3]> {
    for v in t {
        v.check_norm_three(tol)?;
    }
    Ok(braid_oct_unchecked(gen, t))
}

fn braid_oct_unchecked<S: Scalar>(gen: BraidGen, t: &[Vector7<S>; 3]) -> [Vector7<S>; 3] {
    let [v1, v2, v3] = t;
    // conj(w) x w, the action of T_w^{-1}
    let pull = |w_of: &Vector7<S>, x: &Vector7<S>| {
        let w = half_unit_unchecked(w_of);
        w.conj().mul(&x.to_octonion()).mul(&w).imag()
    };
    // w x conj(w), the action of T_w
    let push = |w_of: &Vector7<S>, x: &Vector7<S>| {
        let w = half_unit_unchecked(w_of);
        w.mul(&x.to_octonion()).mul(&w.conj()).imag()
    };
    match gen {
        BraidGen::B1 => [v2.clone(), pull(v2, v1), v3.clone()],
        BraidGen::B1Inv => [push(v1, v2), v1.clone(), v3.clone()],
        BraidGen::B2 => [v1.clone(), v3.clone(), pull(v3, v2)],
        BraidGen::B2Inv => [v1.clone(), push(v2, v3), v2.clone()],
    }
}

/// Induced action on `(p1, p2, p3, p4)`.
pub fn braid_p<S: Scalar>(gen: BraidGen, p: &PInvariants<S>) -> PInvariants<S> {
    let (p1, p2, p3, p4) = (p.p1.clone(), p.p2.clone(), p.p3.clone(), p.p4.clone());
    let half = |x: S| x.div_int(2);
    match gen {
        BraidGen::B1 => PInvariants {
            p1: half(p4.clone() + p1.clone() * p3.clone() - p2.clone()),
            p2: p1.clone(),
            p3: p3.clone(),
            p4: half(p4 + p2.scale(3) - p1 * p3),
        },
        BraidGen::B1Inv => PInvariants {
            p1: p2.clone(),
            p2: half(p4.clone() - p1.clone() + p2.clone() * p3.clone()),
            p3: p3.clone(),
            p4: half(p1.scale(3) + p4 - p2 * p3),
        },
        BraidGen::B2 => PInvariants {
            p1: p1.clone(),
            p2: half(p4.clone() + p1.clone() * p2.clone() - p3.clone()),
            p3: p2.clone(),
            p4: half(p4 + p3.scale(3) - p1 * p2),
        },
        BraidGen::B2Inv => PInvariants {
            p1: p1.clone(),
            p2: p3.clone(),
            p3: half(p4.clone() - p2.clone() + p1.clone() * p3.clone()),
            p4: half(p2.scale(3) + p4 - p1 * p3),
        },
    }
}

/// Action on a symmetric Fricke cubic with parameter `b`:
/// `b1(x, y, z) = (x, -b - z - xy, y)`, `b2(x, y, z) = (z, y, -b - x - yz)`.
pub fn braid_xyz<S: Scalar>(gen: BraidGen, pt: &SurfacePoint<S>, b: &S) -> SurfacePoint<S> {
    let (x, y, z) = (pt.x.clone(), pt.y.clone(), pt.z.clone());
    let b = b.clone();
    match gen {
        BraidGen::B1 => SurfacePoint { y: -b - z.clone() - x.clone() * y.clone(), x, z: y },
        BraidGen::B1Inv => SurfacePoint { z: -b - y - x.clone() * z.clone(), x, y: z },
        BraidGen::B2 => SurfacePoint { z: -b - x.clone() - y.clone() * z.clone(), x: z, y },
        BraidGen::B2Inv => SurfacePoint { x: -b - z.clone() - x.clone() * y.clone(), y, z: x },
    }
}

/// The swap `(x, y, z) -> (x, z, y)`.
pub fn swap_yz<S: Scalar>(pt: &SurfacePoint<S>) -> SurfacePoint<S> {
    SurfacePoint { x: pt.x.clone(), y: pt.z.clone(), z: pt.y.clone() }
}

/// A triple in the class, carrying both the octonions and the matrices.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassTriple<S> {
    pub v: [Vector7<S>; 3],
    pub g: [G2Element<S>; 3],
}

impl<S: Scalar> ClassTriple<S> {
    pub fn new(v: [Vector7<S>; 3], tol: f64) -> Result<Self> {
        for x in &v {
            x.check_norm_three(tol)?;
        }
        let g = [conj_map_unchecked(&v[0]), conj_map_unchecked(&v[1]), conj_map_unchecked(&v[2])];
        Ok(ClassTriple { v, g })
    }

    pub fn invariants(&self) -> PInvariants<S> {
        p_invariants_unchecked(&self.v[0], &self.v[1], &self.v[2])
    }

    pub fn product(&self) -> G2Element<S> {
        self.g[0].compose(&self.g[1]).compose(&self.g[2])
    }

    /// Braid the matrices and transport the octonions along: the new
    /// `v` is the image of the old one under the conjugating element.
    pub fn braid(&self, gen: BraidGen) -> Self {
        let g = braid_triple(gen, &self.g);
        let [v1, v2, v3] = &self.v;
        let [g1, g2, g3] = &self.g;
        let v = match gen {
            BraidGen::B1 => [v2.clone(), g2.inverse().apply(v1), v3.clone()],
            BraidGen::B1Inv => [g1.apply(v2), v1.clone(), v3.clone()],
            BraidGen::B2 => [v1.clone(), v3.clone(), g3.inverse().apply(v2)],
            BraidGen::B2Inv => [v1.clone(), g2.apply(v3), v2.clone()],
        };
        ClassTriple { v, g }
    }
}

/// Hashable canonical form of a scalar: exact values are used as is,
/// floating values are snapped to a grid.
pub trait Canonical: Scalar {
    type Key: Clone + Eq + Hash + Ord + Send + Sync + std::fmt::Debug;
    fn canon(&self) -> Self::Key;
}

/// Grid spacing for floating orbit keys.
pub const ORBIT_QUANTUM: f64 = 1e-9;

impl Canonical for Rational {
    type Key = Rational;
    fn canon(&self) -> Rational {
        self.clone()
    }
}

impl Canonical for Complex {
    type Key = (i64, i64);
    fn canon(&self) -> (i64, i64) {
        ((self.re / ORBIT_QUANTUM).round() as i64, (self.im / ORBIT_QUANTUM).round() as i64)
    }
}

pub fn canon_p<S: Canonical>(p: &PInvariants<S>) -> Vec<S::Key> {
    p.as_array().iter().map(Canonical::canon).collect()
}

pub fn canon_xyz<S: Canonical>(pt: &SurfacePoint<S>) -> Vec<S::Key> {
    pt.as_array().iter().map(Canonical::canon).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrbitLevel {
    MatrixClass,
    P,
    Xyz,
}

impl OrbitLevel {
    pub fn name(self) -> &'static str {
        match self {
            OrbitLevel::MatrixClass => "matrix-class",
            OrbitLevel::P => "p",
            OrbitLevel::Xyz => "xyz",
        }
    }
}

#[derive(Clone, Debug)]
pub struct OrbitResult<T> {
    /// States sorted by canonical key.
    pub points: Vec<T>,
    pub size: usize,
    /// `(from, generator, to)` indices into `points`, when requested.
    pub edges: Option<Vec<(usize, BraidGen, usize)>>,
}

/// Breadth-first closure of `start` under the four generators. States are
/// deduplicated by `key`; each frontier is expanded in parallel and merged
/// in a fixed order, so the result does not depend on scheduling.
pub fn braid_orbit<T, K, A, F>(start: T, act: A, key: F, max_size: usize, log_edges: bool) -> Result<OrbitResult<T>>
where
    T: Clone + Send + Sync,
    K: Clone + Eq + Hash + Ord + Send + Sync,
    A: Fn(BraidGen, &T) -> T + Sync,
    F: Fn(&T) -> K + Sync,
{
    if max_size == 0 {
        return Err(Error::Config("max orbit size must be positive".into()));
    }
    let mut index: HashMap<K, usize> = HashMap::new();
    let mut states: Vec<T> = Vec::new();
    let mut edges = Vec::new();
    index.insert(key(&start), 0);
    states.push(start);
    let mut frontier = vec![0usize];
    while !frontier.is_empty() {
        let images: Vec<Vec<(BraidGen, T, K)>> = frontier
            .par_iter()
            .map(|&i| {
                BraidGen::ALL
                    .iter()
                    .map(|&g| {
                        let s = act(g, &states[i]);
                        let k = key(&s);
                        (g, s, k)
                    })
                    .collect()
            })
            .collect();
        let mut next = Vec::new();
        for (&from, imgs) in frontier.iter().zip(images) {
            for (g, s, k) in imgs {
                let to = match index.get(&k) {
                    Some(&j) => j,
                    None => {
                        if states.len() >= max_size {
                            return Err(Error::OrbitTruncated(max_size));
                        }
                        let j = states.len();
                        index.insert(k, j);
                        states.push(s);
                        next.push(j);
                        j
                    }
                };
                if log_edges {
                    edges.push((from, g, to));
                }
            }
        }
        frontier = next;
    }
    // sort by key and renumber edges
    let mut order: Vec<(K, usize)> = index.into_iter().collect();
    order.sort();
    let mut new_pos = vec![0usize; states.len()];
    for (pos, (_, old)) in order.iter().enumerate() {
        new_pos[*old] = pos;
    }
    let points: Vec<T> = order.iter().map(|(_, old)| states[*old].clone()).collect();
    let edges = log_edges.then(|| {
        let mut e: Vec<_> = edges.into_iter().map(|(a, g, b)| (new_pos[a], g, new_pos[b])).collect();
        e.sort();
        e
    });
    Ok(OrbitResult { size: points.len(), points, edges })
}

pub fn p_orbit<S: Canonical>(start: &PInvariants<S>, max_size: usize) -> Result<OrbitResult<PInvariants<S>>> {
    braid_orbit(start.clone(), braid_p, canon_p, max_size, false)
}

pub fn xyz_orbit<S: Canonical>(start: &SurfacePoint<S>, b: &S, max_size: usize) -> Result<OrbitResult<SurfacePoint<S>>> {
    braid_orbit(start.clone(), |g, pt| braid_xyz(g, pt, b), canon_xyz, max_size, false)
}

/// Orbit of a class triple up to simultaneous conjugation, which the
/// invariants `p1..p4` detect completely.
pub fn class_orbit<S: Canonical>(start: &ClassTriple<S>, max_size: usize) -> Result<OrbitResult<ClassTriple<S>>> {
    braid_orbit(start.clone(), |g, t| t.braid(g), |t| canon_p(&t.invariants()), max_size, false)
}

/// Floating orbits: pairs of points closer than `tol` (which grid snapping
/// can separate) are merged. Returns the number of merges.
pub fn merge_close_points<T: Clone>(points: &mut Vec<T>, dist: impl Fn(&T, &T) -> f64, tol: f64) -> usize {
    let mut kept: Vec<T> = Vec::with_capacity(points.len());
    let mut merged = 0;
    for p in points.drain(..) {
        if kept.iter().any(|q| dist(q, &p) < tol) {
            merged += 1;
        } else {
            kept.push(p);
        }
    }
    *points = kept;
    merged
}

/// JSON listing of an orbit.
pub fn orbit_json(level: OrbitLevel, start: Value, b: Option<Value>, points: Vec<Value>) -> Value {
    serde_json::json!({
        "level": level.name(),
        "start": start,
        "b": b.unwrap_or(Value::Null),
        "size": points.len(),
        "points": points,
    })
}

/// Letters for words acting on surface points: the braid generators and the
/// swap `y <-> z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum XyzLetter {
    Gen(BraidGen),
    Swap,
}

impl XyzLetter {
    pub const ALL: [XyzLetter; 5] = [
        XyzLetter::Gen(BraidGen::B1),
        XyzLetter::Gen(BraidGen::B1Inv),
        XyzLetter::Gen(BraidGen::B2),
        XyzLetter::Gen(BraidGen::B2Inv),
        XyzLetter::Swap,
    ];

    fn cancels(self, other: XyzLetter) -> bool {
        match (self, other) {
            (XyzLetter::Swap, XyzLetter::Swap) => true,
            (XyzLetter::Gen(a), XyzLetter::Gen(b)) => a.inverse() == b,
            _ => false,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            XyzLetter::Gen(g) => g.name(),
            XyzLetter::Swap => "swap",
        }
    }
}

/// Apply a word as a composition: the last letter acts first.
pub fn apply_xyz_word<S: Scalar>(word: &[XyzLetter], pt: &SurfacePoint<S>, b: &S) -> SurfacePoint<S> {
    word.iter().rev().fold(pt.clone(), |acc, l| match l {
        XyzLetter::Gen(g) => braid_xyz(*g, &acc, b),
        XyzLetter::Swap => swap_yz(&acc),
    })
}

pub fn word_name(word: &[XyzLetter]) -> String {
    if word.is_empty() {
        return "id".into();
    }
    word.iter().map(|l| l.name()).collect::<Vec<_>>().join(" . ")
}

#[derive(Clone, Debug)]
pub struct DictionaryEntry {
    pub p_generator: BraidGen,
    pub word: Vec<XyzLetter>,
    /// The published candidate held (no search needed).
    pub candidate_held: bool,
    pub samples: usize,
}

#[derive(Clone, Debug)]
pub struct DictionaryReport {
    pub entries: Vec<DictionaryEntry>,
    /// Generators for which neither the candidate nor the search succeeded.
    pub missing: Vec<BraidGen>,
    /// `phi` maps the Klein p-orbit bijectively onto the listed xyz orbit.
    pub klein_orbits_match: bool,
}

impl DictionaryReport {
    pub fn ok(&self) -> bool {
        self.missing.is_empty() && self.klein_orbits_match
    }

    pub fn to_json(&self) -> Value {
        serde_json::json!({
            "entries": self.entries.iter().map(|e| serde_json::json!({
                "p_generator": e.p_generator.name(),
                "xyz_word": word_name(&e.word),
                "candidate_held": e.candidate_held,
                "samples": e.samples,
            })).collect::<Vec<_>>(),
            "missing": self.missing.iter().map(|g| g.name()).collect::<Vec<_>>(),
            "klein_orbits_match": self.klein_orbits_match,
        })
    }
}

/// Candidate words: `phi b2 phi^-1 = b1` and
/// `phi b1 phi^-1 = swap . b2^-1 . swap`, and their inverses.
pub fn candidate_word(gen: BraidGen) -> Vec<XyzLetter> {
    use XyzLetter::*;
    match gen {
        BraidGen::B2 => vec![Gen(BraidGen::B1)],
        BraidGen::B2Inv => vec![Gen(BraidGen::B1Inv)],
        BraidGen::B1 => vec![Swap, Gen(BraidGen::B2Inv), Swap],
        BraidGen::B1Inv => vec![Swap, Gen(BraidGen::B2), Swap],
    }
}

/// Random exact state `(x, y, z, b)` with small numerators and denominators.
pub fn random_rational_state<R: Rng + ?Sized>(rng: &mut R) -> (SurfacePoint<Rational>, Rational) {
    let mut r = || Rational::from_ratio(rng.gen_range(-20..=20), rng.gen_range(1..=9));
    (SurfacePoint { x: r(), y: r(), z: r() }, r())
}

/// Does `target` (conjugated to surface points) agree with the word on
/// every sample?
fn word_agrees(
    target: &impl Fn(&SurfacePoint<Rational>, &Rational) -> SurfacePoint<Rational>,
    word: &[XyzLetter],
    samples: &[(SurfacePoint<Rational>, Rational)],
) -> bool {
    samples.iter().all(|(pt, b)| target(pt, b) == apply_xyz_word(word, pt, b))
}

/// The p-level generator transported to surface points by `phi`.
pub fn conjugated_p_generator(gen: BraidGen) -> impl Fn(&SurfacePoint<Rational>, &Rational) -> SurfacePoint<Rational> {
    move |pt, b| {
        let p = braid_p(gen, &phi_inv(pt, b));
        phi(&p).0
    }
}

/// Shortest word (length at most `max_len`, no cancelling neighbours) in
/// the xyz generators and the swap that agrees with `target` on all
/// samples.
pub fn search_word(
    target: &impl Fn(&SurfacePoint<Rational>, &Rational) -> SurfacePoint<Rational>,
    samples: &[(SurfacePoint<Rational>, Rational)],
    max_len: usize,
) -> Option<Vec<XyzLetter>> {
    let quick = &samples[..samples.len().min(4)];
    let mut layer: Vec<Vec<XyzLetter>> = vec![Vec::new()];
    for _ in 0..=max_len {
        for w in &layer {
            if word_agrees(target, w, quick) && word_agrees(target, w, samples) {
                return Some(w.clone());
            }
        }
        let mut next = Vec::new();
        for w in &layer {
            for l in XyzLetter::ALL {
                if w.last().is_some_and(|&last| last.cancels(l)) {
                    continue;
                }
                let mut nw = w.clone();
                nw.push(l);
                next.push(nw);
            }
        }
        layer = next;
    }
    None
}

/// Verify (or discover) how the p-level generators correspond to words in
/// the xyz-level generators under `phi`, by exact sampling, and check that
/// the Klein orbits correspond.
pub fn equivariance_dictionary(samples: usize, seed: u64) -> DictionaryReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let states: Vec<_> = (0..samples).map(|_| random_rational_state(&mut rng)).collect();
    let mut entries = Vec::new();
    let mut missing = Vec::new();
    for gen in BraidGen::ALL {
        let target = conjugated_p_generator(gen);
        let cand = candidate_word(gen);
        if word_agrees(&target, &cand, &states) {
            entries.push(DictionaryEntry { p_generator: gen, word: cand, candidate_held: true, samples });
        } else if let Some(w) = search_word(&target, &states, 6) {
            entries.push(DictionaryEntry { p_generator: gen, word: w, candidate_held: false, samples });
        } else {
            missing.push(gen);
        }
    }
    DictionaryReport { entries, missing, klein_orbits_match: klein_orbits_match() }
}

/// The seven points of the Klein orbit on `b = -1, c = 0`.
pub fn klein_orbit_points() -> Vec<SurfacePoint<Rational>> {
    [[0, 0, 0], [0, 0, 1], [0, 1, 0], [1, 0, 0], [1, 1, 0], [1, 0, 1], [0, 1, 1]]
        .into_iter()
        .map(SurfacePoint::from_ints)
        .collect()
}

/// `phi` restricted to the p-orbit of `(1, 1, 1, -2)` is a bijection onto
/// the xyz-orbit of the origin on the Klein surface, which is the listed
/// seven-point set.
pub fn klein_orbits_match() -> bool {
    let p_start = PInvariants::<Rational>::from_ints([1, 1, 1, -2]);
    let b = Rational::from_i64(-1);
    let (Ok(po), Ok(xo)) = (p_orbit(&p_start, 1000), xyz_orbit(&SurfacePoint::from_ints([0, 0, 0]), &b, 1000)) else {
        return false;
    };
    let mapped: HashSet<SurfacePoint<Rational>> = po
        .points
        .iter()
        .map(phi)
        .filter(|(_, pb)| *pb == b)
        .map(|(pt, _)| pt)
        .collect();
    let listed: HashSet<SurfacePoint<Rational>> = klein_orbit_points().into_iter().collect();
    let xset: HashSet<SurfacePoint<Rational>> = xo.points.into_iter().collect();
    po.size == xo.size && mapped.len() == po.size && mapped == xset && xset == listed
}
