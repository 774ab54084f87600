//! Property suites with pass/fail flags and worst residuals.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::Value;

use crate::braid::{braid_oct, braid_p, braid_triple, braid_xyz, equivariance_dictionary, klein_orbits_match, p_orbit, random_rational_state, BraidGen, ClassTriple};
use crate::fano::{group_closure, point_generators, point_invariants, DEFAULT_MAX_ORDER};
use crate::fricke::{alpha_beta_from_p, c_from_surface, locus_values_ab, p_invariants_unchecked, phi, pr, PInvariants, SurfaceParams};
use crate::g2::{alpha_beta_of, automorphism_residual, conj_map, sample_norm_three, torus_alpha_beta, weyl_act, weyl_denominator, weyl_group_words, AlphaBeta, TorusPoint, WeylGen};
use crate::matrix::{poly_mul, Mat7};
use crate::octonion::{double_index, generate_table, non_associative_witness, relabel_table, shift_index, Octonion, MUL_TABLE};
use crate::scalar::{Complex, Rational, Scalar};
use crate::sl2::{affine_weyl_check, random_theta, theta_params, triality};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Octonion,
    Class,
    Theorem,
    Braid,
    Weyl,
    Fano,
}

impl Suite {
    pub const ALL: [Suite; 6] = [Suite::Braid, Suite::Class, Suite::Fano, Suite::Octonion, Suite::Theorem, Suite::Weyl];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Octonion => "octonion",
            Suite::Class => "class",
            Suite::Theorem => "theorem",
            Suite::Braid => "braid",
            Suite::Weyl => "weyl",
            Suite::Fano => "fano",
        }
    }

    pub fn parse(s: &str) -> Option<Vec<Suite>> {
        if s == "all" {
            return Some(Suite::ALL.to_vec());
        }
        Suite::ALL.iter().find(|x| x.name() == s).map(|x| vec![*x])
    }
}

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub max_residual: f64,
}

impl Check {
    fn exact(name: &str, passed: bool) -> Self {
        Check { name: name.into(), passed, max_residual: if passed { 0.0 } else { f64::NAN } }
    }

    fn within(name: &str, residual: f64, tol: f64) -> Self {
        Check { name: name.into(), passed: residual < tol, max_residual: residual }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn max_residual(&self) -> f64 {
        self.checks.iter().map(|c| c.max_residual).filter(|r| r.is_finite()).fold(0.0, f64::max)
    }

    pub fn to_json(&self) -> Value {
        serde_json::json!({
            "suite": self.suite.name(),
            "passed": self.passed(),
            "max_residual": self.max_residual(),
            "checks": self.checks.iter().map(|c| serde_json::json!({
                "name": c.name,
                "passed": c.passed,
                "max_residual": if c.max_residual.is_finite() { Value::from(c.max_residual) } else { Value::Null },
            })).collect::<Vec<_>>(),
        })
    }
}

/// Run suites in parallel; reports come back in the order given.
pub fn run_suites(suites: &[Suite], tol: f64, seed: u64) -> Vec<SuiteReport> {
    suites.par_iter().map(|&s| run_suite(s, tol, seed)).collect()
}

pub fn run_suite(suite: Suite, tol: f64, seed: u64) -> SuiteReport {
    let checks = match suite {
        Suite::Octonion => octonion_suite(seed),
        Suite::Class => class_suite(tol, seed),
        Suite::Theorem => theorem_suite(seed),
        Suite::Braid => braid_suite(seed),
        Suite::Weyl => weyl_suite(seed),
        Suite::Fano => fano_suite(),
    };
    SuiteReport { suite, checks }
}

fn random_octonion(rng: &mut ChaCha8Rng) -> Octonion<Complex> {
    use rand::Rng;
    Octonion::new(std::array::from_fn(|_| Complex::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))))
}

fn octonion_suite(seed: u64) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut comp: f64 = 0.0;
    let mut alt: f64 = 0.0;
    let mut sym: f64 = 0.0;
    for _ in 0..200 {
        let (a, b) = (random_octonion(&mut rng), random_octonion(&mut rng));
        let ab = a.mul(&b);
        comp = comp.max((ab.norm() - a.norm() * b.norm()).norm() / (1.0 + (a.norm() * b.norm()).norm()));
        alt = alt.max(a.mul(&a).mul(&b).max_abs_diff(&a.mul(&a.mul(&b))));
        alt = alt.max(b.mul(&a).mul(&a).max_abs_diff(&b.mul(&a.mul(&a))));
        sym = sym.max((a.form(&b) - b.form(&a)).norm());
    }
    vec![
        Check::exact("table matches the Fano-line generator", generate_table() == MUL_TABLE),
        Check::exact("table invariant under n -> n+1", relabel_table(&MUL_TABLE, shift_index) == MUL_TABLE),
        Check::exact("table invariant under n -> 2n", relabel_table(&MUL_TABLE, double_index) == MUL_TABLE),
        Check::exact("multiplication is not associative", non_associative_witness().is_some()),
        Check::within("norm is multiplicative", comp, 1e-10),
        Check::within("alternative laws", alt, 1e-10),
        Check::within("form is symmetric", sym, 1e-12),
    ]
}

/// `(x - 1)(x^2 + x + 1)^3`.
pub fn class_charpoly() -> Vec<Complex> {
    let one = Complex::new(1.0, 0.0);
    let quad = [one, one, one];
    let q3 = poly_mul(&poly_mul(&quad, &quad), &quad);
    poly_mul(&[one, -one], &q3)
}

fn class_suite(tol: f64, seed: u64) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let expected = class_charpoly();
    let (mut auto, mut cube, mut spec) = (0.0f64, 0.0f64, 0.0f64);
    for _ in 0..200 {
        let v = sample_norm_three(&mut rng);
        let g = conj_map(&v, 1e-9).expect("sampled with norm 3");
        auto = auto.max(automorphism_residual(&g));
        cube = cube.max(g.pow(3).m.max_abs_diff(&Mat7::identity()));
        let cp = g.m.charpoly();
        spec = spec.max(cp.iter().zip(&expected).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max));
    }
    vec![
        Check::within("conjugation maps are automorphisms", auto, tol),
        Check::within("conjugation maps have order 3", cube, tol),
        Check::within("spectrum {1, w x3, w^2 x3}", spec, 1e-8),
    ]
}

/// Relative distance between two `(alpha, beta)` pairs.
pub fn relative_gap(a: &AlphaBeta<Complex>, b: &AlphaBeta<Complex>) -> f64 {
    let scale = 1.0f64.max(b.alpha.norm()).max(b.beta.norm());
    a.max_abs_diff(b) / scale
}

/// Random triple; its invariants, the formula route and the matrix route.
pub fn theorem_sample(rng: &mut ChaCha8Rng) -> (PInvariants<Complex>, AlphaBeta<Complex>, AlphaBeta<Complex>) {
    let v = [sample_norm_three(rng), sample_norm_three(rng), sample_norm_three(rng)];
    let p = p_invariants_unchecked(&v[0], &v[1], &v[2]);
    let t = ClassTriple::new(v, 1e-9).expect("norm 3");
    (p.clone(), alpha_beta_from_p(&p), alpha_beta_of(&t.product()))
}

fn theorem_suite(seed: u64) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut formula, mut diagram) = (0.0f64, 0.0f64);
    for _ in 0..1000 {
        let (p, ab, ab_matrix) = theorem_sample(&mut rng);
        formula = formula.max(relative_gap(&ab, &ab_matrix));
        let (pt, b) = phi(&p);
        let c = c_from_surface(&pt, &b);
        diagram = diagram.max(relative_gap(&pr(&SurfaceParams::new(b, c)), &ab_matrix));
    }
    vec![
        Check::within("invariant formulas match traces of the product", formula, 1e-6),
        Check::within("pr after phi matches traces of the product", diagram, 1e-6),
    ]
}

fn braid_suite(seed: u64) -> Vec<Check> {
    use BraidGen::*;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rel_p = true;
    let mut rel_xyz = true;
    let mut inv = true;
    let mut conserved = true;
    for _ in 0..100 {
        let (pt, b) = random_rational_state(&mut rng);
        let p = crate::fricke::phi_inv(&pt, &b);
        let bp = |w: &[BraidGen]| w.iter().fold(p.clone(), |s, &g| braid_p(g, &s));
        let bx = |w: &[BraidGen]| w.iter().fold(pt.clone(), |s, &g| braid_xyz(g, &s, &b));
        rel_p &= bp(&[B1, B2, B1]) == bp(&[B2, B1, B2]);
        rel_xyz &= bx(&[B1, B2, B1]) == bx(&[B2, B1, B2]);
        for g in BraidGen::ALL {
            inv &= bp(&[g, g.inverse()]) == p && bx(&[g, g.inverse()]) == pt;
            let q = braid_p(g, &p);
            conserved &= q.p4.clone() + q.s1() == p.p4.clone() + p.s1();
        }
    }
    let mut compat = 0.0f64;
    let mut rel_num = 0.0f64;
    for _ in 0..20 {
        let v = [sample_norm_three(&mut rng), sample_norm_three(&mut rng), sample_norm_three(&mut rng)];
        let t = ClassTriple::new(v.clone(), 1e-9).expect("norm 3");
        for g in BraidGen::ALL {
            let nv = braid_oct(g, &v, 1e-9).expect("norm 3");
            let nt = braid_triple(g, &t.g);
            for k in 0..3 {
                compat = compat.max(conj_map(&nv[k], 1e-8).expect("norm 3").max_abs_diff(&nt[k]));
            }
            let pv = p_invariants_unchecked(&nv[0], &nv[1], &nv[2]);
            compat = compat.max(pv.max_abs_diff(&braid_p(g, &t.invariants())));
        }
        let w = |word: &[BraidGen]| word.iter().fold(t.g.clone(), |s, &g| braid_triple(g, &s));
        let (l, r) = (w(&[B1, B2, B1]), w(&[B2, B1, B2]));
        let scale = l.iter().flat_map(|g| g.m.m.iter().flatten()).map(|x| x.norm()).fold(1.0, f64::max);
        rel_num = rel_num.max((0..3).map(|k| l[k].max_abs_diff(&r[k])).fold(0.0, f64::max) / scale);
    }
    let klein = p_orbit(&PInvariants::<Rational>::from_ints([1, 1, 1, -2]), 1000).map(|o| o.size).unwrap_or(0);
    let dict = equivariance_dictionary(100, seed);
    vec![
        Check::exact("braid relation at p level (exact)", rel_p),
        Check::exact("braid relation at xyz level (exact)", rel_xyz),
        Check::exact("generators invert", inv),
        Check::exact("p4 + s1 conserved", conserved),
        Check::within("level compatibility", compat, 1e-8),
        Check::within("braid relation on matrices (relative)", rel_num, 1e-8),
        Check::exact("Klein p-orbit has size 7", klein == 7),
        Check::exact("Klein orbits correspond under phi", klein_orbits_match()),
        Check::exact("equivariance dictionary", dict.ok()),
    ]
}

fn random_torus(rng: &mut ChaCha8Rng) -> TorusPoint<Complex> {
    use rand::Rng;
    let mut c = || Complex::from_polar(rng.gen_range(0.5..2.0), rng.gen_range(0.0..std::f64::consts::TAU));
    TorusPoint::new(c(), c()).expect("nonzero")
}

fn weyl_suite(seed: u64) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let probe = TorusPoint::new(Rational::from_i64(2), Rational::from_i64(3)).expect("nonzero");
    let order = weyl_group_words(&probe).len();
    let mut invariance = 0.0f64;
    let mut long_gap = 0.0f64;
    let mut short_gap = 0.0f64;
    for _ in 0..50 {
        let t = random_torus(&mut rng);
        let ab = torus_alpha_beta(&t).expect("nonzero");
        for g in [WeylGen::R1, WeylGen::R2] {
            invariance = invariance.max(relative_gap(&torus_alpha_beta(&weyl_act(g, &t)).expect("nonzero"), &ab));
        }
        // long root wall a1 = a2, short root wall a1 = 1
        let on_long = TorusPoint::new(t.a1, t.a1).expect("nonzero");
        let on_short = TorusPoint::new(Complex::new(1.0, 0.0), t.a2).expect("nonzero");
        let (dl, _) = weyl_denominator(&on_long).expect("nonzero");
        let (_, ds) = weyl_denominator(&on_short).expect("nonzero");
        long_gap = long_gap.max(dl.norm()).max(locus_values_ab(&torus_alpha_beta(&on_long).expect("nonzero")).0.norm());
        short_gap = short_gap.max(ds.norm()).max(locus_values_ab(&torus_alpha_beta(&on_short).expect("nonzero")).1.norm());
    }
    let mut affine = 0.0f64;
    let mut tri = 0.0f64;
    for _ in 0..50 {
        let th = random_theta(&mut rng);
        affine = affine.max(affine_weyl_check(&th, 1e-8).max_residual());
        let p = theta_params(&th);
        let q = theta_params(&triality(&th));
        tri = tri.max((q.b1 - p.b3).norm()).max((q.b2 - p.b1).norm()).max((q.b3 - p.b2).norm()).max((q.c - p.c).norm());
    }
    vec![
        Check::exact("Weyl group has order 12", order == 12),
        Check::within("(alpha, beta) is Weyl invariant", invariance, 1e-9),
        Check::within("long-root wall maps to d1 = 0", long_gap, 1e-8),
        Check::within("short-root wall maps to d2 = 0", short_gap, 1e-8),
        Check::within("affine Weyl invariance of the parameter map", affine, 1e-8),
        Check::within("triality cycles (b1, b2, b3)", tri, 1e-9),
    ]
}

fn fano_suite() -> Vec<Check> {
    let results: Vec<(usize, bool, bool)> = (1..=7)
        .into_par_iter()
        .map(|k| {
            let inv = point_invariants(k).map(|p| p == PInvariants::from_ints([1, 1, 1, -2])).unwrap_or(false);
            match point_generators(k).and_then(|g| group_closure(&g, DEFAULT_MAX_ORDER)) {
                Ok(r) => (r.order, r.elements.iter().all(|g| g.is_automorphism()), inv),
                Err(_) => (0, false, inv),
            }
        })
        .collect();
    vec![
        Check::exact("order 6048 from all seven points", results.iter().all(|r| r.0 == 6048)),
        Check::exact("every element is an automorphism", results.iter().all(|r| r.1)),
        Check::exact("point invariants are (1, 1, 1, -2)", results.iter().all(|r| r.2)),
    ]
}
