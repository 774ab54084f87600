// Acceptance criteria, one line of output per criterion.
// Run with `cargo test -p g2cubics --test acceptance -- --nocapture`.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use g2cubics::braid::{
    braid_oct, braid_p, braid_triple, braid_xyz, equivariance_dictionary, klein_orbit_points, p_orbit,
    random_rational_state, BraidGen, ClassTriple,
};
use g2cubics::fano::{group_closure, point_generators, DEFAULT_MAX_ORDER};
use g2cubics::fricke::{
    alpha_beta_from_p, c_from_surface, covering_check, fiber_cubic, locus_values_ab, locus_values_bc, phi, phi_inv,
    pr, pr_fiber, pr_fiber_exact, ExactRoot, PInvariants, SurfaceParams, SurfacePoint, FIBER_MERGE_TOL,
};
use g2cubics::g2::{
    alpha_beta_of, automorphism_residual, conj_map, sample_norm_three, torus_alpha_beta, weyl_denominator,
    AlphaBeta, TorusPoint,
};
use g2cubics::matrix::Mat7;
use g2cubics::octonion::{double_index, generate_table, relabel_table, shift_index, MUL_TABLE};
use g2cubics::realize::size18_check;
use g2cubics::sl2::{
    affine_weyl_check, fricke_params, random_sl2, random_theta, seven_functions, theta_params, trace_residual,
    triality,
};
use g2cubics::verify::{class_charpoly, relative_gap};
use g2cubics::{Complex, Rational, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Q = Rational;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

fn q(n: i64) -> Q {
    Q::from_i64(n)
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn rand_q(r: &mut ChaCha8Rng) -> Q {
    Q::from_ratio(r.gen_range(-30..=30), r.gen_range(1..=7))
}

fn octonion_table() -> Outcome {
    let gen = generate_table() == MUL_TABLE;
    let shift = relabel_table(&MUL_TABLE, shift_index) == MUL_TABLE;
    let double = relabel_table(&MUL_TABLE, double_index) == MUL_TABLE;
    outcome(gen && shift && double, format!("generated={gen} n+1={shift} 2n={double}"))
}

fn class_construction() -> Outcome {
    let mut r = rng(2);
    let expected = class_charpoly();
    let (mut auto, mut cube, mut spec) = (0.0f64, 0.0f64, 0.0f64);
    for _ in 0..200 {
        let v = sample_norm_three(&mut r);
        let g = conj_map(&v, 1e-9).expect("norm 3");
        auto = auto.max(automorphism_residual(&g));
        cube = cube.max(g.pow(3).m.max_abs_diff(&Mat7::identity()));
        let cp = g.m.charpoly();
        spec = spec.max(cp.iter().zip(&expected).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max));
    }
    outcome(
        auto < 1e-9 && cube < 1e-9 && spec < 1e-9,
        format!("automorphism {auto:.1e}, cube {cube:.1e}, charpoly {spec:.1e}"),
    )
}

fn main_theorem() -> Outcome {
    let mut r = rng(3);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let v = [sample_norm_three(&mut r), sample_norm_three(&mut r), sample_norm_three(&mut r)];
        let t = ClassTriple::new(v, 1e-9).expect("norm 3");
        let ab = alpha_beta_from_p(&t.invariants());
        worst = worst.max(relative_gap(&ab, &alpha_beta_of(&t.product())));
    }
    outcome(worst < 1e-6, format!("max relative error {worst:.1e} over 1000 triples"))
}

fn klein_pipeline() -> Outcome {
    let p = PInvariants::<Q>::from_ints([1, 1, 1, -2]);
    let (pt, b) = phi(&p);
    let c = c_from_surface(&pt, &b);
    let ab = alpha_beta_from_p(&p);
    let values = pt == SurfacePoint::from_ints([0, 0, 0]) && b == q(-1) && c == q(0) && ab == AlphaBeta::from_ints(-1, -1);
    let orbit = p_orbit(&p, 1000).expect("finite orbit");
    let mapped: HashSet<SurfacePoint<Q>> =
        orbit.points.iter().map(phi).filter(|(_, pb)| *pb == q(-1)).map(|(x, _)| x).collect();
    let listed: HashSet<SurfacePoint<Q>> = klein_orbit_points().into_iter().collect();
    let onto = orbit.size == 7 && mapped.len() == 7 && mapped == listed;
    outcome(values && onto, format!("values={values} orbit size {} onto listed points={onto}", orbit.size))
}

fn finite_group() -> Outcome {
    let mut orders = Vec::new();
    let mut all_auto = true;
    for k in 1..=7 {
        let gens = point_generators(k).expect("valid point");
        match group_closure(&gens, DEFAULT_MAX_ORDER) {
            Ok(res) => {
                orders.push(res.order);
                all_auto &= res.elements.iter().all(|e| e.is_automorphism());
            }
            Err(e) => return outcome(false, format!("point {k}: {e}")),
        }
    }
    let ok = orders.iter().all(|&n| n == 6048) && all_auto;
    outcome(ok, format!("orders {orders:?}, every element an automorphism={all_auto}"))
}

fn braid_algebra() -> Outcome {
    use BraidGen::*;
    let mut r = rng(6);
    let (mut rel_p, mut rel_xyz, mut conserved) = (true, true, true);
    for _ in 0..100 {
        let (pt, b) = random_rational_state(&mut r);
        let p = phi_inv(&pt, &b);
        let bp = |w: &[BraidGen]| w.iter().fold(p.clone(), |s, &g| braid_p(g, &s));
        let bx = |w: &[BraidGen]| w.iter().fold(pt.clone(), |s, &g| braid_xyz(g, &s, &b));
        rel_p &= bp(&[B1, B2, B1]) == bp(&[B2, B1, B2]);
        rel_xyz &= bx(&[B1, B2, B1]) == bx(&[B2, B1, B2]);
        for g in BraidGen::ALL {
            let n = braid_p(g, &p);
            conserved &= n.p4.clone() + n.s1() == p.p4.clone() + p.s1();
        }
    }
    // octonion moves against matrix moves, and against the p-level formulas
    let mut compat = 0.0f64;
    for _ in 0..20 {
        let v = [sample_norm_three(&mut r), sample_norm_three(&mut r), sample_norm_three(&mut r)];
        let t = ClassTriple::new(v.clone(), 1e-9).expect("norm 3");
        for g in BraidGen::ALL {
            let nv = braid_oct(g, &v, 1e-9).expect("norm 3");
            let nt = braid_triple(g, &t.g);
            for k in 0..3 {
                compat = compat.max(conj_map(&nv[k], 1e-8).expect("norm 3").max_abs_diff(&nt[k]));
            }
            let pv = ClassTriple::new(nv, 1e-8).expect("norm 3").invariants();
            compat = compat.max(pv.max_abs_diff(&braid_p(g, &t.invariants())));
        }
    }
    let ok = rel_p && rel_xyz && conserved && compat < 1e-8;
    outcome(ok, format!("p={rel_p} xyz={rel_xyz} p4+s1={conserved} compatibility {compat:.1e}"))
}

fn dictionary() -> Outcome {
    let rep = equivariance_dictionary(100, 7);
    let words: Vec<String> = rep
        .entries
        .iter()
        .map(|e| format!("{}->{}{}", e.p_generator.name(), g2cubics::braid::word_name(&e.word), if e.candidate_held { "" } else { " (found)" }))
        .collect();
    outcome(rep.ok(), format!("{}; Klein orbits match={}", words.join(", "), rep.klein_orbits_match))
}

/// Discriminant of a monic cubic `x^3 + a x^2 + b x + c`.
fn cubic_discriminant(f: &[Q; 4]) -> Q {
    let (a, b, c) = (&f[1], &f[2], &f[3]);
    a * a * b * b - q(4) * b * b * b - q(4) * a * a * a * c - q(27) * c * c + q(18) * a * b * c
}

fn fiber_structure() -> Outcome {
    // (6, 6): one simple point and one double point
    let fib = pr_fiber_exact(&AlphaBeta::from_ints(6, 6));
    let pts: Vec<(ExactRoot, ExactRoot, usize)> = fib.into_iter().map(|f| (f.b, f.c, f.multiplicity)).collect();
    let special = pts.len() == 2
        && pts.contains(&(ExactRoot::Rational(q(-8)), ExactRoot::Rational(q(28)), 1))
        && pts.contains(&(ExactRoot::Rational(q(1)), ExactRoot::Rational(q(1)), 2));

    // discriminant of the fibre cubic is a fixed multiple of d1
    let mut r = rng(8);
    let mut ratio: Option<Q> = None;
    let mut proportional = true;
    for _ in 0..30 {
        let ab = AlphaBeta::new(rand_q(&mut r), rand_q(&mut r));
        let disc = cubic_discriminant(&fiber_cubic(&ab));
        let (d1, _) = locus_values_ab(&ab);
        if d1 == q(0) {
            proportional &= disc == q(0);
            continue;
        }
        let k = disc / d1;
        proportional &= *ratio.get_or_insert_with(|| k.clone()) == k;
    }

    // generic fibres: three distinct points, none on the singular loci
    let mut generic = true;
    for _ in 0..100 {
        let ab = AlphaBeta::new(rand_q(&mut r), rand_q(&mut r));
        let (d1, d2) = locus_values_ab(&ab);
        if d1 == q(0) || d2 == q(0) {
            continue;
        }
        let exact = pr_fiber_exact(&ab);
        let numeric = pr_fiber(&AlphaBeta::new(ab.alpha.to_complex(), ab.beta.to_complex()), FIBER_MERGE_TOL);
        generic &= exact.len() == 3 && exact.iter().all(|f| f.multiplicity == 1) && numeric.len() == 3;
        for f in &numeric {
            let l = locus_values_bc(&f.params);
            generic &= l.sing1.norm() > 1e-9 && l.sing2.norm() > 1e-9;
        }
    }
    let ratio = ratio.map(|k| g2cubics::scalar::format_rational(&k)).unwrap_or_default();
    outcome(
        special && proportional && generic,
        format!("(6,6) fibre={special} disc = {ratio} d1: {proportional} generic={generic}"),
    )
}

fn locus_geometry() -> Outcome {
    let mut r = rng(9);
    let (mut s1, mut s2, mut wall_long, mut wall_short) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    let mut dbl = true;
    for _ in 0..100 {
        let b = Complex::new(r.gen_range(-3.0..3.0), r.gen_range(-1.0..1.0));
        // sing1 = 0: c = (b^2 - 8b - 16)/4
        let c1 = (b * b - 8.0 * b - 16.0) / 4.0;
        let ab = pr(&SurfaceParams::new(b, c1));
        s1 = s1.max(locus_values_ab(&ab).0.norm());
        // sing2 = 0: c^2 + (4 - 6b) c + 4b^3 - 3b^2 = 0
        let (lin, cst) = (4.0 - 6.0 * b, 4.0 * b * b * b - 3.0 * b * b);
        let c2 = (-lin + (lin * lin - 4.0 * cst).sqrt()) / 2.0;
        let ab = pr(&SurfaceParams::new(b, c2));
        s2 = s2.max(locus_values_ab(&ab).1.norm());
        // dbl = 0, exactly
        let bq = rand_q(&mut r);
        let cq = bq.clone() * bq.clone() + bq.clone() - q(1);
        dbl &= locus_values_ab(&pr(&SurfaceParams::new(bq, cq))).0 == q(0);
        // Weyl denominator walls on the torus
        let a = Complex::from_polar(r.gen_range(0.5..2.0), r.gen_range(0.0..std::f64::consts::TAU));
        let on_long = TorusPoint::new(a, a).expect("nonzero");
        let on_short = TorusPoint::new(Complex::new(1.0, 0.0), a).expect("nonzero");
        wall_long = wall_long
            .max(weyl_denominator(&on_long).expect("nonzero").0.norm())
            .max(locus_values_ab(&torus_alpha_beta(&on_long).expect("nonzero")).0.norm());
        wall_short = wall_short
            .max(weyl_denominator(&on_short).expect("nonzero").1.norm())
            .max(locus_values_ab(&torus_alpha_beta(&on_short).expect("nonzero")).1.norm());
    }
    let ok = s1 < 1e-8 && s2 < 1e-8 && dbl && wall_long < 1e-8 && wall_short < 1e-8;
    outcome(ok, format!("sing1->d1 {s1:.1e} sing2->d2 {s2:.1e} dbl->d1 exact={dbl} walls {wall_long:.1e}/{wall_short:.1e}"))
}

fn covering_identity() -> Outcome {
    let mut r = rng(10);
    let mut all = true;
    for _ in 0..100 {
        let (b, x, y, z) = (rand_q(&mut r), rand_q(&mut r), rand_q(&mut r), rand_q(&mut r));
        let (l, rr) = covering_check(&b, &x, &y, &z);
        all &= l == rr;
    }
    // b = 0 gives c = -4 on the very symmetric side and d = -4 on the other
    let b = q(0);
    let c = b.clone() * b.clone() / q(4) - q(2) * b.clone() - q(4);
    let d = -q(4) - b / q(2);
    let cayley = c == q(-4) && d == q(-4);
    outcome(all && cayley, format!("100 exact samples={all} b=0 gives c=d=-4: {cayley}"))
}

fn sl2_side() -> Outcome {
    let mut r = rng(11);
    let mut fricke = true;
    for _ in 0..500 {
        let (a, b, c) = (random_sl2(&mut r), random_sl2(&mut r), random_sl2(&mut r));
        let t = seven_functions(&a, &b, &c, 0.0).expect("unimodular");
        fricke &= trace_residual(&t) == q(0);
    }
    let mut affine = 0.0f64;
    let mut tri = 0.0f64;
    for _ in 0..50 {
        let th = random_theta(&mut r);
        affine = affine.max(affine_weyl_check(&th, 1e-8).max_residual());
        let (p, t) = (theta_params(&th), theta_params(&triality(&th)));
        tri = tri.max((t.b1 - p.b3).norm()).max((t.b2 - p.b1).norm()).max((t.b3 - p.b2).norm()).max((t.c - p.c).norm());
    }
    // exact triality and its fixed locus, on traces m
    let mut exact = true;
    for _ in 0..50 {
        let m = [rand_q(&mut r), rand_q(&mut r), rand_q(&mut r), rand_q(&mut r)];
        let (p, t) = (fricke_params(&m), fricke_params(&triality(&m)));
        exact &= t.b1 == p.b3 && t.b2 == p.b1 && t.b3 == p.b2 && t.c == p.c;
        let fixed = fricke_params(&[m[0].clone(), m[0].clone(), m[0].clone(), m[3].clone()]);
        exact &= fixed.b1 == fixed.b2 && fixed.b2 == fixed.b3;
    }
    let ok = fricke && affine < 1e-8 && tri < 1e-9 && exact;
    outcome(ok, format!("Fricke exact={fricke} affine {affine:.1e} triality {tri:.1e} exact triality/fixed locus={exact}"))
}

fn size18() -> Outcome {
    match size18_check(1e-10, 0) {
        Ok(rep) => outcome(
            rep.passed(1e-8, 1e-6),
            format!(
                "residual {:.1e}, remainder {:.1e}, real root {:.5}",
                rep.realize_residual, rep.remainder_residual, rep.real_root
            ),
        ),
        Err(e) => outcome(false, e.to_string()),
    }
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome, Option<Duration>); 12] = [
        ("octonion table", octonion_table, Some(Duration::from_secs(1))),
        ("class construction", class_construction, Some(Duration::from_secs(5))),
        ("main theorem", main_theorem, Some(Duration::from_secs(30))),
        ("Klein pipeline", klein_pipeline, Some(Duration::from_secs(1))),
        ("finite group of order 6048", finite_group, Some(Duration::from_secs(60))),
        ("braid algebra", braid_algebra, None),
        ("equivariance dictionary", dictionary, None),
        ("fiber structure", fiber_structure, None),
        ("locus geometry", locus_geometry, None),
        ("covering identity", covering_identity, None),
        ("SL2 and D4 side", sl2_side, None),
        ("size-18 remark", size18, None),
    ];
    let mut failed = Vec::new();
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = run();
        let took = start.elapsed();
        let in_time = limit.map_or(true, |l| took <= l);
        let pass = out.passed && in_time;
        let budget = limit.map(|l| format!(" (limit {}s)", l.as_secs())).unwrap_or_default();
        println!(
            "{} [{:2}] {name}: {} [{:.2}s{budget}]",
            if pass { "PASS" } else { "FAIL" },
            i + 1,
            out.detail,
            took.as_secs_f64()
        );
        if !pass {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
