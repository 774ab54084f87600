//! `g2cubics`: invariants, braid orbits, loci, fibres, realizations, the
//! Fano group and the verification suites from the command line.

mod input;
mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use g2cubics::braid::{braid_orbit, braid_p, braid_xyz, canon_p, canon_xyz, class_orbit, merge_close_points, orbit_json, Canonical, ClassTriple, OrbitLevel};
use g2cubics::fano::{group_closure, lines_through, point_generators};
use g2cubics::fricke::{alpha_beta_from_p, c_from_surface, invariants_json, locus_values_ab, locus_values_bc, p_invariants, pr, pr_fiber, pr_fiber_exact, ExactRoot, PInvariants, SurfaceParams, SurfacePoint, FIBER_MERGE_TOL};
use g2cubics::g2::{alpha_beta_of, torus_alpha_beta, weyl_denominator, weyl_group_words, weyl_word, AlphaBeta, TorusPoint, WeylGen};
use g2cubics::octonion::{json_is_exact, triple_from_json, triple_to_json, Vector7};
use g2cubics::realize::{realization_residual, realize_triple, size18_check};
use g2cubics::scalar::{set_tolerance, DEFAULT_TOLERANCE};
use g2cubics::sl2::{affine_weyl_check, theta_params, triality};
use g2cubics::verify::{run_suites, Suite};
use g2cubics::{Complex, Error, Rational, Result, Scalar};

use input::{parse_list, parse_sweep, read_json_file, Nums};
use output::{render, Format};

#[derive(Parser, Debug)]
#[command(name = "g2cubics", version, about = "G2 triples, Fricke cubics and their braid orbits")]
struct Cli {
    /// Comparison tolerance for floating inputs.
    #[arg(long, global = true, env = "G2CUBICS_TOLERANCE", default_value_t = DEFAULT_TOLERANCE)]
    tolerance: f64,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[arg(long, global = true, default_value_t = 10_000)]
    max_orbit: usize,
    #[arg(long, global = true, default_value_t = 100_000)]
    max_group: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// p-invariants, surface coordinates and the class of the product.
    Invariants(InvariantsArgs),
    /// Orbit of a state under the braid group.
    BraidOrbit(BraidArgs),
    /// Values of the discriminant and singular-locus polynomials.
    Loci(LociArgs),
    /// The three-point fibre of (b, c) -> (alpha, beta).
    PrFiber(FiberArgs),
    /// A numeric triple with prescribed invariants.
    Realize(RealizeArgs),
    /// Closure of the group generated from a Fano point.
    FanoGroup(FanoArgs),
    /// Weyl group action on the torus and the affine Weyl check on theta.
    Weyl(WeylArgs),
    /// Run property suites: octonion, class, theorem, braid, weyl, fano, all.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct InvariantsArgs {
    #[arg(long)]
    triple: Option<String>,
    #[arg(long)]
    fano_point: Option<usize>,
    /// Inline p1,p2,p3,p4.
    #[arg(long, allow_hyphen_values = true)]
    p: Option<String>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum LevelArg {
    P,
    Xyz,
    MatrixClass,
}

#[derive(Args, Debug)]
struct BraidArgs {
    #[arg(long, value_enum)]
    level: LevelArg,
    /// p1,p2,p3,p4 or x,y,z.
    #[arg(long, allow_hyphen_values = true)]
    start: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    b: Option<String>,
    #[arg(long)]
    triple: Option<String>,
    #[arg(long)]
    fano_point: Option<usize>,
    /// Include the generator edges.
    #[arg(long)]
    edges: bool,
}

#[derive(Args, Debug)]
struct LociArgs {
    #[arg(long, allow_hyphen_values = true)]
    b: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    c: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<String>,
    /// Grid b=lo:hi:n,c=lo:hi:n.
    #[arg(long, allow_hyphen_values = true)]
    sweep: Option<String>,
}

#[derive(Args, Debug)]
struct FiberArgs {
    #[arg(long, allow_hyphen_values = true)]
    alpha: String,
    #[arg(long, allow_hyphen_values = true)]
    beta: String,
}

#[derive(Args, Debug)]
struct RealizeArgs {
    /// Target p1,p2,p3,p4.
    #[arg(long, allow_hyphen_values = true, required_unless_present = "size18")]
    p: Option<String>,
    /// Run the eigenvalue check for the size-18 orbit instead.
    #[arg(long)]
    size18: bool,
}

#[derive(Args, Debug)]
struct FanoArgs {
    #[arg(long, default_value_t = 7, conflicts_with = "all_points")]
    point: usize,
    #[arg(long)]
    all_points: bool,
}

#[derive(Args, Debug)]
struct WeylArgs {
    #[arg(long, allow_hyphen_values = true, default_value = "2")]
    a1: String,
    #[arg(long, allow_hyphen_values = true, default_value = "3")]
    a2: String,
    /// theta1,theta2,theta3,theta4 for the affine Weyl check.
    #[arg(long, allow_hyphen_values = true)]
    theta: Option<String>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(default_value = "all")]
    suite: String,
}

struct Config {
    tol: f64,
    seed: u64,
    max_orbit: usize,
    max_group: usize,
}

struct Outcome {
    value: Value,
    format: Format,
    failed: bool,
}

impl Outcome {
    fn json(value: Value) -> Self {
        Outcome { value, format: Format::Json, failed: false }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::Config(_) => 2,
        Error::OrbitTruncated(_) | Error::ClosureTruncated(_) => 4,
        Error::DictionaryNotFound(_) => 5,
        _ => 3,
    }
}

fn with(mut v: Value, extra: &[(&str, Value)]) -> Value {
    if let Some(m) = v.as_object_mut() {
        for (k, x) in extra {
            m.insert((*k).to_string(), x.clone());
        }
    }
    v
}

fn fano_triple(k: usize) -> Result<[Vector7<Rational>; 3]> {
    Ok(lines_through(k)?.map(|l| l.vector()))
}

fn triple_report<S: Scalar>(t: [Vector7<S>; 3], tol: f64) -> Result<Value> {
    let p = p_invariants(&t[0], &t[1], &t[2], tol)?;
    let ct = ClassTriple::new(t, tol)?;
    let by_traces = alpha_beta_of(&ct.product());
    let gap = by_traces.max_abs_diff(&alpha_beta_from_p(&p));
    Ok(with(invariants_json(&p), &[("alpha_beta_matrix", by_traces.to_json()), ("route_discrepancy", json!(gap))]))
}

fn cmd_invariants(a: &InvariantsArgs, cfg: &Config) -> Result<Value> {
    let given = [a.triple.is_some(), a.fano_point.is_some(), a.p.is_some()].iter().filter(|x| **x).count();
    if given != 1 {
        return Err(Error::Parse("give exactly one of --triple, --fano-point, --p".into()));
    }
    if let Some(path) = &a.triple {
        let j = read_json_file(path)?;
        return if json_is_exact(&j) {
            Ok(with(triple_report(triple_from_json::<Rational>(&j)?, 0.0)?, &[("mode", json!("exact"))]))
        } else {
            Ok(with(triple_report(triple_from_json::<Complex>(&j)?, cfg.tol)?, &[("mode", json!("float"))]))
        };
    }
    if let Some(k) = a.fano_point {
        return Ok(with(triple_report(fano_triple(k)?, 0.0)?, &[("mode", json!("exact"))]));
    }
    let nums = parse_list(&[a.p.as_deref().unwrap_or_default()])?.expect_len(4, "p")?;
    let mode = json!(nums.mode());
    Ok(match nums {
        Nums::Exact(v) => with(invariants_json(&p_from(v)), &[("mode", mode)]),
        Nums::Float(v) => with(invariants_json(&p_from(v)), &[("mode", mode)]),
    })
}

fn p_from<S: Scalar>(v: Vec<S>) -> PInvariants<S> {
    let [p1, p2, p3, p4]: [S; 4] = v.try_into().unwrap_or_else(|_| unreachable!("length checked"));
    PInvariants::new(p1, p2, p3, p4)
}

fn conserved_tol(tol: f64, reference: f64) -> f64 {
    tol.max(1e-8) * (1.0 + reference)
}

fn all_close<S: Scalar>(vals: &[S], tol: f64) -> bool {
    let r = &vals[0];
    vals.iter().all(|v| v.approx_eq(r, conserved_tol(tol, r.abs_f64())))
}

fn edges_json(e: &Option<Vec<(usize, g2cubics::braid::BraidGen, usize)>>) -> Value {
    match e {
        Some(list) => Value::Array(list.iter().map(|(a, g, b)| json!([a, g.name(), b])).collect()),
        None => Value::Null,
    }
}

fn p_level<S: Canonical>(start: PInvariants<S>, cfg: &Config, edges: bool) -> Result<Value> {
    let o = braid_orbit(start.clone(), braid_p, canon_p, cfg.max_orbit, edges)?;
    let mut points = o.points.clone();
    let merged = if S::EXACT { 0 } else { merge_close_points(&mut points, |a, b| a.max_abs_diff(b), 1e-7) };
    let sums: Vec<S> = points.iter().map(|p| p.p4.clone() + p.s1()).collect();
    let abs: Vec<AlphaBeta<S>> = points.iter().map(alpha_beta_from_p).collect();
    let ab_const = abs.iter().all(|x| x.max_abs_diff(&abs[0]) < conserved_tol(cfg.tol, abs[0].alpha.abs_f64().max(abs[0].beta.abs_f64())));
    let out = orbit_json(OrbitLevel::P, start.to_json(), None, points.iter().map(|p| p.to_json()).collect());
    Ok(with(out, &[
        ("mode", json!(if S::EXACT { "exact" } else { "float" })),
        ("merged", json!(merged)),
        ("conserved", json!({
            "p4+s1": {"value": sums[0].to_json(), "constant": all_close(&sums, cfg.tol)},
            "alpha_beta": {"value": abs[0].to_json(), "constant": ab_const},
        })),
        ("edges", edges_json(&o.edges)),
    ]))
}

fn xyz_level<S: Canonical>(start: SurfacePoint<S>, b: S, cfg: &Config, edges: bool) -> Result<Value> {
    let o = braid_orbit(start.clone(), |g, pt| braid_xyz(g, pt, &b), canon_xyz, cfg.max_orbit, edges)?;
    let mut points = o.points.clone();
    let merged = if S::EXACT { 0 } else { merge_close_points(&mut points, |a, b| a.max_abs_diff(b), 1e-7) };
    let cs: Vec<S> = points.iter().map(|p| c_from_surface(p, &b)).collect();
    let out = orbit_json(OrbitLevel::Xyz, start.to_json(), Some(b.to_json()), points.iter().map(|p| p.to_json()).collect());
    Ok(with(out, &[
        ("mode", json!(if S::EXACT { "exact" } else { "float" })),
        ("merged", json!(merged)),
        ("conserved", json!({"c": {"value": cs[0].to_json(), "constant": all_close(&cs, cfg.tol)}})),
        ("edges", edges_json(&o.edges)),
    ]))
}

fn class_level<S: Canonical>(t: [Vector7<S>; 3], tol: f64, cfg: &Config) -> Result<Value> {
    let start = ClassTriple::new(t, tol)?;
    let o = class_orbit(&start, cfg.max_orbit)?;
    let abs: Vec<AlphaBeta<S>> = o.points.iter().map(|t| alpha_beta_of(&t.product())).collect();
    let gap = abs.iter().map(|x| x.max_abs_diff(&abs[0])).fold(0.0, f64::max);
    let out = orbit_json(
        OrbitLevel::MatrixClass,
        start.invariants().to_json(),
        None,
        o.points.iter().map(|t| t.invariants().to_json()).collect(),
    );
    Ok(with(out, &[
        ("mode", json!(if S::EXACT { "exact" } else { "float" })),
        ("conserved", json!({"alpha_beta_of_product": {"value": abs[0].to_json(), "max_deviation": gap}})),
    ]))
}

fn cmd_braid(a: &BraidArgs, cfg: &Config) -> Result<Value> {
    match a.level {
        LevelArg::P => {
            let s = a.start.as_deref().ok_or_else(|| Error::Parse("--start p1,p2,p3,p4 is required".into()))?;
            match parse_list(&[s])?.expect_len(4, "p")? {
                Nums::Exact(v) => p_level(p_from(v), cfg, a.edges),
                Nums::Float(v) => p_level(p_from(v), cfg, a.edges),
            }
        }
        LevelArg::Xyz => {
            let s = a.start.as_deref().ok_or_else(|| Error::Parse("--start x,y,z is required".into()))?;
            let b = a.b.as_deref().ok_or_else(|| Error::Parse("--b is required at the xyz level".into()))?;
            match parse_list(&[s, b])?.expect_len(4, "x,y,z and b")? {
                Nums::Exact(v) => xyz_level(SurfacePoint::new(v[0].clone(), v[1].clone(), v[2].clone()), v[3].clone(), cfg, a.edges),
                Nums::Float(v) => xyz_level(SurfacePoint::new(v[0], v[1], v[2]), v[3], cfg, a.edges),
            }
        }
        LevelArg::MatrixClass => match (&a.triple, a.fano_point) {
            (Some(path), None) => {
                let j = read_json_file(path)?;
                if json_is_exact(&j) {
                    class_level(triple_from_json::<Rational>(&j)?, 0.0, cfg)
                } else {
                    class_level(triple_from_json::<Complex>(&j)?, cfg.tol, cfg)
                }
            }
            (None, Some(k)) => class_level(fano_triple(k)?, 0.0, cfg),
            _ => Err(Error::Parse("matrix-class level needs exactly one of --triple, --fano-point".into())),
        },
    }
}

fn loci_bc<S: Scalar>(params: SurfaceParams<S>, mode: &str) -> Value {
    let l = locus_values_bc(&params);
    let ab = pr(&params);
    let (d1, d2) = locus_values_ab(&ab);
    json!({
        "mode": mode,
        "b": params.b.to_json(),
        "c": params.c.to_json(),
        "sing1": l.sing1.to_json(),
        "sing2": l.sing2.to_json(),
        "dbl": l.dbl.to_json(),
        "alpha_beta": ab.to_json(),
        "d1": d1.to_json(),
        "d2": d2.to_json(),
    })
}

fn exact_fiber_json(ab: &AlphaBeta<Rational>) -> (Value, f64) {
    let fiber = pr_fiber_exact(ab);
    let mut worst = 0.0f64;
    for f in &fiber {
        let res = match (&f.b, &f.c) {
            (ExactRoot::Rational(b), ExactRoot::Rational(c)) => pr(&SurfaceParams::new(b.clone(), c.clone())).max_abs_diff(ab),
            (b, c) => {
                let abc = AlphaBeta::new(ab.alpha.to_complex(), ab.beta.to_complex());
                pr(&SurfaceParams::new(b.to_complex(), c.to_complex())).max_abs_diff(&abc)
            }
        };
        worst = worst.max(res);
    }
    let pts = fiber
        .iter()
        .map(|f| json!({"b": f.b.to_json(), "c": f.c.to_json(), "multiplicity": f.multiplicity}))
        .collect::<Vec<_>>();
    (json!(pts), worst)
}

fn float_fiber_json(ab: &AlphaBeta<Complex>) -> (Value, f64) {
    let fiber = pr_fiber(ab, FIBER_MERGE_TOL);
    let worst = fiber.iter().map(|f| pr(&f.params).max_abs_diff(ab)).fold(0.0, f64::max);
    let pts = fiber
        .iter()
        .map(|f| json!({"b": f.params.b.to_json(), "c": f.params.c.to_json(), "multiplicity": f.multiplicity}))
        .collect::<Vec<_>>();
    (json!(pts), worst)
}

fn fiber_value(nums: Nums) -> Value {
    let mode = nums.mode();
    let (pts, worst, d) = match nums {
        Nums::Exact(v) => {
            let ab = AlphaBeta::new(v[0].clone(), v[1].clone());
            let (p, w) = exact_fiber_json(&ab);
            let (d1, d2) = locus_values_ab(&ab);
            (p, w, (d1.to_json(), d2.to_json()))
        }
        Nums::Float(v) => {
            let ab = AlphaBeta::new(v[0], v[1]);
            let (p, w) = float_fiber_json(&ab);
            let (d1, d2) = locus_values_ab(&ab);
            (p, w, (d1.to_json(), d2.to_json()))
        }
    };
    let distinct = pts.as_array().map_or(0, Vec::len);
    json!({"mode": mode, "d1": d.0, "d2": d.1, "fiber": pts, "distinct_points": distinct, "max_residual": worst})
}

fn cmd_loci(a: &LociArgs) -> Result<Outcome> {
    if let Some(spec) = &a.sweep {
        let (bs, cs) = parse_sweep(spec)?;
        let mut rows = Vec::new();
        for &b in &bs {
            for &c in &cs {
                let p = SurfaceParams::new(Complex::new(b, 0.0), Complex::new(c, 0.0));
                let l = locus_values_bc(&p);
                let ab = pr(&p);
                let (d1, d2) = locus_values_ab(&ab);
                rows.push(json!([b, c, l.sing1.re, l.sing2.re, l.dbl.re, ab.alpha.re, ab.beta.re, d1.re, d2.re]));
            }
        }
        let v = json!({
            "mode": "float",
            "columns": ["b", "c", "sing1", "sing2", "dbl", "alpha", "beta", "d1", "d2"],
            "rows": rows,
        });
        return Ok(Outcome { value: v, format: Format::Csv, failed: false });
    }
    match (&a.b, &a.c, &a.alpha, &a.beta) {
        (Some(b), Some(c), None, None) => {
            let nums = parse_list(&[b, c])?;
            let mode = nums.mode();
            Ok(Outcome::json(match nums {
                Nums::Exact(v) => loci_bc(SurfaceParams::new(v[0].clone(), v[1].clone()), mode),
                Nums::Float(v) => loci_bc(SurfaceParams::new(v[0], v[1]), mode),
            }))
        }
        (None, None, Some(al), Some(be)) => Ok(Outcome::json(fiber_value(parse_list(&[al, be])?))),
        _ => Err(Error::Parse("give --b and --c, or --alpha and --beta, or --sweep".into())),
    }
}

fn cmd_realize(a: &RealizeArgs, cfg: &Config) -> Result<Outcome> {
    if a.size18 {
        let r = size18_check(cfg.tol, cfg.seed)?;
        let failed = !r.passed(1e-8, 1e-6);
        return Ok(Outcome { value: with(r.to_json(), &[("passed", json!(!failed))]), format: Format::Json, failed });
    }
    let nums = parse_list(&[a.p.as_deref().unwrap_or_default()])?.expect_len(4, "p")?;
    let p = p_from(nums.to_float());
    let t = realize_triple(&p, cfg.tol, cfg.seed)?;
    let res = realization_residual(&t, &p);
    Ok(Outcome::json(with(triple_to_json(&t), &[("mode", json!("float")), ("p", p.to_json()), ("residual", json!(res)), ("seed", json!(cfg.seed))])))
}

fn closure_json(k: usize, max: usize) -> Result<Value> {
    let r = group_closure(&point_generators(k)?, max)?;
    let all_auto = r.elements.iter().all(|g| g.is_automorphism());
    Ok(with(r.to_json(), &[("point", json!(k)), ("all_automorphisms", json!(all_auto))]))
}

fn cmd_fano(a: &FanoArgs, cfg: &Config) -> Result<Value> {
    if a.all_points {
        let per = (1..=7).map(|k| closure_json(k, cfg.max_group)).collect::<Result<Vec<_>>>()?;
        Ok(json!({ "points": per }))
    } else {
        closure_json(a.point, cfg.max_group)
    }
}

fn weyl_value<S: Scalar>(t: TorusPoint<S>, words: &[Vec<WeylGen>], mode: &str) -> Result<Value> {
    let ab = torus_alpha_beta(&t)?;
    let mut images = Vec::new();
    let mut gap = 0.0f64;
    for w in words {
        let img = weyl_word(w, &t);
        let iab = torus_alpha_beta(&img)?;
        gap = gap.max(iab.max_abs_diff(&ab));
        let name: Vec<&str> = w.iter().map(|g| if *g == WeylGen::R1 { "r1" } else { "r2" }).collect();
        images.push(json!({"word": name.join(" "), "a1": img.a1.to_json(), "a2": img.a2.to_json()}));
    }
    let (long, short) = weyl_denominator(&t)?;
    let (d1, d2) = locus_values_ab(&ab);
    Ok(json!({
        "mode": mode,
        "group_order": words.len(),
        "alpha_beta": ab.to_json(),
        "images": images,
        "invariance_residual": gap,
        "denominator_long": long.to_json(),
        "denominator_short": short.to_json(),
        "d1": d1.to_json(),
        "d2": d2.to_json(),
    }))
}

fn cmd_weyl(a: &WeylArgs, cfg: &Config) -> Result<Value> {
    let probe = TorusPoint::new(Rational::from_i64(2), Rational::from_i64(3))?;
    let words = weyl_group_words(&probe);
    let nums = parse_list(&[&a.a1, &a.a2])?;
    let mode = nums.mode();
    let mut v = match nums {
        Nums::Exact(x) => weyl_value(TorusPoint::new(x[0].clone(), x[1].clone())?, &words, mode)?,
        Nums::Float(x) => weyl_value(TorusPoint::new(x[0], x[1])?, &words, mode)?,
    };
    if let Some(th) = &a.theta {
        let t = parse_list(&[th])?.expect_len(4, "theta")?.to_float();
        let theta: [Complex; 4] = [t[0], t[1], t[2], t[3]];
        let rep = affine_weyl_check(&theta, cfg.tol.max(1e-8));
        let p = theta_params(&theta);
        let tp = theta_params(&triality(&theta));
        v = with(v, &[("affine", json!({
            "params": p.as_array().iter().map(Scalar::to_json).collect::<Vec<_>>(),
            "triality_params": tp.as_array().iter().map(Scalar::to_json).collect::<Vec<_>>(),
            "reflection_residual": rep.reflection_residual,
            "translation_residual": rep.translation_residual,
            "checks": rep.checks,
            "passed": rep.passed(),
        }))]);
    }
    Ok(v)
}

fn cmd_verify(a: &VerifyArgs, cfg: &Config) -> Result<Outcome> {
    let suites = Suite::parse(&a.suite).ok_or_else(|| Error::Parse(format!("unknown suite {:?}", a.suite)))?;
    let reports = run_suites(&suites, cfg.tol, cfg.seed);
    let passed = reports.iter().all(|r| r.passed());
    let v = json!({
        "passed": passed,
        "suites": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
    });
    Ok(Outcome { value: v, format: Format::Table, failed: !passed })
}

fn run(cli: &Cli) -> Result<Outcome> {
    set_tolerance(cli.tolerance)?;
    if cli.max_orbit == 0 || cli.max_group == 0 {
        return Err(Error::Config("--max-orbit and --max-group must be positive".into()));
    }
    let cfg = Config { tol: cli.tolerance, seed: cli.seed, max_orbit: cli.max_orbit, max_group: cli.max_group };
    match &cli.cmd {
        Cmd::Invariants(a) => cmd_invariants(a, &cfg).map(Outcome::json),
        Cmd::BraidOrbit(a) => cmd_braid(a, &cfg).map(Outcome::json),
        Cmd::Loci(a) => cmd_loci(a),
        Cmd::PrFiber(a) => Ok(Outcome::json(fiber_value(parse_list(&[&a.alpha, &a.beta])?))),
        Cmd::Realize(a) => cmd_realize(a, &cfg),
        Cmd::FanoGroup(a) => cmd_fano(a, &cfg).map(Outcome::json),
        Cmd::Weyl(a) => cmd_weyl(a, &cfg).map(Outcome::json),
        Cmd::Verify(a) => cmd_verify(a, &cfg),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let fmt = cli.format.unwrap_or(out.format);
            print!("{}", render(&out.value, fmt));
            if out.failed {
                ExitCode::from(5)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
