//! Invariants of octonion triples and the symmetric Fricke cubic surfaces
//! they parametrise.
//!
//! A triple `(v1, v2, v3)` of norm-3 imaginary octonions has invariants
//! `p1 = <v2,v3>`, `p2 = <v1,v3>`, `p3 = <v1,v2>`, `p4 = <v1, v2 v3>`. The
//! affine change of variables [`phi`] turns the level sets of `alpha` (of
//! the product `g1 g2 g3`) into the symmetric cubics
//! `xyz + x^2 + y^2 + z^2 + b(x + y + z) + c = 0`, and [`pr`] maps the
//! surface parameters `(b, c)` back to `(alpha, beta)`.

use std::cmp::Ordering;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use crate::error::Result;
use crate::g2::AlphaBeta;
use crate::matrix::{poly_eval, poly_roots};
use crate::octonion::Vector7;
use crate::scalar::{format_rational, rational_sqrt, Complex, Rational, Scalar};

/// Coordinates `(p1, p2, p3, p4)` on the quotient of triples in the class.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PInvariants<S> {
    pub p1: S,
    pub p2: S,
    pub p3: S,
    pub p4: S,
}

impl<S: Scalar> PInvariants<S> {
    pub fn new(p1: S, p2: S, p3: S, p4: S) -> Self {
        PInvariants { p1, p2, p3, p4 }
    }

    pub fn from_ints(p: [i64; 4]) -> Self {
        let [p1, p2, p3, p4] = p.map(S::from_i64);
        PInvariants { p1, p2, p3, p4 }
    }

    pub fn as_array(&self) -> [S; 4] {
        [self.p1.clone(), self.p2.clone(), self.p3.clone(), self.p4.clone()]
    }

    pub fn s1(&self) -> S {
        self.p1.clone() + self.p2.clone() + self.p3.clone()
    }

    pub fn s2(&self) -> S {
        self.p1.clone() * self.p2.clone() + self.p2.clone() * self.p3.clone() + self.p3.clone() * self.p1.clone()
    }

    pub fn s3(&self) -> S {
        self.p1.clone() * self.p2.clone() * self.p3.clone()
    }

    /// `p1 + p2 + p3 + p4`, conserved by the braid group.
    pub fn total(&self) -> S {
        self.s1() + self.p4.clone()
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.as_array().iter().zip(other.as_array().iter()).all(|(a, b)| a.approx_eq(b, tol))
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.as_array()
            .iter()
            .zip(other.as_array().iter())
            .map(|(a, b)| (a.clone() - b.clone()).abs_f64())
            .fold(0.0, f64::max)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.as_array().iter().map(Scalar::to_json).collect())
    }
}

/// Parameters `(b, c)` of a symmetric Fricke cubic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SurfaceParams<S> {
    pub b: S,
    pub c: S,
}

/// Parameters `(b1, b2, b3, c)` of a general Fricke cubic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AsymParams<S> {
    pub b1: S,
    pub b2: S,
    pub b3: S,
    pub c: S,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SurfacePoint<S> {
    pub x: S,
    pub y: S,
    pub z: S,
}

impl<S: Scalar> SurfaceParams<S> {
    pub fn new(b: S, c: S) -> Self {
        SurfaceParams { b, c }
    }

    pub fn from_ints(b: i64, c: i64) -> Self {
        SurfaceParams { b: S::from_i64(b), c: S::from_i64(c) }
    }

    pub fn to_asym(&self) -> AsymParams<S> {
        AsymParams { b1: self.b.clone(), b2: self.b.clone(), b3: self.b.clone(), c: self.c.clone() }
    }
}

impl<S: Scalar> AsymParams<S> {
    pub fn from_ints(p: [i64; 4]) -> Self {
        let [b1, b2, b3, c] = p.map(S::from_i64);
        AsymParams { b1, b2, b3, c }
    }

    pub fn is_symmetric(&self, tol: f64) -> bool {
        self.b1.approx_eq(&self.b2, tol) && self.b2.approx_eq(&self.b3, tol)
    }

    pub fn as_array(&self) -> [S; 4] {
        [self.b1.clone(), self.b2.clone(), self.b3.clone(), self.c.clone()]
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.as_array()
            .iter()
            .zip(other.as_array().iter())
            .map(|(a, b)| (a.clone() - b.clone()).abs_f64())
            .fold(0.0, f64::max)
    }
}

impl<S: Scalar> SurfacePoint<S> {
    pub fn new(x: S, y: S, z: S) -> Self {
        SurfacePoint { x, y, z }
    }

    pub fn from_ints(p: [i64; 3]) -> Self {
        let [x, y, z] = p.map(S::from_i64);
        SurfacePoint { x, y, z }
    }

    pub fn as_array(&self) -> [S; 3] {
        [self.x.clone(), self.y.clone(), self.z.clone()]
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.as_array().iter().zip(other.as_array().iter()).all(|(a, b)| a.approx_eq(b, tol))
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.as_array()
            .iter()
            .zip(other.as_array().iter())
            .map(|(a, b)| (a.clone() - b.clone()).abs_f64())
            .fold(0.0, f64::max)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.as_array().iter().map(Scalar::to_json).collect())
    }
}

/// Anything that supplies the four coefficients `(b1, b2, b3, c)`.
pub trait FrickeCoefficients<S> {
    fn coefficients(&self) -> [S; 4];
}

impl<S: Scalar> FrickeCoefficients<S> for SurfaceParams<S> {
    fn coefficients(&self) -> [S; 4] {
        [self.b.clone(), self.b.clone(), self.b.clone(), self.c.clone()]
    }
}

impl<S: Scalar> FrickeCoefficients<S> for AsymParams<S> {
    fn coefficients(&self) -> [S; 4] {
        self.as_array()
    }
}

/// `p1 = <v2,v3>`, `p2 = <v1,v3>`, `p3 = <v1,v2>`, `p4 = <v1, v2 v3>`.
pub fn p_invariants<S: Scalar>(v1: &Vector7<S>, v2: &Vector7<S>, v3: &Vector7<S>, tol: f64) -> Result<PInvariants<S>> {
    for v in [v1, v2, v3] {
        v.check_norm_three(tol)?;
    }
    Ok(p_invariants_unchecked(v1, v2, v3))
}

pub(crate) fn p_invariants_unchecked<S: Scalar>(v1: &Vector7<S>, v2: &Vector7<S>, v3: &Vector7<S>) -> PInvariants<S> {
    PInvariants { p1: v2.form(v3), p2: v1.form(v3), p3: v1.form(v2), p4: v1.triple(v2, v3) }
}

/// `(alpha, beta)` of `g1 g2 g3` as polynomials in `p4, s1, s2, s3`.
pub fn alpha_beta_from_p<S: Scalar>(p: &PInvariants<S>) -> AlphaBeta<S> {
    let (p4, s1, s2, s3) = (p.p4.clone(), p.s1(), p.s2(), p.s3());
    let k = |n: i64| S::from_i64(n);
    let alpha8 = p4.clone() * s1.clone() - s1.square() + k(3) * p4.clone() + k(3) * s1.clone() + k(3) * s2.clone()
        + s3.clone()
        - k(6);
    let beta64 = -p4.pow(3) + k(3) * p4.square() * s1.clone() - k(3) * p4.clone() * s1.square() - k(7) * s1.pow(3)
        + k(9) * p4.square()
        - k(12) * p4.clone() * s1.clone()
        + k(18) * p4.clone() * s2.clone()
        + k(6) * p4.clone() * s3.clone()
        + k(39) * s1.square()
        + k(18) * s1.clone() * s2.clone()
        + k(6) * s1.clone() * s3.clone()
        - k(9) * p4
        - k(9) * s1
        - k(90) * s2
        - k(30) * s3
        - k(183);
    AlphaBeta { alpha: alpha8.div_int(8), beta: beta64.div_int(64) }
}

/// `x = (1 - p1)/2` etc. and `b = (p1 + p2 + p3 + p4 - 5)/4`.
pub fn phi<S: Scalar>(p: &PInvariants<S>) -> (SurfacePoint<S>, S) {
    let half = |q: &S| (S::one() - q.clone()).div_int(2);
    let pt = SurfacePoint { x: half(&p.p1), y: half(&p.p2), z: half(&p.p3) };
    let b = (p.total() - S::from_i64(5)).div_int(4);
    (pt, b)
}

pub fn phi_inv<S: Scalar>(pt: &SurfacePoint<S>, b: &S) -> PInvariants<S> {
    let lin = |x: &S| S::one() - x.scale(2);
    let (p1, p2, p3) = (lin(&pt.x), lin(&pt.y), lin(&pt.z));
    let p4 = b.scale(4) + S::from_i64(5) - p1.clone() - p2.clone() - p3.clone();
    PInvariants { p1, p2, p3, p4 }
}

/// Solve the symmetric Fricke equation for `c`.
pub fn c_from_surface<S: Scalar>(pt: &SurfacePoint<S>, b: &S) -> S {
    let (x, y, z) = (&pt.x, &pt.y, &pt.z);
    -(x.clone() * y.clone() * z.clone()
        + x.square()
        + y.square()
        + z.square()
        + b.clone() * (x.clone() + y.clone() + z.clone()))
}

/// `xyz + x^2 + y^2 + z^2 + b1 x + b2 y + b3 z + c`.
pub fn fricke_residual<S: Scalar, P: FrickeCoefficients<S>>(pt: &SurfacePoint<S>, params: &P) -> S {
    let [b1, b2, b3, c] = params.coefficients();
    let (x, y, z) = (&pt.x, &pt.y, &pt.z);
    x.clone() * y.clone() * z.clone() + x.square() + y.square() + z.square() + b1 * x.clone() + b2 * y.clone()
        + b3 * z.clone()
        + c
}

/// `alpha = c + 2 + 3b`, `beta = -b^3 + 3b^2 + 3bc + 3b - 2`.
pub fn pr<S: Scalar>(params: &SurfaceParams<S>) -> AlphaBeta<S> {
    let (b, c) = (&params.b, &params.c);
    let alpha = c.clone() + S::from_i64(2) + b.scale(3);
    let beta = -b.pow(3) + b.square().scale(3) + (b.clone() * c.clone()).scale(3) + b.scale(3) - S::from_i64(2);
    AlphaBeta { alpha, beta }
}

/// Monic cubic `b^3 + 6b^2 - 3(alpha - 1) b + beta + 2` whose roots are the
/// `b`-values of the fibre of [`pr`].
pub fn fiber_cubic<S: Scalar>(ab: &AlphaBeta<S>) -> [S; 4] {
    [
        S::one(),
        S::from_i64(6),
        -(ab.alpha.clone() - S::one()).scale(3),
        ab.beta.clone() + S::from_i64(2),
    ]
}

/// `c = alpha - 2 - 3b` on the fibre over `alpha`.
pub fn c_on_fiber<S: Scalar>(ab: &AlphaBeta<S>, b: &S) -> S {
    ab.alpha.clone() - S::from_i64(2) - b.scale(3)
}

#[derive(Clone, Debug, PartialEq)]
pub struct FiberPoint<S> {
    pub params: SurfaceParams<S>,
    pub multiplicity: usize,
}

/// Default distance below which numeric fibre roots are merged.
pub const FIBER_MERGE_TOL: f64 = 1e-8;

/// Numeric fibre of [`pr`]: companion-matrix roots of [`fiber_cubic`],
/// merged when closer than `merge_tol`. A pair of roots is also merged
/// when it straddles a numerical double root (the derivative vanishes at
/// its midpoint), since a double root only resolves to about `sqrt(eps)`.
pub fn pr_fiber(ab: &AlphaBeta<Complex>, merge_tol: f64) -> Vec<FiberPoint<Complex>> {
    let cubic = fiber_cubic(ab);
    let deriv = [Complex::new(3.0, 0.0), Complex::new(12.0, 0.0), cubic[2]];
    let roots = poly_roots(&cubic);
    let scale = 1.0 + cubic.iter().map(|c| c.norm()).fold(0.0, f64::max);
    let mut clusters: Vec<(Complex, usize)> = Vec::new();
    for r in roots {
        let hit = clusters.iter_mut().find(|(c, m)| {
            let mean = *c / *m as f64;
            let d = (mean - r).norm();
            d < merge_tol || (d < 1e-5 && poly_eval(&deriv, &((mean + r) * 0.5)).norm() < 1e-6 * scale)
        });
        match hit {
            Some((c, m)) => {
                *c += r;
                *m += 1;
            }
            None => clusters.push((r, 1)),
        }
    }
    let mut out: Vec<FiberPoint<Complex>> = clusters
        .into_iter()
        .map(|(sum, m)| {
            let b = sum / m as f64;
            FiberPoint { params: SurfaceParams { c: c_on_fiber(ab, &b), b }, multiplicity: m }
        })
        .collect();
    out.sort_by(|a, b| cmp_complex(&a.params.b, &b.params.b));
    out
}

fn cmp_complex(a: &Complex, b: &Complex) -> Ordering {
    a.re.partial_cmp(&b.re).unwrap_or(Ordering::Equal).then(a.im.partial_cmp(&b.im).unwrap_or(Ordering::Equal))
}

/// An exact algebraic number of degree at most two, or a numeric fallback
/// for roots of irreducible cubics.
#[derive(Clone, Debug, PartialEq)]
pub enum ExactRoot {
    Rational(Rational),
    /// `a + b sqrt(d)` with `d` not a rational square.
    Quadratic { a: Rational, b: Rational, d: Rational },
    Numeric(Complex),
}

impl ExactRoot {
    pub fn to_complex(&self) -> Complex {
        match self {
            ExactRoot::Rational(q) => q.to_complex(),
            ExactRoot::Quadratic { a, b, d } => a.to_complex() + b.to_complex() * d.to_complex().sqrt(),
            ExactRoot::Numeric(z) => *z,
        }
    }

    /// `k0 + k1 * self` for rationals `k0, k1`.
    pub fn affine(&self, k0: &Rational, k1: &Rational) -> ExactRoot {
        match self {
            ExactRoot::Rational(q) => ExactRoot::Rational(k0 + k1 * q),
            ExactRoot::Quadratic { a, b, d } => ExactRoot::Quadratic { a: k0 + k1 * a, b: k1 * b, d: d.clone() },
            ExactRoot::Numeric(z) => ExactRoot::Numeric(k0.to_complex() + k1.to_complex() * z),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            ExactRoot::Rational(q) => q.to_json(),
            ExactRoot::Quadratic { a, b, d } => Value::String(format!(
                "{} + {}*sqrt({})",
                format_rational(a),
                format_rational(b),
                format_rational(d)
            )),
            ExactRoot::Numeric(z) => z.to_json(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExactFiberPoint {
    pub b: ExactRoot,
    pub c: ExactRoot,
    pub multiplicity: usize,
}

/// Exact fibre of [`pr`] over rational `(alpha, beta)`. Repeated roots are
/// found through `gcd(f, f')` (they are always rational); otherwise a
/// rational root is searched for, the quotient quadratic is solved with a
/// square-free check, and irreducible cubics fall back to numeric roots.
pub fn pr_fiber_exact(ab: &AlphaBeta<Rational>) -> Vec<ExactFiberPoint> {
    let f = fiber_cubic(ab);
    let roots = exact_cubic_roots(&f);
    let k0 = ab.alpha.clone() - Rational::from_i64(2);
    let k1 = Rational::from_i64(-3);
    let mut out: Vec<ExactFiberPoint> = roots
        .into_iter()
        .map(|(b, m)| ExactFiberPoint { c: b.affine(&k0, &k1), b, multiplicity: m })
        .collect();
    out.sort_by(|x, y| cmp_complex(&x.b.to_complex(), &y.b.to_complex()));
    out
}

/// Roots with multiplicity of a monic rational cubic.
pub fn exact_cubic_roots(f: &[Rational; 4]) -> Vec<(ExactRoot, usize)> {
    let deriv = [Rational::from_i64(3), f[1].clone() * Rational::from_i64(2), f[2].clone()];
    let g = poly_gcd(f, &deriv);
    let sum_of_roots = -f[1].clone();
    match g.len() - 1 {
        2 => {
            // g = (x - r)^2
            let r = -g[1].clone() / Rational::from_i64(2);
            vec![(ExactRoot::Rational(r), 3)]
        }
        1 => {
            let r = -g[1].clone();
            let other = sum_of_roots - r.clone() * Rational::from_i64(2);
            vec![(ExactRoot::Rational(r), 2), (ExactRoot::Rational(other), 1)]
        }
        _ => match find_rational_root(f) {
            Some(r) => {
                // deflate: x^2 + p x + q
                let p = f[1].clone() + r.clone();
                let q = f[2].clone() + p.clone() * r.clone();
                let mut out = vec![(ExactRoot::Rational(r), 1)];
                let half = Rational::from_ratio(1, 2);
                let disc = p.clone() * p.clone() - q * Rational::from_i64(4);
                let a = -p * half.clone();
                match rational_sqrt(&disc) {
                    Some(s) => {
                        out.push((ExactRoot::Rational(a.clone() - s.clone() * half.clone()), 1));
                        out.push((ExactRoot::Rational(a + s * half), 1));
                    }
                    None => {
                        out.push((ExactRoot::Quadratic { a: a.clone(), b: -half.clone(), d: disc.clone() }, 1));
                        out.push((ExactRoot::Quadratic { a, b: half, d: disc }, 1));
                    }
                }
                out
            }
            None => {
                let fc: Vec<Complex> = f.iter().map(Scalar::to_complex).collect();
                poly_roots(&fc).into_iter().map(|z| (ExactRoot::Numeric(z), 1)).collect()
            }
        },
    }
}

/// Monic gcd of two rational polynomials (highest degree first).
pub fn poly_gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let trim = |p: Vec<Rational>| -> Vec<Rational> {
        let first = p.iter().position(|c| !Scalar::is_zero_within(c, 0.0));
        match first {
            Some(i) => p[i..].to_vec(),
            None => Vec::new(),
        }
    };
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        // x mod y
        let mut r = x.clone();
        while r.len() >= y.len() && !r.is_empty() {
            let factor = r[0].clone() / y[0].clone();
            for (i, c) in y.iter().enumerate() {
                r[i] = r[i].clone() - factor.clone() * c.clone();
            }
            r = trim(r);
        }
        x = y;
        y = r;
    }
    let lead = x[0].clone();
    x.into_iter().map(|c| c / lead.clone()).collect()
}

/// A rational root of a monic rational cubic, if one exists. After the
/// substitution `x = u / L` clearing denominators, rational roots are
/// integers `u`, located from the numeric roots and verified exactly.
fn find_rational_root(f: &[Rational; 4]) -> Option<Rational> {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::{One, ToPrimitive};

    let l = f[1..].iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let lq = Rational::from_integer(l.clone());
    let fc: Vec<Complex> = f.iter().map(Scalar::to_complex).collect();
    for z in poly_roots(&fc) {
        if z.im.abs() > 1e-6 * (1.0 + z.re.abs()) {
            continue;
        }
        let approx = z.re * l.to_f64().unwrap_or(f64::INFINITY);
        if !approx.is_finite() {
            continue;
        }
        let centre = approx.round();
        for delta in [-1.0, 0.0, 1.0] {
            let u = BigInt::from((centre + delta) as i64);
            let cand = Rational::from_integer(u) / lq.clone();
            if poly_eval(f, &cand) == Rational::from_i64(0) {
                return Some(cand);
            }
        }
    }
    None
}

/// `d1 = 4a^3 - 12ab - b^2 - 36a - 24b - 36` and `d2 = a^2 - 4b - 12` for
/// `(a, b) = (alpha, beta)`.
pub fn locus_values_ab<S: Scalar>(ab: &AlphaBeta<S>) -> (S, S) {
    let (a, b) = (&ab.alpha, &ab.beta);
    let k = |n: i64| S::from_i64(n);
    let d1 = k(4) * a.pow(3) - k(12) * a.clone() * b.clone() - b.square() - k(36) * a.clone() - k(24) * b.clone() - k(36);
    let d2 = a.square() - k(4) * b.clone() - k(12);
    (d1, d2)
}

#[derive(Clone, Debug, PartialEq)]
pub struct BcLoci<S> {
    /// `b^2 - 8b - 4c - 16`, the very symmetric component.
    pub sing1: S,
    /// `4b^3 - 3b^2 - 6bc + c^2 + 4c`, the cuspidal component.
    pub sing2: S,
    /// `b^2 + b - c - 1`, the extra component of the preimage of `d1 = 0`.
    pub dbl: S,
}

pub fn locus_values_bc<S: Scalar>(params: &SurfaceParams<S>) -> BcLoci<S> {
    let (b, c) = (&params.b, &params.c);
    let k = |n: i64| S::from_i64(n);
    BcLoci {
        sing1: b.square() - k(8) * b.clone() - k(4) * c.clone() - k(16),
        sing2: k(4) * b.pow(3) - k(3) * b.square() - k(6) * b.clone() * c.clone() + c.square() + k(4) * c.clone(),
        dbl: b.square() + b.clone() - c.clone() - S::one(),
    }
}

/// Parameters when all four local monodromies share the trace `m`.
pub fn very_symmetric<S: Scalar>(m: &S) -> SurfaceParams<S> {
    let m2 = m.square();
    SurfaceParams { b: -m2.scale(2), c: m2.square() - S::from_i64(4) + m2.scale(4) }
}

/// Both sides of `f(2 - X^2, 2 - Y^2, 2 - Z^2) = g(X, Y, Z) g(-X, Y, Z)`,
/// where `f` is the very symmetric cubic with `c = b^2/4 - 2b - 4` and
/// `g = XYZ + X^2 + Y^2 + Z^2 + d` with `d = -4 - b/2`.
pub fn covering_check<S: Scalar>(b: &S, x: &S, y: &S, z: &S) -> (S, S) {
    let two = S::from_i64(2);
    let c = b.square().div_int(4) - b.scale(2) - S::from_i64(4);
    let d = -S::from_i64(4) - b.div_int(2);
    let pt = SurfacePoint { x: two.clone() - x.square(), y: two.clone() - y.square(), z: two - z.square() };
    let lhs = fricke_residual(&pt, &SurfaceParams { b: b.clone(), c });
    let g = |xx: S| xx.clone() * y.clone() * z.clone() + xx.square() + y.square() + z.square() + d.clone();
    let rhs = g(x.clone()) * g(-x.clone());
    (lhs, rhs)
}

/// Partial derivatives of the symmetric Fricke polynomial.
pub fn fricke_gradient<S: Scalar>(pt: &SurfacePoint<S>, b: &S) -> [S; 3] {
    let two = S::from_i64(2);
    let (x, y, z) = (&pt.x, &pt.y, &pt.z);
    [
        y.clone() * z.clone() + two.clone() * x.clone() + b.clone(),
        x.clone() * z.clone() + two.clone() * y.clone() + b.clone(),
        x.clone() * y.clone() + two * z.clone() + b.clone(),
    ]
}

/// Newton multistart on the gradient system; returns a critical point lying
/// on the surface (`|residual| < tol`), if one is found.
pub fn find_singular_point(params: &SurfaceParams<Complex>, tol: f64, starts: usize, seed: u64) -> Option<SurfacePoint<Complex>> {
    critical_points(&params.b, starts, seed)
        .into_iter()
        .find(|p| fricke_residual(p, params).norm() < tol)
}

/// Distinct critical points of the symmetric Fricke polynomial found from
/// `starts` random initial points.
pub fn critical_points(b: &Complex, starts: usize, seed: u64) -> Vec<SurfacePoint<Complex>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let scale = 2.0 + 2.0 * b.norm().sqrt();
    let mut found: Vec<SurfacePoint<Complex>> = Vec::new();
    for _ in 0..starts {
        let mut p = SurfacePoint {
            x: Complex::new(rng.gen_range(-scale..scale), rng.gen_range(-scale..scale)),
            y: Complex::new(rng.gen_range(-scale..scale), rng.gen_range(-scale..scale)),
            z: Complex::new(rng.gen_range(-scale..scale), rng.gen_range(-scale..scale)),
        };
        let mut converged = false;
        for _ in 0..100 {
            let g = fricke_gradient(&p, b);
            let gn = g.iter().map(|v| v.norm()).fold(0.0, f64::max);
            if gn < 1e-13 * (1.0 + b.norm()) {
                converged = true;
                break;
            }
            let two = Complex::new(2.0, 0.0);
            let jac = [[two, p.z, p.y], [p.z, two, p.x], [p.y, p.x, two]];
            match solve3(&jac, &g) {
                Some(step) => {
                    p.x -= step[0];
                    p.y -= step[1];
                    p.z -= step[2];
                }
                None => break,
            }
        }
        if !converged {
            let g = fricke_gradient(&p, b);
            converged = g.iter().map(|v| v.norm()).fold(0.0, f64::max) < 1e-9 * (1.0 + b.norm());
        }
        if converged && !found.iter().any(|q| q.max_abs_diff(&p) < 1e-6) {
            found.push(p);
        }
    }
    found
}

fn solve3(a: &[[Complex; 3]; 3], rhs: &[Complex; 3]) -> Option<[Complex; 3]> {
    let det3 = |m: &[[Complex; 3]; 3]| {
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    };
    let d = det3(a);
    if d.norm() < 1e-300 {
        return None;
    }
    let mut out = [Complex::new(0.0, 0.0); 3];
    for (k, slot) in out.iter_mut().enumerate() {
        let mut m = *a;
        for i in 0..3 {
            m[i][k] = rhs[i];
        }
        *slot = det3(&m) / d;
    }
    Some(out)
}

/// JSON summary of the invariants pipeline for one point of the quotient.
pub fn invariants_json<S: Scalar>(p: &PInvariants<S>) -> Value {
    let (pt, b) = phi(p);
    let c = c_from_surface(&pt, &b);
    let ab = alpha_beta_from_p(p);
    let mut xyzb: Vec<Value> = pt.as_array().iter().map(Scalar::to_json).collect();
    xyzb.push(b.to_json());
    serde_json::json!({
        "p": p.to_json(),
        "xyzb": xyzb,
        "c": c.to_json(),
        "alpha_beta": ab.to_json(),
    })
}
