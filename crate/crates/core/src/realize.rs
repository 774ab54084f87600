//! Numeric section of the invariant map: a triple of norm-3 vectors with
//! prescribed `p1..p4`, and the eigenvalue check for the size-18 orbit.

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::fricke::{p_invariants_unchecked, PInvariants};
use crate::g2::conj_map;
use crate::matrix::{poly_divrem_monic, poly_eval, poly_mul, poly_roots};
use crate::octonion::Vector7;
use crate::scalar::{csqrt, Complex, Rational, Scalar};

type Triple = [Vector7<Complex>; 3];

fn from_dvec(v: &DVector<Complex>) -> Vector7<Complex> {
    Vector7 { c: std::array::from_fn(|i| v[i]) }
}

/// Largest deviation of the triple's invariants and norms from the targets.
pub fn realization_residual(t: &Triple, p: &PInvariants<Complex>) -> f64 {
    let got = p_invariants_unchecked(&t[0], &t[1], &t[2]);
    let three = Complex::new(3.0, 0.0);
    t.iter().map(|v| (v.norm() - three).norm()).fold(got.max_abs_diff(p), f64::max)
}

/// Conditions on `v3` that are linear once `v1`, `v2` are fixed:
/// `<v2, v3> = p1`, `<v1, v3> = p2`, `<v1, v2 v3> = p4`.
fn linear_system(v1: &Vector7<Complex>, v2: &Vector7<Complex>) -> DMatrix<Complex> {
    DMatrix::from_fn(3, 7, |i, j| match i {
        0 => v2.c[j],
        1 => v1.c[j],
        _ => v1.triple(v2, &Vector7::basis(j + 1)),
    })
}

/// `v1 = sqrt(3) e1`, `v2` in the span of `e1, e2`, then `v3` from the
/// three linear conditions plus a complement direction fixing its norm,
/// polished by Gauss-Newton.
pub fn realize_triple(p: &PInvariants<Complex>, tol: f64, seed: u64) -> Result<Triple> {
    let s3 = 3f64.sqrt();
    let mut v1 = Vector7::<Complex>::zero();
    v1.c[0] = Complex::new(s3, 0.0);
    let a = p.p3 / s3;
    let mut b = csqrt(Complex::new(3.0, 0.0) - a * a);
    if b.im < 0.0 || (b.im == 0.0 && b.re < 0.0) {
        b = -b;
    }
    let mut v2 = Vector7::<Complex>::zero();
    v2.c[0] = a;
    v2.c[1] = b;

    let lin = linear_system(&v1, &v2);
    let pinv = lin.clone().pseudo_inverse(1e-10).map_err(|e| Error::RealizationFailed {
        residual: f64::INFINITY,
        reason: e.to_string(),
    })?;
    let rhs = DVector::from_vec(vec![p.p1, p.p2, p.p4]);
    let x0 = &pinv * &rhs;
    let proj = DMatrix::<Complex>::identity(7, 7) - &pinv * &lin;
    let bil = |u: &DVector<Complex>, w: &DVector<Complex>| (0..7).map(|i| u[i] * w[i]).sum::<Complex>();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<(f64, Triple)> = None;
    for _ in 0..8 {
        let r = DVector::from_fn(7, |_, _| Complex::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
        let n = &proj * r;
        let qn = bil(&n, &n);
        if qn.norm() < 1e-6 {
            continue;
        }
        // q(x0 + t n) = 3
        let bx = bil(&x0, &n);
        let c0 = bil(&x0, &x0) - 3.0;
        let disc = csqrt(bx * bx - qn * c0);
        let (t1, t2) = ((-bx + disc) / qn, (-bx - disc) / qn);
        let t = if t1.norm() <= t2.norm() { t1 } else { t2 };
        let mut v3 = &x0 + &n * t;
        newton_polish(&lin, &rhs, &mut v3);
        let cand = [v1.clone(), v2.clone(), from_dvec(&v3)];
        let res = realization_residual(&cand, p);
        if res < tol {
            return Ok(cand);
        }
        if best.as_ref().is_none_or(|(r, _)| res < *r) {
            best = Some((res, cand));
        }
    }
    Err(Error::RealizationFailed {
        residual: best.map_or(f64::INFINITY, |(r, _)| r),
        reason: "no norm-3 solution of the linear conditions".into(),
    })
}

fn newton_polish(lin: &DMatrix<Complex>, rhs: &DVector<Complex>, v3: &mut DVector<Complex>) {
    for _ in 0..6 {
        let lv = lin * &*v3;
        let mut f = DVector::zeros(4);
        for i in 0..3 {
            f[i] = lv[i] - rhs[i];
        }
        f[3] = v3.iter().map(|x| x * x).sum::<Complex>() - 3.0;
        if f.iter().all(|x| x.norm() < 1e-15) {
            return;
        }
        let jac = DMatrix::from_fn(4, 7, |i, j| if i < 3 { lin[(i, j)] } else { v3[j] * 2.0 });
        let Ok(jp) = jac.pseudo_inverse(1e-12) else { return };
        *v3 -= jp * f;
    }
}

/// `x^6 - 2x^5 + 2x^4 - 3x^3 + 2x^2 - 2x + 1`.
pub const SEXTIC: [i64; 7] = [1, -2, 2, -3, 2, -2, 1];

/// `(-1, -1, 1 - 4 cos(k pi/7), 2 - 4 cos(k pi/7))`.
pub fn size18_invariants(k: u32) -> PInvariants<Complex> {
    let c = (k as f64 * std::f64::consts::PI / 7.0).cos();
    let r = |x: f64| Complex::new(x, 0.0);
    PInvariants::new(r(-1.0), r(-1.0), r(1.0 - 4.0 * c), r(2.0 - 4.0 * c))
}

#[derive(Clone, Debug)]
pub struct Size18Report {
    pub realize_residual: f64,
    /// Characteristic polynomial of `g1^2 g2` for the realized triple.
    pub charpoly: Vec<Complex>,
    /// Eigenvalues of `g1^2 g2` at which the sextic vanishes (< 1e-6).
    pub sextic_eigenvalues: Vec<Complex>,
    /// Product of the characteristic polynomials over `k = 1, 3, 5`,
    /// rounded to integers.
    pub norm_poly: Vec<i64>,
    /// Distance of the product's coefficients from those integers.
    pub rounding_residual: f64,
    /// Largest remainder coefficient on dividing the product by the sextic.
    pub remainder_residual: f64,
    pub exact_divisible: bool,
    /// `sextic(1) < 0 < sextic(2)`, evaluated exactly.
    pub sign_change: bool,
    pub real_root: f64,
}

impl Size18Report {
    pub fn passed(&self, realize_tol: f64, coeff_tol: f64) -> bool {
        self.realize_residual < realize_tol
            && self.remainder_residual < coeff_tol
            && self.rounding_residual < coeff_tol
            && self.exact_divisible
            && !self.sextic_eigenvalues.is_empty()
            && self.sign_change
            && self.real_root > 1.0
    }

    pub fn to_json(&self) -> Value {
        serde_json::json!({
            "realize_residual": self.realize_residual,
            "charpoly": self.charpoly.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
            "sextic_eigenvalues": self.sextic_eigenvalues.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
            "norm_poly": self.norm_poly,
            "rounding_residual": self.rounding_residual,
            "remainder_residual": self.remainder_residual,
            "exact_divisible": self.exact_divisible,
            "sign_change": self.sign_change,
            "real_root": self.real_root,
        })
    }
}

fn square_times_charpoly(t: &Triple) -> Result<Vec<Complex>> {
    let g1 = conj_map(&t[0], 1e-8)?;
    let g2 = conj_map(&t[1], 1e-8)?;
    Ok(g1.m.matmul(&g1.m).matmul(&g2.m).charpoly())
}

pub fn size18_check(tol: f64, seed: u64) -> Result<Size18Report> {
    let sextic_c: Vec<Complex> = SEXTIC.iter().map(|&c| Complex::new(c as f64, 0.0)).collect();
    let p = size18_invariants(1);
    let t = realize_triple(&p, tol, seed)?;
    let realize_residual = realization_residual(&t, &p);
    let charpoly = square_times_charpoly(&t)?;
    let sextic_eigenvalues: Vec<Complex> =
        poly_roots(&charpoly).into_iter().filter(|l| poly_eval(&sextic_c, l).norm() < 1e-6).collect();

    let mut norm = vec![Complex::new(1.0, 0.0)];
    for k in [1, 3, 5] {
        let tk = realize_triple(&size18_invariants(k), tol, seed)?;
        norm = poly_mul(&norm, &square_times_charpoly(&tk)?);
    }
    let norm_poly: Vec<i64> = norm.iter().map(|c| c.re.round() as i64).collect();
    let rounding_residual = norm
        .iter()
        .zip(&norm_poly)
        .map(|(c, &n)| (c - Complex::new(n as f64, 0.0)).norm())
        .fold(0.0, f64::max);
    let (_, rem) = poly_divrem_monic(&norm, &sextic_c);
    let remainder_residual = rem.iter().map(|c| c.norm()).fold(0.0, f64::max);
    let exact_num: Vec<Rational> = norm_poly.iter().map(|&n| Rational::from_i64(n)).collect();
    let exact_den: Vec<Rational> = SEXTIC.iter().map(|&n| Rational::from_i64(n)).collect();
    let (_, exact_rem) = poly_divrem_monic(&exact_num, &exact_den);
    let exact_divisible = exact_rem.iter().all(|r| *r == Rational::zero());

    let at = |x: i64| poly_eval(&exact_den, &Rational::from_i64(x));
    let sign_change = at(1) < Rational::zero() && at(2) > Rational::zero();
    let f = |x: f64| SEXTIC.iter().fold(0.0, |acc, &c| acc * x + c as f64);
    let (mut lo, mut hi) = (1.0, 2.0);
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(Size18Report {
        realize_residual,
        charpoly,
        sextic_eigenvalues,
        norm_poly,
        rounding_residual,
        remainder_residual,
        exact_divisible,
        sign_change,
        real_root: 0.5 * (lo + hi),
    })
}
