//! SL2 traces, Fricke parameters, theta parameters and the D4 root system
//! with norm-one roots.

use rand::Rng;

use crate::error::{Error, Result};
use crate::fricke::{fricke_residual, AsymParams, SurfacePoint};
use crate::scalar::{Complex, Rational, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct SL2Matrix<S> {
    pub a: S,
    pub b: S,
    pub c: S,
    pub d: S,
}

impl<S: Scalar> SL2Matrix<S> {
    pub fn new(a: S, b: S, c: S, d: S) -> Self {
        SL2Matrix { a, b, c, d }
    }

    pub fn from_ints(m: [[i64; 2]; 2]) -> Self {
        SL2Matrix::new(S::from_i64(m[0][0]), S::from_i64(m[0][1]), S::from_i64(m[1][0]), S::from_i64(m[1][1]))
    }

    pub fn identity() -> Self {
        Self::from_ints([[1, 0], [0, 1]])
    }

    pub fn det(&self) -> S {
        self.a.clone() * self.d.clone() - self.b.clone() * self.c.clone()
    }

    pub fn trace(&self) -> S {
        self.a.clone() + self.d.clone()
    }

    pub fn mul(&self, o: &Self) -> Self {
        SL2Matrix {
            a: self.a.clone() * o.a.clone() + self.b.clone() * o.c.clone(),
            b: self.a.clone() * o.b.clone() + self.b.clone() * o.d.clone(),
            c: self.c.clone() * o.a.clone() + self.d.clone() * o.c.clone(),
            d: self.c.clone() * o.b.clone() + self.d.clone() * o.d.clone(),
        }
    }

    pub fn check_unimodular(&self, tol: f64) -> Result<()> {
        let r = self.det() - S::one();
        if r.is_zero_within(tol) {
            Ok(())
        } else {
            Err(Error::NotUnimodular(format!("det - 1 = {:.3e}", r.abs_f64())))
        }
    }
}

/// `x = Tr(M2 M3)`, `y = Tr(M1 M3)`, `z = Tr(M1 M2)`, `m_i = Tr(M_i)` and
/// `m4 = Tr(M1 M2 M3)`.
#[derive(Clone, Debug, PartialEq)]
pub struct TraceSeven<S> {
    pub x: S,
    pub y: S,
    pub z: S,
    pub m: [S; 4],
}

impl<S: Scalar> TraceSeven<S> {
    pub fn point(&self) -> SurfacePoint<S> {
        SurfacePoint::new(self.x.clone(), self.y.clone(), self.z.clone())
    }

    pub fn as_array(&self) -> [S; 7] {
        let [m1, m2, m3, m4] = self.m.clone();
        [self.x.clone(), self.y.clone(), self.z.clone(), m1, m2, m3, m4]
    }
}

pub fn seven_functions<S: Scalar>(m1: &SL2Matrix<S>, m2: &SL2Matrix<S>, m3: &SL2Matrix<S>, tol: f64) -> Result<TraceSeven<S>> {
    for m in [m1, m2, m3] {
        m.check_unimodular(tol)?;
    }
    let m12 = m1.mul(m2);
    Ok(TraceSeven {
        x: m2.mul(m3).trace(),
        y: m1.mul(m3).trace(),
        z: m12.trace(),
        m: [m1.trace(), m2.trace(), m3.trace(), m12.mul(m3).trace()],
    })
}

pub fn fricke_params<S: Scalar>(m: &[S; 4]) -> AsymParams<S> {
    let [m1, m2, m3, m4] = m.clone();
    let prod = m1.clone() * m2.clone() * m3.clone() * m4.clone();
    let sq = m.iter().fold(S::zero(), |acc, x| acc + x.square());
    AsymParams {
        b1: -(m1.clone() * m4.clone() + m2.clone() * m3.clone()),
        b2: -(m2.clone() * m4.clone() + m1.clone() * m3.clone()),
        b3: -(m3 * m4 + m1 * m2),
        c: prod - S::from_i64(4) + sq,
    }
}

/// Fricke residual of the seven functions against their own parameters.
pub fn trace_residual<S: Scalar>(t: &TraceSeven<S>) -> S {
    fricke_residual(&t.point(), &fricke_params(&t.m))
}

/// `m_i = 2 cos(pi theta_i)`.
pub fn theta_to_m(theta: &[Complex; 4]) -> [Complex; 4] {
    theta.map(|t| (t * std::f64::consts::PI).cos() * 2.0)
}

pub fn theta_params(theta: &[Complex; 4]) -> AsymParams<Complex> {
    fricke_params(&theta_to_m(theta))
}

/// `(theta1, theta2, theta3, theta4) -> (theta3, theta1, theta2, theta4)`.
pub fn triality<S: Clone>(theta: &[S; 4]) -> [S; 4] {
    [theta[2].clone(), theta[0].clone(), theta[1].clone(), theta[3].clone()]
}

/// A root stored with doubled coordinates, so half-integers stay integral.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(pub [i8; 4]);

impl Root {
    pub fn coords<S: Scalar>(&self) -> [S; 4] {
        self.0.map(|h| S::from_ratio(h as i64, 2))
    }

    /// Four times the squared norm.
    pub fn norm4(&self) -> i32 {
        self.0.iter().map(|&h| (h as i32) * (h as i32)).sum()
    }

    pub fn neg(&self) -> Root {
        Root(self.0.map(|h| -h))
    }

    pub fn add(&self, o: &Root) -> Root {
        Root(std::array::from_fn(|i| self.0[i] + o.0[i]))
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub roots: Vec<Root>,
    pub simple: [Root; 4],
}

/// `{+-e_i} u {(+-e1 +- e2 +- e3 +- e4)/2}`, with simple roots `e1, e2, e3`
/// and `(e4 - e1 - e2 - e3)/2`.
pub fn d4_roots() -> RootSystem {
    let mut roots = Vec::with_capacity(24);
    for i in 0..4 {
        for s in [2i8, -2] {
            let mut h = [0i8; 4];
            h[i] = s;
            roots.push(Root(h));
        }
    }
    for mask in 0..16u8 {
        roots.push(Root(std::array::from_fn(|i| if mask >> i & 1 == 1 { -1 } else { 1 })));
    }
    roots.sort();
    let simple = [Root([2, 0, 0, 0]), Root([0, 2, 0, 0]), Root([0, 0, 2, 0]), Root([-1, -1, -1, 1])];
    RootSystem { roots, simple }
}

/// `theta - 2 (theta . rho) rho`, for `rho` of norm one.
pub fn reflect<S: Scalar>(theta: &[S; 4], rho: &[S; 4], tol: f64) -> Result<[S; 4]> {
    let n = rho.iter().fold(S::zero(), |acc, r| acc + r.square()) - S::one();
    if !n.is_zero_within(tol) {
        return Err(Error::NotARoot);
    }
    let dot = (0..4).fold(S::zero(), |acc, i| acc + theta[i].clone() * rho[i].clone());
    let k = dot.scale(2);
    Ok(std::array::from_fn(|i| theta[i].clone() - k.clone() * rho[i].clone()))
}

pub fn translate<S: Scalar>(theta: &[S; 4], rho: &[S; 4]) -> [S; 4] {
    std::array::from_fn(|i| theta[i].clone() + rho[i].scale(2))
}

#[derive(Clone, Debug)]
pub struct AffineWeylReport {
    pub reflection_residual: f64,
    pub translation_residual: f64,
    pub checks: usize,
    pub tol: f64,
}

impl AffineWeylReport {
    pub fn max_residual(&self) -> f64 {
        self.reflection_residual.max(self.translation_residual)
    }

    pub fn passed(&self) -> bool {
        self.max_residual() < self.tol
    }
}

/// Residual relative to the size of the parameters.
fn params_gap(a: &AsymParams<Complex>, b: &AsymParams<Complex>) -> f64 {
    let scale = a.as_array().iter().map(|x| x.norm()).fold(1.0, f64::max);
    a.max_abs_diff(b) / scale
}

/// Compare the Fricke parameters of `theta` with those of its images under
/// every root reflection and every translation by twice a root.
pub fn affine_weyl_check(theta: &[Complex; 4], tol: f64) -> AffineWeylReport {
    let base = theta_params(theta);
    let mut rep = AffineWeylReport { reflection_residual: 0.0, translation_residual: 0.0, checks: 0, tol };
    for r in d4_roots().roots {
        let rho = r.coords::<Complex>();
        let refl = reflect(theta, &rho, 1e-12).expect("norm-one root");
        rep.reflection_residual = rep.reflection_residual.max(params_gap(&base, &theta_params(&refl)));
        rep.translation_residual = rep.translation_residual.max(params_gap(&base, &theta_params(&translate(theta, &rho))));
        rep.checks += 2;
    }
    rep
}

pub fn random_theta<R: Rng + ?Sized>(rng: &mut R) -> [Complex; 4] {
    std::array::from_fn(|_| Complex::new(rng.gen_range(-2.0..2.0), rng.gen_range(-0.5..0.5)))
}

/// Random element of SL2(Q): a product of elementary and diagonal matrices.
pub fn random_sl2<R: Rng + ?Sized>(rng: &mut R) -> SL2Matrix<Rational> {
    let mut r = |lo: i64, hi: i64| Rational::from_ratio(rng.gen_range(lo..=hi), rng.gen_range(1..=6));
    let upper = SL2Matrix::new(Rational::one(), r(-9, 9), Rational::zero(), Rational::one());
    let lower = SL2Matrix::new(Rational::one(), Rational::zero(), r(-9, 9), Rational::one());
    let d = r(1, 9);
    let diag = SL2Matrix::new(d.clone(), Rational::zero(), Rational::zero(), d.inv().unwrap());
    upper.mul(&diag).mul(&lower)
}
