//! Dense 7x7 matrices over a [`Scalar`] ring, plus a few polynomial helpers
//! shared by the class and remark checks.

use std::ops::Mul;

use crate::octonion::Vector7;
use crate::scalar::{Complex, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat7<S> {
    pub m: [[S; 7]; 7],
}

impl<S: Scalar> Mat7<S> {
    pub fn from_fn(f: impl Fn(usize, usize) -> S) -> Self {
        Mat7 { m: std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))) }
    }

    pub fn identity() -> Self {
        Self::from_fn(|i, j| if i == j { S::one() } else { S::zero() })
    }

    pub fn zero() -> Self {
        Self::from_fn(|_, _| S::zero())
    }

    /// Matrix whose `j`-th column is `cols[j]`.
    pub fn from_columns(cols: &[Vector7<S>; 7]) -> Self {
        Self::from_fn(|i, j| cols[j].c[i].clone())
    }

    pub fn column(&self, j: usize) -> Vector7<S> {
        Vector7 { c: std::array::from_fn(|i| self.m[i][j].clone()) }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|i, j| self.m[j][i].clone())
    }

    pub fn trace(&self) -> S {
        (0..7).fold(S::zero(), |acc, i| acc + self.m[i][i].clone())
    }

    pub fn scale(&self, k: &S) -> Self {
        Self::from_fn(|i, j| self.m[i][j].clone() * k.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_fn(|i, j| self.m[i][j].clone() + other.m[i][j].clone())
    }

    pub fn matmul(&self, other: &Self) -> Self {
        Self::from_fn(|i, j| {
            (0..7).fold(S::zero(), |acc, k| acc + self.m[i][k].clone() * other.m[k][j].clone())
        })
    }

    pub fn apply(&self, v: &Vector7<S>) -> Vector7<S> {
        Vector7 {
            c: std::array::from_fn(|i| {
                (0..7).fold(S::zero(), |acc, k| acc + self.m[i][k].clone() * v.c[k].clone())
            }),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::identity(), |acc, _| acc.matmul(self))
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..7 {
            for j in 0..7 {
                worst = worst.max((self.m[i][j].clone() - other.m[i][j].clone()).abs_f64());
            }
        }
        worst
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        (0..7).all(|i| (0..7).all(|j| self.m[i][j].approx_eq(&other.m[i][j], tol)))
    }

    pub fn to_complex(&self) -> Mat7<Complex> {
        Mat7::from_fn(|i, j| self.m[i][j].to_complex())
    }

    /// Characteristic polynomial `det(xI - M)`, monic, coefficients listed
    /// from the leading term down. Faddeev-LeVerrier, so it works exactly
    /// over the rationals.
    pub fn charpoly(&self) -> Vec<S> {
        let n = 7;
        let mut coeffs = vec![S::one()];
        let mut mk = Self::zero();
        let mut c_prev = S::one();
        for k in 1..=n {
            mk = self.matmul(&mk.add(&Self::identity().scale(&c_prev)));
            let ck = -mk.trace().div_int(k as i64);
            coeffs.push(ck.clone());
            c_prev = ck;
        }
        coeffs
    }
}

impl<S: Scalar> Mul for &Mat7<S> {
    type Output = Mat7<S>;
    fn mul(self, rhs: Self) -> Mat7<S> {
        self.matmul(rhs)
    }
}

/// Product of two polynomials given highest-degree-first.
pub fn poly_mul<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    let mut out = vec![S::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].clone() + x.clone() * y.clone();
        }
    }
    out
}

/// Division by a monic polynomial (highest degree first). Returns
/// `(quotient, remainder)`.
pub fn poly_divrem_monic<S: Scalar>(num: &[S], den: &[S]) -> (Vec<S>, Vec<S>) {
    assert!(!den.is_empty() && den[0] == S::one(), "divisor must be monic");
    let mut rem = num.to_vec();
    if num.len() < den.len() {
        return (vec![S::zero()], rem);
    }
    let qlen = num.len() - den.len() + 1;
    let mut quot = Vec::with_capacity(qlen);
    for i in 0..qlen {
        let lead = rem[i].clone();
        for (j, d) in den.iter().enumerate() {
            rem[i + j] = rem[i + j].clone() - lead.clone() * d.clone();
        }
        quot.push(lead);
    }
    (quot, rem[qlen..].to_vec())
}

/// Horner evaluation, highest degree first.
pub fn poly_eval<S: Scalar>(p: &[S], x: &S) -> S {
    p.iter().fold(S::zero(), |acc, c| acc * x.clone() + c.clone())
}

/// All complex roots of a polynomial (highest degree first, nonzero
/// leading coefficient), via eigenvalues of the companion matrix.
pub fn poly_roots(p: &[Complex]) -> Vec<Complex> {
    let lead = p[0];
    let n = p.len() - 1;
    if n == 0 {
        return Vec::new();
    }
    let comp = nalgebra::DMatrix::<Complex>::from_fn(n, n, |i, j| {
        if i == 0 {
            -p[j + 1] / lead
        } else if i == j + 1 {
            Complex::new(1.0, 0.0)
        } else {
            Complex::new(0.0, 0.0)
        }
    });
    let (_, t) = nalgebra::Schur::new(comp).unpack();
    (0..n).map(|i| t[(i, i)]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    #[test]
    fn charpoly_of_diagonal() {
        let m = Mat7::<Rational>::from_fn(|i, j| if i == j { Rational::from_i64(i as i64) } else { Rational::from_i64(0) });
        // prod (x - i) for i = 0..6
        let expected = (0..7).fold(vec![Rational::from_i64(1)], |acc, i| {
            poly_mul(&acc, &[Rational::from_i64(1), Rational::from_i64(-i)])
        });
        assert_eq!(m.charpoly(), expected);
    }

    #[test]
    fn division_round_trip() {
        let a: Vec<Rational> = [1, -2, 3].map(Rational::from_i64).to_vec();
        let b: Vec<Rational> = [1, 5, 0, -1].map(Rational::from_i64).to_vec();
        let prod = poly_mul(&a, &b);
        let (q, r) = poly_divrem_monic(&prod, &b);
        assert_eq!(q, a);
        assert!(r.iter().all(|x| *x == Rational::from_i64(0)));
    }

    #[test]
    fn companion_roots() {
        // (x - 1)(x - 2)(x + 3i)
        let p = poly_mul(
            &poly_mul(&[Complex::new(1.0, 0.0), Complex::new(-1.0, 0.0)], &[Complex::new(1.0, 0.0), Complex::new(-2.0, 0.0)]),
            &[Complex::new(1.0, 0.0), Complex::new(0.0, 3.0)],
        );
        let mut roots = poly_roots(&p);
        roots.sort_by(|a, b| a.im.partial_cmp(&b.im).unwrap().then(a.re.partial_cmp(&b.re).unwrap()));
        let expected = [Complex::new(0.0, -3.0), Complex::new(1.0, 0.0), Complex::new(2.0, 0.0)];
        for (r, e) in roots.iter().zip(expected.iter()) {
            assert!((r - e).norm() < 1e-10, "{r} vs {e}");
        }
    }
}
