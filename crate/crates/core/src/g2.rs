//! The six-dimensional semisimple class of G2(C), realised as conjugation
//! by `a(v) = (1 + v)/2` on imaginary octonions, together with the torus
//! invariants `alpha`, `beta` and the dihedral Weyl group action.

use rand::Rng;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::matrix::Mat7;
use crate::octonion::{half_unit, half_unit_unchecked, vec_to_array, Octonion, Vector7, MUL_TABLE};
use crate::scalar::{Complex, Scalar};

/// A linear map of `V` in the `e1..e7` basis, meant to be an algebra
/// automorphism of the octonions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct G2Element<S> {
    pub m: Mat7<S>,
}

/// Values of the two basic Weyl-invariant functions.
#[derive(Clone, Debug, PartialEq)]
pub struct AlphaBeta<S> {
    pub alpha: S,
    pub beta: S,
}

impl<S: Scalar> AlphaBeta<S> {
    pub fn new(alpha: S, beta: S) -> Self {
        AlphaBeta { alpha, beta }
    }

    pub fn from_ints(alpha: i64, beta: i64) -> Self {
        AlphaBeta { alpha: S::from_i64(alpha), beta: S::from_i64(beta) }
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.alpha.approx_eq(&other.alpha, tol) && self.beta.approx_eq(&other.beta, tol)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (self.alpha.clone() - other.alpha.clone())
            .abs_f64()
            .max((self.beta.clone() - other.beta.clone()).abs_f64())
    }

    pub fn to_json(&self) -> Value {
        Value::Array(vec![self.alpha.to_json(), self.beta.to_json()])
    }
}

impl<S: Scalar> G2Element<S> {
    pub fn identity() -> Self {
        G2Element { m: Mat7::identity() }
    }

    pub fn from_matrix(m: Mat7<S>) -> Self {
        G2Element { m }
    }

    pub fn compose(&self, other: &Self) -> Self {
        G2Element { m: self.m.matmul(&other.m) }
    }

    /// Inverse of an orthogonal map is its transpose.
    pub fn inverse(&self) -> Self {
        G2Element { m: self.m.transpose() }
    }

    pub fn pow(&self, n: u32) -> Self {
        G2Element { m: self.m.pow(n) }
    }

    pub fn apply(&self, v: &Vector7<S>) -> Vector7<S> {
        self.m.apply(v)
    }

    /// Image of an arbitrary octonion: the unit is fixed, `V` is mapped by
    /// the matrix.
    pub fn apply_octonion(&self, q: &Octonion<S>) -> Octonion<S> {
        let im = self.apply(&q.imag());
        let mut out = im.to_octonion();
        out.c[0] = q.c[0].clone();
        out
    }

    pub fn trace(&self) -> S {
        self.m.trace()
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.m.approx_eq(&other.m, tol)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.m.max_abs_diff(&other.m)
    }

    /// Largest entry of `m^T m - I`.
    pub fn orthogonality_residual(&self) -> f64 {
        self.m.transpose().matmul(&self.m).max_abs_diff(&Mat7::identity())
    }

    pub fn to_json(&self) -> Value {
        let entries = self.m.m.iter().flat_map(|row| row.iter().map(Scalar::to_json)).collect();
        serde_json::json!({ "matrix": Value::Array(entries) })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let arr = v
            .get("matrix")
            .and_then(Value::as_array)
            .filter(|a| a.len() == 49)
            .ok_or_else(|| Error::Parse("expected {\"matrix\": [49 scalars]}".into()))?;
        let parsed = arr.iter().map(S::from_json).collect::<Result<Vec<_>>>()?;
        let rows: Vec<[S; 7]> = parsed.chunks(7).map(|r| vec_to_array(r.to_vec())).collect();
        Ok(G2Element { m: Mat7 { m: vec_to_array(rows) } })
    }
}

/// The matrix of `q -> a(v) q a(v)^{-1}` on `V`, for `n(v) = 3`.
pub fn conj_map<S: Scalar>(v: &Vector7<S>, tol: f64) -> Result<G2Element<S>> {
    let a = half_unit(v, tol)?;
    Ok(conj_by_unit(&a))
}

pub(crate) fn conj_map_unchecked<S: Scalar>(v: &Vector7<S>) -> G2Element<S> {
    conj_by_unit(&half_unit_unchecked(v))
}

/// Conjugation by a norm-one octonion `a`, whose inverse is `conj(a)`.
fn conj_by_unit<S: Scalar>(a: &Octonion<S>) -> G2Element<S> {
    let ainv = a.conj();
    let cols: [Vector7<S>; 7] =
        std::array::from_fn(|j| a.mul(&Octonion::basis(j + 1)).mul(&ainv).imag());
    G2Element { m: Mat7::from_columns(&cols) }
}

/// Largest deviation of `m(e_i) m(e_j)` from `m(e_i e_j)` over all basis
/// pairs; zero exactly when `m` is an algebra automorphism.
pub fn automorphism_residual<S: Scalar>(g: &G2Element<S>) -> f64 {
    let images: Vec<Octonion<S>> = (0..7).map(|j| g.m.column(j).to_octonion()).collect();
    let mut worst = 0.0f64;
    for i in 1..8 {
        for j in 1..8 {
            let lhs = images[i - 1].mul(&images[j - 1]);
            let (s, k) = MUL_TABLE[i][j];
            let k = k as usize;
            let mut rhs = if k == 0 { Octonion::one() } else { images[k - 1].clone() };
            if s < 0 {
                rhs = -&rhs;
            }
            worst = worst.max(lhs.max_abs_diff(&rhs));
        }
    }
    worst
}

/// Exact for rational scalars; within `tol` for floating scalars.
pub fn is_automorphism<S: Scalar>(g: &G2Element<S>, tol: f64) -> bool {
    if S::EXACT {
        exact_automorphism(g)
    } else {
        automorphism_residual(g) < tol
    }
}

fn exact_automorphism<S: Scalar>(g: &G2Element<S>) -> bool {
    let images: Vec<Octonion<S>> = (0..7).map(|j| g.m.column(j).to_octonion()).collect();
    (1..8).all(|i| {
        (1..8).all(|j| {
            let lhs = images[i - 1].mul(&images[j - 1]);
            let (s, k) = MUL_TABLE[i][j];
            let k = k as usize;
            let base = if k == 0 { Octonion::one() } else { images[k - 1].clone() };
            let rhs = if s < 0 { -&base } else { base };
            lhs == rhs
        })
    })
}

/// `alpha = Tr(g) - 1`, `2 beta = alpha^2 - 2 alpha - Tr(g^2) - 5`.
pub fn alpha_beta_of<S: Scalar>(g: &G2Element<S>) -> AlphaBeta<S> {
    let t1 = g.trace();
    let t2 = g.m.matmul(&g.m).trace();
    alpha_beta_from_traces(t1, t2)
}

pub fn alpha_beta_from_traces<S: Scalar>(tr: S, tr_sq: S) -> AlphaBeta<S> {
    let alpha = tr - S::one();
    let beta = (alpha.square() - alpha.scale(2) - tr_sq - S::from_i64(5)).div_int(2);
    AlphaBeta { alpha, beta }
}

/// A point `(a1, a2)` of the maximal torus; `a3 = 1/(a1 a2)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TorusPoint<S> {
    pub a1: S,
    pub a2: S,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WeylGen {
    R1,
    R2,
}

impl<S: Scalar> TorusPoint<S> {
    pub fn new(a1: S, a2: S) -> Result<Self> {
        if a1.inv().is_none() || a2.inv().is_none() {
            return Err(Error::ZeroTorusCoordinate);
        }
        Ok(TorusPoint { a1, a2 })
    }

    pub fn a3(&self) -> S {
        (self.a1.clone() * self.a2.clone()).inv().expect("torus coordinates are invertible")
    }

    fn inv1(&self) -> S {
        self.a1.inv().expect("torus coordinates are invertible")
    }

}

pub fn torus_alpha_beta<S: Scalar>(t: &TorusPoint<S>) -> Result<AlphaBeta<S>> {
    let (a1, a2) = (t.a1.clone(), t.a2.clone());
    let i1 = a1.inv().ok_or(Error::ZeroTorusCoordinate)?;
    let i2 = a2.inv().ok_or(Error::ZeroTorusCoordinate)?;
    let p = a1.clone() * a2.clone();
    let ip = i1.clone() * i2.clone();
    let alpha = a1.clone() + i1.clone() + a2.clone() + i2.clone() + p.clone() + ip.clone();
    let beta = a1.clone() * i2.clone()
        + a2.clone() * i1.clone()
        + p.clone() * a1.clone()
        + p.clone() * a2.clone()
        + ip.clone() * i1
        + ip * i2;
    Ok(AlphaBeta { alpha, beta })
}

/// `r1(a1, a2) = (1/a1, a1 a2)`, `r2(a1, a2) = (a2, a1)`.
pub fn weyl_act<S: Scalar>(gen: WeylGen, t: &TorusPoint<S>) -> TorusPoint<S> {
    match gen {
        WeylGen::R1 => TorusPoint { a1: t.inv1(), a2: t.a1.clone() * t.a2.clone() },
        WeylGen::R2 => TorusPoint { a1: t.a2.clone(), a2: t.a1.clone() },
    }
}

pub fn weyl_word<S: Scalar>(word: &[WeylGen], t: &TorusPoint<S>) -> TorusPoint<S> {
    word.iter().rev().fold(t.clone(), |acc, &g| weyl_act(g, &acc))
}

/// Distinct Weyl group elements, as shortest words found breadth-first
/// from their action on the (generic) probe point.
pub fn weyl_group_words<S: Scalar + Eq + std::hash::Hash>(probe: &TorusPoint<S>) -> Vec<Vec<WeylGen>> {
    let mut seen = std::collections::HashSet::new();
    let mut words = vec![Vec::new()];
    seen.insert(probe.clone());
    let mut frontier = vec![Vec::new()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for w in &frontier {
            for g in [WeylGen::R1, WeylGen::R2] {
                let mut nw = vec![g];
                nw.extend_from_slice(w);
                if seen.insert(weyl_word(&nw, probe)) {
                    words.push(nw.clone());
                    next.push(nw);
                }
            }
        }
        frontier = next;
    }
    words
}

/// Squared Weyl denominator factors `(long, short)`.
pub fn weyl_denominator<S: Scalar>(t: &TorusPoint<S>) -> Result<(S, S)> {
    if t.a1.inv().is_none() || t.a2.inv().is_none() {
        return Err(Error::ZeroTorusCoordinate);
    }
    let (a1, a2, a3) = (t.a1.clone(), t.a2.clone(), t.a3());
    let long = ((a1.clone() - a2.clone()) * (a2.clone() - a3.clone()) * (a3.clone() - a1.clone())).square();
    let short = (a1.clone() * a2.clone() + a2.clone() * a3.clone() + a3.clone() * a1.clone() - a1 - a2 - a3).square();
    Ok((long, short))
}

/// Expected dimension `sum dim(C_i) - 2 dim(G/Z)` of a character variety.
pub fn expected_dim(class_dims: &[i64], dim_g: i64, dim_center: i64) -> i64 {
    class_dims.iter().sum::<i64>() - 2 * (dim_g - dim_center)
}

/// Random complex vector with `n(v) = 3`: coefficients drawn from the unit
/// box, near-isotropic draws (`|n| < 0.1`) rejected, then rescaled.
pub fn sample_norm_three<R: Rng + ?Sized>(rng: &mut R) -> Vector7<Complex> {
    loop {
        let v = Vector7 { c: std::array::from_fn(|_| Complex::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))) };
        let n = v.norm();
        if n.norm() < 0.1 {
            continue;
        }
        return v.scale(&(Complex::new(3.0, 0.0) / n).sqrt());
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::poly_mul;
    use crate::scalar::Rational;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    type R = Rational;

    fn q(n: i64) -> R {
        R::from_i64(n)
    }

    #[test]
    fn conj_map_exact_properties() {
        let v = Vector7::<R>::sum_of(&[1, 2, 4]);
        let g = conj_map(&v, 0.0).unwrap();
        assert_eq!(g.pow(3), G2Element::identity());
        assert_ne!(g, G2Element::identity());
        assert_eq!(g.apply(&v), v);
        assert!(is_automorphism(&g, 0.0));
        assert_eq!(g.orthogonality_residual(), 0.0);
        // spectrum {1, w, w, w, wbar, wbar, wbar}: char poly (x - 1)(x^2 + x + 1)^3
        let quad = [q(1), q(1), q(1)];
        let expected = poly_mul(&poly_mul(&poly_mul(&[q(1), q(-1)], &quad), &quad), &quad);
        assert_eq!(g.m.charpoly(), expected);
        assert_eq!(conj_map(&(-&v), 0.0).unwrap(), g.inverse());
    }

    #[test]
    fn conj_map_rejects_bad_norm() {
        assert!(matches!(conj_map(&Vector7::<R>::basis(1), 0.0), Err(Error::NormNotThree(_))));
    }

    #[test]
    fn automorphism_check() {
        assert!(is_automorphism(&G2Element::<R>::identity(), 0.0));
        let neg = G2Element { m: Mat7::<R>::identity().scale(&q(-1)) };
        assert!(!is_automorphism(&neg, 0.0));
        assert!(automorphism_residual(&neg) > 0.0);
    }

    #[test]
    fn alpha_beta_values() {
        assert_eq!(alpha_beta_of(&G2Element::<R>::identity()), AlphaBeta::from_ints(6, 6));
        let g = conj_map(&Vector7::<R>::sum_of(&[1, 3, 7]), 0.0).unwrap();
        assert_eq!(alpha_beta_of(&g), AlphaBeta::from_ints(-3, 6));
    }

    #[test]
    fn torus_values() {
        let t = TorusPoint::new(q(1), q(1)).unwrap();
        assert_eq!(torus_alpha_beta(&t).unwrap(), AlphaBeta::from_ints(6, 6));
        assert_eq!(torus_alpha_beta(&t).unwrap(), alpha_beta_of(&G2Element::<R>::identity()));
        let w = Complex::new(-0.5, 3f64.sqrt() / 2.0);
        let ab = torus_alpha_beta(&TorusPoint::new(w, w).unwrap()).unwrap();
        assert!(ab.approx_eq(&AlphaBeta::from_ints(-3, 6), 1e-12));
        assert_eq!(TorusPoint::new(q(0), q(2)), Err(Error::ZeroTorusCoordinate));
    }

    #[test]
    fn weyl_group_has_twelve_elements() {
        let t = TorusPoint::new(R::from_ratio(2, 3), R::from_ratio(5, 7)).unwrap();
        let words = weyl_group_words(&t);
        assert_eq!(words.len(), 12);
        let ab = torus_alpha_beta(&t).unwrap();
        for w in &words {
            assert_eq!(torus_alpha_beta(&weyl_word(w, &t)).unwrap(), ab);
            let (l, s) = weyl_denominator(&weyl_word(w, &t)).unwrap();
            assert_eq!((l, s), weyl_denominator(&t).unwrap());
        }
        // r1 r2 has order 6
        let rot = [WeylGen::R1, WeylGen::R2];
        let mut p = t.clone();
        for k in 1..=6 {
            p = weyl_word(&rot, &p);
            assert_eq!(p == t, k == 6);
        }
    }

    #[test]
    fn weyl_reflections() {
        let t = TorusPoint::new(q(1), R::from_ratio(3, 2)).unwrap();
        assert_eq!(weyl_act(WeylGen::R1, &t), t);
        let u = TorusPoint::new(q(3), q(5)).unwrap();
        assert_eq!(weyl_act(WeylGen::R2, &weyl_act(WeylGen::R2, &u)), u);
        assert_eq!(weyl_act(WeylGen::R1, &weyl_act(WeylGen::R1, &u)), u);
    }

    #[test]
    fn weyl_denominator_values() {
        let t = TorusPoint::new(q(1), q(1)).unwrap();
        assert_eq!(weyl_denominator(&t).unwrap(), (q(0), q(0)));
        let t = TorusPoint::new(q(3), q(3)).unwrap();
        assert_eq!(weyl_denominator(&t).unwrap().0, q(0));
    }

    #[test]
    fn expected_dimensions() {
        assert_eq!(expected_dim(&[2, 2, 2, 2], 3, 0), 2);
        assert_eq!(expected_dim(&[4, 4, 4, 6], 9, 1), 2);
        assert_eq!(expected_dim(&[6, 6, 6, 12], 14, 0), 2);
    }

    #[test]
    fn sampled_vectors_have_norm_three() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let v = sample_norm_three(&mut rng);
            assert!(v.check_norm_three(1e-12).is_ok());
        }
    }

    #[test]
    fn json_round_trip() {
        let g = conj_map(&Vector7::<R>::sum_of(&[2, 3, 5]), 0.0).unwrap();
        let j = g.to_json();
        assert_eq!(j["matrix"].as_array().unwrap().len(), 49);
        assert_eq!(G2Element::<R>::from_json(&j).unwrap(), g);
    }
}
