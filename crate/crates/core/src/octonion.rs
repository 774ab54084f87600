//! Complex octonions with the Fano-plane multiplication table.
//!
//! The basis is `1, e1, ..., e7`; the seven oriented lines
//! `124, 235, 346, 457, 561, 672, 713` are quaternionic triples, so for
//! example `e1 e2 = e4`.

use std::ops::{Add, Mul, Neg, Sub};

use serde_json::Value;

use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar};

/// The oriented Fano lines, each a quaternionic triple `(i, j, k)` with
/// `e_i e_j = e_k`.
pub const FANO_LINES: [[usize; 3]; 7] = [
    [1, 2, 4],
    [2, 3, 5],
    [3, 4, 6],
    [4, 5, 7],
    [5, 6, 1],
    [6, 7, 2],
    [7, 1, 3],
];

/// `MUL_TABLE[i][j] = (sign, k)` means `e_i e_j = sign * e_k`, with index 0
/// standing for the unit.
pub const MUL_TABLE: [[(i8, u8); 8]; 8] = [
    [(1, 0), (1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7)],
    [(1, 1), (-1, 0), (1, 4), (1, 7), (-1, 2), (1, 6), (-1, 5), (-1, 3)],
    [(1, 2), (-1, 4), (-1, 0), (1, 5), (1, 1), (-1, 3), (1, 7), (-1, 6)],
    [(1, 3), (-1, 7), (-1, 5), (-1, 0), (1, 6), (1, 2), (-1, 4), (1, 1)],
    [(1, 4), (1, 2), (-1, 1), (-1, 6), (-1, 0), (1, 7), (1, 3), (-1, 5)],
    [(1, 5), (-1, 6), (1, 3), (-1, 2), (-1, 7), (-1, 0), (1, 1), (1, 4)],
    [(1, 6), (1, 5), (-1, 7), (1, 4), (-1, 3), (-1, 1), (-1, 0), (1, 2)],
    [(1, 7), (1, 3), (1, 6), (-1, 1), (1, 5), (-1, 4), (-1, 2), (-1, 0)],
];

/// Index shift `n -> n + 1` on `1..=7` (mod 7, writing 7 for 0).
pub fn shift_index(n: usize) -> usize {
    n % 7 + 1
}

/// Index doubling `n -> 2n` on `1..=7` (mod 7, writing 7 for 0).
pub fn double_index(n: usize) -> usize {
    let m = (2 * n) % 7;
    if m == 0 {
        7
    } else {
        m
    }
}

/// Build the multiplication table from the line `124` and the shift
/// symmetry. Used to cross-check [`MUL_TABLE`].
pub fn generate_table() -> [[(i8, u8); 8]; 8] {
    let mut lines = Vec::with_capacity(7);
    let mut line = [1usize, 2, 4];
    for _ in 0..7 {
        lines.push(line);
        line = line.map(shift_index);
    }
    let mut t = [[(0i8, 0u8); 8]; 8];
    for i in 0..8 {
        t[0][i] = (1, i as u8);
        t[i][0] = (1, i as u8);
    }
    for i in 1..8 {
        t[i][i] = (-1, 0);
    }
    for [a, b, c] in lines {
        for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
            t[x][y] = (1, z as u8);
            t[y][x] = (-1, z as u8);
        }
    }
    t
}

/// Relabel a table under an index permutation of `1..=7` (0 fixed).
pub fn relabel_table(t: &[[(i8, u8); 8]; 8], perm: impl Fn(usize) -> usize) -> [[(i8, u8); 8]; 8] {
    let p = |i: usize| if i == 0 { 0 } else { perm(i) };
    let mut out = [[(0i8, 0u8); 8]; 8];
    for i in 0..8 {
        for j in 0..8 {
            let (s, k) = t[i][j];
            out[p(i)][p(j)] = (s, p(k as usize) as u8);
        }
    }
    out
}

/// An element `c0 + c1 e1 + ... + c7 e7` of the complex Cayley algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct Octonion<S> {
    pub c: [S; 8],
}

/// An imaginary octonion, i.e. an element of `V = span(e1..e7)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector7<S> {
    pub c: [S; 7],
}

impl<S: Scalar> Octonion<S> {
    pub fn new(c: [S; 8]) -> Self {
        Octonion { c }
    }

    pub fn zero() -> Self {
        Octonion { c: std::array::from_fn(|_| S::zero()) }
    }

    pub fn one() -> Self {
        Self::basis(0)
    }

    /// `e_i`, with `i = 0` the unit.
    pub fn basis(i: usize) -> Self {
        let mut c: [S; 8] = std::array::from_fn(|_| S::zero());
        c[i] = S::one();
        Octonion { c }
    }

    pub fn from_scalar(s: S) -> Self {
        let mut o = Self::zero();
        o.c[0] = s;
        o
    }

    pub fn real(&self) -> &S {
        &self.c[0]
    }

    /// Imaginary part, as an element of `V`.
    pub fn imag(&self) -> Vector7<S> {
        Vector7 { c: std::array::from_fn(|i| self.c[i + 1].clone()) }
    }

    /// The trace functional: kernel `V`, `Tr(1) = 1`.
    pub fn trace(&self) -> S {
        self.c[0].clone()
    }

    pub fn conj(&self) -> Self {
        Octonion {
            c: std::array::from_fn(|i| if i == 0 { self.c[0].clone() } else { -self.c[i].clone() }),
        }
    }

    pub fn scale(&self, k: &S) -> Self {
        Octonion { c: std::array::from_fn(|i| self.c[i].clone() * k.clone()) }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for i in 0..8 {
            if self.c[i].is_zero_within(0.0) {
                continue;
            }
            for j in 0..8 {
                let (s, k) = MUL_TABLE[i][j];
                let term = self.c[i].clone() * other.c[j].clone();
                let k = k as usize;
                out.c[k] = if s > 0 { out.c[k].clone() + term } else { out.c[k].clone() - term };
            }
        }
        out
    }

    /// The bilinear form `<q1, q2> = Tr(q1 * conj(q2))`; the basis is
    /// orthonormal for it.
    pub fn form(&self, other: &Self) -> S {
        self.c
            .iter()
            .zip(other.c.iter())
            .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
    }

    pub fn norm(&self) -> S {
        self.form(self)
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.c.iter().zip(other.c.iter()).all(|(a, b)| a.approx_eq(b, tol))
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.c
            .iter()
            .zip(other.c.iter())
            .map(|(a, b)| (a.clone() - b.clone()).abs_f64())
            .fold(0.0, f64::max)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.c.iter().map(Scalar::to_json).collect())
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let arr = v
            .as_array()
            .filter(|a| a.len() == 8)
            .ok_or_else(|| Error::Parse("octonion must be an array of 8 scalars".into()))?;
        let parsed = arr.iter().map(S::from_json).collect::<Result<Vec<_>>>()?;
        Ok(Octonion { c: vec_to_array(parsed) })
    }
}

impl<S: Scalar> Vector7<S> {
    pub fn new(c: [S; 7]) -> Self {
        Vector7 { c }
    }

    pub fn zero() -> Self {
        Vector7 { c: std::array::from_fn(|_| S::zero()) }
    }

    /// `e_i` for `i` in `1..=7`.
    pub fn basis(i: usize) -> Self {
        let mut v = Self::zero();
        v.c[i - 1] = S::one();
        v
    }

    /// Sum of basis vectors with the given indices.
    pub fn sum_of(indices: &[usize]) -> Self {
        indices.iter().fold(Self::zero(), |acc, &i| &acc + &Self::basis(i))
    }

    pub fn from_integers(c: [i64; 7]) -> Self {
        Vector7 { c: c.map(S::from_i64) }
    }

    pub fn to_octonion(&self) -> Octonion<S> {
        Octonion { c: std::array::from_fn(|i| if i == 0 { S::zero() } else { self.c[i - 1].clone() }) }
    }

    pub fn form(&self, other: &Self) -> S {
        self.c
            .iter()
            .zip(other.c.iter())
            .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
    }

    pub fn norm(&self) -> S {
        self.form(self)
    }

    pub fn scale(&self, k: &S) -> Self {
        Vector7 { c: std::array::from_fn(|i| self.c[i].clone() * k.clone()) }
    }

    /// Octonion product of two imaginary octonions.
    pub fn mul(&self, other: &Self) -> Octonion<S> {
        self.to_octonion().mul(&other.to_octonion())
    }

    /// The alternating 3-form `<self, a * b>`.
    pub fn triple(&self, a: &Self, b: &Self) -> S {
        self.to_octonion().form(&a.mul(b))
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.c.iter().zip(other.c.iter()).all(|(a, b)| a.approx_eq(b, tol))
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.c
            .iter()
            .zip(other.c.iter())
            .map(|(a, b)| (a.clone() - b.clone()).abs_f64())
            .fold(0.0, f64::max)
    }

    /// Fails with `NormNotThree` unless `n(v) = 3` (exactly, or within the
    /// given tolerance for floating scalars).
    pub fn check_norm_three(&self, tol: f64) -> Result<()> {
        let n = self.norm();
        if (n.clone() - S::from_i64(3)).is_zero_within(tol) {
            Ok(())
        } else {
            Err(Error::NormNotThree(format!("{:?}", n.to_complex())))
        }
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.c.iter().map(Scalar::to_json).collect())
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let arr = v
            .as_array()
            .filter(|a| a.len() == 7)
            .ok_or_else(|| Error::Parse("vector must be an array of 7 scalars".into()))?;
        let parsed = arr.iter().map(S::from_json).collect::<Result<Vec<_>>>()?;
        Ok(Vector7 { c: vec_to_array(parsed) })
    }
}

impl<S: Scalar> Add for &Octonion<S> {
    type Output = Octonion<S>;
    fn add(self, rhs: Self) -> Octonion<S> {
        Octonion { c: std::array::from_fn(|i| self.c[i].clone() + rhs.c[i].clone()) }
    }
}

impl<S: Scalar> Sub for &Octonion<S> {
    type Output = Octonion<S>;
    fn sub(self, rhs: Self) -> Octonion<S> {
        Octonion { c: std::array::from_fn(|i| self.c[i].clone() - rhs.c[i].clone()) }
    }
}

impl<S: Scalar> Mul for &Octonion<S> {
    type Output = Octonion<S>;
    fn mul(self, rhs: Self) -> Octonion<S> {
        Octonion::mul(self, rhs)
    }
}

impl<S: Scalar> Neg for &Octonion<S> {
    type Output = Octonion<S>;
    fn neg(self) -> Octonion<S> {
        Octonion { c: std::array::from_fn(|i| -self.c[i].clone()) }
    }
}

impl<S: Scalar> Add for &Vector7<S> {
    type Output = Vector7<S>;
    fn add(self, rhs: Self) -> Vector7<S> {
        Vector7 { c: std::array::from_fn(|i| self.c[i].clone() + rhs.c[i].clone()) }
    }
}

impl<S: Scalar> Sub for &Vector7<S> {
    type Output = Vector7<S>;
    fn sub(self, rhs: Self) -> Vector7<S> {
        Vector7 { c: std::array::from_fn(|i| self.c[i].clone() - rhs.c[i].clone()) }
    }
}

impl<S: Scalar> Neg for &Vector7<S> {
    type Output = Vector7<S>;
    fn neg(self) -> Vector7<S> {
        Vector7 { c: std::array::from_fn(|i| -self.c[i].clone()) }
    }
}

/// `{"v1": [...], "v2": [...], "v3": [...]}`.
pub fn triple_to_json<S: Scalar>(t: &[Vector7<S>; 3]) -> Value {
    serde_json::json!({ "v1": t[0].to_json(), "v2": t[1].to_json(), "v3": t[2].to_json() })
}

pub fn triple_from_json<S: Scalar>(v: &Value) -> Result<[Vector7<S>; 3]> {
    let get = |k: &str| v.get(k).ok_or_else(|| Error::Parse(format!("triple is missing \"{k}\"")));
    Ok([Vector7::from_json(get("v1")?)?, Vector7::from_json(get("v2")?)?, Vector7::from_json(get("v3")?)?])
}

/// True when every scalar leaf is an integer or a `p/q` string, so the
/// value can be read exactly.
pub fn json_is_exact(v: &Value) -> bool {
    match v {
        Value::Number(n) => n.is_i64(),
        Value::String(s) => crate::scalar::parse_rational(s).is_ok(),
        Value::Array(a) => a.iter().all(json_is_exact),
        Value::Object(m) => m.values().all(json_is_exact),
        _ => false,
    }
}

/// `a(v) = (1 + v) / 2` for `n(v) = 3`; it satisfies `a(v)^3 = -1` and has
/// norm one, so its inverse is its conjugate.
pub fn half_unit<S: Scalar>(v: &Vector7<S>, tol: f64) -> Result<Octonion<S>> {
    v.check_norm_three(tol)?;
    Ok(half_unit_unchecked(v))
}

pub(crate) fn half_unit_unchecked<S: Scalar>(v: &Vector7<S>) -> Octonion<S> {
    let half = S::from_ratio(1, 2);
    (&Octonion::one() + &v.to_octonion()).scale(&half)
}

/// First basis triple `(i, j, k)` with `(e_i e_j) e_k != e_i (e_j e_k)`.
pub fn non_associative_witness() -> Option<(usize, usize, usize)> {
    for i in 1..8 {
        for j in 1..8 {
            for k in 1..8 {
                let (a, b, c) = (
                    Octonion::<Rational>::basis(i),
                    Octonion::<Rational>::basis(j),
                    Octonion::<Rational>::basis(k),
                );
                if a.mul(&b).mul(&c) != a.mul(&b.mul(&c)) {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

pub(crate) fn vec_to_array<T, const N: usize>(v: Vec<T>) -> [T; N] {
    match v.try_into() {
        Ok(a) => a,
        Err(_) => unreachable!("length checked by caller"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Complex;

    type O = Octonion<Rational>;
    type V = Vector7<Rational>;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    #[test]
    fn frozen_table_matches_generator() {
        assert_eq!(generate_table(), MUL_TABLE);
    }

    #[test]
    fn table_invariant_under_index_symmetries() {
        assert_eq!(relabel_table(&MUL_TABLE, shift_index), MUL_TABLE);
        assert_eq!(relabel_table(&MUL_TABLE, double_index), MUL_TABLE);
    }

    #[test]
    fn lines_are_quaternionic() {
        for [i, j, k] in FANO_LINES {
            let (a, b, c) = (O::basis(i), O::basis(j), O::basis(k));
            let minus_one = O::from_scalar(q(-1));
            assert_eq!(a.mul(&a), minus_one);
            assert_eq!(a.mul(&b).mul(&c), minus_one);
            assert_eq!(a.mul(&b), c);
        }
    }

    #[test]
    fn basic_products() {
        assert_eq!(O::basis(1).mul(&O::basis(2)), O::basis(4));
        assert_eq!(O::basis(2).mul(&O::basis(1)), -&O::basis(4));
        assert_eq!(O::basis(1).mul(&O::basis(1)), O::from_scalar(q(-1)));
        let x = O::new([1, 2, 3, 4, 5, 6, 7, 8].map(q));
        assert_eq!(O::one().mul(&x), x);
        assert_eq!(x.mul(&O::one()), x);
    }

    #[test]
    fn conjugation() {
        assert_eq!(O::one().conj(), O::one());
        assert_eq!(O::basis(3).conj(), -&O::basis(3));
        let x = &O::from_scalar(q(2)) + &O::basis(1);
        assert_eq!(x.conj(), &O::from_scalar(q(2)) - &O::basis(1));
        assert_eq!(x.conj().conj(), x);
    }

    #[test]
    fn form_and_norm() {
        assert_eq!(O::basis(1).norm(), q(1));
        assert_eq!(V::sum_of(&[1, 3, 7]).norm(), q(3));
        assert_eq!(O::basis(1).form(&O::basis(2)), q(0));
        // <q1, q2> = Tr(q1 conj(q2)) on the whole basis
        for i in 0..8 {
            for j in 0..8 {
                let (a, b) = (O::basis(i), O::basis(j));
                assert_eq!(a.form(&b), a.mul(&b.conj()).trace());
            }
        }
    }

    #[test]
    fn alternativity_on_basis() {
        for i in 0..8 {
            for j in 0..8 {
                let (a, b) = (O::basis(i), O::basis(j));
                assert_eq!(a.mul(&a).mul(&b), a.mul(&a.mul(&b)));
                assert_eq!(b.mul(&a).mul(&a), b.mul(&a.mul(&a)));
            }
        }
    }

    #[test]
    fn non_associativity_witness_exists() {
        let (i, j, k) = non_associative_witness().expect("octonions are not associative");
        let (a, b, c) = (O::basis(i), O::basis(j), O::basis(k));
        assert_ne!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn half_unit_cubes_to_minus_one() {
        let v = V::sum_of(&[1, 2, 4]);
        let a = half_unit(&v, 0.0).unwrap();
        assert_eq!(a.mul(&a).mul(&a), O::from_scalar(q(-1)));
        assert_eq!(a.mul(&a.conj()), O::one());
        assert!(matches!(half_unit(&V::basis(1), 0.0), Err(Error::NormNotThree(_))));
    }

    #[test]
    fn half_unit_float_tolerance() {
        let s = (3.0f64).sqrt();
        let mut v = Vector7::<Complex>::basis(1).scale(&Complex::new(s, 0.0));
        assert!(half_unit(&v, 1e-9).is_ok());
        v.c[1] = Complex::new(1e-3, 0.0);
        assert!(half_unit(&v, 1e-9).is_err());
    }

    #[test]
    fn json_encoding() {
        let x = O::new([q(1), Rational::from_ratio(1, 2), q(0), q(0), q(0), q(0), q(0), q(-3)]);
        let j = x.to_json();
        assert_eq!(j.to_string(), r#"["1","1/2","0","0","0","0","0","-3"]"#);
        assert_eq!(O::from_json(&j).unwrap(), x);
        assert!(O::from_json(&serde_json::json!(["1"])).is_err());
    }

    #[test]
    fn triple_json() {
        let t = [V::sum_of(&[1, 3, 7]), V::sum_of(&[2, 6, 7]), V::sum_of(&[4, 5, 7])];
        let j = triple_to_json(&t);
        assert!(json_is_exact(&j));
        assert_eq!(triple_from_json::<Rational>(&j).unwrap(), t);
        let f = serde_json::json!({"v1": [1.5, 0, 0, 0, 0, 0, 0], "v2": ["1/2", 0, 0, 0, 0, 0, 0], "v3": [[0.0, 1.0], 0, 0, 0, 0, 0, 0]});
        assert!(!json_is_exact(&f));
        let c = triple_from_json::<Complex>(&f).unwrap();
        assert_eq!(c[1].c[0], Complex::new(0.5, 0.0));
        assert!(triple_from_json::<Rational>(&serde_json::json!({"v1": []})).is_err());
    }
}
