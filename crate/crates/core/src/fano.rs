//! Fano-plane incidence and the finite group generated by conjugations
//! `T_{(1+v)/2}` with `v = e_i + e_j + e_k` running over lines.
//!
//! Such matrices have entries in `Z/4`, and so do all their products, so
//! the closure is carried out on integer numerators over a fixed
//! denominator 4.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::fricke::{p_invariants_unchecked, PInvariants};
use crate::g2::{conj_map, G2Element};
use crate::matrix::Mat7;
use crate::octonion::{Vector7, FANO_LINES, MUL_TABLE};
use crate::scalar::{Rational, Scalar};
use num_traits::ToPrimitive;

/// A line of the Fano plane as a sorted triple of points in `1..=7`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FanoLine(pub [usize; 3]);

impl FanoLine {
    pub fn new(mut pts: [usize; 3]) -> Result<Self> {
        pts.sort();
        let line = FanoLine(pts);
        if fano_lines().contains(&line) {
            Ok(line)
        } else {
            Err(Error::Parse(format!("{pts:?} is not a Fano line")))
        }
    }

    pub fn contains(&self, p: usize) -> bool {
        self.0.contains(&p)
    }

    pub fn vector(&self) -> Vector7<Rational> {
        Vector7::sum_of(&self.0)
    }
}

pub fn fano_lines() -> Vec<FanoLine> {
    FANO_LINES
        .iter()
        .map(|l| {
            let mut s = *l;
            s.sort();
            FanoLine(s)
        })
        .collect()
}

/// The three lines through `point`, ordered by the smallest offset
/// `(q - point) mod 7` of their other points. The order is unchanged by the
/// shift `n -> n + 1`; for point 7 it is `137, 267, 457`.
pub fn lines_through(point: usize) -> Result<[FanoLine; 3]> {
    if !(1..=7).contains(&point) {
        return Err(Error::BadIndex(point));
    }
    let offset = |l: &FanoLine| l.0.iter().filter(|&&q| q != point).map(|&q| (q + 7 - point) % 7).min();
    let mut ls: Vec<FanoLine> = fano_lines().into_iter().filter(|l| l.contains(point)).collect();
    ls.sort_by_key(offset);
    Ok([ls[0], ls[1], ls[2]])
}

/// 7x7 matrix with entries `n[i][j] / 4`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExactG2Matrix {
    pub n: [[i32; 7]; 7],
}

impl ExactG2Matrix {
    pub fn identity() -> Self {
        ExactG2Matrix { n: std::array::from_fn(|i| std::array::from_fn(|j| if i == j { 4 } else { 0 })) }
    }

    pub fn from_g2(g: &G2Element<Rational>) -> Result<Self> {
        let mut n = [[0i32; 7]; 7];
        for i in 0..7 {
            for j in 0..7 {
                let q = &g.m.m[i][j] * Rational::from_i64(4);
                if !q.is_integer() {
                    return Err(Error::NotQuarterIntegral);
                }
                n[i][j] = q.to_integer().to_i32().ok_or(Error::NotQuarterIntegral)?;
            }
        }
        Ok(ExactG2Matrix { n })
    }

    pub fn to_g2(&self) -> G2Element<Rational> {
        G2Element::from_matrix(Mat7::from_fn(|i, j| Rational::from_ratio(self.n[i][j] as i64, 4)))
    }

    pub fn compose(&self, o: &Self) -> Result<Self> {
        let mut n = [[0i32; 7]; 7];
        for i in 0..7 {
            for j in 0..7 {
                let s: i32 = (0..7).map(|k| self.n[i][k] * o.n[k][j]).sum();
                if s % 4 != 0 {
                    return Err(Error::NotQuarterIntegral);
                }
                n[i][j] = s / 4;
            }
        }
        Ok(ExactG2Matrix { n })
    }

    pub fn transpose(&self) -> Self {
        ExactG2Matrix { n: std::array::from_fn(|i| std::array::from_fn(|j| self.n[j][i])) }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// `M^T M = I`, checked on numerators.
    pub fn is_orthogonal(&self) -> bool {
        (0..7).all(|i| {
            (0..7).all(|j| {
                let s: i32 = (0..7).map(|k| self.n[k][i] * self.n[k][j]).sum();
                s == if i == j { 16 } else { 0 }
            })
        })
    }

    /// `g(e_i) g(e_j) = g(e_i e_j)` for all basis pairs, in integers scaled
    /// by 16.
    pub fn is_automorphism(&self) -> bool {
        let col = |j: usize| -> [i32; 8] {
            let mut c = [0i32; 8];
            for i in 0..7 {
                c[i + 1] = self.n[i][j - 1];
            }
            c
        };
        let cols: Vec<[i32; 8]> = (1..8).map(col).collect();
        (1..8).all(|i| {
            (1..8).all(|j| {
                let mut lhs = [0i32; 8];
                for a in 1..8 {
                    for b in 1..8 {
                        let (s, k) = MUL_TABLE[a][b];
                        lhs[k as usize] += s as i32 * cols[i - 1][a] * cols[j - 1][b];
                    }
                }
                let (s, k) = MUL_TABLE[i][j];
                let rhs: [i32; 8] = if k == 0 {
                    std::array::from_fn(|t| if t == 0 { 16 * s as i32 } else { 0 })
                } else {
                    cols[k as usize - 1].map(|x| 4 * s as i32 * x)
                };
                lhs == rhs
            })
        })
    }

    /// Smallest `n >= 1` with `g^n = 1`, up to `limit`.
    pub fn order(&self, limit: u32) -> Option<u32> {
        let mut acc = self.clone();
        for n in 1..=limit {
            if acc.is_identity() {
                return Some(n);
            }
            acc = acc.compose(self).ok()?;
        }
        None
    }
}

/// `v = e_i + e_j + e_k` and its conjugation matrix.
pub fn line_to_generator(line: &FanoLine) -> (Vector7<Rational>, ExactG2Matrix) {
    let v = line.vector();
    let g = conj_map(&v, 0.0).expect("line vectors have norm 3");
    (v, ExactG2Matrix::from_g2(&g).expect("quarter-integral"))
}

pub fn point_generators(point: usize) -> Result<Vec<ExactG2Matrix>> {
    Ok(lines_through(point)?.iter().map(|l| line_to_generator(l).1).collect())
}

/// The invariants `p1..p4` of the three line vectors through `point`.
pub fn point_invariants(point: usize) -> Result<PInvariants<Rational>> {
    let [a, b, c] = lines_through(point)?.map(|l| l.vector());
    Ok(p_invariants_unchecked(&a, &b, &c))
}

#[derive(Clone, Debug)]
pub struct ClosureResult {
    pub order: usize,
    /// Element order -> number of elements of that order.
    pub element_orders: BTreeMap<u32, usize>,
    /// Elements in discovery order, identity first.
    pub elements: Vec<ExactG2Matrix>,
}

impl ClosureResult {
    pub fn to_json(&self) -> Value {
        let orders: serde_json::Map<String, Value> =
            self.element_orders.iter().map(|(k, v)| (k.to_string(), Value::from(*v))).collect();
        serde_json::json!({ "order": self.order, "element_orders": orders })
    }
}

/// Default bound on the closure size.
pub const DEFAULT_MAX_ORDER: usize = 100_000;

/// Breadth-first closure of `gens` under right multiplication. Frontier
/// products are computed in parallel and inserted in a fixed order.
pub fn group_closure(gens: &[ExactG2Matrix], max_order: usize) -> Result<ClosureResult> {
    if gens.is_empty() {
        return Err(Error::Config("no generators".into()));
    }
    let mut seen: HashMap<ExactG2Matrix, usize> = HashMap::new();
    let mut elements = vec![ExactG2Matrix::identity()];
    seen.insert(ExactG2Matrix::identity(), 0);
    let mut frontier = vec![0usize];
    while !frontier.is_empty() {
        let products: Vec<Vec<ExactG2Matrix>> = frontier
            .par_iter()
            .map(|&i| gens.iter().map(|g| elements[i].compose(g)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let mut next = Vec::new();
        for prod in products.into_iter().flatten() {
            if seen.contains_key(&prod) {
                continue;
            }
            if elements.len() >= max_order {
                return Err(Error::ClosureTruncated(max_order));
            }
            seen.insert(prod.clone(), elements.len());
            next.push(elements.len());
            elements.push(prod);
        }
        frontier = next;
    }
    let orders: Vec<u32> = elements.par_iter().map(|g| g.order(1000).unwrap_or(0)).collect();
    let mut element_orders = BTreeMap::new();
    for o in orders {
        *element_orders.entry(o).or_insert(0) += 1;
    }
    Ok(ClosureResult { order: elements.len(), element_orders, elements })
}

/// Prime factorisation, for reporting group orders.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}
