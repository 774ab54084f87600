//! Numeric input: `p/q` and integers stay exact, decimals switch to floats.

use g2cubics::scalar::{parse_decimal, parse_rational};
use g2cubics::{Complex, Error, Rational, Result, Scalar};
use serde_json::Value;

#[derive(Clone, Debug)]
pub enum Nums {
    Exact(Vec<Rational>),
    Float(Vec<Complex>),
}

impl Nums {
    pub fn mode(&self) -> &'static str {
        match self {
            Nums::Exact(_) => "exact",
            Nums::Float(_) => "float",
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Nums::Exact(v) => v.len(),
            Nums::Float(v) => v.len(),
        }
    }

    pub fn to_float(&self) -> Vec<Complex> {
        match self {
            Nums::Exact(v) => v.iter().map(Scalar::to_complex).collect(),
            Nums::Float(v) => v.clone(),
        }
    }

    pub fn expect_len(self, n: usize, what: &str) -> Result<Self> {
        if self.len() == n {
            Ok(self)
        } else {
            Err(Error::Parse(format!("{what} needs {n} values, got {}", self.len())))
        }
    }
}

/// Parse one or more comma-separated values together; a single decimal
/// among them makes the whole list floating.
pub fn parse_list(parts: &[&str]) -> Result<Nums> {
    let tokens: Vec<&str> = parts.iter().flat_map(|p| p.split(',')).map(str::trim).collect();
    if tokens.iter().any(|t| t.is_empty()) {
        return Err(Error::Parse("empty value in list".into()));
    }
    let exact: Option<Vec<Rational>> = tokens.iter().map(|t| parse_rational(t).ok()).collect();
    match exact {
        Some(v) => Ok(Nums::Exact(v)),
        None => {
            let f = tokens
                .iter()
                .map(|t| parse_rational(t).map(|q| q.to_complex()).or_else(|_| parse_decimal(t).map(|x| Complex::new(x, 0.0))))
                .collect::<Result<Vec<_>>>()?;
            Ok(Nums::Float(f))
        }
    }
}

pub fn read_json_file(path: &str) -> Result<Value> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{path}: {e}")))
}

/// `lo:hi:n` as `n` evenly spaced values.
pub fn parse_range(spec: &str) -> Result<Vec<f64>> {
    let bad = || Error::Parse(format!("range must be lo:hi:n, got {spec:?}"));
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        return Err(bad());
    }
    let num = |s: &str| parse_rational(s).map(|q| q.to_complex().re).or_else(|_| parse_decimal(s));
    let (lo, hi) = (num(parts[0])?, num(parts[1])?);
    let n: usize = parts[2].trim().parse().map_err(|_| bad())?;
    if n == 0 {
        return Err(bad());
    }
    if n == 1 {
        return Ok(vec![lo]);
    }
    Ok((0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect())
}

/// `b=lo:hi:n,c=lo:hi:n`.
pub fn parse_sweep(spec: &str) -> Result<(Vec<f64>, Vec<f64>)> {
    let mut b = None;
    let mut c = None;
    for part in spec.split(',') {
        match part.trim().split_once('=') {
            Some(("b", r)) => b = Some(parse_range(r)?),
            Some(("c", r)) => c = Some(parse_range(r)?),
            _ => return Err(Error::Parse(format!("sweep must look like b=lo:hi:n,c=lo:hi:n, got {spec:?}"))),
        }
    }
    match (b, c) {
        (Some(b), Some(c)) => Ok((b, c)),
        _ => Err(Error::Parse("sweep needs both b and c ranges".into())),
    }
}
