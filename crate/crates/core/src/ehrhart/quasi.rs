use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use super::{count_magic_with, expected_degree};
use crate::cone::positive_part_with;
use crate::graph::Host;
use crate::{linalg, Error, Limits, Result};

/// `H(r) = I(r) + (-1)^r J(r)` with exact rational coefficients, constant
/// term first. Trailing zero coefficients are trimmed, so the zero
/// polynomial is empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiPolynomial {
    i: Vec<BigRational>,
    j: Vec<BigRational>,
}

fn trim(mut c: Vec<BigRational>) -> Vec<BigRational> {
    while c.last().is_some_and(Zero::is_zero) {
        c.pop();
    }
    c
}

fn eval_poly(c: &[BigRational], r: u64) -> BigRational {
    let x = BigRational::from_integer(BigInt::from(r));
    c.iter()
        .rev()
        .fold(BigRational::zero(), |acc, a| acc * &x + a)
}

impl QuasiPolynomial {
    pub fn new(i: Vec<BigRational>, j: Vec<BigRational>) -> Self {
        QuasiPolynomial {
            i: trim(i),
            j: trim(j),
        }
    }

    /// Coefficients of `I`.
    pub fn i(&self) -> &[BigRational] {
        &self.i
    }

    /// Coefficients of `J`.
    pub fn j(&self) -> &[BigRational] {
        &self.j
    }

    /// `max(deg I, deg J)`, or -1 for the zero function.
    pub fn degree(&self) -> i64 {
        self.i.len().max(self.j.len()) as i64 - 1
    }

    pub fn is_polynomial(&self) -> bool {
        self.j.is_empty()
    }

    pub fn evaluate(&self, r: u64) -> BigRational {
        let i = eval_poly(&self.i, r);
        let j = eval_poly(&self.j, r);
        if r.is_multiple_of(2) {
            i + j
        } else {
            i - j
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EhrhartFunction {
    /// Only the zero labeling exists: `H(r) = δ_{0r}`.
    KroneckerDelta,
    Quasi(QuasiPolynomial),
}

impl EhrhartFunction {
    pub fn evaluate(&self, r: u64) -> BigRational {
        match self {
            EhrhartFunction::KroneckerDelta if r == 0 => BigRational::one(),
            EhrhartFunction::KroneckerDelta => BigRational::zero(),
            EhrhartFunction::Quasi(q) => q.evaluate(r),
        }
    }

    pub fn as_quasi(&self) -> Option<&QuasiPolynomial> {
        match self {
            EhrhartFunction::Quasi(q) => Some(q),
            EhrhartFunction::KroneckerDelta => None,
        }
    }
}

/// A fitted counting function together with the data it was fitted on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EhrhartFit {
    pub function: EhrhartFunction,
    /// The positive part the fit was computed on.
    pub positive_host: Host,
    /// `q - n + b` (graphs) or `q - 2n + b` (digraphs) of the positive part;
    /// `None` in the Kronecker delta case.
    pub expected_degree: Option<i64>,
    /// `H(0), H(1), ...` used for fitting and validation.
    pub samples: Vec<BigUint>,
}

impl EhrhartFit {
    pub fn degree(&self) -> Option<i64> {
        self.function.as_quasi().map(QuasiPolynomial::degree)
    }

    pub fn is_delta(&self) -> bool {
        matches!(self.function, EhrhartFunction::KroneckerDelta)
    }
}

pub fn fit_quasipolynomial(host: &Host) -> Result<EhrhartFit> {
    fit_quasipolynomial_with(host, &Limits::default())
}

/// Fits `I` and `J` of degree `d = expected_degree` from `H(0..=2d+1)` and
/// checks the result against `H(2d+2)` and `H(2d+3)`.
///
/// Always-zero edges are deleted first; an edgeless positive part is the
/// Kronecker delta case.
pub fn fit_quasipolynomial_with(host: &Host, limits: &Limits) -> Result<EhrhartFit> {
    let positive_host = positive_part_with(host, limits)?.host;
    if positive_host.edge_count() == 0 {
        return Ok(EhrhartFit {
            function: EhrhartFunction::KroneckerDelta,
            positive_host,
            expected_degree: None,
            samples: vec![BigUint::one(), BigUint::zero()],
        });
    }
    let d = expected_degree(&positive_host);
    if d < 0 {
        return Err(Error::internal(format!(
            "positive host has negative expected degree {d}"
        )));
    }
    let d = d as usize;
    let last = 2 * d as u64 + 3;
    let samples: Vec<BigUint> = (0..=last)
        .into_par_iter()
        .map(|r| count_magic_with(&positive_host, r, limits))
        .collect::<Result<_>>()?;

    let unknowns = 2 * (d + 1);
    let mut a = Vec::with_capacity(unknowns);
    let mut b = Vec::with_capacity(unknowns);
    for (r, sample) in samples.iter().enumerate().take(unknowns) {
        let powers: Vec<BigInt> = (0..=d).map(|k| BigInt::from(r).pow(k as u32)).collect();
        let sign = if r.is_multiple_of(2) {
            BigInt::one()
        } else {
            -BigInt::one()
        };
        let mut row = powers.clone();
        row.extend(powers.iter().map(|p| p * &sign));
        a.push(row);
        b.push(BigInt::from(sample.clone()));
    }
    let x =
        linalg::solve(&a, &b).ok_or_else(|| Error::internal("interpolation system is singular"))?;
    let (i, j) = x.split_at(d + 1);
    let q = QuasiPolynomial::new(i.to_vec(), j.to_vec());

    for r in 0..=last {
        let want = BigRational::from_integer(BigInt::from(samples[r as usize].clone()));
        let got = q.evaluate(r);
        if got != want || got.is_negative() {
            return Err(Error::internal(format!(
                "fitted quasi-polynomial gives {got} at r = {r}, count is {want}"
            )));
        }
    }
    Ok(EhrhartFit {
        function: EhrhartFunction::Quasi(q),
        positive_host,
        expected_degree: Some(d as i64),
        samples,
    })
}
