//! Sparse multivariate polynomials over arbitrary-precision integers.
//!
//! Terms are kept in a `BTreeMap` keyed by [`ExponentVector`], whose `Ord`
//! is the term order used throughout the crate: monomials are compared at
//! the largest variable index where they differ, and the larger exponent
//! wins. Under this order the leading monomial of a Schubert polynomial is
//! `x^{L(w)}`.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exponents of `x_1, x_2, ...` with trailing zeros trimmed.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        ExponentVector(exps)
    }

    /// The exponent vector of the single variable `x_i`.
    pub fn var(i: usize) -> Self {
        assert!(i >= 1, "variables are indexed from 1");
        let mut exps = vec![0; i];
        exps[i - 1] = 1;
        ExponentVector(exps)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// Exponent of `x_i` (1-based).
    pub fn get(&self, i: usize) -> u32 {
        self.0.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Largest variable index with a nonzero exponent (0 for the constant).
    pub fn max_variable(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Exponents padded or cut to length `n`.
    pub fn padded(&self, n: usize) -> Vec<u32> {
        let mut v = self.0.clone();
        v.resize(n, 0);
        v
    }

    fn times(&self, other: &ExponentVector) -> ExponentVector {
        let (long, short) = if self.0.len() >= other.0.len() {
            (&self.0, &other.0)
        } else {
            (&other.0, &self.0)
        };
        let mut exps = long.clone();
        for (e, s) in exps.iter_mut().zip(short) {
            *e += s;
        }
        ExponentVector(exps)
    }

    /// Exchanges the exponents of `x_i` and `x_{i+1}`.
    fn swapped(&self, i: usize) -> ExponentVector {
        let mut exps = self.padded(self.0.len().max(i + 1));
        exps.swap(i - 1, i);
        ExponentVector::new(exps)
    }

    /// `self / x_i`, or `None` if `x_i` does not divide.
    fn divide_var(&self, i: usize) -> Option<ExponentVector> {
        if self.get(i) == 0 {
            return None;
        }
        let mut exps = self.0.clone();
        exps[i - 1] -= 1;
        Some(ExponentVector::new(exps))
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        // Trimmed vectors: the longer one has a nonzero exponent at an index
        // where the shorter one has zero.
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let factors: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| match e {
                1 => format!("x{}", i + 1),
                _ => format!("x{}^{}", i + 1, e),
            })
            .collect();
        f.write_str(&factors.join("*"))
    }
}

impl Serialize for ExponentVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExponentVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(ExponentVector::new(Vec::deserialize(d)?))
    }
}

/// A polynomial in `Z[x_1, x_2, ...]`. No zero coefficient is ever stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    terms: BTreeMap<ExponentVector, BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial::default()
    }

    pub fn one() -> Self {
        IntPolynomial::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        IntPolynomial::monomial(ExponentVector::default(), c)
    }

    pub fn var(i: usize) -> Self {
        IntPolynomial::monomial(ExponentVector::var(i), 1)
    }

    pub fn monomial(exps: ExponentVector, c: impl Into<BigInt>) -> Self {
        let mut p = IntPolynomial::zero();
        p.add_term(exps, c.into());
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, combining
    /// repeated monomials.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, C)>,
        C: Into<BigInt>,
    {
        let mut p = IntPolynomial::zero();
        for (exps, c) in terms {
            p.add_term(ExponentVector::new(exps), c.into());
        }
        p
    }

    pub fn add_term(&mut self, exps: ExponentVector, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending term order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &ExponentVector) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    /// The greatest monomial under the term order, with its coefficient.
    pub fn leading_term(&self) -> Result<(&ExponentVector, &BigInt)> {
        self.terms.iter().next_back().ok_or(Error::ZeroPolynomial)
    }

    pub fn scale(&self, c: &BigInt) -> IntPolynomial {
        if c.is_zero() {
            return IntPolynomial::zero();
        }
        IntPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e.clone(), v * c))
                .collect(),
        }
    }

    pub fn max_variable(&self) -> usize {
        self.terms.keys().map(ExponentVector::max_variable).max().unwrap_or(0)
    }

    /// The common degree of all terms, `None` for zero, or an error naming
    /// two distinct degrees.
    pub fn homogeneous_degree(&self) -> Result<Option<u32>> {
        let mut degrees = self.terms.keys().map(ExponentVector::degree);
        let Some(first) = degrees.next() else {
            return Ok(None);
        };
        match degrees.find(|&d| d != first) {
            Some(second) => Err(Error::NotHomogeneous { first, second }),
            None => Ok(Some(first)),
        }
    }

    pub fn all_coefficients_positive(&self) -> bool {
        self.terms.values().all(Signed::is_positive)
    }

    /// `s_i · f`: exchanges `x_i` and `x_{i+1}`.
    pub fn swap_action(&self, i: usize) -> IntPolynomial {
        assert!(i >= 1, "variables are indexed from 1");
        IntPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.swapped(i), c.clone()))
                .collect(),
        }
    }

    /// `∂_i f = (f - s_i f) / (x_i - x_{i+1})`.
    ///
    /// The numerator is peeled from its leading term down. The leading term
    /// of the divisor is `-x_{i+1}`, so every step strips one `x_{i+1}`.
    /// A nonzero remainder means the arithmetic is broken and panics.
    pub fn divided_difference(&self, i: usize) -> IntPolynomial {
        assert!(i >= 1, "variables are indexed from 1");
        let mut rest = self - &self.swap_action(i);
        let mut quotient = IntPolynomial::zero();
        while let Some((lead, c)) = rest.terms.pop_last() {
            let q_exps = lead.divide_var(i + 1).unwrap_or_else(|| {
                panic!("divided difference ∂_{i} left a nonzero remainder at {lead:?}")
            });
            let q = -c;
            // rest -= q * (x_i - x_{i+1}); the x_{i+1} part is the term just popped.
            let mut partner = q_exps.padded(q_exps.max_variable().max(i));
            partner[i - 1] += 1;
            rest.add_term(ExponentVector::new(partner), -q.clone());
            quotient.add_term(q_exps, q);
        }
        quotient
    }

    fn mul_poly(&self, other: &IntPolynomial) -> IntPolynomial {
        let mut out = IntPolynomial::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea.times(eb), ca * cb);
            }
        }
        out
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        self.mul_poly(rhs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        self.scale(&BigInt::from(-1))
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&IntPolynomial> for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: &IntPolynomial) -> IntPolynomial {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        -&self
    }
}

impl fmt::Display for IntPolynomial {
    /// Terms in descending term order, e.g. `x1^3*x3 + x1^3*x2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| (c.clone(), e.to_string(), e.is_one()));
        write_signed_sum(f, terms)
    }
}

/// Writes `c1*m1 + c2*m2 - ...`, suppressing unit coefficients on
/// non-constant monomials.
pub(crate) fn write_signed_sum(
    f: &mut impl fmt::Write,
    terms: impl Iterator<Item = (BigInt, String, bool)>,
) -> fmt::Result {
    for (idx, (c, body, is_constant)) in terms.enumerate() {
        let negative = c.is_negative();
        match (idx, negative) {
            (0, true) => f.write_str("-")?,
            (0, false) => {}
            (_, true) => f.write_str(" - ")?,
            (_, false) => f.write_str(" + ")?,
        }
        let abs = c.abs();
        if is_constant {
            write!(f, "{abs}")?;
        } else if abs.is_one() {
            f.write_str(&body)?;
        } else {
            write!(f, "{abs}*{body}")?;
        }
    }
    Ok(())
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for IntPolynomial {
    /// `[[exponents, "coeff"], ...]` in ascending term order.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.terms.iter().map(|(e, c)| (e, c.to_string())))
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<(Vec<u32>, String)>::deserialize(d)?;
        let mut p = IntPolynomial::zero();
        for (exps, c) in raw {
            let c: BigInt = c.parse().map_err(D::Error::custom)?;
            p.add_term(ExponentVector::new(exps), c);
        }
        Ok(p)
    }
}
