//! Exact arithmetic in `Z[q, q^-1]`.
//!
//! [`LaurentPoly`] stores its terms sparsely, keyed by exponent, with
//! arbitrary-precision integer coefficients. Zero coefficients are never
//! stored, so structural equality is polynomial equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * q^k`.
    pub fn monomial(c: impl Into<BigInt>, k: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        Self { terms }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (k, c) in terms {
            p.add_term(k, c.into());
        }
        p
    }

    fn add_term(&mut self, k: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(k).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, k: i64) -> BigInt {
        self.terms.get(&k).cloned().unwrap_or_default()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// The bar involution `q -> q^-1`.
    pub fn bar(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, c)| (-k, c.clone())).collect(),
        }
    }

    pub fn is_bar_invariant(&self) -> bool {
        *self == self.bar()
    }

    /// True iff every exponent is at least 1, i.e. the polynomial lies in `qZ[q]`.
    pub fn in_q_zq(&self) -> bool {
        self.min_degree().is_none_or(|k| k >= 1)
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Exact quotient `self / divisor`, or `NonDivisible` if the division
    /// leaves a remainder.
    pub fn divide_exact(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        let fail = || Error::NonDivisible {
            numerator: self.to_string(),
            denominator: divisor.to_string(),
        };
        let (Some(b_lo), Some(b_hi)) = (divisor.min_degree(), divisor.max_degree()) else {
            return Err(fail());
        };
        let Some(a_lo) = self.min_degree() else {
            return Ok(Self::zero());
        };
        let b_lead = &divisor.terms[&b_hi];
        let floor = a_lo - b_lo;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(r_hi) = rem.max_degree() {
            let k = r_hi - b_hi;
            if k < floor {
                return Err(fail());
            }
            let (c, r) = rem.terms[&r_hi].div_rem(b_lead);
            if !r.is_zero() {
                return Err(fail());
            }
            rem -= divisor.shift(k).scale(&c);
            quot.add_term(k, c);
        }
        Ok(quot)
    }

    /// Evaluates at a rational point `q = x` (`x` must be nonzero when
    /// negative exponents occur).
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (k, c) in &self.terms {
            let p = if *k >= 0 {
                num_traits::pow(x.clone(), *k as usize)
            } else {
                num_traits::pow(x.recip(), (-*k) as usize)
            };
            acc += p * BigRational::from_integer(c.clone());
        }
        acc
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (k, c) in &rhs.terms {
            self.add_term(*k, c.clone());
        }
    }
}

impl AddAssign for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        for (k, c) in rhs.terms {
            self.add_term(k, c);
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (k, c) in &rhs.terms {
            self.add_term(*k, -c.clone());
        }
    }
}

impl SubAssign for LaurentPoly {
    fn sub_assign(&mut self, rhs: LaurentPoly) {
        *self -= &rhs;
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $assign:ident) => {
        impl $tr<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                let mut out = self.clone();
                out.$assign(rhs);
                out
            }
        }
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(mut self, rhs: LaurentPoly) -> LaurentPoly {
                self.$assign(&rhs);
                self
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(mut self, rhs: &LaurentPoly) -> LaurentPoly {
                self.$assign(rhs);
                self
            }
        }
    };
}

forward_binop!(Add, add, add_assign);
forward_binop!(Sub, sub, sub_assign);

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl Mul<LaurentPoly> for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Mul<&LaurentPoly> for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        &self * rhs
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |acc, x| acc + x)
    }
}

/// Renders as `c*q^k` terms, exponents descending: `q^2+2+q^-2`,
/// `-3*q^5+q`, `0`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (k, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if neg {
                f.write_str("-")?;
            } else if n > 0 {
                f.write_str("+")?;
            }
            let mag = c.abs();
            match (*k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (k, true) => write!(f, "q^{k}")?,
                (k, false) => write!(f, "{mag}*q^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Accepts the rendering produced by `Display`, with optional whitespace,
    /// `q^(-2)`-style parenthesised exponents and bare `-q`.
    fn from_str(s: &str) -> Result<Self> {
        let err = |m: &str| Error::Parse(format!("bad Laurent literal {s:?}: {m}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty"));
        }
        // split into signed terms; a '-' directly after '^' or '(' belongs to an exponent
        let bytes = compact.as_bytes();
        let mut pieces = Vec::new();
        let mut start = 0;
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' && bytes[i - 1] != b'(' {
                pieces.push(&compact[start..i]);
                start = i;
            }
        }
        pieces.push(&compact[start..]);

        let mut out = LaurentPoly::zero();
        for piece in pieces {
            let (sign, body) = match piece.as_bytes()[0] {
                b'+' => (1, &piece[1..]),
                b'-' => (-1, &piece[1..]),
                _ => (1, piece),
            };
            if body.is_empty() {
                return Err(err("dangling sign"));
            }
            let (coeff, exp) = match body.find('q') {
                None => (body.parse::<BigInt>().map_err(|_| err(body))?, 0),
                Some(pos) => {
                    let head = body[..pos].trim_end_matches('*');
                    let coeff = if head.is_empty() {
                        BigInt::one()
                    } else {
                        head.parse::<BigInt>().map_err(|_| err(body))?
                    };
                    let tail = &body[pos + 1..];
                    let exp = if tail.is_empty() {
                        1
                    } else {
                        let e = tail.strip_prefix('^').ok_or_else(|| err(body))?;
                        let e = e.trim_start_matches('(').trim_end_matches(')');
                        e.parse::<i64>().map_err(|_| err(body))?
                    };
                    (coeff, exp)
                }
            };
            out.add_term(exp, coeff * sign);
        }
        Ok(out)
    }
}

/// `q_i^k` with `q_i = q^d`.
pub fn q_power(d: i64, k: i64) -> LaurentPoly {
    LaurentPoly::monomial(1, d * k)
}

/// The quantum integer `[n]` for `q_i = q^d`:
/// `q_i^(-n+1) + q_i^(-n+3) + ... + q_i^(n-1)`.
pub fn q_int(n: i64, d: i64) -> Result<LaurentPoly> {
    if n < 0 {
        return Err(Error::NegativeQuantumInteger(n));
    }
    Ok(LaurentPoly::from_terms((0..n).map(|j| (d * (-n + 1 + 2 * j), 1))))
}

/// `[n]` extended to negative `n` by `[-n] = -[n]`; this is the scalar by
/// which `(K_i - K_i^-1)/(q_i - q_i^-1)` acts on a weight vector.
pub fn q_int_signed(n: i64, d: i64) -> LaurentPoly {
    if n >= 0 {
        q_int(n, d).expect("nonnegative")
    } else {
        -q_int(-n, d).expect("nonnegative")
    }
}

pub fn q_factorial(n: i64, d: i64) -> Result<LaurentPoly> {
    if n < 0 {
        return Err(Error::NegativeQuantumInteger(n));
    }
    let mut acc = LaurentPoly::one();
    for k in 1..=n {
        acc = acc * q_int(k, d)?;
    }
    Ok(acc)
}

/// Gaussian binomial `[n]! / ([k]! [n-k]!)`.
pub fn q_binomial(n: i64, k: i64, d: i64) -> Result<LaurentPoly> {
    if k < 0 || k > n {
        return Ok(LaurentPoly::zero());
    }
    let den = q_factorial(k, d)? * q_factorial(n - k, d)?;
    q_factorial(n, d)?.divide_exact(&den)
}

/// The unique bar-invariant `xi` with `z + xi` in `qZ[q]`.
pub fn bar_symmetric_correction(z: &LaurentPoly) -> LaurentPoly {
    let mut xi = LaurentPoly::zero();
    for (k, c) in z.terms() {
        if k > 0 {
            break;
        }
        xi.add_term(k, -c.clone());
        if k < 0 {
            xi.add_term(-k, -c.clone());
        }
    }
    xi
}
