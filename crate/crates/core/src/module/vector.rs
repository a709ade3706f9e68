use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::error::Result;
use crate::laurent::LaurentPoly;

/// A sparse vector with Laurent-polynomial coefficients, keyed by basis label.
///
/// The `BTreeMap` order on keys is the order used everywhere else: for
/// multi-indices it is exactly the lexicographic order on tensor basis
/// vectors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vector<K: Ord> {
    entries: BTreeMap<K, LaurentPoly>,
}

impl<K: Ord> Default for Vector<K> {
    fn default() -> Self {
        Self { entries: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Vector<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(key: K) -> Self {
        let mut v = Self::zero();
        v.add_term(key, LaurentPoly::one());
        v
    }

    pub fn from_entries<I: IntoIterator<Item = (K, LaurentPoly)>>(entries: I) -> Self {
        let mut v = Self::zero();
        for (k, c) in entries {
            v.add_term(k, c);
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, key: &K) -> LaurentPoly {
        self.entries.get(key).cloned().unwrap_or_default()
    }

    pub fn coeff(&self, key: &K) -> Option<&LaurentPoly> {
        self.entries.get(key)
    }

    /// Entries in ascending key order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&K, &LaurentPoly)> {
        self.entries.iter()
    }

    pub fn keys(&self) -> impl DoubleEndedIterator<Item = &K> {
        self.entries.keys()
    }

    /// Largest key in the support.
    pub fn leading_key(&self) -> Option<&K> {
        self.entries.keys().next_back()
    }

    pub fn add_term(&mut self, key: K, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.entries.get_mut(&key) {
            Some(slot) => {
                *slot += c;
                if slot.is_zero() {
                    self.entries.remove(&key);
                }
            }
            None => {
                self.entries.insert(key, c);
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Vector<K>, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.entries {
            self.add_term(k.clone(), v * c);
        }
    }

    pub fn scaled(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn scaled_int(&self, c: &BigInt) -> Self {
        Self::from_entries(self.entries.iter().map(|(k, v)| (k.clone(), v.scale(c))))
    }

    pub fn sub(&self, other: &Vector<K>) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &LaurentPoly::constant(-1));
        out
    }

    pub fn add(&self, other: &Vector<K>) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &LaurentPoly::one());
        out
    }

    /// Coefficientwise exact division.
    pub fn divide_exact(&self, d: &LaurentPoly) -> Result<Self> {
        let mut out = BTreeMap::new();
        for (k, v) in &self.entries {
            out.insert(k.clone(), v.divide_exact(d)?);
        }
        Ok(Self { entries: out })
    }

    pub fn map_coeffs(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> Self {
        Self::from_entries(self.entries.iter().map(|(k, v)| (k.clone(), f(v))))
    }
}

impl<K: Ord + fmt::Debug> fmt::Debug for Vector<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, v) in self.entries.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({v}){k:?}")?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
