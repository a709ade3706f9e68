//! Cartan data, weights and Weyl-group combinatorics.
//!
//! Weights are stored in fundamental-weight coordinates and roots in
//! simple-root coordinates. The Cartan matrix entry `a[i][j]` is
//! `<alpha_i, alpha_j^vee>`, so row `i` of the matrix is `alpha_i` written
//! in fundamental coordinates. Simple-root indices are 0-based internally
//! and printed 1-based.
//!
//! Weyl group elements are handled through their action on the regular
//! dominant weight `rho = (1, ..., 1)`: `w` is determined by `w(rho)`, and
//! `s_i` is a left descent of `w` exactly when `<w(rho), alpha_i^vee> < 0`.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

/// A weight `sum m_i lambda_i` in fundamental coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = vec![0; rank];
        w[i] = 1;
        Weight(w)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// `<mu, alpha_i^vee>`.
    pub fn pairing(&self, i: usize) -> i64 {
        self.0[i]
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&m| m >= 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scaled(&self, c: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * c).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, m) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Weight {
    type Err = Error;

    /// Comma-separated integers, e.g. `2,1` or `-2,2`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        s.split(',')
            .map(|p| p.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad weight coordinate {p:?}"))))
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }
}

/// `nu = sum a_k alpha_k` in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootVector(pub Vec<i64>);

impl RootVector {
    pub fn zero(rank: usize) -> Self {
        RootVector(vec![0; rank])
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        RootVector(v)
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&a| a >= 0)
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, a) in self.0.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            if *a == 1 {
                write!(f, "a{}", k + 1)?;
            } else {
                write!(f, "{a}a{}", k + 1)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A word `s_{i_1} s_{i_2} ... s_{i_r}` in the simple reflections (0-based letters).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylWord(pub Vec<usize>);

impl WeylWord {
    pub fn identity() -> Self {
        WeylWord(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Letters as 1-based node numbers.
    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|i| i + 1).collect()
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for i in &self.0 {
            write!(f, "s{}", i + 1)?;
        }
        Ok(())
    }
}

/// A finite-type Cartan datum with its symmetrizing integers
/// `d_i = (alpha_i, alpha_i) / 2` (`d_i = 1` on short roots).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CartanDatum {
    letter: char,
    rank: usize,
    matrix: Vec<Vec<i64>>,
    sym: Vec<i64>,
}

impl CartanDatum {
    /// Standard Cartan matrix of type `letter` and rank `rank`, nodes numbered
    /// as in Bourbaki (for `G2` node 1 is the short root).
    pub fn new(letter: char, rank: usize) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("no Cartan type {letter}{rank}"));
        let n = rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let chain = |a: &mut Vec<Vec<i64>>, len: usize| {
            for i in 0..len.saturating_sub(1) {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
        };
        let sym = match letter {
            'A' if n >= 1 => {
                chain(&mut a, n);
                vec![1; n]
            }
            'B' if n >= 2 => {
                chain(&mut a, n);
                a[n - 2][n - 1] = -2;
                let mut d = vec![2; n];
                d[n - 1] = 1;
                d
            }
            'C' if n >= 2 => {
                chain(&mut a, n);
                a[n - 1][n - 2] = -2;
                let mut d = vec![1; n];
                d[n - 1] = 2;
                d
            }
            'D' if n >= 3 => {
                chain(&mut a, n - 1);
                a[n - 3][n - 1] = -1;
                a[n - 1][n - 3] = -1;
                vec![1; n]
            }
            'E' if (6..=8).contains(&n) => {
                let edges = [(0usize, 2usize), (1, 3), (2, 3)];
                for &(i, j) in edges.iter().chain((3..n - 1).map(|k| (k, k + 1)).collect::<Vec<_>>().iter()) {
                    a[i][j] = -1;
                    a[j][i] = -1;
                }
                vec![1; n]
            }
            'F' if n == 4 => {
                chain(&mut a, 4);
                a[1][2] = -2;
                vec![2, 2, 1, 1]
            }
            'G' if n == 2 => {
                a[0][1] = -1;
                a[1][0] = -3;
                vec![1, 3]
            }
            _ => return Err(bad()),
        };
        let datum = CartanDatum { letter, rank, matrix: a, sym };
        debug_assert!(datum.is_symmetrizable());
        Ok(datum)
    }

    pub fn letter(&self) -> char {
        self.letter
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.letter, self.rank)
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    /// `<alpha_i, alpha_j^vee>`.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.matrix[i][j]
    }

    /// `d_i = (alpha_i, alpha_i) / 2`, so `q_{alpha_i} = q^{d_i}`.
    pub fn d(&self, i: usize) -> i64 {
        self.sym[i]
    }

    pub(crate) fn is_symmetrizable(&self) -> bool {
        (0..self.rank).all(|i| {
            (0..self.rank).all(|j| {
                let ok = self.sym[j] * self.matrix[i][j] == self.sym[i] * self.matrix[j][i];
                ok && (i == j || self.matrix[i][j] <= 0) && self.matrix[i][i] == 2
            })
        })
    }

    fn check_rank(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank {
            return Err(Error::InvalidArgument(format!(
                "weight {w} has {} coordinates but {} has rank {}",
                w.rank(),
                self.name(),
                self.rank
            )));
        }
        Ok(())
    }

    pub fn validate_weight(&self, w: &Weight) -> Result<()> {
        self.check_rank(w)
    }

    /// `alpha_i` in fundamental coordinates.
    pub fn simple_root(&self, i: usize) -> Weight {
        Weight(self.matrix[i].clone())
    }

    pub fn root_to_weight(&self, nu: &RootVector) -> Weight {
        let mut w = Weight::zero(self.rank);
        for (j, a) in nu.0.iter().enumerate() {
            for k in 0..self.rank {
                w.0[k] += a * self.matrix[j][k];
            }
        }
        w
    }

    /// Rational simple-root coordinates of a weight.
    pub fn weight_to_root_rational(&self, mu: &Weight) -> Vec<Rational> {
        // solve c^T A = mu^T, i.e. A^T c = mu
        let n = self.rank;
        let mut m: Vec<Vec<Rational>> = (0..n)
            .map(|r| {
                let mut row: Vec<Rational> = (0..n).map(|c| Rational::from(self.matrix[c][r])).collect();
                row.push(Rational::from(mu.0[r]));
                row
            })
            .collect();
        for col in 0..n {
            let piv = (col..n).find(|&r| !m[r][col].is_zero()).expect("Cartan matrix is invertible");
            m.swap(col, piv);
            let p = m[col][col];
            for x in m[col].iter_mut() {
                *x /= p;
            }
            for r in 0..n {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col];
                    for c in 0..=n {
                        let v = m[col][c];
                        m[r][c] -= f * v;
                    }
                }
            }
        }
        m.into_iter().map(|row| row[n]).collect()
    }

    /// Integer simple-root coordinates, if `mu` lies in the root lattice.
    pub fn weight_to_root(&self, mu: &Weight) -> Option<RootVector> {
        let c = self.weight_to_root_rational(mu);
        c.iter()
            .map(|x| if x.is_integer() { Some(x.to_integer()) } else { None })
            .collect::<Option<Vec<_>>>()
            .map(RootVector)
    }

    /// The W-invariant form, normalized so `(alpha, alpha) = 2` on short roots.
    pub fn inner_product(&self, mu: &Weight, nu: &Weight) -> Rational {
        // (lambda_i, alpha_j) = d_j delta_ij
        let c = self.weight_to_root_rational(nu);
        (0..self.rank).map(|i| Rational::from(mu.0[i] * self.sym[i]) * c[i]).sum()
    }

    /// `(mu, alpha_i)`, the exponent of `q` in `K_i` acting on weight `mu`.
    pub fn pairing_with_root(&self, mu: &Weight, i: usize) -> i64 {
        self.sym[i] * mu.0[i]
    }

    pub fn reflect(&self, i: usize, mu: &Weight) -> Weight {
        let c = mu.0[i];
        if c == 0 {
            return mu.clone();
        }
        Weight(mu.0.iter().zip(&self.matrix[i]).map(|(m, a)| m - c * a).collect())
    }

    /// Applies the word to `mu`, rightmost letter first.
    pub fn act_word(&self, word: &WeylWord, mu: &Weight) -> Weight {
        word.0.iter().rev().fold(mu.clone(), |acc, &i| self.reflect(i, &acc))
    }

    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank])
    }

    /// Length of the element represented by `word`.
    pub fn length(&self, word: &WeylWord) -> usize {
        self.reduce_to_dominant(&self.act_word(word, &self.rho())).len()
    }

    pub fn is_reduced(&self, word: &WeylWord) -> bool {
        self.length(word) == word.len()
    }

    /// Same group element.
    pub fn words_equal(&self, u: &WeylWord, w: &WeylWord) -> bool {
        self.act_word(u, &self.rho()) == self.act_word(w, &self.rho())
    }

    /// Letters `i_1, i_2, ...` obtained by repeatedly applying the smallest
    /// `s_i` with negative pairing until `mu` is dominant. Then
    /// `mu = s_{i_1} s_{i_2} ... (dominant)` and the letters form the
    /// lexicographically smallest reduced word of the minimal element doing so.
    fn reduce_to_dominant(&self, mu: &Weight) -> Vec<usize> {
        let mut cur = mu.clone();
        let mut letters = Vec::new();
        while let Some(i) = (0..self.rank).find(|&i| cur.0[i] < 0) {
            cur = self.reflect(i, &cur);
            letters.push(i);
        }
        letters
    }

    /// Lexicographically smallest reduced expression for the element of `w`.
    pub fn lex_min_reduced_word(&self, w: &WeylWord) -> WeylWord {
        WeylWord(self.reduce_to_dominant(&self.act_word(w, &self.rho())))
    }

    /// Bruhat order through the subword property: `u <= w` iff some subword
    /// of a reduced word of `w` is a reduced word of `u`.
    pub fn bruhat_leq(&self, u: &WeylWord, w: &WeylWord) -> bool {
        let w = self.lex_min_reduced_word(w);
        let u_elt = self.act_word(u, &self.rho());
        let mut memo = HashMap::new();
        self.bruhat_rec(&u_elt, &w.0, &mut memo)
    }

    fn bruhat_rec(&self, u: &Weight, w: &[usize], memo: &mut HashMap<(Weight, usize), bool>) -> bool {
        if w.is_empty() || u.is_dominant() {
            return u.is_dominant();
        }
        let key = (u.clone(), w.len());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let s = w[0];
        let rest = &w[1..];
        // either the first letter is skipped, or it starts a reduced word of u
        let mut ans = self.bruhat_rec(u, rest, memo);
        if !ans && u.0[s] < 0 {
            ans = self.bruhat_rec(&self.reflect(s, u), rest, memo);
        }
        memo.insert(key, ans);
        ans
    }

    pub fn bruhat_less(&self, u: &WeylWord, w: &WeylWord) -> bool {
        !self.words_equal(u, w) && self.bruhat_leq(u, w)
    }

    /// Minimal-length `w` with `w(lambda) = mu`, as its lex-minimal reduced word.
    pub fn min_coset_rep(&self, lambda: &Weight, mu: &Weight) -> Result<WeylWord> {
        self.check_rank(lambda)?;
        self.check_rank(mu)?;
        let letters = self.reduce_to_dominant(mu);
        let word = WeylWord(letters);
        if self.act_word(&WeylWord(word.0.iter().rev().copied().collect()), mu) != *lambda {
            return Err(Error::NotInOrbit { lambda: lambda.to_string(), mu: mu.to_string() });
        }
        Ok(word)
    }

    /// Positive roots in simple-root coordinates, sorted by height then coordinates.
    pub fn positive_roots(&self) -> Vec<RootVector> {
        let mut seen: BTreeSet<RootVector> = BTreeSet::new();
        let mut queue: VecDeque<RootVector> = (0..self.rank).map(|i| RootVector::simple(self.rank, i)).collect();
        while let Some(r) = queue.pop_front() {
            if !seen.insert(r.clone()) {
                continue;
            }
            let as_weight = self.root_to_weight(&r);
            for i in 0..self.rank {
                let mut img = r.clone();
                img.0[i] -= as_weight.0[i];
                if img.is_nonnegative() && img.height() > 0 && !seen.contains(&img) {
                    queue.push_back(img);
                }
            }
        }
        let mut roots: Vec<_> = seen.into_iter().collect();
        roots.sort_by_key(|r| (r.height(), r.0.clone()));
        roots
    }

    /// `<mu, beta^vee>` for a root `beta` given in simple-root coordinates.
    pub fn coroot_pairing(&self, mu: &Weight, beta: &RootVector) -> Rational {
        // beta^vee = sum_k c_k (d_k / d_beta) alpha_k^vee
        let b = self.root_to_weight(beta);
        let norm = self.inner_product(&b, &b) / Rational::from(2);
        let num: i64 = beta.0.iter().enumerate().map(|(k, c)| c * self.sym[k] * mu.0[k]).sum();
        Rational::from(num) / norm
    }

    /// Weyl's dimension formula.
    pub fn weyl_dim(&self, lambda: &Weight) -> Result<BigInt> {
        self.check_rank(lambda)?;
        if !lambda.is_dominant() {
            return Err(Error::InvalidArgument(format!("{lambda} is not dominant")));
        }
        let rho = self.rho();
        let shifted = lambda.add(&rho);
        let mut acc = BigRational::one();
        for beta in self.positive_roots() {
            let num = self.coroot_pairing(&shifted, &beta);
            let den = self.coroot_pairing(&rho, &beta);
            let r = num / den;
            acc *= BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()));
        }
        debug_assert!(acc.is_integer());
        Ok(acc.to_integer())
    }

    /// All Weyl group elements as lex-minimal reduced words (BFS by length).
    /// Only sensible for small ranks.
    pub fn weyl_group(&self) -> Vec<WeylWord> {
        let rho = self.rho();
        let mut seen = HashMap::new();
        let mut out = Vec::new();
        let mut queue = VecDeque::from([rho.clone()]);
        seen.insert(rho, ());
        while let Some(x) = queue.pop_front() {
            out.push(WeylWord(self.reduce_to_dominant(&x)));
            for i in 0..self.rank {
                let y = self.reflect(i, &x);
                if seen.insert(y.clone(), ()).is_none() {
                    queue.push_back(y);
                }
            }
        }
        out
    }
}

impl FromStr for CartanDatum {
    type Err = Error;

    /// Parses strings like `A3`, `G2`, `e8`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars
            .next()
            .ok_or_else(|| Error::Parse("empty Cartan type".into()))?
            .to_ascii_uppercase();
        let rank: usize = chars.as_str().parse().map_err(|_| Error::Parse(format!("bad Cartan type {s:?}")))?;
        CartanDatum::new(letter, rank)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g2() -> CartanDatum {
        "G2".parse().unwrap()
    }

    fn word(v: &[usize]) -> WeylWord {
        WeylWord(v.iter().map(|i| i - 1).collect())
    }

    #[test]
    fn standard_matrices_are_symmetrizable() {
        for (l, r) in [('A', 1), ('A', 4), ('B', 3), ('C', 3), ('D', 4), ('E', 6), ('E', 7), ('E', 8), ('F', 4), ('G', 2)] {
            let c = CartanDatum::new(l, r).unwrap();
            assert!(c.is_symmetrizable(), "{l}{r}");
        }
        assert!(CartanDatum::new('G', 3).is_err());
        assert!("Q2".parse::<CartanDatum>().is_err());
    }

    #[test]
    fn g2_roots_and_reflections() {
        let g = g2();
        assert_eq!(g.simple_root(0), Weight(vec![2, -1]));
        assert_eq!(g.simple_root(1), Weight(vec![-3, 2]));
        assert_eq!(g.reflect(0, &Weight(vec![1, 0])), Weight(vec![-1, 1]));
        let mu = Weight(vec![0, 5]);
        assert_eq!(g.reflect(0, &mu), mu);
        assert_eq!(g.positive_roots().len(), 6);
        assert_eq!(g.d(0), 1);
        assert_eq!(g.d(1), 3);
        assert_eq!(g.inner_product(&g.simple_root(1), &g.simple_root(1)), Rational::from(6));
    }

    #[test]
    fn lex_min_words() {
        let a2: CartanDatum = "A2".parse().unwrap();
        assert_eq!(a2.lex_min_reduced_word(&word(&[2, 1, 2])), word(&[1, 2, 1]));
        assert_eq!(a2.lex_min_reduced_word(&word(&[1, 1])), WeylWord::identity());
        let g = g2();
        // s2 s1 s2 in G2 has a unique reduced word
        assert_eq!(g.lex_min_reduced_word(&word(&[2, 1, 2])), word(&[2, 1, 2]));
    }

    /// Brute force over all words of a given length.
    fn all_words(rank: usize, len: usize) -> Vec<WeylWord> {
        let mut out = vec![WeylWord::identity()];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|w| {
                    (0..rank).map(move |i| {
                        let mut v = w.0.clone();
                        v.push(i);
                        WeylWord(v)
                    })
                })
                .collect();
        }
        out
    }

    #[test]
    fn lex_min_matches_enumeration_on_g2() {
        let g = g2();
        for len in 0..=6 {
            for w in all_words(2, len) {
                if !g.is_reduced(&w) {
                    continue;
                }
                let best = all_words(2, len)
                    .into_iter()
                    .filter(|v| g.is_reduced(v) && g.words_equal(v, &w))
                    .min()
                    .unwrap();
                assert_eq!(g.lex_min_reduced_word(&w), best);
            }
        }
    }

    fn subword_oracle(g: &CartanDatum, u: &WeylWord, w: &WeylWord) -> bool {
        let n = w.len();
        (0u32..(1 << n)).any(|mask| {
            let sub = WeylWord((0..n).filter(|k| mask & (1 << k) != 0).map(|k| w.0[k]).collect());
            g.is_reduced(&sub) && g.words_equal(&sub, u)
        })
    }

    #[test]
    fn bruhat_examples_and_partial_order_on_g2() {
        let g = g2();
        assert!(g.bruhat_leq(&word(&[1]), &word(&[1, 2, 1])));
        assert!(g.bruhat_leq(&word(&[1, 2, 1]), &word(&[1, 2, 1])));
        assert!(g.bruhat_leq(&word(&[1, 2, 1]), &word(&[1, 2, 1, 2])));
        assert!(!g.bruhat_leq(&word(&[1, 2, 1]), &word(&[2, 1, 2])));

        let elts = g.weyl_group();
        assert_eq!(elts.len(), 12);
        for u in &elts {
            for w in &elts {
                let le = g.bruhat_leq(u, w);
                assert_eq!(le, subword_oracle(&g, u, w), "{u} {w}");
                if le && g.bruhat_leq(w, u) {
                    assert_eq!(u, w);
                }
                for v in &elts {
                    if le && g.bruhat_leq(w, v) {
                        assert!(g.bruhat_leq(u, v));
                    }
                }
            }
            assert!(g.bruhat_leq(u, u));
        }
    }

    #[test]
    fn coset_representatives() {
        let g = g2();
        let l1 = Weight(vec![1, 0]);
        assert_eq!(g.min_coset_rep(&l1, &Weight(vec![-1, 1])).unwrap(), word(&[1]));
        assert_eq!(g.min_coset_rep(&l1, &l1).unwrap(), WeylWord::identity());
        let lam = Weight(vec![2, 1]);
        let w = word(&[1, 2, 1, 2, 1]);
        let mu = g.act_word(&w, &lam);
        assert_eq!(g.min_coset_rep(&lam, &mu).unwrap(), w);
        assert!(matches!(
            g.min_coset_rep(&lam, &Weight(vec![0, 0])),
            Err(Error::NotInOrbit { .. })
        ));
    }

    #[test]
    fn dimensions() {
        let g = g2();
        assert_eq!(g.weyl_dim(&Weight(vec![1, 0])).unwrap(), BigInt::from(7));
        assert_eq!(g.weyl_dim(&Weight(vec![0, 1])).unwrap(), BigInt::from(14));
        assert_eq!(g.weyl_dim(&Weight(vec![0, 0])).unwrap(), BigInt::from(1));
        let a2: CartanDatum = "A2".parse().unwrap();
        assert_eq!(a2.weyl_dim(&Weight(vec![1, 1])).unwrap(), BigInt::from(8));
        let b2: CartanDatum = "B2".parse().unwrap();
        assert_eq!(b2.weyl_dim(&Weight(vec![0, 1])).unwrap(), BigInt::from(4));
        assert_eq!(b2.weyl_dim(&Weight(vec![1, 0])).unwrap(), BigInt::from(5));
        let e8: CartanDatum = "E8".parse().unwrap();
        assert_eq!(e8.weyl_dim(&Weight::fundamental(8, 7)).unwrap(), BigInt::from(248));
        let f4: CartanDatum = "F4".parse().unwrap();
        assert_eq!(f4.weyl_dim(&Weight::fundamental(4, 3)).unwrap(), BigInt::from(26));
    }

    #[test]
    fn weight_parsing_and_conversion() {
        assert_eq!("-2, 2".parse::<Weight>().unwrap(), Weight(vec![-2, 2]));
        assert!("1,x".parse::<Weight>().is_err());
        let g = g2();
        let nu = RootVector(vec![5, 2]);
        let w = g.root_to_weight(&nu);
        assert_eq!(g.weight_to_root(&w), Some(nu));
        assert_eq!(Weight(vec![2, 1]).sub(&w), Weight(vec![-2, 2]));
        let a1: CartanDatum = "A1".parse().unwrap();
        assert_eq!(a1.weight_to_root(&Weight(vec![1])), None);
    }

    fn arb_g2_weight() -> impl Strategy<Value = Weight> {
        prop::collection::vec(-5i64..=5, 2).prop_map(Weight)
    }

    proptest! {
        #[test]
        fn form_is_w_invariant(mu in arb_g2_weight(), nu in arb_g2_weight(), i in 0usize..2) {
            let g = g2();
            prop_assert_eq!(g.inner_product(&g.reflect(i, &mu), &g.reflect(i, &nu)), g.inner_product(&mu, &nu));
            prop_assert_eq!(g.reflect(i, &g.reflect(i, &mu)), mu);
        }

        #[test]
        fn lex_min_word_is_same_element(letters in prop::collection::vec(0usize..3, 0..10)) {
            let a3: CartanDatum = "A3".parse().unwrap();
            let w = WeylWord(letters);
            let r = a3.lex_min_reduced_word(&w);
            prop_assert_eq!(r.len(), a3.length(&w));
            prop_assert!(a3.words_equal(&r, &w));
        }

        #[test]
        fn coset_rep_reproduces_orbit_point(letters in prop::collection::vec(0usize..2, 0..8), a in 0i64..3, b in 0i64..3) {
            let g = g2();
            let lam = Weight(vec![a, b]);
            let mu = g.act_word(&WeylWord(letters), &lam);
            let rep = g.min_coset_rep(&lam, &mu).unwrap();
            prop_assert_eq!(g.act_word(&rep, &lam), mu);
            prop_assert!(g.is_reduced(&rep));
        }
    }
}
