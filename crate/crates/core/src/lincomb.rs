//! Finite formal sums with exact integer coefficients, plus small exact
//! elimination over the rationals.

use std::collections::btree_map::{self, BTreeMap};
use std::ops::{Add, AddAssign, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A finitely supported map from basis keys to nonzero coefficients.
///
/// Iteration follows `K`'s `Ord`, which for compositions is the canonical
/// term order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, BigInt>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<K: Ord> LinComb<K> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(key: K) -> Self {
        Self::term(key, BigInt::one())
    }

    pub fn term(key: K, coeff: impl Into<BigInt>) -> Self {
        let mut out = Self::zero();
        out.add_term(key, coeff.into());
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of keys with a nonzero coefficient.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, BigInt> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, BigInt> {
        self.terms.keys()
    }

    pub fn coeff_of(&self, key: &K) -> BigInt {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    /// Adds `coeff · key`, dropping the key if it cancels.
    pub fn add_term(&mut self, key: K, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, factor: &BigInt)
    where
        K: Clone,
    {
        if factor.is_zero() {
            return;
        }
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c * factor);
        }
    }

    pub fn scale(&self, factor: &BigInt) -> Self
    where
        K: Clone,
    {
        if factor.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), c * factor))
                .collect(),
        }
    }

    /// Extends `f` linearly: `Σ c_k f(k)`.
    pub fn map_linear<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> LinComb<K2>) -> LinComb<K2> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Renders `3*a - b + c`, or `0` for the empty sum. Unit coefficients are omitted.
    pub fn format_with(&self, mut key: impl FnMut(&K) -> String) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let magnitude = c.abs();
            match (i, c.is_negative()) {
                (0, false) => {}
                (0, true) => out.push('-'),
                (_, false) => out.push_str(" + "),
                (_, true) => out.push_str(" - "),
            }
            if !magnitude.is_one() {
                out.push_str(&magnitude.to_string());
                out.push('*');
            }
            out.push_str(&key(k));
        }
        out
    }

    /// Relabels keys, merging coefficients of keys that collide.
    pub fn map_keys<K2: Ord>(&self, mut f: impl FnMut(&K) -> K2) -> LinComb<K2> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_term(f(k), c.clone());
        }
        out
    }
}

/// Distributes `f` over both supports: `(Σ a_k k) ∗ (Σ b_l l) = Σ a_k b_l f(k, l)`.
pub fn bilinear_extend<K1, K2, K3>(
    left: &LinComb<K1>,
    right: &LinComb<K2>,
    mut f: impl FnMut(&K1, &K2) -> LinComb<K3>,
) -> LinComb<K3>
where
    K1: Ord,
    K2: Ord,
    K3: Ord + Clone,
{
    let mut out = LinComb::zero();
    for (k, a) in left.iter() {
        for (l, b) in right.iter() {
            out.add_scaled(&f(k, l), &(a * b));
        }
    }
    out
}

impl<K: Ord> FromIterator<(K, BigInt)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, BigInt)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<K: Ord> IntoIterator for LinComb<K> {
    type Item = (K, BigInt);
    type IntoIter = btree_map::IntoIter<K, BigInt>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<K: Ord + Clone> AddAssign<&LinComb<K>> for LinComb<K> {
    fn add_assign(&mut self, rhs: &LinComb<K>) {
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), c.clone());
        }
    }
}

impl<K: Ord + Clone> Add for &LinComb<K> {
    type Output = LinComb<K>;

    fn add(self, rhs: Self) -> LinComb<K> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<K: Ord + Clone> Neg for &LinComb<K> {
    type Output = LinComb<K>;

    fn neg(self) -> LinComb<K> {
        LinComb {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }
}

impl<K: Ord + Clone> Sub for &LinComb<K> {
    type Output = LinComb<K>;

    fn sub(self, rhs: Self) -> LinComb<K> {
        let mut out = self.clone();
        out.add_scaled(rhs, &-BigInt::one());
        out
    }
}

fn integer_rows(rows: &[Vec<BigRational>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|row| {
            let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter()
                .map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer())
                .collect()
        })
        .collect()
}

/// Rank by fraction-free elimination: denominators are cleared per row and
/// every row update is divided by the content of the resulting row.
pub fn exact_rank(rows: &[Vec<BigRational>]) -> usize {
    let mut m = integer_rows(rows);
    let ncols = m.iter().map(Vec::len).max().unwrap_or(0);
    for row in &mut m {
        row.resize(ncols, BigInt::zero());
    }
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let (done, rest) = m.split_at_mut(rank + 1);
        let pivot_row = &done[rank];
        let pivot = &pivot_row[col];
        for row in rest.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for j in col..ncols {
                row[j] = pivot * &row[j] - &factor * &pivot_row[j];
            }
            let content = row.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
            if !content.is_zero() && !content.is_one() {
                for x in row.iter_mut() {
                    *x /= &content;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Dimension of `{x : A x = 0}` for the matrix with the given rows.
///
/// Rows must all have the same length; an empty row list has no columns.
pub fn exact_kernel_dim(rows: &[Vec<BigRational>]) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    assert!(
        rows.iter().all(|r| r.len() == ncols),
        "matrix rows must have equal length"
    );
    ncols - exact_rank(rows)
}

/// Integer matrix convenience for [`exact_kernel_dim`].
pub fn kernel_dim_of_integer_matrix(rows: &[Vec<i64>]) -> usize {
    let rows: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|&x| BigRational::from_integer(BigInt::from(x)))
                .collect()
        })
        .collect();
    exact_kernel_dim(&rows)
}

pub(crate) fn sign(negative: bool) -> BigInt {
    if negative {
        -BigInt::one()
    } else {
        BigInt::one()
    }
}
