//! Brute-force expansion of quasi-symmetric functions in finitely many variables.
//!
//! Restricting to `x1, ..., xn` is a ring homomorphism on series with `Ñ`
//! exponents, so every identity in `WCQSym` must hold exactly on these
//! truncations. The expansions here are written directly from the defining
//! sums over index tuples and share no code with the product or basis-change
//! routines they are used to check.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::composition::{enumerate_compositions, Composition};
use crate::error::{Error, Result};
use crate::hopf;
use crate::lincomb::LinComb;
use crate::monoid::{ExponentMonoid, NTilde};

/// Exponents of `x1, ..., xn`; `Zero` marks an absent variable.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ExponentVector(pub Vec<NTilde>);

impl ExponentVector {
    pub fn one(n: usize) -> Self {
        Self(vec![NTilde::Zero; n])
    }

    fn mul(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a.add(b)).collect())
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, e) in self.0.iter().enumerate() {
            if e.is_zero() {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if *e != NTilde::one() {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// A polynomial in `x1, ..., xn` with `Ñ` exponents.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncSeries {
    pub nvars: usize,
    pub terms: LinComb<ExponentVector>,
}

impl TruncSeries {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: LinComb::zero(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self {
            nvars,
            terms: LinComb::basis(ExponentVector::one(nvars)),
        }
    }

    /// A single monomial from `(variable index, exponent)` pairs, 1-based.
    pub fn monomial(nvars: usize, factors: &[(usize, NTilde)]) -> Self {
        let mut e = ExponentVector::one(nvars);
        for (i, a) in factors {
            e.0[i - 1] = e.0[i - 1].add(a);
        }
        Self {
            nvars,
            terms: LinComb::basis(e),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_vars(self, other)?;
        Ok(Self {
            nvars: self.nvars,
            terms: &self.terms + &other.terms,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        check_vars(self, other)?;
        Ok(Self {
            nvars: self.nvars,
            terms: &self.terms - &other.terms,
        })
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self {
            nvars: self.nvars,
            terms: self.terms.scale(c),
        }
    }
}

fn check_vars(u: &TruncSeries, v: &TruncSeries) -> Result<()> {
    if u.nvars == v.nvars {
        Ok(())
    } else {
        Err(Error::VariableCountMismatch {
            left: u.nvars,
            right: v.nvars,
        })
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.terms.format_with(ToString::to_string))
    }
}

/// Exponentwise `Ñ` addition, `X^f X^g = X^{f+g}`, extended bilinearly.
pub fn mul_series(u: &TruncSeries, v: &TruncSeries) -> Result<TruncSeries> {
    check_vars(u, v)?;
    let mut terms = LinComb::zero();
    for (a, c) in u.terms.iter() {
        for (b, d) in v.terms.iter() {
            terms.add_term(a.mul(b), c * d);
        }
    }
    Ok(TruncSeries {
        nvars: u.nvars,
        terms,
    })
}

/// Calls `f` on every strictly increasing tuple of length `k` in `1..=n`.
fn for_each_increasing(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    fn go(start: usize, n: usize, k: usize, buf: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if buf.len() == k {
            f(buf);
            return;
        }
        for i in start..=n {
            if n - i + 1 < k - buf.len() {
                break;
            }
            buf.push(i);
            go(i + 1, n, k, buf, f);
            buf.pop();
        }
    }
    go(1, n, k, &mut Vec::with_capacity(k), f);
}

/// `M_α = Σ_{i1 < ... < ik} x_{i1}^{α1} ... x_{ik}^{αk}` in `n` variables.
pub fn expand_m(alpha: &Composition, n: usize) -> TruncSeries {
    let mut terms = LinComb::zero();
    for_each_increasing(n, alpha.len(), &mut |idx| {
        let mut e = ExponentVector::one(n);
        for (i, a) in idx.iter().zip(alpha.entries()) {
            e.0[i - 1] = a.clone();
        }
        terms.add_term(e, BigInt::one());
    });
    TruncSeries { nvars: n, terms }
}

/// `F_α` in `n` variables.
///
/// Each `e` of `α` is one slot with exponent `e` and each positive entry `s`
/// is `s` slots with exponent `1`. Slot indices weakly increase, strictly
/// after each position in [`Composition::set_alpha_wc`]; exponents landing on
/// the same variable are added in `Ñ`.
pub fn expand_f(alpha: &Composition, n: usize) -> TruncSeries {
    let mut slots: Vec<NTilde> = Vec::new();
    for a in alpha.entries() {
        match a {
            NTilde::Eps => slots.push(NTilde::Eps),
            NTilde::Pos(s) => {
                let s: usize = s.try_into().expect("entry fits in memory");
                slots.extend(std::iter::repeat_n(NTilde::one(), s));
            }
            NTilde::Zero => unreachable!("composition entries are nonzero"),
        }
    }
    let strict = alpha.set_alpha_wc();
    let strict_after: Vec<bool> = (1..=slots.len())
        .map(|p| strict.contains(&BigUint::from(p)))
        .collect();

    fn go(
        pos: usize,
        min: usize,
        n: usize,
        slots: &[NTilde],
        strict_after: &[bool],
        e: &mut ExponentVector,
        terms: &mut LinComb<ExponentVector>,
    ) {
        if pos == slots.len() {
            terms.add_term(e.clone(), BigInt::one());
            return;
        }
        for i in min..=n {
            let saved = e.0[i - 1].clone();
            e.0[i - 1] = saved.add(&slots[pos]);
            let next = if strict_after[pos] { i + 1 } else { i };
            go(pos + 1, next, n, slots, strict_after, e, terms);
            e.0[i - 1] = saved;
        }
    }

    let mut terms = LinComb::zero();
    go(
        0,
        1,
        n,
        &slots,
        &strict_after,
        &mut ExponentVector::one(n),
        &mut terms,
    );
    TruncSeries { nvars: n, terms }
}

/// Number of index tuples `expand_m` visits.
pub fn m_term_bound(alpha: &Composition, n: usize) -> BigUint {
    binomial(BigUint::from(n), BigUint::from(alpha.len()))
}

/// Number of index strings `expand_f` visits, bounded by the weakly increasing ones.
pub fn f_term_bound(alpha: &Composition, n: usize) -> BigUint {
    let slots: BigUint = alpha
        .entries()
        .iter()
        .map(|a| a.positive().cloned().unwrap_or_else(|| BigUint::from(1u32)))
        .sum();
    if n == 0 {
        return BigUint::from(u32::from(slots == BigUint::ZERO));
    }
    binomial(slots + BigUint::from(n - 1), BigUint::from(n - 1))
}

/// `Σ c_α expand_m(α, n)`.
pub fn expand_m_sum(u: &LinComb<Composition>, n: usize) -> TruncSeries {
    let mut terms = LinComb::zero();
    for (alpha, c) in u.iter() {
        terms.add_scaled(&expand_m(alpha, n).terms, c);
    }
    TruncSeries { nvars: n, terms }
}

/// Compares `expand_m(α) expand_m(β)` with the expansion of the abstract product.
pub fn oracle_product_check(alpha: &Composition, beta: &Composition, n: usize) -> bool {
    let lhs = mul_series(&expand_m(alpha, n), &expand_m(beta, n)).expect("same variable count");
    let product = hopf::product(
        &LinComb::basis(alpha.clone()),
        &LinComb::basis(beta.clone()),
    );
    lhs == expand_m_sum(&product, n)
}

/// Compares `expand_f(α)` with the expansion of `F_α` in the monomial basis.
pub fn oracle_f_check(alpha: &Composition, n: usize) -> Result<bool> {
    Ok(expand_f(alpha, n) == expand_m_sum(&hopf::f_to_m_basis(alpha)?, n))
}

/// The pattern `(a1, ..., ak)` of nonzero exponents of a monomial, in variable order.
fn pattern(e: &ExponentVector) -> Vec<NTilde> {
    e.0.iter().filter(|a| !a.is_zero()).cloned().collect()
}

/// Whether the coefficient of `x_{i1}^{a1} ... x_{ik}^{ak}` depends only on
/// `(a1, ..., ak)` and not on the increasing indices.
pub fn is_quasi_symmetric(u: &TruncSeries) -> bool {
    let mut seen: BTreeMap<Vec<NTilde>, (BigInt, usize)> = BTreeMap::new();
    for (e, c) in u.terms.iter() {
        let entry = seen.entry(pattern(e)).or_insert_with(|| (c.clone(), 0));
        if entry.0 != *c {
            return false;
        }
        entry.1 += 1;
    }
    seen.iter()
        .all(|(p, (_, count))| binomial(u.nvars as u64, p.len() as u64) == *count as u64)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub products_checked: usize,
    pub fundamentals_checked: usize,
    pub failures: Vec<String>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs the product check on every pair and the `F` check on every
/// composition within the bounds. With `vars = None` products use
/// `ℓ(α) + ℓ(β)` variables and fundamentals use `ℓ(α)` and `ℓ(α) + 2`.
pub fn oracle_check(max_len: usize, max_entry: u64, vars: Option<usize>) -> Result<OracleReport> {
    let comps = enumerate_compositions(max_len, max_entry);
    let mut report = OracleReport {
        products_checked: 0,
        fundamentals_checked: 0,
        failures: Vec::new(),
    };
    for alpha in &comps {
        for beta in &comps {
            let n = vars.unwrap_or(alpha.len() + beta.len());
            report.products_checked += 1;
            if !oracle_product_check(alpha, beta, n) {
                report
                    .failures
                    .push(format!("M{alpha} * M{beta} in {n} variables"));
            }
        }
        let ns = match vars {
            Some(n) => vec![n],
            None => vec![alpha.len(), alpha.len() + 2],
        };
        for n in ns {
            report.fundamentals_checked += 1;
            if !oracle_f_check(alpha, n)? {
                report.failures.push(format!("F{alpha} in {n} variables"));
            }
        }
    }
    Ok(report)
}

/// A polynomial in `m` commuting variables with rational coefficients.
type RatPoly = BTreeMap<Vec<u32>, BigRational>;

fn poly_add_scaled(acc: &mut RatPoly, p: &RatPoly, c: &BigRational) {
    for (e, a) in p {
        let slot = acc.entry(e.clone()).or_insert_with(BigRational::zero);
        *slot += a * c;
        if slot.is_zero() {
            acc.remove(e);
        }
    }
}

fn poly_mul(p: &RatPoly, q: &RatPoly) -> RatPoly {
    let mut out = RatPoly::new();
    for (e, a) in p {
        for (f, b) in q {
            let g: Vec<u32> = e.iter().zip(f).map(|(x, y)| x + y).collect();
            let single: RatPoly = [(g, a * b)].into_iter().collect();
            poly_add_scaled(&mut out, &single, &BigRational::one());
        }
    }
    out
}

fn poly_const(m: usize, c: BigRational) -> RatPoly {
    let mut p = RatPoly::new();
    if !c.is_zero() {
        p.insert(vec![0; m], c);
    }
    p
}

fn power_sum(m: usize, k: u32) -> RatPoly {
    (0..m)
        .map(|i| {
            let mut e = vec![0; m];
            e[i] = k;
            (e, BigRational::one())
        })
        .collect()
}

fn elementary(m: usize, n: usize) -> RatPoly {
    let mut p = RatPoly::new();
    if n > m {
        return p;
    }
    for_each_increasing(m, n, &mut |idx| {
        let mut e = vec![0; m];
        for &i in idx {
            e[i - 1] = 1;
        }
        p.insert(e, BigRational::one());
    });
    p
}

/// `exp(-Σ_{k>=1} (-1)^k t^k p_k / k) = Σ_n e_n t^n` in `m` variables, modulo `t^{order+1}`.
pub fn waring_check(m: usize, order: usize) -> bool {
    // f_k: coefficient of t^k inside the exponential.
    let f: Vec<RatPoly> = (0..=order)
        .map(|k| {
            if k == 0 {
                return RatPoly::new();
            }
            let c = BigRational::new(
                if k % 2 == 1 {
                    BigInt::one()
                } else {
                    -BigInt::one()
                },
                BigInt::from(k),
            );
            let mut p = RatPoly::new();
            poly_add_scaled(&mut p, &power_sum(m, k as u32), &c);
            p
        })
        .collect();

    // E = exp(f) with E_0 = 1 and n E_n = Σ_{k=1}^n k f_k E_{n-k}.
    let mut e: Vec<RatPoly> = vec![poly_const(m, BigRational::one())];
    for n in 1..=order {
        let mut acc = RatPoly::new();
        for k in 1..=n {
            let c = BigRational::new(BigInt::from(k), BigInt::from(n));
            poly_add_scaled(&mut acc, &poly_mul(&f[k], &e[n - k]), &c);
        }
        e.push(acc);
    }
    (0..=order).all(|n| e[n] == elementary(m, n))
}
