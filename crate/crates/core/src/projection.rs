//! The projection `φ` from `WCQSym` onto `QSym` and its kernel.
//!
//! `QSym` is the span of the `ε`-free compositions inside `WCQSym`, so `φ`
//! maps monomial sums to monomial sums.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use crate::composition::{enumerate_compositions, Composition};
use crate::lincomb::{exact_rank, sign, LinComb};

/// `M_α ↦ 0` when `α` starts with `e`, otherwise `(-1)^{ℓ_e(α)} M_ᾱ`.
pub fn phi(u: &LinComb<Composition>) -> LinComb<Composition> {
    let mut out = LinComb::zero();
    for (alpha, c) in u.iter() {
        if alpha.starts_with_eps() {
            continue;
        }
        out.add_term(alpha.bar(), sign(alpha.eps_count() % 2 == 1) * c);
    }
    out
}

/// The kernel basis elements indexed by compositions inside the bounds:
/// `M_α` for `α` starting with `e`, and `M_α + (-1)^{ℓ_e(α)+1} M_ᾱ` for the
/// remaining compositions that contain an `e`.
pub fn kernel_basis(max_len: usize, max_entry: u64) -> Vec<LinComb<Composition>> {
    enumerate_compositions(max_len, max_entry)
        .into_iter()
        .filter(|alpha| !alpha.is_epsilon_free())
        .map(|alpha| {
            if alpha.starts_with_eps() {
                LinComb::basis(alpha)
            } else {
                let bar = alpha.bar();
                let s = sign(alpha.eps_count() % 2 == 0);
                let mut v = LinComb::basis(alpha);
                v.add_term(bar, s);
                v
            }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelReport {
    pub max_len: usize,
    pub max_entry: u64,
    /// Number of monomials `M_α` inside the bounds.
    pub span_dim: usize,
    /// Rank of `φ` on that span.
    pub rank: usize,
    pub kernel_dim: usize,
    pub basis_count: usize,
    /// Rank of the kernel basis elements as vectors in the span.
    pub basis_rank: usize,
    pub all_annihilated: bool,
}

impl KernelReport {
    pub fn passed(&self) -> bool {
        self.all_annihilated
            && self.kernel_dim == self.basis_count
            && self.basis_rank == self.basis_count
    }
}

fn coordinate_rows(
    vectors: &[LinComb<Composition>],
    index: &BTreeMap<Composition, usize>,
) -> Vec<Vec<BigRational>> {
    vectors
        .iter()
        .map(|v| {
            let mut row = vec![BigRational::zero(); index.len()];
            for (k, c) in v.iter() {
                row[index[k]] = BigRational::from_integer(c.clone());
            }
            row
        })
        .collect()
}

/// Checks that the kernel basis spans `ker φ` on the span of `M_α` with `ℓ(α) <= max_len` and
/// positive entries `<= max_entry`.
///
/// The kernel basis is counted, tested for linear independence and for
/// annihilation by `φ`, and its size compared with `span_dim - rank(φ)`.
pub fn verify_kernel_truncation(max_len: usize, max_entry: u64) -> KernelReport {
    let span = enumerate_compositions(max_len, max_entry);
    let index: BTreeMap<Composition, usize> = span
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, a)| (a, i))
        .collect();

    // φ's image lies in the ε-free part of the same span.
    let images: Vec<LinComb<Composition>> = span
        .iter()
        .map(|a| phi(&LinComb::basis(a.clone())))
        .collect();
    let rank = exact_rank(&coordinate_rows(&images, &index));

    let basis = kernel_basis(max_len, max_entry);
    let basis_rank = exact_rank(&coordinate_rows(&basis, &index));
    let all_annihilated = basis.iter().all(|v| phi(v).is_zero());

    KernelReport {
        max_len,
        max_entry,
        span_dim: span.len(),
        rank,
        kernel_dim: span.len() - rank,
        basis_count: basis.len(),
        basis_rank,
        all_annihilated,
    }
}

impl std::fmt::Display for KernelReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(
            f,
            "bounds: max_len={} max_entry={}",
            self.max_len, self.max_entry
        )?;
        writeln!(f, "span_dim: {}", self.span_dim)?;
        writeln!(f, "rank: {}", self.rank)?;
        writeln!(f, "kernel_dim: {}", self.kernel_dim)?;
        writeln!(f, "basis_count: {}", self.basis_count)?;
        writeln!(f, "basis_rank: {}", self.basis_rank)?;
        writeln!(f, "all_annihilated: {}", self.all_annihilated)?;
        write!(f, "result: {}", if self.passed() { "pass" } else { "FAIL" })
    }
}

/// True when every key is `e`-free, i.e. the element lies in `QSym`.
pub fn is_qsym(u: &LinComb<Composition>) -> bool {
    u.keys().all(Composition::is_epsilon_free)
}
