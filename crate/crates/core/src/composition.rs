//! B-compositions, weak compositions and the orders on them.
//!
//! A [`Composition`] is a finite sequence of nonzero monoid elements. Over
//! [`NTilde`] these are in bijection with weak compositions via entrywise
//! `theta` (`e -> 0`). Classical (ℕ-)compositions are the `NTilde`
//! compositions without `e` entries.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::monoid::{ExponentMonoid, NTilde};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Composition<B = NTilde> {
    entries: Vec<B>,
}

/// Canonical term order: longer first, then lexicographic by entry order.
impl<B: ExponentMonoid> Ord for Composition<B> {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .entries
            .len()
            .cmp(&self.entries.len())
            .then_with(|| self.entries.cmp(&other.entries))
    }
}

impl<B: ExponentMonoid> PartialOrd for Composition<B> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<B: ExponentMonoid> Default for Composition<B> {
    fn default() -> Self {
        Self::empty()
    }
}

impl<B: ExponentMonoid> Composition<B> {
    pub fn new(entries: Vec<B>) -> Result<Self> {
        if let Some(index) = entries.iter().position(B::is_zero) {
            return Err(Error::ZeroEntry { index });
        }
        Ok(Self { entries })
    }

    pub(crate) fn from_vec_unchecked(entries: Vec<B>) -> Self {
        debug_assert!(entries.iter().all(|e| !e.is_zero()));
        Self { entries }
    }

    pub fn empty() -> Self {
        Self {
            entries: Vec::new(),
        }
    }

    pub fn entries(&self) -> &[B] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<B> {
        self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of the entries; the empty composition has weight zero.
    pub fn weight(&self) -> B {
        self.entries.iter().fold(B::zero(), |acc, e| acc.add(e))
    }

    pub fn reversal(&self) -> Self {
        Self {
            entries: self.entries.iter().rev().cloned().collect(),
        }
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut entries = Vec::with_capacity(self.len() + other.len());
        entries.extend_from_slice(&self.entries);
        entries.extend_from_slice(&other.entries);
        Self { entries }
    }

    /// `(prefix, suffix)` with `prefix.len() == at`.
    pub fn split_at(&self, at: usize) -> (Self, Self) {
        let (a, b) = self.entries.split_at(at);
        (
            Self {
                entries: a.to_vec(),
            },
            Self {
                entries: b.to_vec(),
            },
        )
    }

    /// `(a, self)`.
    pub fn prepend(&self, a: B) -> Self {
        debug_assert!(!a.is_zero());
        let mut entries = Vec::with_capacity(self.len() + 1);
        entries.push(a);
        entries.extend_from_slice(&self.entries);
        Self { entries }
    }

    /// `J∘α`: sums consecutive blocks of entries with block sizes `j`.
    pub fn coarsen(&self, j: &[usize]) -> Result<Self> {
        if j.contains(&0) {
            return Err(Error::CoarseningZeroPart);
        }
        let total: usize = j.iter().sum();
        if total != self.len() {
            return Err(Error::CoarseningLength {
                expected: self.len(),
                got: total,
            });
        }
        let mut entries = Vec::with_capacity(j.len());
        let mut rest = self.entries.as_slice();
        for &size in j {
            let (block, tail) = rest.split_at(size);
            entries.push(block.iter().fold(B::zero(), |acc, e| acc.add(e)));
            rest = tail;
        }
        Ok(Self { entries })
    }
}

/// All ℕ-compositions of `n` (as part sizes), one per subset of `[n-1]`.
pub fn compositions_of(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    assert!(n <= 40, "2^{} compositions of {n} is too many", n - 1);
    (0u64..1 << (n - 1))
        .map(|mask| {
            let mut parts = Vec::new();
            let mut current = 1;
            for bit in 0..n - 1 {
                if mask & (1 << bit) != 0 {
                    parts.push(current);
                    current = 1;
                } else {
                    current += 1;
                }
            }
            parts.push(current);
            parts
        })
        .collect()
}

/// A finite sequence of nonnegative integers.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct WeakComposition(pub Vec<BigUint>);

impl WeakComposition {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Longer first, then lexicographic.
impl Ord for WeakComposition {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .0
            .len()
            .cmp(&self.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for WeakComposition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Vec<u64>> for WeakComposition {
    fn from(v: Vec<u64>) -> Self {
        WeakComposition(v.into_iter().map(BigUint::from).collect())
    }
}

impl fmt::Display for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, n) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{n}")?;
        }
        f.write_str("]")
    }
}

/// `(e^{i1}, s1, e^{i2}, s2, ..., e^{ik}, sk, e^{i(k+1)})` with every `s` a single positive entry.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EpsEntryDecomposition {
    pub leading_runs: Vec<usize>,
    pub positives: Vec<BigUint>,
}

/// `(e^{i1}, α1, ..., e^{ik}, αk, e^{i(k+1)})` with the `αl` maximal runs of positive entries.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EpsBlockDecomposition {
    pub runs: Vec<usize>,
    pub blocks: Vec<Vec<BigUint>>,
}

impl EpsEntryDecomposition {
    pub fn reassemble(&self) -> Composition {
        let mut entries = Vec::new();
        for (i, run) in self.leading_runs.iter().enumerate() {
            entries.extend(std::iter::repeat_n(NTilde::Eps, *run));
            if let Some(s) = self.positives.get(i) {
                entries.push(NTilde::Pos(s.clone()));
            }
        }
        Composition::from_vec_unchecked(entries)
    }
}

impl EpsBlockDecomposition {
    pub fn reassemble(&self) -> Composition {
        let mut entries = Vec::new();
        for (i, run) in self.runs.iter().enumerate() {
            entries.extend(std::iter::repeat_n(NTilde::Eps, *run));
            if let Some(block) = self.blocks.get(i) {
                entries.extend(block.iter().cloned().map(NTilde::Pos));
            }
        }
        Composition::from_vec_unchecked(entries)
    }
}

impl Composition<NTilde> {
    /// Parses a literal such as `(e,2,e^3)`; see [`crate::literal`].
    pub fn parse(s: &str) -> Result<Self> {
        s.parse()
    }

    pub fn eps_count(&self) -> usize {
        self.entries.iter().filter(|e| e.is_eps()).count()
    }

    pub fn is_epsilon_free(&self) -> bool {
        !self.entries.iter().any(NTilde::is_eps)
    }

    pub fn starts_with_eps(&self) -> bool {
        self.entries.first().is_some_and(NTilde::is_eps)
    }

    /// The ℕ-composition obtained by dropping every `e`.
    pub fn bar(&self) -> Self {
        Self {
            entries: self
                .entries
                .iter()
                .filter(|e| !e.is_eps())
                .cloned()
                .collect(),
        }
    }

    pub fn theta_seq(&self) -> WeakComposition {
        WeakComposition(
            self.entries
                .iter()
                .map(|e| e.theta().expect("composition entries are nonzero"))
                .collect(),
        )
    }

    pub fn from_weak(w: &WeakComposition) -> Self {
        Self {
            entries: w.0.iter().map(NTilde::theta_inv).collect(),
        }
    }

    fn positive_entries(&self) -> Result<Vec<&BigUint>> {
        self.entries
            .iter()
            .map(|e| e.positive().ok_or(Error::EpsilonEntry("the descent set")))
            .collect()
    }

    /// Proper partial sums `{α1, α1+α2, ..., α1+...+α(k-1)}`.
    pub fn descent_set(&self) -> Result<BTreeSet<BigUint>> {
        let parts = self.positive_entries()?;
        let mut sums = BTreeSet::new();
        let mut acc = BigUint::ZERO;
        for part in parts.iter().take(parts.len().saturating_sub(1)) {
            acc += *part;
            sums.insert(acc.clone());
        }
        Ok(sums)
    }

    pub fn eps_entry_decomposition(&self) -> EpsEntryDecomposition {
        let mut leading_runs = vec![0];
        let mut positives = Vec::new();
        for e in &self.entries {
            match e {
                NTilde::Eps => *leading_runs.last_mut().unwrap() += 1,
                NTilde::Pos(n) => {
                    positives.push(n.clone());
                    leading_runs.push(0);
                }
                NTilde::Zero => unreachable!("composition entries are nonzero"),
            }
        }
        EpsEntryDecomposition {
            leading_runs,
            positives,
        }
    }

    pub fn eps_block_decomposition(&self) -> EpsBlockDecomposition {
        let mut runs = vec![0];
        let mut blocks: Vec<Vec<BigUint>> = Vec::new();
        let mut in_block = false;
        for e in &self.entries {
            match e {
                NTilde::Eps => {
                    in_block = false;
                    *runs.last_mut().unwrap() += 1;
                }
                NTilde::Pos(n) => {
                    if in_block {
                        blocks.last_mut().unwrap().push(n.clone());
                    } else {
                        blocks.push(vec![n.clone()]);
                        runs.push(0);
                        in_block = true;
                    }
                }
                NTilde::Zero => unreachable!("composition entries are nonzero"),
            }
        }
        EpsBlockDecomposition { runs, blocks }
    }

    /// Strictness positions `{a1, ..., ak}` of the fundamental function, with
    /// `aj = i1 + s1 + ... + ij + sj`: each `e` occupies one slot and each
    /// positive `s` occupies `s` slots.
    pub fn set_alpha_wc(&self) -> BTreeSet<BigUint> {
        let mut positions = BTreeSet::new();
        let mut acc = BigUint::ZERO;
        for e in &self.entries {
            match e {
                NTilde::Eps => acc += 1u32,
                NTilde::Pos(n) => {
                    acc += n;
                    positions.insert(acc.clone());
                }
                NTilde::Zero => unreachable!("composition entries are nonzero"),
            }
        }
        positions
    }
}

/// `α ⪯ β` on ℕ-compositions of equal weight: `set(β) ⊆ set(α)`.
///
/// Pairs containing `e`, or of different weight, are incomparable.
pub fn refines_n(alpha: &Composition, beta: &Composition) -> bool {
    if alpha.weight() != beta.weight() {
        return false;
    }
    match (alpha.descent_set(), beta.descent_set()) {
        (Ok(a), Ok(b)) => b.is_subset(&a),
        _ => false,
    }
}

fn block_refines(fine: &[BigUint], coarse: &[BigUint]) -> bool {
    let partial = |parts: &[BigUint]| -> BTreeSet<BigUint> {
        let mut acc = BigUint::ZERO;
        parts[..parts.len().saturating_sub(1)]
            .iter()
            .map(|p| {
                acc += p;
                acc.clone()
            })
            .collect()
    };
    partial(coarse).is_subset(&partial(fine))
}

/// Decompositions of a smaller and a larger composition against the larger
/// one's maximal block structure.
#[derive(Debug)]
pub(crate) struct Alignment {
    pub small_runs: Vec<usize>,
    pub big_runs: Vec<usize>,
}

/// Aligns `small` to the maximal block decomposition of `big`, returning the
/// matched runs when `small ⪯ big`.
///
/// `small`'s positive entries are cut into consecutive groups with the block
/// weights of `big`. Interior `e` runs of `small` are then forced, since an
/// `e` cannot sit inside a block.
pub(crate) fn align(small: &Composition, big: &Composition) -> Option<Alignment> {
    let big_dec = big.eps_block_decomposition();
    let targets: Vec<BigUint> = big_dec
        .blocks
        .iter()
        .map(|b| b.iter().sum::<BigUint>())
        .collect();
    let k = targets.len();

    let mut small_runs = vec![0usize; k + 1];
    let mut small_blocks: Vec<Vec<BigUint>> = vec![Vec::new(); k];
    let mut block = 0;
    let mut acc = BigUint::ZERO;
    for e in small.entries() {
        match e {
            NTilde::Eps => {
                if !Zero::is_zero(&acc) {
                    return None;
                }
                small_runs[block] += 1;
            }
            NTilde::Pos(n) => {
                if block == k {
                    return None;
                }
                acc += n;
                small_blocks[block].push(n.clone());
                match acc.cmp(&targets[block]) {
                    Ordering::Less => {}
                    Ordering::Equal => {
                        block += 1;
                        acc = BigUint::ZERO;
                    }
                    Ordering::Greater => return None,
                }
            }
            NTilde::Zero => unreachable!("composition entries are nonzero"),
        }
    }
    if block != k {
        return None;
    }

    let runs_ok = small_runs.iter().zip(&big_dec.runs).all(|(i, j)| i <= j);
    let trailing_ok = (small_runs[k] == 0) == (big_dec.runs[k] == 0);
    let blocks_ok = small_blocks
        .iter()
        .zip(&big_dec.blocks)
        .all(|(s, b)| block_refines(s, b));
    (runs_ok && trailing_ok && blocks_ok).then_some(Alignment {
        small_runs,
        big_runs: big_dec.runs,
    })
}

/// The refinement order `⪯` extended blockwise to `Ñ`-compositions.
pub fn precedes_wc(alpha: &Composition, beta: &Composition) -> bool {
    align(alpha, beta).is_some()
}

/// Every `Ñ`-composition of length at most `max_len` whose positive entries are
/// at most `max_entry`, shortest first and lexicographic within a length.
pub fn enumerate_compositions(max_len: usize, max_entry: u64) -> Vec<Composition> {
    let mut alphabet = vec![NTilde::Eps];
    alphabet.extend((1..=max_entry).map(NTilde::from));

    let mut out = vec![Composition::empty()];
    let mut layer = vec![Vec::<NTilde>::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|prefix| {
                alphabet.iter().map(move |a| {
                    let mut next = prefix.clone();
                    next.push(a.clone());
                    next
                })
            })
            .collect();
        out.extend(layer.iter().cloned().map(Composition::from_vec_unchecked));
    }
    out
}

impl fmt::Display for Composition<NTilde> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}
