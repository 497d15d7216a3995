//! The Hopf algebra of (weak) composition quasi-symmetric functions in the
//! monomial basis `M` and the fundamental basis `F`.
//!
//! Product, coproduct, counit and antipode are generic over the exponent
//! monoid and act on `M`-basis sums. Everything involving `F` is specific to
//! `Ñ`.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_traits::{One, ToPrimitive, Zero};

use crate::composition::{align, compositions_of, Composition};
use crate::error::{Error, Result};
use crate::lincomb::{bilinear_extend, sign, LinComb};
use crate::monoid::{ExponentMonoid, NTilde};
use crate::quasi_shuffle::qshuffle_lin;

/// Longest composition whose antipode is expanded (`2^(len-1)` coarsenings).
pub const MAX_ANTIPODE_LEN: usize = 24;

/// Largest number of terms a basis change may enumerate.
pub const MAX_BASIS_CHANGE_TERMS: u64 = 1 << 22;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Basis {
    M,
    F,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::M => "M",
            Basis::F => "F",
        })
    }
}

/// A sum of ordered pairs, i.e. an element of the tensor square.
pub type Tensor2<K> = LinComb<(K, K)>;

pub fn product<B: ExponentMonoid>(
    u: &LinComb<Composition<B>>,
    v: &LinComb<Composition<B>>,
) -> LinComb<Composition<B>> {
    qshuffle_lin(u, v, &BigInt::one())
}

/// Deconcatenation: `Δ(M_α) = Σ_{α = β·γ} M_β ⊗ M_γ`.
pub fn coproduct<B: ExponentMonoid>(u: &LinComb<Composition<B>>) -> Tensor2<Composition<B>> {
    u.map_linear(|alpha| {
        (0..=alpha.len())
            .map(|i| (alpha.split_at(i), BigInt::one()))
            .collect()
    })
}

/// The coefficient of `M_∅`.
pub fn counit<B: ExponentMonoid>(u: &LinComb<Composition<B>>) -> BigInt {
    u.coeff_of(&Composition::empty())
}

/// Componentwise product on the tensor square.
pub fn tensor_product<B: ExponentMonoid>(
    x: &Tensor2<Composition<B>>,
    y: &Tensor2<Composition<B>>,
) -> Tensor2<Composition<B>> {
    bilinear_extend(x, y, |(a1, a2), (b1, b2)| {
        let left = product(&LinComb::basis(a1.clone()), &LinComb::basis(b1.clone()));
        let right = product(&LinComb::basis(a2.clone()), &LinComb::basis(b2.clone()));
        bilinear_extend(&left, &right, |l, r| LinComb::basis((l.clone(), r.clone())))
    })
}

/// `S(M_α) = (-1)^ℓ(α) Σ_{J ⊨ ℓ(α)} M_{J∘α^r}`, with one term per `J`.
pub fn antipode_basis<B: ExponentMonoid>(
    alpha: &Composition<B>,
) -> Result<LinComb<Composition<B>>> {
    if alpha.is_empty() {
        return Ok(LinComb::basis(Composition::empty()));
    }
    if alpha.len() > MAX_ANTIPODE_LEN {
        return Err(Error::TooLarge(format!(
            "the antipode of a length-{} composition",
            alpha.len()
        )));
    }
    let reversed = alpha.reversal();
    let s = sign(alpha.len() % 2 == 1);
    let mut out = LinComb::zero();
    for j in compositions_of(alpha.len()) {
        let coarse = reversed
            .coarsen(&j)
            .expect("J is a composition of the length");
        out.add_term(coarse, s.clone());
    }
    Ok(out)
}

pub fn antipode<B: ExponentMonoid>(u: &LinComb<Composition<B>>) -> Result<LinComb<Composition<B>>> {
    let mut out = LinComb::zero();
    for (alpha, c) in u.iter() {
        out.add_scaled(&antipode_basis(alpha)?, c);
    }
    Ok(out)
}

fn binom(n: usize, k: usize) -> BigInt {
    BigInt::from(binomial(BigUint::from(n), BigUint::from(k)))
}

/// The coefficient of `M_β` in `S(M_α)`, in closed form.
///
/// Write `α = (e^{i1}, s1, ..., e^{ik}, sk, e^{i(k+1)})` and
/// `β = (e^{j1}, t1, ..., e^{jp}, tp, e^{j(p+1)})`. The coefficient vanishes
/// unless `β̄ = L∘ᾱ^r` for a composition `L = (l1, ..., lp)` of `k`; then with
/// `b_t = l_t + ... + l_p + 1` and `b_{p+1} = 1` it is
///
/// `(-1)^ℓ(α) C(i_{b1}, j1) Π_{t=2..p} C(i_{bt} + 1, jt + 1) C(i_1, j_{p+1})`.
///
/// For `α = e^n` the only terms are `(-1)^n C(n-1, j-1) M_{e^j}`.
pub fn antipode_coefficient(alpha: &Composition, beta: &Composition) -> BigInt {
    if alpha.is_empty() {
        return if beta.is_empty() {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    let s = sign(alpha.len() % 2 == 1);
    let a = alpha.eps_entry_decomposition();
    let b = beta.eps_entry_decomposition();
    let k = a.positives.len();
    let p = b.positives.len();

    if k == 0 {
        if p != 0 || beta.is_empty() {
            return BigInt::zero();
        }
        return s * binom(alpha.len() - 1, beta.len() - 1);
    }

    let reversed: Vec<&BigUint> = a.positives.iter().rev().collect();
    let mut l = Vec::with_capacity(p);
    let mut next = 0;
    for target in &b.positives {
        let mut acc = BigUint::ZERO;
        let mut count = 0;
        while acc < *target && next < k {
            acc += reversed[next];
            next += 1;
            count += 1;
        }
        if acc != *target {
            return BigInt::zero();
        }
        l.push(count);
    }
    if next != k {
        return BigInt::zero();
    }

    // 1-based positions, as in the formula.
    let i = |x: usize| a.leading_runs[x - 1];
    let j = |x: usize| b.leading_runs[x - 1];
    let mut bt = vec![0usize; p + 2];
    bt[p + 1] = 1;
    for t in (1..=p).rev() {
        bt[t] = bt[t + 1] + l[t - 1];
    }

    let mut coeff = binom(i(bt[1]), j(1));
    for (t, &b) in bt.iter().enumerate().take(p + 1).skip(2) {
        coeff *= binom(i(b) + 1, j(t) + 1);
    }
    coeff *= binom(i(bt[p + 1]), j(p + 1));
    s * coeff
}

/// `c_{α,β}` in `F_α = Σ_{β ⪯ α} c_{α,β} M_β`; zero when `β ⪯ α` fails.
///
/// With the runs of `α` and `β` aligned to `α`'s maximal block form,
/// `c = C(i1,j1) ... C(ik,jk) C(i(k+1) - 1, j(k+1) - 1)` and `C(-1,-1) = 1`.
pub fn c_coefficient(alpha: &Composition, beta: &Composition) -> BigInt {
    let Some(al) = align(beta, alpha) else {
        return BigInt::zero();
    };
    let k = al.big_runs.len() - 1;
    let mut coeff = BigInt::one();
    for l in 0..k {
        coeff *= binom(al.big_runs[l], al.small_runs[l]);
    }
    if al.big_runs[k] > 0 {
        coeff *= binom(al.big_runs[k] - 1, al.small_runs[k] - 1);
    }
    coeff
}

/// One segment of the enumeration: alternative entry lists with weights.
type Choices = Vec<(Vec<NTilde>, BigInt)>;

fn eps_run(n: usize) -> Vec<NTilde> {
    vec![NTilde::Eps; n]
}

fn refinements(block: &[BigUint]) -> Result<Choices> {
    let mut out: Choices = vec![(Vec::new(), BigInt::one())];
    for part in block {
        let s = part
            .to_usize()
            .filter(|&s| s <= 40)
            .ok_or_else(|| Error::TooLarge(format!("refining the part {part}")))?;
        let pieces = compositions_of(s);
        out = out
            .iter()
            .flat_map(|(prefix, c)| {
                pieces.iter().map(move |piece| {
                    let mut entries = prefix.clone();
                    entries.extend(piece.iter().map(|&x| NTilde::from(x as u64)));
                    (entries, c.clone())
                })
            })
            .collect();
    }
    Ok(out)
}

/// Upper bound on the number of `β ⪯ α`.
fn refinement_count(alpha: &Composition) -> Option<u64> {
    let dec = alpha.eps_block_decomposition();
    let k = dec.blocks.len();
    let mut total: u64 = 1;
    for l in 0..k {
        total = total.checked_mul(dec.runs[l] as u64 + 1)?;
        for part in &dec.blocks[l] {
            let s = part.to_u32().filter(|&s| s <= 63)?;
            total = total.checked_mul(1u64 << (s - 1))?;
        }
    }
    total.checked_mul(dec.runs[k].max(1) as u64)
}

/// `Σ_{β ⪯ α} c_{α,β} (±1) β`, generated from `α`'s maximal block form.
fn refinement_sum(alpha: &Composition, alternating: bool) -> Result<LinComb<Composition>> {
    match refinement_count(alpha) {
        Some(n) if n <= MAX_BASIS_CHANGE_TERMS => {}
        _ => return Err(Error::TooLarge(format!("the basis change of {alpha}"))),
    }
    let dec = alpha.eps_block_decomposition();
    let k = dec.blocks.len();
    let mut segments: Vec<Choices> = Vec::with_capacity(2 * k + 1);
    for l in 0..k {
        let i = dec.runs[l];
        segments.push((0..=i).map(|j| (eps_run(j), binom(i, j))).collect());
        segments.push(refinements(&dec.blocks[l])?);
    }
    let last = dec.runs[k];
    segments.push(if last == 0 {
        vec![(Vec::new(), BigInt::one())]
    } else {
        (1..=last)
            .map(|j| (eps_run(j), binom(last - 1, j - 1)))
            .collect()
    });

    let mut partial: Choices = vec![(Vec::new(), BigInt::one())];
    for seg in &segments {
        partial = partial
            .iter()
            .flat_map(|(prefix, c)| {
                seg.iter().map(move |(piece, d)| {
                    let mut entries = prefix.clone();
                    entries.extend_from_slice(piece);
                    (entries, c * d)
                })
            })
            .collect();
    }
    Ok(partial
        .into_iter()
        .map(|(entries, c)| {
            let flip = alternating && (entries.len() + alpha.len()) % 2 == 1;
            (
                Composition::from_vec_unchecked(entries),
                if flip { -c } else { c },
            )
        })
        .collect())
}

/// `F_α` expanded in the monomial basis.
pub fn f_to_m_basis(alpha: &Composition) -> Result<LinComb<Composition>> {
    refinement_sum(alpha, false)
}

/// `M_α = Σ_{β ⪯ α} (-1)^{ℓ(β)-ℓ(α)} c_{α,β} F_β`.
pub fn m_to_f_basis(alpha: &Composition) -> Result<LinComb<Composition>> {
    refinement_sum(alpha, true)
}

/// Coefficients in `F` to coefficients in `M`.
pub fn f_to_m(u: &LinComb<Composition>) -> Result<LinComb<Composition>> {
    let mut out = LinComb::zero();
    for (alpha, c) in u.iter() {
        out.add_scaled(&f_to_m_basis(alpha)?, c);
    }
    Ok(out)
}

/// Coefficients in `M` to coefficients in `F`.
pub fn m_to_f(u: &LinComb<Composition>) -> Result<LinComb<Composition>> {
    let mut out = LinComb::zero();
    for (alpha, c) in u.iter() {
        out.add_scaled(&m_to_f_basis(alpha)?, c);
    }
    Ok(out)
}

/// An element of `WCQSym` tagged with the basis its coefficients refer to.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WQSymElem {
    pub basis: Basis,
    pub value: LinComb<Composition>,
}

impl WQSymElem {
    pub fn new(basis: Basis, value: LinComb<Composition>) -> Self {
        Self { basis, value }
    }

    pub fn m(alpha: Composition) -> Self {
        Self::new(Basis::M, LinComb::basis(alpha))
    }

    pub fn f(alpha: Composition) -> Self {
        Self::new(Basis::F, LinComb::basis(alpha))
    }

    pub fn one() -> Self {
        Self::m(Composition::empty())
    }

    pub fn to_basis(&self, basis: Basis) -> Result<Self> {
        let value = match (self.basis, basis) {
            (Basis::M, Basis::F) => m_to_f(&self.value)?,
            (Basis::F, Basis::M) => f_to_m(&self.value)?,
            _ => self.value.clone(),
        };
        Ok(Self::new(basis, value))
    }

    pub fn to_m(&self) -> Result<Self> {
        self.to_basis(Basis::M)
    }

    pub fn to_f(&self) -> Result<Self> {
        self.to_basis(Basis::F)
    }

    /// Fails unless the element is in `basis`.
    pub fn expect_basis(&self, basis: Basis) -> Result<&LinComb<Composition>> {
        if self.basis == basis {
            Ok(&self.value)
        } else {
            Err(Error::BasisMismatch {
                expected: basis,
                found: self.basis,
            })
        }
    }

    /// The product, expressed in `self`'s basis.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let value = product(&self.to_m()?.value, &other.to_m()?.value);
        Self::new(Basis::M, value).to_basis(self.basis)
    }

    pub fn antipode(&self) -> Result<Self> {
        Self::new(Basis::M, antipode(&self.to_m()?.value)?).to_basis(self.basis)
    }

    pub fn counit(&self) -> Result<BigInt> {
        Ok(match self.basis {
            Basis::M => counit(&self.value),
            // F_∅ = M_∅ and every other F_α has no M_∅ term.
            Basis::F => self.value.coeff_of(&Composition::empty()),
        })
    }

    /// The coproduct, with both tensor factors in `self`'s basis.
    pub fn coproduct(&self) -> Result<Tensor2<Composition>> {
        let delta = coproduct(&self.to_m()?.value);
        if self.basis == Basis::M {
            return Ok(delta);
        }
        let mut out = LinComb::zero();
        for ((l, r), c) in delta.iter() {
            let left = m_to_f_basis(l)?;
            let right = m_to_f_basis(r)?;
            out.add_scaled(
                &bilinear_extend(&left, &right, |a, b| LinComb::basis((a.clone(), b.clone()))),
                c,
            );
        }
        Ok(out)
    }
}

impl fmt::Display for WQSymElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.value.format_with(|k| format!("{}{k}", self.basis)))
    }
}

/// Renders a tensor-square element as `M(1) ⊗ M(e) + ...`.
pub fn format_tensor2(basis: Basis, t: &Tensor2<Composition>) -> String {
    t.format_with(|(l, r)| format!("{basis}{l} ⊗ {basis}{r}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::enumerate_compositions;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn m(s: &str) -> LinComb<Composition> {
        LinComb::basis(c(s))
    }

    fn lc(terms: &[(&str, i64)]) -> LinComb<Composition> {
        terms
            .iter()
            .map(|&(k, v)| (c(k), BigInt::from(v)))
            .collect()
    }

    fn example_antipode() -> LinComb<Composition> {
        lc(&[
            ("(2,e,1,e)", 1),
            ("(2,1,e)", 2),
            ("(2,e,1)", 1),
            ("(3,e)", 1),
            ("(2,1)", 2),
            ("(3)", 1),
        ])
    }

    #[test]
    fn products() {
        assert_eq!(
            product(&m("(1)"), &m("(2)")),
            lc(&[("(1,2)", 1), ("(2,1)", 1), ("(3)", 1)])
        );
        assert_eq!(
            product(&m("(e)"), &m("(e)")),
            lc(&[("(e,e)", 2), ("(e)", 1)])
        );
        assert_eq!(product(&m("()"), &m("(e,3)")), m("(e,3)"));
    }

    #[test]
    fn coproducts() {
        let d = coproduct(&m("(e,2)"));
        assert_eq!(d.len(), 3);
        assert_eq!(d.coeff_of(&(c("(e)"), c("(2)"))), BigInt::one());
        assert_eq!(d.coeff_of(&(c("()"), c("(e,2)"))), BigInt::one());
        assert_eq!(coproduct(&m("()")), LinComb::basis((c("()"), c("()"))));
        assert_eq!(coproduct(&m("(1,e,2)")).len(), 4);
    }

    #[test]
    fn counits() {
        assert_eq!(counit(&m("()")), BigInt::one());
        assert_eq!(counit(&m("(e)")), BigInt::zero());
        assert_eq!(counit(&lc(&[("()", 3), ("(2)", 5)])), BigInt::from(3));
    }

    #[test]
    fn antipode_examples() {
        assert_eq!(antipode(&m("(2)")).unwrap(), -&m("(2)"));
        assert_eq!(antipode(&m("(e,1,e,2)")).unwrap(), example_antipode());
        assert_eq!(
            antipode(&m("(e,e)")).unwrap(),
            lc(&[("(e)", 1), ("(e,e)", 1)])
        );
        assert_eq!(antipode(&m("()")).unwrap(), m("()"));
    }

    #[test]
    fn antipode_of_eps_powers() {
        for n in 1..=6usize {
            let alpha = Composition::from_vec_unchecked(vec![NTilde::Eps; n]);
            let expected: LinComb<Composition> = (0..n)
                .map(|i| {
                    (
                        Composition::from_vec_unchecked(vec![NTilde::Eps; i + 1]),
                        sign(n % 2 == 1) * binom(n - 1, i),
                    )
                })
                .collect();
            assert_eq!(antipode_basis(&alpha).unwrap(), expected, "n = {n}");
        }
    }

    #[test]
    fn closed_form_antipode_examples() {
        let a = c("(e,1,e,2)");
        assert_eq!(antipode_coefficient(&a, &c("(2,1,e)")), BigInt::from(2));
        assert_eq!(antipode_coefficient(&a, &c("(3)")), BigInt::one());
        assert_eq!(antipode_coefficient(&c("(2)"), &c("(1,1)")), BigInt::zero());
        for (beta, coeff) in example_antipode().iter() {
            assert_eq!(antipode_coefficient(&a, beta), *coeff, "{beta}");
        }
    }

    #[test]
    fn closed_form_matches_coarsening_sum() {
        let comps = enumerate_compositions(4, 2);
        for alpha in &comps {
            let s = antipode_basis(alpha).unwrap();
            for beta in &comps {
                assert_eq!(
                    antipode_coefficient(alpha, beta),
                    s.coeff_of(beta),
                    "alpha = {alpha}, beta = {beta}"
                );
            }
        }
    }

    fn worked_f_expansion() -> LinComb<Composition> {
        lc(&[
            ("(e,2,e^3)", 1),
            ("(e,2,e^2)", 2),
            ("(e,2,e)", 1),
            ("(e,1,1,e^3)", 1),
            ("(e,1,1,e^2)", 2),
            ("(e,1,1,e)", 1),
            ("(2,e^3)", 1),
            ("(2,e^2)", 2),
            ("(2,e)", 1),
            ("(1,1,e^3)", 1),
            ("(1,1,e^2)", 2),
            ("(1,1,e)", 1),
        ])
    }

    #[test]
    fn c_coefficients() {
        let a = c("(e,2,e^3)");
        assert_eq!(c_coefficient(&a, &c("(e,2,e^2)")), BigInt::from(2));
        assert_eq!(c_coefficient(&a, &c("(1,1,e)")), BigInt::one());
        assert_eq!(c_coefficient(&a, &c("(2)")), BigInt::zero());
        for alpha in enumerate_compositions(3, 2) {
            assert_eq!(c_coefficient(&alpha, &alpha), BigInt::one());
        }
    }

    #[test]
    fn worked_basis_changes() {
        let a = c("(e,2,e^3)");
        assert_eq!(f_to_m_basis(&a).unwrap(), worked_f_expansion());
        let signed: LinComb<Composition> = worked_f_expansion()
            .into_iter()
            .map(|(beta, k)| {
                let flip = (beta.len() + a.len()) % 2 == 1;
                (beta, if flip { -k } else { k })
            })
            .collect();
        assert_eq!(m_to_f_basis(&a).unwrap(), signed);
        assert_eq!(
            f_to_m_basis(&c("(2,1)")).unwrap(),
            lc(&[("(2,1)", 1), ("(1,1,1)", 1)])
        );
        assert_eq!(
            m_to_f_basis(&c("(2,1)")).unwrap(),
            lc(&[("(2,1)", 1), ("(1,1,1)", -1)])
        );
        assert_eq!(f_to_m_basis(&c("()")).unwrap(), m("()"));
        assert_eq!(m_to_f_basis(&c("()")).unwrap(), m("()"));
    }

    #[test]
    fn generated_refinements_agree_with_the_order() {
        let comps = enumerate_compositions(4, 2);
        for alpha in &comps {
            let expansion = f_to_m_basis(alpha).unwrap();
            for beta in &comps {
                assert_eq!(
                    expansion.coeff_of(beta),
                    c_coefficient(alpha, beta),
                    "{alpha} {beta}"
                );
            }
        }
    }

    #[test]
    fn basis_changes_round_trip() {
        for alpha in enumerate_compositions(4, 2) {
            let v = LinComb::basis(alpha.clone());
            assert_eq!(f_to_m(&m_to_f(&v).unwrap()).unwrap(), v, "{alpha}");
            assert_eq!(m_to_f(&f_to_m(&v).unwrap()).unwrap(), v, "{alpha}");
        }
    }

    #[test]
    fn oversized_inputs_are_refused() {
        let long = Composition::from_vec_unchecked(vec![NTilde::one(); MAX_ANTIPODE_LEN + 1]);
        assert!(matches!(antipode_basis(&long), Err(Error::TooLarge(_))));
        assert!(matches!(f_to_m_basis(&c("(64)")), Err(Error::TooLarge(_))));
    }

    #[test]
    fn tagged_elements() {
        let f = WQSymElem::f(c("(2,1)"));
        assert_eq!(f.to_string(), "F(2,1)");
        assert_eq!(f.to_m().unwrap().to_string(), "M(1,1,1) + M(2,1)");
        assert_eq!(
            WQSymElem::m(c("(e,1,e,2)")).antipode().unwrap().to_string(),
            "M(2,e,1,e) + M(2,e,1) + 2*M(2,1,e) + 2*M(2,1) + M(3,e) + M(3)"
        );
        let prod = WQSymElem::m(c("(1)")).mul(&WQSymElem::m(c("(2)"))).unwrap();
        assert_eq!(prod.to_string(), "M(1,2) + M(2,1) + M(3)");
        assert_eq!(WQSymElem::one().counit().unwrap(), BigInt::one());
        assert!(matches!(
            f.expect_basis(Basis::M),
            Err(Error::BasisMismatch { .. })
        ));
    }

    #[test]
    fn f_basis_operations_agree_with_m_basis() {
        for alpha in enumerate_compositions(3, 2) {
            let f = WQSymElem::f(alpha.clone());
            let as_m = f.to_m().unwrap();
            assert_eq!(
                f.antipode().unwrap().to_m().unwrap(),
                as_m.antipode().unwrap()
            );
            let sq = f.mul(&f).unwrap();
            assert_eq!(sq.basis, Basis::F);
            assert_eq!(sq.to_m().unwrap(), as_m.mul(&as_m).unwrap());
            assert_eq!(f.counit().unwrap(), as_m.counit().unwrap());
        }
    }
}
