//! `Ш(x)`, the free commutative unitary Rota-Baxter algebra on one generator.
//!
//! Basis elements are pure tensors `x^{a0} ⊗ x^{a1} ⊗ ... ⊗ x^{ak}`. The head
//! `a0` multiplies like a polynomial exponent; the tail is a weak composition
//! and multiplies by the mixable shuffle, computed by moving to
//! `Ñ`-compositions through `θ^{-1}` and back.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_traits::{ToPrimitive, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::composition::{compositions_of, Composition, WeakComposition};
use crate::error::{Error, Result};
use crate::hopf::{self, Tensor2, MAX_ANTIPODE_LEN};
use crate::lincomb::{bilinear_extend, sign, LinComb};
use crate::monoid::NTilde;
use crate::quasi_shuffle::qshuffle;

/// `x^{head} ⊗ x^{tail_1} ⊗ ... ⊗ x^{tail_k}`; head `0` with empty tail is `1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct PureTensor {
    pub head: BigUint,
    pub tail: WeakComposition,
}

/// Longer tails first, then by head, then by tail entries.
impl Ord for PureTensor {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .tail
            .len()
            .cmp(&self.tail.len())
            .then_with(|| self.head.cmp(&other.head))
            .then_with(|| self.tail.cmp(&other.tail))
    }
}

impl PartialOrd for PureTensor {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PureTensor {
    pub fn new(head: impl Into<BigUint>, tail: WeakComposition) -> Self {
        Self {
            head: head.into(),
            tail,
        }
    }

    pub fn unit() -> Self {
        Self::default()
    }

    /// `x^a` with empty tail.
    pub fn power(a: u64) -> Self {
        Self::new(a, WeakComposition::default())
    }

    pub fn is_unit(&self) -> bool {
        self.head.is_zero() && self.tail.is_empty()
    }
}

impl fmt::Display for PureTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return f.write_str("1");
        }
        write!(f, "x^{}", self.head)?;
        for w in &self.tail.0 {
            write!(f, "|{w}")?;
        }
        Ok(())
    }
}

pub type ShaElem = LinComb<PureTensor>;

pub fn format_sha(u: &ShaElem) -> String {
    u.format_with(ToString::to_string)
}

pub fn format_sha_tensor2(t: &Tensor2<PureTensor>) -> String {
    t.format_with(|(l, r)| format!("{l} ⊗ {r}"))
}

/// The mixable shuffle of two weak compositions at weight `lambda`.
pub fn mixable_shuffle(
    a: &WeakComposition,
    b: &WeakComposition,
    lambda: &BigInt,
) -> LinComb<WeakComposition> {
    qshuffle(
        &Composition::from_weak(a),
        &Composition::from_weak(b),
        lambda,
    )
    .map_keys(Composition::theta_seq)
}

fn diamond_basis(u: &PureTensor, v: &PureTensor, lambda: &BigInt) -> ShaElem {
    let head = &u.head + &v.head;
    if u.tail.is_empty() {
        return LinComb::basis(PureTensor::new(head, v.tail.clone()));
    }
    if v.tail.is_empty() {
        return LinComb::basis(PureTensor::new(head, u.tail.clone()));
    }
    mixable_shuffle(&u.tail, &v.tail, lambda).map_keys(|w| PureTensor::new(head.clone(), w.clone()))
}

/// The augmented mixable shuffle product of weight `lambda`.
pub fn diamond(u: &ShaElem, v: &ShaElem, lambda: &BigInt) -> ShaElem {
    bilinear_extend(u, v, |a, b| diamond_basis(a, b, lambda))
}

/// `x^{a0} ⊗ tail ↦ 1 ⊗ x^{a0} ⊗ tail`.
pub fn rb_operator(u: &ShaElem) -> ShaElem {
    u.map_keys(|t| {
        let mut tail = Vec::with_capacity(t.tail.len() + 1);
        tail.push(t.head.clone());
        tail.extend(t.tail.0.iter().cloned());
        PureTensor::new(0u32, WeakComposition(tail))
    })
}

/// Both sides of `P(u)P(v) = P(uP(v)) + P(P(u)v) + λP(uv)`.
pub fn rb_identity_sides(u: &ShaElem, v: &ShaElem, lambda: &BigInt) -> (ShaElem, ShaElem) {
    let pu = rb_operator(u);
    let pv = rb_operator(v);
    let lhs = diamond(&pu, &pv, lambda);
    let mut rhs = rb_operator(&diamond(u, &pv, lambda));
    rhs += &rb_operator(&diamond(&pu, v, lambda));
    rhs.add_scaled(&rb_operator(&diamond(u, v, lambda)), lambda);
    (lhs, rhs)
}

pub fn rb_identity_check(u: &ShaElem, v: &ShaElem, lambda: &BigInt) -> bool {
    let (lhs, rhs) = rb_identity_sides(u, v, lambda);
    lhs == rhs
}

/// `α ↦ θ(α)`, the tail realizing an `Ñ`-composition.
pub fn rho(alpha: &Composition) -> WeakComposition {
    alpha.theta_seq()
}

/// `M_α ↦ 1 ⊗ x^{⊗θ(α)}`.
pub fn psi(u: &LinComb<Composition>) -> ShaElem {
    u.map_keys(|alpha| PureTensor::new(0u32, rho(alpha)))
}

/// Inverse of [`psi`] on head-zero tensors; `None` if some head is nonzero.
pub fn psi_inverse(u: &ShaElem) -> Option<LinComb<Composition>> {
    u.keys()
        .all(|t| t.head.is_zero())
        .then(|| u.map_keys(|t| Composition::from_weak(&t.tail)))
}

/// The tensor `x^{θ(a0)} ⊗ x^{⊗θ(α)}`.
pub fn bar_realize(a0: &NTilde, alpha: &Composition) -> Result<PureTensor> {
    Ok(PureTensor::new(a0.theta()?, rho(alpha)))
}

fn head_usize(t: &PureTensor) -> Result<usize> {
    t.head
        .to_usize()
        .filter(|&a| a <= 1 << 16)
        .ok_or_else(|| Error::TooLarge(format!("the head exponent {}", t.head)))
}

/// `Δ(x^{a} ⊗ x^{⊗α}) = Σ_i Σ_p C(a,p) (x^p ⊗ α_1..α_i) ⊗ (x^{a-p} ⊗ α_{i+1}..α_k)`.
pub fn sha_coproduct_basis(t: &PureTensor) -> Result<Tensor2<PureTensor>> {
    let a = head_usize(t)?;
    let mut out = LinComb::zero();
    for i in 0..=t.tail.len() {
        let (front, back) = t.tail.0.split_at(i);
        for p in 0..=a {
            let left = PureTensor::new(p as u64, WeakComposition(front.to_vec()));
            let right = PureTensor::new((a - p) as u64, WeakComposition(back.to_vec()));
            out.add_term(
                (left, right),
                BigInt::from(binomial(BigUint::from(a), BigUint::from(p))),
            );
        }
    }
    Ok(out)
}

pub fn sha_coproduct(u: &ShaElem) -> Result<Tensor2<PureTensor>> {
    let mut out = LinComb::zero();
    for (t, c) in u.iter() {
        out.add_scaled(&sha_coproduct_basis(t)?, c);
    }
    Ok(out)
}

/// `S(x^a ⊗ x^{⊗α}) = (-1)^{a+k} x^a ⊗ Σ_{J ⊨ k} x^{⊗ J∘α^r}`.
pub fn sha_antipode_basis(t: &PureTensor) -> Result<ShaElem> {
    let k = t.tail.len();
    if k > MAX_ANTIPODE_LEN {
        return Err(Error::TooLarge(format!(
            "the antipode of a length-{k} tail"
        )));
    }
    let negative = (t.head.bit(0) as usize + k) % 2 == 1;
    let s = sign(negative);
    if k == 0 {
        return Ok(LinComb::term(t.clone(), s));
    }
    let reversed: Vec<BigUint> = t.tail.0.iter().rev().cloned().collect();
    let mut out = LinComb::zero();
    for j in compositions_of(k) {
        let mut rest = reversed.as_slice();
        let mut coarse = Vec::with_capacity(j.len());
        for size in j {
            let (block, tail) = rest.split_at(size);
            coarse.push(block.iter().sum::<BigUint>());
            rest = tail;
        }
        out.add_term(
            PureTensor::new(t.head.clone(), WeakComposition(coarse)),
            s.clone(),
        );
    }
    Ok(out)
}

/// The same antipode assembled from its factors: `S_{k[x]}(x^a) = (-x)^a` on
/// the head and the `WCQSym` antipode transported through `ρ` on the tail.
pub fn sha_antipode_basis_from_factors(t: &PureTensor) -> Result<ShaElem> {
    let head_sign = sign(t.head.bit(0));
    let tail = hopf::antipode_basis(&Composition::from_weak(&t.tail))?;
    Ok(tail
        .map_keys(|alpha| PureTensor::new(t.head.clone(), rho(alpha)))
        .scale(&head_sign))
}

pub fn sha_antipode(u: &ShaElem) -> Result<ShaElem> {
    let mut out = LinComb::zero();
    for (t, c) in u.iter() {
        out.add_scaled(&sha_antipode_basis(t)?, c);
    }
    Ok(out)
}

/// The coefficient of the unit.
pub fn sha_counit(u: &ShaElem) -> BigInt {
    u.coeff_of(&PureTensor::unit())
}

/// Seed used by randomized checks unless another is given.
pub const DEFAULT_SEED: u64 = 1729;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TensorBounds {
    pub max_head: u64,
    pub max_len: usize,
    pub max_entry: u64,
}

pub fn random_pure_tensor(rng: &mut impl Rng, bounds: TensorBounds) -> PureTensor {
    let len = rng.gen_range(0..=bounds.max_len);
    let tail = (0..len)
        .map(|_| BigUint::from(rng.gen_range(0..=bounds.max_entry)))
        .collect();
    PureTensor::new(rng.gen_range(0..=bounds.max_head), WeakComposition(tail))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RbCheckReport {
    pub trials: usize,
    pub seed: u64,
    /// Pairs on which the identity failed.
    pub failures: Vec<(PureTensor, PureTensor)>,
}

impl RbCheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks the Rota-Baxter identity on `trials` seeded random pairs of pure tensors.
pub fn rb_check_random(
    trials: usize,
    seed: u64,
    bounds: TensorBounds,
    lambda: &BigInt,
) -> RbCheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for _ in 0..trials {
        let u = random_pure_tensor(&mut rng, bounds);
        let v = random_pure_tensor(&mut rng, bounds);
        if !rb_identity_check(
            &LinComb::basis(u.clone()),
            &LinComb::basis(v.clone()),
            lambda,
        ) {
            failures.push((u, v));
        }
    }
    RbCheckReport {
        trials,
        seed,
        failures,
    }
}

#[cfg(test)]
mod tests {
    use num_traits::One;

    use super::*;

    fn t(s: &str) -> PureTensor {
        s.parse().unwrap()
    }

    fn sh(s: &str) -> ShaElem {
        s.parse().unwrap()
    }

    fn one() -> BigInt {
        BigInt::one()
    }

    #[test]
    fn display_round_trips() {
        for s in ["1", "x^2", "x^0|1", "x^2|0|3", "x^1|0"] {
            assert_eq!(t(s).to_string(), s);
        }
        assert_eq!(
            format_sha(&sh("x^0|1|1 + x^0|1|1 + x^0|2")),
            "2*x^0|1|1 + x^0|2"
        );
    }

    #[test]
    fn diamond_examples() {
        assert_eq!(diamond(&sh("x^1|1"), &sh("x^2"), &one()), sh("x^3|1"));
        let px = rb_operator(&sh("x^1"));
        assert_eq!(diamond(&px, &px, &one()), sh("2*x^0|1|1 + x^0|2"));
        let u = sh("x^1|2|0 - 3*x^0|1");
        assert_eq!(diamond(&sh("1"), &u, &one()), u);
    }

    #[test]
    fn operator_examples() {
        assert_eq!(rb_operator(&sh("x^2")), sh("x^0|2"));
        assert_eq!(rb_operator(&sh("1")), sh("x^0|0"));
        assert_eq!(rb_operator(&sh("x^0|1")), sh("x^0|0|1"));
    }

    #[test]
    fn rb_identity_examples() {
        let x = sh("x^1");
        let (lhs, rhs) = rb_identity_sides(&x, &x, &one());
        assert_eq!(lhs, sh("2*x^0|1|1 + x^0|2"));
        assert_eq!(lhs, rhs);
        assert!(rb_identity_check(&sh("1"), &sh("1"), &one()));
        for lambda in [-1i64, 0, 2] {
            assert!(rb_identity_check(
                &sh("x^1|2"),
                &sh("x^0|1|0"),
                &lambda.into()
            ));
        }
    }

    #[test]
    fn seeded_random_check() {
        let bounds = TensorBounds {
            max_head: 3,
            max_len: 2,
            max_entry: 3,
        };
        let r = rb_check_random(50, 7, bounds, &one());
        assert!(r.passed(), "{:?}", r.failures);
        assert_eq!(r, rb_check_random(50, 7, bounds, &one()));
    }

    #[test]
    fn realizations() {
        let alpha: Composition = "(e,2,e)".parse().unwrap();
        assert_eq!(rho(&alpha), WeakComposition::from(vec![0, 2, 0]));
        assert_eq!(psi(&LinComb::basis(Composition::empty())), sh("1"));
        assert_eq!(
            bar_realize(&NTilde::Eps, &Composition::empty()).unwrap(),
            PureTensor::unit()
        );
        assert_eq!(bar_realize(&NTilde::Zero, &alpha), Err(Error::ThetaOfZero));
        let v = LinComb::basis(alpha);
        assert_eq!(psi_inverse(&psi(&v)), Some(v));
        assert_eq!(psi_inverse(&sh("x^1")), None);
    }

    #[test]
    fn coproduct_examples() {
        assert_eq!(
            sha_coproduct(&sh("x^1")).unwrap(),
            [((t("x^1"), t("1")), one()), ((t("1"), t("x^1")), one()),]
                .into_iter()
                .collect()
        );
        let d = sha_coproduct(&sh("x^1|2")).unwrap();
        let expected: Tensor2<PureTensor> = [
            ((t("1"), t("x^1|2")), one()),
            ((t("x^1"), t("x^0|2")), one()),
            ((t("x^0|2"), t("x^1")), one()),
            ((t("x^1|2"), t("1")), one()),
        ]
        .into_iter()
        .collect();
        assert_eq!(d, expected);
        assert_eq!(
            sha_coproduct(&sh("1")).unwrap(),
            LinComb::basis((t("1"), t("1")))
        );
        let d = sha_coproduct(&sh("x^2")).unwrap();
        assert_eq!(d.coeff_of(&(t("x^1"), t("x^1"))), BigInt::from(2));
    }

    #[test]
    fn antipode_examples() {
        assert_eq!(sha_antipode(&sh("x^1")).unwrap(), sh("-x^1"));
        assert_eq!(sha_antipode(&sh("x^0|0")).unwrap(), sh("-x^0|0"));
        assert_eq!(sha_antipode(&sh("1")).unwrap(), sh("1"));
        let alpha: Composition = "(e,1,e,2)".parse().unwrap();
        let m = LinComb::basis(alpha);
        assert_eq!(
            sha_antipode(&psi(&m)).unwrap(),
            psi(&hopf::antipode(&m).unwrap())
        );
    }

    #[test]
    fn antipode_closed_form_matches_factor_construction() {
        for head in 0..=3u64 {
            for tail in crate::composition::enumerate_compositions(4, 2) {
                let t = PureTensor::new(head, rho(&tail));
                assert_eq!(
                    sha_antipode_basis(&t).unwrap(),
                    sha_antipode_basis_from_factors(&t).unwrap(),
                    "{t}"
                );
            }
        }
    }

    #[test]
    fn counits() {
        assert_eq!(sha_counit(&sh("1")), one());
        assert_eq!(sha_counit(&sh("x^1")), BigInt::zero());
        assert_eq!(sha_counit(&sh("x^0|1")), BigInt::zero());
    }
}
