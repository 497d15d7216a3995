//! The weight-λ quasi-shuffle (mixable shuffle) product on compositions.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::composition::Composition;
use crate::lincomb::{bilinear_extend, LinComb};
use crate::monoid::ExponentMonoid;

/// `α ∗_λ β`, defined by `∅ ∗ α = α ∗ ∅ = α` and
///
/// `(a,α) ∗ (b,β) = (a, α ∗ (b,β)) + (b, (a,α) ∗ β) + λ (a+b, α ∗ β)`.
///
/// Computed bottom-up over suffix pairs, so each suffix product is built once.
pub fn qshuffle<B: ExponentMonoid>(
    alpha: &Composition<B>,
    beta: &Composition<B>,
    lambda: &BigInt,
) -> LinComb<Composition<B>> {
    let a = alpha.entries();
    let b = beta.entries();
    let (la, lb) = (a.len(), b.len());

    // table[i][j] = a[i..] ∗ b[j..]
    let mut table: Vec<Vec<LinComb<Composition<B>>>> = vec![vec![LinComb::zero(); lb + 1]; la + 1];
    for i in (0..=la).rev() {
        for j in (0..=lb).rev() {
            let cell = if i == la {
                LinComb::basis(Composition::from_vec_unchecked(b[j..].to_vec()))
            } else if j == lb {
                LinComb::basis(Composition::from_vec_unchecked(a[i..].to_vec()))
            } else {
                let mut cell = LinComb::zero();
                prepend_into(&mut cell, &a[i], &table[i + 1][j], &BigInt::one());
                prepend_into(&mut cell, &b[j], &table[i][j + 1], &BigInt::one());
                if !lambda.is_zero() {
                    prepend_into(&mut cell, &a[i].add(&b[j]), &table[i + 1][j + 1], lambda);
                }
                cell
            };
            table[i][j] = cell;
        }
    }
    std::mem::take(&mut table[0][0])
}

fn prepend_into<B: ExponentMonoid>(
    out: &mut LinComb<Composition<B>>,
    head: &B,
    tails: &LinComb<Composition<B>>,
    factor: &BigInt,
) {
    for (tail, c) in tails.iter() {
        out.add_term(tail.prepend(head.clone()), c * factor);
    }
}

/// Bilinear extension of [`qshuffle`] to linear combinations.
pub fn qshuffle_lin<B: ExponentMonoid>(
    u: &LinComb<Composition<B>>,
    v: &LinComb<Composition<B>>,
    lambda: &BigInt,
) -> LinComb<Composition<B>> {
    bilinear_extend(u, v, |a, b| qshuffle(a, b, lambda))
}

#[cfg(test)]
mod tests {
    use num_bigint::BigUint;

    use super::*;
    use crate::composition::enumerate_compositions;
    use crate::monoid::NTilde;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn one() -> BigInt {
        BigInt::one()
    }

    fn lc(terms: &[(&str, i64)]) -> LinComb<Composition> {
        terms
            .iter()
            .map(|&(k, v)| (c(k), BigInt::from(v)))
            .collect()
    }

    fn binomial(n: usize, k: usize) -> i64 {
        (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i as i64 + 1))
    }

    #[test]
    fn small_products() {
        assert_eq!(
            qshuffle(&c("(1)"), &c("(2)"), &one()),
            lc(&[("(1,2)", 1), ("(2,1)", 1), ("(3)", 1)])
        );
        assert_eq!(
            qshuffle(&c("(e)"), &c("(e)"), &one()),
            lc(&[("(e,e)", 2), ("(e)", 1)])
        );
        for lambda in [-2i64, 0, 1, 5] {
            let beta = c("(e,3)");
            assert_eq!(
                qshuffle(&Composition::empty(), &beta, &lambda.into()),
                LinComb::basis(beta.clone())
            );
            assert_eq!(
                qshuffle(&beta, &Composition::empty(), &lambda.into()),
                LinComb::basis(beta)
            );
        }
    }

    /// Over ℕ with symbolic-looking distinct entries a1=1, b1=10, b2=100 the
    /// mixable shuffle has five distinct terms, two of them weighted by λ.
    #[test]
    fn mixable_shuffle_of_one_and_two_letters() {
        let n = |xs: &[u32]| {
            Composition::<BigUint>::new(xs.iter().map(|&x| BigUint::from(x)).collect()).unwrap()
        };
        let lambda = BigInt::from(7);
        let got = qshuffle(&n(&[1]), &n(&[10, 100]), &lambda);
        let expected: LinComb<Composition<BigUint>> = [
            (n(&[1, 10, 100]), BigInt::one()),
            (n(&[10, 1, 100]), BigInt::one()),
            (n(&[10, 100, 1]), BigInt::one()),
            (n(&[11, 100]), lambda.clone()),
            (n(&[10, 101]), lambda.clone()),
        ]
        .into_iter()
        .collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn commutative_up_to_length_four() {
        let comps = enumerate_compositions(4, 1);
        for a in &comps {
            for b in comps.iter().step_by(7) {
                assert_eq!(qshuffle(a, b, &one()), qshuffle(b, a, &one()), "{a} * {b}");
            }
        }
    }

    #[test]
    fn associative_on_small_triples() {
        let comps = enumerate_compositions(3, 2);
        let lambda = one();
        for a in comps.iter().step_by(3) {
            for b in comps.iter().step_by(5) {
                let ab = qshuffle(a, b, &lambda);
                for g in comps.iter().step_by(7) {
                    let left = qshuffle_lin(&ab, &LinComb::basis(g.clone()), &lambda);
                    let right = qshuffle_lin(
                        &LinComb::basis(a.clone()),
                        &qshuffle(b, g, &lambda),
                        &lambda,
                    );
                    assert_eq!(left, right, "({a} * {b}) * {g}");
                }
            }
        }
    }

    #[test]
    fn products_are_homogeneous() {
        let comps = enumerate_compositions(3, 2);
        for a in &comps {
            for b in comps.iter().step_by(4) {
                let w = a.weight().add(&b.weight());
                for (g, coeff) in qshuffle(a, b, &one()).iter() {
                    assert_eq!(g.weight(), w);
                    assert!(*coeff > BigInt::zero());
                }
            }
        }
    }

    #[test]
    fn weight_zero_counts_shuffles() {
        let comps = enumerate_compositions(3, 2);
        for a in comps.iter().step_by(2) {
            for b in comps.iter().step_by(3) {
                let total: BigInt = qshuffle(a, b, &BigInt::zero())
                    .iter()
                    .map(|(_, c)| c.clone())
                    .sum();
                assert_eq!(total, BigInt::from(binomial(a.len() + b.len(), a.len())));
            }
        }
    }

    #[test]
    fn eps_absorbs_into_positive_heads() {
        let got = qshuffle(&c("(e)"), &c("(2)"), &one());
        assert_eq!(got, lc(&[("(e,2)", 1), ("(2,e)", 1), ("(2)", 1)]));
        assert_eq!(NTilde::Eps.add(&NTilde::from(2)), NTilde::from(2));
    }
}
