//! Combinatorial identities evaluated exactly on both sides.
//!
//! These checks back the verification suites: each one computes two
//! independent expressions in exact rationals and reports equality.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::combinatorics::noncrossing::noncrossing_partitions;
use crate::combinatorics::partition::{partitions_of_weight, perm_count, split_count, Partition};
use crate::rational::{binomial, factorial, ratio_int, Ratio};

/// Alternating binomial-quotient identity:
/// `sum_{k=m}^{a} C(a,k) C(b,k-m) / C(a+b,k) * (-1)^k  ==  (-1)^m a! b! / (a+b)!`
/// for nonnegative `a, b, m` with `m <= a`. Returns whether both sides agree.
pub fn binomial_alternating_identity_holds(a: usize, b: usize, m: usize) -> bool {
    assert!(m <= a, "m must not exceed a");
    let mut lhs = Ratio::zero();
    for k in m..=a {
        let sign = if k % 2 == 0 { ratio_int(1) } else { ratio_int(-1) };
        lhs += binomial(a, k) * binomial(b, k - m) / binomial(a + b, k) * sign;
    }
    let sign = if m % 2 == 0 { ratio_int(1) } else { ratio_int(-1) };
    let rhs = sign * factorial(a) * factorial(b) / factorial(a + b);
    lhs == rhs
}

/// Weighted sum over noncrossing partitions with the first block (the one
/// containing the smallest element) weighted by `b` and the others by `a`.
pub fn first_block_weighted_sum(k: usize, a: &[Ratio], b: &[Ratio]) -> Ratio {
    let mut total = Ratio::zero();
    for pi in noncrossing_partitions(k) {
        let sizes = pi.block_sizes();
        let mut term = b[sizes[0] - 1].clone();
        for &s in &sizes[1..] {
            term *= &a[s - 1];
        }
        total += term;
    }
    total
}

/// First-block recursion over noncrossing partitions: the weighted sum over
/// partitions of `k+1` equals the sum over partitions of `k` with the first
/// block's weight promoted by one convolution step. Sequences must supply
/// values through index `k+1`.
pub fn first_block_recursion_holds(k: usize, a: &[Ratio], b: &[Ratio]) -> bool {
    assert!(a.len() >= k + 1 && b.len() >= k + 1, "sequences too short");
    let lhs = first_block_weighted_sum(k + 1, a, b);
    let mut rhs = Ratio::zero();
    for pi in noncrossing_partitions(k) {
        let sizes = pi.block_sizes();
        let s1 = sizes[0];
        let mut promoted = b[s1].clone(); // b_{s1 + 1}
        for j in 1..=s1 {
            promoted += a[j - 1].clone() * &b[s1 - j];
        }
        let mut term = promoted;
        for &s in &sizes[1..] {
            term *= &a[s - 1];
        }
        rhs += term;
    }
    lhs == rhs
}

/// Sparse Laurent polynomial in one variable: exponent -> coefficient.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Ratio>,
}

impl LaurentPoly {
    pub fn new() -> Self {
        LaurentPoly::default()
    }

    pub fn set(&mut self, exp: i64, coeff: Ratio) {
        if coeff.is_zero() {
            self.terms.remove(&exp);
        } else {
            self.terms.insert(exp, coeff);
        }
    }

    pub fn coeff(&self, exp: i64) -> Ratio {
        self.terms.get(&exp).cloned().unwrap_or_else(Ratio::zero)
    }

    /// Product truncated to exponents in `[lo, hi]`; exponents outside the
    /// window cannot influence the residue extraction the callers do.
    pub fn mul_truncated(&self, other: &Self, lo: i64, hi: i64) -> Self {
        let mut out = LaurentPoly::new();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &other.terms {
                let e = e1 + e2;
                if e < lo || e > hi {
                    continue;
                }
                let add = c1.clone() * c2;
                let entry = out.terms.entry(e).or_insert_with(Ratio::zero);
                *entry += add;
                if entry.is_zero() {
                    out.terms.remove(&e);
                }
            }
        }
        out
    }

    pub fn pow_truncated(&self, k: usize, lo: i64, hi: i64) -> Self {
        let mut acc = LaurentPoly::new();
        acc.set(0, Ratio::one());
        for _ in 0..k {
            acc = acc.mul_truncated(self, lo, hi);
        }
        acc
    }
}

/// Residue form of the noncrossing moment sum:
/// `(1/(n+1)) * [z^{-1}] (1/z + sum_j r_j z^{j-1})^{n+1}`.
/// Exponents are truncated symmetrically; only finitely many can reach
/// `z^{-1}` in the power.
pub fn residue_moment(n: usize, r: &[Ratio]) -> Ratio {
    assert!(r.len() >= n, "need r_1..r_n");
    let mut base = LaurentPoly::new();
    base.set(-1, Ratio::one());
    for (j, rj) in r.iter().take(n).enumerate() {
        let mut c = base.coeff(j as i64);
        c += rj.clone();
        base.set(j as i64, c);
    }
    let lo = -(n as i64 + 1);
    let hi = (n as i64) * (n as i64);
    let powered = base.pow_truncated(n + 1, lo, hi);
    powered.coeff(-1) / ratio_int(n as i64 + 1)
}

/// Full product sum over noncrossing partitions of `{1..n}` with block-size
/// weights `r`.
pub fn noncrossing_moment(n: usize, r: &[Ratio]) -> Ratio {
    assert!(r.len() >= n, "need r_1..r_n");
    let mut total = Ratio::zero();
    for pi in noncrossing_partitions(n) {
        let mut term = Ratio::one();
        for s in pi.block_sizes() {
            term *= &r[s - 1];
        }
        total += term;
    }
    total
}

/// Checks the residue formula against direct enumeration.
pub fn residue_formula_holds(n: usize, r: &[Ratio]) -> bool {
    noncrossing_moment(n, r) == residue_moment(n, r)
}

/// Both sides of the overlap-count identity for products of monomial
/// symmetric functions: for partitions `nu1`, `nu2` and an overlap count
/// `k <= min(l(nu1), l(nu2))`, the total weighted number of splittings with
/// the prescribed images and merged length `l(nu1) + l(nu2) - k` equals a
/// trinomial multiple of `P(nu1) P(nu2)`.
pub fn overlap_count_sides(nu1: &Partition, nu2: &Partition, k: usize) -> (Ratio, Ratio) {
    let l1 = nu1.length();
    let l2 = nu2.length();
    assert!(k <= l1.min(l2));
    let target_len = l1 + l2 - k;
    let target_weight = nu1.weight() + nu2.weight();

    let mut lhs = Ratio::zero();
    for nu in partitions_of_weight(target_weight) {
        if nu.length() != target_len {
            continue;
        }
        lhs += split_count(&nu, nu1, nu2);
    }

    let rhs = factorial(target_len) / (factorial(k) * factorial(l1 - k) * factorial(l2 - k))
        * perm_count(nu1)
        * perm_count(nu2);
    (lhs, rhs)
}
