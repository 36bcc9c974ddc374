//! Integer partitions and the counting ingredients built on them.
//!
//! A [`Partition`] is a weakly decreasing list of positive parts; the empty
//! partition is allowed and written `()`. Partitions index monomial
//! symmetric functions and cumulant coefficients everywhere else in the
//! crate, so the representation is kept canonical at construction time.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{factorial, Ratio};

/// Weakly decreasing list of positive integer parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// The empty partition.
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Build from parts that are already weakly decreasing and positive.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::InvalidPartition(format!(
                    "parts not weakly decreasing: {parts:?}"
                )));
            }
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!("zero part in {parts:?}")));
        }
        Ok(Partition(parts))
    }

    /// Build from arbitrary nonnegative entries: zeros are dropped and the
    /// rest is sorted nonincreasing.
    pub fn equivalent(entries: &[u32]) -> Self {
        let mut parts: Vec<u32> = entries.iter().copied().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of parts, written l(v).
    pub fn length(&self) -> usize {
        self.0.len()
    }

    /// Sum of parts, written |v|.
    pub fn weight(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The partition with one extra part `p` joined in (no-op for `p == 0`).
    pub fn with_part(&self, p: u32) -> Self {
        if p == 0 {
            return self.clone();
        }
        let mut parts = self.0.clone();
        let pos = parts.partition_point(|&q| q >= p);
        parts.insert(pos, p);
        Partition(parts)
    }

    /// The partition with one occurrence of `p` removed, if present.
    pub fn without_part(&self, p: u32) -> Option<Self> {
        let pos = self.0.iter().position(|&q| q == p)?;
        let mut parts = self.0.clone();
        parts.remove(pos);
        Some(Partition(parts))
    }

    /// Distinct part values, the set R(v).
    pub fn distinct_parts(&self) -> Vec<u32> {
        let mut d = self.0.clone();
        d.dedup();
        d
    }

    /// Multiplicity of each distinct part value.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Equivalent partition of a tuple of nonnegative integers: drop zeros,
/// sort nonincreasing.
pub fn equivalent_partition(entries: &[u32]) -> Partition {
    Partition::equivalent(entries)
}

/// Number of distinct permutations of the parts,
/// `P(v) = l(v)! / prod_d (multiplicity of d)!`, with `P(()) = 1`.
pub fn perm_count(nu: &Partition) -> Ratio {
    let mut out = factorial(nu.length());
    for (_, m) in nu.multiplicities() {
        out /= factorial(m);
    }
    out
}

/// Partition recording how many times each distinct value occurs in a
/// nonempty index list: with `n_d` = number of entries equal to `d`, this is
/// the equivalent partition of `(n_1, ..., n_max)`.
pub fn multiplicity_partition(indices: &[usize]) -> Result<Partition> {
    if indices.is_empty() {
        return Err(Error::EmptyIndexList);
    }
    let mut counts: std::collections::BTreeMap<usize, u32> = std::collections::BTreeMap::new();
    for &i in indices {
        *counts.entry(i).or_insert(0) += 1;
    }
    let entries: Vec<u32> = counts.into_values().collect();
    Ok(Partition::equivalent(&entries))
}

/// One way of splitting every part of a source partition into two
/// nonnegative summands, componentwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPair {
    pub first: Vec<u32>,
    pub second: Vec<u32>,
}

impl SplitPair {
    /// Equivalent partitions of the two summand vectors.
    pub fn partitions(&self) -> (Partition, Partition) {
        (
            Partition::equivalent(&self.first),
            Partition::equivalent(&self.second),
        )
    }
}

/// All componentwise splittings of `nu` into an ordered pair of nonnegative
/// vectors; there are `prod_j (nu_j + 1)` of them, and the empty partition
/// splits into the single pair of empty vectors.
pub fn split_pairs(nu: &Partition) -> Vec<SplitPair> {
    let parts = nu.parts();
    let mut out = vec![SplitPair {
        first: Vec::new(),
        second: Vec::new(),
    }];
    for &p in parts {
        let mut next = Vec::with_capacity(out.len() * (p as usize + 1));
        for pair in &out {
            for b in 0..=p {
                let mut first = pair.first.clone();
                let mut second = pair.second.clone();
                first.push(b);
                second.push(p - b);
                next.push(SplitPair { first, second });
            }
        }
        out = next;
    }
    out
}

/// All partitions of weight exactly `n`.
pub fn partitions_of_weight(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max_part: usize, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for p in (1..=remaining.min(max_part)).rev() {
            prefix.push(p as u32);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of weight at most `n` (including the empty one).
pub fn partitions_up_to_weight(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of_weight).collect()
}

/// Sum of the coefficients of the monomials of type `nu` in the product
/// `M_{nu1} * M_{nu2}` over `n_vars` variables, i.e. `|T(nu)| * P(nu)`
/// restricted to splittings with the prescribed equivalent partitions.
pub fn split_count(nu: &Partition, nu1: &Partition, nu2: &Partition) -> Ratio {
    let mut count = Ratio::zero();
    for pair in split_pairs(nu) {
        let (p1, p2) = pair.partitions();
        if &p1 == nu1 && &p2 == nu2 {
            count += Ratio::one();
        }
    }
    count * perm_count(nu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio_int;
    use proptest::prelude::*;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn equivalent_partition_examples() {
        assert_eq!(equivalent_partition(&[0, 2, 0, 1, 3]), pt(&[3, 2, 1]));
        assert_eq!(equivalent_partition(&[0, 0]), Partition::empty());
        assert_eq!(equivalent_partition(&[5]), pt(&[5]));
    }

    #[test]
    fn new_rejects_bad_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn perm_count_examples() {
        assert_eq!(perm_count(&pt(&[2, 1, 1])), ratio_int(3));
        assert_eq!(perm_count(&Partition::empty()), ratio_int(1));
        assert_eq!(perm_count(&pt(&[3, 2, 1])), ratio_int(6));
    }

    #[test]
    fn multiplicity_partition_examples() {
        assert_eq!(multiplicity_partition(&[1, 1, 3]).unwrap(), pt(&[2, 1]));
        assert_eq!(multiplicity_partition(&[7]).unwrap(), pt(&[1]));
        assert_eq!(multiplicity_partition(&[2, 2, 2]).unwrap(), pt(&[3]));
        assert!(multiplicity_partition(&[]).is_err());
    }

    #[test]
    fn split_pairs_examples() {
        let one = split_pairs(&pt(&[1]));
        assert_eq!(one.len(), 2);
        assert!(one.iter().any(|p| p.first == [0] && p.second == [1]));
        assert!(one.iter().any(|p| p.first == [1] && p.second == [0]));

        assert_eq!(split_pairs(&pt(&[2, 1])).len(), 6);

        let empty = split_pairs(&Partition::empty());
        assert_eq!(empty.len(), 1);
        assert!(empty[0].first.is_empty() && empty[0].second.is_empty());
    }

    #[test]
    fn with_and_without_part() {
        assert_eq!(pt(&[3, 1]).with_part(2), pt(&[3, 2, 1]));
        assert_eq!(pt(&[3, 1]).with_part(0), pt(&[3, 1]));
        assert_eq!(pt(&[3, 2, 1]).without_part(2), Some(pt(&[3, 1])));
        assert_eq!(pt(&[3, 1]).without_part(2), None);
    }

    #[test]
    fn partitions_of_weight_counts() {
        // Partition numbers p(0..9) = 1,1,2,3,5,7,11,15,22,30.
        let expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(partitions_of_weight(n).len(), e, "p({n})");
        }
    }

    proptest! {
        // P(v) = sum over distinct parts i of P(v with one i removed).
        #[test]
        fn perm_count_removal_recursion(parts in proptest::collection::vec(1u32..6, 1..6)) {
            let nu = Partition::equivalent(&parts);
            let mut sum = Ratio::zero();
            for i in nu.distinct_parts() {
                sum += perm_count(&nu.without_part(i).unwrap());
            }
            prop_assert_eq!(sum, perm_count(&nu));
        }

        #[test]
        fn split_pairs_cardinality(parts in proptest::collection::vec(1u32..5, 0..5)) {
            let nu = Partition::equivalent(&parts);
            let expected: usize = nu.parts().iter().map(|&p| p as usize + 1).product();
            let pairs = split_pairs(&nu);
            prop_assert_eq!(pairs.len(), expected);
            for pair in &pairs {
                for (j, (&a, &b)) in pair.first.iter().zip(&pair.second).enumerate() {
                    prop_assert_eq!(a + b, nu.parts()[j]);
                }
            }
        }
    }
}
