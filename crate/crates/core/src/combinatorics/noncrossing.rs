//! Noncrossing set partitions of `{1, ..., k}`.
//!
//! Blocks are stored as sorted integer lists and ordered by their minima, so
//! equality and iteration order are deterministic. The primary enumeration
//! builds the block of the smallest element recursively; a filter over all
//! set partitions is kept as an independent oracle for tests and the
//! verification suites.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{factorial, Ratio};

/// A noncrossing partition of `{1, ..., k}`; blocks sorted internally and
/// ordered by minimum element.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct NoncrossingPartition {
    blocks: Vec<Vec<usize>>,
}

impl NoncrossingPartition {
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Number of blocks.
    pub fn length(&self) -> usize {
        self.blocks.len()
    }

    /// Sizes of the blocks in canonical block order.
    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.len()).collect()
    }

    fn from_blocks(mut blocks: Vec<Vec<usize>>) -> Self {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_by_key(|b| b[0]);
        NoncrossingPartition { blocks }
    }
}

/// True when no two blocks interleave as a < c < b < d.
pub fn blocks_are_noncrossing(blocks: &[Vec<usize>]) -> bool {
    for (i, b1) in blocks.iter().enumerate() {
        for b2 in blocks.iter().skip(i + 1) {
            // A crossing exists iff neither block fits inside one "gap" of
            // the other; check all ordered quadruples the cheap way.
            for &a in b1 {
                for &b in b1 {
                    if a >= b {
                        continue;
                    }
                    for &c in b2 {
                        for &d in b2 {
                            if c >= d {
                                continue;
                            }
                            if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                                return false;
                            }
                        }
                    }
                }
            }
        }
    }
    true
}

fn enumerate_on(elems: &[usize]) -> Vec<Vec<Vec<usize>>> {
    if elems.is_empty() {
        return vec![Vec::new()];
    }
    let first = elems[0];
    let rest = &elems[1..];
    let mut out = Vec::new();
    // Choose the rest of first's block as a subset of the remaining
    // elements; the elements falling strictly between consecutive chosen
    // ones split into independent segments.
    for mask in 0..(1u64 << rest.len()) {
        let mut block = vec![first];
        let mut segments: Vec<Vec<usize>> = Vec::new();
        let mut current: Vec<usize> = Vec::new();
        for (i, &e) in rest.iter().enumerate() {
            if mask >> i & 1 == 1 {
                block.push(e);
                segments.push(std::mem::take(&mut current));
            } else {
                current.push(e);
            }
        }
        segments.push(current);

        let mut partials: Vec<Vec<Vec<usize>>> = vec![vec![block]];
        for seg in &segments {
            let subs = enumerate_on(seg);
            let mut next = Vec::with_capacity(partials.len() * subs.len());
            for p in &partials {
                for s in &subs {
                    let mut q = p.clone();
                    q.extend(s.iter().cloned());
                    next.push(q);
                }
            }
            partials = next;
        }
        out.extend(partials);
    }
    out
}

/// All noncrossing partitions of `{1, ..., k}`; there are Catalan(k) of them.
pub fn noncrossing_partitions(k: usize) -> Vec<NoncrossingPartition> {
    assert!(k >= 1, "noncrossing partitions need k >= 1");
    let elems: Vec<usize> = (1..=k).collect();
    let mut out: Vec<NoncrossingPartition> = enumerate_on(&elems)
        .into_iter()
        .map(NoncrossingPartition::from_blocks)
        .collect();
    out.sort();
    out
}

/// Oracle enumeration: generate every set partition of `{1, ..., k}` and
/// keep the noncrossing ones. Exponentially slower; test use only.
pub fn noncrossing_partitions_by_filter(k: usize) -> Vec<NoncrossingPartition> {
    assert!(k >= 1);
    let mut out = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    fn rec(next: usize, k: usize, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<NoncrossingPartition>) {
        if next > k {
            if blocks_are_noncrossing(blocks) {
                out.push(NoncrossingPartition::from_blocks(blocks.clone()));
            }
            return;
        }
        for i in 0..blocks.len() {
            blocks[i].push(next);
            rec(next + 1, k, blocks, out);
            blocks[i].pop();
        }
        blocks.push(vec![next]);
        rec(next + 1, k, blocks, out);
        blocks.pop();
    }
    rec(1, k, &mut blocks, &mut out);
    out.sort();
    out
}

/// Catalan number C(k) as an exact rational.
pub fn catalan(k: usize) -> Ratio {
    factorial(2 * k) / (factorial(k + 1) * factorial(k))
}

/// Number of noncrossing partitions of `{1, ..., n}` with `m[k-1]` blocks of
/// size `k`: `n! / ((n - sum m_k + 1)! * prod m_k!)`. The multiplicity list
/// must have length `n = sum k * m_k`.
pub fn kreweras_count(m: &[usize]) -> Result<Ratio> {
    let n: usize = m.iter().enumerate().map(|(i, &mk)| (i + 1) * mk).sum();
    if m.len() != n {
        return Err(Error::InvalidMultiplicities(format!(
            "list has length {} but weights sum to {}",
            m.len(),
            n
        )));
    }
    let total_blocks: usize = m.iter().sum();
    if n == 0 {
        return Ok(Ratio::zero());
    }
    let mut out = factorial(n) / factorial(n - total_blocks + 1);
    for &mk in m {
        out /= factorial(mk);
    }
    Ok(out)
}

/// All block-size multiplicity vectors `(m_1, ..., m_n)` with
/// `sum k * m_k = n`.
pub fn block_multiplicity_vectors(n: usize) -> Vec<Vec<usize>> {
    fn rec(k: usize, remaining: usize, n: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k > n {
            if remaining == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        for mk in 0..=(remaining / k) {
            prefix.push(mk);
            rec(k + 1, remaining - k * mk, n, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, n, &mut Vec::new(), &mut out);
    out
}
