//! Exact distances: plain Hamming and Ulam on permutations, their
//! r-regular versions on equivalence classes, and a brute-force oracle
//! for the r-regular Ulam distance.
//!
//! The r-regular Ulam distance between two classes is the smallest plain
//! Ulam distance over all pairs of representatives. The fast path
//! computes it without enumerating representatives: a sequence of
//! distinct labels is a common subsequence of some pair of
//! representatives iff its ranks are non-decreasing in both operands, so
//! the largest such sequence is a maximum-weight monotone chain over the
//! grid of rank-intersection counts. The oracle below checks that claim
//! wherever it is cheap enough to enumerate.

use std::collections::HashMap;

use num_traits::ToPrimitive;

use crate::codebook::{Codebook, Metric};
use crate::error::{Error, Result};
use crate::exec;
use crate::perm::{canonical_perm, equivalence_class, OrderedSetPartition, Permutation};

/// One minimizing pair of representatives found by the oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceWitness {
    pub value: u32,
    pub alpha: Permutation,
    pub beta: Permutation,
}

/// Plain Hamming distance between equal-length sequences.
pub fn hamming(a: &Permutation, b: &Permutation) -> Result<u32> {
    if a.len() != b.len() {
        return Err(Error::ParamMismatch("lengths differ".into()));
    }
    Ok(a.elements()
        .iter()
        .zip(b.elements())
        .filter(|(x, y)| x != y)
        .count() as u32)
}

/// r-regular Hamming distance between two permutations.
pub fn hamming_r(a: &Permutation, b: &Permutation, r: u32) -> Result<u32> {
    let oa = OrderedSetPartition::from_permutation(a, r)?;
    let ob = OrderedSetPartition::from_permutation(b, r)?;
    hamming_r_parts(&oa, &ob)
}

/// r-regular Hamming distance between two ordered set partitions:
/// the number of labels whose rank differs, summed as |o_a(i) \ o_b(i)|.
pub fn hamming_r_parts(a: &OrderedSetPartition, b: &OrderedSetPartition) -> Result<u32> {
    check_same_shape(a, b)?;
    let r = a.part_size();
    let d = a
        .parts()
        .iter()
        .zip(b.parts())
        .map(|(pa, pb)| r - intersection_size(pa, pb))
        .sum();
    Ok(d)
}

/// Length of the longest common subsequence of two sequences
/// (quadratic reference implementation, arbitrary inputs).
pub fn lcs(x: &[u32], y: &[u32]) -> u32 {
    let (n, m) = (x.len(), y.len());
    let mut prev = vec![0u32; m + 1];
    let mut cur = vec![0u32; m + 1];
    for i in 1..=n {
        for j in 1..=m {
            cur[j] = if x[i - 1] == y[j - 1] {
                prev[j - 1] + 1
            } else {
                prev[j].max(cur[j - 1])
            };
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[m]
}

/// Ulam distance: n minus the longest common subsequence, equivalently
/// the minimum number of translocations taking one permutation to the
/// other. Computed as n minus a longest increasing subsequence.
///
/// ```
/// use mpcodes::metrics::ulam;
/// use mpcodes::Permutation;
///
/// let a: Permutation = "3,2,1,4".parse().unwrap();
/// let b: Permutation = "3,1,2,4".parse().unwrap();
/// assert_eq!(ulam(&a, &b).unwrap(), 1);
/// ```
pub fn ulam(a: &Permutation, b: &Permutation) -> Result<u32> {
    let n = a.len();
    if b.len() != n {
        return Err(Error::ParamMismatch("lengths differ".into()));
    }
    let pos_b: HashMap<u32, u32> = b
        .elements()
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, i as u32))
        .collect();
    let mut composed = Vec::with_capacity(n);
    for &e in a.elements() {
        match pos_b.get(&e) {
            Some(&p) => composed.push(p),
            None => return Err(Error::ParamMismatch(format!("label {e} missing from b"))),
        }
    }
    Ok(n as u32 - lis_length(&composed))
}

/// r-regular Ulam distance between two permutations: the minimum plain
/// Ulam distance over all representative pairs, via the monotone-chain
/// dynamic program.
///
/// ```
/// use mpcodes::metrics::ulam_r;
/// use mpcodes::Permutation;
///
/// let a: Permutation = "3,2,4,1".parse().unwrap();
/// let b: Permutation = "1,2,3,4".parse().unwrap();
/// assert_eq!(ulam_r(&a, &b, 2).unwrap(), 1);
/// ```
pub fn ulam_r(a: &Permutation, b: &Permutation, r: u32) -> Result<u32> {
    let oa = OrderedSetPartition::from_permutation(a, r)?;
    let ob = OrderedSetPartition::from_permutation(b, r)?;
    ulam_r_parts(&oa, &ob)
}

/// r-regular Ulam distance between the classes of two ordered set
/// partitions.
pub fn ulam_r_parts(a: &OrderedSetPartition, b: &OrderedSetPartition) -> Result<u32> {
    check_same_shape(a, b)?;
    let q = a.num_parts() as usize;
    let n = a.n();

    // c[i][j] = |o_a(i) ∩ o_b(j)|
    let mut counts = vec![vec![0u32; q]; q];
    for (i, pa) in a.parts().iter().enumerate() {
        for (j, pb) in b.parts().iter().enumerate() {
            counts[i][j] = intersection_size(pa, pb);
        }
    }

    // f[i][j] = heaviest chain through cells non-decreasing in both axes;
    // row[j] holds f[i-1][j] before the update and f[i][j] after
    let mut row = vec![0u32; q];
    for count_row in &counts {
        for j in 0..q {
            let up = row[j];
            let left = if j > 0 { row[j - 1] } else { 0 };
            row[j] = count_row[j] + up.max(left);
        }
    }
    Ok(n - row[q - 1])
}

/// Whether the class-product scan of [`ulam_r_oracle`] fits under the
/// enumeration cap: (r!)^(2n/r) pairs.
pub fn ulam_r_oracle_feasible(n: u32, r: u32, cap: u64) -> bool {
    if r == 0 || n == 0 || !n.is_multiple_of(r) {
        return false;
    }
    let pairs = crate::bounds::factorial(r).pow(2 * n / r);
    pairs.to_u64().is_some_and(|p| p <= cap)
}

/// Exhaustive minimization of the plain Ulam distance over both
/// equivalence classes; returns the minimum and a witness pair.
pub fn ulam_r_oracle(
    a: &Permutation,
    b: &Permutation,
    r: u32,
    cap: u64,
) -> Result<DistanceWitness> {
    if a.ground_set() != b.ground_set() {
        return Err(Error::ParamMismatch("ground sets differ".into()));
    }
    let class_a = equivalence_class(a, r, cap)?;
    let class_b = equivalence_class(b, r, cap)?;
    let pairs = class_a.len() as u64 * class_b.len() as u64;
    if pairs > cap {
        return Err(Error::size_limit(pairs, cap));
    }

    let n = a.len();
    let ground = a.ground_set();
    let dense = |label: u32| ground.binary_search(&label).expect("label in ground set");

    // per-beta position tables and per-alpha dense label sequences, so
    // the inner scan composes and runs one LIS without allocating
    let beta_pos: Vec<Vec<u32>> = class_b
        .iter()
        .map(|beta| {
            let mut pos = vec![0u32; n];
            for (p, &e) in beta.elements().iter().enumerate() {
                pos[dense(e)] = p as u32;
            }
            pos
        })
        .collect();

    // (value, alpha index, beta index); lexicographic min is deterministic
    let best = exec::map_reduce(
        class_a.len() as u64,
        |ai| {
            let alpha = &class_a[ai as usize];
            let alpha_dense: Vec<usize> = alpha.elements().iter().map(|&e| dense(e)).collect();
            let mut tails: Vec<u32> = Vec::with_capacity(n);
            let mut local = (u32::MAX, usize::MAX, usize::MAX);
            for (bi, pos) in beta_pos.iter().enumerate() {
                tails.clear();
                for &d in &alpha_dense {
                    let v = pos[d];
                    match tails.binary_search(&v) {
                        Ok(_) => unreachable!("positions are distinct"),
                        Err(at) => {
                            if at == tails.len() {
                                tails.push(v);
                            } else {
                                tails[at] = v;
                            }
                        }
                    }
                }
                let value = n as u32 - tails.len() as u32;
                local = local.min((value, ai as usize, bi));
            }
            local
        },
        (u32::MAX, usize::MAX, usize::MAX),
        |x, y| x.min(y),
    );
    Ok(DistanceWitness {
        value: best.0,
        alpha: class_a[best.1].clone(),
        beta: class_b[best.2].clone(),
    })
}

/// Minimum pairwise distance of a codebook under the chosen metric.
/// With `use_oracle`, the Ulam distance is recomputed by exhaustive
/// class enumeration instead of the dynamic program.
pub fn code_min_distance(c: &Codebook, metric: Metric, use_oracle: bool, cap: u64) -> Result<u32> {
    let words = c.materialized(cap)?;
    let words: &[OrderedSetPartition] = &words;
    if words.len() < 2 {
        return Err(Error::SingletonCode);
    }
    let r = c.r;
    let min = match (metric, use_oracle) {
        (Metric::HammingR, _) => exec::try_min_over_pairs(words, hamming_r_parts)?,
        (Metric::UlamR, false) => exec::try_min_over_pairs(words, ulam_r_parts)?,
        (Metric::UlamR, true) => exec::try_min_over_pairs(words, |x, y| {
            ulam_r_oracle(&canonical_perm(x), &canonical_perm(y), r, cap).map(|w| w.value)
        })?,
    };
    Ok(min.expect("two or more words"))
}

/// Sequential sibling of [`code_min_distance`], for direct comparison
/// against the parallel path.
pub fn code_min_distance_seq(
    c: &Codebook,
    metric: Metric,
    use_oracle: bool,
    cap: u64,
) -> Result<u32> {
    let words = c.materialized(cap)?;
    let words: &[OrderedSetPartition] = &words;
    if words.len() < 2 {
        return Err(Error::SingletonCode);
    }
    let r = c.r;
    let min = match (metric, use_oracle) {
        (Metric::HammingR, _) => exec::try_min_over_pairs_seq(words, hamming_r_parts)?,
        (Metric::UlamR, false) => exec::try_min_over_pairs_seq(words, ulam_r_parts)?,
        (Metric::UlamR, true) => exec::try_min_over_pairs_seq(words, |x, y| {
            ulam_r_oracle(&canonical_perm(x), &canonical_perm(y), r, cap).map(|w| w.value)
        })?,
    };
    Ok(min.expect("two or more words"))
}

fn check_same_shape(a: &OrderedSetPartition, b: &OrderedSetPartition) -> Result<()> {
    if a.num_parts() != b.num_parts() || a.part_size() != b.part_size() {
        return Err(Error::ParamMismatch("shapes differ".into()));
    }
    if a.ground_set() != b.ground_set() {
        return Err(Error::ParamMismatch("ground sets differ".into()));
    }
    Ok(())
}

/// Size of the intersection of two ascending slices.
fn intersection_size(a: &[u32], b: &[u32]) -> u32 {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

/// Longest strictly increasing subsequence via patience sorting.
fn lis_length(seq: &[u32]) -> u32 {
    let mut tails: Vec<u32> = Vec::with_capacity(seq.len());
    for &v in seq {
        match tails.binary_search(&v) {
            Ok(_) => unreachable!("positions are distinct"),
            Err(pos) => {
                if pos == tails.len() {
                    tails.push(v);
                } else {
                    tails[pos] = v;
                }
            }
        }
    }
    tails.len() as u32
}
