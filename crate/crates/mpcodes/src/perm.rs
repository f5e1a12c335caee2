//! Permutations, multipermutations, ordered set partitions, and the
//! block-interleaving and projection primitives the rest of the crate
//! builds on.
//!
//! A permutation lists cells in decreasing charge order. Grouping its
//! positions into consecutive blocks of `r` collapses it to an r-regular
//! multipermutation (the rank vector), equivalently an ordered set
//! partition whose i-th part holds the labels of rank i.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};

/// Default cap on exhaustive enumerations (items), per operation call.
pub const DEFAULT_ENUM_CAP: u64 = 10_000_000;

/// A sequence of distinct positive labels. The ground set defaults to
/// `1..=n` but any set of distinct labels is allowed; operations that
/// require canonical labels check for them explicitly.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    elements: Vec<u32>,
}

impl Permutation {
    pub fn new(elements: Vec<u32>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::InvalidPermutation("empty sequence".into()));
        }
        let mut seen = BTreeSet::new();
        for &e in &elements {
            if e == 0 {
                return Err(Error::InvalidPermutation("labels must be positive".into()));
            }
            if !seen.insert(e) {
                return Err(Error::InvalidPermutation(format!("label {e} repeats")));
            }
        }
        Ok(Permutation { elements })
    }

    pub fn identity(n: u32) -> Self {
        Permutation {
            elements: (1..=n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    /// True when the labels are exactly `1..=n`.
    pub fn is_canonical(&self) -> bool {
        let n = self.elements.len() as u32;
        self.elements.iter().all(|&e| e <= n)
    }

    /// Inverse permutation: position (1-based) of each label. Canonical
    /// labels only.
    pub fn inverse(&self) -> Result<Permutation> {
        if !self.is_canonical() {
            return Err(Error::NonCanonicalLabels);
        }
        let n = self.elements.len();
        let mut inv = vec![0u32; n];
        for (pos, &label) in self.elements.iter().enumerate() {
            inv[(label - 1) as usize] = pos as u32 + 1;
        }
        Ok(Permutation { elements: inv })
    }

    /// Labels in ascending order.
    pub fn ground_set(&self) -> Vec<u32> {
        let mut g = self.elements.clone();
        g.sort_unstable();
        g
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for e in &self.elements {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let elements = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidPermutation(format!("bad label {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(elements)
    }
}

/// A length-n vector over `1..=n/r` in which every rank appears exactly
/// `r` times. Entry `j` is the rank of label `j`; defined for the
/// canonical ground set `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multipermutation {
    ranks: Vec<u32>,
    r: u32,
}

impl Multipermutation {
    pub fn new(ranks: Vec<u32>, r: u32) -> Result<Self> {
        let n = ranks.len() as u32;
        if r == 0 || n == 0 || !n.is_multiple_of(r) {
            return Err(Error::NonDivisible { n, r });
        }
        let q = n / r;
        let mut counts = vec![0u32; q as usize];
        for &v in &ranks {
            if v == 0 || v > q {
                return Err(Error::InvalidPermutation(format!(
                    "rank {v} outside 1..={q}"
                )));
            }
            counts[(v - 1) as usize] += 1;
        }
        if counts.iter().any(|&c| c != r) {
            return Err(Error::InvalidPermutation(
                "each rank must appear exactly r times".into(),
            ));
        }
        Ok(Multipermutation { ranks, r })
    }

    pub fn ranks(&self) -> &[u32] {
        &self.ranks
    }

    pub fn regularity(&self) -> u32 {
        self.r
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn num_ranks(&self) -> u32 {
        self.ranks.len() as u32 / self.r
    }
}

impl fmt::Display for Multipermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.ranks {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

/// A sequence of pairwise disjoint, equally sized label sets; part `i`
/// holds the labels of rank `i`. Parts are stored sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedSetPartition {
    parts: Vec<Vec<u32>>,
}

impl OrderedSetPartition {
    pub fn new(parts: Vec<Vec<u32>>) -> Result<Self> {
        if parts.is_empty() || parts[0].is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        let r = parts[0].len();
        let mut seen = BTreeSet::new();
        let mut sorted_parts = Vec::with_capacity(parts.len());
        for part in parts {
            if part.len() != r {
                return Err(Error::InvalidPartition("parts must share one size".into()));
            }
            let mut p = part;
            p.sort_unstable();
            for &e in &p {
                if e == 0 {
                    return Err(Error::InvalidPartition("labels must be positive".into()));
                }
                if !seen.insert(e) {
                    return Err(Error::InvalidPartition(format!("label {e} repeats")));
                }
            }
            sorted_parts.push(p);
        }
        Ok(OrderedSetPartition {
            parts: sorted_parts,
        })
    }

    /// Chunk a permutation into consecutive blocks of `r`: part `i` is
    /// the set of labels at positions `(i-1)r+1 ..= ir`. Valid for any
    /// ground set.
    pub fn from_permutation(p: &Permutation, r: u32) -> Result<Self> {
        let n = p.len() as u32;
        if r == 0 || !n.is_multiple_of(r) {
            return Err(Error::NonDivisible { n, r });
        }
        let parts = p
            .elements()
            .chunks(r as usize)
            .map(|c| c.to_vec())
            .collect();
        OrderedSetPartition::new(parts)
    }

    pub fn parts(&self) -> &[Vec<u32>] {
        &self.parts
    }

    pub fn num_parts(&self) -> u32 {
        self.parts.len() as u32
    }

    /// Part size, the regularity r.
    pub fn part_size(&self) -> u32 {
        self.parts[0].len() as u32
    }

    pub fn n(&self) -> u32 {
        (self.parts.len() * self.parts[0].len()) as u32
    }

    pub fn ground_set(&self) -> Vec<u32> {
        let mut g: Vec<u32> = self.parts.iter().flatten().copied().collect();
        g.sort_unstable();
        g
    }

    pub fn is_canonical(&self) -> bool {
        let n = self.n();
        self.parts.iter().flatten().all(|&e| e <= n)
    }

    /// Rank of a label, if present.
    pub fn rank_of(&self, label: u32) -> Option<u32> {
        self.parts
            .iter()
            .position(|p| p.binary_search(&label).is_ok())
            .map(|i| i as u32 + 1)
    }
}

impl fmt::Display for OrderedSetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            for (j, e) in part.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for OrderedSetPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split('|')
            .map(|part| {
                part.split(',')
                    .map(|t| {
                        t.trim()
                            .parse::<u32>()
                            .map_err(|_| Error::InvalidPartition(format!("bad label {t:?}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        OrderedSetPartition::new(parts)
    }
}

/// Rank vector of a permutation over `1..=n`: label `j` gets rank
/// `ceil(pos(j) / r)`. For `r = 1` this is the inverse permutation.
pub fn rank_vector(p: &Permutation, r: u32) -> Result<Multipermutation> {
    let n = p.len() as u32;
    if r == 0 || !n.is_multiple_of(r) {
        return Err(Error::NonDivisible { n, r });
    }
    if !p.is_canonical() {
        return Err(Error::NonCanonicalLabels);
    }
    let mut ranks = vec![0u32; n as usize];
    for (pos, &label) in p.elements().iter().enumerate() {
        ranks[(label - 1) as usize] = pos as u32 / r + 1;
    }
    Multipermutation::new(ranks, r)
}

/// Ordered set partition of a multipermutation: part `i` collects the
/// positions holding rank `i`.
pub fn partition_of(m: &Multipermutation) -> OrderedSetPartition {
    let q = m.num_ranks() as usize;
    let mut parts = vec![Vec::with_capacity(m.regularity() as usize); q];
    for (j, &rank) in m.ranks().iter().enumerate() {
        parts[(rank - 1) as usize].push(j as u32 + 1);
    }
    OrderedSetPartition::new(parts).expect("valid multipermutation yields valid partition")
}

/// Inverse of [`partition_of`]: the multipermutation with `m(j) = i` for
/// every `j` in part `i`. Canonical ground set only.
pub fn multipermutation_of(o: &OrderedSetPartition) -> Result<Multipermutation> {
    if !o.is_canonical() {
        return Err(Error::NonCanonicalLabels);
    }
    let n = o.n() as usize;
    let mut ranks = vec![0u32; n];
    for (i, part) in o.parts().iter().enumerate() {
        for &label in part {
            ranks[(label - 1) as usize] = i as u32 + 1;
        }
    }
    Multipermutation::new(ranks, o.part_size())
}

/// Deterministic class representative: part 1's labels ascending, then
/// part 2's, and so on.
pub fn canonical_perm(o: &OrderedSetPartition) -> Permutation {
    let elements: Vec<u32> = o.parts().iter().flatten().copied().collect();
    Permutation::new(elements).expect("partition labels are distinct")
}

/// Whether two permutations share a rank vector (same block sets).
pub fn classes_equal(a: &Permutation, b: &Permutation, r: u32) -> Result<bool> {
    let oa = OrderedSetPartition::from_permutation(a, r)?;
    let ob = OrderedSetPartition::from_permutation(b, r)?;
    if oa.num_parts() != ob.num_parts() {
        return Err(Error::ParamMismatch("lengths differ".into()));
    }
    Ok(oa == ob)
}

/// All `(r!)^(n/r)` permutations sharing the rank vector of `p`, in a
/// deterministic order (per-block lexicographic product).
pub fn equivalence_class(p: &Permutation, r: u32, cap: u64) -> Result<Vec<Permutation>> {
    let n = p.len() as u32;
    if r == 0 || !n.is_multiple_of(r) {
        return Err(Error::NonDivisible { n, r });
    }
    let q = (n / r) as usize;
    let size = BigUint::from(factorial_u64(r)).pow(q as u32);
    let size_u64 = size
        .to_u64()
        .filter(|&s| s <= cap)
        .ok_or_else(|| Error::size_limit(&size, cap))?;

    let mut blocks: Vec<Vec<u32>> = p
        .elements()
        .chunks(r as usize)
        .map(|c| {
            let mut b = c.to_vec();
            b.sort_unstable();
            b
        })
        .collect();

    let mut out = Vec::with_capacity(size_u64 as usize);
    loop {
        let elements: Vec<u32> = blocks.iter().flatten().copied().collect();
        out.push(Permutation::new(elements).expect("blocks hold distinct labels"));
        // advance the product of per-block lexicographic orders
        let mut carried = true;
        for block in blocks.iter_mut().rev() {
            if next_permutation(block) {
                carried = false;
                break;
            }
            block.sort_unstable();
        }
        if carried {
            break;
        }
    }
    debug_assert_eq!(out.len() as u64, size_u64);
    Ok(out)
}

/// Block interleaving: `r` elements from the first sequence, `r` from the
/// second, and so on, cycling until all are exhausted.
pub fn interleave_blocks(seqs: &[&[u32]], r: u32) -> Result<Vec<u32>> {
    if seqs.is_empty() || r == 0 {
        return Err(Error::LengthMismatch);
    }
    let len = seqs[0].len();
    if !len.is_multiple_of(r as usize) || seqs.iter().any(|s| s.len() != len) {
        return Err(Error::LengthMismatch);
    }
    let rounds = len / r as usize;
    let mut out = Vec::with_capacity(len * seqs.len());
    for round in 0..rounds {
        for seq in seqs {
            out.extend_from_slice(&seq[round * r as usize..(round + 1) * r as usize]);
        }
    }
    Ok(out)
}

/// Subsequence of `seq` keeping exactly the labels in `keep`, in order.
pub fn project(seq: &[u32], keep: &[u32]) -> Result<Vec<u32>> {
    let keep_set: BTreeSet<u32> = keep.iter().copied().collect();
    for &label in &keep_set {
        if !seq.contains(&label) {
            return Err(Error::UnknownLabel(label));
        }
    }
    Ok(seq
        .iter()
        .copied()
        .filter(|e| keep_set.contains(e))
        .collect())
}

/// Lexicographic stream of all rank vectors of `M(n, r)`.
pub fn enumerate_rank_vectors(n: u32, r: u32, cap: u64) -> Result<RankVectorIter> {
    if r == 0 || n == 0 || !n.is_multiple_of(r) {
        return Err(Error::NonDivisible { n, r });
    }
    let count = crate::bounds::count_multipermutations(n, r)?;
    if count.to_u64().filter(|&c| c <= cap).is_none() {
        return Err(Error::size_limit(&count, cap));
    }
    let q = n / r;
    let first: Vec<u32> = (1..=q)
        .flat_map(|v| std::iter::repeat_n(v, r as usize))
        .collect();
    Ok(RankVectorIter {
        next: Some(first),
        r,
    })
}

pub struct RankVectorIter {
    next: Option<Vec<u32>>,
    r: u32,
}

impl Iterator for RankVectorIter {
    type Item = Multipermutation;

    fn next(&mut self) -> Option<Self::Item> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(Multipermutation::new(current, self.r).expect("enumeration preserves regularity"))
    }
}

/// In-place lexicographic successor; returns false at the last
/// arrangement. Works on sequences with repeated values.
pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

pub(crate) fn factorial_u64(k: u32) -> u64 {
    (1..=k as u64).product::<u64>().max(1)
}
