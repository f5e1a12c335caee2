//! Execution helpers for the data-parallel inner loops: pairwise
//! minimum-reductions and independent trial maps.
//!
//! With the `parallel` feature (default) these run on rayon; without it
//! they degrade to plain sequential loops. The `*_seq` variants are
//! always sequential so the two paths can be compared directly, e.g. by
//! the bench suite.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::Result;

/// Minimum of `f` over all unordered pairs of `items`.
pub fn try_min_over_pairs<T, F>(items: &[T], f: F) -> Result<Option<u32>>
where
    T: Sync,
    F: Fn(&T, &T) -> Result<u32> + Sync,
{
    let k = items.len();
    if k < 2 {
        return Ok(None);
    }
    let total = k * (k - 1) / 2;

    #[cfg(feature = "parallel")]
    {
        let min = (0..total)
            .into_par_iter()
            .map(|flat| {
                let (i, j) = pair_from_flat(flat, k);
                f(&items[i], &items[j])
            })
            .try_reduce(|| u32::MAX, |a, b| Ok(a.min(b)))?;
        Ok(Some(min))
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = total;
        try_min_over_pairs_seq(items, f)
    }
}

/// Sequential sibling of [`try_min_over_pairs`].
pub fn try_min_over_pairs_seq<T, F>(items: &[T], f: F) -> Result<Option<u32>>
where
    F: Fn(&T, &T) -> Result<u32>,
{
    let k = items.len();
    if k < 2 {
        return Ok(None);
    }
    let mut min = u32::MAX;
    for i in 0..k {
        for j in i + 1..k {
            min = min.min(f(&items[i], &items[j])?);
        }
    }
    Ok(Some(min))
}

/// Map `f` over `0..count` and fold the outputs with a commutative,
/// associative `combine` starting from `identity`.
pub fn map_reduce<T, F, C>(count: u64, f: F, identity: T, combine: C) -> T
where
    T: Send + Sync + Clone,
    F: Fn(u64) -> T + Sync + Send,
    C: Fn(T, T) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..count)
            .into_par_iter()
            .map(f)
            .reduce(|| identity.clone(), &combine)
    }
    #[cfg(not(feature = "parallel"))]
    {
        map_reduce_seq(count, f, identity, combine)
    }
}

/// Sequential sibling of [`map_reduce`].
pub fn map_reduce_seq<T, F, C>(count: u64, f: F, identity: T, combine: C) -> T
where
    F: Fn(u64) -> T,
    C: Fn(T, T) -> T,
{
    (0..count).map(f).fold(identity, combine)
}

/// Unordered pair (i, j), i < j, from a flat index into the C(k, 2)
/// pairs listed row by row.
#[cfg_attr(not(feature = "parallel"), allow(dead_code))]
pub(crate) fn pair_from_flat(flat: usize, k: usize) -> (usize, usize) {
    // row i contributes k-1-i pairs; walk rows (k is small enough that
    // closed-form inversion is not worth the float round-trip)
    let mut i = 0;
    let mut offset = flat;
    loop {
        let row = k - 1 - i;
        if offset < row {
            return (i, i + 1 + offset);
        }
        offset -= row;
        i += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flat_indexing_enumerates_all_pairs() {
        let k = 7;
        let mut seen = std::collections::BTreeSet::new();
        for flat in 0..k * (k - 1) / 2 {
            let (i, j) = pair_from_flat(flat, k);
            assert!(i < j && j < k);
            assert!(seen.insert((i, j)));
        }
        assert_eq!(seen.len(), 21);
    }

    #[test]
    fn par_and_seq_agree() {
        let items: Vec<u32> = vec![9, 4, 7, 1, 13, 2];
        let f = |a: &u32, b: &u32| Ok(a.abs_diff(*b));
        assert_eq!(
            try_min_over_pairs(&items, f).unwrap(),
            try_min_over_pairs_seq(&items, f).unwrap()
        );
        let sum = map_reduce(100, |i| i * i, 0u64, |a, b| a + b);
        assert_eq!(sum, map_reduce_seq(100, |i| i * i, 0u64, |a, b| a + b));
    }
}
