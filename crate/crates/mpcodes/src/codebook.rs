//! Codebooks: sets of ordered set partitions with declared parameters.
//!
//! Small codes hold their words explicitly. Design-based codes, whose
//! word count grows as m·(n/r)!, can instead stay implicit: they expose
//! exact cardinality, membership testing, and streaming enumeration,
//! which is all the decoders and verifiers consume.

use std::borrow::Cow;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::designs::ResolvableDesign;
use crate::error::{Error, Result};
use crate::perm::OrderedSetPartition;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Metric {
    HammingR,
    UlamR,
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Metric::HammingR => write!(f, "hamming-r"),
            Metric::UlamR => write!(f, "ulam-r"),
        }
    }
}

impl FromStr for Metric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hamming-r" => Ok(Metric::HammingR),
            "ulam-r" => Ok(Metric::UlamR),
            other => Err(Error::ParamInvalid(format!("unknown metric {other:?}"))),
        }
    }
}

#[derive(Debug, Clone)]
enum WordStore {
    Explicit(Vec<OrderedSetPartition>),
    /// All orderings of every class of the design.
    DesignClasses(ResolvableDesign),
}

#[derive(Debug, Clone)]
pub struct Codebook {
    pub n: u32,
    pub r: u32,
    pub claimed_distance: u32,
    pub metric: Metric,
    store: WordStore,
}

impl Codebook {
    pub fn new_explicit(
        n: u32,
        r: u32,
        claimed_distance: u32,
        metric: Metric,
        words: Vec<OrderedSetPartition>,
    ) -> Result<Self> {
        if claimed_distance == 0 {
            return Err(Error::ParamInvalid("claimed distance must be ≥ 1".into()));
        }
        if r == 0 || n == 0 || !n.is_multiple_of(r) {
            return Err(Error::NonDivisible { n, r });
        }
        let mut seen = BTreeSet::new();
        for w in &words {
            if w.n() != n || w.part_size() != r {
                return Err(Error::ParamMismatch(
                    "codeword does not match the code parameters".into(),
                ));
            }
            if !seen.insert(w.clone()) {
                return Err(Error::ParamInvalid(
                    "codewords must be distinct partitions".into(),
                ));
            }
        }
        Ok(Codebook {
            n,
            r,
            claimed_distance,
            metric,
            store: WordStore::Explicit(words),
        })
    }

    /// Implicit codebook: one word per ordering of each class's blocks.
    pub fn new_from_design(
        design: ResolvableDesign,
        claimed_distance: u32,
        metric: Metric,
    ) -> Result<Self> {
        if claimed_distance == 0 {
            return Err(Error::ParamInvalid("claimed distance must be ≥ 1".into()));
        }
        Ok(Codebook {
            n: design.n,
            r: design.r,
            claimed_distance,
            metric,
            store: WordStore::DesignClasses(design),
        })
    }

    pub fn is_explicit(&self) -> bool {
        matches!(self.store, WordStore::Explicit(_))
    }

    pub fn design(&self) -> Option<&ResolvableDesign> {
        match &self.store {
            WordStore::DesignClasses(d) => Some(d),
            WordStore::Explicit(_) => None,
        }
    }

    /// Exact number of codewords (equivalence classes).
    pub fn len(&self) -> BigUint {
        match &self.store {
            WordStore::Explicit(words) => BigUint::from(words.len()),
            WordStore::DesignClasses(design) => {
                let q = (design.n / design.r) as u64;
                let orderings: BigUint = (1..=q).map(BigUint::from).product();
                BigUint::from(design.num_classes()) * orderings
            }
        }
    }

    pub fn is_empty(&self) -> bool {
        use num_traits::Zero;
        self.len().is_zero()
    }

    pub fn words(&self) -> Option<&[OrderedSetPartition]> {
        match &self.store {
            WordStore::Explicit(words) => Some(words),
            WordStore::DesignClasses(_) => None,
        }
    }

    pub fn contains(&self, word: &OrderedSetPartition) -> bool {
        match &self.store {
            WordStore::Explicit(words) => words.contains(word),
            WordStore::DesignClasses(design) => {
                if word.n() != design.n || word.part_size() != design.r {
                    return false;
                }
                let class = match design
                    .classes()
                    .iter()
                    .position(|c| c.contains(&word.parts()[0]))
                {
                    Some(ci) => &design.classes()[ci],
                    None => return false,
                };
                let mut used = vec![false; class.len()];
                for part in word.parts() {
                    match class.iter().position(|b| b == part) {
                        Some(bi) if !used[bi] => used[bi] = true,
                        _ => return false,
                    }
                }
                true
            }
        }
    }

    /// Streaming enumeration; for design stores this walks every class
    /// and, within a class, every block ordering lexicographically.
    pub fn iter(&self) -> WordIter<'_> {
        match &self.store {
            WordStore::Explicit(words) => WordIter::Explicit(words.iter()),
            WordStore::DesignClasses(design) => WordIter::Design {
                design,
                class: 0,
                arrangement: (0..(design.n / design.r) as usize).collect(),
                exhausted: false,
            },
        }
    }

    /// All words as a slice, materializing implicit stores up to `cap`.
    pub fn materialized(&self, cap: u64) -> Result<Cow<'_, [OrderedSetPartition]>> {
        match &self.store {
            WordStore::Explicit(words) => Ok(Cow::Borrowed(words)),
            WordStore::DesignClasses(_) => {
                let len = self.len();
                if len.to_u64().filter(|&l| l <= cap).is_none() {
                    return Err(Error::size_limit(&len, cap));
                }
                Ok(Cow::Owned(self.iter().collect()))
            }
        }
    }

    /// Uniform random codeword.
    pub fn sample_word<R: Rng + ?Sized>(&self, rng: &mut R) -> OrderedSetPartition {
        match &self.store {
            WordStore::Explicit(words) => words[rng.random_range(0..words.len())].clone(),
            WordStore::DesignClasses(design) => {
                let class = &design.classes()[rng.random_range(0..design.num_classes())];
                let mut blocks: Vec<Vec<u32>> = class.clone();
                blocks.shuffle(rng);
                OrderedSetPartition::new(blocks).expect("class blocks partition [n]")
            }
        }
    }

    /// Candidate parts that may occur at a given rank, deduplicated.
    /// For design stores every block is a candidate at every rank.
    pub fn parts_at_rank(&self, rank: usize) -> Vec<Vec<u32>> {
        match &self.store {
            WordStore::Explicit(words) => {
                let set: BTreeSet<Vec<u32>> =
                    words.iter().map(|w| w.parts()[rank].clone()).collect();
                set.into_iter().collect()
            }
            WordStore::DesignClasses(design) => design.blocks().map(|(_, b)| b.clone()).collect(),
        }
    }
}

pub enum WordIter<'a> {
    Explicit(std::slice::Iter<'a, OrderedSetPartition>),
    Design {
        design: &'a ResolvableDesign,
        class: usize,
        arrangement: Vec<usize>,
        exhausted: bool,
    },
}

impl Iterator for WordIter<'_> {
    type Item = OrderedSetPartition;

    fn next(&mut self) -> Option<Self::Item> {
        match self {
            WordIter::Explicit(it) => it.next().cloned(),
            WordIter::Design {
                design,
                class,
                arrangement,
                exhausted,
            } => {
                if *exhausted || *class >= design.num_classes() {
                    return None;
                }
                let blocks = &design.classes()[*class];
                let parts: Vec<Vec<u32>> =
                    arrangement.iter().map(|&bi| blocks[bi].clone()).collect();
                let word = OrderedSetPartition::new(parts).expect("blocks partition [n]");
                if !crate::perm::next_permutation(arrangement) {
                    *class += 1;
                    for (i, slot) in arrangement.iter_mut().enumerate() {
                        *slot = i;
                    }
                    if *class >= design.num_classes() {
                        *exhausted = true;
                    }
                }
                Some(word)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::designs::khare_rbibd;

    #[test]
    fn explicit_rejects_duplicates_and_mismatches() {
        let w: OrderedSetPartition = "2,3|1,4".parse().unwrap();
        assert!(matches!(
            Codebook::new_explicit(4, 2, 1, Metric::UlamR, vec![w.clone(), w.clone()]),
            Err(Error::ParamInvalid(_))
        ));
        let short: OrderedSetPartition = "1|2".parse().unwrap();
        assert!(Codebook::new_explicit(4, 2, 1, Metric::UlamR, vec![short]).is_err());
    }

    #[test]
    fn design_store_counts_and_enumerates() {
        let design = khare_rbibd(3).unwrap();
        let code = Codebook::new_from_design(design, 1, Metric::UlamR).unwrap();
        assert_eq!(code.len(), BigUint::from(24u32)); // 4 classes × 3!
        let words: Vec<_> = code.iter().collect();
        assert_eq!(words.len(), 24);
        let distinct: BTreeSet<_> = words.iter().cloned().collect();
        assert_eq!(distinct.len(), 24);
        for w in &words {
            assert!(code.contains(w));
        }
        let absent: OrderedSetPartition = "1,2,4|3,5,6|7,8,9".parse().unwrap();
        assert!(!code.contains(&absent));
    }

    #[test]
    fn design_membership_requires_a_single_class() {
        // a non-Steiner two-class design over [4] leaves a third
        // partition of [4] outside the codebook
        let design = crate::designs::ResolvableDesign::new(
            4,
            2,
            vec![vec![vec![1, 2], vec![3, 4]], vec![vec![1, 3], vec![2, 4]]],
        )
        .unwrap();
        let code = Codebook::new_from_design(design, 1, Metric::UlamR).unwrap();
        assert!(code.contains(&"3,4|1,2".parse().unwrap()));
        assert!(!code.contains(&"1,4|2,3".parse().unwrap()));
    }

    #[test]
    fn materialization_respects_cap() {
        let design = khare_rbibd(3).unwrap();
        let code = Codebook::new_from_design(design, 1, Metric::UlamR).unwrap();
        assert!(code.materialized(10).is_err());
        assert_eq!(code.materialized(24).unwrap().len(), 24);
    }

    #[test]
    fn metric_text_roundtrip() {
        for m in [Metric::HammingR, Metric::UlamR] {
            assert_eq!(m.to_string().parse::<Metric>().unwrap(), m);
        }
        assert!("kendall".parse::<Metric>().is_err());
    }
}
