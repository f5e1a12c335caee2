//! Codebook constructions: the almost-disjoint certificate, grouping
//! codes, semi-Latin and design codes, interleaved component codes,
//! layered codes built from Hamming-metric codes, and greedy fallback
//! searches.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::codebook::{Codebook, Metric};
use crate::designs::{validate_semi_latin, verify_design, ResolvableDesign, SemiLatinSquare};
use crate::error::{Error, Result};
use crate::metrics::{code_min_distance, ulam};
use crate::perm::{
    canonical_perm, enumerate_rank_vectors, interleave_blocks, next_permutation,
    OrderedSetPartition, Permutation,
};

use num_traits::ToPrimitive;

/// Parameters of the grouping construction: [n] is split into groups of
/// size 2t+1 that always travel together inside a part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupingParams {
    pub n: u32,
    pub r: u32,
    pub t: u32,
    groups: Vec<Vec<u32>>,
}

impl GroupingParams {
    pub fn new(n: u32, r: u32, t: u32, groups: Vec<Vec<u32>>) -> Result<Self> {
        let d = 2 * t + 1;
        if r == 0 || n == 0 || !n.is_multiple_of(r) || !r.is_multiple_of(d) {
            return Err(Error::ParamInvalid(format!(
                "need (2t+1) | r and r | n, got n={n}, r={r}, t={t}"
            )));
        }
        let mut groups = groups;
        for g in &mut groups {
            if g.len() != d as usize {
                return Err(Error::ParamInvalid("groups must have size 2t+1".into()));
            }
            g.sort_unstable();
        }
        let mut all: Vec<u32> = groups.iter().flatten().copied().collect();
        all.sort_unstable();
        if all != (1..=n).collect::<Vec<_>>() {
            return Err(Error::ParamInvalid("groups must partition [n]".into()));
        }
        Ok(GroupingParams { n, r, t, groups })
    }

    /// The default grouping: consecutive runs of 2t+1 labels.
    pub fn consecutive(n: u32, r: u32, t: u32) -> Result<Self> {
        let d = 2 * t + 1;
        if !n.is_multiple_of(d) {
            return Err(Error::ParamInvalid(format!(
                "(2t+1) = {d} must divide n = {n}"
            )));
        }
        let groups = (0..n / d)
            .map(|j| (j * d + 1..=(j + 1) * d).collect())
            .collect();
        GroupingParams::new(n, r, t, groups)
    }

    pub fn groups(&self) -> &[Vec<u32>] {
        &self.groups
    }
}

/// Result of the almost-disjoint check; a passing code is certified to
/// correct t translocation errors, i.e. to have Ulam distance 2t+1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisjointReport {
    pub pass: bool,
    pub certified_distance: u32,
    pub violation: Option<String>,
}

/// Check that any two words' parts at the same rank are either equal or
/// intersect in fewer than r-2t elements. For design-backed codebooks
/// the property is checked block-to-block, which is equivalent.
pub fn check_almost_disjoint(c: &Codebook, t: u32) -> Result<DisjointReport> {
    if 2 * t >= c.r {
        return Err(Error::ParamInvalid(format!(
            "need 2t < r, got t={t}, r={}",
            c.r
        )));
    }
    let threshold = c.r - 2 * t;
    let fail = |detail: String| DisjointReport {
        pass: false,
        certified_distance: 2 * t + 1,
        violation: Some(detail),
    };

    if let Some(design) = c.design() {
        let blocks: Vec<&Vec<u32>> = design.blocks().map(|(_, b)| b).collect();
        for (i, a) in blocks.iter().enumerate() {
            for b in blocks.iter().skip(i + 1) {
                if a == b {
                    continue;
                }
                let inter = a.iter().filter(|e| b.contains(e)).count() as u32;
                if inter >= threshold {
                    return Ok(fail(format!(
                        "blocks {a:?} and {b:?} intersect in {inter} ≥ {threshold}"
                    )));
                }
            }
        }
    } else {
        let words = c.words().expect("explicit store");
        for (i, a) in words.iter().enumerate() {
            for b in words.iter().skip(i + 1) {
                for (rank, (pa, pb)) in a.parts().iter().zip(b.parts()).enumerate() {
                    if pa == pb {
                        continue;
                    }
                    let inter = pa.iter().filter(|e| pb.contains(e)).count() as u32;
                    if inter >= threshold {
                        return Ok(fail(format!(
                            "words {i} and {} share {inter} ≥ {threshold} labels at rank {}",
                            i + 1,
                            rank + 1
                        )));
                    }
                }
            }
        }
    }
    Ok(DisjointReport {
        pass: true,
        certified_distance: 2 * t + 1,
        violation: None,
    })
}

/// All ordered partitions of [n] into parts of size r that keep every
/// group intact, in lexicographic order of the group-level rank vector.
pub fn grouping_code(params: &GroupingParams, cap: u64) -> Result<Codebook> {
    let d = 2 * params.t + 1;
    let num_groups = params.n / d;
    let groups_per_part = params.r / d;

    let words = enumerate_rank_vectors(num_groups, groups_per_part, cap)?
        .map(|m| {
            let q = (params.n / params.r) as usize;
            let mut parts = vec![Vec::with_capacity(params.r as usize); q];
            for (group_idx, &part_idx) in m.ranks().iter().enumerate() {
                parts[(part_idx - 1) as usize].extend(&params.groups[group_idx]);
            }
            OrderedSetPartition::new(parts).expect("groups partition [n]")
        })
        .collect();
    Codebook::new_explicit(params.n, params.r, d, Metric::UlamR, words)
}

/// The rows of a valid semi-Latin square, one word per row.
pub fn semilatin_code(square: &SemiLatinSquare) -> Result<Codebook> {
    let report = validate_semi_latin(square);
    if !report.pass() {
        return Err(Error::InvalidSquare(format!("{:?}", report.issue)));
    }
    let words = (0..square.side() as usize)
        .map(|i| OrderedSetPartition::new(square.row(i).to_vec()).expect("row partitions [n]"))
        .collect();
    Codebook::new_explicit(
        square.n(),
        square.cell_size(),
        square.cell_size(),
        Metric::UlamR,
        words,
    )
}

/// All orderings of every class of a resolvable Steiner system S(k, r,
/// n); materialized below `cap`, implicit above it.
pub fn design_code(design: &ResolvableDesign, k: u32, target_d: u32, cap: u64) -> Result<Codebook> {
    if target_d.is_multiple_of(2) {
        return Err(Error::DistanceInvalid(format!(
            "d = {target_d} must be odd"
        )));
    }
    if target_d + k > design.r + 1 {
        return Err(Error::DistanceInvalid(format!(
            "need d ≤ r - k + 1 = {}",
            design.r + 1 - k
        )));
    }
    let report = verify_design(design, k, 1);
    if !report.pass() {
        return Err(Error::NotSteiner(format!(
            "{} violations, first: {:?}",
            report.issues.len(),
            report.issues.first()
        )));
    }
    let code = Codebook::new_from_design(design.clone(), target_d, Metric::UlamR)?;
    match code.len().to_u64() {
        Some(len) if len <= cap => {
            let words = code.iter().collect();
            Codebook::new_explicit(design.n, design.r, target_d, Metric::UlamR, words)
        }
        _ => Ok(code),
    }
}

/// A partition of [n] into r parts with a verified permutation code of
/// minimum Ulam distance d over each part.
#[derive(Debug, Clone)]
pub struct ComponentSpec {
    parts: Vec<Vec<u32>>,
    codes: Vec<Vec<Permutation>>,
    pub distance: u32,
}

impl ComponentSpec {
    pub fn new(parts: Vec<Vec<u32>>, codes: Vec<Vec<Permutation>>, distance: u32) -> Result<Self> {
        let r = parts.len() as u32;
        if r == 0 || codes.len() != parts.len() {
            return Err(Error::ParamInvalid("one code per part required".into()));
        }
        let part_len = parts[0].len();
        let n = part_len as u32 * r;
        if parts.iter().any(|p| p.len() != part_len) {
            return Err(Error::ParamInvalid("parts must have equal size".into()));
        }
        if distance as usize > part_len {
            return Err(Error::ParamInvalid(format!(
                "d = {distance} exceeds the part size {part_len}"
            )));
        }
        let mut parts = parts;
        for p in &mut parts {
            p.sort_unstable();
        }
        let mut all: Vec<u32> = parts.iter().flatten().copied().collect();
        all.sort_unstable();
        if all != (1..=n).collect::<Vec<_>>() {
            return Err(Error::ParamInvalid("parts must partition [n]".into()));
        }

        for (index, (part, code)) in parts.iter().zip(&codes).enumerate() {
            if code.is_empty() {
                return Err(Error::ParamInvalid(format!("component {index} is empty")));
            }
            for word in code {
                if word.ground_set() != *part {
                    return Err(Error::ParamInvalid(format!(
                        "component {index} word {word} is not a permutation of its part"
                    )));
                }
            }
            for (i, a) in code.iter().enumerate() {
                for b in code.iter().skip(i + 1) {
                    let found = ulam(a, b)?;
                    if found < distance {
                        return Err(Error::ComponentDistanceUnverified {
                            index,
                            required: distance,
                            found,
                        });
                    }
                }
            }
        }
        Ok(ComponentSpec {
            parts,
            codes,
            distance,
        })
    }

    pub fn parts(&self) -> &[Vec<u32>] {
        &self.parts
    }

    pub fn codes(&self) -> &[Vec<Permutation>] {
        &self.codes
    }

    pub fn num_components(&self) -> u32 {
        self.parts.len() as u32
    }
}

/// One word per component tuple: element-wise interleaving of the tuple,
/// collapsed to its equivalence class.
pub fn interleaved_code(spec: &ComponentSpec) -> Result<Codebook> {
    let r = spec.num_components();
    let n = r * spec.parts[0].len() as u32;
    let mut words = Vec::new();
    let mut indices = vec![0usize; spec.codes.len()];
    loop {
        let tuple: Vec<&[u32]> = indices
            .iter()
            .zip(&spec.codes)
            .map(|(&i, code)| code[i].elements())
            .collect();
        let merged = interleave_blocks(&tuple, 1)?;
        let word = OrderedSetPartition::from_permutation(&Permutation::new(merged)?, r)?;
        words.push(word);

        // odometer over component indices
        let mut pos = indices.len();
        loop {
            if pos == 0 {
                return Codebook::new_explicit(n, r, spec.distance, Metric::UlamR, words);
            }
            pos -= 1;
            indices[pos] += 1;
            if indices[pos] < spec.codes[pos].len() {
                break;
            }
            indices[pos] = 0;
        }
    }
}

/// Layered construction: start from the single class of the identity on
/// the innermost label range and repeatedly block-interleave with
/// Hamming-metric codes on the successive ranges. The supplier is asked
/// for an MPC_H(m, r, d) code over [m] for each level; its words are
/// shifted onto the level's range.
pub fn layered_hamming_code<F>(n: u32, r: u32, d: u32, k: u32, mut supplier: F) -> Result<Codebook>
where
    F: FnMut(u32) -> Result<Codebook>,
{
    if k == 0 || k >= 32 || !n.is_multiple_of(1 << k) {
        return Err(Error::ParamInvalid(format!(
            "n = {n} must be divisible by 2^k (k = {k})"
        )));
    }
    for i in 0..=k {
        if !(n >> i).is_multiple_of(r) {
            return Err(Error::ParamInvalid(format!(
                "n/2^{i} = {} must be a multiple of r = {r}",
                n >> i
            )));
        }
    }
    if d == 0 || d > n >> k {
        return Err(Error::ParamInvalid(format!(
            "d = {d} is not achievable at the innermost level length {}",
            n >> k
        )));
    }

    // innermost single-class code over [n / 2^k]
    let mut current: Vec<Permutation> = vec![Permutation::identity(n >> k)];

    for i in (1..=k).rev() {
        let m = n >> i;
        let level = supplier(m)?;
        if level.n != m || level.r != r {
            return Err(Error::ParamInvalid(format!(
                "supplier returned an ({}, {}) code at level {i}, wanted ({m}, {r})",
                level.n, level.r
            )));
        }
        let level_words = level
            .words()
            .ok_or_else(|| Error::ParamInvalid("level codes must be explicit".into()))?;
        if level_words.len() > 1 {
            let found = code_min_distance(&level, Metric::HammingR, false, u64::MAX)?;
            if found < d {
                return Err(Error::ComponentDistanceUnverified {
                    index: i as usize,
                    required: d,
                    found,
                });
            }
        }

        let mut next = Vec::with_capacity(current.len() * level_words.len());
        for w in &current {
            for word in level_words {
                let shifted: Vec<u32> = canonical_perm(word)
                    .elements()
                    .iter()
                    .map(|e| e + m)
                    .collect();
                let merged = interleave_blocks(&[w.elements(), &shifted], r)?;
                next.push(Permutation::new(merged)?);
            }
        }
        current = next;
    }

    let words = current
        .iter()
        .map(|p| OrderedSetPartition::from_permutation(p, r))
        .collect::<Result<Vec<_>>>()?;
    Codebook::new_explicit(n, r, d, Metric::UlamR, words)
}

/// Maximal permutation code of minimum Ulam distance d over [m], greedy
/// in lexicographic order.
pub fn greedy_perm_ulam_code(m: u32, d: u32, cap: u64) -> Result<Vec<Permutation>> {
    let total = crate::bounds::factorial(m);
    if total.to_u64().filter(|&t| t <= cap).is_none() {
        return Err(Error::size_limit(&total, cap));
    }
    let mut kept: Vec<Permutation> = Vec::new();
    let mut v: Vec<u32> = (1..=m).collect();
    loop {
        let candidate = Permutation::new(v.clone()).expect("labels distinct");
        if kept
            .iter()
            .all(|w| ulam(w, &candidate).expect("same ground set") >= d)
        {
            kept.push(candidate);
        }
        if !next_permutation(&mut v) {
            break;
        }
    }
    Ok(kept)
}

/// Randomized variant: scan `budget` random permutations instead of the
/// full lexicographic order. The result is greedy-compatible but not
/// guaranteed maximal.
pub fn greedy_perm_ulam_code_seeded(
    m: u32,
    d: u32,
    budget: u64,
    seed: u64,
) -> Result<Vec<Permutation>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut kept: Vec<Permutation> = vec![Permutation::identity(m)];
    for _ in 0..budget {
        let mut v: Vec<u32> = (1..=m).collect();
        v.shuffle(&mut rng);
        let candidate = Permutation::new(v).expect("labels distinct");
        if kept
            .iter()
            .all(|w| ulam(w, &candidate).expect("same ground set") >= d)
        {
            kept.push(candidate);
        }
    }
    Ok(kept)
}

/// Maximal Hamming-metric multipermutation code by greedy scan over all
/// rank vectors in lexicographic order.
pub fn greedy_mpc_hamming(n: u32, r: u32, d: u32, cap: u64) -> Result<Codebook> {
    if d == 0 {
        return Err(Error::ParamInvalid("d must be ≥ 1".into()));
    }
    let mut kept: Vec<OrderedSetPartition> = Vec::new();
    for m in enumerate_rank_vectors(n, r, cap)? {
        let candidate = crate::perm::partition_of(&m);
        if kept
            .iter()
            .all(|w| crate::metrics::hamming_r_parts(w, &candidate).expect("same shape") >= d)
        {
            kept.push(candidate);
        }
    }
    Codebook::new_explicit(n, r, d, Metric::HammingR, kept)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics::code_min_distance;
    use crate::perm::DEFAULT_ENUM_CAP;

    fn osp(s: &str) -> OrderedSetPartition {
        s.parse().unwrap()
    }

    #[test]
    fn grouping_code_matches_published_words() {
        let params = GroupingParams::consecutive(12, 6, 1).unwrap();
        let code = grouping_code(&params, DEFAULT_ENUM_CAP).unwrap();
        let words = code.words().unwrap();
        let expect = [
            "1,2,3,4,5,6|7,8,9,10,11,12",
            "1,2,3,7,8,9|4,5,6,10,11,12",
            "1,2,3,10,11,12|4,5,6,7,8,9",
            "4,5,6,7,8,9|1,2,3,10,11,12",
            "4,5,6,10,11,12|1,2,3,7,8,9",
            "7,8,9,10,11,12|1,2,3,4,5,6",
        ];
        assert_eq!(words.len(), 6);
        for (w, e) in words.iter().zip(expect) {
            assert_eq!(w, &osp(e));
        }
        assert_eq!(code.claimed_distance, 3);
    }

    #[test]
    fn grouping_code_singleton_when_n_equals_r() {
        let params = GroupingParams::consecutive(6, 6, 1).unwrap();
        let code = grouping_code(&params, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(code.words().unwrap().len(), 1);
    }

    #[test]
    fn grouping_code_cardinality_formula() {
        // (n/d)! / ((r/d)!)^(n/r) with d = 2t+1
        let params = GroupingParams::consecutive(18, 6, 1).unwrap();
        let code = grouping_code(&params, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(code.words().unwrap().len(), 90); // 6!/(2!)^3
    }

    #[test]
    fn grouping_params_validate() {
        assert!(GroupingParams::consecutive(12, 4, 1).is_err()); // 3 does not divide 4
        assert!(GroupingParams::new(6, 3, 1, vec![vec![1, 2, 3], vec![4, 5, 5]]).is_err());
    }

    #[test]
    fn grouping_code_passes_disjointness() {
        let params = GroupingParams::consecutive(12, 6, 1).unwrap();
        let code = grouping_code(&params, DEFAULT_ENUM_CAP).unwrap();
        let report = check_almost_disjoint(&code, 1).unwrap();
        assert!(report.pass);
        assert_eq!(report.certified_distance, 3);
    }

    #[test]
    fn disjointness_rejects_2t_at_least_r() {
        let words = vec![osp("2,3|1,4"), osp("1,3|2,4")];
        let code = Codebook::new_explicit(4, 2, 1, Metric::UlamR, words).unwrap();
        assert!(matches!(
            check_almost_disjoint(&code, 1),
            Err(Error::ParamInvalid(_))
        ));
        // t = 0 asks only that distinct parts differ, which holds here
        assert!(check_almost_disjoint(&code, 0).unwrap().pass);
    }

    #[test]
    fn semilatin_code_from_fixture() {
        let code = semilatin_code(&crate::designs::fixture_square()).unwrap();
        assert_eq!(code.words().unwrap().len(), 3);
        assert_eq!(code.claimed_distance, 2);
        let d = code_min_distance(&code, Metric::UlamR, true, DEFAULT_ENUM_CAP).unwrap();
        assert!(d >= 2);
        // columns are disjoint, so the t = 0 certificate holds as well
        assert!(check_almost_disjoint(&code, 0).unwrap().pass);
    }

    #[test]
    fn semilatin_code_sizes() {
        let square = crate::designs::make_semi_latin(8, 2).unwrap();
        assert_eq!(semilatin_code(&square).unwrap().words().unwrap().len(), 4);
        let square = crate::designs::make_semi_latin(4, 4).unwrap();
        assert_eq!(semilatin_code(&square).unwrap().words().unwrap().len(), 1);
    }

    #[test]
    fn design_code_sizes_match_lemma() {
        let code = design_code(
            &crate::designs::khare_rbibd(3).unwrap(),
            2,
            1,
            DEFAULT_ENUM_CAP,
        )
        .unwrap();
        assert_eq!(code.words().unwrap().len(), 24);

        let code = design_code(
            &crate::designs::khare_rbibd(5).unwrap(),
            2,
            3,
            DEFAULT_ENUM_CAP,
        )
        .unwrap();
        assert_eq!(code.words().unwrap().len(), 720);
    }

    #[test]
    fn design_code_single_class_single_block() {
        // n = r: one block, one class, one ordering
        let design = crate::designs::ResolvableDesign::new(3, 3, vec![vec![vec![1, 2, 3]]]).unwrap();
        let code = design_code(&design, 2, 1, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(code.words().unwrap().len(), 1);
    }

    #[test]
    fn design_code_goes_implicit_above_cap() {
        let design = crate::designs::khare_rbibd(3).unwrap();
        let code = design_code(&design, 2, 1, 10).unwrap();
        assert!(!code.is_explicit());
        assert_eq!(code.len(), 24u32.into());
    }

    #[test]
    fn design_code_rejects_bad_distance() {
        let design = crate::designs::khare_rbibd(5).unwrap();
        assert!(matches!(
            design_code(&design, 2, 2, DEFAULT_ENUM_CAP),
            Err(Error::DistanceInvalid(_))
        ));
        assert!(matches!(
            design_code(&design, 2, 5, DEFAULT_ENUM_CAP),
            Err(Error::DistanceInvalid(_))
        ));
    }

    fn paper_component_spec() -> ComponentSpec {
        ComponentSpec::new(
            vec![vec![1, 2, 3], vec![4, 5, 6]],
            vec![
                vec!["1,2,3".parse().unwrap(), "3,2,1".parse().unwrap()],
                vec!["4,5,6".parse().unwrap(), "6,5,4".parse().unwrap()],
            ],
            2,
        )
        .unwrap()
    }

    #[test]
    fn interleaved_code_matches_published_example() {
        let code = interleaved_code(&paper_component_spec()).unwrap();
        let words = code.words().unwrap();
        assert_eq!(words.len(), 4);
        let target = OrderedSetPartition::from_permutation(
            &"1,4,2,5,3,6".parse::<Permutation>().unwrap(),
            2,
        )
        .unwrap();
        assert!(words.contains(&target));
        let d = code_min_distance(&code, Metric::UlamR, true, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(d, 2);
    }

    #[test]
    fn interleaved_code_singleton_components() {
        let spec = ComponentSpec::new(
            vec![vec![1, 2], vec![3, 4]],
            vec![vec!["1,2".parse().unwrap()], vec!["3,4".parse().unwrap()]],
            2,
        )
        .unwrap();
        assert_eq!(interleaved_code(&spec).unwrap().words().unwrap().len(), 1);
    }

    #[test]
    fn component_spec_rejects_weak_codes() {
        let err = ComponentSpec::new(
            vec![vec![1, 2, 3], vec![4, 5, 6]],
            vec![
                vec!["1,2,3".parse().unwrap(), "1,3,2".parse().unwrap()],
                vec!["4,5,6".parse().unwrap()],
            ],
            2,
        )
        .unwrap_err();
        assert!(matches!(
            err,
            Error::ComponentDistanceUnverified {
                index: 0,
                required: 2,
                found: 1
            }
        ));
    }

    #[test]
    fn layered_code_matches_published_example() {
        // level code over labels 5..=8 after shifting: two classes at
        // Hamming distance 4
        let code = layered_hamming_code(8, 2, 4, 1, |m| {
            assert_eq!(m, 4);
            let words = vec![
                OrderedSetPartition::from_permutation(&"1,2,3,4".parse().unwrap(), 2).unwrap(),
                OrderedSetPartition::from_permutation(&"3,4,1,2".parse().unwrap(), 2).unwrap(),
            ];
            Codebook::new_explicit(4, 2, 4, Metric::HammingR, words)
        })
        .unwrap();
        let words = code.words().unwrap();
        assert_eq!(words.len(), 2);
        let expect_a = OrderedSetPartition::from_permutation(
            &"1,2,5,6,3,4,7,8".parse::<Permutation>().unwrap(),
            2,
        )
        .unwrap();
        let expect_b = OrderedSetPartition::from_permutation(
            &"1,2,7,8,3,4,5,6".parse::<Permutation>().unwrap(),
            2,
        )
        .unwrap();
        assert!(words.contains(&expect_a) && words.contains(&expect_b));
    }

    #[test]
    fn layered_code_all_singletons() {
        let code = layered_hamming_code(8, 2, 2, 1, |m| {
            let words =
                vec![OrderedSetPartition::from_permutation(&Permutation::identity(m), 2).unwrap()];
            Codebook::new_explicit(m, 2, 2, Metric::HammingR, words)
        })
        .unwrap();
        assert_eq!(code.words().unwrap().len(), 1);
    }

    #[test]
    fn greedy_perm_code_examples() {
        let code = greedy_perm_ulam_code(3, 2, 100).unwrap();
        assert!(code.len() >= 2);
        for (i, a) in code.iter().enumerate() {
            for b in code.iter().skip(i + 1) {
                assert!(ulam(a, b).unwrap() >= 2);
            }
        }

        assert_eq!(greedy_perm_ulam_code(4, 1, 100).unwrap().len(), 24);
        // d = n is unreachable pairwise (max Ulam distance is n-1)
        assert_eq!(greedy_perm_ulam_code(4, 4, 100).unwrap().len(), 1);
        assert!(greedy_perm_ulam_code(10, 2, 100).is_err());
    }

    #[test]
    fn greedy_seeded_is_deterministic() {
        let a = greedy_perm_ulam_code_seeded(5, 3, 200, 7).unwrap();
        let b = greedy_perm_ulam_code_seeded(5, 3, 200, 7).unwrap();
        assert_eq!(a, b);
        for (i, x) in a.iter().enumerate() {
            for y in a.iter().skip(i + 1) {
                assert!(ulam(x, y).unwrap() >= 3);
            }
        }
    }

    #[test]
    fn greedy_hamming_examples() {
        let code = greedy_mpc_hamming(4, 2, 2, 100).unwrap();
        assert_eq!(code.words().unwrap().len(), 6);
        let code = greedy_mpc_hamming(4, 2, 1, 100).unwrap();
        assert_eq!(code.words().unwrap().len(), 6);
        let code = greedy_mpc_hamming(4, 2, 5, 100).unwrap();
        assert_eq!(code.words().unwrap().len(), 1);
    }

    #[test]
    fn greedy_sizes_meet_gv_bounds() {
        use crate::bounds::{ceil_rational, gv_hamming_lower, gv_ulam_lower};
        for (n, r, d) in [(4u32, 2u32, 2u32), (6, 3, 2), (6, 2, 3)] {
            let code = greedy_mpc_hamming(n, r, d, DEFAULT_ENUM_CAP).unwrap();
            let bound = ceil_rational(&gv_hamming_lower(n, r, d).unwrap());
            let size: u64 = code.words().unwrap().len() as u64;
            assert!(
                size >= bound.to_u64().unwrap(),
                "({n},{r},{d}): {size} < {bound}"
            );
        }
        // maximality of the permutation-code scan gives the r = 1 GV ratio
        for (m, d) in [(4u32, 2u32), (5, 2), (5, 3), (6, 3)] {
            let code = greedy_perm_ulam_code(m, d, DEFAULT_ENUM_CAP).unwrap();
            let bound = ceil_rational(&gv_ulam_lower(m, 1, d).unwrap());
            assert!(
                code.len() as u64 >= bound.to_u64().unwrap(),
                "({m},{d}): {} < {bound}",
                code.len()
            );
        }
    }
}
