//! Decoders: the generic per-rank intersection rule, the fast grouping
//! decoder, component-wise decoding of interleaved codes, and a generic
//! minimum-distance decoder.
//!
//! Every decoder reports a detected failure on ties or empty candidate
//! sets; none of them guesses.

use crate::codebook::{Codebook, Metric};
use crate::constructions::{ComponentSpec, GroupingParams};
use crate::error::{Error, Result};
use crate::metrics::{hamming_r_parts, ulam, ulam_r_parts};
use crate::perm::{interleave_blocks, project, OrderedSetPartition, Permutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Decoded,
    DetectedFailure,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeResult {
    pub outcome: Outcome,
    /// Present exactly when decoding succeeded.
    pub word: Option<OrderedSetPartition>,
    /// Candidate counts per rank (or per component).
    pub diagnostics: Vec<usize>,
}

impl DecodeResult {
    fn decoded(word: OrderedSetPartition, diagnostics: Vec<usize>) -> Self {
        DecodeResult {
            outcome: Outcome::Decoded,
            word: Some(word),
            diagnostics,
        }
    }

    fn failure(diagnostics: Vec<usize>) -> Self {
        DecodeResult {
            outcome: Outcome::DetectedFailure,
            word: None,
            diagnostics,
        }
    }

    pub fn is_decoded(&self) -> bool {
        self.outcome == Outcome::Decoded
    }
}

fn received_partition(c_n: u32, c_r: u32, omega: &Permutation) -> Result<OrderedSetPartition> {
    if omega.len() as u32 != c_n || !omega.is_canonical() {
        return Err(Error::ParamMismatch(
            "received permutation is not over [n]".into(),
        ));
    }
    OrderedSetPartition::from_permutation(omega, c_r)
}

/// Per-rank intersection decoding for almost-disjoint codes: at every
/// rank the unique candidate part sharing at least r-t labels with the
/// received part is selected. The caller is responsible for having
/// certified the code via `check_almost_disjoint(c, t)`.
pub fn decode_intersection(c: &Codebook, omega: &Permutation, t: u32) -> Result<DecodeResult> {
    let observed = received_partition(c.n, c.r, omega)?;
    let q = observed.num_parts() as usize;
    let need = c.r.saturating_sub(t);

    let mut chosen: Vec<Vec<u32>> = Vec::with_capacity(q);
    let mut diagnostics = Vec::with_capacity(q);
    let mut failed = false;
    for (rank, received) in observed.parts().iter().enumerate() {
        let mut hit: Option<Vec<u32>> = None;
        let mut hits = 0usize;
        for candidate in c.parts_at_rank(rank) {
            let inter = candidate.iter().filter(|e| received.contains(e)).count() as u32;
            if inter >= need {
                hits += 1;
                hit = Some(candidate);
            }
        }
        diagnostics.push(hits);
        if hits == 1 {
            chosen.push(hit.unwrap());
        } else {
            failed = true;
        }
    }
    if failed {
        return Ok(DecodeResult::failure(diagnostics));
    }
    match OrderedSetPartition::new(chosen) {
        Ok(word) if c.contains(&word) => Ok(DecodeResult::decoded(word, diagnostics)),
        _ => Ok(DecodeResult::failure(diagnostics)),
    }
}

/// Grouping decoder: assign each group to the unique rank holding at
/// least t+1 of its labels.
pub fn decode_grouping(params: &GroupingParams, omega: &Permutation) -> Result<DecodeResult> {
    let observed = received_partition(params.n, params.r, omega)?;
    let q = observed.num_parts() as usize;
    let per_part = (params.r / (2 * params.t + 1)) as usize;

    let mut assigned: Vec<Vec<u32>> = vec![Vec::new(); q];
    let mut diagnostics = vec![0usize; q];
    for group in params.groups() {
        let mut target: Option<usize> = None;
        let mut hits = 0usize;
        for (rank, part) in observed.parts().iter().enumerate() {
            let inter = group.iter().filter(|e| part.contains(e)).count() as u32;
            if inter > params.t {
                hits += 1;
                target = Some(rank);
            }
        }
        match (hits, target) {
            (1, Some(rank)) => {
                assigned[rank].extend(group);
                diagnostics[rank] += 1;
            }
            _ => return Ok(DecodeResult::failure(diagnostics)),
        }
    }
    if assigned
        .iter()
        .any(|part| part.len() != per_part * group_size(params))
    {
        return Ok(DecodeResult::failure(diagnostics));
    }
    let word = OrderedSetPartition::new(assigned).expect("groups are disjoint");
    Ok(DecodeResult::decoded(word, diagnostics))
}

fn group_size(params: &GroupingParams) -> usize {
    (2 * params.t + 1) as usize
}

/// Minimum-distance decoding of one component codebook under the plain
/// Ulam distance: returns the index of the unique nearest word within
/// radius t, or None.
pub fn min_distance_component(code: &[Permutation], received: &[u32], t: u32) -> Option<usize> {
    let received = Permutation::new(received.to_vec()).ok()?;
    let mut best = u32::MAX;
    let mut ties = 0usize;
    let mut arg = 0usize;
    for (i, word) in code.iter().enumerate() {
        let d = ulam(word, &received).ok()?;
        if d < best {
            best = d;
            ties = 1;
            arg = i;
        } else if d == best {
            ties += 1;
        }
    }
    (best <= t && ties == 1).then_some(arg)
}

/// Decode an interleaved code component by component: project the
/// received permutation onto each part, decode each projection with the
/// supplied component decoder, and reassemble by interleaving.
pub fn decode_interleaved<F>(
    spec: &ComponentSpec,
    component_decoder: F,
    omega: &Permutation,
) -> Result<DecodeResult>
where
    F: Fn(&[Permutation], &[u32], u32) -> Option<usize>,
{
    let r = spec.num_components();
    let n = r * spec.parts()[0].len() as u32;
    if omega.len() as u32 != n || !omega.is_canonical() {
        return Err(Error::ParamMismatch(
            "received permutation is not over [n]".into(),
        ));
    }
    let t = (spec.distance - 1) / 2;

    let mut decoded: Vec<&Permutation> = Vec::with_capacity(r as usize);
    let mut diagnostics = vec![0usize; r as usize];
    for (i, (part, code)) in spec.parts().iter().zip(spec.codes()).enumerate() {
        let projection = project(omega.elements(), part)?;
        match component_decoder(code, &projection, t) {
            Some(idx) => {
                decoded.push(&code[idx]);
                diagnostics[i] = 1;
            }
            None => return Ok(DecodeResult::failure(diagnostics)),
        }
    }

    let sequences: Vec<&[u32]> = decoded.iter().map(|p| p.elements()).collect();
    let merged = interleave_blocks(&sequences, 1)?;
    let word = OrderedSetPartition::from_permutation(&Permutation::new(merged)?, r)?;
    Ok(DecodeResult::decoded(word, diagnostics))
}

/// Generic minimum-distance decoder over a codebook (streamed for
/// implicit stores, up to `cap` words): decodes only when the nearest
/// word within radius t is unique.
pub fn decode_min_distance(
    c: &Codebook,
    omega: &Permutation,
    metric: Metric,
    t: u32,
    cap: u64,
) -> Result<DecodeResult> {
    let observed = received_partition(c.n, c.r, omega)?;
    let mut best = u32::MAX;
    let mut ties = 0usize;
    let mut nearest: Option<OrderedSetPartition> = None;
    let mut scanned = 0u64;
    for word in c.iter() {
        scanned += 1;
        if scanned > cap {
            return Err(Error::size_limit("codebook stream", cap));
        }
        let d = match metric {
            Metric::HammingR => hamming_r_parts(&observed, &word)?,
            Metric::UlamR => ulam_r_parts(&observed, &word)?,
        };
        if d < best {
            best = d;
            ties = 1;
            nearest = Some(word);
        } else if d == best {
            ties += 1;
        }
    }
    if best <= t && ties == 1 {
        Ok(DecodeResult::decoded(nearest.unwrap(), vec![ties]))
    } else {
        Ok(DecodeResult::failure(vec![ties]))
    }
}
