//! Error processes and the Monte Carlo harness: translocations, random
//! translocation channels, rank-displacement errors, and reproducible
//! simulation campaigns.
//!
//! All randomness flows from explicit seeds through a named generator
//! (ChaCha8); trial k draws from substream k, so parallel and
//! sequential runs produce identical statistics.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::codebook::{Codebook, Metric};
use crate::constructions::GroupingParams;
use crate::decode::{decode_grouping, decode_intersection, decode_min_distance};
use crate::error::{Error, Result};
use crate::exec;
use crate::perm::{OrderedSetPartition, Permutation, DEFAULT_ENUM_CAP};

/// Move the element at position `from` to position `to`, shifting the
/// elements in between by one. `from == to` is the identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Translocation {
    pub from: u32,
    pub to: u32,
}

impl Translocation {
    /// Positions are 1-based; range checks happen on application, where
    /// the permutation length is known.
    pub fn new(from: u32, to: u32) -> Self {
        Translocation { from, to }
    }
}

/// Compose a permutation with a translocation acting on positions.
pub fn apply_translocation(p: &Permutation, phi: Translocation) -> Result<Permutation> {
    let n = p.len() as u32;
    for pos in [phi.from, phi.to] {
        if pos == 0 || pos > n {
            return Err(Error::PositionOutOfRange { pos, n });
        }
    }
    let mut elements = p.elements().to_vec();
    let moved = elements.remove(phi.from as usize - 1);
    elements.insert(phi.to as usize - 1, moved);
    Permutation::new(elements)
}

/// Apply `t` uniformly random translocations (ordered pairs with
/// distinct endpoints), deterministically for a given seed.
pub fn random_translocations(
    p: &Permutation,
    t: u32,
    seed: u64,
) -> (Permutation, Vec<Translocation>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_translocations_with(p, t, &mut rng)
}

fn random_translocations_with<R: Rng + ?Sized>(
    p: &Permutation,
    t: u32,
    rng: &mut R,
) -> (Permutation, Vec<Translocation>) {
    let n = p.len() as u32;
    let mut current = p.clone();
    let mut applied = Vec::with_capacity(t as usize);
    for _ in 0..t {
        let from = rng.random_range(1..=n);
        let mut to = rng.random_range(1..=n - 1);
        if to >= from {
            to += 1;
        }
        let phi = Translocation { from, to };
        current = apply_translocation(&current, phi).expect("positions in range");
        applied.push(phi);
    }
    (current, applied)
}

/// Displace at most `t` labels of every rank: each of `t` rounds picks a
/// random cycle of parts and rotates one random label along it, so part
/// sizes are preserved and |o(i) ∩ out(i)| ≥ r - t for every rank.
pub fn rank_displacement_errors(o: &OrderedSetPartition, t: u32, seed: u64) -> OrderedSetPartition {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rank_displacement_with(o, t, &mut rng)
}

fn rank_displacement_with<R: Rng + ?Sized>(
    o: &OrderedSetPartition,
    t: u32,
    rng: &mut R,
) -> OrderedSetPartition {
    let q = o.num_parts() as usize;
    let mut parts: Vec<Vec<u32>> = o.parts().to_vec();
    for _ in 0..t {
        let cycle_len = rng.random_range(0..=q);
        if cycle_len < 2 {
            continue;
        }
        let mut order: Vec<usize> = (0..q).collect();
        order.shuffle(rng);
        order.truncate(cycle_len);

        // pick one victim per selected part, then rotate them
        let victims: Vec<u32> = order
            .iter()
            .map(|&pi| {
                let idx = rng.random_range(0..parts[pi].len());
                parts[pi].remove(idx)
            })
            .collect();
        for (step, &pi) in order.iter().enumerate() {
            let incoming = victims[(step + cycle_len - 1) % cycle_len];
            parts[pi].push(incoming);
        }
    }
    OrderedSetPartition::new(parts).expect("rotation preserves the partition")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorModel {
    Translocation,
    RankDisplacement,
}

impl std::str::FromStr for ErrorModel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "translocation" => Ok(ErrorModel::Translocation),
            "rank-displacement" => Ok(ErrorModel::RankDisplacement),
            other => Err(Error::ParamInvalid(format!(
                "unknown error model {other:?}"
            ))),
        }
    }
}

/// Decoder selection for simulation runs.
#[derive(Debug, Clone)]
pub enum SimDecoder {
    Intersection,
    Grouping(GroupingParams),
    MinDistance(Metric),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct TrialStats {
    pub trials: u64,
    pub decoded_correct: u64,
    pub detected_failures: u64,
    pub miscorrections: u64,
    pub seed: u64,
}

impl TrialStats {
    pub fn success_rate(&self) -> f64 {
        if self.trials == 0 {
            1.0
        } else {
            self.decoded_correct as f64 / self.trials as f64
        }
    }
}

/// Monte Carlo campaign: per trial, draw a uniform codeword and a
/// uniform member of its class, corrupt it, decode, and classify.
pub fn simulate(
    c: &Codebook,
    decoder: &SimDecoder,
    model: ErrorModel,
    t: u32,
    trials: u64,
    seed: u64,
) -> Result<TrialStats> {
    run_simulation(c, decoder, model, t, trials, seed, false)
}

/// Sequential sibling of [`simulate`]; produces identical statistics.
pub fn simulate_seq(
    c: &Codebook,
    decoder: &SimDecoder,
    model: ErrorModel,
    t: u32,
    trials: u64,
    seed: u64,
) -> Result<TrialStats> {
    run_simulation(c, decoder, model, t, trials, seed, true)
}

fn run_simulation(
    c: &Codebook,
    decoder: &SimDecoder,
    model: ErrorModel,
    t: u32,
    trials: u64,
    seed: u64,
    sequential: bool,
) -> Result<TrialStats> {
    // fail fast on configuration errors before spawning trials
    if let SimDecoder::Grouping(params) = decoder {
        if params.n != c.n || params.r != c.r {
            return Err(Error::ParamMismatch(
                "grouping parameters do not match the codebook".into(),
            ));
        }
    }

    let trial = |k: u64| -> (u64, u64, u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(k + 1);

        let stored = c.sample_word(&mut rng);
        let member = random_class_member(&stored, &mut rng);

        let omega = match model {
            ErrorModel::Translocation => random_translocations_with(&member, t, &mut rng).0,
            ErrorModel::RankDisplacement => {
                let corrupted = rank_displacement_with(&stored, t, &mut rng);
                random_class_member(&corrupted, &mut rng)
            }
        };

        let result = match decoder {
            SimDecoder::Intersection => decode_intersection(c, &omega, t),
            SimDecoder::Grouping(params) => decode_grouping(params, &omega),
            SimDecoder::MinDistance(metric) => {
                decode_min_distance(c, &omega, *metric, t, DEFAULT_ENUM_CAP)
            }
        };
        match result {
            Ok(r) if r.is_decoded() => {
                if r.word.as_ref() == Some(&stored) {
                    (1, 0, 0)
                } else {
                    (0, 0, 1)
                }
            }
            _ => (0, 1, 0),
        }
    };

    let add = |a: (u64, u64, u64), b: (u64, u64, u64)| (a.0 + b.0, a.1 + b.1, a.2 + b.2);
    let (correct, detected, miscorrected) = if sequential {
        exec::map_reduce_seq(trials, trial, (0, 0, 0), add)
    } else {
        exec::map_reduce(trials, trial, (0, 0, 0), add)
    };

    Ok(TrialStats {
        trials,
        decoded_correct: correct,
        detected_failures: detected,
        miscorrections: miscorrected,
        seed,
    })
}

/// Uniform member of a partition's equivalence class: shuffle each part
/// internally and concatenate in rank order.
fn random_class_member<R: Rng + ?Sized>(o: &OrderedSetPartition, rng: &mut R) -> Permutation {
    let mut elements = Vec::with_capacity(o.n() as usize);
    for part in o.parts() {
        let mut block = part.clone();
        block.shuffle(rng);
        elements.extend(block);
    }
    Permutation::new(elements).expect("partition labels are distinct")
}
