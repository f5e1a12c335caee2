//! Cardinality bounds for multipermutation codes in the Hamming and
//! Ulam metrics, ball-size bounds, capacity formula evaluation, and an
//! exhaustive optimum for tiny instances.
//!
//! Exact bounds are computed with arbitrary-precision integers and
//! rationals throughout; the only floating-point quantity is the
//! central-limit approximation, which is inherently approximate.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::codebook::Metric;
use crate::error::{Error, Result};
use crate::metrics::{hamming_r_parts, ulam_r_parts};
use crate::perm::{enumerate_rank_vectors, partition_of};

/// Largest n accepted by the exact ball-size summation.
pub const ULAM_BALL_N_CAP: u32 = 30;

/// Default cap on the number of classes explored by
/// [`exhaustive_optimum`].
pub const EXHAUSTIVE_CLASS_CAP: u64 = 100;

pub fn factorial(k: u32) -> BigUint {
    let mut acc = BigUint::one();
    for i in 2..=k as u64 {
        acc *= i;
    }
    acc
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Number of r-regular multipermutations of length n: n!/(r!)^(n/r).
pub fn count_multipermutations(n: u32, r: u32) -> Result<BigUint> {
    if r == 0 || n == 0 || !n.is_multiple_of(r) {
        return Err(Error::NonDivisible { n, r });
    }
    let denom = factorial(r).pow(n / r);
    Ok(factorial(n) / denom)
}

/// Number of length-l sequences over [m] using no symbol more than r
/// times. Convolution over symbols of the truncated exponential
/// polynomial, kept in integers: T_k(j) = Σ_x C(j, x) · T_{k-1}(j - x).
pub fn s_count(l: u32, m: u32, r: u32) -> BigUint {
    let l = l as usize;
    let mut table = vec![BigUint::zero(); l + 1];
    table[0] = BigUint::one();
    for _ in 0..m {
        let mut next = vec![BigUint::zero(); l + 1];
        for (j, slot) in next.iter_mut().enumerate() {
            let mut acc = BigUint::zero();
            for x in 0..=(r as usize).min(j) {
                acc += binomial(j as u64, x as u64) * &table[j - x];
            }
            *slot = acc;
        }
        table = next;
    }
    table[l].clone()
}

fn check_params(n: u32, r: u32, d: u32) -> Result<()> {
    if r == 0 || n == 0 || !n.is_multiple_of(r) {
        return Err(Error::NonDivisible { n, r });
    }
    if d == 0 || d > n {
        return Err(Error::ParamInvalid(format!("d = {d} outside 1..={n}")));
    }
    Ok(())
}

/// Singleton-style bound: (n/r)^(n-d+1).
pub fn singleton_upper(n: u32, r: u32, d: u32) -> Result<BigUint> {
    check_params(n, r, d)?;
    Ok(BigUint::from(n / r).pow(n - d + 1))
}

/// Sharper Singleton intermediate: the truncated sequence count
/// S(n-d+1, n/r, r).
pub fn egf_upper(n: u32, r: u32, d: u32) -> Result<BigUint> {
    check_params(n, r, d)?;
    Ok(s_count(n - d + 1, n / r, r))
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClassicalUppers {
    /// d/(r+d-n), defined only when r + d > n.
    pub luo: Option<BigRational>,
    /// n!/(r·(d-1)!).
    pub huczynska: BigUint,
}

pub fn classical_uppers(n: u32, r: u32, d: u32) -> Result<ClassicalUppers> {
    check_params(n, r, d)?;
    let luo = if r + d > n {
        Some(BigRational::new(BigInt::from(d), BigInt::from(r + d - n)))
    } else {
        None
    };
    let numer = factorial(n);
    let denom = BigUint::from(r) * factorial(d - 1);
    let huczynska = &numer / &denom;
    Ok(ClassicalUppers { luo, huczynska })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CltBound {
    pub value: f64,
    /// Whether (n-d+1)/(n/r) exceeds 10, the stated domain of the
    /// approximation.
    pub valid: bool,
}

/// Central-limit approximation to the truncated sequence-count bound:
/// (n/r)^(n-d+1) · Φ((n + 2(d-1)r) / (2·sqrt(n(n-d+1)r))). Tracks the
/// published numeric table, which applies the normal CDF once.
pub fn clt_upper(n: u32, r: u32, d: u32) -> Result<CltBound> {
    check_params(n, r, d)?;
    let (nf, rf, df) = (n as f64, r as f64, d as f64);
    let arg = (nf + 2.0 * (df - 1.0) * rf) / (2.0 * (nf * (nf - df + 1.0) * rf).sqrt());
    let value = (nf / rf).powf(nf - df + 1.0) * normal_cdf(arg);
    let valid = (nf - df + 1.0) / (nf / rf) > 10.0;
    Ok(CltBound { value, valid })
}

/// Standard normal CDF.
pub fn normal_cdf(x: f64) -> f64 {
    0.5 * libm::erfc(-x / std::f64::consts::SQRT_2)
}

/// Gilbert–Varshamov lower bound in the Hamming metric:
/// n! / ((r!)^(n/r) · C(n, d-1) · (n/r)^(d-1)), exact.
pub fn gv_hamming_lower(n: u32, r: u32, d: u32) -> Result<BigRational> {
    check_params(n, r, d)?;
    let numer = factorial(n);
    let denom = factorial(r).pow(n / r)
        * binomial(n as u64, (d - 1) as u64)
        * BigUint::from(n / r).pow(d - 1);
    Ok(BigRational::new(numer.into(), denom.into()))
}

/// Gilbert–Varshamov lower bound in the Ulam metric:
/// (n-d+1)! / (C(n, d-1) · (r!)^(2n/r)), exact.
pub fn gv_ulam_lower(n: u32, r: u32, d: u32) -> Result<BigRational> {
    check_params(n, r, d)?;
    let numer = factorial(n - d + 1);
    let denom = binomial(n as u64, (d - 1) as u64) * factorial(r).pow(2 * n / r);
    Ok(BigRational::new(numer.into(), denom.into()))
}

/// Smallest integer ≥ the bound; a code of that size exists when the
/// bound comes from a Gilbert-style argument.
pub fn ceil_rational(x: &BigRational) -> BigUint {
    let ceil = x.ceil();
    let int = ceil.to_integer();
    if int.is_negative() {
        BigUint::zero()
    } else {
        int.to_biguint().expect("non-negative")
    }
}

/// Upper bound on the radius-u ball size under the r-regular Ulam
/// distance: A·B·(r!)^(n/r), with A counting rank-bounded subsequences
/// of a class member and B the partitions extending one of them, both
/// summed exactly over the composition lattice.
pub fn ulam_ball_upper(n: u32, r: u32, u: u32) -> Result<BigUint> {
    if r == 0 || n == 0 || !n.is_multiple_of(r) {
        return Err(Error::NonDivisible { n, r });
    }
    if u > n {
        return Err(Error::ParamInvalid(format!("radius {u} exceeds n = {n}")));
    }
    if n > ULAM_BALL_N_CAP {
        return Err(Error::size_limit(n, ULAM_BALL_N_CAP as u64));
    }
    let q = n / r;
    let l = (n - u) as usize;

    // A: DP over parts, weight r!/(r-x)! for taking x elements in order
    let mut falling = vec![BigUint::one(); r as usize + 1];
    for x in 1..=r as usize {
        falling[x] = &falling[x - 1] * (r as u64 - x as u64 + 1);
    }
    let mut a_table = vec![BigUint::zero(); l + 1];
    a_table[0] = BigUint::one();
    for _ in 0..q {
        let mut next = vec![BigUint::zero(); l + 1];
        for (j, slot) in next.iter_mut().enumerate() {
            let mut acc = BigUint::zero();
            for x in 0..=(r as usize).min(j) {
                acc += &falling[x] * &a_table[j - x];
            }
            *slot = acc;
        }
        a_table = next;
    }
    let a = a_table[l].clone();

    // B: partitions whose parts absorb the remaining u labels, which is
    // the truncated sequence count again
    let b = s_count(u, q, r);

    Ok(a * b * factorial(r).pow(q))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CapacityParams {
    pub rho: f64,
    pub delta: f64,
}

impl CapacityParams {
    pub fn new(rho: f64, delta: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&rho) || !(0.0..=1.0).contains(&delta) {
            return Err(Error::ParamInvalid(
                "rho and delta must lie in [0, 1]".into(),
            ));
        }
        Ok(CapacityParams { rho, delta })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CapacityBounds {
    pub hamming: f64,
    pub ulam_lower: f64,
    pub ulam_upper: f64,
    /// True when a raw formula value fell outside [0, 1] and was
    /// clamped.
    pub clamped: bool,
}

/// Asymptotic capacity formulas: exact in the Hamming metric, a
/// lower/upper pair in the Ulam metric. Raw values are clamped to
/// [0, 1]; the flag reports when clamping occurred.
pub fn capacity(params: CapacityParams) -> CapacityBounds {
    let CapacityParams { rho, delta } = params;
    let raw = [
        (1.0 - rho) * (1.0 - delta),
        (1.0 - delta) * (1.0 - 2.0 * rho),
        (1.0 - delta) * (1.0 - rho),
    ];
    let clamped = raw.iter().any(|v| !(0.0..=1.0).contains(v));
    let c = |v: f64| v.clamp(0.0, 1.0);
    CapacityBounds {
        hamming: c(raw[0]),
        ulam_lower: c(raw[1]),
        ulam_upper: c(raw[2]),
        clamped,
    }
}

/// Exact maximum codebook size on a tiny instance, by maximum-clique
/// search over the graph whose vertices are all classes of M(n, r) and
/// whose edges join classes at distance ≥ d.
pub fn exhaustive_optimum(n: u32, r: u32, d: u32, metric: Metric, class_cap: u64) -> Result<u64> {
    check_params(n, r, d)?;
    let count = count_multipermutations(n, r)?;
    if count.to_u64().filter(|&c| c <= class_cap).is_none() {
        return Err(Error::size_limit(&count, class_cap));
    }
    let classes: Vec<_> = enumerate_rank_vectors(n, r, class_cap)?
        .map(|m| partition_of(&m))
        .collect();
    let k = classes.len();
    if d == 1 {
        // distinct classes are always at distance ≥ 1
        return Ok(k as u64);
    }

    let mut adj = vec![vec![false; k]; k];
    for i in 0..k {
        for j in i + 1..k {
            let dist = match metric {
                Metric::HammingR => hamming_r_parts(&classes[i], &classes[j])?,
                Metric::UlamR => ulam_r_parts(&classes[i], &classes[j])?,
            };
            if dist >= d {
                adj[i][j] = true;
                adj[j][i] = true;
            }
        }
    }

    let mut best = 0usize;
    let mut current = Vec::new();
    let candidates: Vec<usize> = (0..k).collect();
    max_clique(&adj, &mut current, candidates, &mut best);
    Ok(best as u64)
}

fn max_clique(
    adj: &[Vec<bool>],
    current: &mut Vec<usize>,
    candidates: Vec<usize>,
    best: &mut usize,
) {
    if current.len() + candidates.len() <= *best {
        return;
    }
    if candidates.is_empty() {
        *best = (*best).max(current.len());
        return;
    }
    // pivot on the candidate with most candidate-neighbours
    let pivot = *candidates
        .iter()
        .max_by_key(|&&v| candidates.iter().filter(|&&u| adj[v][u]).count())
        .unwrap();
    let branch: Vec<usize> = candidates
        .iter()
        .copied()
        .filter(|&v| v == pivot || !adj[pivot][v])
        .collect();
    let mut remaining = candidates;
    for v in branch {
        remaining.retain(|&u| u != v);
        let next: Vec<usize> = remaining.iter().copied().filter(|&u| adj[v][u]).collect();
        current.push(v);
        max_clique(adj, current, next, best);
        current.pop();
    }
    *best = (*best).max(current.len());
}

#[derive(Debug, Clone)]
pub struct BoundsReport {
    pub n: u32,
    pub r: u32,
    pub d: u32,
    pub luo: Option<BigRational>,
    pub huczynska: BigUint,
    pub singleton: BigUint,
    pub egf: BigUint,
    pub clt: CltBound,
    pub gv_hamming: BigRational,
    pub gv_ulam: BigRational,
}

/// All bounds at one parameter point, with the lower-vs-upper
/// consistency check applied.
pub fn bounds_report(n: u32, r: u32, d: u32) -> Result<BoundsReport> {
    let ClassicalUppers { luo, huczynska } = classical_uppers(n, r, d)?;
    let singleton = singleton_upper(n, r, d)?;
    let egf = egf_upper(n, r, d)?;
    let clt = clt_upper(n, r, d)?;
    let gv_hamming = gv_hamming_lower(n, r, d)?;
    let gv_ulam = gv_ulam_lower(n, r, d)?;

    let mut min_upper = BigRational::from_integer(BigInt::from(egf.clone()));
    let huc = BigRational::from_integer(BigInt::from(huczynska.clone()));
    if huc < min_upper {
        min_upper = huc;
    }
    if let Some(l) = &luo {
        if *l < min_upper {
            min_upper = l.clone();
        }
    }
    if gv_hamming > min_upper || gv_ulam > min_upper {
        return Err(Error::ParamInvalid(format!(
            "bound inconsistency at n={n}, r={r}, d={d}"
        )));
    }

    Ok(BoundsReport {
        n,
        r,
        d,
        luo,
        huczynska,
        singleton,
        egf,
        clt,
        gv_hamming,
        gv_ulam,
    })
}
