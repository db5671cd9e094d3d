//! The verifier: exact tampering-experiment distributions, the simulator
//! distribution a non-malleability proof needs, their statistical distance,
//! leakage in bits, and the boundary/counterexample constructions.
//!
//! The central claim under test: when a tamper function fixes more than
//! `n - d_dual` coordinates to constants, the decoded result of tampering a
//! random encoding of `s` has a distribution that does not depend on `s` at
//! all — it equals the simulator distribution built from `H`, the flip
//! vector, the set-to-one vector, and one fair coin per surviving
//! coordinate.

use std::collections::BTreeMap;

use num_rational::BigRational;
use rand::RngCore;

use num_traits::Zero;

use crate::analysis::{all_messages, dual_distance};
use crate::code::LinearCode;
use crate::coset::{decode, encode, encode_all, BitSource, Message};
use crate::dist::{statistical_distance, ExactDistribution, Outcome};
use crate::gf2::BitVec;
use crate::tamper::{BitAction, FamilySpec, TamperFunction};
use crate::{Cap, Error, Result};

/// How non-malleability was certified for one report.
///
/// `SameWitness`: every message decodes to itself with probability 1, so
/// the simulator can always answer "same". `ConstantDistributionWitness`:
/// all per-message distributions coincide, so that common distribution is
/// a valid simulator. `NotProven` makes no claim either way.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Witness {
    SameWitness,
    ConstantDistributionWitness,
    NotProven,
}

impl Witness {
    pub fn as_str(self) -> &'static str {
        match self {
            Witness::SameWitness => "same_witness",
            Witness::ConstantDistributionWitness => "constant_distribution_witness",
            Witness::NotProven => "not_proven",
        }
    }
}

/// Everything one (code, tamper function) verification produces.
#[derive(Debug, Clone)]
pub struct NmReport {
    pub code: String,
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub d_dual: usize,
    pub nm_threshold: usize,
    pub tamper: String,
    pub fixed_count: usize,
    pub condition_met: bool,
    pub max_sd: BigRational,
    pub leakage_bits: f64,
    pub witness: Witness,
    pub per_message: BTreeMap<Message, ExactDistribution>,
    pub df: ExactDistribution,
}

fn check_length(code: &LinearCode, f: &TamperFunction) -> Result<()> {
    if f.len() != code.n() {
        return Err(Error::Shape(format!(
            "tamper function has length {}, code has block length {}",
            f.len(),
            code.n()
        )));
    }
    Ok(())
}

/// Exact distribution of decode(f(x)) for x uniform over the coset of `s`:
/// the tampering experiment, enumerated rather than sampled. Total `2^k`.
pub fn tamper_exact(
    code: &LinearCode,
    f: &TamperFunction,
    s: &Message,
    cap: Cap,
) -> Result<ExactDistribution> {
    check_length(code, f)?;
    let mut counts: BTreeMap<Outcome, u64> = BTreeMap::new();
    for x in encode_all(code, s, cap)? {
        let decoded = decode(code, &f.apply(&x)?)?;
        *counts.entry(Outcome::Value(decoded)).or_insert(0) += 1;
    }
    ExactDistribution::from_counts(counts)
}

/// The simulator distribution: `H·eps XOR H·e XOR Σ h_i·K_i` over all
/// assignments of one fair coin `K_i` per surviving (keep or flip)
/// coordinate, where `h_i` is column `i` of `H`. Total `2^(n - fixed)`.
///
/// This is computable from the tamper function and the code alone — it
/// never looks at a message, which is what makes it a valid simulator.
pub fn df_exact(code: &LinearCode, f: &TamperFunction, cap: Cap) -> Result<ExactDistribution> {
    check_length(code, f)?;
    let st = f.structure();
    let kf = st.kf_coords();
    let assignments = Cap::pow2(kf.len());
    cap.ensure(assignments)?;

    let mut offset = st.eps.clone();
    offset.xor_assign(&st.e);
    let base = code.parity_check().mul_vec(&offset)?;
    let columns: Vec<BitVec> = kf
        .iter()
        .map(|&i| code.parity_check().column(i))
        .collect();

    let mut counts: BTreeMap<Outcome, u64> = BTreeMap::new();
    for coins in 0..assignments {
        let mut word = base.clone();
        for (idx, column) in columns.iter().enumerate() {
            if coins & (1 << idx) != 0 {
                word.xor_assign(column);
            }
        }
        *counts.entry(Outcome::Value(Message(word))).or_insert(0) += 1;
    }
    ExactDistribution::from_counts(counts)
}

/// Monte-Carlo companion of [`tamper_exact`]: empirical counts over
/// `trials` independent encode→tamper→decode runs. Total `trials`;
/// deterministic given the bit source's seed.
pub fn tamper_sampled<R: RngCore>(
    code: &LinearCode,
    f: &TamperFunction,
    s: &Message,
    source: &mut BitSource<R>,
    trials: u64,
) -> Result<ExactDistribution> {
    check_length(code, f)?;
    if trials == 0 {
        return Err(Error::BadParams("trials must be at least 1".into()));
    }
    let mut counts: BTreeMap<Outcome, u64> = BTreeMap::new();
    for _ in 0..trials {
        let x = encode(code, s, source)?;
        let decoded = decode(code, &f.apply(&x)?)?;
        *counts.entry(Outcome::Value(decoded)).or_insert(0) += 1;
    }
    ExactDistribution::from_counts(counts)
}

/// The tampering experiment for every message, keyed by message.
fn per_message_distributions(
    code: &LinearCode,
    f: &TamperFunction,
    cap: Cap,
) -> Result<BTreeMap<Message, ExactDistribution>> {
    cap.ensure(Cap::pow2(code.r()))?;
    let mut per_message = BTreeMap::new();
    for m in all_messages(code.r()) {
        let d = tamper_exact(code, f, &m, cap)?;
        per_message.insert(m, d);
    }
    Ok(per_message)
}

/// Mutual information in bits between a uniform row index and the sampled
/// key, from exact integer counts. Every row must have the same total.
fn mutual_information_bits<K: Ord>(rows: &[BTreeMap<K, u64>]) -> f64 {
    assert!(!rows.is_empty());
    let total: u64 = rows[0].values().sum();
    assert!(rows.iter().all(|r| r.values().sum::<u64>() == total));

    let mut marginal: BTreeMap<&K, u64> = BTreeMap::new();
    for row in rows {
        for (k, &c) in row {
            *marginal.entry(k).or_insert(0) += c;
        }
    }

    let r_count = rows.len() as f64;
    let grand = r_count * total as f64;
    let mut bits = 0.0;
    for row in rows {
        for (k, &c) in row {
            if c == 0 {
                continue;
            }
            // p(m,t)·log2(p(m,t) / (p(m)·p(t))) with the exact integer
            // ratio R·c / marginal inside the logarithm.
            let ratio = (rows.len() as u128 * u128::from(c)) as f64 / marginal[k] as f64;
            bits += (c as f64 / grand) * ratio.log2();
        }
    }
    bits.max(0.0)
}

/// Mutual information between a uniform message and the tampering result —
/// how many bits of the message survive in the decoded output.
pub fn leakage_bits(code: &LinearCode, f: &TamperFunction, cap: Cap) -> Result<f64> {
    let per_message = per_message_distributions(code, f, cap)?;
    Ok(leakage_from_distributions(&per_message))
}

fn leakage_from_distributions(per_message: &BTreeMap<Message, ExactDistribution>) -> f64 {
    let rows: Vec<BTreeMap<&Outcome, u64>> = per_message
        .values()
        .map(|d| d.iter().collect())
        .collect();
    mutual_information_bits(&rows)
}

/// Runs the whole verification for one (code, f) pair.
pub fn verify_theorem(code: &LinearCode, f: &TamperFunction, cap: Cap) -> Result<NmReport> {
    check_length(code, f)?;
    let d_dual = dual_distance(code, cap)?;
    let nm_threshold = code.n() - d_dual;
    let fixed_count = f.fixed_count();
    let condition_met = fixed_count > nm_threshold;

    let per_message = per_message_distributions(code, f, cap)?;
    let df = df_exact(code, f, cap)?;

    let max_sd = per_message
        .values()
        .map(|d| statistical_distance(d, &df))
        .max()
        .expect("at least one message");
    let leakage = leakage_from_distributions(&per_message);

    let witness = classify_witness(&per_message);
    debug_assert!(
        per_message
            .values()
            .chain(std::iter::once(&df))
            .all(|d| d.count(&Outcome::Bottom) == 0),
        "coset decoding is total; bottom must never appear"
    );

    Ok(NmReport {
        code: code.label().to_string(),
        n: code.n(),
        k: code.k(),
        r: code.r(),
        d_dual,
        nm_threshold,
        tamper: f.to_string(),
        fixed_count,
        condition_met,
        max_sd,
        leakage_bits: leakage,
        witness,
        per_message,
        df,
    })
}

fn classify_witness(per_message: &BTreeMap<Message, ExactDistribution>) -> Witness {
    let every_message_survives = per_message
        .iter()
        .all(|(m, d)| d.is_point_mass_on(&Outcome::Value(m.clone())));
    if every_message_survives {
        return Witness::SameWitness;
    }
    let mut dists = per_message.values();
    let first = dists.next().expect("at least one message");
    if dists.all(|d| d.same_distribution(first)) {
        return Witness::ConstantDistributionWitness;
    }
    Witness::NotProven
}

/// For a function with only keep/flip actions, the constant offset it adds
/// to every message: `H·e`. Such functions shift the message
/// deterministically and are the reason the theorem needs set-to-constant
/// coordinates.
pub fn error_only_offset(code: &LinearCode, f: &TamperFunction) -> Result<Message> {
    check_length(code, f)?;
    if let Some(pos) = f.actions().iter().position(|a| a.is_constant()) {
        return Err(Error::NotErrorOnly(pos + 1));
    }
    let st = f.structure();
    Ok(Message(code.parity_check().mul_vec(&st.e)?))
}

/// The boundary construction: keep exactly the support of the first
/// minimum-weight dual codeword (in row-combination counter order), set
/// everything else to zero. The result fixes `n - d_dual` coordinates —
/// one short of the theorem's condition — and provably leaks the parity
/// `λ·m`, which survives tampering unchanged.
///
/// Returns the function together with the row-combination coefficients λ.
pub fn tightness_witness(code: &LinearCode, cap: Cap) -> Result<(TamperFunction, BitVec)> {
    let d_dual = dual_distance(code, cap)?;
    for counter in 1..Cap::pow2(code.r()) {
        let lambda = BitVec::from_counter(code.r(), counter as u64);
        let word = code.parity_check().row_combination(&lambda)?;
        if word.weight() == d_dual {
            let actions = (0..code.n())
                .map(|i| {
                    if word.get(i) {
                        BitAction::Keep
                    } else {
                        BitAction::Zero
                    }
                })
                .collect();
            return Ok((TamperFunction::new(actions), lambda));
        }
    }
    unreachable!("some row combination attains the dual distance");
}

/// Aggregate of a whole-family sweep: how many functions were verified,
/// how many had a perfectly message-independent tampering distribution,
/// and the worst offender.
#[derive(Debug, Clone)]
pub struct SweepSummary {
    pub min_fixed: usize,
    pub total: u64,
    pub sd_zero_count: u64,
    pub max_sd: BigRational,
    pub worst_tamper: String,
}

/// Runs [`verify_theorem`] for every tamper function on `code.n()` bits
/// with at least `min_fixed` constant coordinates, in enumeration order.
pub fn sweep_family(code: &LinearCode, min_fixed: usize, cap: Cap) -> Result<SweepSummary> {
    let spec = FamilySpec::new(code.n(), min_fixed)?;
    let mut total = 0u64;
    let mut sd_zero_count = 0u64;
    let mut max_sd = BigRational::zero();
    let mut worst_tamper: Option<String> = None;
    for f in spec.enumerate(cap)? {
        let report = verify_theorem(code, &f, cap)?;
        total += 1;
        if report.max_sd.is_zero() {
            sd_zero_count += 1;
        }
        if worst_tamper.is_none() || report.max_sd > max_sd {
            max_sd = report.max_sd;
            worst_tamper = Some(report.tamper);
        }
    }
    Ok(SweepSummary {
        min_fixed,
        total,
        sd_zero_count,
        max_sd,
        worst_tamper: worst_tamper.expect("family is never empty"),
    })
}

/// Mutual information between a uniform message and the restriction of a
/// uniform coset element to the observed coordinate set (0-based): what an
/// eavesdropper reading exactly those wires learns about the message.
pub fn wiretap_leakage(code: &LinearCode, positions: &[usize], cap: Cap) -> Result<f64> {
    let mut seen = vec![false; code.n()];
    for &p in positions {
        if p >= code.n() {
            return Err(Error::BadParams(format!(
                "position {} out of range for block length {}",
                p + 1,
                code.n()
            )));
        }
        if seen[p] {
            return Err(Error::BadParams(format!("duplicate position {}", p + 1)));
        }
        seen[p] = true;
    }

    cap.ensure(Cap::pow2(code.r()))?;
    let mut rows: Vec<BTreeMap<BitVec, u64>> = Vec::new();
    for m in all_messages(code.r()) {
        let mut counts: BTreeMap<BitVec, u64> = BTreeMap::new();
        for x in encode_all(code, &m, cap)? {
            *counts.entry(x.bits().restrict(positions)).or_insert(0) += 1;
        }
        rows.push(counts);
    }
    Ok(mutual_information_bits(&rows))
}
