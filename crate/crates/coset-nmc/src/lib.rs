//! Linear coset-coding over GF(2), used as a non-malleable code against
//! bit-wise independent tampering.
//!
//! A message `m` of length `r` is encoded by drawing a uniformly random
//! word `x` with syndrome `H x = m` for an `r x n` parity-check matrix `H`;
//! decoding is the single matrix-vector product `H x`. When a tampering
//! function sets enough codeword bits to constants (more than `n - d⊥`,
//! with `d⊥` the minimum distance of the dual code), the decoded result is
//! distributed independently of the message. This crate constructs such
//! codes, computes the relevant code parameters (`d`, `d⊥`, generalized
//! weights), runs tampering experiments by exact enumeration and by
//! sampling, builds the message-independent reference distribution, and
//! measures leakage in bits for both tampering and wire-tap style
//! observation.
//!
//! Start with the runnable examples (`cargo run --example profile_code`)
//! or the `coset-nmc` binary, which exposes the same operations as
//! subcommands emitting JSON reports.
//!
//! All exhaustive operations take a [`Cap`] bounding the enumeration size;
//! exceeding it is an error, never a silent truncation. Distributions are
//! kept as exact integer counts so that "identically distributed" is
//! decided with no floating-point tolerance.

pub mod analysis;
pub mod cli;
pub mod code;
pub mod coset;
pub mod dist;
pub mod formats;
pub mod gf2;
pub mod report;
pub mod tamper;
pub mod verify;

use thiserror::Error as ThisError;

pub use analysis::{
    dual_distance, generalized_weights, min_distance, oa_strength_holds, profile, CodeProfile,
};
pub use code::{CodeSpec, LinearCode};
pub use coset::{decode, encode, encode_all, BitSource, Codeword, Message};
pub use dist::{statistical_distance, ExactDistribution, Outcome};
pub use gf2::{dot, BitMatrix, BitVec};
pub use tamper::{BitAction, FamilySpec, TamperFunction, TamperStructure};
pub use verify::{
    df_exact, error_only_offset, leakage_bits, sweep_family, tamper_exact, tamper_sampled,
    tightness_witness, verify_theorem, wiretap_leakage, NmReport, SweepSummary, Witness,
};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, ThisError)]
pub enum Error {
    /// Dimension mismatch between operands.
    #[error("shape: {0}")]
    Shape(String),

    /// A parity-check matrix whose rows are linearly dependent; see
    /// [`code::reduce_parity_check`] to row-reduce instead.
    #[error("redundant-rows: matrix has rank {rank}, expected {rows} independent rows")]
    RedundantRows { rank: usize, rows: usize },

    #[error("bad-params: {0}")]
    BadParams(String),

    /// Malformed textual input; `at` is the 1-based line (for files) or
    /// character position (for bit and action strings).
    #[error("format: {msg}")]
    Format { at: usize, msg: String },

    /// An exhaustive operation would enumerate more items than the cap.
    #[error("too-large: enumeration of {needed} items exceeds cap {cap}")]
    TooLarge { needed: u128, cap: u64 },

    /// Operation needs a nonzero codeword but the code has dimension 0.
    #[error("empty-code: code has dimension k = 0")]
    EmptyCode,

    /// The tampering function has a set-to-constant action where only
    /// keep/flip are allowed.
    #[error("not-error-only: constant action at position {0}")]
    NotErrorOnly(usize),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

/// Upper bound on the number of items any single exhaustive enumeration
/// may visit. Defaults to 2^20.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cap(pub u64);

impl Default for Cap {
    fn default() -> Self {
        Cap(1 << 20)
    }
}

impl From<u64> for Cap {
    fn from(v: u64) -> Self {
        Cap(v)
    }
}

impl Cap {
    /// Errors when an enumeration of `needed` items would exceed the cap.
    pub fn ensure(self, needed: u128) -> Result<()> {
        if needed > u128::from(self.0) {
            Err(Error::TooLarge {
                needed,
                cap: self.0,
            })
        } else {
            Ok(())
        }
    }

    /// `2^exp` as a u128, saturating far beyond any sane cap.
    pub fn pow2(exp: usize) -> u128 {
        if exp >= 127 {
            u128::MAX
        } else {
            1u128 << exp
        }
    }
}
