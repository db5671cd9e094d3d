//! Brute-force code parameters: minimum distance, dual distance,
//! generalized Hamming weights of the dual, and orthogonal-array strength
//! of the cosets.
//!
//! Everything here is exhaustive and certificate-grade at small block
//! lengths; every enumeration is guarded by the caller's [`Cap`].

use itertools::Itertools;
use serde::Serialize;

use crate::code::LinearCode;
use crate::coset::{encode_all, Message};
use crate::gf2::BitVec;
use crate::{Cap, Error, Result};

/// The parameters the non-malleability condition reads off a code.
///
/// `ghw` lists the generalized Hamming weights `d_1..d_r` of the dual code
/// (row span of `H`); `d_1` equals `d_dual`, and `nm_threshold = n - d_dual`
/// is the fixed-position count a tamper function must exceed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CodeProfile {
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub d: usize,
    pub d_dual: usize,
    pub ghw: Vec<usize>,
    pub nm_threshold: usize,
}

/// Minimum weight over the nonzero span of independent `basis` vectors,
/// walked in Gray-code order so each step is a single XOR.
fn min_weight_of_span(basis: &[BitVec], cap: Cap) -> Result<usize> {
    let total = Cap::pow2(basis.len());
    cap.ensure(total)?;
    let mut current = BitVec::zeros(basis[0].len());
    let mut best = usize::MAX;
    for j in 1..total {
        let flip = j.trailing_zeros() as usize;
        current.xor_assign(&basis[flip]);
        best = best.min(current.weight());
    }
    Ok(best)
}

/// Minimum Hamming distance of the code itself (minimum nonzero codeword
/// weight). The zero-dimensional code has no nonzero codeword.
pub fn min_distance(code: &LinearCode, cap: Cap) -> Result<usize> {
    if code.k() == 0 {
        return Err(Error::EmptyCode);
    }
    min_weight_of_span(code.kernel_basis(), cap)
}

/// Minimum distance of the dual code: minimum weight over the `2^r - 1`
/// nonzero combinations of `H`'s rows.
pub fn dual_distance(code: &LinearCode, cap: Cap) -> Result<usize> {
    let rows: Vec<BitVec> = (0..code.r()).map(|i| code.parity_check().row(i)).collect();
    min_weight_of_span(&rows, cap)
}

/// Generalized Hamming weights `d_1..d_r` of the dual code: `d_i` is the
/// smallest support size (coordinates where some vector is nonzero) of any
/// `i`-dimensional subspace of the row span of `H`.
///
/// Subspaces are enumerated as tuples of independent dual codewords in
/// ascending row-combination order, pruning any branch whose support
/// already reaches the best value found for the target dimension.
pub fn generalized_weights(code: &LinearCode, cap: Cap) -> Result<Vec<usize>> {
    let r = code.r();
    cap.ensure(Cap::pow2(r))?;
    // Dual codeword for every row combination; index = combination mask.
    // Injective since H has full row rank, so independence of codewords is
    // independence of their masks.
    let span_size = 1usize << r;
    let mut words: Vec<BitVec> = Vec::with_capacity(span_size);
    words.push(BitVec::zeros(code.n()));
    for lambda in 1..span_size {
        let mut coeffs = BitVec::zeros(r);
        for i in 0..r {
            if lambda & (1 << i) != 0 {
                coeffs.set(i, true);
            }
        }
        words.push(code.parity_check().row_combination(&coeffs)?);
    }

    let mut out = Vec::with_capacity(r);
    for dim in 1..=r {
        cap.ensure(independent_tuple_count(r, dim))?;
        let mut best = code.n() + 1;
        let union = BitVec::zeros(code.n());
        ghw_search(&words, dim, 1, &[], &union, &mut best);
        debug_assert!(best <= code.n());
        out.push(best);
    }
    Ok(out)
}

/// Ordered count of independent `dim`-tuples from a rank-`r` space,
/// divided by dim! — the number of DFS leaves visited without pruning.
fn independent_tuple_count(r: usize, dim: usize) -> u128 {
    let mut count: u128 = 1;
    for j in 0..dim {
        count = count.saturating_mul(Cap::pow2(r).saturating_sub(Cap::pow2(j)));
    }
    let mut fact: u128 = 1;
    for j in 1..=dim as u128 {
        fact *= j;
    }
    count / fact
}

fn ghw_search(
    words: &[BitVec],
    dim: usize,
    from: usize,
    chosen_masks: &[usize],
    union: &BitVec,
    best: &mut usize,
) {
    if union.weight() >= *best {
        return;
    }
    if chosen_masks.len() == dim {
        *best = union.weight();
        return;
    }
    for mask in from..words.len() {
        if !independent_of(mask, chosen_masks) {
            continue;
        }
        let mut next_union = union.clone();
        next_union.or_assign(&words[mask]);
        let mut next_chosen = chosen_masks.to_vec();
        next_chosen.push(mask);
        ghw_search(words, dim, mask + 1, &next_chosen, &next_union, best);
    }
}

/// Linear independence of `mask` from the span of `chosen` masks, checked
/// by XOR over all subsets (the chosen sets stay tiny: at most r elements).
fn independent_of(mask: usize, chosen: &[usize]) -> bool {
    for subset in 0..(1usize << chosen.len()) {
        let mut acc = 0usize;
        for (i, &m) in chosen.iter().enumerate() {
            if subset & (1 << i) != 0 {
                acc ^= m;
            }
        }
        if acc == mask {
            return false;
        }
    }
    true
}

/// Whether every coset projects uniformly onto every `t`-subset of
/// coordinates — the orthogonal-array property of strength `t`. Holds for
/// all `t` below the dual distance; the support of a minimum-weight dual
/// codeword witnesses failure at `t = d_dual`.
pub fn oa_strength_holds(code: &LinearCode, t: usize, cap: Cap) -> Result<bool> {
    if t > code.n() {
        return Err(Error::BadParams(format!(
            "strength {t} exceeds block length {}",
            code.n()
        )));
    }
    if t == 0 {
        return Ok(true);
    }
    if t > code.k() {
        // 2^k samples cannot cover 2^t patterns evenly.
        return Ok(false);
    }
    cap.ensure(Cap::pow2(code.r()))?;
    cap.ensure(Cap::pow2(code.k()))?;
    cap.ensure(binomial(code.n(), t).saturating_mul(Cap::pow2(t)))?;

    let expected = 1u64 << (code.k() - t);
    for m in all_messages(code.r()) {
        let coset = encode_all(code, &m, cap)?;
        for subset in (0..code.n()).combinations(t) {
            let mut counts = vec![0u64; 1 << t];
            for x in &coset {
                let pattern = x.bits().restrict(&subset);
                let mut index = 0usize;
                for (i, bit) in pattern.iter().enumerate() {
                    if bit {
                        index |= 1 << i;
                    }
                }
                counts[index] += 1;
            }
            if counts.iter().any(|&c| c != expected) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn binomial(n: usize, k: usize) -> u128 {
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

/// All `2^r` messages in counter order (message bit `i` = counter bit `i`).
pub fn all_messages(r: usize) -> Vec<Message> {
    assert!(r <= 64, "message enumeration limited to r <= 64");
    (0..(1u128 << r))
        .map(|c| Message(BitVec::from_counter(r, c as u64)))
        .collect()
}

/// Computes every profile field in one pass.
pub fn profile(code: &LinearCode, cap: Cap) -> Result<CodeProfile> {
    let d = min_distance(code, cap)?;
    let d_dual = dual_distance(code, cap)?;
    let ghw = generalized_weights(code, cap)?;
    Ok(CodeProfile {
        n: code.n(),
        k: code.k(),
        r: code.r(),
        d,
        d_dual,
        ghw,
        nm_threshold: code.n() - d_dual,
    })
}
