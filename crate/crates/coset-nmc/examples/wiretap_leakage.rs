//! Measures what an eavesdropper learns about the message from a chosen
//! set of codeword positions. Any set smaller than the dual distance
//! reveals exactly nothing; the support of a minimum-weight dual codeword
//! reveals exactly one parity bit.

use coset_nmc::{dual_distance, wiretap_leakage, Cap, LinearCode, Result};
use itertools::Itertools;

fn main() -> Result<()> {
    let code = LinearCode::hamming(3)?;
    let cap = Cap::default();
    let d_dual = dual_distance(&code, cap)?;
    println!("code {}: d_dual = {d_dual}", code.label());

    for size in 0..=code.n() {
        let worst = (0..code.n())
            .combinations(size)
            .map(|positions| wiretap_leakage(&code, &positions, cap).unwrap())
            .fold(0.0f64, f64::max);
        let note = if size < d_dual { " (below d_dual: perfect secrecy)" } else { "" };
        println!("  observing {size} positions leaks at most {worst:.4} bits{note}");
    }

    // The support of the weight-4 dual codeword 1010101 carries one parity.
    let support = [0, 2, 4, 6];
    println!(
        "positions {:?} (a dual codeword support) leak {:.4} bits",
        support.map(|p| p + 1),
        wiretap_leakage(&code, &support, cap)?
    );
    Ok(())
}
