//! Computes the structural profile of each built-in code family: length,
//! dimension, distances, generalized weights, and the non-malleability
//! threshold `n - d_dual`.

use coset_nmc::report::to_json_string;
use coset_nmc::{profile, Cap, LinearCode, Result};

fn main() -> Result<()> {
    let codes = [
        LinearCode::hamming(3)?,
        LinearCode::repetition(5)?,
        LinearCode::parity(6)?,
        LinearCode::random(10, 4, 7)?,
    ];
    for code in &codes {
        println!("{}", code.label());
        print!("{}", to_json_string(&profile(code, Cap::default())?)?);
        println!();
    }
    Ok(())
}
