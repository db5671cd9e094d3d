//! Estimates a tampering distribution by Monte-Carlo sampling and watches
//! the statistical distance to the exactly enumerated distribution shrink
//! as the trial count grows.

use coset_nmc::{
    statistical_distance, tamper_exact, tamper_sampled, BitSource, Cap, LinearCode, Message,
    Result, TamperFunction,
};
use num_traits::ToPrimitive;

fn main() -> Result<()> {
    let code = LinearCode::hamming(3)?;
    let f: TamperFunction = "0000kkk".parse()?;
    let message: Message = "101".parse()?;
    let cap = Cap::default();

    let exact = tamper_exact(&code, &f, &message, cap)?;
    println!(
        "code {}, tamper {f}, message {message}; exact support size {}",
        code.label(),
        exact.support_size()
    );

    let mut source = BitSource::from_seed(2024);
    for trials in [100u64, 1_000, 10_000, 100_000] {
        let sampled = tamper_sampled(&code, &f, &message, &mut source, trials)?;
        let sd = statistical_distance(&sampled, &exact);
        println!(
            "  {trials:>7} trials: statistical distance {:.5}",
            sd.to_f64().unwrap_or(f64::NAN)
        );
    }
    Ok(())
}
