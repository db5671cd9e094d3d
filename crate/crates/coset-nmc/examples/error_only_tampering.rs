//! Shows why functions that only keep or flip bits (no constant positions)
//! defeat the scheme: decoding x XOR e shifts the syndrome by the constant
//! H·e, so the tampered message determines the original one exactly and
//! the adversary learns all r bits.

use coset_nmc::analysis::all_messages;
use coset_nmc::{
    error_only_offset, leakage_bits, tamper_exact, Cap, LinearCode, Outcome, Result,
    TamperFunction,
};

fn main() -> Result<()> {
    let code = LinearCode::repetition(3)?;
    let cap = Cap::default();

    for pattern in ["kkk", "ffk", "fff", "kfk"] {
        let f: TamperFunction = pattern.parse()?;
        let offset = error_only_offset(&code, &f)?;
        let leak = leakage_bits(&code, &f, cap)?;
        println!("tamper {f}: syndrome offset H·e = {offset}, leakage {leak} bits");

        for message in all_messages(code.r()) {
            let dist = tamper_exact(&code, &f, &message, cap)?;
            let mut expected = message.bits().clone();
            expected.xor_assign(offset.bits());
            let point = Outcome::Value(expected.into());
            assert!(dist.is_point_mass_on(&point));
            println!("  {message} always decodes to {}", point.as_key());
        }
    }

    // A function with any constant position is rejected by the offset
    // helper, since H·e no longer describes it.
    let mixed: TamperFunction = "f0k".parse()?;
    println!(
        "offset of {mixed}: {}",
        error_only_offset(&code, &mixed).unwrap_err()
    );
    Ok(())
}
