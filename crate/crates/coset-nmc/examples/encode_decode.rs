//! Encodes a message as a uniformly random member of its coset and decodes
//! it back by recomputing the syndrome. Also lists the full coset to show
//! what the encoder is sampling from.

use coset_nmc::{decode, encode, encode_all, BitSource, Cap, LinearCode, Message, Result};

fn main() -> Result<()> {
    let code = LinearCode::hamming(3)?;
    let message: Message = "101".parse()?;
    println!(
        "code {} (n={}, k={}, r={}), message {message}",
        code.label(),
        code.n(),
        code.k(),
        code.r()
    );

    let mut source = BitSource::from_seed(7);
    for round in 1..=4 {
        let word = encode(&code, &message, &mut source)?;
        let back = decode(&code, &word)?;
        println!("  draw {round}: {word} decodes to {back}");
        assert_eq!(back, message);
    }

    let coset = encode_all(&code, &message, Cap::default())?;
    println!("coset of {message} ({} words):", coset.len());
    for word in &coset {
        println!("  {word}");
    }
    Ok(())
}
