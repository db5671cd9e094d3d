//! Coset encoding and syndrome decoding.
//!
//! A message `m` of length `r` is encoded as a uniformly random solution of
//! `H·x = m`; decoding computes the syndrome `H·x` and is total — every
//! word of length `n` decodes to some message, and tampered words are never
//! rejected.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::code::LinearCode;
use crate::gf2::BitVec;
use crate::{Cap, Error, Result};

/// A syndrome-space message: `r` bits.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Message(pub BitVec);

/// An `n`-bit word of the ambient space (a codeword of some coset).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Codeword(pub BitVec);

macro_rules! bits_newtype {
    ($ty:ident) => {
        impl $ty {
            pub fn bits(&self) -> &BitVec {
                &self.0
            }

            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.len() == 0
            }
        }

        impl From<BitVec> for $ty {
            fn from(bits: BitVec) -> Self {
                $ty(bits)
            }
        }

        impl std::fmt::Display for $ty {
            fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
                self.0.fmt(f)
            }
        }

        impl std::str::FromStr for $ty {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                Ok($ty(s.parse()?))
            }
        }
    };
}

bits_newtype!(Message);
bits_newtype!(Codeword);

/// Deals single bits from an underlying RNG, buffering one word at a time
/// so that an encode call consumes exactly `k` bits of the stream.
///
/// Bit `j` handed out from a buffered word is bit `j` (least significant
/// first) of that word, which pins the seed-to-codeword mapping.
pub struct BitSource<R: RngCore> {
    rng: R,
    buf: u64,
    avail: u32,
}

impl BitSource<ChaCha12Rng> {
    pub fn from_seed(seed: u64) -> Self {
        BitSource::new(ChaCha12Rng::seed_from_u64(seed))
    }
}

impl<R: RngCore> BitSource<R> {
    pub fn new(rng: R) -> Self {
        BitSource {
            rng,
            buf: 0,
            avail: 0,
        }
    }

    pub fn next_bit(&mut self) -> bool {
        if self.avail == 0 {
            self.buf = self.rng.next_u64();
            self.avail = 64;
        }
        let bit = self.buf & 1 != 0;
        self.buf >>= 1;
        self.avail -= 1;
        bit
    }
}

/// Encodes `m` as a uniformly random element of its coset: a canonical
/// particular solution of `H·x = m`, XORed with the kernel combination
/// whose coefficient for basis vector `j` is the `j`-th bit drawn.
///
/// Consumes exactly `k` bits from `source`.
pub fn encode<R: RngCore>(
    code: &LinearCode,
    m: &Message,
    source: &mut BitSource<R>,
) -> Result<Codeword> {
    let mut x = particular_solution(code, m)?;
    for basis in code.kernel_basis() {
        if source.next_bit() {
            x.xor_assign(basis);
        }
    }
    Ok(Codeword(x))
}

/// All `2^k` elements of the coset of `m`, in kernel-combination counter
/// order: element `j` uses basis vector `b` iff bit `b` of `j` is set.
/// Element 0 is the canonical particular solution.
pub fn encode_all(code: &LinearCode, m: &Message, cap: Cap) -> Result<Vec<Codeword>> {
    let total = Cap::pow2(code.k());
    cap.ensure(total)?;
    let particular = particular_solution(code, m)?;
    let mut out = Vec::with_capacity(total as usize);
    for j in 0..total {
        let mut x = particular.clone();
        for (b, basis) in code.kernel_basis().iter().enumerate() {
            if j & (1 << b) != 0 {
                x.xor_assign(basis);
            }
        }
        out.push(Codeword(x));
    }
    Ok(out)
}

/// Syndrome decoding: `x` maps to `H·x`. Total — never rejects.
pub fn decode(code: &LinearCode, x: &Codeword) -> Result<Message> {
    Ok(Message(code.parity_check().mul_vec(x.bits())?))
}

fn particular_solution(code: &LinearCode, m: &Message) -> Result<BitVec> {
    if m.len() != code.r() {
        return Err(Error::Shape(format!(
            "message length {} does not match syndrome length {}",
            m.len(),
            code.r()
        )));
    }
    code.parity_check()
        .solve(m.bits())?
        .ok_or_else(|| Error::Shape("full-row-rank system cannot be inconsistent".into()))
}
