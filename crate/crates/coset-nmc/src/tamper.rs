//! Bit-wise independent tampering: each coordinate is independently kept,
//! flipped, set to 0, or set to 1.
//!
//! The derived structure of a function — which coordinates are constant
//! (`s_01`), flipped (`s_flip`), or passed through (`s_keep`), plus the
//! flip vector `e` and the set-to-one vector `eps` — is what the
//! non-malleability condition and the simulator read.

use std::fmt;
use std::str::FromStr;

use crate::coset::Codeword;
use crate::gf2::BitVec;
use crate::{Cap, Error, Result};

/// Action applied to one bit. The order here (keep < flip < zero < one)
/// is the enumeration order of tamper families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum BitAction {
    Keep,
    Flip,
    Zero,
    One,
}

impl BitAction {
    pub fn apply(self, bit: bool) -> bool {
        match self {
            BitAction::Keep => bit,
            BitAction::Flip => !bit,
            BitAction::Zero => false,
            BitAction::One => true,
        }
    }

    pub fn is_constant(self) -> bool {
        matches!(self, BitAction::Zero | BitAction::One)
    }

    pub fn to_char(self) -> char {
        match self {
            BitAction::Keep => 'k',
            BitAction::Flip => 'f',
            BitAction::Zero => '0',
            BitAction::One => '1',
        }
    }

    fn from_index(i: u8) -> Self {
        match i {
            0 => BitAction::Keep,
            1 => BitAction::Flip,
            2 => BitAction::Zero,
            _ => BitAction::One,
        }
    }
}

/// A length-`n` tuple of bit actions, written as a string over
/// `{k, f, 0, 1}` with coordinate 1 leftmost.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct TamperFunction {
    actions: Vec<BitAction>,
}

impl TamperFunction {
    pub fn new(actions: Vec<BitAction>) -> Self {
        TamperFunction { actions }
    }

    pub fn len(&self) -> usize {
        self.actions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.actions.is_empty()
    }

    pub fn actions(&self) -> &[BitAction] {
        &self.actions
    }

    /// Number of set-to-constant coordinates (`|S_01|`).
    pub fn fixed_count(&self) -> usize {
        self.actions.iter().filter(|a| a.is_constant()).count()
    }

    /// Applies the function coordinate-wise.
    pub fn apply(&self, c: &Codeword) -> Result<Codeword> {
        if c.len() != self.len() {
            return Err(Error::Shape(format!(
                "tamper function has length {}, codeword has length {}",
                self.len(),
                c.len()
            )));
        }
        let mut out = BitVec::zeros(self.len());
        for (i, action) in self.actions.iter().enumerate() {
            if action.apply(c.bits().get(i)) {
                out.set(i, true);
            }
        }
        Ok(Codeword(out))
    }

    /// Splits the function into its structure sets and offset vectors.
    pub fn structure(&self) -> TamperStructure {
        let n = self.len();
        let mut s = TamperStructure {
            s_keep: Vec::new(),
            s_flip: Vec::new(),
            s_01: Vec::new(),
            e: BitVec::zeros(n),
            eps: BitVec::zeros(n),
            fixed_count: 0,
        };
        for (i, action) in self.actions.iter().enumerate() {
            match action {
                BitAction::Keep => s.s_keep.push(i),
                BitAction::Flip => {
                    s.s_flip.push(i);
                    s.e.set(i, true);
                }
                BitAction::Zero => s.s_01.push(i),
                BitAction::One => {
                    s.s_01.push(i);
                    s.eps.set(i, true);
                }
            }
        }
        s.fixed_count = s.s_01.len();
        s
    }
}

impl fmt::Display for TamperFunction {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in &self.actions {
            write!(out, "{}", a.to_char())?;
        }
        Ok(())
    }
}

impl FromStr for TamperFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut actions = Vec::with_capacity(s.len());
        for (i, c) in s.chars().enumerate() {
            let action = match c {
                'k' => BitAction::Keep,
                'f' => BitAction::Flip,
                '0' => BitAction::Zero,
                '1' => BitAction::One,
                _ => {
                    return Err(Error::Format {
                        at: i + 1,
                        msg: format!(
                            "position {}: expected one of 'k', 'f', '0', '1', found {c:?}",
                            i + 1
                        ),
                    })
                }
            };
            actions.push(action);
        }
        Ok(TamperFunction::new(actions))
    }
}

/// Structure of a tamper function. Coordinate sets are 0-based and sorted;
/// `e` is the indicator of `s_flip`, `eps` is 1 exactly where the action
/// is set-to-one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TamperStructure {
    pub s_keep: Vec<usize>,
    pub s_flip: Vec<usize>,
    pub s_01: Vec<usize>,
    pub e: BitVec,
    pub eps: BitVec,
    pub fixed_count: usize,
}

impl TamperStructure {
    /// Sorted coordinates that still depend on the input (keep or flip).
    pub fn kf_coords(&self) -> Vec<usize> {
        let mut kf: Vec<usize> = self.s_keep.iter().chain(&self.s_flip).copied().collect();
        kf.sort_unstable();
        kf
    }

    /// Indicator vector of `s_keep ∪ s_flip`.
    pub fn mask_keepflip(&self, n: usize) -> BitVec {
        let mut mask = BitVec::zeros(n);
        for &i in self.s_keep.iter().chain(&self.s_flip) {
            mask.set(i, true);
        }
        mask
    }
}

/// A family of tamper functions on `n` bits with at least `min_fixed`
/// set-to-constant coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilySpec {
    pub n: usize,
    pub min_fixed: usize,
}

impl FamilySpec {
    pub fn new(n: usize, min_fixed: usize) -> Result<Self> {
        if min_fixed > n {
            return Err(Error::BadParams(format!(
                "min_fixed {min_fixed} exceeds length {n}"
            )));
        }
        Ok(FamilySpec { n, min_fixed })
    }

    /// Iterates every member exactly once, in lexicographic action order
    /// (keep < flip < zero < one, leftmost coordinate most significant),
    /// by filtering the full 4^n sweep.
    pub fn enumerate(self, cap: Cap) -> Result<FamilyIter> {
        let total = Cap::pow2(2 * self.n);
        cap.ensure(total)?;
        Ok(FamilyIter {
            spec: self,
            next: 0,
            total,
        })
    }

    /// Family size by direct combinatorics: choose the constant positions,
    /// then 2 constants each and 2 live actions elsewhere.
    pub fn count(self) -> u128 {
        (self.min_fixed..=self.n)
            .map(|j| binomial(self.n, j) * Cap::pow2(self.n))
            .sum()
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i as u128 + 1);
    }
    acc
}

#[derive(Debug)]
pub struct FamilyIter {
    spec: FamilySpec,
    next: u128,
    total: u128,
}

impl Iterator for FamilyIter {
    type Item = TamperFunction;

    fn next(&mut self) -> Option<TamperFunction> {
        while self.next < self.total {
            let counter = self.next;
            self.next += 1;
            let f = function_at(self.spec.n, counter);
            if f.fixed_count() >= self.spec.min_fixed {
                return Some(f);
            }
        }
        None
    }
}

/// The `counter`-th function in lexicographic order: base-4 digits of
/// `counter`, most significant digit = coordinate 1.
fn function_at(n: usize, counter: u128) -> TamperFunction {
    let actions = (0..n)
        .map(|i| {
            let shift = 2 * (n - 1 - i);
            BitAction::from_index(((counter >> shift) & 3) as u8)
        })
        .collect();
    TamperFunction::new(actions)
}
