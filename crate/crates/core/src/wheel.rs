//! Mod-30 wheel membership.
//!
//! A natural number lies on the wheel iff its residue mod 30 is one of the
//! eight units `1, 7, 11, 13, 17, 19, 23, 29`. Every prime above 5 does; every
//! off-wheel number above 5 shares a factor with 30. Everything here is exact
//! integer arithmetic.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

pub const MODULUS: u64 = 30;

/// The eight residues mod 30 coprime to 30, ascending.
pub const BASE_RESIDUES: [u64; 8] = [1, 7, 11, 13, 17, 19, 23, 29];

/// Primes that divide the modulus. They are off-wheel yet prime.
pub const SPECIAL_PRIMES: [u64; 3] = [2, 3, 5];

// Indexed by residue: position of the residue in BASE_RESIDUES, or 0xff.
const RESIDUE_SLOT: [u8; 30] = {
    let mut table = [0xffu8; 30];
    let mut i = 0;
    while i < BASE_RESIDUES.len() {
        table[BASE_RESIDUES[i] as usize] = i as u8;
        i += 1;
    }
    table
};

// Distance from a wheel residue to the next wheel residue (wrapping to 31).
const GAP_AFTER: [u8; 8] = [6, 4, 2, 4, 2, 4, 6, 2];

/// A residue mod 30 coprime to 30.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct BaseResidue(u8);

impl BaseResidue {
    pub const ALL: [BaseResidue; 8] = [
        BaseResidue(1),
        BaseResidue(7),
        BaseResidue(11),
        BaseResidue(13),
        BaseResidue(17),
        BaseResidue(19),
        BaseResidue(23),
        BaseResidue(29),
    ];

    pub fn new(value: u64) -> Option<Self> {
        if value < MODULUS && RESIDUE_SLOT[value as usize] != 0xff {
            Some(BaseResidue(value as u8))
        } else {
            None
        }
    }

    pub fn value(self) -> u64 {
        self.0 as u64
    }

    /// Index of this residue in [`BASE_RESIDUES`], `0..8`.
    pub fn slot(self) -> usize {
        RESIDUE_SLOT[self.0 as usize] as usize
    }
}

impl fmt::Display for BaseResidue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Wheel verdict for one natural number.
///
/// `1` classifies as `Candidate(1, 0)` because 1 belongs to the base set; it
/// is neither prime nor composite, which is left to the oracle to say.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum WheelClass {
    /// One of 2, 3, 5.
    SpecialPrime { value: u64 },
    /// The number `base + 30 * multiplier`.
    Candidate { base: BaseResidue, multiplier: u64 },
    /// Off-wheel and above 5, so it shares a factor with 30.
    CertainComposite,
}

impl WheelClass {
    pub fn is_candidate(&self) -> bool {
        matches!(self, WheelClass::Candidate { .. })
    }

    /// Reconstructs the classified number, where the class carries enough
    /// information to do so.
    pub fn encode(&self) -> Option<u64> {
        match *self {
            WheelClass::SpecialPrime { value } => Some(value),
            WheelClass::Candidate { base, multiplier } => Some(base.value() + MODULUS * multiplier),
            WheelClass::CertainComposite => None,
        }
    }
}

impl fmt::Display for WheelClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WheelClass::SpecialPrime { value } => write!(f, "SpecialPrime({value})"),
            WheelClass::Candidate { base, multiplier } => {
                write!(f, "Candidate({base}, {multiplier})")
            }
            WheelClass::CertainComposite => f.write_str("CertainComposite"),
        }
    }
}

pub fn residue30(n: u64) -> u64 {
    n % MODULUS
}

pub fn is_candidate(n: u64) -> bool {
    RESIDUE_SLOT[residue30(n) as usize] != 0xff
}

pub fn classify(n: u64) -> Result<WheelClass> {
    if n == 0 {
        return Err(Error::Zero);
    }
    if SPECIAL_PRIMES.contains(&n) {
        return Ok(WheelClass::SpecialPrime { value: n });
    }
    let residue = residue30(n);
    Ok(match BaseResidue::new(residue) {
        Some(base) => WheelClass::Candidate {
            base,
            multiplier: (n - residue) / MODULUS,
        },
        None => WheelClass::CertainComposite,
    })
}

/// Ascending wheel candidates starting at the first candidate `>= start`.
#[derive(Debug, Clone)]
pub struct Candidates {
    next: Option<u64>,
}

impl Candidates {
    pub fn from(start: u64) -> Self {
        let mut n = start.max(1);
        while !is_candidate(n) {
            match n.checked_add(1) {
                Some(m) => n = m,
                None => return Candidates { next: None },
            }
        }
        Candidates { next: Some(n) }
    }
}

impl Iterator for Candidates {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let current = self.next?;
        let slot = RESIDUE_SLOT[residue30(current) as usize] as usize;
        self.next = current.checked_add(GAP_AFTER[slot] as u64);
        Some(current)
    }
}

/// Wheel candidates in `[lo, hi]`, ascending. 2, 3 and 5 are not candidates.
pub fn candidates_in_range(lo: u64, hi: u64) -> Result<Vec<u64>> {
    if lo == 0 {
        return Err(Error::Zero);
    }
    if lo > hi {
        return Err(Error::InvalidRange { lo, hi });
    }
    Ok(Candidates::from(lo).take_while(|&m| m <= hi).collect())
}

/// Number of candidates in `[1, hi]`, closed form.
pub fn candidate_count_upto(hi: u64) -> u64 {
    let full = hi / MODULUS;
    let rest = residue30(hi);
    8 * full + BASE_RESIDUES.iter().filter(|&&r| r <= rest).count() as u64
}
