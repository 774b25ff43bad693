//! Twin-candidate positions `p = 30n + 50 + k`, `k` in {9, 21, 27}: the only
//! places at or above 50 where `p` and `p + 2` are both wheel candidates.

use serde::Serialize;

use crate::cyclicity::BLOCK_ORIGIN;
use crate::oracle::PrimalityOracle;
use crate::wheel::{is_candidate, MODULUS};

pub const TWIN_OFFSETS: [u64; 3] = [9, 21, 27];

/// Residues mod 30 of the lower member of any twin pair above 5.
pub const TWIN_RESIDUES: [u64; 3] = [11, 17, 29];

/// First position the formula produces.
pub const FIRST_TWIN_POSITION: u64 = BLOCK_ORIGIN + TWIN_OFFSETS[0];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TwinCandidate {
    /// Lower member.
    pub p: u64,
    pub n: u64,
    pub k: u64,
}

impl TwinCandidate {
    pub fn upper(&self) -> u64 {
        self.p + 2
    }

    /// Inverts the formula; `None` when `p` is not a formula position.
    pub fn from_position(p: u64) -> Option<Self> {
        if p < FIRST_TWIN_POSITION {
            return None;
        }
        let shifted = p - BLOCK_ORIGIN;
        let k = shifted % MODULUS;
        TWIN_OFFSETS.contains(&k).then_some(TwinCandidate {
            p,
            n: shifted / MODULUS,
            k,
        })
    }
}

/// All formula positions with `p <= max_p`, ascending. Empty below 59.
pub fn twin_positions(max_p: u64) -> Vec<TwinCandidate> {
    let mut out = Vec::new();
    let mut n = 0u64;
    while let Some(base) = n
        .checked_mul(MODULUS)
        .and_then(|v| v.checked_add(BLOCK_ORIGIN))
    {
        if base.saturating_add(TWIN_OFFSETS[0]) > max_p {
            break;
        }
        for &k in &TWIN_OFFSETS {
            match base.checked_add(k) {
                Some(p) if p <= max_p => out.push(TwinCandidate { p, n, k }),
                _ => {}
            }
        }
        n += 1;
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExceptionKind {
    /// The pair contains 3 or 5.
    SpecialPrime,
    /// Satisfies the residue condition but lies below the formula's base.
    BelowFormulaBase,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TwinException {
    pub p: u64,
    pub kind: ExceptionKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwinReport {
    pub max_p: u64,
    /// Oracle twin pairs `(p, p + 2)` with `p <= max_p`.
    pub pairs_found: u64,
    /// Pairs produced by the formula.
    pub covered: u64,
    pub exceptions: Vec<TwinException>,
    /// Lower members contradicting the residue condition or missing from the formula.
    pub violations: Vec<u64>,
}

impl TwinReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn verify_twin_necessity(max_p: u64, oracle: &impl PrimalityOracle) -> TwinReport {
    let mut report = TwinReport {
        max_p,
        pairs_found: 0,
        covered: 0,
        exceptions: Vec::new(),
        violations: Vec::new(),
    };
    for p in 2..=max_p {
        let Some(upper) = p.checked_add(2) else { break };
        if !(oracle.is_prime(p) && oracle.is_prime(upper)) {
            continue;
        }
        report.pairs_found += 1;
        if p < 7 {
            report.exceptions.push(TwinException {
                p,
                kind: ExceptionKind::SpecialPrime,
            });
            continue;
        }
        if !TWIN_RESIDUES.contains(&(p % MODULUS)) {
            report.violations.push(p);
        } else if TwinCandidate::from_position(p).is_some() {
            report.covered += 1;
        } else if p < FIRST_TWIN_POSITION {
            report.exceptions.push(TwinException {
                p,
                kind: ExceptionKind::BelowFormulaBase,
            });
        } else {
            report.violations.push(p);
        }
    }
    report
}

/// `p` and `p + 2` both on the wheel.
pub fn is_twin_candidate_pair(p: u64) -> bool {
    p.checked_add(2)
        .is_some_and(|q| is_candidate(p) && is_candidate(q))
}
