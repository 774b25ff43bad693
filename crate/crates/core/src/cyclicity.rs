//! 30-number cycle blocks starting at 50.
//!
//! Inside each block the off-wheel numbers form eight maximal runs
//! ("parcels") of lengths 3-5-1-5-3-1-3-1, and the wheel candidates fall into
//! five groups of sizes 1-2-1-2-2, where a group is a chain of candidates
//! spaced two apart.

use std::ops::Range;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::wheel::{is_candidate, MODULUS};

pub const BLOCK_ORIGIN: u64 = 50;
pub const BLOCK_LEN: u64 = MODULUS;

pub const CANONICAL_PARCELS: [u32; 8] = [3, 5, 1, 5, 3, 1, 3, 1];
pub const CANONICAL_GROUPS: [u32; 5] = [1, 2, 1, 2, 2];

/// Offsets of the candidates from a block start.
pub const CANDIDATE_OFFSETS: [u64; 8] = [3, 9, 11, 17, 21, 23, 27, 29];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleBlock {
    pub block_index: u64,
    pub start: u64,
    pub parcels: Vec<u32>,
    pub candidate_groups: Vec<u32>,
    pub candidates: Vec<u64>,
}

impl CycleBlock {
    pub fn members(&self) -> Range<u64> {
        self.start..self.start + BLOCK_LEN
    }

    pub fn is_canonical(&self) -> bool {
        self.parcels == CANONICAL_PARCELS && self.candidate_groups == CANONICAL_GROUPS
    }
}

pub fn block_start(b: u64) -> Option<u64> {
    b.checked_mul(BLOCK_LEN)?.checked_add(BLOCK_ORIGIN)
}

pub fn build_block(b: u64) -> Result<CycleBlock> {
    let start = block_start(b)
        .filter(|s| s.checked_add(BLOCK_LEN - 1).is_some())
        .ok_or(Error::BlockOutOfRange(b))?;

    let mut parcels = Vec::with_capacity(8);
    let mut groups = Vec::with_capacity(5);
    let mut candidates = Vec::with_capacity(8);
    let mut run = 0u32;
    let mut last_candidate: Option<u64> = None;

    for m in start..=start + (BLOCK_LEN - 1) {
        if !is_candidate(m) {
            run += 1;
            continue;
        }
        if run > 0 {
            parcels.push(run);
            run = 0;
        }
        match last_candidate {
            Some(prev) if m - prev == 2 => *groups.last_mut().expect("group open") += 1,
            _ => groups.push(1),
        }
        last_candidate = Some(m);
        candidates.push(m);
    }
    if run > 0 {
        parcels.push(run);
    }

    Ok(CycleBlock {
        block_index: b,
        start,
        parcels,
        candidate_groups: groups,
        candidates,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RhythmViolation {
    pub block_index: u64,
    pub parcels: Vec<u32>,
    pub candidate_groups: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RhythmReport {
    pub blocks_checked: u64,
    pub first_violation: Option<RhythmViolation>,
}

impl RhythmReport {
    pub fn holds(&self) -> bool {
        self.first_violation.is_none()
    }
}

/// Checks blocks `0..=max_block` against both canonical rhythms, stopping at
/// the first block that deviates.
pub fn verify_rhythm(max_block: u64) -> RhythmReport {
    let mut checked = 0;
    for b in 0..=max_block {
        let block = match build_block(b) {
            Ok(block) => block,
            Err(_) => break,
        };
        checked += 1;
        if !block.is_canonical() {
            return RhythmReport {
                blocks_checked: checked,
                first_violation: Some(RhythmViolation {
                    block_index: b,
                    parcels: block.parcels,
                    candidate_groups: block.candidate_groups,
                }),
            };
        }
    }
    RhythmReport {
        blocks_checked: checked,
        first_violation: None,
    }
}
