//! Timing and work counters for the plain sieve, the wheel sieve and the
//! bare candidate filter. Wall-clock numbers vary between runs; the counters
//! do not.

use std::time::Instant;

use serde::Serialize;

use crate::error::Result;
use crate::oracle::{sieve_with_stats, wheel_sieve_with_stats};
use crate::wheel::is_candidate;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub method: &'static str,
    pub seconds: f64,
    /// Integers per second over `[0, limit]`.
    pub throughput: f64,
    /// Storage slots held or numbers tested.
    pub positions: u64,
    pub crossings: u64,
    /// Primes found, or candidates passed for the filter.
    pub output: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchReport {
    pub limit: u64,
    pub rows: Vec<BenchRow>,
    /// Both sieves produced identical prime sets.
    pub sieves_agree: bool,
}

impl BenchReport {
    pub fn row(&self, method: &str) -> Option<&BenchRow> {
        self.rows.iter().find(|r| r.method == method)
    }
}

fn row(
    method: &'static str,
    range: u64,
    seconds: f64,
    positions: u64,
    crossings: u64,
    output: u64,
) -> BenchRow {
    BenchRow {
        method,
        seconds,
        throughput: if seconds > 0.0 {
            range as f64 / seconds
        } else {
            f64::INFINITY
        },
        positions,
        crossings,
        output,
    }
}

pub fn run_bench(limit: u64) -> Result<BenchReport> {
    let t = Instant::now();
    let (plain, plain_stats) = sieve_with_stats(limit)?;
    let plain_secs = t.elapsed().as_secs_f64();

    let t = Instant::now();
    let (wheel, wheel_stats) = wheel_sieve_with_stats(limit)?;
    let wheel_secs = t.elapsed().as_secs_f64();

    let t = Instant::now();
    let passed = (1..=limit).filter(|&n| is_candidate(n)).count() as u64;
    let filter_secs = t.elapsed().as_secs_f64();

    let range = limit + 1;
    Ok(BenchReport {
        limit,
        sieves_agree: plain == wheel,
        rows: vec![
            row(
                "sieve",
                range,
                plain_secs,
                plain_stats.positions,
                plain_stats.crossings,
                plain.count(),
            ),
            row(
                "wheel_sieve",
                range,
                wheel_secs,
                wheel_stats.positions,
                wheel_stats.crossings,
                wheel.count(),
            ),
            row("candidate_filter", range, filter_secs, limit, 0, passed),
        ],
    })
}
