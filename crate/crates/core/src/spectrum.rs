//! Prime indicator over successive wheel candidates and its power spectrum.
//!
//! The candidate positions themselves repeat exactly every 8 steps. Marking
//! each candidate 1 (prime) or 0 (composite) breaks that order; two proxies
//! make the break testable here: no exact period up to a bound, and no
//! single spectral line dominating the non-DC power.

use std::io::Write;

use rustfft::num_complex::Complex;
use rustfft::FftPlanner;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::oracle::PrimalityOracle;
use crate::wheel::Candidates;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndicatorSequence {
    pub start: u64,
    /// The candidate behind each bit.
    pub candidates: Vec<u64>,
    pub values: Vec<u8>,
}

impl IndicatorSequence {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn zeros(&self) -> impl Iterator<Item = u64> + '_ {
        self.candidates
            .iter()
            .zip(&self.values)
            .filter(|(_, &v)| v == 0)
            .map(|(&c, _)| c)
    }

    pub fn as_signal(&self) -> Vec<f64> {
        self.values.iter().map(|&v| f64::from(v)).collect()
    }
}

/// Bits for the first `count` candidates `>= start`.
pub fn indicator(
    start: u64,
    count: usize,
    oracle: &impl PrimalityOracle,
) -> Result<IndicatorSequence> {
    if start == 0 {
        return Err(Error::Zero);
    }
    if count == 0 {
        return Err(Error::EmptyCount);
    }
    let candidates: Vec<u64> = Candidates::from(start).take(count).collect();
    let values = candidates
        .iter()
        .map(|&c| u8::from(oracle.is_prime(c)))
        .collect();
    Ok(IndicatorSequence {
        start,
        candidates,
        values,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectrumBin {
    pub frequency_index: usize,
    pub power: f64,
}

pub fn power_spectrum(seq: &IndicatorSequence) -> Result<Vec<SpectrumBin>> {
    power_spectrum_of(&seq.as_signal())
}

/// Power `|X_k|^2 / N` of the mean-removed signal, one bin per index `k`.
pub fn power_spectrum_of(signal: &[f64]) -> Result<Vec<SpectrumBin>> {
    let len = signal.len();
    if len < 2 {
        return Err(Error::DegenerateSignal(len));
    }
    let mean = signal.iter().sum::<f64>() / len as f64;
    let mut buffer: Vec<Complex<f64>> = signal
        .iter()
        .map(|&x| Complex::new(x - mean, 0.0))
        .collect();
    FftPlanner::new().plan_fft_forward(len).process(&mut buffer);
    Ok(buffer
        .iter()
        .enumerate()
        .map(|(k, z)| SpectrumBin {
            frequency_index: k,
            power: z.norm_sqr() / len as f64,
        })
        .collect())
}

/// Largest single non-DC bin as a fraction of total non-DC power. Zero for a
/// flat spectrum.
pub fn dominant_share(bins: &[SpectrumBin]) -> f64 {
    let non_dc = bins.iter().filter(|b| b.frequency_index != 0);
    let (total, peak) = non_dc.fold((0.0, 0.0f64), |(t, m), b| (t + b.power, m.max(b.power)));
    if total == 0.0 {
        0.0
    } else {
        peak / total
    }
}

/// Smallest `p <= max_period` with `values[i] == values[i + p]` throughout.
pub fn smallest_period<T: PartialEq>(values: &[T], max_period: usize) -> Result<Option<usize>> {
    if max_period == 0 || 2 * max_period >= values.len() {
        return Err(Error::PeriodTooLong {
            max_period,
            len: values.len(),
        });
    }
    Ok((1..=max_period).find(|&p| values.iter().zip(&values[p..]).all(|(a, b)| a == b)))
}

pub fn aperiodicity_check(seq: &IndicatorSequence, max_period: usize) -> Result<Option<usize>> {
    smallest_period(&seq.values, max_period)
}

/// Differences between the first `count + 1` successive candidates `>= start`.
pub fn candidate_gaps(start: u64, count: usize) -> Vec<u64> {
    let c: Vec<u64> = Candidates::from(start).take(count + 1).collect();
    c.windows(2).map(|w| w[1] - w[0]).collect()
}

/// `frequency_index,power` rows under a header, LF endings.
pub fn write_spectrum_csv(bins: &[SpectrumBin], mut out: impl Write) -> std::io::Result<()> {
    writeln!(out, "frequency_index,power")?;
    for bin in bins {
        writeln!(out, "{},{}", bin.frequency_index, bin.power)?;
    }
    out.flush()
}
