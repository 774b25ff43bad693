//! Oracle checks of the wheel claims over a whole range.

use serde::Serialize;

use crate::geometry::{ray_degree, thick_ray_degrees};
use crate::oracle::PrimalityOracle;
use crate::wheel::{classify, WheelClass, MODULUS};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConclusionReport {
    pub max: u64,
    /// Primes above 5 examined.
    pub primes_checked: u64,
    /// Primes above 5 that are not wheel candidates.
    pub necessity_violations: Vec<u64>,
    /// Numbers classified as certain composites.
    pub certain_composites: u64,
    /// Certain composites the oracle calls prime.
    pub compositeness_violations: Vec<u64>,
}

impl ConclusionReport {
    pub fn holds(&self) -> bool {
        self.necessity_violations.is_empty() && self.compositeness_violations.is_empty()
    }
}

/// Every prime above 5 is a candidate; no certain composite is prime.
pub fn check_conclusions(max: u64, oracle: &impl PrimalityOracle) -> ConclusionReport {
    let mut report = ConclusionReport {
        max,
        primes_checked: 0,
        necessity_violations: Vec::new(),
        certain_composites: 0,
        compositeness_violations: Vec::new(),
    };
    for n in 1..=max {
        let class = classify(n).expect("n >= 1");
        let prime = oracle.is_prime(n);
        if prime && n > 5 {
            report.primes_checked += 1;
            if !class.is_candidate() {
                report.necessity_violations.push(n);
            }
        }
        if class == WheelClass::CertainComposite {
            report.certain_composites += 1;
            if prime {
                report.compositeness_violations.push(n);
            }
        }
    }
    report
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RayCoverage {
    pub max: u64,
    /// Distinct `p mod 360` over primes `5 < p <= max`, ascending.
    pub degrees_hit: Vec<u16>,
    pub missed_thick: Vec<u16>,
    pub hit_thin: Vec<u16>,
}

impl RayCoverage {
    pub fn matches_thick(&self) -> bool {
        self.missed_thick.is_empty() && self.hit_thin.is_empty()
    }
}

pub fn ray_coverage(primes: impl IntoIterator<Item = u64>, max: u64) -> RayCoverage {
    let mut hit = [false; 360];
    for p in primes.into_iter().filter(|&p| p > 5 && p <= max) {
        hit[ray_degree(p) as usize] = true;
    }
    let degrees_hit: Vec<u16> = (0..360u16).filter(|&d| hit[d as usize]).collect();
    let thick = thick_ray_degrees();
    RayCoverage {
        max,
        missed_thick: thick
            .iter()
            .copied()
            .filter(|&d| !hit[d as usize])
            .collect(),
        hit_thin: degrees_hit
            .iter()
            .copied()
            .filter(|d| !thick.contains(d))
            .collect(),
        degrees_hit,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DensityReport {
    pub windows_checked: u64,
    /// Windows `m` whose candidate count is not 8.
    pub candidate_violations: Vec<u64>,
    /// Windows `m` holding more than 8 primes.
    pub prime_violations: Vec<u64>,
    pub max_primes_in_window: u64,
}

impl DensityReport {
    pub fn holds(&self) -> bool {
        self.candidate_violations.is_empty() && self.prime_violations.is_empty()
    }
}

/// Windows `[30m, 30m + 29]` for `1 <= m <= max_window`.
pub fn check_density(max_window: u64, oracle: &impl PrimalityOracle) -> DensityReport {
    let mut report = DensityReport {
        windows_checked: 0,
        candidate_violations: Vec::new(),
        prime_violations: Vec::new(),
        max_primes_in_window: 0,
    };
    for m in 1..=max_window {
        let lo = MODULUS * m;
        let (mut candidates, mut primes) = (0, 0);
        for n in lo..lo + MODULUS {
            if classify(n).expect("n >= 1").is_candidate() {
                candidates += 1;
            }
            if oracle.is_prime(n) {
                primes += 1;
            }
        }
        report.windows_checked += 1;
        report.max_primes_in_window = report.max_primes_in_window.max(primes);
        if candidates != 8 {
            report.candidate_violations.push(m);
        }
        if primes > 8 {
            report.prime_violations.push(m);
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::sieve;

    #[test]
    fn conclusions_hold_to_a_million() {
        let set = sieve(1_000_000).unwrap();
        let report = check_conclusions(1_000_000, &set);
        assert!(report.holds());
        assert_eq!(report.primes_checked, 78498 - 3);
    }

    #[test]
    fn lying_oracle_is_caught() {
        struct Liar;
        impl PrimalityOracle for Liar {
            fn is_prime(&self, n: u64) -> bool {
                n == 7 || n == 9
            }
        }
        let report = check_conclusions(20, &Liar);
        assert_eq!(report.necessity_violations, vec![9]);
        assert_eq!(report.compositeness_violations, vec![9]);
        assert!(!report.holds());
    }

    #[test]
    fn rays_hit_by_small_primes() {
        let set = sieve(100_000).unwrap();
        let coverage = ray_coverage(set.iter(), 100_000);
        assert!(coverage.matches_thick());
        assert_eq!(coverage.degrees_hit.len(), 96);
        let partial = ray_coverage(set.iter(), 100);
        assert!(!partial.missed_thick.is_empty());
        assert!(partial.hit_thin.is_empty());
    }

    #[test]
    fn first_window_excluded_for_a_reason() {
        let set = sieve(100).unwrap();
        // [0, 29] holds 2, 3, 5 and seven candidate primes.
        assert_eq!((0..30).filter(|&n| set.contains(n)).count(), 10);
        let report = check_density(3, &set);
        assert!(report.holds());
        assert_eq!(report.max_primes_in_window, 7);
    }
}
