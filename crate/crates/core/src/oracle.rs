//! Exact primality ground truth: a plain bitset sieve, a mod-30 wheel sieve
//! with the same output contract, and deterministic Miller-Rabin for single
//! 64-bit queries.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::wheel::{candidate_count_upto, BaseResidue, Candidates, BASE_RESIDUES, MODULUS};

/// Largest limit either sieve accepts.
pub const SIEVE_CAP: u64 = 1_000_000_000;

pub trait PrimalityOracle {
    fn is_prime(&self, n: u64) -> bool;
}

/// Stateless oracle backed by [`is_prime`].
#[derive(Debug, Clone, Copy, Default)]
pub struct MillerRabin;

impl PrimalityOracle for MillerRabin {
    fn is_prime(&self, n: u64) -> bool {
        is_prime(n)
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

// The first twelve primes as bases are deterministic for n < 3.3e24.
const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Deterministic Miller-Rabin, exact on all of `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Exact prime membership over `[0, limit]`, one bit per integer.
#[derive(Clone, PartialEq, Eq)]
pub struct PrimeSet {
    limit: u64,
    words: Vec<u64>,
}

impl std::fmt::Debug for PrimeSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PrimeSet")
            .field("limit", &self.limit)
            .field("count", &self.count())
            .finish()
    }
}

impl PrimeSet {
    fn empty(limit: u64) -> Self {
        PrimeSet {
            limit,
            words: vec![0; (limit / 64 + 1) as usize],
        }
    }

    fn insert(&mut self, n: u64) {
        self.words[(n / 64) as usize] |= 1 << (n % 64);
    }

    fn remove(&mut self, n: u64) {
        self.words[(n / 64) as usize] &= !(1 << (n % 64));
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Membership for `n <= limit`; `false` above the limit.
    pub fn contains(&self, n: u64) -> bool {
        n <= self.limit && self.words[(n / 64) as usize] >> (n % 64) & 1 == 1
    }

    pub fn count(&self) -> u64 {
        self.words.iter().map(|w| u64::from(w.count_ones())).sum()
    }

    /// Primes in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &word)| {
            let base = i as u64 * 64;
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as u64;
                rest &= rest - 1;
                Some(base + bit)
            })
        })
    }
}

impl PrimalityOracle for PrimeSet {
    /// Bit lookup within the limit, Miller-Rabin above it.
    fn is_prime(&self, n: u64) -> bool {
        if n <= self.limit {
            self.contains(n)
        } else {
            is_prime(n)
        }
    }
}

/// Work done by a sieve run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct SieveStats {
    /// Integers in `[0, limit]`.
    pub range: u64,
    /// Storage slots the sieve holds and scans.
    pub positions: u64,
    /// Slot clears performed while striking multiples.
    pub crossings: u64,
}

impl SieveStats {
    pub fn position_fraction(&self) -> f64 {
        self.positions as f64 / self.range as f64
    }
}

fn check_limit(limit: u64) -> Result<()> {
    if limit < 2 {
        return Err(Error::SieveLimitTooSmall(limit));
    }
    if limit > SIEVE_CAP {
        return Err(Error::SieveLimitTooLarge {
            limit,
            cap: SIEVE_CAP,
        });
    }
    Ok(())
}

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

pub fn sieve(limit: u64) -> Result<PrimeSet> {
    sieve_with_stats(limit).map(|(set, _)| set)
}

/// Sieve of Eratosthenes over every integer in `[0, limit]`.
pub fn sieve_with_stats(limit: u64) -> Result<(PrimeSet, SieveStats)> {
    check_limit(limit)?;
    let mut set = PrimeSet::empty(limit);
    for word in set.words.iter_mut() {
        *word = u64::MAX;
    }
    let tail = (limit + 1) % 64;
    if tail != 0 {
        *set.words.last_mut().expect("nonempty") = (1u64 << tail) - 1;
    }
    set.remove(0);
    set.remove(1);

    let mut crossings = 0;
    for p in 2..=isqrt(limit) {
        if !set.contains(p) {
            continue;
        }
        let mut m = p * p;
        while m <= limit {
            set.remove(m);
            crossings += 1;
            m += p;
        }
    }
    let stats = SieveStats {
        range: limit + 1,
        positions: limit + 1,
        crossings,
    };
    Ok((set, stats))
}

pub fn wheel_sieve(limit: u64) -> Result<PrimeSet> {
    wheel_sieve_with_stats(limit).map(|(set, _)| set)
}

/// Sieve over wheel candidates only: one byte per 30 integers, one bit per
/// base residue. A composite candidate is a product of two candidates, so
/// only candidate multiples `p * q` with `q >= p` are struck.
pub fn wheel_sieve_with_stats(limit: u64) -> Result<(PrimeSet, SieveStats)> {
    check_limit(limit)?;
    let blocks = (limit / MODULUS + 1) as usize;
    let mut slots = vec![0xffu8; blocks];
    let slot_of = |n: u64| -> (usize, u8) {
        let base = BaseResidue::new(n % MODULUS).expect("candidate");
        ((n / MODULUS) as usize, 1u8 << base.slot())
    };

    // 1 occupies a slot but is not prime.
    slots[0] &= !1;
    for (i, &r) in BASE_RESIDUES.iter().enumerate() {
        if (blocks as u64 - 1) * MODULUS + r > limit {
            slots[blocks - 1] &= !(1 << i);
        }
    }

    let mut crossings = 0;
    let root = isqrt(limit);
    for p in Candidates::from(7).take_while(|&p| p <= root) {
        let (block, bit) = slot_of(p);
        if slots[block] & bit == 0 {
            continue;
        }
        for q in Candidates::from(p) {
            let m = match p.checked_mul(q) {
                Some(m) if m <= limit => m,
                _ => break,
            };
            let (block, bit) = slot_of(m);
            slots[block] &= !bit;
            crossings += 1;
        }
    }

    let mut set = PrimeSet::empty(limit);
    for p in [2, 3, 5] {
        if p <= limit {
            set.insert(p);
        }
    }
    for (block, &byte) in slots.iter().enumerate() {
        let mut rest = byte;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            set.insert(block as u64 * MODULUS + BASE_RESIDUES[i]);
        }
    }

    let stats = SieveStats {
        range: limit + 1,
        positions: candidate_count_upto(limit),
        crossings,
    };
    Ok((set, stats))
}
