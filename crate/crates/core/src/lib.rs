//! Mod-30 wheel view of the natural numbers.
//!
//! Numbers are placed at angle `n` degrees and radius `n`; the primes above 5
//! all fall on 96 of the 360 half-lines, exactly those whose degree is coprime
//! to 30 mod 30. The crate classifies numbers on that wheel, builds the
//! 30-number cycle rhythms and twin-candidate positions that follow from it,
//! and checks every claim against an exact primality oracle.

pub mod bench;
pub mod cyclicity;
pub mod error;
pub mod geometry;
pub mod oracle;
pub mod plot;
pub mod spectrum;
pub mod twins;
pub mod verify;
pub mod wheel;

pub use error::{Error, Result};
pub use geometry::{
    polar_coordinates, ray_degree, ray_kind, thick_ray_degrees, PolarPoint, RayKind,
};
pub use oracle::{is_prime, sieve, wheel_sieve, MillerRabin, PrimalityOracle, PrimeSet};
pub use wheel::{candidates_in_range, classify, residue30, BaseResidue, WheelClass};
