//! Polar placement of the natural numbers: number `n` sits at angle `n`
//! degrees and radius `n`. The 360 possible angles form half-lines; the 96
//! whose degree is a wheel residue mod 30 are the thick ones carrying every
//! prime above 5.

use serde::Serialize;

use crate::wheel::{BaseResidue, MODULUS};

pub const FULL_TURN: u64 = 360;

/// Number of thick half-lines: 12 turns of the wheel times 8 residues.
pub const THICK_RAY_COUNT: usize = 96;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RayKind {
    Thick,
    Thin,
}

impl RayKind {
    pub fn as_str(self) -> &'static str {
        match self {
            RayKind::Thick => "thick",
            RayKind::Thin => "thin",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PolarPoint {
    pub n: u64,
    pub x: f64,
    pub y: f64,
    pub ray_degree: u16,
}

impl PolarPoint {
    pub fn kind(&self) -> RayKind {
        kind_of_degree(self.ray_degree)
    }

    pub fn radius(&self) -> f64 {
        self.x.hypot(self.y)
    }
}

pub fn ray_degree(n: u64) -> u16 {
    (n % FULL_TURN) as u16
}

/// Places `n` in the plane. The angle is reduced mod 360 in integers before
/// any trigonometry so large `n` keep full precision.
pub fn polar_coordinates(n: u64) -> PolarPoint {
    let degree = ray_degree(n);
    let (sin, cos) = f64::from(degree).to_radians().sin_cos();
    let radius = n as f64;
    PolarPoint {
        n,
        x: radius * cos,
        y: radius * sin,
        ray_degree: degree,
    }
}

fn kind_of_degree(degree: u16) -> RayKind {
    if BaseResidue::new(u64::from(degree) % MODULUS).is_some() {
        RayKind::Thick
    } else {
        RayKind::Thin
    }
}

pub fn is_thick_degree(degree: u16) -> bool {
    degree < FULL_TURN as u16 && kind_of_degree(degree) == RayKind::Thick
}

/// The 96 thick degrees in `[0, 360)`, ascending.
pub fn thick_ray_degrees() -> Vec<u16> {
    (0..FULL_TURN as u16)
        .filter(|&d| is_thick_degree(d))
        .collect()
}

pub fn ray_kind(n: u64) -> RayKind {
    kind_of_degree(ray_degree(n))
}
