//! SVG figures and CSV point dumps.
//!
//! Output is byte-stable for a fixed input: coordinates are printed with a
//! fixed number of decimals and nothing time- or random-dependent is emitted.

use std::fmt::Write as _;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{polar_coordinates, ray_kind, thick_ray_degrees, RayKind};
use crate::oracle::PrimalityOracle;
use crate::wheel::{classify, WheelClass};

pub const MIN_VIEWPORT_PX: u32 = 64;

/// Fraction of the shorter viewport side covered by radius `max_n`.
const RADIUS_FILL: f64 = 0.48;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Stroke {
    pub width: f64,
    pub color: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Glyph {
    Circle,
    Square,
    Cross,
}

impl Glyph {
    pub fn as_str(self) -> &'static str {
        match self {
            Glyph::Circle => "circle",
            Glyph::Square => "square",
            Glyph::Cross => "cross",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PlotConfig {
    pub max_n: u64,
    pub width_px: u32,
    pub height_px: u32,
    pub thick_style: Stroke,
    pub thin_style: Stroke,
    pub candidate_prime: Glyph,
    pub candidate_composite: Glyph,
    pub non_candidate: Glyph,
}

impl Default for PlotConfig {
    fn default() -> Self {
        PlotConfig {
            max_n: 3600,
            width_px: 800,
            height_px: 800,
            thick_style: Stroke {
                width: 1.2,
                color: "#111111".into(),
            },
            thin_style: Stroke {
                width: 0.6,
                color: "#b0b0b0".into(),
            },
            candidate_prime: Glyph::Circle,
            candidate_composite: Glyph::Square,
            non_candidate: Glyph::Cross,
        }
    }
}

impl PlotConfig {
    pub fn validate(&self) -> Result<()> {
        if self.width_px < MIN_VIEWPORT_PX || self.height_px < MIN_VIEWPORT_PX {
            return Err(Error::InvalidConfig(format!(
                "viewport {}x{} is below {MIN_VIEWPORT_PX}x{MIN_VIEWPORT_PX}",
                self.width_px, self.height_px
            )));
        }
        if self.max_n == 0 {
            return Err(Error::InvalidConfig("max_n must be at least 1".into()));
        }
        Ok(())
    }

    fn stroke(&self, kind: RayKind) -> &Stroke {
        match kind {
            RayKind::Thick => &self.thick_style,
            RayKind::Thin => &self.thin_style,
        }
    }

    /// Marker for `n`: circle for primes, square for composite candidates,
    /// cross for everything off the wheel.
    pub fn glyph_for(&self, n: u64, oracle: &impl PrimalityOracle) -> Glyph {
        match classify(n) {
            Ok(WheelClass::SpecialPrime { .. }) => self.candidate_prime,
            Ok(WheelClass::Candidate { .. }) if oracle.is_prime(n) => self.candidate_prime,
            Ok(WheelClass::Candidate { .. }) => self.candidate_composite,
            _ => self.non_candidate,
        }
    }
}

fn svg_open(out: &mut String, width: u32, height: u32) {
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(
        out,
        r#"<rect width="{width}" height="{height}" fill="white"/>"#
    );
}

/// Every `n <= max_n` at its polar position, thick-ray points drawn darker
/// and larger, with the 96 thick half-lines as guides.
pub fn render_rays(config: &PlotConfig, oracle: &impl PrimalityOracle) -> Result<String> {
    config.validate()?;
    let (w, h) = (f64::from(config.width_px), f64::from(config.height_px));
    let (cx, cy) = (w / 2.0, h / 2.0);
    let scale = RADIUS_FILL * w.min(h) / config.max_n as f64;

    let mut out = String::new();
    svg_open(&mut out, config.width_px, config.height_px);

    let guide = RADIUS_FILL * w.min(h);
    let _ = writeln!(
        out,
        r#"<g class="rays" stroke="{}" stroke-width="0.3" stroke-opacity="0.25">"#,
        config.thick_style.color
    );
    for degree in thick_ray_degrees() {
        let (sin, cos) = f64::from(degree).to_radians().sin_cos();
        let _ = writeln!(
            out,
            r#"<line class="ray" data-degree="{degree}" x1="{cx:.3}" y1="{cy:.3}" x2="{:.3}" y2="{:.3}"/>"#,
            cx + guide * cos,
            cy - guide * sin
        );
    }
    let _ = writeln!(out, "</g>");

    for n in 1..=config.max_n {
        let p = polar_coordinates(n);
        let kind = p.kind();
        let stroke = config.stroke(kind);
        let prime = if oracle.is_prime(n) { " prime" } else { "" };
        let _ = writeln!(
            out,
            r#"<circle class="pt {}{prime}" data-n="{n}" cx="{:.3}" cy="{:.3}" r="{:.2}" fill="{}"/>"#,
            kind.as_str(),
            cx + p.x * scale,
            cy - p.y * scale,
            stroke.width,
            stroke.color
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StripMode {
    /// Every number gets a marker.
    All,
    /// Wheel candidates only; off-wheel crosses are omitted.
    PrimesOnly,
}

/// A number line of `count` numbers from `start`, wrapped into rows of 30 so
/// each row is one wheel turn.
pub fn render_cycle_strip(
    start: u64,
    count: u64,
    oracle: &impl PrimalityOracle,
    config: &PlotConfig,
    mode: StripMode,
) -> Result<String> {
    config.validate()?;
    if start == 0 {
        return Err(Error::Zero);
    }
    if count == 0 {
        return Err(Error::EmptyCount);
    }
    let end = start.checked_add(count - 1).ok_or(Error::InvalidRange {
        lo: start,
        hi: u64::MAX,
    })?;

    let per_row = count.min(30);
    let rows = count.div_ceil(30);
    let (w, h) = (f64::from(config.width_px), f64::from(config.height_px));
    let cell = (w / per_row as f64).min(h / rows as f64);
    let half = 0.3 * cell;

    let mut out = String::new();
    svg_open(&mut out, config.width_px, config.height_px);
    for n in start..=end {
        let i = n - start;
        let x = (i % 30) as f64 * cell + cell / 2.0;
        let y = (i / 30) as f64 * cell + cell / 2.0;
        let glyph = config.glyph_for(n, oracle);
        if mode == StripMode::PrimesOnly && glyph == config.non_candidate {
            continue;
        }
        let stroke = config.stroke(ray_kind(n));
        let class = glyph.as_str();
        let _ = match glyph {
            Glyph::Circle => writeln!(
                out,
                r#"<circle class="marker {class}" data-n="{n}" cx="{x:.3}" cy="{y:.3}" r="{half:.3}" fill="{}"/>"#,
                stroke.color
            ),
            Glyph::Square => writeln!(
                out,
                r#"<rect class="marker {class}" data-n="{n}" x="{:.3}" y="{:.3}" width="{:.3}" height="{:.3}" fill="{}"/>"#,
                x - half,
                y - half,
                2.0 * half,
                2.0 * half,
                stroke.color
            ),
            Glyph::Cross => writeln!(
                out,
                r#"<path class="marker {class}" data-n="{n}" d="M{:.3},{:.3}L{:.3},{:.3}M{:.3},{:.3}L{:.3},{:.3}" stroke="{}" stroke-width="{:.2}"/>"#,
                x - half,
                y - half,
                x + half,
                y + half,
                x - half,
                y + half,
                x + half,
                y - half,
                stroke.color,
                stroke.width
            ),
        };
    }
    out.push_str("</svg>\n");
    Ok(out)
}

/// Writes `n,x,y,ray_degree,kind` rows for `lo..=hi` and returns the data rows written.
pub fn write_points_range(lo: u64, hi: u64, mut out: impl Write) -> std::io::Result<u64> {
    writeln!(out, "n,x,y,ray_degree,kind")?;
    let mut rows = 0;
    for n in lo..=hi {
        let p = polar_coordinates(n);
        writeln!(
            out,
            "{},{:.6},{:.6},{},{}",
            n,
            p.x,
            p.y,
            p.ray_degree,
            p.kind().as_str()
        )?;
        rows += 1;
    }
    out.flush()?;
    Ok(rows)
}

pub fn write_points_csv(max_n: u64, path: impl AsRef<Path>) -> Result<u64> {
    let path = path.as_ref();
    let io_err = |source| Error::Io {
        path: path.to_path_buf(),
        source,
    };
    let file = File::create(path).map_err(io_err)?;
    write_points_range(1, max_n, BufWriter::new(file)).map_err(io_err)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{sieve, MillerRabin};

    fn markers(svg: &str, class: &str) -> Vec<u64> {
        let needle = format!(r#"class="marker {class}" data-n=""#);
        svg.match_indices(&needle)
            .map(|(i, _)| {
                let rest = &svg[i + needle.len()..];
                rest[..rest.find('"').unwrap()].parse().unwrap()
            })
            .collect()
    }

    #[test]
    fn rays_one_point_per_number() {
        let config = PlotConfig::default();
        let set = sieve(3600).unwrap();
        let svg = render_rays(&config, &set).unwrap();
        assert_eq!(svg.matches(r#"class="pt "#).count(), 3600);
        assert_eq!(svg.matches(r#"class="ray""#).count(), 96);
        let thick = svg.matches(r#"class="pt thick"#).count();
        let expected = (1..=3600)
            .filter(|&n| ray_kind(n) == RayKind::Thick)
            .count();
        assert_eq!(thick, expected);
        assert_eq!(svg, render_rays(&config, &set).unwrap());
    }

    #[test]
    fn small_viewport_stays_inside() {
        let config = PlotConfig {
            max_n: 100,
            width_px: 64,
            height_px: 64,
            ..PlotConfig::default()
        };
        let svg = render_rays(&config, &MillerRabin).unwrap();
        for attr in [" cx=\"", " cy=\""] {
            for (i, _) in svg.match_indices(attr) {
                let rest = &svg[i + attr.len()..];
                let v: f64 = rest[..rest.find('"').unwrap()].parse().unwrap();
                assert!((0.0..=64.0).contains(&v), "{attr}{v}");
            }
        }
    }

    #[test]
    fn too_small_viewport_is_rejected() {
        let config = PlotConfig {
            width_px: 63,
            ..PlotConfig::default()
        };
        assert!(matches!(
            render_rays(&config, &MillerRabin),
            Err(Error::InvalidConfig(_))
        ));
        let config = PlotConfig {
            max_n: 0,
            ..PlotConfig::default()
        };
        assert!(config.validate().is_err());
    }

    #[test]
    fn strip_squares_at_77_and_91() {
        let svg = render_cycle_strip(50, 60, &MillerRabin, &PlotConfig::default(), StripMode::All)
            .unwrap();
        assert_eq!(markers(&svg, "square"), vec![77, 91]);
        assert_eq!(markers(&svg, "circle").len(), 14);
        assert_eq!(markers(&svg, "cross").len(), 44);
    }

    #[test]
    fn strip_of_one_cycle() {
        let svg = render_cycle_strip(50, 30, &MillerRabin, &PlotConfig::default(), StripMode::All)
            .unwrap();
        let wheel = markers(&svg, "circle").len() + markers(&svg, "square").len();
        assert_eq!(wheel, 8);
        assert_eq!(markers(&svg, "cross").len(), 22);
    }

    #[test]
    fn strip_single_marker() {
        let svg = render_cycle_strip(53, 1, &MillerRabin, &PlotConfig::default(), StripMode::All)
            .unwrap();
        assert_eq!(svg.matches(r#"class="marker "#).count(), 1);
        assert!(
            render_cycle_strip(53, 0, &MillerRabin, &PlotConfig::default(), StripMode::All)
                .is_err()
        );
    }

    #[test]
    fn primes_only_mode_drops_crosses() {
        let svg = render_cycle_strip(
            50,
            60,
            &MillerRabin,
            &PlotConfig::default(),
            StripMode::PrimesOnly,
        )
        .unwrap();
        assert!(markers(&svg, "cross").is_empty());
        assert_eq!(markers(&svg, "square"), vec![77, 91]);
        assert_eq!(markers(&svg, "circle").len(), 14);
    }

    #[test]
    fn strip_markers_agree_with_class_and_oracle() {
        let set = sieve(2000).unwrap();
        let svg =
            render_cycle_strip(1, 1500, &set, &PlotConfig::default(), StripMode::All).unwrap();
        for n in markers(&svg, "circle") {
            assert!(set.contains(n), "{n}");
        }
        for n in markers(&svg, "square") {
            assert!(
                classify(n).unwrap().is_candidate() && !set.contains(n),
                "{n}"
            );
        }
        for n in markers(&svg, "cross") {
            assert_eq!(classify(n).unwrap(), WheelClass::CertainComposite, "{n}");
        }
    }

    #[test]
    fn points_csv_rows() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("points.csv");
        assert_eq!(write_points_csv(10, &path).unwrap(), 10);
        let first = std::fs::read(&path).unwrap();
        let text = String::from_utf8(first.clone()).unwrap();
        assert_eq!(text.lines().count(), 11);
        assert_eq!(text.lines().next(), Some("n,x,y,ray_degree,kind"));
        assert!(!text.contains('\r'));
        write_points_csv(10, &path).unwrap();
        assert_eq!(std::fs::read(&path).unwrap(), first);
    }

    #[test]
    fn points_csv_worked_example_row() {
        let mut out = Vec::new();
        write_points_range(7310033, 7310033, &mut out).unwrap();
        let text = String::from_utf8(out).unwrap();
        let row: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
        assert_eq!(row[0], "7310033");
        let x: f64 = row[1].parse().unwrap();
        let y: f64 = row[2].parse().unwrap();
        assert!((x - -4399287.68).abs() <= 0.5);
        assert!((y - -5838051.93).abs() <= 0.5);
        assert_eq!(row[3], "233");
        assert_eq!(row[4], "thick");
    }

    #[test]
    fn points_csv_reports_destination() {
        let err = write_points_csv(3, "/nonexistent-dir/points.csv").unwrap_err();
        assert!(err.to_string().contains("/nonexistent-dir/points.csv"));
    }
}
