//! Duality verification: encode, squeeze, and score a map across scales,
//! plus a seeded synthetic segment-map generator for desk-scale testing.

use std::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::codec::compute_attraction_field;
use crate::error::{Error, Result};
use crate::geometry::{ImageLattice, LineSegment, LineSegmentMap, Point2};
use crate::metrics::evaluate;
use crate::squeeze::{squeeze, SqueezeParams};

/// Precision / recall / F-measure at one scale.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalePoint {
    pub precision: f64,
    pub recall: f64,
    pub f_measure: f64,
}

/// Result of a multi-scale duality sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct ScaleSweepReport {
    /// Strictly increasing scale factors.
    pub scales: Vec<f64>,
    /// One entry per scale, in scale order.
    pub per_scale: Vec<ScalePoint>,
    pub mean_precision: f64,
    pub mean_recall: f64,
}

/// Configuration of the synthetic generator.
#[derive(Debug, Clone, PartialEq)]
pub struct SynthConfig {
    pub seed: u64,
    /// Inclusive range the segment count is drawn from.
    pub segment_count: RangeInclusive<usize>,
    pub min_length_px: f64,
    pub lattice: ImageLattice,
    /// Minimum distance between any two endpoints of different segments
    /// (0 disables the constraint).
    pub min_endpoint_separation_px: f64,
}

impl SynthConfig {
    /// 320x320 maps of 5..=30 segments at least 20 px long, the shape used
    /// by the desk-scale duality corpus.
    pub fn desk_scale(seed: u64) -> Self {
        SynthConfig {
            seed,
            segment_count: 5..=30,
            min_length_px: 20.0,
            lattice: ImageLattice::new(320, 320).expect("static dims"),
            min_endpoint_separation_px: 0.0,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.segment_count.is_empty() || *self.segment_count.start() < 1 {
            return Err(Error::Config(format!(
                "segment count range {:?} must be non-empty and start at 1 or more",
                self.segment_count
            )));
        }
        if !(self.min_length_px > 0.0) || !self.min_length_px.is_finite() {
            return Err(Error::Config(format!(
                "minimum length must be a positive real, got {}",
                self.min_length_px
            )));
        }
        if self.min_length_px > self.lattice.diagonal() {
            return Err(Error::Config(format!(
                "minimum length {} exceeds the lattice diagonal {:.3}",
                self.min_length_px,
                self.lattice.diagonal()
            )));
        }
        if self.min_endpoint_separation_px < 0.0 || !self.min_endpoint_separation_px.is_finite() {
            return Err(Error::Config(
                "endpoint separation must be a non-negative real".into(),
            ));
        }
        Ok(())
    }
}

/// Default scale grid 0.5 to 2.0 in steps of 0.1 (16 scales).
pub fn default_scale_grid() -> Vec<f64> {
    (5..=20).map(|k| k as f64 / 10.0).collect()
}

/// Scales endpoints and lattice by `s`. Lattice dimensions round to the
/// nearest integer (minimum 1); endpoints are clamped into the new bounds.
/// Segments that collapse under clamping are dropped.
pub fn scale_map(map: &LineSegmentMap, s: f64) -> Result<LineSegmentMap> {
    if !(s > 0.0) || !s.is_finite() {
        return Err(Error::domain(format!("scale must be a positive real, got {s}")));
    }
    let lattice = map.lattice();
    let w = ((lattice.width() as f64 * s).round() as u32).max(1);
    let h = ((lattice.height() as f64 * s).round() as u32).max(1);
    let scaled = ImageLattice::new(w, h)?;
    let clamp = |p: Point2| {
        Point2::new(
            (p.x * s).clamp(0.0, w as f64),
            (p.y * s).clamp(0.0, h as f64),
        )
    };
    let segments = map
        .segments()
        .iter()
        .map(|seg| LineSegment::new(clamp(seg.start), clamp(seg.end)))
        .filter(|seg| seg.start != seg.end)
        .collect();
    LineSegmentMap::new(scaled, segments)
}

/// Runs encode -> squeeze -> evaluate at every scale and aggregates means.
/// Scales must be strictly increasing and positive. Scales are processed
/// independently (in parallel); the report keeps input order.
pub fn verify_duality(
    map: &LineSegmentMap,
    scales: &[f64],
    params: &SqueezeParams,
) -> Result<ScaleSweepReport> {
    if map.is_empty() {
        return Err(Error::EmptyMap);
    }
    if scales.is_empty() {
        return Err(Error::domain("scale list must not be empty"));
    }
    for pair in scales.windows(2) {
        if !(pair[0] < pair[1]) {
            return Err(Error::domain(format!(
                "scales must be strictly increasing, got {} then {}",
                pair[0], pair[1]
            )));
        }
    }
    params.validate()?;

    let per_scale = scales
        .par_iter()
        .map(|&s| {
            let scaled = scale_map(map, s)?;
            if scaled.is_empty() {
                return Err(Error::EmptyMap);
            }
            let (afm, _) = compute_attraction_field(&scaled)?;
            let out = squeeze(&afm, params)?;
            let rep = evaluate(&out.segments, &scaled, 0.01)?;
            Ok(ScalePoint {
                precision: rep.precision,
                recall: rep.recall,
                f_measure: rep.f_measure,
            })
        })
        .collect::<Vec<Result<ScalePoint>>>()
        .into_iter()
        .collect::<Result<Vec<ScalePoint>>>()?;

    let n = per_scale.len() as f64;
    Ok(ScaleSweepReport {
        scales: scales.to_vec(),
        mean_precision: per_scale.iter().map(|p| p.precision).sum::<f64>() / n,
        mean_recall: per_scale.iter().map(|p| p.recall).sum::<f64>() / n,
        per_scale,
    })
}

const MAX_PLACEMENT_ATTEMPTS: usize = 10_000;

/// Generates a reproducible random segment map. The same configuration
/// always yields the same map.
pub fn generate_synthetic_map(config: &SynthConfig) -> Result<LineSegmentMap> {
    config.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let lattice = config.lattice;
    let n = rng.random_range(config.segment_count.clone());
    let w = lattice.width() as f64;
    let h = lattice.height() as f64;

    let mut segments: Vec<LineSegment> = Vec::with_capacity(n);
    for k in 0..n {
        let mut placed = false;
        for _ in 0..MAX_PLACEMENT_ATTEMPTS {
            let start = Point2::new(rng.random_range(0.0..=w), rng.random_range(0.0..=h));
            let end = Point2::new(rng.random_range(0.0..=w), rng.random_range(0.0..=h));
            if (end - start).length() < config.min_length_px {
                continue;
            }
            let sep = config.min_endpoint_separation_px;
            if sep > 0.0 {
                let too_close = segments.iter().any(|s| {
                    [s.start, s.end].iter().any(|&q| {
                        (q - start).length() < sep || (q - end).length() < sep
                    })
                });
                if too_close {
                    continue;
                }
            }
            segments.push(LineSegment::new(start, end));
            placed = true;
            break;
        }
        if !placed {
            return Err(Error::Config(format!(
                "could not place segment {k} after {MAX_PLACEMENT_ATTEMPTS} attempts"
            )));
        }
    }
    LineSegmentMap::new(lattice, segments)
}
