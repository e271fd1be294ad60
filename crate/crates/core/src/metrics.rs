//! Pixel-wise precision / recall / F-measure between segment maps.
//!
//! Both maps are digitized with an integer line scan over rounded endpoints,
//! then detected pixels are matched one-to-one to ground-truth pixels within
//! a tolerance of 0.01 of the image diagonal (by default). Matching is
//! greedy nearest-first: detected pixels in row-major order, each taking the
//! nearest unmatched ground-truth pixel (ties to the lowest row-major
//! ground-truth pixel), which is deterministic and cheap.

use rayon::prelude::*;

use crate::codec::AttractionFieldMap;
use crate::error::{Error, Result};
use crate::geometry::LineSegmentMap;
use crate::squeeze::{squeeze, SqueezeParams};

/// Outcome of one evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalReport {
    pub precision: f64,
    pub recall: f64,
    pub f_measure: f64,
    /// One-to-one matches found within tolerance.
    pub matched: usize,
    pub detected_pixels: usize,
    pub gt_pixels: usize,
    /// Matching tolerance in pixels (`rel_tolerance * diagonal`).
    pub tolerance_px: f64,
}

/// Digitizes a segment map: each segment is scanned between its rounded
/// endpoints, pixels outside the lattice are clipped, and the union is
/// returned sorted row-major without duplicates.
pub fn rasterize_segments(map: &LineSegmentMap) -> Vec<(u32, u32)> {
    let lattice = map.lattice();
    let round = |v: f64| (v + 0.5).floor() as i64;
    let mut pixels = Vec::new();
    for seg in map.segments() {
        bresenham(
            round(seg.start.x),
            round(seg.start.y),
            round(seg.end.x),
            round(seg.end.y),
            |x, y| {
                if x >= 0 && y >= 0 && x < lattice.width() as i64 && y < lattice.height() as i64 {
                    pixels.push((x as u32, y as u32));
                }
            },
        );
    }
    pixels.sort_unstable_by_key(|&(x, y)| (y, x));
    pixels.dedup();
    pixels
}

/// All-octant integer line scan.
fn bresenham(x0: i64, y0: i64, x1: i64, y1: i64, mut plot: impl FnMut(i64, i64)) {
    let dx = (x1 - x0).abs();
    let dy = -(y1 - y0).abs();
    let sx = if x0 < x1 { 1 } else { -1 };
    let sy = if y0 < y1 { 1 } else { -1 };
    let mut err = dx + dy;
    let (mut x, mut y) = (x0, y0);
    loop {
        plot(x, y);
        if x == x1 && y == y1 {
            break;
        }
        let e2 = 2 * err;
        if e2 >= dy {
            err += dy;
            x += sx;
        }
        if e2 <= dx {
            err += dx;
            y += sy;
        }
    }
}

/// Harmonic mean of precision and recall, zero when both are zero.
pub fn f_measure(p: f64, r: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&p) || !(0.0..=1.0).contains(&r) {
        return Err(Error::domain(format!(
            "precision and recall must be in [0, 1], got ({p}, {r})"
        )));
    }
    Ok(f_measure_unchecked(p, r))
}

#[inline]
fn f_measure_unchecked(p: f64, r: f64) -> f64 {
    if p + r == 0.0 {
        0.0
    } else {
        2.0 * p * r / (p + r)
    }
}

/// Compares a detected map against ground truth on a shared lattice.
///
/// Conventions: an empty detection has vacuous precision 1 (keeps precision
/// monotone under stricter thresholds); an empty ground truth likewise has
/// vacuous recall 1.
pub fn evaluate(
    detected: &LineSegmentMap,
    gt: &LineSegmentMap,
    rel_tolerance: f64,
) -> Result<EvalReport> {
    let lattice = detected.lattice();
    if lattice != gt.lattice() {
        return Err(Error::LatticeMismatch(
            lattice.width(),
            lattice.height(),
            gt.lattice().width(),
            gt.lattice().height(),
        ));
    }
    if !rel_tolerance.is_finite() || rel_tolerance < 0.0 {
        return Err(Error::domain(format!(
            "tolerance must be a non-negative real, got {rel_tolerance}"
        )));
    }
    let tolerance_px = rel_tolerance * lattice.diagonal();
    let det_px = rasterize_segments(detected);
    let gt_px = rasterize_segments(gt);
    let matched = match_one_to_one(&det_px, &gt_px, tolerance_px);

    let precision = if det_px.is_empty() {
        1.0
    } else {
        matched as f64 / det_px.len() as f64
    };
    let recall = if gt_px.is_empty() {
        1.0
    } else {
        matched as f64 / gt_px.len() as f64
    };
    Ok(EvalReport {
        precision,
        recall,
        f_measure: f_measure_unchecked(precision, recall),
        matched,
        detected_pixels: det_px.len(),
        gt_pixels: gt_px.len(),
        tolerance_px,
    })
}

/// Greedy nearest-first one-to-one matching. Ground-truth pixels are
/// bucketed on a grid at least as coarse as the tolerance, so only the
/// 3x3 bucket neighborhood of each detected pixel is searched.
fn match_one_to_one(det: &[(u32, u32)], gt: &[(u32, u32)], tolerance_px: f64) -> usize {
    if det.is_empty() || gt.is_empty() {
        return 0;
    }
    let tol_sq = tolerance_px * tolerance_px;
    let bucket = tolerance_px.ceil().max(1.0) as u64;
    let cols = gt.iter().map(|&(x, _)| x as u64 / bucket).max().unwrap() + 1;
    let rows = gt.iter().map(|&(_, y)| y as u64 / bucket).max().unwrap() + 1;
    let mut grid: Vec<Vec<usize>> = vec![Vec::new(); (cols * rows) as usize];
    for (i, &(x, y)) in gt.iter().enumerate() {
        grid[((y as u64 / bucket) * cols + x as u64 / bucket) as usize].push(i);
    }

    let mut taken = vec![false; gt.len()];
    let mut matched = 0usize;
    for &(dx, dy) in det {
        let bx = dx as u64 / bucket;
        let by = dy as u64 / bucket;
        let mut best: Option<(f64, (u32, u32), usize)> = None;
        for nby in by.saturating_sub(1)..=(by + 1).min(rows - 1) {
            for nbx in bx.saturating_sub(1)..=(bx + 1).min(cols - 1) {
                for &gi in &grid[(nby * cols + nbx) as usize] {
                    if taken[gi] {
                        continue;
                    }
                    let (gx, gy) = gt[gi];
                    let ddx = gx as f64 - dx as f64;
                    let ddy = gy as f64 - dy as f64;
                    let d2 = ddx * ddx + ddy * ddy;
                    if d2 > tol_sq {
                        continue;
                    }
                    let key = (gy, gx);
                    let better = match best {
                        None => true,
                        Some((bd, bkey, _)) => d2 < bd || (d2 == bd && key < bkey),
                    };
                    if better {
                        best = Some((d2, key, gi));
                    }
                }
            }
        }
        if let Some((_, _, gi)) = best {
            taken[gi] = true;
            matched += 1;
        }
    }
    matched
}

/// Default aspect-ratio threshold grid: 0.1 to 1.0 in steps of 0.1.
pub fn default_threshold_grid() -> Vec<f64> {
    (1..=10).map(|k| k as f64 / 10.0).collect()
}

/// Squeezes the field once per aspect-ratio threshold and evaluates each
/// result against the ground truth at the default 0.01-diagonal tolerance.
/// Thresholds run independently (in parallel); results keep input order.
pub fn pr_sweep(
    afm: &AttractionFieldMap,
    gt: &LineSegmentMap,
    thresholds: &[f64],
    base: &SqueezeParams,
) -> Result<Vec<(f64, EvalReport)>> {
    for &t in thresholds {
        if !(t > 0.0 && t <= 1.0) {
            return Err(Error::domain(format!(
                "aspect ratio threshold must be in (0, 1], got {t}"
            )));
        }
    }
    thresholds
        .par_iter()
        .map(|&t| {
            let out = squeeze(afm, &base.with_aspect_ratio_max(t))?;
            Ok((t, evaluate(&out.segments, gt, 0.01)?))
        })
        .collect::<Vec<Result<_>>>()
        .into_iter()
        .collect()
}

/// Sum over pixels of `|da_x| + |da_y|` between two fields of equal lattice
/// and transform state.
pub fn afm_l1(a: &AttractionFieldMap, b: &AttractionFieldMap) -> Result<f64> {
    if a.lattice() != b.lattice() {
        return Err(Error::LatticeMismatch(
            a.lattice().width(),
            a.lattice().height(),
            b.lattice().width(),
            b.lattice().height(),
        ));
    }
    if a.state() != b.state() {
        return Err(Error::WrongState {
            expected: a.state(),
            found: b.state(),
        });
    }
    Ok(a.vectors()
        .iter()
        .zip(b.vectors())
        .map(|(va, vb)| (va.x - vb.x).abs() + (va.y - vb.y).abs())
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codec::{compute_attraction_field, TransformState};
    use crate::geometry::{ImageLattice, LineSegment, Point2};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn seg(x1: f64, y1: f64, x2: f64, y2: f64) -> LineSegment {
        LineSegment::new(Point2::new(x1, y1), Point2::new(x2, y2))
    }

    fn map(w: u32, h: u32, segments: Vec<LineSegment>) -> LineSegmentMap {
        LineSegmentMap::new(ImageLattice::new(w, h).unwrap(), segments).unwrap()
    }

    #[test]
    fn rasterize_horizontal_run() {
        let m = map(10, 10, vec![seg(0.0, 0.0, 3.0, 0.0)]);
        assert_eq!(rasterize_segments(&m), vec![(0, 0), (1, 0), (2, 0), (3, 0)]);
    }

    #[test]
    fn rasterize_subpixel_stub() {
        let m = map(10, 10, vec![seg(0.0, 0.0, 0.0, 0.4)]);
        assert_eq!(rasterize_segments(&m), vec![(0, 0)]);
    }

    #[test]
    fn rasterize_perfect_diagonal() {
        let m = map(10, 10, vec![seg(0.0, 0.0, 3.0, 3.0)]);
        assert_eq!(rasterize_segments(&m), vec![(0, 0), (1, 1), (2, 2), (3, 3)]);
    }

    #[test]
    fn rasterize_clips_boundary_rounding() {
        // endpoint at x == width rounds to a column outside the lattice
        let m = map(10, 10, vec![seg(8.0, 2.0, 10.0, 2.0)]);
        assert_eq!(rasterize_segments(&m), vec![(8, 2), (9, 2)]);
    }

    #[test]
    fn self_evaluation_is_perfect() {
        let m = map(64, 64, vec![seg(3.0, 7.0, 50.0, 9.0), seg(10.0, 60.0, 60.0, 20.0)]);
        let rep = evaluate(&m, &m, 0.01).unwrap();
        assert_eq!(rep.precision, 1.0);
        assert_eq!(rep.recall, 1.0);
        assert_eq!(rep.f_measure, 1.0);
        assert_eq!(rep.matched, rep.gt_pixels);
    }

    #[test]
    fn empty_detection_convention() {
        let lattice = ImageLattice::new(32, 32).unwrap();
        let empty = LineSegmentMap::new(lattice, vec![]).unwrap();
        let gt = map(32, 32, vec![seg(2.0, 2.0, 28.0, 2.0)]);
        let rep = evaluate(&empty, &gt, 0.01).unwrap();
        assert_eq!(rep.precision, 1.0);
        assert_eq!(rep.recall, 0.0);
        assert_eq!(rep.f_measure, 0.0);
    }

    #[test]
    fn two_pixel_shift_within_tolerance_has_full_recall() {
        // 320x320 diagonal gives ~4.53 px tolerance at 0.01. The shift is
        // perpendicular to the segments, so every ground-truth pixel has its
        // displaced twin as unique nearest neighbor.
        let gt = map(
            320,
            320,
            vec![seg(20.0, 100.0, 280.0, 100.0), seg(30.0, 200.0, 250.0, 200.0)],
        );
        let shifted = map(
            320,
            320,
            vec![seg(20.0, 102.0, 280.0, 102.0), seg(30.0, 202.0, 250.0, 202.0)],
        );
        let rep = evaluate(&shifted, &gt, 0.01).unwrap();
        assert!((rep.tolerance_px - 4.525).abs() < 1e-2);
        assert_eq!(rep.recall, 1.0, "matched {} of {}", rep.matched, rep.gt_pixels);
    }

    #[test]
    fn matching_is_one_to_one() {
        let gt = map(64, 64, vec![seg(10.0, 10.0, 50.0, 10.0)]);
        let det = map(
            64,
            64,
            vec![seg(10.0, 11.0, 50.0, 11.0), seg(10.0, 12.0, 50.0, 12.0)],
        );
        let rep = evaluate(&det, &gt, 0.05).unwrap();
        assert!(rep.matched <= rep.gt_pixels.min(rep.detected_pixels));
        assert_eq!(rep.matched, rep.gt_pixels); // only |gt| of the detections can match
        assert!(rep.precision < 1.0);
    }

    #[test]
    fn f_measure_identities_and_domain() {
        assert_eq!(f_measure(1.0, 1.0).unwrap(), 1.0);
        assert_eq!(f_measure(0.0, 0.0).unwrap(), 0.0);
        assert_eq!(f_measure(0.5, 1.0).unwrap(), 2.0 / 3.0);
        assert!(f_measure(-0.1, 0.5).is_err());
        assert!(f_measure(0.5, 1.2).is_err());
        assert!(f_measure(f64::NAN, 0.5).is_err());
    }

    #[test]
    fn lattice_mismatch_rejected() {
        let a = map(10, 10, vec![seg(0.0, 0.0, 5.0, 5.0)]);
        let b = map(12, 10, vec![seg(0.0, 0.0, 5.0, 5.0)]);
        assert!(matches!(
            evaluate(&a, &b, 0.01),
            Err(Error::LatticeMismatch(..))
        ));
    }

    #[test]
    fn afm_l1_cases() {
        let m = map(16, 16, vec![seg(1.0, 8.0, 14.0, 8.0)]);
        let (a, _) = compute_attraction_field(&m).unwrap();
        assert_eq!(afm_l1(&a, &a).unwrap(), 0.0);

        let mut v = a.vectors().to_vec();
        v[5] = v[5] + Point2::new(1.0, -2.0);
        let b = AttractionFieldMap::new(a.lattice(), v, TransformState::Raw).unwrap();
        assert!((afm_l1(&a, &b).unwrap() - 3.0).abs() < 1e-12);
        assert_eq!(afm_l1(&a, &b).unwrap(), afm_l1(&b, &a).unwrap());

        // elementwise oracle on random pairs
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let rand_field = |rng: &mut ChaCha8Rng| {
            let v: Vec<Point2> = (0..256)
                .map(|_| Point2::new(rng.random_range(-5.0..5.0), rng.random_range(-5.0..5.0)))
                .collect();
            AttractionFieldMap::new(ImageLattice::new(16, 16).unwrap(), v, TransformState::Raw)
                .unwrap()
        };
        let x = rand_field(&mut rng);
        let y = rand_field(&mut rng);
        let expected: f64 = x
            .vectors()
            .iter()
            .zip(y.vectors())
            .map(|(a, b)| (a.x - b.x).abs() + (a.y - b.y).abs())
            .sum();
        assert_eq!(afm_l1(&x, &y).unwrap(), expected);

        // state mismatch
        let norm = crate::transforms::size_normalize(&a).unwrap();
        assert!(matches!(afm_l1(&a, &norm), Err(Error::WrongState { .. })));

        // triangle inequality within accumulation tolerance
        let z = rand_field(&mut rng);
        let xy = afm_l1(&x, &y).unwrap();
        let xz = afm_l1(&x, &z).unwrap();
        let zy = afm_l1(&z, &y).unwrap();
        assert!(xy <= (xz + zy) * (1.0 + 1e-6));
    }

    #[test]
    fn sweep_validates_and_orders() {
        let m = map(64, 64, vec![seg(4.0, 30.0, 60.0, 34.0)]);
        let (afm, _) = compute_attraction_field(&m).unwrap();
        let base = SqueezeParams::default();

        assert!(pr_sweep(&afm, &m, &[], &base).unwrap().is_empty());
        assert!(pr_sweep(&afm, &m, &[0.0], &base).is_err());
        assert!(pr_sweep(&afm, &m, &[1.1], &base).is_err());

        let out = pr_sweep(&afm, &m, &[0.2], &base).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].0, 0.2);
        assert!(out[0].1.precision >= 0.99, "P = {}", out[0].1.precision);

        let grid = default_threshold_grid();
        assert_eq!(grid.len(), 10);
        assert_eq!(grid[0], 0.1);
        assert_eq!(grid[9], 1.0);
        let reports = pr_sweep(&afm, &m, &grid, &base).unwrap();
        assert_eq!(reports.len(), 10);
        let r_at = |t: f64| {
            reports
                .iter()
                .find(|(tt, _)| *tt == t)
                .map(|(_, r)| r.recall)
                .unwrap()
        };
        assert!(r_at(1.0) >= r_at(0.1));
    }
}
