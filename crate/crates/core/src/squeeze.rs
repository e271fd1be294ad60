//! Decoding an attraction field back into line segments.
//!
//! Two stages. First the line proposal map: every pixel's real-valued
//! projection point `v(p) = p + a(p)` is discretized with `floor(v + 0.5)`
//! and its record filed at that cell, so cells near segment geometry collect
//! the attraction vectors of their whole partition region. Second an
//! iterative greedy grouping: seed at a record, take the direction
//! perpendicular to its vector as the line direction, absorb angularly
//! aligned records inside a small window around the group's two extreme
//! cells until growth stops, then accept the candidate only if the
//! direction-aligned outer rectangle of its support is thin enough.
//!
//! Orientation is handled modulo 180 degrees throughout: attraction vectors
//! point at a line from either side, so only the perpendicular's direction
//! class is meaningful. Group direction is the circular mean of the support
//! tangents (angle doubling, average, halve).
//!
//! Failure handling follows the two-tier scheme of the grouping: a seed
//! whose initial window search absorbs nothing is retired alone; a grown
//! candidate that fails rectangle verification releases its support,
//! retires its seed record, and stops the seed's cell from seeding again.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::codec::{AttractionFieldMap, TransformState};
use crate::error::{Error, Result};
use crate::geometry::{ImageLattice, LineSegment, LineSegmentMap, Point2};

/// Attraction vectors shorter than this have no usable tangent. They never
/// seed a group but may be absorbed into one, adopting its direction.
pub const ZERO_VECTOR_EPS: f64 = 1e-6;

/// One pixel's attraction vector filed under its discretized projection cell.
#[derive(Debug, Clone, PartialEq)]
pub struct AttractionRecord {
    /// Source pixel `p`.
    pub source: (u32, u32),
    /// Attraction vector `a(p)` in pixels.
    pub vector: Point2,
    /// Real-valued projection point `v(p) = p + a(p)`.
    pub projection: Point2,
    /// Consumed by an accepted segment (or tentatively held by a growing group).
    pub used: bool,
    /// Permanently retired after seeding a rejected candidate.
    pub discarded_as_seed: bool,
}

/// Per-cell candidate sets of attraction records.
#[derive(Debug, Clone)]
pub struct LineProposalMap {
    lattice: ImageLattice,
    cells: Vec<Vec<AttractionRecord>>,
}

impl LineProposalMap {
    #[inline]
    pub fn lattice(&self) -> ImageLattice {
        self.lattice
    }

    #[inline]
    pub fn cell(&self, x: u32, y: u32) -> &[AttractionRecord] {
        &self.cells[self.lattice.index(x, y)]
    }

    #[inline]
    pub fn cells(&self) -> &[Vec<AttractionRecord>] {
        &self.cells
    }

    pub fn total_records(&self) -> usize {
        self.cells.iter().map(Vec::len).sum()
    }
}

/// Grouping parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct SqueezeParams {
    /// Half-width of the search window around extreme cells; 1 gives the
    /// 3x3 window.
    pub window_radius: u32,
    /// Maximum angular distance (degrees, mod 180) between a record's
    /// tangent and the group direction.
    pub angular_threshold_deg: f64,
    /// Maximum width/length of the support's outer rectangle, in (0, 1].
    pub aspect_ratio_max: f64,
    /// Minimum records in an accepted support; below 2 no direction exists.
    pub min_support: usize,
    /// When set, seed order is a seeded shuffle instead of row-major.
    pub rng_seed: Option<u64>,
}

impl Default for SqueezeParams {
    fn default() -> Self {
        SqueezeParams {
            window_radius: 1,
            angular_threshold_deg: 10.0,
            aspect_ratio_max: 0.2,
            min_support: 2,
            rng_seed: None,
        }
    }
}

impl SqueezeParams {
    pub fn validate(&self) -> Result<()> {
        if self.window_radius < 1 {
            return Err(Error::domain("window radius must be at least 1"));
        }
        if !(self.angular_threshold_deg > 0.0 && self.angular_threshold_deg <= 90.0) {
            return Err(Error::domain(format!(
                "angular threshold must be in (0, 90] degrees, got {}",
                self.angular_threshold_deg
            )));
        }
        if !(self.aspect_ratio_max > 0.0 && self.aspect_ratio_max <= 1.0) {
            return Err(Error::domain(format!(
                "aspect ratio threshold must be in (0, 1], got {}",
                self.aspect_ratio_max
            )));
        }
        if self.min_support < 2 {
            return Err(Error::domain("min support must be at least 2"));
        }
        Ok(())
    }

    /// Same parameters with a different aspect-ratio ceiling (threshold sweeps).
    pub fn with_aspect_ratio_max(&self, aspect_ratio_max: f64) -> SqueezeParams {
        SqueezeParams {
            aspect_ratio_max,
            ..self.clone()
        }
    }
}

/// Result of squeezing an attraction field.
#[derive(Debug, Clone, PartialEq)]
pub struct SqueezeOutput {
    /// Recovered segments on the field's lattice.
    pub segments: LineSegmentMap,
    /// Support-set size of each emitted segment, in emission order.
    pub support_sizes: Vec<usize>,
    /// Seeds whose candidate failed verification (permanently retired).
    pub rejected_seed_count: usize,
}

/// Builds the line proposal map from a raw attraction field. Records whose
/// discretized projection falls outside the lattice are dropped (cannot
/// happen for exactly encoded fields, can for predicted ones).
pub fn build_line_proposal_map(afm: &AttractionFieldMap) -> Result<LineProposalMap> {
    afm.ensure_state(TransformState::Raw)?;
    let lattice = afm.lattice();
    let mut cells = vec![Vec::new(); lattice.pixel_count()];
    for y in 0..lattice.height() {
        for x in 0..lattice.width() {
            let a = afm.vector_at(x, y);
            let v = Point2::new(x as f64 + a.x, y as f64 + a.y);
            let cx = (v.x + 0.5).floor();
            let cy = (v.y + 0.5).floor();
            if cx >= 0.0 && cx < lattice.width() as f64 && cy >= 0.0 && cy < lattice.height() as f64
            {
                cells[lattice.index(cx as u32, cy as u32)].push(AttractionRecord {
                    source: (x, y),
                    vector: a,
                    projection: v,
                    used: false,
                    discarded_as_seed: false,
                });
            }
        }
    }
    Ok(LineProposalMap { lattice, cells })
}

/// Tangent direction of an attraction vector: the perpendicular, reduced
/// to [0, pi).
#[inline]
fn tangent_angle(a: Point2) -> f64 {
    // perpendicular of (ax, ay) is (-ay, ax)
    let theta = f64::atan2(a.x, -a.y);
    let theta = theta.rem_euclid(std::f64::consts::PI);
    if theta >= std::f64::consts::PI {
        0.0
    } else {
        theta
    }
}

/// Distance between two direction classes, in [0, pi/2].
#[inline]
fn angular_distance(a: f64, b: f64) -> f64 {
    let d = (a - b).abs();
    d.min(std::f64::consts::PI - d)
}

/// Record address inside the proposal map.
type RecordId = (usize, usize); // (cell index, slot within cell)

struct Grouping<'a> {
    cells: &'a mut [Vec<AttractionRecord>],
    /// Records per cell that are neither used nor discarded; lets window
    /// scans skip exhausted cells without touching their slots.
    active_count: Vec<u32>,
    lattice: ImageLattice,
    window_radius: i64,
    tau_rad: f64,
}

impl Grouping<'_> {
    #[inline]
    fn record(&self, id: RecordId) -> &AttractionRecord {
        &self.cells[id.0][id.1]
    }

    #[inline]
    fn record_mut(&mut self, id: RecordId) -> &mut AttractionRecord {
        &mut self.cells[id.0][id.1]
    }

    fn cell_coords(&self, cell: usize) -> (i64, i64) {
        let w = self.lattice.width() as usize;
        ((cell % w) as i64, (cell / w) as i64)
    }

    /// Absorbs unused aligned records from the window around `center`,
    /// skipping cells already covered by `skip` (the other extreme's window).
    fn absorb_window(
        &mut self,
        center: (i64, i64),
        skip: Option<(i64, i64)>,
        theta: f64,
        support: &mut Vec<RecordId>,
    ) -> bool {
        let r = self.window_radius;
        let mut absorbed = false;
        for dy in -r..=r {
            for dx in -r..=r {
                let (cx, cy) = (center.0 + dx, center.1 + dy);
                if cx < 0
                    || cy < 0
                    || cx >= self.lattice.width() as i64
                    || cy >= self.lattice.height() as i64
                {
                    continue;
                }
                if let Some((ox, oy)) = skip {
                    if (cx - ox).abs() <= r && (cy - oy).abs() <= r {
                        continue;
                    }
                }
                let cell = self.lattice.index(cx as u32, cy as u32);
                if self.active_count[cell] == 0 {
                    continue;
                }
                for slot in 0..self.cells[cell].len() {
                    let rec = &self.cells[cell][slot];
                    if rec.used || rec.discarded_as_seed {
                        continue;
                    }
                    let aligned = rec.vector.length() < ZERO_VECTOR_EPS
                        || angular_distance(tangent_angle(rec.vector), theta) <= self.tau_rad;
                    if aligned {
                        self.cells[cell][slot].used = true;
                        self.active_count[cell] -= 1;
                        support.push((cell, slot));
                        absorbed = true;
                    }
                }
            }
        }
        absorbed
    }

    /// Grows a group from `seed` and returns (support, final direction).
    /// The support holds the seed first; all members are marked used.
    ///
    /// Per round: scan the windows around the two extreme cells, absorb
    /// aligned records, then update the direction (running double-angle
    /// sum, so the circular mean costs only the new records) and the
    /// extremes (projection offsets from the seed along the new direction).
    fn grow(&mut self, seed: RecordId) -> (Vec<RecordId>, f64) {
        let anchor = self.record(seed).projection;
        let mut theta = tangent_angle(self.record(seed).vector);
        self.record_mut(seed).used = true;
        self.active_count[seed.0] -= 1;
        let mut support = vec![seed];

        let t2 = 2.0 * theta;
        let mut dir_sum = (t2.cos(), t2.sin());
        let mut lo = seed;
        let mut hi = seed;

        loop {
            let c_lo = self.cell_coords(lo.0);
            let c_hi = self.cell_coords(hi.0);
            let first_new = support.len();
            let mut absorbed = self.absorb_window(c_lo, None, theta, &mut support);
            if c_hi != c_lo {
                absorbed |= self.absorb_window(c_hi, Some(c_lo), theta, &mut support);
            }
            if !absorbed {
                break;
            }

            for &id in &support[first_new..] {
                let rec = self.record(id);
                if rec.vector.length() >= ZERO_VECTOR_EPS {
                    let t2 = 2.0 * tangent_angle(rec.vector);
                    dir_sum.0 += t2.cos();
                    dir_sum.1 += t2.sin();
                }
            }
            if dir_sum.0.hypot(dir_sum.1) >= 1e-12 {
                theta = (0.5 * f64::atan2(dir_sum.1, dir_sum.0)).rem_euclid(std::f64::consts::PI);
            }

            let u = Point2::new(theta.cos(), theta.sin());
            let mut s_lo = f64::INFINITY;
            let mut s_hi = f64::NEG_INFINITY;
            for &id in &support {
                let s = (self.record(id).projection - anchor).dot(u);
                if s < s_lo {
                    s_lo = s;
                    lo = id;
                }
                if s > s_hi {
                    s_hi = s;
                    hi = id;
                }
            }
        }
        (support, theta)
    }

    /// Releases a rejected candidate: non-seed records become active again
    /// (available to later groups), the seed is permanently retired.
    fn release(&mut self, support: &[RecordId]) {
        for (i, &id) in support.iter().enumerate() {
            let rec = self.record_mut(id);
            rec.used = false;
            if i == 0 {
                rec.discarded_as_seed = true;
            } else {
                self.active_count[id.0] += 1;
            }
        }
    }

    /// Retires a record that failed its initial search.
    fn discard_record(&mut self, id: RecordId) {
        let rec = self.record_mut(id);
        rec.used = false;
        rec.discarded_as_seed = true;
    }
}

/// Outer rectangle of a support in the frame aligned with `theta` through
/// the projection centroid. Returns (centroid, s_min, s_max, width).
fn support_rectangle(
    cells: &[Vec<AttractionRecord>],
    support: &[RecordId],
    theta: f64,
) -> (Point2, f64, f64, f64) {
    let u = Point2::new(theta.cos(), theta.sin());
    let n = Point2::new(-theta.sin(), theta.cos());
    let mut centroid = Point2::ZERO;
    for &(c, s) in support {
        centroid = centroid + cells[c][s].projection;
    }
    centroid = centroid * (1.0 / support.len() as f64);
    let (mut s_min, mut s_max) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut w_min, mut w_max) = (f64::INFINITY, f64::NEG_INFINITY);
    for &(c, s) in support {
        let d = cells[c][s].projection - centroid;
        let along = d.dot(u);
        let across = d.dot(n);
        s_min = s_min.min(along);
        s_max = s_max.max(along);
        w_min = w_min.min(across);
        w_max = w_max.max(across);
    }
    (centroid, s_min, s_max, w_max - w_min)
}

/// Squeezes a raw attraction field into a line segment map.
///
/// Deterministic: seeds are processed in row-major cell order (insertion
/// order within cells), or in a seeded shuffle of that order when
/// `params.rng_seed` is set. Identical field and parameters produce
/// bit-identical output.
pub fn squeeze(afm: &AttractionFieldMap, params: &SqueezeParams) -> Result<SqueezeOutput> {
    params.validate()?;
    afm.ensure_state(TransformState::Raw)?;
    let lattice = afm.lattice();
    if lattice.width() < 2 || lattice.height() < 2 {
        return Err(Error::LatticeTooSmall(lattice.width(), lattice.height(), 2, 2));
    }

    let mut proposal = build_line_proposal_map(afm)?;

    let mut seed_order: Vec<RecordId> = Vec::new();
    for (cell, records) in proposal.cells.iter().enumerate() {
        for slot in 0..records.len() {
            seed_order.push((cell, slot));
        }
    }
    if let Some(seed) = params.rng_seed {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        seed_order.shuffle(&mut rng);
    }

    let active_count = proposal.cells.iter().map(|c| c.len() as u32).collect();
    let mut grouping = Grouping {
        cells: &mut proposal.cells,
        active_count,
        lattice,
        window_radius: params.window_radius as i64,
        tau_rad: params.angular_threshold_deg.to_radians(),
    };

    let w_max = lattice.width() as f64;
    let h_max = lattice.height() as f64;
    let mut segments = Vec::new();
    let mut support_sizes = Vec::new();
    let mut rejected_seed_count = 0usize;
    // Cells retired wholesale after a failed rectangle check. Cells at
    // segment endpoints collect the projections of entire region corners
    // (easily 10^4 records); retiring them per record would make every one
    // of those records grow and reject its own near-identical candidate.
    let mut cell_seedable = vec![true; lattice.pixel_count()];

    for seed in seed_order {
        if !cell_seedable[seed.0] {
            continue;
        }
        {
            let rec = grouping.record(seed);
            if rec.used || rec.discarded_as_seed || rec.vector.length() < ZERO_VECTOR_EPS {
                continue;
            }
        }
        let (support, theta) = grouping.grow(seed);

        if support.len() == 1 {
            // initial window search found nothing aligned: retire the record
            grouping.discard_record(seed);
            rejected_seed_count += 1;
            continue;
        }

        let mut accept = support.len() >= params.min_support;
        if accept {
            let (centroid, s_min, s_max, width) = support_rectangle(grouping.cells, &support, theta);
            let length = s_max - s_min;
            accept = length > 1e-9 && width / length <= params.aspect_ratio_max;
            if accept {
                let u = Point2::new(theta.cos(), theta.sin());
                let start = centroid + u * s_min;
                let end = centroid + u * s_max;
                // Predicted fields can project a hair outside the lattice.
                let start = Point2::new(start.x.clamp(0.0, w_max), start.y.clamp(0.0, h_max));
                let end = Point2::new(end.x.clamp(0.0, w_max), end.y.clamp(0.0, h_max));
                if start == end {
                    accept = false;
                } else {
                    segments.push(LineSegment::new(start, end));
                    support_sizes.push(support.len());
                }
            }
        }
        if !accept {
            grouping.release(&support);
            cell_seedable[seed.0] = false;
            rejected_seed_count += 1;
        }
    }

    Ok(SqueezeOutput {
        segments: LineSegmentMap::new(lattice, segments)?,
        support_sizes,
        rejected_seed_count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codec::compute_attraction_field;
    use crate::geometry::project_point_to_segment;

    fn seg(x1: f64, y1: f64, x2: f64, y2: f64) -> LineSegment {
        LineSegment::new(Point2::new(x1, y1), Point2::new(x2, y2))
    }

    fn map(w: u32, h: u32, segments: Vec<LineSegment>) -> LineSegmentMap {
        LineSegmentMap::new(ImageLattice::new(w, h).unwrap(), segments).unwrap()
    }

    fn field(w: u32, h: u32, vectors: Vec<Point2>, state: TransformState) -> AttractionFieldMap {
        AttractionFieldMap::new(ImageLattice::new(w, h).unwrap(), vectors, state).unwrap()
    }

    #[test]
    fn proposal_cell_addresses() {
        // pixel (4,8) with a=(0,-3) files at cell (4,5)
        let mut v = vec![Point2::new(100.0, 100.0); 100]; // projects far outside
        let lattice = ImageLattice::new(10, 10).unwrap();
        v[lattice.index(4, 8)] = Point2::new(0.0, -3.0);
        v[lattice.index(2, 2)] = Point2::new(0.6, 0.0);
        let afm = field(10, 10, v, TransformState::Raw);
        let lpm = build_line_proposal_map(&afm).unwrap();
        assert_eq!(lpm.cell(4, 5).len(), 1);
        assert_eq!(lpm.cell(4, 5)[0].source, (4, 8));
        assert_eq!(lpm.cell(4, 5)[0].projection, Point2::new(4.0, 5.0));
        // pixel (2,2) with a=(0.6,0): v=(2.6,2) rounds to cell (3,2)
        assert_eq!(lpm.cell(3, 2).len(), 1);
        assert_eq!(lpm.cell(3, 2)[0].source, (2, 2));
        // everything else was dropped as out-of-lattice
        assert_eq!(lpm.total_records(), 2);
    }

    #[test]
    fn proposal_rejects_non_raw_state() {
        let afm = field(4, 4, vec![Point2::ZERO; 16], TransformState::SizeNormalized);
        assert!(matches!(
            build_line_proposal_map(&afm),
            Err(Error::WrongState { .. })
        ));
    }

    #[test]
    fn proposal_records_ordered_row_major_and_consistent() {
        let m = map(16, 16, vec![seg(2.0, 8.0, 13.0, 8.0)]);
        let (afm, _) = compute_attraction_field(&m).unwrap();
        let lpm = build_line_proposal_map(&afm).unwrap();
        assert_eq!(lpm.total_records(), 16 * 16);
        let l = &m.segments()[0];
        for y in 0..16 {
            for x in 0..16 {
                let cell = lpm.cell(x, y);
                let mut prev = None;
                for rec in cell {
                    // invariant: projection = source + vector
                    let src = Point2::new(rec.source.0 as f64, rec.source.1 as f64);
                    assert_eq!(rec.projection, src + rec.vector);
                    // row-major source order within a cell
                    let key = (rec.source.1, rec.source.0);
                    if let Some(p) = prev {
                        assert!(key > p);
                    }
                    prev = Some(key);
                }
                if !cell.is_empty() {
                    // non-empty cells hug the segment geometry
                    let d = project_point_to_segment(Point2::new(x as f64, y as f64), l)
                        .unwrap()
                        .sq_dist
                        .sqrt();
                    assert!(d <= 0.5 + std::f64::consts::SQRT_2 / 2.0 + 1e-9, "cell ({x},{y}) at {d}");
                }
            }
        }
    }

    #[test]
    fn single_segment_round_trip() {
        let m = map(20, 10, vec![seg(2.0, 5.0, 17.0, 5.0)]);
        let (afm, _) = compute_attraction_field(&m).unwrap();
        let out = squeeze(&afm, &SqueezeParams::default()).unwrap();
        assert_eq!(out.segments.len(), 1, "expected exactly one recovered segment");
        let rec = out.segments.segments()[0];
        let orig = m.segments()[0];
        // endpoints within 1 px, in either orientation
        let direct = (rec.start - orig.start).length().max((rec.end - orig.end).length());
        let flipped = (rec.start - orig.end).length().max((rec.end - orig.start).length());
        assert!(direct.min(flipped) <= 1.0, "endpoint error {direct} / {flipped}");
        assert_eq!(out.support_sizes.len(), 1);
        assert!(out.support_sizes[0] >= 2);
    }

    #[test]
    fn no_proposals_means_no_segments_and_no_rejections() {
        // every vector projects far outside the lattice
        let afm = field(8, 8, vec![Point2::new(50.0, 50.0); 64], TransformState::Raw);
        let out = squeeze(&afm, &SqueezeParams::default()).unwrap();
        assert!(out.segments.is_empty());
        assert_eq!(out.rejected_seed_count, 0);
    }

    #[test]
    fn squeeze_rejects_bad_params_and_states() {
        let m = map(8, 8, vec![seg(1.0, 4.0, 7.0, 4.0)]);
        let (afm, _) = compute_attraction_field(&m).unwrap();
        let bad = SqueezeParams {
            aspect_ratio_max: 1.5,
            ..SqueezeParams::default()
        };
        assert!(matches!(squeeze(&afm, &bad), Err(Error::Domain(_))));
        let bad = SqueezeParams {
            window_radius: 0,
            ..SqueezeParams::default()
        };
        assert!(matches!(squeeze(&afm, &bad), Err(Error::Domain(_))));
        let bad = SqueezeParams {
            min_support: 1,
            ..SqueezeParams::default()
        };
        assert!(matches!(squeeze(&afm, &bad), Err(Error::Domain(_))));

        let norm = crate::transforms::size_normalize(&afm).unwrap();
        assert!(matches!(
            squeeze(&norm, &SqueezeParams::default()),
            Err(Error::WrongState { .. })
        ));

        let tiny = field(1, 4, vec![Point2::ZERO; 4], TransformState::Raw);
        assert!(matches!(
            squeeze(&tiny, &SqueezeParams::default()),
            Err(Error::LatticeTooSmall(..))
        ));
    }

    #[test]
    fn emitted_geometry_respects_aspect_bound() {
        let m = map(
            64,
            64,
            vec![
                seg(5.0, 10.0, 55.0, 14.0),
                seg(10.0, 50.0, 60.0, 20.0),
                seg(30.0, 5.0, 33.0, 60.0),
            ],
        );
        let (afm, _) = compute_attraction_field(&m).unwrap();
        let params = SqueezeParams::default();
        let out = squeeze(&afm, &params).unwrap();
        assert!(!out.segments.is_empty());
        assert_eq!(out.support_sizes.len(), out.segments.len());
        // accepted supports are disjoint record sets, so their sizes can
        // never add up to more than the record population
        let lpm = build_line_proposal_map(&afm).unwrap();
        assert!(out.support_sizes.iter().sum::<usize>() <= lpm.total_records());
        assert!(out.support_sizes.iter().all(|&n| n >= params.min_support));
    }

    #[test]
    fn deterministic_with_and_without_seed() {
        let m = map(
            48,
            48,
            vec![seg(4.0, 6.0, 40.0, 9.0), seg(8.0, 40.0, 44.0, 12.0)],
        );
        let (afm, _) = compute_attraction_field(&m).unwrap();

        let fingerprint = |out: &SqueezeOutput| {
            let mut v: Vec<u64> = Vec::new();
            for s in out.segments.segments() {
                v.extend([
                    s.start.x.to_bits(),
                    s.start.y.to_bits(),
                    s.end.x.to_bits(),
                    s.end.y.to_bits(),
                ]);
            }
            v.extend(out.support_sizes.iter().map(|&n| n as u64));
            v.push(out.rejected_seed_count as u64);
            v
        };

        let p = SqueezeParams::default();
        assert_eq!(
            fingerprint(&squeeze(&afm, &p).unwrap()),
            fingerprint(&squeeze(&afm, &p).unwrap())
        );

        let p = SqueezeParams {
            rng_seed: Some(99),
            ..SqueezeParams::default()
        };
        assert_eq!(
            fingerprint(&squeeze(&afm, &p).unwrap()),
            fingerprint(&squeeze(&afm, &p).unwrap())
        );
    }

    #[test]
    fn tangent_angles_mod_pi() {
        use std::f64::consts::PI;
        // vertical attraction -> horizontal tangent
        assert!(tangent_angle(Point2::new(0.0, -3.0)).abs() < 1e-12);
        assert!(tangent_angle(Point2::new(0.0, 3.0)).abs() < 1e-12);
        // horizontal attraction -> vertical tangent
        assert!((tangent_angle(Point2::new(2.0, 0.0)) - PI / 2.0).abs() < 1e-12);
        assert!((tangent_angle(Point2::new(-2.0, 0.0)) - PI / 2.0).abs() < 1e-12);
        // distance wraps around pi
        assert!((angular_distance(0.05, PI - 0.05) - 0.1).abs() < 1e-12);
    }
}
