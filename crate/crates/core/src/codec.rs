//! Encoding a segment map into its dual region partition and attraction field.
//!
//! Every lattice pixel is assigned to its nearest segment under the clamped
//! point-to-segment distance (ties broken by lowest segment index, so the
//! partition is total), and stores the displacement to its projection point
//! on that segment. The reference implementation is the exhaustive
//! O(W*H*n) scan; anything faster must reproduce it bit for bit.

use crate::error::{Error, Result};
use crate::geometry::{project_valid, ImageLattice, LineSegmentMap, Point2, Projection};

/// Transform state of an attraction field.
///
/// The only legal paths are `Raw -> SizeNormalized -> Stretched` and the
/// exact reverse; the transforms module enforces this.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransformState {
    /// Pixel-unit displacement vectors as produced by encoding.
    Raw,
    /// Components divided by lattice width / height.
    SizeNormalized,
    /// Size-normalized components passed through the signed-log stretching.
    Stretched,
}

/// Per-pixel index of the nearest segment, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionPartitionMap {
    lattice: ImageLattice,
    region_index: Vec<u32>,
}

impl RegionPartitionMap {
    #[inline]
    pub fn lattice(&self) -> ImageLattice {
        self.lattice
    }

    #[inline]
    pub fn indices(&self) -> &[u32] {
        &self.region_index
    }

    #[inline]
    pub fn index_at(&self, x: u32, y: u32) -> u32 {
        self.region_index[self.lattice.index(x, y)]
    }
}

/// Per-pixel 2D displacement grid with an explicit transform state.
#[derive(Debug, Clone, PartialEq)]
pub struct AttractionFieldMap {
    lattice: ImageLattice,
    vectors: Vec<Point2>,
    state: TransformState,
}

impl AttractionFieldMap {
    /// Validates vector count and finiteness.
    pub fn new(lattice: ImageLattice, vectors: Vec<Point2>, state: TransformState) -> Result<Self> {
        if vectors.len() != lattice.pixel_count() {
            return Err(Error::domain(format!(
                "attraction field has {} vectors, lattice {}x{} needs {}",
                vectors.len(),
                lattice.width(),
                lattice.height(),
                lattice.pixel_count()
            )));
        }
        if let Some(i) = vectors.iter().position(|v| !v.is_finite()) {
            return Err(Error::domain(format!(
                "non-finite attraction vector at pixel index {i}"
            )));
        }
        Ok(AttractionFieldMap {
            lattice,
            vectors,
            state,
        })
    }

    #[inline]
    pub fn lattice(&self) -> ImageLattice {
        self.lattice
    }

    #[inline]
    pub fn state(&self) -> TransformState {
        self.state
    }

    #[inline]
    pub fn vectors(&self) -> &[Point2] {
        &self.vectors
    }

    #[inline]
    pub fn vector_at(&self, x: u32, y: u32) -> Point2 {
        self.vectors[self.lattice.index(x, y)]
    }

    pub(crate) fn ensure_state(&self, expected: TransformState) -> Result<()> {
        if self.state != expected {
            return Err(Error::WrongState {
                expected,
                found: self.state,
            });
        }
        Ok(())
    }

    /// Applies a per-vector map and retags the state. Internal to the
    /// transform passes, which own the state machine.
    pub(crate) fn map_vectors(
        &self,
        state: TransformState,
        mut f: impl FnMut(Point2) -> Point2,
    ) -> AttractionFieldMap {
        AttractionFieldMap {
            lattice: self.lattice,
            vectors: self.vectors.iter().map(|&v| f(v)).collect(),
            state,
        }
    }
}

/// Nearest segment of `p`, lowest index winning ties.
#[inline]
fn nearest_segment(p: Point2, segments: &[crate::geometry::LineSegment]) -> (u32, Projection) {
    let mut best_index = 0u32;
    let mut best = project_valid(p, &segments[0]);
    for (i, seg) in segments.iter().enumerate().skip(1) {
        let pr = project_valid(p, seg);
        if pr.sq_dist < best.sq_dist {
            best = pr;
            best_index = i as u32;
        }
    }
    (best_index, best)
}

/// Assigns every pixel to its nearest segment.
pub fn compute_region_partition(map: &LineSegmentMap) -> Result<RegionPartitionMap> {
    if map.is_empty() {
        return Err(Error::EmptyMap);
    }
    let lattice = map.lattice();
    let mut region_index = Vec::with_capacity(lattice.pixel_count());
    for y in 0..lattice.height() {
        for x in 0..lattice.width() {
            let p = Point2::new(x as f64, y as f64);
            region_index.push(nearest_segment(p, map.segments()).0);
        }
    }
    Ok(RegionPartitionMap {
        lattice,
        region_index,
    })
}

/// Encodes a segment map into its attraction field and region partition in
/// one pass. The returned field is in `Raw` state.
pub fn compute_attraction_field(
    map: &LineSegmentMap,
) -> Result<(AttractionFieldMap, RegionPartitionMap)> {
    if map.is_empty() {
        return Err(Error::EmptyMap);
    }
    let lattice = map.lattice();
    let mut vectors = Vec::with_capacity(lattice.pixel_count());
    let mut region_index = Vec::with_capacity(lattice.pixel_count());
    for y in 0..lattice.height() {
        for x in 0..lattice.width() {
            let p = Point2::new(x as f64, y as f64);
            let (index, projection) = nearest_segment(p, map.segments());
            region_index.push(index);
            vectors.push(projection.point - p);
        }
    }
    Ok((
        AttractionFieldMap {
            lattice,
            vectors,
            state: TransformState::Raw,
        },
        RegionPartitionMap {
            lattice,
            region_index,
        },
    ))
}
