//! Core geometric types and the point-to-segment projection primitive.
//!
//! Coordinate convention: origin at the top-left, x rightward, y downward.
//! Pixel centers sit at integer coordinates `(x, y)` with `0 <= x < width`
//! and `0 <= y < height`; segment endpoints are sub-pixel reals allowed to
//! range over the closed box `[0, width] x [0, height]`.
//!
//! All distance comparisons use squared Euclidean distance; the argmin is
//! unaffected and square roots are avoided in hot paths.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// A 2D point (or vector) in pixel coordinates.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const ZERO: Point2 = Point2 { x: 0.0, y: 0.0 };

    #[inline]
    pub fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }

    #[inline]
    pub fn dot(self, other: Point2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    #[inline]
    pub fn length_sq(self) -> f64 {
        self.dot(self)
    }

    #[inline]
    pub fn length(self) -> f64 {
        self.length_sq().sqrt()
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Add for Point2 {
    type Output = Point2;
    #[inline]
    fn add(self, rhs: Point2) -> Point2 {
        Point2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point2 {
    type Output = Point2;
    #[inline]
    fn sub(self, rhs: Point2) -> Point2 {
        Point2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Point2 {
    type Output = Point2;
    #[inline]
    fn mul(self, s: f64) -> Point2 {
        Point2::new(self.x * s, self.y * s)
    }
}

impl Neg for Point2 {
    type Output = Point2;
    #[inline]
    fn neg(self) -> Point2 {
        Point2::new(-self.x, -self.y)
    }
}

/// A straight line segment with sub-pixel endpoints.
///
/// Validity (positive length, in-bounds endpoints) is enforced when a
/// [`LineSegmentMap`] is constructed, not per value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LineSegment {
    pub start: Point2,
    pub end: Point2,
}

impl LineSegment {
    #[inline]
    pub fn new(start: Point2, end: Point2) -> Self {
        LineSegment { start, end }
    }

    /// Direction vector `end - start` (not normalized).
    #[inline]
    pub fn direction(&self) -> Point2 {
        self.end - self.start
    }

    #[inline]
    pub fn length(&self) -> f64 {
        self.direction().length()
    }
}

/// The integer pixel grid of dimensions `width x height`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ImageLattice {
    width: u32,
    height: u32,
}

impl ImageLattice {
    pub fn new(width: u32, height: u32) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::domain(format!(
                "lattice dimensions must be at least 1x1, got {width}x{height}"
            )));
        }
        Ok(ImageLattice { width, height })
    }

    #[inline]
    pub fn width(&self) -> u32 {
        self.width
    }

    #[inline]
    pub fn height(&self) -> u32 {
        self.height
    }

    #[inline]
    pub fn pixel_count(&self) -> usize {
        self.width as usize * self.height as usize
    }

    /// Row-major index of pixel `(x, y)`.
    #[inline]
    pub fn index(&self, x: u32, y: u32) -> usize {
        debug_assert!(x < self.width && y < self.height);
        y as usize * self.width as usize + x as usize
    }

    /// Length of the image diagonal in pixels.
    #[inline]
    pub fn diagonal(&self) -> f64 {
        (self.width as f64).hypot(self.height as f64)
    }

    /// Whether a real-valued point lies in the closed endpoint box
    /// `[0, width] x [0, height]`.
    #[inline]
    pub fn contains_endpoint(&self, p: Point2) -> bool {
        p.x >= 0.0 && p.x <= self.width as f64 && p.y >= 0.0 && p.y <= self.height as f64
    }
}

/// A lattice together with an ordered list of line segments.
#[derive(Debug, Clone, PartialEq)]
pub struct LineSegmentMap {
    lattice: ImageLattice,
    segments: Vec<LineSegment>,
}

impl LineSegmentMap {
    /// Validates every segment: finite in-bounds endpoints and positive
    /// length. An empty list is valid for storage; encoding operations
    /// reject it separately.
    pub fn new(lattice: ImageLattice, segments: Vec<LineSegment>) -> Result<Self> {
        for (index, seg) in segments.iter().enumerate() {
            if !seg.start.is_finite() || !seg.end.is_finite() {
                return Err(Error::InvalidSegment {
                    index,
                    reason: "non-finite endpoint coordinate".into(),
                });
            }
            if !lattice.contains_endpoint(seg.start) || !lattice.contains_endpoint(seg.end) {
                return Err(Error::InvalidSegment {
                    index,
                    reason: format!(
                        "endpoint outside [0, {}] x [0, {}]",
                        lattice.width(),
                        lattice.height()
                    ),
                });
            }
            if seg.start == seg.end {
                return Err(Error::DegenerateSegment(Some(index)));
            }
        }
        Ok(LineSegmentMap { lattice, segments })
    }

    #[inline]
    pub fn lattice(&self) -> ImageLattice {
        self.lattice
    }

    #[inline]
    pub fn segments(&self) -> &[LineSegment] {
        &self.segments
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.segments.len()
    }
}

/// Result of projecting a point onto a segment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Projection {
    /// Clamped minimizer of `||start + t*(end-start) - p||^2` over `t in [0,1]`.
    pub t_star: f64,
    /// The projection point `start + t_star * (end - start)`.
    pub point: Point2,
    /// Squared distance from the queried point to `point`.
    pub sq_dist: f64,
}

/// Projects `p` onto the segment, falling back to the nearest endpoint when
/// the unconstrained line projection lands outside the segment.
pub fn project_point_to_segment(p: Point2, l: &LineSegment) -> Result<Projection> {
    if l.direction().length_sq() == 0.0 {
        return Err(Error::DegenerateSegment(None));
    }
    Ok(project_valid(p, l))
}

/// Projection for segments already known to have positive length.
#[inline]
pub(crate) fn project_valid(p: Point2, l: &LineSegment) -> Projection {
    let d = l.direction();
    let t = ((p - l.start).dot(d) / d.length_sq()).clamp(0.0, 1.0);
    let point = l.start + d * t;
    Projection {
        t_star: t,
        point,
        sq_dist: (point - p).length_sq(),
    }
}

/// The attraction vector `a(p) = p' - p` towards the projection of `p`
/// onto `l`. Zero when `p` lies on the segment.
pub fn attraction_vector(p: Point2, l: &LineSegment) -> Result<Point2> {
    Ok(project_point_to_segment(p, l)?.point - p)
}
