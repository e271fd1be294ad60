//! Size normalization and invertible value stretching for attraction fields.
//!
//! Normalization divides components by the lattice dimensions so fields are
//! insensitive to image size; stretching maps each component through a
//! signed log to keep the small normalized values numerically workable.
//! Both passes have exact inverses and the composition is tracked by the
//! field's transform state: `Raw <-> SizeNormalized <-> Stretched` are the
//! only legal moves.

use crate::codec::{AttractionFieldMap, TransformState};
use crate::error::Result;
use crate::geometry::Point2;

/// Offset inside the stretch log, and the bound on the round-trip error:
/// `|unstretch(stretch(z)) - z| <= 2 * STRETCH_EPSILON` on the legal range.
pub const STRETCH_EPSILON: f64 = 1e-6;

/// Sign with `sign(0) = 0`, which keeps zero a fixed point of both
/// stretch and unstretch.
#[inline]
fn sign(z: f64) -> f64 {
    if z == 0.0 {
        0.0
    } else if z > 0.0 {
        1.0
    } else {
        -1.0
    }
}

/// Stretches one size-normalized component. Returns the stretched value and
/// whether the input had to be clamped into the invertible range.
///
/// Components with `|z| >= 1 - STRETCH_EPSILON` would make `log(|z| + eps)`
/// non-negative and destroy sign preservation; they are clamped to
/// `|z| = 1 - 2 * STRETCH_EPSILON` first.
#[inline]
pub fn stretch_value(z: f64) -> (f64, bool) {
    let clamp = z.abs() >= 1.0 - STRETCH_EPSILON;
    let z = if clamp {
        sign(z) * (1.0 - 2.0 * STRETCH_EPSILON)
    } else {
        z
    };
    (-sign(z) * (z.abs() + STRETCH_EPSILON).ln(), clamp)
}

/// Exact inverse of [`stretch_value`] (up to the intrinsic epsilon offset).
#[inline]
pub fn unstretch_value(z: f64) -> f64 {
    sign(z) * (-z.abs()).exp()
}

/// Divides components by lattice width / height. Requires a `Raw` field.
pub fn size_normalize(afm: &AttractionFieldMap) -> Result<AttractionFieldMap> {
    afm.ensure_state(TransformState::Raw)?;
    let w = afm.lattice().width() as f64;
    let h = afm.lattice().height() as f64;
    Ok(normalize_with(afm, TransformState::SizeNormalized, 1.0 / w, 1.0 / h))
}

/// Multiplies components back by lattice width / height.
pub fn size_denormalize(afm: &AttractionFieldMap) -> Result<AttractionFieldMap> {
    afm.ensure_state(TransformState::SizeNormalized)?;
    let w = afm.lattice().width() as f64;
    let h = afm.lattice().height() as f64;
    Ok(normalize_with(afm, TransformState::Raw, w, h))
}

fn normalize_with(
    afm: &AttractionFieldMap,
    state: TransformState,
    sx: f64,
    sy: f64,
) -> AttractionFieldMap {
    afm.map_vectors(state, |v| Point2::new(v.x * sx, v.y * sy))
}

/// Applies the signed-log stretching to a size-normalized field. The second
/// value counts components clamped into the invertible range (zero for any
/// field that came out of the encoder).
pub fn stretch(afm: &AttractionFieldMap) -> Result<(AttractionFieldMap, usize)> {
    afm.ensure_state(TransformState::SizeNormalized)?;
    let mut clamped = 0usize;
    let out = afm.map_vectors(TransformState::Stretched, |v| {
        let (x, cx) = stretch_value(v.x);
        let (y, cy) = stretch_value(v.y);
        clamped += cx as usize + cy as usize;
        Point2::new(x, y)
    });
    Ok((out, clamped))
}

/// Inverts the stretching, yielding a size-normalized field.
pub fn unstretch(afm: &AttractionFieldMap) -> Result<AttractionFieldMap> {
    afm.ensure_state(TransformState::Stretched)?;
    Ok(afm.map_vectors(TransformState::SizeNormalized, |v| {
        Point2::new(unstretch_value(v.x), unstretch_value(v.y))
    }))
}
