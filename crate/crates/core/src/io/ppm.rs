//! Binary PPM (P6) rendering: segment maps as 1-px black lines on white,
//! attraction fields as two side-by-side min-max normalized grayscale
//! panels (x component left, y component right).

use std::fs;
use std::io::Write;
use std::path::Path;

use crate::codec::AttractionFieldMap;
use crate::error::Result;
use crate::geometry::LineSegmentMap;
use crate::metrics::rasterize_segments;

fn write_p6<W: Write>(width: u32, height: u32, rgb: &[u8], mut w: W) -> Result<()> {
    debug_assert_eq!(rgb.len(), width as usize * height as usize * 3);
    write!(w, "P6\n{width} {height}\n255\n")?;
    w.write_all(rgb)?;
    Ok(())
}

/// Renders segments as black rasterized lines on a white canvas.
pub fn render_segments_ppm_to<W: Write>(map: &LineSegmentMap, w: W) -> Result<()> {
    let lattice = map.lattice();
    let (width, height) = (lattice.width(), lattice.height());
    let mut rgb = vec![255u8; width as usize * height as usize * 3];
    for (x, y) in rasterize_segments(map) {
        let at = lattice.index(x, y) * 3;
        rgb[at..at + 3].fill(0);
    }
    write_p6(width, height, &rgb, w)
}

pub fn render_segments_ppm(map: &LineSegmentMap, path: impl AsRef<Path>) -> Result<()> {
    let mut buf = Vec::new();
    render_segments_ppm_to(map, &mut buf)?;
    fs::write(path, buf)?;
    Ok(())
}

/// Min-max normalizes one component across the field; a constant channel
/// renders mid-gray.
fn normalize_channel(values: impl Iterator<Item = f64> + Clone) -> Vec<u8> {
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for v in values.clone() {
        lo = lo.min(v);
        hi = hi.max(v);
    }
    if !(hi > lo) {
        return values.map(|_| 128u8).collect();
    }
    values
        .map(|v| ((v - lo) / (hi - lo) * 255.0).round() as u8)
        .collect()
}

/// Renders the two field components as side-by-side grayscale panels; the
/// output image is twice as wide as the lattice.
pub fn render_afm_ppm_to<W: Write>(afm: &AttractionFieldMap, w: W) -> Result<()> {
    let lattice = afm.lattice();
    let (lw, lh) = (lattice.width() as usize, lattice.height() as usize);
    let xs = normalize_channel(afm.vectors().iter().map(|v| v.x));
    let ys = normalize_channel(afm.vectors().iter().map(|v| v.y));
    let width = 2 * lw;
    let mut rgb = vec![0u8; width * lh * 3];
    for y in 0..lh {
        for x in 0..lw {
            let src = y * lw + x;
            let left = (y * width + x) * 3;
            let right = (y * width + lw + x) * 3;
            rgb[left..left + 3].fill(xs[src]);
            rgb[right..right + 3].fill(ys[src]);
        }
    }
    write_p6(width as u32, lh as u32, &rgb, w)
}

pub fn render_afm_ppm(afm: &AttractionFieldMap, path: impl AsRef<Path>) -> Result<()> {
    let mut buf = Vec::new();
    render_afm_ppm_to(afm, &mut buf)?;
    fs::write(path, buf)?;
    Ok(())
}
