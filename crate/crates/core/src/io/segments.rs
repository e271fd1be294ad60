//! Segment-map JSON: `{"width": W, "height": H, "segments": [[x1,y1,x2,y2], ...]}`.
//!
//! Coordinates are real-valued and survive a round trip exactly (shortest
//! round-trip float printing on write, exact parse on read). An empty
//! segment list is valid for storage; the encoder rejects it separately.

use std::fs;
use std::io::Write;
use std::path::Path;

use crate::error::Result;
use crate::geometry::{ImageLattice, LineSegment, LineSegmentMap, Point2};

#[derive(serde::Serialize, serde::Deserialize)]
struct SegmentFile {
    width: u32,
    height: u32,
    segments: Vec<[f64; 4]>,
}

/// Serializes a segment map into a writer as a single JSON line.
pub fn write_segments_to<W: Write>(map: &LineSegmentMap, mut w: W) -> Result<()> {
    let model = SegmentFile {
        width: map.lattice().width(),
        height: map.lattice().height(),
        segments: map
            .segments()
            .iter()
            .map(|s| [s.start.x, s.start.y, s.end.x, s.end.y])
            .collect(),
    };
    serde_json::to_writer(&mut w, &model)?;
    w.write_all(b"\n")?;
    Ok(())
}

/// Writes a segment map to a file.
pub fn write_segments(map: &LineSegmentMap, path: impl AsRef<Path>) -> Result<()> {
    let mut buf = Vec::new();
    write_segments_to(map, &mut buf)?;
    fs::write(path, buf)?;
    Ok(())
}

/// Reads and validates a segment map from a file. Validation failures name
/// the offending segment index.
pub fn read_segments(path: impl AsRef<Path>) -> Result<LineSegmentMap> {
    let bytes = fs::read(path)?;
    let model: SegmentFile = serde_json::from_slice(&bytes)?;
    let lattice = ImageLattice::new(model.width, model.height)?;
    let segments = model
        .segments
        .iter()
        .map(|&[x1, y1, x2, y2]| LineSegment::new(Point2::new(x1, y1), Point2::new(x2, y2)))
        .collect();
    LineSegmentMap::new(lattice, segments)
}
