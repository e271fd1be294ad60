//! Binary attraction-field container.
//!
//! Layout (little-endian):
//!
//! ```text
//! offset  0   magic "AFM1"
//! offset  4   u32 width
//! offset  8   u32 height
//! offset 12   flags: bit0 = size-normalized, bit1 = stretched
//! offset 13   width*height interleaved (a_x, a_y) f32 pairs, row-major
//! ```
//!
//! Components are stored as f32 (the working precision of predicted
//! fields); an f64 field produced by the encoder is quantized on write.
//! Reading is exact, so read∘write is the identity on anything that has
//! ever been through this format.

use std::fs;
use std::io::Write;
use std::path::Path;

use crate::codec::{AttractionFieldMap, TransformState};
use crate::error::{Error, Result};
use crate::geometry::{ImageLattice, Point2};

pub const AFM_MAGIC: [u8; 4] = *b"AFM1";

const HEADER_LEN: usize = 13;
const FLAGS_OFFSET: u64 = 12;

fn state_to_flags(state: TransformState) -> u8 {
    match state {
        TransformState::Raw => 0b00,
        TransformState::SizeNormalized => 0b01,
        TransformState::Stretched => 0b11,
    }
}

fn flags_to_state(flags: u8) -> Result<TransformState> {
    match flags {
        0b00 => Ok(TransformState::Raw),
        0b01 => Ok(TransformState::SizeNormalized),
        0b11 => Ok(TransformState::Stretched),
        0b10 => Err(Error::format(
            FLAGS_OFFSET,
            "inconsistent flags: stretched bit set without size-normalized bit",
        )),
        other => Err(Error::format(
            FLAGS_OFFSET,
            format!("unknown flag bits 0x{other:02x}"),
        )),
    }
}

/// Serializes a field into a writer.
pub fn write_afm_to<W: Write>(afm: &AttractionFieldMap, mut w: W) -> Result<()> {
    w.write_all(&AFM_MAGIC)?;
    w.write_all(&afm.lattice().width().to_le_bytes())?;
    w.write_all(&afm.lattice().height().to_le_bytes())?;
    w.write_all(&[state_to_flags(afm.state())])?;
    let mut payload = Vec::with_capacity(afm.vectors().len() * 8);
    for v in afm.vectors() {
        payload.extend_from_slice(&(v.x as f32).to_le_bytes());
        payload.extend_from_slice(&(v.y as f32).to_le_bytes());
    }
    w.write_all(&payload)?;
    Ok(())
}

/// Writes a field to a file.
pub fn write_afm(afm: &AttractionFieldMap, path: impl AsRef<Path>) -> Result<()> {
    let mut buf = Vec::new();
    write_afm_to(afm, &mut buf)?;
    fs::write(path, buf)?;
    Ok(())
}

/// Parses a field from bytes.
pub fn read_afm_from(bytes: &[u8]) -> Result<AttractionFieldMap> {
    if bytes.len() < 4 || bytes[..4] != AFM_MAGIC {
        let got = bytes.get(..4).unwrap_or(bytes);
        return Err(Error::format(
            0,
            format!("bad magic {:?}, expected {:?}", got, AFM_MAGIC),
        ));
    }
    if bytes.len() < HEADER_LEN {
        return Err(Error::format(
            bytes.len() as u64,
            format!("truncated header: {} of {HEADER_LEN} bytes", bytes.len()),
        ));
    }
    let width = u32::from_le_bytes(bytes[4..8].try_into().unwrap());
    let height = u32::from_le_bytes(bytes[8..12].try_into().unwrap());
    if width == 0 {
        return Err(Error::format(4, "width must be at least 1"));
    }
    if height == 0 {
        return Err(Error::format(8, "height must be at least 1"));
    }
    let state = flags_to_state(bytes[12])?;

    let pixel_count = width as u64 * height as u64;
    let expected = HEADER_LEN as u64 + 8 * pixel_count;
    if (bytes.len() as u64) < expected {
        return Err(Error::format(
            bytes.len() as u64,
            format!("truncated payload: expected {expected} bytes, found {}", bytes.len()),
        ));
    }
    if bytes.len() as u64 > expected {
        return Err(Error::format(
            expected,
            format!("trailing data: expected {expected} bytes, found {}", bytes.len()),
        ));
    }

    let mut vectors = Vec::with_capacity(pixel_count as usize);
    for i in 0..pixel_count as usize {
        let off = HEADER_LEN + 8 * i;
        let x = f32::from_le_bytes(bytes[off..off + 4].try_into().unwrap());
        let y = f32::from_le_bytes(bytes[off + 4..off + 8].try_into().unwrap());
        if !x.is_finite() || !y.is_finite() {
            return Err(Error::format(off as u64, "non-finite vector component"));
        }
        vectors.push(Point2::new(x as f64, y as f64));
    }
    AttractionFieldMap::new(ImageLattice::new(width, height)?, vectors, state)
}

/// Reads a field from a file.
pub fn read_afm(path: impl AsRef<Path>) -> Result<AttractionFieldMap> {
    read_afm_from(&fs::read(path)?)
}
