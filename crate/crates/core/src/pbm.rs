//! Portable bitmap (Netpbm PBM) codec, plain `P1` and raw `P4`.
//!
//! Bit 1 is black and maps to spin -1; bit 0 is white and maps to spin +1.
//! `P4` rows are packed most-significant bit first and padded to whole bytes.

use crate::error::{Error, Result};
use crate::image::{SpinImage, BLACK, WHITE};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PbmFormat {
    /// ASCII `0`/`1` raster.
    Plain,
    /// Packed binary raster.
    Raw,
}

impl PbmFormat {
    pub fn magic(self) -> &'static [u8; 2] {
        match self {
            PbmFormat::Plain => b"P1",
            PbmFormat::Raw => b"P4",
        }
    }
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    /// Skips whitespace and `#` comments running to end of line.
    fn skip_blank(&mut self) {
        while let Some(b) = self.peek() {
            if b == b'#' {
                while let Some(c) = self.peek() {
                    self.pos += 1;
                    if c == b'\n' || c == b'\r' {
                        break;
                    }
                }
            } else if b.is_ascii_whitespace() {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    fn dimension(&mut self, what: &str) -> Result<usize> {
        self.skip_blank();
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(match self.peek() {
                None => Error::parse(start, format!("unexpected end of input, expected {what}")),
                Some(b) => Error::parse(start, format!("expected {what}, found byte 0x{b:02x}")),
            });
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        let value: usize = text
            .parse()
            .map_err(|_| Error::parse(start, format!("{what} {text} is too large")))?;
        if value == 0 {
            return Err(Error::parse(start, format!("{what} must be positive")));
        }
        Ok(value)
    }
}

/// Decodes a `P1` or `P4` image.
pub fn load_pbm(bytes: &[u8]) -> Result<SpinImage> {
    let mut cur = Cursor { bytes, pos: 0 };
    let format = match bytes.get(..2) {
        Some(b"P1") => PbmFormat::Plain,
        Some(b"P4") => PbmFormat::Raw,
        Some(_) => return Err(Error::parse(0, "bad magic, expected P1 or P4")),
        None => return Err(Error::parse(0, "input too short for a PBM header")),
    };
    cur.pos = 2;
    if !cur
        .peek()
        .is_some_and(|b| b.is_ascii_whitespace() || b == b'#')
    {
        return Err(Error::parse(2, "expected whitespace after magic"));
    }
    let width = cur.dimension("width")?;
    let height = cur.dimension("height")?;
    let pixels = width
        .checked_mul(height)
        .ok_or_else(|| Error::parse(cur.pos, "image dimensions overflow"))?;

    let spins = match format {
        PbmFormat::Plain => read_plain(&mut cur, pixels)?,
        PbmFormat::Raw => read_raw(&mut cur, width, height)?,
    };
    SpinImage::new(width, height, spins)
}

fn read_plain(cur: &mut Cursor<'_>, pixels: usize) -> Result<Vec<i8>> {
    let mut spins = Vec::with_capacity(pixels);
    while spins.len() < pixels {
        cur.skip_blank();
        match cur.peek() {
            Some(b'0') => spins.push(WHITE),
            Some(b'1') => spins.push(BLACK),
            Some(b) => {
                return Err(Error::parse(
                    cur.pos,
                    format!("expected 0 or 1 in P1 raster, found byte 0x{b:02x}"),
                ))
            }
            None => {
                return Err(Error::parse(
                    cur.pos,
                    format!("truncated P1 raster: {} of {pixels} pixels", spins.len()),
                ))
            }
        }
        cur.pos += 1;
    }
    Ok(spins)
}

fn read_raw(cur: &mut Cursor<'_>, width: usize, height: usize) -> Result<Vec<i8>> {
    match cur.peek() {
        Some(b) if b.is_ascii_whitespace() => cur.pos += 1,
        _ => {
            return Err(Error::parse(
                cur.pos,
                "expected single whitespace before P4 raster",
            ))
        }
    }
    let stride = width.div_ceil(8);
    let need = stride * height;
    let raster = cur.bytes.get(cur.pos..).unwrap_or_default();
    if raster.len() < need {
        return Err(Error::parse(
            cur.pos + raster.len(),
            format!("truncated P4 raster: {} of {need} bytes", raster.len()),
        ));
    }
    let mut spins = Vec::with_capacity(width * height);
    for row in raster[..need].chunks_exact(stride) {
        for col in 0..width {
            let bit = row[col / 8] >> (7 - col % 8) & 1;
            spins.push(if bit == 1 { BLACK } else { WHITE });
        }
    }
    Ok(spins)
}

/// Encodes `x` in the requested format.
pub fn save_pbm(x: &SpinImage, format: PbmFormat) -> Vec<u8> {
    let (w, h) = (x.width(), x.height());
    let mut out = Vec::new();
    out.extend_from_slice(format.magic());
    out.extend_from_slice(format!("\n{w} {h}\n").as_bytes());
    match format {
        PbmFormat::Plain => {
            // Plain PBM lines should stay under 70 characters.
            for row in x.spins().chunks_exact(w) {
                for line in row.chunks(34) {
                    for (k, &s) in line.iter().enumerate() {
                        if k > 0 {
                            out.push(b' ');
                        }
                        out.push(if s == BLACK { b'1' } else { b'0' });
                    }
                    out.push(b'\n');
                }
            }
        }
        PbmFormat::Raw => {
            let stride = w.div_ceil(8);
            for row in x.spins().chunks_exact(w) {
                let start = out.len();
                out.resize(start + stride, 0);
                for (col, &s) in row.iter().enumerate() {
                    if s == BLACK {
                        out[start + col / 8] |= 0x80 >> (col % 8);
                    }
                }
            }
        }
    }
    out
}
