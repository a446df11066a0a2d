//! Rectangular grids of ±1 spins.

use crate::error::{Error, Result};

/// Spin value of a white pixel.
pub const WHITE: i8 = 1;
/// Spin value of a black pixel.
pub const BLACK: i8 = -1;

/// A binary image stored as row-major spins in {-1, +1}.
///
/// Index `i` addresses pixel `(i % width, i / width)`, counted from the
/// top-left corner. White pixels are `+1` and black pixels are `-1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SpinImage {
    width: usize,
    height: usize,
    spins: Vec<i8>,
}

impl SpinImage {
    pub fn new(width: usize, height: usize, spins: Vec<i8>) -> Result<Self> {
        check_dims(width, height)?;
        let expected = width * height;
        if spins.len() != expected {
            return Err(Error::SpinCount {
                expected,
                actual: spins.len(),
            });
        }
        if let Some((index, &value)) = spins.iter().enumerate().find(|(_, &s)| s != 1 && s != -1) {
            return Err(Error::InvalidSpin { index, value });
        }
        Ok(Self {
            width,
            height,
            spins,
        })
    }

    /// Image with every pixel set to `spin` (which must be ±1).
    pub fn filled(width: usize, height: usize, spin: i8) -> Result<Self> {
        check_dims(width, height)?;
        Self::new(width, height, vec![spin; width * height])
    }

    /// Builds an image from a predicate that is `true` for black pixels.
    pub fn from_black_fn(
        width: usize,
        height: usize,
        mut is_black: impl FnMut(usize, usize) -> bool,
    ) -> Result<Self> {
        check_dims(width, height)?;
        let mut spins = Vec::with_capacity(width * height);
        for y in 0..height {
            for x in 0..width {
                spins.push(if is_black(x, y) { BLACK } else { WHITE });
            }
        }
        Ok(Self {
            width,
            height,
            spins,
        })
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.width
    }

    #[inline]
    pub fn height(&self) -> usize {
        self.height
    }

    /// Number of pixels.
    #[inline]
    pub fn len(&self) -> usize {
        self.spins.len()
    }

    /// Always false; images have at least one pixel.
    #[inline]
    pub fn is_empty(&self) -> bool {
        self.spins.is_empty()
    }

    #[inline]
    pub fn spins(&self) -> &[i8] {
        &self.spins
    }

    pub fn into_spins(self) -> Vec<i8> {
        self.spins
    }

    /// Spin at row-major index `i`. Panics if `i` is out of range.
    #[inline]
    pub fn spin(&self, i: usize) -> i8 {
        self.spins[i]
    }

    pub fn get(&self, i: usize) -> Result<i8> {
        self.spins.get(i).copied().ok_or(Error::IndexOutOfRange {
            index: i,
            len: self.spins.len(),
        })
    }

    /// Spin at column `x`, row `y`. Panics if out of range.
    #[inline]
    pub fn at(&self, x: usize, y: usize) -> i8 {
        assert!(
            x < self.width && y < self.height,
            "({x}, {y}) outside image"
        );
        self.spins[y * self.width + x]
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i < self.spins.len() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                len: self.spins.len(),
            })
        }
    }

    /// Negates the spin at `i` in place. Panics if `i` is out of range.
    #[inline]
    pub fn flip(&mut self, i: usize) {
        self.spins[i] = -self.spins[i];
    }

    pub fn try_flip(&mut self, i: usize) -> Result<()> {
        self.check_index(i)?;
        self.flip(i);
        Ok(())
    }

    /// Copy with pixel `i` negated.
    pub fn flipped(&self, i: usize) -> Result<Self> {
        let mut out = self.clone();
        out.try_flip(i)?;
        Ok(out)
    }

    /// Copy with every pixel negated.
    pub fn negated(&self) -> Self {
        Self {
            width: self.width,
            height: self.height,
            spins: self.spins.iter().map(|s| -s).collect(),
        }
    }

    pub fn same_shape(&self, other: &Self) -> bool {
        self.width == other.width && self.height == other.height
    }

    pub fn ensure_same_shape(&self, other: &Self) -> Result<()> {
        if self.same_shape(other) {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left_width: self.width,
                left_height: self.height,
                right_width: other.width,
                right_height: other.height,
            })
        }
    }

    pub fn black_count(&self) -> usize {
        self.spins.iter().filter(|&&s| s == BLACK).count()
    }
}

fn check_dims(width: usize, height: usize) -> Result<()> {
    if width == 0 || height == 0 {
        Err(Error::EmptyImage { width, height })
    } else {
        Ok(())
    }
}
