//! Binary symmetric channel: each pixel's sign is flipped independently.

use crate::error::{Error, Result};
use crate::image::SpinImage;
use crate::rng::UnitStream;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoiseSpec {
    flip_probability: f64,
    pub seed: u64,
}

impl NoiseSpec {
    pub fn new(flip_probability: f64, seed: u64) -> Result<Self> {
        if !(0.0..=1.0).contains(&flip_probability) {
            return Err(Error::InvalidProbability(flip_probability));
        }
        Ok(Self {
            flip_probability,
            seed,
        })
    }

    pub fn flip_probability(&self) -> f64 {
        self.flip_probability
    }
}

/// Output of the channel together with how many pixels it flipped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corrupted {
    pub image: SpinImage,
    pub flipped: usize,
}

/// Corrupts `x`, drawing one uniform `u` per pixel in row-major order and
/// flipping the pixel when `u < p`.
pub fn corrupt_counted(x: &SpinImage, spec: &NoiseSpec) -> Corrupted {
    let mut stream = UnitStream::new(spec.seed);
    let mut image = x.clone();
    let mut flipped = 0;
    for i in 0..image.len() {
        if stream.next_unit() < spec.flip_probability {
            image.flip(i);
            flipped += 1;
        }
    }
    Corrupted { image, flipped }
}

pub fn corrupt(x: &SpinImage, spec: &NoiseSpec) -> SpinImage {
    corrupt_counted(x, spec).image
}

#[cfg(test)]
mod tests {
    use super::*;

    fn checker(w: usize, h: usize) -> SpinImage {
        SpinImage::from_black_fn(w, h, |x, y| (x + y) % 2 == 0).unwrap()
    }

    #[test]
    fn probability_bounds() {
        assert!(NoiseSpec::new(-0.01, 0).is_err());
        assert!(NoiseSpec::new(1.5, 0).is_err());
        assert!(NoiseSpec::new(f64::NAN, 0).is_err());
        assert!(NoiseSpec::new(0.0, 0).is_ok());
        assert!(NoiseSpec::new(1.0, 0).is_ok());
    }

    #[test]
    fn extremes() {
        let img = checker(17, 9);
        let none = corrupt_counted(&img, &NoiseSpec::new(0.0, 99).unwrap());
        assert_eq!(none.image, img);
        assert_eq!(none.flipped, 0);

        let all = corrupt_counted(&img, &NoiseSpec::new(1.0, 99).unwrap());
        assert_eq!(all.image, img.negated());
        assert_eq!(all.flipped, img.len());

        let spec = NoiseSpec::new(1.0, 5).unwrap();
        assert_eq!(corrupt(&corrupt(&img, &spec), &spec), img);
    }

    #[test]
    fn deterministic_per_seed() {
        let img = checker(64, 64);
        let spec = NoiseSpec::new(0.1, 7).unwrap();
        assert_eq!(corrupt(&img, &spec), corrupt(&img, &spec));
        let other = NoiseSpec::new(0.1, 8).unwrap();
        assert_ne!(corrupt(&img, &spec), corrupt(&img, &other));
    }

    #[test]
    fn flip_count_within_four_sigma() {
        let img = SpinImage::filled(256, 256, 1).unwrap();
        let n = img.len() as f64;
        let (mean, sigma) = (n * 0.1, (n * 0.1 * 0.9).sqrt());
        for seed in 0..5 {
            let out = corrupt_counted(&img, &NoiseSpec::new(0.1, seed).unwrap());
            assert_eq!(out.flipped, out.image.black_count());
            assert!((out.flipped as f64 - mean).abs() <= 4.0 * sigma);
        }
    }
}
