//! Exhaustive ground truth for small instances.
//!
//! Enumerates every spin assignment in Gray-code order, so consecutive states
//! differ by one flip and the integer statistics of the energy are updated in
//! constant time. Energies are then evaluated from those statistics, which
//! makes the result exact with respect to [`energy`].

use crate::error::{Error, Result};
use crate::image::SpinImage;
use crate::model::{energy, neighbor_sum, spin_stats, EnergyParams};
use crate::scalar::Scalar;

/// Default pixel cap (2^20 states).
pub const DEFAULT_MAX_PIXELS: usize = 20;

/// Pixel count beyond which state codes no longer fit the enumeration.
const HARD_MAX_PIXELS: usize = 40;

#[derive(Debug, Clone, PartialEq)]
pub struct OracleResult<T> {
    pub global_min_energy: T,
    /// Every state attaining the minimum, ordered by state code (bit `i` set
    /// means pixel `i` is black).
    pub argmin_images: Vec<SpinImage>,
    pub states_enumerated: u64,
}

fn check_size(y: &SpinImage, max_pixels: usize) -> Result<()> {
    let cap = max_pixels.min(HARD_MAX_PIXELS);
    if y.len() > cap {
        return Err(Error::TooLarge {
            pixels: y.len(),
            cap,
        });
    }
    Ok(())
}

fn decode(code: u64, template: &SpinImage) -> SpinImage {
    let mut x = SpinImage::filled(template.width(), template.height(), 1)
        .expect("template has valid dimensions");
    for i in 0..x.len() {
        if code >> i & 1 == 1 {
            x.flip(i);
        }
    }
    x
}

/// Minimizes `E(., y)` over all `2^(width*height)` states.
pub fn exhaustive_minimize<T: Scalar>(
    y: &SpinImage,
    params: &EnergyParams<T>,
    max_pixels: usize,
) -> Result<OracleResult<T>> {
    params.validate()?;
    check_size(y, max_pixels)?;
    let n = y.len();
    let total: u64 = 1 << n;

    let mut x = SpinImage::filled(y.width(), y.height(), 1)?;
    let mut stats = spin_stats(&x, y)?;
    let mut code = 0u64;
    let mut best = params.evaluate(stats);
    let mut winners = vec![code];

    for step in 1..total {
        let i = step.trailing_zeros() as usize;
        stats = stats.after_flip(x.spin(i), y.spin(i), neighbor_sum(&x, i));
        x.flip(i);
        code ^= 1 << i;
        let e = params.evaluate(stats);
        if e < best {
            best = e;
            winners.clear();
            winners.push(code);
        } else if e == best {
            winners.push(code);
        }
    }

    winners.sort_unstable();
    Ok(OracleResult {
        global_min_energy: best,
        argmin_images: winners.into_iter().map(|c| decode(c, y)).collect(),
        states_enumerated: total,
    })
}

/// Reference enumeration: binary counting with a from-scratch energy per
/// state. Quadratically slower; intended for cross-checking small cases.
pub fn exhaustive_minimize_naive<T: Scalar>(
    y: &SpinImage,
    params: &EnergyParams<T>,
    max_pixels: usize,
) -> Result<OracleResult<T>> {
    params.validate()?;
    check_size(y, max_pixels)?;
    let total: u64 = 1 << y.len();
    let mut best: Option<T> = None;
    let mut winners = Vec::new();
    for code in 0..total {
        let e = energy(&decode(code, y), y, params)?;
        match best {
            Some(b) if e > b => {}
            Some(b) if e == b => winners.push(code),
            _ => {
                best = Some(e);
                winners.clear();
                winners.push(code);
            }
        }
    }
    Ok(OracleResult {
        global_min_energy: best.expect("at least one state"),
        argmin_images: winners.into_iter().map(|c| decode(c, y)).collect(),
        states_enumerated: total,
    })
}

/// True iff no single-pixel flip gives a strictly lower energy.
pub fn is_local_minimum<T: Scalar>(
    x: &SpinImage,
    y: &SpinImage,
    params: &EnergyParams<T>,
) -> Result<bool> {
    let stats = spin_stats(x, y)?;
    let here = params.evaluate(stats);
    Ok((0..x.len()).all(|i| {
        let there = params.evaluate(stats.after_flip(x.spin(i), y.spin(i), neighbor_sum(x, i)));
        there >= here
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::noise::{corrupt, NoiseSpec};
    use crate::optimize::{denoise_icm, IcmConfig};

    fn p(h: f64, beta: f64, eta: f64) -> EnergyParams<f64> {
        EnergyParams::new(h, beta, eta).unwrap()
    }

    fn random_image(w: usize, h: usize, seed: u64) -> SpinImage {
        corrupt(
            &SpinImage::filled(w, h, 1).unwrap(),
            &NoiseSpec::new(0.5, seed).unwrap(),
        )
    }

    #[test]
    fn single_pixel() {
        let y = SpinImage::filled(1, 1, 1).unwrap();
        let r = exhaustive_minimize(&y, &p(0.0, 0.0, 1.0), DEFAULT_MAX_PIXELS).unwrap();
        assert_eq!(r.global_min_energy, -1.0);
        assert_eq!(r.argmin_images, vec![y]);
        assert_eq!(r.states_enumerated, 2);
    }

    #[test]
    fn flat_landscape_everything_minimal() {
        let y = random_image(3, 3, 1);
        let r = exhaustive_minimize(&y, &EnergyParams::<f64>::zero(), DEFAULT_MAX_PIXELS).unwrap();
        assert_eq!(r.global_min_energy, 0.0);
        assert_eq!(r.argmin_images.len(), 512);
        assert_eq!(r.states_enumerated, 512);
    }

    #[test]
    fn two_by_two_unique_minimum() {
        let y = SpinImage::filled(2, 2, 1).unwrap();
        let params = p(0.0, 1.0, 1.0);
        // Hand enumeration of all 16 states with the term-wise definition.
        let mut by_hand = Vec::new();
        for code in 0u32..16 {
            let s: Vec<i8> = (0..4)
                .map(|i| if code >> i & 1 == 1 { -1 } else { 1 })
                .collect();
            let pairs = s[0] * s[1] + s[2] * s[3] + s[0] * s[2] + s[1] * s[3];
            let data: i8 = s.iter().sum();
            by_hand.push(-f64::from(pairs) - f64::from(data));
        }
        let hand_min = by_hand.iter().cloned().fold(f64::INFINITY, f64::min);
        assert_eq!(hand_min, -8.0);
        assert_eq!(by_hand.iter().filter(|&&e| e == hand_min).count(), 1);

        let r = exhaustive_minimize(&y, &params, DEFAULT_MAX_PIXELS).unwrap();
        assert_eq!(r.global_min_energy, -8.0);
        assert_eq!(r.argmin_images, vec![y]);
    }

    #[test]
    fn size_cap() {
        let y = SpinImage::filled(5, 5, 1).unwrap();
        assert_eq!(
            exhaustive_minimize(&y, &p(0.0, 1.0, 1.0), DEFAULT_MAX_PIXELS),
            Err(Error::TooLarge {
                pixels: 25,
                cap: 20
            })
        );
        assert!(exhaustive_minimize(&y, &p(0.0, 1.0, 1.0), 24).is_err());
    }

    #[test]
    fn gray_code_agrees_with_naive() {
        let cases = [
            (p(0.0, 0.5, 0.1), 0),
            (p(0.3, 1.0, 0.7), 1),
            (p(-0.2, 0.05, 0.4), 2),
            (p(0.0, 1.0, 0.0), 3),
            (EnergyParams::zero(), 4),
        ];
        for (params, seed) in cases {
            for (w, h) in [(2, 5), (1, 10), (3, 3), (4, 2)] {
                let y = random_image(w, h, seed);
                let fast = exhaustive_minimize(&y, &params, 10).unwrap();
                let slow = exhaustive_minimize_naive(&y, &params, 10).unwrap();
                assert_eq!(fast, slow, "{w}x{h} {params:?}");
            }
        }
    }

    #[test]
    fn minimizers_attain_minimum_and_are_local_minima() {
        let params = p(0.0, 0.5, 0.1);
        for seed in 0..5 {
            let y = random_image(4, 4, seed);
            let r = exhaustive_minimize(&y, &params, DEFAULT_MAX_PIXELS).unwrap();
            for x in &r.argmin_images {
                assert_eq!(energy(x, &y, &params).unwrap(), r.global_min_energy);
                assert!(is_local_minimum(x, &y, &params).unwrap());
            }
            let icm = denoise_icm(&y, &params, &IcmConfig::new(100).unwrap()).unwrap();
            assert!(is_local_minimum(&icm.restored, &y, &params).unwrap());
            assert!(r.global_min_energy <= icm.final_energy + 1e-12);
        }
    }

    #[test]
    fn local_minimum_checks() {
        let y = random_image(3, 4, 9);
        assert!(is_local_minimum(&y, &y, &EnergyParams::<f64>::zero()).unwrap());
        let clean = SpinImage::filled(3, 3, 1).unwrap();
        let speck = clean.flipped(4).unwrap();
        assert!(!is_local_minimum(&speck, &speck, &p(0.0, 1.0, 0.1)).unwrap());
        assert!(is_local_minimum(&clean, &speck, &p(0.0, 1.0, 0.1)).unwrap());
        assert!(is_local_minimum(&clean, &y, &p(0.0, 1.0, 0.1)).is_err());
    }
}
