//! The Ising energy over a clean-image estimate `x` and an observation `y`:
//!
//! ```text
//! E(x, y) = h * sum_i x_i  -  beta * sum_{i~j} x_i x_j  -  eta * sum_i x_i y_i
//! ```
//!
//! The pair sum runs over unordered 4-adjacent pairs without wraparound, each
//! pair once. Because spins are ±1 the three sums are integers; the energy is
//! evaluated from those integer statistics so that two states with the same
//! statistics always get bit-identical energies.

use crate::error::{Error, Result};
use crate::image::SpinImage;
use crate::scalar::Scalar;

/// Coefficients of the energy: bias `h`, pair coupling `beta`, data fidelity `eta`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyParams<T> {
    pub h: T,
    pub beta: T,
    pub eta: T,
}

impl<T: Scalar> EnergyParams<T> {
    pub fn new(h: T, beta: T, eta: T) -> Result<Self> {
        let params = Self { h, beta, eta };
        params.validate()?;
        Ok(params)
    }

    /// All-zero coefficients: a flat landscape.
    pub fn zero() -> Self {
        Self {
            h: T::zero(),
            beta: T::zero(),
            eta: T::zero(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.h.is_finite() && self.beta.is_finite() && self.eta.is_finite()) {
            return Err(Error::InvalidParams(format!(
                "coefficients must be finite (h={}, beta={}, eta={})",
                self.h, self.beta, self.eta
            )));
        }
        if self.beta < T::zero() || self.eta < T::zero() {
            return Err(Error::InvalidParams(format!(
                "beta and eta must be non-negative (beta={}, eta={})",
                self.beta, self.eta
            )));
        }
        Ok(())
    }

    /// Energy of the given integer statistics.
    #[inline]
    pub fn evaluate(&self, stats: SpinStats) -> T {
        self.h * T::from_i64_lossy(stats.magnetization)
            - self.beta * T::from_i64_lossy(stats.coupling)
            - self.eta * T::from_i64_lossy(stats.overlap)
    }
}

/// The three integer sums the energy is linear in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct SpinStats {
    /// `sum_i x_i`
    pub magnetization: i64,
    /// `sum_{i~j} x_i x_j` over unordered 4-adjacent pairs.
    pub coupling: i64,
    /// `sum_i x_i y_i`
    pub overlap: i64,
}

impl SpinStats {
    /// Statistics after flipping a pixel with spin `xi`, observation `yi` and
    /// neighbour sum `neighbor_sum`.
    #[inline]
    pub fn after_flip(self, xi: i8, yi: i8, neighbor_sum: i32) -> Self {
        let xi = i64::from(xi);
        Self {
            magnetization: self.magnetization - 2 * xi,
            coupling: self.coupling - 2 * xi * i64::from(neighbor_sum),
            overlap: self.overlap - 2 * xi * i64::from(yi),
        }
    }
}

/// Number of unordered 4-adjacent pairs on a `width` x `height` grid.
pub fn pair_count(width: usize, height: usize) -> usize {
    width * height.saturating_sub(1) + height * width.saturating_sub(1)
}

/// Computes the integer statistics of `(x, y)`.
pub fn spin_stats(x: &SpinImage, y: &SpinImage) -> Result<SpinStats> {
    x.ensure_same_shape(y)?;
    let (w, h) = (x.width(), x.height());
    let xs = x.spins();
    let mut stats = SpinStats::default();
    for (xi, yi) in xs.iter().zip(y.spins()) {
        stats.magnetization += i64::from(*xi);
        stats.overlap += i64::from(xi * yi);
    }
    for row in 0..h {
        let base = row * w;
        for col in 0..w {
            let i = base + col;
            let s = i64::from(xs[i]);
            if col + 1 < w {
                stats.coupling += s * i64::from(xs[i + 1]);
            }
            if row + 1 < h {
                stats.coupling += s * i64::from(xs[i + w]);
            }
        }
    }
    Ok(stats)
}

/// Total energy `E(x, y)`.
pub fn energy<T: Scalar>(x: &SpinImage, y: &SpinImage, params: &EnergyParams<T>) -> Result<T> {
    Ok(params.evaluate(spin_stats(x, y)?))
}

/// 4-adjacent indices of pixel `i` in the order up, down, left, right,
/// skipping those that fall outside the grid.
pub fn neighbors(i: usize, width: usize, height: usize) -> Result<Vec<usize>> {
    let len = width * height;
    if i >= len {
        return Err(Error::IndexOutOfRange { index: i, len });
    }
    let (col, row) = (i % width, i / width);
    let mut out = Vec::with_capacity(4);
    if row > 0 {
        out.push(i - width);
    }
    if row + 1 < height {
        out.push(i + width);
    }
    if col > 0 {
        out.push(i - 1);
    }
    if col + 1 < width {
        out.push(i + 1);
    }
    Ok(out)
}

/// Sum of the 4-adjacent spins of pixel `i`. No bounds check on `i`.
#[inline]
pub(crate) fn neighbor_sum(x: &SpinImage, i: usize) -> i32 {
    let w = x.width();
    let s = x.spins();
    let (col, row) = (i % w, i / w);
    let mut sum = 0i32;
    if row > 0 {
        sum += i32::from(s[i - w]);
    }
    if row + 1 < x.height() {
        sum += i32::from(s[i + w]);
    }
    if col > 0 {
        sum += i32::from(s[i - 1]);
    }
    if col + 1 < w {
        sum += i32::from(s[i + 1]);
    }
    sum
}

/// Energy change from flipping pixel `i`, computed locally:
/// `dE = -2 x_i (h - beta * sum_{j in N(i)} x_j - eta * y_i)`.
pub fn flip_delta<T: Scalar>(
    x: &SpinImage,
    y: &SpinImage,
    i: usize,
    params: &EnergyParams<T>,
) -> Result<T> {
    x.ensure_same_shape(y)?;
    x.check_index(i)?;
    Ok(local_delta(x, y, i, params))
}

#[inline]
pub(crate) fn local_delta<T: Scalar>(
    x: &SpinImage,
    y: &SpinImage,
    i: usize,
    params: &EnergyParams<T>,
) -> T {
    let xi = T::from_i64_lossy(i64::from(x.spin(i)));
    let yi = T::from_i64_lossy(i64::from(y.spin(i)));
    let field =
        params.h - params.beta * T::from_i64_lossy(i64::from(neighbor_sum(x, i))) - params.eta * yi;
    -(xi + xi) * field
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(h: f64, beta: f64, eta: f64) -> EnergyParams<f64> {
        EnergyParams::new(h, beta, eta).unwrap()
    }

    /// Term-by-term evaluation straight from the definition, enumerating
    /// pairs as (i, j) with i < j and checking adjacency by coordinates.
    fn brute_energy(x: &SpinImage, y: &SpinImage, params: &EnergyParams<f64>) -> f64 {
        let (w, n) = (x.width(), x.len());
        let mut bias = 0.0;
        let mut data = 0.0;
        for i in 0..n {
            bias += f64::from(x.spin(i));
            data += f64::from(x.spin(i) * y.spin(i));
        }
        let mut pairs = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                let (ci, ri) = ((i % w) as i64, (i / w) as i64);
                let (cj, rj) = ((j % w) as i64, (j / w) as i64);
                if (ci - cj).abs() + (ri - rj).abs() == 1 {
                    pairs += f64::from(x.spin(i) * x.spin(j));
                }
            }
        }
        params.h * bias - params.beta * pairs - params.eta * data
    }

    fn image_pair() -> impl Strategy<Value = (SpinImage, SpinImage)> {
        (1usize..=16, 1usize..=16).prop_flat_map(|(w, h)| {
            let n = w * h;
            (
                proptest::collection::vec(prop_oneof![Just(1i8), Just(-1i8)], n),
                proptest::collection::vec(prop_oneof![Just(1i8), Just(-1i8)], n),
            )
                .prop_map(move |(a, b)| {
                    (
                        SpinImage::new(w, h, a).unwrap(),
                        SpinImage::new(w, h, b).unwrap(),
                    )
                })
        })
    }

    #[test]
    fn energy_worked_examples() {
        let ones = SpinImage::filled(2, 2, 1).unwrap();
        assert_eq!(energy(&ones, &ones, &p(1.0, 1.0, 1.0)).unwrap(), -4.0);
        assert_eq!(brute_energy(&ones, &ones, &p(1.0, 1.0, 1.0)), -4.0);

        let single = SpinImage::filled(1, 1, 1).unwrap();
        assert_eq!(energy(&single, &single, &p(0.0, 1.0, 2.0)).unwrap(), -2.0);

        let x = SpinImage::new(2, 2, vec![1, -1, -1, 1]).unwrap();
        assert_eq!(
            energy(&x, &ones, &EnergyParams::<f64>::zero()).unwrap(),
            0.0
        );
    }

    #[test]
    fn energy_dimension_mismatch_names_both_shapes() {
        let a = SpinImage::filled(2, 3, 1).unwrap();
        let b = SpinImage::filled(3, 2, 1).unwrap();
        let err = energy(&a, &b, &p(0.0, 1.0, 1.0)).unwrap_err();
        assert_eq!(err.to_string(), "dimension mismatch: 2x3 vs 3x2");
    }

    #[test]
    fn params_validation() {
        assert!(EnergyParams::new(0.0, -1.0, 1.0).is_err());
        assert!(EnergyParams::new(0.0, 1.0, -1e-9).is_err());
        assert!(EnergyParams::new(f64::NAN, 1.0, 1.0).is_err());
        assert!(EnergyParams::new(-3.0, 0.0, 0.0).is_ok());
    }

    #[test]
    fn flip_delta_worked_examples() {
        let single = SpinImage::filled(1, 1, 1).unwrap();
        assert_eq!(
            flip_delta(&single, &single, 0, &p(0.0, 0.0, 1.0)).unwrap(),
            2.0
        );

        let ones = SpinImage::filled(2, 2, 1).unwrap();
        let params = p(1.0, 1.0, 1.0);
        // Full recomputation: E(flip corner) - E(all +1).
        let before = brute_energy(&ones, &ones, &params);
        let after = brute_energy(&ones.flipped(0).unwrap(), &ones, &params);
        assert_eq!(after - before, 4.0);
        assert_eq!(flip_delta(&ones, &ones, 0, &params).unwrap(), 4.0);

        for i in 0..4 {
            assert_eq!(
                flip_delta(&ones, &ones, i, &EnergyParams::<f64>::zero()).unwrap(),
                0.0
            );
        }
        assert!(matches!(
            flip_delta(&ones, &ones, 4, &params),
            Err(Error::IndexOutOfRange { index: 4, len: 4 })
        ));
    }

    #[test]
    fn neighbor_examples() {
        assert_eq!(neighbors(4, 3, 3).unwrap(), vec![1, 7, 3, 5]);
        assert_eq!(neighbors(0, 3, 3).unwrap(), vec![3, 1]);
        assert_eq!(neighbors(0, 1, 1).unwrap(), Vec::<usize>::new());
        assert_eq!(neighbors(8, 3, 3).unwrap(), vec![5, 7]);
        assert!(neighbors(9, 3, 3).is_err());
    }

    #[test]
    fn f32_energy_matches_f64() {
        let x = SpinImage::new(3, 2, vec![1, -1, 1, 1, 1, -1]).unwrap();
        let y = SpinImage::new(3, 2, vec![1, 1, 1, -1, 1, -1]).unwrap();
        let e64 = energy(&x, &y, &p(0.25, 0.5, 1.5)).unwrap();
        let e32 = energy(&x, &y, &EnergyParams::<f32>::new(0.25, 0.5, 1.5).unwrap()).unwrap();
        assert!((f64::from(e32) - e64).abs() < 1e-6);
    }

    proptest! {
        #[test]
        fn energy_matches_term_enumeration(
            (x, y) in image_pair(),
            h in -2.0f64..2.0, beta in 0.0f64..2.0, eta in 0.0f64..2.0,
        ) {
            let params = p(h, beta, eta);
            let fast = energy(&x, &y, &params).unwrap();
            let slow = brute_energy(&x, &y, &params);
            prop_assert!((fast - slow).abs() <= 1e-9 * (1.0 + slow.abs()));
        }

        #[test]
        fn flip_delta_matches_recomputation(
            (x, y) in image_pair(),
            h in -2.0f64..2.0, beta in 0.0f64..2.0, eta in 0.0f64..2.0,
            pick in any::<proptest::sample::Index>(),
        ) {
            let params = p(h, beta, eta);
            let i = pick.index(x.len());
            let before = energy(&x, &y, &params).unwrap();
            let after = energy(&x.flipped(i).unwrap(), &y, &params).unwrap();
            let delta = flip_delta(&x, &y, i, &params).unwrap();
            prop_assert!((delta - (after - before)).abs() <= 1e-12 * (1.0 + before.abs()));
        }

        #[test]
        fn double_flip_cancels(
            (x, y) in image_pair(),
            h in -2.0f64..2.0, beta in 0.0f64..2.0, eta in 0.0f64..2.0,
            pick in any::<proptest::sample::Index>(),
        ) {
            let params = p(h, beta, eta);
            let i = pick.index(x.len());
            let d1 = flip_delta(&x, &y, i, &params).unwrap();
            let once = x.flipped(i).unwrap();
            let d2 = flip_delta(&once, &y, i, &params).unwrap();
            prop_assert_eq!(once.flipped(i).unwrap(), x);
            prop_assert_eq!(d1 + d2, 0.0);
        }

        #[test]
        fn all_plus_closed_form(
            w in 1usize..=20, hgt in 1usize..=20,
            h in -2.0f64..2.0, beta in 0.0f64..2.0, eta in 0.0f64..2.0,
        ) {
            let ones = SpinImage::filled(w, hgt, 1).unwrap();
            let n = (w * hgt) as f64;
            let pairs = (w * (hgt - 1) + hgt * (w - 1)) as f64;
            let expected = h * n - beta * pairs - eta * n;
            let got = energy(&ones, &ones, &p(h, beta, eta)).unwrap();
            prop_assert!((got - expected).abs() <= 1e-9 * (1.0 + expected.abs()));
            prop_assert_eq!(spin_stats(&ones, &ones).unwrap().coupling as usize, pair_count(w, hgt));
        }

        #[test]
        fn coupling_term_invariant_under_global_flip(
            (x, y) in image_pair(),
            beta in 0.0f64..2.0,
        ) {
            let params = p(0.0, beta, 0.0);
            let e = energy(&x, &y, &params).unwrap();
            let flipped = energy(&x.negated(), &y.negated(), &params).unwrap();
            prop_assert_eq!(e, flipped);
        }

        #[test]
        fn neighbor_counts_by_position(w in 1usize..=12, hgt in 1usize..=12, pick in any::<proptest::sample::Index>()) {
            let i = pick.index(w * hgt);
            let ns = neighbors(i, w, hgt).unwrap();
            let (c, r) = (i % w, i / w);
            let expected = usize::from(r > 0) + usize::from(r + 1 < hgt)
                + usize::from(c > 0) + usize::from(c + 1 < w);
            prop_assert_eq!(ns.len(), expected);
            for j in ns {
                let (cj, rj) = (j % w, j / w);
                prop_assert_eq!(c.abs_diff(cj) + r.abs_diff(rj), 1);
            }
        }
    }
}
