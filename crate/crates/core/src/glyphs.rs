//! Deterministic black-and-white test image made of large geometric shapes.

use crate::error::Result;
use crate::image::SpinImage;

/// Draws a frame, a disc, a ring, a triangle, a plus sign and a bar onto a
/// white `width` x `height` canvas. Shapes are laid out in normalized
/// coordinates so any size gives the same picture.
pub fn glyph_image(width: usize, height: usize) -> Result<SpinImage> {
    SpinImage::from_black_fn(width, height, |px, py| {
        let u = (px as f64 + 0.5) / width as f64;
        let v = (py as f64 + 0.5) / height as f64;
        is_black(u, v)
    })
}

fn is_black(u: f64, v: f64) -> bool {
    let in_box =
        |x0: f64, y0: f64, x1: f64, y1: f64| (x0..x1).contains(&u) && (y0..y1).contains(&v);
    let dist = |cx: f64, cy: f64| ((u - cx).powi(2) + (v - cy).powi(2)).sqrt();

    let frame = in_box(0.04, 0.04, 0.96, 0.96) && !in_box(0.07, 0.07, 0.93, 0.93);
    let disc = dist(0.28, 0.28) < 0.14;
    let ring = (0.09..0.15).contains(&dist(0.72, 0.28));
    // Upward triangle with apex (0.28, 0.56) and base y = 0.86.
    let triangle = (0.56..0.86).contains(&v) && (u - 0.28).abs() < 0.55 * (v - 0.56);
    let plus = in_box(0.60, 0.66, 0.84, 0.74) || in_box(0.68, 0.56, 0.76, 0.84);
    let bar = in_box(0.15, 0.46, 0.85, 0.50);
    frame || disc || ring || triangle || plus || bar
}
