#![allow(dead_code)]

use std::path::PathBuf;

use dwt_stego::{load_image, ColorImage, Plane};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

pub fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("golden")
        .join(name)
}

/// The natural-image pair shipped with the crate (256x256).
pub fn natural_pair() -> (ColorImage, ColorImage) {
    (
        load_image(fixture("cover_astronaut.png")).unwrap(),
        load_image(fixture("secret_coffee.png")).unwrap(),
    )
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_image(rng: &mut ChaCha8Rng, w: usize, h: usize) -> ColorImage {
    let bytes: Vec<u8> = (0..w * h * 3).map(|_| rng.gen()).collect();
    ColorImage::from_rgb8(w, h, &bytes).unwrap()
}

pub fn random_plane(rng: &mut ChaCha8Rng, w: usize, h: usize) -> Plane {
    Plane::from_fn(w, h, |_, _| rng.gen_range(-512.0..512.0))
}

/// Smooth synthetic image: ramps plus a diagonal band, `phase` shifts the pattern.
pub fn gradient(w: usize, h: usize, phase: usize) -> ColorImage {
    let bytes: Vec<u8> = (0..w * h)
        .flat_map(|i| {
            let (r, c) = (i / w, i % w);
            [
                ((r * 255) / h.max(1)) as u8,
                ((c * 255) / w.max(1)) as u8,
                (((r + c + phase) * 3) % 256) as u8,
            ]
        })
        .collect();
    ColorImage::from_rgb8(w, h, &bytes).unwrap()
}

pub fn max_diff(a: &ColorImage, b: &ColorImage) -> f64 {
    a.planes()
        .iter()
        .zip(b.planes())
        .map(|(p, q)| p.max_abs_diff(q).unwrap())
        .fold(0.0, f64::max)
}

/// `(1 - alpha) * cover + alpha * secret`, computed pixel by pixel without
/// any wavelet code.
pub fn spatial_blend(cover: &ColorImage, secret: &ColorImage, alpha: f64) -> Vec<[f64; 3]> {
    let c = cover.to_rgb8().unwrap();
    let s = secret.to_rgb8().unwrap();
    c.chunks(3)
        .zip(s.chunks(3))
        .map(|(cp, sp)| {
            let mut px = [0.0; 3];
            for ch in 0..3 {
                px[ch] = (1.0 - alpha) * f64::from(cp[ch]) + alpha * f64::from(sp[ch]);
            }
            px
        })
        .collect()
}

/// Closed-form PSNR of `alpha * secret` against `secret`:
/// the error is `(1 - alpha) * secret`, pooled over all samples.
pub fn analytic_extraction_psnr(secret: &ColorImage, alpha: f64) -> f64 {
    let bytes = secret.to_rgb8().unwrap();
    let mean_sq = bytes.iter().map(|&v| f64::from(v).powi(2)).sum::<f64>() / bytes.len() as f64;
    10.0 * (255.0f64.powi(2) / ((1.0 - alpha).powi(2) * mean_sq)).log10()
}

pub fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_dwt-stego")
}
