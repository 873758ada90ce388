//! MSE and PSNR between images.
//!
//! The peak value is fixed at 255 for every comparison, including
//! real-valued planes, so numbers are comparable across pipelines.

use std::fmt;

use crate::error::{Error, Result};
use crate::planes::{ColorImage, Plane};

pub const PEAK: f64 = 255.0;

/// Mean of squared differences over all samples.
pub fn mse(f: &Plane, g: &Plane) -> Result<f64> {
    f.ensure_same_dims(g)?;
    Ok(sum_squared_error(f, g) / f.len().max(1) as f64)
}

fn sum_squared_error(f: &Plane, g: &Plane) -> f64 {
    f.samples()
        .iter()
        .zip(g.samples())
        .map(|(a, b)| (a - b) * (a - b))
        .sum()
}

/// `10 log10(255^2 / mse)`; infinite when `mse == 0`.
pub fn psnr_from_mse(mse: f64) -> f64 {
    if mse == 0.0 {
        f64::INFINITY
    } else {
        10.0 * (PEAK * PEAK / mse).log10()
    }
}

pub fn psnr(f: &Plane, g: &Plane) -> Result<f64> {
    mse(f, g).map(psnr_from_mse)
}

/// Per-channel and pooled MSE/PSNR. The pooled figures average over all
/// `3 * width * height` samples before taking the log.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricsReport {
    pub mse_per_channel: [f64; 3],
    pub psnr_per_channel: [f64; 3],
    pub mse_overall: f64,
    pub psnr_overall: f64,
}

pub fn compare_images(a: &ColorImage, b: &ColorImage) -> Result<MetricsReport> {
    if a.dims() != b.dims() {
        return Err(Error::DimensionMismatch {
            expected: a.dims(),
            found: b.dims(),
        });
    }
    let mut mse_per_channel = [0.0; 3];
    let mut total = 0.0;
    for (i, (p, q)) in a.planes().into_iter().zip(b.planes()).enumerate() {
        let sse = sum_squared_error(p, q);
        total += sse;
        mse_per_channel[i] = sse / p.len().max(1) as f64;
    }
    let mse_overall = total / (3 * a.r().len()).max(1) as f64;
    Ok(MetricsReport {
        mse_per_channel,
        psnr_per_channel: mse_per_channel.map(psnr_from_mse),
        mse_overall,
        psnr_overall: psnr_from_mse(mse_overall),
    })
}

/// Formats a value with 4 decimals, or `inf` for infinite PSNR.
pub fn fmt4(v: f64) -> String {
    if v.is_infinite() && v > 0.0 {
        "inf".to_string()
    } else {
        format!("{v:.4}")
    }
}

impl MetricsReport {
    /// `(label, mse, psnr)` rows: R, G, B, then pooled.
    pub fn rows(&self) -> [(&'static str, f64, f64); 4] {
        [
            ("R", self.mse_per_channel[0], self.psnr_per_channel[0]),
            ("G", self.mse_per_channel[1], self.psnr_per_channel[1]),
            ("B", self.mse_per_channel[2], self.psnr_per_channel[2]),
            ("pooled", self.mse_overall, self.psnr_overall),
        ]
    }
}

impl fmt::Display for MetricsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:<8} {:>14} {:>12}", "channel", "mse", "psnr_db")?;
        for (label, mse, psnr) in self.rows() {
            writeln!(f, "{:<8} {:>14} {:>12}", label, fmt4(mse), fmt4(psnr))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn identical_planes() {
        let p = Plane::from_fn(5, 3, |r, c| (r * 7 + c) as f64);
        assert_eq!(mse(&p, &p).unwrap(), 0.0);
        assert_eq!(psnr(&p, &p).unwrap(), f64::INFINITY);
    }

    #[test]
    fn unit_difference() {
        let f = Plane::from_rows(&[[0.0, 0.0]]).unwrap();
        let g = Plane::from_rows(&[[1.0, 1.0]]).unwrap();
        assert_eq!(mse(&f, &g).unwrap(), 1.0);
        assert_eq!(format!("{:.4}", psnr(&f, &g).unwrap()), "48.1308");
    }

    #[test]
    fn black_vs_white() {
        let (b, w) = (Plane::zeros(4, 4), Plane::filled(4, 4, 255.0));
        assert_eq!(mse(&b, &w).unwrap(), 65025.0);
        assert_eq!(psnr(&b, &w).unwrap(), 0.0);
    }

    #[test]
    fn mismatched_dims() {
        assert!(matches!(
            mse(&Plane::zeros(2, 2), &Plane::zeros(2, 3)),
            Err(Error::DimensionMismatch { .. })
        ));
        let a = ColorImage::from_rgb8(1, 1, &[0; 3]).unwrap();
        let b = ColorImage::from_rgb8(2, 1, &[0; 6]).unwrap();
        assert!(compare_images(&a, &b).is_err());
    }

    #[test]
    fn report_identical() {
        let a = ColorImage::from_rgb8(2, 2, &[9; 12]).unwrap();
        let r = compare_images(&a, &a).unwrap();
        assert_eq!(r.mse_per_channel, [0.0; 3]);
        assert!(r.psnr_per_channel.iter().all(|v| v.is_infinite()));
        assert!(r.psnr_overall.is_infinite());
        assert_eq!(fmt4(r.psnr_overall), "inf");
    }

    #[test]
    fn report_pools_channels() {
        let a = ColorImage::from_rgb8(2, 2, &[10; 12]).unwrap();
        let mut bytes = vec![10; 12];
        bytes.iter_mut().step_by(3).for_each(|v| *v = 11);
        let b = ColorImage::from_rgb8(2, 2, &bytes).unwrap();
        let r = compare_images(&a, &b).unwrap();
        assert_eq!(r.mse_per_channel, [1.0, 0.0, 0.0]);
        assert!((r.mse_overall - 1.0 / 3.0).abs() < 1e-15);
        assert_eq!(compare_images(&b, &a).unwrap(), r);
    }

    proptest! {
        #[test]
        fn symmetric_and_scales_quadratically(
            a in proptest::collection::vec(0.0f64..255.0, 16),
            b in proptest::collection::vec(0.0f64..255.0, 16),
            s in -4.0f64..4.0,
        ) {
            let f = Plane::from_vec(4, 4, a).unwrap();
            let g = Plane::from_vec(4, 4, b).unwrap();
            let m = mse(&f, &g).unwrap();
            prop_assert_eq!(m, mse(&g, &f).unwrap());
            let ms = mse(&f.scale(s), &g.scale(s)).unwrap();
            prop_assert!((ms - s * s * m).abs() <= 1e-9 * m.max(1.0));
        }

        #[test]
        fn psnr_decreasing_in_mse(m in 1e-6f64..1e6, d in 1e-6f64..1e3) {
            prop_assert!(psnr_from_mse(m + d) < psnr_from_mse(m));
        }
    }
}
