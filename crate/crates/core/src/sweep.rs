//! Alpha sweep: embed, extract and score a cover/secret pair over a range of
//! blending weights, one CSV row per alpha.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::metrics::{compare_images, fmt4};
use crate::planes::{quantize_image, ColorImage};
use crate::stego::{embed, extract, StegoParams};

pub const CSV_HEADER: [&str; 6] = [
    "alpha",
    "psnr_cover_stego",
    "psnr_secret_extracted",
    "mse_cover_stego",
    "mse_secret_extracted",
    "path",
];

/// Which stego representation feeds extraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExtractionPath {
    /// The 8-bit stego, as it would be stored in a raster file.
    #[default]
    Quantized,
    /// The real-valued stego, as stored in a float dump.
    Float,
}

impl ExtractionPath {
    pub fn as_str(self) -> &'static str {
        match self {
            ExtractionPath::Quantized => "quantized",
            ExtractionPath::Float => "float",
        }
    }
}

impl fmt::Display for ExtractionPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ExtractionPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "quantized" => Ok(ExtractionPath::Quantized),
            "float" => Ok(ExtractionPath::Float),
            other => Err(Error::InvalidParameter(format!(
                "unknown path {other:?}; expected quantized or float"
            ))),
        }
    }
}

/// Inclusive `start:stop:step` range of alphas.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaRange {
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

impl Default for AlphaRange {
    fn default() -> Self {
        Self {
            start: 0.1,
            stop: 0.9,
            step: 0.1,
        }
    }
}

impl AlphaRange {
    /// Expands the range, snapping each value to 1e-9 so `0.1:0.9:0.1`
    /// yields exactly nine tidy values. Every value must lie in (0, 1).
    pub fn values(&self) -> Result<Vec<f64>> {
        let span = self.stop - self.start;
        if self.step.is_nan() || self.step <= 0.0 || !span.is_finite() || span < 0.0 {
            return Err(Error::InvalidParameter(format!(
                "alpha range {self} is empty"
            )));
        }
        let count = (span / self.step + 1e-9).floor() as usize + 1;
        let values: Vec<f64> = (0..count)
            .map(|i| ((self.start + i as f64 * self.step) * 1e9).round() / 1e9)
            .collect();
        if let Some(&bad) = values.iter().find(|&&a| !(a > 0.0 && a < 1.0)) {
            return Err(Error::InvalidAlpha(bad));
        }
        Ok(values)
    }
}

impl fmt::Display for AlphaRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.start, self.stop, self.step)
    }
}

impl FromStr for AlphaRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let [start, stop, step] = parts.as_slice() else {
            return Err(Error::InvalidParameter(format!(
                "alpha range {s:?} must look like start:stop:step"
            )));
        };
        let num = |v: &str| {
            v.trim()
                .parse::<f64>()
                .map_err(|_| Error::InvalidParameter(format!("{v:?} is not a number")))
        };
        Ok(AlphaRange {
            start: num(start)?,
            stop: num(stop)?,
            step: num(step)?,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub alpha: f64,
    pub psnr_cover_stego: f64,
    pub psnr_secret_extracted: f64,
    pub mse_cover_stego: f64,
    pub mse_secret_extracted: f64,
    pub path: ExtractionPath,
}

impl SweepRow {
    pub fn csv_fields(&self) -> [String; 6] {
        [
            fmt4(self.alpha),
            fmt4(self.psnr_cover_stego),
            fmt4(self.psnr_secret_extracted),
            fmt4(self.mse_cover_stego),
            fmt4(self.mse_secret_extracted),
            self.path.to_string(),
        ]
    }
}

/// Scores one alpha.
///
/// The cover/stego comparison uses whichever stego the path carries. The
/// extracted image is always quantized before comparison, as it would be
/// when written to disk. Both columns use pooled RGB figures.
pub fn sweep_one(
    cover: &ColorImage,
    secret: &ColorImage,
    params: &StegoParams,
    path: ExtractionPath,
) -> Result<SweepRow> {
    let out = embed(cover, secret, params)?;
    let stego = match path {
        ExtractionPath::Quantized => &out.stego_quantized,
        ExtractionPath::Float => &out.stego,
    };
    let extracted = quantize_image(&extract(stego, cover, params)?);
    let cs = compare_images(cover, stego)?;
    let se = compare_images(secret, &extracted)?;
    Ok(SweepRow {
        alpha: params.alpha,
        psnr_cover_stego: cs.psnr_overall,
        psnr_secret_extracted: se.psnr_overall,
        mse_cover_stego: cs.mse_overall,
        mse_secret_extracted: se.mse_overall,
        path,
    })
}

/// Runs the sweep in increasing alpha order. `base` supplies everything but alpha.
pub fn run_sweep(
    cover: &ColorImage,
    secret: &ColorImage,
    alphas: &[f64],
    base: &StegoParams,
    path: ExtractionPath,
) -> Result<Vec<SweepRow>> {
    if alphas.is_empty() {
        return Err(Error::InvalidParameter("no alphas to sweep".into()));
    }
    if alphas
        .windows(2)
        .any(|w| w[0].partial_cmp(&w[1]) != Some(std::cmp::Ordering::Less))
    {
        return Err(Error::InvalidParameter(
            "alphas must be strictly increasing".into(),
        ));
    }
    alphas
        .iter()
        .map(|&alpha| sweep_one(cover, secret, &StegoParams { alpha, ..*base }, path))
        .collect()
}

/// Alphas maximizing each PSNR column; ties go to the smallest alpha.
pub fn best_alphas(rows: &[SweepRow]) -> Option<(f64, f64)> {
    let argmax = |key: fn(&SweepRow) -> f64| {
        rows.iter()
            .fold(None::<&SweepRow>, |best, r| match best {
                Some(b) if key(b) >= key(r) => Some(b),
                _ => Some(r),
            })
            .map(|r| r.alpha)
    };
    Some((
        argmax(|r| r.psnr_cover_stego)?,
        argmax(|r| r.psnr_secret_extracted)?,
    ))
}

pub fn write_csv<W: Write>(rows: &[SweepRow], writer: W) -> Result<()> {
    let to_err = |e: csv::Error| Error::Io {
        path: "<sweep csv>".into(),
        source: e.into(),
    };
    let mut w = csv::Writer::from_writer(writer);
    w.write_record(CSV_HEADER).map_err(to_err)?;
    for row in rows {
        w.write_record(row.csv_fields()).map_err(to_err)?;
    }
    w.flush().map_err(|e| Error::Io {
        path: "<sweep csv>".into(),
        source: e,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gradient(w: usize, h: usize, phase: usize) -> ColorImage {
        let bytes: Vec<u8> = (0..w * h)
            .flat_map(|i| {
                let (r, c) = (i / w, i % w);
                [
                    ((r * 255) / h) as u8,
                    ((c * 255) / w) as u8,
                    (((r + c + phase) * 7) % 256) as u8,
                ]
            })
            .collect();
        ColorImage::from_rgb8(w, h, &bytes).unwrap()
    }

    #[test]
    fn default_range_is_nine_tidy_alphas() {
        let v = AlphaRange::default().values().unwrap();
        assert_eq!(v, vec![0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9]);
        assert_eq!(
            "0.1:0.9:0.1".parse::<AlphaRange>().unwrap(),
            AlphaRange::default()
        );
    }

    #[test]
    fn range_errors() {
        assert!(matches!(
            "0.5:0.1:0.1".parse::<AlphaRange>().unwrap().values(),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            "0.1:0.9:0".parse::<AlphaRange>().unwrap().values(),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            "0.0:0.5:0.1".parse::<AlphaRange>().unwrap().values(),
            Err(Error::InvalidAlpha(_))
        ));
        assert!(matches!(
            "0.5:1.0:0.25".parse::<AlphaRange>().unwrap().values(),
            Err(Error::InvalidAlpha(_))
        ));
        assert!("0.1:0.9".parse::<AlphaRange>().is_err());
        assert!("a:b:c".parse::<AlphaRange>().is_err());
    }

    #[test]
    fn single_alpha_range() {
        assert_eq!(
            "0.3:0.3:0.1"
                .parse::<AlphaRange>()
                .unwrap()
                .values()
                .unwrap(),
            vec![0.3]
        );
    }

    #[test]
    fn gradient_sweep_trends() {
        let (c, s) = (
            gradient(32, 32, 0),
            gradient(32, 32, 13)
                .map_planes(|p| p.map(|v| 255.0 - v))
                .unwrap(),
        );
        let alphas = AlphaRange::default().values().unwrap();
        let rows = run_sweep(
            &c,
            &s,
            &alphas,
            &StegoParams::new(0.5),
            ExtractionPath::Quantized,
        )
        .unwrap();
        assert_eq!(rows.len(), 9);
        for w in rows.windows(2) {
            assert!(w[0].psnr_cover_stego > w[1].psnr_cover_stego);
            assert!(w[0].psnr_secret_extracted < w[1].psnr_secret_extracted);
        }
        assert_eq!(best_alphas(&rows), Some((0.1, 0.9)));
    }

    #[test]
    fn float_path_renormalized_is_exact() {
        let (c, s) = (gradient(16, 16, 0), gradient(16, 16, 5));
        let base = StegoParams::new(0.5).with_renormalize(true);
        let rows = run_sweep(&c, &s, &[0.1, 0.5, 0.9], &base, ExtractionPath::Float).unwrap();
        assert!(rows.iter().all(|r| r.psnr_secret_extracted.is_infinite()));
        assert!(rows.iter().all(|r| r.csv_fields()[2] == "inf"));
        assert_eq!(best_alphas(&rows).unwrap().1, 0.1);
    }

    #[test]
    fn rejects_unordered_alphas() {
        let c = gradient(4, 4, 0);
        assert!(run_sweep(
            &c,
            &c,
            &[0.5, 0.2],
            &StegoParams::new(0.5),
            ExtractionPath::Float
        )
        .is_err());
        assert!(run_sweep(&c, &c, &[], &StegoParams::new(0.5), ExtractionPath::Float).is_err());
    }

    #[test]
    fn csv_layout() {
        let row = SweepRow {
            alpha: 0.1,
            psnr_cover_stego: 29.06634,
            psnr_secret_extracted: f64::INFINITY,
            mse_cover_stego: 2.5,
            mse_secret_extracted: 0.0,
            path: ExtractionPath::Float,
        };
        let mut buf = Vec::new();
        write_csv(&[row], &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "alpha,psnr_cover_stego,psnr_secret_extracted,mse_cover_stego,mse_secret_extracted,path\n\
             0.1000,29.0663,inf,2.5000,0.0000,float\n"
        );
    }
}
