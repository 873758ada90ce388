//! Color image model: one real-valued [`Plane`] per RGB channel.
//!
//! Samples are kept as `f64` end to end so the wavelet pipeline stays exact.
//! Conversion back to 8-bit happens only in [`quantize_plane`].

use crate::error::{Error, Result};

/// One color channel as a row-major grid of real samples.
#[derive(Debug, Clone, PartialEq)]
pub struct Plane {
    width: usize,
    height: usize,
    samples: Vec<f64>,
}

impl Plane {
    /// All-zero plane.
    pub fn zeros(width: usize, height: usize) -> Self {
        Self::filled(width, height, 0.0)
    }

    pub fn filled(width: usize, height: usize, value: f64) -> Self {
        Self {
            width,
            height,
            samples: vec![value; width * height],
        }
    }

    /// Wraps row-major samples. Fails if `samples.len() != width * height`.
    pub fn from_vec(width: usize, height: usize, samples: Vec<f64>) -> Result<Self> {
        if samples.len() != width * height {
            return Err(Error::InvalidParameter(format!(
                "{} samples cannot form a {width}x{height} plane",
                samples.len()
            )));
        }
        Ok(Self {
            width,
            height,
            samples,
        })
    }

    /// Builds a plane from nested rows, `rows[j][k]` being row `j`, column `k`.
    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let height = rows.len();
        let width = rows.first().map_or(0, |r| r.as_ref().len());
        let mut samples = Vec::with_capacity(width * height);
        for row in rows {
            let row = row.as_ref();
            if row.len() != width {
                return Err(Error::InvalidParameter(
                    "ragged rows: every row must have the same length".into(),
                ));
            }
            samples.extend_from_slice(row);
        }
        Ok(Self {
            width,
            height,
            samples,
        })
    }

    pub fn from_fn(width: usize, height: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut samples = Vec::with_capacity(width * height);
        for row in 0..height {
            for col in 0..width {
                samples.push(f(row, col));
            }
        }
        Self {
            width,
            height,
            samples,
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    /// `(width, height)`
    pub fn dims(&self) -> (usize, usize) {
        (self.width, self.height)
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.samples[row * self.width + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: f64) {
        self.samples[row * self.width + col] = value;
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn samples_mut(&mut self) -> &mut [f64] {
        &mut self.samples
    }

    pub fn into_samples(self) -> Vec<f64> {
        self.samples
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.samples.chunks(self.width.max(1))
    }

    /// Applies `f` to every sample.
    pub fn map(&self, f: impl Fn(f64) -> f64) -> Plane {
        Plane {
            width: self.width,
            height: self.height,
            samples: self.samples.iter().map(|&v| f(v)).collect(),
        }
    }

    /// Element-wise combination of two planes of equal size.
    pub fn zip_with(&self, other: &Plane, f: impl Fn(f64, f64) -> f64) -> Result<Plane> {
        self.ensure_same_dims(other)?;
        Ok(Plane {
            width: self.width,
            height: self.height,
            samples: self
                .samples
                .iter()
                .zip(&other.samples)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }

    pub fn scale(&self, factor: f64) -> Plane {
        self.map(|v| v * factor)
    }

    /// Sum of squared samples.
    pub fn energy(&self) -> f64 {
        self.samples.iter().map(|v| v * v).sum()
    }

    pub fn max_abs_diff(&self, other: &Plane) -> Result<f64> {
        self.ensure_same_dims(other)?;
        Ok(self
            .samples
            .iter()
            .zip(&other.samples)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max))
    }

    /// Keeps the top-left `width` x `height` region.
    pub fn crop(&self, width: usize, height: usize) -> Result<Plane> {
        if width > self.width || height > self.height {
            return Err(Error::InvalidParameter(format!(
                "cannot crop {}x{} to larger {width}x{height}",
                self.width, self.height
            )));
        }
        Ok(Plane::from_fn(width, height, |r, c| self.get(r, c)))
    }

    pub(crate) fn ensure_same_dims(&self, other: &Plane) -> Result<()> {
        if self.dims() != other.dims() {
            return Err(Error::DimensionMismatch {
                expected: self.dims(),
                found: other.dims(),
            });
        }
        Ok(())
    }

    /// True when every sample is an integer in `[0, 255]`.
    pub fn is_quantized(&self) -> bool {
        self.first_unquantized().is_none()
    }

    pub(crate) fn first_unquantized(&self) -> Option<(usize, usize, f64)> {
        self.samples
            .iter()
            .position(|&v| !(0.0..=255.0).contains(&v) || v.fract() != 0.0)
            .map(|i| (i / self.width, i % self.width, self.samples[i]))
    }
}

/// A true-color image: three planes of identical dimensions.
#[derive(Debug, Clone, PartialEq)]
pub struct ColorImage {
    r: Plane,
    g: Plane,
    b: Plane,
}

impl ColorImage {
    pub fn width(&self) -> usize {
        self.r.width
    }

    pub fn height(&self) -> usize {
        self.r.height
    }

    pub fn dims(&self) -> (usize, usize) {
        self.r.dims()
    }

    pub fn r(&self) -> &Plane {
        &self.r
    }

    pub fn g(&self) -> &Plane {
        &self.g
    }

    pub fn b(&self) -> &Plane {
        &self.b
    }

    /// Planes in R, G, B order.
    pub fn planes(&self) -> [&Plane; 3] {
        [&self.r, &self.g, &self.b]
    }

    pub fn into_planes(self) -> [Plane; 3] {
        [self.r, self.g, self.b]
    }

    /// Builds an image from interleaved 8-bit RGB bytes.
    pub fn from_rgb8(width: usize, height: usize, rgb: &[u8]) -> Result<Self> {
        if rgb.len() != width * height * 3 {
            return Err(Error::InvalidParameter(format!(
                "{} bytes cannot form a {width}x{height} RGB image",
                rgb.len()
            )));
        }
        let channel = |c: usize| -> Plane {
            Plane {
                width,
                height,
                samples: rgb
                    .iter()
                    .skip(c)
                    .step_by(3)
                    .map(|&v| f64::from(v))
                    .collect(),
            }
        };
        Ok(Self {
            r: channel(0),
            g: channel(1),
            b: channel(2),
        })
    }

    /// Interleaved RGB bytes, or `None` if any plane is not quantized.
    pub fn to_rgb8(&self) -> Option<Vec<u8>> {
        if !self.planes().iter().all(|p| p.is_quantized()) {
            return None;
        }
        let mut out = Vec::with_capacity(self.r.len() * 3);
        for i in 0..self.r.len() {
            for p in self.planes() {
                out.push(p.samples[i] as u8);
            }
        }
        Some(out)
    }

    pub fn map_planes(&self, f: impl Fn(&Plane) -> Plane) -> Result<ColorImage> {
        merge_planes(f(&self.r), f(&self.g), f(&self.b))
    }

    /// Keeps the top-left region so both dimensions are multiples of `2^levels`.
    pub fn crop_to_multiple(&self, levels: u32) -> Result<ColorImage> {
        let m = 1usize << levels;
        let (w, h) = ((self.width() / m) * m, (self.height() / m) * m);
        if w == 0 || h == 0 {
            return Err(Error::OddDimension {
                width: self.width(),
                height: self.height(),
                levels,
            });
        }
        self.map_planes(|p| p.crop(w, h).expect("crop target is never larger"))
    }
}

/// Separates an image into independent R, G, B planes.
pub fn split_planes(image: &ColorImage) -> (Plane, Plane, Plane) {
    (image.r.clone(), image.g.clone(), image.b.clone())
}

/// Combines three planes into a color image; samples are carried through unchanged.
pub fn merge_planes(r: Plane, g: Plane, b: Plane) -> Result<ColorImage> {
    r.ensure_same_dims(&g)?;
    r.ensure_same_dims(&b)?;
    Ok(ColorImage { r, g, b })
}

/// Clamps every sample to `[0, 255]` and rounds half away from zero.
pub fn quantize_plane(p: &Plane) -> Plane {
    p.map(quantize_sample)
}

#[inline]
pub fn quantize_sample(v: f64) -> f64 {
    // f64::round is half-away-from-zero; NaN clamps to NaN so map it to 0
    if v.is_nan() {
        0.0
    } else {
        v.clamp(0.0, 255.0).round()
    }
}

/// Quantizes all three planes.
pub fn quantize_image(img: &ColorImage) -> ColorImage {
    ColorImage {
        r: quantize_plane(&img.r),
        g: quantize_plane(&img.g),
        b: quantize_plane(&img.b),
    }
}
