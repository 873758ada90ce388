//! Hiding a color image inside another by alpha blending wavelet sub-bands.
//!
//! Each RGB plane of the cover and the secret is decomposed with the Haar
//! transform. Selected sub-bands are blended as
//!
//! ```text
//! stego = (1 - alpha) * cover + alpha * secret
//! ```
//!
//! and the blended coefficients are transformed back. Extraction needs the
//! cover and the same parameters: it subtracts `(1 - alpha) * cover`, which
//! leaves `alpha * secret`, and optionally divides by alpha.
//!
//! Small alpha keeps the stego close to the cover; large alpha makes the
//! un-normalized recovery close to the secret.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::planes::{merge_planes, quantize_image, ColorImage, Plane};
use crate::wavelet::{
    check_decomposable, decompose, reconstruct, Band, DetailBands, MultiLevelDecomposition,
    SubBandSet,
};

/// Below this, dividing by alpha is refused.
pub const MIN_RENORMALIZE_ALPHA: f64 = 1e-6;

/// Set of sub-bands that take part in blending.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct BandMask(u8);

impl BandMask {
    pub const ALL: BandMask = BandMask(0b1111);
    pub const NONE: BandMask = BandMask(0);

    fn bit(band: Band) -> u8 {
        match band {
            Band::LL => 1,
            Band::LH => 2,
            Band::HL => 4,
            Band::HH => 8,
        }
    }

    pub fn only(band: Band) -> BandMask {
        BandMask(Self::bit(band))
    }

    pub fn with(self, band: Band) -> BandMask {
        BandMask(self.0 | Self::bit(band))
    }

    pub fn contains(self, band: Band) -> bool {
        self.0 & Self::bit(band) != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn bands(self) -> impl Iterator<Item = Band> {
        Band::ALL.into_iter().filter(move |&b| self.contains(b))
    }
}

impl FromIterator<Band> for BandMask {
    fn from_iter<I: IntoIterator<Item = Band>>(iter: I) -> Self {
        iter.into_iter().fold(BandMask::NONE, BandMask::with)
    }
}

impl Default for BandMask {
    fn default() -> Self {
        BandMask::ALL
    }
}

impl fmt::Debug for BandMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.bands()).finish()
    }
}

impl fmt::Display for BandMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<_> = self.bands().map(Band::name).collect();
        f.write_str(&names.join(","))
    }
}

impl FromStr for BandMask {
    type Err = Error;

    /// Parses a comma list such as `LH,HL,HH` (case-insensitive).
    fn from_str(s: &str) -> Result<Self> {
        let mut mask = BandMask::NONE;
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let band = match part.to_ascii_uppercase().as_str() {
                "LL" => Band::LL,
                "LH" => Band::LH,
                "HL" => Band::HL,
                "HH" => Band::HH,
                other => {
                    return Err(Error::InvalidParameter(format!(
                        "unknown sub-band {other:?}; expected LL, LH, HL or HH"
                    )))
                }
            };
            mask = mask.with(band);
        }
        if mask.is_empty() {
            return Err(Error::EmptyBandMask);
        }
        Ok(mask)
    }
}

/// Parameters shared by embedding and extraction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StegoParams {
    /// Weight of the secret's coefficients.
    pub alpha: f64,
    pub levels: u32,
    pub band_mask: BandMask,
    /// Divide recovered coefficients by alpha during extraction.
    pub renormalize: bool,
}

impl StegoParams {
    /// One level, all four bands, no renormalization.
    pub fn new(alpha: f64) -> Self {
        Self {
            alpha,
            levels: 1,
            band_mask: BandMask::ALL,
            renormalize: false,
        }
    }

    pub fn with_levels(mut self, levels: u32) -> Self {
        self.levels = levels;
        self
    }

    pub fn with_bands(mut self, mask: BandMask) -> Self {
        self.band_mask = mask;
        self
    }

    pub fn with_renormalize(mut self, renormalize: bool) -> Self {
        self.renormalize = renormalize;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.alpha > 0.0 && self.alpha < 1.0) {
            return Err(Error::InvalidAlpha(self.alpha));
        }
        if self.levels == 0 {
            return Err(Error::InvalidLevels);
        }
        if self.band_mask.is_empty() {
            return Err(Error::EmptyBandMask);
        }
        Ok(())
    }
}

/// Result of [`embed`].
#[derive(Debug, Clone, PartialEq)]
pub struct EmbedOutput {
    /// Real-valued stego, before quantization.
    pub stego: ColorImage,
    /// `stego` clamped and rounded to 8-bit values.
    pub stego_quantized: ColorImage,
}

fn blend(cover: &Plane, secret: &Plane, alpha: f64) -> Result<Plane> {
    cover.zip_with(secret, |c, s| (1.0 - alpha) * c + alpha * s)
}

fn unblend(stego: &Plane, cover: &Plane, alpha: f64, renormalize: bool) -> Result<Plane> {
    if renormalize {
        stego.zip_with(cover, |s, c| (s - (1.0 - alpha) * c) / alpha)
    } else {
        stego.zip_with(cover, |s, c| s - (1.0 - alpha) * c)
    }
}

fn check_renormalize(params: &StegoParams) -> Result<()> {
    if params.renormalize && (params.alpha.is_nan() || params.alpha < MIN_RENORMALIZE_ALPHA) {
        return Err(Error::AlphaUnderflow(params.alpha));
    }
    Ok(())
}

/// Blends the masked bands of `secret` into `cover`; other bands are copied from the cover.
pub fn blend_bands(
    cover: &SubBandSet,
    secret: &SubBandSet,
    params: &StegoParams,
) -> Result<SubBandSet> {
    cover.ensure_same_dims(secret)?;
    let mut out = cover.clone();
    for band in params.band_mask.bands() {
        *out.band_mut(band) = blend(cover.band(band), secret.band(band), params.alpha)?;
    }
    Ok(out)
}

/// Recovers `alpha * secret` (or `secret` when renormalizing) from the masked bands.
///
/// Unmasked bands carry nothing of the secret and come back as zero.
pub fn unblend_bands(
    stego: &SubBandSet,
    cover: &SubBandSet,
    params: &StegoParams,
) -> Result<SubBandSet> {
    stego.ensure_same_dims(cover)?;
    check_renormalize(params)?;
    let (w, h) = stego.dims();
    let mut out = SubBandSet {
        ll: Plane::zeros(w, h),
        lh: Plane::zeros(w, h),
        hl: Plane::zeros(w, h),
        hh: Plane::zeros(w, h),
    };
    for band in params.band_mask.bands() {
        *out.band_mut(band) = unblend(
            stego.band(band),
            cover.band(band),
            params.alpha,
            params.renormalize,
        )?;
    }
    Ok(out)
}

/// Applies a band-wise operation to every level of two decompositions.
///
/// Each level contributes its detail triple; the LL slot is the real final
/// LL only at the coarsest level and a discarded zero plane elsewhere.
fn per_level(
    a: &MultiLevelDecomposition,
    b: &MultiLevelDecomposition,
    op: impl Fn(&SubBandSet, &SubBandSet) -> Result<SubBandSet>,
) -> Result<MultiLevelDecomposition> {
    let levels = a.levels();
    if levels != b.levels() {
        return Err(Error::InvalidParameter(format!(
            "decompositions have {levels} and {} levels",
            b.levels()
        )));
    }
    let as_set = |d: &MultiLevelDecomposition, i: usize| {
        let det = &d.detail_chain[i];
        let ll = if i + 1 == levels {
            d.final_ll.clone()
        } else {
            Plane::zeros(det.lh.width(), det.lh.height())
        };
        SubBandSet {
            ll,
            lh: det.lh.clone(),
            hl: det.hl.clone(),
            hh: det.hh.clone(),
        }
    };
    let mut detail_chain = Vec::with_capacity(levels);
    let mut final_ll = Plane::zeros(0, 0);
    for i in 0..levels {
        let out = op(&as_set(a, i), &as_set(b, i))?;
        if i + 1 == levels {
            final_ll = out.ll;
        }
        detail_chain.push(DetailBands {
            lh: out.lh,
            hl: out.hl,
            hh: out.hh,
        });
    }
    Ok(MultiLevelDecomposition {
        detail_chain,
        final_ll,
    })
}

fn embed_plane(cover: &Plane, secret: &Plane, params: &StegoParams) -> Result<Plane> {
    let dc = decompose(cover, params.levels)?;
    let ds = decompose(secret, params.levels)?;
    let blended = per_level(&dc, &ds, |c, s| blend_bands(c, s, params))?;
    reconstruct(&blended)
}

fn extract_plane(stego: &Plane, cover: &Plane, params: &StegoParams) -> Result<Plane> {
    let dst = decompose(stego, params.levels)?;
    let dc = decompose(cover, params.levels)?;
    let recovered = per_level(&dst, &dc, |s, c| unblend_bands(s, c, params))?;
    reconstruct(&recovered)
}

fn check_pair(a: &ColorImage, b: &ColorImage, params: &StegoParams) -> Result<()> {
    params.validate()?;
    if a.dims() != b.dims() {
        return Err(Error::SizeMismatch {
            first: a.dims(),
            second: b.dims(),
        });
    }
    check_decomposable(a.width(), a.height(), params.levels)
}

/// Hides `secret` in `cover`, plane by plane.
pub fn embed(cover: &ColorImage, secret: &ColorImage, params: &StegoParams) -> Result<EmbedOutput> {
    check_pair(cover, secret, params)?;
    let [cr, cg, cb] = cover.planes();
    let [sr, sg, sb] = secret.planes();
    let stego = merge_planes(
        embed_plane(cr, sr, params)?,
        embed_plane(cg, sg, params)?,
        embed_plane(cb, sb, params)?,
    )?;
    let stego_quantized = quantize_image(&stego);
    Ok(EmbedOutput {
        stego,
        stego_quantized,
    })
}

/// Recovers the hidden image from `stego` given the original `cover`.
///
/// The result is real-valued; quantize it before saving.
pub fn extract(stego: &ColorImage, cover: &ColorImage, params: &StegoParams) -> Result<ColorImage> {
    check_pair(stego, cover, params)?;
    check_renormalize(params)?;
    let [tr, tg, tb] = stego.planes();
    let [cr, cg, cb] = cover.planes();
    merge_planes(
        extract_plane(tr, cr, params)?,
        extract_plane(tg, cg, params)?,
        extract_plane(tb, cb, params)?,
    )
}
