//! Orthonormal 2D Haar transform.
//!
//! A single analysis step maps each non-overlapping 2x2 block
//!
//! ```text
//! a b
//! c d
//! ```
//!
//! to one coefficient in each of four half-resolution sub-bands:
//!
//! ```text
//! LL = (a + b + c + d) / 2    HL = (a - b + c - d) / 2
//! LH = (a + b - c - d) / 2    HH = (a - b - c + d) / 2
//! ```
//!
//! The 1/2 factor makes the transform orthonormal, so the sum of squares is
//! preserved. Multi-level decomposition recurses on LL.

use crate::error::{Error, Result};
use crate::planes::Plane;

/// Sub-band identifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Band {
    LL,
    LH,
    HL,
    HH,
}

impl Band {
    pub const ALL: [Band; 4] = [Band::LL, Band::LH, Band::HL, Band::HH];

    pub fn name(self) -> &'static str {
        match self {
            Band::LL => "LL",
            Band::LH => "LH",
            Band::HL => "HL",
            Band::HH => "HH",
        }
    }
}

/// The four sub-bands of one plane at one level.
#[derive(Debug, Clone, PartialEq)]
pub struct SubBandSet {
    pub ll: Plane,
    pub lh: Plane,
    pub hl: Plane,
    pub hh: Plane,
}

impl SubBandSet {
    pub fn band(&self, band: Band) -> &Plane {
        match band {
            Band::LL => &self.ll,
            Band::LH => &self.lh,
            Band::HL => &self.hl,
            Band::HH => &self.hh,
        }
    }

    pub fn band_mut(&mut self, band: Band) -> &mut Plane {
        match band {
            Band::LL => &mut self.ll,
            Band::LH => &mut self.lh,
            Band::HL => &mut self.hl,
            Band::HH => &mut self.hh,
        }
    }

    /// `(width, height)` of each band.
    pub fn dims(&self) -> (usize, usize) {
        self.ll.dims()
    }

    pub fn energy(&self) -> f64 {
        Band::ALL.iter().map(|&b| self.band(b).energy()).sum()
    }

    pub fn validate(&self) -> Result<()> {
        for b in [Band::LH, Band::HL, Band::HH] {
            self.ll.ensure_same_dims(self.band(b))?;
        }
        Ok(())
    }

    pub fn ensure_same_dims(&self, other: &SubBandSet) -> Result<()> {
        self.validate()?;
        other.validate()?;
        self.ll.ensure_same_dims(&other.ll)
    }
}

/// Detail bands of one decomposition level.
#[derive(Debug, Clone, PartialEq)]
pub struct DetailBands {
    pub lh: Plane,
    pub hl: Plane,
    pub hh: Plane,
}

/// `N`-level decomposition: `N` detail triples (finest first) plus the final LL.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiLevelDecomposition {
    pub detail_chain: Vec<DetailBands>,
    pub final_ll: Plane,
}

impl MultiLevelDecomposition {
    pub fn levels(&self) -> usize {
        self.detail_chain.len()
    }

    /// Total number of sub-band planes, `3N + 1`.
    pub fn band_count(&self) -> usize {
        3 * self.levels() + 1
    }

    pub fn energy(&self) -> f64 {
        self.final_ll.energy()
            + self
                .detail_chain
                .iter()
                .map(|d| d.lh.energy() + d.hl.energy() + d.hh.energy())
                .sum::<f64>()
    }

    /// Applies `f` to every coefficient plane.
    pub fn map(&self, f: impl Fn(&Plane) -> Plane) -> MultiLevelDecomposition {
        MultiLevelDecomposition {
            detail_chain: self
                .detail_chain
                .iter()
                .map(|d| DetailBands {
                    lh: f(&d.lh),
                    hl: f(&d.hl),
                    hh: f(&d.hh),
                })
                .collect(),
            final_ll: f(&self.final_ll),
        }
    }
}

/// One level of 2D Haar analysis.
pub fn haar_forward(p: &Plane) -> Result<SubBandSet> {
    let (w, h) = p.dims();
    if w < 2 || h < 2 {
        return Err(Error::TooSmall {
            width: w,
            height: h,
        });
    }
    if w % 2 != 0 || h % 2 != 0 {
        return Err(Error::OddDimension {
            width: w,
            height: h,
            levels: 1,
        });
    }
    let (hw, hh_) = (w / 2, h / 2);
    let mut ll = Plane::zeros(hw, hh_);
    let mut lh = Plane::zeros(hw, hh_);
    let mut hl = Plane::zeros(hw, hh_);
    let mut hh = Plane::zeros(hw, hh_);
    for row in 0..hh_ {
        for col in 0..hw {
            let a = p.get(2 * row, 2 * col);
            let b = p.get(2 * row, 2 * col + 1);
            let c = p.get(2 * row + 1, 2 * col);
            let d = p.get(2 * row + 1, 2 * col + 1);
            ll.set(row, col, (a + b + c + d) / 2.0);
            hl.set(row, col, (a - b + c - d) / 2.0);
            lh.set(row, col, (a + b - c - d) / 2.0);
            hh.set(row, col, (a - b - c + d) / 2.0);
        }
    }
    Ok(SubBandSet { ll, lh, hl, hh })
}

/// Exact inverse of [`haar_forward`].
pub fn haar_inverse(bands: &SubBandSet) -> Result<Plane> {
    bands.validate()?;
    let (hw, hh_) = bands.dims();
    let mut out = Plane::zeros(hw * 2, hh_ * 2);
    for row in 0..hh_ {
        for col in 0..hw {
            let ll = bands.ll.get(row, col);
            let hl = bands.hl.get(row, col);
            let lh = bands.lh.get(row, col);
            let hh = bands.hh.get(row, col);
            out.set(2 * row, 2 * col, (ll + hl + lh + hh) / 2.0);
            out.set(2 * row, 2 * col + 1, (ll - hl + lh - hh) / 2.0);
            out.set(2 * row + 1, 2 * col, (ll + hl - lh - hh) / 2.0);
            out.set(2 * row + 1, 2 * col + 1, (ll - hl - lh + hh) / 2.0);
        }
    }
    Ok(out)
}

/// Checks that a `width` x `height` plane can be decomposed `levels` times.
pub fn check_decomposable(width: usize, height: usize, levels: u32) -> Result<()> {
    if levels == 0 {
        return Err(Error::InvalidLevels);
    }
    let divisible = match 1usize.checked_shl(levels) {
        Some(m) => width > 0 && height > 0 && width.is_multiple_of(m) && height.is_multiple_of(m),
        None => false,
    };
    if !divisible {
        return Err(Error::OddDimension {
            width,
            height,
            levels,
        });
    }
    Ok(())
}

/// Recursive Haar decomposition of the LL chain.
pub fn decompose(p: &Plane, levels: u32) -> Result<MultiLevelDecomposition> {
    check_decomposable(p.width(), p.height(), levels)?;
    let mut detail_chain = Vec::with_capacity(levels as usize);
    let mut current = p.clone();
    for _ in 0..levels {
        let SubBandSet { ll, lh, hl, hh } = haar_forward(&current)?;
        detail_chain.push(DetailBands { lh, hl, hh });
        current = ll;
    }
    Ok(MultiLevelDecomposition {
        detail_chain,
        final_ll: current,
    })
}

/// Inverts [`decompose`], coarsest level first.
pub fn reconstruct(d: &MultiLevelDecomposition) -> Result<Plane> {
    if d.detail_chain.is_empty() {
        return Err(Error::InvalidLevels);
    }
    let mut current = d.final_ll.clone();
    for detail in d.detail_chain.iter().rev() {
        let set = SubBandSet {
            ll: current,
            lh: detail.lh.clone(),
            hl: detail.hl.clone(),
            hh: detail.hh.clone(),
        };
        current = haar_inverse(&set)?;
    }
    Ok(current)
}
