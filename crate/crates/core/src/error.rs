use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected:?}, found {found:?} (width, height)")]
    DimensionMismatch {
        expected: (usize, usize),
        found: (usize, usize),
    },

    /// Cover and secret (or stego and cover) must be the same size.
    #[error("images must be the same size: {first:?} vs {second:?} (width, height)")]
    SizeMismatch {
        first: (usize, usize),
        second: (usize, usize),
    },

    #[error("{width}x{height} is not divisible by 2^{levels}; crop to even dimensions first")]
    OddDimension {
        width: usize,
        height: usize,
        levels: u32,
    },

    #[error("plane {width}x{height} is too small for a Haar step (needs at least 2x2)")]
    TooSmall { width: usize, height: usize },

    #[error("alpha must lie strictly inside (0, 1), got {0}")]
    InvalidAlpha(f64),

    #[error("decomposition levels must be at least 1")]
    InvalidLevels,

    #[error("band mask must select at least one of LL, LH, HL, HH")]
    EmptyBandMask,

    #[error("alpha {0} is too small to renormalize (minimum 1e-6)")]
    AlphaUnderflow(f64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("image codec error on {path}: {source}")]
    Image {
        path: PathBuf,
        #[source]
        source: image::ImageError,
    },

    #[error("unsupported image {path}: {reason}")]
    UnsupportedFormat { path: PathBuf, reason: String },

    #[error("sample {value} at row {row}, column {col} of plane {plane} is not an 8-bit integer; quantize first")]
    NotQuantized {
        plane: char,
        row: usize,
        col: usize,
        value: f64,
    },

    #[error("float dump has bad magic {0:?}, expected \"STGF\"")]
    BadMagic([u8; 4]),

    #[error("float dump version {0} is not supported")]
    UnsupportedVersion(u16),

    #[error("float dump payload truncated: {expected} bytes required, {found} present")]
    TruncatedPayload { expected: usize, found: usize },

    #[error("float dump has {0} trailing bytes after the payload")]
    TrailingBytes(usize),
}

impl Error {
    /// Process exit status used by the command-line tool.
    ///
    /// 2 = usage / parameter, 3 = dimensions, 4 = I/O or format.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidAlpha(_)
            | Error::InvalidLevels
            | Error::EmptyBandMask
            | Error::AlphaUnderflow(_)
            | Error::InvalidParameter(_) => 2,
            Error::DimensionMismatch { .. }
            | Error::SizeMismatch { .. }
            | Error::OddDimension { .. }
            | Error::TooSmall { .. } => 3,
            Error::Io { .. }
            | Error::Image { .. }
            | Error::UnsupportedFormat { .. }
            | Error::NotQuantized { .. }
            | Error::BadMagic(_)
            | Error::UnsupportedVersion(_)
            | Error::TruncatedPayload { .. }
            | Error::TrailingBytes(_) => 4,
        }
    }
}
