//! Color image hiding in the Haar wavelet domain.
//!
//! A true-color secret image is hidden in a same-size true-color cover. Both
//! images are split into R, G and B planes, each plane is decomposed with an
//! orthonormal 2D Haar transform, and corresponding sub-bands are alpha
//! blended:
//!
//! ```text
//! stego_band = (1 - alpha) * cover_band + alpha * secret_band
//! ```
//!
//! Extraction takes the cover and the same parameters back and recovers
//! `alpha * secret`, or the secret itself with renormalization.
//!
//! ```no_run
//! use dwt_stego::{embed, extract, load_image, StegoParams};
//!
//! let cover = load_image("cover.png")?;
//! let secret = load_image("secret.png")?;
//! let params = StegoParams::new(0.1);
//! let out = embed(&cover, &secret, &params)?;
//! let recovered = extract(&out.stego_quantized, &cover, &params.with_renormalize(true))?;
//! # Ok::<(), dwt_stego::Error>(())
//! ```
//!
//! Modules:
//! - [`planes`]: plane / color image model and 8-bit quantization
//! - [`wavelet`]: single and multi-level Haar transform
//! - [`stego`]: sub-band blending, embedding and extraction
//! - [`metrics`]: MSE and PSNR
//! - [`imageio`]: raster files and the bit-exact float dump
//! - [`sweep`]: alpha sweep harness
//! - [`cli`]: command-line front end

pub mod cli;
pub mod error;
pub mod imageio;
pub mod metrics;
pub mod planes;
pub mod stego;
pub mod sweep;
pub mod wavelet;

pub use error::{Error, Result};
pub use imageio::{load_image, read_float_dump, save_image, write_float_dump};
pub use metrics::{compare_images, mse, psnr, MetricsReport};
pub use planes::{merge_planes, quantize_image, quantize_plane, split_planes, ColorImage, Plane};
pub use stego::{blend_bands, embed, extract, unblend_bands, BandMask, EmbedOutput, StegoParams};
pub use sweep::{run_sweep, AlphaRange, ExtractionPath, SweepRow};
pub use wavelet::{
    decompose, haar_forward, haar_inverse, reconstruct, Band, MultiLevelDecomposition, SubBandSet,
};
