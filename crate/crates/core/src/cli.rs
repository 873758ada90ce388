//! Command-line front end.
//!
//! Exit codes: 0 success, 2 usage or parameter error, 3 dimension error,
//! 4 I/O or format error.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::imageio::{load_image, read_float_dump, save_image, write_float_dump};
use crate::metrics::{compare_images, fmt4};
use crate::planes::{quantize_image, ColorImage};
use crate::stego::{embed, extract, BandMask, StegoParams};
use crate::sweep::{best_alphas, run_sweep, write_csv, AlphaRange, ExtractionPath};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "dwt-stego",
    version,
    about = "Hide a color image in another by alpha blending Haar wavelet sub-bands"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hide a secret image inside a cover image of the same size
    Embed(EmbedArgs),
    /// Recover a secret image from a stego image and its cover
    Extract(ExtractArgs),
    /// MSE and PSNR between two images
    Metrics(MetricsArgs),
    /// Embed and extract over a range of alphas, writing one CSV row each
    Sweep(SweepArgs),
}

#[derive(Debug, Args)]
pub struct TransformArgs {
    /// Number of wavelet decomposition levels
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..=16))]
    pub levels: u32,
    /// Sub-bands to blend, comma separated (LL,LH,HL,HH)
    #[arg(long, default_value = "LL,LH,HL,HH", value_parser = parse_bands)]
    pub bands: BandMask,
}

#[derive(Debug, Args)]
pub struct EmbedArgs {
    #[arg(long)]
    pub cover: PathBuf,
    #[arg(long)]
    pub secret: PathBuf,
    /// Weight of the secret, strictly between 0 and 1
    #[arg(long, value_parser = parse_alpha)]
    pub alpha: f64,
    /// Quantized stego output (.png, .bmp or .ppm)
    #[arg(long)]
    pub out: PathBuf,
    #[command(flatten)]
    pub transform: TransformArgs,
    /// Also write the unquantized stego as a float dump
    #[arg(long)]
    pub float_out: Option<PathBuf>,
    /// Crop inputs from the bottom/right to dimensions divisible by 2^levels
    #[arg(long)]
    pub crop_even: bool,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("stego_source").required(true).args(["stego", "float_in"])))]
pub struct ExtractArgs {
    /// Stego raster file
    #[arg(long)]
    pub stego: Option<PathBuf>,
    /// Read the unquantized stego from a float dump instead
    #[arg(long)]
    pub float_in: Option<PathBuf>,
    #[arg(long)]
    pub cover: PathBuf,
    #[arg(long, value_parser = parse_alpha)]
    pub alpha: f64,
    #[arg(long)]
    pub out: PathBuf,
    #[command(flatten)]
    pub transform: TransformArgs,
    /// Divide the recovered coefficients by alpha
    #[arg(long)]
    pub renormalize: bool,
    /// Crop inputs from the bottom/right to dimensions divisible by 2^levels
    #[arg(long)]
    pub crop_even: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Csv,
}

#[derive(Debug, Args)]
pub struct MetricsArgs {
    #[arg(long = "ref")]
    pub reference: PathBuf,
    #[arg(long)]
    pub test: PathBuf,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    pub format: ReportFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PathArg {
    Quantized,
    Float,
}

impl From<PathArg> for ExtractionPath {
    fn from(p: PathArg) -> Self {
        match p {
            PathArg::Quantized => ExtractionPath::Quantized,
            PathArg::Float => ExtractionPath::Float,
        }
    }
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub cover: PathBuf,
    #[arg(long)]
    pub secret: PathBuf,
    /// Inclusive range start:stop:step
    #[arg(long, default_value = "0.1:0.9:0.1", value_parser = parse_range)]
    pub alphas: AlphaRange,
    /// CSV output path
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long, value_enum, default_value_t = PathArg::Quantized)]
    pub path: PathArg,
    #[command(flatten)]
    pub transform: TransformArgs,
    #[arg(long)]
    pub renormalize: bool,
}

fn parse_alpha(s: &str) -> std::result::Result<f64, String> {
    let a: f64 = s.parse().map_err(|_| format!("{s:?} is not a number"))?;
    if a > 0.0 && a < 1.0 {
        Ok(a)
    } else {
        Err(format!("alpha must lie strictly inside (0, 1), got {s}"))
    }
}

fn parse_bands(s: &str) -> std::result::Result<BandMask, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_range(s: &str) -> std::result::Result<AlphaRange, String> {
    let range: AlphaRange = s.parse().map_err(|e: Error| e.to_string())?;
    range.values().map_err(|e| e.to_string())?;
    Ok(range)
}

fn load_cropped(path: &Path, crop: bool, levels: u32) -> Result<ColorImage> {
    let img = load_image(path)?;
    if crop {
        img.crop_to_multiple(levels)
    } else {
        Ok(img)
    }
}

fn cmd_embed(args: &EmbedArgs, out: &mut dyn Write) -> Result<()> {
    let levels = args.transform.levels;
    let cover = load_cropped(&args.cover, args.crop_even, levels)?;
    let secret = load_cropped(&args.secret, args.crop_even, levels)?;
    let params = StegoParams::new(args.alpha)
        .with_levels(levels)
        .with_bands(args.transform.bands);
    let result = embed(&cover, &secret, &params)?;
    save_image(&result.stego_quantized, &args.out)?;
    if let Some(path) = &args.float_out {
        write_float_dump(&result.stego, path)?;
    }
    let _ = writeln!(
        out,
        "embedded {}x{} secret at alpha {} (levels {}, bands {}) -> {}",
        cover.width(),
        cover.height(),
        args.alpha,
        levels,
        args.transform.bands,
        args.out.display()
    );
    Ok(())
}

fn cmd_extract(args: &ExtractArgs, out: &mut dyn Write) -> Result<()> {
    let levels = args.transform.levels;
    let stego = match (&args.float_in, &args.stego) {
        (Some(dump), _) => {
            let img = read_float_dump(dump)?;
            if args.crop_even {
                img.crop_to_multiple(levels)?
            } else {
                img
            }
        }
        (None, Some(path)) => load_cropped(path, args.crop_even, levels)?,
        (None, None) => unreachable!("clap requires one stego source"),
    };
    let cover = load_cropped(&args.cover, args.crop_even, levels)?;
    let params = StegoParams::new(args.alpha)
        .with_levels(levels)
        .with_bands(args.transform.bands)
        .with_renormalize(args.renormalize);
    let secret = quantize_image(&extract(&stego, &cover, &params)?);
    save_image(&secret, &args.out)?;
    let _ = writeln!(
        out,
        "extracted {}x{} image at alpha {}{} -> {}",
        secret.width(),
        secret.height(),
        args.alpha,
        if args.renormalize {
            " (renormalized)"
        } else {
            ""
        },
        args.out.display()
    );
    Ok(())
}

fn cmd_metrics(args: &MetricsArgs, out: &mut dyn Write) -> Result<()> {
    let reference = load_image(&args.reference)?;
    let test = load_image(&args.test)?;
    let report = compare_images(&reference, &test)?;
    let _ = match args.format {
        ReportFormat::Text => write!(out, "{report}"),
        ReportFormat::Csv => {
            let mut s = String::from("channel,mse,psnr\n");
            for (label, mse, psnr) in report.rows() {
                s.push_str(&format!("{label},{},{}\n", fmt4(mse), fmt4(psnr)));
            }
            write!(out, "{s}")
        }
    };
    Ok(())
}

fn cmd_sweep(args: &SweepArgs, out: &mut dyn Write) -> Result<()> {
    let alphas = args.alphas.values()?;
    let cover = load_image(&args.cover)?;
    let secret = load_image(&args.secret)?;
    // a valid placeholder alpha; run_sweep overrides it per row
    let base = StegoParams::new(0.5)
        .with_levels(args.transform.levels)
        .with_bands(args.transform.bands)
        .with_renormalize(args.renormalize);
    let rows = run_sweep(&cover, &secret, &alphas, &base, args.path.into())?;
    let file = File::create(&args.out).map_err(|source| Error::Io {
        path: args.out.clone(),
        source,
    })?;
    write_csv(&rows, BufWriter::new(file))?;

    let _ = writeln!(
        out,
        "{:>6} {:>18} {:>22}",
        "alpha", "psnr_cover_stego", "psnr_secret_extracted"
    );
    for r in &rows {
        let _ = writeln!(
            out,
            "{:>6} {:>18} {:>22}",
            fmt4(r.alpha),
            fmt4(r.psnr_cover_stego),
            fmt4(r.psnr_secret_extracted)
        );
    }
    if let Some((best_stego, best_secret)) = best_alphas(&rows) {
        let _ = writeln!(out, "best alpha for cover vs stego: {}", fmt4(best_stego));
        let _ = writeln!(
            out,
            "best alpha for secret vs extracted: {}",
            fmt4(best_secret)
        );
    }
    let _ = writeln!(
        out,
        "path: {}; wrote {}",
        args.path.to_possible_value().unwrap().get_name(),
        args.out.display()
    );
    Ok(())
}

/// Executes a parsed command.
pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<()> {
    match &cli.command {
        Command::Embed(a) => cmd_embed(a, out),
        Command::Extract(a) => cmd_extract(a, out),
        Command::Metrics(a) => cmd_metrics(a, out),
        Command::Sweep(a) => cmd_sweep(a, out),
    }
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
