//! Sweep alpha from 0.1 to 0.9 on the fixture pair and print both PSNR
//! columns, on the quantized and on the float path.
//!
//! cargo run --release --example alpha_sweep [out.csv]

use std::fs::File;
use std::path::PathBuf;

use dwt_stego::sweep::{best_alphas, write_csv};
use dwt_stego::{load_image, run_sweep, AlphaRange, ExtractionPath, StegoParams};

fn main() -> dwt_stego::Result<()> {
    let fixtures = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let cover = load_image(fixtures.join("cover_astronaut.png"))?;
    let secret = load_image(fixtures.join("secret_coffee.png"))?;
    let alphas = AlphaRange::default().values()?;

    for path in [ExtractionPath::Quantized, ExtractionPath::Float] {
        let rows = run_sweep(&cover, &secret, &alphas, &StegoParams::new(0.5), path)?;
        println!("path: {path}");
        println!(
            "{:>5}  {:>26}  {:>30}",
            "alpha", "cover vs stego PSNR (dB)", "secret vs extracted PSNR (dB)"
        );
        for r in &rows {
            println!(
                "{:>5.1}  {:>26.4}  {:>30.4}",
                r.alpha, r.psnr_cover_stego, r.psnr_secret_extracted
            );
        }
        let (best_stego, best_secret) = best_alphas(&rows).expect("non-empty sweep");
        println!("best stego at alpha {best_stego}, best extraction at alpha {best_secret}\n");

        if let (ExtractionPath::Quantized, Some(out)) = (path, std::env::args().nth(1)) {
            let file = File::create(&out).map_err(|source| dwt_stego::Error::Io {
                path: out.clone().into(),
                source,
            })?;
            write_csv(&rows, file)?;
            println!("wrote {out}\n");
        }
    }
    Ok(())
}
