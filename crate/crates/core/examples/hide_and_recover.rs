//! Hide the coffee fixture in the astronaut fixture and get it back.
//!
//! cargo run --example hide_and_recover [alpha] [out_dir]

use std::path::PathBuf;

use dwt_stego::{
    compare_images, embed, extract, load_image, quantize_image, save_image, StegoParams,
};

fn main() -> dwt_stego::Result<()> {
    let mut args = std::env::args().skip(1);
    let alpha: f64 = args
        .next()
        .map(|a| a.parse().expect("alpha must be a number"))
        .unwrap_or(0.1);
    let out_dir = args
        .next()
        .map(PathBuf::from)
        .unwrap_or_else(std::env::temp_dir);
    let fixtures = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");

    let cover = load_image(fixtures.join("cover_astronaut.png"))?;
    let secret = load_image(fixtures.join("secret_coffee.png"))?;
    let params = StegoParams::new(alpha);

    let out = embed(&cover, &secret, &params)?;
    let stego_path = out_dir.join("stego.png");
    save_image(&out.stego_quantized, &stego_path)?;
    let stego = load_image(&stego_path)?;
    println!("stego written to {}", stego_path.display());
    println!(
        "cover vs stego PSNR {:.4} dB",
        compare_images(&cover, &stego)?.psnr_overall
    );

    // Without renormalization the result is alpha * secret: dark at small alpha.
    let scaled = quantize_image(&extract(&stego, &cover, &params)?);
    save_image(&scaled, out_dir.join("extracted.png"))?;
    println!(
        "secret vs extracted PSNR {:.4} dB",
        compare_images(&secret, &scaled)?.psnr_overall
    );

    let exact = quantize_image(&extract(&stego, &cover, &params.with_renormalize(true))?);
    save_image(&exact, out_dir.join("extracted_renormalized.png"))?;
    println!(
        "secret vs renormalized extraction PSNR {:.4} dB",
        compare_images(&secret, &exact)?.psnr_overall
    );
    Ok(())
}
