//! Blend only some sub-bands and see what it does to stego quality.
//!
//! cargo run --example band_selection

use std::path::PathBuf;

use dwt_stego::{
    compare_images, embed, extract, load_image, quantize_image, BandMask, StegoParams,
};

fn main() -> dwt_stego::Result<()> {
    let fixtures = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let cover = load_image(fixtures.join("cover_astronaut.png"))?;
    let secret = load_image(fixtures.join("secret_coffee.png"))?;

    println!(
        "{:<12} {:>7} {:>18} {:>22}",
        "bands", "levels", "psnr_cover_stego", "psnr_secret_recovered"
    );
    for bands in ["LL,LH,HL,HH", "LH,HL,HH", "LH,HL", "HH", "LL"] {
        for levels in [1, 2] {
            let mask: BandMask = bands.parse()?;
            let params = StegoParams::new(0.3)
                .with_bands(mask)
                .with_levels(levels)
                .with_renormalize(true);
            let out = embed(&cover, &secret, &params)?;
            let recovered = quantize_image(&extract(&out.stego_quantized, &cover, &params)?);
            println!(
                "{:<12} {:>7} {:>18.4} {:>22.4}",
                bands,
                levels,
                compare_images(&cover, &out.stego_quantized)?.psnr_overall,
                compare_images(&secret, &recovered)?.psnr_overall
            );
        }
    }
    Ok(())
}
