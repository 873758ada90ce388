//! Compare extraction from the 8-bit stego with extraction from the
//! bit-exact float dump.
//!
//! cargo run --example float_dump_path

use std::path::PathBuf;

use dwt_stego::{
    embed, extract, load_image, quantize_image, read_float_dump, save_image, write_float_dump,
    StegoParams,
};

fn max_error(a: &dwt_stego::ColorImage, b: &dwt_stego::ColorImage) -> f64 {
    a.planes()
        .iter()
        .zip(b.planes())
        .map(|(p, q)| p.max_abs_diff(q).unwrap())
        .fold(0.0, f64::max)
}

fn main() -> dwt_stego::Result<()> {
    let fixtures = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let cover = load_image(fixtures.join("cover_astronaut.png"))?;
    let secret = load_image(fixtures.join("secret_coffee.png"))?;
    let tmp = std::env::temp_dir();

    println!(
        "{:>5}  {:>22}  {:>18}",
        "alpha", "max err, 8-bit stego", "max err, float dump"
    );
    for alpha in [0.1, 0.3, 0.5, 0.7, 0.9] {
        let params = StegoParams::new(alpha).with_renormalize(true);
        let out = embed(&cover, &secret, &params)?;

        save_image(&out.stego_quantized, tmp.join("stego.png"))?;
        write_float_dump(&out.stego, tmp.join("stego.stgf"))?;

        let from_png = quantize_image(&extract(
            &load_image(tmp.join("stego.png"))?,
            &cover,
            &params,
        )?);
        let from_dump = quantize_image(&extract(
            &read_float_dump(tmp.join("stego.stgf"))?,
            &cover,
            &params,
        )?);
        println!(
            "{:>5.1}  {:>22}  {:>18}",
            alpha,
            max_error(&from_png, &secret),
            max_error(&from_dump, &secret)
        );
    }
    Ok(())
}
