//! Per-channel and pooled MSE/PSNR between two images.
//!
//! cargo run --example quality_metrics [reference.png test.png]

use std::path::PathBuf;

use dwt_stego::{compare_images, load_image, ColorImage};

fn main() -> dwt_stego::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (a, b) = if let [r, t] = args.as_slice() {
        (load_image(r)?, load_image(t)?)
    } else {
        let fixtures = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
        (
            load_image(fixtures.join("cover_astronaut.png"))?,
            load_image(fixtures.join("secret_coffee.png"))?,
        )
    };
    print!("{}", compare_images(&a, &b)?);

    println!();
    let black = ColorImage::from_rgb8(4, 4, &[0; 48])?;
    let white = ColorImage::from_rgb8(4, 4, &[255; 48])?;
    println!("black vs white:");
    print!("{}", compare_images(&black, &white)?);
    println!("identical:");
    print!("{}", compare_images(&black, &black)?);
    Ok(())
}
