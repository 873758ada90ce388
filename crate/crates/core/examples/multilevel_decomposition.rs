//! Three-level decomposition of a photograph's red plane, showing how energy
//! concentrates in the coarse LL band.
//!
//! cargo run --example multilevel_decomposition [image.png]

use std::path::PathBuf;

use dwt_stego::{decompose, load_image, reconstruct};

fn main() -> dwt_stego::Result<()> {
    let path = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| {
            PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/cover_astronaut.png")
        });
    let img = load_image(&path)?;
    let plane = img.r();
    let levels = 3;
    let d = decompose(plane, levels)?;
    let total = plane.energy();

    println!(
        "{} ({}x{}), {} levels, {} sub-bands",
        path.display(),
        plane.width(),
        plane.height(),
        levels,
        d.band_count()
    );
    println!("{:<6} {:>9} {:>10}", "band", "size", "energy %");
    for (i, det) in d.detail_chain.iter().enumerate() {
        for (name, band) in [("LH", &det.lh), ("HL", &det.hl), ("HH", &det.hh)] {
            println!(
                "{:<6} {:>9} {:>10.4}",
                format!("{name}{}", i + 1),
                format!("{}x{}", band.width(), band.height()),
                100.0 * band.energy() / total
            );
        }
    }
    println!(
        "{:<6} {:>9} {:>10.4}",
        format!("LL{levels}"),
        format!("{}x{}", d.final_ll.width(), d.final_ll.height()),
        100.0 * d.final_ll.energy() / total
    );
    println!(
        "sum of band energy / plane energy = {:.12}",
        d.energy() / total
    );
    println!(
        "reconstruction error {:e}",
        reconstruct(&d)?.max_abs_diff(plane)?
    );
    Ok(())
}
