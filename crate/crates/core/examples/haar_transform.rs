//! Single-level 2D Haar analysis and synthesis on small planes.
//!
//! cargo run --example haar_transform

use dwt_stego::{haar_forward, haar_inverse, Plane};

fn show(name: &str, p: &Plane) {
    println!("{name}:");
    for row in p.rows() {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:7.2}")).collect();
        println!("  [{}]", cells.join(" "));
    }
}

fn main() -> dwt_stego::Result<()> {
    let block = Plane::from_rows(&[[1.0, 2.0], [3.0, 4.0]])?;
    let bands = haar_forward(&block)?;
    show("input", &block);
    show("LL", &bands.ll);
    show("HL", &bands.hl);
    show("LH", &bands.lh);
    show("HH", &bands.hh);
    println!("energy in {} / out {}", block.energy(), bands.energy());

    // A ramp with a step: detail bands light up only where the step is.
    let ramp = Plane::from_fn(8, 4, |r, c| if c < 5 { (r + c) as f64 } else { 40.0 });
    let bands = haar_forward(&ramp)?;
    show("ramp", &ramp);
    show("ramp HL (column differences)", &bands.hl);
    show("ramp LH (row differences)", &bands.lh);

    let back = haar_inverse(&bands)?;
    println!("reconstruction error {:e}", back.max_abs_diff(&ramp)?);
    Ok(())
}
