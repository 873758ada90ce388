//! Raster and float-dump I/O.
//!
//! Raster files must be lossless 8-bit RGB (PNG, BMP or PPM). Anything with an
//! alpha channel, a different depth, or a lossy codec is refused.
//!
//! The float dump keeps real-valued planes bit-exact:
//!
//! ```text
//! offset size  field
//! 0      4     magic "STGF"
//! 4      2     version (u16 LE) = 1
//! 6      4     width (u32 LE)
//! 10     4     height (u32 LE)
//! 14     1     plane count (u8) = 3
//! 15     ...   planes R, G, B; width*height f64 LE each, row-major
//! ```

use std::fs;
use std::io::Cursor;
use std::path::Path;

use image::{ColorType, ImageFormat, ImageReader, RgbImage};

use crate::error::{Error, Result};
use crate::planes::{ColorImage, Plane};

pub const FLOAT_DUMP_MAGIC: [u8; 4] = *b"STGF";
pub const FLOAT_DUMP_VERSION: u16 = 1;
pub const FLOAT_DUMP_HEADER_LEN: usize = 15;

const LOSSLESS: [ImageFormat; 3] = [ImageFormat::Png, ImageFormat::Bmp, ImageFormat::Pnm];

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> Error + '_ {
    move |source| Error::Io {
        path: path.to_path_buf(),
        source,
    }
}

fn unsupported(path: &Path, reason: impl Into<String>) -> Error {
    Error::UnsupportedFormat {
        path: path.to_path_buf(),
        reason: reason.into(),
    }
}

/// Loads an 8-bit RGB raster. Row 0, column 0 is the top-left pixel.
pub fn load_image(path: impl AsRef<Path>) -> Result<ColorImage> {
    let path = path.as_ref();
    let bytes = fs::read(path).map_err(io_err(path))?;
    let reader = ImageReader::new(Cursor::new(bytes))
        .with_guessed_format()
        .map_err(io_err(path))?;
    let format = reader
        .format()
        .ok_or_else(|| unsupported(path, "unrecognized file contents"))?;
    if !LOSSLESS.contains(&format) {
        return Err(unsupported(
            path,
            format!("{format:?} is not an accepted lossless format (use PNG, BMP or PPM)"),
        ));
    }
    let decoded = reader.decode().map_err(|source| Error::Image {
        path: path.to_path_buf(),
        source,
    })?;
    match decoded.color() {
        ColorType::Rgb8 => {}
        ColorType::Rgba8 | ColorType::La8 | ColorType::Rgba16 | ColorType::La16 => {
            return Err(unsupported(path, "alpha channels are not accepted"))
        }
        ColorType::L8 | ColorType::L16 => {
            return Err(unsupported(
                path,
                "grayscale image; three color channels required",
            ))
        }
        other => return Err(unsupported(path, format!("{other:?}; 8-bit RGB required"))),
    }
    let rgb = decoded.into_rgb8();
    ColorImage::from_rgb8(rgb.width() as usize, rgb.height() as usize, rgb.as_raw())
}

fn output_format(path: &Path) -> Result<ImageFormat> {
    let format = ImageFormat::from_path(path).map_err(|_| {
        unsupported(
            path,
            "cannot infer format from extension (use .png, .bmp or .ppm)",
        )
    })?;
    if !LOSSLESS.contains(&format) {
        return Err(unsupported(
            path,
            format!("{format:?} output is lossy or unsupported"),
        ));
    }
    Ok(format)
}

/// Writes a quantized image losslessly; the format follows the extension.
pub fn save_image(img: &ColorImage, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    for (name, plane) in ['R', 'G', 'B'].into_iter().zip(img.planes()) {
        if let Some((row, col, value)) = plane.first_unquantized() {
            return Err(Error::NotQuantized {
                plane: name,
                row,
                col,
                value,
            });
        }
    }
    let format = output_format(path)?;
    let raw = img.to_rgb8().expect("planes checked above");
    let buf = RgbImage::from_raw(img.width() as u32, img.height() as u32, raw)
        .expect("buffer length matches dimensions");
    buf.save_with_format(path, format)
        .map_err(|source| match source {
            image::ImageError::IoError(e) => Error::Io {
                path: path.to_path_buf(),
                source: e,
            },
            source => Error::Image {
                path: path.to_path_buf(),
                source,
            },
        })
}

/// Serializes real-valued planes into the float dump layout.
pub fn encode_float_dump(img: &ColorImage) -> Vec<u8> {
    let n = img.r().len();
    let mut out = Vec::with_capacity(FLOAT_DUMP_HEADER_LEN + 3 * n * 8);
    out.extend_from_slice(&FLOAT_DUMP_MAGIC);
    out.extend_from_slice(&FLOAT_DUMP_VERSION.to_le_bytes());
    out.extend_from_slice(&(img.width() as u32).to_le_bytes());
    out.extend_from_slice(&(img.height() as u32).to_le_bytes());
    out.push(3);
    for plane in img.planes() {
        for v in plane.samples() {
            out.extend_from_slice(&v.to_le_bytes());
        }
    }
    out
}

/// Parses a float dump produced by [`encode_float_dump`].
pub fn decode_float_dump(bytes: &[u8]) -> Result<ColorImage> {
    if bytes.len() < FLOAT_DUMP_HEADER_LEN {
        if bytes.len() >= 4 && bytes[..4] != FLOAT_DUMP_MAGIC {
            return Err(Error::BadMagic(bytes[..4].try_into().unwrap()));
        }
        return Err(Error::TruncatedPayload {
            expected: FLOAT_DUMP_HEADER_LEN,
            found: bytes.len(),
        });
    }
    let magic: [u8; 4] = bytes[..4].try_into().unwrap();
    if magic != FLOAT_DUMP_MAGIC {
        return Err(Error::BadMagic(magic));
    }
    let version = u16::from_le_bytes([bytes[4], bytes[5]]);
    if version != FLOAT_DUMP_VERSION {
        return Err(Error::UnsupportedVersion(version));
    }
    let width = u32::from_le_bytes(bytes[6..10].try_into().unwrap()) as usize;
    let height = u32::from_le_bytes(bytes[10..14].try_into().unwrap()) as usize;
    let plane_count = bytes[14] as usize;
    if plane_count != 3 {
        return Err(Error::InvalidParameter(format!(
            "float dump holds {plane_count} planes; an RGB image needs 3"
        )));
    }
    let payload = &bytes[FLOAT_DUMP_HEADER_LEN..];
    let n = width.saturating_mul(height);
    let expected = n.saturating_mul(plane_count * 8);
    if payload.len() < expected {
        return Err(Error::TruncatedPayload {
            expected,
            found: payload.len(),
        });
    }
    if payload.len() > expected {
        return Err(Error::TrailingBytes(payload.len() - expected));
    }
    let plane = |i: usize| -> Result<Plane> {
        let samples = payload[i * n * 8..(i + 1) * n * 8]
            .chunks_exact(8)
            .map(|b| f64::from_le_bytes(b.try_into().unwrap()))
            .collect();
        Plane::from_vec(width, height, samples)
    };
    let (r, g, b) = (plane(0)?, plane(1)?, plane(2)?);
    crate::planes::merge_planes(r, g, b)
}

pub fn write_float_dump(img: &ColorImage, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    fs::write(path, encode_float_dump(img)).map_err(io_err(path))
}

pub fn read_float_dump(path: impl AsRef<Path>) -> Result<ColorImage> {
    let path = path.as_ref();
    let bytes = fs::read(path).map_err(io_err(path))?;
    decode_float_dump(&bytes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use tempfile::tempdir;

    #[test]
    fn known_pixels_round_trip() {
        let dir = tempdir().unwrap();
        let path = dir.path().join("px.png");
        let img =
            ColorImage::from_rgb8(2, 2, &[1, 2, 3, 40, 50, 60, 255, 0, 128, 7, 8, 9]).unwrap();
        save_image(&img, &path).unwrap();
        let back = load_image(&path).unwrap();
        assert_eq!(back, img);
        assert_eq!(back.g().get(1, 0), 0.0);
    }

    #[test]
    fn bmp_and_ppm_round_trip() {
        let dir = tempdir().unwrap();
        let img =
            ColorImage::from_rgb8(3, 2, &(0..18).map(|v| v * 13).collect::<Vec<u8>>()).unwrap();
        for ext in ["bmp", "ppm"] {
            let path = dir.path().join(format!("x.{ext}"));
            save_image(&img, &path).unwrap();
            assert_eq!(load_image(&path).unwrap(), img);
        }
    }

    #[test]
    fn all_zero_image() {
        let dir = tempdir().unwrap();
        let path = dir.path().join("zero.png");
        let img = ColorImage::from_rgb8(4, 4, &[0; 48]).unwrap();
        save_image(&img, &path).unwrap();
        assert_eq!(load_image(&path).unwrap(), img);
    }

    #[test]
    fn rejects_grayscale_and_alpha() {
        let dir = tempdir().unwrap();
        let gray = dir.path().join("gray.png");
        image::GrayImage::new(2, 2).save(&gray).unwrap();
        assert!(matches!(
            load_image(&gray),
            Err(Error::UnsupportedFormat { .. })
        ));
        let rgba = dir.path().join("rgba.png");
        image::RgbaImage::new(2, 2).save(&rgba).unwrap();
        assert!(matches!(
            load_image(&rgba),
            Err(Error::UnsupportedFormat { .. })
        ));
        let deep = dir.path().join("deep.png");
        image::ImageBuffer::<image::Rgb<u16>, _>::new(2, 2)
            .save(&deep)
            .unwrap();
        assert!(matches!(
            load_image(&deep),
            Err(Error::UnsupportedFormat { .. })
        ));
    }

    #[test]
    fn rejects_lossy_and_garbage() {
        let dir = tempdir().unwrap();
        // JPEG SOI marker is enough for format sniffing
        let jpg = dir.path().join("a.jpg");
        fs::write(
            &jpg,
            [0xFF, 0xD8, 0xFF, 0xE0, 0, 0x10, b'J', b'F', b'I', b'F', 0],
        )
        .unwrap();
        assert!(matches!(
            load_image(&jpg),
            Err(Error::UnsupportedFormat { .. })
        ));
        let junk = dir.path().join("junk.png");
        fs::write(&junk, b"not an image at all").unwrap();
        assert!(load_image(&junk).is_err());
        let img = ColorImage::from_rgb8(1, 1, &[0; 3]).unwrap();
        assert!(matches!(
            save_image(&img, dir.path().join("out.jpg")),
            Err(Error::UnsupportedFormat { .. })
        ));
    }

    #[test]
    fn missing_file_is_io_error() {
        let err = load_image("/definitely/not/here.png").unwrap_err();
        assert!(matches!(err, Error::Io { .. }));
        assert_eq!(err.exit_code(), 4);
    }

    #[test]
    fn save_rejects_unquantized() {
        let dir = tempdir().unwrap();
        let p = Plane::from_rows(&[[127.5, 0.0]]).unwrap();
        let img = crate::planes::merge_planes(p.clone(), p.clone(), p).unwrap();
        let err = save_image(&img, dir.path().join("q.png")).unwrap_err();
        assert!(matches!(err, Error::NotQuantized { row: 0, col: 0, .. }));
        let p = Plane::from_rows(&[[256.0]]).unwrap();
        let img = crate::planes::merge_planes(p.clone(), p.clone(), p).unwrap();
        assert!(save_image(&img, dir.path().join("q.png")).is_err());
    }

    #[test]
    fn float_dump_header_layout() {
        let img = ColorImage::from_rgb8(2, 1, &[1, 2, 3, 4, 5, 6]).unwrap();
        let bytes = encode_float_dump(&img);
        assert_eq!(&bytes[..4], b"STGF");
        assert_eq!(&bytes[4..6], &[1, 0]);
        assert_eq!(&bytes[6..10], &[2, 0, 0, 0]);
        assert_eq!(&bytes[10..14], &[1, 0, 0, 0]);
        assert_eq!(bytes[14], 3);
        assert_eq!(bytes.len(), 15 + 3 * 2 * 8);
        // first R sample, then second R sample, then G
        assert_eq!(&bytes[15..23], &1.0f64.to_le_bytes());
        assert_eq!(&bytes[23..31], &4.0f64.to_le_bytes());
        assert_eq!(&bytes[31..39], &2.0f64.to_le_bytes());
    }

    #[test]
    fn float_dump_bad_magic() {
        let mut bytes = encode_float_dump(&ColorImage::from_rgb8(1, 1, &[0; 3]).unwrap());
        bytes[..4].copy_from_slice(b"XXXX");
        assert!(matches!(decode_float_dump(&bytes), Err(Error::BadMagic(m)) if &m == b"XXXX"));
    }

    #[test]
    fn float_dump_truncated() {
        let full = encode_float_dump(&ColorImage::from_rgb8(2, 2, &[0; 12]).unwrap());
        assert_eq!(full.len() - FLOAT_DUMP_HEADER_LEN, 96);
        let cut = &full[..FLOAT_DUMP_HEADER_LEN + 95];
        assert!(matches!(
            decode_float_dump(cut),
            Err(Error::TruncatedPayload {
                expected: 96,
                found: 95
            })
        ));
        assert!(matches!(
            decode_float_dump(&full[..7]),
            Err(Error::TruncatedPayload { .. })
        ));
        let mut long = full.clone();
        long.push(0);
        assert!(matches!(
            decode_float_dump(&long),
            Err(Error::TrailingBytes(1))
        ));
        let mut v2 = full;
        v2[4] = 2;
        assert!(matches!(
            decode_float_dump(&v2),
            Err(Error::UnsupportedVersion(2))
        ));
    }

    #[test]
    fn float_dump_file_round_trip() {
        let dir = tempdir().unwrap();
        let path = dir.path().join("s.stgf");
        let p = Plane::from_fn(4, 2, |r, c| (r as f64 - 0.3) * (c as f64 + 1e-7));
        let img = crate::planes::merge_planes(p.clone(), p.scale(-1.5), p.map(f64::exp)).unwrap();
        write_float_dump(&img, &path).unwrap();
        assert_eq!(read_float_dump(&path).unwrap(), img);
    }

    proptest! {
        #[test]
        fn float_dump_bit_exact(
            (w, h, samples) in (1usize..6, 1usize..6).prop_flat_map(|(w, h)| {
                (Just(w), Just(h), proptest::collection::vec(any::<f64>(), 3 * w * h))
            })
        ) {
            let n = w * h;
            let plane = |i: usize| Plane::from_vec(w, h, samples[i * n..(i + 1) * n].to_vec()).unwrap();
            let img = crate::planes::merge_planes(plane(0), plane(1), plane(2)).unwrap();
            let back = decode_float_dump(&encode_float_dump(&img)).unwrap();
            for (a, b) in img.planes().iter().zip(back.planes()) {
                let bits = |p: &Plane| p.samples().iter().map(|v| v.to_bits()).collect::<Vec<_>>();
                prop_assert_eq!(bits(a), bits(b));
            }
        }

        #[test]
        fn raster_round_trip(bytes in proptest::collection::vec(any::<u8>(), 5 * 3 * 3)) {
            let dir = tempdir().unwrap();
            let path = dir.path().join("r.png");
            let img = ColorImage::from_rgb8(5, 3, &bytes).unwrap();
            save_image(&img, &path).unwrap();
            prop_assert_eq!(load_image(&path).unwrap(), img);
        }
    }
}
