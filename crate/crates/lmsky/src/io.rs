//! Image file I/O: PFM (portable float map) for HDR data, PNG for LDR.
//!
//! PFM layout: "PF\n{width} {height}\n{scale}\n" followed by raw float32
//! triples. A negative scale marks little-endian payload, which is what we
//! always write. Scanlines are stored bottom-to-top per the format.

use crate::envmap::{EnvMap, LdrImage, RenderImage};
use crate::error::{Error, Result};
use std::fs;
use std::io::{BufWriter, Write};
use std::path::Path;

fn encode_pfm(width: usize, height: usize, data: &[f32]) -> Vec<u8> {
    let mut out = Vec::with_capacity(data.len() * 4 + 32);
    out.extend_from_slice(format!("PF\n{} {}\n-1.0\n", width, height).as_bytes());
    // Bottom row first.
    for v in (0..height).rev() {
        for u in 0..width {
            for c in 0..3 {
                out.extend_from_slice(&data[(v * width + u) * 3 + c].to_le_bytes());
            }
        }
    }
    out
}

struct PfmPayload {
    width: usize,
    height: usize,
    data: Vec<f32>,
}

fn decode_pfm(path: &Path, bytes: &[u8]) -> Result<PfmPayload> {
    let bad_header = |reason: &str| Error::MalformedHeader {
        path: path.to_path_buf(),
        reason: reason.to_string(),
    };
    // Header: three whitespace-terminated tokens.
    let mut pos = 0usize;
    let mut token = || -> Result<String> {
        let start = pos;
        while pos < bytes.len() && !bytes[pos].is_ascii_whitespace() {
            pos += 1;
        }
        if pos == start || pos >= bytes.len() {
            return Err(bad_header("unexpected end of header"));
        }
        let tok = std::str::from_utf8(&bytes[start..pos])
            .map_err(|_| bad_header("non-ascii header"))?
            .to_string();
        pos += 1; // single whitespace separator
        Ok(tok)
    };

    let magic = token()?;
    match magic.as_str() {
        "PF" => {}
        "Pf" => {
            return Err(Error::UnsupportedFormat {
                path: path.to_path_buf(),
                reason: "grayscale PFM (Pf) is not supported, RGB (PF) only".into(),
            })
        }
        _ => return Err(bad_header(&format!("bad magic {magic:?}"))),
    }
    let width: usize = token()?
        .parse()
        .map_err(|_| bad_header("unparseable width"))?;
    let height: usize = token()?
        .parse()
        .map_err(|_| bad_header("unparseable height"))?;
    let scale: f64 = token()?
        .parse()
        .map_err(|_| bad_header("unparseable scale"))?;
    if scale >= 0.0 {
        return Err(Error::UnsupportedFormat {
            path: path.to_path_buf(),
            reason: "big-endian PFM (positive scale) is not supported".into(),
        });
    }

    let payload = &bytes[pos..];
    let expected = width * height * 3 * 4;
    if payload.len() < expected {
        return Err(Error::Truncated {
            path: path.to_path_buf(),
            expected,
            got: payload.len(),
        });
    }
    let mut data = vec![0.0f32; width * height * 3];
    for v_file in 0..height {
        let v = height - 1 - v_file; // file rows are bottom-up
        for u in 0..width {
            for c in 0..3 {
                let o = ((v_file * width + u) * 3 + c) * 4;
                let bytes4: [u8; 4] = payload[o..o + 4].try_into().unwrap();
                data[(v * width + u) * 3 + c] = f32::from_le_bytes(bytes4);
            }
        }
    }
    Ok(PfmPayload {
        width,
        height,
        data,
    })
}

/// Write an envmap as PFM.
pub fn write_pfm(env: &EnvMap, path: &Path) -> Result<()> {
    write_pfm_image(env.width(), env.height(), env.data(), path)
}

/// Write an arbitrary float image (e.g. a probe render) as PFM.
pub fn write_pfm_render(img: &RenderImage, path: &Path) -> Result<()> {
    write_pfm_image(img.width, img.height, &img.data, path)
}

fn write_pfm_image(width: usize, height: usize, data: &[f32], path: &Path) -> Result<()> {
    let file = fs::File::create(path).map_err(|e| Error::io(path, e))?;
    let mut w = BufWriter::new(file);
    w.write_all(&encode_pfm(width, height, data))
        .and_then(|_| w.flush())
        .map_err(|e| Error::io(path, e))
}

/// Read a PFM file as an envmap. Enforces the envmap invariants
/// (width = 2*height, finite, non-negative).
pub fn read_pfm(path: &Path) -> Result<EnvMap> {
    let bytes = fs::read(path).map_err(|e| Error::io(path, e))?;
    let p = decode_pfm(path, &bytes)?;
    EnvMap::from_data(p.width, p.height, p.data)
}

/// Read a PFM file as a free-size float image (no envmap invariants).
pub fn read_pfm_render(path: &Path) -> Result<RenderImage> {
    let bytes = fs::read(path).map_err(|e| Error::io(path, e))?;
    let p = decode_pfm(path, &bytes)?;
    Ok(RenderImage {
        width: p.width,
        height: p.height,
        data: p.data,
    })
}

/// Write an LDR image as 8-bit RGB PNG.
pub fn write_png(img: &LdrImage, path: &Path) -> Result<()> {
    image::save_buffer(
        path,
        &img.data,
        img.width as u32,
        img.height as u32,
        image::ColorType::Rgb8,
    )
    .map_err(|e| Error::io(path, std::io::Error::other(e)))
}

/// Read an 8-bit RGB PNG.
pub fn read_png(path: &Path) -> Result<LdrImage> {
    let img = image::open(path)
        .map_err(|e| Error::io(path, std::io::Error::other(e)))?
        .into_rgb8();
    Ok(LdrImage {
        width: img.width() as usize,
        height: img.height() as usize,
        data: img.into_raw(),
    })
}

/// Gamma tonemap (default 2.2) of linear float data for display PNGs.
pub fn tonemap(width: usize, height: usize, data: &[f32], gamma: f64) -> LdrImage {
    let mut out = LdrImage::new(width, height);
    for (i, v) in data.iter().enumerate() {
        let x = (*v as f64).clamp(0.0, 1.0).powf(1.0 / gamma);
        out.data[i] = (x * 255.0 + 0.5).floor().min(255.0) as u8;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use tempfile::tempdir;

    fn sample_env() -> EnvMap {
        let mut env = EnvMap::zeros(8);
        for v in 0..8 {
            for u in 0..16 {
                env.set_texel(u, v, [u as f32 * 0.1, v as f32 * 0.2, 1.5]);
            }
        }
        env
    }

    #[test]
    fn pfm_round_trip_bit_exact() {
        let dir = tempdir().unwrap();
        let path = dir.path().join("a.pfm");
        let env = sample_env();
        write_pfm(&env, &path).unwrap();
        let back = read_pfm(&path).unwrap();
        assert_eq!(env.data(), back.data());
        assert_eq!(env.width(), back.width());
    }

    #[test]
    fn pfm_truncated_payload_errors() {
        let dir = tempdir().unwrap();
        let path = dir.path().join("t.pfm");
        let env = sample_env();
        let mut bytes = encode_pfm(env.width(), env.height(), env.data());
        bytes.truncate(bytes.len() - 10);
        fs::write(&path, bytes).unwrap();
        assert!(matches!(read_pfm(&path), Err(Error::Truncated { .. })));
    }

    #[test]
    fn pfm_bad_magic_errors() {
        let dir = tempdir().unwrap();
        let path = dir.path().join("b.pfm");
        fs::write(&path, b"PX\n4 2\n-1.0\nxxxx").unwrap();
        assert!(matches!(
            read_pfm(&path),
            Err(Error::MalformedHeader { .. })
        ));
    }

    #[test]
    fn pfm_big_endian_unsupported() {
        let dir = tempdir().unwrap();
        let path = dir.path().join("be.pfm");
        fs::write(&path, b"PF\n4 2\n1.0\n").unwrap();
        assert!(matches!(
            read_pfm(&path),
            Err(Error::UnsupportedFormat { .. })
        ));
    }

    #[test]
    fn pfm_negative_radiance_rejected() {
        let dir = tempdir().unwrap();
        let path = dir.path().join("n.pfm");
        let mut data = vec![0.0f32; 16 * 8 * 3];
        data[5] = -1.0;
        fs::write(&path, encode_pfm(16, 8, &data)).unwrap();
        assert!(matches!(read_pfm(&path), Err(Error::Validation(_))));
    }

    #[test]
    fn png_round_trip() {
        let dir = tempdir().unwrap();
        let path = dir.path().join("a.png");
        let mut img = LdrImage::new(6, 4);
        for (i, v) in img.data.iter_mut().enumerate() {
            *v = (i * 7 % 256) as u8;
        }
        write_png(&img, &path).unwrap();
        let back = read_png(&path).unwrap();
        assert_eq!(img, back);
    }
}
