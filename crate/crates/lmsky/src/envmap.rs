//! Equirectangular environment maps: container types, texel geometry,
//! LDR simulation, sun detection, pinhole crops, and horizontal rolls.
//!
//! The texel convention: row v covers zenith angle theta = pi*(v+0.5)/height,
//! column u covers azimuth phi = 2*pi*(u+0.5)/width. Width is always twice
//! the height.

use crate::error::{Error, Result};
use crate::geom::{wrap_azimuth, Vec3};
use crate::model::SunPosition;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::f64::consts::{FRAC_PI_2, PI, TAU};

/// HDR equirectangular radiance map, linear RGB float32, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct EnvMap {
    width: usize,
    height: usize,
    data: Vec<f32>,
}

impl EnvMap {
    /// All-zero map of the given height (width is 2*height).
    pub fn zeros(height: usize) -> EnvMap {
        EnvMap {
            width: 2 * height,
            height,
            data: vec![0.0; 2 * height * height * 3],
        }
    }

    pub fn from_data(width: usize, height: usize, data: Vec<f32>) -> Result<EnvMap> {
        if width != 2 * height || height == 0 {
            return Err(Error::Validation(format!(
                "envmap {width}x{height}: width must be 2*height"
            )));
        }
        if data.len() != width * height * 3 {
            return Err(Error::Validation(format!(
                "envmap data length {} != {}",
                data.len(),
                width * height * 3
            )));
        }
        if let Some(bad) = data.iter().find(|v| !v.is_finite() || **v < 0.0) {
            return Err(Error::Validation(format!(
                "envmap radiance {bad} must be finite and >= 0"
            )));
        }
        Ok(EnvMap {
            width,
            height,
            data,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn data(&self) -> &[f32] {
        &self.data
    }

    pub fn texel(&self, u: usize, v: usize) -> [f32; 3] {
        let i = (v * self.width + u) * 3;
        [self.data[i], self.data[i + 1], self.data[i + 2]]
    }

    pub fn set_texel(&mut self, u: usize, v: usize, rgb: [f32; 3]) {
        let i = (v * self.width + u) * 3;
        self.data[i..i + 3].copy_from_slice(&rgb);
    }

    /// Bilinear radiance lookup along a unit direction, with azimuthal wrap.
    pub fn sample(&self, dir: Vec3) -> [f64; 3] {
        sample_bilinear(self.width, self.height, dir, |u, v| {
            let p = self.texel(u, v);
            [p[0] as f64, p[1] as f64, p[2] as f64]
        })
    }
}

/// 8-bit LDR image, RGB row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct LdrImage {
    pub width: usize,
    pub height: usize,
    pub data: Vec<u8>,
}

impl LdrImage {
    pub fn new(width: usize, height: usize) -> LdrImage {
        LdrImage {
            width,
            height,
            data: vec![0; width * height * 3],
        }
    }

    pub fn pixel(&self, u: usize, v: usize) -> [u8; 3] {
        let i = (v * self.width + u) * 3;
        [self.data[i], self.data[i + 1], self.data[i + 2]]
    }

    pub fn set_pixel(&mut self, u: usize, v: usize, rgb: [u8; 3]) {
        let i = (v * self.width + u) * 3;
        self.data[i..i + 3].copy_from_slice(&rgb);
    }

    /// Bilinear lookup in [0, 1] units (value / 255), wrap in azimuth.
    /// Only meaningful when the image is an equirectangular panorama.
    pub fn sample(&self, dir: Vec3) -> [f64; 3] {
        sample_bilinear(self.width, self.height, dir, |u, v| {
            let p = self.pixel(u, v);
            [
                p[0] as f64 / 255.0,
                p[1] as f64 / 255.0,
                p[2] as f64 / 255.0,
            ]
        })
    }
}

/// Linear float RGB image of arbitrary size (probe renders, HDR crops).
#[derive(Clone, Debug, PartialEq)]
pub struct RenderImage {
    pub width: usize,
    pub height: usize,
    pub data: Vec<f32>,
}

impl RenderImage {
    pub fn new(width: usize, height: usize) -> RenderImage {
        RenderImage {
            width,
            height,
            data: vec![0.0; width * height * 3],
        }
    }

    pub fn pixel(&self, u: usize, v: usize) -> [f32; 3] {
        let i = (v * self.width + u) * 3;
        [self.data[i], self.data[i + 1], self.data[i + 2]]
    }

    pub fn set_pixel(&mut self, u: usize, v: usize, rgb: [f32; 3]) {
        let i = (v * self.width + u) * 3;
        self.data[i..i + 3].copy_from_slice(&rgb);
    }
}

/// Unit direction at the center of texel (u, v).
pub fn texel_direction(u: usize, v: usize, width: usize, height: usize) -> Result<Vec3> {
    if u >= width || v >= height {
        return Err(Error::InvalidInput(format!(
            "texel ({u}, {v}) out of range for {width}x{height}"
        )));
    }
    let theta = PI * (v as f64 + 0.5) / height as f64;
    let phi = TAU * (u as f64 + 0.5) / width as f64;
    Ok(Vec3::from_spherical(theta, phi))
}

/// Texel containing the given direction; the exact inverse of
/// `texel_direction` at texel centers.
pub fn direction_to_texel(dir: Vec3, width: usize, height: usize) -> (usize, usize) {
    let theta = dir.zenith();
    let phi = dir.azimuth();
    let v = ((theta / PI) * height as f64 - 0.5).round() as i64;
    let u = ((phi / TAU) * width as f64 - 0.5).round() as i64;
    let v = v.clamp(0, height as i64 - 1) as usize;
    let u = u.rem_euclid(width as i64) as usize;
    (u, v)
}

/// Solid angle subtended by any texel in row v:
/// (2*pi/width) * (pi/height) * sin(theta_v).
pub fn texel_solid_angle(v: usize, width: usize, height: usize) -> f64 {
    let theta = PI * (v as f64 + 0.5) / height as f64;
    (TAU / width as f64) * (PI / height as f64) * theta.sin()
}

fn sample_bilinear<F>(width: usize, height: usize, dir: Vec3, fetch: F) -> [f64; 3]
where
    F: Fn(usize, usize) -> [f64; 3],
{
    let theta = dir.zenith();
    let phi = dir.azimuth();
    // Continuous texel coordinates with centers at integer positions.
    let x = (phi / TAU) * width as f64 - 0.5;
    let y = ((theta / PI) * height as f64 - 0.5).clamp(0.0, height as f64 - 1.0);
    let x0 = x.floor();
    let y0 = y.floor();
    let fx = x - x0;
    let fy = y - y0;
    let u0 = (x0 as i64).rem_euclid(width as i64) as usize;
    let u1 = (x0 as i64 + 1).rem_euclid(width as i64) as usize;
    let v0 = y0 as usize;
    let v1 = (v0 + 1).min(height - 1);
    let mut out = [0.0; 3];
    let p00 = fetch(u0, v0);
    let p10 = fetch(u1, v0);
    let p01 = fetch(u0, v1);
    let p11 = fetch(u1, v1);
    for c in 0..3 {
        let top = p00[c] * (1.0 - fx) + p10[c] * fx;
        let bot = p01[c] * (1.0 - fx) + p11[c] * fx;
        out[c] = top * (1.0 - fy) + bot * fy;
    }
    out
}

/// Quantization mode for LDR simulation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rounding {
    /// round(x) with ties away from zero: 127.5 -> 128.
    HalfUp,
    /// floor(x).
    Truncate,
}

/// Simulate an LDR capture of an HDR panorama: scale by exposure, clip at 1,
/// optionally gamma-encode (1/2.2), quantize to 8 bits. Deterministic.
pub fn ldr_simulate(
    pano: &EnvMap,
    exposure: f64,
    gamma_encode: bool,
    rounding: Rounding,
) -> Result<LdrImage> {
    if !(exposure > 0.0) {
        return Err(Error::InvalidInput(format!(
            "exposure {exposure} must be > 0"
        )));
    }
    let mut out = LdrImage::new(pano.width(), pano.height());
    for (i, v) in pano.data().iter().enumerate() {
        let mut x = (exposure * *v as f64).clamp(0.0, 1.0);
        if gamma_encode {
            x = x.powf(1.0 / 2.2);
        }
        let scaled = x * 255.0;
        out.data[i] = match rounding {
            Rounding::HalfUp => (scaled + 0.5).floor().min(255.0) as u8,
            Rounding::Truncate => scaled.floor().min(255.0) as u8,
        };
    }
    Ok(out)
}

/// Map an LDR panorama back to a linear float envmap in [0, 1]
/// (value / 255, no gamma). This is the LDR target form used by the
/// render losses.
pub fn ldr_to_envmap(pano: &LdrImage) -> Result<EnvMap> {
    let data = pano.data.iter().map(|v| *v as f32 / 255.0).collect();
    EnvMap::from_data(pano.width, pano.height, data)
}

pub const DEFAULT_SATURATION_THRESHOLD: u8 = 254;

/// Sun position from the largest saturated region in the sky half of an LDR
/// panorama. A pixel is saturated when all three channels reach the
/// threshold. Components use 8-connectivity with azimuthal wrap across the
/// left/right seam; the largest is chosen by solid-angle-weighted area and
/// its solid-angle-weighted centroid direction is returned. `None` when no
/// sky pixel is saturated.
pub fn detect_sun(pano: &LdrImage, saturation_threshold: u8) -> Option<SunPosition> {
    let (w, h) = (pano.width, pano.height);
    let sky_rows = h / 2;
    let mut mask = vec![false; w * sky_rows];
    for v in 0..sky_rows {
        for u in 0..w {
            let p = pano.pixel(u, v);
            mask[v * w + u] = p.iter().all(|c| *c >= saturation_threshold);
        }
    }

    // Flood fill, 8-connected, wrapping in u.
    let mut label = vec![0u32; w * sky_rows];
    let mut next = 0u32;
    let mut best: Option<(f64, Vec3)> = None;
    let mut stack = Vec::new();
    for start in 0..mask.len() {
        if !mask[start] || label[start] != 0 {
            continue;
        }
        next += 1;
        stack.push(start);
        label[start] = next;
        let mut area = 0.0;
        let mut centroid = Vec3::ZERO;
        while let Some(i) = stack.pop() {
            let (u, v) = (i % w, i / w);
            let dw = texel_solid_angle(v, w, h);
            area += dw;
            centroid = centroid + texel_direction(u, v, w, h).unwrap() * dw;
            for dv in -1i64..=1 {
                for du in -1i64..=1 {
                    if du == 0 && dv == 0 {
                        continue;
                    }
                    let nv = v as i64 + dv;
                    if nv < 0 || nv >= sky_rows as i64 {
                        continue;
                    }
                    let nu = (u as i64 + du).rem_euclid(w as i64) as usize;
                    let j = nv as usize * w + nu;
                    if mask[j] && label[j] == 0 {
                        label[j] = next;
                        stack.push(j);
                    }
                }
            }
        }
        if best.as_ref().map_or(true, |(a, _)| area > *a) {
            best = Some((area, centroid));
        }
    }

    best.and_then(|(_, c)| SunPosition::from_direction(c.normalized()).ok())
}

/// A pinhole-camera view into a panorama.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CropSpec {
    pub azimuth: f64,
    pub elevation: f64,
    pub fov_horizontal: f64,
    pub width: usize,
    pub height: usize,
}

impl CropSpec {
    pub fn validate(&self) -> Result<()> {
        if !(self.fov_horizontal > 0.0 && self.fov_horizontal < PI) {
            return Err(Error::InvalidInput(format!(
                "fov {} outside (0, pi)",
                self.fov_horizontal
            )));
        }
        if self.width == 0 || self.height == 0 {
            return Err(Error::InvalidInput("zero crop size".into()));
        }
        Ok(())
    }
}

pub const DEFAULT_CROP_FOV: f64 = PI / 3.0; // 60 degrees
pub const DEFAULT_CROP_WIDTH: usize = 320;
pub const DEFAULT_CROP_HEIGHT: usize = 240;

/// Camera ray through pixel (i, j) of a crop, in world space.
fn crop_ray(spec: &CropSpec, i: usize, j: usize) -> Vec3 {
    let forward = Vec3::from_spherical(FRAC_PI_2 - spec.elevation, spec.azimuth);
    let up = Vec3::new(0.0, 1.0, 0.0);
    let right = forward.cross(up).normalized();
    let cam_up = right.cross(forward);
    let focal = (spec.width as f64 / 2.0) / (spec.fov_horizontal / 2.0).tan();
    let px = i as f64 + 0.5 - spec.width as f64 / 2.0;
    let py = spec.height as f64 / 2.0 - (j as f64 + 0.5);
    (forward * focal + right * px + cam_up * py).normalized()
}

/// Pinhole crop of an HDR panorama, bilinear sampling.
pub fn extract_crop(pano: &EnvMap, spec: &CropSpec) -> Result<RenderImage> {
    spec.validate()?;
    let mut out = RenderImage::new(spec.width, spec.height);
    for j in 0..spec.height {
        for i in 0..spec.width {
            let rgb = pano.sample(crop_ray(spec, i, j));
            out.set_pixel(i, j, [rgb[0] as f32, rgb[1] as f32, rgb[2] as f32]);
        }
    }
    Ok(out)
}

/// Pinhole crop of an LDR panorama; bilinear samples are re-quantized
/// half-up.
pub fn extract_crop_ldr(pano: &LdrImage, spec: &CropSpec) -> Result<LdrImage> {
    spec.validate()?;
    let mut out = LdrImage::new(spec.width, spec.height);
    for j in 0..spec.height {
        for i in 0..spec.width {
            let rgb = pano.sample(crop_ray(spec, i, j));
            let q = |x: f64| (x * 255.0 + 0.5).floor().min(255.0) as u8;
            out.set_pixel(i, j, [q(rgb[0]), q(rgb[1]), q(rgb[2])]);
        }
    }
    Ok(out)
}

/// Seeded set of crop specs with azimuths drawn uniformly in [0, 2*pi).
pub fn make_crop_set(seed: u64, count: usize, fov: f64, elevation: f64) -> Vec<CropSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| CropSpec {
            azimuth: rng.gen_range(0.0..TAU),
            elevation,
            fov_horizontal: fov,
            width: DEFAULT_CROP_WIDTH,
            height: DEFAULT_CROP_HEIGHT,
        })
        .collect()
}

fn roll_shift(width: usize, azimuth: f64) -> usize {
    // Column whose center is nearest the azimuth.
    let u_az = ((wrap_azimuth(azimuth) / TAU) * width as f64 - 0.5).round() as i64;
    let center = width as i64 / 2;
    (u_az - center).rem_euclid(width as i64) as usize
}

fn roll_rows<T: Copy>(data: &[T], width: usize, height: usize, shift: usize) -> Vec<T> {
    let mut out = Vec::with_capacity(data.len());
    for v in 0..height {
        for u in 0..width {
            let src = (u + shift) % width;
            let i = (v * width + src) * 3;
            out.extend_from_slice(&data[i..i + 3]);
        }
    }
    out
}

/// Circularly shift an HDR panorama so the given azimuth lands on the
/// center column. Nearest-texel shift; lossless.
pub fn roll_to_center(pano: &EnvMap, azimuth: f64) -> EnvMap {
    let shift = roll_shift(pano.width(), azimuth);
    let data = roll_rows(pano.data(), pano.width(), pano.height(), shift);
    EnvMap::from_data(pano.width(), pano.height(), data).expect("roll preserves validity")
}

/// Circularly shift an LDR panorama so the given azimuth lands on the
/// center column.
pub fn roll_to_center_ldr(pano: &LdrImage, azimuth: f64) -> LdrImage {
    let shift = roll_shift(pano.width, azimuth);
    LdrImage {
        width: pano.width,
        height: pano.height,
        data: roll_rows(&pano.data, pano.width, pano.height, shift),
    }
}

/// Azimuth of the center column after a roll (the roll target).
pub fn center_azimuth(width: usize) -> f64 {
    TAU * (width as f64 / 2.0 + 0.5) / width as f64
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn texel_direction_poles_and_horizon() {
        let (w, h) = (128, 64);
        // Top row: within half a texel of the zenith.
        let d = texel_direction(w / 2, 0, w, h).unwrap();
        assert!(d.zenith() < PI / h as f64);
        // Row at the top of the lower half starts at the horizon.
        let d = texel_direction(0, h / 2, w, h).unwrap();
        assert!((d.zenith() - FRAC_PI_2) < PI / h as f64);
    }

    #[test]
    fn geometry_round_trip_all_texels() {
        let (w, h) = (64, 32);
        for v in 0..h {
            for u in 0..w {
                let d = texel_direction(u, v, w, h).unwrap();
                assert_eq!(direction_to_texel(d, w, h), (u, v));
            }
        }
    }

    #[test]
    fn texel_direction_rejects_out_of_range() {
        assert!(texel_direction(128, 0, 128, 64).is_err());
        assert!(texel_direction(0, 64, 128, 64).is_err());
    }

    #[test]
    fn solid_angles_sum_to_sphere() {
        for h in [64usize, 128] {
            let w = 2 * h;
            let total: f64 = (0..h).map(|v| texel_solid_angle(v, w, h) * w as f64).sum();
            let err = (total - 4.0 * PI).abs() / (4.0 * PI);
            assert!(err < 0.005, "height {h}: rel err {err}");
        }
    }

    #[test]
    fn solid_angle_maximal_at_horizon() {
        let (w, h) = (128, 64);
        let horizon = texel_solid_angle(h / 2, w, h);
        for v in 0..h {
            assert!(texel_solid_angle(v, w, h) <= horizon + 1e-15);
        }
    }

    #[test]
    fn ldr_simulate_clips_and_rounds() {
        let mut env = EnvMap::zeros(4);
        env.set_texel(0, 0, [2.0, 0.0, 0.5]);
        let ldr = ldr_simulate(&env, 1.0, false, Rounding::HalfUp).unwrap();
        let p = ldr.pixel(0, 0);
        assert_eq!(p, [255, 0, 128]); // 0.5*255 = 127.5 rounds up
    }

    #[test]
    fn ldr_simulate_monotone() {
        let mut a = EnvMap::zeros(4);
        let mut b = EnvMap::zeros(4);
        let mut x = 0.0f32;
        for v in 0..4 {
            for u in 0..8 {
                a.set_texel(u, v, [x; 3]);
                b.set_texel(u, v, [x + 0.01; 3]);
                x += 0.04;
            }
        }
        let la = ldr_simulate(&a, 1.0, false, Rounding::HalfUp).unwrap();
        let lb = ldr_simulate(&b, 1.0, false, Rounding::HalfUp).unwrap();
        assert!(la.data.iter().zip(&lb.data).all(|(x, y)| x <= y));
    }

    #[test]
    fn ldr_simulate_rejects_bad_exposure() {
        let env = EnvMap::zeros(4);
        assert!(ldr_simulate(&env, 0.0, false, Rounding::HalfUp).is_err());
    }

    fn synthetic_sun_pano(h: usize, zenith: f64, azimuth: f64, radius: f64) -> LdrImage {
        let w = 2 * h;
        let sun = Vec3::from_spherical(zenith, azimuth);
        let mut img = LdrImage::new(w, h);
        for v in 0..h {
            for u in 0..w {
                let d = texel_direction(u, v, w, h).unwrap();
                let ang = d.dot(sun).clamp(-1.0, 1.0).acos();
                let val = if ang < radius { 255 } else { 40 };
                img.set_pixel(u, v, [val; 3]);
            }
        }
        img
    }

    #[test]
    fn detect_sun_centroid_matches_disk_center() {
        let (zen, az) = (0.5, 1.0);
        let pano = synthetic_sun_pano(64, zen, az, 0.12);
        let sp = detect_sun(&pano, 254).unwrap();
        let texel = PI / 64.0;
        assert!((sp.zenith_angle() - zen).abs() < texel);
        assert!((sp.azimuth() - az).abs() < texel);
    }

    #[test]
    fn detect_sun_none_when_unsaturated() {
        let pano = LdrImage::new(32, 16);
        assert!(detect_sun(&pano, 254).is_none());
    }

    #[test]
    fn detect_sun_picks_largest_region() {
        let mut pano = LdrImage::new(64, 32);
        // Big region near azimuth column 10, small one near column 40.
        for v in 4..9 {
            for u in 8..13 {
                pano.set_pixel(u, v, [255; 3]);
            }
        }
        for v in 5..7 {
            pano.set_pixel(40, v, [255; 3]);
        }
        let sp = detect_sun(&pano, 254).unwrap();
        let (u, _) = direction_to_texel(sp.direction(), 64, 32);
        assert!((8..13).contains(&u), "picked column {u}");
    }

    #[test]
    fn detect_sun_wraps_across_seam() {
        // A 4x5 region straddling the seam (2 columns each side) is the
        // largest component only if wrap connectivity joins its halves;
        // each half alone (10 texels) is smaller than the 4x4 decoy.
        let w = 64;
        let mut pano = LdrImage::new(w, 32);
        for v in 6..11 {
            for u in [0usize, 1, w - 2, w - 1] {
                pano.set_pixel(u, v, [255; 3]);
            }
        }
        for v in 6..10 {
            for u in 30..34 {
                pano.set_pixel(u, v, [255; 3]);
            }
        }
        let sp = detect_sun(&pano, 254).unwrap();
        let az = sp.azimuth();
        let near_seam = az < 0.3 || az > TAU - 0.3;
        assert!(near_seam, "azimuth {az} not near the seam");
    }

    #[test]
    fn detect_sun_equivariant_under_roll() {
        let pano = synthetic_sun_pano(64, 0.6, 2.0, 0.1);
        let a = detect_sun(&pano, 254).unwrap();
        let rolled = roll_to_center_ldr(&pano, 2.0);
        let b = detect_sun(&rolled, 254).unwrap();
        let texel = TAU / 128.0;
        // After rolling azimuth 2.0 to the center, the detected azimuth
        // should be the center azimuth.
        let expected = center_azimuth(128) + (a.azimuth() - 2.0);
        let diff = (b.azimuth() - expected + PI).rem_euclid(TAU) - PI;
        assert!(diff.abs() < 1.5 * texel, "diff {diff}");
    }

    #[test]
    fn crop_center_pixel_is_forward() {
        let mut env = EnvMap::zeros(32);
        // Bright texel exactly at the camera forward direction.
        let spec = CropSpec {
            azimuth: 1.5,
            elevation: 0.3,
            fov_horizontal: 1.0,
            width: 31,
            height: 31,
        };
        let fwd = Vec3::from_spherical(FRAC_PI_2 - 0.3, 1.5);
        let (u, v) = direction_to_texel(fwd, 64, 32);
        env.set_texel(u, v, [10.0; 3]);
        let crop = extract_crop(&env, &spec).unwrap();
        // The brightest crop pixel should be the center one.
        let mut best = (0, 0, f32::NEG_INFINITY);
        for j in 0..31 {
            for i in 0..31 {
                let p = crop.pixel(i, j);
                if p[0] > best.2 {
                    best = (i, j, p[0]);
                }
            }
        }
        assert!((best.0 as i64 - 15).abs() <= 1 && (best.1 as i64 - 15).abs() <= 1);
    }

    #[test]
    fn crop_of_constant_pano_is_constant() {
        let env = EnvMap::from_data(64, 32, vec![0.25; 64 * 32 * 3]).unwrap();
        let spec = CropSpec {
            azimuth: 0.7,
            elevation: 0.0,
            fov_horizontal: 1.2,
            width: 16,
            height: 12,
        };
        let crop = extract_crop(&env, &spec).unwrap();
        assert!(crop.data.iter().all(|v| (*v - 0.25).abs() < 1e-6));
    }

    #[test]
    fn crop_set_deterministic() {
        let a = make_crop_set(7, 7, DEFAULT_CROP_FOV, 0.0);
        let b = make_crop_set(7, 7, DEFAULT_CROP_FOV, 0.0);
        assert_eq!(a, b);
        assert_eq!(a.len(), 7);
        let c = make_crop_set(8, 7, DEFAULT_CROP_FOV, 0.0);
        assert_ne!(a, c);
    }

    #[test]
    fn roll_identity_when_already_centered() {
        let pano = synthetic_sun_pano(16, 0.5, center_azimuth(32), 0.2);
        let rolled = roll_to_center_ldr(&pano, center_azimuth(32));
        assert_eq!(pano, rolled);
    }

    #[test]
    fn roll_then_inverse_roll_identity() {
        let mut env = EnvMap::zeros(8);
        for v in 0..8 {
            for u in 0..16 {
                env.set_texel(u, v, [(u * 8 + v) as f32, 0.0, 1.0]);
            }
        }
        let az = 0.9;
        let rolled = roll_to_center(&env, az);
        // Undo: roll so that the column now holding azimuth `center` goes back.
        let inv_az = 2.0 * center_azimuth(16) - az;
        let back = roll_to_center(&rolled, inv_az);
        assert_eq!(env, back);
    }
}
