//! Precomputed light transport for the probe scene: a diffuse unit sphere
//! resting on a ground plane, viewed straight down by an orthographic
//! camera. Relighting an environment map is then a single matrix-vector
//! product, image = T * vec(env).
//!
//! Transport is direct lighting only: per surface point, cosine-weighted
//! visibility of every upper-hemisphere texel, scaled by albedo/pi and the
//! texel solid angle.

use crate::envmap::{texel_direction, texel_solid_angle, EnvMap, RenderImage};
use crate::error::{Error, Result};
use crate::geom::Vec3;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::fs;
use std::io::{BufWriter, Read, Write};
use std::path::Path;

/// Diffuse sphere-on-plane scene under an orthographic top-down camera.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProbeScene {
    pub sphere_center: [f64; 3],
    pub sphere_radius: f64,
    pub sphere_albedo: f64,
    pub plane_albedo: f64,
    /// Half-width of the square plane region imaged by the camera, in world
    /// units. 2.5 radii on each side keeps cast shadows in frame.
    pub half_extent: f64,
    pub render_size: usize,
}

impl Default for ProbeScene {
    fn default() -> Self {
        ProbeScene {
            sphere_center: [0.0, 1.0, 0.0],
            sphere_radius: 1.0,
            sphere_albedo: 1.0,
            plane_albedo: 1.0,
            half_extent: 2.5,
            render_size: 64,
        }
    }
}

impl ProbeScene {
    pub fn center(&self) -> Vec3 {
        Vec3::new(
            self.sphere_center[0],
            self.sphere_center[1],
            self.sphere_center[2],
        )
    }

    /// Stable content hash over the scene parameters, used as the cache key.
    pub fn hash(&self) -> [u8; 32] {
        let json = serde_json::to_string(self).expect("scene serializes");
        let mut h = Sha256::new();
        h.update(json.as_bytes());
        h.finalize().into()
    }

    /// World position of the orthographic camera ray for pixel (i, j),
    /// and its direction (straight down).
    fn pixel_ray(&self, i: usize, j: usize) -> (Vec3, Vec3) {
        let s = self.render_size as f64;
        let x = ((i as f64 + 0.5) / s * 2.0 - 1.0) * self.half_extent;
        let z = ((j as f64 + 0.5) / s * 2.0 - 1.0) * self.half_extent;
        (Vec3::new(x, 10.0 * self.sphere_radius, z), Vec3::new(0.0, -1.0, 0.0))
    }
}

/// Surface hit for a camera ray.
struct Hit {
    point: Vec3,
    normal: Vec3,
    albedo: f64,
}

fn ray_sphere(origin: Vec3, dir: Vec3, center: Vec3, radius: f64) -> Option<f64> {
    let oc = origin - center;
    let b = oc.dot(dir);
    let c = oc.dot(oc) - radius * radius;
    let disc = b * b - c;
    if disc < 0.0 {
        return None;
    }
    let t = -b - disc.sqrt();
    if t > 1e-9 {
        Some(t)
    } else {
        None
    }
}

fn ray_plane_y0(origin: Vec3, dir: Vec3) -> Option<f64> {
    if dir.y.abs() < 1e-12 {
        return None;
    }
    let t = -origin.y / dir.y;
    if t > 1e-9 {
        Some(t)
    } else {
        None
    }
}

fn camera_hit(scene: &ProbeScene, i: usize, j: usize) -> Option<Hit> {
    let (origin, dir) = scene.pixel_ray(i, j);
    if let Some(t) = ray_sphere(origin, dir, scene.center(), scene.sphere_radius) {
        let p = origin + dir * t;
        return Some(Hit {
            point: p,
            normal: (p - scene.center()).normalized(),
            albedo: scene.sphere_albedo,
        });
    }
    if let Some(t) = ray_plane_y0(origin, dir) {
        let p = origin + dir * t;
        if p.x.abs() <= scene.half_extent && p.z.abs() <= scene.half_extent {
            return Some(Hit {
                point: p,
                normal: Vec3::new(0.0, 1.0, 0.0),
                albedo: scene.plane_albedo,
            });
        }
    }
    None
}

/// Binary visibility from a surface point along a light direction.
fn visible(scene: &ProbeScene, point: Vec3, normal: Vec3, light_dir: Vec3) -> bool {
    let origin = point + normal * (1e-6 * scene.sphere_radius);
    if ray_sphere(origin, light_dir, scene.center(), scene.sphere_radius).is_some() {
        return false;
    }
    // Upward rays never reach the ground plane; the test is kept for
    // generality with modified scenes.
    if let Some(t) = ray_plane_y0(origin, light_dir) {
        if t > 1e-6 {
            return false;
        }
    }
    true
}

/// Dense transport matrix: rows are probe pixels, columns are envmap texels.
/// Entries carry albedo/pi * cos * visibility * solid angle, so a row dotted
/// with the radiance vector yields the pixel's outgoing radiance.
#[derive(Clone)]
pub struct TransportMatrix {
    n_pixels: usize,
    n_texels: usize,
    render_size: usize,
    env_width: usize,
    env_height: usize,
    scene_hash: [u8; 32],
    data: Vec<f32>,
}

impl TransportMatrix {
    pub fn n_pixels(&self) -> usize {
        self.n_pixels
    }

    pub fn n_texels(&self) -> usize {
        self.n_texels
    }

    pub fn render_size(&self) -> usize {
        self.render_size
    }

    pub fn env_width(&self) -> usize {
        self.env_width
    }

    pub fn env_height(&self) -> usize {
        self.env_height
    }

    pub fn scene_hash(&self) -> &[u8; 32] {
        &self.scene_hash
    }

    pub fn row(&self, pixel: usize) -> &[f32] {
        &self.data[pixel * self.n_texels..(pixel + 1) * self.n_texels]
    }

    fn check_env(&self, env: &EnvMap) -> Result<()> {
        if env.width() != self.env_width || env.height() != self.env_height {
            return Err(Error::DimensionMismatch(format!(
                "transport built for {}x{} envmaps, got {}x{}",
                self.env_width,
                self.env_height,
                env.width(),
                env.height()
            )));
        }
        Ok(())
    }

    /// Matrix-vector product against a scalar (single-channel) texel field.
    pub fn apply_scalar(&self, field: &[f64]) -> Vec<f64> {
        assert_eq!(field.len(), self.n_texels);
        (0..self.n_pixels)
            .into_par_iter()
            .map(|p| {
                self.row(p)
                    .iter()
                    .zip(field)
                    .map(|(t, f)| *t as f64 * f)
                    .sum()
            })
            .collect()
    }
}

/// Build the transport matrix for a scene and an envmap resolution.
pub fn build_transport(scene: &ProbeScene, env_height: usize) -> Result<TransportMatrix> {
    if env_height < 8 {
        return Err(Error::InvalidInput(format!(
            "env_height {env_height} must be >= 8"
        )));
    }
    let env_width = 2 * env_height;
    let n_texels = env_width * env_height;
    let size = scene.render_size;
    let n_pixels = size * size;

    // Texel directions and solid angles, upper hemisphere only elsewhere zero.
    let texels: Vec<(Vec3, f64)> = (0..n_texels)
        .map(|t| {
            let (u, v) = (t % env_width, t / env_width);
            let dir = texel_direction(u, v, env_width, env_height).unwrap();
            (dir, texel_solid_angle(v, env_width, env_height))
        })
        .collect();

    let rows: Vec<Vec<f32>> = (0..n_pixels)
        .into_par_iter()
        .map(|p| {
            let mut row = vec![0.0f32; n_texels];
            let (i, j) = (p % size, p / size);
            if let Some(hit) = camera_hit(scene, i, j) {
                for (t, (dir, dw)) in texels.iter().enumerate() {
                    if dir.y <= 0.0 {
                        continue; // below horizon
                    }
                    let cos = hit.normal.dot(*dir);
                    if cos <= 0.0 {
                        continue;
                    }
                    if !visible(scene, hit.point, hit.normal, *dir) {
                        continue;
                    }
                    row[t] = (hit.albedo / std::f64::consts::PI * cos * dw) as f32;
                }
            }
            row
        })
        .collect();

    Ok(TransportMatrix {
        n_pixels,
        n_texels,
        render_size: size,
        env_width,
        env_height,
        scene_hash: scene.hash(),
        data: rows.into_iter().flatten().collect(),
    })
}

/// Relight: image = T * vec(env), per channel.
pub fn render_probe(transport: &TransportMatrix, env: &EnvMap) -> Result<RenderImage> {
    transport.check_env(env)?;
    let size = transport.render_size;
    let data: Vec<f32> = (0..transport.n_pixels)
        .into_par_iter()
        .flat_map_iter(|p| {
            let row = transport.row(p);
            let mut acc = [0.0f64; 3];
            for (t, w) in row.iter().enumerate() {
                if *w == 0.0 {
                    continue;
                }
                let (u, v) = (t % transport.env_width, t / transport.env_width);
                let px = env.texel(u, v);
                for c in 0..3 {
                    acc[c] += *w as f64 * px[c] as f64;
                }
            }
            [acc[0] as f32, acc[1] as f32, acc[2] as f32]
        })
        .collect();
    Ok(RenderImage {
        width: size,
        height: size,
        data,
    })
}

// ---------------------------------------------------------------------------
// Brute-force oracle. Shares no intersection or visibility code with
// build_transport: geometry is solved from scratch below. Used in tests to
// validate the matrix path.

fn oracle_sphere_hit_t(origin: Vec3, dir: Vec3, center: Vec3, radius: f64) -> Option<f64> {
    // Geometric construction instead of the quadratic formula.
    let to_center = center - origin;
    let proj = to_center.dot(dir);
    let closest = origin + dir * proj;
    let d2 = (center - closest).dot(center - closest);
    let r2 = radius * radius;
    if d2 > r2 {
        return None;
    }
    let half_chord = (r2 - d2).sqrt();
    let t = proj - half_chord;
    if t > 1e-9 {
        Some(t)
    } else {
        None
    }
}

/// Direct per-pixel numerical integration over envmap texels.
pub fn render_probe_oracle(scene: &ProbeScene, env: &EnvMap) -> RenderImage {
    let size = scene.render_size;
    let (ew, eh) = (env.width(), env.height());
    let mut out = RenderImage::new(size, size);
    for j in 0..size {
        for i in 0..size {
            let s = size as f64;
            let x = ((i as f64 + 0.5) / s * 2.0 - 1.0) * scene.half_extent;
            let z = ((j as f64 + 0.5) / s * 2.0 - 1.0) * scene.half_extent;
            let eye = Vec3::new(x, 10.0 * scene.sphere_radius, z);
            let down = Vec3::new(0.0, -1.0, 0.0);

            let (point, normal, albedo) =
                match oracle_sphere_hit_t(eye, down, scene.center(), scene.sphere_radius) {
                    Some(t) => {
                        let p = eye + down * t;
                        (p, (p - scene.center()) * (1.0 / scene.sphere_radius), scene.sphere_albedo)
                    }
                    None => {
                        // Straight-down ray meets y=0 at (x, 0, z).
                        (Vec3::new(x, 0.0, z), Vec3::new(0.0, 1.0, 0.0), scene.plane_albedo)
                    }
                };

            let mut acc = [0.0f64; 3];
            for v in 0..eh {
                for u in 0..ew {
                    let dir = texel_direction(u, v, ew, eh).unwrap();
                    if dir.y <= 0.0 {
                        continue;
                    }
                    let cos = normal.dot(dir);
                    if cos <= 0.0 {
                        continue;
                    }
                    let shadow_origin = point + normal * 1e-6;
                    if oracle_sphere_hit_t(shadow_origin, dir, scene.center(), scene.sphere_radius)
                        .is_some()
                    {
                        continue;
                    }
                    let dw = texel_solid_angle(v, ew, eh);
                    let w = albedo / std::f64::consts::PI * cos * dw;
                    let px = env.texel(u, v);
                    for c in 0..3 {
                        acc[c] += w * px[c] as f64;
                    }
                }
            }
            out.set_pixel(i, j, [acc[0] as f32, acc[1] as f32, acc[2] as f32]);
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Disk cache

const CACHE_MAGIC: &[u8; 4] = b"LMTM";
const CACHE_VERSION: u32 = 1;

/// Write the transport matrix to its versioned cache format.
pub fn save_transport(transport: &TransportMatrix, path: &Path) -> Result<()> {
    let file = fs::File::create(path).map_err(|e| Error::io(path, e))?;
    let mut w = BufWriter::new(file);
    let mut write = |bytes: &[u8]| w.write_all(bytes).map_err(|e| Error::io(path, e));
    write(CACHE_MAGIC)?;
    write(&CACHE_VERSION.to_le_bytes())?;
    write(&(transport.render_size as u32).to_le_bytes())?;
    write(&(transport.env_width as u32).to_le_bytes())?;
    write(&(transport.env_height as u32).to_le_bytes())?;
    write(&transport.scene_hash)?;
    for v in &transport.data {
        w.write_all(&v.to_le_bytes()).map_err(|e| Error::io(path, e))?;
    }
    w.flush().map_err(|e| Error::io(path, e))
}

/// Load a cached transport matrix, verifying magic, version, and scene hash.
pub fn load_transport(path: &Path, expected_scene: &ProbeScene) -> Result<TransportMatrix> {
    let file = fs::File::open(path).map_err(|e| Error::io(path, e))?;
    let mut r = std::io::BufReader::new(file);
    let mut u32buf = [0u8; 4];
    let mut read4 = |r: &mut std::io::BufReader<fs::File>| -> Result<[u8; 4]> {
        r.read_exact(&mut u32buf).map_err(|e| Error::io(path, e))?;
        Ok(u32buf)
    };
    if &read4(&mut r)? != CACHE_MAGIC {
        return Err(Error::CacheMismatch("bad magic".into()));
    }
    let version = u32::from_le_bytes(read4(&mut r)?);
    if version != CACHE_VERSION {
        return Err(Error::CacheMismatch(format!(
            "version {version}, expected {CACHE_VERSION}"
        )));
    }
    let render_size = u32::from_le_bytes(read4(&mut r)?) as usize;
    let env_width = u32::from_le_bytes(read4(&mut r)?) as usize;
    let env_height = u32::from_le_bytes(read4(&mut r)?) as usize;
    let mut scene_hash = [0u8; 32];
    r.read_exact(&mut scene_hash).map_err(|e| Error::io(path, e))?;
    if scene_hash != expected_scene.hash() {
        return Err(Error::CacheMismatch("scene hash differs".into()));
    }
    let n_pixels = render_size * render_size;
    let n_texels = env_width * env_height;
    let mut payload = Vec::new();
    r.read_to_end(&mut payload).map_err(|e| Error::io(path, e))?;
    if payload.len() != n_pixels * n_texels * 4 {
        return Err(Error::CacheMismatch(format!(
            "payload {} bytes, expected {}",
            payload.len(),
            n_pixels * n_texels * 4
        )));
    }
    let data = payload
        .chunks_exact(4)
        .map(|b| f32::from_le_bytes(b.try_into().unwrap()))
        .collect();
    Ok(TransportMatrix {
        n_pixels,
        n_texels,
        render_size,
        env_width,
        env_height,
        scene_hash,
        data,
    })
}

/// Load from cache if present and compatible, otherwise build and cache.
/// Returns the matrix and whether it was rebuilt.
pub fn load_or_build(
    cache_dir: &Path,
    scene: &ProbeScene,
    env_height: usize,
) -> Result<(TransportMatrix, bool)> {
    fs::create_dir_all(cache_dir).map_err(|e| Error::io(cache_dir, e))?;
    let hash_prefix: String = scene.hash()[..6].iter().map(|b| format!("{b:02x}")).collect();
    let path = cache_dir.join(format!(
        "transport_{}_{}x{}_{}.bin",
        scene.render_size,
        2 * env_height,
        env_height,
        hash_prefix
    ));
    if path.exists() {
        match load_transport(&path, scene) {
            Ok(t) if t.env_height == env_height => return Ok((t, false)),
            Ok(_) | Err(Error::CacheMismatch(_)) => {} // rebuild below
            Err(e) => return Err(e),
        }
    }
    let t = build_transport(scene, env_height)?;
    save_transport(&t, &path)?;
    Ok((t, true))
}

#[cfg(test)]
mod tests {
    use super::*;
    use tempfile::tempdir;

    fn small_scene() -> ProbeScene {
        ProbeScene {
            render_size: 32,
            ..ProbeScene::default()
        }
    }

    fn uniform_sky(height: usize, radiance: f32) -> EnvMap {
        let width = 2 * height;
        let mut data = vec![0.0f32; width * height * 3];
        for v in 0..height / 2 {
            for u in 0..width {
                let i = (v * width + u) * 3;
                data[i..i + 3].copy_from_slice(&[radiance; 3]);
            }
        }
        EnvMap::from_data(width, height, data).unwrap()
    }

    #[test]
    fn below_horizon_columns_are_zero() {
        let t = build_transport(&small_scene(), 16).unwrap();
        for p in 0..t.n_pixels() {
            let row = t.row(p);
            for v in 8..16 {
                for u in 0..32 {
                    assert_eq!(row[v * 32 + u], 0.0);
                }
            }
        }
    }

    #[test]
    fn far_plane_pixel_row_sums_to_one() {
        // Wide plane: the corner pixel sees the sphere under a negligible
        // solid angle, so its row must integrate the full hemisphere.
        let scene = ProbeScene {
            render_size: 16,
            half_extent: 12.0,
            ..ProbeScene::default()
        };
        let t = build_transport(&scene, 64).unwrap();
        let p = 0;
        let sum: f64 = t.row(p).iter().map(|v| *v as f64).sum();
        assert!((sum - 1.0).abs() < 0.02, "row sum {sum}");
    }

    #[test]
    fn energy_bound_with_unit_albedo() {
        let t = build_transport(&small_scene(), 32).unwrap();
        for p in 0..t.n_pixels() {
            let sum: f64 = t.row(p).iter().map(|v| *v as f64).sum();
            assert!(sum <= 1.0 + 0.02, "pixel {p}: row sum {sum}");
        }
    }

    #[test]
    fn zero_env_renders_zero() {
        let t = build_transport(&small_scene(), 16).unwrap();
        let env = EnvMap::zeros(16);
        let img = render_probe(&t, &env).unwrap();
        assert!(img.data.iter().all(|v| *v == 0.0));
    }

    #[test]
    fn uniform_sky_lights_plane_to_radiance() {
        let scene = ProbeScene {
            render_size: 16,
            half_extent: 12.0,
            ..ProbeScene::default()
        };
        let t = build_transport(&scene, 64).unwrap();
        let env = uniform_sky(64, 1.0);
        let img = render_probe(&t, &env).unwrap();
        // Corner plane pixel: far enough from the sphere to be unoccluded.
        let px = img.pixel(0, 0);
        assert!((px[0] - 1.0).abs() < 0.02, "corner value {}", px[0]);
    }

    #[test]
    fn render_is_linear() {
        let t = build_transport(&small_scene(), 16).unwrap();
        let e1 = uniform_sky(16, 0.7);
        let mut e2 = EnvMap::zeros(16);
        e2.set_texel(5, 2, [3.0, 1.0, 0.5]);
        let r1 = render_probe(&t, &e1).unwrap();
        let r2 = render_probe(&t, &e2).unwrap();
        let mut combined_data = Vec::new();
        for i in 0..e1.data().len() {
            combined_data.push(2.0 * e1.data()[i] + 3.0 * e2.data()[i]);
        }
        let combined = EnvMap::from_data(32, 16, combined_data).unwrap();
        let rc = render_probe(&t, &combined).unwrap();
        for i in 0..rc.data.len() {
            let expect = 2.0 * r1.data[i] + 3.0 * r2.data[i];
            assert!((rc.data[i] - expect).abs() <= 1e-4 * expect.abs().max(1e-3));
        }
    }

    #[test]
    fn geometry_mismatch_rejected() {
        let t = build_transport(&small_scene(), 16).unwrap();
        let env = EnvMap::zeros(32);
        assert!(render_probe(&t, &env).is_err());
    }

    #[test]
    fn matches_oracle_on_small_instance() {
        let scene = small_scene();
        let t = build_transport(&scene, 16).unwrap();
        let mut env = uniform_sky(16, 0.4);
        env.set_texel(3, 2, [5.0, 2.0, 1.0]);
        env.set_texel(20, 4, [0.0, 8.0, 3.0]);
        let fast = render_probe(&t, &env).unwrap();
        let slow = render_probe_oracle(&scene, &env);
        for i in 0..fast.data.len() {
            let (a, b) = (fast.data[i] as f64, slow.data[i] as f64);
            assert!(
                (a - b).abs() <= 1e-5 * b.abs().max(1e-6),
                "pixel ch {i}: {a} vs {b}"
            );
        }
    }

    #[test]
    fn single_texel_behind_sphere_leaves_shadow_point_unlit() {
        let scene = small_scene();
        let t = build_transport(&scene, 16).unwrap();
        // Low-elevation texel along +x.
        let mut env = EnvMap::zeros(16);
        let (u, v) = crate::envmap::direction_to_texel(
            Vec3::from_spherical(1.2, 0.0),
            32,
            16,
        );
        env.set_texel(u, v, [10.0; 3]);
        let img = render_probe(&t, &env).unwrap();
        // A plane point on the -x side adjacent to the sphere is occluded.
        let i = (((-1.2 / scene.half_extent) + 1.0) / 2.0 * 32.0) as usize;
        let j = 16usize;
        let shadowed = img.pixel(i, j);
        // A far corner on the -x side is lit.
        let lit = img.pixel(0, 0);
        assert!(shadowed[0] < 0.1 * lit[0].max(1e-6), "{} vs {}", shadowed[0], lit[0]);
    }

    #[test]
    fn cache_round_trip() {
        let dir = tempdir().unwrap();
        let scene = small_scene();
        let (t1, rebuilt1) = load_or_build(dir.path(), &scene, 16).unwrap();
        assert!(rebuilt1);
        let (t2, rebuilt2) = load_or_build(dir.path(), &scene, 16).unwrap();
        assert!(!rebuilt2);
        assert_eq!(t1.data, t2.data);
        assert_eq!(t1.scene_hash, t2.scene_hash);
    }

    #[test]
    fn cache_rejects_wrong_scene() {
        let dir = tempdir().unwrap();
        let scene = small_scene();
        let t = build_transport(&scene, 16).unwrap();
        let path = dir.path().join("t.bin");
        save_transport(&t, &path).unwrap();
        let other = ProbeScene {
            sphere_radius: 0.5,
            sphere_center: [0.0, 0.5, 0.0],
            ..small_scene()
        };
        assert!(matches!(
            load_transport(&path, &other),
            Err(Error::CacheMismatch(_))
        ));
    }
}
