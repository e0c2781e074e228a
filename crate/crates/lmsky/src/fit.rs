//! Nonlinear recovery of model parameters from panoramas.
//!
//! The sun position is detected (or given) and held fixed; the nine
//! radiometric parameters are optimized in log space against probe-render
//! targets, since the sun's sub-texel peak makes texel-space differences
//! ill-conditioned. Restarts perturb the starting point in transformed
//! space; the best restart wins. Everything is deterministic given the
//! seed.

use crate::envmap::{detect_sun, ldr_simulate, ldr_to_envmap, EnvMap, LdrImage, Rounding};
use crate::error::{Error, Result};
use crate::losses::{lm_render_losses, pano_l1, LossWeights, ParamRanges};
use crate::model::{
    angle_to_sun, eval_sun, perez_ratio, render_envmap, LmParams, SkyParams, SunParams,
    SunPosition,
};
use crate::optim::{minimize, LmOptions, LmOutcome};
use crate::transport::{render_probe, TransportMatrix};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::path::Path;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(default)]
pub struct FitConfig {
    pub max_iterations: usize,
    /// Convergence tolerance on relative loss decrease.
    pub tolerance: f64,
    pub restarts: usize,
    pub seed: u64,
    pub weights: LossWeights,
    pub ranges: ParamRanges,
    /// Floor applied to zero lower bounds before the log transform.
    pub w_floor: f64,
}

impl Default for FitConfig {
    fn default() -> Self {
        FitConfig {
            max_iterations: 60,
            tolerance: 1e-6,
            restarts: 2,
            seed: 0,
            weights: LossWeights::default(),
            ranges: ParamRanges::default(),
            w_floor: 1e-4,
        }
    }
}

impl FitConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_iterations < 1 {
            return Err(Error::Validation("max_iterations must be >= 1".into()));
        }
        if !(self.tolerance > 0.0) {
            return Err(Error::Validation("tolerance must be > 0".into()));
        }
        if self.restarts < 1 {
            return Err(Error::Validation("restarts must be >= 1".into()));
        }
        self.ranges.validate()
    }
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct FitLosses {
    pub sky: f64,
    pub sun: f64,
    pub lm: f64,
    pub pano_l1: f64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FitResult {
    pub params: LmParams,
    pub losses: FitLosses,
    pub iterations: usize,
    /// Restart index that produced the winning parameters.
    pub restart: usize,
    pub converged: bool,
    /// Whether the sun position came from saturation detection (vs the hint
    /// or the grid-search fallback).
    pub sun_detected: bool,
}

/// The nine radiometric parameters in log space:
/// [beta, kappa, t, w_sun rgb, w_sky rgb].
const N_PARAMS: usize = 9;

struct Transform {
    lower: [f64; N_PARAMS],
    upper: [f64; N_PARAMS],
}

impl Transform {
    fn new(ranges: &ParamRanges, w_floor: f64) -> Transform {
        let lo = |min: f64| min.max(w_floor).ln();
        let mut lower = [0.0; N_PARAMS];
        let mut upper = [0.0; N_PARAMS];
        let pairs = [
            (ranges.beta, 0usize),
            (ranges.kappa, 1),
            (ranges.turbidity, 2),
        ];
        for (r, i) in pairs {
            lower[i] = lo(r.min);
            upper[i] = r.max.ln();
        }
        for c in 0..3 {
            lower[3 + c] = lo(ranges.w_sun.min);
            upper[3 + c] = ranges.w_sun.max.ln();
            lower[6 + c] = lo(ranges.w_sky.min);
            upper[6 + c] = ranges.w_sky.max.ln();
        }
        Transform { lower, upper }
    }

    fn encode(&self, p: &LmParams, w_floor: f64) -> [f64; N_PARAMS] {
        let f = |v: f64| v.max(w_floor).ln();
        let mut x = [
            f(p.sun.beta),
            f(p.sun.kappa),
            f(p.sky.turbidity),
            f(p.sun.w_sun[0]),
            f(p.sun.w_sun[1]),
            f(p.sun.w_sun[2]),
            f(p.sky.w_sky[0]),
            f(p.sky.w_sky[1]),
            f(p.sky.w_sky[2]),
        ];
        for i in 0..N_PARAMS {
            x[i] = x[i].clamp(self.lower[i], self.upper[i]);
        }
        x
    }

    fn decode(&self, x: &[f64], sun_pos: SunPosition) -> LmParams {
        LmParams {
            sun_pos,
            sun: SunParams {
                w_sun: [x[3].exp(), x[4].exp(), x[5].exp()],
                beta: x[0].exp(),
                kappa: x[1].exp(),
            },
            sky: SkyParams {
                w_sky: [x[6].exp(), x[7].exp(), x[8].exp()],
                turbidity: x[2].exp(),
            },
        }
    }
}

/// Per-texel Perez ratio field for the envmap geometry (zero below horizon).
fn sky_field(env_width: usize, env_height: usize, sun_pos: &SunPosition, t: f64) -> Vec<f64> {
    let mut field = vec![0.0; env_width * env_height];
    for v in 0..env_height / 2 {
        for u in 0..env_width {
            let dir = crate::envmap::texel_direction(u, v, env_width, env_height).unwrap();
            let gamma = angle_to_sun(dir, sun_pos).unwrap();
            field[v * env_width + u] =
                perez_ratio(dir.zenith(), gamma, sun_pos.zenith_angle(), t).unwrap();
        }
    }
    field
}

/// Per-texel sun falloff field (unit color), zero below horizon.
fn sun_field(
    env_width: usize,
    env_height: usize,
    sun_pos: &SunPosition,
    beta: f64,
    kappa: f64,
) -> Vec<f64> {
    let unit = SunParams {
        w_sun: [1.0, 1.0, 1.0],
        beta,
        kappa,
    };
    let mut field = vec![0.0; env_width * env_height];
    for v in 0..env_height / 2 {
        for u in 0..env_width {
            let dir = crate::envmap::texel_direction(u, v, env_width, env_height).unwrap();
            let gamma = angle_to_sun(dir, sun_pos).unwrap();
            field[v * env_width + u] = eval_sun(gamma, &unit)[0];
        }
    }
    field
}

/// Probe-space scalar basis renders, cached per parameter value so that
/// finite-difference perturbations of the color channels re-use them.
struct BasisCache<'a> {
    transport: &'a TransportMatrix,
    sun_pos: SunPosition,
    sky: HashMap<u64, Vec<f64>>,
    sun: HashMap<(u64, u64), Vec<f64>>,
}

impl<'a> BasisCache<'a> {
    fn new(transport: &'a TransportMatrix, sun_pos: SunPosition) -> Self {
        BasisCache {
            transport,
            sun_pos,
            sky: HashMap::new(),
            sun: HashMap::new(),
        }
    }

    fn sky_render(&mut self, t: f64) -> &[f64] {
        if self.sky.len() > 64 {
            self.sky.clear();
        }
        let (w, h) = (self.transport.env_width(), self.transport.env_height());
        let (transport, sun_pos) = (self.transport, self.sun_pos);
        self.sky.entry(t.to_bits()).or_insert_with(|| {
            transport.apply_scalar(&sky_field(w, h, &sun_pos, t))
        })
    }

    fn sun_render(&mut self, beta: f64, kappa: f64) -> &[f64] {
        if self.sun.len() > 64 {
            self.sun.clear();
        }
        let (w, h) = (self.transport.env_width(), self.transport.env_height());
        let (transport, sun_pos) = (self.transport, self.sun_pos);
        self.sun
            .entry((beta.to_bits(), kappa.to_bits()))
            .or_insert_with(|| transport.apply_scalar(&sun_field(w, h, &sun_pos, beta, kappa)))
    }
}

fn flatten_render(img: &crate::envmap::RenderImage) -> Vec<f64> {
    img.data.iter().map(|v| *v as f64).collect()
}

/// Fallback sun search: score every 16x64 bin center by the panorama
/// radiance in its direction and take the brightest.
fn grid_search_sun(p_hdr: &EnvMap) -> SunPosition {
    use crate::losses::{sun_bin_center, SUN_AZ_BINS, SUN_ELEV_BINS};
    let mut best = (f64::NEG_INFINITY, sun_bin_center(SUN_ELEV_BINS - 1, 0));
    for e in 0..SUN_ELEV_BINS {
        for a in 0..SUN_AZ_BINS {
            let pos = sun_bin_center(e, a);
            let rgb = p_hdr.sample(pos.direction());
            let lum = 0.2126 * rgb[0] + 0.7152 * rgb[1] + 0.0722 * rgb[2];
            if lum > best.0 {
                best = (lum, pos);
            }
        }
    }
    best.1
}

/// Initialization anchors from the panorama content. The sun color starts
/// from saturated texels near the sun only; an overcast horizon can also
/// clip, and must not bleed into the sun estimate.
fn initial_params(p_hdr: &EnvMap, sun_pos: SunPosition, ranges: &ParamRanges, w_floor: f64) -> LmParams {
    const SUN_REGION_RADIUS: f64 = 0.3; // radians
    let (w, h) = (p_hdr.width(), p_hdr.height());
    // Sky texels: upper half, sorted by luminance; mean of top quartile.
    let mut sky_texels: Vec<(f64, [f64; 3])> = Vec::with_capacity(w * h / 2);
    let mut saturated_sum = [0.0f64; 3];
    let mut saturated_n = 0usize;
    for v in 0..h / 2 {
        for u in 0..w {
            let px = p_hdr.texel(u, v);
            let rgb = [px[0] as f64, px[1] as f64, px[2] as f64];
            let lum = 0.2126 * rgb[0] + 0.7152 * rgb[1] + 0.0722 * rgb[2];
            sky_texels.push((lum, rgb));
            // Texels that clip in an exposure-1 LDR capture, sun region only.
            if rgb.iter().any(|c| *c >= 1.0) {
                let dir = crate::envmap::texel_direction(u, v, w, h).unwrap();
                if angle_to_sun(dir, &sun_pos).unwrap() < SUN_REGION_RADIUS {
                    for c in 0..3 {
                        saturated_sum[c] += rgb[c];
                    }
                    saturated_n += 1;
                }
            }
        }
    }
    sky_texels.sort_by(|a, b| b.0.total_cmp(&a.0));
    let quartile = (sky_texels.len() / 4).max(1);
    let mut w_sky = [0.0f64; 3];
    for (_, rgb) in &sky_texels[..quartile] {
        for c in 0..3 {
            w_sky[c] += rgb[c];
        }
    }
    let clamp_w = |v: f64, r: crate::losses::Range| v.clamp(r.min.max(w_floor), r.max);
    for c in 0..3 {
        w_sky[c] = clamp_w(w_sky[c] / quartile as f64, ranges.w_sky);
    }
    let mut w_sun = [w_floor; 3];
    if saturated_n > 0 {
        for c in 0..3 {
            w_sun[c] = clamp_w(saturated_sum[c] / saturated_n as f64, ranges.w_sun);
        }
    }
    LmParams {
        sun_pos,
        sun: SunParams {
            w_sun,
            beta: 40.0,
            kappa: 0.1,
        },
        sky: SkyParams {
            w_sky,
            turbidity: 3.0,
        },
    }
}

fn zero_radiometric(sun_pos: SunPosition) -> LmParams {
    LmParams {
        sun_pos,
        sun: SunParams {
            w_sun: [0.0; 3],
            beta: 40.0,
            kappa: 0.1,
        },
        sky: SkyParams {
            w_sky: [0.0; 3],
            turbidity: 3.0,
        },
    }
}

fn finish_result(
    transport: &TransportMatrix,
    p_hdr: &EnvMap,
    p_ldr: &EnvMap,
    params: LmParams,
    outcome: Option<(&LmOutcome, usize)>,
    sun_detected: bool,
) -> Result<FitResult> {
    let render_losses = lm_render_losses(transport, p_hdr, p_ldr, &params)?;
    let rendered = render_envmap(&params, p_hdr.height())?;
    let l1 = pano_l1(p_hdr, &rendered)?;
    let (iterations, restart, converged) = match outcome {
        Some((o, r)) => (o.iterations, r, o.converged),
        None => (0, 0, true),
    };
    Ok(FitResult {
        params,
        losses: FitLosses {
            sky: render_losses.sky,
            sun: render_losses.sun,
            lm: render_losses.lm,
            pano_l1: l1,
        },
        iterations,
        restart,
        converged,
        sun_detected,
    })
}

/// Fit all nine radiometric parameters to an HDR panorama. The objective is
/// the weighted sum of the full-model, sky, and sun render losses against
/// the panorama's probe render and its LDR-clipped counterpart.
pub fn fit_lm_to_hdr(
    transport: &TransportMatrix,
    p_hdr: &EnvMap,
    sun_hint: Option<SunPosition>,
    cfg: &FitConfig,
) -> Result<FitResult> {
    cfg.validate()?;
    let ldr = ldr_simulate(p_hdr, 1.0, false, Rounding::HalfUp)?;
    let p_ldr = ldr_to_envmap(&ldr)?;

    // Degenerate input: nothing to fit.
    if p_hdr.data().iter().all(|v| *v == 0.0) {
        let sun_pos = sun_hint.unwrap_or(SunPosition::new(0.0, 0.0)?);
        return finish_result(transport, p_hdr, &p_ldr, zero_radiometric(sun_pos), None, false);
    }

    let (sun_pos, sun_detected) = match sun_hint {
        Some(pos) => (pos, false),
        None => match detect_sun(&ldr, crate::envmap::DEFAULT_SATURATION_THRESHOLD) {
            Some(pos) => (pos, true),
            None => (grid_search_sun(p_hdr), false),
        },
    };

    let target_hdr = flatten_render(&render_probe(transport, p_hdr)?);
    let target_ldr = flatten_render(&render_probe(transport, &p_ldr)?);
    let target_diff: Vec<f64> = target_hdr
        .iter()
        .zip(&target_ldr)
        .map(|(h, l)| h - l)
        .collect();

    let m = target_hdr.len() as f64;
    let s_lm = (cfg.weights.w_lm_render / m).sqrt();
    let s_sky = (cfg.weights.w_sky_render / m).sqrt();
    let s_sun = (cfg.weights.w_sun_render / m).sqrt();

    let transform = Transform::new(&cfg.ranges, cfg.w_floor);
    let mut cache = BasisCache::new(transport, sun_pos);

    let mut residual_fn = |x: &[f64]| -> Vec<f64> {
        let p = transform.decode(x, sun_pos);
        let sky_basis = cache.sky_render(p.sky.turbidity).to_vec();
        let sun_basis = cache.sun_render(p.sun.beta, p.sun.kappa).to_vec();
        let n_px = sky_basis.len();
        let mut res = Vec::with_capacity(3 * 3 * n_px);
        for (i, (sky_b, sun_b)) in sky_basis.iter().zip(&sun_basis).enumerate() {
            for c in 0..3 {
                let pred_sky = p.sky.w_sky[c] * sky_b;
                let pred_sun = p.sun.w_sun[c] * sun_b;
                let k = i * 3 + c;
                res.push(s_lm * (pred_sky + pred_sun - target_hdr[k]));
                res.push(s_sky * (pred_sky - target_ldr[k]));
                res.push(s_sun * (pred_sun - target_diff[k]));
            }
        }
        res
    };

    let init = initial_params(p_hdr, sun_pos, &cfg.ranges, cfg.w_floor);
    let x0 = transform.encode(&init, cfg.w_floor);
    let opts = LmOptions {
        max_iterations: cfg.max_iterations,
        tolerance: cfg.tolerance,
        ..Default::default()
    };

    let mut best: Option<(LmOutcome, usize)> = None;
    for restart in 0..cfg.restarts {
        let mut start = x0;
        if restart > 0 {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(restart as u64));
            let normal = Normal::new(0.0, 0.5).unwrap();
            for (i, v) in start.iter_mut().enumerate() {
                *v = (*v + normal.sample(&mut rng)).clamp(transform.lower[i], transform.upper[i]);
            }
        }
        let outcome = minimize(
            &mut residual_fn,
            &start,
            &transform.lower,
            &transform.upper,
            &opts,
        );
        if best.as_ref().map_or(true, |(b, _)| outcome.cost < b.cost) {
            best = Some((outcome, restart));
        }
    }
    let (outcome, restart) = best.expect("restarts >= 1");
    let params = transform.decode(&outcome.x, sun_pos);
    finish_result(
        transport,
        p_hdr,
        &p_ldr,
        params,
        Some((&outcome, restart)),
        sun_detected,
    )
}

/// Fit only the sky parameters {w_sky, t} to an LDR panorama; sun
/// parameters are returned unset (zero color). This is the LDR baseline:
/// the sun's dynamic range is not recoverable from clipped input.
pub fn fit_sky_to_ldr(
    transport: &TransportMatrix,
    p_ldr: &LdrImage,
    sun_pos: SunPosition,
    cfg: &FitConfig,
) -> Result<FitResult> {
    cfg.validate()?;
    let env = ldr_to_envmap(p_ldr)?;
    let target = flatten_render(&render_probe(transport, &env)?);
    let m = target.len() as f64;
    let scale = (1.0 / m).sqrt();

    let transform = Transform::new(&cfg.ranges, cfg.w_floor);
    let mut cache = BasisCache::new(transport, sun_pos);
    // x = [ln t, ln w_sky rgb]
    let lower = [
        transform.lower[2],
        transform.lower[6],
        transform.lower[7],
        transform.lower[8],
    ];
    let upper = [
        transform.upper[2],
        transform.upper[6],
        transform.upper[7],
        transform.upper[8],
    ];
    let mut residual_fn = |x: &[f64]| -> Vec<f64> {
        let t = x[0].exp();
        let w_sky = [x[1].exp(), x[2].exp(), x[3].exp()];
        let basis = cache.sky_render(t).to_vec();
        let mut res = Vec::with_capacity(basis.len() * 3);
        for (i, b) in basis.iter().enumerate() {
            for c in 0..3 {
                res.push(scale * (w_sky[c] * b - target[i * 3 + c]));
            }
        }
        res
    };

    let init = initial_params(&env, sun_pos, &cfg.ranges, cfg.w_floor);
    let x0 = [
        init.sky.turbidity.ln(),
        init.sky.w_sky[0].ln(),
        init.sky.w_sky[1].ln(),
        init.sky.w_sky[2].ln(),
    ];
    let opts = LmOptions {
        max_iterations: cfg.max_iterations,
        tolerance: cfg.tolerance,
        ..Default::default()
    };

    let mut best: Option<(LmOutcome, usize)> = None;
    for restart in 0..cfg.restarts {
        let mut start = x0;
        if restart > 0 {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(restart as u64));
            let normal = Normal::new(0.0, 0.5).unwrap();
            for (i, v) in start.iter_mut().enumerate() {
                *v = (*v + normal.sample(&mut rng)).clamp(lower[i], upper[i]);
            }
        }
        let outcome = minimize(&mut residual_fn, &start, &lower, &upper, &opts);
        if best.as_ref().map_or(true, |(b, _)| outcome.cost < b.cost) {
            best = Some((outcome, restart));
        }
    }
    let (outcome, restart) = best.expect("restarts >= 1");
    let params = LmParams {
        sun_pos,
        sun: SunParams {
            w_sun: [0.0; 3],
            beta: 40.0,
            kappa: 0.1,
        },
        sky: SkyParams {
            w_sky: [outcome.x[1].exp(), outcome.x[2].exp(), outcome.x[3].exp()],
            turbidity: outcome.x[0].exp(),
        },
    };
    // Losses are reported against the LDR panorama, the only target the
    // sky-only fit sees.
    finish_result(transport, &env, &env, params, Some((&outcome, restart)), false)
}

/// One line of the labeling output.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LabelRecord {
    pub file: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub params: Option<LmParams>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sun_detected: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub losses: Option<FitLosses>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub softness: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub converged: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub restarts: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// Fit every `.pfm` panorama under `dir` and write one JSONL record per
/// file (sorted by name) to `out`. Failures become error records;
/// processing continues. Returns the number of records written.
pub fn label_dataset(dir: &Path, cfg: &FitConfig, out: &Path) -> Result<usize> {
    use crate::metrics::{SoftnessClassifier, SoftnessConfig};
    use crate::transport::{build_transport, ProbeScene};
    use rayon::prelude::*;

    cfg.validate()?;
    let mut files: Vec<std::path::PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| Error::io(dir, e))?
        .filter_map(|e| e.ok())
        .map(|e| e.path())
        .filter(|p| p.extension().map_or(false, |x| x == "pfm"))
        .collect();
    files.sort();

    let scene = ProbeScene::default();
    // One transport (and classifier) per envmap resolution encountered.
    let mut transports: HashMap<usize, (TransportMatrix, SoftnessClassifier)> = HashMap::new();
    let mut panos = Vec::with_capacity(files.len());
    for f in &files {
        panos.push(crate::io::read_pfm(f));
    }
    for pano in panos.iter().flatten() {
        let h = pano.height();
        if !transports.contains_key(&h) {
            let t = build_transport(&scene, h)?;
            let classifier = SoftnessClassifier::new(&scene, &t, SoftnessConfig::default())?;
            transports.insert(h, (t, classifier));
        }
    }

    let records: Vec<LabelRecord> = files
        .par_iter()
        .zip(panos.into_par_iter())
        .map(|(file, pano)| {
            let name = file
                .file_name()
                .map(|n| n.to_string_lossy().into_owned())
                .unwrap_or_default();
            let error_record = |msg: String| LabelRecord {
                file: name.clone(),
                params: None,
                sun_detected: None,
                losses: None,
                softness: None,
                converged: None,
                restarts: None,
                error: Some(msg),
            };
            let pano = match pano {
                Ok(p) => p,
                Err(e) => return error_record(e.to_string()),
            };
            let (transport, classifier) = &transports[&pano.height()];
            match fit_one(transport, classifier, &pano, cfg) {
                Ok(mut rec) => {
                    rec.file = name;
                    rec
                }
                Err(e) => error_record(e.to_string()),
            }
        })
        .collect();

    let mut text = String::from("# lmsky label records v1\n");
    for r in &records {
        text.push_str(&serde_json::to_string(r)?);
        text.push('\n');
    }
    std::fs::write(out, text).map_err(|e| Error::io(out, e))?;
    Ok(records.len())
}

fn fit_one(
    transport: &TransportMatrix,
    classifier: &crate::metrics::SoftnessClassifier,
    pano: &EnvMap,
    cfg: &FitConfig,
) -> Result<LabelRecord> {
    let result = fit_lm_to_hdr(transport, pano, None, cfg)?;
    // Softness is judged with the sun rolled to the azimuth that casts the
    // sphere shadow into the classifier band, so the bucket does not depend
    // on where the sun happened to sit in the panorama.
    let mut probe_params = result.params;
    probe_params.sun_pos = SunPosition::new(
        result.params.sun_pos.zenith_angle(),
        crate::metrics::SOFTNESS_SUN_AZIMUTH,
    )?;
    let env = render_envmap(&probe_params, transport.env_height())?;
    let render = render_probe(transport, &env)?;
    let (_, bucket) = classifier.classify(&render)?;
    Ok(LabelRecord {
        file: String::new(),
        params: Some(result.params),
        sun_detected: Some(result.sun_detected),
        losses: Some(result.losses),
        softness: Some(bucket),
        converged: Some(result.converged),
        restarts: Some(cfg.restarts),
        error: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::losses::Range;
    use crate::transport::{build_transport, ProbeScene};

    fn small_transport() -> TransportMatrix {
        let scene = ProbeScene {
            render_size: 24,
            ..ProbeScene::default()
        };
        build_transport(&scene, 16).unwrap()
    }

    fn quick_cfg() -> FitConfig {
        FitConfig {
            max_iterations: 40,
            restarts: 1,
            ..FitConfig::default()
        }
    }

    fn sunny_params() -> LmParams {
        LmParams {
            sun_pos: SunPosition::new(0.7, 2.0).unwrap(),
            sun: SunParams {
                w_sun: [25.0, 22.0, 18.0],
                beta: 80.0,
                kappa: 0.05,
            },
            sky: SkyParams {
                w_sky: [0.6, 0.8, 1.2],
                turbidity: 2.5,
            },
        }
    }

    #[test]
    fn zero_pano_gives_zero_fit() {
        let t = small_transport();
        let env = EnvMap::zeros(16);
        let r = fit_lm_to_hdr(&t, &env, None, &quick_cfg()).unwrap();
        assert_eq!(r.params.sun.w_sun, [0.0; 3]);
        assert_eq!(r.params.sky.w_sky, [0.0; 3]);
        assert_eq!(r.losses.lm, 0.0);
        assert_eq!(r.losses.pano_l1, 0.0);
    }

    #[test]
    fn round_trip_recovers_probe_render() {
        let t = small_transport();
        let q = sunny_params();
        let env = render_envmap(&q, 16).unwrap();
        let r = fit_lm_to_hdr(&t, &env, Some(q.sun_pos), &quick_cfg()).unwrap();
        let gt = render_probe(&t, &env).unwrap();
        let fitted_env = render_envmap(&r.params, 16).unwrap();
        let fitted = render_probe(&t, &fitted_env).unwrap();
        let si = crate::metrics::si_rmse(&gt, &fitted).unwrap();
        assert!(si <= 0.05, "si-rmse {si}");
    }

    #[test]
    fn overcast_fit_has_negligible_sun() {
        let t = small_transport();
        // Dim enough that even the circumsolar sky stays below the LDR clip
        // point; a brighter sky would clip there and the HDR-LDR difference
        // would legitimately demand a sun lobe.
        let q = LmParams {
            sun: SunParams {
                w_sun: [0.0; 3],
                beta: 40.0,
                kappa: 0.1,
            },
            sky: SkyParams {
                w_sky: [0.3, 0.32, 0.35],
                turbidity: 8.0,
            },
            ..sunny_params()
        };
        let env = render_envmap(&q, 16).unwrap();
        let r = fit_lm_to_hdr(&t, &env, Some(q.sun_pos), &quick_cfg()).unwrap();
        let sun_mag: f64 = r.params.sun.w_sun.iter().sum();
        let sky_mag: f64 = r.params.sky.w_sky.iter().sum();
        assert!(sun_mag <= 0.05 * sky_mag, "sun {sun_mag} vs sky {sky_mag}");
    }

    #[test]
    fn deterministic_given_seed() {
        let t = small_transport();
        let env = render_envmap(&sunny_params(), 16).unwrap();
        let cfg = FitConfig {
            restarts: 2,
            ..quick_cfg()
        };
        let a = fit_lm_to_hdr(&t, &env, None, &cfg).unwrap();
        let b = fit_lm_to_hdr(&t, &env, None, &cfg).unwrap();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }

    #[test]
    fn fitted_params_respect_ranges() {
        let t = small_transport();
        let env = render_envmap(&sunny_params(), 16).unwrap();
        let cfg = quick_cfg();
        let r = fit_lm_to_hdr(&t, &env, None, &cfg).unwrap();
        let ranges = cfg.ranges;
        let within = |v: f64, r: Range| v >= r.min && v <= r.max;
        assert!(within(r.params.sun.beta, ranges.beta));
        assert!(within(r.params.sun.kappa, ranges.kappa));
        assert!(within(r.params.sky.turbidity, ranges.turbidity));
        for c in 0..3 {
            assert!(within(r.params.sun.w_sun[c], ranges.w_sun));
            assert!(within(r.params.sky.w_sky[c], ranges.w_sky));
        }
    }

    #[test]
    fn reported_losses_are_reproducible() {
        let t = small_transport();
        let env = render_envmap(&sunny_params(), 16).unwrap();
        let r = fit_lm_to_hdr(&t, &env, None, &quick_cfg()).unwrap();
        let ldr = ldr_simulate(&env, 1.0, false, Rounding::HalfUp).unwrap();
        let p_ldr = ldr_to_envmap(&ldr).unwrap();
        let again = lm_render_losses(&t, &env, &p_ldr, &r.params).unwrap();
        assert!((again.lm - r.losses.lm).abs() < 1e-12);
        assert!((again.sky - r.losses.sky).abs() < 1e-12);
        assert!((again.sun - r.losses.sun).abs() < 1e-12);
    }

    #[test]
    fn sky_fit_recovers_pure_sky() {
        let t = small_transport();
        let q = LmParams {
            sun: SunParams {
                w_sun: [0.0; 3],
                beta: 40.0,
                kappa: 0.1,
            },
            ..sunny_params()
        };
        let env = render_envmap(&q, 16).unwrap();
        let ldr = ldr_simulate(&env, 1.0, false, Rounding::HalfUp).unwrap();
        let r = fit_sky_to_ldr(&t, &ldr, q.sun_pos, &quick_cfg()).unwrap();
        assert_eq!(r.params.sun.w_sun, [0.0; 3]);
        let gt = render_probe(&t, &ldr_to_envmap(&ldr).unwrap()).unwrap();
        let fitted_env = render_envmap(&r.params, 16).unwrap();
        let fitted = render_probe(&t, &fitted_env).unwrap();
        let si = crate::metrics::si_rmse(&gt, &fitted).unwrap();
        assert!(si <= 0.05, "si-rmse {si}");
    }

    // Guards the transform chain rule: the optimizer's central-difference
    // gradient must agree with an independent finite-difference of the cost.
    #[test]
    fn gradient_check_at_random_points() {
        use rand::Rng;
        let t = small_transport();
        let q = sunny_params();
        let env = render_envmap(&q, 16).unwrap();
        let cfg = quick_cfg();
        let transform = Transform::new(&cfg.ranges, cfg.w_floor);
        let ldr = ldr_simulate(&env, 1.0, false, Rounding::HalfUp).unwrap();
        let p_ldr = ldr_to_envmap(&ldr).unwrap();
        let target_hdr = flatten_render(&render_probe(&t, &env).unwrap());
        let target_ldr = flatten_render(&render_probe(&t, &p_ldr).unwrap());
        let target_diff: Vec<f64> = target_hdr
            .iter()
            .zip(&target_ldr)
            .map(|(h, l)| h - l)
            .collect();
        let m = target_hdr.len() as f64;
        let mut cache = BasisCache::new(&t, q.sun_pos);
        let weights = cfg.weights;
        let mut f = |x: &[f64]| -> Vec<f64> {
            let p = transform.decode(x, q.sun_pos);
            let sky_b = cache.sky_render(p.sky.turbidity).to_vec();
            let sun_b = cache.sun_render(p.sun.beta, p.sun.kappa).to_vec();
            let mut res = Vec::new();
            for (i, (sb, nb)) in sky_b.iter().zip(&sun_b).enumerate() {
                for c in 0..3 {
                    let psky = p.sky.w_sky[c] * sb;
                    let psun = p.sun.w_sun[c] * nb;
                    let k = i * 3 + c;
                    res.push((weights.w_lm_render / m).sqrt() * (psky + psun - target_hdr[k]));
                    res.push((weights.w_sky_render / m).sqrt() * (psky - target_ldr[k]));
                    res.push((weights.w_sun_render / m).sqrt() * (psun - target_diff[k]));
                }
            }
            res
        };
        let cost = |f: &mut dyn FnMut(&[f64]) -> Vec<f64>, x: &[f64]| -> f64 {
            f(x).iter().map(|r| r * r).sum()
        };

        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10 {
            let x: Vec<f64> = (0..N_PARAMS)
                .map(|i| {
                    // Stay inside the box so clamping does not bias steps.
                    let lo = transform.lower[i] + 0.2;
                    let hi = transform.upper[i] - 0.2;
                    rng.gen_range(lo..hi)
                })
                .collect();
            let jac =
                crate::optim::numerical_jacobian(&mut f, &x, &transform.lower, &transform.upper, 1e-4);
            let r0 = f(&x);
            // gradient of cost = 2 J^T r
            for k in 0..N_PARAMS {
                let g_opt: f64 = 2.0 * jac[k].iter().zip(&r0).map(|(j, r)| j * r).sum::<f64>();
                let h = 1e-5;
                let mut xp = x.clone();
                xp[k] += h;
                let mut xm = x.clone();
                xm[k] -= h;
                let g_fd = (cost(&mut f, &xp) - cost(&mut f, &xm)) / (2.0 * h);
                let denom = g_fd.abs().max(1e-6);
                assert!(
                    (g_opt - g_fd).abs() / denom < 1e-3,
                    "param {k}: {g_opt} vs {g_fd}"
                );
            }
        }
    }

    #[test]
    fn label_dataset_handles_corrupt_and_empty() {
        use tempfile::tempdir;
        let dir = tempdir().unwrap();
        let out = dir.path().join("labels.jsonl");

        // Empty directory: zero records, header only.
        let n = label_dataset(dir.path(), &quick_cfg(), &out).unwrap();
        assert_eq!(n, 0);
        let text = std::fs::read_to_string(&out).unwrap();
        assert!(text.starts_with('#'));
        assert_eq!(text.lines().count(), 1);

        // One good pano, one corrupt file.
        let env = render_envmap(&sunny_params(), 16).unwrap();
        crate::io::write_pfm(&env, &dir.path().join("a.pfm")).unwrap();
        std::fs::write(dir.path().join("b.pfm"), b"not a pfm").unwrap();
        let n = label_dataset(dir.path(), &quick_cfg(), &out).unwrap();
        assert_eq!(n, 2);
        let text = std::fs::read_to_string(&out).unwrap();
        let records: Vec<LabelRecord> = text
            .lines()
            .skip(1)
            .map(|l| serde_json::from_str(l).unwrap())
            .collect();
        assert_eq!(records.len(), 2);
        assert_eq!(records[0].file, "a.pfm");
        assert!(records[0].error.is_none());
        assert!(records[0].params.is_some());
        assert_eq!(records[1].file, "b.pfm");
        assert!(records[1].error.is_some());
    }
}
