//! Loss operations over panoramas, probe renders, and parameter vectors.
//! All image losses are means over pixels and channels so values are
//! resolution-independent.

use crate::envmap::EnvMap;
use crate::error::{Error, Result};
use crate::model::{render_envmap, LmParams, SunPosition};
use crate::transport::{render_probe, TransportMatrix};
use serde::{Deserialize, Serialize};
use std::f64::consts::{FRAC_PI_2, TAU};

/// Inclusive parameter range used for [0, 1] normalization.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Range {
    pub min: f64,
    pub max: f64,
}

impl Range {
    pub fn new(min: f64, max: f64) -> Range {
        Range { min, max }
    }

    pub fn normalize(&self, x: f64) -> Result<f64> {
        if x < self.min || x > self.max {
            return Err(Error::InvalidInput(format!(
                "value {x} outside range [{}, {}]",
                self.min, self.max
            )));
        }
        Ok((x - self.min) / (self.max - self.min))
    }
}

/// Per-parameter min/max for normalized parameter losses and fit bounds.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct ParamRanges {
    pub beta: Range,
    pub kappa: Range,
    pub turbidity: Range,
    pub w_sun: Range,
    pub w_sky: Range,
}

impl Default for ParamRanges {
    fn default() -> Self {
        ParamRanges {
            beta: Range::new(0.0, 200.0),
            kappa: Range::new(0.001, 2.0),
            turbidity: Range::new(1.0, 20.0),
            w_sun: Range::new(0.0, 50.0),
            w_sky: Range::new(0.0, 50.0),
        }
    }
}

impl ParamRanges {
    pub fn validate(&self) -> Result<()> {
        for (name, r) in [
            ("beta", self.beta),
            ("kappa", self.kappa),
            ("turbidity", self.turbidity),
            ("w_sun", self.w_sun),
            ("w_sky", self.w_sky),
        ] {
            if !(r.min < r.max) {
                return Err(Error::Validation(format!(
                    "range {name}: min {} must be < max {}",
                    r.min, r.max
                )));
            }
        }
        Ok(())
    }
}

/// Loss weights. The parameter-loss weights for kappa, beta and w_sun are
/// 5, 10 and 10; the sky render loss is down-weighted to 0.2.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct LossWeights {
    pub w_beta: f64,
    pub w_kappa: f64,
    pub w_wsun: f64,
    pub w_t: f64,
    pub w_wsky: f64,
    pub w_sky_render: f64,
    pub w_sun_render: f64,
    pub w_lm_render: f64,
}

impl Default for LossWeights {
    fn default() -> Self {
        LossWeights {
            w_beta: 10.0,
            w_kappa: 5.0,
            w_wsun: 10.0,
            w_t: 1.0,
            w_wsky: 1.0,
            w_sky_render: 0.2,
            w_sun_render: 1.0,
            w_lm_render: 1.0,
        }
    }
}

/// Mean absolute per-channel difference between two panoramas.
pub fn pano_l1(p_star: &EnvMap, p_hat: &EnvMap) -> Result<f64> {
    if p_star.width() != p_hat.width() || p_star.height() != p_hat.height() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} vs {}x{}",
            p_star.width(),
            p_star.height(),
            p_hat.width(),
            p_hat.height()
        )));
    }
    let n = p_star.data().len();
    let sum: f64 = p_star
        .data()
        .iter()
        .zip(p_hat.data())
        .map(|(a, b)| (*a as f64 - *b as f64).abs())
        .sum();
    Ok(sum / n as f64)
}

/// Squared error on sun elevation.
pub fn elevation_l2(theta_star: f64, theta_hat: f64) -> f64 {
    (theta_star - theta_hat).powi(2)
}

fn mse(a: &[f32], b: &[f32]) -> f64 {
    let n = a.len();
    a.iter()
        .zip(b)
        .map(|(x, y)| {
            let d = *x as f64 - *y as f64;
            d * d
        })
        .sum::<f64>()
        / n as f64
}

/// Mean squared difference of the probe renders of two panoramas.
pub fn render_l2(transport: &TransportMatrix, a: &EnvMap, b: &EnvMap) -> Result<f64> {
    let ra = render_probe(transport, a)?;
    let rb = render_probe(transport, b)?;
    Ok(mse(&ra.data, &rb.data))
}

/// The three render losses against HDR and LDR panorama targets.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct RenderLosses {
    pub sky: f64,
    pub sun: f64,
    pub lm: f64,
}

/// Render losses of a parameter estimate against a panorama pair:
/// sky prediction vs the LDR render, sun prediction vs the (HDR - LDR)
/// render, and full-model prediction vs the HDR render.
///
/// `p_ldr` is the LDR panorama mapped back to float in [0, 1]
/// (see `envmap::ldr_to_envmap`).
pub fn lm_render_losses(
    transport: &TransportMatrix,
    p_hdr: &EnvMap,
    p_ldr: &EnvMap,
    q: &LmParams,
) -> Result<RenderLosses> {
    let height = p_hdr.height();
    let sky_only = LmParams {
        sun: crate::model::SunParams {
            w_sun: [0.0; 3],
            ..q.sun
        },
        ..*q
    };
    let sun_only = LmParams {
        sky: crate::model::SkyParams {
            w_sky: [0.0; 3],
            ..q.sky
        },
        ..*q
    };
    let f_sky = render_envmap(&sky_only, height)?;
    let f_sun = render_envmap(&sun_only, height)?;
    let f_lm = render_envmap(q, height)?;

    let r_hdr = render_probe(transport, p_hdr)?;
    let r_ldr = render_probe(transport, p_ldr)?;
    let r_sky = render_probe(transport, &f_sky)?;
    let r_sun = render_probe(transport, &f_sun)?;
    let r_lm = render_probe(transport, &f_lm)?;

    // Sun target: T * (P_HDR - P_LDR), formed on the rendered images by
    // linearity of T.
    let diff_target: Vec<f32> = r_hdr
        .data
        .iter()
        .zip(&r_ldr.data)
        .map(|(h, l)| h - l)
        .collect();

    Ok(RenderLosses {
        sky: mse(&r_ldr.data, &r_sky.data),
        sun: mse(&diff_target, &r_sun.data),
        lm: mse(&r_hdr.data, &r_lm.data),
    })
}

/// Weighted, normalized squared parameter loss over {beta, kappa, t, w_sun,
/// w_sky}. Sun position is excluded; it is handled by the KL loss on the
/// binned distribution.
pub fn param_losses(
    q_hat: &LmParams,
    q_tilde: &LmParams,
    ranges: &ParamRanges,
    weights: &LossWeights,
) -> Result<f64> {
    ranges.validate()?;
    let sq = |a: f64, b: f64| (a - b).powi(2);
    let mut total = 0.0;
    total += weights.w_beta
        * sq(
            ranges.beta.normalize(q_hat.sun.beta)?,
            ranges.beta.normalize(q_tilde.sun.beta)?,
        );
    total += weights.w_kappa
        * sq(
            ranges.kappa.normalize(q_hat.sun.kappa)?,
            ranges.kappa.normalize(q_tilde.sun.kappa)?,
        );
    total += weights.w_t
        * sq(
            ranges.turbidity.normalize(q_hat.sky.turbidity)?,
            ranges.turbidity.normalize(q_tilde.sky.turbidity)?,
        );
    for c in 0..3 {
        total += weights.w_wsun
            * sq(
                ranges.w_sun.normalize(q_hat.sun.w_sun[c])?,
                ranges.w_sun.normalize(q_tilde.sun.w_sun[c])?,
            );
        total += weights.w_wsky
            * sq(
                ranges.w_sky.normalize(q_hat.sky.w_sky[c])?,
                ranges.w_sky.normalize(q_tilde.sky.w_sky[c])?,
            );
    }
    Ok(total)
}

pub const SUN_ELEV_BINS: usize = 16;
pub const SUN_AZ_BINS: usize = 64;

/// Probability distribution over discretized sun positions:
/// 16 elevation rows x 64 azimuth columns.
#[derive(Clone, Debug, PartialEq)]
pub struct SunPosDistribution {
    probs: Vec<f64>,
}

impl SunPosDistribution {
    pub fn from_probs(probs: Vec<f64>) -> Result<Self> {
        if probs.len() != SUN_ELEV_BINS * SUN_AZ_BINS {
            return Err(Error::Validation(format!(
                "distribution length {} != {}",
                probs.len(),
                SUN_ELEV_BINS * SUN_AZ_BINS
            )));
        }
        if probs.iter().any(|p| !p.is_finite() || *p < 0.0) {
            return Err(Error::Validation("negative or non-finite probability".into()));
        }
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > 1e-6 {
            return Err(Error::Validation(format!("probabilities sum to {sum}")));
        }
        Ok(SunPosDistribution { probs })
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn prob(&self, elev_bin: usize, az_bin: usize) -> f64 {
        self.probs[elev_bin * SUN_AZ_BINS + az_bin]
    }

    pub fn argmax(&self) -> (usize, usize) {
        let (i, _) = self
            .probs
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.total_cmp(b.1))
            .unwrap();
        (i / SUN_AZ_BINS, i % SUN_AZ_BINS)
    }
}

/// Bin index of a sun position: elevation in [0, pi/2] over 16 rows,
/// azimuth in [0, 2*pi) over 64 columns.
pub fn sun_position_bin(sun: &SunPosition) -> (usize, usize) {
    let e = (sun.elevation() / FRAC_PI_2 * SUN_ELEV_BINS as f64).floor() as usize;
    let a = (sun.azimuth() / TAU * SUN_AZ_BINS as f64).floor() as usize;
    (e.min(SUN_ELEV_BINS - 1), a.min(SUN_AZ_BINS - 1))
}

/// Direction at the center of a sun-position bin.
pub fn sun_bin_center(elev_bin: usize, az_bin: usize) -> SunPosition {
    let elevation = (elev_bin as f64 + 0.5) / SUN_ELEV_BINS as f64 * FRAC_PI_2;
    let azimuth = (az_bin as f64 + 0.5) / SUN_AZ_BINS as f64 * TAU;
    SunPosition::new(FRAC_PI_2 - elevation, azimuth).expect("bin center above horizon")
}

/// Place a Gaussian bump (sigma in bin units) at the sun's bin, with
/// azimuthal wrap, normalized to sum 1. Sigma 0 gives a one-hot distribution.
pub fn bin_sun_position(sun: &SunPosition, smoothing_sigma: f64) -> SunPosDistribution {
    let (e0, a0) = sun_position_bin(sun);
    let mut probs = vec![0.0; SUN_ELEV_BINS * SUN_AZ_BINS];
    if smoothing_sigma <= 0.0 {
        probs[e0 * SUN_AZ_BINS + a0] = 1.0;
        return SunPosDistribution { probs };
    }
    let inv2s2 = 1.0 / (2.0 * smoothing_sigma * smoothing_sigma);
    for e in 0..SUN_ELEV_BINS {
        for a in 0..SUN_AZ_BINS {
            let de = e as f64 - e0 as f64;
            let da_raw = (a as i64 - a0 as i64).rem_euclid(SUN_AZ_BINS as i64);
            let da = da_raw.min(SUN_AZ_BINS as i64 - da_raw) as f64;
            probs[e * SUN_AZ_BINS + a] = (-(de * de + da * da) * inv2s2).exp();
        }
    }
    let sum: f64 = probs.iter().sum();
    for p in &mut probs {
        *p /= sum;
    }
    SunPosDistribution { probs }
}

pub const KL_EPS: f64 = 1e-12;

/// KL divergence sum(target * log(target / max(pred, eps))).
pub fn kl_divergence(target: &SunPosDistribution, pred: &SunPosDistribution, eps: f64) -> f64 {
    kl_divergence_raw(&target.probs, &pred.probs, eps)
}

/// KL divergence for arbitrary same-length histograms.
pub fn kl_divergence_raw(target: &[f64], pred: &[f64], eps: f64) -> f64 {
    target
        .iter()
        .zip(pred)
        .map(|(t, p)| {
            if *t <= 0.0 || t == p {
                0.0
            } else {
                t * (t / p.max(eps)).ln()
            }
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{SkyParams, SunParams};
    use approx::assert_relative_eq;

    fn params(beta: f64, kappa: f64, t: f64, w_sun: f64, w_sky: f64) -> LmParams {
        LmParams {
            sun_pos: SunPosition::new(0.6, 1.0).unwrap(),
            sun: SunParams::new([w_sun; 3], beta, kappa).unwrap(),
            sky: SkyParams::new([w_sky; 3], t).unwrap(),
        }
    }

    #[test]
    fn pano_l1_basics() {
        let a = EnvMap::from_data(8, 4, vec![0.5; 96]).unwrap();
        let b = EnvMap::from_data(8, 4, vec![0.7; 96]).unwrap();
        assert_eq!(pano_l1(&a, &a).unwrap(), 0.0);
        assert_relative_eq!(pano_l1(&a, &b).unwrap(), 0.2, epsilon = 1e-6);
        assert_relative_eq!(
            pano_l1(&a, &b).unwrap(),
            pano_l1(&b, &a).unwrap(),
            epsilon = 1e-12
        );
    }

    #[test]
    fn pano_l1_dimension_mismatch() {
        let a = EnvMap::zeros(4);
        let b = EnvMap::zeros(8);
        assert!(pano_l1(&a, &b).is_err());
    }

    #[test]
    fn elevation_l2_basics() {
        assert_eq!(elevation_l2(0.5, 0.5), 0.0);
        assert_relative_eq!(elevation_l2(0.5, 0.2), 0.09, epsilon = 1e-12);
        assert!(elevation_l2(-0.1, 0.4) >= 0.0);
    }

    #[test]
    fn param_losses_zero_at_equality() {
        let q = params(40.0, 0.1, 3.0, 10.0, 1.0);
        let loss =
            param_losses(&q, &q, &ParamRanges::default(), &LossWeights::default()).unwrap();
        assert_eq!(loss, 0.0);
    }

    #[test]
    fn param_losses_beta_weight_is_ten() {
        let ranges = ParamRanges::default();
        let a = params(40.0, 0.1, 3.0, 10.0, 1.0);
        let b = params(60.0, 0.1, 3.0, 10.0, 1.0);
        let d = (60.0 - 40.0) / 200.0;
        let loss = param_losses(&a, &b, &ranges, &LossWeights::default()).unwrap();
        assert_relative_eq!(loss, 10.0 * d * d, epsilon = 1e-12);
    }

    #[test]
    fn param_losses_kappa_weight_is_five() {
        let ranges = ParamRanges::default();
        let a = params(40.0, 0.1, 3.0, 10.0, 1.0);
        let b = params(40.0, 0.3, 3.0, 10.0, 1.0);
        let d = (0.3 - 0.1) / (2.0 - 0.001);
        let loss = param_losses(&a, &b, &ranges, &LossWeights::default()).unwrap();
        assert_relative_eq!(loss, 5.0 * d * d, epsilon = 1e-12);
    }

    #[test]
    fn param_losses_rejects_out_of_range() {
        let ranges = ParamRanges::default();
        let a = params(40.0, 0.1, 3.0, 10.0, 1.0);
        let b = params(500.0, 0.1, 3.0, 10.0, 1.0);
        assert!(param_losses(&a, &b, &ranges, &LossWeights::default()).is_err());
    }

    #[test]
    fn param_losses_increases_with_distance() {
        let ranges = ParamRanges::default();
        let w = LossWeights::default();
        let a = params(40.0, 0.1, 3.0, 10.0, 1.0);
        let near = params(50.0, 0.1, 3.0, 10.0, 1.0);
        let far = params(80.0, 0.1, 3.0, 10.0, 1.0);
        let l_near = param_losses(&a, &near, &ranges, &w).unwrap();
        let l_far = param_losses(&a, &far, &ranges, &w).unwrap();
        assert!(l_far > l_near && l_near > 0.0);
    }

    #[test]
    fn one_hot_binning() {
        let sun = SunPosition::new(0.6, 1.0).unwrap();
        let d = bin_sun_position(&sun, 0.0);
        let (e, a) = sun_position_bin(&sun);
        assert_eq!(d.prob(e, a), 1.0);
        assert_relative_eq!(d.probs().iter().sum::<f64>(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn gaussian_binning_sums_to_one() {
        let sun = SunPosition::new(0.6, 1.0).unwrap();
        let d = bin_sun_position(&sun, 1.0);
        assert_relative_eq!(d.probs().iter().sum::<f64>(), 1.0, epsilon = 1e-9);
        let (e, a) = sun_position_bin(&sun);
        assert_eq!(d.argmax(), (e, a));
    }

    #[test]
    fn binning_shift_equivariance() {
        let bin_width = TAU / SUN_AZ_BINS as f64;
        let sun_a = SunPosition::new(0.6, 1.0).unwrap();
        let sun_b = SunPosition::new(0.6, 1.0 + bin_width).unwrap();
        let da = bin_sun_position(&sun_a, 1.0);
        let db = bin_sun_position(&sun_b, 1.0);
        for e in 0..SUN_ELEV_BINS {
            for a in 0..SUN_AZ_BINS {
                let shifted = (a + 1) % SUN_AZ_BINS;
                assert_relative_eq!(da.prob(e, a), db.prob(e, shifted), epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn kl_zero_iff_equal_and_nonnegative() {
        let sun = SunPosition::new(0.6, 1.0).unwrap();
        let d = bin_sun_position(&sun, 1.0);
        assert_eq!(kl_divergence(&d, &d, KL_EPS), 0.0);
        let other = bin_sun_position(&SunPosition::new(0.9, 2.0).unwrap(), 1.0);
        assert!(kl_divergence(&d, &other, KL_EPS) > 0.0);
    }

    #[test]
    fn kl_one_hot_closed_form() {
        let sun = SunPosition::new(0.6, 1.0).unwrap();
        let one_hot = bin_sun_position(&sun, 0.0);
        let pred = bin_sun_position(&sun, 1.5);
        let (e, a) = sun_position_bin(&sun);
        let p = pred.prob(e, a);
        assert_relative_eq!(
            kl_divergence(&one_hot, &pred, KL_EPS),
            -p.ln(),
            epsilon = 1e-12
        );
    }
}
