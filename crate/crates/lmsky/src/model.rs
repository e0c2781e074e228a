//! The Lalonde-Matthews parametric outdoor illumination model.
//!
//! Radiance toward a sky direction is the sum of a sun lobe (a double
//! exponential in the angle to the sun) and a sky dome (the Preetham
//! luminance ratio scaled channel-wise by a zenith sky color). All radiance
//! is linear RGB; all angles are radians. Below the horizon the model is
//! zero.

use crate::error::{Error, Result};
use crate::geom::{wrap_azimuth, Vec3};
use serde::{Deserialize, Serialize};
use std::f64::consts::{FRAC_PI_2, PI};

pub type Rgb = [f64; 3];

/// Valid turbidity range; the Perez coefficient fits are calibrated here.
pub const TURBIDITY_MIN: f64 = 1.0;
pub const TURBIDITY_MAX: f64 = 20.0;

/// Clamp floor for kappa/gamma in the sun lobe.
const GAMMA_EPS: f64 = 1e-6;
/// Clamp floor for cos(theta) in the Perez horizon term.
const COS_EPS: f64 = 1e-6;

/// Sun direction in spherical coordinates. Zenith angle is measured from
/// straight up, so the sun is at or above the horizon iff zenith <= pi/2.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SunPosition {
    zenith: f64,
    azimuth: f64,
}

impl SunPosition {
    pub fn new(zenith_angle: f64, azimuth: f64) -> Result<Self> {
        if !(0.0..=FRAC_PI_2).contains(&zenith_angle) {
            return Err(Error::InvalidInput(format!(
                "sun zenith angle {zenith_angle} outside [0, pi/2]"
            )));
        }
        if !azimuth.is_finite() {
            return Err(Error::InvalidInput("non-finite sun azimuth".into()));
        }
        Ok(SunPosition {
            zenith: zenith_angle,
            azimuth: wrap_azimuth(azimuth),
        })
    }

    pub fn zenith_angle(&self) -> f64 {
        self.zenith
    }

    pub fn azimuth(&self) -> f64 {
        self.azimuth
    }

    /// Elevation above the horizon, pi/2 - zenith.
    pub fn elevation(&self) -> f64 {
        FRAC_PI_2 - self.zenith
    }

    pub fn direction(&self) -> Vec3 {
        Vec3::from_spherical(self.zenith, self.azimuth)
    }

    pub fn from_direction(dir: Vec3) -> Result<Self> {
        SunPosition::new(dir.zenith().min(FRAC_PI_2), dir.azimuth())
    }
}

/// Sky dome parameters: zenith color and atmospheric turbidity.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SkyParams {
    pub w_sky: Rgb,
    pub turbidity: f64,
}

impl SkyParams {
    pub fn new(w_sky: Rgb, turbidity: f64) -> Result<Self> {
        let p = SkyParams { w_sky, turbidity };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if self.w_sky.iter().any(|c| !c.is_finite() || *c < 0.0) {
            return Err(Error::InvalidInput(format!(
                "w_sky {:?} must be finite and >= 0",
                self.w_sky
            )));
        }
        check_turbidity(self.turbidity)
    }
}

/// Sun lobe parameters: mean sun color and the two shape parameters.
/// Large beta with small kappa gives a concentrated disc; small beta a
/// broad glow.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SunParams {
    pub w_sun: Rgb,
    pub beta: f64,
    pub kappa: f64,
}

impl SunParams {
    pub fn new(w_sun: Rgb, beta: f64, kappa: f64) -> Result<Self> {
        let p = SunParams { w_sun, beta, kappa };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if self.w_sun.iter().any(|c| !c.is_finite() || *c < 0.0) {
            return Err(Error::InvalidInput(format!(
                "w_sun {:?} must be finite and >= 0",
                self.w_sun
            )));
        }
        if !self.beta.is_finite() || self.beta < 0.0 {
            return Err(Error::InvalidInput(format!(
                "beta {} must be >= 0",
                self.beta
            )));
        }
        if !self.kappa.is_finite() || self.kappa <= 0.0 {
            return Err(Error::InvalidInput(format!(
                "kappa {} must be > 0",
                self.kappa
            )));
        }
        Ok(())
    }
}

/// The full 11-parameter model: sun position (2), sun color and shape
/// (3 + 2), sky color and turbidity (3 + 1).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "LmParamsRepr", into = "LmParamsRepr")]
pub struct LmParams {
    pub sun_pos: SunPosition,
    pub sun: SunParams,
    pub sky: SkyParams,
}

/// Flat JSON interchange form shared by every module and the CLI.
#[derive(Serialize, Deserialize)]
struct LmParamsRepr {
    sun_zenith: f64,
    sun_azimuth: f64,
    w_sun: Rgb,
    beta: f64,
    kappa: f64,
    w_sky: Rgb,
    turbidity: f64,
}

impl TryFrom<LmParamsRepr> for LmParams {
    type Error = Error;
    fn try_from(r: LmParamsRepr) -> Result<Self> {
        Ok(LmParams {
            sun_pos: SunPosition::new(r.sun_zenith, r.sun_azimuth)?,
            sun: SunParams::new(r.w_sun, r.beta, r.kappa)?,
            sky: SkyParams::new(r.w_sky, r.turbidity)?,
        })
    }
}

impl From<LmParams> for LmParamsRepr {
    fn from(p: LmParams) -> Self {
        LmParamsRepr {
            sun_zenith: p.sun_pos.zenith_angle(),
            sun_azimuth: p.sun_pos.azimuth(),
            w_sun: p.sun.w_sun,
            beta: p.sun.beta,
            kappa: p.sun.kappa,
            w_sky: p.sky.w_sky,
            turbidity: p.sky.turbidity,
        }
    }
}

fn check_turbidity(t: f64) -> Result<()> {
    if !(TURBIDITY_MIN..=TURBIDITY_MAX).contains(&t) {
        return Err(Error::InvalidInput(format!(
            "turbidity {t} outside [{TURBIDITY_MIN}, {TURBIDITY_MAX}]"
        )));
    }
    Ok(())
}

/// Angle between a unit direction and the sun direction, in [0, pi].
pub fn angle_to_sun(direction: Vec3, sun_pos: &SunPosition) -> Result<f64> {
    if (direction.norm() - 1.0).abs() > 1e-6 {
        return Err(Error::InvalidInput(format!(
            "direction {direction:?} is not unit length"
        )));
    }
    Ok(direction.dot(sun_pos.direction()).clamp(-1.0, 1.0).acos())
}

/// Sun lobe radiance: w_sun * exp(-beta * exp(-kappa / gamma)).
///
/// At gamma = 0 the inner exponential vanishes in the limit, so the exact
/// value w_sun is returned.
pub fn eval_sun(gamma_sun: f64, sun: &SunParams) -> Rgb {
    if gamma_sun <= 0.0 {
        return sun.w_sun;
    }
    let g = gamma_sun.max(GAMMA_EPS);
    let falloff = (-sun.beta * (-sun.kappa / g).exp()).exp();
    [
        sun.w_sun[0] * falloff,
        sun.w_sun[1] * falloff,
        sun.w_sun[2] * falloff,
    ]
}

/// Perez luminance coefficients as linear functions of turbidity
/// (Preetham's fit for the luminance channel).
fn perez_coefficients(t: f64) -> [f64; 5] {
    [
        0.1787 * t - 1.4630,
        -0.3554 * t + 0.4275,
        -0.0227 * t + 5.3251,
        0.1206 * t - 2.5771,
        -0.0670 * t + 0.3703,
    ]
}

fn perez_f(theta: f64, gamma: f64, [a, b, c, d, e]: [f64; 5]) -> f64 {
    (1.0 + a * (b / theta.cos().max(COS_EPS)).exp())
        * (1.0 + c * (d * gamma).exp() + e * gamma.cos().powi(2))
}

/// Zenith-normalized Perez luminance ratio F(theta, gamma) / F(0, sun_zenith).
///
/// Returns 0 below the horizon (zenith_angle > pi/2). The normalization makes
/// the ratio exactly 1 when evaluated at the zenith.
pub fn perez_ratio(
    zenith_angle: f64,
    gamma_sun: f64,
    sun_zenith: f64,
    turbidity: f64,
) -> Result<f64> {
    check_turbidity(turbidity)?;
    if zenith_angle > FRAC_PI_2 {
        return Ok(0.0);
    }
    let coeffs = perez_coefficients(turbidity);
    let ratio = perez_f(zenith_angle, gamma_sun, coeffs) / perez_f(0.0, sun_zenith, coeffs);
    Ok(ratio.max(0.0))
}

/// Sky dome radiance: w_sky times the Perez ratio, channel-wise.
/// w_sky is exactly the radiance at the zenith.
pub fn eval_sky(direction: Vec3, sky: &SkyParams, sun_pos: &SunPosition) -> Result<Rgb> {
    let gamma = angle_to_sun(direction, sun_pos)?;
    // At the zenith the sun angle is the sun's zenith angle by geometry;
    // using it directly makes the normalization identity exact instead of
    // within an ulp of the acos round trip.
    let gamma = if direction.y == 1.0 {
        sun_pos.zenith_angle()
    } else {
        gamma
    };
    let ratio = perez_ratio(
        direction.zenith(),
        gamma,
        sun_pos.zenith_angle(),
        sky.turbidity,
    )?;
    Ok([
        sky.w_sky[0] * ratio,
        sky.w_sky[1] * ratio,
        sky.w_sky[2] * ratio,
    ])
}

/// Full model radiance: sun lobe plus sky dome; zero below the horizon.
pub fn eval_lm(direction: Vec3, params: &LmParams) -> Result<Rgb> {
    if direction.zenith() > FRAC_PI_2 {
        // Hemispherical model: ground radiance is unmodeled.
        if (direction.norm() - 1.0).abs() > 1e-6 {
            return Err(Error::InvalidInput(format!(
                "direction {direction:?} is not unit length"
            )));
        }
        return Ok([0.0; 3]);
    }
    let gamma = angle_to_sun(direction, &params.sun_pos)?;
    let sun = eval_sun(gamma, &params.sun);
    let sky = eval_sky(direction, &params.sky, &params.sun_pos)?;
    Ok([sun[0] + sky[0], sun[1] + sky[1], sun[2] + sky[2]])
}

/// Rasterize the model into an equirectangular map of size height x 2*height.
/// Each texel holds the radiance at its center direction; rows below the
/// horizon are zero.
pub fn render_envmap(params: &LmParams, height: usize) -> Result<crate::envmap::EnvMap> {
    use rayon::prelude::*;

    if height < 4 || height % 2 != 0 {
        return Err(Error::InvalidInput(format!(
            "envmap height {height} must be even and >= 4"
        )));
    }
    let width = 2 * height;
    let rows: Vec<Vec<f32>> = (0..height)
        .into_par_iter()
        .map(|v| {
            let mut row = vec![0.0f32; width * 3];
            let theta = PI * (v as f64 + 0.5) / height as f64;
            if theta <= FRAC_PI_2 {
                for u in 0..width {
                    let dir = crate::envmap::texel_direction(u, v, width, height)
                        .expect("texel index in range");
                    let rgb = eval_lm(dir, params).expect("unit texel direction");
                    row[u * 3] = rgb[0] as f32;
                    row[u * 3 + 1] = rgb[1] as f32;
                    row[u * 3 + 2] = rgb[2] as f32;
                }
            }
            row
        })
        .collect();
    let data: Vec<f32> = rows.into_iter().flatten().collect();
    crate::envmap::EnvMap::from_data(width, height, data)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn sun_pos(zenith: f64, azimuth: f64) -> SunPosition {
        SunPosition::new(zenith, azimuth).unwrap()
    }

    #[test]
    fn angle_to_sun_identical_and_antipodal() {
        let sp = sun_pos(0.4, 1.0);
        let d = sp.direction();
        assert_relative_eq!(angle_to_sun(d, &sp).unwrap(), 0.0, epsilon = 1e-9);
        assert_relative_eq!(angle_to_sun(-d, &sp).unwrap(), PI, epsilon = 1e-9);
    }

    #[test]
    fn angle_to_sun_zenith_geometry() {
        let sp = sun_pos(0.0, 0.0);
        let d = Vec3::from_spherical(0.3, 2.0);
        assert_relative_eq!(angle_to_sun(d, &sp).unwrap(), 0.3, epsilon = 1e-9);
    }

    #[test]
    fn angle_to_sun_rejects_non_unit() {
        let sp = sun_pos(0.4, 1.0);
        assert!(angle_to_sun(Vec3::new(0.0, 2.0, 0.0), &sp).is_err());
    }

    #[test]
    fn eval_sun_limit_at_zero_gamma() {
        let sun = SunParams::new([3.0, 2.0, 1.0], 80.0, 0.01).unwrap();
        assert_eq!(eval_sun(0.0, &sun), [3.0, 2.0, 1.0]);
    }

    #[test]
    fn eval_sun_beta_zero_is_constant() {
        let sun = SunParams::new([1.0, 1.0, 1.0], 0.0, 0.5).unwrap();
        for g in [0.01, 0.5, 1.0, PI] {
            assert_eq!(eval_sun(g, &sun), [1.0, 1.0, 1.0]);
        }
    }

    // exp(-50 * exp(-0.5 / 0.1)) evaluated with 30-digit arithmetic.
    #[test]
    fn eval_sun_regression_value() {
        let sun = SunParams::new([1.0, 1.0, 1.0], 50.0, 0.5).unwrap();
        let v = eval_sun(0.1, &sun);
        assert_relative_eq!(v[0], 0.71398212643915, epsilon = 1e-12);
    }

    #[test]
    fn eval_sun_monotone_in_gamma() {
        let sun = SunParams::new([1.0, 1.0, 1.0], 60.0, 0.3).unwrap();
        let mut prev = f64::INFINITY;
        for i in 1..200 {
            let g = PI * i as f64 / 200.0;
            let v = eval_sun(g, &sun)[0];
            assert!(v <= prev + 1e-15, "not non-increasing at gamma={g}");
            prev = v;
        }
    }

    #[test]
    fn perez_ratio_is_one_at_zenith() {
        // At the zenith, gamma equals the sun zenith angle by geometry.
        let r = perez_ratio(0.0, 0.7, 0.7, 3.0).unwrap();
        assert_relative_eq!(r, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn perez_ratio_zero_below_horizon() {
        assert_eq!(perez_ratio(0.6 * PI, 0.5, 0.5, 3.0).unwrap(), 0.0);
    }

    // F(1.0, 0.8) / F(0, 0.7) at t = 2.5, evaluated independently with
    // 30-digit arithmetic.
    #[test]
    fn perez_ratio_regression_value() {
        let r = perez_ratio(1.0, 0.8, 0.7, 2.5).unwrap();
        assert_relative_eq!(r, 1.40728581047959, epsilon = 1e-12);
    }

    #[test]
    fn perez_ratio_rejects_bad_turbidity() {
        assert!(perez_ratio(0.5, 0.5, 0.5, 0.5).is_err());
        assert!(perez_ratio(0.5, 0.5, 0.5, 25.0).is_err());
    }

    #[test]
    fn eval_sky_zenith_identity() {
        let sky = SkyParams::new([0.4, 0.5, 0.9], 2.0).unwrap();
        let sp = sun_pos(0.7, 2.1);
        let up = Vec3::new(0.0, 1.0, 0.0);
        let v = eval_sky(up, &sky, &sp).unwrap();
        for c in 0..3 {
            assert_relative_eq!(v[c], sky.w_sky[c], epsilon = 1e-12);
        }
    }

    #[test]
    fn eval_sky_zero_scale() {
        let sky = SkyParams::new([0.0, 0.0, 0.0], 2.0).unwrap();
        let sp = sun_pos(0.7, 2.1);
        let d = Vec3::from_spherical(0.9, 0.3);
        assert_eq!(eval_sky(d, &sky, &sp).unwrap(), [0.0; 3]);
    }

    #[test]
    fn eval_sky_is_scaled_perez() {
        let sky = SkyParams::new([2.0, 3.0, 4.0], 2.5).unwrap();
        let sp = sun_pos(0.7, 0.0);
        let d = Vec3::from_spherical(1.0, 0.8);
        let gamma = angle_to_sun(d, &sp).unwrap();
        let ratio = perez_ratio(1.0, gamma, 0.7, 2.5).unwrap();
        let v = eval_sky(d, &sky, &sp).unwrap();
        for c in 0..3 {
            assert_relative_eq!(v[c], sky.w_sky[c] * ratio, epsilon = 1e-12);
        }
    }

    fn test_params() -> LmParams {
        LmParams {
            sun_pos: sun_pos(0.6, 1.2),
            sun: SunParams::new([20.0, 18.0, 15.0], 60.0, 0.05).unwrap(),
            sky: SkyParams::new([0.8, 0.9, 1.3], 2.8).unwrap(),
        }
    }

    #[test]
    fn eval_lm_is_sum_of_components() {
        let p = test_params();
        let d = Vec3::from_spherical(0.9, 1.0);
        let gamma = angle_to_sun(d, &p.sun_pos).unwrap();
        let sun = eval_sun(gamma, &p.sun);
        let sky = eval_sky(d, &p.sky, &p.sun_pos).unwrap();
        let lm = eval_lm(d, &p).unwrap();
        for c in 0..3 {
            assert_relative_eq!(lm[c], sun[c] + sky[c], epsilon = 1e-12);
        }
    }

    #[test]
    fn eval_lm_zero_below_horizon() {
        let p = test_params();
        let d = Vec3::from_spherical(2.0, 1.0);
        assert_eq!(eval_lm(d, &p).unwrap(), [0.0; 3]);
    }

    #[test]
    fn eval_lm_sun_only_at_sun() {
        let mut p = test_params();
        p.sky.w_sky = [0.0; 3];
        let lm = eval_lm(p.sun_pos.direction(), &p).unwrap();
        for c in 0..3 {
            assert_relative_eq!(lm[c], p.sun.w_sun[c], epsilon = 1e-9);
        }
    }

    #[test]
    fn render_envmap_zero_params() {
        let p = LmParams {
            sun_pos: sun_pos(0.3, 0.0),
            sun: SunParams::new([0.0; 3], 10.0, 0.1).unwrap(),
            sky: SkyParams::new([0.0; 3], 2.0).unwrap(),
        };
        let env = render_envmap(&p, 16).unwrap();
        assert!(env.data().iter().all(|v| *v == 0.0));
    }

    #[test]
    fn render_envmap_rejects_bad_height() {
        let p = test_params();
        assert!(render_envmap(&p, 3).is_err());
        assert!(render_envmap(&p, 7).is_err());
    }

    #[test]
    fn render_envmap_brightest_texel_is_sun() {
        let p = test_params();
        let env = render_envmap(&p, 64).unwrap();
        let (mut best_i, mut best) = (0usize, f64::NEG_INFINITY);
        for i in 0..env.width() * env.height() {
            let px = env.texel(i % env.width(), i / env.width());
            let lum = px[0] as f64 + px[1] as f64 + px[2] as f64;
            if lum > best {
                best = lum;
                best_i = i;
            }
        }
        let (u, v) = (best_i % env.width(), best_i / env.width());
        let d = crate::envmap::texel_direction(u, v, env.width(), env.height()).unwrap();
        let gamma = angle_to_sun(d, &p.sun_pos).unwrap();
        // Within one texel diagonal of the sun direction.
        let texel_diag = (PI / 64.0) * 1.5;
        assert!(gamma < texel_diag, "gamma={gamma}");
    }

    #[test]
    fn render_envmap_deterministic() {
        let p = test_params();
        let a = render_envmap(&p, 32).unwrap();
        let b = render_envmap(&p, 32).unwrap();
        assert_eq!(a.data(), b.data());
    }

    #[test]
    fn params_json_round_trip() {
        let p = test_params();
        let s = serde_json::to_string(&p).unwrap();
        assert!(s.contains("sun_zenith"));
        let q: LmParams = serde_json::from_str(&s).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn params_json_rejects_invalid() {
        let s = r#"{"sun_zenith": 2.0, "sun_azimuth": 0.0, "w_sun": [1,1,1],
                    "beta": 40.0, "kappa": 0.1, "w_sky": [1,1,1], "turbidity": 3.0}"#;
        assert!(serde_json::from_str::<LmParams>(s).is_err());
    }
}
