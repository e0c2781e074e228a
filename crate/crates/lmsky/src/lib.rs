//! Parametric outdoor illumination: the Lalonde-Matthews sun/sky model,
//! equirectangular environment maps, a precomputed light-transport probe
//! renderer, and nonlinear fitting of model parameters to panoramas.
//!
//! The model describes outdoor lighting with eleven numbers: a sun
//! direction, a sun lobe (color `w_sun`, shape `beta`/`kappa`), and a
//! Perez-based sky (color `w_sky`, turbidity `t`). Evaluate it per
//! direction or render it into a 2:1 equirectangular map:
//!
//! ```
//! use lmsky::model::{LmParams, SunPosition, SunParams, SkyParams, eval_lm, render_envmap};
//! use lmsky::geom::Vec3;
//!
//! let params = LmParams {
//!     sun_pos: SunPosition::new(0.6, 1.0)?,
//!     sun: SunParams { w_sun: [20.0, 18.0, 15.0], beta: 80.0, kappa: 0.05 },
//!     sky: SkyParams { w_sky: [0.6, 0.8, 1.2], turbidity: 2.5 },
//! };
//!
//! // Radiance toward the sun is dominated by the sun lobe...
//! let toward_sun = eval_lm(params.sun_pos.direction(), &params)?;
//! // ...while the zenith sees only sky, whose value is exactly w_sky
//! // because the sky term is normalized to 1 at the zenith.
//! let zenith = eval_lm(Vec3::new(0.0, 1.0, 0.0), &params)?;
//! assert!(toward_sun[0] > zenith[0]);
//! assert!((zenith[2] - params.sky.w_sky[2]).abs() < 1e-12);
//!
//! // Below the horizon the model is zero.
//! let below = eval_lm(Vec3::new(0.0, -1.0, 0.0), &params)?;
//! assert_eq!(below, [0.0, 0.0, 0.0]);
//!
//! let env = render_envmap(&params, 64)?;
//! assert_eq!((env.width(), env.height()), (128, 64));
//! # Ok::<(), lmsky::Error>(())
//! ```
//!
//! A probe render turns an environment map into a 64x64 top-down image of
//! a diffuse sphere on a plane, via a precomputed transport matrix that is
//! linear in the lighting:
//!
//! ```
//! use lmsky::transport::{ProbeScene, build_transport, render_probe};
//! use lmsky::envmap::EnvMap;
//!
//! let scene = ProbeScene { render_size: 16, ..ProbeScene::default() };
//! let transport = build_transport(&scene, 16)?;
//!
//! // Uniform unit-radiance sky: every visible plane pixel integrates to ~1.
//! let sky = EnvMap::from_data(32, 16, {
//!     let mut d = vec![0.0f32; 32 * 16 * 3];
//!     for v in 0..8 { for u in 0..32 { for c in 0..3 {
//!         d[(v * 32 + u) * 3 + c] = 1.0;
//!     }}}
//!     d
//! })?;
//! let img = render_probe(&transport, &sky)?;
//! let corner = img.pixel(0, 0);
//! assert!((corner[0] - 1.0).abs() < 0.05);
//! # Ok::<(), lmsky::Error>(())
//! ```
//!
//! Fitting recovers the radiometric parameters from an HDR panorama by
//! matching probe renders; see [`fit::fit_lm_to_hdr`]. Evaluation metrics
//! (RMSE, scale-invariant RMSE, sun angular error, shadow-softness
//! buckets) live in [`metrics`].

pub mod envmap;
pub mod error;
pub mod fit;
pub mod geom;
pub mod io;
pub mod losses;
pub mod metrics;
pub mod model;
pub mod optim;
pub mod transport;

pub use error::{Error, Result};
pub use model::{LmParams, SkyParams, SunParams, SunPosition};
