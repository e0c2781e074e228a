//! `lmsky` — render, simulate, detect, crop, fit, label, and evaluate the
//! parametric sun/sky model. One invocation is one deterministic job; all
//! randomness flows from the per-command seed.

use clap::{Args, Parser, Subcommand};
use lmsky::envmap::{
    center_azimuth, detect_sun, extract_crop_ldr, ldr_simulate, make_crop_set, roll_to_center,
    LdrImage, Rounding, DEFAULT_SATURATION_THRESHOLD,
};
use lmsky::fit::{fit_lm_to_hdr, fit_sky_to_ldr, label_dataset, FitConfig, LabelRecord};
use lmsky::io::{read_pfm, read_pfm_render, read_png, tonemap, write_pfm, write_pfm_render, write_png};
use lmsky::losses::{sun_position_bin, LossWeights, ParamRanges};
use lmsky::metrics::{
    bucketed_report, EvalPair, SoftnessClassifier, SoftnessConfig, SOFTNESS_SUN_AZIMUTH,
};
use lmsky::model::{render_envmap, LmParams, SunPosition};
use lmsky::transport::{load_or_build, render_probe, ProbeScene, TransportMatrix};
use lmsky::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::path::{Path, PathBuf};

const DISPLAY_GAMMA: f64 = 2.2;

#[derive(Parser)]
#[command(name = "lmsky", version, about = "Parametric outdoor illumination pipeline")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Flags shared by transport-backed commands.
#[derive(Args, Clone)]
struct TransportArgs {
    /// Directory for cached transport matrices (built on miss).
    #[arg(long, default_value = ".lmsky-cache")]
    cache_dir: PathBuf,
    /// Probe render resolution (pixels per side).
    #[arg(long, default_value_t = 64)]
    render_size: usize,
}

impl TransportArgs {
    fn load(&self, env_height: usize) -> Result<TransportMatrix> {
        let scene = ProbeScene {
            render_size: self.render_size,
            ..ProbeScene::default()
        };
        let (t, rebuilt) = load_or_build(&self.cache_dir, &scene, env_height)?;
        if rebuilt {
            eprintln!(
                "warning: transport cache miss; rebuilt {}x{} matrix",
                self.render_size, env_height
            );
        }
        Ok(t)
    }
}

/// Fit flags; precedence is flags > config file > built-in defaults.
#[derive(Args, Clone)]
struct FitArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    restarts: Option<usize>,
    #[arg(long)]
    max_iterations: Option<usize>,
    /// JSON file with optional "ranges" (ParamRanges) and "weights"
    /// (LossWeights) overrides.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Deserialize, Default)]
struct FileConfig {
    ranges: Option<ParamRanges>,
    weights: Option<LossWeights>,
    restarts: Option<usize>,
    max_iterations: Option<usize>,
}

impl FitArgs {
    fn build(&self) -> Result<FitConfig> {
        let mut cfg = FitConfig::default();
        let file: FileConfig = match &self.config {
            Some(p) => {
                let text = std::fs::read_to_string(p).map_err(|e| Error::io(p, e))?;
                serde_json::from_str(&text)?
            }
            None => FileConfig::default(),
        };
        if let Some(r) = file.ranges {
            cfg.ranges = r;
        }
        if let Some(w) = file.weights {
            cfg.weights = w;
        }
        if let Some(n) = file.restarts {
            cfg.restarts = n;
        }
        if let Some(n) = file.max_iterations {
            cfg.max_iterations = n;
        }
        if let Some(n) = self.restarts {
            cfg.restarts = n;
        }
        if let Some(n) = self.max_iterations {
            cfg.max_iterations = n;
        }
        cfg.seed = self.seed;
        cfg.validate()?;
        Ok(cfg)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Render model parameters into an equirectangular HDR map (PFM).
    Render {
        /// Path to a parameters JSON file.
        #[arg(long)]
        params: PathBuf,
        /// Envmap height in texels (width is twice this).
        #[arg(long, default_value_t = 64)]
        height: usize,
        #[arg(long)]
        out: PathBuf,
        /// Also write a gamma-2.2 tonemapped PNG here.
        #[arg(long)]
        preview: Option<PathBuf>,
    },
    /// Render the diffuse sphere-on-plane probe under an envmap or params.
    Probe {
        /// HDR panorama input (PFM). Mutually exclusive with --params.
        #[arg(long, conflicts_with = "params")]
        env: Option<PathBuf>,
        #[arg(long)]
        params: Option<PathBuf>,
        /// Envmap height when rendering from --params.
        #[arg(long, default_value_t = 64)]
        height: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        preview: Option<PathBuf>,
        #[command(flatten)]
        transport: TransportArgs,
    },
    /// Simulate an LDR capture of an HDR panorama (clip + quantize).
    LdrSim {
        /// HDR panorama (PFM).
        #[arg(long)]
        input: PathBuf,
        /// Fixed exposure factor.
        #[arg(long, conflicts_with = "exposure_range")]
        exposure: Option<f64>,
        /// Log-uniform exposure range "LO,HI"; drawn with --seed.
        #[arg(long, value_delimiter = ',', num_args = 2)]
        exposure_range: Option<Vec<f64>>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Gamma-encode (1/2.2) before quantizing; loss targets leave this off.
        #[arg(long)]
        gamma: bool,
        /// Output PNG; a sidecar <out>.json records the exposure used.
        #[arg(long)]
        out: PathBuf,
    },
    /// Extract random limited-field-of-view crops from a panorama.
    Crop {
        /// LDR panorama (PNG).
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 7)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Horizontal field of view in degrees.
        #[arg(long, default_value_t = 60.0)]
        fov_deg: f64,
        /// Camera elevation in degrees.
        #[arg(long, default_value_t = 0.0)]
        elevation_deg: f64,
        /// Directory for crop_###.png plus crops.json.
        #[arg(long)]
        out_dir: PathBuf,
    },
    /// Detect the sun as the largest saturated region of an LDR panorama.
    SunDetect {
        /// LDR panorama (PNG) or HDR panorama (PFM, clipped at exposure 1).
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SATURATION_THRESHOLD)]
        threshold: u8,
        /// Write the JSON result here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify shadow softness of a probe render (or of rendered params).
    Softness {
        /// Probe render (PFM). Mutually exclusive with --params.
        #[arg(long, conflicts_with = "params")]
        render: Option<PathBuf>,
        #[arg(long)]
        params: Option<PathBuf>,
        #[arg(long, default_value_t = 64)]
        height: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        transport: TransportArgs,
    },
    /// Fit all model parameters to an HDR panorama.
    FitHdr {
        /// HDR panorama (PFM).
        #[arg(long)]
        input: PathBuf,
        /// Output JSON (fitted parameters + diagnostics).
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        fit: FitArgs,
        #[command(flatten)]
        transport: TransportArgs,
    },
    /// Fit sky parameters only to an LDR panorama.
    FitSkyLdr {
        /// LDR panorama (PNG).
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        fit: FitArgs,
        #[command(flatten)]
        transport: TransportArgs,
    },
    /// Fit every .pfm panorama in a directory; write JSONL records.
    Label {
        #[arg(long)]
        dir: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        fit: FitArgs,
    },
    /// Score fitted labels against ground-truth panoramas.
    Eval {
        /// JSONL produced by `label`.
        #[arg(long)]
        labels: PathBuf,
        /// Directory holding the ground-truth .pfm panoramas.
        #[arg(long)]
        gt_dir: PathBuf,
        /// Output report JSON; an aligned table is printed to stdout.
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        transport: TransportArgs,
    },
}

fn read_params(path: &Path) -> Result<LmParams> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    Ok(serde_json::from_str(&text)?)
}

fn write_json<T: Serialize>(value: &T, path: &Path) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    std::fs::write(path, text).map_err(|e| Error::io(path, e))
}

fn write_preview(width: usize, height: usize, data: &[f32], path: &Path) -> Result<()> {
    write_png(&tonemap(width, height, data, DISPLAY_GAMMA), path)
}

/// LDR view of a panorama for sun detection: PNGs load directly, PFMs go
/// through the exposure-1, linear clip-and-quantize simulation.
fn load_ldr_view(path: &Path) -> Result<LdrImage> {
    match path.extension().and_then(|e| e.to_str()) {
        Some("pfm") => ldr_simulate(&read_pfm(path)?, 1.0, false, Rounding::HalfUp),
        _ => read_png(path),
    }
}

#[derive(Serialize)]
struct SunDetectReport {
    detected: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    zenith: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    azimuth: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    elevation_bin: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    azimuth_bin: Option<usize>,
}

#[derive(Serialize)]
struct SoftnessReport {
    kl: f64,
    bucket: u8,
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Render {
            params,
            height,
            out,
            preview,
        } => {
            let p = read_params(&params)?;
            let env = render_envmap(&p, height)?;
            write_pfm(&env, &out)?;
            if let Some(prev) = preview {
                write_preview(env.width(), env.height(), env.data(), &prev)?;
            }
        }
        Command::Probe {
            env,
            params,
            height,
            out,
            preview,
            transport,
        } => {
            let envmap = match (env, params) {
                (Some(path), None) => read_pfm(&path)?,
                (None, Some(path)) => render_envmap(&read_params(&path)?, height)?,
                _ => {
                    return Err(Error::InvalidInput(
                        "exactly one of --env or --params is required".into(),
                    ))
                }
            };
            let t = transport.load(envmap.height())?;
            let img = render_probe(&t, &envmap)?;
            write_pfm_render(&img, &out)?;
            if let Some(prev) = preview {
                write_preview(img.width, img.height, &img.data, &prev)?;
            }
        }
        Command::LdrSim {
            input,
            exposure,
            exposure_range,
            seed,
            gamma,
            out,
        } => {
            let env = read_pfm(&input)?;
            let e = match (exposure, exposure_range) {
                (Some(e), None) => e,
                (None, Some(range)) => {
                    let (lo, hi) = (range[0], range[1]);
                    if !(lo > 0.0 && hi > lo) {
                        return Err(Error::InvalidInput(format!(
                            "exposure range must satisfy 0 < lo < hi, got [{lo}, {hi}]"
                        )));
                    }
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    (rng.gen_range(lo.ln()..hi.ln())).exp()
                }
                (None, None) => 1.0,
                _ => unreachable!("clap conflicts_with"),
            };
            let img = ldr_simulate(&env, e, gamma, Rounding::HalfUp)?;
            write_png(&img, &out)?;
            let sidecar = out.with_extension("png.json");
            write_json(&serde_json::json!({ "exposure": e, "gamma": gamma }), &sidecar)?;
        }
        Command::Crop {
            input,
            count,
            seed,
            fov_deg,
            elevation_deg,
            out_dir,
        } => {
            let pano = read_png(&input)?;
            std::fs::create_dir_all(&out_dir).map_err(|e| Error::io(&out_dir, e))?;
            let specs = make_crop_set(
                seed,
                count,
                fov_deg.to_radians(),
                elevation_deg.to_radians(),
            );
            for (i, spec) in specs.iter().enumerate() {
                let crop = extract_crop_ldr(&pano, spec)?;
                write_png(&crop, &out_dir.join(format!("crop_{i:03}.png")))?;
            }
            write_json(&specs, &out_dir.join("crops.json"))?;
        }
        Command::SunDetect {
            input,
            threshold,
            out,
        } => {
            let ldr = load_ldr_view(&input)?;
            let report = match detect_sun(&ldr, threshold) {
                Some(pos) => {
                    let (eb, ab) = sun_position_bin(&pos);
                    SunDetectReport {
                        detected: true,
                        zenith: Some(pos.zenith_angle()),
                        azimuth: Some(pos.azimuth()),
                        elevation_bin: Some(eb),
                        azimuth_bin: Some(ab),
                    }
                }
                None => SunDetectReport {
                    detected: false,
                    zenith: None,
                    azimuth: None,
                    elevation_bin: None,
                    azimuth_bin: None,
                },
            };
            match out {
                Some(path) => write_json(&report, &path)?,
                None => println!("{}", serde_json::to_string_pretty(&report)?),
            }
        }
        Command::Softness {
            render,
            params,
            height,
            out,
            transport,
        } => {
            let scene = ProbeScene {
                render_size: transport.render_size,
                ..ProbeScene::default()
            };
            let t = transport.load(height)?;
            let classifier = SoftnessClassifier::new(&scene, &t, SoftnessConfig::default())?;
            let img = match (render, params) {
                (Some(path), None) => read_pfm_render(&path)?,
                (None, Some(path)) => {
                    let p = read_params(&path)?;
                    render_probe(&t, &render_envmap(&p, height)?)?
                }
                _ => {
                    return Err(Error::InvalidInput(
                        "exactly one of --render or --params is required".into(),
                    ))
                }
            };
            let (kl, bucket) = classifier.classify(&img)?;
            let report = SoftnessReport { kl, bucket };
            match out {
                Some(path) => write_json(&report, &path)?,
                None => println!("{}", serde_json::to_string_pretty(&report)?),
            }
        }
        Command::FitHdr {
            input,
            out,
            fit,
            transport,
        } => {
            let env = read_pfm(&input)?;
            let cfg = fit.build()?;
            let t = transport.load(env.height())?;
            let result = fit_lm_to_hdr(&t, &env, None, &cfg)?;
            write_json(&result, &out)?;
        }
        Command::FitSkyLdr {
            input,
            out,
            fit,
            transport,
        } => {
            let ldr = read_png(&input)?;
            let cfg = fit.build()?;
            let t = transport.load(ldr.height)?;
            let sun_pos = detect_sun(&ldr, DEFAULT_SATURATION_THRESHOLD)
                .unwrap_or(SunPosition::new(std::f64::consts::FRAC_PI_4, 0.0)?);
            let result = fit_sky_to_ldr(&t, &ldr, sun_pos, &cfg)?;
            write_json(&result, &out)?;
        }
        Command::Label { dir, out, fit } => {
            let cfg = fit.build()?;
            let n = label_dataset(&dir, &cfg, &out)?;
            let text = std::fs::read_to_string(&out).map_err(|e| Error::io(&out, e))?;
            let warnings = text
                .lines()
                .skip(1)
                .filter(|l| l.contains("\"error\""))
                .count();
            println!("labeled {n} panoramas ({warnings} warnings) -> {}", out.display());
        }
        Command::Eval {
            labels,
            gt_dir,
            out,
            transport,
        } => {
            return cmd_eval(&labels, &gt_dir, &out, &transport);
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct EvalRecord {
    file: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    rmse: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    si_rmse: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    bucket: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

fn cmd_eval(labels: &Path, gt_dir: &Path, out: &Path, transport: &TransportArgs) -> Result<i32> {
    let text = std::fs::read_to_string(labels).map_err(|e| Error::io(labels, e))?;
    let records: Vec<LabelRecord> = text
        .lines()
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(serde_json::from_str)
        .collect::<std::result::Result<_, _>>()?;

    let scene = ProbeScene {
        render_size: transport.render_size,
        ..ProbeScene::default()
    };
    let mut pairs = Vec::new();
    let mut entries = Vec::new();
    let mut warnings = 0usize;
    let mut transports: std::collections::HashMap<usize, (TransportMatrix, SoftnessClassifier)> =
        std::collections::HashMap::new();

    for rec in &records {
        let mut push_err = |msg: String, warnings: &mut usize| {
            *warnings += 1;
            entries.push(EvalRecord {
                file: rec.file.clone(),
                rmse: None,
                si_rmse: None,
                bucket: None,
                error: Some(msg),
            });
        };
        if let Some(e) = &rec.error {
            push_err(format!("label record error: {e}"), &mut warnings);
            continue;
        }
        let Some(params) = &rec.params else {
            push_err("label record has no parameters".into(), &mut warnings);
            continue;
        };
        let gt_path = gt_dir.join(&rec.file);
        let gt = match read_pfm(&gt_path) {
            Ok(g) => g,
            Err(e) => {
                push_err(e.to_string(), &mut warnings);
                continue;
            }
        };
        let h = gt.height();
        if !transports.contains_key(&h) {
            let t = transport.load(h)?;
            let c = SoftnessClassifier::new(&scene, &t, SoftnessConfig::default())?;
            transports.insert(h, (t, c));
        }
        let (t, classifier) = &transports[&h];
        let gt_render = render_probe(t, &gt)?;
        let pred_render = render_probe(t, &render_envmap(params, h)?)?;
        let rmse_v = lmsky::metrics::rmse(&gt_render, &pred_render)?;
        let si_v = lmsky::metrics::si_rmse(&gt_render, &pred_render)?;
        // Softness of the ground truth, with the sun rolled to the azimuth
        // whose shadow falls inside the classifier band.
        let ldr = ldr_simulate(&gt, 1.0, false, Rounding::HalfUp)?;
        let sun_az = detect_sun(&ldr, DEFAULT_SATURATION_THRESHOLD)
            .map(|p| p.azimuth())
            .unwrap_or(SOFTNESS_SUN_AZIMUTH);
        let rolled = roll_to_center(
            &gt,
            sun_az - SOFTNESS_SUN_AZIMUTH + center_azimuth(gt.width()),
        );
        let (_, bucket) = classifier.classify(&render_probe(t, &rolled)?)?;
        entries.push(EvalRecord {
            file: rec.file.clone(),
            rmse: Some(rmse_v),
            si_rmse: Some(si_v),
            bucket: Some(bucket),
            error: None,
        });
        pairs.push(EvalPair {
            gt: gt_render,
            pred: pred_render,
            bucket,
        });
    }

    if pairs.is_empty() {
        return Err(Error::EmptyInput(
            "no label record could be evaluated".into(),
        ));
    }
    let report = bucketed_report(&pairs)?;
    print!("{}", report.to_table());
    if warnings > 0 {
        eprintln!("warning: {warnings} record(s) skipped");
    }
    write_json(
        &serde_json::json!({ "report": report, "records": entries }),
        out,
    )?;
    Ok(0)
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(1);
        }
    }
}
