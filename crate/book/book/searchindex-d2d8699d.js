window.search = Object.assign(window.search, JSON.parse('{"doc_urls":["introduction.html#introduction","introduction.html#quick-start","introduction.html#building-and-testing","model.html#the-sun-and-sky-model","model.html#the-sun-lobe","model.html#the-sky-dome","model.html#identities-you-can-rely-on","model.html#rendering-to-an-environment-map","envmaps.html#environment-maps-and-panoramas","envmaps.html#equirectangular-geometry","envmaps.html#file-formats","envmaps.html#simulating-an-ldr-capture","envmaps.html#finding-the-sun","envmaps.html#pinhole-crops","envmaps.html#rolling-a-panorama","transport.html#the-probe-scene-and-light-transport","transport.html#linearity-and-the-transport-matrix","transport.html#scene-definition","transport.html#correctness-oracle","transport.html#caching","fitting.html#fitting-parameters-to-panoramas","fitting.html#objective","fitting.html#sun-position","fitting.html#the-solve","fitting.html#the-ldr-baseline","fitting.html#labeling-a-dataset","evaluation.html#evaluation-metrics-and-shadow-softness","evaluation.html#rmse-and-scale-invariant-rmse","evaluation.html#shadow-softness","evaluation.html#bucketed-reports","cli.html#command-line-reference","cli.html#render","cli.html#probe","cli.html#ldr-sim","cli.html#crop","cli.html#sun-detect","cli.html#softness","cli.html#fit-hdr","cli.html#fit-sky-ldr","cli.html#label","cli.html#eval"],"index":{"documentStore":{"docInfo":{"0":{"body":117,"breadcrumbs":2,"title":1},"1":{"body":41,"breadcrumbs":3,"title":2},"10":{"body":32,"breadcrumbs":5,"title":2},"11":{"body":38,"breadcrumbs":6,"title":3},"12":{"body":102,"breadcrumbs":5,"title":2},"13":{"body":30,"breadcrumbs":5,"title":2},"14":{"body":27,"breadcrumbs":5,"title":2},"15":{"body":46,"breadcrumbs":8,"title":4},"16":{"body":110,"breadcrumbs":7,"title":3},"17":{"body":48,"breadcrumbs":6,"title":2},"18":{"body":27,"breadcrumbs":6,"title":2},"19":{"body":28,"breadcrumbs":5,"title":1},"2":{"body":60,"breadcrumbs":3,"title":2},"20":{"body":19,"breadcrumbs":6,"title":3},"21":{"body":74,"breadcrumbs":4,"title":1},"22":{"body":60,"breadcrumbs":5,"title":2},"23":{"body":118,"breadcrumbs":4,"title":1},"24":{"body":44,"breadcrumbs":5,"title":2},"25":{"body":44,"breadcrumbs":5,"title":2},"26":{"body":8,"breadcrumbs":8,"title":4},"27":{"body":98,"breadcrumbs":8,"title":4},"28":{"body":144,"breadcrumbs":6,"title":2},"29":{"body":41,"breadcrumbs":6,"title":2},"3":{"body":56,"breadcrumbs":6,"title":3},"30":{"body":69,"breadcrumbs":6,"title":3},"31":{"body":23,"breadcrumbs":4,"title":1},"32":{"body":25,"breadcrumbs":4,"title":1},"33":{"body":44,"breadcrumbs":5,"title":2},"34":{"body":26,"breadcrumbs":4,"title":1},"35":{"body":26,"breadcrumbs":5,"title":2},"36":{"body":28,"breadcrumbs":4,"title":1},"37":{"body":29,"breadcrumbs":5,"title":2},"38":{"body":20,"breadcrumbs":6,"title":3},"39":{"body":38,"breadcrumbs":4,"title":1},"4":{"body":43,"breadcrumbs":5,"title":2},"40":{"body":40,"breadcrumbs":4,"title":1},"5":{"body":44,"breadcrumbs":5,"title":2},"6":{"body":87,"breadcrumbs":5,"title":2},"7":{"body":15,"breadcrumbs":6,"title":3},"8":{"body":0,"breadcrumbs":6,"title":3},"9":{"body":93,"breadcrumbs":5,"title":2}},"docs":{"0":{"body":"lmsky models outdoor illumination with eleven numbers and provides\\neverything needed to render, fit, and evaluate that model against HDR\\npanoramas: Model — the Lalonde-Matthews (LM) sun/sky model: an analytic sun lobe\\nplus a Perez-based sky dome, evaluated per direction\\n( The sun and sky model). Environment maps — equirectangular HDR maps with PFM and PNG I/O, LDR\\ncapture simulation, saturation-based sun detection, and pinhole crops\\n( Environment maps and panoramas). Transport — a precomputed light-transport matrix that renders a\\ndiffuse sphere-on-plane probe scene from any environment map with a single\\nmatrix-vector product ( The probe scene). Fitting — bounded Levenberg-Marquardt recovery of the model\\nparameters from an HDR panorama, and an LDR sky-only baseline\\n( Fitting parameters to panoramas). Evaluation — RMSE, scale-invariant RMSE, sun angular error, and a\\nshadow-softness bucket classifier\\n( Evaluation metrics). Everything is exposed both as a library ( lmsky) and as one CLI binary\\n( lmsky) with subcommands ( Command-line reference).","breadcrumbs":"Introduction » Introduction","id":"0","title":"Introduction"},"1":{"body":"#![allow(unused)] fn main() {\\nuse lmsky::model::{LmParams, SunPosition, SunParams, SkyParams, render_envmap}; let params = LmParams { sun_pos: SunPosition::new(0.6, 1.0)?, sun: SunParams { w_sun: [20.0, 18.0, 15.0], beta: 80.0, kappa: 0.05 }, sky: SkyParams { w_sky: [0.6, 0.8, 1.2], turbidity: 2.5 },\\n};\\nlet env = render_envmap(&params, 64)?;\\nassert_eq!((env.width(), env.height()), (128, 64)); Ok::<(), lmsky::Error>(()) }","breadcrumbs":"Introduction » Quick start","id":"1","title":"Quick start"},"10":{"body":"HDR maps read and write PFM (portable float map, binary 32-bit float, io::read_pfm / io::write_pfm); the round trip is bit-exact. LDR images\\nuse PNG ( io::read_png / io::write_png). io::tonemap converts\\nlinear radiance to display form with a gamma curve.","breadcrumbs":"Environment maps and panoramas » File formats","id":"10","title":"File formats"},"11":{"body":"ldr_simulate reproduces what a camera does to a radiance map: scale by an\\nexposure, clip at 1, optionally gamma-encode, and quantize to 8 bits.\\nIt is deterministic; the CLI’s ldr-sim subcommand draws a seeded random\\nexposure and records it in a JSON sidecar. ldr_to_envmap maps an LDR\\npanorama back to floats in [0, 1] for use as a fitting target.","breadcrumbs":"Environment maps and panoramas » Simulating an LDR capture","id":"11","title":"Simulating an LDR capture"},"12":{"body":"In an LDR panorama the sun is the big clipped blob. detect_sun thresholds\\nthe sky half of the image (all three channels at or above the saturation\\nthreshold, default 254), finds connected saturated regions with\\n8-connectivity and azimuthal wrap across the left/right seam, picks the\\nlargest by solid-angle-weighted area, and returns its solid-angle-weighted\\ncentroid direction: #![allow(unused)] fn main() {\\nuse lmsky::envmap::{detect_sun, texel_direction, LdrImage, DEFAULT_SATURATION_THRESHOLD};\\nuse lmsky::model::SunPosition; let truth = SunPosition::new(0.8, 1.5)?;\\nlet (w, h) = (256, 128);\\nlet mut pano = LdrImage::new(w, h);\\npano.data.fill(100);\\nfor v in 0..h / 2 { for u in 0..w { // Paint a 0.1 rad disc around the sun. if texel_direction(u, v, w, h)?.dot(truth.direction()) >= 0.1f64.cos() { pano.set_pixel(u, v, [255; 3]); } }\\n}\\nlet found = detect_sun(&pano, DEFAULT_SATURATION_THRESHOLD).unwrap();\\nassert!(lmsky::metrics::sun_angular_error(&truth, &found).to_degrees() < 2.0); Ok::<(), lmsky::Error>(()) } The acceptance suite runs this construction over fifty randomized discs,\\nincluding ones straddling the seam.","breadcrumbs":"Environment maps and panoramas » Finding the sun","id":"12","title":"Finding the sun"},"13":{"body":"extract_crop renders a perspective view into a panorama from a CropSpec\\n(azimuth, elevation, field of view, output size), and make_crop_set draws\\na seeded set of specs at random azimuths — the standard way to produce\\nlimited-field-of-view images with known illumination from one panorama.","breadcrumbs":"Environment maps and panoramas » Pinhole crops","id":"13","title":"Pinhole crops"},"14":{"body":"roll_to_center shifts a panorama in azimuth (with wrap) so a chosen\\nazimuth lands at the image center. Evaluation uses it to rotate the sun to\\na canonical azimuth before measuring shadow softness, so the shadow falls\\nin the classifier’s measurement band regardless of where the sun was.","breadcrumbs":"Environment maps and panoramas » Rolling a panorama","id":"14","title":"Rolling a panorama"},"15":{"body":"Render losses and evaluation never compare panoramas directly; they compare probe renders: top-down orthographic images of a diffuse unit sphere\\nresting on a diffuse plane, lit by the environment map. The render reacts\\nto everything that matters about outdoor light — overall intensity, color,\\nsun direction (shadow position), and sun size (shadow softness) — while\\nbeing insensitive to high-frequency panorama content.","breadcrumbs":"The probe scene and light transport » The probe scene and light transport","id":"15","title":"The probe scene and light transport"},"16":{"body":"For a fixed scene and a fixed environment-map resolution, the radiance of\\nevery probe pixel is a linear function of the environment texels: each\\npixel integrates incoming radiance against a cosine-weighted visibility\\nkernel. build_transport precomputes that kernel once into a dense pixels × texels matrix T; relighting is then render = T · env, which\\nmakes the thousands of renders inside a fit loop cheap. #![allow(unused)] fn main() {\\nuse lmsky::transport::{ProbeScene, build_transport, render_probe};\\nuse lmsky::envmap::EnvMap; let scene = ProbeScene { render_size: 16, ..ProbeScene::default() };\\nlet transport = build_transport(&scene, 16)?; // Uniform unit-radiance sky, albedo-1 surfaces: unoccluded plane pixels\\n// integrate to ~1 (the corner sees a tiny bit less, shadowed by the sphere).\\nlet sky = EnvMap::from_data(32, 16, { let mut d = vec![0.0f32; 32 * 16 * 3]; for v in 0..8 { for u in 0..32 { for c in 0..3 { d[(v * 32 + u) * 3 + c] = 1.0; }}} d\\n})?;\\nlet img = render_probe(&transport, &sky)?;\\nassert!((img.pixel(0, 0)[0] - 1.0).abs() < 0.05); Ok::<(), lmsky::Error>(()) }","breadcrumbs":"The probe scene and light transport » Linearity and the transport matrix","id":"16","title":"Linearity and the transport matrix"},"17":{"body":"ProbeScene holds the sphere center/radius, the two albedos, the half\\nextent of the imaged plane region, and the output resolution (default\\n64×64). Rays are cast orthographically straight down; sphere pixels shade\\nthe sphere point, plane pixels shade the plane point with the sphere\\noccluding part of the sky. The hemisphere integral uses the same texel\\nsolid angles as the environment map, so the quadrature is consistent on\\nboth sides of the matrix.","breadcrumbs":"The probe scene and light transport » Scene definition","id":"17","title":"Scene definition"},"18":{"body":"render_probe_oracle computes the same image per pixel by direct\\nintegration, without building a matrix. The acceptance suite checks that\\nmatrix renders match the oracle to 1e-5 relative on every pixel — the\\nmatrix is purely a factorization of the oracle, not an approximation.","breadcrumbs":"The probe scene and light transport » Correctness oracle","id":"18","title":"Correctness oracle"},"19":{"body":"Transport matrices depend only on the scene and the environment height, so\\nthe CLI caches them on disk keyed by a content hash of the scene parameters\\n( save_transport / load_transport / load_or_build). A cache file whose\\nscene hash does not match the requested scene is rejected rather than\\nsilently reused.","breadcrumbs":"The probe scene and light transport » Caching","id":"19","title":"Caching"},"2":{"body":"The repository is a Cargo workspace; the library and binary live in crates/lmsky. cargo build --workspace # library + CLI\\ncargo test --workspace # unit, doc, and acceptance tests\\ncargo test --test acceptance -- --nocapture # one PASS/FAIL line per criterion The acceptance suite exercises the full pipeline end to end (model\\nidentities, transport against an independent oracle, fit round trips across\\nweather conditions, metric properties, detection accuracy, softness\\nmonotonicity, and CLI determinism) and takes several minutes; everything\\nelse is fast.","breadcrumbs":"Introduction » Building and testing","id":"2","title":"Building and testing"},"20":{"body":"Given an HDR panorama, fit::fit_lm_to_hdr recovers LM parameters whose\\nprobe render matches the panorama’s. This is direct nonlinear least\\nsquares — no training data or network involved.","breadcrumbs":"Fitting parameters to panoramas » Fitting parameters to panoramas","id":"20","title":"Fitting parameters to panoramas"},"21":{"body":"Three render-space losses are combined, mirroring how the model decomposes: L_lm — full model render vs the HDR panorama’s render, weight 1; L_sky — sky-only render vs the render of the LDR-clipped panorama,\\nweight 0.2 (the LDR target is a biased stand-in, so it gets a smaller\\nsay); L_sun — sun-only render vs the render of HDR − LDR (the clipped-away\\nenergy, which is almost entirely sun), weight 1. All three are mean-squared errors, so values are resolution-independent. losses::lm_render_losses evaluates them for any parameter estimate, and\\nthe weights live in LossWeights alongside the parameter-loss weights\\n( kappa, beta, w_sun weighted 5, 10, 10 in losses::param_losses).","breadcrumbs":"Fitting parameters to panoramas » Objective","id":"21","title":"Objective"},"22":{"body":"The sun position is not part of the nonlinear solve. It is estimated from\\nan LDR simulation of the input via detect_sun and held fixed; a\\ncaller with better knowledge can pass sun_hint. If nothing in the\\npanorama saturates and no hint is given, a grid search over the 16×64\\nelevation/azimuth bins picks the brightest direction, and FitResult\\nrecords which path was taken ( sun_detected). Because the position is frozen, fit quality is bounded by detection\\nquality: a panorama whose sky clips over a wide area drags the saturated\\ncentroid away from the sun and the radiometric fit inherits that error.","breadcrumbs":"Fitting parameters to panoramas » Sun position","id":"22","title":"Sun position"},"23":{"body":"The nine radiometric parameters ( beta, kappa, turbidity, w_sun, w_sky) are optimized in log space with box bounds from ParamRanges, by\\nLevenberg-Marquardt with central-difference Jacobians (step 1e-4 in\\ntransformed coordinates). Initialization comes from the data: w_sky from\\nthe mean of the brightest sky quartile, w_sun from the mean of saturated\\ntexels near the detected sun. Additional restarts perturb the\\ninitialization with seeded Gaussian noise and the best restart wins, so\\nresults are deterministic given the seed. #![allow(unused)] fn main() {\\nuse lmsky::fit::{fit_lm_to_hdr, FitConfig};\\nuse lmsky::model::render_envmap;\\nuse lmsky::transport::{ProbeScene, build_transport}; let truth: lmsky::LmParams = todo!();\\nlet env = render_envmap(&truth, 64)?;\\nlet transport = build_transport(&ProbeScene::default(), 64)?;\\nlet fit = fit_lm_to_hdr(&transport, &env, None, &FitConfig::default())?;\\nprintln!(\\"recovered turbidity {:.2} after {} iterations\\", fit.params.sky.turbidity, fit.iterations); Ok::<(), lmsky::Error>(()) } On synthetic round trips (render a known parameter set, fit it back), the\\nprobe render of the fit stays within scale-invariant RMSE 0.05 of the\\ninput’s render across sunny, mixed, and overcast conditions; the\\nacceptance suite checks exactly this on a 20-panorama seeded set.","breadcrumbs":"Fitting parameters to panoramas » The solve","id":"23","title":"The solve"},"24":{"body":"fit_sky_to_ldr fits only w_sky and turbidity to a clipped LDR\\npanorama, leaving the sun at zero. It exists as a measuring stick: clipped\\npixels carry no information about the sun’s true radiance, so this\\nbaseline systematically underestimates sunny scenes — its sun render loss\\non sunny inputs runs orders of magnitude above the HDR fit’s, and its\\nrender error varies much more across weather than the HDR fit’s does.","breadcrumbs":"Fitting parameters to panoramas » The LDR baseline","id":"24","title":"The LDR baseline"},"25":{"body":"fit::label_dataset (CLI: lmsky label) fits every .pfm panorama in a\\ndirectory (in parallel, in sorted filename order) and writes one JSON line\\nper panorama: file name, fitted parameters, losses, fit diagnostics, and\\nthe shadow-softness bucket of the fit. Failures on individual files become\\nrecords with an error field rather than aborting the run. Output is\\nbyte-for-byte deterministic for a given seed.","breadcrumbs":"Fitting parameters to panoramas » Labeling a dataset","id":"25","title":"Labeling a dataset"},"26":{"body":"All image metrics operate on probe renders, never on raw panoramas.","breadcrumbs":"Evaluation metrics and shadow softness » Evaluation metrics and shadow softness","id":"26","title":"Evaluation metrics and shadow softness"},"27":{"body":"metrics::rmse is plain root-mean-square error. metrics::si_rmse first\\nscales the prediction by the least-squares-optimal factor α = ⟨a,b⟩/⟨b,b⟩\\nand reports the remaining error, making it invariant to global exposure: si_rmse(a, c·b) = si_rmse(a, b) for any c > 0. Use it whenever absolute\\nradiometric scale is not meaningful (which, for fits to panoramas with\\nunknown exposure, is almost always). #![allow(unused)] fn main() {\\nuse lmsky::envmap::RenderImage;\\nuse lmsky::metrics::si_rmse; let a = RenderImage { width: 2, height: 1, data: vec![1.0, 2.0, 3.0, 4.0, 5.0, 6.0] };\\nlet b = RenderImage { width: 2, height: 1, data: vec![2.0, 4.0, 6.0, 8.0, 10.0, 12.0] };\\n// b is exactly 2x a, so the scale-invariant error is zero.\\nassert!(si_rmse(&a, &b)? < 1e-9); Ok::<(), lmsky::Error>(()) } metrics::sun_angular_error is the great-circle angle between two sun\\npositions — a true metric (it satisfies the triangle inequality), reported\\nin radians.","breadcrumbs":"Evaluation metrics and shadow softness » RMSE and scale-invariant RMSE","id":"27","title":"RMSE and scale-invariant RMSE"},"28":{"body":"Outdoor scenes split naturally into three lighting regimes: sharp shadows\\n(clear sun), soft shadows (hazy or partly occluded sun), and no shadows\\n(overcast). metrics::shadow_softness classifies a probe render into\\nbuckets 1–3 by looking at the image band just below the sphere, where the\\ncast shadow falls when the sun is at the canonical evaluation azimuth\\n( SOFTNESS_SUN_AZIMUTH): normalize the band by the render’s mean luminance (exposure invariance); histogram the horizontal luminance gradients (64 bins, smoothed); measure the KL divergence from the gradient histogram of a fixed sharp-shadow reference render to the image’s; cut at 0.25 and 0.65: at or below the first cut is bucket 1 (sharp),\\nbetween is bucket 2 (soft), above is bucket 3 (no shadow). A sharpening shadow fills the high-gradient bins the reference populates,\\nso the divergence grows monotonically as the sun lobe widens — the\\nacceptance suite sweeps twenty lobe widths at fixed sun flux and checks the\\nordering. The reference parameters, histogram shape, and cut points were\\nfrozen from a seeded 200-render calibration sweep\\n( examples/softness_calibration.rs reproduces it). Because the band is geometrically below the sphere, softness is only\\nmeaningful when the shadow falls there. Evaluation therefore rolls each\\npanorama so its detected sun sits at the canonical azimuth before\\nclassifying (fits rotate their sun parameter instead).","breadcrumbs":"Evaluation metrics and shadow softness » Shadow softness","id":"28","title":"Shadow softness"},"29":{"body":"metrics::bucketed_report groups ground-truth/prediction render pairs by\\nthe ground truth’s softness bucket and reports per-bucket and overall mean\\nRMSE and si-RMSE — the standard way to see whether a method degrades on\\nsome weather conditions while holding up on others. The CLI’s eval\\nsubcommand produces this report from a label file plus the ground-truth\\npanorama directory.","breadcrumbs":"Evaluation metrics and shadow softness » Bucketed reports","id":"29","title":"Bucketed reports"},"3":{"body":"The LM model describes the full sky hemisphere as the sum of two terms,\\neach evaluated for a unit direction l: f_LM(l) = f_sun(l) + f_sky(l) Its eleven parameters: Group Parameters Meaning Sun position zenith_angle, azimuth direction of the sun; zenith angle in [0, π/2] (at or above the horizon) Sun lobe w_sun (RGB), beta, kappa mean sun color and two shape parameters Sky dome w_sky (RGB), turbidity zenith sky color and atmospheric haziness","breadcrumbs":"The sun and sky model » The sun and sky model","id":"3","title":"The sun and sky model"},"30":{"body":"One binary, ten subcommands. Every command that needs a transport matrix\\naccepts --cache-dir (default .lmsky-cache) and --render-size\\n(default 64); matrices are built on first use and cached by a content hash\\nof the scene. Fitting commands accept --seed, --restarts, --max-iterations, and --config <json> (a file with optional ranges, weights, restarts, max_iterations overrides; command-line flags win). Parameters travel as a flat JSON object: { \\"sun_zenith\\": 0.6, \\"sun_azimuth\\": 1.0, \\"w_sun\\": [20.0, 18.0, 15.0], \\"beta\\": 80.0, \\"kappa\\": 0.05, \\"w_sky\\": [0.6, 0.8, 1.2], \\"turbidity\\": 2.5\\n}","breadcrumbs":"Command-line reference » Command-line reference","id":"30","title":"Command-line reference"},"31":{"body":"lmsky render --params sky.json --height 64 --out sky.pfm [--preview sky.png] Renders parameters into an equirectangular HDR map (PFM); --preview\\nadditionally writes a gamma-2.2 tonemapped PNG.","breadcrumbs":"Command-line reference » render","id":"31","title":"render"},"32":{"body":"lmsky probe --env pano.pfm --out probe.pfm [--preview probe.png]\\nlmsky probe --params sky.json --height 64 --out probe.pfm Renders the sphere-on-plane probe under a panorama or under rendered\\nparameters.","breadcrumbs":"Command-line reference » probe","id":"32","title":"probe"},"33":{"body":"lmsky ldr-sim --input pano.pfm --exposure 1.0 --out pano_ldr.png\\nlmsky ldr-sim --input pano.pfm --exposure-range 0.05,5.0 --seed 3 --out pano_ldr.png Simulates an 8-bit capture: exposure, clip, optional --gamma, quantize.\\nWith --exposure-range LO,HI the exposure is drawn log-uniformly with the\\nseed; either way a sidecar <out>.json records the exposure used.","breadcrumbs":"Command-line reference » ldr-sim","id":"33","title":"ldr-sim"},"34":{"body":"lmsky crop --input pano_ldr.png --count 7 --seed 0 --fov-deg 60 --out-dir crops/ Extracts random-azimuth pinhole crops, writing crop_000.png … plus a crops.json manifest of the camera specs.","breadcrumbs":"Command-line reference » crop","id":"34","title":"crop"},"35":{"body":"lmsky sun-detect --input pano_ldr.png [--threshold 254] [--out report.json] Reports the detected sun position (and its elevation/azimuth bin) as JSON,\\nor {\\"detected\\": false} when nothing saturates. PFM input is clipped at\\nexposure 1 first.","breadcrumbs":"Command-line reference » sun-detect","id":"35","title":"sun-detect"},"36":{"body":"lmsky softness --render probe.pfm [--out report.json]\\nlmsky softness --params sky.json --height 64 Prints the shadow-softness KL divergence and bucket (1 sharp, 2 soft,\\n3 none) for a probe render or for rendered parameters.","breadcrumbs":"Command-line reference » softness","id":"36","title":"softness"},"37":{"body":"lmsky fit-hdr --input pano.pfm --out fit.json --seed 0 --restarts 2 Fits all nine radiometric parameters to an HDR panorama (sun position from\\nsaturation detection, held fixed) and writes the fitted parameters,\\nlosses, and diagnostics as JSON.","breadcrumbs":"Command-line reference » fit-hdr","id":"37","title":"fit-hdr"},"38":{"body":"lmsky fit-sky-ldr --input pano_ldr.png --out fit.json Fits only w_sky and turbidity to an LDR panorama — the clipped-input\\nbaseline; the sun color is left at zero.","breadcrumbs":"Command-line reference » fit-sky-ldr","id":"38","title":"fit-sky-ldr"},"39":{"body":"lmsky label --dir panos/ --out labels.jsonl --seed 7 Fits every .pfm in the directory (sorted order, parallel) and writes one\\nJSON record per panorama: parameters, losses, diagnostics, and softness\\nbucket. Per-file failures become records with an error field. Output is\\nbyte-identical across runs with the same seed.","breadcrumbs":"Command-line reference » label","id":"39","title":"label"},"4":{"body":"With γ the angle between the evaluated direction and the sun, f_sun(γ) = w_sun · exp(−beta · exp(−kappa / γ)) At γ = 0 the inner exponential underflows to zero in the limit, so f_sun(0) = w_sun exactly; the implementation special-cases this rather\\nthan relying on floating-point underflow. The lobe’s effective angular\\nradius is roughly kappa / ln(beta): large beta with small kappa gives\\na concentrated disc, small beta a broad glow.","breadcrumbs":"The sun and sky model » The sun lobe","id":"4","title":"The sun lobe"},"40":{"body":"lmsky eval --labels labels.jsonl --gt-dir panos/ --out report.json Scores each labeled fit against its ground-truth panorama on probe renders\\n(RMSE and si-RMSE), buckets by the ground truth’s shadow softness, prints\\nan aligned per-bucket table, and writes the full report plus per-record\\nresults as JSON.","breadcrumbs":"Command-line reference » eval","id":"40","title":"eval"},"5":{"body":"The sky term is the Perez all-weather formula with its five coefficients\\nderived from a single turbidity value (the Preetham parameterization),\\nnormalized by its value at the zenith: f_sky(l) = w_sky · F(θ, γ) / F(0, θ_sun) where θ is the direction’s zenith angle. The normalization makes f_sky(zenith) = w_sky exactly. Turbidity must lie in [1, 20];\\nconstructors reject values outside that range. Directions below the horizon\\nevaluate to zero radiance.","breadcrumbs":"The sun and sky model » The sky dome","id":"5","title":"The sky dome"},"6":{"body":"#![allow(unused)] fn main() {\\nuse lmsky::model::{LmParams, SunPosition, SunParams, SkyParams, eval_lm};\\nuse lmsky::geom::Vec3; let params = LmParams { sun_pos: SunPosition::new(0.6, 1.0)?, sun: SunParams { w_sun: [20.0, 18.0, 15.0], beta: 80.0, kappa: 0.05 }, sky: SkyParams { w_sky: [0.6, 0.8, 1.2], turbidity: 2.5 },\\n}; // Radiance toward the sun is dominated by the sun lobe...\\nlet toward_sun = eval_lm(params.sun_pos.direction(), &params)?;\\n// ...while the zenith sees only sky, whose value is exactly w_sky.\\nlet zenith = eval_lm(Vec3::new(0.0, 1.0, 0.0), &params)?;\\nassert!(toward_sun[0] > zenith[0]);\\nassert!((zenith[2] - params.sky.w_sky[2]).abs() < 1e-12); // Below the horizon the model is zero.\\nassert_eq!(eval_lm(Vec3::new(0.0, -1.0, 0.0), &params)?, [0.0, 0.0, 0.0]); Ok::<(), lmsky::Error>(()) } These identities (together with additivity of the two terms) are checked\\nover a thousand randomized parameter draws in the acceptance suite.","breadcrumbs":"The sun and sky model » Identities you can rely on","id":"6","title":"Identities you can rely on"},"7":{"body":"render_envmap(&params, height) evaluates the model at the center\\ndirection of every texel of a 2·height × height equirectangular map. The\\nnext chapter describes that mapping.","breadcrumbs":"The sun and sky model » Rendering to an environment map","id":"7","title":"Rendering to an environment map"},"8":{"body":"","breadcrumbs":"Environment maps and panoramas » Environment maps and panoramas","id":"8","title":"Environment maps and panoramas"},"9":{"body":"An EnvMap is a linear-radiance RGB image with width exactly twice its\\nheight. Rows map to zenith angle and columns to azimuth, with directions\\ntaken at texel centers: θ = π · (v + 0.5) / height zenith angle, 0 at the top row\\nφ = 2π · (u + 0.5) / width azimuth The world frame is y-up: y = cos θ, and azimuth sweeps the horizontal\\nplane. texel_direction and direction_to_texel convert between the two\\nrepresentations, and texel_solid_angle gives each texel’s solid angle\\n(constant along a row, sin θ-weighted across rows). Summed over the whole\\nimage the solid angles tile the sphere: #![allow(unused)] fn main() {\\nuse lmsky::envmap::texel_solid_angle;\\nuse std::f64::consts::PI; let (w, h) = (128, 64);\\nlet total: f64 = (0..h).map(|v| texel_solid_angle(v, w, h) * w as f64).sum();\\nassert!((total - 4.0 * PI).abs() / (4.0 * PI) < 0.005); }","breadcrumbs":"Environment maps and panoramas » Equirectangular geometry","id":"9","title":"Equirectangular geometry"}},"length":41,"save":true},"fields":["title","body","breadcrumbs"],"index":{"body":{"root":{"0":{")":{"[":{"0":{"df":1,"docs":{"16":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},".":{".":{"3":{"2":{"df":1,"docs":{"16":{"tf":1.0}}},"df":1,"docs":{"16":{"tf":1.0}}},"8":{"df":1,"docs":{"16":{"tf":1.0}}},"df":0,"docs":{},"h":{")":{".":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"p":{"(":{"df":0,"docs":{},"|":{"df":0,"docs":{},"v":{"df":1,"docs":{"9":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":1,"docs":{"12":{"tf":1.0}}},"w":{"df":1,"docs":{"12":{"tf":1.0}}}},"0":{"0":{"5":{"df":1,"docs":{"9":{"tf":1.0}}},"df":0,"docs":{}},"5":{",":{"5":{".":{"0":{"df":1,"docs":{"33":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":5,"docs":{"1":{"tf":1.0},"16":{"tf":1.0},"23":{"tf":1.0},"30":{"tf":1.0},"6":{"tf":1.0}}},"df":1,"docs":{"6":{"tf":2.23606797749979}}},"1":{"df":1,"docs":{"12":{"tf":1.0}},"f":{"6":{"4":{".":{"c":{"df":0,"docs":{},"o":{"df":1,"docs":{"12":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"2":{"5":{"df":1,"docs":{"28":{"tf":1.0}}},"df":1,"docs":{"21":{"tf":1.0}}},"5":{"df":1,"docs":{"9":{"tf":1.4142135623730951}}},"6":{"5":{"df":1,"docs":{"28":{"tf":1.0}}},"df":3,"docs":{"1":{"tf":1.0},"30":{"tf":1.4142135623730951},"6":{"tf":1.0}}},"8":{"df":3,"docs":{"1":{"tf":1.0},"30":{"tf":1.0},"6":{"tf":1.0}}},"df":0,"docs":{}},"df":7,"docs":{"11":{"tf":1.0},"27":{"tf":1.0},"3":{"tf":1.0},"34":{"tf":1.0},"37":{"tf":1.0},"4":{"tf":1.0},"9":{"tf":1.0}}},"1":{".":{"0":{")":{".":{"a":{"b":{"df":1,"docs":{"16":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":5,"docs":{"1":{"tf":1.0},"16":{"tf":1.0},"30":{"tf":1.0},"33":{"tf":1.0},"6":{"tf":1.7320508075688772}}},"2":{"df":3,"docs":{"1":{"tf":1.0},"30":{"tf":1.0},"6":{"tf":1.0}}},"5":{"df":1,"docs":{"12":{"tf":1.0}}},"df":0,"docs":{}},"0":{".":{"0":{"df":1,"docs":{"27":{"tf":1.0}}},"df":0,"docs":{}},"df":1,"docs":{"21":{"tf":1.4142135623730951}}},"2":{".":{"0":{"df":1,"docs":{"27":{"tf":1.0}}},"df":0,"docs":{}},"8":{"df":3,"docs":{"1":{"tf":1.0},"12":{"tf":1.0},"9":{"tf":1.0}}},"df":1,"docs":{"6":{"tf":1.0}}},"5":{".":{"0":{"df":3,"docs":{"1":{"tf":1.0},"30":{"tf":1.0},"6":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"6":{"df":1,"docs":{"16":{"tf":2.0}},"×":{"6":{"4":{"df":1,"docs":{"22":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}},"8":{".":{"0":{"df":3,"docs":{"1":{"tf":1.0},"30":{"tf":1.0},"6":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":8,"docs":{"11":{"tf":1.4142135623730951},"16":{"tf":1.4142135623730951},"21":{"tf":1.4142135623730951},"27":{"tf":1.4142135623730951},"28":{"tf":1.0},"35":{"tf":1.0},"36":{"tf":1.0},"5":{"tf":1.0}},"e":{"df":4,"docs":{"18":{"tf":1.0},"23":{"tf":1.0},"27":{"tf":1.0},"6":{"tf":1.0}}},"–":{"3":{"df":1,"docs":{"28":{"tf":1.0}}},"df":0,"docs":{}}},"2":{".":{"0":{"df":2,"docs":{"12":{"tf":1.0},"27":{"tf":1.0}}},"2":{"df":1,"docs":{"31":{"tf":1.0}}},"5":{"df":3,"docs":{"1":{"tf":1.0},"30":{"tf":1.0},"6":{"tf":1.0}}},"df":0,"docs":{}},"0":{".":{"0":{"df":3,"docs":{"1":{"tf":1.0},"30":{"tf":1.0},"6":{"tf":1.0}}},"df":0,"docs":{}},"0":{"df":1,"docs":{"28":{"tf":1.0}}},"df":2,"docs":{"23":{"tf":1.0},"5":{"tf":1.0}}},"5":{"4":{"df":2,"docs":{"12":{"tf":1.0},"35":{"tf":1.0}}},"5":{"df":1,"docs":{"12":{"tf":1.0}}},"6":{"df":1,"docs":{"12":{"tf":1.0}}},"df":0,"docs":{}},"df":8,"docs":{"12":{"tf":1.0},"23":{"tf":1.0},"27":{"tf":1.4142135623730951},"28":{"tf":1.0},"3":{"tf":1.0},"36":{"tf":1.0},"37":{"tf":1.0},"9":{"tf":1.0}},"x":{"df":1,"docs":{"27":{"tf":1.0}}},"·":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"t":{"df":1,"docs":{"7":{"tf":1.0}}}}}}}}}},"3":{".":{"0":{"df":1,"docs":{"27":{"tf":1.0}}},"df":0,"docs":{}},"2":{"df":2,"docs":{"10":{"tf":1.0},"16":{"tf":1.4142135623730951}}},"df":5,"docs":{"12":{"tf":1.0},"16":{"tf":1.4142135623730951},"28":{"tf":1.0},"33":{"tf":1.0},"36":{"tf":1.0}}},"4":{".":{"0":{"df":2,"docs":{"27":{"tf":1.4142135623730951},"9":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"df":1,"docs":{"23":{"tf":1.0}}},"5":{".":{"0":{"df":1,"docs":{"27":{"tf":1.0}}},"df":0,"docs":{}},"df":2,"docs":{"18":{"tf":1.0},"21":{"tf":1.0}}},"6":{".":{"0":{"df":1,"docs":{"27":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"0":{"df":1,"docs":{"34":{"tf":1.0}}},"4":{"df":8,"docs":{"1":{"tf":1.4142135623730951},"23":{"tf":1.4142135623730951},"28":{"tf":1.0},"30":{"tf":1.0},"31":{"tf":1.0},"32":{"tf":1.0},"36":{"tf":1.0},"9":{"tf":1.0}},"×":{"6":{"4":{"df":1,"docs":{"17":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"7":{"df":2,"docs":{"34":{"tf":1.0},"39":{"tf":1.0}}},"8":{".":{"0":{"df":1,"docs":{"27":{"tf":1.0}}},"df":0,"docs":{}},"0":{".":{"0":{"df":3,"docs":{"1":{"tf":1.0},"30":{"tf":1.0},"6":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":3,"docs":{"11":{"tf":1.0},"12":{"tf":1.0},"33":{"tf":1.0}}},"9":{"df":1,"docs":{"27":{"tf":1.0}}},"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":1,"docs":{"5":{"tf":1.0}}}}}},"a":{",":{"b":{"df":0,"docs":{},"⟩":{"/":{"df":0,"docs":{},"⟨":{"b":{",":{"b":{"df":1,"docs":{"27":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"b":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"25":{"tf":1.0}}}},"v":{"df":4,"docs":{"12":{"tf":1.0},"24":{"tf":1.0},"28":{"tf":1.0},"3":{"tf":1.0}}}},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"27":{"tf":1.0}}}}}}}},"c":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":7,"docs":{"12":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.7320508075688772},"23":{"tf":1.0},"28":{"tf":1.0},"30":{"tf":1.4142135623730951},"6":{"tf":1.0}}}}},"u":{"df":0,"docs":{},"r":{"a":{"c":{"df":0,"docs":{},"i":{"df":1,"docs":{"2":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"d":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":2,"docs":{"23":{"tf":1.0},"6":{"tf":1.0}},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"31":{"tf":1.0}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"g":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":4,"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"2":{"tf":1.0},"40":{"tf":1.0}}}}}}},"df":0,"docs":{}},"l":{"b":{"df":0,"docs":{},"e":{"d":{"df":0,"docs":{},"o":{"df":2,"docs":{"16":{"tf":1.0},"17":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"n":{"df":1,"docs":{"40":{"tf":1.0}}}}},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"(":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"u":{"df":0,"docs":{},"s":{"df":7,"docs":{"1":{"tf":1.0},"12":{"tf":1.0},"16":{"tf":1.0},"23":{"tf":1.0},"27":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":1.0}}}}}}},"df":0,"docs":{}}}},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":1,"docs":{"9":{"tf":1.0}},"s":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"21":{"tf":1.0}}},"df":0,"docs":{}}}}}},"w":{"a":{"df":0,"docs":{},"y":{"df":1,"docs":{"27":{"tf":1.0}}}},"df":0,"docs":{}}},"n":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"y":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"df":0,"docs":{},"g":{"df":0,"docs":{},"l":{"df":7,"docs":{"12":{"tf":1.4142135623730951},"17":{"tf":1.0},"27":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"9":{"tf":2.0}}},"u":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"r":{"df":2,"docs":{"0":{"tf":1.0},"4":{"tf":1.0}}}},"df":0,"docs":{}}}}},"p":{"df":0,"docs":{},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"x":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":1,"docs":{"18":{"tf":1.0}}}}}}}}},"r":{"df":0,"docs":{},"e":{"a":{"df":2,"docs":{"12":{"tf":1.0},"22":{"tf":1.0}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"12":{"tf":1.0}}},"df":0,"docs":{}}}}},"s":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"!":{"(":{"(":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"g":{".":{"df":0,"docs":{},"p":{"df":0,"docs":{},"i":{"df":0,"docs":{},"x":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"(":{"0":{"df":1,"docs":{"16":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}}},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":1,"docs":{"9":{"tf":1.0}}}}},"z":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"[":{"2":{"df":1,"docs":{"6":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{},"l":{"df":0,"docs":{},"m":{"df":0,"docs":{},"s":{"df":0,"docs":{},"k":{"df":0,"docs":{},"y":{":":{":":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"s":{":":{":":{"df":0,"docs":{},"s":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"_":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"r":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"(":{"&":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"12":{"tf":1.0}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"s":{"df":0,"docs":{},"i":{"_":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"(":{"&":{"a":{"df":1,"docs":{"27":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"a":{"df":0,"docs":{},"r":{"d":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"[":{"0":{"df":1,"docs":{"6":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"q":{"!":{"(":{"(":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"v":{".":{"df":0,"docs":{},"w":{"df":0,"docs":{},"i":{"d":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"1":{"tf":1.0}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"v":{"a":{"df":0,"docs":{},"l":{"_":{"df":0,"docs":{},"l":{"df":0,"docs":{},"m":{"(":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"c":{"3":{":":{":":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"w":{"(":{"0":{".":{"0":{"df":1,"docs":{"6":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}},"t":{"df":0,"docs":{},"m":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"3":{"tf":1.0}}}}}}}}}},"w":{"a":{"df":0,"docs":{},"y":{"df":2,"docs":{"21":{"tf":1.0},"22":{"tf":1.0}}}},"df":0,"docs":{}},"z":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":7,"docs":{"12":{"tf":1.0},"13":{"tf":1.4142135623730951},"14":{"tf":1.7320508075688772},"28":{"tf":1.4142135623730951},"3":{"tf":1.0},"34":{"tf":1.0},"9":{"tf":1.7320508075688772}}}}}}}}},"b":{"a":{"c":{"df":0,"docs":{},"k":{"df":2,"docs":{"11":{"tf":1.0},"23":{"tf":1.0}}}},"df":0,"docs":{},"n":{"d":{"df":2,"docs":{"14":{"tf":1.0},"28":{"tf":1.7320508075688772}}},"df":0,"docs":{}},"s":{"df":0,"docs":{},"e":{"df":1,"docs":{"0":{"tf":1.4142135623730951}},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":3,"docs":{"0":{"tf":1.0},"24":{"tf":1.0},"38":{"tf":1.0}}}}}}}},"df":1,"docs":{"27":{"tf":2.0}},"e":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":2,"docs":{"25":{"tf":1.0},"39":{"tf":1.0}}}}},"df":1,"docs":{"15":{"tf":1.0}},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":2,"docs":{"14":{"tf":1.0},"28":{"tf":1.0}}}}},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":3,"docs":{"28":{"tf":1.7320508075688772},"5":{"tf":1.0},"6":{"tf":1.0}}}}},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"23":{"tf":1.0}}}},"t":{"a":{"df":7,"docs":{"1":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.0},"3":{"tf":1.0},"30":{"tf":1.0},"4":{"tf":1.4142135623730951},"6":{"tf":1.0}}},"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"22":{"tf":1.0}}}}},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":4,"docs":{"27":{"tf":1.0},"28":{"tf":1.0},"4":{"tf":1.0},"9":{"tf":1.0}}}}}}}},"i":{"a":{"df":0,"docs":{},"s":{"df":1,"docs":{"21":{"tf":1.0}}}},"df":0,"docs":{},"g":{"df":1,"docs":{"12":{"tf":1.0}}},"n":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":4,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"2":{"tf":1.0},"30":{"tf":1.0}}}}},"df":3,"docs":{"22":{"tf":1.0},"28":{"tf":1.4142135623730951},"35":{"tf":1.0}}},"t":{"df":4,"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"16":{"tf":1.0},"33":{"tf":1.0}}}},"l":{"df":0,"docs":{},"o":{"b":{"df":1,"docs":{"12":{"tf":1.0}}},"df":0,"docs":{}}},"o":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":2,"docs":{"0":{"tf":1.0},"17":{"tf":1.0}}}},"u":{"df":0,"docs":{},"n":{"d":{"df":3,"docs":{"0":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0}}},"df":0,"docs":{}}},"x":{"df":1,"docs":{"23":{"tf":1.0}}}},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":2,"docs":{"22":{"tf":1.0},"23":{"tf":1.0}}}}}}}}},"o":{"a":{"d":{"df":1,"docs":{"4":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}},"u":{"c":{"df":0,"docs":{},"k":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":7,"docs":{"0":{"tf":1.0},"25":{"tf":1.0},"28":{"tf":2.0},"29":{"tf":1.4142135623730951},"36":{"tf":1.0},"39":{"tf":1.0},"40":{"tf":1.4142135623730951}}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"d":{"_":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"(":{"&":{"df":0,"docs":{},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{":":{":":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"a":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":1,"docs":{"23":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"s":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"16":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":2,"docs":{"16":{"tf":1.4142135623730951},"23":{"tf":1.0}}}}}}}}},"df":0,"docs":{}}}},"df":2,"docs":{"18":{"tf":1.0},"2":{"tf":1.0}}},"df":0,"docs":{},"t":{"df":1,"docs":{"30":{"tf":1.0}}}}}},"y":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":2,"docs":{"25":{"tf":1.4142135623730951},"39":{"tf":1.0}}}}}},"c":{"a":{"c":{"df":0,"docs":{},"h":{"df":2,"docs":{"19":{"tf":1.4142135623730951},"30":{"tf":1.7320508075688772}}}},"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"b":{"df":0,"docs":{},"r":{"df":1,"docs":{"28":{"tf":1.0}}}},"df":0,"docs":{}},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"22":{"tf":1.0}}}}}},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"a":{"df":2,"docs":{"11":{"tf":1.0},"34":{"tf":1.0}}},"df":0,"docs":{}}}},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":2,"docs":{"14":{"tf":1.0},"28":{"tf":1.4142135623730951}}}}},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":2,"docs":{"0":{"tf":1.0},"33":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"g":{"df":0,"docs":{},"o":{"df":1,"docs":{"2":{"tf":2.0}}}},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"24":{"tf":1.0}}}}},"s":{"df":0,"docs":{},"e":{"df":1,"docs":{"4":{"tf":1.0}}},"t":{"df":2,"docs":{"17":{"tf":1.0},"28":{"tf":1.0}}}}},"df":2,"docs":{"16":{"tf":1.4142135623730951},"27":{"tf":1.0}},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"/":{"df":0,"docs":{},"r":{"a":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"u":{"df":1,"docs":{"17":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":3,"docs":{"14":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}}}},"r":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"23":{"tf":1.0}}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"d":{"df":2,"docs":{"12":{"tf":1.0},"22":{"tf":1.0}}},"df":0,"docs":{}}}}}}},"h":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":1,"docs":{"12":{"tf":1.0}}}}}},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"7":{"tf":1.0}}}}}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"16":{"tf":1.0}}}},"c":{"df":0,"docs":{},"k":{"df":4,"docs":{"18":{"tf":1.0},"23":{"tf":1.0},"28":{"tf":1.0},"6":{"tf":1.0}}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"14":{"tf":1.0}}}}}}},"i":{"df":0,"docs":{},"r":{"c":{"df":0,"docs":{},"l":{"df":1,"docs":{"27":{"tf":1.0}}}},"df":0,"docs":{}}},"l":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":2,"docs":{"0":{"tf":1.0},"28":{"tf":1.4142135623730951}},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"’":{"df":1,"docs":{"14":{"tf":1.0}}}}}}}}}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"28":{"tf":1.0}}}},"df":0,"docs":{}},"i":{"df":4,"docs":{"0":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.4142135623730951},"25":{"tf":1.0}},"p":{"df":8,"docs":{"11":{"tf":1.0},"12":{"tf":1.0},"21":{"tf":1.4142135623730951},"22":{"tf":1.0},"24":{"tf":1.4142135623730951},"33":{"tf":1.0},"35":{"tf":1.0},"38":{"tf":1.0}}},"’":{"df":2,"docs":{"11":{"tf":1.0},"29":{"tf":1.0}}}}},"o":{"df":1,"docs":{"9":{"tf":1.0}},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"i":{"df":1,"docs":{"5":{"tf":1.0}}}},"df":0,"docs":{}}}}},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":3,"docs":{"15":{"tf":1.0},"3":{"tf":1.4142135623730951},"38":{"tf":1.0}}}},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"n":{"df":1,"docs":{"9":{"tf":1.0}}}}}},"m":{"b":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"21":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":1,"docs":{"23":{"tf":1.0}}},"m":{"a":{"df":0,"docs":{},"n":{"d":{"df":2,"docs":{"0":{"tf":1.0},"30":{"tf":1.7320508075688772}}},"df":0,"docs":{}}},"df":0,"docs":{}},"p":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"15":{"tf":1.4142135623730951}}}},"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"18":{"tf":1.0}}}}}},"n":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":1,"docs":{"4":{"tf":1.0}}}}}}},"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":3,"docs":{"2":{"tf":1.0},"23":{"tf":1.0},"29":{"tf":1.0}}}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":1,"docs":{"30":{"tf":1.0}}}}},"n":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"12":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"17":{"tf":1.0}}}}},"t":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"9":{"tf":1.0}}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"12":{"tf":1.0}},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"5":{"tf":1.0}}}}}},"df":0,"docs":{}}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":3,"docs":{"15":{"tf":1.0},"19":{"tf":1.0},"30":{"tf":1.0}}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":2,"docs":{"10":{"tf":1.0},"9":{"tf":1.0}}}}}}},"o":{"df":0,"docs":{},"r":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"23":{"tf":1.0}}}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"16":{"tf":1.0}}}}}},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"16":{"tf":1.0}}}}},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"34":{"tf":1.0}}}}}},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"/":{"df":0,"docs":{},"l":{"df":0,"docs":{},"m":{"df":0,"docs":{},"s":{"df":0,"docs":{},"k":{"df":0,"docs":{},"i":{"df":1,"docs":{"2":{"tf":1.0}}}}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"2":{"tf":1.0}}}}}}}}},"o":{"df":0,"docs":{},"p":{"_":{"0":{"0":{"0":{".":{"df":0,"docs":{},"p":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":1,"docs":{"34":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":2,"docs":{"0":{"tf":1.0},"34":{"tf":1.7320508075688772}},"s":{".":{"df":0,"docs":{},"j":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"34":{"tf":1.0}}}}}}},"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"c":{"df":1,"docs":{"13":{"tf":1.0}}},"df":0,"docs":{}}}}}}},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"v":{"df":1,"docs":{"10":{"tf":1.0}}}},"t":{"df":1,"docs":{"28":{"tf":1.7320508075688772}}}},"·":{"b":{"df":1,"docs":{"27":{"tf":1.0}}},"df":0,"docs":{}}},"d":{"[":{"(":{"df":0,"docs":{},"v":{"df":1,"docs":{"16":{"tf":1.0}}}},"df":0,"docs":{}},"a":{"df":0,"docs":{},"t":{"a":{"df":3,"docs":{"20":{"tf":1.0},"23":{"tf":1.0},"27":{"tf":1.4142135623730951}}},"df":0,"docs":{}}},"df":1,"docs":{"16":{"tf":1.4142135623730951}},"e":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":1,"docs":{"21":{"tf":1.0}}}}}}}},"df":0,"docs":{},"f":{"a":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"s":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"_":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"h":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"d":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"12":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":1,"docs":{"12":{"tf":1.0}}},"df":0,"docs":{}}}}}}}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"df":3,"docs":{"12":{"tf":1.0},"17":{"tf":1.0},"30":{"tf":1.4142135623730951}}}}}},"df":0,"docs":{}},"g":{"df":1,"docs":{"34":{"tf":1.0}},"r":{"a":{"d":{"df":1,"docs":{"29":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}},"n":{"df":0,"docs":{},"s":{"df":1,"docs":{"16":{"tf":1.0}}}},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"19":{"tf":1.0}}},"df":0,"docs":{}}}},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"v":{"df":1,"docs":{"5":{"tf":1.0}}}}},"s":{"c":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"b":{"df":2,"docs":{"3":{"tf":1.0},"7":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"t":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"(":{"&":{"df":0,"docs":{},"p":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"o":{"df":1,"docs":{"12":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":2,"docs":{"12":{"tf":1.0},"22":{"tf":1.0}}}}}},"df":7,"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"28":{"tf":1.0},"35":{"tf":1.7320508075688772},"37":{"tf":1.0}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"2":{"tf":1.0}},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":3,"docs":{"11":{"tf":1.0},"23":{"tf":1.0},"25":{"tf":1.0}}}}}}}}}}}},"i":{"a":{"df":0,"docs":{},"g":{"df":0,"docs":{},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":3,"docs":{"25":{"tf":1.0},"37":{"tf":1.0},"39":{"tf":1.0}}}}}}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"23":{"tf":1.0}}}},"u":{"df":0,"docs":{},"s":{"df":2,"docs":{"0":{"tf":1.0},"15":{"tf":1.4142135623730951}}}}}},"r":{"df":4,"docs":{"30":{"tf":1.0},"34":{"tf":1.0},"39":{"tf":1.0},"40":{"tf":1.0}},"e":{"c":{"df":0,"docs":{},"t":{"df":11,"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"15":{"tf":1.0},"18":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0},"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"_":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"_":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":1,"docs":{"9":{"tf":1.0}}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{},"’":{"df":1,"docs":{"5":{"tf":1.0}}}}}},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"15":{"tf":1.0}}}},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":3,"docs":{"25":{"tf":1.0},"29":{"tf":1.0},"39":{"tf":1.0}}}}}}},"df":0,"docs":{}}},"s":{"c":{"df":2,"docs":{"12":{"tf":1.4142135623730951},"4":{"tf":1.0}}},"df":0,"docs":{},"k":{"df":1,"docs":{"19":{"tf":1.0}}},"p":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"y":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"g":{"df":2,"docs":{"28":{"tf":1.4142135623730951},"36":{"tf":1.0}}}}}}},"o":{"c":{"df":1,"docs":{"2":{"tf":1.0}}},"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":2,"docs":{"0":{"tf":1.0},"3":{"tf":1.0}}},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"6":{"tf":1.0}}}}},"w":{"df":0,"docs":{},"n":{"df":2,"docs":{"15":{"tf":1.0},"17":{"tf":1.0}}}}},"r":{"a":{"df":0,"docs":{},"g":{"df":1,"docs":{"22":{"tf":1.0}}},"w":{"df":3,"docs":{"11":{"tf":1.0},"13":{"tf":1.0},"6":{"tf":1.0}},"n":{"df":1,"docs":{"33":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{"a":{"c":{"df":0,"docs":{},"h":{"df":5,"docs":{"16":{"tf":1.0},"28":{"tf":1.0},"3":{"tf":1.0},"40":{"tf":1.0},"9":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"4":{"tf":1.0}}}},"df":0,"docs":{}}}},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"v":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"/":{"a":{"df":0,"docs":{},"z":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":2,"docs":{"22":{"tf":1.0},"35":{"tf":1.0}}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":1,"docs":{"13":{"tf":1.0}},"e":{"df":0,"docs":{},"n":{"df":2,"docs":{"0":{"tf":1.0},"3":{"tf":1.0}}}}}}},"n":{"c":{"df":0,"docs":{},"o":{"d":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{}}},"d":{"df":1,"docs":{"2":{"tf":1.4142135623730951}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"g":{"df":0,"docs":{},"i":{"df":1,"docs":{"21":{"tf":1.0}}}}}},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{"df":1,"docs":{"21":{"tf":1.0}}}}},"v":{".":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"t":{"df":1,"docs":{"1":{"tf":1.0}}}}}}}}},"df":4,"docs":{"1":{"tf":1.0},"16":{"tf":1.0},"23":{"tf":1.4142135623730951},"32":{"tf":1.0}},"i":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":5,"docs":{"0":{"tf":1.7320508075688772},"15":{"tf":1.0},"16":{"tf":1.4142135623730951},"17":{"tf":1.0},"19":{"tf":1.0}}}}}},"m":{"a":{"df":0,"docs":{},"p":{":":{":":{"df":0,"docs":{},"f":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"_":{"d":{"a":{"df":0,"docs":{},"t":{"a":{"(":{"3":{"2":{"df":1,"docs":{"16":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":1,"docs":{"9":{"tf":1.0}}}},"df":0,"docs":{}}}},"q":{"df":0,"docs":{},"u":{"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"r":{"df":3,"docs":{"0":{"tf":1.0},"31":{"tf":1.0},"7":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":7,"docs":{"0":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0},"27":{"tf":1.7320508075688772},"39":{"tf":1.0}}}}}},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":2,"docs":{"21":{"tf":1.0},"22":{"tf":1.0}}}}}},"v":{"a":{"df":0,"docs":{},"l":{"_":{"df":0,"docs":{},"l":{"df":0,"docs":{},"m":{"(":{"df":0,"docs":{},"p":{"a":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"s":{".":{"df":0,"docs":{},"s":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"_":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{".":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"6":{"tf":1.0}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"v":{"df":0,"docs":{},"e":{"c":{"3":{":":{":":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"w":{"(":{"0":{".":{"0":{"df":1,"docs":{"6":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":1,"docs":{"6":{"tf":1.0}}}}},"df":2,"docs":{"29":{"tf":1.0},"40":{"tf":1.0}},"u":{"df":9,"docs":{"0":{"tf":2.0},"14":{"tf":1.0},"15":{"tf":1.0},"21":{"tf":1.0},"28":{"tf":1.4142135623730951},"3":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"y":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":3,"docs":{"0":{"tf":1.4142135623730951},"15":{"tf":1.0},"2":{"tf":1.0}}}}}}}},"x":{"a":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"10":{"tf":1.0}},"l":{"df":0,"docs":{},"i":{"df":6,"docs":{"23":{"tf":1.0},"27":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":1.0}}}}}},"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"/":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"f":{"df":0,"docs":{},"t":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"_":{"c":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"b":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{".":{"df":0,"docs":{},"r":{"df":1,"docs":{"28":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"c":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":1,"docs":{"2":{"tf":1.0}}}}},"df":0,"docs":{}}},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"24":{"tf":1.0}}}}},"p":{"(":{"df":0,"docs":{},"−":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"a":{"df":1,"docs":{"4":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{},"k":{"a":{"df":0,"docs":{},"p":{"df":0,"docs":{},"p":{"a":{"df":1,"docs":{"4":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":1,"docs":{"4":{"tf":1.0}}}}}}},"s":{"df":1,"docs":{"0":{"tf":1.0}},"u":{"df":0,"docs":{},"r":{"df":5,"docs":{"11":{"tf":1.4142135623730951},"27":{"tf":1.4142135623730951},"28":{"tf":1.0},"33":{"tf":2.449489742783178},"35":{"tf":1.0}}}}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"17":{"tf":1.0}}}}},"r":{"a":{"c":{"df":0,"docs":{},"t":{"_":{"c":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":1,"docs":{"13":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":1,"docs":{"34":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"f":{"(":{"0":{"df":1,"docs":{"5":{"tf":1.0}}},"df":0,"docs":{}},"6":{"4":{")":{".":{"df":0,"docs":{},"s":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":1,"docs":{"9":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":1,"docs":{"9":{"tf":1.0}}},"df":0,"docs":{}},"_":{"df":0,"docs":{},"l":{"df":0,"docs":{},"m":{"(":{"df":0,"docs":{},"l":{"df":1,"docs":{"3":{"tf":1.0}}}},"df":0,"docs":{}}},"s":{"df":0,"docs":{},"k":{"df":0,"docs":{},"y":{"(":{"df":0,"docs":{},"l":{"df":2,"docs":{"3":{"tf":1.0},"5":{"tf":1.0}}},"z":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"5":{"tf":1.0}}}}}}}}},"df":0,"docs":{}}},"u":{"df":0,"docs":{},"n":{"(":{"0":{"df":1,"docs":{"4":{"tf":1.0}}},"df":0,"docs":{},"l":{"df":1,"docs":{"3":{"tf":1.0}}}},"df":1,"docs":{"4":{"tf":1.0}}}}}},"a":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":2,"docs":{"18":{"tf":1.0},"27":{"tf":1.0}}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":2,"docs":{"25":{"tf":1.0},"39":{"tf":1.0}}}}}},"l":{"df":0,"docs":{},"l":{"df":2,"docs":{"14":{"tf":1.0},"28":{"tf":1.4142135623730951}}},"s":{"df":1,"docs":{"35":{"tf":1.0}}}},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"2":{"tf":1.0}}}}},"df":1,"docs":{"5":{"tf":1.0}},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"d":{"df":3,"docs":{"13":{"tf":1.4142135623730951},"25":{"tf":1.0},"39":{"tf":1.0}}},"df":0,"docs":{}}},"f":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":1,"docs":{"12":{"tf":1.0}}}}},"l":{"df":0,"docs":{},"e":{"df":5,"docs":{"19":{"tf":1.0},"25":{"tf":1.4142135623730951},"29":{"tf":1.0},"30":{"tf":1.0},"39":{"tf":1.0}},"n":{"a":{"df":0,"docs":{},"m":{"df":1,"docs":{"25":{"tf":1.0}}}},"df":0,"docs":{}}},"l":{"df":1,"docs":{"28":{"tf":1.0}}}},"n":{"d":{"df":1,"docs":{"12":{"tf":1.0}}},"df":0,"docs":{}},"r":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":4,"docs":{"27":{"tf":1.0},"28":{"tf":1.0},"30":{"tf":1.0},"35":{"tf":1.0}}}}},"t":{".":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"23":{"tf":1.0}}}}}},"j":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":2,"docs":{"37":{"tf":1.0},"38":{"tf":1.0}}}}}},"p":{"a":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"s":{".":{"df":0,"docs":{},"s":{"df":0,"docs":{},"k":{"df":0,"docs":{},"y":{".":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"b":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},":":{":":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"l":{"df":0,"docs":{},"m":{"_":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"_":{"df":0,"docs":{},"h":{"d":{"df":0,"docs":{},"r":{"df":1,"docs":{"20":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"l":{"a":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"_":{"d":{"a":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"25":{"tf":1.0}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"_":{"df":0,"docs":{},"l":{"df":0,"docs":{},"m":{"_":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"_":{"df":0,"docs":{},"h":{"d":{"df":0,"docs":{},"r":{"(":{"&":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"23":{"tf":1.0}}}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"s":{"df":0,"docs":{},"k":{"df":0,"docs":{},"y":{"_":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"_":{"df":0,"docs":{},"l":{"d":{"df":0,"docs":{},"r":{"df":1,"docs":{"24":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}},"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{":":{":":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"a":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":1,"docs":{"23":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":1,"docs":{"23":{"tf":1.0}}}}}}}},"df":15,"docs":{"0":{"tf":1.7320508075688772},"11":{"tf":1.0},"16":{"tf":1.0},"2":{"tf":1.0},"22":{"tf":1.4142135623730951},"23":{"tf":1.7320508075688772},"24":{"tf":1.0},"25":{"tf":2.0},"27":{"tf":1.0},"28":{"tf":1.0},"30":{"tf":1.0},"37":{"tf":1.7320508075688772},"38":{"tf":1.4142135623730951},"39":{"tf":1.0},"40":{"tf":1.0}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":1,"docs":{"22":{"tf":1.0}}}}}}}},"’":{"df":1,"docs":{"24":{"tf":1.4142135623730951}}}},"v":{"df":0,"docs":{},"e":{"df":1,"docs":{"5":{"tf":1.0}}}},"x":{"df":4,"docs":{"16":{"tf":1.4142135623730951},"22":{"tf":1.0},"28":{"tf":1.4142135623730951},"37":{"tf":1.0}}}},"l":{"a":{"df":0,"docs":{},"g":{"df":1,"docs":{"30":{"tf":1.0}}},"t":{"df":1,"docs":{"30":{"tf":1.0}}}},"df":0,"docs":{},"o":{"a":{"df":0,"docs":{},"t":{"df":3,"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"4":{"tf":1.0}}}},"df":0,"docs":{}},"u":{"df":0,"docs":{},"x":{"df":1,"docs":{"28":{"tf":1.0}}}}},"n":{"df":7,"docs":{"1":{"tf":1.0},"12":{"tf":1.0},"16":{"tf":1.0},"23":{"tf":1.0},"27":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":1.0}}},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":1,"docs":{"10":{"tf":1.0}},"u":{"df":0,"docs":{},"l":{"a":{"df":1,"docs":{"5":{"tf":1.0}}},"df":0,"docs":{}}}}},"u":{"df":0,"docs":{},"n":{"d":{")":{".":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"_":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":1,"docs":{"12":{"tf":1.0}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":1,"docs":{"12":{"tf":1.0}}},"df":0,"docs":{}}},"v":{"df":1,"docs":{"34":{"tf":1.0}}}},"r":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":1,"docs":{"9":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"q":{"df":0,"docs":{},"u":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"c":{"df":1,"docs":{"15":{"tf":1.0}}},"df":0,"docs":{}}}}}},"o":{"df":0,"docs":{},"z":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":2,"docs":{"22":{"tf":1.0},"28":{"tf":1.0}}}}}}},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":4,"docs":{"2":{"tf":1.0},"21":{"tf":1.0},"3":{"tf":1.0},"40":{"tf":1.0}}}},"n":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"16":{"tf":1.0}}}}}}},"df":0,"docs":{}}}},"g":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"a":{"df":4,"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"31":{"tf":1.0},"33":{"tf":1.0}}},"df":0,"docs":{}}},"u":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"a":{"df":0,"docs":{},"n":{"df":1,"docs":{"23":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":1,"docs":{"28":{"tf":1.0}}}}}}},"t":{"df":1,"docs":{"21":{"tf":1.0}}}},"i":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"df":2,"docs":{"4":{"tf":1.0},"9":{"tf":1.0}},"n":{"df":4,"docs":{"20":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"25":{"tf":1.0}}}}}},"l":{"df":0,"docs":{},"o":{"b":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"27":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{},"w":{"df":1,"docs":{"4":{"tf":1.0}}}}},"r":{"a":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"28":{"tf":1.7320508075688772}}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"27":{"tf":1.0}}}},"df":0,"docs":{}},"i":{"d":{"df":1,"docs":{"22":{"tf":1.0}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"d":{"df":2,"docs":{"29":{"tf":1.7320508075688772},"40":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"p":{"df":2,"docs":{"29":{"tf":1.0},"3":{"tf":1.0}}}},"w":{"df":1,"docs":{"28":{"tf":1.0}}}}},"t":{"df":1,"docs":{"40":{"tf":1.0}}}},"h":{")":{"?":{".":{"d":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"(":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{".":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"12":{"tf":1.0}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"f":{"df":2,"docs":{"12":{"tf":1.0},"17":{"tf":1.0}}}},"s":{"df":0,"docs":{},"h":{"df":2,"docs":{"19":{"tf":1.4142135623730951},"30":{"tf":1.0}}}},"z":{"df":0,"docs":{},"i":{"df":2,"docs":{"28":{"tf":1.0},"3":{"tf":1.0}}}}},"d":{"df":0,"docs":{},"r":{"df":7,"docs":{"0":{"tf":1.7320508075688772},"10":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.4142135623730951},"24":{"tf":1.4142135623730951},"31":{"tf":1.0},"37":{"tf":1.4142135623730951}}}},"df":2,"docs":{"12":{"tf":1.4142135623730951},"9":{"tf":1.4142135623730951}},"e":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"t":{"df":7,"docs":{"19":{"tf":1.0},"27":{"tf":1.4142135623730951},"31":{"tf":1.0},"32":{"tf":1.0},"36":{"tf":1.0},"7":{"tf":1.4142135623730951},"9":{"tf":1.4142135623730951}}}}}},"l":{"d":{"df":2,"docs":{"22":{"tf":1.0},"37":{"tf":1.0}}},"df":0,"docs":{}},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"17":{"tf":1.0},"3":{"tf":1.0}}}}}}}}}},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":2,"docs":{"15":{"tf":1.0},"28":{"tf":1.0}}}},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"22":{"tf":1.0}}}},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"m":{"df":1,"docs":{"28":{"tf":1.7320508075688772}}}},"df":0,"docs":{}}}}}}},"o":{"df":0,"docs":{},"l":{"d":{"df":2,"docs":{"17":{"tf":1.0},"29":{"tf":1.0}}},"df":0,"docs":{}},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"z":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":3,"docs":{"3":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0}},"t":{"df":2,"docs":{"28":{"tf":1.0},"9":{"tf":1.0}}}}}}}}}},"i":{"/":{"df":0,"docs":{},"o":{"df":1,"docs":{"0":{"tf":1.0}}}},"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":3,"docs":{"2":{"tf":1.0},"39":{"tf":1.0},"6":{"tf":1.0}}}}}},"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":2,"docs":{"0":{"tf":1.0},"13":{"tf":1.0}}}}}}}},"m":{"a":{"df":0,"docs":{},"g":{"df":10,"docs":{"10":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"26":{"tf":1.0},"28":{"tf":1.0},"9":{"tf":1.4142135623730951}},"e":{"df":0,"docs":{},"’":{"df":1,"docs":{"28":{"tf":1.0}}}}}},"df":0,"docs":{},"g":{"df":1,"docs":{"16":{"tf":1.0}}},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"4":{"tf":1.0}}}}}}}}}},"n":{"c":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"d":{"df":1,"docs":{"12":{"tf":1.0}}},"df":0,"docs":{}}},"o":{"df":0,"docs":{},"m":{"df":1,"docs":{"16":{"tf":1.0}}}}},"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"d":{"df":2,"docs":{"2":{"tf":1.0},"21":{"tf":1.0}}},"df":0,"docs":{}}}}},"i":{"df":0,"docs":{},"v":{"df":0,"docs":{},"i":{"d":{"df":0,"docs":{},"u":{"df":1,"docs":{"25":{"tf":1.0}}}},"df":0,"docs":{}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"q":{"df":0,"docs":{},"u":{"df":1,"docs":{"27":{"tf":1.0}}}}},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":1,"docs":{"24":{"tf":1.0}}}}}},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"22":{"tf":1.0}}}}}}},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":1,"docs":{"23":{"tf":1.4142135623730951}}}}},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"4":{"tf":1.0}}}}},"p":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":7,"docs":{"22":{"tf":1.0},"24":{"tf":1.0},"33":{"tf":1.4142135623730951},"34":{"tf":1.0},"35":{"tf":1.4142135623730951},"37":{"tf":1.0},"38":{"tf":1.4142135623730951}},"’":{"df":1,"docs":{"23":{"tf":1.0}}}}}},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"15":{"tf":1.0}}}}}}},"i":{"d":{"df":1,"docs":{"16":{"tf":1.0}}},"df":0,"docs":{}},"t":{"df":0,"docs":{},"e":{"a":{"d":{"df":1,"docs":{"28":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"df":3,"docs":{"16":{"tf":1.4142135623730951},"17":{"tf":1.0},"18":{"tf":1.0}}}},"n":{"df":0,"docs":{},"s":{"df":1,"docs":{"15":{"tf":1.0}}}}}},"v":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":4,"docs":{"0":{"tf":1.0},"23":{"tf":1.0},"27":{"tf":1.4142135623730951},"28":{"tf":1.0}}}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"v":{"df":1,"docs":{"20":{"tf":1.0}}}}}}},"o":{":":{":":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"a":{"d":{"_":{"df":0,"docs":{},"p":{"df":0,"docs":{},"f":{"df":0,"docs":{},"m":{"df":1,"docs":{"10":{"tf":1.0}}}},"n":{"df":0,"docs":{},"g":{"df":1,"docs":{"10":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"w":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"p":{"df":0,"docs":{},"f":{"df":0,"docs":{},"m":{"df":1,"docs":{"10":{"tf":1.0}}}},"n":{"df":0,"docs":{},"g":{"df":1,"docs":{"10":{"tf":1.0}}}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"23":{"tf":1.0},"30":{"tf":1.0}}}}}},"j":{"a":{"c":{"df":0,"docs":{},"o":{"b":{"df":0,"docs":{},"i":{"a":{"df":0,"docs":{},"n":{"df":1,"docs":{"23":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":7,"docs":{"11":{"tf":1.0},"25":{"tf":1.0},"30":{"tf":1.4142135623730951},"35":{"tf":1.0},"37":{"tf":1.0},"39":{"tf":1.0},"40":{"tf":1.0}}}}}},"k":{"a":{"df":0,"docs":{},"p":{"df":0,"docs":{},"p":{"a":{"df":7,"docs":{"1":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.0},"3":{"tf":1.0},"30":{"tf":1.0},"4":{"tf":1.4142135623730951},"6":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":1,"docs":{"16":{"tf":1.4142135623730951}}}}}},"y":{"df":1,"docs":{"19":{"tf":1.0}}}},"l":{"df":2,"docs":{"28":{"tf":1.0},"36":{"tf":1.0}}},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"d":{"df":0,"docs":{},"g":{"df":1,"docs":{"22":{"tf":1.0}}}},"df":0,"docs":{}}},"n":{"df":2,"docs":{"13":{"tf":1.0},"23":{"tf":1.0}}}}}}},"l":{"_":{"df":0,"docs":{},"l":{"df":0,"docs":{},"m":{"df":1,"docs":{"21":{"tf":1.0}}}},"s":{"df":0,"docs":{},"k":{"df":0,"docs":{},"i":{"df":1,"docs":{"21":{"tf":1.0}}}},"u":{"df":0,"docs":{},"n":{"df":1,"docs":{"21":{"tf":1.0}}}}}},"a":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":4,"docs":{"25":{"tf":1.0},"29":{"tf":1.0},"39":{"tf":1.0},"40":{"tf":1.4142135623730951}},"s":{".":{"df":0,"docs":{},"j":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"l":{"df":2,"docs":{"39":{"tf":1.0},"40":{"tf":1.0}}}}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"0":{"tf":1.0}}},"df":0,"docs":{}}}},"n":{"d":{"df":1,"docs":{"14":{"tf":1.0}}},"df":0,"docs":{}},"r":{"df":0,"docs":{},"g":{"df":1,"docs":{"4":{"tf":1.0}},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"12":{"tf":1.0}}}}}}}},"d":{"df":0,"docs":{},"r":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":1,"docs":{"11":{"tf":1.0}}}}}}},"t":{"df":0,"docs":{},"o":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"v":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"11":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}},"df":9,"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.0},"11":{"tf":1.4142135623730951},"12":{"tf":1.0},"21":{"tf":1.7320508075688772},"22":{"tf":1.0},"24":{"tf":1.0},"33":{"tf":1.4142135623730951},"38":{"tf":1.4142135623730951}},"i":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"g":{"df":1,"docs":{"12":{"tf":1.0}},"e":{":":{":":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"w":{"(":{"df":0,"docs":{},"w":{"df":1,"docs":{"12":{"tf":1.0}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}},"df":1,"docs":{"3":{"tf":1.0}},"e":{"a":{"df":0,"docs":{},"v":{"df":1,"docs":{"24":{"tf":1.0}}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"t":{"/":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"t":{"df":1,"docs":{"12":{"tf":1.0}}}}}}}},"df":1,"docs":{"38":{"tf":1.0}}}},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"16":{"tf":1.0}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"g":{"df":2,"docs":{"0":{"tf":1.0},"23":{"tf":1.0}}}}}},"df":0,"docs":{}}}}},"i":{"b":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":2,"docs":{"0":{"tf":1.0},"2":{"tf":1.4142135623730951}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{"df":1,"docs":{"5":{"tf":1.0}}},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"t":{"df":3,"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"28":{"tf":1.0}}}}},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":2,"docs":{"13":{"tf":1.0},"4":{"tf":1.0}}}}},"n":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"r":{"df":3,"docs":{"10":{"tf":1.0},"16":{"tf":1.0},"9":{"tf":1.0}}}},"df":4,"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"25":{"tf":1.0},"30":{"tf":1.0}}}},"t":{"df":1,"docs":{"15":{"tf":1.0}}},"v":{"df":0,"docs":{},"e":{"df":2,"docs":{"2":{"tf":1.0},"21":{"tf":1.0}}}}},"m":{"df":3,"docs":{"0":{"tf":1.0},"20":{"tf":1.0},"3":{"tf":1.0}},"p":{"a":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"m":{"df":2,"docs":{"1":{"tf":1.0},"6":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"s":{"df":0,"docs":{},"k":{"df":0,"docs":{},"i":{"df":13,"docs":{"0":{"tf":1.7320508075688772},"25":{"tf":1.0},"30":{"tf":1.0},"31":{"tf":1.0},"32":{"tf":1.4142135623730951},"33":{"tf":1.4142135623730951},"34":{"tf":1.0},"35":{"tf":1.0},"36":{"tf":1.4142135623730951},"37":{"tf":1.0},"38":{"tf":1.0},"39":{"tf":1.0},"40":{"tf":1.0}}},"y":{":":{":":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"v":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"p":{":":{":":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"v":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"16":{"tf":1.0}}}},"df":0,"docs":{}}}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"g":{"df":1,"docs":{"27":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"d":{"_":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"l":{"df":1,"docs":{"9":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}}}},"{":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":1,"docs":{"12":{"tf":1.0}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":6,"docs":{"1":{"tf":1.0},"12":{"tf":1.0},"16":{"tf":1.0},"23":{"tf":1.0},"27":{"tf":1.0},"6":{"tf":1.0}}}}}}},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{":":{":":{"df":0,"docs":{},"{":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"l":{"df":0,"docs":{},"m":{"_":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"_":{"df":0,"docs":{},"h":{"d":{"df":0,"docs":{},"r":{"df":1,"docs":{"23":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{":":{":":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"c":{"3":{"df":1,"docs":{"6":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"l":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"a":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"m":{"df":1,"docs":{"23":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"s":{":":{":":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"_":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":0,"docs":{},"s":{"df":1,"docs":{"27":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"o":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{":":{":":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"v":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"23":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"s":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"12":{"tf":1.0}}}}}}}}}},"{":{"df":0,"docs":{},"l":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"a":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"m":{"df":2,"docs":{"1":{"tf":1.0},"6":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"t":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{":":{":":{"df":0,"docs":{},"{":{"df":0,"docs":{},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":2,"docs":{"16":{"tf":1.0},"23":{"tf":1.0}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"n":{"(":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"a":{"df":1,"docs":{"4":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}},"o":{",":{"df":0,"docs":{},"h":{"df":0,"docs":{},"i":{"df":1,"docs":{"33":{"tf":1.0}}}}},"a":{"d":{"_":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"_":{"b":{"df":0,"docs":{},"u":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"d":{"df":1,"docs":{"19":{"tf":1.0}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"t":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"19":{"tf":1.0}}}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}},"b":{"df":0,"docs":{},"e":{"df":4,"docs":{"0":{"tf":1.0},"28":{"tf":1.4142135623730951},"3":{"tf":1.0},"6":{"tf":1.0}},"’":{"df":1,"docs":{"4":{"tf":1.0}}}}},"df":0,"docs":{},"g":{"df":2,"docs":{"23":{"tf":1.0},"33":{"tf":1.0}}},"o":{"df":0,"docs":{},"k":{"df":1,"docs":{"28":{"tf":1.0}}},"p":{"df":1,"docs":{"16":{"tf":1.0}}}},"s":{"df":0,"docs":{},"s":{"df":6,"docs":{"15":{"tf":1.0},"21":{"tf":1.4142135623730951},"24":{"tf":1.0},"25":{"tf":1.0},"37":{"tf":1.0},"39":{"tf":1.0}},"e":{"df":0,"docs":{},"s":{":":{":":{"df":0,"docs":{},"l":{"df":0,"docs":{},"m":{"_":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"_":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"21":{"tf":1.0}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"p":{"a":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"m":{"_":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"21":{"tf":1.0}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"t":{"df":1,"docs":{"21":{"tf":1.0}}}}}}}}}}},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"28":{"tf":1.4142135623730951}}}}}}},"m":{"a":{"df":0,"docs":{},"g":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"d":{"df":1,"docs":{"24":{"tf":1.0}}},"df":0,"docs":{}}}}}},"i":{"df":0,"docs":{},"n":{"df":7,"docs":{"1":{"tf":1.0},"12":{"tf":1.0},"16":{"tf":1.0},"23":{"tf":1.0},"27":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":1.0}}}},"k":{"df":0,"docs":{},"e":{"_":{"c":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"13":{"tf":1.0}}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":3,"docs":{"16":{"tf":1.0},"27":{"tf":1.0},"5":{"tf":1.0}}}},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"34":{"tf":1.0}}}}}}}},"p":{"df":9,"docs":{"0":{"tf":2.0},"10":{"tf":1.4142135623730951},"11":{"tf":1.4142135623730951},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"31":{"tf":1.0},"7":{"tf":1.4142135623730951},"9":{"tf":1.0}}},"r":{"df":0,"docs":{},"q":{"df":0,"docs":{},"u":{"a":{"df":0,"docs":{},"r":{"d":{"df":0,"docs":{},"t":{"df":2,"docs":{"0":{"tf":1.0},"23":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"t":{"c":{"df":0,"docs":{},"h":{"df":3,"docs":{"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"c":{"df":2,"docs":{"19":{"tf":1.0},"30":{"tf":1.0}}},"df":0,"docs":{},"x":{"df":5,"docs":{"0":{"tf":1.4142135623730951},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.7320508075688772},"30":{"tf":1.0}}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"15":{"tf":1.0}}}},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"w":{"df":1,"docs":{"0":{"tf":1.0}}}}}}},"x":{"_":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"30":{"tf":1.0}}}}}}},"df":1,"docs":{"30":{"tf":1.0}}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"n":{"df":6,"docs":{"21":{"tf":1.0},"23":{"tf":1.4142135623730951},"27":{"tf":1.0},"28":{"tf":1.0},"29":{"tf":1.0},"3":{"tf":1.4142135623730951}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":2,"docs":{"27":{"tf":1.0},"28":{"tf":1.0}}}}}},"s":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":3,"docs":{"14":{"tf":1.4142135623730951},"24":{"tf":1.0},"28":{"tf":1.0}}}}}},"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"o":{"d":{"df":1,"docs":{"29":{"tf":1.0}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"i":{"c":{"df":4,"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.0}},"s":{":":{":":{"b":{"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"k":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"d":{"_":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"29":{"tf":1.0}}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":0,"docs":{},"s":{"df":1,"docs":{"27":{"tf":1.0}}}}},"s":{"df":0,"docs":{},"h":{"a":{"d":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"f":{"df":0,"docs":{},"t":{"df":1,"docs":{"28":{"tf":1.0}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}},"i":{"_":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":0,"docs":{},"s":{"df":1,"docs":{"27":{"tf":1.0}}}}}},"df":0,"docs":{}},"u":{"df":0,"docs":{},"n":{"_":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"r":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"27":{"tf":1.0}}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"2":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"21":{"tf":1.0}}}}}},"x":{"df":1,"docs":{"23":{"tf":1.0}}}},"o":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":6,"docs":{"0":{"tf":2.449489742783178},"2":{"tf":1.0},"21":{"tf":1.4142135623730951},"3":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}}}}},"df":0,"docs":{},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":2,"docs":{"2":{"tf":1.0},"28":{"tf":1.0}}}}}}},"r":{"df":0,"docs":{},"e":{"df":1,"docs":{"24":{"tf":1.0}}}}},"u":{"c":{"df":0,"docs":{},"h":{"df":1,"docs":{"24":{"tf":1.0}}}},"df":0,"docs":{},"t":{"df":2,"docs":{"12":{"tf":1.0},"16":{"tf":1.0}}}}},"n":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":1,"docs":{"25":{"tf":1.0}}}},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"28":{"tf":1.0}}}}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"23":{"tf":1.0}}}},"df":0,"docs":{},"e":{"d":{"df":2,"docs":{"0":{"tf":1.0},"30":{"tf":1.0}}},"df":0,"docs":{}},"t":{"df":0,"docs":{},"w":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"k":{"df":1,"docs":{"20":{"tf":1.0}}}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"15":{"tf":1.0},"26":{"tf":1.0}}}}},"x":{"df":0,"docs":{},"t":{"df":1,"docs":{"7":{"tf":1.0}}}}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":2,"docs":{"23":{"tf":1.0},"37":{"tf":1.0}}}}},"o":{"c":{"a":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"2":{"tf":1.0}}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":1,"docs":{"23":{"tf":1.0}}}},"n":{"df":0,"docs":{},"e":{"df":2,"docs":{"23":{"tf":1.0},"36":{"tf":1.0}}},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"r":{"df":2,"docs":{"20":{"tf":1.0},"22":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"r":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"l":{"df":2,"docs":{"28":{"tf":1.0},"5":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}},"t":{"df":0,"docs":{},"h":{"df":2,"docs":{"22":{"tf":1.0},"35":{"tf":1.0}}}}},"u":{"df":0,"docs":{},"m":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"0":{"tf":1.0}}}}},"df":0,"docs":{}}}},"o":{"b":{"df":0,"docs":{},"j":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"30":{"tf":1.0}}}},"df":0,"docs":{}}}},"c":{"c":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"d":{"df":2,"docs":{"17":{"tf":1.0},"28":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{},"k":{"df":6,"docs":{"1":{"tf":1.0},"12":{"tf":1.0},"16":{"tf":1.0},"23":{"tf":1.0},"27":{"tf":1.0},"6":{"tf":1.0}}},"n":{"c":{"df":1,"docs":{"16":{"tf":1.0}}},"df":7,"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"2":{"tf":1.0},"25":{"tf":1.0},"30":{"tf":1.0},"39":{"tf":1.0}}},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"26":{"tf":1.0}}}},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":2,"docs":{"23":{"tf":1.0},"27":{"tf":1.0}}},"o":{"df":0,"docs":{},"n":{"df":3,"docs":{"11":{"tf":1.0},"30":{"tf":1.0},"33":{"tf":1.0}}}}}}},"r":{"a":{"c":{"df":0,"docs":{},"l":{"df":2,"docs":{"18":{"tf":1.4142135623730951},"2":{"tf":1.0}}}},"df":0,"docs":{}},"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":4,"docs":{"24":{"tf":1.0},"25":{"tf":1.0},"28":{"tf":1.0},"39":{"tf":1.0}}}}},"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"o":{"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":0,"docs":{},"h":{"df":2,"docs":{"15":{"tf":1.0},"17":{"tf":1.0}}}}},"df":0,"docs":{}}}}}}},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"29":{"tf":1.0}}}}}},"u":{"df":0,"docs":{},"t":{">":{".":{"df":0,"docs":{},"j":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"33":{"tf":1.0}}}}}}},"df":0,"docs":{}},"d":{"df":0,"docs":{},"o":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":3,"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"28":{"tf":1.0}}}}}},"df":10,"docs":{"31":{"tf":1.0},"32":{"tf":1.4142135623730951},"33":{"tf":1.4142135623730951},"34":{"tf":1.0},"35":{"tf":1.0},"36":{"tf":1.0},"37":{"tf":1.0},"38":{"tf":1.0},"39":{"tf":1.0},"40":{"tf":1.0}},"p":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":4,"docs":{"13":{"tf":1.0},"17":{"tf":1.0},"25":{"tf":1.0},"39":{"tf":1.0}}}}},"s":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"5":{"tf":1.0}}},"df":0,"docs":{}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"l":{"df":2,"docs":{"15":{"tf":1.0},"29":{"tf":1.0}}}},"c":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":2,"docs":{"23":{"tf":1.0},"28":{"tf":1.0}}}}},"df":0,"docs":{}},"df":4,"docs":{"12":{"tf":1.0},"22":{"tf":1.4142135623730951},"6":{"tf":1.0},"9":{"tf":1.0}},"r":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"30":{"tf":1.0}}},"df":0,"docs":{}}}}}}},"p":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"12":{"tf":1.0}}}},"r":{"df":1,"docs":{"29":{"tf":1.0}}}},"n":{"df":0,"docs":{},"o":{".":{"d":{"a":{"df":0,"docs":{},"t":{"a":{".":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"(":{"1":{"0":{"0":{"df":1,"docs":{"12":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{},"p":{"df":0,"docs":{},"f":{"df":0,"docs":{},"m":{"df":3,"docs":{"32":{"tf":1.0},"33":{"tf":1.4142135623730951},"37":{"tf":1.0}}}}},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"p":{"df":0,"docs":{},"i":{"df":0,"docs":{},"x":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"(":{"df":0,"docs":{},"u":{"df":1,"docs":{"12":{"tf":1.0}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}}}},"_":{"df":0,"docs":{},"l":{"d":{"df":0,"docs":{},"r":{".":{"df":0,"docs":{},"p":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":4,"docs":{"33":{"tf":1.4142135623730951},"34":{"tf":1.0},"35":{"tf":1.0},"38":{"tf":1.0}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":3,"docs":{"12":{"tf":1.0},"39":{"tf":1.0},"40":{"tf":1.0}},"r":{"a":{"df":0,"docs":{},"m":{"a":{"df":21,"docs":{"0":{"tf":2.0},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.4142135623730951},"14":{"tf":1.0},"15":{"tf":1.4142135623730951},"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.4142135623730951},"23":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.4142135623730951},"26":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.0},"29":{"tf":1.0},"32":{"tf":1.0},"37":{"tf":1.0},"38":{"tf":1.0},"39":{"tf":1.0},"40":{"tf":1.0}},"’":{"df":2,"docs":{"20":{"tf":1.0},"21":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"r":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":2,"docs":{"25":{"tf":1.0},"39":{"tf":1.0}}}}}},"m":{"df":5,"docs":{"1":{"tf":1.0},"31":{"tf":1.0},"32":{"tf":1.0},"36":{"tf":1.0},"6":{"tf":2.0}},"e":{"df":0,"docs":{},"t":{"df":15,"docs":{"0":{"tf":1.4142135623730951},"19":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.4142135623730951},"23":{"tf":1.4142135623730951},"25":{"tf":1.0},"28":{"tf":1.4142135623730951},"3":{"tf":1.7320508075688772},"30":{"tf":1.0},"31":{"tf":1.0},"32":{"tf":1.0},"36":{"tf":1.0},"37":{"tf":1.4142135623730951},"39":{"tf":1.0},"6":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"5":{"tf":1.0}}}}}},"r":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":1,"docs":{"23":{"tf":1.0}}}}},"df":0,"docs":{}},"s":{".":{"df":0,"docs":{},"s":{"df":0,"docs":{},"k":{"df":0,"docs":{},"y":{".":{"df":0,"docs":{},"w":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"k":{"df":0,"docs":{},"y":{"[":{"2":{"]":{")":{".":{"a":{"b":{"df":1,"docs":{"6":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}},"df":0,"docs":{},"t":{"df":2,"docs":{"17":{"tf":1.0},"22":{"tf":1.0}},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"28":{"tf":1.0}}}}}},"s":{"df":0,"docs":{},"s":{"/":{"df":0,"docs":{},"f":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":1,"docs":{"2":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":1,"docs":{"22":{"tf":1.0}}}},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"22":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":7,"docs":{"0":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0},"25":{"tf":1.0},"29":{"tf":1.0},"39":{"tf":1.4142135623730951},"40":{"tf":1.4142135623730951}},"e":{"df":0,"docs":{},"z":{"df":2,"docs":{"0":{"tf":1.0},"5":{"tf":1.0}}}},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"13":{"tf":1.0}}}},"df":0,"docs":{}}}},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"b":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}}}}}},"f":{"df":0,"docs":{},"m":{"df":6,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"25":{"tf":1.0},"31":{"tf":1.0},"35":{"tf":1.0},"39":{"tf":1.0}}}},"i":{")":{".":{"a":{"b":{"df":1,"docs":{"9":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"c":{"df":0,"docs":{},"k":{"df":2,"docs":{"12":{"tf":1.0},"22":{"tf":1.0}}}},"df":1,"docs":{"9":{"tf":1.0}},"n":{"df":0,"docs":{},"h":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":2,"docs":{"0":{"tf":1.0},"34":{"tf":1.0}}}}}},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"2":{"tf":1.0}}}}}}},"x":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":4,"docs":{"16":{"tf":2.0},"17":{"tf":1.4142135623730951},"18":{"tf":1.4142135623730951},"24":{"tf":1.0}}}}}},"l":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"27":{"tf":1.0}}}},"n":{"df":0,"docs":{},"e":{"df":6,"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.7320508075688772},"32":{"tf":1.0},"9":{"tf":1.0}}}}},"df":0,"docs":{},"u":{"df":4,"docs":{"0":{"tf":1.0},"29":{"tf":1.0},"34":{"tf":1.0},"40":{"tf":1.0}}}},"n":{"df":0,"docs":{},"g":{"df":3,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"31":{"tf":1.0}}}},"o":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":3,"docs":{"17":{"tf":1.4142135623730951},"28":{"tf":1.0},"4":{"tf":1.0}}}}},"p":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":1,"docs":{"28":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"t":{"a":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":6,"docs":{"15":{"tf":1.0},"22":{"tf":1.4142135623730951},"27":{"tf":1.0},"3":{"tf":1.0},"35":{"tf":1.0},"37":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":2,"docs":{"0":{"tf":1.0},"16":{"tf":1.0}}}}}}}},"d":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"27":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"a":{"df":0,"docs":{},"m":{"df":1,"docs":{"5":{"tf":1.0}}}},"df":0,"docs":{}}}},"v":{"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"w":{"df":2,"docs":{"31":{"tf":1.4142135623730951},"32":{"tf":1.0}}}}}}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":2,"docs":{"36":{"tf":1.0},"40":{"tf":1.0}},"l":{"df":0,"docs":{},"n":{"!":{"(":{"\\"":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"v":{"df":1,"docs":{"23":{"tf":1.0}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"o":{"b":{"df":0,"docs":{},"e":{".":{"df":0,"docs":{},"p":{"df":0,"docs":{},"f":{"df":0,"docs":{},"m":{"df":2,"docs":{"32":{"tf":1.4142135623730951},"36":{"tf":1.0}}}},"n":{"df":0,"docs":{},"g":{"df":1,"docs":{"32":{"tf":1.0}}}}}},"df":10,"docs":{"0":{"tf":1.4142135623730951},"15":{"tf":1.0},"16":{"tf":1.0},"20":{"tf":1.0},"23":{"tf":1.0},"26":{"tf":1.0},"28":{"tf":1.0},"32":{"tf":1.7320508075688772},"36":{"tf":1.0},"40":{"tf":1.0}},"s":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":2,"docs":{"16":{"tf":1.0},"17":{"tf":1.0}},"e":{":":{":":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"a":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":1,"docs":{"16":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}},"d":{"df":0,"docs":{},"u":{"c":{"df":2,"docs":{"13":{"tf":1.0},"29":{"tf":1.0}},"t":{"df":1,"docs":{"0":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":1,"docs":{"2":{"tf":1.0}}}}}}},"v":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"0":{"tf":1.0}}},"df":0,"docs":{}}}}},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":1,"docs":{"18":{"tf":1.0}}}}}},"q":{"df":0,"docs":{},"u":{"a":{"d":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"17":{"tf":1.0}}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":1,"docs":{"22":{"tf":1.4142135623730951}}}}}},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"z":{"df":2,"docs":{"11":{"tf":1.0},"33":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":1,"docs":{"23":{"tf":1.0}}}}}}},"df":0,"docs":{}}},"r":{"a":{"d":{"df":1,"docs":{"12":{"tf":1.0}},"i":{"a":{"df":0,"docs":{},"n":{"c":{"df":7,"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"16":{"tf":1.7320508075688772},"24":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":1.0}}},"df":1,"docs":{"27":{"tf":1.0}}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":4,"docs":{"22":{"tf":1.0},"23":{"tf":1.0},"27":{"tf":1.0},"37":{"tf":1.0}}}}}}},"u":{"df":1,"docs":{"4":{"tf":1.0}}}}},"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":5,"docs":{"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"34":{"tf":1.0},"6":{"tf":1.0}}}}},"df":0,"docs":{},"g":{"df":3,"docs":{"30":{"tf":1.0},"33":{"tf":1.4142135623730951},"5":{"tf":1.0}}}},"w":{"df":1,"docs":{"26":{"tf":1.0}}},"y":{"df":1,"docs":{"17":{"tf":1.0}}}},"df":0,"docs":{},"e":{"a":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"15":{"tf":1.0}}}},"d":{"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{}},"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"d":{"df":6,"docs":{"11":{"tf":1.0},"22":{"tf":1.0},"25":{"tf":1.0},"33":{"tf":1.0},"39":{"tf":1.4142135623730951},"40":{"tf":1.0}}},"df":0,"docs":{}},"v":{"df":1,"docs":{"20":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"0":{"tf":1.0}}}}}}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"0":{"tf":1.0},"28":{"tf":1.7320508075688772}}}}},"g":{"a":{"df":0,"docs":{},"r":{"d":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"14":{"tf":1.0}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":1,"docs":{"28":{"tf":1.0}}},"o":{"df":0,"docs":{},"n":{"df":2,"docs":{"12":{"tf":1.0},"17":{"tf":1.0}}}}}},"j":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":2,"docs":{"19":{"tf":1.0},"5":{"tf":1.0}}}},"df":0,"docs":{}}},"l":{"df":1,"docs":{"18":{"tf":1.0}},"i":{"df":1,"docs":{"4":{"tf":1.0}},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"t":{"df":1,"docs":{"16":{"tf":1.0}}}}}}},"m":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"27":{"tf":1.0}}}}},"df":0,"docs":{}},"n":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"v":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"p":{"(":{"&":{"df":0,"docs":{},"p":{"a":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"m":{"df":2,"docs":{"1":{"tf":1.0},"7":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"23":{"tf":1.0}}}}}}}},"df":0,"docs":{}},"df":1,"docs":{"1":{"tf":1.0}}}},"df":0,"docs":{}}}}},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"b":{"df":1,"docs":{"16":{"tf":1.0}},"e":{"(":{"&":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"16":{"tf":1.0}}}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"_":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"a":{"c":{"df":0,"docs":{},"l":{"df":1,"docs":{"18":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"s":{"df":1,"docs":{"16":{"tf":1.0}}}},"df":17,"docs":{"0":{"tf":1.4142135623730951},"13":{"tf":1.0},"15":{"tf":1.7320508075688772},"16":{"tf":1.4142135623730951},"18":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":2.6457513110645907},"23":{"tf":1.7320508075688772},"24":{"tf":1.4142135623730951},"26":{"tf":1.0},"28":{"tf":1.7320508075688772},"29":{"tf":1.0},"30":{"tf":1.0},"31":{"tf":1.4142135623730951},"32":{"tf":1.4142135623730951},"36":{"tf":1.7320508075688772},"40":{"tf":1.0}},"i":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"g":{"df":1,"docs":{"27":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}},"’":{"df":1,"docs":{"28":{"tf":1.0}}}}}},"df":0,"docs":{}},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{".":{"df":0,"docs":{},"j":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":3,"docs":{"35":{"tf":1.0},"36":{"tf":1.0},"40":{"tf":1.0}}}}}}},"df":4,"docs":{"27":{"tf":1.4142135623730951},"29":{"tf":1.4142135623730951},"35":{"tf":1.0},"40":{"tf":1.0}}}},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"2":{"tf":1.0}}}}}}}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"9":{"tf":1.0}}}}}}},"o":{"d":{"df":0,"docs":{},"u":{"c":{"df":2,"docs":{"11":{"tf":1.0},"28":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"q":{"df":0,"docs":{},"u":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"19":{"tf":1.0}}}}}}},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":3,"docs":{"16":{"tf":1.0},"17":{"tf":1.0},"21":{"tf":1.0}}}}}},"t":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":3,"docs":{"23":{"tf":1.4142135623730951},"30":{"tf":1.4142135623730951},"37":{"tf":1.0}}}}},"df":1,"docs":{"15":{"tf":1.0}}},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":2,"docs":{"23":{"tf":1.0},"40":{"tf":1.0}}}}}},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"n":{"df":1,"docs":{"12":{"tf":1.0}}}}}},"u":{"df":0,"docs":{},"s":{"df":1,"docs":{"19":{"tf":1.0}}}}},"g":{"b":{"df":2,"docs":{"3":{"tf":1.4142135623730951},"9":{"tf":1.0}}},"df":0,"docs":{}},"m":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":4,"docs":{"0":{"tf":1.4142135623730951},"23":{"tf":1.0},"29":{"tf":1.4142135623730951},"40":{"tf":1.4142135623730951}}}}},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"_":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"_":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"14":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":1,"docs":{"28":{"tf":1.0}}}},"o":{"df":0,"docs":{},"t":{"df":1,"docs":{"27":{"tf":1.0}}}},"t":{"a":{"df":0,"docs":{},"t":{"df":2,"docs":{"14":{"tf":1.0},"28":{"tf":1.0}}}},"df":0,"docs":{}},"u":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"4":{"tf":1.0}}}}}},"n":{"d":{"df":3,"docs":{"10":{"tf":1.0},"2":{"tf":1.0},"23":{"tf":1.0}}},"df":0,"docs":{}}},"w":{"df":1,"docs":{"9":{"tf":2.0}}}},"u":{"df":0,"docs":{},"n":{"df":4,"docs":{"12":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0},"39":{"tf":1.0}}}}},"s":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":3,"docs":{"17":{"tf":1.0},"18":{"tf":1.0},"39":{"tf":1.0}}}},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":1,"docs":{"27":{"tf":1.0}}}}}},"u":{"df":0,"docs":{},"r":{"df":6,"docs":{"0":{"tf":1.0},"12":{"tf":1.4142135623730951},"22":{"tf":1.4142135623730951},"23":{"tf":1.0},"35":{"tf":1.0},"37":{"tf":1.0}}}}},"v":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"19":{"tf":1.0}}}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"c":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":4,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"23":{"tf":1.0},"27":{"tf":1.7320508075688772}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":6,"docs":{"0":{"tf":1.4142135623730951},"16":{"tf":1.4142135623730951},"19":{"tf":2.0},"24":{"tf":1.0},"28":{"tf":1.0},"30":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":1,"docs":{"40":{"tf":1.0}}}}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"m":{"df":1,"docs":{"12":{"tf":1.4142135623730951}}},"r":{"c":{"df":0,"docs":{},"h":{"df":1,"docs":{"22":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{"d":{"df":10,"docs":{"11":{"tf":1.0},"13":{"tf":1.0},"23":{"tf":1.7320508075688772},"25":{"tf":1.0},"28":{"tf":1.0},"30":{"tf":1.0},"33":{"tf":1.4142135623730951},"34":{"tf":1.0},"37":{"tf":1.0},"39":{"tf":1.4142135623730951}}},"df":3,"docs":{"16":{"tf":1.0},"29":{"tf":1.0},"6":{"tf":1.0}}},"t":{"df":2,"docs":{"13":{"tf":1.0},"23":{"tf":1.4142135623730951}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"2":{"tf":1.0}}}}}},"h":{"a":{"d":{"df":0,"docs":{},"e":{"df":1,"docs":{"17":{"tf":1.4142135623730951}}},"o":{"df":0,"docs":{},"w":{"df":8,"docs":{"0":{"tf":1.0},"14":{"tf":1.4142135623730951},"15":{"tf":1.4142135623730951},"16":{"tf":1.0},"25":{"tf":1.0},"28":{"tf":2.8284271247461903},"36":{"tf":1.0},"40":{"tf":1.0}}}}},"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":2,"docs":{"28":{"tf":1.0},"3":{"tf":1.0}}}},"r":{"df":0,"docs":{},"p":{"df":2,"docs":{"28":{"tf":1.7320508075688772},"36":{"tf":1.0}},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"28":{"tf":1.0}}}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"t":{"df":1,"docs":{"14":{"tf":1.0}}}}}},"i":{"_":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"(":{"a":{"df":1,"docs":{"27":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"d":{"df":0,"docs":{},"e":{"c":{"a":{"df":0,"docs":{},"r":{"df":2,"docs":{"11":{"tf":1.0},"33":{"tf":1.0}}}},"df":0,"docs":{}},"df":1,"docs":{"17":{"tf":1.0}}}},"df":2,"docs":{"29":{"tf":1.0},"40":{"tf":1.0}},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"19":{"tf":1.0}}}}}},"m":{"df":2,"docs":{"11":{"tf":1.0},"33":{"tf":1.4142135623730951}},"u":{"df":0,"docs":{},"l":{"df":3,"docs":{"0":{"tf":1.0},"22":{"tf":1.0},"33":{"tf":1.0}}}}},"n":{"df":1,"docs":{"9":{"tf":1.0}},"g":{"df":0,"docs":{},"l":{"df":2,"docs":{"0":{"tf":1.0},"5":{"tf":1.0}}}}},"t":{"df":1,"docs":{"28":{"tf":1.0}}},"z":{"df":0,"docs":{},"e":{"df":3,"docs":{"13":{"tf":1.0},"15":{"tf":1.0},"30":{"tf":1.0}}}}},"k":{"df":0,"docs":{},"i":{"df":12,"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.0},"12":{"tf":1.0},"16":{"tf":1.7320508075688772},"17":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"3":{"tf":1.7320508075688772},"38":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.4142135623730951}}},"y":{".":{"df":0,"docs":{},"j":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":3,"docs":{"31":{"tf":1.0},"32":{"tf":1.0},"36":{"tf":1.0}}}}}},"p":{"df":0,"docs":{},"f":{"df":0,"docs":{},"m":{"df":1,"docs":{"31":{"tf":1.0}}}},"n":{"df":0,"docs":{},"g":{"df":1,"docs":{"31":{"tf":1.0}}}}}},"df":0,"docs":{},"p":{"a":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"m":{"df":2,"docs":{"1":{"tf":1.4142135623730951},"6":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"m":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":1,"docs":{"4":{"tf":1.4142135623730951}},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"21":{"tf":1.0}}}}}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"28":{"tf":1.0}}}}}}},"o":{"df":0,"docs":{},"f":{"df":0,"docs":{},"t":{"df":10,"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"2":{"tf":1.0},"25":{"tf":1.0},"28":{"tf":1.7320508075688772},"29":{"tf":1.0},"36":{"tf":2.0},"39":{"tf":1.0},"40":{"tf":1.0}},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"_":{"a":{"df":0,"docs":{},"z":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"28":{"tf":1.0}}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}}}}},"l":{"df":0,"docs":{},"i":{"d":{"df":3,"docs":{"12":{"tf":1.4142135623730951},"17":{"tf":1.0},"9":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"v":{"df":1,"docs":{"22":{"tf":1.0}}}},"r":{"df":0,"docs":{},"t":{"df":2,"docs":{"25":{"tf":1.0},"39":{"tf":1.0}}}}},"p":{"a":{"c":{"df":0,"docs":{},"e":{"df":2,"docs":{"21":{"tf":1.0},"23":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{},"e":{"c":{"df":2,"docs":{"13":{"tf":1.0},"34":{"tf":1.0}},"i":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"4":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":7,"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":2.0},"28":{"tf":1.4142135623730951},"32":{"tf":1.0},"9":{"tf":1.0}}}}}},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"28":{"tf":1.0}}}}}},"q":{"df":0,"docs":{},"u":{"a":{"df":0,"docs":{},"r":{"df":3,"docs":{"20":{"tf":1.0},"21":{"tf":1.0},"27":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}},"t":{"a":{"df":0,"docs":{},"n":{"d":{"a":{"df":0,"docs":{},"r":{"d":{"df":2,"docs":{"13":{"tf":1.0},"29":{"tf":1.0}}},"df":0,"docs":{}}},"df":1,"docs":{"21":{"tf":1.0}}},"df":0,"docs":{}},"y":{"df":1,"docs":{"23":{"tf":1.0}}}},"d":{":":{":":{"df":0,"docs":{},"f":{"6":{"4":{":":{":":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"s":{":":{":":{"df":0,"docs":{},"p":{"df":0,"docs":{},"i":{"df":1,"docs":{"9":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":1,"docs":{"23":{"tf":1.0}}}},"i":{"c":{"df":0,"docs":{},"k":{"df":1,"docs":{"24":{"tf":1.0}}}},"df":0,"docs":{}},"r":{"a":{"d":{"d":{"df":0,"docs":{},"l":{"df":1,"docs":{"12":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"t":{"df":1,"docs":{"17":{"tf":1.0}}}}}}},"df":0,"docs":{}}},"u":{"b":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"n":{"d":{"df":4,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"29":{"tf":1.0},"30":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":6,"docs":{"12":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0},"23":{"tf":1.0},"28":{"tf":1.0},"6":{"tf":1.0}}}},"m":{"df":2,"docs":{"3":{"tf":1.0},"9":{"tf":1.0}}},"n":{"/":{"df":0,"docs":{},"s":{"df":0,"docs":{},"k":{"df":0,"docs":{},"i":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"_":{"a":{"df":0,"docs":{},"z":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"30":{"tf":1.0}}}}}}}}},"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"22":{"tf":1.0}}}},"df":0,"docs":{}}}}},"df":0,"docs":{},"h":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"22":{"tf":1.0}}}}}},"p":{"df":0,"docs":{},"o":{"df":2,"docs":{"1":{"tf":1.0},"6":{"tf":1.0}}}},"z":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"30":{"tf":1.0}}}}}}}}},"df":17,"docs":{"0":{"tf":2.0},"1":{"tf":1.0},"12":{"tf":1.4142135623730951},"14":{"tf":1.4142135623730951},"15":{"tf":1.4142135623730951},"21":{"tf":1.4142135623730951},"22":{"tf":1.4142135623730951},"23":{"tf":1.0},"24":{"tf":1.4142135623730951},"27":{"tf":1.0},"28":{"tf":2.6457513110645907},"3":{"tf":2.0},"35":{"tf":1.4142135623730951},"37":{"tf":1.0},"38":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.7320508075688772}},"n":{"df":0,"docs":{},"i":{"df":2,"docs":{"23":{"tf":1.0},"24":{"tf":1.4142135623730951}}}},"p":{"a":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"m":{"df":2,"docs":{"1":{"tf":1.4142135623730951},"6":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":2,"docs":{"1":{"tf":1.0},"6":{"tf":1.0}},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{":":{":":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"w":{"(":{"0":{".":{"6":{"df":2,"docs":{"1":{"tf":1.0},"6":{"tf":1.0}}},"8":{"df":1,"docs":{"12":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}}},"’":{"df":1,"docs":{"24":{"tf":1.0}}}},"r":{"df":0,"docs":{},"f":{"a":{"c":{"df":1,"docs":{"16":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":2,"docs":{"28":{"tf":1.4142135623730951},"9":{"tf":1.0}}}}}},"y":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"23":{"tf":1.0}}}}}}},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"24":{"tf":1.0}}}},"df":0,"docs":{}}}}}}},"t":{"a":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"40":{"tf":1.0}}}},"df":0,"docs":{},"k":{"df":0,"docs":{},"e":{"df":1,"docs":{"2":{"tf":1.0}},"n":{"df":2,"docs":{"22":{"tf":1.0},"9":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":2,"docs":{"11":{"tf":1.0},"21":{"tf":1.0}}}}}}},"df":1,"docs":{"16":{"tf":1.4142135623730951}},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"30":{"tf":1.0}}},"r":{"df":0,"docs":{},"m":{"df":3,"docs":{"3":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0}}}},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"2":{"tf":2.0}}}},"x":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"_":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":2,"docs":{"12":{"tf":1.0},"9":{"tf":1.0}},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"(":{"df":0,"docs":{},"u":{"df":1,"docs":{"12":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"d":{"_":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"l":{"df":1,"docs":{"9":{"tf":1.0}},"e":{"(":{"df":0,"docs":{},"v":{"df":1,"docs":{"9":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":5,"docs":{"16":{"tf":1.4142135623730951},"17":{"tf":1.0},"23":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"’":{"df":1,"docs":{"9":{"tf":1.0}}}}}}},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"28":{"tf":1.0}}}}}}}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"s":{"a":{"df":0,"docs":{},"n":{"d":{"df":2,"docs":{"16":{"tf":1.0},"6":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":3,"docs":{"12":{"tf":1.0},"21":{"tf":1.4142135623730951},"28":{"tf":1.0}}},"s":{"df":0,"docs":{},"h":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"d":{"df":2,"docs":{"12":{"tf":1.4142135623730951},"35":{"tf":1.0}}},"df":0,"docs":{}}}}}}}},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":1,"docs":{"9":{"tf":1.0}}}},"n":{"df":0,"docs":{},"i":{"df":1,"docs":{"16":{"tf":1.0}}}}},"o":{"d":{"df":0,"docs":{},"o":{"df":1,"docs":{"23":{"tf":1.0}}}},"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"6":{"tf":1.0}}}}}},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"31":{"tf":1.0}}}},"df":0,"docs":{}}}},"p":{"df":2,"docs":{"15":{"tf":1.0},"9":{"tf":1.0}}},"t":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"9":{"tf":1.0}}}},"df":0,"docs":{}},"w":{"a":{"df":0,"docs":{},"r":{"d":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":1,"docs":{"6":{"tf":1.0}}}}}},"df":1,"docs":{"6":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"r":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"20":{"tf":1.0}}}},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":1,"docs":{"23":{"tf":1.0}}}}}},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":6,"docs":{"0":{"tf":1.4142135623730951},"16":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0},"23":{"tf":1.0},"30":{"tf":1.0}}}}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":1,"docs":{"30":{"tf":1.0}}}}}},"df":0,"docs":{},"i":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"l":{"df":1,"docs":{"27":{"tf":1.0}}}}}},"df":0,"docs":{},"p":{"df":3,"docs":{"10":{"tf":1.0},"2":{"tf":1.0},"23":{"tf":1.0}}}},"u":{"df":0,"docs":{},"e":{"df":2,"docs":{"24":{"tf":1.0},"27":{"tf":1.0}}},"t":{"df":0,"docs":{},"h":{"/":{"df":0,"docs":{},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"d":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"29":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":4,"docs":{"12":{"tf":1.0},"23":{"tf":1.0},"29":{"tf":1.0},"40":{"tf":1.0}},"’":{"df":2,"docs":{"29":{"tf":1.0},"40":{"tf":1.0}}}}}}},"u":{"df":0,"docs":{},"r":{"b":{"df":0,"docs":{},"i":{"d":{"df":8,"docs":{"1":{"tf":1.0},"23":{"tf":1.4142135623730951},"24":{"tf":1.0},"3":{"tf":1.0},"30":{"tf":1.0},"38":{"tf":1.0},"5":{"tf":1.4142135623730951},"6":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":1,"docs":{"28":{"tf":1.0}}}}}},"i":{"c":{"df":0,"docs":{},"e":{"df":1,"docs":{"9":{"tf":1.0}}}},"df":0,"docs":{}},"o":{"df":5,"docs":{"17":{"tf":1.0},"27":{"tf":1.0},"3":{"tf":1.4142135623730951},"6":{"tf":1.0},"9":{"tf":1.0}}}}},"u":{"df":3,"docs":{"12":{"tf":1.0},"16":{"tf":1.4142135623730951},"9":{"tf":1.0}},"n":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"32":{"tf":1.4142135623730951}},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":1,"docs":{"24":{"tf":1.0}}}}}}},"f":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":1,"docs":{"4":{"tf":1.4142135623730951}}}}}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":1,"docs":{"16":{"tf":1.0}},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"33":{"tf":1.0}}}}}}}},"t":{"df":4,"docs":{"15":{"tf":1.0},"16":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0}}}},"k":{"df":0,"docs":{},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":0,"docs":{},"n":{"df":1,"docs":{"27":{"tf":1.0}}}}}}},"o":{"c":{"c":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"d":{"df":1,"docs":{"16":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"p":{"df":2,"docs":{"29":{"tf":1.0},"9":{"tf":1.0}}},"s":{"df":13,"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.4142135623730951},"14":{"tf":1.0},"16":{"tf":1.4142135623730951},"17":{"tf":1.0},"23":{"tf":1.7320508075688772},"27":{"tf":1.7320508075688772},"30":{"tf":1.0},"33":{"tf":1.0},"6":{"tf":1.4142135623730951},"9":{"tf":1.4142135623730951}}}},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":3,"docs":{"21":{"tf":1.0},"5":{"tf":1.7320508075688772},"6":{"tf":1.0}}}},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"24":{"tf":1.0}}}}},"df":3,"docs":{"12":{"tf":1.7320508075688772},"16":{"tf":1.0},"9":{"tf":1.0}},"e":{"c":{"!":{"[":{"0":{".":{"0":{"df":0,"docs":{},"f":{"3":{"2":{"df":1,"docs":{"16":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"1":{".":{"0":{"df":1,"docs":{"27":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"2":{".":{"0":{"df":1,"docs":{"27":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"df":0,"docs":{}},"i":{"a":{"df":1,"docs":{"22":{"tf":1.0}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"w":{"df":1,"docs":{"13":{"tf":1.7320508075688772}}}},"s":{"df":0,"docs":{},"i":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"16":{"tf":1.0}}}},"df":0,"docs":{}}}},"s":{"df":1,"docs":{"21":{"tf":1.7320508075688772}}}},"w":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"k":{"df":0,"docs":{},"i":{"df":8,"docs":{"1":{"tf":1.0},"23":{"tf":1.4142135623730951},"24":{"tf":1.0},"3":{"tf":1.0},"30":{"tf":1.0},"38":{"tf":1.0},"5":{"tf":1.4142135623730951},"6":{"tf":1.4142135623730951}}}},"u":{"df":0,"docs":{},"n":{"df":7,"docs":{"1":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.4142135623730951},"3":{"tf":1.0},"30":{"tf":1.0},"4":{"tf":1.4142135623730951},"6":{"tf":1.0}}}}}},"a":{"df":0,"docs":{},"y":{"df":3,"docs":{"13":{"tf":1.0},"29":{"tf":1.0},"33":{"tf":1.0}}}},"df":2,"docs":{"12":{"tf":1.4142135623730951},"9":{"tf":1.7320508075688772}},"e":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":4,"docs":{"2":{"tf":1.0},"24":{"tf":1.0},"29":{"tf":1.0},"5":{"tf":1.0}}}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"t":{"df":5,"docs":{"12":{"tf":1.4142135623730951},"16":{"tf":1.0},"21":{"tf":2.449489742783178},"30":{"tf":1.0},"9":{"tf":1.0}}}}}}},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"v":{"df":1,"docs":{"27":{"tf":1.0}}}}},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"29":{"tf":1.0}}}}}}},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":1,"docs":{"9":{"tf":1.0}}}},"s":{"df":0,"docs":{},"e":{"df":4,"docs":{"19":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0},"6":{"tf":1.0}}}}}},"i":{"d":{"df":0,"docs":{},"e":{"df":1,"docs":{"22":{"tf":1.0}},"n":{"df":1,"docs":{"28":{"tf":1.0}}}},"t":{"df":0,"docs":{},"h":{"df":3,"docs":{"27":{"tf":1.4142135623730951},"28":{"tf":1.0},"9":{"tf":1.4142135623730951}}}}},"df":0,"docs":{},"n":{"df":2,"docs":{"23":{"tf":1.0},"30":{"tf":1.0}}},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"23":{"tf":1.0}}}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"18":{"tf":1.0}}}}}}}},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"k":{"df":0,"docs":{},"s":{"df":0,"docs":{},"p":{"a":{"c":{"df":1,"docs":{"2":{"tf":1.7320508075688772}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"l":{"d":{"df":1,"docs":{"9":{"tf":1.0}}},"df":0,"docs":{}}}},"r":{"a":{"df":0,"docs":{},"p":{"df":2,"docs":{"12":{"tf":1.0},"14":{"tf":1.0}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":7,"docs":{"10":{"tf":1.0},"25":{"tf":1.0},"31":{"tf":1.0},"34":{"tf":1.0},"37":{"tf":1.0},"39":{"tf":1.0},"40":{"tf":1.0}}}}}}},"y":{"df":1,"docs":{"9":{"tf":1.4142135623730951}}},"z":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"[":{"0":{"df":1,"docs":{"6":{"tf":1.0}}},"df":0,"docs":{}},"_":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"l":{"df":1,"docs":{"3":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":4,"docs":{"3":{"tf":1.4142135623730951},"5":{"tf":1.4142135623730951},"6":{"tf":1.4142135623730951},"9":{"tf":1.4142135623730951}}}}}},"r":{"df":0,"docs":{},"o":{"df":6,"docs":{"24":{"tf":1.0},"27":{"tf":1.0},"38":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0}}}}}}}},"breadcrumbs":{"root":{"b":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"24":{"tf":1.0}}}}}}}},"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"k":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"29":{"tf":1.0}}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"d":{"df":1,"docs":{"2":{"tf":1.0}}},"df":0,"docs":{}}}}},"c":{"a":{"c":{"df":0,"docs":{},"h":{"df":1,"docs":{"19":{"tf":1.0}}}},"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"11":{"tf":1.0}}}}}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"n":{"d":{"df":11,"docs":{"30":{"tf":1.4142135623730951},"31":{"tf":1.0},"32":{"tf":1.0},"33":{"tf":1.0},"34":{"tf":1.0},"35":{"tf":1.0},"36":{"tf":1.0},"37":{"tf":1.0},"38":{"tf":1.0},"39":{"tf":1.0},"40":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"18":{"tf":1.0}}}},"df":0,"docs":{}}}}},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":2,"docs":{"13":{"tf":1.0},"34":{"tf":1.0}}}}}},"d":{"a":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"25":{"tf":1.0}}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"17":{"tf":1.0}}}}}}},"t":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"35":{"tf":1.0}}}},"df":0,"docs":{}}}},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":1,"docs":{"5":{"tf":1.0}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"v":{"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":8,"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.4142135623730951},"9":{"tf":1.0}}}}}}}},"q":{"df":0,"docs":{},"u":{"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"9":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"v":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"40":{"tf":1.0}},"u":{"df":4,"docs":{"26":{"tf":1.4142135623730951},"27":{"tf":1.0},"28":{"tf":1.0},"29":{"tf":1.0}}}}},"df":0,"docs":{}}},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":1,"docs":{"10":{"tf":1.0}}}},"n":{"d":{"df":1,"docs":{"12":{"tf":1.0}}},"df":0,"docs":{}},"t":{"df":8,"docs":{"20":{"tf":1.4142135623730951},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0},"37":{"tf":1.0},"38":{"tf":1.0}}}},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}}}}},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"9":{"tf":1.0}}}}}}}}}},"h":{"d":{"df":0,"docs":{},"r":{"df":1,"docs":{"37":{"tf":1.0}}}},"df":0,"docs":{}},"i":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"6":{"tf":1.0}}}}}},"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"t":{"df":3,"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"2":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"v":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"27":{"tf":1.0}}}}},"df":0,"docs":{}}}},"l":{"a":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":2,"docs":{"25":{"tf":1.0},"39":{"tf":1.0}}}}},"df":0,"docs":{}},"d":{"df":0,"docs":{},"r":{"df":4,"docs":{"11":{"tf":1.0},"24":{"tf":1.0},"33":{"tf":1.0},"38":{"tf":1.0}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"t":{"df":5,"docs":{"15":{"tf":1.4142135623730951},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0}}}}},"n":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"16":{"tf":1.0}}}},"df":11,"docs":{"30":{"tf":1.4142135623730951},"31":{"tf":1.0},"32":{"tf":1.0},"33":{"tf":1.0},"34":{"tf":1.0},"35":{"tf":1.0},"36":{"tf":1.0},"37":{"tf":1.0},"38":{"tf":1.0},"39":{"tf":1.0},"40":{"tf":1.0}}}}},"o":{"b":{"df":0,"docs":{},"e":{"df":1,"docs":{"4":{"tf":1.0}}}},"df":0,"docs":{}}},"m":{"a":{"df":0,"docs":{},"p":{"df":8,"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.4142135623730951},"9":{"tf":1.0}}},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"x":{"df":1,"docs":{"16":{"tf":1.0}}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"c":{"df":4,"docs":{"26":{"tf":1.4142135623730951},"27":{"tf":1.0},"28":{"tf":1.0},"29":{"tf":1.0}}},"df":0,"docs":{}}}}},"o":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":5,"docs":{"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}}}}},"df":0,"docs":{}}},"o":{"b":{"df":0,"docs":{},"j":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"21":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{},"r":{"a":{"c":{"df":0,"docs":{},"l":{"df":1,"docs":{"18":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"p":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"m":{"a":{"df":13,"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.4142135623730951},"20":{"tf":1.4142135623730951},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0},"8":{"tf":1.4142135623730951},"9":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"r":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":6,"docs":{"20":{"tf":1.4142135623730951},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0}}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"h":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":1,"docs":{"13":{"tf":1.0}}}}}}},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"22":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"o":{"b":{"df":0,"docs":{},"e":{"df":6,"docs":{"15":{"tf":1.4142135623730951},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"32":{"tf":1.0}}}},"df":0,"docs":{}}}},"q":{"df":0,"docs":{},"u":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"k":{"df":1,"docs":{"1":{"tf":1.0}}}},"df":0,"docs":{}}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":11,"docs":{"30":{"tf":1.4142135623730951},"31":{"tf":1.0},"32":{"tf":1.0},"33":{"tf":1.0},"34":{"tf":1.0},"35":{"tf":1.0},"36":{"tf":1.0},"37":{"tf":1.0},"38":{"tf":1.0},"39":{"tf":1.0},"40":{"tf":1.0}}}}},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"6":{"tf":1.0}}}},"n":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"31":{"tf":1.0},"7":{"tf":1.0}}}}},"df":0,"docs":{}},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"29":{"tf":1.0}}}}}}},"m":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":1,"docs":{"27":{"tf":1.4142135623730951}}}}},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":1,"docs":{"14":{"tf":1.0}}}}}},"s":{"c":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":1,"docs":{"27":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":5,"docs":{"15":{"tf":1.4142135623730951},"16":{"tf":1.0},"17":{"tf":1.4142135623730951},"18":{"tf":1.0},"19":{"tf":1.0}}}}}},"df":0,"docs":{},"h":{"a":{"d":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":4,"docs":{"26":{"tf":1.4142135623730951},"27":{"tf":1.0},"28":{"tf":1.4142135623730951},"29":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"i":{"df":0,"docs":{},"m":{"df":1,"docs":{"33":{"tf":1.0}},"u":{"df":0,"docs":{},"l":{"df":1,"docs":{"11":{"tf":1.0}}}}}},"k":{"df":0,"docs":{},"i":{"df":6,"docs":{"3":{"tf":1.4142135623730951},"38":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.4142135623730951},"6":{"tf":1.0},"7":{"tf":1.0}}}},"o":{"df":0,"docs":{},"f":{"df":0,"docs":{},"t":{"df":5,"docs":{"26":{"tf":1.4142135623730951},"27":{"tf":1.0},"28":{"tf":1.4142135623730951},"29":{"tf":1.0},"36":{"tf":1.0}}}},"l":{"df":0,"docs":{},"v":{"df":1,"docs":{"23":{"tf":1.0}}}}},"t":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"1":{"tf":1.0}}}}},"df":0,"docs":{}},"u":{"df":0,"docs":{},"n":{"df":8,"docs":{"12":{"tf":1.0},"22":{"tf":1.0},"3":{"tf":1.4142135623730951},"35":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"2":{"tf":1.0}}}}},"r":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":5,"docs":{"15":{"tf":1.4142135623730951},"16":{"tf":1.4142135623730951},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0}}}}}}}}},"df":0,"docs":{}}}}},"title":{"root":{"b":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"24":{"tf":1.0}}}}}}}},"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"k":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"29":{"tf":1.0}}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"d":{"df":1,"docs":{"2":{"tf":1.0}}},"df":0,"docs":{}}}}},"c":{"a":{"c":{"df":0,"docs":{},"h":{"df":1,"docs":{"19":{"tf":1.0}}}},"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"11":{"tf":1.0}}}}}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"30":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"18":{"tf":1.0}}}},"df":0,"docs":{}}}}},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":2,"docs":{"13":{"tf":1.0},"34":{"tf":1.0}}}}}},"d":{"a":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"25":{"tf":1.0}}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"17":{"tf":1.0}}}}}}},"t":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"35":{"tf":1.0}}}},"df":0,"docs":{}}}},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":1,"docs":{"5":{"tf":1.0}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"v":{"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":2,"docs":{"7":{"tf":1.0},"8":{"tf":1.0}}}}}}}},"q":{"df":0,"docs":{},"u":{"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"9":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"v":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"40":{"tf":1.0}},"u":{"df":1,"docs":{"26":{"tf":1.0}}}}},"df":0,"docs":{}}},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":1,"docs":{"10":{"tf":1.0}}}},"n":{"d":{"df":1,"docs":{"12":{"tf":1.0}}},"df":0,"docs":{}},"t":{"df":3,"docs":{"20":{"tf":1.0},"37":{"tf":1.0},"38":{"tf":1.0}}}},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}}}}},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"9":{"tf":1.0}}}}}}}}}},"h":{"d":{"df":0,"docs":{},"r":{"df":1,"docs":{"37":{"tf":1.0}}}},"df":0,"docs":{}},"i":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"6":{"tf":1.0}}}}}},"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"v":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"27":{"tf":1.0}}}}},"df":0,"docs":{}}}},"l":{"a":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":2,"docs":{"25":{"tf":1.0},"39":{"tf":1.0}}}}},"df":0,"docs":{}},"d":{"df":0,"docs":{},"r":{"df":4,"docs":{"11":{"tf":1.0},"24":{"tf":1.0},"33":{"tf":1.0},"38":{"tf":1.0}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"t":{"df":1,"docs":{"15":{"tf":1.0}}}}},"n":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"16":{"tf":1.0}}}},"df":1,"docs":{"30":{"tf":1.0}}}}},"o":{"b":{"df":0,"docs":{},"e":{"df":1,"docs":{"4":{"tf":1.0}}}},"df":0,"docs":{}}},"m":{"a":{"df":0,"docs":{},"p":{"df":2,"docs":{"7":{"tf":1.0},"8":{"tf":1.0}}},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"x":{"df":1,"docs":{"16":{"tf":1.0}}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"c":{"df":1,"docs":{"26":{"tf":1.0}}},"df":0,"docs":{}}}}},"o":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":1,"docs":{"3":{"tf":1.0}}}}},"df":0,"docs":{}}},"o":{"b":{"df":0,"docs":{},"j":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"21":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{},"r":{"a":{"c":{"df":0,"docs":{},"l":{"df":1,"docs":{"18":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"p":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"m":{"a":{"df":3,"docs":{"14":{"tf":1.0},"20":{"tf":1.0},"8":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"r":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"20":{"tf":1.0}}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"h":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":1,"docs":{"13":{"tf":1.0}}}}}}},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"22":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"o":{"b":{"df":0,"docs":{},"e":{"df":2,"docs":{"15":{"tf":1.0},"32":{"tf":1.0}}}},"df":0,"docs":{}}}},"q":{"df":0,"docs":{},"u":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"k":{"df":1,"docs":{"1":{"tf":1.0}}}},"df":0,"docs":{}}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"30":{"tf":1.0}}}}},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"6":{"tf":1.0}}}},"n":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"31":{"tf":1.0},"7":{"tf":1.0}}}}},"df":0,"docs":{}},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"29":{"tf":1.0}}}}}}},"m":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":1,"docs":{"27":{"tf":1.4142135623730951}}}}},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":1,"docs":{"14":{"tf":1.0}}}}}},"s":{"c":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":1,"docs":{"27":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":2,"docs":{"15":{"tf":1.0},"17":{"tf":1.0}}}}}},"df":0,"docs":{},"h":{"a":{"d":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":2,"docs":{"26":{"tf":1.0},"28":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"i":{"df":0,"docs":{},"m":{"df":1,"docs":{"33":{"tf":1.0}},"u":{"df":0,"docs":{},"l":{"df":1,"docs":{"11":{"tf":1.0}}}}}},"k":{"df":0,"docs":{},"i":{"df":3,"docs":{"3":{"tf":1.0},"38":{"tf":1.0},"5":{"tf":1.0}}}},"o":{"df":0,"docs":{},"f":{"df":0,"docs":{},"t":{"df":3,"docs":{"26":{"tf":1.0},"28":{"tf":1.0},"36":{"tf":1.0}}}},"l":{"df":0,"docs":{},"v":{"df":1,"docs":{"23":{"tf":1.0}}}}},"t":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"1":{"tf":1.0}}}}},"df":0,"docs":{}},"u":{"df":0,"docs":{},"n":{"df":5,"docs":{"12":{"tf":1.0},"22":{"tf":1.0},"3":{"tf":1.0},"35":{"tf":1.0},"4":{"tf":1.0}}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"2":{"tf":1.0}}}}},"r":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":2,"docs":{"15":{"tf":1.0},"16":{"tf":1.0}}}}}}}}},"df":0,"docs":{}}}}}},"lang":"English","pipeline":["trimmer","stopWordFilter","stemmer"],"ref":"id","version":"0.9.5"},"results_options":{"limit_results":30,"teaser_word_count":30},"search_options":{"bool":"OR","expand":true,"fields":{"body":{"boost":1},"breadcrumbs":{"boost":1},"title":{"boost":2}}}}'));