//! Command-line driver: argument parsing, dispatch, corpus runs and the
//! invariant suite.

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::bohr::{find_regular, find_regular_or_best, smoothed_cutoff, translate_defect, RadiusProfile};
use crate::config::Constants;
use crate::dissociation::{is_dissociated, max_dissociated_subset, rider_count};
use crate::error::{Error, Result};
use crate::families::{generate_family, Family, Instance};
use crate::fourier::{fourier, fourier_direct, inverse, GroupFunction, Norm, C64};
use crate::group::{Character, Group};
use crate::io::{format_set, num, read_set, read_weights, Csv};
use crate::iteration::{bohr_approximate, discrete_ivt, f2n_approximate, littlewood_certificate, poor_approximate};
use crate::riesz::{
    aux_measure, aux_measure_model, aux_report, check_tau, make_tau, primitive_aux, riesz_product,
};
use crate::spectra::{above, large_spectrum, SpectrumThreshold, ThresholdKind};
use crate::structure::{ag_cover, chang_cover, local_ag_cover, model_local_cover};

#[derive(Parser, Debug)]
#[command(name = "spectral-bohr", version, about = "Fourier analysis and Bohr-set experiments on finite abelian groups")]
pub struct Cli {
    /// Group, e.g. Z101, F2^10, Z4xZ27.
    #[arg(long, global = true)]
    pub group: Option<String>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Directory for artifacts; stdout when absent.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Flat key=value file.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Constant overrides, `k=v,k=v`.
    #[arg(long, global = true)]
    pub constants: Option<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Default)]
pub struct Input {
    /// Set file; the function is its indicator.
    #[arg(long)]
    pub set: Option<PathBuf>,
    /// Function values, one `re,im` per line.
    #[arg(long)]
    pub values: Option<PathBuf>,
    #[arg(long, value_parser = ["ap", "qr", "random", "subspace-union", "character-noise"])]
    pub family: Option<String>,
    #[arg(long, default_value_t = 1)]
    pub trials: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Kind {
    L1,
    Linf,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum AuxMode {
    Primitive,
    Model,
    General,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ApproxMode {
    F2nPlain,
    F2nRefined,
    Bohr,
    Poor,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Fourier transform of the input.
    Transform(Input),
    /// A-norm of every input.
    Anorm(Input),
    /// Large spectrum.
    Spectrum {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "linf")]
        kind: Kind,
        #[arg(long, default_value_t = 0.25)]
        epsilon: f64,
    },
    /// Dissociativity test and greedy maximal subset.
    Dissociate {
        #[arg(long)]
        chars: PathBuf,
        /// `zero` or `bohr:<delta>`.
        #[arg(long, default_value = "zero")]
        s_set: String,
        /// Frequencies of the Bohr set used by `bohr:<delta>`.
        #[arg(long)]
        bohr_gamma: Option<PathBuf>,
    },
    /// Riesz product p_{t omega}.
    Riesz {
        #[arg(long)]
        lambda: PathBuf,
        #[arg(long)]
        omega: PathBuf,
        #[arg(long, default_value_t = 1.0)]
        t: f64,
    },
    /// The interval measure tau_{2l}.
    Tau {
        #[arg(long, default_value_t = 3)]
        l: usize,
    },
    /// Auxiliary measure.
    Aux {
        #[arg(long, value_enum, default_value = "general")]
        mode: AuxMode,
        #[arg(long, default_value_t = 0.125)]
        eta: f64,
        #[arg(long)]
        lambda: PathBuf,
        #[arg(long)]
        omega: PathBuf,
    },
    /// Bohr set construction.
    Bohr {
        #[arg(long)]
        gamma: PathBuf,
        #[arg(long)]
        delta: f64,
        #[arg(long)]
        regular: bool,
        /// `L,KAPPA`.
        #[arg(long)]
        smooth: Option<String>,
    },
    /// Dissociated covers of a large spectrum.
    Cover {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "linf")]
        kind: Kind,
        #[arg(long, default_value_t = 0.25)]
        epsilon: f64,
        #[arg(long, default_value_t = 0.5)]
        eta: f64,
        #[arg(long)]
        local: bool,
        #[arg(long)]
        refined: bool,
        /// Frequencies of the local Bohr set (or of the annihilator in F2^n).
        #[arg(long)]
        gamma: Option<PathBuf>,
        #[arg(long, default_value_t = 0.25)]
        delta: f64,
    },
    /// Iterative approximation.
    Approximate {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "bohr")]
        mode: ApproxMode,
        #[arg(long, default_value_t = 0.25)]
        epsilon: f64,
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Lower-bound certificate for indicator functions in Z/p.
    Littlewood {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        set: Option<PathBuf>,
        #[arg(long, value_parser = ["ap", "random", "qr"], default_value = "ap")]
        family: String,
        #[arg(long, default_value_t = 1)]
        trials: usize,
    },
    /// Invariant suite.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

/// One corpus row.
#[derive(Clone, Debug, Default)]
pub struct ReportRow {
    pub input: String,
    pub values: Vec<(String, String)>,
    pub checks: Vec<(String, bool)>,
    pub runtime_ms: f64,
}

impl ReportRow {
    fn new(input: &str) -> Self {
        ReportRow {
            input: input.to_string(),
            ..Default::default()
        }
    }

    fn value(&mut self, k: &str, v: impl ToString) -> &mut Self {
        self.values.push((k.to_string(), v.to_string()));
        self
    }

    fn check(&mut self, k: &str, ok: bool) -> &mut Self {
        self.checks.push((k.to_string(), ok));
        self
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.1)
    }
}

/// Rows as CSV; runtimes go to a separate table so the main one is reproducible.
pub fn rows_to_csv(rows: &[ReportRow]) -> (String, String) {
    let mut cols = vec!["input".to_string()];
    if let Some(r) = rows.first() {
        cols.extend(r.values.iter().map(|v| v.0.clone()));
        cols.extend(r.checks.iter().map(|c| c.0.clone()));
    }
    let refs: Vec<&str> = cols.iter().map(String::as_str).collect();
    let mut main = Csv::new(&refs);
    let mut times = Csv::new(&["input", "runtime_ms"]);
    for r in rows {
        let mut cells = vec![r.input.clone()];
        cells.extend(r.values.iter().map(|v| v.1.clone()));
        cells.extend(r.checks.iter().map(|c| c.1.to_string()));
        main.row(&cells);
        times.row(&[r.input.clone(), format!("{:.3}", r.runtime_ms)]);
    }
    (main.as_str().to_string(), times.as_str().to_string())
}

/// Settled configuration for one invocation.
#[derive(Clone, Debug)]
pub struct ExperimentConfig {
    pub group: Option<Group>,
    pub seed: u64,
    pub out: Option<PathBuf>,
    pub constants: Constants,
}

impl ExperimentConfig {
    pub fn from_cli(cli: &Cli) -> Result<Self> {
        let mut constants = Constants::default();
        let mut group_spec: Option<String> = None;
        let mut seed = 0u64;
        if let Some(path) = &cli.config {
            for line in std::fs::read_to_string(path)?.lines().map(str::trim) {
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                let (k, v) = line
                    .split_once('=')
                    .ok_or_else(|| Error::Parse(format!("config line {line:?} is not key=value")))?;
                match k.trim() {
                    "group" => group_spec = Some(v.trim().to_string()),
                    "seed" => {
                        seed = v.trim().parse().map_err(|_| Error::Parse(format!("bad seed {v:?}")))?
                    }
                    key => constants.set(key, v)?,
                }
            }
        }
        if let Some(text) = &cli.constants {
            constants.apply_overrides(text)?;
        }
        if let Some(g) = &cli.group {
            group_spec = Some(g.clone());
        }
        if let Some(s) = cli.seed {
            seed = s;
        }
        let group = group_spec
            .map(|s| Group::parse_with_cap(&s, constants.order_cap))
            .transpose()?;
        Ok(ExperimentConfig {
            group,
            seed,
            out: cli.out.clone(),
            constants,
        })
    }

    fn group(&self) -> Result<&Group> {
        self.group
            .as_ref()
            .ok_or_else(|| Error::Parse("--group is required for this command".into()))
    }
}

/// Named artifacts plus the overall verdict.
#[derive(Debug, Default)]
pub struct Outcome {
    pub artifacts: Vec<(String, String)>,
    pub passed: bool,
}

impl Outcome {
    fn single(name: &str, body: String, passed: bool) -> Self {
        Outcome {
            artifacts: vec![(name.to_string(), body)],
            passed,
        }
    }

    fn json(name: &str, v: &Value, passed: bool) -> Self {
        Outcome::single(name, serde_json::to_string_pretty(v).expect("json") + "\n", passed)
    }

    fn rows(name: &str, rows: &[ReportRow]) -> Self {
        let (main, times) = rows_to_csv(rows);
        Outcome {
            artifacts: vec![(name.to_string(), main), ("runtimes.csv".to_string(), times)],
            passed: rows.iter().all(ReportRow::passed),
        }
    }
}

fn load_inputs(cfg: &ExperimentConfig, input: &Input) -> Result<Vec<Instance>> {
    let g = cfg.group()?;
    if let Some(path) = &input.set {
        let set = read_set(g, path)?;
        return Ok(vec![Instance {
            label: path.display().to_string(),
            function: GroupFunction::indicator(g, &set),
            set: Some(set),
        }]);
    }
    if let Some(path) = &input.values {
        let values = read_weights(path)?;
        return Ok(vec![Instance {
            label: path.display().to_string(),
            function: GroupFunction::new(g.clone(), values)?,
            set: None,
        }]);
    }
    let family: Family = input.family.as_deref().unwrap_or("ap").parse()?;
    generate_family(family, g, cfg.seed, input.trials.max(1))
}

fn parallel_rows<F>(items: &[Instance], f: F) -> Result<Vec<ReportRow>>
where
    F: Fn(&Instance) -> Result<ReportRow> + Sync,
{
    items
        .par_iter()
        .map(|it| {
            let t = Instant::now();
            let mut row = f(it)?;
            row.runtime_ms = t.elapsed().as_secs_f64() * 1e3;
            Ok(row)
        })
        .collect()
}

fn read_chars(g: &Group, path: &Path) -> Result<Vec<Character>> {
    read_set(g, path)
}

/// Dispatches one parsed command.
pub fn run(cfg: &ExperimentConfig, command: &Command) -> Result<Outcome> {
    let c = &cfg.constants;
    match command {
        Command::Transform(input) => {
            let items = load_inputs(cfg, input)?;
            let mut csv = Csv::new(&["input", "char_index", "re", "im"]);
            for it in &items {
                let s = fourier(&it.function);
                for (i, v) in s.coeffs.iter().enumerate() {
                    csv.row(&[it.label.clone(), i.to_string(), num(v.re), num(v.im)]);
                }
            }
            Ok(Outcome::single("transform.csv", csv.as_str().to_string(), true))
        }
        Command::Anorm(input) => {
            let items = load_inputs(cfg, input)?;
            let rows = parallel_rows(&items, |it| {
                let f = &it.function;
                let a = f.norm(Norm::A);
                let n = f.len() as f64;
                let mut r = ReportRow::new(&it.label);
                r.value("size", it.set.as_ref().map_or(0, Vec::len))
                    .value("a_norm", num(a))
                    .value("a_ratio", num(a / f.norm(Norm::Linf)))
                    .value("a_norm_over_ln_n", num(a / n.ln()))
                    .check("finite", a.is_finite());
                Ok(r)
            })?;
            Ok(Outcome::rows("anorm.csv", &rows))
        }
        Command::Spectrum { input, kind, epsilon } => {
            let items = load_inputs(cfg, input)?;
            let f = &items[0].function;
            let t = SpectrumThreshold::new(
                match kind {
                    Kind::L1 => ThresholdKind::L1,
                    Kind::Linf => ThresholdKind::Linf,
                },
                *epsilon,
            )?;
            let set = large_spectrum(f, t)?;
            let s = fourier(f);
            let mut csv = Csv::new(&["char_index", "abs_coeff", "re", "im"]);
            for &g in &set {
                let v = s.coeffs[g];
                csv.row(&[g.to_string(), num(v.norm()), num(v.re), num(v.im)]);
            }
            Ok(Outcome::single("spectrum.csv", csv.as_str().to_string(), true))
        }
        Command::Dissociate { chars, s_set, bohr_gamma } => {
            let g = cfg.group()?;
            let gamma = read_chars(g, chars)?;
            let s = match s_set.as_str() {
                "zero" => vec![0],
                other => {
                    let d: f64 = other
                        .strip_prefix("bohr:")
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| Error::Parse(format!("bad --s-set {other:?}")))?;
                    let freq = match bohr_gamma {
                        Some(p) => read_chars(g, p)?,
                        None => vec![0],
                    };
                    let b = crate::bohr::bohr_set(g, &freq, d)?;
                    let mut s = above(&b.cutoff().transform(), 1.0 / 3.0);
                    let neg: Vec<_> = s.iter().map(|&x| g.neg(x)).collect();
                    s.extend(neg);
                    s.sort_unstable();
                    s.dedup();
                    s
                }
            };
            let check = crate::dissociation::is_s_dissociated(g, &gamma, &s, c.dissociation_cap.max(gamma.len()))?;
            let lambda = max_dissociated_subset(g, &gamma, &s, c.dissociation_cap)?;
            let report = json!({
                "input_dissociated": check.dissociated,
                "witness": check.witness,
                "lambda_size": lambda.len(),
                "s_size": s.len(),
            });
            Ok(Outcome {
                artifacts: vec![
                    ("lambda.txt".into(), format_set(g, &lambda)),
                    ("dissociate.json".into(), serde_json::to_string_pretty(&report).unwrap() + "\n"),
                ],
                passed: true,
            })
        }
        Command::Riesz { lambda, omega, t } => {
            let g = cfg.group()?;
            let lam = read_chars(g, lambda)?;
            let om = read_weights(omega)?;
            let p = riesz_product(g, &lam, &om, *t)?;
            let s = fourier(&p);
            let mut csv = Csv::new(&["x", "value"]);
            for (x, v) in p.values.iter().enumerate() {
                csv.row(&[g.format_element(x), num(v.re)]);
            }
            let interp = lam
                .iter()
                .zip(&om)
                .map(|(&l, w)| (s.coeffs[l] - w * (0.5 * t)).norm())
                .fold(0.0, f64::max);
            let report = json!({
                "l1_norm": p.norm(Norm::L1),
                "min_value": p.values.iter().map(|v| v.re).fold(f64::INFINITY, f64::min),
                "coefficient_defect": interp,
            });
            Ok(Outcome {
                artifacts: vec![
                    ("riesz.csv".into(), csv.as_str().to_string()),
                    ("riesz.json".into(), serde_json::to_string_pretty(&report).unwrap() + "\n"),
                ],
                passed: true,
            })
        }
        Command::Tau { l } => {
            let tau = make_tau(*l)?;
            let ok = check_tau(&tau, *l, 4 * *l as u32, 1e-9).is_ok();
            let mut csv = Csv::new(&["t", "weight"]);
            for &(t, w) in &tau.atoms {
                csv.row(&[num(t), num(w)]);
            }
            let moments: Vec<f64> = (0..=4 * *l as u32).map(|k| tau.moment(k)).collect();
            let report = json!({ "l": l, "norm": tau.norm(), "bound": 2.0 * (2 * l - 1) as f64, "moments": moments, "contract": ok });
            Ok(Outcome {
                artifacts: vec![
                    ("tau.csv".into(), csv.as_str().to_string()),
                    ("tau.json".into(), serde_json::to_string_pretty(&report).unwrap() + "\n"),
                ],
                passed: ok,
            })
        }
        Command::Aux { mode, eta, lambda, omega } => {
            let g = cfg.group()?;
            let lam = read_chars(g, lambda)?;
            let om = read_weights(omega)?;
            let real = || -> Vec<f64> { om.iter().map(|w| w.re).collect() };
            let mu = match mode {
                AuxMode::Primitive => primitive_aux(g, &lam, &real(), *eta, c.dissociation_cap)?,
                AuxMode::Model => aux_measure_model(g, &lam, &real(), *eta, c.dissociation_cap)?,
                AuxMode::General => aux_measure(g, &lam, &om, *eta, c)?,
            };
            let r = aux_report(&mu, &lam, &om, false);
            let bound = c.c_aux * (1.0 + (1.0 / eta).log2());
            let passed = r.interpolation_defect <= 1e-9 && r.max_leakage <= eta + 1e-12 && r.tv_norm <= bound;
            let mut csv = Csv::new(&["x", "re", "im"]);
            for (x, w) in mu.weights.iter().enumerate() {
                csv.row(&[g.format_element(x), num(w.re), num(w.im)]);
            }
            let report = json!({
                "interpolation_defect": r.interpolation_defect,
                "max_leakage": r.max_leakage,
                "tv_norm": r.tv_norm,
                "tv_bound": bound,
                "passed": passed,
            });
            Ok(Outcome {
                artifacts: vec![
                    ("aux.csv".into(), csv.as_str().to_string()),
                    ("aux.json".into(), serde_json::to_string_pretty(&report).unwrap() + "\n"),
                ],
                passed,
            })
        }
        Command::Bohr { gamma, delta, regular, smooth } => {
            let g = cfg.group()?;
            let freq = read_chars(g, gamma)?;
            let profile = RadiusProfile::new(g, &freq)?;
            let (b, constant, grid, certified) = if *regular {
                let r = find_regular(g, &freq, *delta, c)?;
                (r.bohr, Some(r.constant), Some(r.grid_constant), r.certified)
            } else {
                let (k, gr) = profile.regularity_constant(*delta, c.c_r, 32);
                (profile.bohr_set(*delta)?, Some(k), Some(gr), k <= c.c_reg)
            };
            let size_ok = b.density >= delta.min(1.0).powi(freq.len() as i32) * (1.0 - 1e-12);
            let mut report = json!({
                "delta": b.delta,
                "dimension": b.dimension(),
                "size": b.members.len(),
                "density": b.density,
                "density_floor": b.delta.powi(b.dimension() as i32),
                "regularity_constant": constant,
                "grid_constant": grid,
                "regular": certified,
                "members": b.members.iter().map(|&x| g.format_element(x)).collect::<Vec<_>>(),
            });
            if let Some(spec) = smooth {
                let (l, k) = spec
                    .split_once(',')
                    .ok_or_else(|| Error::Parse("--smooth expects L,KAPPA".into()))?;
                let l: usize = l.trim().parse().map_err(|_| Error::Parse("bad L".into()))?;
                let k: f64 = k.trim().parse().map_err(|_| Error::Parse("bad KAPPA".into()))?;
                let s = smoothed_cutoff(g, &freq, b.delta, l, k)?;
                report["smoothing_distance"] = json!(s.distance);
            }
            Ok(Outcome::json("bohr.json", &report, size_ok))
        }
        Command::Cover { input, kind, epsilon, eta, local, refined, gamma, delta } => {
            let g = cfg.group()?;
            let items = load_inputs(cfg, input)?;
            let freq = match gamma {
                Some(p) => read_chars(g, p)?,
                None => Vec::new(),
            };
            let reports: Vec<Value> = items
                .par_iter()
                .map(|it| -> Result<Value> {
                    let f = &it.function;
                    if *local && g.is_boolean() {
                        let m = model_local_cover(f, &freq, *epsilon, *refined)?;
                        return Ok(json!({"input": it.label, "mode": "model", "lambda": m.lambda, "spectrum_size": m.spectrum.len(), "scale": m.scale, "measured_constant": m.measured_constant, "contained": m.contained}));
                    }
                    if *local {
                        let fr = if freq.is_empty() { vec![0] } else { freq.clone() };
                        let b = crate::bohr::find_regular_or_best(g, &fr, *delta, c)?;
                        let lc = local_ag_cover(f, &b, *epsilon, *eta, c)?;
                        let chain_max = lc.ledger.chain.iter().map(|x| x.1).fold(0.0, f64::max);
                        return Ok(json!({"input": it.label, "mode": "local", "lambda": lc.lambda, "spectrum_size": lc.spectrum.len(), "delta": b.bohr.delta, "delta_inner": lc.delta_inner, "delta_prime": lc.delta_prime, "nominal_width": lc.nominal_width, "measured_constant": lc.measured_constant, "capped": lc.capped, "class_inclusion": lc.class_inclusion, "chain_max": chain_max, "certified": lc.ledger.holds, "regularity_certified": lc.regularity_certified}));
                    }
                    let cover = match kind {
                        Kind::L1 => chang_cover(f, *epsilon, c)?,
                        Kind::Linf => ag_cover(f, *epsilon, c)?,
                    };
                    Ok(json!({"input": it.label, "mode": "global", "lambda": cover.lambda, "spectrum_size": cover.spectrum.len(), "scale": cover.scale, "measured_constant": cover.measured_constant, "contained": cover.contained}))
                })
                .collect::<Result<_>>()?;
            Ok(Outcome::json("cover.json", &Value::Array(reports), true))
        }
        Command::Approximate { input, mode, epsilon, trace } => {
            let items = load_inputs(cfg, input)?;
            let results: Vec<(ReportRow, Value)> = items
                .par_iter()
                .map(|it| -> Result<(ReportRow, Value)> {
                    let t = Instant::now();
                    let f = &it.function;
                    let mut row = ReportRow::new(&it.label);
                    let tr = match mode {
                        ApproxMode::F2nPlain | ApproxMode::F2nRefined => {
                            let refined = matches!(mode, ApproxMode::F2nRefined);
                            let (a, tr) = f2n_approximate(f, *epsilon, refined, c)?;
                            row.value("codim", a.codim)
                                .value("worst_error", num(a.worst_error))
                                .value("plain_bound", num(a.plain_bound))
                                .check("verified", a.verified)
                                .check("ledger_increases", tr.ledger_increases());
                            tr
                        }
                        ApproxMode::Bohr => {
                            let (a, tr) = bohr_approximate(f, *epsilon, c)?;
                            row.value("d", a.gamma.len())
                                .value("delta", num(a.delta))
                                .value("delta_prime", num(a.delta_prime))
                                .value("l2_error", num(a.l2_error))
                                .value("oscillation", num(a.oscillation))
                                .check("verified", a.verified)
                                .check("ledger_increases", tr.ledger_increases());
                            tr
                        }
                        ApproxMode::Poor => {
                            let p = poor_approximate(f, *epsilon, c)?;
                            row.value("d", p.d)
                                .value("delta", num(p.delta))
                                .value("error", num(p.error))
                                .check("verified", p.verified);
                            Default::default()
                        }
                    };
                    row.value("rounds", tr.rounds.len());
                    row.runtime_ms = t.elapsed().as_secs_f64() * 1e3;
                    Ok((row, serde_json::to_value(&tr).expect("trace")))
                })
                .collect::<Result<_>>()?;
            let rows: Vec<ReportRow> = results.iter().map(|r| r.0.clone()).collect();
            let mut out = Outcome::rows("approximate.csv", &rows);
            let mut lines = String::new();
            for (row, tr) in &results {
                for rec in tr["rounds"].as_array().into_iter().flatten() {
                    let mut rec = rec.clone();
                    rec["input"] = json!(row.input);
                    lines.push_str(&serde_json::to_string(&rec).unwrap());
                    lines.push('\n');
                }
            }
            if let Some(path) = trace {
                std::fs::write(path, &lines)?;
            } else {
                out.artifacts.push(("trace.jsonl".into(), lines));
            }
            Ok(out)
        }
        Command::Littlewood { p, set, family, trials } => {
            let g = Group::cyclic(*p)?;
            let items = if let Some(path) = set {
                let s = read_set(&g, path)?;
                vec![Instance { label: path.display().to_string(), function: GroupFunction::indicator(&g, &s), set: Some(s) }]
            } else {
                let fam: Family = family.parse()?;
                let mut v = generate_family(fam, &g, cfg.seed, *trials)?;
                if fam == Family::Ap {
                    v.retain(|i| i.label == "ap-1/2");
                }
                v
            };
            let rows = parallel_rows(&items, |it| {
                let r = littlewood_certificate(&g, it.set.as_deref().unwrap_or(&[]), c)?;
                let mut row = ReportRow::new(&it.label);
                row.value("p", r.p)
                    .value("size", r.size)
                    .value("d", r.d)
                    .value("delta_prime", num(r.delta_prime))
                    .value("width_cost", num(r.width_cost))
                    .value("a_norm", num(r.a_norm))
                    .value("ratio_lower", num(r.ratio_lower))
                    .value("ratio_log", num(r.ratio_log))
                    .value("rounds", r.rounds)
                    .check("contradiction_avoided", !r.contradiction_fired)
                    .check("width_cost_ok", r.width_cost_ok)
                    .check("verified", r.verified);
                Ok(row)
            })?;
            Ok(Outcome::rows("littlewood.csv", &rows))
        }
        Command::Verify { suite } => {
            let results = verify_suite(suite, cfg.seed, c)?;
            let mut csv = Csv::new(&["check", "passed", "detail"]);
            for r in &results {
                csv.row(&[r.0.clone(), r.1.to_string(), r.2.replace(',', ";")]);
            }
            Ok(Outcome::single("verify.csv", csv.as_str().to_string(), results.iter().all(|r| r.1)))
        }
    }
}

pub const SUITES: [&str; 9] = [
    "transform", "spectra", "riesz", "aux", "rider", "bohr", "cover", "iteration", "ivt",
];

/// Fast versions of the invariant checks: `(name, passed, detail)`.
pub fn verify_suite(suite: &str, seed: u64, c: &Constants) -> Result<Vec<(String, bool, String)>> {
    let names: Vec<&str> = if suite == "all" {
        SUITES.to_vec()
    } else if SUITES.contains(&suite) {
        vec![suite]
    } else {
        return Err(Error::Parse(format!("unknown suite {suite:?}")));
    };
    names
        .par_iter()
        .map(|&name| {
            let (ok, detail) = match run_check(name, seed, c) {
                Ok(d) => (true, d),
                Err(e) => (false, e.to_string()),
            };
            Ok((name.to_string(), ok, detail))
        })
        .collect()
}

fn random_function(g: &Group, rng: &mut ChaCha8Rng) -> GroupFunction {
    GroupFunction::from_fn(g, |_| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Verification(what()))
    }
}

fn run_check(name: &str, seed: u64, c: &Constants) -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match name {
        "transform" => {
            let mut worst: f64 = 0.0;
            for spec in ["Z97", "F2^8", "Z4xZ27", "Z3^5"] {
                let g = Group::parse(spec)?;
                let f = random_function(&g, &mut rng);
                let s = fourier(&f);
                worst = worst.max(inverse(&s).max_abs_diff(&f));
                worst = worst.max(s.max_abs_diff(&fourier_direct(&f)));
                let parseval = (s.l2_sqr() - f.norm(Norm::L2).powi(2)).abs();
                worst = worst.max(parseval);
            }
            ensure(worst <= 1e-10, || format!("defect {worst}"))?;
            Ok(format!("max defect {worst:e}"))
        }
        "spectra" => {
            for _ in 0..20 {
                let g = Group::cyclic(rng.gen_range(16..200))?;
                let f = random_function(&g, &mut rng);
                let eps = rng.gen_range(0.05..1.0);
                large_spectrum(&f, SpectrumThreshold::new(ThresholdKind::L1, eps)?)?;
                large_spectrum(&f, SpectrumThreshold::new(ThresholdKind::Linf, eps)?)?;
            }
            Ok("40 cardinality checks".into())
        }
        "riesz" => {
            let g = Group::cube(8)?;
            let lam = vec![1, 2, 4, 8, 16];
            let om: Vec<C64> = lam.iter().map(|_| C64::new(rng.gen_range(-1.0..1.0), 0.0)).collect();
            let p = riesz_product(&g, &lam, &om, 1.0)?;
            ensure((p.norm(Norm::L1) - 1.0).abs() <= 1e-12, || "L1 norm".into())?;
            let s = fourier(&p);
            let prod = om[0] * om[1];
            ensure((s.coeffs[3] - prod).norm() <= 1e-12, || "coefficient".into())?;
            for l in 2..=10 {
                check_tau(&make_tau(l)?, l, 4 * l as u32, 1e-9)?;
            }
            Ok("product and tau contracts".into())
        }
        "aux" => {
            let g = Group::cyclic(243)?;
            let lam = vec![1, 3, 9, 27];
            let om: Vec<C64> = lam
                .iter()
                .map(|_| C64::from_polar(rng.gen_range(0.0..1.0), rng.gen_range(0.0..std::f64::consts::TAU)))
                .collect();
            let eta = 1.0 / 64.0;
            let mu = aux_measure(&g, &lam, &om, eta, c)?;
            let r = aux_report(&mu, &lam, &om, false);
            let bound = c.c_aux * (1.0 + (1.0 / eta).log2());
            ensure(
                r.interpolation_defect <= 2f64.powi(-30) && r.max_leakage <= eta && r.tv_norm <= bound,
                || format!("{r:?}"),
            )?;
            Ok(format!("tv {:.3}", r.tv_norm))
        }
        "rider" => {
            let g = Group::cyclic(1000)?;
            let lam = vec![1, 3, 9, 27, 81];
            ensure(is_dissociated(&g, &lam, c.dissociation_cap)?.dissociated, || "not dissociated".into())?;
            for gamma in [0, 4, 13, 40, 121] {
                for r in 0..=lam.len() {
                    rider_count(&g, &lam, gamma, r, c.rider_cap)?;
                }
            }
            Ok("counts within 2^r".into())
        }
        "bohr" => {
            let g = Group::cyclic(1009)?;
            for _ in 0..10 {
                let gamma: Vec<Character> = (0..rng.gen_range(1..3)).map(|_| rng.gen_range(1..1009)).collect();
                let delta = rng.gen_range(0.05..0.4);
                let r = find_regular(&g, &gamma, delta, c)?;
                let d = r.bohr.dimension() as f64;
                for &y in r.bohr.members.iter().take(20) {
                    let radius = crate::bohr::element_radius(&g, &gamma, y);
                    if radius * d <= c.c_r * r.bohr.delta {
                        let defect = translate_defect(&r.bohr, y);
                        ensure(defect <= c.c_reg * d * radius / r.bohr.delta + 1e-12, || format!("defect {defect}"))?;
                    }
                }
            }
            Ok("10 regular sets".into())
        }
        "cover" => {
            let g = Group::cyclic(257)?;
            let f = GroupFunction::indicator(&g, &(0..64).collect::<Vec<_>>());
            let cover = ag_cover(&f, 0.1, c)?;
            chang_cover(&f, 0.1, c)?;
            ensure(!cover.lambda.is_empty() && cover.contained, || "global cover".into())?;
            let h = Group::cube(10)?;
            let sum = GroupFunction::from_fn(&h, |x| [16, 40, 100].iter().map(|&k| h.pairing(k, x)).sum());
            let b = find_regular_or_best(&h, &[1], 0.25, c)?;
            let lc = local_ag_cover(&sum, &b, 0.25, 0.5, c)?;
            ensure(!lc.lambda.is_empty() && lc.class_inclusion && lc.ledger.holds, || "local cover".into())?;
            Ok(format!("|Lambda| = {}, local |Lambda| = {}", cover.lambda.len(), lc.lambda.len()))
        }
        "iteration" => {
            let g = Group::cube(6)?;
            let f = GroupFunction::indicator(&g, &[0, 1, 2, 3, 5, 8, 13, 21, 34]);
            let (a, _) = f2n_approximate(&f, 0.25, false, c)?;
            let z = Group::cyclic(101)?;
            let h = GroupFunction::character(&z, 7);
            let (b, t) = bohr_approximate(&h, 0.25, c)?;
            ensure(a.codim > 0 && a.verified && b.verified && t.ledger_increases(), || "iteration".into())?;
            Ok(format!("codim {}", a.codim))
        }
        "ivt" => {
            let g = Group::cyclic(101)?;
            for _ in 0..20 {
                let mut v = vec![0.0f64; 101];
                for x in 1..101 {
                    v[x] = v[x - 1] + rng.gen_range(-1.0..1.0);
                }
                let wrap = (v[100] - v[0]).abs();
                let lo = v.iter().cloned().fold(f64::INFINITY, f64::min);
                // keep the largest step below ||f||_inf
                v.iter_mut().for_each(|t| *t += wrap.max(1.0) - lo);
                let f = GroupFunction::from_real(g.clone(), &v)?;
                let step = (0..101).map(|x| (v[(x + 1) % 101] - v[x]).abs()).fold(0.0, f64::max);
                let eps = (step / f.norm(Norm::Linf)).min(1.0);
                let x = discrete_ivt(&f, 1, eps)?;
                ensure((v[x] - f.mean().re).abs() <= 0.5 * eps * f.norm(Norm::Linf) + 1e-12, || "ivt".into())?;
            }
            Ok("20 walks".into())
        }
        _ => unreachable!(),
    }
}

/// Entry point shared by the binary: parse, run, write, exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let result = ExperimentConfig::from_cli(&cli).and_then(|cfg| {
        let out = run(&cfg, &cli.command)?;
        emit(&cfg, &out)?;
        Ok(out.passed)
    });
    match result {
        Ok(true) => 0,
        Ok(false) => {
            eprintln!("verification failed");
            1
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn emit(cfg: &ExperimentConfig, out: &Outcome) -> Result<()> {
    match &cfg.out {
        Some(dir) => {
            std::fs::create_dir_all(dir)?;
            for (name, body) in &out.artifacts {
                std::fs::write(dir.join(name), body)?;
            }
        }
        None => {
            if let Some((_, body)) = out.artifacts.first() {
                print!("{body}");
            }
        }
    }
    Ok(())
}
