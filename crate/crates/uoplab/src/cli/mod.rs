//! Batch verification driver: suites of checks, reports, certificate emission
//! and the command-line front end.

mod args;
pub mod checks;
mod datum_io;

use std::fmt;
use std::fs;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::coeffs::Coweight;
use crate::error::{Error, Result};
use crate::hecke::HeckeAlgebra;
use crate::rootdata::{antidominant_rep, RootDatum};
use crate::tree::TreeModel;
use crate::uops::{integrality_certificate, IntegralityCertificate, DEFAULT_SPECIALIZATIONS};
pub use args::{main_from_args, parse_config, Cli, Command, CommonArgs};
use checks::Outcome;
pub use datum_io::{load_root_datum, resolve_group, save_root_datum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Coeffs,
    Rootdata,
    Hecke,
    Satake,
    Integrality,
    Tree,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Coeffs,
        Suite::Rootdata,
        Suite::Hecke,
        Suite::Satake,
        Suite::Integrality,
        Suite::Tree,
    ];

    fn needs_group(self) -> bool {
        self != Suite::Tree
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Coeffs => "coeffs",
            Suite::Rootdata => "rootdata",
            Suite::Hecke => "hecke",
            Suite::Satake => "satake",
            Suite::Integrality => "integrality",
            Suite::Tree => "tree",
        })
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.to_string() == s.trim())
            .ok_or_else(|| Error::ConfigError(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            other => Err(Error::ConfigError(format!(
                "unknown output format {other:?}"
            ))),
        }
    }
}

/// Everything a verification run needs.
#[derive(Clone, Debug)]
pub struct RunConfig {
    /// Preset label or path to a custom datum file.
    pub group: String,
    pub suites: Vec<Suite>,
    pub lambda: Option<Coweight>,
    pub q: u32,
    pub depth: u32,
    pub output: OutputFormat,
    pub parallel: bool,
    pub emit_cert: Option<PathBuf>,
    /// Coordinate box radius for the property suites.
    pub box_radius: i32,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            group: "gl2".into(),
            suites: vec![
                Suite::Coeffs,
                Suite::Rootdata,
                Suite::Hecke,
                Suite::Satake,
                Suite::Integrality,
            ],
            lambda: None,
            q: 2,
            depth: 8,
            output: OutputFormat::Text,
            parallel: false,
            emit_cert: None,
            box_radius: 2,
            seed: 0,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.q < 2 {
            return Err(Error::ConfigError(format!(
                "q must be at least 2, got {}",
                self.q
            )));
        }
        if self.depth < 2 {
            return Err(Error::ConfigError(format!(
                "depth must be at least 2, got {}",
                self.depth
            )));
        }
        if self.box_radius < 0 {
            return Err(Error::ConfigError("box radius must be nonnegative".into()));
        }
        if self.suites.is_empty() {
            return Err(Error::ConfigError("no suites selected".into()));
        }
        Ok(())
    }
}

/// Outcome of one named check.
#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub suite: Suite,
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub millis: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub group: Option<String>,
    pub checks: Vec<CheckResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<IntegralityCertificate>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => self.to_json(),
            OutputFormat::Text => self.to_string(),
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(g) = &self.group {
            writeln!(f, "group {g}")?;
        }
        for c in &self.checks {
            writeln!(
                f,
                "[{}] {:<12} {:<28} {:>9.1} ms  {}",
                if c.passed { "PASS" } else { "FAIL" },
                c.suite.to_string(),
                c.name,
                c.millis,
                c.detail
            )?;
        }
        if let Some(cert) = &self.certificate {
            writeln!(f, "certificate for {} at {:?}:", cert.group, cert.lambda)?;
            writeln!(f, "  {}", cert.polynomial())?;
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        write!(f, "{} checks, {} failed", self.checks.len(), failed)
    }
}

type Task<'a> = Box<dyn Fn() -> Result<Outcome> + Send + Sync + 'a>;

struct Job<'a> {
    suite: Suite,
    name: &'static str,
    task: Task<'a>,
}

fn job<'a>(
    suite: Suite,
    name: &'static str,
    f: impl Fn() -> Result<Outcome> + Send + Sync + 'a,
) -> Job<'a> {
    Job {
        suite,
        name,
        task: Box::new(f),
    }
}

fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

fn execute(job: &Job<'_>) -> CheckResult {
    let start = Instant::now();
    let outcome = (job.task)().unwrap_or_else(|e| Outcome::fail(e.to_string()));
    CheckResult {
        suite: job.suite,
        name: job.name.to_string(),
        passed: outcome.passed,
        detail: outcome.detail,
        millis: start.elapsed().as_secs_f64() * 1e3,
    }
}

/// Checks that `lambda` fits the datum and lies in the antidominant cone.
pub fn validate_lambda(d: &RootDatum, lambda: &Coweight) -> Result<()> {
    d.check_rank(lambda)?;
    if !d.is_antidominant(lambda) {
        return Err(Error::NotAntidominant(lambda.to_string()));
    }
    Ok(())
}

/// Guidance naming the antidominant representative of the configured `λ`.
pub fn antidominant_hint(cfg: &RunConfig) -> Option<String> {
    let lambda = cfg.lambda.as_ref()?;
    let d = resolve_group(&cfg.group).ok()?;
    d.check_rank(lambda).ok()?;
    let (rep, _) = antidominant_rep(&d, lambda);
    let csv: Vec<String> = rep.iter().map(|x| x.to_string()).collect();
    Some(format!(
        "the W₀-orbit of {lambda} meets the antidominant cone at {rep}; try --lambda {}",
        csv.join(",")
    ))
}

/// Executes the requested suites and assembles the report in a fixed order.
pub fn run(cfg: &RunConfig) -> Result<Report> {
    cfg.validate()?;
    let needs_group = cfg.suites.iter().any(|s| s.needs_group());
    let datum = needs_group.then(|| resolve_group(&cfg.group)).transpose()?;
    let lambda = match (&datum, &cfg.lambda) {
        (Some(d), Some(l)) => {
            validate_lambda(d, l)?;
            Some(l.clone())
        }
        (Some(d), None) => checks::default_lambda(d),
        (None, _) => None,
    };
    let alg = datum
        .as_ref()
        .map(|d| HeckeAlgebra::from_datum(d.clone()))
        .transpose()?;
    let tree = cfg
        .suites
        .contains(&Suite::Tree)
        .then(|| TreeModel::new(cfg.q, cfg.depth))
        .transpose()?;

    let mut certificate = None;
    let mut results = vec![];
    if cfg.suites.contains(&Suite::Integrality) {
        let (alg, lambda) =
            match (&alg, &lambda) {
                (Some(a), Some(l)) => (a, l),
                _ => return Err(Error::ConfigError(
                    "the integrality suite needs a group with a non-central antidominant coweight"
                        .into(),
                )),
            };
        let start = Instant::now();
        let cert = integrality_certificate(alg, lambda, &DEFAULT_SPECIALIZATIONS)?;
        let millis = start.elapsed().as_secs_f64() * 1e3;
        let c = &cert.checks;
        let layers = [
            ("hecke identity", c.hecke_identity),
            ("projected identity", c.projected_identity),
            ("satake round trip", c.satake_roundtrip),
            ("spherical identity", c.spherical_identity),
        ];
        for (name, passed) in layers {
            results.push(CheckResult {
                suite: Suite::Integrality,
                name: name.into(),
                passed,
                detail: format!("degree {}", cert.degree),
                millis,
            });
        }
        for s in &cert.q_specializations {
            results.push(CheckResult {
                suite: Suite::Integrality,
                name: format!("specialization q = {}", s.q),
                passed: s.hecke_identity && s.projected_identity && s.spherical_identity,
                detail: format!(
                    "hecke {}, projected {}, spherical {}",
                    s.hecke_identity, s.projected_identity, s.spherical_identity
                ),
                millis,
            });
        }
        if let Some(path) = &cfg.emit_cert {
            fs::write(path, cert.to_json())
                .map_err(|e| Error::ConfigError(format!("{}: {e}", path.display())))?;
        }
        certificate = Some(cert);
    }

    let executed: Vec<CheckResult> = {
        let jobs = build_jobs(
            cfg,
            datum.as_ref(),
            alg.as_ref(),
            tree.as_ref(),
            certificate.as_ref(),
        );
        if cfg.parallel {
            jobs.par_iter().map(execute).collect()
        } else {
            jobs.iter().map(execute).collect()
        }
    };
    results.extend(executed);
    results.sort_by_key(|r| r.suite);

    Ok(Report {
        group: datum.map(|d| d.name().to_string()),
        checks: results,
        certificate,
    })
}

fn build_jobs<'a>(
    cfg: &'a RunConfig,
    datum: Option<&'a RootDatum>,
    alg: Option<&'a HeckeAlgebra>,
    tree: Option<&'a TreeModel>,
    cert: Option<&'a IntegralityCertificate>,
) -> Vec<Job<'a>> {
    let r = cfg.box_radius;
    let seed = cfg.seed;
    let mut jobs = vec![];
    for &suite in &cfg.suites {
        match (suite, datum, alg, tree) {
            (Suite::Coeffs, Some(d), _, _) => {
                let rank = d.rank();
                jobs.push(job(suite, "laurent ring axioms", move || {
                    checks::laurent_ring_axioms(&mut rng(seed, 1), 500)
                }));
                jobs.push(job(suite, "group algebra ring axioms", move || {
                    checks::group_algebra_ring_axioms(&mut rng(seed, 2), 500, rank)
                }));
                jobs.push(job(suite, "evaluation homomorphism", move || {
                    checks::evaluation_homomorphism(&mut rng(seed, 3), 200)
                }));
            }
            (Suite::Rootdata, Some(d), Some(a), _) => {
                jobs.push(job(suite, "finite weyl group", move || {
                    checks::weyl_group_consistency(d)
                }));
                jobs.push(job(suite, "length and decomposition", move || {
                    checks::length_and_decomposition(a.group(), r)
                }));
                jobs.push(job(suite, "dot action", move || {
                    checks::dot_action_properties(d, &mut rng(seed, 4), 20, r)
                }));
            }
            (Suite::Hecke, _, Some(a), _) => {
                jobs.push(job(suite, "associativity", move || {
                    checks::associativity(a, &mut rng(seed, 5), 200, r, 6)
                }));
                jobs.push(job(suite, "inverses", move || {
                    checks::inverse_round_trip(a, r, 4)
                }));
                jobs.push(job(suite, "theta additivity", move || {
                    checks::theta_additivity(a, r)
                }));
                jobs.push(job(suite, "theta auxiliary", move || {
                    checks::theta_aux_independence(a, r)
                }));
                jobs.push(job(suite, "bernstein round trip", move || {
                    checks::bernstein_round_trip(a, r, 5)
                }));
                jobs.push(job(suite, "center", move || {
                    checks::center_check(a, &mut rng(seed, 6), 5, r, 4)
                }));
            }
            (Suite::Satake, _, Some(a), _) => {
                jobs.push(job(suite, "satake invariance", move || {
                    checks::satake_invariance(a, r)
                }));
                jobs.push(job(suite, "satake multiplicative", move || {
                    checks::satake_multiplicative(a, r)
                }));
                jobs.push(job(suite, "satake round trips", move || {
                    checks::satake_round_trips(a, r)
                }));
            }
            (Suite::Integrality, _, _, _) => {
                if let (Some(c), Some(true)) = (cert, datum.map(|d| d.name() == "gl2")) {
                    if c.lambda == [1, 0] {
                        jobs.push(job(suite, "tree action", move || {
                            let t = TreeModel::new(cfg.q, cfg.depth.max(6))?;
                            checks::gl2_tree_bridge(c, &t)
                        }));
                    }
                }
            }
            (Suite::Tree, _, _, Some(t)) => {
                jobs.push(job(suite, "v∘u = q and T = u + v", move || {
                    checks::tree_hecke_side(t)
                }));
                jobs.push(job(suite, "quadratic relations", move || {
                    checks::tree_hecke_polynomial(t)
                }));
                jobs.push(job(suite, "noncommutativity", move || {
                    checks::tree_noncommutativity(t)
                }));
                jobs.push(job(suite, "fiber operators", move || {
                    checks::tree_fiber_operators(t, 4)
                }));
                jobs.push(job(suite, "retraction", move || checks::tree_retraction(t)));
                jobs.push(job(suite, "trace relation", move || {
                    checks::tree_trace_relation(t, t.depth().saturating_sub(2))
                }));
                jobs.push(job(suite, "conductor spheres", move || {
                    checks::tree_sphere_sizes(t)
                }));
            }
            _ => {}
        }
    }
    jobs
}
