//! The `wsbound` command line.
//!
//! [`run`] takes the full argument vector and returns the exit code with
//! both output streams, so the binary and the tests share one code path.
//! Exit codes: 0 success, 1 parse or validation failure, 2 a cap was hit.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::bound_engine::{self, BoundCertificate, BoundError};
use crate::certificate::{Certificate, CertificateError};
use crate::field_model::{validate, CurveModel, ModelError, ModelSpec};
use crate::lattice::Window;
use crate::oracle;
use crate::semigroup::{hasse_weil_bound, NumericalSemigroup, SemigroupError};
use crate::t_bound_engine::{t_path_bound, PathOrSearch, TBoundCertificate};

#[derive(Debug, Parser)]
#[command(name = "wsbound", version, about = "Bounds on the number of rational places from Weierstrass semigroups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SingleBound {
    Gm,
    Lewittes,
    GmT,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Single-point bounds from a list of semigroup generators.
    Semigroup {
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<i64>,
        #[arg(long)]
        q: i64,
        #[arg(long, value_enum, default_value = "gm")]
        bound: SingleBound,
        /// Also print the set H \ (qH* + H) (or its q - 1 analogue).
        #[arg(long)]
        show_set: bool,
    },
    /// Apéry set of a semigroup with respect to one of its elements.
    Apery {
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<i64>,
        #[arg(long)]
        base: i64,
    },
    /// The Hasse-Weil bound q + 1 + floor(2g sqrt(q)).
    HasseWeil {
        #[arg(long)]
        genus: i64,
        #[arg(long)]
        q: i64,
    },
    /// Multi-point bound from a minimum-weight lattice path.
    Multipoint {
        #[arg(long)]
        model: PathBuf,
        /// Restrict to these distinguished places, in this order.
        #[arg(long, value_delimiter = ',')]
        place: Vec<String>,
        #[arg(long)]
        max_width: Option<i64>,
        #[arg(long)]
        emit_certificate: Option<PathBuf>,
    },
    /// Bound on places where all coordinate functions are units.
    Tbound {
        #[arg(long)]
        model: PathBuf,
        #[arg(long, value_delimiter = ',')]
        place: Vec<String>,
        /// Number of rational places outside that set.
        #[arg(long)]
        excluded: i64,
        #[arg(long)]
        max_width: Option<i64>,
        #[arg(long)]
        emit_certificate: Option<PathBuf>,
    },
    /// Validate a model file and print its place semigroups.
    Check {
        #[arg(long)]
        model: PathBuf,
    },
    /// Re-verify a certificate from scratch.
    VerifyCert { certificate: PathBuf },
    /// Cross-check the engines against the brute-force oracles.
    Selfcheck,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn invalid(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<SemigroupError> for Failure {
    fn from(e: SemigroupError) -> Self {
        let code = if matches!(e, SemigroupError::TooLarge(_)) { 2 } else { 1 };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<ModelError> for Failure {
    fn from(e: ModelError) -> Self {
        let code = if matches!(e, ModelError::CapExceeded { .. }) { 2 } else { 1 };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<BoundError> for Failure {
    fn from(e: BoundError) -> Self {
        Failure {
            code: if e.is_cap() { 2 } else { 1 },
            message: e.to_string(),
        }
    }
}

impl From<CertificateError> for Failure {
    fn from(e: CertificateError) -> Self {
        let code = if matches!(&e, CertificateError::Model(ModelError::CapExceeded { .. })) { 2 } else { 1 };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<oracle::OracleError> for Failure {
    fn from(e: oracle::OracleError) -> Self {
        let code = match &e {
            oracle::OracleError::Bound(b) if b.is_cap() => 2,
            oracle::OracleError::WindowTooLarge { .. } => 2,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

pub fn run<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: 1,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let mut out = String::new();
    match dispatch(cli.command, &mut out) {
        Ok(()) => Outcome {
            code: 0,
            stdout: out,
            stderr: String::new(),
        },
        Err(f) => Outcome {
            code: f.code,
            stdout: out,
            stderr: format!("error: {}\n", f.message),
        },
    }
}

fn dispatch(command: Command, out: &mut String) -> Result<(), Failure> {
    match command {
        Command::Semigroup {
            gens,
            q,
            bound,
            show_set,
        } => semigroup(&gens, q, bound, show_set, out),
        Command::Apery { gens, base } => {
            let h = NumericalSemigroup::from_generators(&gens)?;
            let ap = h.apery_set(base)?;
            let list: Vec<String> = ap.elements.iter().map(i64::to_string).collect();
            writeln!(out, "Ap({h}, {base}) = ({})", list.join(", ")).unwrap();
            Ok(())
        }
        Command::HasseWeil { genus, q } => {
            writeln!(out, "bound {} (Hasse-Weil, g = {genus}, q = {q})", hasse_weil_bound(genus, q)?).unwrap();
            Ok(())
        }
        Command::Multipoint {
            model,
            place,
            max_width,
            emit_certificate,
        } => {
            let model = load_model(&model, &place)?;
            let width = max_width.unwrap_or_else(|| bound_engine::default_width(&model));
            let cert = bound_engine::min_weight_path(&model, width)?;
            report_path(&model, &cert, out);
            writeln!(out, "bound {} (multi-point path bound, n + weight)", cert.bound).unwrap();
            if let Some(path) = emit_certificate {
                write_certificate(&path, &Certificate::Multipoint(cert), out)?;
            }
            Ok(())
        }
        Command::Tbound {
            model,
            place,
            excluded,
            max_width,
            emit_certificate,
        } => {
            if excluded < 0 {
                return Err(Failure::invalid(format!("--excluded must be nonnegative, got {excluded}")));
            }
            let model = load_model(&model, &place)?;
            let width = max_width.unwrap_or_else(|| bound_engine::default_width(&model));
            let t = t_path_bound(&model, &PathOrSearch::Search { max_width: width }, excluded)?;
            report_t(&model, &t, out);
            if let Some(path) = emit_certificate {
                write_certificate(&path, &Certificate::Unit(t), out)?;
            }
            Ok(())
        }
        Command::Check { model } => {
            let text = read(&model)?;
            let spec = ModelSpec::from_yaml(&text)?;
            let report = validate(&spec);
            write!(out, "{report}").unwrap();
            match report.first_failure() {
                None => {
                    writeln!(out, "model {} is valid", spec.name.as_deref().unwrap_or("unnamed")).unwrap();
                    Ok(())
                }
                Some(check) => Err(Failure::invalid(format!(
                    "invariant {} failed: {}",
                    check.name, check.detail
                ))),
            }
        }
        Command::VerifyCert { certificate } => {
            let cert = Certificate::from_json(&read(&certificate)?)?;
            let verified = cert.verify()?;
            writeln!(
                out,
                "certificate ok: {} edges rechecked, weight {}, bound {}",
                verified.edges_checked, verified.weight, verified.bound
            )
            .unwrap();
            Ok(())
        }
        Command::Selfcheck => selfcheck(out),
    }
}

fn semigroup(gens: &[i64], q: i64, bound: SingleBound, show_set: bool, out: &mut String) -> Result<(), Failure> {
    let h = NumericalSemigroup::from_generators(gens)?;
    writeln!(out, "semigroup {h}, genus {}, conductor {}", h.genus(), h.conductor()).unwrap();
    let (value, rule, shift) = match bound {
        SingleBound::Gm => (h.geil_matsumoto_bound(q)?, "Geil-Matsumoto", q),
        SingleBound::Lewittes => (h.lewittes_bound(q)?, "Lewittes", q),
        SingleBound::GmT => (h.single_point_t_bound(q)?, "unit-place single-point bound", q - 1),
    };
    writeln!(out, "bound {value} ({rule}, q = {q})").unwrap();
    if show_set {
        let set = h.shifted_sum_complement(shift)?;
        let list: Vec<String> = set.iter().map(i64::to_string).collect();
        writeln!(out, "set H \\ ({shift}H* + H) = {{{}}} ({} elements)", list.join(", "), set.len()).unwrap();
    }
    Ok(())
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::invalid(format!("cannot read {}: {e}", path.display())))
}

fn load_model(path: &Path, places: &[String]) -> Result<CurveModel, Failure> {
    let spec = ModelSpec::from_yaml(&read(path)?)?;
    let model = CurveModel::new(spec)?;
    if places.is_empty() {
        return Ok(model);
    }
    let names: Vec<&str> = places.iter().map(String::as_str).collect();
    Ok(model.with_distinguished(&names)?)
}

fn write_certificate(path: &Path, cert: &Certificate, out: &mut String) -> Result<(), Failure> {
    std::fs::write(path, cert.to_json())
        .map_err(|e| Failure::invalid(format!("cannot write {}: {e}", path.display())))?;
    writeln!(out, "certificate written to {}", path.display()).unwrap();
    Ok(())
}

fn report_path(model: &CurveModel, cert: &BoundCertificate, out: &mut String) {
    writeln!(out, "model {} ({})", model.name(), cert.model_sha256).unwrap();
    writeln!(out, "places {}", cert.places.join(", ")).unwrap();
    let start = cert.path.first().map(ToString::to_string).unwrap_or_default();
    let end = cert.path.last().map(ToString::to_string).unwrap_or_default();
    writeln!(out, "path {start} -> {end}, {} steps", cert.edges.len()).unwrap();
    let steps: Vec<String> = cert.non_negligible_steps().iter().map(i64::to_string).collect();
    writeln!(out, "non-negligible steps at path degrees {{{}}}", steps.join(", ")).unwrap();
    writeln!(
        out,
        "horizon {} in direction {}",
        cert.horizon,
        model.distinguished_name(cert.extension_direction)
    )
    .unwrap();
    writeln!(out, "weight {}", cert.weight).unwrap();
}

fn report_t(model: &CurveModel, t: &TBoundCertificate, out: &mut String) {
    report_path(model, &t.certificate, out);
    for r in &t.hypothesis_report {
        let status = if r.covers_semigroup {
            "covers H"
        } else if r.verified {
            "verified, does not cover H"
        } else {
            "unverified"
        };
        writeln!(out, "unit hypothesis at {} up to {}: {status}", r.place, r.up_to).unwrap();
    }
    writeln!(out, "q_bound {} (unit-place path bound)", t.q_bound).unwrap();
    writeln!(out, "excluded {}", t.excluded_count).unwrap();
    writeln!(out, "total {} (q_bound + excluded)", t.total_bound).unwrap();
    writeln!(out, "m_t {} (reported only)", t.m_t).unwrap();
}

fn selfcheck(out: &mut String) -> Result<(), Failure> {
    let mut failed = Vec::new();
    let mut line = |name: &str, ok: bool, detail: String| {
        writeln!(out, "{}  {name}: {detail}", if ok { "pass" } else { "FAIL" }).unwrap();
        if !ok {
            failed.push(name.to_string());
        }
    };

    for (gens, e) in [(vec![3, 5, 7], 8), (vec![2, 5], 3), (vec![4, 5], 7), (vec![4, 5], 8), (vec![6, 7, 15], 9)] {
        let h = NumericalSemigroup::from_generators(&gens)?;
        let fast = h.shifted_sum_complement(e)?;
        let cap = e * h.multiplicity() + h.conductor();
        let slow: Vec<i64> = oracle::brute_shifted_complement(&gens, e, cap)?.into_iter().collect();
        line(
            "shifted sums",
            fast == slow,
            format!("{h}, e = {e}: {} elements", fast.len()),
        );
    }
    for gens in [vec![3, 5, 7], vec![4, 5], vec![5, 8, 11]] {
        let h = NumericalSemigroup::from_generators(&gens)?;
        let report = oracle::check_apery_proposition(&gens, 3 * h.conductor())?;
        line(
            "Apery cardinality",
            report.holds(),
            format!("{h}, e up to {}", 3 * h.conductor()),
        );
    }
    for (text, hi) in [
        (crate::bundled::KLEIN_QUARTIC, vec![29, 4]),
        (crate::bundled::GENUS6_NEWTON, vec![43, 6]),
    ] {
        let model = CurveModel::new(ModelSpec::from_yaml(text)?)?;
        let window = Window::new(vec![-1, 0], hi);
        let fast = bound_engine::min_weight_path_in_window(&model, &window)?;
        let (slow, _) = oracle::brute_min_path(&model, &window)?;
        line(
            "lattice paths",
            fast.weight == slow,
            format!("{}, window {:?}..{:?}: weight {}", model.name(), window.lo, window.hi, fast.weight),
        );
    }
    if failed.is_empty() {
        writeln!(out, "selfcheck passed").unwrap();
        Ok(())
    } else {
        Err(Failure::invalid(format!("selfcheck failed: {}", failed.join(", "))))
    }
}
