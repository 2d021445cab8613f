//! Command-line front end: catalog queries, minimality searches,
//! verification suites, spectra, and the exact symbolic certificates.
//!
//! Exit codes: 0 when every requested check passes, 1 when a suite
//! reports a failing identity, 2 on configuration or numeric errors.

use clap::{Args, Parser, Subcommand};
use nijenhuis_core::error::Error;
use nijenhuis_core::exact::rat_string;
use nijenhuis_core::geomcheck::{
    run_suite, spectrum_report, Model, Mutation, SuiteConfig, SuiteKind, SuiteReport,
};
use nijenhuis_core::hermcat::{default_catalog, Space, SpaceTag};
use nijenhuis_core::minimality::{is_phi_minimal, nogo_report};
use nijenhuis_core::repforge::{Algebra, RepLabel};
use nijenhuis_core::report;
use serde_json::Value;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "nijenhuis", version)]
#[command(about = "Exact and residual verification of Nijenhuis differentials \
on compact hermitian symmetric spaces")]
struct Cli {
    /// Cap the worker threads used by the verification suites.
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Commands,
}

#[derive(Args, Clone)]
struct SpaceArgs {
    /// Family: AIII | BDI | DIII | CI | EIII | EVII.
    #[arg(long)]
    space: Option<String>,

    /// Family parameter n.
    #[arg(long)]
    n: Option<usize>,

    /// AIII block parameter k.
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Args, Clone)]
struct OutputArgs {
    /// Output format: text | json.
    #[arg(long, default_value = "text")]
    format: String,

    /// Write the report to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Commands {
    /// List the six families with ranks, subalgebras and root counts.
    Catalog {
        #[command(flatten)]
        space: SpaceArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Minimality verdicts and the exceptional nonexistence search.
    Minimal {
        #[command(subcommand)]
        action: MinimalAction,
    },
    /// Run a verification suite at random orbit points.
    Verify {
        /// quadratic | slice | kphi | basic-forms | explicit-formula | commutation.
        suite: String,
        #[command(flatten)]
        space: SpaceArgs,
        /// Representation: fundamental | spin (default per family).
        #[arg(long)]
        rep: Option<String>,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// Sampling seed; drawn from entropy (and echoed) when absent.
        #[arg(long)]
        seed: Option<u64>,
        /// Formula corruption: none | drop-half | flip-sign | zero-lambda.
        #[arg(long, default_value = "none")]
        mutate: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Exact symbolic certificates for the exceptional slice rings.
    Symbolic {
        /// eiii | evii.
        which: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Nijenhuis eigenvalues with the slice cross-check.
    Spectrum {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long)]
        rep: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Subcommand)]
enum MinimalAction {
    /// Exhaustive dominant-weight scan proving nonexistence (e6 | e7).
    Search {
        system: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Verdict for one concrete representation.
    Check {
        #[command(flatten)]
        space: SpaceArgs,
        /// fundamental | spin.
        #[arg(long, default_value = "fundamental")]
        rep: String,
        #[command(flatten)]
        output: OutputArgs,
    },
}

fn parse_space(args: &SpaceArgs) -> Result<SpaceTag, Error> {
    let name = args
        .space
        .as_deref()
        .ok_or_else(|| Error::Config("missing --space".into()))?;
    let need_n = |what: &str| {
        args.n
            .ok_or_else(|| Error::Config(format!("{what} needs --n")))
    };
    match name.to_uppercase().as_str() {
        "AIII" => {
            let n = need_n("AIII")?;
            let k = args
                .k
                .ok_or_else(|| Error::Config("AIII needs --k".into()))?;
            Ok(SpaceTag::AIII { n, k })
        }
        "BDI" => Ok(SpaceTag::BDI { n: need_n("BDI")? }),
        "DIII" => Ok(SpaceTag::DIII { n: need_n("DIII")? }),
        "CI" => Ok(SpaceTag::CI { n: need_n("CI")? }),
        "EIII" => Ok(SpaceTag::EIII),
        "EVII" => Ok(SpaceTag::EVII),
        other => Err(Error::Config(format!("unknown space family '{other}'"))),
    }
}

fn parse_rep(rep: Option<&str>) -> Result<Option<RepLabel>, Error> {
    match rep {
        None => Ok(None),
        Some("fundamental") => Ok(Some(RepLabel::Fundamental)),
        Some("spin") => Ok(Some(RepLabel::Spin)),
        Some(other) => Err(Error::Config(format!(
            "unknown representation '{other}' (expected fundamental|spin)"
        ))),
    }
}

fn emit(output: &OutputArgs, text: String, jsonv: Value) -> Result<(), Error> {
    let body = match output.format.as_str() {
        "text" => text,
        "json" => serde_json::to_string_pretty(&jsonv)
            .map_err(|e| Error::Structural(format!("serialization: {e}")))?,
        other => return Err(Error::Config(format!("unknown format '{other}'"))),
    };
    match &output.out {
        None => {
            println!("{body}");
            Ok(())
        }
        Some(path) => {
            let mut f = std::fs::File::create(path)
                .map_err(|e| Error::Config(format!("cannot write {}: {e}", path.display())))?;
            writeln!(f, "{body}").map_err(|e| Error::Config(format!("write failed: {e}")))?;
            eprintln!("wrote {}", path.display());
            Ok(())
        }
    }
}

fn catalog_text(spaces: &[Space]) -> String {
    let mut lines = vec![format!(
        "{:<14} {:<8} {:<16} {:>4} {:>8} {:>8}  {}",
        "space", "algebra", "k_phi", "rank", "|Dc+|", "|Dnc+|", "chain"
    )];
    for s in spaces {
        let chain = s
            .thimm_chain()
            .map(|c| {
                c.levels
                    .iter()
                    .map(|l| l.label.clone())
                    .collect::<Vec<_>>()
                    .join(" > ")
            })
            .unwrap_or_default();
        lines.push(format!(
            "{:<14} {:<8} {:<16} {:>4} {:>8} {:>8}  {}",
            s.tag.to_string(),
            s.tag.algebra_label(),
            s.tag.kphi_label(),
            s.rank,
            s.compact_pos.len(),
            s.noncompact_pos.len(),
            chain
        ));
    }
    lines.join("\n")
}

fn suite_text(report: &SuiteReport) -> String {
    let mut lines = vec![format!(
        "suite {} on {} ({}) — trials {}, seed {}, tol {:.1e}, mutation {}",
        report.suite,
        report.space,
        report.rep,
        report.trials,
        report.seed,
        report.tolerance,
        report.mutation
    )];
    for e in &report.breakdown {
        lines.push(format!(
            "  {:<52} {:>12.3e}  [{}]",
            e.identity,
            e.residual,
            if e.pass { "pass" } else { "FAIL" }
        ));
    }
    lines.push(format!(
        "max residual {:.3e} — {}",
        report.max_residual,
        if report.pass { "PASS" } else { "FAIL" }
    ));
    lines.join("\n")
}

fn run() -> Result<bool, Error> {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| Error::Config(format!("thread pool: {e}")))?;
    }
    match cli.command {
        Commands::Catalog { space, output } => {
            let spaces = if space.space.is_some() {
                vec![Space::new(parse_space(&space)?)?]
            } else {
                default_catalog()?
            };
            let text = catalog_text(&spaces);
            emit(&output, text, report::catalog_document(&spaces))?;
            Ok(true)
        }
        Commands::Minimal { action } => match action {
            MinimalAction::Search { system, output } => {
                let tag = match system.to_lowercase().as_str() {
                    "e6" => SpaceTag::EIII,
                    "e7" => SpaceTag::EVII,
                    other => {
                        return Err(Error::Config(format!(
                            "search runs over e6 or e7, got '{other}'"
                        )))
                    }
                };
                let space = Space::new(tag)?;
                let cert = nogo_report(&space)?;
                let nontrivial = cert.outcome.survivors.iter().filter(|s| !s.trivial).count();
                let mut text = vec![format!(
                    "{}: first-order survivors within bounds {:?}:",
                    space.tag.algebra_label(),
                    cert.outcome.bounds
                )];
                for s in &cert.outcome.survivors {
                    let sys = &space.system;
                    let kind = if s.trivial {
                        "trivial".to_string()
                    } else {
                        let (a, b) = s.witness.unwrap();
                        format!("witness alpha={} beta={}", sys.positive[a], sys.positive[b])
                    };
                    text.push(format!(
                        "  labels {:?}  weight {}  [{}]",
                        s.labels, s.weight, kind
                    ));
                }
                text.push(format!(
                    "{nontrivial} nontrivial candidates, all witnessed — verdict: {}",
                    cert.verdict
                ));
                emit(&output, text.join("\n"), report::nogo_json(&space, &cert))?;
                Ok(true)
            }
            MinimalAction::Check { space, rep, output } => {
                let tag = parse_space(&space)?;
                let rep_label = parse_rep(Some(rep.as_str()))?.unwrap();
                let alg = Algebra::new(Space::new(tag)?)?;
                let verdict = is_phi_minimal(&alg, alg.rep(rep_label)?)?;
                let lam = verdict
                    .lambda
                    .as_ref()
                    .map(|l| format!("i*{}", rat_string(l)))
                    .unwrap_or_else(|| "-".into());
                let text = format!(
                    "{} {}: {}  lambda_phi = {}  dims V+ = {}, V- = {}{}",
                    alg.space.tag,
                    rep_label,
                    if verdict.minimal {
                        "phi-minimal"
                    } else {
                        "not phi-minimal"
                    },
                    lam,
                    verdict.dims.0,
                    verdict.dims.1,
                    if verdict.on_summand {
                        "  (on the highest-weight summand)"
                    } else {
                        ""
                    }
                );
                emit(
                    &output,
                    text,
                    report::minimality_json(&alg.space, rep_label, &verdict),
                )?;
                Ok(true)
            }
        },
        Commands::Verify {
            suite,
            space,
            rep,
            trials,
            tol,
            seed,
            mutate,
            output,
        } => {
            if trials < 1 {
                return Err(Error::Config("trials must be >= 1".into()));
            }
            if !(tol > 0.0) {
                return Err(Error::Config("tolerance must be positive".into()));
            }
            let kind = SuiteKind::parse(&suite)?;
            let tag = parse_space(&space)?;
            let model = Model::build(tag, parse_rep(rep.as_deref())?)?;
            let seed = seed.unwrap_or_else(rand::random);
            let cfg = SuiteConfig {
                trials,
                tol,
                seed,
                mutation: Mutation::parse(&mutate)?,
            };
            let report = run_suite(&model, kind, &cfg)?;
            let pass = report.pass;
            let jsonv = serde_json::to_value(&report)
                .map_err(|e| Error::Structural(format!("serialization: {e}")))?;
            emit(&output, suite_text(&report), jsonv)?;
            Ok(pass)
        }
        Commands::Symbolic { which, output } => match which.to_lowercase().as_str() {
            "eiii" => {
                let space = Space::new(SpaceTag::EIII)?;
                let cert = nijenhuis_core::symring::verify_eiii(&space)?;
                let text = format!(
                    "EIII slice ring (c = (-1,-1), (rho,rho) = {}):\n  p3 relation: {}\n  dN p1 = -d p2: {}\n  dN p2 = (2/3) d(3p1p2+p1^3): {}\n  dN-stable through degree 3: {}\nall identities exact: {}",
                    rat_string(&cert.constants.rho_sq),
                    cert.p3_relation,
                    cert.dn_p1,
                    cert.dn_p2,
                    cert.closed_deg3,
                    cert.all_hold()
                );
                let ok = cert.all_hold();
                emit(&output, text, report::eiii_json(&cert))?;
                Ok(ok)
            }
            "evii" => {
                let space = Space::new(SpaceTag::EVII)?;
                let cert = nijenhuis_core::symring::verify_evii(&space)?;
                let text = format!(
                    "EVII slice ring (c = (-1,-1,-1), (rho,rho) = {}):\n  I_{{1,1}} = p1+3p2+2p3 outside degree-3 products of {{1, I_{{1,0}}, I_{{2,0}}}}: non-membership certified by a separating functional\n  d_N rule: {}",
                    rat_string(&cert.constants.rho_sq),
                    cert.dn_rule
                );
                emit(&output, text, report::evii_json(&cert))?;
                Ok(!cert.membership.member)
            }
            other => Err(Error::Config(format!(
                "symbolic takes eiii or evii, got '{other}'"
            ))),
        },
        Commands::Spectrum {
            space,
            rep,
            seed,
            trials,
            tol,
            output,
        } => {
            let tag = parse_space(&space)?;
            let model = Model::build(tag, parse_rep(rep.as_deref())?)?;
            let seed = seed.unwrap_or_else(rand::random);
            let report = spectrum_report(&model, seed, trials, tol)?;
            let mut text = vec![format!(
                "spectrum of {} ({}) — seed {}, {} matched slice points, tol {:.1e}",
                report.space, report.rep, report.seed, report.trials, report.tolerance
            )];
            text.push(format!(
                "  base point eigenvalues all zero: {:.3e}",
                report.base_point_zero
            ));
            for p in report.points.iter().take(5) {
                text.push(format!(
                    "  a = {:?}\n    computed {:?}\n    expected {:?}  (residual {:.3e})",
                    p.a, p.computed, p.expected, p.residual
                ));
            }
            if report.points.len() > 5 {
                text.push(format!("  … {} further points", report.points.len() - 5));
            }
            text.push(format!(
                "max residual {:.3e} — {}",
                report.max_residual,
                if report.pass { "PASS" } else { "FAIL" }
            ));
            let pass = report.pass;
            let jsonv = serde_json::to_value(&report)
                .map_err(|e| Error::Structural(format!("serialization: {e}")))?;
            emit(&output, text.join("\n"), jsonv)?;
            Ok(pass)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::from(0),
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
