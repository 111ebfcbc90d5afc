//! The `secdom` command line: argument definitions, dispatch, and the exit
//! code contract (0 success, 1 semantic negative, 2 input error, 3 budget
//! exceeded).

pub mod experiment;
pub mod graphfile;

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::domination::{self, DominationKind, DEFAULT_DOMINATION_BUDGET};
use crate::error::Error;
use crate::gadgets::{self, GadgetKind};
use crate::generate::{self, Family};
use crate::graph::{Graph, VertexSet};
use crate::report::SolveReport;
use crate::secure::{self, DefenseCertificate, DEFAULT_SECURE_BUDGET};

use experiment::{Budgets, IdentityOptions, RatioOptions};

pub const EXIT_OK: u8 = 0;
pub const EXIT_NEGATIVE: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "secdom", version, about = "2-secure domination toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a graph family member as an edge-list file.
    Gen {
        /// path, cycle, complete, star, comb, random-connected, random-split
        family: String,
        /// Family parameters, e.g. `8 0.3` for random-connected.
        params: Vec<String>,
        #[arg(long)]
        seed: Option<u64>,
        /// Output file; stdout when absent.
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Check whether a vertex set is a 2-secure dominating set.
    Verify {
        graph: PathBuf,
        /// Vertex ids of the candidate set.
        set: Vec<String>,
        /// Omit the certificate lines.
        #[arg(long)]
        quiet: bool,
    },
    /// Solve a domination problem exactly.
    Solve {
        graph: PathBuf,
        problem: ProblemArg,
        /// Vertex limit for exhaustive search.
        #[arg(long)]
        budget: Option<usize>,
        /// Print the defense certificate (2sds only).
        #[arg(long)]
        certificate: bool,
    },
    /// Run an approximation algorithm.
    Approx {
        graph: PathBuf,
        algorithm: AlgorithmArg,
        /// Size threshold for the exact branch of dom-set-approx.
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Build a hardness gadget from a graph.
    Gadget {
        kind: GadgetArg,
        graph: PathBuf,
        out: PathBuf,
        /// Role sidecar path; defaults to `<out>.roles`.
        #[arg(long)]
        roles: Option<PathBuf>,
    },
    /// Reproduce the structural identities or the ratio table.
    Experiment {
        #[command(subcommand)]
        suite: Suite,
    },
}

#[derive(Debug, Subcommand)]
pub enum Suite {
    /// Check every identity on all small connected graphs.
    Identities {
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = DEFAULT_DOMINATION_BUDGET)]
        dom_budget: usize,
        #[arg(long, default_value_t = DEFAULT_SECURE_BUDGET)]
        sds_budget: usize,
        #[arg(long, hide = true)]
        corrupt_gadget: bool,
    },
    /// Approximation ratio of approx-2sds against the exact optimum, as CSV.
    Ratios {
        #[arg(long, default_value = "random-connected")]
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.3)]
        p: f64,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_DOMINATION_BUDGET)]
        dom_budget: usize,
        #[arg(long, default_value_t = DEFAULT_SECURE_BUDGET)]
        sds_budget: usize,
        /// CSV output file; stdout when absent.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ProblemArg {
    Dom,
    #[value(name = "2dom")]
    TwoDom,
    #[value(name = "2sds")]
    TwoSds,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AlgorithmArg {
    GreedyDom,
    #[value(name = "greedy-2dom")]
    Greedy2Dom,
    #[value(name = "approx-2sds")]
    Approx2Sds,
    DomSetApprox,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GadgetArg {
    Inapprox,
    Apx,
    Gs,
}

impl From<GadgetArg> for GadgetKind {
    fn from(arg: GadgetArg) -> Self {
        match arg {
            GadgetArg::Inapprox => GadgetKind::Inapprox,
            GadgetArg::Apx => GadgetKind::Apx,
            GadgetArg::Gs => GadgetKind::Gs,
        }
    }
}

/// Exit code for a library error.
pub fn exit_code(err: &Error) -> u8 {
    match err {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        Error::PatchInsufficient { .. } => EXIT_NEGATIVE,
        _ => EXIT_INPUT,
    }
}

/// Runs one command, writing results to `out` and diagnostics to `err`.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

type CmdResult = Result<u8, Error>;

fn dispatch(command: Command, out: &mut dyn Write) -> CmdResult {
    match command {
        Command::Gen {
            family,
            params,
            seed,
            out: path,
        } => cmd_gen(&family, &params, seed, path.as_deref(), out),
        Command::Verify { graph, set, quiet } => cmd_verify(&graph, &set, quiet, out),
        Command::Solve {
            graph,
            problem,
            budget,
            certificate,
        } => cmd_solve(&graph, problem, budget, certificate, out),
        Command::Approx { graph, algorithm, k } => cmd_approx(&graph, algorithm, k, out),
        Command::Gadget {
            kind,
            graph,
            out: path,
            roles,
        } => cmd_gadget(kind.into(), &graph, &path, roles.as_deref(), out),
        Command::Experiment { suite } => cmd_experiment(suite, out),
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Error> {
    out.write_all(text.as_bytes()).map_err(|source| Error::Io {
        path: "<stdout>".into(),
        source,
    })
}

fn cmd_gen(
    family: &str,
    params: &[String],
    seed: Option<u64>,
    path: Option<&Path>,
    out: &mut dyn Write,
) -> CmdResult {
    let family = Family::parse(family, params)?;
    let g = generate::generate(&family, seed)?;
    let text = graphfile::format_graph(&g);
    match path {
        Some(path) => graphfile::write_file(path, &text)?,
        None => emit(out, &text)?,
    }
    Ok(EXIT_OK)
}

fn parse_set(g: &Graph, raw: &[String]) -> Result<VertexSet, Error> {
    let ids = raw
        .iter()
        .flat_map(|s| s.split(',').filter(|t| !t.is_empty()))
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::InvalidParameter(format!("'{t}' is not a vertex id")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    VertexSet::for_graph(g, ids)
}

fn certificate_lines(cert: &DefenseCertificate) -> String {
    cert.entries()
        .iter()
        .map(|e| {
            format!(
                "defend.{},{}={},{}\n",
                e.attack.0, e.attack.1, e.defenders.0, e.defenders.1
            )
        })
        .collect()
}

fn cmd_verify(path: &Path, raw: &[String], quiet: bool, out: &mut dyn Write) -> CmdResult {
    let g = graphfile::read_graph(path)?;
    let set = parse_set(&g, raw)?;
    match secure::verify_2sds(&g, &set) {
        Ok(cert) => {
            let mut text = format!("verified=yes\nset={set}\nsize={}\n", set.len());
            if !quiet {
                text.push_str(&certificate_lines(&cert));
            }
            emit(out, &text)?;
            Ok(EXIT_OK)
        }
        Err(rejection) => {
            let detail = match &rejection {
                secure::Rejection::Undefended { u1, u2 } => format!("failing_pair={u1},{u2}\n"),
                secure::Rejection::Undominated(v) => format!("undominated={v}\n"),
                secure::Rejection::TooSmall { size } => format!("size={size}\n"),
                secure::Rejection::InvalidVertex(v) => format!("invalid_vertex={v}\n"),
            };
            emit(out, &format!("verified=no\nset={set}\n{detail}reason={rejection}\n"))?;
            Ok(EXIT_NEGATIVE)
        }
    }
}

pub fn format_report(report: &SolveReport, with_certificate: bool) -> String {
    let mut text = format!(
        "problem={}\n{}={}\nset={}\nsubsets_examined={}\n",
        report.problem,
        report.problem.value_key(),
        report.value,
        report.witness,
        report.subsets_examined
    );
    if with_certificate {
        if let Some(cert) = &report.certificate {
            text.push_str(&certificate_lines(cert));
        }
    }
    text
}

fn cmd_solve(
    path: &Path,
    problem: ProblemArg,
    budget: Option<usize>,
    certificate: bool,
    out: &mut dyn Write,
) -> CmdResult {
    let g = graphfile::read_graph(path)?;
    let report = match problem {
        ProblemArg::Dom => domination::exact_minimum(
            &g,
            DominationKind::Dominating,
            budget.unwrap_or(DEFAULT_DOMINATION_BUDGET),
        )?,
        ProblemArg::TwoDom => domination::exact_minimum(
            &g,
            DominationKind::TwoDominating,
            budget.unwrap_or(DEFAULT_DOMINATION_BUDGET),
        )?,
        ProblemArg::TwoSds => secure::exact_gamma_2s(&g, budget.unwrap_or(DEFAULT_SECURE_BUDGET))?,
    };
    emit(out, &format_report(&report, certificate))?;
    Ok(EXIT_OK)
}

fn cmd_approx(path: &Path, algorithm: AlgorithmArg, k: usize, out: &mut dyn Write) -> CmdResult {
    let g = graphfile::read_graph(path)?;
    let mut text = String::new();
    let set = match algorithm {
        AlgorithmArg::GreedyDom => domination::greedy_dominating(&g),
        AlgorithmArg::Greedy2Dom => domination::greedy_2dominating(&g),
        AlgorithmArg::Approx2Sds => secure::approx_2sds(&g)?,
        AlgorithmArg::DomSetApprox => {
            let result = secure::dom_set_approx(&g, k)?;
            let branch = match result.branch {
                secure::DomSetBranch::Exact => "exact",
                secure::DomSetBranch::Gadget => "gadget",
            };
            text.push_str(&format!("branch={branch}\n"));
            result.set
        }
    };
    let name = algorithm
        .to_possible_value()
        .map(|v| v.get_name().to_string())
        .unwrap_or_default();
    text = format!("algorithm={name}\nsize={}\nset={set}\n{text}", set.len());
    if algorithm == AlgorithmArg::Approx2Sds {
        let verified = if secure::is_2sds(&g, &set) { "yes" } else { "no" };
        text.push_str(&format!("verified: {verified}\n"));
    }
    emit(out, &text)?;
    Ok(EXIT_OK)
}

fn cmd_gadget(
    kind: GadgetKind,
    path: &Path,
    out_path: &Path,
    roles_path: Option<&Path>,
    out: &mut dyn Write,
) -> CmdResult {
    let g = graphfile::read_graph(path)?;
    let gadget = match kind {
        GadgetKind::Inapprox => gadgets::inapprox_gadget(&g),
        GadgetKind::Apx => gadgets::apx_gadget(&g),
        GadgetKind::Gs => gadgets::gs_graph(&g)?,
    };
    graphfile::write_file(out_path, &graphfile::format_graph(&gadget.graph))?;
    let roles_path = roles_path
        .map(Path::to_path_buf)
        .unwrap_or_else(|| PathBuf::from(format!("{}.roles", out_path.display())));
    graphfile::write_file(&roles_path, &graphfile::format_roles(&gadget))?;
    emit(
        out,
        &format!(
            "kind={kind}\nn={}\nm={}\ngraph={}\nroles={}\n",
            gadget.graph.n(),
            gadget.graph.m(),
            out_path.display(),
            roles_path.display()
        ),
    )?;
    Ok(EXIT_OK)
}

fn cmd_experiment(suite: Suite, out: &mut dyn Write) -> CmdResult {
    match suite {
        Suite::Identities {
            max_n,
            dom_budget,
            sds_budget,
            corrupt_gadget,
        } => {
            let opts = IdentityOptions {
                max_n,
                budgets: Budgets {
                    domination: dom_budget,
                    secure: sds_budget,
                },
                corrupt_gadget,
            };
            let summary = experiment::run_identities(&opts, out)?;
            Ok(if summary.fail == 0 { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Suite::Ratios {
            family,
            n,
            p,
            trials,
            seed,
            dom_budget,
            sds_budget,
            csv,
        } => {
            let rows = experiment::run_ratios(&RatioOptions {
                family,
                n,
                p,
                trials,
                seed,
                budgets: Budgets {
                    domination: dom_budget,
                    secure: sds_budget,
                },
            })?;
            match csv {
                Some(path) => {
                    let mut buf = Vec::new();
                    experiment::write_csv(&rows, &mut buf)?;
                    graphfile::write_file(&path, &String::from_utf8_lossy(&buf))?;
                }
                None => experiment::write_csv(&rows, out)?,
            }
            Ok(if rows.iter().all(|r| r.within_bound()) {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            })
        }
    }
}
