//! Command-line front end for the twogroups library.
//!
//! Exit codes: 0 success (or decision answered true), 1 decision answered
//! false, 2 invalid input, 3 size bound exceeded. Reports are plain text,
//! deterministic for a fixed `--seed`.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use twogroups::codec;
use twogroups::coherence::{self, CoherenceError, CoherenceOptions};
use twogroups::cohomology::{self, CohomologyError};
use twogroups::fingroup::GroupError;
use twogroups::grcat::{Equivalence, GrError};
use twogroups::nerve::{self, NerveError};
use twogroups::pic::{self, PicError};
use twogroups::xmod::XModError;

#[derive(Parser)]
#[command(name = "twogroups", version, about = "Compute with finite 2-groups")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Seed for randomized sweeps; equal seeds give byte-identical reports.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Order bound for isomorphism searches.
    #[arg(long, global = true, default_value_t = 24)]
    max_order: usize,
    /// Write the report to this path instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Group cohomology over a (G, A, rho) ambient.
    #[command(subcommand)]
    Cohomology(CohomologyCmd),
    /// Skeletal Gr-categories.
    #[command(subcommand)]
    Grcat(GrcatCmd),
    /// Crossed modules.
    #[command(subcommand)]
    Xmod(XmodCmd),
    /// Pic-categories presented by 2-term chain complexes.
    #[command(subcommand)]
    Pic(PicCmd),
    /// Simplicial nerves and homology.
    #[command(subcommand)]
    Nerve(NerveCmd),
    /// Mac Lane coherence checks by path evaluation.
    #[command(subcommand)]
    Coherence(CoherenceCmd),
}

#[derive(Subcommand)]
enum CohomologyCmd {
    /// Compute H^n with one representative cocycle per generator.
    Compute {
        /// Cohomological degree (at most 3).
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Group table file for G.
        group: PathBuf,
        /// Group table file for the abelian coefficient group A.
        module: PathBuf,
        /// Action file for rho.
        action: PathBuf,
    },
}

#[derive(Subcommand)]
enum GrcatCmd {
    /// Decide equivalence of two skeletal Gr-categories.
    Equiv {
        left: PathBuf,
        right: PathBuf,
    },
}

#[derive(Subcommand)]
enum XmodCmd {
    /// Classifying data: pi0, pi1, induced action, associator, Sinh class.
    Skeletalize { xmod: PathBuf },
}

#[derive(Subcommand)]
enum PicCmd {
    /// The classifying pair (pi0, pi1) of the model category.
    Invariants { chain: PathBuf },
}

#[derive(Subcommand)]
enum NerveCmd {
    /// Build the nerve of a group file, or of the 2-group presented by an
    /// xmod file (detected by its `---` separators).
    Build {
        /// Truncation depth.
        #[arg(long, default_value_t = 3)]
        dim: usize,
        /// Also report homology up to dim - 1.
        #[arg(long)]
        homology: bool,
        input: PathBuf,
    },
}

#[derive(Subcommand)]
enum CoherenceCmd {
    /// Path-independence sweep over all parenthesization pairs, or over one
    /// pair of expressions if two are given.
    Check {
        /// Word length for the exhaustive sweep.
        #[arg(long, default_value_t = 4)]
        n: usize,
        grcat: PathBuf,
        /// Optional pair of parenthesized expressions, e.g. '(a*b)*c'.
        #[arg(num_args = 0..=2)]
        exprs: Vec<String>,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Decode {
        path: String,
        #[source]
        source: codec::CodecError,
    },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
    #[error(transparent)]
    Gr(#[from] GrError),
    #[error(transparent)]
    XMod(#[from] XModError),
    #[error(transparent)]
    Pic(#[from] PicError),
    #[error(transparent)]
    Nerve(#[from] NerveError),
    #[error(transparent)]
    Coherence(#[from] CoherenceError),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// 3 for size/order/degree bounds, 2 for everything else.
    fn exit_code(&self) -> u8 {
        if self.is_bound() {
            3
        } else {
            2
        }
    }

    fn is_bound(&self) -> bool {
        match self {
            CliError::Group(e) => group_bound(e),
            CliError::Cohomology(e) => cohomology_bound(e),
            CliError::Gr(e) => gr_bound(e),
            CliError::XMod(e) => xmod_bound(e),
            CliError::Pic(e) => pic_bound(e),
            CliError::Nerve(e) => {
                matches!(e, NerveError::SizeBound { .. } | NerveError::DepthUnsupported { .. })
            }
            CliError::Coherence(e) => matches!(e, CoherenceError::SizeBound { .. }),
            _ => false,
        }
    }
}

fn group_bound(e: &GroupError) -> bool {
    matches!(e, GroupError::OrderBound { .. })
}

fn cohomology_bound(e: &CohomologyError) -> bool {
    match e {
        CohomologyError::SizeBound { .. } | CohomologyError::DegreeUnsupported { .. } => true,
        CohomologyError::Group(g) => group_bound(g),
        _ => false,
    }
}

fn gr_bound(e: &GrError) -> bool {
    match e {
        GrError::Group(g) => group_bound(g),
        GrError::Cohomology(c) => cohomology_bound(c),
        _ => false,
    }
}

fn xmod_bound(e: &XModError) -> bool {
    match e {
        XModError::Group(g) => group_bound(g),
        XModError::Gr(g) => gr_bound(g),
        _ => false,
    }
}

fn pic_bound(e: &PicError) -> bool {
    match e {
        PicError::Group(g) => group_bound(g),
        PicError::XMod(x) => xmod_bound(x),
        _ => false,
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn decode<T>(
    path: &Path,
    parse: impl FnOnce(&str) -> Result<T, codec::CodecError>,
) -> Result<T, CliError> {
    let text = read_file(path)?;
    parse(&text).map_err(|source| CliError::Decode { path: path.display().to_string(), source })
}

/// Report text plus the decision part of the exit code (0 or 1).
struct Outcome {
    report: String,
    decision_false: bool,
}

impl Outcome {
    fn ok(report: String) -> Self {
        Outcome { report, decision_false: false }
    }
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Cohomology(CohomologyCmd::Compute { n, group, module, action }) => {
            let g = decode(group, codec::decode_group)?;
            let a = decode(module, codec::decode_abelian)?;
            let act = decode(action, |text| codec::decode_action(text, &g, &a))?;
            let report = cohomology::cohomology_group(&act, *n)?;
            let mut out = format!("H^{}(G, A) = {}\n", n, report.describe());
            for (i, (m, c)) in report
                .invariant_factors
                .iter()
                .zip(&report.generators)
                .enumerate()
            {
                out.push_str(&format!("generator {} (order {m}):\n", i + 1));
                out.push_str(&codec::encode_cochain(c));
            }
            Ok(Outcome::ok(out))
        }
        Command::Grcat(GrcatCmd::Equiv { left, right }) => {
            let a = decode(left, codec::decode_grcat)?;
            let b = decode(right, codec::decode_grcat)?;
            match a.equivalent_bounded(&b, cli.common.max_order)? {
                Equivalence::Equivalent(w) => {
                    let mut out = String::from("EQUIVALENT\n");
                    out.push_str(&format!("phi: {}\n", join(w.object_iso.images())));
                    out.push_str(&format!("psi: {}\n", join(w.module_iso.images())));
                    out.push_str("f:\n");
                    out.push_str(&codec::encode_cochain(&w.correction));
                    Ok(Outcome::ok(out))
                }
                Equivalence::Inequivalent(reason) => Ok(Outcome {
                    report: format!("NOT EQUIVALENT\nreason: {}\n", reason.describe()),
                    decision_false: true,
                }),
            }
        }
        Command::Xmod(XmodCmd::Skeletalize { xmod }) => {
            let xm = decode(xmod, codec::decode_xmod)?;
            let cat = xm.skeletalize()?;
            let class = cat.sinh_invariant()?;
            let mut out = String::new();
            out.push_str(&format!("pi0 = {}\n", describe_group(cat.group())));
            out.push_str(&format!("pi1 = {}\n", cat.module().describe()));
            out.push_str(&format!(
                "action: {}\n",
                if cat.action().is_trivial() { "trivial" } else { "nontrivial" }
            ));
            out.push_str("associator:\n");
            out.push_str(&codec::encode_cochain(cat.associator()));
            out.push_str(&format!(
                "sinh class: {}\n",
                if class.is_zero() { "zero" } else { "nonzero" }
            ));
            Ok(Outcome::ok(out))
        }
        Command::Pic(PicCmd::Invariants { chain }) => {
            let c = decode(chain, codec::decode_chain)?;
            let model = pic::pic_from_chain(c);
            let (pi0, pi1) = model.invariants()?;
            Ok(Outcome::ok(format!("pi0 = {}\npi1 = {}\n", pi0.describe(), pi1.describe())))
        }
        Command::Nerve(NerveCmd::Build { dim, homology, input }) => {
            let text = read_file(input)?;
            let is_xmod = text.lines().any(|l| l == "---");
            let complex = if is_xmod {
                let xm = codec::decode_xmod(&text).map_err(|source| CliError::Decode {
                    path: input.display().to_string(),
                    source,
                })?;
                nerve::nerve_two_group(&xm.to_strict_two_group(), *dim)?
            } else {
                let g = codec::decode_group(&text).map_err(|source| CliError::Decode {
                    path: input.display().to_string(),
                    source,
                })?;
                nerve::nerve_group(&g, *dim)?
            };
            let check = nerve::check_simplicial(&complex);
            if let Some((d, s, i, j)) = check.witness {
                return Ok(Outcome {
                    report: format!(
                        "simplicial identities FAIL at dim {d} simplex {s} (d{i}, d{j})\n"
                    ),
                    decision_false: true,
                });
            }
            let mut out = nerve::export(&complex);
            if *homology {
                let report = nerve::homology(&complex, dim.saturating_sub(1))?;
                for group in &report.groups {
                    out.push_str(&format!("H_{} = {}\n", group.dim, group.describe()));
                }
            }
            Ok(Outcome::ok(out))
        }
        Command::Coherence(CoherenceCmd::Check { n, grcat, exprs }) => {
            let cat = decode(grcat, codec::decode_grcat)?;
            let opts = CoherenceOptions { seed: cli.common.seed, ..Default::default() };
            match exprs.as_slice() {
                [] => {
                    let report = coherence::coherence_check(&cat, *n, opts)?;
                    let mut out = String::new();
                    for outcome in &report.outcomes {
                        out.push_str(&outcome_line(outcome));
                    }
                    out.push_str(&format!(
                        "{}: {} pairs, {} assignments, {} evaluations\n",
                        if report.coherent() { "coherent" } else { "incoherent" },
                        report.outcomes.len(),
                        report.assignments,
                        report.evaluations,
                    ));
                    if let Some(w) = &report.pentagon_witness {
                        out.push_str(&format!("pentagon witness: ({})\n", join(w)));
                    }
                    Ok(Outcome { report: out, decision_false: !report.coherent() })
                }
                [left, right] => {
                    let lt = coherence::parse(left)?;
                    let rt = coherence::parse(right)?;
                    let outcome = coherence::compare_words(&cat, &lt, &rt, opts)?;
                    let ok = outcome.failure.is_none();
                    Ok(Outcome {
                        report: outcome_line(&outcome),
                        decision_false: !ok,
                    })
                }
                _ => Err(CliError::Usage(
                    "coherence check takes zero or two expressions".into(),
                )),
            }
        }
    }
}

fn outcome_line(outcome: &coherence::PairOutcome) -> String {
    match &outcome.failure {
        None => format!("PASS {} -> {}\n", outcome.left, outcome.right),
        Some(d) => format!(
            "FAIL {} -> {} assignment=({}) expected={} got={}\n",
            outcome.left,
            outcome.right,
            join(&d.assignment),
            d.expected,
            d.got
        ),
    }
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn describe_group(g: &twogroups::fingroup::FiniteGroup) -> String {
    match twogroups::fingroup::AbelianGroup::new(g.clone()) {
        Ok(a) => a.describe(),
        Err(_) => format!("nonabelian group of order {}", g.order()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            let write_result = match &cli.common.out {
                Some(path) => std::fs::write(path, &outcome.report),
                None => {
                    print!("{}", outcome.report);
                    Ok(())
                }
            };
            if let Err(e) = write_result {
                eprintln!("error: failed to write report: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(u8::from(outcome.decision_false))
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
