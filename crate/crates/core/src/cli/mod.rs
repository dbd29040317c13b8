//! Command-line front end: file formats, subcommands, and key/value reports.

mod algebra_file;
mod report;

use std::path::{Path as FsPath, PathBuf};

use clap::{Parser, Subcommand};

pub use algebra_file::{parse_algebra, AlgebraFile};
pub use report::{join_dims, RunReport};

use crate::baroracle::{bar_derived_series, bar_hh_dims};
use crate::brauer::{build_quiver_and_cycles, invariant_report, parse_brauer, BgaReport, BrauerGraph, CheckStatus};
use crate::corpus::{random_corpus, CorpusOptions};
use crate::error::{Error, Result};
use crate::exactla::FieldSpec;
use crate::groebner::{complete, uf_chains, DEFAULT_MAX_BASIS, DEFAULT_MAX_TIP_LENGTH};
use crate::ppcomplex::{loop_char_report, ParallelPaths};
use crate::quotient::QuotientAlgebra;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "parapath", version, about = "HH^1 of quiver algebras via parallel paths")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Abort completion when a new Gröbner basis element has a longer tip.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_TIP_LENGTH)]
    pub max_tip_len: usize,
    /// Abort when the monomial basis grows beyond this size.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_BASIS)]
    pub max_basis: usize,
    /// Do not fail when a characteristic hypothesis is unmet.
    #[arg(long, global = true)]
    pub allow_unmet_hypotheses: bool,
    /// Print `key=value` lines instead of aligned columns.
    #[arg(long, global = true)]
    pub machine: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Reduced Gröbner basis and tip set.
    Gb { file: PathBuf },
    /// Monomial basis and dimension.
    Basis { file: PathBuf },
    /// HH^0, HH^1, Lie structure, graded pieces, loop characteristics.
    Hh { file: PathBuf },
    /// Sizes of the chain sets W^(-1), ..., W^(n).
    Chains {
        file: PathBuf,
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
    /// Bar complex dimensions compared with the parallel-paths ones.
    Oracle { file: PathBuf },
    /// Algebra file of a Brauer graph algebra.
    Bga {
        file: PathBuf,
        /// Emit the associated graded algebra instead.
        #[arg(long)]
        gr: bool,
    },
    /// Invariant report of a Brauer graph, or of a random corpus.
    Report {
        /// Brauer graph file; omit when using --corpus
        file: Option<PathBuf>,
        /// Report on this many random graphs instead of a file
        #[arg(long)]
        corpus: Option<usize>,
        /// Seed of the random corpus
        #[arg(long, default_value_t = CorpusOptions::default().seed)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug)]
pub struct Caps {
    pub max_tip_length: usize,
    pub max_basis: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_tip_length: DEFAULT_MAX_TIP_LENGTH,
            max_basis: DEFAULT_MAX_BASIS,
        }
    }
}

/// What a command prints and the exit status it asks for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub exit_code: i32,
}

pub fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Incomplete { .. } | Error::InfiniteDimensional { .. } => EXIT_CAP,
        _ => EXIT_INPUT,
    }
}

fn read(path: &FsPath) -> Result<String> {
    Ok(std::fs::read_to_string(path)?)
}

pub fn algebra(file: &AlgebraFile, caps: Caps) -> Result<QuotientAlgebra> {
    let gb = complete(file.quiver.clone(), file.field, &file.relations, caps.max_tip_length)?;
    QuotientAlgebra::build(gb, caps.max_basis)
}

pub fn gb_report(file: &AlgebraFile, caps: Caps) -> Result<RunReport> {
    let gb = complete(file.quiver.clone(), file.field, &file.relations, caps.max_tip_length)?;
    let q = gb.quiver().clone();
    let mut r = RunReport::new();
    r.push("field", file.field);
    r.push_list("gb", gb.format());
    r.push_list("tips", gb.tips().iter().map(|p| q.format_path(p)));
    r.push("added_by_overlaps", gb.stats().added_by_overlaps);
    Ok(r)
}

pub fn basis_report(file: &AlgebraFile, caps: Caps) -> Result<RunReport> {
    let a = algebra(file, caps)?;
    let mut r = RunReport::new();
    r.push("dim", a.dim());
    r.push_list("basis", a.basis().iter().map(|p| a.quiver().format_path(p)));
    Ok(r)
}

pub fn hh_report(a: &QuotientAlgebra) -> RunReport {
    let q = a.quiver();
    let pp = ParallelPaths::new(a);
    let lie = pp.lie_presentation();
    let graded = pp.graded_report();
    let mut r = RunReport::new();
    r.push("field", a.field());
    r.push("dim", a.dim());
    r.push("hh0", pp.hh0_dim());
    r.push("hh1", pp.hh1_dim());
    r.push_list("hh1.rep", &lie.basis_labels);
    r.push_list("bracket", lie.format_table());
    r.push("derived", join_dims(&lie.derived_dims));
    r.push("solvable", lie.solvable);
    r.push("homogeneous", graded.homogeneous);
    r.push("l_minus1", graded.dim_l_minus1());
    r.push("l00", graded.dim_l00);
    r.push(
        "graded",
        graded.graded_dims.as_deref().map_or_else(|| "n/a".to_string(), join_dims),
    );
    let loops = loop_char_report(a);
    r.push_list(
        "loop",
        loops.iter().map(|l| {
            format!(
                "{} power {} tip {} divides {}",
                q.arrow(l.arrow).name,
                l.power,
                l.is_tip,
                l.divides
            )
        }),
    );
    r.push(
        "loop_char_hypothesis",
        if loops.iter().any(|l| l.divides) { "fails" } else { "holds" },
    );
    r
}

pub fn chains_report(file: &AlgebraFile, n: usize, caps: Caps) -> Result<RunReport> {
    let gb = complete(file.quiver.clone(), file.field, &file.relations, caps.max_tip_length)?;
    let mut r = RunReport::new();
    for (i, w) in uf_chains(&gb, n).iter().enumerate() {
        r.push(format!("w{}", i as isize - 1), w.len());
    }
    Ok(r)
}

/// Bar-complex numbers next to the parallel-paths ones; the flag is set when
/// they agree.
pub fn oracle_report(a: &QuotientAlgebra) -> (RunReport, bool) {
    let pp = ParallelPaths::new(a);
    let lie = pp.lie_presentation();
    let (bar0, bar1) = bar_hh_dims(a);
    let bar_series = bar_derived_series(a);
    let agree = bar0 == pp.hh0_dim() && bar1 == pp.hh1_dim() && bar_series == lie.derived_dims;
    let mut r = RunReport::new();
    r.push("hh0", pp.hh0_dim());
    r.push("hh1", pp.hh1_dim());
    r.push("derived", join_dims(&lie.derived_dims));
    r.push("bar.hh0", bar0);
    r.push("bar.hh1", bar1);
    r.push("bar.derived", join_dims(&bar_series));
    r.push("verdict", if agree { "AGREE" } else { "DISAGREE" });
    (r, agree)
}

/// The relations of the Brauer graph algebra (or of its associated graded
/// algebra) as an algebra file.
pub fn bga_file(g: &BrauerGraph, field: FieldSpec, graded: bool) -> AlgebraFile {
    let bq = build_quiver_and_cycles(g);
    let rels = if graded {
        bq.gr_relations(g, field)
    } else {
        bq.relations(g, field)
    };
    AlgebraFile::new(field, bq.quiver.clone(), rels.all())
}

pub fn bga_report_entries(b: &BgaReport) -> RunReport {
    let mut r = RunReport::new();
    r.push("field", b.field);
    r.push("edges", b.edges);
    r.push("vertices", b.vertices);
    r.push("mult_sum", b.mult_sum);
    r.push("loops", b.has_loops);
    r.push("gamma", b.gamma);
    r.push("s2", b.s2);
    r.push("hypothesis", if b.hypothesis_holds { "holds" } else { "fails" });
    r.push("dim", b.dim_a);
    r.push("dim_gr", b.dim_gr);
    r.push("hh0", b.hh0_a);
    r.push("hh1", b.hh1_a);
    r.push("hh1_gr", b.hh1_gr);
    r.push("l00", b.l00_a);
    r.push("l00_gr", b.l00_gr);
    r.push("l_minus1", b.l_minus1_a);
    r.push("l_minus1_gr", b.l_minus1_gr);
    r.push("derived", join_dims(&b.derived_a));
    r.push("derived_gr", join_dims(&b.derived_gr));
    r.push("solvable", b.solvable_a);
    r.push("solvable_gr", b.solvable_gr);
    r.push("derived_exceeds_graded", b.derived_exceeds_graded());
    for c in &b.checks {
        r.push(
            format!("check.{}", c.name),
            format!("{} expected {} actual {}", c.status, c.expected, c.actual),
        );
    }
    r
}

fn report_status(reports: &[BgaReport], allow_unmet: bool) -> i32 {
    let failed = reports.iter().any(|b| !b.passed());
    let unmet = reports.iter().any(|b| b.hypothesis_failures() > 0);
    if failed || (unmet && !allow_unmet) {
        EXIT_CHECK_FAILED
    } else {
        EXIT_OK
    }
}

fn render(r: &RunReport, machine: bool) -> String {
    if machine {
        r.render_machine()
    } else {
        r.render_text()
    }
}

/// Runs one parsed command line.
pub fn run(cli: &Cli) -> Result<Outcome> {
    let caps = Caps {
        max_tip_length: cli.max_tip_len,
        max_basis: cli.max_basis,
    };
    let ok = |r: RunReport| Outcome {
        output: render(&r, cli.machine),
        exit_code: EXIT_OK,
    };
    match &cli.command {
        Command::Gb { file } => Ok(ok(gb_report(&parse_algebra(&read(file)?)?, caps)?)),
        Command::Basis { file } => Ok(ok(basis_report(&parse_algebra(&read(file)?)?, caps)?)),
        Command::Hh { file } => {
            let a = algebra(&parse_algebra(&read(file)?)?, caps)?;
            Ok(ok(hh_report(&a)))
        }
        Command::Chains { file, n } => Ok(ok(chains_report(&parse_algebra(&read(file)?)?, *n, caps)?)),
        Command::Oracle { file } => {
            let a = algebra(&parse_algebra(&read(file)?)?, caps)?;
            let (r, agree) = oracle_report(&a);
            Ok(Outcome {
                output: render(&r, cli.machine),
                exit_code: if agree { EXIT_OK } else { EXIT_CHECK_FAILED },
            })
        }
        Command::Bga { file, gr } => {
            let (field, g) = parse_brauer(&read(file)?)?;
            Ok(Outcome {
                output: bga_file(&g, field, *gr).to_text(),
                exit_code: EXIT_OK,
            })
        }
        Command::Report { file, corpus, seed } => {
            let graphs: Vec<(FieldSpec, BrauerGraph)> = match (file, corpus) {
                (Some(f), None) => vec![parse_brauer(&read(f)?)?],
                (None, Some(n)) => random_corpus(&CorpusOptions {
                    count: *n,
                    seed: *seed,
                    ..CorpusOptions::default()
                })
                .into_iter()
                .map(|g| (FieldSpec::rationals(), g))
                .collect(),
                _ => {
                    return Err(Error::Usage("report takes either a graph file or --corpus N".into()));
                }
            };
            let mut reports = Vec::new();
            for (field, g) in &graphs {
                reports.push(invariant_report(g, *field, caps.max_tip_length, caps.max_basis)?);
            }
            let mut r = RunReport::new();
            if let [single] = reports.as_slice() {
                r = bga_report_entries(single);
            } else {
                for (i, (b, (field, g))) in reports.iter().zip(&graphs).enumerate() {
                    r.push(format!("graph.{i}"), g.to_text(*field).trim_end().replace('\n', "; "));
                    r.extend(&format!("graph.{i}"), bga_report_entries(b));
                }
            }
            let failures = reports
                .iter()
                .flat_map(|b| &b.checks)
                .filter(|c| c.status == CheckStatus::Fail)
                .count();
            r.push("failed_checks", failures);
            r.push(
                "hypothesis_failures",
                reports.iter().map(BgaReport::hypothesis_failures).sum::<usize>(),
            );
            Ok(Outcome {
                output: render(&r, cli.machine),
                exit_code: report_status(&reports, cli.allow_unmet_hypotheses),
            })
        }
    }
}
