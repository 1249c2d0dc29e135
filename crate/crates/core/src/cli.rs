//! Command-line front end.
//!
//! Exit status: 0 when every check passes, 1 when a check fails or is
//! inconclusive, 2 on usage, input, precondition or cap errors.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::calculus::{
    check_p4_inequality, check_property_s, check_property_s_op, check_theorem_p2b, is_dim_exact,
    superdim_from_vanishing, vanishing_set, VerdictStatus,
};
use crate::corpus;
use crate::error::{Error, Result};
use crate::partitions::{lr_coefficient, Partition};
use crate::report::{
    map_to_json, parse_map, parse_sequence, sequence_to_json, Entry, MapJson, Report, SequenceJson, Verdict,
};
use crate::schur::{graded_dimension, schur_apply_space, Caps};
use crate::suite::{self, SuiteKind};
use crate::supervec::{SuperDim, SuperSpace, ZeroSequence};

#[derive(Parser, Debug)]
#[command(name = "superschur", version, about = "Schur functors on super vector spaces, with exact checks")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Output::Table, global = true)]
    output: Output,

    /// Largest partition size any command may build.
    #[arg(long, default_value_t = 6, global = true)]
    max_partition_size: usize,

    /// Largest even+odd dimension of a space any command may build.
    #[arg(long, default_value_t = 3, global = true)]
    max_space_dim: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Table,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Super-dimension of S_λ(V) for dim V = m|n.
    Sdim {
        dim: SuperDim,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Partition,
    },
    /// Partitions λ with S_λ(V) = 0, up to size B.
    Vanish {
        dim: SuperDim,
        #[arg(long)]
        max: usize,
    },
    /// Reads m|n back off the vanishing pattern of V, using rectangles up to size B.
    Recover {
        dim: SuperDim,
        #[arg(long)]
        max: usize,
    },
    /// Littlewood-Richardson coefficient c^λ_{μν}.
    Lr {
        #[arg(allow_hyphen_values = true)]
        lambda: Partition,
        #[arg(allow_hyphen_values = true)]
        mu: Partition,
        #[arg(allow_hyphen_values = true)]
        nu: Partition,
    },
    /// Checks on maps and sequences read from JSON files.
    Check {
        #[command(subcommand)]
        check: CheckCommand,
    },
    /// Seeded verification suites.
    Suite {
        kind: SuiteKind,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Prints one element of a seeded corpus as JSON.
    Sample {
        kind: SampleKind,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0)]
        index: usize,
    },
}

#[derive(Subcommand, Debug)]
enum CheckCommand {
    /// f is mono iff every S_λ killing f kills its domain (--op: epi and codomain).
    PropertyS {
        #[arg(long)]
        map: PathBuf,
        #[arg(long)]
        max: usize,
        #[arg(long)]
        op: bool,
    },
    /// dim M ≥ dim M' + dim M'' for i mono, p epi, with equality iff exact.
    DimExact {
        #[arg(long)]
        seq: PathBuf,
    },
    /// dim M ≤ dim M' + dim M'' for M' → M → M'' → 0 exact.
    P4 {
        #[arg(long)]
        seq: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SampleKind {
    /// A map from the property S corpus.
    Map,
    /// A sequence with i mono and p epi.
    Sequence,
    /// An exact sequence M' → M → M'' → 0.
    RightExact,
}

/// What a run printed and how it exited.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, stderr: String::new(), code: 0 }
    }
}

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            return if e.use_stderr() {
                Outcome { stdout: String::new(), stderr: text, code }
            } else {
                Outcome::ok(text)
            };
        }
    };
    match execute(&cli) {
        Ok(outcome) => outcome,
        Err(e) => Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code: error_code(&e) },
    }
}

fn error_code(e: &Error) -> i32 {
    match e {
        Error::Internal(_) | Error::ContractViolation(_) => 1,
        _ => 2,
    }
}

impl Cli {
    fn caps(&self) -> Caps {
        Caps { max_degree: self.max_partition_size, max_space_dim: self.max_space_dim }
    }

    fn check_partition(&self, lambda: &Partition) -> Result<()> {
        if lambda.size() > self.max_partition_size {
            return Err(Error::PartitionTooLarge { size: lambda.size(), limit: self.max_partition_size });
        }
        Ok(())
    }

    fn check_bound(&self, bound: usize) -> Result<()> {
        if bound > self.max_partition_size {
            return Err(Error::PartitionTooLarge { size: bound, limit: self.max_partition_size });
        }
        Ok(())
    }

    fn check_space(&self, dim: SuperDim) -> Result<()> {
        if dim.total() > self.max_space_dim {
            return Err(Error::SpaceTooLarge { dim: dim.total(), limit: self.max_space_dim });
        }
        Ok(())
    }

    /// Prints `value` as JSON or `table` as text.
    fn emit(&self, value: serde_json::Value, table: String) -> Outcome {
        match self.output {
            Output::Json => Outcome::ok(pretty(&value)),
            Output::Table => Outcome::ok(table),
        }
    }

    fn emit_report(&self, report: &Report) -> Outcome {
        let stdout = match self.output {
            Output::Json => format!("{}\n", report.to_json()),
            Output::Table => report.to_table(),
        };
        Outcome { stdout, stderr: String::new(), code: if report.all_pass() { 0 } else { 1 } }
    }
}

fn pretty(value: &serde_json::Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(value).expect("values serialize"))
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn read_sequence(path: &Path) -> Result<ZeroSequence> {
    let (i, p) = parse_sequence(&read(path)?).map_err(|e| match e {
        Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
        other => other,
    })?;
    ZeroSequence::new(i, p)
}

fn execute(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Sdim { dim, lambda } => {
            cli.check_partition(lambda)?;
            cli.check_space(*dim)?;
            let d = graded_dimension(lambda, *dim);
            Ok(cli.emit(
                json!({ "lambda": lambda.to_string(), "dim": dim.to_string(), "sdim": d.to_string() }),
                format!("{d}\n"),
            ))
        }
        Command::Vanish { dim, max } => {
            cli.check_bound(*max)?;
            let set = vanishing_set(&SuperSpace::of_dim(*dim), *max, &cli.caps())?;
            let members: Vec<String> = set.members.iter().map(|l| l.to_string()).collect();
            let table = if members.is_empty() {
                "(none)\n".to_string()
            } else {
                members.iter().map(|m| format!("{m}\n")).collect()
            };
            Ok(cli.emit(json!({ "dim": dim.to_string(), "bound": max, "members": members }), table))
        }
        Command::Recover { dim, max } => {
            cli.check_bound(*max)?;
            let v = SuperSpace::of_dim(*dim);
            let caps = cli.caps();
            let recovered = superdim_from_vanishing(|l| Ok(schur_apply_space(l, &v, &caps)?.space.is_zero()), *max)?;
            let code = if recovered == *dim { 0 } else { 1 };
            let mut out = cli.emit(
                json!({ "dim": dim.to_string(), "bound": max, "recovered": recovered.to_string() }),
                format!("{recovered}\n"),
            );
            out.code = code;
            Ok(out)
        }
        Command::Lr { lambda, mu, nu } => {
            for p in [lambda, mu, nu] {
                cli.check_partition(p)?;
            }
            let c = lr_coefficient(lambda, mu, nu);
            Ok(cli.emit(
                json!({ "lambda": lambda.to_string(), "mu": mu.to_string(), "nu": nu.to_string(), "coefficient": c }),
                format!("{c}\n"),
            ))
        }
        Command::Check { check } => execute_check(cli, check),
        Command::Suite { kind, seed } => {
            let report = suite::run(*kind, *seed, cli.max_partition_size)?;
            Ok(cli.emit_report(&report))
        }
        Command::Sample { kind, seed, index } => {
            let text = match kind {
                SampleKind::Map => {
                    check_index(*index, suite::MAP_CORPUS)?;
                    map_to_json(&corpus::map_corpus(*seed, index + 1, suite::MAP_MAX)[*index])
                }
                SampleKind::Sequence => {
                    check_index(*index, suite::SEQUENCE_CORPUS)?;
                    let e = &corpus::zero_sequence_corpus(*seed, index + 1, suite::SEQUENCE_MAX)[*index];
                    sequence_to_json(&e.i, &e.p)
                }
                SampleKind::RightExact => {
                    check_index(*index, suite::SEQUENCE_CORPUS)?;
                    let e = &corpus::right_exact_corpus(*seed, index + 1, suite::SEQUENCE_MAX)[*index];
                    sequence_to_json(&e.i, &e.p)
                }
            };
            Ok(Outcome::ok(format!("{text}\n")))
        }
    }
}

fn check_index(index: usize, size: usize) -> Result<()> {
    if index >= size {
        return Err(Error::Precondition(format!("index {index} is outside the corpus of {size}")));
    }
    Ok(())
}

fn execute_check(cli: &Cli, check: &CheckCommand) -> Result<Outcome> {
    match check {
        CheckCommand::PropertyS { map, max, op } => {
            cli.check_bound(*max)?;
            let f = parse_map(&read(map)?).map_err(|e| match e {
                Error::Parse(m) => Error::Parse(format!("{}: {m}", map.display())),
                other => other,
            })?;
            let space = f.domain().dim().total().max(f.codomain().dim().total());
            if space > cli.max_space_dim {
                return Err(Error::SpaceTooLarge { dim: space, limit: cli.max_space_dim });
            }
            let verdict = if *op {
                check_property_s_op(&f, *max, &cli.caps())?
            } else {
                check_property_s(&f, *max, &cli.caps())?
            };
            let outcome = match verdict.status {
                VerdictStatus::Consistent => Verdict::Pass,
                VerdictStatus::Inconsistent => Verdict::Fail,
                VerdictStatus::Inconclusive => Verdict::Inconclusive,
            };
            let mut details = format!(
                "{} ({}), rank {}, bound {}, swept to {}",
                if *op { "epi" } else { "mono" },
                verdict.is_mono,
                verdict.coimage_dim,
                verdict.bound,
                verdict.swept_to
            );
            if verdict.retraction_verified {
                details.push_str(", one-sided inverse verified");
            }
            if let Some(d) = verdict.direct_check {
                details.push_str(&format!(", dense check {d}"));
            }
            match (verdict.status, verdict.required_bound) {
                (VerdictStatus::Inconclusive, Some(b)) => details.push_str(&format!(", needs bound {b}")),
                (VerdictStatus::Inconclusive, None) => {
                    details.push_str(&format!(", no vanishing partition up to {}", cli.max_partition_size))
                }
                _ => {}
            }
            let label = if *op { "property-s-op" } else { "property-s" };
            let inputs = serde_json::to_value(MapJson::from(&f)).expect("maps serialize");
            let entry = Entry::new(label, outcome, details)
                .with_inputs(inputs)
                .with_witness(verdict.witness.map(|w| w.to_string()));
            Ok(cli.emit_report(&Report { entries: vec![entry] }))
        }
        CheckCommand::DimExact { seq } => {
            let e = read_sequence(seq)?;
            let r = is_dim_exact(&e)?;
            let mut pass = r.rhs <= r.lhs && r.equal == r.exact;
            let mut details =
                format!("dim M = {}, dim M' + dim M'' = {}, dim-exact {}, exact {}", r.lhs, r.rhs, r.equal, r.exact);
            if r.equal {
                let iso = check_theorem_p2b(&e)?;
                pass &= iso;
                details.push_str(&format!(", coker i -> M'' mono-epi {iso}"));
            }
            let entry = Entry::new("dim-exact", Verdict::from_bool(pass), details).with_inputs(sequence_inputs(&e));
            Ok(cli.emit_report(&Report { entries: vec![entry] }))
        }
        CheckCommand::P4 { seq } => {
            let e = read_sequence(seq)?;
            let holds = check_p4_inequality(&e)?;
            let details = format!("{} <= {} + {}", e.middle().dim(), e.left().dim(), e.right().dim());
            let entry =
                Entry::new("p4-inequality", Verdict::from_bool(holds), details).with_inputs(sequence_inputs(&e));
            Ok(cli.emit_report(&Report { entries: vec![entry] }))
        }
    }
}

fn sequence_inputs(e: &ZeroSequence) -> serde_json::Value {
    serde_json::to_value(SequenceJson { i: (&e.i).into(), p: (&e.p).into() }).expect("sequences serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("superschur").chain(args.iter().copied()))
    }

    #[test]
    fn sdim_and_lr() {
        assert_eq!(run_args(&["sdim", "1|1", "--lambda", "2,2"]).stdout, "0|0\n");
        assert_eq!(run_args(&["sdim", "2|1", "--lambda", "1"]).stdout, "2|1\n");
        assert_eq!(run_args(&["lr", "2,1", "2", "1"]).stdout, "1\n");
        assert_eq!(run_args(&["lr", "2,1", "2,1", "-"]).stdout, "1\n");
    }

    #[test]
    fn vanish_and_recover() {
        assert_eq!(run_args(&["vanish", "1|0", "--max", "3"]).stdout, "1,1\n2,1\n1,1,1\n");
        assert_eq!(run_args(&["vanish", "2|1", "--max", "5"]).stdout, "(none)\n");
        assert_eq!(run_args(&["recover", "1|1", "--max", "4"]).stdout, "1|1\n");
        let too_small = run_args(&["recover", "2|1", "--max", "4"]);
        assert_eq!(too_small.code, 2);
        assert!(too_small.stderr.contains("4"), "{}", too_small.stderr);
    }

    #[test]
    fn json_output() {
        let out = run_args(&["--output", "json", "sdim", "1|1", "--lambda", "2"]);
        let value: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(value["sdim"], "1|1");
    }

    #[test]
    fn usage_and_cap_errors_exit_two() {
        assert_eq!(run_args(&["sdim", "1", "--lambda", "2"]).code, 2);
        assert_eq!(run_args(&["sdim", "1|1", "--lambda", "2,3"]).code, 2);
        assert_eq!(run_args(&["bogus"]).code, 2);
        let cap = run_args(&["sdim", "1|1", "--lambda", "7"]);
        assert_eq!(cap.code, 2);
        assert!(cap.stderr.contains("limit of 6"), "{}", cap.stderr);
        let space = run_args(&["vanish", "2|2", "--max", "2"]);
        assert_eq!(space.code, 2);
        assert!(space.stderr.contains("limit of 3"), "{}", space.stderr);
        assert_eq!(run_args(&["--help"]).code, 0);
    }
}
