//! The `riml` command line.
//!
//! [`run`] takes the argument vector and standard input and returns the
//! exit code with everything that would be written to stdout and stderr,
//! so the whole front end is testable without spawning processes.
//!
//! Exit codes: 0 for success or an affirmative verdict, 1 for a negative
//! verdict (false, countermodel, rejection, failure), 2 for usage or input
//! errors.
//!
//! Inputs that take a frame, model, map or proof accept inline JSON (text
//! starting with `{`), `-` for stdin, or a file path.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::budget::Budget;
use crate::decide::{valid_over_class, ClassQuery, Countermodel, SearchOptions, ValidityReport};
use crate::formula::{circ_translate, parse_box, parse_ri, print_ri, PrintStyle};
use crate::frames::{
    check_morphism, mirror_reductions, reflexive_closure, robust_under_reflexivity, FrameClass, Robustness,
    WorldMap,
};
use crate::kripke::{eval_box, eval_ri, Frame, Model};
use crate::meta::{run_suite, MetaOptions, Suite};
use crate::proof::{check_proof, ProofFile};

#[derive(Debug, Parser)]
#[command(name = "riml", version, about = "Reflexive-insensitive modal logic workbench")]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    /// Cap on any single enumeration (default: $RIML_BUDGET, else 10^7).
    #[arg(long, global = true, value_name = "N")]
    budget: Option<u64>,
    /// Worker threads for validity searches.
    #[arg(long, global = true, default_value_t = 1, value_name = "N")]
    workers: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Semantics {
    Box,
    Ri,
}

#[derive(Debug, Args)]
struct Bound {
    #[arg(long, default_value_t = 3, value_name = "N")]
    max_worlds: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Truth of a formula at a world of a model.
    Eval {
        formula: String,
        /// Model JSON: {"worlds": [...], "rel": [[..]], "val": {..}}.
        #[arg(long)]
        model: String,
        #[arg(long)]
        world: String,
        #[arg(long, value_enum, default_value = "ri")]
        semantics: Semantics,
    },
    /// Validity over a bounded frame class.
    Valid {
        formula: String,
        #[arg(long, value_enum, default_value = "ri")]
        semantics: Semantics,
        /// A class name, or several joined by `+`.
        #[arg(long, default_value = "all")]
        class: String,
        #[arg(long)]
        mirror_closed: bool,
        #[command(flatten)]
        bound: Bound,
    },
    /// Circle translation of a box formula.
    Translate {
        formula: String,
        /// Print `bullet` and `dia` where they apply.
        #[arg(long)]
        sugar: bool,
    },
    /// All mirror reductions of a frame.
    Mirror { frame: String },
    /// Reflexive closure of a frame.
    Closure { frame: String },
    /// Membership of a frame in every named class.
    Classes { frame: String },
    /// Whether a class contains the reflexive closure of its members.
    Robust {
        class: String,
        #[command(flatten)]
        bound: Bound,
    },
    /// Bounded-morphism conditions for a world map between two frames.
    Morphism {
        source: String,
        target: String,
        /// World map JSON: {"map": {"x": "z"}}.
        map: String,
    },
    /// Check a proof file.
    Prove { proof: String },
    /// Run a metatheorem suite: mirror-invariance, bridge, compT, soundness.
    Meta {
        suite: String,
        #[command(flatten)]
        bound: Bound,
        #[arg(long, default_value_t = 3, value_name = "N")]
        max_depth: usize,
    },
}

struct Output {
    code: i32,
    stdout: String,
}

impl Output {
    fn verdict(ok: bool, stdout: String) -> Self {
        Output {
            code: if ok { 0 } else { 1 },
            stdout,
        }
    }
}

type CmdResult = Result<Output, String>;

/// Runs one invocation. `argv[0]` is the program name.
pub fn run<I, S>(argv: I, stdin: &[u8]) -> (i32, String, String)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                (2, String::new(), text)
            } else {
                (0, text, String::new())
            };
        }
    };
    match dispatch(&cli, stdin) {
        Ok(mut out) => {
            if !out.stdout.ends_with('\n') {
                out.stdout.push('\n');
            }
            (out.code, out.stdout, String::new())
        }
        Err(msg) => (2, String::new(), format!("error: {msg}\n")),
    }
}

fn read_input(arg: &str, stdin: &[u8]) -> Result<String, String> {
    if arg.trim_start().starts_with('{') {
        Ok(arg.to_string())
    } else if arg == "-" {
        String::from_utf8(stdin.to_vec()).map_err(|e| format!("stdin: {e}"))
    } else {
        std::fs::read_to_string(arg).map_err(|e| format!("{arg}: {e}"))
    }
}

fn read_frame(arg: &str, stdin: &[u8]) -> Result<Frame, String> {
    Frame::from_json(&read_input(arg, stdin)?).map_err(|e| e.to_string())
}

fn to_json(v: &impl serde::Serialize) -> String {
    serde_json::to_string(v).expect("output serializes")
}

/// `worlds: x, y` and `rel: x->y, y->y`.
fn show_frame(f: &Frame) -> String {
    let rel: Vec<String> = f.pairs().iter().map(|(a, b)| format!("{a}->{b}")).collect();
    format!(
        "worlds: {}\nrel: {}",
        f.worlds().join(", "),
        if rel.is_empty() {
            "(none)".to_string()
        } else {
            rel.join(", ")
        }
    )
}

fn show_countermodel(c: &Countermodel) -> String {
    let val: Vec<String> = c
        .valuation
        .iter()
        .map(|(v, ws)| format!("{v} = {{{}}}", ws.join(", ")))
        .collect();
    format!(
        "countermodel: fails at {}\n{}\nval: {}",
        c.world,
        show_frame(&c.frame),
        if val.is_empty() {
            "(no variables)".to_string()
        } else {
            val.join("; ")
        }
    )
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn dispatch(cli: &Cli, stdin: &[u8]) -> CmdResult {
    let budget = cli.budget.map(Budget::new).unwrap_or_else(Budget::from_env);
    let search = SearchOptions::default()
        .with_budget(budget)
        .with_workers(cli.workers);
    match &cli.command {
        Command::Eval {
            formula,
            model,
            world,
            semantics,
        } => {
            let model = Model::from_json(&read_input(model, stdin)?).map_err(|e| e.to_string())?;
            let value = match semantics {
                Semantics::Box => eval_box(&model, world, &parse_box(formula).map_err(|e| e.to_string())?),
                Semantics::Ri => eval_ri(&model, world, &parse_ri(formula).map_err(|e| e.to_string())?),
            }
            .map_err(|e| e.to_string())?;
            let text = if cli.json {
                json!({ "world": world, "value": value }).to_string()
            } else {
                value.to_string()
            };
            Ok(Output::verdict(value, text))
        }
        Command::Valid {
            formula,
            semantics,
            class,
            mirror_closed,
            bound,
        } => {
            let base: FrameClass = class
                .parse()
                .map_err(|e: crate::frames::FrameError| e.to_string())?;
            let mut q = ClassQuery::new(base, bound.max_worlds);
            if *mirror_closed {
                q = q.mirror_closed();
            }
            let report = match semantics {
                Semantics::Box => {
                    valid_over_class(&parse_box(formula).map_err(|e| e.to_string())?, &q, &search)
                }
                Semantics::Ri => {
                    valid_over_class(&parse_ri(formula).map_err(|e| e.to_string())?, &q, &search)
                }
            }
            .map_err(|e| e.to_string())?;
            Ok(Output::verdict(
                report.is_valid(),
                show_report(&report, &q, cli.json),
            ))
        }
        Command::Translate { formula, sugar } => {
            let f = parse_box(formula).map_err(|e| e.to_string())?;
            let style = if *sugar {
                PrintStyle::Sugared
            } else {
                PrintStyle::Plain
            };
            let out = print_ri(&circ_translate(&f), style);
            let text = if cli.json {
                json!({ "input": formula, "translation": out }).to_string()
            } else {
                out
            };
            Ok(Output::verdict(true, text))
        }
        Command::Mirror { frame } => {
            let f = read_frame(frame, stdin)?;
            let reductions = mirror_reductions(&f, &budget).map_err(|e| e.to_string())?;
            let text = if cli.json {
                to_json(&reductions)
            } else {
                let blocks: Vec<String> = reductions.iter().map(show_frame).collect();
                blocks.join("\n\n")
            };
            Ok(Output::verdict(true, text))
        }
        Command::Closure { frame } => {
            let c = reflexive_closure(&read_frame(frame, stdin)?);
            Ok(Output::verdict(
                true,
                if cli.json { to_json(&c) } else { show_frame(&c) },
            ))
        }
        Command::Classes { frame } => {
            let f = read_frame(frame, stdin)?;
            let table: Vec<(String, bool)> = FrameClass::NAMED
                .iter()
                .map(|c| (c.to_string(), c.contains(&f)))
                .collect();
            let text = if cli.json {
                let obj: serde_json::Map<String, serde_json::Value> =
                    table.into_iter().map(|(k, v)| (k, v.into())).collect();
                to_json(&obj)
            } else {
                let mut s = String::new();
                for (name, member) in table {
                    let mut name = name;
                    name[..1].make_ascii_uppercase();
                    let _ = writeln!(s, "{name}: {}", yes(member));
                }
                s
            };
            Ok(Output::verdict(true, text))
        }
        Command::Robust { class, bound } => {
            let c: FrameClass = class
                .parse()
                .map_err(|e: crate::frames::FrameError| e.to_string())?;
            let r = robust_under_reflexivity(&c, bound.max_worlds, &budget).map_err(|e| e.to_string())?;
            let text = if cli.json {
                to_json(&r)
            } else {
                match &r {
                    Robustness::HoldsUpToBound { max_size, frames_checked } => format!(
                        "{c}: robust under reflexivity up to {max_size} worlds ({frames_checked} members checked)"
                    ),
                    Robustness::Fails { witness } => format!(
                        "{c}: not robust; this member's reflexive closure leaves the class\n{}",
                        show_frame(witness)
                    ),
                }
            };
            Ok(Output::verdict(r.holds(), text))
        }
        Command::Morphism { source, target, map } => {
            let src = read_frame(source, stdin)?;
            let dst = read_frame(target, stdin)?;
            let m = WorldMap::from_json(&src, &dst, &read_input(map, stdin)?).map_err(|e| e.to_string())?;
            let check = check_morphism(&src, &dst, &m);
            let text = if cli.json {
                to_json(&json!({
                    "forth": check.forth,
                    "back": check.back,
                    "surjective": check.surjective,
                    "bounded_morphism": check.is_bounded_morphism(),
                }))
            } else {
                format!(
                    "forth: {}\nback: {}\nsurjective: {}\nbounded morphism: {}",
                    yes(check.forth),
                    yes(check.back),
                    yes(check.surjective),
                    yes(check.is_bounded_morphism())
                )
            };
            Ok(Output::verdict(check.is_bounded_morphism(), text))
        }
        Command::Prove { proof } => {
            let file = ProofFile::from_json(&read_input(proof, stdin)?).map_err(|e| e.to_string())?;
            let sys = file.system().map_err(|e| e.to_string())?;
            let p = file.proof().map_err(|e| e.to_string())?;
            let result = check_proof(&p, &sys);
            let text = match (&result, cli.json) {
                (Ok(t), true) => {
                    json!({ "status": "ok", "theorem": t.to_string(), "lines": p.len() }).to_string()
                }
                (Ok(t), false) => format!("ok: {t}"),
                (Err(e), true) => {
                    json!({ "status": "rejected", "line": e.line, "reason": e.reason.to_string() })
                        .to_string()
                }
                (Err(e), false) => format!("rejected: {e}"),
            };
            Ok(Output::verdict(result.is_ok(), text))
        }
        Command::Meta {
            suite,
            bound,
            max_depth,
        } => {
            let suite: Suite = suite.parse()?;
            let opts = MetaOptions::default()
                .with_max_worlds(bound.max_worlds)
                .with_max_depth(*max_depth)
                .with_search(search);
            let report = run_suite(suite, &opts).map_err(|e| e.to_string())?;
            Ok(Output::verdict(
                report.pass,
                if cli.json {
                    report.to_json()
                } else {
                    report.to_string()
                },
            ))
        }
    }
}

fn show_report(report: &ValidityReport, q: &ClassQuery, json: bool) -> String {
    if json {
        return report.to_json();
    }
    let class = if q.mirror_closed {
        format!("mirror closure of {}", q.base)
    } else {
        q.base.to_string()
    };
    match &report.countermodel {
        None => format!(
            "valid up to {} worlds over {class} ({} frames checked)",
            q.max_world_count, report.frames_checked
        ),
        Some(c) => format!(
            "{}\n({} frames checked)",
            show_countermodel(c),
            report.frames_checked
        ),
    }
}
