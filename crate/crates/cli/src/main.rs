//! `hopfsmash`: exact computations with finite-dimensional Hopf algebras.
//!
//! Algebras are given as `catalog:<name>` or as a path to a JSON file.
//! Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 input or
//! usage error.

mod load;
mod report;
mod suite;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use hopfsmash::formats::{hopf_from_json, hopf_to_json};
use hopfsmash::indicators::{module_indicator, regular_twisted_indicator, twisted_module_indicator};
use hopfsmash::powers_exponents::{
    coprime_power_experiment, default_bound, twisted_exponent, HopfAutomorphism, Q38Verdict,
};
use hopfsmash::smash::{lemma21_check, smash_coproduct};
use hopfsmash::{FiniteHopfAlgebra, HopfError};

use load::{InputError, Loaded};
use report::{InputDigest, RunReport};

#[derive(Parser)]
#[command(name = "hopfsmash", version, about = "Exact computations with finite-dimensional Hopf algebras")]
struct Cli {
    /// Print the machine-readable JSON report instead of a table
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Hopf algebra axioms
    Verify {
        /// `catalog:<name>` or a JSON file
        algebra: String,
    },
    /// Search for the exponent, optionally twisted by an automorphism
    Exponent {
        algebra: String,
        /// Automorphism name or JSON file
        #[arg(long)]
        aut: Option<String>,
        /// Largest n tried (default: 16·dim·order, or $HOPFSMASH_BOUND)
        #[arg(long)]
        bound: Option<u64>,
    },
    /// Regular twisted indicator, or the indicator of a module
    Indicator {
        algebra: String,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
        /// Automorphism name or JSON file
        #[arg(long)]
        aut: Option<String>,
        /// Representation name or JSON file
        #[arg(long)]
        rep: Option<String>,
    },
    /// Build the smash coproduct of an action and check it
    Smash {
        algebra: String,
        /// Action JSON file, or an automorphism generating a cyclic action
        action: String,
        /// Write the smash coproduct to this file
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Reproduce every catalog value and identity check
    PaperSuite {
        /// Corrupt one structure constant of the smash coproducts
        #[arg(long, hide = true)]
        perturb: bool,
    },
    /// Compare twisted exponents over the powers of τ coprime to its order
    #[command(name = "experiment-q38")]
    ExperimentQ38 {
        algebra: String,
        #[arg(long)]
        aut: String,
        #[arg(long)]
        bound: Option<u64>,
    },
}

fn resolve_bound(explicit: Option<u64>, h: &FiniteHopfAlgebra, tau: &HopfAutomorphism) -> Loaded<u64> {
    if let Some(b) = explicit {
        return Ok(b);
    }
    match std::env::var("HOPFSMASH_BOUND") {
        Ok(text) => text
            .trim()
            .parse()
            .map_err(|_| InputError(format!("HOPFSMASH_BOUND: not a positive integer: {text:?}"))),
        Err(_) => Ok(default_bound(h, tau)),
    }
}

fn field_name(h: &FiniteHopfAlgebra) -> String {
    match h.field().order() {
        1 | 2 => "Q".to_string(),
        n => format!("Q(z{n})"),
    }
}

fn axiom_rows(h: &FiniteHopfAlgebra, prefix: &str, report: &mut RunReport) -> bool {
    let axioms = h.verify_hopf_axioms();
    for c in &axioms.checks {
        report.check(format!("{prefix}{}", c.axiom), c.passed, c.witness.clone().unwrap_or_default());
    }
    axioms.antipode_squared_is_identity
}

fn cmd_verify(report: &mut RunReport, algebra: &str) -> Loaded<()> {
    let source = load::algebra_unchecked(algebra, report)?;
    let h = &source.algebra;
    report.result("name", h.name());
    report.result("field", field_name(h));
    report.result("dimension", h.dim());
    if !axiom_rows(h, "", report) {
        report.warn("S² ≠ id: the untwisted exponent is not the standard notion here");
    }
    Ok(())
}

fn cmd_exponent(report: &mut RunReport, algebra: &str, aut: Option<&str>, bound: Option<u64>) -> Loaded<()> {
    let source = load::algebra(algebra, report)?;
    let h = &source.algebra;
    let tau = load::automorphism(&source, aut, report)?;
    let bound = resolve_bound(bound, h, &tau)?;
    let r = twisted_exponent(h, &tau, bound);
    report.result("automorphism", aut.unwrap_or("id"));
    report.result("order", tau.order());
    report.result("bound", bound);
    report.result("exponent", r.outcome);
    if r.antipode_warning {
        report.warn("S² ≠ id: the untwisted exponent is not the standard notion here");
    }
    Ok(())
}

fn cmd_indicator(
    report: &mut RunReport,
    algebra: &str,
    m: u64,
    aut: Option<&str>,
    rep: Option<&str>,
) -> Loaded<()> {
    let source = load::algebra(algebra, report)?;
    let h = &source.algebra;
    let tau = load::automorphism(&source, aut, report)?;
    report.result("m", m);
    report.result("automorphism", aut.unwrap_or("id"));
    let value = match rep {
        Some(name) => {
            let rep = load::representation(&source, name, report)?;
            report.result("module", format!("{name} (rank {})", rep.rank()));
            if aut.is_some() {
                twisted_module_indicator(h, &rep, m, &tau)
            } else {
                module_indicator(h, &rep, m)
            }
        }
        None => {
            report.result("module", "regular");
            regular_twisted_indicator(h, m, &tau)
        }
    };
    match value {
        Ok(v) => {
            report.result("indicator", &v.value);
            if rep.is_none() {
                report.check("indicator formulas agree", true, v.methods.join(", "));
            }
            Ok(())
        }
        Err(HopfError::Inconsistent(msg)) => {
            report.check("indicator formulas agree", false, msg);
            Ok(())
        }
        Err(e) => Err(e.into()),
    }
}

fn cmd_smash(report: &mut RunReport, algebra: &str, action: &str, emit: Option<&PathBuf>) -> Loaded<()> {
    let source = load::algebra(algebra, report)?;
    let action = load::action(&source, action, report)?;
    let k = smash_coproduct(&action)?;
    let kalg = k.algebra();
    report.result("group order", action.group().order());
    report.result("dimension", kalg.dim());
    axiom_rows(kalg, "K: ", report);
    let dual = lemma21_check(&action)?;
    for (name, ok) in [
        ("multiplication", dual.mult_equal),
        ("comultiplication", dual.comult_equal),
        ("unit", dual.unit_equal),
        ("counit", dual.counit_equal),
        ("antipode", dual.antipode_equal),
    ] {
        report.check(format!("dual of K vs smash product: {name}"), ok, "");
    }
    if let Some(path) = emit {
        let text = hopf_to_json(kalg);
        fs::write(path, &text).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
        let name = path.display().to_string();
        report.input(InputDigest::of(&name, text.as_bytes()));
        report.result("written", &name);
        let reread = fs::read_to_string(path).map_err(|e| InputError(format!("{name}: {e}")))?;
        let reloaded = hopf_from_json(&reread)?;
        report.check(
            "emitted file reloads identically",
            reloaded.same_structure(kalg) && reloaded.verify_hopf_axioms().all_passed(),
            "",
        );
    }
    Ok(())
}

fn cmd_paper_suite(report: &mut RunReport, perturb: bool) -> Loaded<()> {
    suite::run(report, perturb);
    Ok(())
}

fn cmd_experiment_q38(report: &mut RunReport, algebra: &str, aut: &str, bound: Option<u64>) -> Loaded<()> {
    let source = load::algebra(algebra, report)?;
    let h = &source.algebra;
    let tau = load::automorphism(&source, Some(aut), report)?;
    let bound = resolve_bound(bound, h, &tau)?;
    let r = coprime_power_experiment(h, &tau, bound);
    report.result("order", r.order);
    report.result("bound", r.bound);
    for (m, outcome) in &r.rows {
        report.result(format!("exp[τ^{m}]"), outcome);
    }
    let verdict = match r.verdict {
        Q38Verdict::Agree => "agree",
        Q38Verdict::PotentialCounterexample => "POTENTIAL COUNTEREXAMPLE",
        Q38Verdict::Inconclusive => "inconclusive (bound exhausted)",
    };
    report.result("verdict", verdict);
    if r.verdict == Q38Verdict::PotentialCounterexample {
        report.warn("POTENTIAL COUNTEREXAMPLE: twisted exponents differ across coprime powers of τ");
    }
    Ok(())
}

fn command_echo() -> Vec<String> {
    std::iter::once("hopfsmash".to_string()).chain(std::env::args().skip(1)).collect()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let mut report = RunReport::new(command_echo());
    let r = &mut report;
    let outcome = match &cli.command {
        Command::Verify { algebra } => cmd_verify(r, algebra),
        Command::Exponent { algebra, aut, bound } => cmd_exponent(r, algebra, aut.as_deref(), *bound),
        Command::Indicator { algebra, m, aut, rep } => cmd_indicator(r, algebra, *m, aut.as_deref(), rep.as_deref()),
        Command::Smash { algebra, action, emit } => cmd_smash(r, algebra, action, emit.as_ref()),
        Command::PaperSuite { perturb } => cmd_paper_suite(r, *perturb),
        Command::ExperimentQ38 { algebra, aut, bound } => cmd_experiment_q38(r, algebra, aut, *bound),
    };
    if let Err(InputError(msg)) = outcome {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    report.wall_time_seconds = start.elapsed().as_secs_f64();
    if cli.json {
        print!("{}", report.to_json());
    } else {
        print!("{}", report.to_table());
    }
    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
