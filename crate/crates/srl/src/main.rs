//! `srl`: decision procedures for finite rings with involution.
//!
//! Exit codes: 0 pass, 1 counterexample or failed property, 2 usage or
//! parse error, 3 resource cap.

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use srl::parse::parse_ring_spec;
use srl::report::SuiteReport;
use srl::{corpus, hunts, verify};
use srl_core::classify::{self, RingClass};
use srl_core::{axioms, clean, conditions, BuildConfig, FiniteStarRing};

#[derive(Parser)]
#[command(name = "srl", version, about = "finite *-ring laboratory")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a ring spec and print its canonical form and order.
    Parse { spec: String },
    /// Decide a named property; exit 1 with a witness when it fails.
    Decide { property: String, spec: String },
    /// Find a clean-type decomposition of one element.
    Witness {
        spec: String,
        #[arg(long)]
        element: u32,
        #[arg(long)]
        mode: String,
    },
    /// Report the verdict of every *-ring axiom.
    Axioms { spec: String },
    /// Type decomposition of a Baer *-ring.
    Types { spec: String },
    /// Run the full theorem suite and write a JSON report.
    Suite {
        /// File with one ring spec per line; default corpus when absent.
        #[arg(long)]
        corpus: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: String,
        /// Also render the report as markdown to this path.
        #[arg(long)]
        markdown: Option<String>,
    },
    /// Hunt for counterexamples to one of the open questions.
    Hunt {
        question: String,
        #[arg(long, default_value_t = 200)]
        budget: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Re-validate every witness in a serialized report.
    Verify { report: String },
}

fn build(spec: &str, config: &BuildConfig) -> Result<std::rc::Rc<FiniteStarRing>, ExitCode> {
    let expr = parse_ring_spec(spec).map_err(|e| {
        eprintln!("error: {e}");
        ExitCode::from(2)
    })?;
    srl_core::build_ring(&expr, config).map_err(|e| {
        let code = match e {
            srl_core::BuildError::TooLarge { .. } => 3,
            _ => 2,
        };
        eprintln!("error: {e}");
        ExitCode::from(code)
    })
}

fn decide(property: &str, ring: &std::rc::Rc<FiniteStarRing>, config: &BuildConfig) -> Result<Result<(), String>, ExitCode> {
    let clean_mode = |m: clean::CleanMode| match clean::is_clean_variant(ring, m) {
        Ok(()) => Ok(()),
        Err(a) => Err(format!("element {a} ({}) has no decomposition", ring.render(a))),
    };
    let class = |c: RingClass| match classify::is_ring_class(ring, c) {
        classify::ClassVerdict::Holds => Ok(()),
        classify::ClassVerdict::Fails { witness } => Err(format!("witness {witness:?}")),
    };
    let side_check = |f: fn(&FiniteStarRing, conditions::Side) -> Result<(), u32>| {
        match (f(ring, conditions::Side::Left), f(ring, conditions::Side::Right)) {
            (Ok(()), Ok(())) => Ok(()),
            (l, r) => Err(format!("left {l:?}, right {r:?}")),
        }
    };
    let cond = |c: conditions::Condition| match conditions::decide_condition(ring, c, config) {
        conditions::Verdict::True => Ok(()),
        conditions::Verdict::False(w) => Err(format!("witness {w:?}")),
        conditions::Verdict::Unknown => Err("undecided within budget".into()),
    };
    let regularity = || clean::decide_regularity(ring).0;
    Ok(match property {
        "commutative" => {
            if ring.is_commutative() {
                Ok(())
            } else {
                Err("noncommutative".into())
            }
        }
        "proper-involution" => classify::involution_is_proper(ring)
            .map_err(|x| format!("x = {x} ({}) has x*x = 0", ring.render(x))),
        "regular" => {
            if regularity().regular {
                Ok(())
            } else {
                Err("some element is not regular".into())
            }
        }
        "unit-regular" => {
            if regularity().unit_regular {
                Ok(())
            } else {
                Err("some element is not unit-regular".into())
            }
        }
        "star-regular" => {
            if regularity().star_regular {
                Ok(())
            } else {
                Err("some element is not *-regular".into())
            }
        }
        "clean" => clean_mode(clean::CLEAN),
        "star-clean" => clean_mode(clean::STAR_CLEAN),
        "strongly-clean" => clean_mode(clean::STRONGLY_CLEAN),
        "strongly-star-clean" => clean_mode(clean::STRONGLY_STAR_CLEAN),
        "almost-clean" => clean_mode(clean::ALMOST_CLEAN),
        "almost-star-clean" => clean_mode(clean::ALMOST_STAR_CLEAN),
        "special-clean" => clean_mode(clean::SPECIAL_CLEAN),
        "special-star-clean" => clean_mode(clean::SPECIAL_STAR_CLEAN),
        "abelian" => cond(conditions::Condition::Abelian),
        "star-abelian" => cond(conditions::Condition::StarAbelian),
        "semicommutative" => cond(conditions::Condition::Semicommutative),
        "symmetric" => cond(conditions::Condition::Symmetric),
        "reduced" => cond(conditions::Condition::Reduced),
        "armendariz" => cond(conditions::Condition::ArmendarizBounded(
            config.armendariz_degree,
        )),
        "right-rickart" => class(RingClass::RightRickart),
        "rickart-star" => class(RingClass::RickartStar),
        "baer" => class(RingClass::Baer),
        "baer-star" => class(RingClass::BaerStar),
        "morphic" => side_check(conditions::is_morphic),
        "quasi-morphic" => side_check(conditions::is_quasi_morphic),
        "p-injective" => side_check(conditions::is_p_injective),
        _ => {
            eprintln!("error: unknown property `{property}`");
            return Err(ExitCode::from(2));
        }
    })
}

fn clean_mode_by_name(name: &str) -> Option<clean::CleanMode> {
    Some(match name {
        "clean" => clean::CLEAN,
        "star-clean" => clean::STAR_CLEAN,
        "strongly-clean" => clean::STRONGLY_CLEAN,
        "strongly-star-clean" => clean::STRONGLY_STAR_CLEAN,
        "almost-clean" => clean::ALMOST_CLEAN,
        "almost-star-clean" => clean::ALMOST_STAR_CLEAN,
        "special-clean" => clean::SPECIAL_CLEAN,
        "special-star-clean" => clean::SPECIAL_STAR_CLEAN,
        _ => return None,
    })
}

fn run() -> ExitCode {
    let cli = Cli::parse();
    let config = BuildConfig::default();
    match cli.command {
        Command::Parse { spec } => match parse_ring_spec(&spec) {
            Ok(expr) => match srl_core::build_ring(&expr, &config) {
                Ok(ring) => {
                    println!("{} (order {})", expr.print(), ring.order());
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    match e {
                        srl_core::BuildError::TooLarge { .. } => ExitCode::from(3),
                        _ => ExitCode::from(2),
                    }
                }
            },
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
        Command::Decide { property, spec } => {
            let ring = match build(&spec, &config) {
                Ok(r) => r,
                Err(c) => return c,
            };
            match decide(&property, &ring, &config) {
                Err(c) => c,
                Ok(Ok(())) => {
                    println!("{property}: holds");
                    ExitCode::SUCCESS
                }
                Ok(Err(why)) => {
                    println!("{property}: fails ({why})");
                    ExitCode::from(1)
                }
            }
        }
        Command::Witness { spec, element, mode } => {
            let ring = match build(&spec, &config) {
                Ok(r) => r,
                Err(c) => return c,
            };
            let Some(m) = clean_mode_by_name(&mode) else {
                eprintln!("error: unknown mode `{mode}`");
                return ExitCode::from(2);
            };
            if element >= ring.order() {
                eprintln!("error: element {element} out of range (order {})", ring.order());
                return ExitCode::from(2);
            }
            match clean::decomposition_witness(&ring, element, m) {
                Some(w) => {
                    println!(
                        "{} = {} + {} (additive {}, idempotent {}, commutes {}, aR∩eR=0 {})",
                        ring.render(w.element),
                        ring.render(w.additive),
                        ring.render(w.idempotent),
                        w.additive,
                        w.idempotent,
                        w.commutes,
                        w.intersection_zero
                    );
                    ExitCode::SUCCESS
                }
                None => {
                    println!("no {mode} decomposition for element {element}");
                    ExitCode::from(1)
                }
            }
        }
        Command::Axioms { spec } => {
            let ring = match build(&spec, &config) {
                Ok(r) => r,
                Err(c) => return c,
            };
            let report = axioms::check_all_axioms(&ring);
            let mut all_pass = true;
            for (id, verdict) in &report.entries {
                all_pass &= verdict.passed();
                println!("{:8} {:?}", id.name(), verdict);
            }
            if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::Types { spec } => {
            let ring = match build(&spec, &config) {
                Ok(r) => r,
                Err(c) => return c,
            };
            match axioms::type_decompose(&ring, &config) {
                Err(_) => {
                    println!("not a Baer *-ring; no type decomposition");
                    ExitCode::from(1)
                }
                Ok(dec) => {
                    println!(
                        "c_I = {} ({}), c_II = {} ({}), c_III = {} ({}), finite: {}, I_f: {}, verified: {}",
                        dec.c_i,
                        ring.render(dec.c_i),
                        dec.c_ii,
                        ring.render(dec.c_ii),
                        dec.c_iii,
                        ring.render(dec.c_iii),
                        dec.finite,
                        dec.i_f,
                        dec.verified
                    );
                    for piece in &dec.homogeneous {
                        println!(
                            "homogeneous piece at {}: order {}, partition {:?}, base order {}",
                            piece.central, piece.order, piece.partition, piece.base_order
                        );
                    }
                    ExitCode::SUCCESS
                }
            }
        }
        Command::Suite { corpus: corpus_file, seed, out, markdown } => {
            let specs = match corpus_file {
                None => corpus::default_corpus(),
                Some(path) => match std::fs::read_to_string(&path) {
                    Ok(text) => text
                        .lines()
                        .map(str::trim)
                        .filter(|l| !l.is_empty() && !l.starts_with('#'))
                        .map(String::from)
                        .collect(),
                    Err(e) => {
                        eprintln!("error: cannot read {path}: {e}");
                        return ExitCode::from(2);
                    }
                },
            };
            let report = match srl::run_suite(&specs, seed, &config) {
                Ok(r) => r,
                Err(srl::SuiteError::Parse(e)) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(3);
                }
            };
            if let Err(e) = std::fs::write(&out, report.to_json()) {
                eprintln!("error: cannot write {out}: {e}");
                return ExitCode::from(2);
            }
            if let Some(md) = markdown {
                if let Err(e) = std::fs::write(&md, report.to_markdown()) {
                    eprintln!("error: cannot write {md}: {e}");
                    return ExitCode::from(2);
                }
            }
            let vacuous: Vec<&str> = report
                .theorems
                .iter()
                .filter(|t| t.vacuous)
                .map(|t| t.id.as_str())
                .collect();
            if !vacuous.is_empty() {
                eprintln!("vacuous theorems (no corpus member meets the hypothesis): {vacuous:?}");
            }
            if report.has_counterexample() {
                eprintln!("counterexamples found; see {out}");
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Command::Hunt { question, budget, seed } => {
            if !hunts::HUNT_IDS.contains(&question.as_str()) {
                eprintln!("error: unknown question `{question}` (expected Q1, Q2, Q3proxy, Q4)");
                return ExitCode::from(2);
            }
            let entry = hunts::run_hunt(&question, budget, seed, &config);
            println!(
                "{}: examined {}, skipped {}, findings {}",
                entry.id,
                entry.examined,
                entry.skipped,
                entry.findings.len()
            );
            for f in &entry.findings {
                println!("  {} witness {:?} {:?} ({})", f.spec, f.witness, f.rendered, f.note);
            }
            // A finding answers the open question; surface it in the exit
            // code like a counterexample.
            if entry.findings.is_empty() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::Verify { report } => {
            let text = match std::fs::read_to_string(&report) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: cannot read {report}: {e}");
                    return ExitCode::from(2);
                }
            };
            let parsed: SuiteReport = match serde_json::from_str(&text) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("error: malformed report: {e}");
                    return ExitCode::from(2);
                }
            };
            let problems = verify::verify_report(&parsed, &config);
            if problems.is_empty() {
                println!(
                    "report coherent: {} corpus members, {} theorems, {} hunts",
                    parsed.corpus.len(),
                    parsed.theorems.len(),
                    parsed.hunts.len()
                );
                ExitCode::SUCCESS
            } else {
                for p in &problems {
                    eprintln!("problem: {p}");
                }
                ExitCode::from(1)
            }
        }
    }
}

fn main() -> ExitCode {
    run()
}
