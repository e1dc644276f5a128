//! Command-line front end: classify single presentations, generate family
//! presentations, run corpus batches and survey sweeps.
//!
//! Exit codes: 0 verdict reached, 1 parse/input error, 2 structural error
//! (non-knot-like relator, invalid fraction, ...), 3 expectation mismatch
//! in batch mode.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use biorder::batch::{
    batch_exit_code, describe_classification, entry_from_classification, parse_corpus,
    render_report_json, render_survey_csv, run_batch, run_survey, Report, Summary,
    FORMAT_VERSION,
};
use biorder::classify::{apply_cgw, Options, VariantPolicy};
use biorder::error::Error;
use biorder::grammar::{render_word, Presentation};
use biorder::families::{twist_presentation, two_bridge_presentation, TwoBridgeParams};

#[derive(Parser)]
#[command(name = "biorder", version, about = "Exact bi-orderability testing for two-generator one-relator knot groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum VariantArg {
    Standard,
    Conjugating,
    #[default]
    Both,
}

impl From<VariantArg> for VariantPolicy {
    fn from(v: VariantArg) -> VariantPolicy {
        match v {
            VariantArg::Standard => VariantPolicy::Standard,
            VariantArg::Conjugating => VariantPolicy::Conjugating,
            VariantArg::Both => VariantPolicy::Both,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Classify a single presentation given as a relator or a relation.
    Classify {
        #[arg(long, conflicts_with = "relation")]
        relator: Option<String>,
        #[arg(long)]
        relation: Option<String>,
        #[arg(long)]
        label: Option<String>,
        #[arg(long, value_enum, default_value_t = VariantArg::Both)]
        variant: VariantArg,
        /// Emit the full report entry as JSON instead of the summary.
        #[arg(long)]
        json: bool,
    },
    /// Generate (and optionally classify) the two-bridge knot K_{p/q}.
    TwoBridge {
        p: i64,
        q: i64,
        #[arg(long)]
        classify: bool,
        #[arg(long)]
        json: bool,
    },
    /// Generate (and optionally classify) the twist knot K_q.
    Twist {
        q: i64,
        #[arg(long)]
        classify: bool,
        #[arg(long)]
        json: bool,
    },
    /// Classify every entry of a corpus JSON file and write a report.
    Batch {
        input: PathBuf,
        #[arg(long)]
        output: PathBuf,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Classify every two-bridge knot with q <= max-q into a CSV table.
    Survey {
        #[arg(long)]
        max_q: i64,
        #[arg(long)]
        output: PathBuf,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

fn classify_and_print(
    presentation: &Presentation,
    options: &Options,
    json: bool,
) -> Result<(), Error> {
    let classification = apply_cgw(presentation, options)?;
    if json {
        use biorder::classify::Outcome;
        let entry = entry_from_classification(
            presentation.label().unwrap_or("presentation"),
            presentation.source_form(),
            None,
            &classification,
        );
        let outcome = classification.verdict.outcome;
        let report = Report {
            format_version: FORMAT_VERSION,
            entries: vec![entry],
            summary: Summary {
                biorderable: (outcome == Outcome::BiOrderable) as usize,
                not_biorderable: (outcome == Outcome::NotBiOrderable) as usize,
                inconclusive: (outcome == Outcome::Inconclusive) as usize,
                errors: 0,
                mismatches: 0,
            },
        };
        print!("{}", render_report_json(&report));
    } else {
        print!("{}", describe_classification(&classification));
    }
    Ok(())
}

fn real_main() -> Result<u8, (u8, String)> {
    let cli = Cli::parse();
    let fail = |e: Error| (e.exit_code(), e.to_string());
    let io_fail = |what: &str, e: std::io::Error| (1u8, format!("{what}: {e}"));

    match cli.command {
        Command::Classify {
            relator,
            relation,
            label,
            variant,
            json,
        } => {
            let mut presentation = match (relator, relation) {
                (Some(r), None) => Presentation::from_relator_text(&r).map_err(fail)?,
                (None, Some(r)) => Presentation::from_relation_text(&r).map_err(fail)?,
                _ => return Err((1, "provide exactly one of --relator / --relation".into())),
            };
            if let Some(label) = label {
                presentation = presentation.with_label(label);
            }
            let options = Options {
                variant: variant.into(),
            };
            classify_and_print(&presentation, &options, json).map_err(fail)?;
            Ok(0)
        }
        Command::TwoBridge {
            p,
            q,
            classify,
            json,
        } => {
            let params = TwoBridgeParams::new(p, q).map_err(fail)?;
            let presentation = two_bridge_presentation(&params);
            print_presentation(&presentation);
            if classify {
                classify_and_print(&presentation, &Options::default(), json).map_err(fail)?;
            }
            Ok(0)
        }
        Command::Twist { q, classify, json } => {
            let presentation = twist_presentation(q).map_err(fail)?;
            print_presentation(&presentation);
            if classify {
                classify_and_print(&presentation, &Options::default(), json).map_err(fail)?;
            }
            Ok(0)
        }
        Command::Batch {
            input,
            output,
            jobs,
        } => {
            let text = fs::read_to_string(&input)
                .map_err(|e| io_fail(&format!("reading {}", input.display()), e))?;
            let entries = parse_corpus(&text).map_err(fail)?;
            let report = run_batch(&entries, &Options::default(), jobs);
            fs::write(&output, render_report_json(&report))
                .map_err(|e| io_fail(&format!("writing {}", output.display()), e))?;
            let s = &report.summary;
            eprintln!(
                "{} entries: {} biorderable, {} not, {} inconclusive, {} errors, {} mismatches",
                report.entries.len(),
                s.biorderable,
                s.not_biorderable,
                s.inconclusive,
                s.errors,
                s.mismatches
            );
            Ok(batch_exit_code(&report))
        }
        Command::Survey { max_q, output, jobs } => {
            let rows = run_survey(max_q, &Options::default(), jobs).map_err(fail)?;
            fs::write(&output, render_survey_csv(&rows))
                .map_err(|e| io_fail(&format!("writing {}", output.display()), e))?;
            eprintln!("{} two-bridge knots surveyed up to q = {max_q}", rows.len());
            Ok(0)
        }
    }
}

fn print_presentation(p: &Presentation) {
    if let Some(label) = p.label() {
        println!("{label}");
    }
    println!("  relation: {}", p.source_form());
    println!("  relator:  {}", render_word(p.relator()));
}

fn main() -> ExitCode {
    match real_main() {
        Ok(code) => ExitCode::from(code),
        Err((code, message)) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}
