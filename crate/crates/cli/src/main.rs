use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use pseudoplane::pipeline::{self, InputError, VerifyOptions};
use pseudoplane::render;

#[derive(Parser)]
#[command(
    name = "pseudoplane",
    version,
    about = "Verify ML1 affine pseudo-planes x^m y = z^d - 1 modulo Z_d"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every check for the triple (d, e, m).
    Verify {
        #[arg(short = 'd', allow_negative_numbers = true)]
        d: i64,
        #[arg(short = 'e', allow_negative_numbers = true)]
        e: i64,
        #[arg(short = 'm', allow_negative_numbers = true)]
        m: i64,
        #[arg(long, default_value_t = 8)]
        max_weight: u32,
        #[arg(long, default_value_t = 10)]
        max_exponent: u32,
        #[arg(long)]
        json: bool,
    },
    /// Classify a DPD pair given as `point:coefficient` lists.
    Classify {
        #[arg(long = "d-plus", allow_hyphen_values = true)]
        d_plus: String,
        #[arg(long = "d-minus", allow_hyphen_values = true)]
        d_minus: String,
        #[arg(long, allow_negative_numbers = true)]
        lnd_degree: Option<i64>,
        #[arg(long)]
        json: bool,
    },
    /// Verify every admissible triple with d <= d-max and m <= m-max.
    Sweep {
        #[arg(long, allow_negative_numbers = true)]
        d_max: i64,
        #[arg(long, allow_negative_numbers = true)]
        m_max: i64,
        #[arg(long, default_value_t = 8)]
        max_weight: u32,
        #[arg(long)]
        json: bool,
    },
}

fn emit<T: Serialize>(value: &T, json: bool, text: impl FnOnce(&T) -> String) {
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(value).expect("serializable report")
        );
    } else {
        print!("{}", text(value));
    }
}

fn fail(err: InputError, json: bool) -> ExitCode {
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&err.to_report()).expect("serializable error")
        );
    } else {
        eprintln!("error: {err}");
    }
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify {
            d,
            e,
            m,
            max_weight,
            max_exponent,
            json,
        } => {
            let opts = VerifyOptions {
                max_weight,
                max_exponent,
            };
            match pipeline::verify(d, e, m, &opts) {
                Ok(r) => {
                    emit(&r, json, render::verification);
                    ExitCode::from(r.verdict.exit_code() as u8)
                }
                Err(err) => fail(err, json),
            }
        }
        Command::Classify {
            d_plus,
            d_minus,
            lnd_degree,
            json,
        } => match pipeline::classify(&d_plus, &d_minus, lnd_degree) {
            Ok(r) => {
                emit(&r, json, render::classification);
                ExitCode::SUCCESS
            }
            Err(err) => fail(err, json),
        },
        Command::Sweep {
            d_max,
            m_max,
            max_weight,
            json,
        } => match pipeline::sweep(d_max, m_max, max_weight) {
            Ok(r) => {
                emit(&r, json, render::sweep);
                ExitCode::from(r.exit_code() as u8)
            }
            Err(err) => fail(err, json),
        },
    }
}
