mod args;
mod commands;
mod game;
mod output;
mod repl;

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command, GameCommand, PosetCommand, TriangleCommand};
use output::UsageError;

fn run(cli: Cli) -> anyhow::Result<()> {
    let format = cli.format;
    let digits = cli.digits as usize;
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match cli.command {
        Command::Array { params, rows } => commands::array(&mut out, format, &params, rows)?,
        Command::Poly { params, k } => commands::poly(&mut out, format, &params, k)?,
        Command::Roots { params, k } => commands::roots(&mut out, format, digits, &params, k)?,
        Command::Binet { params, k, x, precision } => {
            commands::binet(&mut out, format, digits, &params, k, &x, precision)?
        }
        Command::Game(g) => match g {
            GameCommand::Play { graph, start, first, strategy, script, budget } => {
                drop(out);
                let job = game::Play {
                    out: Box::new(BufWriter::new(io::stdout())),
                    format,
                    digits,
                    first,
                    strategy: game::strategy(strategy, script),
                    budget,
                };
                return game::dispatch(&graph, &start, job);
            }
            GameCommand::Classify { graph } => game::classify_cmd(&mut out, format, &graph)?,
            GameCommand::Predict { graph, a, b, first } => {
                game::predict_cmd(&mut out, format, digits, &graph, &a, &b, first)?
            }
            GameCommand::Repl { graph, start } => {
                drop(out);
                let job = game::Repl {
                    input: Box::new(io::stdin().lock()),
                    out: Box::new(io::stdout()),
                    format,
                    digits,
                };
                return game::dispatch(&graph, &start, job);
            }
        },
        Command::Poset(p) => match p {
            PosetCommand::Enum(a) => commands::poset_enum(&mut out, format, &a)?,
            PosetCommand::Rgf(a) => commands::poset_rgf(&mut out, format, &a)?,
            PosetCommand::Check { poset, string } => {
                let r = commands::poset_check(&mut out, format, &poset, string.as_deref());
                out.flush()?;
                r?
            }
        },
        Command::Triangle(TriangleCommand::Row { alpha, n, k }) => {
            commands::triangle_row(&mut out, format, alpha, n, k)?
        }
        Command::Verify(v) => {
            let r = commands::verify(&mut out, format, &v);
            out.flush()?;
            r?
        }
    }
    out.flush()?;
    Ok(())
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.chain().filter_map(|c| c.downcast_ref::<io::Error>()).any(|io| io.kind() == io::ErrorKind::BrokenPipe)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            let _ = io::stdout().flush();
            if let Some(u) = e.downcast_ref::<UsageError>() {
                eprintln!("error: {u}");
                eprintln!("see gib --help");
                return ExitCode::from(2);
            }
            let line = format!("{e:#}").replace('\n', " ");
            eprintln!("error: {line}");
            ExitCode::from(1)
        }
    }
}
