//! `dbseq` command-line tool: shift-rule stepping, sequence generation,
//! verification, factorization, counting and a step-cost benchmark.
//!
//! Exit codes: 0 on success, 2 on usage or validation errors (diagnostics on
//! stderr), 3 when verification finds a duplicate window.

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use dbseq::{
    cfl_factorize, fkm_sequence, fsr_stream, greedy_sequence_with_cap, head, necklace_count,
    next_max, next_min, next_min_in_place, sequence_length, verify_debruijn_with_cap, Letter,
    SequenceOrder, ShiftScratch, Word, DEFAULT_CAP,
};

#[derive(Parser)]
#[command(
    name = "dbseq",
    version,
    about = "Prefer-min and prefer-max De Bruijn sequences via a linear-time shift rule"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Min,
    Max,
}

impl From<OrderArg> for SequenceOrder {
    fn from(arg: OrderArg) -> Self {
        match arg {
            OrderArg::Min => SequenceOrder::PreferMin,
            OrderArg::Max => SequenceOrder::PreferMax,
        }
    }
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum FormatArg {
    /// Contiguous decimal digits (k <= 10)
    Digits,
    /// Comma-separated letter values
    Csv,
    /// One raw octet per letter (k <= 256)
    Binary,
}

#[derive(Clone, Copy, ValueEnum)]
enum EngineArg {
    /// Step the shift rule state by state
    Fsr,
    /// Concatenate primitive roots of successive expanded Lyndon words
    Fkm,
    /// Greedy reference construction (materializes the whole sequence)
    Greedy,
}

#[derive(Subcommand)]
enum Command {
    /// Print the successor of a register state (n is inferred from its length)
    Next {
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value_t = OrderArg::Min)]
        order: OrderArg,
        #[arg(long)]
        state: String,
    },
    /// Stream a sequence to stdout
    Generate {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value_t = OrderArg::Min)]
        order: OrderArg,
        /// Stop after this many letters (default: one full period)
        #[arg(long)]
        limit: Option<u128>,
        #[arg(long, value_enum, default_value_t = FormatArg::Digits)]
        format: FormatArg,
        #[arg(long, value_enum, default_value_t = EngineArg::Fsr)]
        engine: EngineArg,
        /// Cap on jobs that materialize all k^n windows
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u64,
    },
    /// Generate a sequence and check that all cyclic n-windows are distinct
    Verify {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value_t = OrderArg::Min)]
        order: OrderArg,
        #[arg(long, value_enum, default_value_t = EngineArg::Fsr)]
        engine: EngineArg,
        /// Check this sequence instead of generating one
        #[arg(long)]
        sequence: Option<String>,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u64,
    },
    /// Test whether a word is the head of its necklace
    Head {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        word: String,
    },
    /// Print the Chen-Fox-Lyndon factorization of a word
    Cfl {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        word: String,
    },
    /// Print the necklace count Z_k(n) and the sequence length k^n
    Stats {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
    },
    /// Measure the mean cost of one shift-rule step
    Bench {
        #[arg(long)]
        k: u32,
        /// Comma-separated register orders to measure
        #[arg(long = "n-list", value_delimiter = ',', required = true)]
        n_list: Vec<u32>,
        #[arg(long, default_value_t = 10_000)]
        samples: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match command {
        Command::Next { k, order, state } => {
            let state = Word::parse(&state, k)?;
            let next = match order {
                OrderArg::Min => next_min(&state)?,
                OrderArg::Max => next_max(&state)?,
            };
            println!("{next}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Generate {
            n,
            k,
            order,
            limit,
            format,
            engine,
            cap,
        } => {
            check_format(format, k)?;
            let order = order.into();
            let stdout = io::stdout();
            let mut out = BufWriter::new(stdout.lock());
            let written = match engine {
                EngineArg::Fsr => {
                    let total = limit
                        .or_else(|| sequence_length(n, k))
                        .ok_or("sequence length overflows 128 bits; pass --limit")?;
                    write_stream(fsr_stream(n, k, order)?, total, format, &mut out)?
                }
                EngineArg::Fkm => {
                    let total = limit.unwrap_or(u128::MAX);
                    write_stream(fkm_sequence(n, k, order)?, total, format, &mut out)?
                }
                EngineArg::Greedy => {
                    let word = greedy_sequence_with_cap(n, k, order, cap)?;
                    let total = limit.unwrap_or(u128::MAX);
                    write_stream(word.letters().iter().copied(), total, format, &mut out)?
                }
            };
            if written > 0 && format != FormatArg::Binary {
                out.write_all(b"\n")?;
            }
            out.flush()?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            n,
            k,
            order,
            engine,
            sequence,
            cap,
        } => {
            let word = match sequence {
                Some(text) => Word::parse(&text, k)?,
                None => materialize(n, k, order.into(), engine, cap)?,
            };
            let report = verify_debruijn_with_cap(&word, n, cap)?;
            println!("{report}");
            if report.is_valid() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(3))
            }
        }
        Command::Head { k, word } => {
            let word = Word::parse(&word, k)?;
            println!("{}", head(&word)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Cfl { k, word } => {
            let word = Word::parse(&word, k)?;
            let factors = cfl_factorize(&word)?;
            let rendered: Vec<String> = factors
                .factor_words()
                .iter()
                .map(|f| f.to_string())
                .collect();
            println!("{}", rendered.join("\u{b7}"));
            Ok(ExitCode::SUCCESS)
        }
        Command::Stats { n, k } => {
            let count = necklace_count(n, k)?;
            let length = BigUint::from(k).pow(n);
            println!("Z_{k}({n}) = {count}");
            println!("{k}^{n} = {length}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Bench { k, n_list, samples } => {
            if samples == 0 {
                return Err("samples must be positive".into());
            }
            for &n in &n_list {
                let mut state = vec![0 as Letter; n as usize];
                let mut scratch = ShiftScratch::new();
                // Warm up along the orbit so the timed calls see settled
                // buffers and a representative mix of states.
                let warmup = samples.min(1_000);
                for _ in 0..warmup {
                    next_min_in_place(&mut state, k, &mut scratch)?;
                }
                let timer = Instant::now();
                for _ in 0..samples {
                    next_min_in_place(&mut state, k, &mut scratch)?;
                }
                let mean = timer.elapsed().as_nanos() as f64 / samples as f64;
                println!("n={n} ns_per_call={mean:.2}");
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn check_format(format: FormatArg, k: u32) -> Result<(), String> {
    match format {
        FormatArg::Digits if k > 10 => {
            Err(format!("digits format requires k <= 10, got {k}; use csv"))
        }
        FormatArg::Binary if k > 256 => {
            Err(format!("binary format requires k <= 256, got {k}"))
        }
        _ => Ok(()),
    }
}

fn write_stream<I>(
    letters: I,
    limit: u128,
    format: FormatArg,
    out: &mut impl Write,
) -> io::Result<u128>
where
    I: IntoIterator<Item = Letter>,
{
    let mut written = 0u128;
    for letter in letters {
        if written == limit {
            break;
        }
        match format {
            FormatArg::Digits => out.write_all(&[b'0' + letter as u8])?,
            FormatArg::Csv => {
                if written > 0 {
                    out.write_all(b",")?;
                }
                write!(out, "{letter}")?;
            }
            FormatArg::Binary => out.write_all(&[letter as u8])?,
        }
        written += 1;
    }
    Ok(written)
}

fn materialize(
    n: u32,
    k: u32,
    order: SequenceOrder,
    engine: EngineArg,
    cap: u64,
) -> Result<Word, Box<dyn std::error::Error>> {
    match engine {
        EngineArg::Greedy => Ok(greedy_sequence_with_cap(n, k, order, cap)?),
        EngineArg::Fsr | EngineArg::Fkm => {
            let needed = sequence_length(n, k).unwrap_or(u128::MAX);
            if needed > cap as u128 {
                return Err(dbseq::Error::CapExceeded {
                    required: needed,
                    cap: cap as u128,
                }
                .into());
            }
            let letters: Vec<Letter> = match engine {
                EngineArg::Fsr => fsr_stream(n, k, order)?.take(needed as usize).collect(),
                _ => fkm_sequence(n, k, order)?.collect(),
            };
            Ok(Word::new(letters, k)?)
        }
    }
}
