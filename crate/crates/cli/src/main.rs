mod args;

use std::fmt::Display;
use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;
use std::process::ExitCode;

use clap::Parser;

use latin_djokovic::analysis::{BigramTable, Candidate, Cracker, FrequencyTable, Scorer};
use latin_djokovic::bench::{emit_report, generate_corpus, BenchConfig, ReportFormat};
use latin_djokovic::{generate_key, AlphabetMode, Error, Execution, LatinCipher, LatinKey};

use args::{
    BenchArgs, CipherArg, Cli, Command, CrackArgs, InputArgs, KeyArgs, KeygenArgs, TransformArgs,
};

/// Exit status classes: 2 for usage and validation, 3 for bad data.
#[derive(Debug)]
enum CliError {
    Usage(String),
    Data(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Data(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Data(m) => m,
        }
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        match err {
            Error::TextTooLong { .. }
            | Error::EmptyCiphertext
            | Error::PlayfairCiphertext(_)
            | Error::EmptyCorpus
            | Error::EmptyRecords => CliError::Data(err.to_string()),
            _ => CliError::Usage(err.to_string()),
        }
    }
}

fn usage(context: impl Display, err: impl Display) -> CliError {
    CliError::Usage(format!("{context}: {err}"))
}

fn data(context: impl Display, err: impl Display) -> CliError {
    CliError::Data(format!("{context}: {err}"))
}

type CliResult<T = ()> = Result<T, CliError>;

/// Input text with at most one trailing newline split off.
struct Input {
    body: String,
    newline: bool,
}

impl Input {
    fn read(args: &InputArgs) -> CliResult<Input> {
        let bytes = match (&args.text, &args.input) {
            (Some(text), _) => text.clone().into_bytes(),
            (None, Some(path)) => {
                fs::read(path).map_err(|e| data(format!("reading {}", path.display()), e))?
            }
            (None, None) => {
                let mut buf = Vec::new();
                io::stdin()
                    .read_to_end(&mut buf)
                    .map_err(|e| data("reading standard input", e))?;
                buf
            }
        };
        let mut body = String::from_utf8(bytes)
            .map_err(|_| CliError::Data("input is not valid UTF-8".into()))?;
        let newline = body.ends_with('\n');
        if newline {
            body.pop();
        }
        Ok(Input { body, newline })
    }

    fn finish(&self, transformed: String) -> String {
        let mut out = transformed;
        if self.newline {
            out.push('\n');
        }
        out
    }
}

fn write_output(out: Option<&Path>, bytes: &[u8]) -> CliResult {
    match out {
        Some(path) => {
            fs::write(path, bytes).map_err(|e| data(format!("writing {}", path.display()), e))
        }
        None => {
            let mut stdout = io::stdout().lock();
            stdout
                .write_all(bytes)
                .and_then(|_| stdout.flush())
                .map_err(|e| data("writing standard output", e))
        }
    }
}

fn read_key(args: &KeyArgs) -> CliResult<LatinKey> {
    let line = match (&args.key, &args.key_file) {
        (Some(line), _) => line.clone(),
        (None, Some(path)) => fs::read_to_string(path)
            .map_err(|e| usage(format!("reading key file {}", path.display()), e))?,
        (None, None) => {
            return Err(CliError::Usage(
                "a key is required: --key, --key-file or LATIN_DJOKOVIC_KEY".into(),
            ))
        }
    };
    line.parse::<LatinKey>()
        .map_err(|e| usage("invalid key", e))
}

fn keygen(args: KeygenArgs) -> CliResult {
    let a = u32::try_from(args.a).map_err(|_| CliError::from(Error::KeyRange(args.a)))?;
    let key = generate_key(a, args.seed, args.mode.into())?;
    write_output(None, key.to_line().as_bytes())
}

fn transform(args: TransformArgs, encrypt: bool) -> CliResult {
    let key = read_key(&args.key)?;
    let input = Input::read(&args.input)?;
    let cipher = LatinCipher::new(key).with_max_len(args.max_len);
    let result = if encrypt {
        cipher.encipher(&input.body)
    } else {
        cipher.decipher(&input.body)
    };
    let text = result.map_err(|e| match e {
        Error::TextTooLong { .. } => data(e, "raise the limit with --max-len"),
        other => other.into(),
    })?;
    write_output(args.out.as_deref(), input.finish(text).as_bytes())
}

fn load_scorer(args: &CrackArgs) -> CliResult<Scorer> {
    let monograms = match &args.freq_table {
        Some(path) => fs::read_to_string(path)
            .map_err(|e| usage(format!("reading {}", path.display()), e))?
            .parse::<FrequencyTable>()?,
        None => FrequencyTable::english().clone(),
    };
    let bigrams = match &args.bigram_table {
        Some(path) => fs::read_to_string(path)
            .map_err(|e| usage(format!("reading {}", path.display()), e))?
            .parse::<BigramTable>()?,
        None => BigramTable::english().clone(),
    };
    Ok(Scorer::new(monograms, Some(&bigrams)))
}

fn preview(text: &str, limit: usize) -> String {
    let mut out: String = text
        .chars()
        .take(limit)
        .map(|c| if c.is_control() { ' ' } else { c })
        .collect();
    if text.chars().count() > limit {
        out.push_str("...");
    }
    out
}

fn candidate_lines<K>(
    candidates: &[Candidate<K>],
    describe: impl Fn(&K) -> String,
    limit: usize,
) -> String {
    candidates
        .iter()
        .enumerate()
        .map(|(i, c)| {
            format!(
                "{}\t{}\t{}\t{}\n",
                i + 1,
                describe(&c.key),
                c.score,
                preview(&c.plaintext, limit)
            )
        })
        .collect()
}

fn crack(args: CrackArgs) -> CliResult {
    let input = Input::read(&args.input)?;
    if input.body.is_empty() {
        return Err(Error::EmptyCiphertext.into());
    }
    let scorer = load_scorer(&args)?;
    let execution = if args.sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    let cracker = Cracker::new(&scorer, execution);
    let lines = match args.cipher {
        CipherArg::Latin => {
            let mode: AlphabetMode = args.mode.into();
            let report = cracker.crack_latin(&input.body, mode)?;
            candidate_lines(
                report.top(args.top),
                |k| format!("a={} k={}", k.a(), k.k_init()),
                args.preview,
            )
        }
        CipherArg::Caesar => {
            let report = cracker.crack_caesar(&input.body)?;
            candidate_lines(
                report.top(args.top),
                |k| format!("shift={}", k.shift()),
                args.preview,
            )
        }
    };
    write_output(None, lines.as_bytes())
}

fn bench(args: BenchArgs) -> CliResult {
    let format: ReportFormat = args.format.parse()?;
    let config = BenchConfig {
        repetitions: args.reps,
        seed: args.seed,
        execution: if args.parallel {
            Execution::Parallel
        } else {
            Execution::Sequential
        },
        ..BenchConfig::default()
    };
    let corpus = generate_corpus(&args.lengths, args.seed)?;
    let records = config.run(&corpus)?;
    let report = emit_report(&records, format)?;
    write_output(args.out.as_deref(), &report)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Keygen(args) => keygen(args),
        Command::Encrypt(args) => transform(args, true),
        Command::Decrypt(args) => transform(args, false),
        Command::Crack(args) => crack(args),
        Command::Bench(args) => bench(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {}", err.message());
            ExitCode::from(err.code())
        }
    }
}
