//! Command-line front end over the repetend library: exact expansion,
//! period queries, key generation, the demonstration cipher, and the
//! counting reports. Output formats are fixed so they can be golden-tested.

pub mod keyfile;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};

use repetend::census;
use repetend::cipher::{self, CipherText};
use repetend::expansion::{self, DEFAULT_MAX_DIGITS};
use repetend::keystream::{self, KeyDescriptor};
use repetend::numtheory::{self, SearchPolicy};

/// Command-line fraction in the form `A/B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fraction {
    pub numerator: u64,
    pub denominator: u64,
}

impl FromStr for Fraction {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s.starts_with('-') {
            return Err("negative fractions are not supported".into());
        }
        let (a, b) = s
            .split_once('/')
            .ok_or_else(|| String::from("expected the form A/B, like 1/7"))?;
        let numerator = a
            .parse()
            .map_err(|_| format!("numerator {a:?} is not an unsigned 64-bit integer"))?;
        let denominator = b
            .parse()
            .map_err(|_| format!("denominator {b:?} is not an unsigned 64-bit integer"))?;
        Ok(Fraction {
            numerator,
            denominator,
        })
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "repetend",
    version,
    about = "Repeating-decimal toolkit: exact expansions, repetend keys, and a demonstration cipher"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

/// Exactly one text source: a file or a literal argument.
#[derive(Debug, Args)]
#[group(id = "source", required = true, multiple = false)]
pub struct SourceArgs {
    /// Read the text from this file
    #[arg(long = "in", value_name = "FILE")]
    pub input: Option<PathBuf>,
    /// Take the text from the command line
    #[arg(long, value_name = "STR")]
    pub text: Option<String>,
}

impl SourceArgs {
    fn load(&self) -> anyhow::Result<String> {
        match (&self.input, &self.text) {
            (Some(path), None) => fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display())),
            (None, Some(text)) => Ok(text.clone()),
            _ => unreachable!("argument group enforces exactly one source"),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the exact decimal expansion of a fraction
    Expand {
        /// Fraction in the form A/B
        #[arg(allow_hyphen_values = true)]
        fraction: Fraction,
        /// Fractional-digit budget before giving up
        #[arg(long, value_name = "N", default_value_t = DEFAULT_MAX_DIGITS)]
        max_digits: usize,
    },
    /// Print the repetend length of fractions with this denominator
    Period {
        denominator: u64,
    },
    /// Generate a key and print or save its descriptor file
    Keygen {
        /// Smallest acceptable repetend length
        #[arg(long, value_name = "L", default_value_t = 500)]
        min_period: u64,
        /// Search only prime denominators
        #[arg(long)]
        primes_only: bool,
        /// Seed for the deterministic numerator choice
        #[arg(long, value_name = "S", default_value_t = 0)]
        seed: u64,
        /// Write the key file here instead of standard output
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Encrypt text with a key file
    Encrypt {
        /// Key descriptor file
        #[arg(long, value_name = "FILE")]
        key: PathBuf,
        #[command(flatten)]
        source: SourceArgs,
    },
    /// Decrypt text with a key file
    Decrypt {
        /// Key descriptor file
        #[arg(long, value_name = "FILE")]
        key: PathBuf,
        #[command(flatten)]
        source: SourceArgs,
    },
    /// Count pure-repetend fractions with denominators up to a bound
    Census {
        /// Largest denominator to include
        #[arg(long, value_name = "N")]
        max: u64,
    },
    /// Count coprime pairs {a, b} with 1 <= a < b <= N
    Coprimes {
        /// Largest member to include
        #[arg(long, value_name = "N")]
        max: u64,
        /// Count only pairs of odd numbers
        #[arg(long)]
        odd_only: bool,
    },
    /// Show where an odd number's multiples fall in the series 3, 5, 7, ...
    OddAnalysis {
        /// The odd number to analyze
        #[arg(long, value_name = "O")]
        odd: u64,
        /// How many multiples to tabulate
        #[arg(long, value_name = "M")]
        multipliers: u64,
    },
}

fn load_key(path: &Path) -> anyhow::Result<KeyDescriptor> {
    let text =
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(keyfile::parse(&text)?)
}

/// Round-trip checks above this many digits are skipped; reconstruction
/// cost grows quadratically with the period.
const VERIFY_RECONSTRUCT_LIMIT: u64 = 10_000;

/// Confirms a generated key by the digit route before it is handed out.
///
/// The generator's period claim comes from order arithmetic; here the
/// repetend is produced by actual long division and must close after
/// exactly the claimed number of digits. Moderate periods are additionally
/// reconstructed back into the key fraction, and prime denominators must
/// agree with the full-reptend classification.
fn verify_generated_key(key: &KeyDescriptor, min_period: u64) -> anyhow::Result<()> {
    let claimed = key.period()?;
    anyhow::ensure!(
        claimed >= min_period,
        "generated period {claimed} is below the requested {min_period}"
    );
    let unit = expansion::make_rational(1, key.denominator())?;
    let e = expansion::expand(&unit, claimed as usize)
        .context("digit cycle is longer than the order arithmetic claims")?;
    anyhow::ensure!(
        e.repetend().len() as u64 == claimed && e.pre_period().is_empty(),
        "digit cycle of 1/{} disagrees with the claimed period {claimed}",
        key.denominator()
    );
    if claimed <= VERIFY_RECONSTRUCT_LIMIT {
        anyhow::ensure!(
            expansion::reconstruct(&e)? == unit,
            "expansion of 1/{} does not reconstruct",
            key.denominator()
        );
    }
    if numtheory::is_prime(key.denominator()) {
        let full = numtheory::is_full_reptend_prime(key.denominator());
        anyhow::ensure!(
            full == (claimed == key.denominator() - 1),
            "full-reptend classification disagrees with the measured period"
        );
    }
    Ok(())
}

/// Executes a parsed invocation, writing its report to `out`.
///
/// Cipher output is written verbatim with no added newline, so encrypt and
/// decrypt compose byte-exactly; every other subcommand is line-oriented.
pub fn run(cli: &Cli, out: &mut dyn Write) -> anyhow::Result<()> {
    match &cli.command {
        Command::Expand {
            fraction,
            max_digits,
        } => {
            let r = expansion::make_rational(fraction.numerator, fraction.denominator)?;
            let e = expansion::expand(&r, *max_digits)?;
            writeln!(out, "{e}")?;
        }
        Command::Period { denominator } => {
            writeln!(out, "{}", expansion::period_length(*denominator)?)?;
        }
        Command::Keygen {
            min_period,
            primes_only,
            seed,
            out: path,
        } => {
            let policy = if *primes_only {
                SearchPolicy::PrimesOnly
            } else {
                SearchPolicy::AnyCoprimeToTen
            };
            let key = keystream::generate_key(*min_period, policy, *seed)?;
            verify_generated_key(&key, *min_period)?;
            let text = keyfile::render(&key);
            match path {
                Some(p) => fs::write(p, &text)
                    .with_context(|| format!("writing {}", p.display()))?,
                None => out.write_all(text.as_bytes())?,
            }
        }
        Command::Encrypt { key, source } => {
            let key = load_key(key)?;
            let plaintext = source.load()?;
            let ciphertext = cipher::encrypt(&plaintext, &key)?;
            out.write_all(ciphertext.as_str().as_bytes())?;
        }
        Command::Decrypt { key, source } => {
            let key = load_key(key)?;
            let ciphertext = CipherText::new(source.load()?)?;
            out.write_all(cipher::decrypt(&ciphertext, &key).as_bytes())?;
        }
        Command::Census { max } => {
            out.write_all(census::repetend_census(*max)?.render_csv().as_bytes())?;
        }
        Command::Coprimes { max, odd_only } => {
            let count = if *odd_only {
                census::count_odd_coprime_pairs(*max)
            } else {
                census::count_coprime_pairs(*max)
            };
            writeln!(out, "{count}")?;
        }
        Command::OddAnalysis { odd, multipliers } => {
            let first = census::first_position(*odd)?;
            let window = census::coprime_count_in_odd_window(*odd)?;
            // the naive bound counts every window member except the value
            // itself as coprime; only prime values reach it
            let bound = odd - 1;
            writeln!(out, "odd={odd}")?;
            writeln!(out, "first_position={first}")?;
            writeln!(out, "window_coprime_count={window}")?;
            writeln!(out, "window_upper_bound={bound}")?;
            writeln!(out, "window_meets_upper_bound={}", window == bound)?;
            writeln!(out, "m,position,value")?;
            for (m, entry) in census::odd_multiple_positions(*odd, *multipliers)? {
                writeln!(out, "{m},{},{}", entry.position(), entry.value())?;
            }
        }
    }
    Ok(())
}
