//! Command-line front end: analysis, certification, series dumps, the
//! bound-vs-enumeration table, and the exact closed-form growth inequality.
//!
//! Exit codes: 0 = proved or cited (and any non-certify success),
//! 1 = empirical verdict, 2 = argument or pattern parse error,
//! 3 = inconclusive verdict, 4 = runtime failure (budget, internal).

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use avoidance::{
    analyze, approx_decimal, certify, compare, comparison_csv, comparison_json, default_lambda,
    golod_series, growth_closed_form, instance_series, min_growth_ratio, Error, Pattern, Result,
    DEFAULT_BUDGET,
};

#[derive(Parser)]
#[command(
    name = "avoid",
    version,
    about = "Certify avoidability of word patterns via power-series lower bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Report a pattern's shape: variables, multiplicities, length thresholds
    Analyze {
        /// Pattern text, or zimin:K for the K-variable sesquipower
        pattern: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Certify avoidability over a target alphabet
    Certify {
        /// Pattern text, or zimin:K
        pattern: String,
        /// Target alphabet size
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..=4))]
        target: u32,
        /// Series truncation order for the verification
        #[arg(long, default_value_t = 200)]
        order: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the avoider lower-bound series for a pattern
    Golod {
        /// Pattern text, or zimin:K
        pattern: String,
        /// Alphabet size
        #[arg(long)]
        m: u32,
        /// Truncation order
        #[arg(long, default_value_t = 200)]
        order: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Tabulate the series bound against exhaustive enumeration
    Compare {
        /// Pattern text, or zimin:K
        pattern: String,
        /// Alphabet size
        #[arg(long)]
        m: u32,
        /// Largest word length to enumerate
        #[arg(long = "n-max")]
        n_max: usize,
        /// Node budget for the enumeration (default 10^8, or GOLOD_BUDGET)
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Evaluate the closed-form growth inequality m - L >= L*(m/(L^mu - m))^e
    Lemma5 {
        /// Alphabet size
        #[arg(long)]
        m: u32,
        /// Minimum multiplicity of every variable
        #[arg(long)]
        mu: u32,
        /// Growth ratio as P/Q (default m - 3/50)
        #[arg(long)]
        lambda: Option<String>,
        /// Exponent on the geometric correction term
        #[arg(long, default_value_t = 2)]
        exponent: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::EmptyPattern
                | Error::BadSymbol(_)
                | Error::InvalidArgument(_)
                | Error::InvalidTarget(_) => 2,
                _ => 4,
            }
        }
    };
    std::process::exit(code);
}

fn run(command: Command) -> Result<i32> {
    match command {
        Command::Analyze { pattern, format } => {
            let p = parse_pattern(&pattern)?;
            let report = analyze(&p);
            match format {
                Format::Json => println!("{}", report.to_json()),
                Format::Text => print!("{}", report.to_text()),
                Format::Csv => {
                    return Err(Error::InvalidArgument(
                        "analyze has no csv form; use json or text".into(),
                    ))
                }
            }
            Ok(0)
        }
        Command::Certify { pattern, target, order, format } => {
            let p = parse_pattern(&pattern)?;
            let cert = certify(&p, target, order)?;
            match format {
                Format::Json => println!("{}", cert.to_json()),
                Format::Text => print!("{}", cert.to_text()),
                Format::Csv => {
                    return Err(Error::InvalidArgument(
                        "certify has no csv form; use json or text".into(),
                    ))
                }
            }
            Ok(cert.exit_code())
        }
        Command::Golod { pattern, m, order, format } => {
            let p = parse_pattern(&pattern)?;
            let c = instance_series(p.occurrence_counts(), m, order)?;
            let b = golod_series(m, &c, order)?;
            let growth = min_growth_ratio(&b).ok();
            match format {
                Format::Text => {
                    print!("{}", b.dump(m));
                    match b.first_negative() {
                        Some(n) => println!("first negative at n={n}"),
                        None => println!("no negative coefficient"),
                    }
                    match &growth {
                        Some(r) => println!(
                            "min growth ratio: {}/{} (~{})",
                            r.numer(),
                            r.denom(),
                            approx_decimal(r, 6)
                        ),
                        None => println!("min growth ratio: not applicable"),
                    }
                }
                Format::Json => {
                    #[derive(Serialize)]
                    struct GolodJson {
                        pattern: String,
                        m: u32,
                        order: usize,
                        coefficients: Vec<String>,
                        first_negative: Option<usize>,
                        min_growth: Option<RationalJson>,
                    }
                    let doc = GolodJson {
                        pattern: p.render(),
                        m,
                        order,
                        coefficients: b.coeffs().iter().map(|c| c.to_string()).collect(),
                        first_negative: b.first_negative(),
                        min_growth: growth.as_ref().map(RationalJson::from),
                    };
                    println!("{}", serde_json::to_string(&doc).expect("serialization"));
                }
                Format::Csv => {
                    return Err(Error::InvalidArgument(
                        "golod has no csv form; use json or text".into(),
                    ))
                }
            }
            Ok(0)
        }
        Command::Compare { pattern, m, n_max, budget, format } => {
            let p = parse_pattern(&pattern)?;
            let budget = resolve_budget(budget)?;
            let rows = compare(&p, m, n_max, budget)?;
            match format {
                Format::Csv | Format::Text => print!("{}", comparison_csv(&rows)),
                Format::Json => println!("{}", comparison_json(&rows)),
            }
            Ok(0)
        }
        Command::Lemma5 { m, mu, lambda, exponent, format } => {
            let lambda = match lambda {
                Some(text) => parse_rational(&text)?,
                None => default_lambda(m),
            };
            let outcome = growth_closed_form(m, mu, &lambda, exponent);
            let check = match outcome {
                Ok(check) => Some(check),
                Err(Error::NotApplicable(_)) => None,
                Err(e) => return Err(e),
            };
            match format {
                Format::Text => {
                    println!("m:              {m}");
                    println!("mu:             {mu}");
                    println!(
                        "lambda:         {}/{} (~{})",
                        lambda.numer(),
                        lambda.denom(),
                        approx_decimal(&lambda, 6)
                    );
                    println!("exponent:       {exponent}");
                    match &check {
                        None => println!("not applicable: lambda^mu does not exceed m"),
                        Some(c) => {
                            println!(
                                "side condition: {} (m/(lambda^mu - m) <= 1)",
                                c.side_condition
                            );
                            println!(
                                "m - lambda:     {}/{} (~{})",
                                c.lhs.numer(),
                                c.lhs.denom(),
                                approx_decimal(&c.lhs, 6)
                            );
                            println!(
                                "right side:     {}/{} (~{})",
                                c.rhs.numer(),
                                c.rhs.denom(),
                                approx_decimal(&c.rhs, 6)
                            );
                            println!("holds:          {}", c.holds);
                        }
                    }
                }
                Format::Json => {
                    #[derive(Serialize)]
                    struct ClosedFormJson {
                        m: u32,
                        mu: u32,
                        lambda: RationalJson,
                        exponent: u32,
                        applicable: bool,
                        side_condition: Option<bool>,
                        lhs: Option<RationalJson>,
                        rhs: Option<RationalJson>,
                        holds: Option<bool>,
                    }
                    let doc = ClosedFormJson {
                        m,
                        mu,
                        lambda: RationalJson::from(&lambda),
                        exponent,
                        applicable: check.is_some(),
                        side_condition: check.as_ref().map(|c| c.side_condition),
                        lhs: check.as_ref().map(|c| RationalJson::from(&c.lhs)),
                        rhs: check.as_ref().map(|c| RationalJson::from(&c.rhs)),
                        holds: check.as_ref().map(|c| c.holds),
                    };
                    println!("{}", serde_json::to_string(&doc).expect("serialization"));
                }
                Format::Csv => {
                    return Err(Error::InvalidArgument(
                        "lemma5 has no csv form; use json or text".into(),
                    ))
                }
            }
            Ok(0)
        }
    }
}

#[derive(Serialize)]
struct RationalJson {
    num: String,
    den: String,
}

impl From<&BigRational> for RationalJson {
    fn from(r: &BigRational) -> Self {
        RationalJson { num: r.numer().to_string(), den: r.denom().to_string() }
    }
}

/// Pattern arguments accept a literal pattern or `zimin:K`.
fn parse_pattern(text: &str) -> Result<Pattern> {
    if let Some(index) = text.strip_prefix("zimin:") {
        let k: u32 = index.parse().map_err(|_| {
            Error::InvalidArgument(format!("bad sesquipower index {index:?}: expected zimin:K"))
        })?;
        Pattern::zimin(k)
    } else {
        Pattern::parse(text)
    }
}

/// Exact rational from `P/Q` or a bare integer.
fn parse_rational(text: &str) -> Result<BigRational> {
    let bad = || Error::InvalidArgument(format!("bad rational {text:?}: expected P/Q"));
    let (num, den) = match text.split_once('/') {
        Some((num, den)) => (num, den),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den == BigInt::from(0) {
        return Err(Error::InvalidArgument("zero denominator".into()));
    }
    Ok(BigRational::new(num, den))
}

/// Budget precedence: explicit flag, then GOLOD_BUDGET, then the default.
fn resolve_budget(flag: Option<u64>) -> Result<u64> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var("GOLOD_BUDGET") {
        Ok(text) => text.trim().parse().map_err(|_| {
            Error::InvalidArgument(format!("GOLOD_BUDGET is not an integer: {text:?}"))
        }),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}
