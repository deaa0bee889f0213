//! `zetareg`: Hurwitz zeta values, Stieltjes constants, regularized
//! trigonometric series and identity verification from the command line.

mod render;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use zetareg::hurwitz::{hurwitz_hasse, hurwitz_zeta, HurwitzQuery, HASSE_DEFAULT_MAX_TERMS};
use zetareg::identities::{self, DEFAULT_GRID, MIN_GRID};
use zetareg::regsum::{
    regularized_limit, trig_dirichlet_sum, ExtrapolationPath, Parity, Scale, Trig, TrigSeriesSpec,
    Weight,
};
use zetareg::stieltjes::{stieltjes_gamma, StieltjesQuery};
use zetareg::{Error, EvalResult};

use render::Format;

#[derive(Debug, Parser)]
#[command(name = "zetareg", version, about)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// ∂ₛᵐ ζ(s, x) for m = 0, 1, 2.
    Zeta {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_real)]
        s: f64,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_real)]
        x: f64,
        /// Derivative order in s.
        #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=2))]
        deriv: u8,
        #[arg(long, value_enum, default_value_t = ZetaMethod::Em)]
        method: ZetaMethod,
    },
    /// Generalized Stieltjes constant γₙ(x), n = 0 or 1.
    Stieltjes {
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=1))]
        n: u8,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_real)]
        x: f64,
    },
    /// Σ w(n)·trig·P(n)^(s−1) at a fixed s < 1, or its limit as s → s*.
    Regsum {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_real)]
        x: f64,
        #[arg(long, value_enum)]
        trig: TrigArg,
        #[arg(long, value_enum, default_value_t = WeightArg::Unit)]
        weight: WeightArg,
        #[arg(long, value_enum, default_value_t = ParityArg::All)]
        parity: ParityArg,
        #[arg(long, value_enum, default_value_t = ScaleArg::N)]
        scale: ScaleArg,
        /// Evaluate the series at this s instead of taking a limit.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_real, conflicts_with = "starget")]
        s: Option<f64>,
        /// Limit point s*.
        #[arg(long, default_value_t = 1.0, value_parser = parse_real)]
        starget: f64,
        /// First step of the extrapolation path.
        #[arg(long, default_value_t = ExtrapolationPath::DEFAULT_H0, value_parser = parse_real)]
        h0: f64,
        /// Number of halvings of the extrapolation step.
        #[arg(long, default_value_t = ExtrapolationPath::DEFAULT_LEVELS)]
        levels: usize,
    },
    /// Check the identity catalogue; exits 1 if any case fails.
    Verify {
        /// Run a single case.
        #[arg(long)]
        id: Option<String>,
        /// Grid density.
        #[arg(long, default_value_t = DEFAULT_GRID, value_parser = parse_grid)]
        grid: usize,
        /// Multiplier applied to every tolerance.
        #[arg(long, default_value_t = 1.0, value_parser = parse_positive)]
        tol_scale: f64,
        /// List the catalogue instead of running it.
        #[arg(long, conflicts_with_all = ["id"])]
        list: bool,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ZetaMethod {
    Em,
    Hasse,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TrigArg {
    #[value(alias = "sine")]
    Sin,
    #[value(alias = "cosine")]
    Cos,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum WeightArg {
    Unit,
    #[value(alias = "log_n")]
    Logn,
    #[value(alias = "log_2pi_n")]
    Log2pin,
    #[value(alias = "gamma_plus_log_2pi_n")]
    GammaLog2pin,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ParityArg {
    #[value(alias = "all_n")]
    All,
    #[value(alias = "alternating")]
    Alt,
    #[value(alias = "odd_only")]
    Odd,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ScaleArg {
    #[value(alias = "n_power")]
    N,
    #[value(alias = "two_pi_n_power")]
    TwoPiN,
}

/// A decimal or a fraction p/q.
fn parse_real(text: &str) -> Result<f64, String> {
    let v = match text.split_once('/') {
        Some((p, q)) => {
            let p: f64 = p
                .trim()
                .parse()
                .map_err(|e| format!("bad numerator: {e}"))?;
            let q: f64 = q
                .trim()
                .parse()
                .map_err(|e| format!("bad denominator: {e}"))?;
            if q == 0.0 {
                return Err("zero denominator".into());
            }
            p / q
        }
        None => text.trim().parse().map_err(|e| format!("{e}"))?,
    };
    if v.is_finite() {
        Ok(v)
    } else {
        Err("value must be finite".into())
    }
}

fn parse_grid(text: &str) -> Result<usize, String> {
    let g: usize = text.trim().parse().map_err(|e| format!("{e}"))?;
    if g >= MIN_GRID {
        Ok(g)
    } else {
        Err(format!("grid density must be at least {MIN_GRID}"))
    }
}

fn parse_positive(text: &str) -> Result<f64, String> {
    let v = parse_real(text)?;
    if v > 0.0 {
        Ok(v)
    } else {
        Err("value must be positive".into())
    }
}

enum Failure {
    Usage(String),
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Compute(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Compute(format!("write failed: {e}"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Ok(false) when verification ran but something failed.
fn run(cli: &Cli) -> Result<bool, Failure> {
    let mut out: Box<dyn Write> = match &cli.out {
        Some(path) => Box::new(BufWriter::new(File::create(path).map_err(|e| {
            Failure::Usage(format!("cannot create {}: {e}", path.display()))
        })?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let ok = match &cli.command {
        Command::Zeta {
            s,
            x,
            deriv,
            method,
        } => {
            let r = match method {
                ZetaMethod::Em => hurwitz_zeta(HurwitzQuery::new(*s, *x, *deriv))?,
                ZetaMethod::Hasse => {
                    if *deriv != 0 {
                        return Err(Failure::Usage(
                            "--method hasse supports --deriv 0 only".into(),
                        ));
                    }
                    hurwitz_hasse(*s, *x, HASSE_DEFAULT_MAX_TERMS)?
                }
            };
            emit_value(&mut *out, cli.format, &r)?
        }
        Command::Stieltjes { n, x } => {
            let r = stieltjes_gamma(StieltjesQuery::new(*n, *x))?;
            emit_value(&mut *out, cli.format, &r)?
        }
        Command::Regsum {
            x,
            trig,
            weight,
            parity,
            scale,
            s,
            starget,
            h0,
            levels,
        } => {
            let (trig, weight, parity, scale) =
                (trig.into(), weight.into(), parity.into(), scale.into());
            let r = match s {
                Some(s) => {
                    trig_dirichlet_sum(&TrigSeriesSpec::new(*x, trig, weight, parity, *s, scale))?
                }
                None => {
                    let path = ExtrapolationPath::new(*starget, *h0, *levels);
                    path.validate().map_err(|e| Failure::Usage(e.to_string()))?;
                    regularized_limit(*x, trig, weight, parity, scale, &path)?
                }
            };
            emit_value(&mut *out, cli.format, &r)?
        }
        Command::Verify {
            id,
            grid,
            tol_scale,
            list,
        } => {
            if *list {
                render::catalogue(&mut *out, cli.format, &identities::registry())?;
                true
            } else {
                let report = match id {
                    Some(id) => {
                        let case =
                            identities::find(id).map_err(|e| Failure::Usage(e.to_string()))?;
                        identities::verify_with(&case, *grid, *tol_scale)?
                    }
                    None => identities::verify_all(*grid, *tol_scale)?,
                };
                render::report(&mut *out, cli.format, &report)?;
                eprintln!(
                    "{}/{} cases passed in {:.2} s",
                    report.summary.cases_passed,
                    report.summary.cases_run,
                    report.summary.wall_time.as_secs_f64()
                );
                report.all_pass()
            }
        }
    };
    out.flush()?;
    Ok(ok)
}

fn emit_value(out: &mut dyn Write, format: Format, r: &EvalResult) -> Result<bool, Failure> {
    render::value(out, format, r)?;
    Ok(true)
}

impl From<&TrigArg> for Trig {
    fn from(t: &TrigArg) -> Self {
        match t {
            TrigArg::Sin => Trig::Sine,
            TrigArg::Cos => Trig::Cosine,
        }
    }
}

impl From<&WeightArg> for Weight {
    fn from(w: &WeightArg) -> Self {
        match w {
            WeightArg::Unit => Weight::Unit,
            WeightArg::Logn => Weight::LogN,
            WeightArg::Log2pin => Weight::Log2PiN,
            WeightArg::GammaLog2pin => Weight::GammaPlusLog2PiN,
        }
    }
}

impl From<&ParityArg> for Parity {
    fn from(p: &ParityArg) -> Self {
        match p {
            ParityArg::All => Parity::AllN,
            ParityArg::Alt => Parity::Alternating,
            ParityArg::Odd => Parity::OddOnly,
        }
    }
}

impl From<&ScaleArg> for Scale {
    fn from(s: &ScaleArg) -> Self {
        match s {
            ScaleArg::N => Scale::NPower,
            ScaleArg::TwoPiN => Scale::TwoPiNPower,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reals_and_fractions() {
        assert_eq!(parse_real("0.25"), Ok(0.25));
        assert_eq!(parse_real("1/4"), Ok(0.25));
        assert_eq!(parse_real(" -3 / 2 "), Ok(-1.5));
        assert_eq!(parse_real("1/3"), Ok(1.0 / 3.0));
        assert!(parse_real("1/0").is_err());
        assert!(parse_real("abc").is_err());
        assert!(parse_real("inf").is_err());
        assert!(parse_positive("0").is_err());
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
