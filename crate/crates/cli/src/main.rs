mod compute;
mod params;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use vertexpoly::lattice::ParamSet;
use vertexpoly::verify::{run_all, run_check, with_thread_pool, CheckName, CheckReport, CheckSpec, Mode, DEFAULT_TRIALS};

/// Exact six-vertex model computations and identity checks.
#[derive(Parser, Debug)]
#[command(name = "vertexpoly", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute one quantity and print it.
    Compute {
        #[arg(value_enum)]
        what: Quantity,
        #[command(flatten)]
        common: Common,
        /// Particle configuration, e.g. 2,4
        #[arg(long, value_delimiter = ',')]
        x: Option<Vec<usize>>,
        /// Hole configuration (for phi, phi-dual, H, Hbar)
        #[arg(long, value_delimiter = ',')]
        xbar: Option<Vec<usize>>,
        /// Larger configuration of a skew pair
        #[arg(long, value_delimiter = ',')]
        y: Option<Vec<usize>>,
        /// Explicit spectral values u1,u2,... as rationals (eval mode)
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        u: Option<Vec<String>>,
        /// psi | psi-dual | phi | phi-dual for wavefunctions, G | Gbar | H | Hbar otherwise
        #[arg(long)]
        kind: Option<String>,
        /// Symbolic output (same as --mode exact)
        #[arg(long)]
        symbolic: bool,
        /// Use the dual partition function
        #[arg(long)]
        dual: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run an identity check (or all of them) and print one JSON line per check.
    Verify {
        #[arg(value_parser = parse_check)]
        check: CheckArg,
        #[command(flatten)]
        common: Common,
        /// Random points per check in eval mode
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Report zero wall time so that output is byte-identical across runs
        #[arg(long)]
        no_timing: bool,
    },
    /// Draw a constraint-satisfying parameter set and print it as a params file.
    SampleParams {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args, Debug)]
struct Common {
    /// Number of sites
    #[arg(long)]
    m: Option<usize>,
    /// Number of particles (or the size of a partition function)
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_parser = parse_mode)]
    mode: Option<Mode>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// JSON file with t, a, b, c, d as "p/q" strings
    #[arg(long)]
    params: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Quantity {
    Wavefunction,
    Family,
    DwbpSum,
    DwbpDet,
    Skew,
    Grothendieck,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug)]
enum CheckArg {
    One(CheckName),
    All,
}

fn parse_check(s: &str) -> Result<CheckArg, String> {
    if s == "all" {
        Ok(CheckArg::All)
    } else {
        s.parse().map(CheckArg::One)
    }
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    s.parse()
}

#[derive(Debug)]
pub enum CliError {
    /// Bad arguments or inputs; exit 2.
    Usage(String),
    /// The computation itself failed; exit 1.
    Compute(String),
}

impl From<vertexpoly::Error> for CliError {
    fn from(e: vertexpoly::Error) -> Self {
        use vertexpoly::Error as E;
        match e {
            E::InvalidConfig(_) | E::Constraint(_) | E::Size(_) => CliError::Usage(e.to_string()),
            E::Coincident(_) | E::Ring(_) => CliError::Compute(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute { what, common, x, xbar, y, u, kind, symbolic, dual, format } => {
            let mode = match (symbolic, common.mode) {
                (true, Some(Mode::Eval)) => Err(CliError::Usage("--symbolic conflicts with --mode eval".into())),
                (true, _) => Ok(Mode::Exact),
                (false, m) => Ok(m.unwrap_or(Mode::Eval)),
            };
            mode.and_then(|mode| {
                let req = compute::Request { what, m: common.m, n: common.n, x, xbar, y, u, kind, dual, mode, seed: common.seed };
                let params = common.params.as_deref().map(params::load).transpose()?;
                compute::run(&req, params.as_ref(), format)
            })
            .and_then(|text| emit(&text))
            .map(|()| ExitCode::SUCCESS)
        }
        Command::Verify { check, common, trials, format, no_timing } => verify(check, &common, trials, format, no_timing),
        Command::SampleParams { seed } => {
            let file = params::ParamsFile::from_params(&ParamSet::sample(seed));
            emit(&serde_json::to_string(&file).expect("serializable")).map(|()| ExitCode::SUCCESS)
        }
    };
    match result {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn verify(check: CheckArg, common: &Common, trials: usize, format: Format, no_timing: bool) -> Result<ExitCode, CliError> {
    let params = common.params.as_deref().map(params::load).transpose()?;
    let mode = common.mode.unwrap_or(Mode::Eval);
    if mode == Mode::Eval && trials == 0 {
        return Err(CliError::Usage("--trials must be at least 1 in eval mode".into()));
    }
    let name = match check {
        CheckArg::One(name) => name,
        CheckArg::All => CheckName::Correspondence,
    };
    let (m, n) = default_sizes(name, common.m, common.n);
    let mut spec = CheckSpec::new(name, m, n, mode).seed(common.seed).trials(trials);
    if let Some(p) = params {
        spec = spec.params(p);
    }
    let reports: Vec<CheckReport> = with_thread_pool(|| match check {
        CheckArg::One(_) => run_check(&spec).map(|r| vec![r]),
        CheckArg::All => run_all(&spec),
    })??;

    let mut all_pass = true;
    for mut r in reports {
        if no_timing {
            r.ms = 0;
        }
        all_pass &= r.pass;
        let line = match format {
            Format::Json => r.to_json_line(),
            Format::Text => text_report(&r),
        };
        emit(&line)?;
    }
    Ok(if all_pass { ExitCode::SUCCESS } else { ExitCode::from(3) })
}

/// Writes one line to stdout; a closed pipe is not an error.
fn emit(line: &str) -> Result<(), CliError> {
    let mut out = std::io::stdout().lock();
    match writeln!(out, "{line}").and_then(|()| out.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(CliError::Compute(e.to_string())),
        _ => Ok(()),
    }
}

/// Sizes used when `--m` or `--n` is omitted.
fn default_sizes(name: CheckName, m: Option<usize>, n: Option<usize>) -> (usize, usize) {
    let (dm, dn) = match name {
        CheckName::Rll | CheckName::Ybe => (0, 0),
        _ => (4, 2),
    };
    (m.unwrap_or(dm), n.unwrap_or(dn))
}

fn text_report(r: &CheckReport) -> String {
    let verdict = if r.pass { "PASS" } else { "FAIL" };
    let mut s = format!(
        "{verdict} {} [{} M={} N={} seed={}] {}/{} comparisons, {} ms",
        r.name,
        r.mode,
        r.m,
        r.n,
        r.seed,
        r.comparisons - r.failures,
        r.comparisons,
        r.ms
    );
    if let Some(w) = &r.witness {
        s.push_str(&format!("\n  first failure ({}): {}\n    lhs = {}\n    rhs = {}", w.scope, w.input, w.lhs, w.rhs));
    }
    s
}
