use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rankcode::channel::{lift_matrix, reduce, ChannelConfig};
use rankcode::format::{
    code_spec_string, packet_width, parse_code, parse_packets, parse_symbols, write_matrix, write_packets,
    write_symbols, CodeSpec, FormatError,
};
use rankcode::gabidulin::generalized_decode;
use rankcode::linalg::{singleton_bounds, vector_to_matrix};
use rankcode::oracle::{brute_generalized_decode, DEFAULT_CAP};
use rankcode::{Field, GabidulinCode};

mod oracle_check;
mod simulate;

/// Gabidulin codes, lifting and a random linear network coding channel.
///
/// Code specs are `gab:q=2,m=8,n=8,k=4[,poly=0x11d]` for a concrete
/// Gabidulin code, or `mrd:q=2,n=8,m=392,d=3` for bounds only.
#[derive(Parser)]
#[command(name = "rankcode", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print code parameters, Singleton bounds and the lifting rate loss.
    Params {
        #[arg(value_parser = code_arg)]
        code: CodeSpec,
    },
    /// Encode k message symbols (hex, one per line) into lifted packets [I | x].
    Encode {
        #[arg(long, value_parser = code_arg)]
        code: CodeSpec,
        #[arg(long)]
        input: PathBuf,
        /// Packet file to write; stdout when absent.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Reduce and decode a packet file, writing the k message symbols.
    Decode {
        #[arg(long, value_parser = code_arg)]
        code: CodeSpec,
        #[arg(long)]
        input: PathBuf,
        /// Message file to write; stdout when absent.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Also write the decoded codeword as an n×m matrix.
        #[arg(long)]
        codeword: Option<PathBuf>,
        /// Cross-check against exhaustive minimization over the code.
        #[arg(long)]
        oracle: bool,
        /// Largest code the --oracle search may enumerate.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        oracle_cap: u64,
    },
    /// Run channel trials and print a key=value statistics report.
    Simulate(simulate::SimulateArgs),
    /// Compare the decoder with exhaustive search on random channel outputs.
    OracleCheck(oracle_check::OracleArgs),
}

/// Seed and channel flags shared by the randomized subcommands.
#[derive(Args, Clone)]
pub struct ChannelArgs {
    /// Received packets N; defaults to n.
    #[arg(long = "N")]
    big_n: Option<usize>,
    /// Largest rank deficiency of the transfer matrix A.
    #[arg(long, default_value_t = 0)]
    rho: usize,
    /// Corrupt packets injected per transmission.
    #[arg(long, default_value_t = 0)]
    t: usize,
    /// Injection points; defaults to t.
    #[arg(long)]
    links: Option<usize>,
    /// Master seed; each trial uses its own stream of it.
    #[arg(long, env = "RANKCODE_SEED", default_value_t = 0)]
    seed: u64,
}

impl ChannelArgs {
    pub fn config(&self, code: &GabidulinCode) -> Result<ChannelConfig, CliError> {
        let mut cfg = ChannelConfig::new(code.n(), code.m(), self.rho, self.t, self.seed);
        cfg.big_n = self.big_n.unwrap_or(code.n());
        cfg.links = self.links.unwrap_or(self.t);
        cfg.validate().map_err(|e| CliError::Parse(format!("infeasible channel: {e}")))?;
        Ok(cfg)
    }
}

#[derive(Debug)]
pub enum CliError {
    Io(String),
    Parse(String),
    Shape(String),
    Decode(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Io(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Shape(_) => 3,
            CliError::Decode(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Io(m) | CliError::Parse(m) | CliError::Shape(m) | CliError::Decode(m) => m,
        }
    }
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        CliError::Parse(format!("format error: {e}"))
    }
}

fn code_arg(s: &str) -> Result<CodeSpec, String> {
    parse_code(s).map_err(|e| e.to_string())
}

pub fn gabidulin(spec: &CodeSpec) -> Result<&GabidulinCode, CliError> {
    match spec {
        CodeSpec::Gabidulin(c) => Ok(c),
        CodeSpec::Mrd { .. } => Err(CliError::Parse("this command needs a concrete gab: code".into())),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn emit(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Exact below 10^30, scientific above.
fn big(v: &num_bigint::BigUint, log10: f64) -> String {
    let s = v.to_string();
    if s.len() <= 30 {
        s
    } else {
        let exp = log10.floor();
        format!("{:.4}e{}", 10f64.powf(log10 - exp), exp as i64)
    }
}

fn params(spec: &CodeSpec) -> Result<String, CliError> {
    let (q, n, m, d) = match spec {
        CodeSpec::Gabidulin(c) => (c.q(), c.n(), c.m(), c.d()),
        CodeSpec::Mrd { q, n, m, d } => (*q, *n, *m, *d),
    };
    let b = singleton_bounds(q, n, m, d).map_err(|e| CliError::Parse(e.to_string()))?;
    let log10q = (q as f64).log10();
    let sub_log_q = rankcode::linalg::log_q(q, &b.subspace);
    let mut out = String::new();
    match spec {
        CodeSpec::Gabidulin(c) => out.push_str(&format!("code={}\n", code_spec_string(c))),
        CodeSpec::Mrd { .. } => out.push_str(&format!("code=mrd:q={q},n={n},m={m},d={d}\n")),
    }
    let k = n.min(m) - d + 1;
    out.push_str(&format!("q={q}\nn={n}\nm={m}\nk={k}\nd={d}\n"));
    // an MRD code meets the rank-metric bound with equality
    out.push_str(&format!("codewords={}\n", big(&b.rank_metric, b.rank_metric_log_q as f64 * log10q)));
    out.push_str(&format!("log_q_codewords={}\n", b.rank_metric_log_q));
    out.push_str(&format!("rank_metric_bound={}\n", big(&b.rank_metric, b.rank_metric_log_q as f64 * log10q)));
    out.push_str(&format!("subspace_bound={}\n", big(&b.subspace, sub_log_q * log10q)));
    out.push_str(&format!("log_q_subspace_bound={sub_log_q:.6}\n"));
    out.push_str(&format!("lifted_suboptimality={:.6}\n", b.lifted_suboptimality));
    out.push_str(&format!("suboptimality_bound={:.6}\n", b.lifting_rate_loss));
    Ok(out)
}

fn encode(code: &GabidulinCode, input: &Path, output: Option<&Path>) -> Result<(), CliError> {
    let field = code.field();
    let message = parse_symbols(field, code.k(), &read(input)?)?;
    let codeword = code.encode(&message).map_err(|e| CliError::Shape(e.to_string()))?;
    emit(output, &write_packets(&lift_matrix(&vector_to_matrix(field, &codeword))))
}

fn decode(
    code: &GabidulinCode,
    input: &Path,
    output: Option<&Path>,
    codeword_out: Option<&Path>,
    oracle: Option<u64>,
) -> Result<(), CliError> {
    let field: &Field = code.field();
    let (n, m) = (code.n(), code.m());
    let text = read(input)?;
    let fq = field.base();
    let width = packet_width(fq, &text).unwrap_or(n + m);
    if width != n + m {
        return Err(CliError::Shape(format!("packets have {width} symbols, the code needs n + m = {}", n + m)));
    }
    let y = parse_packets(fq, width, &text)?;
    let red = reduce(&y, n);
    let tuple = red.to_received_tuple(field);
    eprintln!("packets={} mu={} delta={}", y.rows(), red.mu, red.delta);
    let decoded = generalized_decode(code, &tuple);
    if let Some(cap) = oracle {
        match brute_generalized_decode(code, &tuple, cap) {
            Ok(best) => {
                let agrees = decoded.as_ref().is_ok_and(|d| d.codeword == best.best && !best.ambiguous());
                eprintln!("oracle objective={} ties={} agrees={}", best.objective, best.ties, agrees);
            }
            Err(e) => eprintln!("oracle skipped: {e}"),
        }
    }
    let d = decoded.map_err(|e| CliError::Decode(format!("decode failed ({}): {e}", e.reason())))?;
    eprintln!("epsilon={} errata_rank={}", d.epsilon, d.epsilon + d.mu + d.delta);
    if let Some(p) = codeword_out {
        emit(Some(p), &write_matrix(&vector_to_matrix(field, &d.codeword)))?;
    }
    emit(output, &write_symbols(field, &code.message(&d.codeword)))
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Params { code } => emit(None, &params(&code)?),
        Command::Encode { code, input, output } => encode(gabidulin(&code)?, &input, output.as_deref()),
        Command::Decode { code, input, output, codeword, oracle, oracle_cap } => {
            let cap = oracle.then_some(oracle_cap);
            decode(gabidulin(&code)?, &input, output.as_deref(), codeword.as_deref(), cap)
        }
        Command::Simulate(args) => emit(None, &simulate::run(&args)?),
        Command::OracleCheck(args) => oracle_check::run(&args),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
