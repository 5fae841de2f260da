use std::collections::BTreeMap;

use clap::Args;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rankcode::channel::{lift_matrix, reduce, reduction_distance, Channel, ChannelConfig};
use rankcode::field::op_counts;
use rankcode::format::{code_spec_string, CodeSpec};
use rankcode::gabidulin::generalized_decode;
use rankcode::linalg::vector_to_matrix;
use rankcode::{Field, GabidulinCode};
use rayon::prelude::*;

use crate::{gabidulin, ChannelArgs, CliError};

#[derive(Args)]
pub struct SimulateArgs {
    /// Code spec; alternatively give --q, --n, --m and --d.
    #[arg(long, value_parser = crate::code_arg, conflicts_with_all = ["n", "m", "d"])]
    code: Option<CodeSpec>,
    /// Base field size.
    #[arg(long, default_value_t = 2)]
    q: u32,
    /// Code length.
    #[arg(long)]
    n: Option<usize>,
    /// Extension degree; defaults to n.
    #[arg(long)]
    m: Option<usize>,
    /// Minimum rank distance; sets k = n − d + 1.
    #[arg(long)]
    d: Option<usize>,
    #[command(flatten)]
    channel: ChannelArgs,
    /// Transmissions to simulate.
    #[arg(long, default_value_t = 1000)]
    trials: usize,
    /// Keep, per transmission, the injection that maximizes the errata weight.
    #[arg(long)]
    adversarial: bool,
    /// Injections tried per transmission in adversarial mode.
    #[arg(long, default_value_t = 16)]
    candidates: usize,
}

impl SimulateArgs {
    fn code(&self) -> Result<GabidulinCode, CliError> {
        if let Some(spec) = &self.code {
            return gabidulin(spec).cloned();
        }
        let (Some(n), Some(d)) = (self.n, self.d) else {
            return Err(CliError::Parse("give --code or --n and --d".into()));
        };
        let m = self.m.unwrap_or(n);
        if d == 0 || d > n {
            return Err(CliError::Parse(format!("need 1 ≤ d ≤ n, got d={d}, n={n}")));
        }
        let field = Field::new(self.q, m).map_err(|e| CliError::Parse(e.to_string()))?;
        GabidulinCode::new(field, n, n - d + 1).map_err(|e| CliError::Parse(e.to_string()))
    }
}

struct Trial {
    /// None on success, otherwise the failure label.
    failure: Option<&'static str>,
    /// (ε, μ, δ) measured against the transmitted codeword.
    errata: (usize, usize, usize),
    ops: u64,
    rank_z: usize,
}

/// One transmission with its own ChaCha stream of the master seed.
fn trial(code: &GabidulinCode, cfg: &ChannelConfig, args: &SimulateArgs, index: u64) -> Trial {
    let field = code.field();
    let n = code.n();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(index);
    let message: Vec<_> = (0..code.k()).map(|_| field.random(&mut rng)).collect();
    let codeword = code.encode(&message).expect("k symbols");
    let x = vector_to_matrix(field, &codeword);
    let channel_cfg = ChannelConfig { seed: rng.gen(), ..cfg.clone() };
    let mut channel = Channel::new(channel_cfg, field.base()).expect("validated");
    let lifted = lift_matrix(&x);
    let t = if args.adversarial {
        channel.transmit_adversarial(&lifted, args.candidates)
    } else {
        channel.transmit(&lifted)
    }
    .expect("shape matches");

    let red = reduce(&t.y, n);
    let (mu, delta) = (red.mu, red.delta);
    // 2·rank[L̂, r − x; 0, Ê] − μ − δ = 2ε + μ + δ
    let epsilon = (reduction_distance(&red, &x) - mu - delta) / 2;
    let before = op_counts();
    let outcome = generalized_decode(code, &red.to_received_tuple(field));
    let ops = op_counts().since(&before).total();
    let failure = match outcome {
        Ok(d) if d.codeword == codeword => None,
        Ok(_) => Some("wrong-codeword"),
        Err(e) => Some(e.reason()),
    };
    Trial { failure, errata: (epsilon, mu, delta), ops, rank_z: t.z.rank() }
}

pub fn run(args: &SimulateArgs) -> Result<String, CliError> {
    let code = args.code()?;
    let cfg = args.channel.config(&code)?;
    let mut out = format!("code={}\n", code_spec_string(&code));
    out.push_str(&format!(
        "N={} rho={} t={} links={} seed={} adversarial={}\n",
        cfg.big_n, cfg.rho_max, cfg.t_max, cfg.links, cfg.seed, args.adversarial
    ));
    out.push_str(&format!("trials={}\n", args.trials));
    if args.trials == 0 {
        return Ok(out);
    }

    let trials: Vec<Trial> = (0..args.trials as u64).into_par_iter().map(|i| trial(&code, &cfg, args, i)).collect();
    let successes = trials.iter().filter(|t| t.failure.is_none()).count();
    let mut failures: BTreeMap<&str, usize> = BTreeMap::new();
    let mut errata: BTreeMap<(usize, usize, usize), usize> = BTreeMap::new();
    for t in &trials {
        if let Some(r) = t.failure {
            *failures.entry(r).or_default() += 1;
        }
        *errata.entry(t.errata).or_default() += 1;
    }
    let count = trials.len() as f64;
    out.push_str(&format!("successes={successes}\n"));
    out.push_str(&format!("success_rate={:.6}\n", successes as f64 / count));
    for (reason, c) in failures {
        out.push_str(&format!("failures.{reason}={c}\n"));
    }
    for ((e, u, d), c) in errata {
        out.push_str(&format!("errata.epsilon{e}.mu{u}.delta{d}={c}\n"));
    }
    out.push_str(&format!("mean_ops={:.2}\n", trials.iter().map(|t| t.ops).sum::<u64>() as f64 / count));
    out.push_str(&format!("mean_rank_z={:.4}\n", trials.iter().map(|t| t.rank_z).sum::<usize>() as f64 / count));
    Ok(out)
}
