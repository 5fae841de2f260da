use clap::Args;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rankcode::channel::{lift_matrix, reduce, Channel, ChannelConfig};
use rankcode::format::{code_spec_string, CodeSpec};
use rankcode::gabidulin::{generalized_decode, generalized_decode_locator};
use rankcode::linalg::vector_to_matrix;
use rankcode::oracle::{brute_generalized_decode, DEFAULT_CAP};
use rayon::prelude::*;

use crate::{gabidulin, CliError};

#[derive(Args)]
pub struct OracleArgs {
    #[arg(long, value_parser = crate::code_arg)]
    code: CodeSpec,
    #[arg(long, default_value_t = 200)]
    trials: usize,
    #[arg(long, env = "RANKCODE_SEED", default_value_t = 0)]
    seed: u64,
    /// Largest code the exhaustive search may enumerate.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: u64,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Verdict {
    /// Both decoders return the unique minimizer.
    Decoded,
    /// Decoders refuse and the minimizer lies beyond the radius or is tied.
    Refused,
    Disagree,
}

/// Channel outputs with ρ and t drawn below d per trial, so that both the
/// decodable and the undecodable regimes are exercised.
pub fn run(args: &OracleArgs) -> Result<(), CliError> {
    let code = gabidulin(&args.code)?;
    let field = code.field();
    let (n, d) = (code.n(), code.d());
    if code.size() > args.cap.into() {
        return Err(CliError::Io(format!("code has {} codewords, above the cap {}", code.size(), args.cap)));
    }
    let verdicts: Vec<Result<Verdict, String>> = (0..args.trials as u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
            rng.set_stream(i);
            let message: Vec<_> = (0..code.k()).map(|_| field.random(&mut rng)).collect();
            let x = vector_to_matrix(field, &code.encode(&message).expect("k symbols"));
            let (rho, t) = (rng.gen_range(0..d.min(n + 1)), rng.gen_range(0..d));
            let cfg = ChannelConfig::new(n, code.m(), rho, t, rng.gen());
            let y = Channel::new(cfg, field.base()).expect("feasible").transmit(&lift_matrix(&x)).expect("shape").y;
            let tuple = reduce(&y, n).to_received_tuple(field);
            let best = brute_generalized_decode(code, &tuple, args.cap).map_err(|e| e.to_string())?;
            let (span, loc) = (generalized_decode(code, &tuple), generalized_decode_locator(code, &tuple));
            let side = tuple.mu() + tuple.delta();
            let radius = side + d.saturating_sub(1 + side) / 2;
            let within = side < d && best.objective <= radius && !best.ambiguous();
            Ok(match (span, loc) {
                (Ok(a), Ok(b)) if within && a.codeword == best.best && b.codeword == best.best => Verdict::Decoded,
                (Err(_), Err(_)) if !within => Verdict::Refused,
                _ => Verdict::Disagree,
            })
        })
        .collect();
    let verdicts: Vec<Verdict> = verdicts.into_iter().collect::<Result<_, _>>().map_err(CliError::Io)?;
    let count = |v: Verdict| verdicts.iter().filter(|&&x| x == v).count();
    println!("code={}", code_spec_string(code));
    println!("trials={}", verdicts.len());
    println!("decoded={}", count(Verdict::Decoded));
    println!("refused={}", count(Verdict::Refused));
    println!("disagreements={}", count(Verdict::Disagree));
    match count(Verdict::Disagree) {
        0 => Ok(()),
        k => Err(CliError::Decode(format!("{k} trials disagree with the exhaustive minimizer"))),
    }
}
