//! Built-in consistency checks behind the `verify` command.
//!
//! Reference dilatations are Perron roots of characteristic polynomials
//! frozen from transition matrices worked out by hand; everything else is
//! checked against closed forms or algebraic identities.

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{
    chain_upper, filling_push_lower_log, hironaka_kin_upper, min_filling_self_intersection, penner_lower,
    push_dilatation_lower, sphere_threshold_check, twist_product_check, upper_factor, SurfaceType,
};
use crate::braid::{BraidWord, Generator, Sign};
use crate::error::{Error, Result};
use crate::format::sig12;
use crate::lamination::{
    apply_word, classify, estimate_dilatation, Classification, GrowthOptions, GrowthStatus, LamCoord,
};
use crate::pointpush::{chain_loop, chain_self_intersections, classify_loop, push_braid, LoopClass, LoopWord};
use crate::strands::{closed_form_series, simulate_lower, simulate_upper};

pub const CHECK_NAMES: [&str; 9] = [
    "minimal_braid",
    "named_braids",
    "chain",
    "strands",
    "thresholds",
    "twist_products",
    "bound_chain",
    "exactness",
    "non_filling",
];

/// Factors of characteristic polynomials (leading coefficient first) whose
/// largest real roots are the dilatations of `σ₂σ₁⁻¹`, `σ₃σ₂σ₁⁻¹` and `σ₁σ₂σ₃σ₄σ₁σ₂`.
pub const REFERENCE_POLYNOMIALS: [(usize, &[i32], &[i64]); 3] =
    [(3, &[2, -1], &[1, -3, 1]), (4, &[3, 2, -1], &[1, -2, 0, -2, 1]), (5, &[1, 2, 3, 4, 1, 2], &[1, -1, -1, -1, 1])];

pub const LAMBDA_TOLERANCE: f64 = 1e-6;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CheckOptions {
    pub growth: GrowthOptions,
    pub seed: u64,
    pub round_trips: usize,
    pub relation_samples: usize,
    pub law_samples: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            growth: GrowthOptions::default(),
            seed: 0x5eed,
            round_trips: 10_000,
            relation_samples: 1_000,
            law_samples: 20,
        }
    }
}

/// Largest real root of a polynomial with a single sign change above `lo`.
pub fn perron_root(coeffs: &[i64], lo: f64, hi: f64) -> f64 {
    let eval = |x: f64| coeffs.iter().fold(0.0, |acc, &c| acc * x + c as f64);
    let (mut lo, mut hi) = (lo, hi);
    let hi_sign = eval(hi) > 0.0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if (eval(mid) > 0.0) == hi_sign {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

pub fn run_check(name: &str, opts: &CheckOptions) -> Result<CheckOutcome> {
    let name = CHECK_NAMES.iter().copied().find(|&n| n == name).ok_or_else(|| {
        Error::InvalidOptions(format!("unknown check {name:?}; expected one of {}", CHECK_NAMES.join(", ")))
    })?;
    let (passed, detail) = match name {
        "minimal_braid" => minimal_3_braid(opts)?,
        "named_braids" => named_braids(opts)?,
        "chain" => chain_sandwich(opts)?,
        "strands" => strand_models()?,
        "thresholds" => sphere_thresholds()?,
        "twist_products" => twist_products()?,
        "bound_chain" => bound_chain()?,
        "exactness" => exactness(opts)?,
        "non_filling" => non_filling(opts)?,
        _ => unreachable!("name validated above"),
    };
    Ok(CheckOutcome { name, passed, detail })
}

/// Runs every check in parallel; results come back in [`CHECK_NAMES`] order.
pub fn run_all(opts: &CheckOptions) -> Result<Vec<CheckOutcome>> {
    CHECK_NAMES.par_iter().map(|n| run_check(n, opts)).collect()
}

type Verdict = Result<(bool, String)>;

fn minimal_3_braid(opts: &CheckOptions) -> Verdict {
    let (n, word, poly) = REFERENCE_POLYNOMIALS[0];
    let w = BraidWord::from_signed(n, word)?;
    let start = Instant::now();
    let r = estimate_dilatation(&w, &opts.growth)?;
    let elapsed = start.elapsed();
    let want = perron_root(poly, 1.0, 10.0);
    let ok = r.status == GrowthStatus::Converged
        && (r.lambda_hat - want).abs() < LAMBDA_TOLERANCE
        && r.iterations_used <= 200
        && elapsed < Duration::from_secs(1);
    Ok((
        ok,
        format!(
            "{}: {} vs {} after {} iterations",
            r.status.as_str(),
            r.lambda_hat_string(),
            sig12(want),
            r.iterations_used
        ),
    ))
}

fn named_braids(opts: &CheckOptions) -> Verdict {
    let mut ok = true;
    let mut parts = Vec::new();
    for (n, word, poly) in &REFERENCE_POLYNOMIALS[1..] {
        let w = BraidWord::from_signed(*n, word)?;
        let r = estimate_dilatation(&w, &opts.growth)?;
        let want = perron_root(poly, 1.0, 10.0);
        let class = classify(&w, &opts.growth)?;
        ok &= class == Classification::PseudoAnosov && (r.lambda_hat - want).abs() < LAMBDA_TOLERANCE;
        parts.push(format!("{w}: {} {} vs {}", r.status.as_str(), r.lambda_hat_string(), sig12(want)));
    }
    Ok((ok, parts.join("; ")))
}

fn chain_sandwich(opts: &CheckOptions) -> Verdict {
    let rows: Vec<Result<(usize, bool, String)>> = (4..=10usize)
        .into_par_iter()
        .map(|n| {
            let push = push_braid(&chain_loop(n)?)?;
            let r = estimate_dilatation(&push.braid, &opts.growth)?;
            let class = classify(&push.braid, &opts.growth)?;
            let lo = push_dilatation_lower(chain_self_intersections(n)? as u64)? as f64;
            let hi = chain_upper(n as u64)? as f64;
            let ok = class == Classification::PseudoAnosov
                && lo - LAMBDA_TOLERANCE <= r.lambda_hat
                && r.lambda_hat <= hi + LAMBDA_TOLERANCE;
            Ok((n, ok, format!("n={n}: {} {} <= {} <= {}", r.status.as_str(), lo, r.lambda_hat_string(), hi)))
        })
        .collect();
    let mut ok = true;
    let mut parts = Vec::new();
    for row in rows {
        let (_, good, text) = row?;
        ok &= good;
        parts.push(text);
    }
    Ok((ok, parts.join("; ")))
}

fn strand_models() -> Verdict {
    let mut ok = true;
    for k in 1..=6usize {
        let lo = simulate_lower(k, 10)?;
        let hi = simulate_upper(k, 10)?;
        let alpha = BigUint::from(1 + 2 * k as u64);
        let beta = BigUint::from(upper_factor(k as u64));
        for m in 0..=10usize {
            ok &= lo.cycles[m].end == num_traits::pow(alpha.clone(), m);
            if m >= 1 {
                ok &= hi.cycles[m - 1].end == BigUint::from(2u32) * num_traits::pow(beta.clone(), m - 1);
                ok &= lo.series[m - 1] == closed_form_series(&lo, m)?;
                ok &= hi.series[m - 1] == closed_form_series(&hi, m)?;
            }
        }
    }
    Ok((ok, "k in 1..6, m in 0..10, exact".into()))
}

fn sphere_thresholds() -> Verdict {
    let mut ok = true;
    for n in 4..=20 {
        ok &= sphere_threshold_check(n)?.first == (n == 4);
    }
    for n in 5..=25 {
        ok &= sphere_threshold_check(n)?.second == (n <= 15);
    }
    Ok((ok, "first only at n=4; second fails from n=16".into()))
}

fn twist_products() -> Verdict {
    let mut ok = true;
    for n in 4..=100 {
        let c = twist_product_check(n)?;
        ok &= c.claim1 && c.claim2 == (n >= 7);
    }
    Ok((ok, "claim1 for n in 4..100; claim2 from n=7".into()))
}

fn bound_chain() -> Verdict {
    let mut ok = true;
    for n in 4..=100u32 {
        let s = SurfaceType::sphere(n)?;
        ok &= penner_lower(&s)? < hironaka_kin_upper(n)?;
        let k = min_filling_self_intersection(&s)?;
        let via_push = (push_dilatation_lower(k)? as f64).ln();
        ok &= sig12(filling_push_lower_log(&s)?) == sig12(via_push);
        ok &= chain_self_intersections(n as usize)? as u64 == k;
    }
    Ok((ok, "n in 4..100".into()))
}

fn random_word(rng: &mut ChaCha8Rng, strands: usize, max_len: usize) -> Result<BraidWord> {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len).map(|_| {
        let i = rng.gen_range(1..strands);
        if rng.gen_bool(0.5) {
            Generator::pos(i)
        } else {
            Generator::neg(i)
        }
    });
    BraidWord::new(strands, letters.collect::<Vec<_>>())
}

fn random_coord(rng: &mut ChaCha8Rng, strands: usize, bound: i64) -> Result<LamCoord> {
    loop {
        let mut draw = || (0..strands - 2).map(|_| rng.gen_range(-bound..=bound)).collect::<Vec<_>>();
        let (a, b) = (draw(), draw());
        let x = LamCoord::from_i64(strands, &a, &b)?;
        if !x.is_zero() {
            return Ok(x);
        }
    }
}

fn exactness(opts: &CheckOptions) -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut round_trip_failures = 0usize;
    for _ in 0..opts.round_trips {
        let n = rng.gen_range(3..=8);
        let w = random_word(&mut rng, n, 24)?;
        let x = random_coord(&mut rng, n, 1000)?;
        let y = apply_word(&apply_word(&x, &w)?, &w.inverse())?;
        round_trip_failures += usize::from(y != x);
    }

    let mut relation_failures = 0usize;
    for _ in 0..opts.relation_samples {
        let n = rng.gen_range(3..=8);
        let x = random_coord(&mut rng, n, 1000)?;
        let i = rng.gen_range(1..n);
        let mut pairs = vec![];
        if i + 1 < n {
            pairs.push((vec![i as i32, i as i32 + 1, i as i32], vec![i as i32 + 1, i as i32, i as i32 + 1]));
        }
        let j = rng.gen_range(1..n);
        if i.abs_diff(j) >= 2 {
            pairs.push((vec![i as i32, j as i32], vec![j as i32, i as i32]));
        }
        for (l, r) in pairs {
            let lw = BraidWord::from_signed(n, &l)?;
            let rw = BraidWord::from_signed(n, &r)?;
            relation_failures += usize::from(apply_word(&x, &lw)? != apply_word(&x, &rw)?);
        }
    }

    let base = BraidWord::from_signed(3, &[2, -1])?;
    let lambda = estimate_dilatation(&base, &opts.growth)?.lambda_hat;
    let mut law_failures = 0usize;
    for s in 0..opts.law_samples {
        let (w, want) = if s % 2 == 0 {
            let c = random_word(&mut rng, 3, 6)?;
            (c.compose(&base)?.compose(&c.inverse())?, lambda)
        } else {
            let p = rng.gen_range(2..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
            (base.power(p), lambda.powi(p.unsigned_abs() as i32))
        };
        let r = estimate_dilatation(&w, &opts.growth)?;
        law_failures +=
            usize::from(r.status != GrowthStatus::Converged || (r.lambda_hat - want).abs() > 2.0 * LAMBDA_TOLERANCE);
    }

    let ok = round_trip_failures == 0 && relation_failures == 0 && law_failures == 0;
    Ok((
        ok,
        format!(
            "seed {}: {} round trips ({} failed), {} relation samples ({} failed), {} conjugates/powers ({} failed)",
            opts.seed,
            opts.round_trips,
            round_trip_failures,
            opts.relation_samples,
            relation_failures,
            opts.law_samples,
            law_failures
        ),
    ))
}

fn non_filling(opts: &CheckOptions) -> Verdict {
    let mut ok = true;
    let mut checked = 0usize;
    for n in 4..=8usize {
        for g in 1..n - 1 {
            for sign in [Sign::Pos, Sign::Neg] {
                let lp = LoopWord::from_signed(n - 1, &[g as i32 * sign.as_i32()])?;
                ok &= classify_loop(&lp, &opts.growth)? == LoopClass::NonFilling;
                checked += 1;
            }
        }
    }
    Ok((ok, format!("{checked} single-generator loops")))
}
