//! Growth-rate estimation by iterating a braid on a seed curve.
//!
//! For a pseudo-Anosov braid the coordinate norm of `wᵐ(x)` grows like
//! `λᵐ`, so successive ratios of norms converge to the dilatation. Ratios are
//! kept as exact rationals; only the reported value is rounded.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::Serialize;
use serde_json::{json, Value};

use super::{apply_word, coord_norm, standard_curve, LamCoord};
use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::format::{rational_to_f64, sig12};

/// Consecutive iterations a non-growth signature must persist.
pub const NON_GROWTH_WINDOW: usize = 20;

#[derive(Clone, Debug, PartialEq)]
pub struct GrowthOptions {
    pub max_iter: usize,
    pub tolerance: f64,
    pub burn_in: usize,
    /// Punctures `(i, j)` of the seed curve; `None` means `(1, 2)`.
    pub seed_curve: Option<(usize, usize)>,
}

impl Default for GrowthOptions {
    fn default() -> Self {
        GrowthOptions { max_iter: 200, tolerance: 1e-9, burn_in: 10, seed_curve: None }
    }
}

impl GrowthOptions {
    pub fn validate(&self) -> Result<()> {
        if !(self.tolerance > 0.0 && self.tolerance.is_finite()) {
            return Err(Error::InvalidOptions(format!("tolerance must be positive, got {}", self.tolerance)));
        }
        if self.max_iter <= self.burn_in {
            return Err(Error::InvalidOptions(format!(
                "max_iter ({}) must exceed burn_in ({})",
                self.max_iter, self.burn_in
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GrowthStatus {
    #[serde(rename = "converged")]
    Converged,
    #[serde(rename = "non_pA")]
    NonPseudoAnosov,
    #[serde(rename = "budget_exceeded")]
    BudgetExceeded,
}

impl GrowthStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            GrowthStatus::Converged => "converged",
            GrowthStatus::NonPseudoAnosov => "non_pA",
            GrowthStatus::BudgetExceeded => "budget_exceeded",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GrowthReport {
    pub lambda_hat: f64,
    pub status: GrowthStatus,
    pub iterations_used: usize,
    /// `‖x_{m}‖ / ‖x_{m-1}‖` for `m = 1..=iterations_used`.
    pub ratio_trace: Vec<BigRational>,
}

impl GrowthReport {
    pub fn lambda_hat_string(&self) -> String {
        sig12(self.lambda_hat)
    }

    pub fn to_json(&self, include_trace: bool) -> Value {
        let mut v = json!({
            "lambda_hat": self.lambda_hat_string(),
            "status": self.status.as_str(),
            "iterations_used": self.iterations_used,
        });
        if include_trace {
            v["ratio_trace"] = self.ratio_trace.iter().map(|r| Value::String(sig12(rational_to_f64(r)))).collect();
        }
        v
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    PseudoAnosov,
    NotPseudoAnosov,
    Undetermined,
}

pub fn estimate_dilatation(w: &BraidWord, opts: &GrowthOptions) -> Result<GrowthReport> {
    let (i, j) = opts.seed_curve.unwrap_or((1, 2));
    let seed = standard_curve(i, j, w.strands())?;
    estimate_dilatation_from(w, &seed, opts)
}

pub fn estimate_dilatation_from(w: &BraidWord, seed: &LamCoord, opts: &GrowthOptions) -> Result<GrowthReport> {
    opts.validate()?;
    if seed.is_zero() {
        return Err(Error::ZeroSeed);
    }
    if w.strands() != seed.strands() {
        return Err(Error::StrandMismatch { left: seed.strands(), right: w.strands() });
    }

    let tol = BigRational::from_float(opts.tolerance).expect("finite tolerance");
    let one = BigRational::one();
    let max_lag = 2 * w.strands() + 2;

    let mut x = seed.clone();
    let mut prev_norm = coord_norm(&x);
    let mut history: VecDeque<Vec<BigInt>> = VecDeque::with_capacity(2 * max_lag + 1);
    history.push_back(x.to_vec());
    let mut affine_streak = vec![0usize; max_lag + 1];
    let mut unit_streak = 0usize;
    let mut trace: Vec<BigRational> = Vec::new();

    for m in 1..=opts.max_iter {
        x = apply_word(&x, w)?;
        let norm = coord_norm(&x);
        let ratio = BigRational::new(norm.clone(), prev_norm);
        prev_norm = norm;

        history.push_back(x.to_vec());
        if history.len() > 2 * max_lag + 1 {
            history.pop_front();
        }

        // Eventually periodic or eventually affine orbits (finite order and
        // twist-like pieces) show up as vanishing lag-p second differences.
        let last = history.len() - 1;
        let mut stalled = false;
        for (p, streak) in affine_streak.iter_mut().enumerate().skip(1) {
            if last >= 2 * p && second_difference_vanishes(&history[last], &history[last - p], &history[last - 2 * p]) {
                *streak += 1;
            } else {
                *streak = 0;
            }
            stalled |= *streak >= NON_GROWTH_WINDOW;
        }

        if (&ratio - &one).abs() < tol {
            unit_streak += 1;
        } else {
            unit_streak = 0;
        }
        stalled |= unit_streak >= NON_GROWTH_WINDOW;

        let converged = m > opts.burn_in
            && ratio > &one + &tol
            && trace.last().is_some_and(|prev: &BigRational| (&ratio - prev).abs() < tol);
        trace.push(ratio);

        if stalled {
            return Ok(GrowthReport {
                lambda_hat: 1.0,
                status: GrowthStatus::NonPseudoAnosov,
                iterations_used: m,
                ratio_trace: trace,
            });
        }
        if converged {
            let lambda_hat = rational_to_f64(trace.last().expect("nonempty trace"));
            return Ok(GrowthReport {
                lambda_hat,
                status: GrowthStatus::Converged,
                iterations_used: m,
                ratio_trace: trace,
            });
        }
    }

    let lambda_hat = trace.last().map_or(1.0, rational_to_f64);
    Ok(GrowthReport {
        lambda_hat,
        status: GrowthStatus::BudgetExceeded,
        iterations_used: opts.max_iter,
        ratio_trace: trace,
    })
}

fn second_difference_vanishes(now: &[BigInt], mid: &[BigInt], old: &[BigInt]) -> bool {
    now.iter().zip(mid).zip(old).all(|((x, y), z)| x + z == y * 2)
}

/// Exponential growth certifies a pseudo-Anosov class; a periodic, affine or
/// unit-ratio orbit rules it out. Reducible classes with a pseudo-Anosov
/// piece also grow exponentially and are reported as pseudo-Anosov.
pub fn classify(w: &BraidWord, opts: &GrowthOptions) -> Result<Classification> {
    let report = estimate_dilatation(w, opts)?;
    Ok(match report.status {
        GrowthStatus::Converged if report.lambda_hat > 1.0 + opts.tolerance => Classification::PseudoAnosov,
        GrowthStatus::NonPseudoAnosov => Classification::NotPseudoAnosov,
        _ => Classification::Undetermined,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::from_signed(n, l).unwrap()
    }

    #[test]
    fn identity_is_not_pa() {
        let r = estimate_dilatation(&word(3, &[1, -1]), &GrowthOptions::default()).unwrap();
        assert_eq!(r.status, GrowthStatus::NonPseudoAnosov);
        assert_eq!(r.lambda_hat, 1.0);
        assert_eq!(classify(&word(3, &[]), &GrowthOptions::default()).unwrap(), Classification::NotPseudoAnosov);
    }

    #[test]
    fn single_half_twist_is_not_pa() {
        assert_eq!(classify(&word(3, &[1]), &GrowthOptions::default()).unwrap(), Classification::NotPseudoAnosov);
        // Dehn twist: linear growth from a seed that crosses the twist curve
        let opts = GrowthOptions { seed_curve: Some((2, 3)), ..Default::default() };
        let r = estimate_dilatation(&word(3, &[1, 1]), &opts).unwrap();
        assert_eq!(r.status, GrowthStatus::NonPseudoAnosov);
    }

    #[test]
    fn simplest_pa_braid() {
        let r = estimate_dilatation(&word(3, &[2, -1]), &GrowthOptions::default()).unwrap();
        assert_eq!(r.status, GrowthStatus::Converged);
        assert!((r.lambda_hat - (3.0 + 5f64.sqrt()) / 2.0).abs() < 1e-9);
        assert_eq!(r.ratio_trace.len(), r.iterations_used);
        assert_eq!(classify(&word(3, &[2, -1]), &GrowthOptions::default()).unwrap(), Classification::PseudoAnosov);
    }

    #[test]
    fn norms_increase_after_burn_in() {
        let w = word(3, &[2, -1]);
        let mut x = standard_curve(1, 2, 3).unwrap();
        let mut last = coord_norm(&x);
        for m in 0..60 {
            x = apply_word(&x, &w).unwrap();
            let n = coord_norm(&x);
            if m >= 2 {
                assert!(n > last, "iteration {m}");
            }
            last = n;
        }
    }

    #[test]
    fn budget_and_option_errors() {
        let opts = GrowthOptions { max_iter: 5, burn_in: 1, ..Default::default() };
        let r = estimate_dilatation(&word(5, &[1, 2, 3, 4, 1, 2]), &opts).unwrap();
        assert_eq!(r.status, GrowthStatus::BudgetExceeded);
        assert_eq!(r.iterations_used, 5);
        assert_eq!(classify(&word(5, &[1, 2, 3, 4, 1, 2]), &opts).unwrap(), Classification::Undetermined);

        let bad = GrowthOptions { tolerance: 0.0, ..Default::default() };
        assert!(matches!(estimate_dilatation(&word(3, &[1]), &bad), Err(Error::InvalidOptions(_))));
        let bad = GrowthOptions { max_iter: 10, burn_in: 10, ..Default::default() };
        assert!(estimate_dilatation(&word(3, &[1]), &bad).is_err());
        let zero = LamCoord::zero(3).unwrap();
        assert_eq!(estimate_dilatation_from(&word(3, &[1]), &zero, &GrowthOptions::default()), Err(Error::ZeroSeed));
        assert!(matches!(
            estimate_dilatation(&word(2, &[1]), &GrowthOptions::default()),
            Err(Error::TooFewStrands { .. })
        ));
    }

    #[test]
    fn report_json_shape() {
        let r = estimate_dilatation(&word(3, &[2, -1]), &GrowthOptions::default()).unwrap();
        let v = r.to_json(false);
        assert_eq!(v["lambda_hat"], sig12(r.lambda_hat).as_str());
        let printed: f64 = v["lambda_hat"].as_str().unwrap().parse().unwrap();
        assert!((printed - (3.0 + 5f64.sqrt()) / 2.0).abs() < 1e-9);
        assert_eq!(v["status"], "converged");
        assert!(v.get("ratio_trace").is_none());
        let v = r.to_json(true);
        assert_eq!(v["ratio_trace"].as_array().unwrap().len(), r.iterations_used);
    }
}
