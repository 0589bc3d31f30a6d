//! Strand-count simulators for pushing along a chain of `k` figure-eights.
//!
//! A cycle is one trip of the pushed point around the curve. The point
//! passes each crossing twice per trip, and each pass may capture strands
//! left by earlier passes. The two models fix the captures at their extremal
//! values, so the per-cycle strand counts grow as fast as the lower and upper
//! bounds allow.
//!
//! * lower: crossings are nested, so a second visit to `P_j` picks up twice
//!   the count seen at the first visit and the first visits pick up nothing;
//!   the count grows by `1 + 2k` per cycle.
//! * upper: every first visit picks up twice the count `s` at the end of the
//!   previous trip, every second visit twice the count at the matching first
//!   visit; the count grows by `2k² + 6k + 3` per cycle.

use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;
use serde_json::{json, Value};

use crate::bounds::{lower_series, upper_factor, upper_series};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StrandModel {
    Lower,
    Upper,
}

impl StrandModel {
    pub fn as_str(self) -> &'static str {
        match self {
            StrandModel::Lower => "lower",
            StrandModel::Upper => "upper",
        }
    }

    /// Growth factor of the per-cycle count.
    pub fn factor(self, k: u64) -> u64 {
        match self {
            StrandModel::Lower => 1 + 2 * k,
            StrandModel::Upper => upper_factor(k),
        }
    }
}

/// One pass of the pushed point through a crossing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Visit {
    /// Crossing index; `0` is the base point of the upper model.
    pub crossing: usize,
    /// `1` for the first pass of a trip, `2` for the second.
    pub pass: u8,
    pub before: BigUint,
    pub after: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cycle {
    /// 1-based; cycle 1 is the seed trip and records no visits.
    pub index: usize,
    pub start: BigUint,
    pub visits: Vec<Visit>,
    pub end: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrandTrace {
    pub model: StrandModel,
    pub k: usize,
    pub cycles: Vec<Cycle>,
    /// Twice the running total of per-cycle counts; the closed-form series
    /// in the cycle count.
    pub series: Vec<BigUint>,
}

impl StrandTrace {
    /// Strand count right after a visit.
    pub fn mu(&self, cycle: usize, crossing: usize, pass: u8) -> Option<&BigUint> {
        let c = self.cycles.iter().find(|c| c.index == cycle)?;
        c.visits.iter().find(|v| v.crossing == crossing && v.pass == pass).map(|v| &v.after)
    }

    /// Series value recorded when `cycle` ends; `None` for the lower
    /// model's seed trip.
    pub fn series_at(&self, cycle: usize) -> Option<&BigUint> {
        let offset = match self.model {
            StrandModel::Lower => 2,
            StrandModel::Upper => 1,
        };
        cycle.checked_sub(offset).and_then(|i| self.series.get(i))
    }

    pub fn counts(&self) -> Vec<&BigUint> {
        self.cycles.iter().map(|c| &c.end).collect()
    }

    pub fn to_json(&self) -> Value {
        let s = |x: &BigUint| Value::String(x.to_string());
        json!({
            "model": self.model.as_str(),
            "k": self.k,
            "cycles": self.cycles.iter().map(|c| json!({
                "cycle": c.index,
                "start": s(&c.start),
                "end": s(&c.end),
                "visits": c.visits.iter().map(|v| json!({
                    "crossing": v.crossing,
                    "pass": v.pass,
                    "before": s(&v.before),
                    "after": s(&v.after),
                })).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
            "series": self.series.iter().map(s).collect::<Vec<_>>(),
        })
    }
}

fn check_k(k: usize) -> Result<()> {
    if k < 1 {
        return Err(Error::Domain("a chain needs at least one crossing".into()));
    }
    Ok(())
}

fn visit(crossing: usize, pass: u8, before: &BigUint, gain: &BigUint) -> Visit {
    Visit { crossing, pass, before: before.clone(), after: before + gain }
}

/// Cycles `1..=m+1`: the seed trip leaves one strand, then `m` nested trips.
/// `series[c-1]` is the total after `c` nested trips.
pub fn simulate_lower(k: usize, m: usize) -> Result<StrandTrace> {
    check_k(k)?;
    let mut cycles = vec![Cycle { index: 1, start: BigUint::zero(), visits: Vec::new(), end: BigUint::from(1u32) }];
    let mut series = Vec::with_capacity(m);
    let mut total = BigUint::zero();
    for index in 2..=m + 1 {
        let s = cycles.last().expect("seed cycle").end.clone();
        let zero = BigUint::zero();
        let twice = &s * 2u32;
        let mut mu = s.clone();
        let mut visits = Vec::with_capacity(2 * k);
        for j in 1..=k {
            visits.push(visit(j, 1, &mu, &zero));
        }
        for j in (1..=k).rev() {
            let v = visit(j, 2, &mu, &twice);
            mu = v.after.clone();
            visits.push(v);
        }
        total += &mu;
        series.push(&total * 2u32);
        cycles.push(Cycle { index, start: s, visits, end: mu });
    }
    Ok(StrandTrace { model: StrandModel::Lower, k, cycles, series })
}

/// Cycles `1..=m`: the seed trip leaves two strands. `series[c-1]` is twice
/// the total over the first `c` trips.
pub fn simulate_upper(k: usize, m: usize) -> Result<StrandTrace> {
    check_k(k)?;
    let mut cycles = Vec::with_capacity(m);
    let mut series = Vec::with_capacity(m);
    let mut total = BigUint::zero();
    for index in 1..=m {
        let cycle = if index == 1 {
            Cycle { index, start: BigUint::zero(), visits: Vec::new(), end: BigUint::from(2u32) }
        } else {
            let s = cycles.last().map(|c: &Cycle| c.end.clone()).expect("previous cycle");
            let twice = &s * 2u32;
            let mut visits = Vec::with_capacity(2 * k + 2);
            // crossing 0 is the base point, where the trip starts with s strands
            let mut first = Vec::with_capacity(k + 1);
            let mut mu = s.clone();
            visits.push(visit(0, 1, &mu, &BigUint::zero()));
            first.push(mu.clone());
            for j in 1..=k {
                let v = visit(j, 1, &mu, &twice);
                mu = v.after.clone();
                first.push(mu.clone());
                visits.push(v);
            }
            for j in (0..=k).rev() {
                let v = visit(j, 2, &mu, &(&first[j] * 2u32));
                mu = v.after.clone();
                visits.push(v);
            }
            Cycle { index, start: s, visits, end: mu }
        };
        total += &cycle.end;
        series.push(&total * 2u32);
        cycles.push(cycle);
    }
    Ok(StrandTrace { model: StrandModel::Upper, k, cycles, series })
}

/// Closed-form series value matching `trace.series[c-1]`.
pub fn closed_form_series(trace: &StrandTrace, c: usize) -> Result<BigUint> {
    match trace.model {
        StrandModel::Lower => lower_series(trace.k as u64, c as u64),
        StrandModel::Upper => upper_series(trace.k as u64, c as u64 - 1),
    }
}
