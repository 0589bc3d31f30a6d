//! Closed-form dilatation bounds for point-pushing maps and the numeric
//! inequalities that compare them with the known bounds for spheres.
//!
//! Everything that involves an irrational threshold is decided exactly:
//! powers of `7 + 4√3` live in `Z[√3]`, and the square-root comparisons in
//! [`twist_product_check`] fall back to integer arithmetic near ties.

use std::ops::Mul;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::format::sig12;

/// A surface of genus `p` with `n` punctures, `3p + n > 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SurfaceType {
    p: u32,
    n: u32,
}

impl SurfaceType {
    pub fn new(p: u32, n: u32) -> Result<Self> {
        if 3 * u64::from(p) + u64::from(n) <= 3 {
            return Err(Error::InvalidSurface { p, n, reason: "need 3p + n > 3" });
        }
        Ok(SurfaceType { p, n })
    }

    pub fn sphere(n: u32) -> Result<Self> {
        SurfaceType::new(0, n)
    }

    pub fn genus(&self) -> u32 {
        self.p
    }

    pub fn punctures(&self) -> u32 {
        self.n
    }
}

/// `log 2 / (12p − 12 + 4n)`, a lower bound for the least log-dilatation on `S`.
pub fn penner_lower(s: &SurfaceType) -> Result<f64> {
    let denom = 12 * i64::from(s.p) - 12 + 4 * i64::from(s.n);
    if denom <= 0 {
        return Err(Error::InvalidSurface { p: s.p, n: s.n, reason: "12p - 12 + 4n must be positive" });
    }
    Ok(std::f64::consts::LN_2 / denom as f64)
}

/// `2 log(2 + √3) / (n − 3)`, an upper bound for the least log-dilatation on
/// the `n`-punctured sphere.
pub fn hironaka_kin_upper(n: u32) -> Result<f64> {
    if n < 4 {
        return Err(Error::Domain(format!("sphere bound needs n >= 4, got {n}")));
    }
    Ok(2.0 * (2.0 + 3f64.sqrt()).ln() / f64::from(n - 3))
}

/// `1 + 2·i_γ`: every push along a primitive filling curve with `i_γ`
/// self-intersections stretches by at least this much.
pub fn push_dilatation_lower(i_gamma: u64) -> Result<u64> {
    if i_gamma < 1 {
        return Err(Error::Domain("a filling curve has at least one self-intersection".into()));
    }
    Ok(1 + 2 * i_gamma)
}

/// Fewest self-intersections a filling curve can have once the pushed
/// puncture of `S` is filled in (Euler characteristic count).
pub fn min_filling_self_intersection(s: &SurfaceType) -> Result<u64> {
    let p = u64::from(s.p);
    match s.n {
        0 => Err(Error::InvalidSurface { p: s.p, n: s.n, reason: "need a puncture to push" }),
        1 => Ok((2 * p).saturating_sub(1)),
        n => Ok(2 * p + u64::from(n) - 3),
    }
}

/// `log(4p + 2n − 5)` for `n > 1`, `log(4p − 1)` for `n = 1`: the least
/// log-dilatation over point-pushing pseudo-Anosov maps on `S`.
pub fn filling_push_lower_log(s: &SurfaceType) -> Result<f64> {
    let arg: i64 = match s.n {
        0 => return Err(Error::InvalidSurface { p: s.p, n: s.n, reason: "need a puncture to push" }),
        1 => 4 * i64::from(s.p) - 1,
        n => 4 * i64::from(s.p) + 2 * i64::from(n) - 5,
    };
    if arg <= 1 {
        return Err(Error::Domain(format!("logarithm argument {arg} is not above 1")));
    }
    Ok((arg as f64).ln())
}

/// `2n² − 6n + 3 = 2k² + 6k + 3` with `k = n − 3`: upper bound for the push
/// along the figure-eight chain on the `(n−1)`-punctured sphere.
pub fn chain_upper(n: u64) -> Result<u64> {
    if n < 4 {
        return Err(Error::Domain(format!("chain bound needs n >= 4, got {n}")));
    }
    Ok(2 * n * n - 6 * n + 3)
}

/// Per-cycle growth factor `2k² + 6k + 3` of the upper strand model.
pub fn upper_factor(k: u64) -> u64 {
    2 * k * k + 6 * k + 3
}

/// `2 Σ_{j=1}^{m} (1 + 2i)^j`.
pub fn lower_series(i_gamma: u64, m: u64) -> Result<BigUint> {
    if i_gamma < 1 {
        return Err(Error::Domain("i_gamma must be at least 1".into()));
    }
    if m < 1 {
        return Err(Error::Domain("the lower series starts at m = 1".into()));
    }
    Ok(geometric_sum(1 + 2 * i_gamma, 1, m) * 2u32)
}

/// `4 Σ_{j=0}^{m} (2k² + 6k + 3)^j`.
pub fn upper_series(k: u64, m: u64) -> Result<BigUint> {
    if k < 1 {
        return Err(Error::Domain("k must be at least 1".into()));
    }
    Ok(geometric_sum(upper_factor(k), 0, m) * 4u32)
}

fn geometric_sum(base: u64, from: u64, to: u64) -> BigUint {
    let base = BigUint::from(base);
    let mut term = num_traits::pow(base.clone(), from as usize);
    let mut sum = BigUint::zero();
    for _ in from..=to {
        sum += &term;
        term *= &base;
    }
    sum
}

/// `a + b√3` with integer `a`, `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZSqrt3 {
    pub a: BigInt,
    pub b: BigInt,
}

impl ZSqrt3 {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        ZSqrt3 { a: a.into(), b: b.into() }
    }

    pub fn pow(&self, e: u32) -> ZSqrt3 {
        let mut acc = ZSqrt3::new(1, 0);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Exact test of `a + b√3 > m`.
    pub fn exceeds(&self, m: &BigInt) -> bool {
        // a + b√3 > m  <=>  b√3 > m - a
        let rhs = m - &self.a;
        let three = BigInt::from(3);
        match (self.b.is_negative(), rhs.is_negative()) {
            (false, true) => true,
            (false, false) => &three * &self.b * &self.b > &rhs * &rhs,
            // b < 0: need -|b|√3 > rhs, i.e. rhs < 0 and 3b² < rhs²
            (true, true) => &three * &self.b * &self.b < &rhs * &rhs,
            (true, false) => false,
        }
    }
}

impl Mul for &ZSqrt3 {
    type Output = ZSqrt3;

    fn mul(self, o: &ZSqrt3) -> ZSqrt3 {
        ZSqrt3 { a: &self.a * &o.a + BigInt::from(3) * &self.b * &o.b, b: &self.a * &o.b + &self.b * &o.a }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SphereThresholds {
    /// `7 + 4√3 > (2n − 5)^{n−3}`
    pub first: bool,
    /// `(2n − 5)^{n−3} < (7 + 4√3)^n`
    pub second: bool,
}

/// Compares the lower bound `(2n−5)` for trivial-on-filling pushes with the
/// sphere upper bound `(2 + √3)²`, raised to the powers used for single
/// maps and for their `q ≤ n` powers.
pub fn sphere_threshold_check(n: u32) -> Result<SphereThresholds> {
    if n < 4 {
        return Err(Error::Domain(format!("threshold check needs n >= 4, got {n}")));
    }
    let power = num_traits::pow(BigInt::from(2 * n - 5), (n - 3) as usize);
    let unit = ZSqrt3::new(7, 4);
    Ok(SphereThresholds { first: unit.exceeds(&power), second: unit.pow(n).exceeds(&power) })
}

/// `h(z) = ½(z² + 2 + z√(z² + 4))`.
pub fn h(z: f64) -> f64 {
    0.5 * (z * z + 2.0 + z * (z * z + 4.0).sqrt())
}

/// `h₁(z) = ½(z² − 2 + z√(z² − 4))`, defined for `|z| ≥ 2`.
pub fn h1(z: f64) -> Result<f64> {
    let disc = z * z - 4.0;
    if disc < 0.0 {
        return Err(Error::Domain(format!("h1 needs z^2 >= 4, got z = {z}")));
    }
    Ok(0.5 * (z * z - 2.0 + z * disc.sqrt()))
}

/// Exact test of `p + √q > √r` for integers with `q, r ≥ 0`.
pub fn sqrt_sum_exceeds(p: &BigInt, q: &BigInt, r: &BigInt) -> bool {
    assert!(!q.is_negative() && !r.is_negative(), "square roots of negative integers");
    if !p.is_negative() {
        // p² + q + 2p√q > r
        let t = r - p * p - q;
        if t.is_negative() {
            return true;
        }
        BigInt::from(4) * p * p * q > &t * &t
    } else {
        // √q > √r + s with s = -p > 0  <=>  q - r - s² > 2s√r
        let s = -p;
        let u = q - r - &s * &s;
        if !u.is_positive() {
            return false;
        }
        &u * &u > BigInt::from(4) * &s * &s * r
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TwistProductCheck {
    /// `h(2n − 6)`
    pub h_value: f64,
    /// `h₁(4n − 10)`
    pub h1_value: f64,
    /// `h₁(4n − 10) > h(2n − 6)`
    pub claim1: bool,
    /// `n² − 3n + 1 < 2(n − 3)²`
    pub claim2: bool,
}

/// Inequalities ruling out a product of two Dehn twists as the least
/// dilatation push on the `n`-punctured sphere.
pub fn twist_product_check(n: u32) -> Result<TwistProductCheck> {
    if n < 4 {
        return Err(Error::Domain(format!("twist product check needs n >= 4, got {n}")));
    }
    let z = 2 * i64::from(n) - 6;
    let big_z = 4 * i64::from(n) - 10;
    let h_value = h(z as f64);
    let h1_value = h1(big_z as f64)?;

    let scale = h_value.abs().max(h1_value.abs());
    let claim1 = if (h1_value - h_value).abs() > 1e-9 * scale {
        h1_value > h_value
    } else {
        // Z² − 2 + √(Z²(Z²−4)) > z² + 2 + √(z²(z²+4))
        let (z, big_z) = (BigInt::from(z), BigInt::from(big_z));
        let z2 = &z * &z;
        let big_z2 = &big_z * &big_z;
        let p = &big_z2 - &z2 - 4;
        let q = &big_z2 * (&big_z2 - 4);
        let r = &z2 * (&z2 + 4);
        sqrt_sum_exceeds(&p, &q, &r)
    };

    let n = i64::from(n);
    let claim2 = n * n - 3 * n + 1 < 2 * (n - 3) * (n - 3);
    Ok(TwistProductCheck { h_value, h1_value, claim1, claim2 })
}

/// One line of the bounds report.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundsRow {
    pub surface: SurfaceType,
    pub penner_lower: f64,
    pub hk_upper: Option<f64>,
    pub corollary_lower: Option<f64>,
    pub chain_upper: Option<u64>,
    pub thresholds: Option<SphereThresholds>,
    pub twist: Option<TwistProductCheck>,
}

pub const BOUNDS_CSV_HEADER: &str =
    "n,penner_lower,hk_upper,corollary_lower,fig7_upper_log,thm13_first,thm13_second,thm12_claim1,thm12_claim2";

impl BoundsRow {
    /// Sphere-only columns are filled for `p = 0, n ≥ 4` and left empty otherwise.
    pub fn compute(surface: SurfaceType) -> Result<Self> {
        let sphere = surface.p == 0 && surface.n >= 4;
        let n = surface.n;
        Ok(BoundsRow {
            surface,
            penner_lower: penner_lower(&surface)?,
            hk_upper: sphere.then(|| hironaka_kin_upper(n)).transpose()?,
            corollary_lower: filling_push_lower_log(&surface).ok(),
            chain_upper: sphere.then(|| chain_upper(u64::from(n))).transpose()?,
            thresholds: sphere.then(|| sphere_threshold_check(n)).transpose()?,
            twist: sphere.then(|| twist_product_check(n)).transpose()?,
        })
    }

    pub fn chain_upper_log(&self) -> Option<f64> {
        self.chain_upper.map(|u| (u as f64).ln())
    }

    /// Cells in [`BOUNDS_CSV_HEADER`] order; inapplicable cells are empty.
    pub fn csv_fields(&self) -> Vec<String> {
        let f = |x: Option<f64>| x.map(sig12).unwrap_or_default();
        let b = |x: Option<bool>| x.map(|v| v.to_string()).unwrap_or_default();
        vec![
            self.surface.n.to_string(),
            sig12(self.penner_lower),
            f(self.hk_upper),
            f(self.corollary_lower),
            f(self.chain_upper_log()),
            b(self.thresholds.map(|t| t.first)),
            b(self.thresholds.map(|t| t.second)),
            b(self.twist.map(|t| t.claim1)),
            b(self.twist.map(|t| t.claim2)),
        ]
    }

    pub fn to_csv(&self) -> String {
        self.csv_fields().join(",")
    }

    pub fn to_json(&self) -> Value {
        let f = |x: Option<f64>| x.map_or(Value::Null, |v| Value::String(sig12(v)));
        json!({
            "p": self.surface.p,
            "n": self.surface.n,
            "penner_lower": sig12(self.penner_lower),
            "hk_upper": f(self.hk_upper),
            "corollary_lower": f(self.corollary_lower),
            "fig7_upper": self.chain_upper,
            "fig7_upper_log": f(self.chain_upper_log()),
            "thm13_first": self.thresholds.map(|t| t.first),
            "thm13_second": self.thresholds.map(|t| t.second),
            "thm12_claim1": self.twist.map(|t| t.claim1),
            "thm12_claim2": self.twist.map(|t| t.claim2),
        })
    }
}
