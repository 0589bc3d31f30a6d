//! Fixed-precision decimal output shared by every report.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

pub const SIGNIFICANT_DIGITS: usize = 12;

/// Plain decimal rendering of `x` with 12 significant digits.
pub fn sig12(x: f64) -> String {
    sig_digits(x, SIGNIFICANT_DIGITS)
}

pub fn sig_digits(x: f64, digits: usize) -> String {
    assert!(digits >= 1);
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return format!("{:.*}", digits - 1, 0.0);
    }
    // scientific form rounds to exactly `digits` significant digits
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i64 = exp.parse().expect("exponent");
    let negative = mantissa.starts_with('-');
    let digit_str: String = mantissa.chars().filter(char::is_ascii_digit).collect();

    let mut out = String::new();
    if negative {
        out.push('-');
    }
    if exp < 0 {
        out.push_str("0.");
        out.push_str(&"0".repeat((-exp - 1) as usize));
        out.push_str(&digit_str);
    } else {
        let int_len = exp as usize + 1;
        if int_len >= digit_str.len() {
            out.push_str(&digit_str);
            out.push_str(&"0".repeat(int_len - digit_str.len()));
        } else {
            out.push_str(&digit_str[..int_len]);
            out.push('.');
            out.push_str(&digit_str[int_len..]);
        }
    }
    out
}

/// Nearest `f64` to a big rational, robust to numerators beyond `f64` range.
pub fn rational_to_f64(r: &BigRational) -> f64 {
    if let Some(v) = r.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    let (num, den) = (r.numer(), r.denom());
    if num.is_zero() {
        return 0.0;
    }
    // shift both to ~64 significant bits before dividing
    let shift = num.bits().max(den.bits()) as i64 - 64;
    let s = shift.max(0) as usize;
    let n = (num.abs() >> s).to_f64().unwrap_or(f64::MAX);
    let d = (den >> s).to_f64().unwrap_or(f64::MAX);
    let v = if d == 0.0 { f64::INFINITY } else { n / d };
    if num.is_negative() {
        -v
    } else {
        v
    }
}

pub fn bigint_to_f64(x: &BigInt) -> f64 {
    x.to_f64().unwrap_or(if x.is_negative() { f64::NEG_INFINITY } else { f64::INFINITY })
}
