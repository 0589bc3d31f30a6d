//! Integer coordinates of multicurves on the punctured disk and the braid
//! action on them.
//!
//! Punctures `1..=n` sit on a horizontal line. For each interior puncture
//! `k+1` (`k = 1..=n-2`) let `up_k`/`down_k` count minimal intersections with
//! the vertical arcs from that puncture to the top/bottom of the disk, and let
//! `β_k` count intersections with the vertical line between punctures `k` and
//! `k+1`. The coordinates are
//!
//! ```text
//! a_k = (down_k - up_k) / 2        b_k = (β_k - β_{k+1}) / 2
//! ```
//!
//! which classify essential multicurves up to isotopy. `σ_i` acts as the
//! counterclockwise half-twist exchanging punctures `i` and `i+1`.

mod growth;

pub use growth::{
    classify, estimate_dilatation, estimate_dilatation_from, Classification, GrowthOptions, GrowthReport, GrowthStatus,
};

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::braid::{BraidWord, Generator, Sign};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LamCoord {
    strands: usize,
    a: Vec<BigInt>,
    b: Vec<BigInt>,
}

impl LamCoord {
    pub fn new(strands: usize, a: Vec<BigInt>, b: Vec<BigInt>) -> Result<Self> {
        if strands < 3 {
            return Err(Error::TooFewStrands { strands, min: 3 });
        }
        if a.len() != strands - 2 || b.len() != strands - 2 {
            return Err(Error::InvalidOptions(format!(
                "coordinate vectors for {strands} strands need length {}, got {} and {}",
                strands - 2,
                a.len(),
                b.len()
            )));
        }
        Ok(LamCoord { strands, a, b })
    }

    pub fn from_i64(strands: usize, a: &[i64], b: &[i64]) -> Result<Self> {
        LamCoord::new(
            strands,
            a.iter().copied().map(BigInt::from).collect(),
            b.iter().copied().map(BigInt::from).collect(),
        )
    }

    pub fn zero(strands: usize) -> Result<Self> {
        LamCoord::new(
            strands,
            vec![BigInt::zero(); strands.saturating_sub(2)],
            vec![BigInt::zero(); strands.saturating_sub(2)],
        )
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn a(&self) -> &[BigInt] {
        &self.a
    }

    pub fn b(&self) -> &[BigInt] {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().chain(&self.b).all(Zero::is_zero)
    }

    /// Every coordinate negated.
    pub fn negated(&self) -> LamCoord {
        LamCoord {
            strands: self.strands,
            a: self.a.iter().map(|x| -x).collect(),
            b: self.b.iter().map(|x| -x).collect(),
        }
    }

    /// `a` followed by `b`.
    pub fn to_vec(&self) -> Vec<BigInt> {
        self.a.iter().chain(&self.b).cloned().collect()
    }
}

impl fmt::Display for LamCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[BigInt]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        write!(f, "({} ; {})", join(&self.a), join(&self.b))
    }
}

/// The round curve enclosing exactly punctures `i..=j`.
pub fn standard_curve(i: usize, j: usize, n: usize) -> Result<LamCoord> {
    if n < 3 {
        return Err(Error::TooFewStrands { strands: n, min: 3 });
    }
    if i == 0 || i >= j || j > n || (i == 1 && j == n) {
        return Err(Error::InessentialCurve { i, j, n });
    }
    let mut x = LamCoord::zero(n)?;
    if i >= 2 {
        x.b[i - 2] = BigInt::from(-1);
    }
    if j < n {
        x.b[j - 2] = BigInt::from(1);
    }
    Ok(x)
}

/// L1 norm of the coordinate vector; zero exactly for the empty multicurve.
pub fn coord_norm(x: &LamCoord) -> BigInt {
    x.a.iter().chain(&x.b).map(|v| v.abs()).sum()
}

fn pos(x: &BigInt) -> BigInt {
    if x.is_positive() {
        x.clone()
    } else {
        BigInt::zero()
    }
}

fn neg(x: &BigInt) -> BigInt {
    if x.is_negative() {
        x.clone()
    } else {
        BigInt::zero()
    }
}

pub fn apply_generator(x: &LamCoord, g: Generator) -> Result<LamCoord> {
    if g.index == 0 || g.index >= x.strands {
        return Err(Error::IndexOutOfRange { index: g.index, strands: x.strands });
    }
    let mut y = x.clone();
    act_in_place(&mut y, g);
    Ok(y)
}

/// Apply the letters of `w` left to right.
pub fn apply_word(x: &LamCoord, w: &BraidWord) -> Result<LamCoord> {
    if w.strands() != x.strands {
        return Err(Error::StrandMismatch { left: x.strands, right: w.strands() });
    }
    let mut y = x.clone();
    for &g in w.letters() {
        act_in_place(&mut y, g);
    }
    Ok(y)
}

// Caller guarantees 1 <= g.index <= strands - 1.
fn act_in_place(x: &mut LamCoord, g: Generator) {
    let n = x.strands;
    let i = g.index;
    if i == 1 {
        let (a, b) = (&x.a[0], &x.b[0]);
        let (na, nb) = match g.sign {
            Sign::Pos => {
                let nb = pos(b) - a;
                (b - pos(&nb), nb)
            }
            Sign::Neg => {
                let nb = a + pos(b);
                (pos(&nb) - b, nb)
            }
        };
        x.a[0] = na;
        x.b[0] = nb;
    } else if i == n - 1 {
        let k = n - 3;
        let (a, b) = (&x.a[k], &x.b[k]);
        let (na, nb) = match g.sign {
            Sign::Pos => {
                let nb = neg(b) - a;
                (b - neg(&nb), nb)
            }
            Sign::Neg => {
                let nb = a + neg(b);
                (neg(&nb) - b, nb)
            }
        };
        x.a[k] = na;
        x.b[k] = nb;
    } else {
        // punctures i and i+1 are both interior: coordinates i-1 and i (1-based)
        let (l, r) = (i - 2, i - 1);
        let (a0, b0, a1, b1) = (&x.a[l], &x.b[l], &x.a[r], &x.b[r]);
        let (na0, nb0, na1, nb1) = match g.sign {
            Sign::Pos => {
                let e = a0 - a1 - neg(b0) + pos(b1);
                (a0 + pos(b0) + pos(&(pos(b1) - &e)), b1 - pos(&e), a1 + neg(b1) + neg(&(neg(b0) + &e)), b0 + pos(&e))
            }
            Sign::Neg => {
                let e = a0 - a1 + neg(b0) - pos(b1);
                (a0 - pos(b0) - pos(&(pos(b1) + &e)), b1 + neg(&e), a1 - neg(b1) - neg(&(neg(b0) - &e)), b0 - neg(&e))
            }
        };
        x.a[l] = na0;
        x.b[l] = nb0;
        x.a[r] = na1;
        x.b[r] = nb1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: usize, a: &[i64], b: &[i64]) -> LamCoord {
        LamCoord::from_i64(n, a, b).unwrap()
    }

    #[test]
    fn standard_curves() {
        assert_eq!(standard_curve(1, 2, 3).unwrap(), c(3, &[0], &[1]));
        assert_eq!(standard_curve(2, 3, 3).unwrap(), c(3, &[0], &[-1]));
        assert_eq!(standard_curve(2, 4, 5).unwrap(), c(5, &[0, 0, 0], &[-1, 0, 1]));
        assert!(matches!(standard_curve(1, 4, 4), Err(Error::InessentialCurve { .. })));
        assert!(standard_curve(2, 2, 4).is_err());
        assert!(standard_curve(1, 2, 2).is_err());
    }

    #[test]
    fn zero_is_fixed() {
        let z = LamCoord::zero(5).unwrap();
        for i in 1..5 {
            for g in [Generator::pos(i), Generator::neg(i)] {
                assert!(apply_generator(&z, g).unwrap().is_zero());
            }
        }
        assert_eq!(coord_norm(&z), BigInt::zero());
    }

    #[test]
    fn index_and_strand_checks() {
        let x = standard_curve(1, 2, 4).unwrap();
        assert!(matches!(apply_generator(&x, Generator::pos(4)), Err(Error::IndexOutOfRange { .. })));
        let w = BraidWord::from_signed(5, &[1]).unwrap();
        assert!(matches!(apply_word(&x, &w), Err(Error::StrandMismatch { .. })));
        let id = BraidWord::identity(4).unwrap();
        assert_eq!(apply_word(&x, &id).unwrap(), x);
    }

    #[test]
    fn generators_fix_curves_they_preserve() {
        // σ₁ preserves the curve around {1,2}; σ₂ preserves the one around {2,3}
        let x12 = standard_curve(1, 2, 3).unwrap();
        let x23 = standard_curve(2, 3, 3).unwrap();
        assert_eq!(apply_generator(&x12, Generator::pos(1)).unwrap(), x12);
        assert_eq!(apply_generator(&x23, Generator::neg(2)).unwrap(), x23);
        let x = standard_curve(2, 3, 5).unwrap();
        assert_eq!(apply_generator(&x, Generator::pos(4)).unwrap(), x);
    }

    #[test]
    fn norm_ignores_signs() {
        let x = c(5, &[3, -2, 0], &[-7, 1, 4]);
        assert_eq!(coord_norm(&x), BigInt::from(17));
        assert_eq!(coord_norm(&x.negated()), coord_norm(&x));
    }
}
