//! Point-pushing braids from loops on a punctured sphere.
//!
//! The sphere with `N` punctures plus a marked point is modelled as a disk
//! with `N - 1` interior punctures (strands `1..N`), its boundary collapsed to
//! the remaining puncture, and the marked point as the last strand `N`. The
//! fundamental group based at the marked point is free on `g_1..g_{N-1}`,
//! where `g_i` runs around puncture `i`; pushing along `g_i` is the band
//! generator `A(i, N)`.

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::braid::{band_generator, parse_word_text, BraidWord, Sign};
use crate::error::{Error, Result};
use crate::lamination::{classify, Classification, GrowthOptions};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LoopLetter {
    pub generator: usize,
    pub sign: Sign,
}

impl LoopLetter {
    pub fn new(generator: usize, sign: Sign) -> Self {
        LoopLetter { generator, sign }
    }

    pub fn inverse(self) -> Self {
        LoopLetter { generator: self.generator, sign: self.sign.flip() }
    }

    fn cancels(self, other: LoopLetter) -> bool {
        self.generator == other.generator && self.sign != other.sign
    }
}

/// A freely and cyclically reduced word in the puncture loops of a sphere
/// with `sphere_punctures` punctures. May be empty (the trivial loop).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LoopWord {
    sphere_punctures: usize,
    letters: Vec<LoopLetter>,
}

impl LoopWord {
    pub fn new(sphere_punctures: usize, letters: impl IntoIterator<Item = LoopLetter>) -> Result<Self> {
        if sphere_punctures < 3 {
            return Err(Error::TooFewStrands { strands: sphere_punctures, min: 3 });
        }
        let letters = free_reduce(sphere_punctures, letters)?;
        Ok(LoopWord { sphere_punctures, letters: cyclic_reduce(letters) })
    }

    /// `[1, -2]` is `g₁ g₂⁻¹`.
    pub fn from_signed(sphere_punctures: usize, letters: &[i32]) -> Result<Self> {
        LoopWord::new(sphere_punctures, signed_letters(letters))
    }

    pub fn sphere_punctures(&self) -> usize {
        self.sphere_punctures
    }

    pub fn letters(&self) -> &[LoopLetter] {
        &self.letters
    }

    pub fn is_trivial(&self) -> bool {
        self.letters.is_empty()
    }

    /// Highest admissible generator index.
    pub fn rank(&self) -> usize {
        self.sphere_punctures - 1
    }
}

fn signed_letters(letters: &[i32]) -> impl Iterator<Item = LoopLetter> + '_ {
    letters.iter().map(|&l| {
        let sign = if l >= 0 { Sign::Pos } else { Sign::Neg };
        LoopLetter::new(l.unsigned_abs() as usize, sign)
    })
}

fn free_reduce(punctures: usize, letters: impl IntoIterator<Item = LoopLetter>) -> Result<Vec<LoopLetter>> {
    let mut out: Vec<LoopLetter> = Vec::new();
    for l in letters {
        if l.generator == 0 || l.generator >= punctures {
            return Err(Error::LoopIndexOutOfRange { index: l.generator, punctures });
        }
        match out.last() {
            Some(&top) if top.cancels(l) => {
                out.pop();
            }
            _ => out.push(l),
        }
    }
    Ok(out)
}

fn cyclic_reduce(mut letters: Vec<LoopLetter>) -> Vec<LoopLetter> {
    let mut start = 0;
    while letters.len() - start >= 2 && letters[start].cancels(letters[letters.len() - 1]) {
        start += 1;
        letters.pop();
    }
    letters.drain(..start);
    letters
}

impl fmt::Display for LoopWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L{}:", self.sphere_punctures)?;
        for l in &self.letters {
            match l.sign {
                Sign::Pos => write!(f, " g{}", l.generator)?,
                Sign::Neg => write!(f, " g{}'", l.generator)?,
            }
        }
        Ok(())
    }
}

impl FromStr for LoopWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (punctures, letters) = parse_word_text(s, 'L', 'g')?;
        if punctures < 3 {
            return Err(Error::Parse { column: 2, message: format!("need at least 3 punctures, got {punctures}") });
        }
        for &(index, _, column) in &letters {
            if index == 0 || index >= punctures {
                return Err(Error::Parse {
                    column,
                    message: format!("loop generator g{index} out of range for {punctures} punctures"),
                });
            }
        }
        LoopWord::new(punctures, letters.into_iter().map(|(g, sign, _)| LoopLetter::new(g, sign)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PushResult {
    pub braid: BraidWord,
    pub pushed_strand: usize,
    pub source_loop: LoopWord,
}

impl PushResult {
    pub fn to_json(&self) -> Value {
        json!({
            "braid": self.braid.to_string(),
            "pushed_strand": self.pushed_strand,
            "source_loop": self.source_loop.to_string(),
        })
    }
}

/// The push homomorphism on arbitrary (not necessarily reduced) words:
/// each `g_i^{±1}` becomes `A(i, N)^{±1}`.
pub fn push_word(sphere_punctures: usize, letters: &[LoopLetter]) -> Result<BraidWord> {
    let n = sphere_punctures;
    let mut braid = BraidWord::identity(n)?;
    for &l in letters {
        if l.generator == 0 || l.generator >= n {
            return Err(Error::LoopIndexOutOfRange { index: l.generator, punctures: n });
        }
        let band = band_generator(l.generator, n, n)?;
        let band = match l.sign {
            Sign::Pos => band,
            Sign::Neg => band.inverse(),
        };
        braid = braid.compose(&band)?;
    }
    Ok(braid)
}

pub fn push_braid(lp: &LoopWord) -> Result<PushResult> {
    if lp.is_trivial() {
        return Err(Error::TrivialLoop);
    }
    Ok(PushResult {
        braid: push_word(lp.sphere_punctures, &lp.letters)?,
        pushed_strand: lp.sphere_punctures,
        source_loop: lp.clone(),
    })
}

/// A chain of figure-eights through `n - 2` lobes on the sphere with `n - 1`
/// punctures: lobe `j` holds puncture `j`, neighbouring lobes meet in one of
/// the `n - 3` double points, and the last puncture stays outside the chain.
///
/// Leaving the basepoint the curve runs over odd lobes and under even ones,
/// and it returns the opposite way, so the loop reads
/// `g₂ g₄ … (ascending evens) · … g₃⁻¹ g₁⁻¹ (descending odds)`.
pub fn chain_loop(n: usize) -> Result<LoopWord> {
    if n < 4 {
        return Err(Error::Domain(format!("figure-eight chain needs n >= 4, got {n}")));
    }
    let lobes = n - 2;
    let outbound = (1..=lobes).filter(|j| j % 2 == 0).map(|j| LoopLetter::new(j, Sign::Pos));
    let inbound = (1..=lobes).rev().filter(|j| j % 2 == 1).map(|j| LoopLetter::new(j, Sign::Neg));
    LoopWord::new(n - 1, outbound.chain(inbound))
}

/// Self-intersection count of [`chain_loop`]`(n)`.
pub fn chain_self_intersections(n: usize) -> Result<usize> {
    if n < 4 {
        return Err(Error::Domain(format!("figure-eight chain needs n >= 4, got {n}")));
    }
    Ok(n - 3)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LoopClass {
    FillingPa,
    NonFilling,
    Undetermined,
}

/// A push is pseudo-Anosov exactly when its loop fills, so the braid
/// classification answers the filling question.
pub fn classify_loop(lp: &LoopWord, opts: &GrowthOptions) -> Result<LoopClass> {
    let push = push_braid(lp)?;
    Ok(match classify(&push.braid, opts)? {
        Classification::PseudoAnosov => LoopClass::FillingPa,
        Classification::NotPseudoAnosov => LoopClass::NonFilling,
        Classification::Undetermined => LoopClass::Undetermined,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lw(n: usize, l: &[i32]) -> LoopWord {
        LoopWord::from_signed(n, l).unwrap()
    }

    #[test]
    fn reduction() {
        assert!(lw(4, &[1, -1]).is_trivial());
        assert_eq!(lw(4, &[2, 1, 3, -2]).letters(), lw(4, &[1, 3]).letters());
        assert!(lw(4, &[1, 2, -2, -1]).is_trivial());
        // commutators are already cyclically reduced
        assert_eq!(lw(4, &[1, 2, -1, -2]).letters().len(), 4);
        assert!(matches!(LoopWord::from_signed(4, &[4]), Err(Error::LoopIndexOutOfRange { .. })));
        assert!(LoopWord::from_signed(2, &[1]).is_err());
    }

    #[test]
    fn single_letter_push() {
        let p = push_braid(&lw(3, &[1])).unwrap();
        assert_eq!(p.braid, band_generator(1, 3, 3).unwrap());
        assert_eq!(p.braid.to_string(), "B3: s2 s1 s1 s2'");
        assert_eq!(p.pushed_strand, 3);
        assert!(p.braid.permutation().is_identity());
    }

    #[test]
    fn two_letter_push() {
        let p = push_braid(&lw(4, &[1, -2])).unwrap();
        let expected = band_generator(1, 4, 4).unwrap().compose(&band_generator(2, 4, 4).unwrap().inverse()).unwrap();
        assert_eq!(p.braid, expected);
        // A(1,4) A(2,4)⁻¹ = s3 s2 s1 s1 s2' s3' · s3 s2' s2' s3' reduces to s3 s2 s1 s1 s2' s2' s2' s3'
        assert_eq!(p.braid, BraidWord::from_signed(4, &[3, 2, 1, 1, -2, -2, -2, -3]).unwrap());
    }

    #[test]
    fn trivial_loops_rejected() {
        assert_eq!(push_braid(&lw(3, &[1, -1])), Err(Error::TrivialLoop));
        assert_eq!(classify_loop(&lw(4, &[1, 2, -2, -1]), &GrowthOptions::default()), Err(Error::TrivialLoop));
    }

    #[test]
    fn chain_words() {
        assert_eq!(chain_loop(4).unwrap().to_string(), "L3: g2 g1'");
        assert_eq!(chain_loop(5).unwrap().to_string(), "L4: g2 g3' g1'");
        assert_eq!(chain_loop(7).unwrap().to_string(), "L6: g2 g4 g5' g3' g1'");
        for n in 4..12 {
            assert_eq!(chain_loop(n).unwrap().letters().len(), n - 2);
        }
        assert!(chain_loop(3).is_err());
        assert_eq!(chain_self_intersections(4).unwrap(), 1);
        assert_eq!(chain_self_intersections(5).unwrap(), 2);
        assert_eq!(chain_self_intersections(10).unwrap(), 7);
        assert!(chain_self_intersections(3).is_err());
    }

    #[test]
    fn text_format() {
        let l: LoopWord = "L4: g1 g2' g3".parse().unwrap();
        assert_eq!(l, lw(4, &[1, -2, 3]));
        assert_eq!(l.to_string(), "L4: g1 g2' g3");
        assert!(matches!("L3: g3".parse::<LoopWord>(), Err(Error::Parse { column: 5, .. })));
        let json = push_braid(&l).unwrap().to_json();
        assert_eq!(json["pushed_strand"], 4);
        assert_eq!(json["source_loop"], "L4: g1 g2' g3");
    }

    #[test]
    fn simple_loop_does_not_fill() {
        assert_eq!(classify_loop(&lw(3, &[1]), &GrowthOptions::default()).unwrap(), LoopClass::NonFilling);
    }

    #[test]
    fn chain_fills() {
        assert_eq!(classify_loop(&chain_loop(5).unwrap(), &GrowthOptions::default()).unwrap(), LoopClass::FillingPa);
    }
}
