//! Words in the Artin braid group.
//!
//! A [`BraidWord`] is always freely reduced. Products read left to right:
//! `u.compose(&v)` applies `u` first and then `v`, and every other module
//! (the lamination action, point pushing) follows the same order.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

/// The half-twist `σ_index` or its inverse. Indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub index: usize,
    pub sign: Sign,
}

impl Generator {
    pub fn pos(index: usize) -> Self {
        Generator { index, sign: Sign::Pos }
    }

    pub fn neg(index: usize) -> Self {
        Generator { index, sign: Sign::Neg }
    }

    pub fn inverse(self) -> Self {
        Generator { index: self.index, sign: self.sign.flip() }
    }

    fn cancels(self, other: Generator) -> bool {
        self.index == other.index && self.sign != other.sign
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Pos => write!(f, "s{}", self.index),
            Sign::Neg => write!(f, "s{}'", self.index),
        }
    }
}

/// Push `g` onto a freely reduced stack, cancelling against the top.
fn push_reduced(letters: &mut Vec<Generator>, g: Generator) {
    match letters.last() {
        Some(&top) if top.cancels(g) => {
            letters.pop();
        }
        _ => letters.push(g),
    }
}

/// A freely reduced word in the `strands`-strand braid group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Generator>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: impl IntoIterator<Item = Generator>) -> Result<Self> {
        if strands < 2 {
            return Err(Error::TooFewStrands { strands, min: 2 });
        }
        let mut reduced = Vec::new();
        for g in letters {
            if g.index == 0 || g.index >= strands {
                return Err(Error::IndexOutOfRange { index: g.index, strands });
            }
            push_reduced(&mut reduced, g);
        }
        Ok(BraidWord { strands, letters: reduced })
    }

    /// Convenience constructor from signed indices: `3` is `σ₃`, `-1` is `σ₁⁻¹`.
    pub fn from_signed(strands: usize, letters: &[i32]) -> Result<Self> {
        let gens = letters.iter().map(|&l| {
            let index = l.unsigned_abs() as usize;
            if l >= 0 {
                Generator::pos(index)
            } else {
                Generator::neg(index)
            }
        });
        BraidWord::new(strands, gens)
    }

    pub fn identity(strands: usize) -> Result<Self> {
        BraidWord::new(strands, [])
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Generator] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `self` followed by `other`, freely reduced.
    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch { left: self.strands, right: other.strands });
        }
        let mut letters = self.letters.clone();
        for &g in &other.letters {
            push_reduced(&mut letters, g);
        }
        Ok(BraidWord { strands: self.strands, letters })
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters.iter().rev().map(|g| g.inverse()).collect() }
    }

    /// The `m`-fold product; negative `m` uses the inverse.
    pub fn power(&self, m: i64) -> BraidWord {
        let base = if m < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.letters.len() * m.unsigned_abs() as usize);
        for _ in 0..m.unsigned_abs() {
            for &g in &base.letters {
                push_reduced(&mut letters, g);
            }
        }
        BraidWord { strands: self.strands, letters }
    }

    /// The induced permutation of strand positions.
    pub fn permutation(&self) -> Permutation {
        let mut occupant: Vec<usize> = (1..=self.strands).collect();
        for g in &self.letters {
            occupant.swap(g.index - 1, g.index);
        }
        Permutation { occupant }
    }

    pub fn mirror(&self) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters.iter().map(|g| g.inverse()).collect() }
    }
}

/// The pure-braid band generator `A(i,j) = (σ_{j-1}…σ_{i+1}) σ_i² (σ_{i+1}⁻¹…σ_{j-1}⁻¹)`
/// in the `n`-strand group: strand `j` travels once around strand `i`.
pub fn band_generator(i: usize, j: usize, n: usize) -> Result<BraidWord> {
    if i == 0 || i >= j || j > n {
        return Err(Error::InvalidBand { i, j, n });
    }
    let prefix = (i + 1..j).rev().map(Generator::pos);
    let twist = [Generator::pos(i), Generator::pos(i)];
    let suffix = (i + 1..j).map(Generator::neg);
    BraidWord::new(n, prefix.chain(twist).chain(suffix))
}

/// A permutation of strand positions `1..=n`, stored as the original strand
/// occupying each final position. For `σ₂σ₁⁻¹` in three strands position 1
/// ends up holding strand 3, giving the cycle `(1 3 2)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    occupant: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { occupant: (1..=n).collect() }
    }

    pub fn size(&self) -> usize {
        self.occupant.len()
    }

    /// The original strand now at `position` (both 1-based).
    pub fn occupant(&self, position: usize) -> usize {
        self.occupant[position - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.occupant.iter().enumerate().all(|(k, &s)| s == k + 1)
    }

    /// `self` followed by `next`; matches `permutation(u·v)`.
    pub fn then(&self, next: &Permutation) -> Permutation {
        assert_eq!(self.size(), next.size(), "permutation sizes differ");
        Permutation { occupant: next.occupant.iter().map(|&k| self.occupant[k - 1]).collect() }
    }

    /// Non-trivial cycles, each starting from its smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.size();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut k = self.occupant(start);
            while k != start {
                seen[k] = true;
                cycle.push(k);
                k = self.occupant(k);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|k| k.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}:", self.strands)?;
        for g in &self.letters {
            write!(f, " {g}")?;
        }
        Ok(())
    }
}

/// `(index, sign, column)` of one parsed letter.
pub(crate) type ParsedLetter = (usize, Sign, usize);

/// Shared tokenizer for the `B<n>: s1 s2'` and `L<n>: g1 g2'` formats.
/// Returns the declared size and the parsed letters.
pub(crate) fn parse_word_text(text: &str, header: char, letter: char) -> Result<(usize, Vec<ParsedLetter>)> {
    let err = |column: usize, message: String| Error::Parse { column, message };
    let lead = text.len() - text.trim_start().len();
    let body = text.trim_start();
    let Some(rest) = body.strip_prefix(header) else {
        return Err(err(lead + 1, format!("expected '{header}<n>:' header")));
    };
    let Some(colon) = rest.find(':') else {
        return Err(err(lead + 2, "missing ':' after size".into()));
    };
    let size: usize =
        rest[..colon].trim().parse().map_err(|_| err(lead + 2, format!("invalid size '{}'", rest[..colon].trim())))?;

    let tokens_start = lead + 1 + colon + 1;
    let mut letters = Vec::new();
    let tail = &text[tokens_start..];
    let mut offset = 0;
    for token in tail.split_whitespace() {
        let at = tail[offset..].find(token).map_or(offset, |p| p + offset);
        offset = at + token.len();
        let column = tokens_start + at + 1;
        let Some(suffix) = token.strip_prefix(letter) else {
            return Err(err(column, format!("expected '{letter}<i>', found '{token}'")));
        };
        let (digits, sign) = match suffix.strip_suffix('\'') {
            Some(d) => (d, Sign::Neg),
            None => (suffix, Sign::Pos),
        };
        let index: usize = digits.parse().map_err(|_| err(column, format!("invalid index in '{token}'")))?;
        letters.push((index, sign, column));
    }
    Ok((size, letters))
}

impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (strands, letters) = parse_word_text(s, 'B', 's')?;
        if strands < 2 {
            return Err(Error::Parse { column: 2, message: format!("need at least 2 strands, got {strands}") });
        }
        for &(index, _, column) in &letters {
            if index == 0 || index >= strands {
                return Err(Error::Parse {
                    column,
                    message: format!("generator s{index} out of range for {strands} strands"),
                });
            }
        }
        BraidWord::new(strands, letters.into_iter().map(|(index, sign, _)| Generator { index, sign }))
    }
}
