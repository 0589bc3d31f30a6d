//! Reference computations that share no code with the library: integer
//! matrix algebra, the Burau representation at `t = -1`, transition
//! matrices worked out by hand, and intersection counts of tube curves.

#![allow(dead_code)]

use num_bigint::BigInt;
use pushpa_core::LamCoord;

pub type Matrix = Vec<Vec<i128>>;

pub fn identity(n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| i128::from(i == j)).collect()).collect()
}

pub fn mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
}

/// Characteristic polynomial `det(xI - A)`, leading coefficient first
/// (Faddeev–LeVerrier; the divisions are exact for integer matrices).
pub fn charpoly(a: &Matrix) -> Vec<i128> {
    let n = a.len();
    let mut coeffs = vec![1i128];
    let mut m = identity(n);
    for k in 1..=n {
        let am = mul(a, &m);
        let trace: i128 = (0..n).map(|i| am[i][i]).sum();
        assert_eq!(trace % k as i128, 0, "inexact division");
        let c = -trace / k as i128;
        coeffs.push(c);
        m = am;
        for (i, row) in m.iter_mut().enumerate() {
            row[i] += c;
        }
    }
    coeffs
}

pub fn eval(coeffs: &[i128], x: f64) -> f64 {
    coeffs.iter().fold(0.0, |acc, &c| acc * x + c as f64)
}

/// Real roots in `[lo, hi]` located by a sign-change scan and bisection.
pub fn real_roots(coeffs: &[i128], lo: f64, hi: f64) -> Vec<f64> {
    let steps = 20_000;
    let h = (hi - lo) / steps as f64;
    let mut roots = Vec::new();
    for s in 0..steps {
        let (mut a, mut b) = (lo + s as f64 * h, lo + (s + 1) as f64 * h);
        let (fa, fb) = (eval(coeffs, a), eval(coeffs, b));
        if fa == 0.0 {
            roots.push(a);
            continue;
        }
        if fa * fb > 0.0 {
            continue;
        }
        for _ in 0..200 {
            let mid = 0.5 * (a + b);
            if (eval(coeffs, mid) > 0.0) == (eval(coeffs, a) > 0.0) {
                a = mid;
            } else {
                b = mid;
            }
        }
        roots.push(0.5 * (a + b));
    }
    roots
}

/// Largest real root of `p(x)` or `p(-x)` in absolute value, searched up to `hi`.
pub fn largest_real_root_modulus(coeffs: &[i128], hi: f64) -> f64 {
    let d = coeffs.len() - 1;
    let mirrored: Vec<i128> = coeffs.iter().enumerate().map(|(i, &c)| if (d - i) % 2 == 1 { -c } else { c }).collect();
    real_roots(coeffs, 0.0, hi).into_iter().chain(real_roots(&mirrored, 0.0, hi)).fold(0.0, f64::max)
}

/// Unreduced Burau matrix of a signed word at `t = -1`.
pub fn burau_minus_one(strands: usize, word: &[i32]) -> Matrix {
    let mut acc = identity(strands);
    for &l in word {
        let i = l.unsigned_abs() as usize - 1;
        let mut g = identity(strands);
        let block = if l > 0 { [[2, -1], [1, 0]] } else { [[0, 1], [-1, 2]] };
        for r in 0..2 {
            for c in 0..2 {
                g[i + r][i + c] = block[r][c];
            }
        }
        acc = mul(&acc, &g);
    }
    acc
}

/// Transition matrices on the coordinate cell that the orbit of the seed
/// curve eventually stays in, worked out by hand for the reference braids.
pub fn reference_transition(strands: usize) -> Matrix {
    match strands {
        3 => vec![vec![2, 1], vec![1, 1]],
        4 => vec![vec![2, 0, 1, -1], vec![0, 0, 0, 1], vec![1, 0, 1, 0], vec![1, -1, 1, -1]],
        5 => vec![
            vec![0, -1, 1, 0, 0, 0],
            vec![-1, 1, 0, 0, 1, 1],
            vec![0, -1, 0, 1, 0, 0],
            vec![0, 0, 0, 0, 0, 1],
            vec![0, 0, 0, -1, 0, 0],
            vec![0, -1, 0, 0, -1, -1],
        ],
        _ => panic!("no reference matrix for {strands} strands"),
    }
}

pub const REFERENCE_WORDS: [(usize, &[i32]); 3] = [(3, &[2, -1]), (4, &[3, 2, -1]), (5, &[1, 2, 3, 4, 1, 2])];

/// Dilatation of a reference braid: the Perron root of its transition matrix.
pub fn reference_dilatation(strands: usize) -> f64 {
    let p = charpoly(&reference_transition(strands));
    real_roots(&p, 1.0, 50.0).into_iter().fold(0.0, f64::max)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Above,
    Below,
}

/// Coordinates of the curve around punctures `first..=last` whose tube dips
/// past each listed interior puncture on the given side, read off from
/// intersection counts with vertical arcs and lines.
pub fn tube_curve(n: usize, first: usize, last: usize, skipped: &[(usize, Side)]) -> LamCoord {
    assert!(1 <= first && first < last && last <= n);
    let beta = |k: usize| -> i64 {
        if first <= k && k < last {
            2
        } else {
            0
        }
    };
    let mut a = Vec::new();
    let mut b = Vec::new();
    for k in 1..=n - 2 {
        let p = k + 1;
        let (up, down) = match skipped.iter().find(|(q, _)| *q == p) {
            Some((_, Side::Above)) => (2, 0),
            Some((_, Side::Below)) => (0, 2),
            None if first <= p && p <= last => (1, 1),
            None => (0, 0),
        };
        a.push(BigInt::from((down - up) / 2));
        b.push(BigInt::from((beta(k) - beta(k + 1)) / 2));
    }
    LamCoord::new(n, a, b).unwrap()
}
