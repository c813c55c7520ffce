//! Dense univariate polynomials with exact coefficients, ascending order.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub(crate) type IntPoly = Vec<BigInt>;
type RatPoly = Vec<BigRational>;

fn trim<T: Zero>(p: &mut Vec<T>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn to_rat(p: &[BigInt]) -> RatPoly {
    p.iter().cloned().map(BigRational::from_integer).collect()
}

/// Scales a rational polynomial to a primitive integer polynomial.
fn primitive(p: &[BigRational]) -> IntPoly {
    let lcm = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: IntPoly = p.iter().map(|c| (c * &lcm).to_integer()).collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() {
        return Vec::new();
    }
    ints.into_iter().map(|c| c / &content).collect()
}

fn rat_divrem(num: &[BigRational], den: &[BigRational]) -> (RatPoly, RatPoly) {
    let mut rem: RatPoly = num.to_vec();
    trim(&mut rem);
    let mut den = den.to_vec();
    trim(&mut den);
    assert!(!den.is_empty(), "division by zero polynomial");
    if rem.len() < den.len() {
        return (Vec::new(), rem);
    }
    let lead = den.last().expect("nonzero").clone();
    let mut quot = vec![BigRational::zero(); rem.len() - den.len() + 1];
    while rem.len() >= den.len() {
        let shift = rem.len() - den.len();
        let c = rem.last().expect("nonzero").clone() / &lead;
        for (i, d) in den.iter().enumerate() {
            rem[shift + i] -= &c * d;
        }
        quot[shift] = c;
        trim(&mut rem);
        if rem.is_empty() {
            break;
        }
    }
    trim(&mut quot);
    (quot, rem)
}

/// Greatest common divisor, primitive with positive leading coefficient.
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let mut x = to_rat(a);
    let mut y = to_rat(b);
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = rat_divrem(&x, &y);
        x = y;
        y = r;
    }
    let mut g = primitive(&x);
    if g.last().is_some_and(Signed::is_negative) {
        g.iter_mut().for_each(|c| *c = -c.clone());
    }
    g
}

/// Exact quotient; `den` must divide `num` over the rationals and the
/// quotient must be integral.
pub(crate) fn div_exact(num: &[BigInt], den: &[BigInt]) -> IntPoly {
    let (q, r) = rat_divrem(&to_rat(num), &to_rat(den));
    debug_assert!(r.is_empty(), "inexact polynomial division");
    q.into_iter()
        .map(|c| {
            debug_assert!(c.is_integer(), "non-integral quotient");
            c.to_integer()
        })
        .collect()
}

/// Polynomial of degree at most `values.len() - 1` through
/// `(0, values[0]), (1, values[1]), ...` (Newton divided differences).
pub(crate) fn interpolate(values: &[BigInt]) -> IntPoly {
    let n = values.len();
    let mut diffs: Vec<BigRational> = values
        .iter()
        .cloned()
        .map(BigRational::from_integer)
        .collect();
    // Divided differences over the nodes 0, 1, ..., n-1.
    for level in 1..n {
        for i in (level..n).rev() {
            diffs[i] = (&diffs[i] - &diffs[i - 1]) / BigRational::from_integer(BigInt::from(level));
        }
    }
    // Horner on the Newton form.
    let mut acc: RatPoly = vec![diffs[n - 1].clone()];
    for i in (0..n - 1).rev() {
        // acc = acc * (t - i) + diffs[i]
        let node = BigRational::from_integer(BigInt::from(i));
        let mut next = vec![BigRational::zero(); acc.len() + 1];
        for (j, c) in acc.iter().enumerate() {
            next[j + 1] += c;
            next[j] -= c * &node;
        }
        next[0] += &diffs[i];
        acc = next;
    }
    trim(&mut acc);
    acc.into_iter()
        .map(|c| {
            debug_assert!(c.is_integer());
            c.to_integer()
        })
        .collect()
}

/// Determinant of a square integer matrix (Bareiss elimination).
pub(crate) fn determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Maclaurin coefficients of `num / den` up to degree `n`, given `den(0) = 1`.
pub(crate) fn series(num: &[BigInt], den: &[BigInt], n: usize) -> Vec<BigInt> {
    assert!(
        den.first().is_some_and(One::is_one),
        "denominator constant term must be 1"
    );
    let mut out: Vec<BigInt> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut c = num.get(i).cloned().unwrap_or_default();
        for j in 1..den.len().min(i + 1) {
            c -= &den[j] * &out[i - j];
        }
        out.push(c);
    }
    out
}
