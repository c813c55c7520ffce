use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::automaton::{is_factor_closed, Dfa, MinimalDfa};
use crate::error::{Error, Result};
use crate::poly;

/// Reduced rational generating function `Σ aₙ tⁿ` of the word counts.
///
/// Coefficients are listed in ascending degree; the denominator has
/// constant term `1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    pub numerator: Vec<BigInt>,
    pub denominator: Vec<BigInt>,
}

impl HilbertSeries {
    /// Maclaurin coefficients of degree `0..=n`.
    pub fn coefficients(&self, n: usize) -> Vec<BigInt> {
        poly::series(&self.numerator, &self.denominator, n)
    }

    fn from_ints(num: &[i64], den: &[i64]) -> Self {
        HilbertSeries {
            numerator: num.iter().map(|&c| BigInt::from(c)).collect(),
            denominator: den.iter().map(|&c| BigInt::from(c)).collect(),
        }
    }
}

fn render_poly(p: &[BigInt]) -> (String, usize) {
    let mut out = String::new();
    let mut terms = 0;
    for (deg, c) in p.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        match (terms, c.is_negative()) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let coef = if mag.is_one() && deg > 0 {
            String::new()
        } else {
            mag.to_string()
        };
        match deg {
            0 => out.push_str(&coef),
            1 => out.push_str(&format!("{coef}t")),
            _ => out.push_str(&format!("{coef}t^{deg}")),
        }
        terms += 1;
    }
    if terms == 0 {
        out.push('0');
    }
    (out, terms)
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |(s, terms): (String, usize)| {
            if terms > 1 {
                format!("({s})")
            } else {
                s
            }
        };
        let num = wrap(render_poly(&self.numerator));
        if self.denominator.len() == 1 {
            return f.write_str(&num);
        }
        let den = wrap(render_poly(&self.denominator));
        write!(f, "{num} / {den}")
    }
}

/// Hilbert series of a factor-closed minimal automaton.
pub fn hilbert_series(a: &MinimalDfa) -> Result<HilbertSeries> {
    if !is_factor_closed(a) {
        return Err(Error::NotFactorClosed);
    }
    Ok(hilbert_of(a))
}

/// Generating function of accepted-word counts for any automaton.
///
/// With `M` the letter-count matrix on the useful states and `f` the
/// accepting indicator, the series is the initial entry of `(I - tM)⁻¹ f`.
/// By Cramer's rule it is `det(A₀) / det(I - tM)` where `A₀` replaces the
/// initial column by `f`; both determinants have degree at most the number
/// of states and are interpolated from exact integer evaluations at
/// `t = 0, 1, ...`.
pub(crate) fn hilbert_of(a: &Dfa) -> HilbertSeries {
    let useful = a.useful_states();
    if !useful[a.initial()] {
        return HilbertSeries::from_ints(&[], &[1]);
    }
    let states: Vec<usize> = (0..a.state_count()).filter(|&q| useful[q]).collect();
    let m = states.len();
    let pos = |q: usize| states.iter().position(|&s| s == q);
    let mut counts = vec![vec![0i64; m]; m];
    for (i, &q) in states.iter().enumerate() {
        for x in 0..a.alphabet().len() {
            if let Some(j) = pos(a.step(q, x)) {
                counts[i][j] += 1;
            }
        }
    }
    let init = pos(a.initial()).expect("initial state is useful");

    let matrix_at = |t: i64| -> Vec<Vec<BigInt>> {
        (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| BigInt::from(i64::from(i == j) - t * counts[i][j]))
                    .collect()
            })
            .collect()
    };
    let mut den_values = Vec::with_capacity(m + 1);
    let mut num_values = Vec::with_capacity(m + 1);
    for t in 0..=m as i64 {
        let mat = matrix_at(t);
        let mut replaced = mat.clone();
        for (i, row) in replaced.iter_mut().enumerate() {
            row[init] = BigInt::from(i64::from(a.is_accepting(states[i])));
        }
        den_values.push(poly::determinant(mat));
        num_values.push(poly::determinant(replaced));
    }
    let den = poly::interpolate(&den_values);
    let num = poly::interpolate(&num_values);
    reduce(num, den)
}

fn reduce(num: Vec<BigInt>, den: Vec<BigInt>) -> HilbertSeries {
    if num.is_empty() {
        return HilbertSeries::from_ints(&[], &[1]);
    }
    let g = poly::gcd(&num, &den);
    let mut num = poly::div_exact(&num, &g);
    let mut den = poly::div_exact(&den, &g);
    if den[0].is_negative() {
        num.iter_mut().for_each(|c| *c = -c.clone());
        den.iter_mut().for_each(|c| *c = -c.clone());
    }
    debug_assert!(den[0].is_one());
    HilbertSeries {
        numerator: num,
        denominator: den,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::minimize;
    use crate::corpus;
    use crate::input::Source;

    fn series(forbidden: &[&str]) -> HilbertSeries {
        hilbert_series(&Source::Presentation(corpus::xy(forbidden)).minimal_automaton()).unwrap()
    }

    #[test]
    fn closed_forms() {
        assert_eq!(
            series(&["x x", "y y"]),
            HilbertSeries::from_ints(&[1, 1], &[1, -1])
        );
        assert_eq!(series(&[]), HilbertSeries::from_ints(&[1], &[1, -2]));
        assert_eq!(
            series(&["x x"]),
            HilbertSeries::from_ints(&[1, 1], &[1, -1, -1])
        );
    }

    #[test]
    fn rendering() {
        assert_eq!(series(&["x x", "y y"]).to_string(), "(1 + t) / (1 - t)");
        assert_eq!(series(&[]).to_string(), "1 / (1 - 2t)");
        assert_eq!(series(&["x x"]).to_string(), "(1 + t) / (1 - t - t^2)");
        assert_eq!(series(&["x", "y"]).to_string(), "1");
        assert_eq!(series(&["x y", "y x"]).to_string(), "(1 + t) / (1 - t)");
    }

    #[test]
    fn coefficients_match_counts() {
        for fs in [&["y x"][..], &["x x x"], &["x y x", "y y"], &["x", "y y"]] {
            let a = Source::Presentation(corpus::xy(fs)).minimal_automaton();
            let h = hilbert_series(&a).unwrap();
            let counts: Vec<BigInt> = a.word_counts(20).into_iter().map(BigInt::from).collect();
            assert_eq!(h.coefficients(20), counts, "{fs:?}");
        }
    }

    #[test]
    fn non_factor_closed() {
        let a = minimize(&corpus::parity_automaton(&[0]));
        assert_eq!(hilbert_series(&a), Err(Error::NotFactorClosed));
        // Even number of ones: (1 - t) / (1 - 2t).
        assert_eq!(hilbert_of(&a), HilbertSeries::from_ints(&[1, -1], &[1, -2]));
    }
}
