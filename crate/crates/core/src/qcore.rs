//! q-integers, q-factorials and Gaussian binomial coefficients.
//!
//! Three independent constructions of the same polynomial are provided:
//! a quotient of q-factorials, the q-Pascal recurrence, and a direct count of
//! partitions fitting in a box. They exist to check each other.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{poly_exact_div, poly_mul, BigInt, Polynomial, Rational};

/// The pair `(n, k)`. Under [`BinomialForm::Shifted`] it names the
/// polynomial `[n+k choose k]_q`, of degree `n*k`, whose coefficient of `q^i`
/// counts partitions of `i` with at most `n` parts, each at most `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QBinomialQuery {
    pub n: usize,
    pub k: usize,
}

impl QBinomialQuery {
    pub fn new(n: usize, k: usize) -> Self {
        QBinomialQuery { n, k }
    }

    /// Degree of `[n+k choose k]_q`.
    pub fn degree(&self) -> usize {
        self.n * self.k
    }
}

/// Which Gaussian binomial a query denotes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BinomialForm {
    /// `[n choose k]_q`, requires `k <= n`.
    Standard,
    /// `[n+k choose k]_q`, the object studied for fixed `k` and growing `n`.
    Shifted,
}

impl BinomialForm {
    fn top_bottom(self, query: QBinomialQuery) -> (usize, usize) {
        match self {
            BinomialForm::Standard => (query.n, query.k),
            BinomialForm::Shifted => (query.n + query.k, query.k),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientReport {
    pub symmetric: bool,
    pub unimodal: bool,
    /// First and last index at which the maximum coefficient occurs.
    pub peak_index_range: (usize, usize),
    pub total: BigInt,
}

/// `[n]_q = 1 + q + ... + q^(n-1)`.
pub fn q_integer(n: usize) -> Polynomial {
    Polynomial::new(vec![BigInt::one(); n])
}

/// `[n]!_q = [n]_q [n-1]_q ... [1]_q`.
pub fn q_factorial(n: usize) -> Polynomial {
    (1..=n).fold(Polynomial::one(), |acc, i| poly_mul(&acc, &q_integer(i)))
}

fn check_bounds(top: usize, bottom: usize) -> Result<()> {
    if bottom > top {
        return Err(Error::InvalidArguments(format!(
            "cannot choose {bottom} from {top}"
        )));
    }
    Ok(())
}

/// `[top choose bottom]_q = [top]!_q / ([top-bottom]!_q [bottom]!_q)`.
///
/// The common factor `[top-bottom]!_q` is cancelled before dividing, so the
/// division performed is `[top]_q [top-1]_q ... [top-bottom+1]_q / [bottom]!_q`.
pub fn gaussian_binomial(top: usize, bottom: usize) -> Result<Polynomial> {
    check_bounds(top, bottom)?;
    let bottom = bottom.min(top - bottom);
    let falling = (top - bottom + 1..=top).fold(Polynomial::one(), |acc, i| poly_mul(&acc, &q_integer(i)));
    poly_exact_div(&falling, &q_factorial(bottom))
}

pub fn q_binomial(query: QBinomialQuery, form: BinomialForm) -> Result<Polynomial> {
    let (top, bottom) = form.top_bottom(query);
    gaussian_binomial(top, bottom)
}

/// Same polynomial as [`q_binomial`], built bottom-up from
/// `[N, K] = [N-1, K-1] + q^K [N-1, K]`.
pub fn q_binomial_pascal(query: QBinomialQuery, form: BinomialForm) -> Result<Polynomial> {
    let (top, bottom) = form.top_bottom(query);
    check_bounds(top, bottom)?;

    // row[j] holds [N, j] for the current N, j <= bottom
    let mut row: Vec<Polynomial> = vec![Polynomial::one()];
    for big_n in 1..=top {
        let width = big_n.min(bottom);
        let mut next = Vec::with_capacity(width + 1);
        next.push(Polynomial::one());
        for j in 1..=width {
            let left = &row[j - 1];
            let shifted = match row.get(j) {
                Some(above) => above.shift_up(j),
                None => Polynomial::zero(),
            };
            next.push(left + &shifted);
        }
        row = next;
    }
    Ok(row.swap_remove(bottom))
}

/// `[n+k choose k]_q` by counting partitions in an `n` by `k` box.
///
/// Partitions with at most `n` parts each at most `k` are conjugate to those
/// with at most `k` parts each at most `n`, so the table is indexed by the
/// smaller of the two and parts range over the larger.
pub fn q_binomial_partition_dp(query: QBinomialQuery) -> Polynomial {
    let max_parts = query.n.min(query.k);
    let max_part = query.n.max(query.k);
    let size = query.degree();

    // by_count[c][i]: partitions of i into exactly c parts seen so far
    let mut by_count = vec![vec![BigInt::zero(); size + 1]; max_parts + 1];
    by_count[0][0] = BigInt::one();
    for part in 1..=max_part {
        for c in 1..=max_parts {
            let (lower, upper) = by_count.split_at_mut(c);
            let prev = &lower[c - 1];
            for i in part..=size {
                if !prev[i - part].is_zero() {
                    upper[0][i] += &prev[i - part];
                }
            }
        }
    }

    let mut coeffs = vec![BigInt::zero(); size + 1];
    for row in &by_count {
        for (acc, v) in coeffs.iter_mut().zip(row) {
            *acc += v;
        }
    }
    Polynomial::new(coeffs)
}

/// Exact value of `p` at a rational point. At `q = 1` a Gaussian binomial
/// gives the ordinary binomial; at a prime power it counts subspaces over
/// the finite field of that size.
pub fn evaluate(p: &Polynomial, x: &Rational) -> Rational {
    p.evaluate(x)
}

pub fn coefficient_report(p: &Polynomial) -> Result<CoefficientReport> {
    let coeffs = p.coeffs();
    if coeffs.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    if let Some(index) = coeffs.iter().position(|c| c.is_negative()) {
        return Err(Error::NegativeCoefficient { index });
    }

    let symmetric = coeffs.iter().eq(coeffs.iter().rev());

    let max = coeffs.iter().max().expect("nonempty");
    let first = coeffs.iter().position(|c| c == max).expect("max present");
    let last = coeffs.iter().rposition(|c| c == max).expect("max present");
    let unimodal = coeffs[..=first].windows(2).all(|w| w[0] <= w[1])
        && coeffs[last..].windows(2).all(|w| w[0] >= w[1])
        && coeffs[first..=last].iter().all(|c| c == max);

    Ok(CoefficientReport {
        symmetric,
        unimodal,
        peak_index_range: (first, last),
        total: coeffs.iter().sum(),
    })
}
