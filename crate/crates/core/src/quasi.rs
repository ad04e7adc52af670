//! Quasipolynomials and the region structure of `[n+k choose k]_q`.
//!
//! Expanding the numerator of
//!
//! ```text
//! [n+k choose k]_q = (1 - q^(n+1)) ... (1 - q^(n+k)) / ((1 - q) ... (1 - q^k))
//! ```
//!
//! gives `sum_j (-1)^j q^(j*n + j(j+1)/2) [k choose j]_q`. Terms are grouped
//! into blocks by `j`. Below the first exponent of block `j + 1` only blocks
//! `0..=j` contribute, so the coefficient of `q^m` there is a signed sum of
//! shifted copies of the partition quasipolynomial `F(m)` of
//! `1 / ((1 - q) ... (1 - q^k))`. Each block boundary starts a new region.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{rational_to_integer, solve_linear_rational, BigInt, Polynomial, RatPoly, Rational};
use crate::qcore::{gaussian_binomial, q_binomial, BinomialForm, QBinomialQuery};

/// One polynomial per residue class; `polys[r]` applies when `m ≡ r (mod period)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quasipolynomial {
    period: usize,
    degree: usize,
    polys: Vec<RatPoly>,
}

impl Quasipolynomial {
    pub fn new(period: usize, degree: usize, polys: Vec<RatPoly>) -> Result<Self> {
        if period == 0 || polys.len() != period {
            return Err(Error::InvalidArguments(format!(
                "need exactly {period} residue polynomials (period must be positive), got {}",
                polys.len()
            )));
        }
        if polys.iter().any(|p| p.degree().is_some_and(|d| d > degree)) {
            return Err(Error::InvalidArguments(format!(
                "residue polynomial exceeds degree bound {degree}"
            )));
        }
        Ok(Quasipolynomial { period, degree, polys })
    }

    pub fn constant(value: Rational) -> Self {
        Quasipolynomial {
            period: 1,
            degree: 0,
            polys: vec![RatPoly::constant(value)],
        }
    }

    pub fn period(&self) -> usize {
        self.period
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn polys(&self) -> &[RatPoly] {
        &self.polys
    }

    pub fn residue_poly(&self, m: i64) -> &RatPoly {
        &self.polys[m.rem_euclid(self.period as i64) as usize]
    }

    pub fn evaluate(&self, m: i64) -> Rational {
        self.residue_poly(m).eval(&Rational::from_integer(BigInt::from(m)))
    }

    /// Value at `m` as an integer; `None` if it is fractional.
    pub fn evaluate_integer(&self, m: i64) -> Option<BigInt> {
        rational_to_integer(&self.evaluate(m))
    }

    /// The quasipolynomial `m ↦ self(m - offset)`, with the same period.
    pub fn shifted(&self, offset: i64) -> Quasipolynomial {
        let back = Rational::from_integer(BigInt::from(-offset));
        let polys = (0..self.period as i64)
            .map(|r| self.residue_poly(r - offset).translate(&back))
            .collect();
        Quasipolynomial {
            period: self.period,
            degree: self.degree,
            polys,
        }
    }

    /// Sum with `factor * other`. Periods must be equal.
    pub fn add_scaled(&self, other: &Quasipolynomial, factor: &Rational) -> Result<Quasipolynomial> {
        if self.period != other.period {
            return Err(Error::InvalidArguments(format!(
                "period mismatch: {} vs {}",
                self.period, other.period
            )));
        }
        let polys = self
            .polys
            .iter()
            .zip(&other.polys)
            .map(|(a, b)| a + &b.scale(factor))
            .collect();
        Ok(Quasipolynomial {
            period: self.period,
            degree: self.degree.max(other.degree),
            polys,
        })
    }

    /// Highest power of `m` whose coefficient differs between residue
    /// classes; `None` if the quasipolynomial is a plain polynomial.
    pub fn highest_periodic_degree(&self) -> Option<usize> {
        (0..=self.degree).rev().find(|&d| {
            let first = self.polys[0].coeff(d);
            self.polys.iter().any(|p| p.coeff(d) != first)
        })
    }

    /// Exact degree over all residues, `None` if identically zero.
    pub fn actual_degree(&self) -> Option<usize> {
        self.polys.iter().filter_map(|p| p.degree()).max()
    }
}

/// Term `sign * multiplicity * q^(block * n + exponent_offset)` of the
/// expanded numerator, for symbolic `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedTerm {
    pub sign: i8,
    pub multiplicity: BigInt,
    pub exponent_offset: i64,
    pub block: usize,
}

impl SignedTerm {
    pub fn exponent(&self, n: usize) -> i64 {
        (self.block * n) as i64 + self.exponent_offset
    }

    pub fn signed_multiplicity(&self) -> BigInt {
        if self.sign < 0 {
            -self.multiplicity.clone()
        } else {
            self.multiplicity.clone()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    pub label: usize,
    /// First index at which every block-`label` numerator term is present.
    pub left_end: i64,
    /// Last index before the next block of numerator terms appears.
    pub right_end: i64,
    /// Smallest index from which `formula` agrees with the true coefficients
    /// through `right_end`. May lie well below `left_end`.
    pub validity_start: i64,
    pub formula: Quasipolynomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionZone {
    pub start: i64,
    pub end: i64,
    pub values: Vec<BigInt>,
}

impl TransitionZone {
    pub fn width(&self) -> i64 {
        self.end - self.start + 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionDecomposition {
    pub n: usize,
    pub k: usize,
    pub regions: Vec<Region>,
    pub transition_zones: Vec<TransitionZone>,
}

impl RegionDecomposition {
    pub fn transition_width(&self) -> i64 {
        self.transition_zones.iter().map(TransitionZone::width).sum()
    }

    /// Region label covering `m`, or `None` inside a transition zone.
    pub fn label_at(&self, m: i64) -> Option<usize> {
        self.regions
            .iter()
            .find(|r| r.left_end <= m && m <= r.right_end)
            .map(|r| r.label)
    }
}

/// First `count` coefficients of the power series `1 / den`.
pub fn reciprocal_series(den: &Polynomial, count: usize) -> Result<Vec<BigInt>> {
    let c0 = den.coeff(0);
    if c0.abs() != BigInt::one() {
        return Err(Error::NonUnitConstantTerm);
    }
    let tail = &den.coeffs()[1.min(den.coeffs().len())..];
    let mut out: Vec<BigInt> = Vec::with_capacity(count);
    for m in 0..count {
        // c0 * a_m + sum_{j>=1} c_j a_{m-j} = [m == 0]
        let mut acc = if m == 0 { BigInt::one() } else { BigInt::zero() };
        for (j, c) in tail.iter().enumerate().take(m) {
            if !c.is_zero() {
                acc -= c * &out[m - j - 1];
            }
        }
        out.push(acc * &c0);
    }
    Ok(out)
}

/// Interpolates `values` (where `values[i]` is the value at
/// `start_index + i`) by one polynomial of degree at most `degree` per
/// residue class modulo `period`.
///
/// Each class is fitted on its first `degree + 1` samples and checked
/// against every remaining sample, of which there must be at least
/// `degree + 1`.
pub fn fit_quasipolynomial(
    values: &[BigInt],
    start_index: i64,
    period: usize,
    degree: usize,
) -> Result<Quasipolynomial> {
    if period == 0 {
        return Err(Error::InvalidArguments("period must be positive".into()));
    }
    let needed = 2 * (degree + 1);
    let mut samples: Vec<Vec<(i64, &BigInt)>> = vec![Vec::new(); period];
    for (i, v) in values.iter().enumerate() {
        let m = start_index + i as i64;
        samples[m.rem_euclid(period as i64) as usize].push((m, v));
    }

    let mut polys = Vec::with_capacity(period);
    for (residue, pts) in samples.iter().enumerate() {
        if pts.len() < needed {
            return Err(Error::InsufficientSamples {
                residue,
                available: pts.len(),
                required: needed,
            });
        }
        let (fit, check) = pts.split_at(degree + 1);
        let matrix: Vec<Vec<Rational>> = fit
            .iter()
            .map(|&(m, _)| {
                let x = Rational::from_integer(BigInt::from(m));
                std::iter::successors(Some(Rational::one()), |p| Some(p * &x))
                    .take(degree + 1)
                    .collect()
            })
            .collect();
        let rhs: Vec<Rational> = fit.iter().map(|&(_, v)| Rational::from_integer(v.clone())).collect();
        let poly = RatPoly::new(solve_linear_rational(&matrix, &rhs)?);
        for &(m, v) in check {
            if poly.eval(&Rational::from_integer(BigInt::from(m))) != Rational::from_integer(v.clone()) {
                return Err(Error::ValidationFailure { index: m });
            }
        }
        polys.push(poly);
    }
    Quasipolynomial::new(period, degree, polys)
}

/// `lcm(1, 2, ..., k)`, with `lcm() = 1`.
pub fn lcm_upto(k: usize) -> usize {
    (1..=k).fold(1, |acc, i| acc.lcm(&i))
}

/// `(1 - q)(1 - q^2)...(1 - q^k)`.
pub fn partition_denominator(k: usize) -> Polynomial {
    (1..=k).fold(Polynomial::one(), |acc, i| {
        let mut factor = vec![BigInt::zero(); i + 1];
        factor[0] = BigInt::one();
        factor[i] = -BigInt::one();
        &acc * &Polynomial::new(factor)
    })
}

/// The quasipolynomial counting partitions of `m` into parts of size at most
/// `k`. It gives the coefficients of `[n+k choose k]_q` for `m <= n`.
pub fn initial_quasipolynomial(k: usize) -> Result<Quasipolynomial> {
    if k == 0 {
        return Err(Error::InvalidArguments("k must be at least 1".into()));
    }
    let period = lcm_upto(k);
    let degree = k - 1;
    let series = reciprocal_series(&partition_denominator(k), 2 * (degree + 1) * period)?;
    fit_quasipolynomial(&series, 0, period, degree)
}

/// `prod_{i=1..k} (1 - q^(n+i))` as signed terms, ordered by block then
/// exponent.
pub fn numerator_expansion(k: usize) -> Vec<SignedTerm> {
    let mut terms = Vec::new();
    for block in 0..=k {
        let sign = if block % 2 == 0 { 1 } else { -1 };
        let base = (block * (block + 1) / 2) as i64;
        let inner = gaussian_binomial(k, block).expect("block <= k");
        for (i, c) in inner.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            terms.push(SignedTerm {
                sign,
                multiplicity: c.clone(),
                exponent_offset: base + i as i64,
                block,
            });
        }
    }
    terms
}

/// Coefficients of `[n+k choose k]_q` from the partition quasipolynomial and
/// the numerator expansion, with `F(x) = 0` for `x < 0`.
#[derive(Clone, Debug)]
pub struct CoefficientRecursion {
    n: usize,
    k: usize,
    base: Quasipolynomial,
    /// `F(0..=n*k)`, evaluated once from `base`.
    base_values: Vec<BigInt>,
    terms: Vec<SignedTerm>,
}

impl CoefficientRecursion {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        let base = initial_quasipolynomial(k)?;
        let base_values = (0..=(n * k) as i64)
            .map(|x| base.evaluate_integer(x).ok_or(Error::ValidationFailure { index: x }))
            .collect::<Result<_>>()?;
        Ok(CoefficientRecursion {
            n,
            k,
            base,
            base_values,
            terms: numerator_expansion(k),
        })
    }

    pub fn base(&self) -> &Quasipolynomial {
        &self.base
    }

    pub fn terms(&self) -> &[SignedTerm] {
        &self.terms
    }

    /// `F(x)`, zero below the origin.
    pub fn base_value(&self, x: i64) -> BigInt {
        if x < 0 {
            return BigInt::zero();
        }
        match self.base_values.get(x as usize) {
            Some(v) => v.clone(),
            None => self
                .base
                .evaluate_integer(x)
                .expect("partition counts are integers"),
        }
    }

    pub fn coefficient(&self, m: i64) -> Result<BigInt> {
        let max = (self.n * self.k) as i64;
        if m < 0 || m > max {
            return Err(Error::IndexOutOfRange { index: m, max });
        }
        let mut total = BigInt::zero();
        for term in &self.terms {
            let e = term.exponent(self.n);
            if e <= m {
                let f = &self.base_values[(m - e) as usize];
                if term.sign < 0 {
                    total -= &term.multiplicity * f;
                } else {
                    total += &term.multiplicity * f;
                }
            }
        }
        Ok(total)
    }

    /// Entry `r` combines every numerator term with `block <= r`, for
    /// `r` in `0..=k`.
    pub fn block_formulas(&self) -> Result<Vec<Quasipolynomial>> {
        let mut acc = Quasipolynomial::new(
            self.base.period(),
            self.base.degree(),
            vec![RatPoly::zero(); self.base.period()],
        )?;
        let mut out = Vec::with_capacity(self.k + 1);
        for block in 0..=self.k {
            for t in self.terms.iter().filter(|t| t.block == block) {
                acc = acc.add_scaled(
                    &self.base.shifted(t.exponent(self.n)),
                    &Rational::from_integer(t.signed_multiplicity()),
                )?;
            }
            out.push(acc.clone());
        }
        Ok(out)
    }
}

/// Coefficient of `q^m` in `[n+k choose k]_q`, assembled from shifted copies
/// of the partition quasipolynomial.
pub fn coefficient_via_recursion(n: usize, k: usize, m: i64) -> Result<BigInt> {
    if k == 0 {
        return if m == 0 {
            Ok(BigInt::one())
        } else {
            Err(Error::IndexOutOfRange { index: m, max: 0 })
        };
    }
    CoefficientRecursion::new(n, k)?.coefficient(m)
}

/// Smallest `n` accepted by [`region_decomposition`] for a given `k`.
pub fn min_region_n(k: usize) -> usize {
    (k * k).max(1)
}

/// Splits `[0, n*k]` into `k` quasipolynomial regions and the transition
/// zones between them.
///
/// Region `r` uses numerator blocks `0..=r`. It runs from the index where the
/// last block-`r` term appears (`0` for the first region) to one below the
/// first block-`r+1` exponent (`n*k` for the last region). The gaps between
/// consecutive regions are the transition zones; region `r`'s gap has
/// `r*(k-r)` entries regardless of `n`.
pub fn region_decomposition(n: usize, k: usize) -> Result<RegionDecomposition> {
    if k == 0 {
        return Err(Error::InvalidArguments("k must be at least 1".into()));
    }
    if n < min_region_n(k) {
        return Err(Error::InvalidArguments(format!(
            "n = {n} is too small for k = {k}; need n >= {}",
            min_region_n(k)
        )));
    }
    let truth = q_binomial(QBinomialQuery::new(n, k), BinomialForm::Shifted)?;
    let truth = truth.coeffs();
    let recursion = CoefficientRecursion::new(n, k)?;
    let top = (n * k) as i64;

    let formulas = recursion.block_formulas()?;

    let mut regions = Vec::with_capacity(k);
    for (r, formula) in formulas.into_iter().take(k).enumerate() {
        let right_end = if r + 1 == k {
            top
        } else {
            ((r + 1) * n + (r + 1) * (r + 2) / 2) as i64 - 1
        };
        let left_end = recursion
            .terms()
            .iter()
            .filter(|t| t.block == r)
            .map(|t| t.exponent(n))
            .max()
            .expect("every block has terms")
            .max(0);

        let matches = |m: i64| formula.evaluate(m) == Rational::from_integer(truth[m as usize].clone());
        if let Some(bad) = (left_end..=right_end).find(|&m| !matches(m)) {
            return Err(Error::ValidationFailure { index: bad });
        }
        let mut validity_start = left_end;
        while validity_start > 0 && matches(validity_start - 1) {
            validity_start -= 1;
        }

        regions.push(Region {
            label: r,
            left_end,
            right_end,
            validity_start,
            formula,
        });
    }

    let transition_zones = regions
        .windows(2)
        .filter(|w| w[1].left_end > w[0].right_end + 1)
        .map(|w| {
            let (start, end) = (w[0].right_end + 1, w[1].left_end - 1);
            TransitionZone {
                start,
                end,
                values: truth[start as usize..=end as usize].to_vec(),
            }
        })
        .collect();

    Ok(RegionDecomposition {
        n,
        k,
        regions,
        transition_zones,
    })
}
