//! Exact integers, rationals, and dense univariate polynomials.
//!
//! Integers and rationals come from `num-bigint` / `num-rational`; the
//! polynomial type is a dense coefficient vector where index `i` holds the
//! coefficient of `q^i`. The zero polynomial is the empty vector.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use num_bigint::BigInt;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// Dense polynomial over integer coefficients.
pub type Polynomial = Poly<BigInt>;

/// Dense polynomial over rational coefficients.
pub type RatPoly = Poly<Rational>;

/// Dense univariate polynomial. The highest stored coefficient is nonzero
/// unless the polynomial is zero, in which case nothing is stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Clone + Zero> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    /// `c * x^degree`.
    pub fn monomial(c: T, degree: usize) -> Self {
        let mut coeffs = vec![T::zero(); degree + 1];
        coeffs[degree] = c;
        Poly::new(coeffs)
    }

    pub fn constant(c: T) -> Self {
        Poly::new(vec![c])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero past the end.
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn map<U: Clone + Zero>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<T: Clone + Zero + One> Poly<T> {
    pub fn one() -> Self {
        Poly::constant(T::one())
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Poly::monomial(T::one(), 1)
    }
}

impl<T> Poly<T>
where
    T: Clone + Zero + One + for<'a> Mul<&'a T, Output = T> + for<'a> Add<&'a T, Output = T>,
{
    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x + c)
    }
}

impl<T> Poly<T>
where
    T: Clone + Zero + for<'a> Mul<&'a T, Output = T>,
{
    pub fn scale(&self, c: &T) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.clone() * c).collect())
    }
}

impl<T> Poly<T>
where
    T: Clone + Zero,
{
    /// Multiplies by `x^shift`.
    pub fn shift_up(&self, shift: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); shift];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }
}

impl<'a, T> Add<&'a Poly<T>> for &'a Poly<T>
where
    T: Clone + Zero + for<'b> Add<&'b T, Output = T>,
{
    type Output = Poly<T>;

    fn add(self, rhs: &'a Poly<T>) -> Poly<T> {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c = c.clone() + s;
        }
        Poly::new(coeffs)
    }
}

impl<'a, T> Neg for &'a Poly<T>
where
    T: Clone + Zero + Neg<Output = T>,
{
    type Output = Poly<T>;

    fn neg(self) -> Poly<T> {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<'a, T> Sub<&'a Poly<T>> for &'a Poly<T>
where
    T: Clone + Zero + Neg<Output = T> + for<'b> Add<&'b T, Output = T>,
{
    type Output = Poly<T>;

    fn sub(self, rhs: &'a Poly<T>) -> Poly<T> {
        self + &(-rhs)
    }
}

impl<'a, T> Mul<&'a Poly<T>> for &'a Poly<T>
where
    T: Clone + Zero + for<'b> Mul<&'b T, Output = T> + for<'b> Add<&'b T, Output = T>,
{
    type Output = Poly<T>;

    /// Schoolbook convolution. Zero coefficients of the left factor are
    /// skipped, so products with sparse factors like `1 - q^a` stay linear.
    fn mul(self, rhs: &'a Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let term = a.clone() * b;
                coeffs[i + j] = coeffs[i + j].clone() + &term;
            }
        }
        Poly::new(coeffs)
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl<T> $tr<Poly<T>> for Poly<T>
        where
            for<'a> &'a Poly<T>: $tr<&'a Poly<T>, Output = Poly<T>>,
        {
            type Output = Poly<T>;

            fn $method(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

pub fn poly_add(a: &Polynomial, b: &Polynomial) -> Polynomial {
    a + b
}

pub fn poly_mul(a: &Polynomial, b: &Polynomial) -> Polynomial {
    a * b
}

/// Exact quotient `num / den` over the integers.
///
/// Fails with [`Error::NonzeroRemainder`] if `den` does not divide `num`, and
/// with [`Error::InvalidArguments`] if `den` is zero.
pub fn poly_exact_div(num: &Polynomial, den: &Polynomial) -> Result<Polynomial> {
    let (den_deg, lead) = match (den.degree(), den.leading()) {
        (Some(d), Some(l)) => (d, l),
        _ => return Err(Error::InvalidArguments("division by the zero polynomial".into())),
    };
    let Some(num_deg) = num.degree() else {
        return Ok(Polynomial::zero());
    };
    if num_deg < den_deg {
        return Err(Error::NonzeroRemainder);
    }

    let mut rem = num.coeffs.clone();
    let mut quot = vec![BigInt::zero(); num_deg - den_deg + 1];
    for qi in (0..quot.len()).rev() {
        let top = &rem[qi + den_deg];
        if top.is_zero() {
            continue;
        }
        let (q, r) = top.div_rem(lead);
        if !r.is_zero() {
            return Err(Error::NonzeroRemainder);
        }
        for (j, d) in den.coeffs.iter().enumerate() {
            if !d.is_zero() {
                rem[qi + j] -= &q * d;
            }
        }
        quot[qi] = q;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return Err(Error::NonzeroRemainder);
    }
    Ok(Polynomial::new(quot))
}

impl Polynomial {
    pub fn to_rational(&self) -> RatPoly {
        self.map(|c| Rational::from_integer(c.clone()))
    }

    /// Exact value at a rational point.
    pub fn evaluate(&self, x: &Rational) -> Rational {
        self.to_rational().eval(x)
    }
}

impl RatPoly {
    /// `p(x + a)`.
    pub fn translate(&self, a: &Rational) -> RatPoly {
        // Taylor shift by repeated synthetic division.
        let mut c = self.coeffs.clone();
        let d = c.len();
        for i in 0..d {
            for j in (i..d.saturating_sub(1)).rev() {
                let carry = &c[j + 1] * a;
                c[j] += carry;
            }
        }
        RatPoly::new(c)
    }

    /// `p(c * x)`.
    pub fn dilate(&self, c: &Rational) -> RatPoly {
        let mut power = Rational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a * &power);
            power *= c;
        }
        RatPoly::new(out)
    }

    pub fn derivative(&self) -> RatPoly {
        RatPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// Antiderivative with zero constant term.
    pub fn antiderivative(&self) -> RatPoly {
        let mut out = vec![Rational::zero()];
        out.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c / Rational::from_integer(BigInt::from(i + 1))),
        );
        RatPoly::new(out)
    }

    /// Renders e.g. `1/144 m^3 + 5/48 m^2 + 1/2 m + 1`, highest degree first.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if i == 0 {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{mag} {mono}"));
            }
        }
        out
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_rational().display_in("q"))
    }
}

/// Solves the square system `matrix * x = rhs` by Gauss-Jordan elimination
/// over the rationals.
pub fn solve_linear_rational(matrix: &[Vec<Rational>], rhs: &[Rational]) -> Result<Vec<Rational>> {
    let n = rhs.len();
    if matrix.len() != n || matrix.iter().any(|row| row.len() != n) {
        return Err(Error::InvalidArguments(format!(
            "expected a square {n}x{n} system"
        )));
    }
    let mut aug: Vec<Vec<Rational>> = matrix
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();

    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !aug[r][col].is_zero())
            .ok_or(Error::SingularSystem)?;
        aug.swap(col, pivot);
        let inv = aug[col][col].recip();
        for v in aug[col].iter_mut().skip(col) {
            *v *= &inv;
        }
        let pivot_row = aug[col].clone();
        for (r, row) in aug.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                *v -= &factor * p;
            }
        }
    }
    Ok(aug.into_iter().map(|mut row| row.pop().unwrap()).collect())
}

/// Integer convenience for building rationals.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Converts a rational with unit denominator to an integer.
pub fn rational_to_integer(r: &Rational) -> Option<BigInt> {
    r.is_integer().then(|| r.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::new(c.iter().map(|&v| BigInt::from(v)).collect())
    }

    #[test]
    fn add_examples() {
        assert_eq!(poly_add(&p(&[1, 1]), &p(&[1, -1])), p(&[2]));
        assert_eq!(poly_add(&p(&[3, 0, 4]), &Polynomial::zero()), p(&[3, 0, 4]));
        assert_eq!(poly_add(&p(&[1, 1, 1]), &p(&[0, 1, 0, 1])), p(&[1, 2, 1, 1]));
        assert!(poly_add(&p(&[0, 2]), &p(&[0, -2])).coeffs().is_empty());
    }

    #[test]
    fn mul_examples() {
        assert_eq!(poly_mul(&p(&[1, -1]), &p(&[1, 1, 1])), p(&[1, 0, 0, -1]));
        assert_eq!(poly_mul(&p(&[5, 0, 2]), &Polynomial::one()), p(&[5, 0, 2]));
        assert_eq!(poly_mul(&p(&[1, 1]), &p(&[1, 1])), p(&[1, 2, 1]));
        assert_eq!(poly_mul(&p(&[1, 1]), &Polynomial::zero()), Polynomial::zero());
    }

    #[test]
    fn exact_div_examples() {
        assert_eq!(poly_exact_div(&p(&[1, 0, 0, 0, -1]), &p(&[1, -1])).unwrap(), p(&[1, 1, 1, 1]));
        assert_eq!(poly_exact_div(&p(&[2, 7]), &Polynomial::one()).unwrap(), p(&[2, 7]));
        assert_eq!(
            poly_exact_div(&p(&[1, 0, 1]), &p(&[1, 1])),
            Err(Error::NonzeroRemainder)
        );
        assert!(matches!(
            poly_exact_div(&p(&[1]), &Polynomial::zero()),
            Err(Error::InvalidArguments(_))
        ));
        // leading coefficient must divide exactly
        assert_eq!(poly_exact_div(&p(&[1, 3]), &p(&[0, 2])), Err(Error::NonzeroRemainder));
        assert_eq!(poly_exact_div(&p(&[2, 6]), &p(&[1, 3])).unwrap(), p(&[2]));
    }

    #[test]
    fn solve_examples() {
        let id = vec![vec![rat(1, 1), rat(0, 1)], vec![rat(0, 1), rat(1, 1)]];
        assert_eq!(solve_linear_rational(&id, &[rat(3, 4), rat(-2, 1)]).unwrap(), vec![rat(3, 4), rat(-2, 1)]);

        // Vandermonde rows (1, m) at m = 0, 1.
        let vander = vec![vec![rat(1, 1), rat(0, 1)], vec![rat(1, 1), rat(1, 1)]];
        assert_eq!(solve_linear_rational(&vander, &[rat(1, 1), rat(2, 1)]).unwrap(), vec![rat(1, 1), rat(1, 1)]);

        let singular = vec![vec![rat(1, 1), rat(2, 1)], vec![rat(1, 1), rat(2, 1)]];
        assert_eq!(solve_linear_rational(&singular, &[rat(1, 1), rat(1, 1)]), Err(Error::SingularSystem));

        let ragged = vec![vec![rat(1, 1)]];
        assert!(solve_linear_rational(&ragged, &[rat(1, 1), rat(2, 1)]).is_err());
    }

    #[test]
    fn rational_reduction() {
        let r = rat(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(Rational::new(r.numer().clone(), r.denom().clone()), r);
    }

    #[test]
    fn calculus_helpers() {
        let q = RatPoly::new(vec![rat(1, 1), rat(2, 1), rat(3, 1)]);
        assert_eq!(q.derivative(), RatPoly::new(vec![rat(2, 1), rat(6, 1)]));
        assert_eq!(q.antiderivative().derivative(), q);
        // (x+1)^2 = x^2 + 2x + 1
        let sq = RatPoly::new(vec![rat(0, 1), rat(0, 1), rat(1, 1)]);
        assert_eq!(sq.translate(&rat(1, 1)), RatPoly::new(vec![rat(1, 1), rat(2, 1), rat(1, 1)]));
        assert_eq!(sq.dilate(&rat(3, 1)), RatPoly::new(vec![rat(0, 1), rat(0, 1), rat(9, 1)]));
    }

    #[test]
    fn display() {
        let f = RatPoly::new(vec![rat(1, 1), rat(1, 2), rat(5, 48), rat(1, 144)]);
        assert_eq!(f.display_in("m"), "1/144 m^3 + 5/48 m^2 + 1/2 m + 1");
        let g = RatPoly::new(vec![rat(-9, 2), rat(27, 1), rat(-27, 1)]);
        assert_eq!(g.display_in("x"), "-27 x^2 + 27 x - 9/2");
        assert_eq!(RatPoly::zero().display_in("x"), "0");
        assert_eq!(p(&[1, 0, -1]).to_string(), "-q^2 + 1");
    }

    fn small_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(-20i64..20, 0..8).prop_map(|v| p(&v))
    }

    proptest! {
        #[test]
        fn div_undoes_mul(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            let prod = poly_mul(&a, &b);
            prop_assert_eq!(poly_exact_div(&prod, &b).unwrap(), a);
        }

        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn product_degree(a in small_poly(), b in small_poly()) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            let d = poly_mul(&a, &b).degree().unwrap();
            prop_assert_eq!(d, a.degree().unwrap() + b.degree().unwrap());
        }

        #[test]
        fn rational_sum_matches_cross_multiplication(
            a in -50i64..50, b in 1i64..50, c in -50i64..50, d in 1i64..50
        ) {
            let sum = rat(a, b) + rat(c, d);
            // cross-multiplied numerator over bd
            prop_assert_eq!(sum.clone(), rat(a * d + c * b, b * d));
            prop_assert_eq!(Rational::new(sum.numer().clone(), sum.denom().clone()), sum.clone());
            prop_assert!(sum.denom() > &BigInt::zero());
        }
    }
}
