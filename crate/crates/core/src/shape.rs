//! Limit shapes `L_k`: the density of a sum of `k` independent uniform
//! `[0, 1]` variables, rescaled from `[0, k]` to `[0, 1]`.
//!
//! With `IH_k(t) = 1/(k-1)! * sum_{j <= floor(t)} (-1)^j C(k, j) (t - j)^(k-1)`
//! the shape is `L_k(x) = k * IH_k(k x)`, a polynomial of degree `k - 1` on
//! each `[i/k, (i+1)/k]`.
//!
//! Geometrically `IH_k(t)` is the `(k-1)`-volume of the slice of `[0,1]^k` by
//! the hyperplane `x_1 + ... + x_k = t`, divided by `sqrt(k)`. Slicing the
//! ordered simplex `0 <= x_1 <= ... <= x_k <= 1` instead divides every slice
//! by `k!`, which disappears after normalization.

use num_integer::binomial;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{BigInt, RatPoly, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiecewisePolynomial {
    k: usize,
    pieces: Vec<RatPoly>,
}

impl PiecewisePolynomial {
    pub fn k(&self) -> usize {
        self.k
    }

    /// `pieces()[i]` governs `[i/k, (i+1)/k]`.
    pub fn pieces(&self) -> &[RatPoly] {
        &self.pieces
    }

    pub fn breakpoint(&self, i: usize) -> Rational {
        Rational::new(BigInt::from(i), BigInt::from(self.k))
    }

    fn piece_index(&self, x: &Rational) -> usize {
        let scaled = x * BigInt::from(self.k);
        scaled.floor().to_integer().to_usize().unwrap_or(0).min(self.k - 1)
    }
}

fn unit_domain(x: &Rational) -> Result<()> {
    if x < &Rational::zero() || x > &Rational::one() {
        return Err(Error::OutOfDomain {
            lower: "0".into(),
            upper: "1".into(),
        });
    }
    Ok(())
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Piece `i` of the uniform-sum density on `[i, i+1]`, as a polynomial in `t`.
fn irwin_hall_piece(k: usize, i: usize) -> RatPoly {
    let scale = Rational::new(BigInt::one(), factorial(k - 1));
    let mut acc = RatPoly::zero();
    for j in 0..=i.min(k) {
        let c = binomial(BigInt::from(k), BigInt::from(j));
        let c = if j % 2 == 0 { c } else { -c };
        // (t - j)^(k-1)
        let base = RatPoly::new(vec![Rational::from_integer(-BigInt::from(j)), Rational::one()]);
        let power = (0..k - 1).fold(RatPoly::one(), |p, _| &p * &base);
        acc = &acc + &power.scale(&Rational::from_integer(c));
    }
    acc.scale(&scale)
}

/// Exact density of the sum of `k` uniform `[0, 1]` variables at `t`.
pub fn irwin_hall_density(k: usize, t: &Rational) -> Result<Rational> {
    if k == 0 {
        return Err(Error::InvalidArguments("k must be at least 1".into()));
    }
    let upper = Rational::from_integer(BigInt::from(k));
    if t < &Rational::zero() || t > &upper {
        return Err(Error::OutOfDomain {
            lower: "0".into(),
            upper: k.to_string(),
        });
    }
    let i = t.floor().to_integer().to_usize().unwrap_or(0).min(k - 1);
    Ok(irwin_hall_piece(k, i).eval(t))
}

pub fn limit_shape(k: usize) -> Result<PiecewisePolynomial> {
    if k == 0 {
        return Err(Error::InvalidArguments("k must be at least 1".into()));
    }
    let kk = Rational::from_integer(BigInt::from(k));
    let pieces = (0..k)
        .map(|i| irwin_hall_piece(k, i).dilate(&kk).scale(&kk))
        .collect();
    Ok(PiecewisePolynomial { k, pieces })
}

pub fn evaluate_shape(shape: &PiecewisePolynomial, x: &Rational) -> Result<Rational> {
    unit_domain(x)?;
    Ok(shape.pieces[shape.piece_index(x)].eval(x))
}

/// `∫_0^x L(s) ds`.
pub fn shape_cdf(shape: &PiecewisePolynomial, x: &Rational) -> Result<Rational> {
    unit_domain(x)?;
    let last = shape.piece_index(x);
    let mut total = Rational::zero();
    for (i, piece) in shape.pieces.iter().enumerate().take(last + 1) {
        let anti = piece.antiderivative();
        let lo = shape.breakpoint(i);
        let hi = if i == last { x.clone() } else { shape.breakpoint(i + 1) };
        total += anti.eval(&hi) - anti.eval(&lo);
    }
    Ok(total)
}

/// `(k-1)`-dimensional volume of `[0,1]^k ∩ {x_1 + ... + x_k = t}`, for
/// `t` in `[0, k]`.
pub fn cube_slice_volume(k: usize, t: &Rational) -> Result<f64> {
    let density = irwin_hall_density(k, t)?;
    let density = density.to_f64().expect("finite rational");
    Ok((k as f64).sqrt() * density)
}
