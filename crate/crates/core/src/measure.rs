//! Normalized coefficient measures and their Kolmogorov–Smirnov distance to
//! a limit shape.

use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactnum::{BigInt, Polynomial, Rational};
use crate::qcore::{q_binomial, BinomialForm, QBinomialQuery};
use crate::shape::{limit_shape, shape_cdf, PiecewisePolynomial};

/// Point masses on `[0, 1]` summing to one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmpiricalMeasure {
    atoms: Vec<(Rational, Rational)>,
    source_degree: usize,
}

impl EmpiricalMeasure {
    /// `(location, mass)` pairs with strictly increasing locations.
    pub fn atoms(&self) -> &[(Rational, Rational)] {
        &self.atoms
    }

    pub fn source_degree(&self) -> usize {
        self.source_degree
    }

    pub fn total_mass(&self) -> Rational {
        self.atoms.iter().map(|(_, m)| m).sum()
    }
}

/// Atom `i` sits at `i / deg(p)` with mass `a_i / p(1)`.
pub fn measure_from_polynomial(p: &Polynomial) -> Result<EmpiricalMeasure> {
    let coeffs = p.coeffs();
    if coeffs.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    if let Some(index) = coeffs.iter().position(|c| c.is_negative()) {
        return Err(Error::NegativeCoefficient { index });
    }
    let total: BigInt = coeffs.iter().sum();
    let degree = coeffs.len() - 1;
    let atoms = coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let location = if degree == 0 {
                Rational::zero()
            } else {
                Rational::new(BigInt::from(i), BigInt::from(degree))
            };
            (location, Rational::new(c.clone(), total.clone()))
        })
        .collect();
    Ok(EmpiricalMeasure {
        atoms,
        source_degree: degree,
    })
}

/// Exact `sup_x |F_em(x) - F_L(x)|`.
///
/// Between atoms the step CDF is flat while `F_L` is continuous and
/// nondecreasing, so the supremum is reached at an atom, from one side or the
/// other.
pub fn ks_distance_exact(em: &EmpiricalMeasure, shape: &PiecewisePolynomial) -> Result<Rational> {
    let mut below = Rational::zero();
    let mut sup = Rational::zero();
    for (x, mass) in &em.atoms {
        let target = shape_cdf(shape, x)?;
        let at = &below + mass;
        let gap = (&below - &target).abs().max((&at - &target).abs());
        if gap > sup {
            sup = gap;
        }
        below = at;
    }
    Ok(sup)
}

pub fn ks_distance(em: &EmpiricalMeasure, shape: &PiecewisePolynomial) -> Result<f64> {
    Ok(ks_distance_exact(em, shape)?
        .to_f64()
        .expect("distance lies in [0, 1]"))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConvergenceRow {
    pub n: usize,
    pub ks: f64,
}

/// KS distance from the measure of `[n+k choose k]_q` to `L_k`, one row per
/// `n`, in input order.
pub fn convergence_table(k: usize, n_list: &[usize]) -> Result<Vec<ConvergenceRow>> {
    if n_list.is_empty() {
        return Err(Error::InvalidArguments("n list is empty".into()));
    }
    if n_list.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArguments("n list must be strictly increasing".into()));
    }
    let shape = limit_shape(k)?;
    n_list
        .par_iter()
        .map(|&n| {
            let poly = q_binomial(QBinomialQuery::new(n, k), BinomialForm::Shifted)?;
            let em = measure_from_polynomial(&poly)?;
            Ok(ConvergenceRow {
                n,
                ks: ks_distance(&em, &shape)?,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::new(c.iter().map(|&v| BigInt::from(v)).collect())
    }

    #[test]
    fn measure_examples() {
        let m = measure_from_polynomial(&p(&[1, 1])).unwrap();
        assert_eq!(m.atoms(), &[(rat(0, 1), rat(1, 2)), (rat(1, 1), rat(1, 2))]);

        let m = measure_from_polynomial(&p(&[1, 1, 2, 1, 1])).unwrap();
        let masses: Vec<_> = m.atoms().iter().map(|a| a.1.clone()).collect();
        let locs: Vec<_> = m.atoms().iter().map(|a| a.0.clone()).collect();
        assert_eq!(masses, vec![rat(1, 6), rat(1, 6), rat(2, 6), rat(1, 6), rat(1, 6)]);
        assert_eq!(locs, vec![rat(0, 1), rat(1, 4), rat(1, 2), rat(3, 4), rat(1, 1)]);
        assert_eq!(m.source_degree(), 4);

        let m = measure_from_polynomial(&p(&[7])).unwrap();
        assert_eq!(m.atoms(), &[(rat(0, 1), rat(1, 1))]);

        assert_eq!(measure_from_polynomial(&Polynomial::zero()), Err(Error::ZeroPolynomial));
        assert_eq!(
            measure_from_polynomial(&p(&[1, -2, 3])),
            Err(Error::NegativeCoefficient { index: 1 })
        );
    }

    #[test]
    fn ks_examples() {
        let l1 = limit_shape(1).unwrap();
        let point = measure_from_polynomial(&p(&[1])).unwrap();
        assert_eq!(ks_distance(&point, &l1).unwrap(), 1.0);

        for d in [4usize, 10, 50] {
            let uniform = measure_from_polynomial(&Polynomial::new(vec![BigInt::from(1); d + 1])).unwrap();
            let ks = ks_distance_exact(&uniform, &l1).unwrap();
            assert!(ks <= rat(1, d as i64 + 1));
            assert!(ks > Rational::zero());
        }
    }

    #[test]
    fn table_checks_inputs() {
        assert!(convergence_table(3, &[]).is_err());
        assert!(convergence_table(3, &[20, 5]).is_err());
        assert!(convergence_table(3, &[5, 5]).is_err());
        let rows = convergence_table(1, &[10, 20]).unwrap();
        assert_eq!(rows.iter().map(|r| r.n).collect::<Vec<_>>(), vec![10, 20]);
        assert!(rows.iter().all(|r| r.ks <= 1.0 / r.n as f64));
    }
}
