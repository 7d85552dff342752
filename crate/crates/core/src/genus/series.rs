//! Truncated power series over the rationals, enough to produce the
//! characteristic series of the genera used here.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rational::Rational;

/// `Σ_{k ≤ len-1} a_k x^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Rational>,
}

fn factorial(k: usize) -> Rational {
    Rational::from_integer((1..=k).map(BigInt::from).product())
}

impl Series {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        Series { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// `exp(s·x)` truncated to `len` terms.
    pub fn exp_scaled(s: &Rational, len: usize) -> Self {
        let mut pow = Rational::one();
        let mut c = Vec::with_capacity(len);
        for k in 0..len {
            c.push(&pow / factorial(k));
            pow *= s;
        }
        Series { coeffs: c }
    }

    pub fn mul(&self, other: &Series) -> Series {
        let len = self.coeffs.len().min(other.coeffs.len());
        let mut out = vec![Rational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(len - i) {
                out[i + j] += a * b;
            }
        }
        Series { coeffs: out }
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn inverse(&self) -> Option<Series> {
        let a0 = self.coeffs.first()?;
        if a0.is_zero() {
            return None;
        }
        let len = self.coeffs.len();
        let inv0 = a0.recip();
        let mut b: Vec<Rational> = vec![inv0.clone()];
        for k in 1..len {
            let s = (1..=k)
                .map(|i| &self.coeffs[i] * &b[k - i])
                .fold(Rational::zero(), |acc, v| acc + v);
            b.push(-s * &inv0);
        }
        Some(Series { coeffs: b })
    }

    /// Drops the constant term and shifts down: `(f(x) - f(0)) / x`.
    pub fn shift_down(&self) -> Series {
        Series {
            coeffs: self.coeffs.iter().skip(1).cloned().collect(),
        }
    }
}

/// `t / (1 - e^{-t})`, the Todd series, to `len` terms.
pub fn todd_series(len: usize) -> Series {
    // (1 - e^{-t}) / t, computed from one more term of e^{-t}
    let e = Series::exp_scaled(&-Rational::one(), len + 1);
    let one_minus: Vec<Rational> = e
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| {
            if k == 0 {
                Rational::one() - c
            } else {
                -c.clone()
            }
        })
        .collect();
    Series::new(one_minus)
        .shift_down()
        .inverse()
        .expect("constant term is 1")
}

/// `x / tanh(x) = x cosh(x) / sinh(x)` to `len` terms.
pub fn x_coth_series(len: usize) -> Series {
    let ep = Series::exp_scaled(&Rational::one(), len + 1);
    let em = Series::exp_scaled(&-Rational::one(), len + 1);
    let half = Rational::new(1.into(), 2.into());
    let cosh: Vec<Rational> = (0..len)
        .map(|k| (ep.coeff(k) + em.coeff(k)) * &half)
        .collect();
    let sinh: Vec<Rational> = (0..=len)
        .map(|k| (ep.coeff(k) - em.coeff(k)) * &half)
        .collect();
    let sinh_over_x = Series::new(sinh).shift_down();
    Series::new(cosh).mul(&sinh_over_x.inverse().expect("constant term is 1"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn todd_coefficients() {
        // 1 + t/2 + t^2/12 - t^4/720 + t^6/30240
        let s = todd_series(7);
        let expected = [
            frac(1, 1),
            frac(1, 2),
            frac(1, 12),
            int(0),
            frac(-1, 720),
            int(0),
            frac(1, 30240),
        ];
        assert_eq!(s.coeffs(), &expected);
    }

    #[test]
    fn coth_coefficients() {
        // 1 + x^2/3 - x^4/45 + 2x^6/945
        let s = x_coth_series(7);
        let expected = [
            int(1),
            int(0),
            frac(1, 3),
            int(0),
            frac(-1, 45),
            int(0),
            frac(2, 945),
        ];
        assert_eq!(s.coeffs(), &expected);
    }

    #[test]
    fn inverse_round_trip() {
        let s = Series::exp_scaled(&int(3), 10);
        let one = s.mul(&s.inverse().unwrap());
        assert_eq!(one.coeff(0), int(1));
        assert!((1..10).all(|k| one.coeff(k).is_zero()));
        assert!(Series::new(vec![int(0), int(1)]).inverse().is_none());
    }
}
