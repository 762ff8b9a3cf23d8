//! Fraction-free polynomials: integer coefficients over one shared
//! denominator. The hot loops work here and normalise once at the end.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::RationalPolynomial;

/// The polynomial `Σ num[k] x^k / den`, with `den > 0`. Not kept in lowest
/// terms.
#[derive(Clone, Debug)]
pub(crate) struct ScaledPolynomial {
    pub num: Vec<BigInt>,
    pub den: BigInt,
}

impl ScaledPolynomial {
    pub fn one() -> Self {
        ScaledPolynomial {
            num: vec![BigInt::one()],
            den: BigInt::one(),
        }
    }

    pub fn from_rational(p: &RationalPolynomial) -> Self {
        let den = p
            .coeffs()
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = p
            .coeffs()
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        ScaledPolynomial { num, den }
    }

    pub fn to_rational_coeffs(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|c| BigRational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn to_rational(&self) -> RationalPolynomial {
        RationalPolynomial::from_coeffs(self.to_rational_coeffs())
    }

    /// Multiply by `(v + u t)` and divide by `v`, i.e. by `1 + (u/v) t`.
    pub fn mul_linear(&mut self, a: &BigRational) {
        if a.is_zero() {
            return;
        }
        let (u, v) = (a.numer(), a.denom());
        self.num.push(BigInt::zero());
        for j in (1..self.num.len()).rev() {
            let carry = u * &self.num[j - 1];
            self.num[j] *= v;
            self.num[j] += carry;
        }
        self.num[0] *= v;
        self.den *= v;
    }
}
