//! Laurent polynomials in one formal variable `q` with arbitrary-precision
//! integer coefficients, used for internal-degree bookkeeping.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

/// A Laurent polynomial in `q` over the integers. Zero coefficients are
/// never stored.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct QPolynomial {
    coeffs: BTreeMap<i64, BigInt>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial::default()
    }

    pub fn one() -> Self {
        QPolynomial::monomial(0, BigInt::from(1))
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        QPolynomial::monomial(0, c.into())
    }

    pub fn monomial(exp: i64, coeff: impl Into<BigInt>) -> Self {
        let coeff = coeff.into();
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(exp, coeff);
        }
        QPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Sorted (exponent, coefficient) pairs.
    pub fn terms(&self) -> impl Iterator<Item = (&i64, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn add_assign_term(&mut self, exp: i64, coeff: &BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(exp).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    /// Multiplies by `q^d`.
    pub fn shifted(&self, d: i64) -> Self {
        QPolynomial {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, c)| (e + d, c.clone()))
                .collect(),
        }
    }

    /// Substitutes `q -> q^m`.
    pub fn stretched(&self, m: i64) -> Self {
        QPolynomial {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, c)| (e * m, c.clone()))
                .collect(),
        }
    }

    /// Substitutes `q -> 1/q`.
    pub fn reciprocal(&self) -> Self {
        self.stretched(-1)
    }

    /// The value at `q = 1`, i.e. the sum of all coefficients.
    pub fn evaluate_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;
    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let mut out = self.clone();
        for (&e, c) in rhs.coeffs.iter() {
            out.add_assign_term(e, c);
        }
        out
    }
}

impl Sub for &QPolynomial {
    type Output = QPolynomial;
    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        let mut out = self.clone();
        for (&e, c) in rhs.coeffs.iter() {
            out.add_assign_term(e, &(-c));
        }
        out
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        let mut out = QPolynomial::zero();
        for (&e1, c1) in self.coeffs.iter() {
            for (&e2, c2) in rhs.coeffs.iter() {
                out.add_assign_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }
}

impl fmt::Debug for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*q")?,
                _ => write!(f, "{c}*q^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// The Gaussian binomial `[n choose m]_q`, computed by the q-Pascal
/// recurrence. Zero when `m > n`.
pub fn gaussian_binomial(n: u64, m: u64) -> QPolynomial {
    if m > n {
        return QPolynomial::zero();
    }
    // row-by-row: [n' choose j]_q = [n'-1 choose j-1]_q + q^j [n'-1 choose j]_q
    let mut row: Vec<QPolynomial> = vec![QPolynomial::one()];
    for _ in 1..=n {
        let prev = row;
        let width = prev.len() + 1;
        let mut next = Vec::with_capacity(width);
        for j in 0..width {
            let from_left = if j > 0 {
                prev[j - 1].clone()
            } else {
                QPolynomial::zero()
            };
            let from_up = if j < prev.len() {
                prev[j].shifted(j as i64)
            } else {
                QPolynomial::zero()
            };
            next.push(&from_left + &from_up);
        }
        row = next;
    }
    row[m as usize].clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_binomial_small() {
        assert_eq!(gaussian_binomial(2, 1), {
            let mut p = QPolynomial::one();
            p.add_assign_term(1, &BigInt::from(1));
            p
        });
        // [4 choose 2]_q = 1 + q + 2q^2 + q^3 + q^4
        let g = gaussian_binomial(4, 2);
        let expected: Vec<(i64, i64)> = vec![(0, 1), (1, 1), (2, 2), (3, 1), (4, 1)];
        let got: Vec<(i64, i64)> = g
            .terms()
            .map(|(&e, c)| (e, i64::try_from(c).unwrap()))
            .collect();
        assert_eq!(got, expected);
        assert_eq!(gaussian_binomial(5, 0), QPolynomial::one());
        assert_eq!(gaussian_binomial(3, 5), QPolynomial::zero());
    }

    #[test]
    fn gaussian_binomial_at_one_is_binomial() {
        fn binomial(n: u64, m: u64) -> i64 {
            let mut out = 1i64;
            for i in 0..m {
                out = out * (n - i) as i64 / (i + 1) as i64;
            }
            out
        }
        for n in 0..=10u64 {
            for m in 0..=n {
                assert_eq!(
                    gaussian_binomial(n, m).evaluate_at_one(),
                    BigInt::from(binomial(n, m))
                );
            }
        }
    }

    #[test]
    fn gaussian_binomial_symmetry() {
        for n in 0..=8u64 {
            for m in 0..=n {
                let g = gaussian_binomial(n, m);
                assert_eq!(g, gaussian_binomial(n, n - m));
                // palindromic: reversing q -> 1/q and recentering is the identity
                let deg = (m * (n - m)) as i64;
                assert_eq!(g.reciprocal().shifted(deg), g);
            }
        }
    }

    #[test]
    fn ring_operations() {
        let a = QPolynomial::monomial(-1, 2);
        let b = QPolynomial::monomial(1, 3);
        let prod = &a * &b;
        assert_eq!(prod, QPolynomial::constant(6));
        let sum = &a + &b;
        assert_eq!(sum.coefficient(-1), BigInt::from(2));
        assert_eq!(sum.coefficient(1), BigInt::from(3));
        let diff = &sum - &a;
        assert_eq!(diff, b);
    }
}
