use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{rat_to_string, ExactRat};
use crate::error::{Error, Result};

/// Univariate polynomial in `n` with exact rational coefficients, stored in
/// ascending degree with no trailing zeros. The zero polynomial has no
/// coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: Vec<ExactRat>,
}

impl RatPoly {
    pub fn from_coeffs(mut coeffs: Vec<ExactRat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| ExactRat::from_integer(BigInt::from(c))).collect())
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(ExactRat::one())
    }

    pub fn constant(c: ExactRat) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The indeterminate `n`.
    pub fn var() -> Self {
        Self::from_coeffs(vec![ExactRat::zero(), ExactRat::one()])
    }

    /// Ascending coefficients.
    pub fn coeffs(&self) -> &[ExactRat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> ExactRat {
        self.coeffs.last().cloned().unwrap_or_else(ExactRat::zero)
    }

    pub fn scale(&self, c: &ExactRat) -> RatPoly {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Horner evaluation.
    pub fn eval(&self, n: &ExactRat) -> ExactRat {
        self.coeffs.iter().rev().fold(ExactRat::zero(), |acc, c| acc * n + c)
    }

    pub fn eval_int(&self, n: i64) -> ExactRat {
        self.eval(&ExactRat::from_integer(BigInt::from(n)))
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;

    fn add(self, rhs: &RatPoly) -> RatPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let zero = ExactRat::zero();
        let coeffs = (0..len)
            .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
            .collect();
        RatPoly::from_coeffs(coeffs)
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;

    fn neg(self) -> RatPoly {
        RatPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;

    fn sub(self, rhs: &RatPoly) -> RatPoly {
        self + &(-rhs)
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;

    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs = vec![ExactRat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RatPoly::from_coeffs(coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatPoly {
            type Output = RatPoly;
            fn $m(self, rhs: RatPoly) -> RatPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for RatPoly {
    /// Highest degree first: `1/2*n^2 + 1/2*n - 1`, `n - 2`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let var = match deg {
                0 => String::new(),
                1 => "n".to_string(),
                d => format!("n^{d}"),
            };
            if deg == 0 {
                write!(f, "{}", rat_to_string(&abs))?;
            } else if abs.is_one() {
                write!(f, "{var}")?;
            } else {
                write!(f, "{}*{var}", rat_to_string(&abs))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPoly({self})")
    }
}

/// Lagrange interpolation through integer abscissae: the unique polynomial of
/// degree below `points.len()` through every point.
pub fn ratpoly_interpolate(points: &[(i64, ExactRat)]) -> Result<RatPoly> {
    if points.is_empty() {
        return Err(Error::Domain("interpolation needs at least one point".into()));
    }
    for (i, (x, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(y, _)| y == x) {
            return Err(Error::Domain(format!("duplicate interpolation abscissa {x}")));
        }
    }
    let mut result = RatPoly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut basis = RatPoly::one();
        let mut denom = BigInt::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            basis = &basis * &RatPoly::from_int_coeffs(&[-xj, 1]);
            denom *= BigInt::from(xi - xj);
        }
        result = &result + &basis.scale(&(yi / ExactRat::from_integer(denom)));
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn int(x: i64) -> ExactRat {
        ExactRat::from_integer(BigInt::from(x))
    }

    #[test]
    fn interpolation_examples() {
        let p = ratpoly_interpolate(&[(0, int(1)), (1, int(2))]).unwrap();
        assert_eq!(p, RatPoly::from_int_coeffs(&[1, 1]));
        let p = ratpoly_interpolate(&[(0, int(0)), (1, int(1)), (2, int(4))]).unwrap();
        assert_eq!(p, RatPoly::from_int_coeffs(&[0, 0, 1]));
        let p = ratpoly_interpolate(&[(5, int(7))]).unwrap();
        assert_eq!(p, RatPoly::from_int_coeffs(&[7]));
    }

    #[test]
    fn interpolation_errors() {
        assert!(matches!(ratpoly_interpolate(&[]), Err(Error::Domain(_))));
        assert!(matches!(ratpoly_interpolate(&[(1, int(1)), (1, int(2))]), Err(Error::Domain(_))));
    }

    #[test]
    fn rendering() {
        assert_eq!(RatPoly::zero().to_string(), "0");
        assert_eq!(RatPoly::one().to_string(), "1");
        assert_eq!(RatPoly::var().to_string(), "n");
        assert_eq!(RatPoly::from_int_coeffs(&[-2, 1]).to_string(), "n - 2");
        let half = ExactRat::new(BigInt::from(1), BigInt::from(2));
        let p = RatPoly::from_coeffs(vec![int(-1), half.clone(), half]);
        assert_eq!(p.to_string(), "1/2*n^2 + 1/2*n - 1");
        assert_eq!(RatPoly::from_int_coeffs(&[0, -3, 0, -1]).to_string(), "-n^3 - 3*n");
    }

    #[test]
    fn ring_ops() {
        let a = RatPoly::from_int_coeffs(&[1, 1]);
        let b = RatPoly::from_int_coeffs(&[-1, 1]);
        assert_eq!(&a * &b, RatPoly::from_int_coeffs(&[-1, 0, 1]));
        assert_eq!(&a - &a, RatPoly::zero());
        assert_eq!((&a + &b).degree(), Some(1));
        assert_eq!(RatPoly::zero().degree(), None);
    }

    proptest! {
        #[test]
        fn interpolation_reproduces_points(ys in prop::collection::vec(-50i64..50, 1..8), start in -20i64..20) {
            let pts: Vec<(i64, ExactRat)> = ys.iter().enumerate().map(|(i, &y)| (start + 3 * i as i64, int(y))).collect();
            let p = ratpoly_interpolate(&pts).unwrap();
            prop_assert!(p.degree().map_or(0, |d| d + 1) <= pts.len());
            for (x, y) in &pts {
                prop_assert_eq!(&p.eval_int(*x), y);
            }
        }
    }
}
