use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{ExactInt, ExactRat, RatPoly};

/// `b!` as an exact integer.
pub fn factorial(b: usize) -> ExactInt {
    (1..=b).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `C(a, b) = a(a−1)⋯(a−b+1) / b!` for any integer `a`; zero for `b < 0`.
pub fn binomial(a: &ExactInt, b: i64) -> ExactInt {
    if b < 0 {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..b {
        num *= a - BigInt::from(i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

/// The degree-`b` polynomial `n ↦ C(n + offset, b)`.
pub fn binomial_poly(offset: i64, b: usize) -> RatPoly {
    let mut p = RatPoly::one();
    for i in 0..b {
        // factor (n + offset − i)
        p = &p * &RatPoly::from_coeffs(vec![ExactRat::from_integer(BigInt::from(offset - i as i64)), ExactRat::one()]);
    }
    p.scale(&ExactRat::new(BigInt::one(), factorial(b)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bi(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(&bi(5), 2), bi(10));
        for a in [-7, 0, 3, 100] {
            assert_eq!(binomial(&bi(a), 0), bi(1));
        }
        assert_eq!(binomial(&bi(3), -1), bi(0));
        assert_eq!(binomial(&bi(3), 5), bi(0));
        assert_eq!(binomial(&bi(-1), 3), bi(-1));
        assert_eq!(binomial(&bi(60), 30), "118264581564861424".parse::<BigInt>().unwrap());
    }

    #[test]
    fn binomial_poly_examples() {
        let q = |p: i64, d: i64| ExactRat::new(bi(p), bi(d));
        assert_eq!(binomial_poly(0, 1).coeffs(), &[q(0, 1), q(1, 1)]);
        assert_eq!(binomial_poly(1, 1).coeffs(), &[q(1, 1), q(1, 1)]);
        let p = binomial_poly(1, 2);
        assert_eq!(p.coeffs(), &[q(0, 1), q(1, 2), q(1, 2)]);
        for n in 1..=3 {
            assert_eq!(p.eval_int(n), ExactRat::from_integer(binomial(&bi(n + 1), 2)));
        }
        assert_eq!(binomial_poly(-4, 0), RatPoly::one());
    }

    proptest! {
        #[test]
        fn pascal(a in -20i64..=20, b in 0i64..=10) {
            prop_assert_eq!(binomial(&bi(a), b), binomial(&bi(a - 1), b - 1) + binomial(&bi(a - 1), b));
        }

        #[test]
        fn binomial_poly_matches_binomial(offset in -10i64..10, b in 0usize..7, n in -1000i64..1000) {
            let p = binomial_poly(offset, b);
            prop_assert_eq!(p.degree(), Some(b));
            prop_assert_eq!(p.eval_int(n), ExactRat::from_integer(binomial(&bi(n + offset), b as i64)));
        }
    }
}
