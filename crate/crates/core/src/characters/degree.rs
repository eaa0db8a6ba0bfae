use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::{factorial, ExactInt, ExactRat};
use crate::combinatorics::{Partition, SkewShape};
use crate::error::{Error, Result};

/// `f^λ = |λ|! / Π hooks`.
pub fn degree_hook(lam: &Partition) -> ExactInt {
    let hooks = lam.hook_lengths().iter().fold(BigInt::one(), |acc, h| acc * BigInt::from(h));
    factorial(lam.size()) / hooks
}

/// `f^{λ/μ} = |λ/μ|! · det[1/(λ_i − i − μ_j + j)!]`, with `1/m! = 0` for
/// negative `m`. Computed over the rationals; a non-integral or negative
/// result is reported as a consistency error.
pub fn degree_skew(shape: &SkewShape) -> Result<ExactInt> {
    let outer = shape.outer();
    let inner = shape.inner();
    let d = outer.len();
    let mut m: Vec<Vec<ExactRat>> = (1..=d)
        .map(|i| {
            (1..=d)
                .map(|j| {
                    let idx = outer.part(i) as i64 - i as i64 - inner.part(j) as i64 + j as i64;
                    if idx < 0 {
                        ExactRat::zero()
                    } else {
                        ExactRat::new(BigInt::one(), factorial(idx as usize))
                    }
                })
                .collect()
        })
        .collect();
    let det = rational_det(&mut m);
    let value = det * ExactRat::from_integer(factorial(shape.size()));
    if !value.is_integer() || value.is_negative() {
        return Err(Error::Consistency(format!("Aitken determinant for {shape} gave {value}")));
    }
    Ok(value.to_integer())
}

// Gaussian elimination with a non-zero pivot search.
fn rational_det(m: &mut [Vec<ExactRat>]) -> ExactRat {
    let d = m.len();
    let mut det = ExactRat::one();
    for col in 0..d {
        let Some(pivot) = (col..d).find(|&r| !m[r][col].is_zero()) else {
            return ExactRat::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..d {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &p;
            let (top, bottom) = m.split_at_mut(r);
            for (x, y) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                *x -= &factor * y;
            }
        }
    }
    det
}
