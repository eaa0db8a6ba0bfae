//! Brute-force reference implementations, used only to check the production
//! evaluators. Nothing here shares code with [`crate::characters`] or
//! [`crate::jacobi_trudi`].

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::ExactInt;
use crate::combinatorics::{CycleType, Partition, SkewShape};
use crate::error::{Error, Result};

/// Largest skew shape [`count_syt`] accepts.
pub const SYT_CELL_LIMIT: usize = 25;
/// Largest `n` [`frobenius_char_value`] accepts.
pub const FROBENIUS_LIMIT: usize = 8;

/// Number of standard Young tableaux of a skew shape, by recursive removal of
/// the cell holding the largest entry. Empty shapes have exactly one tableau.
pub fn count_syt(shape: &SkewShape) -> Result<ExactInt> {
    if shape.size() > SYT_CELL_LIMIT {
        return Err(Error::Guard { what: "skew shape size", got: shape.size(), limit: SYT_CELL_LIMIT });
    }
    let mut memo = HashMap::new();
    Ok(count_from(shape.outer().parts().to_vec(), shape.inner().parts(), &mut memo))
}

fn count_from(outer: Vec<usize>, inner: &[usize], memo: &mut HashMap<Vec<usize>, ExactInt>) -> ExactInt {
    let inner_at = |i: usize| inner.get(i).copied().unwrap_or(0);
    if outer.iter().enumerate().all(|(i, &o)| o == inner_at(i)) {
        return BigInt::one();
    }
    if let Some(v) = memo.get(&outer) {
        return v.clone();
    }
    let mut total = BigInt::zero();
    for i in 0..outer.len() {
        let next_row = outer.get(i + 1).copied().unwrap_or(0);
        // The last cell of row i is a corner of the skew shape.
        if outer[i] > next_row && outer[i] > inner_at(i) {
            let mut smaller = outer.clone();
            smaller[i] -= 1;
            while smaller.last() == Some(&0) {
                smaller.pop();
            }
            total += count_from(smaller, inner, memo);
        }
    }
    memo.insert(outer, total.clone());
    total
}

/// Sparse polynomial in a fixed number of variables `x_1..x_N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialPoly {
    vars: usize,
    terms: BTreeMap<Vec<usize>, ExactInt>,
}

impl MonomialPoly {
    pub fn one(vars: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![0; vars], BigInt::one());
        MonomialPoly { vars, terms }
    }

    /// Power sum `x_1^i + ⋯ + x_N^i`.
    pub fn power_sum(vars: usize, i: usize) -> Self {
        let mut terms = BTreeMap::new();
        for v in 0..vars {
            let mut e = vec![0; vars];
            e[v] = i;
            *terms.entry(e).or_insert_with(BigInt::zero) += 1;
        }
        MonomialPoly { vars, terms }
    }

    /// Vandermonde alternant `Σ_σ sign(σ) x^{σ(δ)}`, `δ = (N−1, …, 0)`.
    pub fn vandermonde(vars: usize) -> Self {
        let delta: Vec<usize> = (0..vars).rev().collect();
        let mut terms = BTreeMap::new();
        for (perm, sign) in signed_permutations(vars) {
            let e: Vec<usize> = perm.iter().map(|&p| delta[p]).collect();
            terms.insert(e, BigInt::from(sign));
        }
        MonomialPoly { vars, terms }
    }

    pub fn coefficient(&self, exps: &[usize]) -> ExactInt {
        self.terms.get(exps).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Product, dropping every monomial that exceeds `bound` in some
    /// coordinate. Exponents never decrease under multiplication, so the
    /// coefficients of all monomials below `bound` are exact.
    pub fn mul_bounded(&self, other: &MonomialPoly, bound: &[usize]) -> MonomialPoly {
        assert_eq!(self.vars, other.vars);
        let mut terms: BTreeMap<Vec<usize>, ExactInt> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<usize> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                if e.iter().zip(bound).any(|(x, b)| x > b) {
                    continue;
                }
                *terms.entry(e).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        MonomialPoly { vars: self.vars, terms }
    }

    pub fn mul(&self, other: &MonomialPoly) -> MonomialPoly {
        let bound = vec![usize::MAX; self.vars];
        self.mul_bounded(other, &bound)
    }

    /// Coefficient of `x^target` in `self · other`, without expanding the
    /// whole product.
    pub fn product_coefficient(&self, other: &MonomialPoly, target: &[usize]) -> ExactInt {
        let mut total = BigInt::zero();
        for (ea, ca) in &self.terms {
            let rest: Option<Vec<usize>> = target.iter().zip(ea).map(|(t, a)| t.checked_sub(*a)).collect();
            if let Some(rest) = rest {
                if let Some(cb) = other.terms.get(&rest) {
                    total += ca * cb;
                }
            }
        }
        total
    }
}

/// All permutations of `0..n` with their signs.
fn signed_permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], sign: i64, out: &mut Vec<(Vec<usize>, i64)>) {
        let n = used.len();
        if prefix.len() == n {
            out.push((prefix.clone(), sign));
            return;
        }
        // Choosing the k-th smallest unused value contributes k inversions.
        let mut k = 0;
        for v in 0..n {
            if used[v] {
                continue;
            }
            used[v] = true;
            prefix.push(v);
            rec(prefix, used, if k % 2 == 0 { sign } else { -sign }, out);
            prefix.pop();
            used[v] = false;
            k += 1;
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], 1, &mut out);
    out
}

/// `χ^λ(α)` as the coefficient of `x^{λ+δ}` in `a_δ · p_α`, with exactly
/// `ℓ(λ)` variables.
pub fn frobenius_char_value(lam: &Partition, alpha: &CycleType) -> Result<ExactInt> {
    let n = lam.size();
    if n > FROBENIUS_LIMIT {
        return Err(Error::Guard { what: "partition size", got: n, limit: FROBENIUS_LIMIT });
    }
    if alpha.size() != n {
        return Err(Error::SizeMismatch { shape: n, class: alpha.size() });
    }
    let vars = lam.len();
    if vars == 0 {
        return Ok(BigInt::one());
    }
    let target: Vec<usize> = (0..vars).map(|i| lam.parts()[i] + vars - 1 - i).collect();
    let mut power_product = MonomialPoly::one(vars);
    for (i, &a) in alpha.multiplicities().iter().enumerate() {
        let p = MonomialPoly::power_sum(vars, i + 1);
        for _ in 0..a {
            power_product = power_product.mul_bounded(&p, &target);
        }
    }
    Ok(MonomialPoly::vandermonde(vars).product_coefficient(&power_product, &target))
}
