//! Formulas for characters indexed by `(n, λ)` as `n` grows:
//! the expansion of `f^(n,λ)` over skew degrees `f^{λ/(1^j)}`, values on
//! rectangular classes `r^{(n+k)/r}`, and stable character polynomials on
//! the classes `(ν, 1^{n+k−m})`.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::algebra::{binomial, binomial_poly, ratpoly_interpolate, ExactInt, ExactRat, RatPoly};
use crate::characters::{degree_skew, MnEvaluator};
use crate::combinatorics::{column_strip, first_row_extend, sub_cycle_types, CycleType, Partition, SkewShape};
use crate::error::{Error, Result};

pub use crate::sweep::verify_cz;

fn require_first_row(lam: &Partition, n: usize) -> Result<()> {
    if n < lam.first() {
        return Err(Error::Domain(format!("n = {n} is below λ_1 = {} of {lam}", lam.first())));
    }
    Ok(())
}

fn strip_shape(lam: &Partition, j: usize) -> SkewShape {
    SkewShape::new(lam.clone(), column_strip(j)).expect("(1^j) ⊆ λ for j ≤ ℓ(λ)")
}

/// `Σ_{j=0}^{t} (−1)^j C(n+k, k−j) f^{λ/(1^j)}`, which equals `f^(n,λ)`.
pub fn cz_degree(lam: &Partition, n: usize) -> Result<ExactInt> {
    require_first_row(lam, n)?;
    let k = lam.size();
    let total = BigInt::from(n + k);
    let mut acc = BigInt::zero();
    for j in 0..=lam.len() {
        let term = binomial(&total, k as i64 - j as i64) * degree_skew(&strip_shape(lam, j))?;
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

/// The same expansion with `C(n+k, k−j)` read as a polynomial in `n`.
pub fn cz_degree_poly(lam: &Partition) -> Result<RatPoly> {
    let k = lam.size();
    let mut acc = RatPoly::zero();
    for j in 0..=lam.len() {
        let f = ExactRat::from_integer(degree_skew(&strip_shape(lam, j))?);
        let term = binomial_poly(k as i64, k - j).scale(&f);
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    Ok(acc)
}

/// `χ^(n,λ)` on the class `r^{(n+k)/r}`, as
/// `Σ_{j : r | k−j} (−1)^j C((n+k)/r, (k−j)/r) · χ^{λ/(1^j)}(r^{(k−j)/r})`.
pub fn rect_class_value(lam: &Partition, n: usize, r: usize) -> Result<ExactInt> {
    rect_class_value_with(&MnEvaluator::per_call(), lam, n, r)
}

pub fn rect_class_value_with(ev: &MnEvaluator, lam: &Partition, n: usize, r: usize) -> Result<ExactInt> {
    require_first_row(lam, n)?;
    if r == 0 {
        return Err(Error::Domain("cycle length r must be positive".into()));
    }
    let k = lam.size();
    if !(n + k).is_multiple_of(r) {
        return Err(Error::Domain(format!("r = {r} does not divide n + k = {}", n + k)));
    }
    let cycles = BigInt::from((n + k) / r);
    let mut acc = BigInt::zero();
    for j in 0..=lam.len() {
        if !(k - j).is_multiple_of(r) {
            continue;
        }
        let c = (k - j) / r;
        let value = ev.value(&strip_shape(lam, j), &CycleType::rectangular(r, c))?;
        let term = binomial(&cycles, c as i64) * value;
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

/// The family of classes `(ν, 1^{n+k−m})` of `S_{n+k}`, for fixed `λ ⊢ k`
/// and `ν ⊢ m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StableClassSpec {
    pub lam: Partition,
    pub nu: Partition,
}

impl StableClassSpec {
    pub fn new(lam: Partition, nu: Partition) -> Self {
        StableClassSpec { lam, nu }
    }

    /// The class `(ν, 1^{n+k−m})`; `None` when `n + k < m`.
    pub fn class_at(&self, n: usize) -> Option<CycleType> {
        let pad = (n + self.lam.size()).checked_sub(self.nu.size())?;
        Some(CycleType::from_partition(&self.nu).with_fixed_points(pad))
    }

    /// Smallest `n` at which `(n, λ)` is a partition and the class exists.
    pub fn first_defined(&self) -> usize {
        self.lam.first().max(1).max(self.nu.size().saturating_sub(self.lam.size()))
    }

    /// `χ^(n,λ)` on `(ν, 1^{n+k−m})` computed directly.
    pub fn direct_value(&self, ev: &MnEvaluator, n: usize) -> Result<ExactInt> {
        let shape = first_row_extend(&self.lam, n)?;
        let class = self
            .class_at(n)
            .ok_or_else(|| Error::Domain(format!("class ({}, 1^(n+k-m)) does not exist at n = {n}", self.nu)))?;
        ev.straight(&shape, &class)
    }
}

/// A stable character polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StablePoly {
    pub poly: RatPoly,
    /// `p(n)` equals the character value for every `n ≥ valid_from`.
    pub valid_from: usize,
}

/// Builds `p(n) = χ^(n,λ)(ν, 1^{n+k−m})` from its explicit expansion
///
/// `Σ_j (−1)^j Σ_{b_1=0}^{k−j} C(n+k−m+a_1, b_1) Σ_{β} Π_{i≥2} C(a_i, b_i) χ^{λ/(1^j)}(1^{b_1}, β)`
///
/// where `β` runs over sub-types of the non-fixed cycles of `ν` of size
/// `k − j − b_1`. The result is checked against Lagrange interpolation of
/// `k + 1` direct evaluations; a mismatch is a consistency error.
pub fn stable_char_poly(spec: &StableClassSpec) -> Result<StablePoly> {
    stable_char_poly_with(&MnEvaluator::per_call(), spec)
}

pub fn stable_char_poly_with(ev: &MnEvaluator, spec: &StableClassSpec) -> Result<StablePoly> {
    let poly = stable_poly_expansion(ev, spec)?;
    let valid_from = spec.lam.first().max(spec.nu.size()).max(1);
    let interpolated = interpolate_direct(ev, spec, valid_from)?;
    if interpolated != poly {
        return Err(Error::Consistency(format!(
            "stable polynomial for λ={}, ν={}: expansion gives {poly}, interpolation gives {interpolated}",
            spec.lam, spec.nu
        )));
    }
    Ok(StablePoly { poly, valid_from })
}

/// The explicit expansion only, without the interpolation cross-check.
pub fn stable_poly_expansion(ev: &MnEvaluator, spec: &StableClassSpec) -> Result<RatPoly> {
    let k = spec.lam.size();
    let m = spec.nu.size();
    let nu_class = CycleType::from_partition(&spec.nu);
    let a1 = nu_class.multiplicity(1);
    let mut long_cycles = nu_class.multiplicities().to_vec();
    if let Some(first) = long_cycles.first_mut() {
        *first = 0;
    }
    let long_cycles = CycleType::from_multiplicities(long_cycles);
    let offset = k as i64 - m as i64 + a1 as i64;

    let mut acc = RatPoly::zero();
    for j in 0..=spec.lam.len() {
        let shape = strip_shape(&spec.lam, j);
        let mut inner = RatPoly::zero();
        for b1 in 0..=k - j {
            let mut coeff = BigInt::zero();
            for (beta, _) in sub_cycle_types(&long_cycles, k - j - b1) {
                let weight: ExactInt = (2..=long_cycles.multiplicities().len())
                    .map(|i| binomial(&BigInt::from(long_cycles.multiplicity(i)), beta.multiplicity(i) as i64))
                    .product();
                let class = beta.with_fixed_points(b1);
                coeff += weight * ev.value(&shape, &class)?;
            }
            if !coeff.is_zero() {
                inner = &inner + &binomial_poly(offset, b1).scale(&ExactRat::from_integer(coeff));
            }
        }
        acc = if j % 2 == 0 { &acc + &inner } else { &acc - &inner };
    }
    Ok(acc)
}

/// Lagrange interpolation of `k + 1` direct values at `from..=from + k`.
pub fn interpolate_direct(ev: &MnEvaluator, spec: &StableClassSpec, from: usize) -> Result<RatPoly> {
    let k = spec.lam.size();
    let points = (from..=from + k)
        .map(|n| Ok((n as i64, ExactRat::from_integer(spec.direct_value(ev, n)?))))
        .collect::<Result<Vec<_>>>()?;
    ratpoly_interpolate(&points)
}

/// Smallest `n` such that `poly` agrees with the direct value at every
/// integer from `n` up to `valid_from`. Empirical; no tightness is claimed.
pub fn observed_agreement_from(ev: &MnEvaluator, spec: &StableClassSpec, sp: &StablePoly) -> Result<usize> {
    let lower = spec.first_defined();
    let mut n = sp.valid_from;
    while n > lower {
        let candidate = n - 1;
        let direct = ExactRat::from_integer(spec.direct_value(ev, candidate)?);
        if sp.poly.eval_int(candidate as i64) != direct {
            break;
        }
        n = candidate;
    }
    Ok(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::degree_hook;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn int(x: i64) -> ExactInt {
        BigInt::from(x)
    }

    #[test]
    fn cz_degree_examples() {
        assert_eq!(cz_degree(&p("1"), 3).unwrap(), int(3));
        assert_eq!(cz_degree(&Partition::empty(), 5).unwrap(), int(1));
        assert_eq!(cz_degree(&p("2,1"), 2).unwrap(), int(5));
        assert_eq!(cz_degree(&p("2,1"), 2).unwrap(), degree_hook(&p("2,2,1")));
        assert!(matches!(cz_degree(&p("3"), 2), Err(Error::Domain(_))));
    }

    #[test]
    fn cz_degree_poly_examples() {
        assert_eq!(cz_degree_poly(&p("1")).unwrap(), RatPoly::var());
        assert_eq!(cz_degree_poly(&Partition::empty()).unwrap(), RatPoly::one());
        let half = ExactRat::new(int(1), int(2));
        let expected = RatPoly::from_coeffs(vec![ExactRat::from_integer(int(-1)), half.clone(), half]);
        let got = cz_degree_poly(&p("2")).unwrap();
        assert_eq!(got, expected);
        assert_eq!(got.eval_int(2), ExactRat::from_integer(int(2)));
        assert_eq!(got.eval_int(3), ExactRat::from_integer(int(5)));
    }

    #[test]
    fn rect_class_examples() {
        assert_eq!(rect_class_value(&p("1"), 3, 2).unwrap(), int(-1));
        assert_eq!(rect_class_value(&Partition::empty(), 4, 1).unwrap(), int(1));
        assert_eq!(rect_class_value(&p("2"), 2, 2).unwrap(), int(2));
    }

    #[test]
    fn rect_class_errors() {
        assert!(matches!(rect_class_value(&p("1"), 2, 2), Err(Error::Domain(_))));
        assert!(matches!(rect_class_value(&p("1"), 3, 0), Err(Error::Domain(_))));
        assert!(matches!(rect_class_value(&p("3"), 2, 1), Err(Error::Domain(_))));
    }

    #[test]
    fn stable_poly_examples() {
        let sp = stable_char_poly(&StableClassSpec::new(p("1"), p("2"))).unwrap();
        assert_eq!(sp.poly, RatPoly::from_int_coeffs(&[-2, 1]));
        assert_eq!(sp.valid_from, 2);
        let sp = stable_char_poly(&StableClassSpec::new(Partition::empty(), Partition::empty())).unwrap();
        assert_eq!(sp.poly, RatPoly::one());
        let sp = stable_char_poly(&StableClassSpec::new(p("1"), Partition::empty())).unwrap();
        assert_eq!(sp.poly, RatPoly::var());
        assert_eq!(sp.poly, cz_degree_poly(&p("1")).unwrap());
    }

    #[test]
    fn stable_poly_matches_direct_values_beyond_nodes() {
        let ev = MnEvaluator::per_call();
        for lam in Partition::up_to(3) {
            for nu in Partition::up_to(3) {
                let spec = StableClassSpec::new(lam.clone(), nu.clone());
                let sp = stable_char_poly_with(&ev, &spec).unwrap();
                for n in sp.valid_from..=sp.valid_from + 8 {
                    let direct = spec.direct_value(&ev, n).unwrap();
                    assert_eq!(sp.poly.eval_int(n as i64), ExactRat::from_integer(direct), "λ={lam:?} ν={nu:?} n={n}");
                }
            }
        }
    }

    #[test]
    fn observed_threshold_never_exceeds_valid_from() {
        let ev = MnEvaluator::per_call();
        let spec = StableClassSpec::new(p("1"), p("2"));
        let sp = stable_char_poly_with(&ev, &spec).unwrap();
        let from = observed_agreement_from(&ev, &spec, &sp).unwrap();
        assert!(from <= sp.valid_from);
        assert!(from >= spec.first_defined());
    }

    #[test]
    fn class_families() {
        let spec = StableClassSpec::new(p("2,1"), p("3,1"));
        assert_eq!(spec.class_at(2).unwrap(), "3,1,1".parse().unwrap());
        let spec = StableClassSpec::new(p("1"), p("4"));
        assert!(spec.class_at(2).is_none());
        assert_eq!(spec.first_defined(), 3);
    }
}
