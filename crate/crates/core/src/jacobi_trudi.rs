//! Jacobi-Trudi matrices over the h-ring and exact checks of the first-row
//! expansion `s_(n,λ) = Σ_j (−1)^j h_{n+j} s_{λ/(1^j)}`.

use std::fmt;

use serde::Serialize;

use crate::algebra::{hpoly_det, hpoly_generator, ExactInt, HPoly, Monomial};
use crate::combinatorics::{column_strip, first_row_extend, Partition, SkewShape};
use crate::error::{Error, Result};

/// Most terms reported in a failure witness.
pub const WITNESS_CAP: usize = 20;

/// `H^{λ/μ}`: the `ℓ(λ) × ℓ(λ)` matrix with entries `h_{λ_i − i − μ_j + j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JtMatrix {
    indices: Vec<Vec<i64>>,
    entries: Vec<Vec<HPoly>>,
}

impl JtMatrix {
    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    /// Subscript of entry `(i, j)`, 1-based. Negative subscripts denote 0.
    pub fn index(&self, i: usize, j: usize) -> i64 {
        self.indices[i - 1][j - 1]
    }

    pub fn entries(&self) -> &[Vec<HPoly>] {
        &self.entries
    }

    pub fn det(&self) -> HPoly {
        hpoly_det(&self.entries)
    }

    /// Determinant of the matrix with 1-based row `row` and column `col` deleted.
    pub fn minor(&self, row: usize, col: usize) -> HPoly {
        let sub: Vec<Vec<HPoly>> = self
            .entries
            .iter()
            .enumerate()
            .filter(|(i, _)| *i + 1 != row)
            .map(|(_, r)| r.iter().enumerate().filter(|(j, _)| *j + 1 != col).map(|(_, e)| e.clone()).collect())
            .collect();
        hpoly_det(&sub)
    }
}

pub fn jt_matrix(shape: &SkewShape) -> JtMatrix {
    let outer = shape.outer();
    let inner = shape.inner();
    let d = outer.len();
    let indices: Vec<Vec<i64>> = (1..=d)
        .map(|i| (1..=d).map(|j| outer.part(i) as i64 - i as i64 - inner.part(j) as i64 + j as i64).collect())
        .collect();
    let entries = indices.iter().map(|row| row.iter().map(|&r| hpoly_generator(r)).collect()).collect();
    JtMatrix { indices, entries }
}

/// `s_{λ/μ}` in the h-basis.
pub fn skew_schur_h(shape: &SkewShape) -> HPoly {
    jt_matrix(shape).det()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Lhs,
    Rhs,
}

/// A term present on one side of an identity but not (with that coefficient)
/// on the other.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessTerm {
    pub side: Side,
    pub monomial: Monomial,
    pub coefficient: ExactInt,
}

impl fmt::Display for WitnessTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = match self.side {
            Side::Lhs => "lhs",
            Side::Rhs => "rhs",
        };
        write!(f, "{side}:{}", HPoly::term(self.monomial.clone(), self.coefficient.clone()))
    }
}

/// Outcome of an exact h-ring comparison.
#[derive(Clone, Debug)]
pub struct IdentityCheck {
    pub lhs: HPoly,
    pub rhs: HPoly,
    /// Symmetric difference of the two term maps, graded-lex, capped at
    /// [`WITNESS_CAP`]. Empty iff the identity holds.
    pub witness: Vec<WitnessTerm>,
}

impl IdentityCheck {
    fn compare(lhs: HPoly, rhs: HPoly) -> Self {
        let witness = symmetric_difference(&lhs, &rhs);
        IdentityCheck { lhs, rhs, witness }
    }

    pub fn holds(&self) -> bool {
        self.witness.is_empty()
    }
}

fn symmetric_difference(lhs: &HPoly, rhs: &HPoly) -> Vec<WitnessTerm> {
    let mut out: Vec<WitnessTerm> = Vec::new();
    for (side, a, b) in [(Side::Lhs, lhs, rhs), (Side::Rhs, rhs, lhs)] {
        for (m, c) in a.terms() {
            if &b.coefficient(m) != c {
                out.push(WitnessTerm { side, monomial: m.clone(), coefficient: c.clone() });
            }
        }
    }
    out.sort_by(|x, y| x.monomial.cmp(&y.monomial).then((x.side as u8).cmp(&(y.side as u8))));
    out.truncate(WITNESS_CAP);
    out
}

/// Compares `det H^{(n,λ)}` with `Σ_{j=0}^{t} (−1)^j h_{n+j} · s_{λ/(1^j)}`.
pub fn verify_schur_identity(lam: &Partition, n: usize) -> Result<IdentityCheck> {
    let extended = first_row_extend(lam, n)?;
    let lhs = skew_schur_h(&SkewShape::straight(extended));
    let mut rhs = HPoly::zero();
    for j in 0..=lam.len() {
        let skew = SkewShape::new(lam.clone(), column_strip(j))?;
        let term = &hpoly_generator((n + j) as i64) * &skew_schur_h(&skew);
        rhs = if j % 2 == 0 { &rhs + &term } else { &rhs - &term };
    }
    Ok(IdentityCheck::compare(lhs, rhs))
}

/// Compares the minor of `H^{(n,λ)}` obtained by deleting row 1 and column
/// `j + 1` with `s_{λ/(1^j)}`. The minor does not involve `n`; it is taken at
/// two first-row lengths and both must match.
pub fn verify_minor_identity(lam: &Partition, j: usize) -> Result<IdentityCheck> {
    if lam.is_empty() {
        return Err(Error::Domain("minor identity needs a nonempty partition".into()));
    }
    if j > lam.len() {
        return Err(Error::Domain(format!("column index j = {j} exceeds ℓ(λ) = {}", lam.len())));
    }
    let skew = skew_schur_h(&SkewShape::new(lam.clone(), column_strip(j))?);
    let n = lam.first();
    let at = |n: usize| -> Result<HPoly> {
        Ok(jt_matrix(&SkewShape::straight(first_row_extend(lam, n)?)).minor(1, j + 1))
    };
    let minor = at(n)?;
    let check = IdentityCheck::compare(minor, skew);
    if !check.holds() {
        return Ok(check);
    }
    Ok(IdentityCheck::compare(at(n + 3)?, check.rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn h(r: i64) -> HPoly {
        hpoly_generator(r)
    }

    fn skew(o: &str, i: &str) -> SkewShape {
        SkewShape::new(p(o), p(i)).unwrap()
    }

    #[test]
    fn matrices() {
        let m = jt_matrix(&skew("2,1", "0"));
        assert_eq!(m.entries(), &[vec![h(2), h(3)], vec![h(0), h(1)]]);
        assert_eq!(jt_matrix(&skew("1", "0")).entries(), &[vec![h(1)]]);
        let m = jt_matrix(&skew("2,1", "1"));
        assert_eq!(m.entries(), &[vec![h(1), h(3)], vec![HPoly::zero(), h(1)]]);
        assert_eq!(m.index(2, 1), -1);
    }

    #[test]
    fn schur_functions() {
        assert_eq!(skew_schur_h(&skew("2,1", "0")), &(&h(1) * &h(2)) - &h(3));
        assert_eq!(skew_schur_h(&skew("4", "0")), h(4));
        assert_eq!(skew_schur_h(&skew("2,1", "1")), &h(1) * &h(1));
        assert_eq!(skew_schur_h(&skew("0", "0")), HPoly::one());
        assert_eq!(skew_schur_h(&skew("1,1", "0")).to_string(), "h1^2 - h2");
    }

    #[test]
    fn schur_identity_examples() {
        let c = verify_schur_identity(&p("1"), 2).unwrap();
        assert!(c.holds());
        assert_eq!(c.lhs, &(&h(1) * &h(2)) - &h(3));
        let c = verify_schur_identity(&Partition::empty(), 3).unwrap();
        assert!(c.holds());
        assert_eq!(c.lhs, h(3));
        assert!(verify_schur_identity(&p("2,1"), 2).unwrap().holds());
        assert!(matches!(verify_schur_identity(&p("3"), 2), Err(Error::Domain(_))));
    }

    #[test]
    fn minor_identity_examples() {
        let c = verify_minor_identity(&p("1"), 0).unwrap();
        assert!(c.holds());
        assert_eq!(c.lhs, h(1));
        let c = verify_minor_identity(&p("1"), 1).unwrap();
        assert!(c.holds());
        assert_eq!(c.lhs, HPoly::one());
        let c = verify_minor_identity(&p("2,1"), 1).unwrap();
        assert!(c.holds());
        assert_eq!(c.lhs, &h(1) * &h(1));
        assert!(verify_minor_identity(&p("2,1"), 3).is_err());
        assert!(verify_minor_identity(&Partition::empty(), 0).is_err());
    }

    #[test]
    fn minor_at_j0_is_straight_schur() {
        for lam in Partition::up_to(5).filter(|l| !l.is_empty()) {
            let c = verify_minor_identity(&lam, 0).unwrap();
            assert_eq!(c.lhs, skew_schur_h(&SkewShape::straight(lam.clone())));
        }
    }

    #[test]
    fn identities_hold_exhaustively() {
        for lam in Partition::up_to(6) {
            for n in lam.first().max(1)..=10 {
                let c = verify_schur_identity(&lam, n).unwrap();
                assert!(c.holds(), "λ={lam:?} n={n}: {:?}", c.witness);
            }
            for j in 0..=lam.len() {
                if !lam.is_empty() {
                    assert!(verify_minor_identity(&lam, j).unwrap().holds(), "λ={lam:?} j={j}");
                }
            }
        }
    }

    #[test]
    fn a_wrong_sign_is_caught_with_a_witness() {
        let lam = p("2,1");
        let n = 3;
        let lhs = skew_schur_h(&SkewShape::straight(first_row_extend(&lam, n).unwrap()));
        // all-plus expansion instead of the alternating one
        let mut rhs = HPoly::zero();
        for j in 0..=lam.len() {
            rhs = &rhs + &(&h((n + j) as i64) * &skew_schur_h(&SkewShape::new(lam.clone(), column_strip(j)).unwrap()));
        }
        let c = IdentityCheck::compare(lhs, rhs);
        assert!(!c.holds());
        assert!(c.witness.len() <= WITNESS_CAP);
        assert!(c.witness.iter().any(|w| w.side == Side::Rhs && w.coefficient > BigInt::from(0)));
    }
}
