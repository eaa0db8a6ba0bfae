use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::mn::MnEvaluator;
use crate::algebra::{binomial, ExactInt};
use crate::combinatorics::{sub_cycle_types, CycleType, Partition, SkewShape};
use crate::error::{Error, Result};

/// A class function on the symmetric group `S_m`.
pub trait CharacterFn {
    /// `m`.
    fn group_size(&self) -> usize;

    /// Value on the class `alpha`, which must have size `m`.
    fn eval(&self, alpha: &CycleType) -> Result<ExactInt>;

    /// Value at the identity.
    fn degree(&self) -> Result<ExactInt> {
        self.eval(&CycleType::identity(self.group_size()))
    }
}

/// The trivial character of `S_m`.
#[derive(Clone, Copy, Debug)]
pub struct Trivial(pub usize);

impl CharacterFn for Trivial {
    fn group_size(&self) -> usize {
        self.0
    }

    fn eval(&self, alpha: &CycleType) -> Result<ExactInt> {
        check_size(self.0, alpha)?;
        Ok(BigInt::one())
    }
}

/// `χ^{λ/μ}` (irreducible when `μ = ∅`), evaluated by Murnaghan-Nakayama.
#[derive(Clone, Debug)]
pub struct SkewCharacter {
    shape: SkewShape,
}

impl SkewCharacter {
    pub fn new(shape: SkewShape) -> Self {
        SkewCharacter { shape }
    }

    pub fn irreducible(lam: Partition) -> Self {
        SkewCharacter { shape: SkewShape::straight(lam) }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }
}

impl CharacterFn for SkewCharacter {
    fn group_size(&self) -> usize {
        self.shape.size()
    }

    fn eval(&self, alpha: &CycleType) -> Result<ExactInt> {
        MnEvaluator::per_call().value(&self.shape, alpha)
    }
}

/// `(ψ ⊗ φ)↑` from `S_m × S_{n−m}` to `S_n`.
pub struct Induced<'a> {
    pub psi: &'a dyn CharacterFn,
    pub phi: &'a dyn CharacterFn,
}

impl CharacterFn for Induced<'_> {
    fn group_size(&self) -> usize {
        self.psi.group_size() + self.phi.group_size()
    }

    fn eval(&self, alpha: &CycleType) -> Result<ExactInt> {
        induced_value(self.psi, self.phi, alpha)
    }
}

fn check_size(m: usize, alpha: &CycleType) -> Result<()> {
    if alpha.size() != m {
        return Err(Error::SizeMismatch { shape: m, class: alpha.size() });
    }
    Ok(())
}

/// `(ψ ⊗ φ)↑(α) = Σ_β Π_i C(a_i, b_i) · ψ(β) · φ(α − β)`, over sub-types
/// `β ⊢ m` of `α`. The binomial product is the index of the centralizer of
/// `β × (α − β)` in `S_m × S_{n−m}` inside the centralizer of `α` in `S_n`.
pub fn induced_value(psi: &dyn CharacterFn, phi: &dyn CharacterFn, alpha: &CycleType) -> Result<ExactInt> {
    let m = psi.group_size();
    check_size(m + phi.group_size(), alpha)?;
    let mut total = BigInt::zero();
    for (beta, gamma) in sub_cycle_types(alpha, m) {
        let weight = centralizer_index(alpha, &beta);
        let psi_v = psi.eval(&beta)?;
        if psi_v.is_zero() {
            continue;
        }
        total += weight * psi_v * phi.eval(&gamma)?;
    }
    Ok(total)
}

/// `Π_i C(a_i, b_i) = |Z(α)| / (|Z(β)|·|Z(α−β)|)`.
fn centralizer_index(alpha: &CycleType, beta: &CycleType) -> ExactInt {
    (1..=alpha.multiplicities().len())
        .map(|i| binomial(&BigInt::from(alpha.multiplicity(i)), beta.multiplicity(i) as i64))
        .product()
}

/// Degree of an induced character: `C(n, m) · f_ψ · f_φ`.
pub fn induced_degree(m: usize, n: usize, f_psi: &ExactInt, f_phi: &ExactInt) -> ExactInt {
    binomial(&BigInt::from(n), m as i64) * f_psi * f_phi
}
