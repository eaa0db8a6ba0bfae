use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::ExactInt;

/// Exponent vector `(e_1, e_2, …)` of `h_1^{e_1} h_2^{e_2} ⋯`, with no
/// trailing zeros.
///
/// Ordered graded-lexicographically: larger weighted degree `Σ i·e_i` sorts
/// first, ties go to the lexicographically larger exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial(exps)
    }

    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    /// `h_r` for `r ≥ 1`.
    pub fn generator(r: usize) -> Self {
        assert!(r >= 1, "h_0 is the constant 1, not a generator");
        let mut exps = vec![0; r];
        exps[r - 1] = 1;
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// `Σ i·e_i`, the degree as a symmetric function.
    pub fn weighted_degree(&self) -> u64 {
        self.0.iter().enumerate().map(|(i, &e)| (i as u64 + 1) * e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.0.len() >= other.0.len() { (self, other) } else { (other, self) };
        let mut exps = long.0.clone();
        for (e, o) in exps.iter_mut().zip(&short.0) {
            *e += o;
        }
        Monomial(exps)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .weighted_degree()
            .cmp(&self.weighted_degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "h{}", i + 1)?;
            } else {
                write!(f, "h{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Sparse polynomial with integer coefficients in the commuting generators
/// `h_1, h_2, …`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct HPoly {
    terms: BTreeMap<Monomial, ExactInt>,
}

impl HPoly {
    pub fn zero() -> Self {
        HPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::term(Monomial::one(), BigInt::one())
    }

    pub fn term(m: Monomial, c: ExactInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        HPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &ExactInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> ExactInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    fn add_term(&mut self, m: Monomial, c: ExactInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }
}

/// `h_r` as a ring element, with `h_0 = 1` and `h_r = 0` for `r < 0`.
pub fn hpoly_generator(r: i64) -> HPoly {
    match r.cmp(&0) {
        Ordering::Less => HPoly::zero(),
        Ordering::Equal => HPoly::one(),
        Ordering::Greater => HPoly::term(Monomial::generator(r as usize), BigInt::one()),
    }
}

impl Add for &HPoly {
    type Output = HPoly;

    fn add(self, rhs: &HPoly) -> HPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Neg for &HPoly {
    type Output = HPoly;

    fn neg(self) -> HPoly {
        HPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Sub for &HPoly {
    type Output = HPoly;

    fn sub(self, rhs: &HPoly) -> HPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &HPoly {
    type Output = HPoly;

    fn mul(self, rhs: &HPoly) -> HPoly {
        let mut out = HPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for HPoly {
            type Output = HPoly;
            fn $m(self, rhs: HPoly) -> HPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Renders one signed term without the leading sign: `3 * h1^2*h2`, `h3`, `5`.
pub(crate) fn render_term(m: &Monomial, c: &ExactInt) -> String {
    let abs = c.abs();
    if m.is_one() {
        abs.to_string()
    } else if abs.is_one() {
        m.to_string()
    } else {
        format!("{abs} * {m}")
    }
}

impl fmt::Display for HPoly {
    /// Graded-lex terms, e.g. `h1*h2 - h3`; the zero polynomial is `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write!(f, "{}", render_term(m, c))?;
        }
        Ok(())
    }
}

impl fmt::Debug for HPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HPoly({self})")
    }
}

/// Exact determinant over the h-ring by Laplace expansion along successive
/// rows, memoized on the set of columns still available. The empty matrix has
/// determinant 1.
///
/// Panics if the matrix is not square or has more than 31 columns.
pub fn hpoly_det(matrix: &[Vec<HPoly>]) -> HPoly {
    let d = matrix.len();
    assert!(matrix.iter().all(|row| row.len() == d), "determinant of a non-square matrix");
    assert!(d < 32, "determinant dimension {d} too large");
    let full: u32 = if d == 0 { 0 } else { (1u32 << d) - 1 };
    let mut memo: HashMap<u32, HPoly> = HashMap::new();
    det_rec(matrix, full, &mut memo)
}

fn det_rec(matrix: &[Vec<HPoly>], cols: u32, memo: &mut HashMap<u32, HPoly>) -> HPoly {
    if cols == 0 {
        return HPoly::one();
    }
    if let Some(v) = memo.get(&cols) {
        return v.clone();
    }
    let row = matrix.len() - cols.count_ones() as usize;
    let mut acc = HPoly::zero();
    let mut position = 0;
    for c in 0..matrix.len() {
        if cols & (1 << c) == 0 {
            continue;
        }
        let entry = &matrix[row][c];
        if !entry.is_zero() {
            let minor = det_rec(matrix, cols & !(1 << c), memo);
            let term = entry * &minor;
            acc = if position % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        position += 1;
    }
    memo.insert(cols, acc.clone());
    acc
}
