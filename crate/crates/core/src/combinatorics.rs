//! Partitions, skew shapes and cycle types.
//!
//! Row and column indices exposed by this module are 1-based: row `i` of a
//! partition is `λ_i`, and cell `(i, j)` is the `j`-th box of row `i`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. The empty sequence is
/// the unique partition of 0.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros. Fails unless the parts
    /// are weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::Domain(format!("partition {parts:?} has a zero part before a positive one")));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::Domain(format!("partition parts {parts:?} are not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `λ_i` for 1-based `i`; zero beyond the last row (and for `i == 0`).
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// The first (largest) part, or 0 for the empty partition.
    pub fn first(&self) -> usize {
        self.part(1)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.first();
        let parts = (1..=cols)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// True if the diagram of `self` contains the diagram of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Cells `(i, j)` of the Young diagram, 1-based, in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| (1..=p).map(move |c| (r + 1, c)))
    }

    /// Hook lengths of every cell.
    pub fn hook_lengths(&self) -> HookTable {
        hook_lengths(self)
    }

    /// Every partition of `n`, in reverse lexicographic order starting at `(n)`.
    pub fn all(n: usize) -> Partitions {
        Partitions::new(n)
    }

    /// Every partition of every size `0..=k`, grouped by size.
    pub fn up_to(k: usize) -> impl Iterator<Item = Partition> {
        (0..=k).flat_map(Partitions::new)
    }
}

impl fmt::Display for Partition {
    /// Renders in the textual input syntax: `3,2,1`, or `0` for the empty partition.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            first = false;
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(Partition::empty());
        }
        if s.is_empty() {
            return Err(Error::Parse("empty partition string (write `0` for the empty partition)".into()));
        }
        let parts = s
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                match tok.parse::<usize>() {
                    Ok(0) => Err(Error::Parse(format!("zero part in partition `{s}`"))),
                    Ok(p) => Ok(p),
                    Err(_) => Err(Error::Parse(format!("`{tok}` is not a positive integer"))),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// Iterator over the partitions of a fixed integer.
pub struct Partitions {
    next: Option<Vec<usize>>,
}

impl Partitions {
    fn new(n: usize) -> Self {
        let first = if n == 0 { Vec::new() } else { vec![n] };
        Partitions { next: Some(first) }
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        // Successor in reverse-lex order: find the last part > 1, decrement it,
        // and redistribute the remainder greedily.
        let mut succ = current.clone();
        let mut ones = 0;
        while succ.last() == Some(&1) {
            succ.pop();
            ones += 1;
        }
        if let Some(last) = succ.pop() {
            let d = last - 1;
            let mut rest = ones + 1;
            succ.push(d);
            while rest > 0 {
                let take = rest.min(d);
                succ.push(take);
                rest -= take;
            }
            self.next = Some(succ);
        }
        Some(Partition { parts: current })
    }
}

/// `(n, λ_1, …, λ_t)`, a partition of `n + |λ|`.
pub fn first_row_extend(lam: &Partition, n: usize) -> Result<Partition> {
    if n == 0 {
        return Err(Error::Domain("first row length must be positive".into()));
    }
    if n < lam.first() {
        return Err(Error::Domain(format!("first row {n} is shorter than λ_1 = {} of {lam}", lam.first())));
    }
    let mut parts = Vec::with_capacity(lam.len() + 1);
    parts.push(n);
    parts.extend_from_slice(lam.parts());
    Ok(Partition { parts })
}

/// The single column `(1^j)`; `(1^0)` is the empty partition.
pub fn column_strip(j: usize) -> Partition {
    Partition { parts: vec![1; j] }
}

/// Hook lengths laid out row by row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HookTable {
    rows: Vec<Vec<usize>>,
}

impl HookTable {
    /// Hook length of cell `(i, j)`, 1-based. `None` outside the diagram.
    pub fn get(&self, i: usize, j: usize) -> Option<usize> {
        self.rows.get(i.checked_sub(1)?)?.get(j.checked_sub(1)?).copied()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().flatten().copied()
    }
}

/// Hook length `λ_i − j + λ'_j − i + 1` of every cell.
pub fn hook_lengths(lam: &Partition) -> HookTable {
    let conj = lam.conjugate();
    let rows = (1..=lam.len())
        .map(|i| (1..=lam.part(i)).map(|j| lam.part(i) - j + conj.part(j) - i + 1).collect())
        .collect();
    HookTable { rows }
}

/// A skew shape `outer / inner` with `inner ⊆ outer`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::Domain(format!("inner shape {inner} is not contained in {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    /// `λ / ∅`.
    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// Cells of `outer` not in `inner`, 1-based, row-major.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..=self.outer.len()).flat_map(move |i| (self.inner.part(i) + 1..=self.outer.part(i)).map(move |j| (i, j)))
    }

    /// Transposed shape `λ' / μ'`.
    pub fn conjugate(&self) -> SkewShape {
        SkewShape { outer: self.outer.conjugate(), inner: self.inner.conjugate() }
    }

    /// Removes empty rows and empty columns. The resulting shape has the same
    /// cells up to translation of its row/column-separated pieces, so every
    /// tableau count and character value is unchanged.
    pub fn canonical(&self) -> SkewShape {
        self.trim_rows().conjugate().trim_rows().conjugate()
    }

    fn trim_rows(&self) -> SkewShape {
        let (outer, inner): (Vec<usize>, Vec<usize>) = (1..=self.outer.len())
            .map(|i| (self.outer.part(i), self.inner.part(i)))
            .filter(|(o, i)| o > i)
            .unzip();
        let inner_len = inner.iter().rposition(|&x| x > 0).map_or(0, |p| p + 1);
        SkewShape {
            outer: Partition { parts: outer },
            inner: Partition { parts: inner[..inner_len].to_vec() },
        }
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

/// Multiplicities `(a_1, a_2, …)` of a conjugacy class of a symmetric group:
/// `a_i` cycles of length `i`. Trailing zeros are never stored.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CycleType {
    mult: Vec<usize>,
    size: usize,
}

impl CycleType {
    /// From multiplicities, `mult[0] = a_1`.
    pub fn from_multiplicities(mut mult: Vec<usize>) -> Self {
        while mult.last() == Some(&0) {
            mult.pop();
        }
        let size = mult.iter().enumerate().map(|(i, a)| (i + 1) * a).sum();
        CycleType { mult, size }
    }

    /// From a list of cycle lengths in any order. Zero lengths are rejected.
    pub fn from_parts(parts: &[usize]) -> Result<Self> {
        let mut mult = Vec::new();
        for &p in parts {
            if p == 0 {
                return Err(Error::Domain("cycle length 0".into()));
            }
            if mult.len() < p {
                mult.resize(p, 0);
            }
            mult[p - 1] += 1;
        }
        Ok(Self::from_multiplicities(mult))
    }

    pub fn from_partition(p: &Partition) -> Self {
        Self::from_parts(p.parts()).expect("partition parts are positive")
    }

    /// The identity class `1^n`.
    pub fn identity(n: usize) -> Self {
        Self::from_multiplicities(vec![n])
    }

    /// `r^count`.
    pub fn rectangular(r: usize, count: usize) -> Self {
        assert!(r > 0, "cycle length must be positive");
        let mut mult = vec![0; r];
        mult[r - 1] = count;
        Self::from_multiplicities(mult)
    }

    pub fn empty() -> Self {
        CycleType::default()
    }

    /// `a_i` for 1-based `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.mult.get(i - 1).copied().unwrap_or(0)
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.mult
    }

    /// `Σ i·a_i`.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    /// Largest cycle length present.
    pub fn largest(&self) -> Option<usize> {
        if self.mult.is_empty() {
            None
        } else {
            Some(self.mult.len())
        }
    }

    /// Cycle lengths as a partition.
    pub fn to_partition(&self) -> Partition {
        let parts = (1..=self.mult.len())
            .rev()
            .flat_map(|i| std::iter::repeat_n(i, self.mult[i - 1]))
            .collect();
        Partition { parts }
    }

    /// Removes one cycle of length `r`; `None` if there is none.
    pub fn without_cycle(&self, r: usize) -> Option<CycleType> {
        if self.multiplicity(r) == 0 {
            return None;
        }
        let mut mult = self.mult.clone();
        mult[r - 1] -= 1;
        Some(Self::from_multiplicities(mult))
    }

    /// `(ν, 1^d)`: the same class with `d` extra fixed points.
    pub fn with_fixed_points(&self, d: usize) -> CycleType {
        let mut mult = self.mult.clone();
        if mult.is_empty() {
            mult.push(0);
        }
        mult[0] += d;
        Self::from_multiplicities(mult)
    }

    /// Componentwise `self − other`; `None` unless `other ≤ self` everywhere.
    pub fn checked_sub(&self, other: &CycleType) -> Option<CycleType> {
        if other.mult.len() > self.mult.len() {
            return None;
        }
        let mut mult = self.mult.clone();
        for (m, &o) in mult.iter_mut().zip(&other.mult) {
            *m = m.checked_sub(o)?;
        }
        Some(Self::from_multiplicities(mult))
    }

    /// Multiplicative form `1^2,3^1`, or `0` for the empty class.
    pub fn to_multiplicative_string(&self) -> String {
        if self.is_empty() {
            return "0".into();
        }
        self.mult
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(i, a)| format!("{}^{}", i + 1, a))
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for CycleType {
    /// Cycle lengths as a weakly decreasing list, `0` for the empty class.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_partition())
    }
}

impl fmt::Debug for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycleType({})", self.to_multiplicative_string())
    }
}

impl FromStr for CycleType {
    type Err = Error;

    /// Accepts a plain list of cycle lengths (`3,1,1`), the multiplicative
    /// form (`1^2,3^1`), a mix of both, or `0` for the empty class.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(CycleType::empty());
        }
        if s.is_empty() {
            return Err(Error::Parse("empty cycle type string (write `0` for the empty class)".into()));
        }
        let positive = |tok: &str| -> Result<usize> {
            match tok.trim().parse::<usize>() {
                Ok(0) | Err(_) => Err(Error::Parse(format!("`{tok}` is not a positive integer in cycle type `{s}`"))),
                Ok(v) => Ok(v),
            }
        };
        let mut mult: Vec<usize> = Vec::new();
        for tok in s.split(',') {
            let (len, count) = match tok.split_once('^') {
                Some((base, exp)) => {
                    let count = exp
                        .trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad exponent in `{tok}`")))?;
                    (positive(base)?, count)
                }
                None => (positive(tok)?, 1),
            };
            if mult.len() < len {
                mult.resize(len, 0);
            }
            mult[len - 1] += count;
        }
        Ok(CycleType::from_multiplicities(mult))
    }
}

impl Serialize for CycleType {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_partition().parts().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CycleType {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        CycleType::from_parts(&parts).map_err(serde::de::Error::custom)
    }
}

/// Every `β` with `0 ≤ β_i ≤ α_i` and `Σ i·β_i = m`, paired with the
/// complement `α − β`.
pub fn sub_cycle_types(alpha: &CycleType, m: usize) -> SubCycleTypes {
    let mut out = Vec::new();
    if m <= alpha.size() {
        let mut b = vec![0; alpha.multiplicities().len()];
        collect_sub_types(alpha.multiplicities(), alpha.multiplicities().len(), m, &mut b, &mut out);
    }
    let gammas = out
        .iter()
        .map(|beta: &CycleType| alpha.checked_sub(beta).expect("sub-type is bounded by alpha"))
        .collect::<Vec<_>>();
    SubCycleTypes { inner: out.into_iter().zip(gammas) }
}

// Fill b[0..idx] so that Σ (i+1)·b[i] = remaining.
fn collect_sub_types(a: &[usize], idx: usize, remaining: usize, b: &mut Vec<usize>, out: &mut Vec<CycleType>) {
    if idx == 0 {
        if remaining == 0 {
            out.push(CycleType::from_multiplicities(b.clone()));
        }
        return;
    }
    let len = idx;
    // Prune: the lengths below `len` cannot reach `remaining`.
    let reachable: usize = a[..idx - 1].iter().enumerate().map(|(i, &x)| (i + 1) * x).sum();
    let max_here = a[idx - 1].min(remaining / len);
    for bi in 0..=max_here {
        let rest = remaining - bi * len;
        if rest > reachable {
            continue;
        }
        b[idx - 1] = bi;
        collect_sub_types(a, idx - 1, rest, b, out);
    }
    b[idx - 1] = 0;
}

/// Stream of `(β, α − β)` pairs produced by [`sub_cycle_types`].
pub struct SubCycleTypes {
    inner: std::iter::Zip<std::vec::IntoIter<CycleType>, std::vec::IntoIter<CycleType>>,
}

impl Iterator for SubCycleTypes {
    type Item = (CycleType, CycleType);

    fn next(&mut self) -> Option<Self::Item> {
        self.inner.next()
    }
}
