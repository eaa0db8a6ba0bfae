use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use dashmap::DashMap;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::ExactInt;
use crate::combinatorics::{CycleType, Partition, SkewShape};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
struct Key {
    outer: Vec<usize>,
    inner: Vec<usize>,
    class: CycleType,
}

/// Memo table that can be shared between evaluators and threads.
#[derive(Default)]
pub struct MnCache {
    map: DashMap<Key, ExactInt>,
}

impl MnCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

/// How an [`MnEvaluator`] memoizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CachePolicy {
    /// Plain recursion, no memo table.
    Naive,
    /// A fresh table for every top-level evaluation.
    PerCall,
    /// One table for the evaluator's whole lifetime, safe to share.
    Shared,
}

enum Store<'a> {
    None,
    Local(HashMap<Key, ExactInt>),
    Shared(&'a MnCache),
}

impl Store<'_> {
    fn get(&self, key: &Key) -> Option<ExactInt> {
        match self {
            Store::None => None,
            Store::Local(m) => m.get(key).cloned(),
            Store::Shared(c) => c.map.get(key).map(|v| v.clone()),
        }
    }

    fn put(&mut self, key: Key, value: &ExactInt) {
        match self {
            Store::None => {}
            Store::Local(m) => {
                m.insert(key, value.clone());
            }
            Store::Shared(c) => {
                c.map.insert(key, value.clone());
            }
        }
    }
}

/// Murnaghan-Nakayama evaluator for skew characters `χ^{λ/μ}(α)`.
///
/// Each step removes a border strip whose length is the largest remaining
/// cycle, with sign `(−1)^(height − 1)`. Subproblems are keyed on the
/// canonical skew shape (empty rows and columns trimmed) and the remaining
/// cycle type. Results do not depend on the cache policy.
pub struct MnEvaluator {
    policy: CachePolicy,
    shared: Option<Arc<MnCache>>,
    calls: AtomicU64,
}

impl MnEvaluator {
    pub fn new(policy: CachePolicy) -> Self {
        let shared = (policy == CachePolicy::Shared).then(|| Arc::new(MnCache::new()));
        MnEvaluator { policy, shared, calls: AtomicU64::new(0) }
    }

    pub fn naive() -> Self {
        Self::new(CachePolicy::Naive)
    }

    pub fn per_call() -> Self {
        Self::new(CachePolicy::PerCall)
    }

    /// Evaluator backed by an existing shared table.
    pub fn with_cache(cache: Arc<MnCache>) -> Self {
        MnEvaluator { policy: CachePolicy::Shared, shared: Some(cache), calls: AtomicU64::new(0) }
    }

    pub fn policy(&self) -> CachePolicy {
        self.policy
    }

    pub fn cache(&self) -> Option<&Arc<MnCache>> {
        self.shared.as_ref()
    }

    /// Recursive invocations since construction (or the last reset),
    /// including memo hits.
    pub fn calls(&self) -> u64 {
        self.calls.load(Ordering::Relaxed)
    }

    pub fn reset_calls(&self) {
        self.calls.store(0, Ordering::Relaxed);
    }

    pub fn value(&self, shape: &SkewShape, alpha: &CycleType) -> Result<ExactInt> {
        if shape.size() != alpha.size() {
            return Err(Error::SizeMismatch { shape: shape.size(), class: alpha.size() });
        }
        let mut store = match self.policy {
            CachePolicy::Naive => Store::None,
            CachePolicy::PerCall => Store::Local(HashMap::new()),
            CachePolicy::Shared => Store::Shared(self.shared.as_deref().expect("shared policy has a cache")),
        };
        Ok(self.eval(shape, alpha, &mut store))
    }

    /// `χ^λ(α)` for a straight shape.
    pub fn straight(&self, lam: &Partition, alpha: &CycleType) -> Result<ExactInt> {
        self.value(&SkewShape::straight(lam.clone()), alpha)
    }

    fn eval(&self, shape: &SkewShape, alpha: &CycleType, store: &mut Store<'_>) -> ExactInt {
        self.calls.fetch_add(1, Ordering::Relaxed);
        let Some(r) = alpha.largest() else {
            return BigInt::one();
        };
        let shape = shape.canonical();
        let key = Key {
            outer: shape.outer().parts().to_vec(),
            inner: shape.inner().parts().to_vec(),
            class: alpha.clone(),
        };
        if let Some(v) = store.get(&key) {
            return v;
        }
        let rest = alpha.without_cycle(r).expect("largest cycle is present");
        let mut total = BigInt::zero();
        for (smaller, height) in remove_ribbons(shape.outer(), r) {
            if !smaller.contains(shape.inner()) {
                continue;
            }
            let sub = SkewShape::new(smaller, shape.inner().clone()).expect("containment checked");
            let v = self.eval(&sub, &rest, store);
            if height % 2 == 0 {
                total += v;
            } else {
                total -= v;
            }
        }
        store.put(key, &total);
        total
    }
}

impl Default for MnEvaluator {
    fn default() -> Self {
        Self::per_call()
    }
}

/// Every way to remove a border strip of `r` cells from `lam`, as
/// `(remaining partition, height − 1)`.
///
/// Works on β-numbers `λ_i + t − i`: a strip of length `r` corresponds to
/// moving one bead from `b` to a free position `b − r`, and its height minus
/// one is the number of beads strictly between.
pub fn remove_ribbons(lam: &Partition, r: usize) -> Vec<(Partition, usize)> {
    let t = lam.len();
    let beads: Vec<usize> = (0..t).map(|i| lam.parts()[i] + t - 1 - i).collect();
    let mut out = Vec::new();
    for (idx, &b) in beads.iter().enumerate() {
        let Some(target) = b.checked_sub(r) else { continue };
        if beads.contains(&target) {
            continue;
        }
        let crossed = beads.iter().filter(|&&x| x > target && x < b).count();
        let mut moved = beads.clone();
        moved[idx] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let parts = moved.iter().enumerate().map(|(i, &x)| x - (t - 1 - i)).collect();
        out.push((Partition::new(parts).expect("bead positions give a partition"), crossed));
    }
    out
}

/// `χ^{λ/μ}(α)` with a per-call memo table.
pub fn mn_value(shape: &SkewShape, alpha: &CycleType) -> Result<ExactInt> {
    MnEvaluator::per_call().value(shape, alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::degree_hook;
    use crate::combinatorics::first_row_extend;
    use proptest::prelude::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn ct(s: &str) -> CycleType {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        let straight = |s: &str| SkewShape::straight(p(s));
        assert_eq!(mn_value(&straight("2,1"), &ct("3")).unwrap(), BigInt::from(-1));
        assert_eq!(mn_value(&straight("2,1"), &ct("1^3")).unwrap(), BigInt::from(2));
        assert_eq!(mn_value(&straight("4"), &ct("2,1,1")).unwrap(), BigInt::from(1));
        assert_eq!(mn_value(&straight("3,1"), &ct("2,2")).unwrap(), BigInt::from(-1));
        assert_eq!(mn_value(&straight("0"), &ct("0")).unwrap(), BigInt::from(1));
    }

    #[test]
    fn skew_examples() {
        let s = SkewShape::new(p("2,1"), p("1")).unwrap();
        assert_eq!(mn_value(&s, &ct("1,1")).unwrap(), BigInt::from(2));
        // two disconnected cells: a 2-cycle has no strip
        assert_eq!(mn_value(&s, &ct("2")).unwrap(), BigInt::from(0));
        let s = SkewShape::new(p("3,1"), p("1")).unwrap();
        // horizontal domino: +1; vertical not available
        assert_eq!(mn_value(&s, &ct("2,1")).unwrap(), BigInt::from(1));
    }

    #[test]
    fn size_mismatch() {
        let s = SkewShape::straight(p("2,1"));
        assert!(matches!(mn_value(&s, &ct("2")), Err(Error::SizeMismatch { shape: 3, class: 2 })));
    }

    #[test]
    fn ribbons_of_3_1() {
        let mut got = remove_ribbons(&p("3,1"), 2);
        got.sort();
        // (3,1)/(2) is disconnected, so the row domino is the only 2-strip.
        assert_eq!(got, vec![(p("1,1"), 0)]);
        let got = remove_ribbons(&p("2,2"), 3);
        assert_eq!(got, vec![(p("1"), 1)]);
    }

    #[test]
    fn identity_gives_degree() {
        for n in 0..=8 {
            for lam in Partition::all(n) {
                let v = mn_value(&SkewShape::straight(lam.clone()), &CycleType::identity(n)).unwrap();
                assert_eq!(v, degree_hook(&lam));
            }
        }
    }

    #[test]
    fn standard_representation_fixed_points() {
        // χ^{(n−1,1)}(σ) = fix(σ) − 1
        for n in 2..=9 {
            let lam = first_row_extend(&p("1"), n - 1).unwrap();
            for alpha in Partition::all(n) {
                let class = CycleType::from_partition(&alpha);
                let fix = class.multiplicity(1) as i64;
                assert_eq!(MnEvaluator::per_call().straight(&lam, &class).unwrap(), BigInt::from(fix - 1));
            }
        }
    }

    #[test]
    fn shared_cache_is_reused() {
        let ev = MnEvaluator::new(CachePolicy::Shared);
        let s = SkewShape::straight(p("4,3,1"));
        let a = ct("2,2,2,1,1");
        let first = ev.value(&s, &a).unwrap();
        let calls_first = ev.calls();
        let second = ev.value(&s, &a).unwrap();
        assert_eq!(first, second);
        assert_eq!(ev.calls() - calls_first, 1);
        assert!(!ev.cache().unwrap().is_empty());
    }

    #[test]
    fn shared_cache_across_threads() {
        use rayon::prelude::*;
        let ev = MnEvaluator::new(CachePolicy::Shared);
        let shapes: Vec<Partition> = Partition::all(8).collect();
        let class = ct("3,2,2,1");
        let parallel: Vec<ExactInt> = shapes.par_iter().map(|l| ev.straight(l, &class).unwrap()).collect();
        let serial: Vec<ExactInt> = shapes.iter().map(|l| MnEvaluator::naive().straight(l, &class).unwrap()).collect();
        assert_eq!(parallel, serial);
    }

    fn arb_instance() -> impl Strategy<Value = (SkewShape, CycleType)> {
        (0usize..=10)
            .prop_flat_map(|n| {
                let shapes: Vec<Partition> = Partition::all(n).collect();
                let classes: Vec<Partition> = Partition::all(n).collect();
                (prop::sample::select(shapes), prop::sample::select(classes), 0usize..4)
            })
            .prop_map(|(outer, class, cut)| {
                // shave a few cells off the top-left to get a skew shape
                let inner_parts: Vec<usize> = outer.parts().iter().take(cut).map(|&x| x.min(cut)).collect();
                let mut inner_sorted = inner_parts;
                inner_sorted.sort_unstable_by(|a, b| b.cmp(a));
                let inner = Partition::new(inner_sorted).unwrap();
                let shape = SkewShape::new(outer, inner).unwrap();
                // recompute a class of matching size from the chosen class pattern
                let mut parts: Vec<usize> = Vec::new();
                let mut left = shape.size();
                for &c in class.parts() {
                    if left == 0 {
                        break;
                    }
                    let take = c.min(left);
                    parts.push(take);
                    left -= take;
                }
                parts.extend(std::iter::repeat_n(1, left));
                (shape, CycleType::from_parts(&parts).unwrap())
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn memoized_matches_naive((shape, alpha) in arb_instance()) {
            let naive = MnEvaluator::naive();
            let memo = MnEvaluator::per_call();
            prop_assert_eq!(naive.value(&shape, &alpha).unwrap(), memo.value(&shape, &alpha).unwrap());
            prop_assert!(memo.calls() <= naive.calls());
        }
    }
}
