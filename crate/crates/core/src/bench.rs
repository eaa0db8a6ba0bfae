//! Timing comparison of evaluation strategies. Every strategy's values are
//! checked against each other before any timing is reported.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::algebra::{ExactInt, ExactRat};
use crate::characters::{degree_hook, MnEvaluator};
use crate::combinatorics::{first_row_extend, CycleType, Partition};
use crate::error::{Error, Result};
use crate::stable::{cz_degree, cz_degree_poly, stable_char_poly_with, StableClassSpec};

/// One (instance, strategy) measurement.
#[derive(Clone, Debug, Serialize)]
pub struct BenchRow {
    pub instance: String,
    pub strategy: &'static str,
    pub value: String,
    #[serde(serialize_with = "crate::sweep::decimal::serialize")]
    pub micros: u128,
    /// Murnaghan-Nakayama recursive invocations (0 for strategies that make none).
    #[serde(serialize_with = "crate::sweep::decimal::serialize")]
    pub calls: u64,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct BenchTable {
    pub rows: Vec<BenchRow>,
}

impl BenchTable {
    /// Rows for `instance`, in strategy order.
    pub fn instance_rows<'a>(&'a self, instance: &'a str) -> impl Iterator<Item = &'a BenchRow> + 'a {
        self.rows.iter().filter(move |r| r.instance == instance)
    }

    pub fn instances(&self) -> Vec<&str> {
        let mut out: Vec<&str> = Vec::new();
        for r in &self.rows {
            if !out.contains(&r.instance.as_str()) {
                out.push(&r.instance);
            }
        }
        out
    }
}

/// Runs `f` once as warm-up, then once timed.
fn timed<T>(mut f: impl FnMut() -> Result<T>) -> Result<(T, Duration)> {
    f()?;
    let start = Instant::now();
    let v = f()?;
    Ok((v, start.elapsed()))
}

fn agree(instance: &str, values: &[(&str, &ExactInt)]) -> Result<()> {
    let (first_name, first) = values[0];
    for (name, v) in &values[1..] {
        if v != &first {
            return Err(Error::Consistency(format!(
                "{instance}: strategy {name} gave {v} but {first_name} gave {first}"
            )));
        }
    }
    Ok(())
}

/// Naive vs memoized Murnaghan-Nakayama vs the stable polynomial on the
/// classes `(ν, 1^{n+k−m})`, one instance per `n`.
pub fn bench_stable(lam: &Partition, nu: &Partition, ns: &[usize]) -> Result<BenchTable> {
    let spec = StableClassSpec::new(lam.clone(), nu.clone());
    let mut table = BenchTable::default();
    if ns.is_empty() {
        return Ok(table);
    }
    let build_ev = MnEvaluator::per_call();
    let start = Instant::now();
    let sp = stable_char_poly_with(&build_ev, &spec)?;
    let build_time = start.elapsed();
    if let Some(&bad) = ns.iter().find(|&&n| n < sp.valid_from) {
        return Err(Error::Domain(format!("n = {bad} is below valid_from = {}", sp.valid_from)));
    }
    table.rows.push(BenchRow {
        instance: "construction".into(),
        strategy: "polynomial",
        value: sp.poly.to_string(),
        micros: build_time.as_micros(),
        calls: build_ev.calls(),
    });

    for &n in ns {
        let instance = format!("lambda={lam} nu={nu} n={n}");
        let naive = MnEvaluator::naive();
        let memo = MnEvaluator::per_call();
        let naive_v = spec.direct_value(&naive, n)?;
        let memo_v = spec.direct_value(&memo, n)?;
        let poly_v = sp.poly.eval_int(n as i64);
        if !poly_v.is_integer() {
            return Err(Error::Consistency(format!("{instance}: polynomial value {poly_v} is not an integer")));
        }
        let poly_v = poly_v.to_integer();
        agree(&instance, &[("naive-mn", &naive_v), ("memo-mn", &memo_v), ("polynomial", &poly_v)])?;
        let naive_calls = naive.calls();
        let memo_calls = memo.calls();

        let (_, t_naive) = timed(|| spec.direct_value(&MnEvaluator::naive(), n))?;
        let (_, t_memo) = timed(|| spec.direct_value(&MnEvaluator::per_call(), n))?;
        let (_, t_poly) = timed(|| Ok(sp.poly.eval(&ExactRat::from_integer(n.into()))))?;

        for (strategy, micros, calls) in [
            ("naive-mn", t_naive, naive_calls),
            ("memo-mn", t_memo, memo_calls),
            ("polynomial", t_poly, 0),
        ] {
            table.rows.push(BenchRow {
                instance: instance.clone(),
                strategy,
                value: naive_v.to_string(),
                micros: micros.as_micros(),
                calls,
            });
        }
    }
    Ok(table)
}

/// Strategies for `f^(n,λ)` over every `λ ⊢ k`: hook lengths, the skew
/// expansion, its polynomial form, and memoized Murnaghan-Nakayama at the
/// identity.
pub fn bench_degree(k: usize, ns: &[usize]) -> Result<BenchTable> {
    let mut table = BenchTable::default();
    for lam in Partition::all(k) {
        let poly = cz_degree_poly(&lam)?;
        for &n in ns {
            if n < lam.first().max(1) {
                continue;
            }
            let instance = format!("lambda={lam} n={n}");
            let extended = first_row_extend(&lam, n)?;
            let identity = CycleType::identity(extended.size());
            let memo = MnEvaluator::per_call();
            let hook_v = degree_hook(&extended);
            let cz_v = cz_degree(&lam, n)?;
            let poly_v = poly.eval_int(n as i64);
            let mn_v = memo.straight(&extended, &identity)?;
            if !poly_v.is_integer() {
                return Err(Error::Consistency(format!("{instance}: polynomial value {poly_v} is not an integer")));
            }
            let poly_v = poly_v.to_integer();
            agree(&instance, &[("hook", &hook_v), ("cz-expansion", &cz_v), ("cz-polynomial", &poly_v), ("memo-mn", &mn_v)])?;
            let mn_calls = memo.calls();

            let (_, t_hook) = timed(|| Ok(degree_hook(&extended)))?;
            let (_, t_cz) = timed(|| cz_degree(&lam, n))?;
            let (_, t_poly) = timed(|| Ok(poly.eval_int(n as i64)))?;
            let (_, t_mn) = timed(|| MnEvaluator::per_call().straight(&extended, &identity))?;
            for (strategy, t, calls) in [
                ("hook", t_hook, 0),
                ("cz-expansion", t_cz, 0),
                ("cz-polynomial", t_poly, 0),
                ("memo-mn", t_mn, mn_calls),
            ] {
                table.rows.push(BenchRow {
                    instance: instance.clone(),
                    strategy,
                    value: hook_v.to_string(),
                    micros: t.as_micros(),
                    calls,
                });
            }
        }
    }
    Ok(table)
}
