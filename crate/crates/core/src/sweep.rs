//! Verification sweeps over every small instance, with machine-readable
//! reports. Instances run in parallel on the current rayon pool; records are
//! always returned in enumeration order.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::ExactRat;
use crate::characters::{degree_hook, MnEvaluator};
use crate::combinatorics::{first_row_extend, CycleType, Partition, SkewShape};
use crate::error::{Error, Result};
use crate::jacobi_trudi::{verify_minor_identity, verify_schur_identity, IdentityCheck};
use crate::oracle::count_syt;
use crate::stable::{cz_degree, interpolate_direct, rect_class_value_with, stable_poly_expansion, StableClassSpec};

pub const CZ_K_LIMIT: usize = 8;
pub const CZ_N_LIMIT: usize = 20;
pub const JT_K_LIMIT: usize = 7;
pub const JT_N_LIMIT: usize = 12;
pub const RCLASS_K_LIMIT: usize = 6;
pub const RCLASS_N_LIMIT: usize = 20;
pub const STABLE_LIMIT: usize = 5;
/// `count_syt` joins the degree check while `n + k` stays at or below this.
pub const CZ_ORACLE_CELLS: usize = 20;

/// Serde adapter writing integers as decimal strings.
pub(crate) mod decimal {
    use std::fmt::Display;
    use std::str::FromStr;

    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<T: Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, T, D>(d: D) -> Result<T, D::Error>
    where
        T: FromStr,
        T::Err: Display,
        D: Deserializer<'de>,
    {
        String::deserialize(d)?.parse().map_err(de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One checked instance. Exact values are decimal strings (or rendered
/// polynomials).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub instance: String,
    pub lhs: String,
    pub rhs: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Record {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub suite: String,
    #[serde(with = "decimal")]
    pub total: usize,
    #[serde(with = "decimal")]
    pub passed: usize,
    #[serde(with = "decimal")]
    pub failed: usize,
    pub first_failure: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub records: Vec<Record>,
    pub summary: Summary,
}

impl Report {
    pub fn new(suite: &str, records: Vec<Record>) -> Self {
        let passed = records.iter().filter(|r| r.passed()).count();
        let first_failure = records.iter().find(|r| !r.passed()).map(|r| {
            let mut s = format!("{}: lhs={} rhs={}", r.instance, r.lhs, r.rhs);
            if let Some(d) = &r.detail {
                s.push_str(&format!(" ({d})"));
            }
            s
        });
        let summary = Summary {
            suite: suite.to_string(),
            total: records.len(),
            passed,
            failed: records.len() - passed,
            first_failure,
        };
        Report { records, summary }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }
}

fn guard(what: &'static str, got: usize, limit: usize) -> Result<()> {
    if got > limit {
        return Err(Error::Guard { what, got, limit });
    }
    Ok(())
}

fn status(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

/// `(λ, n)` for every `λ ⊢ k ≤ k_max` and `max(λ_1, 1) ≤ n ≤ n_max`.
fn first_row_instances(k_max: usize, n_max: usize) -> Vec<(Partition, usize)> {
    Partition::up_to(k_max)
        .flat_map(|lam| (lam.first().max(1)..=n_max).map(move |n| (lam.clone(), n)))
        .collect()
}

/// Checks the skew-degree expansion of `f^(n,λ)` against the hook-length
/// formula, and against tableau enumeration while `n + k ≤ 20`.
pub fn verify_cz(k_max: usize, n_max: usize) -> Result<Report> {
    guard("k_max", k_max, CZ_K_LIMIT)?;
    guard("n_max", n_max, CZ_N_LIMIT)?;
    let records = first_row_instances(k_max, n_max)
        .par_iter()
        .map(|(lam, n)| -> Result<Record> {
            let lhs = cz_degree(lam, *n)?;
            let extended = first_row_extend(lam, *n)?;
            let rhs = degree_hook(&extended);
            let mut ok = lhs == rhs;
            let mut detail = None;
            if extended.size() <= CZ_ORACLE_CELLS {
                let syt = count_syt(&SkewShape::straight(extended))?;
                ok &= syt == rhs;
                detail = Some(format!("count_syt={syt}"));
            }
            Ok(Record {
                instance: format!("lambda={lam} n={n}"),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
                status: status(ok),
                detail,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Report::new("cz", records))
}

fn identity_record(instance: String, check: IdentityCheck) -> Record {
    let detail = (!check.holds()).then(|| {
        check.witness.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(", ")
    });
    Record {
        instance,
        lhs: check.lhs.to_string(),
        rhs: check.rhs.to_string(),
        status: status(check.holds()),
        detail,
    }
}

/// Exact h-ring check of the first-row expansion for every `(λ, n)`, then
/// the minor identity for every `λ` and `0 ≤ j ≤ ℓ(λ)`.
pub fn verify_jt(k_max: usize, n_max: usize) -> Result<Report> {
    guard("k_max", k_max, JT_K_LIMIT)?;
    guard("n_max", n_max, JT_N_LIMIT)?;
    let mut records = first_row_instances(k_max, n_max)
        .par_iter()
        .map(|(lam, n)| Ok(identity_record(format!("schur lambda={lam} n={n}"), verify_schur_identity(lam, *n)?)))
        .collect::<Result<Vec<_>>>()?;
    let minors: Vec<(Partition, usize)> = Partition::up_to(k_max)
        .filter(|l| !l.is_empty())
        .flat_map(|lam| (0..=lam.len()).map(move |j| (lam.clone(), j)))
        .collect();
    let minor_records = minors
        .par_iter()
        .map(|(lam, j)| Ok(identity_record(format!("minor lambda={lam} j={j}"), verify_minor_identity(lam, *j)?)))
        .collect::<Result<Vec<_>>>()?;
    records.extend(minor_records);
    Ok(Report::new("jt", records))
}

/// Rectangular-class formula against direct Murnaghan-Nakayama on
/// `(n, λ)`, for every `r` in `rs` and every valid `n ≤ n_max`.
pub fn verify_rclass(ev: &MnEvaluator, k_max: usize, rs: &[usize], n_max: usize) -> Result<Report> {
    guard("k_max", k_max, RCLASS_K_LIMIT)?;
    guard("n_max", n_max, RCLASS_N_LIMIT)?;
    if rs.contains(&0) {
        return Err(Error::Domain("cycle length r must be positive".into()));
    }
    let instances: Vec<(Partition, usize, usize)> = first_row_instances(k_max, n_max)
        .into_iter()
        .flat_map(|(lam, n)| {
            let k = lam.size();
            rs.iter()
                .filter(move |&&r| (n + k).is_multiple_of(r))
                .map(move |&r| (lam.clone(), n, r))
                .collect::<Vec<_>>()
        })
        .collect();
    let records = instances
        .par_iter()
        .map(|(lam, n, r)| -> Result<Record> {
            let lhs = rect_class_value_with(ev, lam, *n, *r)?;
            let extended = first_row_extend(lam, *n)?;
            let class = CycleType::rectangular(*r, extended.size() / r);
            let rhs = ev.straight(&extended, &class)?;
            Ok(Record {
                instance: format!("lambda={lam} n={n} r={r}"),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
                status: status(lhs == rhs),
                detail: None,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Report::new("rclass", records))
}

/// For every `λ ⊢ k ≤ k_max`, `ν ⊢ m ≤ m_max`: the expansion polynomial must
/// equal the interpolation of `k + 1` direct values exactly, and must match
/// direct values at `extra` further points past the interpolation nodes.
pub fn verify_stablepoly(ev: &MnEvaluator, k_max: usize, m_max: usize, extra: usize) -> Result<Report> {
    guard("k_max", k_max, STABLE_LIMIT)?;
    guard("m_max", m_max, STABLE_LIMIT)?;
    let instances: Vec<StableClassSpec> = Partition::up_to(k_max)
        .flat_map(|lam| Partition::up_to(m_max).map(move |nu| StableClassSpec::new(lam.clone(), nu)))
        .collect();
    let records = instances
        .par_iter()
        .map(|spec| -> Result<Record> {
            let valid_from = spec.lam.first().max(spec.nu.size()).max(1);
            let expansion = stable_poly_expansion(ev, spec)?;
            let interpolated = interpolate_direct(ev, spec, valid_from)?;
            let nodes_end = valid_from + spec.lam.size();
            let mut mismatches = Vec::new();
            for n in nodes_end + 1..=nodes_end + extra {
                let direct = ExactRat::from_integer(spec.direct_value(ev, n)?);
                if expansion.eval_int(n as i64) != direct {
                    mismatches.push(n);
                }
            }
            let ok = expansion == interpolated && mismatches.is_empty();
            let detail = if mismatches.is_empty() {
                format!("valid_from={valid_from} checked n={}..={}", nodes_end + 1, nodes_end + extra)
            } else {
                format!("valid_from={valid_from} mismatch at n={mismatches:?}")
            };
            Ok(Record {
                instance: format!("lambda={} nu={}", spec.lam, spec.nu),
                lhs: expansion.to_string(),
                rhs: interpolated.to_string(),
                status: status(ok),
                detail: Some(detail),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Report::new("stablepoly", records))
}
