use std::fmt;
use std::process::ExitCode;
use std::str::FromStr;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use symchar_core::algebra::rat_to_string;
use symchar_core::bench::{bench_degree, bench_stable, BenchTable};
use symchar_core::characters::{CachePolicy, MnCache};
use symchar_core::oracle::{count_syt, frobenius_char_value, FROBENIUS_LIMIT};
use symchar_core::stable::{observed_agreement_from, stable_char_poly_with};
use symchar_core::sweep::{verify_cz, verify_jt, verify_rclass, verify_stablepoly, Report};
use symchar_core::{degree_skew, CycleType, Error, MnEvaluator, Partition, SkewShape, StableClassSpec};

/// Exact character values, degrees and stable character polynomials of the
/// symmetric groups.
#[derive(Parser, Debug)]
#[command(name = "symchar", version)]
struct Cli {
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    /// Cross-check against the brute-force oracles where they apply.
    #[arg(long, global = true)]
    oracle: bool,
    /// Worker threads for verification sweeps.
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    threads: Option<u32>,
    /// Murnaghan-Nakayama memo lifetime.
    #[arg(long, global = true, value_enum, default_value_t = CacheArg::PerCall)]
    cache: CacheArg,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CacheArg {
    PerCall,
    Shared,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    Stable,
    Degree,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Degree f^λ, or f^{λ/μ} with --inner.
    Degree {
        partition: Partition,
        #[arg(long)]
        inner: Option<Partition>,
    },
    /// Character value χ^λ(α), or a skew character with --inner.
    Char {
        partition: Partition,
        class: CycleType,
        #[arg(long)]
        inner: Option<Partition>,
    },
    /// Exhaustive verification sweeps.
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
    /// Stable character polynomial of χ^(n,λ) on the classes (ν, 1^{n+k-m}).
    Charpoly {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        nu: Partition,
    },
    /// Timing table comparing evaluation strategies.
    Bench {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        lambda: Option<Partition>,
        #[arg(long)]
        nu: Option<Partition>,
        #[arg(long)]
        k: Option<usize>,
        /// `a..b`, `a..=b` or a single value.
        #[arg(long)]
        n: NRange,
    },
}

#[derive(Subcommand, Debug)]
enum Suite {
    /// Degree expansion against hook lengths and tableau counts.
    Cz {
        #[arg(long, default_value_t = 4)]
        k_max: usize,
        #[arg(long, default_value_t = 10)]
        n_max: usize,
    },
    /// Jacobi-Trudi identity and minors, exactly in the h-ring.
    Jt {
        #[arg(long, default_value_t = 3)]
        k_max: usize,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
    },
    /// Rectangular-class formula against direct evaluation.
    Rclass {
        #[arg(long, default_value_t = 3)]
        k_max: usize,
        /// Cycle lengths, comma separated.
        #[arg(long, value_delimiter = ',', default_values_t = [1, 2, 3, 4])]
        r: Vec<usize>,
        #[arg(long, default_value_t = 10)]
        n_max: usize,
    },
    /// Stable polynomial expansion against interpolation and direct values.
    Stablepoly {
        #[arg(long, default_value_t = 3)]
        k_max: usize,
        #[arg(long, default_value_t = 3)]
        m_max: usize,
        #[arg(long, default_value_t = 9)]
        extra: usize,
    },
}

#[derive(Clone, Debug)]
struct NRange(Vec<usize>);

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("bad bound {t:?}: {e}"));
        if let Some((a, b)) = s.split_once("..=") {
            Ok(NRange((num(a)?..=num(b)?).collect()))
        } else if let Some((a, b)) = s.split_once("..") {
            Ok(NRange((num(a)?..num(b)?).collect()))
        } else {
            Ok(NRange(vec![num(s)?]))
        }
    }
}

enum Failure {
    Usage(String),
    Core(Error),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Verification(_) => 1,
            Failure::Core(Error::Parse(_)) => 2,
            Failure::Core(Error::Consistency(_)) => 1,
            Failure::Core(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Verification(m) => f.write_str(m),
            Failure::Core(e) => write!(f, "{e}"),
        }
    }
}

struct Ctx {
    json: bool,
    oracle: bool,
    evaluator: MnEvaluator,
}

impl Ctx {
    fn emit(&self, human: impl FnOnce() -> String, machine: impl FnOnce() -> Value) {
        if self.json {
            println!("{}", machine());
        } else {
            println!("{}", human());
        }
    }

    fn emit_serialized<T: Serialize>(&self, human: impl FnOnce() -> String, v: &T) {
        self.emit(human, || serde_json::to_value(v).expect("report types serialize"))
    }
}

fn shape_of(outer: Partition, inner: Option<Partition>) -> Result<SkewShape, Failure> {
    Ok(match inner {
        Some(i) => SkewShape::new(outer, i)?,
        None => SkewShape::straight(outer),
    })
}

fn cmd_degree(ctx: &Ctx, outer: Partition, inner: Option<Partition>) -> Result<(), Failure> {
    let shape = shape_of(outer, inner)?;
    let value = degree_skew(&shape)?;
    let mut obj = json!({ "shape": shape.to_string(), "value": value.to_string() });
    let mut lines = vec![value.to_string()];
    let mut disagreement = None;
    if ctx.oracle {
        let syt = count_syt(&shape)?;
        let agree = syt == value;
        obj["count_syt"] = json!(syt.to_string());
        obj["agree"] = json!(agree);
        lines.push(format!("count_syt: {syt}"));
        lines.push(format!("agree: {agree}"));
        if !agree {
            disagreement = Some(format!("degree {value} disagrees with count_syt {syt} on {shape}"));
        }
    }
    ctx.emit(|| lines.join("\n"), || obj);
    disagreement.map_or(Ok(()), |m| Err(Failure::Verification(m)))
}

fn cmd_char(ctx: &Ctx, outer: Partition, class: CycleType, inner: Option<Partition>) -> Result<(), Failure> {
    let shape = shape_of(outer, inner)?;
    let value = ctx.evaluator.value(&shape, &class)?;
    let mut obj = json!({ "shape": shape.to_string(), "class": class.to_string(), "value": value.to_string() });
    let mut lines = vec![value.to_string()];
    let mut disagreement = None;
    if ctx.oracle {
        if shape.inner().is_empty() && shape.size() <= FROBENIUS_LIMIT {
            let fr = frobenius_char_value(shape.outer(), &class)?;
            let agree = fr == value;
            obj["frobenius"] = json!(fr.to_string());
            obj["agree"] = json!(agree);
            lines.push(format!("frobenius: {fr}"));
            lines.push(format!("agree: {agree}"));
            if !agree {
                disagreement = Some(format!("χ = {value} disagrees with frobenius {fr} on {shape} at {class}"));
            }
        } else {
            obj["frobenius"] = Value::Null;
            lines.push("frobenius: skipped (skew shape or n above guard)".into());
        }
    }
    ctx.emit(|| lines.join("\n"), || obj);
    disagreement.map_or(Ok(()), |m| Err(Failure::Verification(m)))
}

fn cmd_verify(ctx: &Ctx, suite: Suite) -> Result<(), Failure> {
    let report: Report = match suite {
        Suite::Cz { k_max, n_max } => verify_cz(k_max, n_max)?,
        Suite::Jt { k_max, n_max } => verify_jt(k_max, n_max)?,
        Suite::Rclass { k_max, r, n_max } => verify_rclass(&ctx.evaluator, k_max, &r, n_max)?,
        Suite::Stablepoly { k_max, m_max, extra } => verify_stablepoly(&ctx.evaluator, k_max, m_max, extra)?,
    };
    ctx.emit_serialized(
        || {
            let mut out: Vec<String> = report
                .records
                .iter()
                .map(|r| {
                    if r.passed() {
                        format!("OK {}", r.instance)
                    } else {
                        let mut s = format!("FAIL {}: lhs={} rhs={}", r.instance, r.lhs, r.rhs);
                        if let Some(d) = &r.detail {
                            s.push_str(&format!(" [{d}]"));
                        }
                        s
                    }
                })
                .collect();
            let s = &report.summary;
            out.push(format!("{}: {}/{} passed", s.suite, s.passed, s.total));
            out.join("\n")
        },
        &report,
    );
    match &report.summary.first_failure {
        None => Ok(()),
        Some(f) => Err(Failure::Verification(format!("first failure: {f}"))),
    }
}

fn cmd_charpoly(ctx: &Ctx, lam: Partition, nu: Partition) -> Result<(), Failure> {
    let spec = StableClassSpec::new(lam, nu);
    let sp = stable_char_poly_with(&ctx.evaluator, &spec)?;
    let observed = observed_agreement_from(&ctx.evaluator, &spec, &sp)?;
    ctx.emit(
        || format!("{}\nvalid_from: {}\nobserved_from: {observed}", sp.poly, sp.valid_from),
        || {
            json!({
                "lambda": spec.lam.to_string(),
                "nu": spec.nu.to_string(),
                "poly": sp.poly.to_string(),
                "coefficients": sp.poly.coeffs().iter().map(rat_to_string).collect::<Vec<_>>(),
                "valid_from": sp.valid_from.to_string(),
                "observed_from": observed.to_string(),
            })
        },
    );
    Ok(())
}

fn render_table(t: &BenchTable) -> String {
    let mut out = vec!["instance\tstrategy\tvalue\tmicros\tcalls".to_string()];
    for r in &t.rows {
        out.push(format!("{}\t{}\t{}\t{}\t{}", r.instance, r.strategy, r.value, r.micros, r.calls));
    }
    out.join("\n")
}

fn cmd_bench(
    ctx: &Ctx,
    family: Family,
    lambda: Option<Partition>,
    nu: Option<Partition>,
    k: Option<usize>,
    ns: NRange,
) -> Result<(), Failure> {
    let (name, table) = match family {
        Family::Stable => {
            let (Some(lam), Some(nu)) = (lambda, nu) else {
                return Err(Failure::Usage("bench --family stable needs --lambda and --nu".into()));
            };
            ("stable", bench_stable(&lam, &nu, &ns.0)?)
        }
        Family::Degree => {
            let Some(k) = k else {
                return Err(Failure::Usage("bench --family degree needs --k".into()));
            };
            ("degree", bench_degree(k, &ns.0)?)
        }
    };
    ctx.emit(|| render_table(&table), || json!({ "family": name, "rows": table.rows }));
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n as usize)
            .build_global()
            .map_err(|e| Failure::Usage(format!("cannot configure {n} threads: {e}")))?;
    }
    let evaluator = match cli.cache {
        CacheArg::PerCall => MnEvaluator::new(CachePolicy::PerCall),
        CacheArg::Shared => MnEvaluator::with_cache(Arc::new(MnCache::new())),
    };
    let ctx = Ctx { json: cli.json, oracle: cli.oracle, evaluator };
    match cli.command {
        Command::Degree { partition, inner } => cmd_degree(&ctx, partition, inner),
        Command::Char { partition, class, inner } => cmd_char(&ctx, partition, class, inner),
        Command::Verify { suite } => cmd_verify(&ctx, suite),
        Command::Charpoly { lambda, nu } => cmd_charpoly(&ctx, lambda, nu),
        Command::Bench { family, lambda, nu, k, n } => cmd_bench(&ctx, family, lambda, nu, k, n),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.code())
        }
    }
}
