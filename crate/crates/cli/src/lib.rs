//! Argument parsing and command execution for the `weylbranch` binary.
//!
//! [`run`] never prints or exits; it returns an [`Outcome`] so the binary and
//! the tests share one code path.

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use weylbranch::oracle::{dimension, verify_branching, verify_rel_weyl};
use weylbranch::weights::dominant_weights_bounded;
use weylbranch::{
    branch, character, rel_pieri_gl, rel_pieri_sp, rel_pieri_sp_straightened, rel_pieri_spin,
    BranchingPair, BranchingTable, DominantWeight, Error, Family, Grade, GradedVirtualSum,
    GroupFamily, HalfInt, LaurentPoly, Multiplicity, PairKind, SL2Module,
};

#[derive(Parser, Debug)]
#[command(
    name = "weylbranch",
    version,
    about = "Characters and branching rules of classical groups"
)]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the character of an irreducible representation.
    Char {
        #[arg(long)]
        group: GroupFamily,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        /// Print only the term count and dimension.
        #[arg(long)]
        summary: bool,
    },
    /// Print the branching table of a highest weight.
    Branch {
        #[arg(long)]
        pair: BranchingPair,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Print the relative Pieri expansion of a subgroup weight.
    Pieri {
        #[arg(long)]
        pair: BranchingPair,
        /// Weight of the subgroup.
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        /// Degree of the Sp(2) factor (symplectic pairs only).
        #[arg(long)]
        k: Option<u32>,
        /// Use the fully straightened symplectic expansion.
        #[arg(long)]
        straightened: bool,
    },
    /// Check the branching rule and relative Weyl formula for one weight.
    Verify {
        #[arg(long)]
        pair: BranchingPair,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Verify every dominant weight with entries bounded by --max-entry.
    Sweep {
        #[arg(long)]
        pair: BranchingPair,
        #[arg(long, default_value = "2")]
        max_entry: HalfInt,
        /// Only half-integral weights (B and D pairs).
        #[arg(long)]
        half_integer: bool,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

/// Exit code, standard output and standard error of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(msg: impl std::fmt::Display) -> Self {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

/// The checks run by `verify` and `sweep`.
pub trait Verifier: Sync {
    fn branching(&self, lambda: &DominantWeight, pair: BranchingPair) -> Result<bool, Error>;
    fn rel_weyl(&self, lambda: &DominantWeight) -> Result<bool, Error>;
}

/// Verification against the brute-force restriction oracle.
pub struct Oracle;

impl Verifier for Oracle {
    fn branching(&self, lambda: &DominantWeight, pair: BranchingPair) -> Result<bool, Error> {
        verify_branching(lambda, pair)
    }

    fn rel_weyl(&self, lambda: &DominantWeight) -> Result<bool, Error> {
        verify_rel_weyl(lambda)
    }
}

pub fn run(cli: &Cli) -> Outcome {
    run_with(cli, &Oracle)
}

pub fn run_with(cli: &Cli, verifier: &dyn Verifier) -> Outcome {
    let fmt = cli.format;
    let res = match &cli.command {
        Command::Char {
            group,
            weight,
            summary,
        } => cmd_char(*group, weight, *summary, fmt),
        Command::Branch { pair, weight } => cmd_branch(*pair, weight, fmt),
        Command::Pieri {
            pair,
            weight,
            k,
            straightened,
        } => cmd_pieri(*pair, weight, *k, *straightened, fmt),
        Command::Verify { pair, weight } => {
            return match DominantWeight::parse(pair.big_group(), weight) {
                Ok(l) => cmd_verify(*pair, &l, verifier, fmt),
                Err(e) => Outcome::usage(e),
            }
        }
        Command::Sweep {
            pair,
            max_entry,
            half_integer,
            jobs,
        } => {
            return cmd_sweep(*pair, *max_entry, *half_integer, *jobs, verifier, fmt);
        }
    };
    match res {
        Ok(s) => Outcome::ok(s),
        Err(e) => Outcome::usage(e),
    }
}

fn render(v: &Value) -> String {
    format!("{v}\n")
}

fn weight_json(w: &DominantWeight) -> Value {
    json!(w.entries().to_strings())
}

fn sl2_json(m: &SL2Module) -> Value {
    Value::Array(m.iter().map(|(k, c)| json!({"k": k, "mult": c})).collect())
}

fn poly_json(p: &LaurentPoly) -> Value {
    Value::Array(
        p.terms()
            .rev()
            .map(|(e, c)| json!({"coeff": c.to_string(), "exp": e.to_strings()}))
            .collect(),
    )
}

fn cmd_char(group: GroupFamily, weight: &str, summary: bool, fmt: Format) -> Result<String, Error> {
    let w = DominantWeight::parse(group, weight)?;
    let p = character(&w)?;
    let out = match (fmt, summary) {
        (Format::Text, false) => format!("{p}\n"),
        (Format::Text, true) => {
            format!("terms: {}\ndimension: {}\n", p.num_terms(), dimension(&p)?)
        }
        (Format::Json, false) => render(&json!({
            "group": group.to_string(),
            "weight": weight_json(&w),
            "terms": poly_json(&p),
        })),
        (Format::Json, true) => render(&json!({
            "group": group.to_string(),
            "weight": weight_json(&w),
            "terms": p.num_terms(),
            "dimension": dimension(&p)?,
        })),
    };
    Ok(out)
}

/// `{"pair", "weight", "branches": [{"weight", "mult" | "sl2"}]}`.
pub fn table_json(lambda: &DominantWeight, t: &BranchingTable) -> Value {
    let branches: Vec<Value> = t
        .iter()
        .map(|(w, m)| match m {
            Multiplicity::Int(c) => json!({"weight": weight_json(w), "mult": c}),
            Multiplicity::Sl2(s) => json!({"weight": weight_json(w), "sl2": sl2_json(s)}),
        })
        .collect();
    json!({
        "pair": t.pair.to_string(),
        "weight": weight_json(lambda),
        "branches": branches,
    })
}

fn cmd_branch(pair: BranchingPair, weight: &str, fmt: Format) -> Result<String, Error> {
    let lambda = DominantWeight::parse(pair.big_group(), weight)?;
    let t = branch(&lambda, pair)?;
    Ok(match fmt {
        Format::Text => format!("{t}\n"),
        Format::Json => render(&table_json(&lambda, &t)),
    })
}

fn sum_json(s: &GradedVirtualSum) -> Value {
    let terms: Vec<Value> = s
        .terms
        .iter()
        .map(|t| {
            let mut v = json!({"sign": t.sign, "weight": weight_json(&t.weight)});
            match &t.grade {
                Grade::Unit => {}
                Grade::TPow(r) => v["t"] = json!(r),
                Grade::Sl2(m) => v["sl2"] = sl2_json(m),
            }
            v
        })
        .collect();
    Value::Array(terms)
}

fn cmd_pieri(
    pair: BranchingPair,
    weight: &str,
    k: Option<u32>,
    straightened: bool,
    fmt: Format,
) -> Result<String, Error> {
    let w = DominantWeight::parse(pair.small_group(), weight)?;
    let symplectic = pair.kind() == PairKind::CToC1xC;
    if !symplectic && (k.is_some() || straightened) {
        return Err(Error::Precondition(
            "--k and --straightened apply to symplectic pairs only".into(),
        ));
    }
    let sum = match pair.kind() {
        PairKind::GlToGl => rel_pieri_gl(&w)?,
        PairKind::BToD => rel_pieri_spin(&w)?,
        PairKind::CToC1xC if straightened => rel_pieri_sp_straightened(k.unwrap_or(0), &w)?,
        PairKind::CToC1xC => rel_pieri_sp(k.unwrap_or(0), &w)?,
        PairKind::DToB => {
            return Err(Error::UnsupportedPair(format!("no Pieri rule for {pair}")));
        }
    };
    Ok(match fmt {
        Format::Text => format!("{sum}\n"),
        Format::Json => {
            let mut v = json!({
                "pair": pair.to_string(),
                "weight": weight_json(&w),
                "terms": sum_json(&sum),
            });
            if symplectic {
                v["k"] = json!(k.unwrap_or(0));
            }
            render(&v)
        }
    })
}

/// Result of checking one weight: `None` on success, otherwise the reason.
fn check_one(lambda: &DominantWeight, pair: BranchingPair, v: &dyn Verifier) -> Option<String> {
    let verdict = |name: &str, r: Result<bool, Error>| match r {
        Ok(true) => None,
        Ok(false) => Some(format!("{name} mismatch")),
        Err(e) => Some(format!("{name}: {e}")),
    };
    verdict("branching", v.branching(lambda, pair))
        .or_else(|| verdict("relative weyl", v.rel_weyl(lambda)))
}

fn cmd_verify(
    pair: BranchingPair,
    lambda: &DominantWeight,
    v: &dyn Verifier,
    fmt: Format,
) -> Outcome {
    let failure = check_one(lambda, pair, v);
    let stdout = match fmt {
        Format::Text => match &failure {
            None => format!("{pair} {lambda}: verified\n"),
            Some(why) => format!("{pair} {lambda}: FAILED ({why})\n"),
        },
        Format::Json => render(&json!({
            "pair": pair.to_string(),
            "weight": weight_json(lambda),
            "verified": failure.is_none(),
        })),
    };
    Outcome {
        code: if failure.is_some() { 1 } else { 0 },
        stdout,
        stderr: String::new(),
    }
}

/// The weights `sweep` visits: both integrality classes for B and D unless
/// `half_only`.
pub fn sweep_weights(
    pair: BranchingPair,
    max_entry: HalfInt,
    half_only: bool,
) -> Result<Vec<DominantWeight>, Error> {
    let g = pair.big_group();
    let spin = matches!(g.family(), Family::B | Family::D);
    if half_only && !spin {
        return Err(Error::Precondition(format!(
            "--half-integer needs a B or D pair, got {pair}"
        )));
    }
    if max_entry.is_negative() {
        return Err(Error::Precondition(
            "--max-entry must be nonnegative".into(),
        ));
    }
    let mut out = Vec::new();
    if !half_only {
        out.extend(dominant_weights_bounded(g, max_entry, false));
    }
    if spin {
        out.extend(dominant_weights_bounded(g, max_entry, true));
    }
    Ok(out)
}

fn cmd_sweep(
    pair: BranchingPair,
    max_entry: HalfInt,
    half_only: bool,
    jobs: Option<usize>,
    v: &dyn Verifier,
    fmt: Format,
) -> Outcome {
    let weights = match sweep_weights(pair, max_entry, half_only) {
        Ok(w) => w,
        Err(e) => return Outcome::usage(e),
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = jobs {
        if n == 0 {
            return Outcome::usage("--jobs must be at least 1");
        }
        builder = builder.num_threads(n);
    }
    let pool = match builder.build() {
        Ok(p) => p,
        Err(e) => return Outcome::usage(e),
    };
    let results: Vec<Option<String>> =
        pool.install(|| weights.par_iter().map(|l| check_one(l, pair, v)).collect());
    let failed: Vec<(&DominantWeight, String)> = weights
        .iter()
        .zip(results)
        .filter_map(|(w, r)| r.map(|why| (w, why)))
        .collect();

    let stdout = match fmt {
        Format::Text => {
            let mut s = format!("{pair}: checked {} weights\n", weights.len());
            if failed.is_empty() {
                s.push_str("all verified\n");
            } else {
                s.push_str(&format!("{} failed\n", failed.len()));
                for (w, why) in &failed {
                    s.push_str(&format!("  {w}: {why}\n"));
                }
            }
            s
        }
        Format::Json => render(&json!({
            "pair": pair.to_string(),
            "checked": weights.len(),
            "failed": failed.iter().map(|(w, _)| weight_json(w)).collect::<Vec<_>>(),
        })),
    };
    Outcome {
        code: if failed.is_empty() { 0 } else { 1 },
        stdout,
        stderr: String::new(),
    }
}
