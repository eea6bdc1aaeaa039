use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use springer_core::certificates::{certify_322, verify_smooth_chart};
use springer_core::eqsmoves::{
    c_inverse, c_move, eqs_class_bounded, eqs_partition_bounded, PartitionReport,
};
use springer_core::exactlin::{cell_of, cell_prime_of, jordan_operator, perp_flag, Flag, Permutation};
use springer_core::partitions::Partition;
use springer_core::selftest;
use springer_core::tableaux::{StandardTableau, DEFAULT_MAX_N};
use springer_core::Rational;

const MAX_N_VAR: &str = "SPRINGER_MAX_N";

/// Springer fiber components in type A: tableau moves, cells and certificates.
#[derive(Parser)]
#[command(name = "springer", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Smoothness family of a Jordan type.
    Classify { shape: Partition },
    /// Dimension of the Springer fiber.
    Dim { shape: Partition },
    /// Standard tableaux of a shape.
    Enumerate {
        shape: Partition,
        #[arg(long)]
        count_only: bool,
    },
    /// Schützenberger transform.
    Sch { tableau: StandardTableau },
    /// The move C, or its inverse.
    Cmove {
        tableau: StandardTableau,
        #[arg(long)]
        inverse: bool,
    },
    /// Jeu de taquin restriction to the entries i..=j.
    Restrict {
        i: usize,
        j: usize,
        tableau: StandardTableau,
    },
    /// Closure of a tableau under block moves.
    EqsClass { tableau: StandardTableau },
    /// All classes of a shape.
    EqsPartition {
        shape: Partition,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// The statistic dist for shapes (r,s,1).
    Dist { tableau: StandardTableau },
    /// Cells of the Jordan flag of a permutation.
    FlagCell {
        shape: Partition,
        sigma: Permutation,
        /// Basis tableau for the operator; column reading by default.
        #[arg(long)]
        basis: Option<StandardTableau>,
    },
    /// Tangent space certificate for the singular (3,2,2) component.
    #[command(name = "certify-322")]
    Certify322,
    /// Chart checks for the components Q(k,k,1).
    VerifyQ { k: usize },
    /// Run the acceptance suite.
    Selftest,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Status {
    Ok,
    Failed,
    Error,
}

impl Status {
    fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Failed => "failed",
            Status::Error => "error",
        }
    }

    fn exit_code(self) -> ExitCode {
        match self {
            Status::Ok => ExitCode::SUCCESS,
            _ => ExitCode::from(1),
        }
    }
}

struct Outcome {
    inputs: Value,
    outputs: Value,
    status: Status,
    summary: String,
}

impl Outcome {
    fn ok(inputs: Value, outputs: Value, summary: impl Into<String>) -> Self {
        Outcome { inputs, outputs, status: Status::Ok, summary: summary.into() }
    }

    fn checked(inputs: Value, outputs: Value, passed: bool, summary: impl Into<String>) -> Self {
        let status = if passed { Status::Ok } else { Status::Failed };
        Outcome { inputs, outputs, status, summary: summary.into() }
    }

    fn error(inputs: Value, err: impl std::fmt::Display) -> Self {
        Outcome { inputs, outputs: json!({ "error": err.to_string() }), status: Status::Error, summary: format!("error: {err}") }
    }
}

fn max_n() -> Result<usize, String> {
    match std::env::var(MAX_N_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| format!("{MAX_N_VAR} must be a positive integer, got {v:?}")),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

fn name(c: &Command) -> &'static str {
    match c {
        Command::Classify { .. } => "classify",
        Command::Dim { .. } => "dim",
        Command::Enumerate { .. } => "enumerate",
        Command::Sch { .. } => "sch",
        Command::Cmove { .. } => "cmove",
        Command::Restrict { .. } => "restrict",
        Command::EqsClass { .. } => "eqs-class",
        Command::EqsPartition { .. } => "eqs-partition",
        Command::Dist { .. } => "dist",
        Command::FlagCell { .. } => "flag-cell",
        Command::Certify322 => "certify-322",
        Command::VerifyQ { .. } => "verify-q",
        Command::Selftest => "selftest",
    }
}

fn run(command: Command, max_n: usize) -> Outcome {
    match command {
        Command::Classify { shape } => {
            let verdict = shape.classify_smooth();
            Outcome::ok(
                json!({ "shape": shape }),
                json!({ "smooth": verdict.is_smooth(), "verdict": verdict }),
                format!("{shape}: {verdict:?}"),
            )
        }
        Command::Dim { shape } => {
            let d = shape.springer_dim();
            Outcome::ok(json!({ "shape": shape }), json!(d), format!("dim = {d}"))
        }
        Command::Enumerate { shape, count_only } => {
            let inputs = json!({ "shape": shape, "count_only": count_only });
            if count_only {
                let c = shape.count_tableaux().to_string();
                let value = c.parse::<u64>().map(Value::from).unwrap_or_else(|_| Value::String(c.clone()));
                return Outcome::ok(inputs, value, format!("{c} tableaux"));
            }
            match StandardTableau::enumerate_bounded(&shape, max_n) {
                Ok(all) => {
                    let texts: Vec<String> = all.iter().map(ToString::to_string).collect();
                    let summary = format!("{} tableaux", texts.len());
                    Outcome::ok(inputs, json!(texts), summary)
                }
                Err(e) => Outcome::error(inputs, e),
            }
        }
        Command::Sch { tableau } => {
            let s = tableau.schuetzenberger();
            Outcome::ok(json!({ "tableau": tableau.to_string() }), json!(s.to_string()), s.to_string())
        }
        Command::Cmove { tableau, inverse } => {
            let inputs = json!({ "tableau": tableau.to_string(), "inverse": inverse });
            let result = if inverse { c_inverse(&tableau) } else { c_move(&tableau) };
            match result {
                Ok(s) => Outcome::ok(inputs, json!(s.to_string()), s.to_string()),
                Err(e) => Outcome::error(inputs, e),
            }
        }
        Command::Restrict { i, j, tableau } => {
            let inputs = json!({ "i": i, "j": j, "tableau": tableau.to_string() });
            match tableau.restrict(i, j) {
                Ok(r) => match r.standardize() {
                    Ok(s) => Outcome::ok(
                        inputs,
                        json!({ "restricted": r.to_string(), "standardized": s.to_string() }),
                        format!("{r} ~ {s}"),
                    ),
                    Err(e) => Outcome::error(inputs, e),
                },
                Err(e) => Outcome::error(inputs, e),
            }
        }
        Command::EqsClass { tableau } => {
            let inputs = json!({ "tableau": tableau.to_string() });
            match eqs_class_bounded(&tableau, max_n) {
                Ok(class) => {
                    let members: Vec<String> = class.members.iter().map(ToString::to_string).collect();
                    let edges: Vec<Value> = class
                        .edges
                        .iter()
                        .map(|(a, label, b)| json!([members[*a], label.to_string(), members[*b]]))
                        .collect();
                    let summary = format!("{} members, representative {}", members.len(), class.representative());
                    Outcome::ok(
                        inputs,
                        json!({
                            "representative": class.representative().to_string(),
                            "size": members.len(),
                            "members": members,
                            "edges": edges,
                        }),
                        summary,
                    )
                }
                Err(e) => Outcome::error(inputs, e),
            }
        }
        Command::EqsPartition { shape, max_n: flag } => {
            let bound = flag.unwrap_or(max_n);
            let inputs = json!({ "shape": shape, "max_n": bound });
            match eqs_partition_bounded(&shape, bound) {
                Ok(classes) => {
                    let report = PartitionReport::new(&shape, &classes);
                    let summary = format!("{} classes", report.class_count);
                    Outcome::ok(inputs, json!(report), summary)
                }
                Err(e) => Outcome::error(inputs, e),
            }
        }
        Command::Dist { tableau } => {
            let inputs = json!({ "tableau": tableau.to_string() });
            match (tableau.j_stat(), tableau.dist()) {
                (Ok(j), Ok(d)) => Outcome::ok(inputs, json!({ "j": j, "dist": d }), format!("dist = {d}")),
                (Err(e), _) | (_, Err(e)) => Outcome::error(inputs, e),
            }
        }
        Command::FlagCell { shape, sigma, basis } => flag_cell(shape, sigma, basis),
        Command::Certify322 => match certify_322() {
            Ok(c) => {
                let report = c.report();
                let passed = report.passed();
                let summary = format!(
                    "tangent rank {} vs dim {}: {}",
                    c.tangent_dim_lower_bound, c.component_dim, report.verdict
                );
                Outcome::checked(json!({}), json!({ "certificate": c, "report": report }), passed, summary)
            }
            Err(e) => Outcome::error(json!({}), e),
        },
        Command::VerifyQ { k } => {
            let inputs = json!({ "k": k });
            if 2 * k + 1 > max_n {
                return Outcome::error(inputs, format!("n = {} exceeds the bound {max_n}", 2 * k + 1));
            }
            let mut reports = Vec::new();
            for d in 3..=k + 2 {
                match verify_smooth_chart(k, d) {
                    Ok(r) => reports.push(r),
                    Err(e) => return Outcome::error(inputs, e),
                }
            }
            let passed = reports.iter().all(|r| r.passed());
            let summary = format!("{} charts, {}", reports.len(), if passed { "all pass" } else { "failures" });
            Outcome::checked(inputs, json!(reports), passed, summary)
        }
        Command::Selftest => {
            let results = selftest::run_all();
            let passed = results.iter().all(|r| r.passed);
            let summary = results.iter().map(|r| r.line()).collect::<Vec<_>>().join("\n");
            Outcome::checked(json!({}), json!(results), passed, summary)
        }
    }
}

fn flag_cell(shape: Partition, sigma: Permutation, basis: Option<StandardTableau>) -> Outcome {
    let basis = basis.unwrap_or_else(|| StandardTableau::column_reading(&shape));
    let inputs = json!({ "shape": shape, "sigma": sigma.to_string(), "basis": basis.to_string() });
    if basis.shape() != shape {
        return Outcome::error(inputs, format!("basis tableau has shape {}", basis.shape()));
    }
    if sigma.n() != shape.n() {
        return Outcome::error(inputs, format!("permutation of {} letters for n = {}", sigma.n(), shape.n()));
    }
    let u = jordan_operator::<Rational>(&basis);
    let flag = Flag::jordan(&sigma);
    if !flag.is_stable(u.matrix()) {
        return Outcome::checked(inputs, json!({ "stable": false }), false, "flag is not u-stable");
    }
    let cells = cell_of(&flag, &u).and_then(|cell| {
        let prime = cell_prime_of(&flag, &u)?;
        let perp = cell_of(&perp_flag(&flag, &u.chain_form())?, &u)?;
        Ok((cell, prime, perp))
    });
    match cells {
        Ok((cell, prime, perp)) => {
            let summary = format!("cell {cell}, quotient cell {prime}");
            Outcome::ok(
                inputs,
                json!({
                    "stable": true,
                    "cell": cell.to_string(),
                    "cell_prime": prime.to_string(),
                    "perp_cell": perp.to_string(),
                }),
                summary,
            )
        }
        Err(e) => Outcome::error(inputs, e),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command = name(&cli.command);
    let max_n = match max_n() {
        Ok(m) => m,
        Err(msg) => {
            eprintln!("{msg}");
            return ExitCode::from(2);
        }
    };
    let start = Instant::now();
    let outcome = run(cli.command, max_n);
    let report = json!({
        "command": command,
        "inputs": outcome.inputs,
        "outputs": outcome.outputs,
        "status": outcome.status.as_str(),
        "elapsed_ms": start.elapsed().as_millis() as u64,
    });
    println!("{report}");
    eprintln!("{}", outcome.summary);
    outcome.status.exit_code()
}
