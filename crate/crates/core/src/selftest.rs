//! The acceptance suite: ten end-to-end checks with runtime budgets.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::certificates::{certify_322, verify_smooth_chart};
use crate::eqsmoves::{c_inverse, c_move, dist_class_invariant, eqs_class, eqs_partition, generalized_cyclic};
use crate::exactlin::{cell_of, cell_prime_of, jordan_flag_perms, jordan_operator, kk1_basis, perp_flag, Flag};
use crate::partitions::{Partition, SmoothnessVerdict};
use crate::tableaux::{concat, StandardTableau, Tableau};
use crate::Rational;

type Outcome = Result<String, String>;

/// One acceptance criterion.
#[derive(Debug, Clone, Copy)]
pub struct Criterion {
    pub id: u8,
    pub title: &'static str,
    pub budget: Duration,
    run: fn() -> Outcome,
}

#[derive(Debug, Clone, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub title: String,
    pub passed: bool,
    pub detail: String,
    pub elapsed_ms: u128,
    pub budget_ms: u128,
}

impl CriterionResult {
    /// `PASS [n] title (elapsed / budget) detail`.
    pub fn line(&self) -> String {
        format!(
            "{} [{}] {} ({} ms / {} ms) {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.elapsed_ms,
            self.budget_ms,
            self.detail
        )
    }
}

impl Criterion {
    pub fn run(&self) -> CriterionResult {
        let start = Instant::now();
        let outcome = (self.run)();
        let elapsed = start.elapsed();
        let in_budget = elapsed <= self.budget;
        let (ok, mut detail) = match outcome {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        if !in_budget {
            detail.push_str("; over runtime budget");
        }
        CriterionResult {
            id: self.id,
            title: self.title.into(),
            passed: ok && in_budget,
            detail,
            elapsed_ms: elapsed.as_millis(),
            budget_ms: self.budget.as_millis(),
        }
    }
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

pub fn criteria() -> Vec<Criterion> {
    vec![
        Criterion { id: 1, title: "dimension formula", budget: secs(1), run: dimension_formula },
        Criterion { id: 2, title: "smoothness classifier", budget: secs(1), run: classifier },
        Criterion { id: 3, title: "worked move examples", budget: secs(1), run: move_examples },
        Criterion { id: 4, title: "evacuation involution and descent reversal", budget: secs(30), run: evacuation },
        Criterion { id: 5, title: "enumeration matches hook lengths", budget: secs(30), run: enumeration },
        Criterion { id: 6, title: "dist invariance", budget: secs(120), run: dist_invariance },
        Criterion { id: 7, title: "class partitions", budget: secs(300), run: class_partitions },
        Criterion { id: 8, title: "singular (3,2,2) certificate", budget: secs(10), run: singular_certificate },
        Criterion { id: 9, title: "smooth charts for Q(k,k,1)", budget: secs(60), run: smooth_charts },
        Criterion { id: 10, title: "perp duality", budget: secs(120), run: duality },
    ]
}

pub fn criterion(id: u8) -> Option<Criterion> {
    criteria().into_iter().find(|c| c.id == id)
}

pub fn run_all() -> Vec<CriterionResult> {
    criteria().iter().map(Criterion::run).collect()
}

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("partition")
}

fn st(s: &str) -> StandardTableau {
    s.parse().expect("tableau literal")
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn dimension_formula() -> Outcome {
    let cases = [(p(&[2, 2, 1, 1]), 7), (p(&[3, 2, 2]), 6)];
    for (shape, dim) in &cases {
        let got = shape.springer_dim();
        ensure(got == *dim, || format!("dim {shape} = {got}, expected {dim}"))?;
    }
    for k in 1..=10 {
        let got = p(&[k, k, 1]).springer_dim();
        ensure(got == k + 2, || format!("dim ({k},{k},1) = {got}"))?;
    }
    Ok("12 shapes".into())
}

/// Independent description of the smooth families.
fn in_smooth_family(shape: &Partition) -> bool {
    let parts = shape.parts();
    let hook = parts.len() <= 1 || parts[1] <= 1;
    let two_row = parts.len() <= 2;
    let two_row_plus_box = parts.len() == 3 && parts[2] == 1;
    hook || two_row || two_row_plus_box || parts == [2, 2, 2]
}

fn classifier() -> Outcome {
    let mut count = 0;
    let mut forced = 0;
    for n in 1..=12 {
        for shape in Partition::all(n) {
            let verdict = shape.classify_smooth();
            ensure(verdict.is_smooth() == in_smooth_family(&shape), || {
                format!("{shape}: classifier says {verdict:?}")
            })?;
            if shape.forces_singular_component() {
                forced += 1;
                ensure(verdict == SmoothnessVerdict::HasSingular, || {
                    format!("{shape}: singularity forced but classified {verdict:?}")
                })?;
            }
            count += 1;
        }
    }
    Ok(format!("{count} partitions, {forced} with a forced singular component"))
}

fn move_examples() -> Outcome {
    let checks: Vec<(&str, Result<StandardTableau, String>, &str)> = vec![
        (
            "C of the 11-box example",
            c_move(&st("1,2,4/3,6,8/5,7,10/9,11")).map_err(|e| e.to_string()),
            "1,3,7/2,5,9/4,6,11/8,10",
        ),
        ("Sch example", Ok(st("1,2,3/4,5/6").schuetzenberger()), "1,3,6/2,5/4"),
        ("C cycle step 1", c_move(&st("1,2,5/3,4,6")).map_err(|e| e.to_string()), "1,3,4/2,5,6"),
        ("C cycle step 2", c_move(&st("1,3,4/2,5,6")).map_err(|e| e.to_string()), "1,2,3/4,5,6"),
        ("C cycle step 3", c_move(&st("1,2,3/4,5,6")).map_err(|e| e.to_string()), "1,2,5/3,4,6"),
        (
            "C inverse",
            c_inverse(&st("1,3,7/2,5,9/4,6,11/8,10")).map_err(|e| e.to_string()),
            "1,2,4/3,6,8/5,7,10/9,11",
        ),
        (
            "C on columns [1,2]",
            crate::eqsmoves::block_move(
                &st("1,2,5/3,4,6"),
                crate::eqsmoves::MoveLabel { kind: crate::eqsmoves::MoveKind::C, columns: (1, 2) },
            )
            .map_err(|e| e.to_string()),
            "1,3,5/2,4,6",
        ),
        ("generalized cyclic counterexample", Ok(generalized_cyclic(&st("1,3/2,5/4/6"))), "1,2/3,4/5/6"),
    ];
    for (name, got, want) in &checks {
        let got = got.clone()?;
        ensure(got.to_string() == *want, || format!("{name}: got {got}, expected {want}"))?;
    }
    let r = st("1,2,4/3,6,8/5,7,10/9,11").restrict(2, 11).map_err(|e| e.to_string())?;
    ensure(r.to_string() == "2,4,8/3,6,10/5,7/9,11", || format!("restriction: {r}"))?;
    let s = r.standardize().map_err(|e| e.to_string())?;
    ensure(s.to_string() == "1,3,7/2,5,9/4,6/8,10", || format!("standardization: {s}"))?;
    let r = st("1,3/2,5/4/6").restrict(2, 6).map_err(|e| e.to_string())?;
    ensure(r.to_string() == "2,3/4,5/6", || format!("restriction: {r}"))?;
    let class = eqs_class(&st("1,2,5/3,4,6")).map_err(|e| e.to_string())?;
    ensure(class.contains(&st("1,3,5/2,4,6")) && class.contains(&st("1,2,3/4,5,6")), || {
        "class of 1,2,5/3,4,6 misses a worked example".into()
    })?;
    Ok(format!("{} examples", checks.len() + 4))
}

fn small_partitions(max_n: usize) -> impl Iterator<Item = Partition> {
    (1..=max_n).flat_map(Partition::all)
}

fn evacuation() -> Outcome {
    let mut count = 0;
    for shape in small_partitions(8) {
        for t in StandardTableau::enumerate(&shape).map_err(|e| e.to_string())? {
            let n = t.n();
            let s = t.schuetzenberger();
            ensure(s.schuetzenberger() == t, || format!("Sch is not an involution at {t}"))?;
            let tau = t.tau();
            let tau_s = s.tau();
            for i in 1..n {
                ensure(tau.contains(&i) == tau_s.contains(&(n - i)), || {
                    format!("descent reversal fails at {t}, i = {i}")
                })?;
            }
            count += 1;
        }
    }
    Ok(format!("{count} tableaux"))
}

fn enumeration() -> Outcome {
    let mut shapes = 0;
    for shape in small_partitions(8) {
        let got = StandardTableau::enumerate(&shape).map_err(|e| e.to_string())?.len();
        let want = shape.count_tableaux();
        ensure(num_bigint::BigUint::from(got) == want, || format!("{shape}: {got} vs {want}"))?;
        shapes += 1;
    }
    Ok(format!("{shapes} shapes"))
}

fn rs1_shapes(max_n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    for r in 1..max_n {
        for s in 1..=r {
            if r + s < max_n {
                out.push(p(&[r, s, 1]));
            }
        }
    }
    out
}

fn dist_invariance() -> Outcome {
    let mut tableaux = 0;
    let mut c_moves = 0;
    let mut classes = 0;
    for shape in rs1_shapes(9) {
        for t in StandardTableau::enumerate(&shape).map_err(|e| e.to_string())? {
            let d = t.dist().map_err(|e| e.to_string())?;
            let ds = t.schuetzenberger().dist().map_err(|e| e.to_string())?;
            ensure(d == ds, || format!("dist changes under Sch at {t}"))?;
            if let Ok(c) = c_move(&t) {
                let dc = c.dist().map_err(|e| e.to_string())?;
                ensure(d == dc, || format!("dist changes under C at {t}"))?;
                c_moves += 1;
            }
            tableaux += 1;
        }
        let report = dist_class_invariant(&shape).map_err(|e| e.to_string())?;
        ensure(report.passed(), || format!("{shape}: {:?}", report.violations))?;
        classes += report.class_count;
    }
    Ok(format!("{tableaux} tableaux, {c_moves} C moves, {classes} classes"))
}

fn class_partitions() -> Outcome {
    for r in 1..=4 {
        let shape = p(&[r, r, 1]);
        let classes = eqs_partition(&shape).map_err(|e| e.to_string())?;
        ensure(classes.len() == r, || format!("({r},{r},1): {} classes", classes.len()))?;
        for k in 1..=r {
            let q = StandardTableau::q_tableau(k).map_err(|e| e.to_string())?;
            let tail = StandardTableau::two_row_shifted(r - k, 2 * k + 1);
            let parts: [&Tableau; 2] = [&q, &tail];
            let glued = concat(&parts).map_err(|e| e.to_string())?;
            let glued = StandardTableau::try_from(glued).map_err(|e| e.to_string())?;
            let hits = classes.iter().filter(|c| c.contains(&glued)).count();
            ensure(hits == 1, || format!("({r},{r},1): {glued} found in {hits} classes"))?;
            let class = classes.iter().find(|c| c.contains(&glued)).expect("one hit");
            let dists: Vec<usize> = class.members.iter().filter_map(|m| m.dist().ok()).collect();
            ensure(dists.iter().all(|&d| d == k), || format!("({r},{r},1): class of {glued} has dist {dists:?}"))?;
        }
    }
    let mut two_row = 0;
    for n in 2..=9 {
        for s in 1..=n / 2 {
            let r = n - s;
            let classes = eqs_partition(&p(&[r, s])).map_err(|e| e.to_string())?;
            let prs = StandardTableau::two_row(r, s).map_err(|e| e.to_string())?;
            ensure(classes.len() == 1 && classes[0].contains(&prs), || {
                format!("({r},{s}): {} classes", classes.len())
            })?;
            two_row += 1;
        }
    }
    Ok(format!("(r,r,1) for r <= 4 and {two_row} two-row shapes"))
}

fn singular_certificate() -> Outcome {
    let c = certify_322().map_err(|e| e.to_string())?;
    ensure(c.tangent_dim_lower_bound == 7 && c.component_dim == 6 && c.verdict, || {
        format!("rank {} dim {}", c.tangent_dim_lower_bound, c.component_dim)
    })?;
    ensure(c.membership_confirmations >= 5, || format!("{} confirmations", c.membership_confirmations))?;
    Ok(format!(
        "rank {} > dim {}, {} membership confirmations",
        c.tangent_dim_lower_bound, c.component_dim, c.membership_confirmations
    ))
}

fn smooth_charts() -> Outcome {
    let mut count = 0;
    for k in 2..=5 {
        for d in 3..=k + 2 {
            let report = verify_smooth_chart(k, d).map_err(|e| format!("k={k} d={d}: {e}"))?;
            ensure(report.passed(), || {
                let failed: Vec<_> = report.report.checks.iter().filter(|c| !c.passed()).map(|c| c.name.clone()).collect();
                format!("k={k} d={d}: {failed:?}")
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} charts"))
}

/// Shapes and basis tableaux for the duality check.
pub fn duality_samples() -> Vec<StandardTableau> {
    let mut out: Vec<StandardTableau> = Vec::new();
    let kk1: Vec<Partition> = (1..=3).map(|k| p(&[k, k, 1])).collect();
    let mut shapes: Vec<Partition> = small_partitions(5).collect();
    shapes.extend([p(&[2, 2, 1, 1]), p(&[3, 3, 1]), p(&[3, 2, 2])]);
    for shape in shapes {
        if !kk1.contains(&shape) {
            out.push(StandardTableau::column_reading(&shape));
        }
    }
    for k in 1..=3 {
        out.push(kk1_basis(k).expect("k >= 1"));
    }
    out
}

fn duality() -> Outcome {
    let mut flags = 0;
    let samples = duality_samples();
    for basis in &samples {
        let u = jordan_operator::<Rational>(basis);
        let b = u.chain_form();
        for sigma in jordan_flag_perms(basis) {
            let f = Flag::jordan(&sigma);
            let lhs = cell_of(&perp_flag(&f, &b).map_err(|e| e.to_string())?, &u).map_err(|e| e.to_string())?;
            let rhs = cell_prime_of(&f, &u).map_err(|e| e.to_string())?.schuetzenberger();
            ensure(lhs == rhs, || format!("basis {basis}, sigma {sigma}: {lhs} vs {rhs}"))?;
            flags += 1;
        }
    }
    Ok(format!("{flags} Jordan flags over {} shapes", samples.len()))
}
