use std::collections::BTreeSet;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use skolem_xray::bijection::{
    extremal_pairing_to_permutation, involution_characteristic, involution_to_pairing,
    pairing_to_involution, permutation_to_extremal_pairing,
};
use skolem_xray::ds::{
    birkhoff_decompose, ds_xray_feasible, verify_conjecture_5, verify_conjecture_6, DSMatrix,
};
use skolem_xray::lab::{
    count_score_vectors, enumerate_score_vectors, enumerate_score_vectors_bruteforce, recheck,
    recognize_xray, verify_conjecture_1, verify_conjecture_2, verify_conjecture_2_multisets,
    verify_conjecture_3, verify_conjecture_4, ConjectureReport, LabConfig, ReportStatus,
    ScoreVector,
};
use skolem_xray::parse;
use skolem_xray::rational::format_rational;
use skolem_xray::skolem::{count_partitions, is_extremal, pairing_to_sequence, solve_partition};
use skolem_xray::xray::{
    antidiagonal_xray, characteristic_of_xray, diagonal_xray, toeplitz_characteristic,
};
use skolem_xray::{
    Characteristic, DifferenceMultiset, Pairing, Permutation, Rational, SearchBudget, SearchStatus,
    SkolemSequence, XRay,
};

use crate::output::{lines, Exit, Rendered, Table};
use crate::{BijectionKind, Direction, Global, SkolemAction};

pub struct Failure {
    pub message: String,
    pub exit: Exit,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Self {
            message: message.into(),
            exit: Exit::Usage,
        }
    }
}

impl From<skolem_xray::Error> for Failure {
    fn from(e: skolem_xray::Error) -> Self {
        Self::usage(e.to_string())
    }
}

type Outcome = Result<Rendered, Failure>;

impl Global {
    fn budget(&self) -> SearchBudget {
        SearchBudget::nodes(self.budget)
    }

    fn lab(&self) -> LabConfig {
        LabConfig {
            max_order: self.max_n as usize,
            budget: self.budget(),
        }
    }

    /// The positional or flag value, else the contents of `--in`.
    fn input(&self, given: Option<String>, what: &str) -> Result<String, Failure> {
        match (given, &self.input) {
            (Some(s), None) => Ok(s),
            (None, Some(path)) => std::fs::read_to_string(path)
                .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display()))),
            (Some(_), Some(_)) => Err(Failure::usage(format!(
                "give the {what} either inline or with --in, not both"
            ))),
            (None, None) => Err(Failure::usage(format!("missing {what}"))),
        }
    }

    fn progress(&self, msg: &str) {
        if !self.quiet {
            eprintln!("{msg}");
        }
    }
}

fn status_exit(s: SearchStatus) -> Exit {
    match s {
        SearchStatus::Found => Exit::Ok,
        SearchStatus::None => Exit::None,
        SearchStatus::Budget => Exit::Budget,
    }
}

fn status_name(s: SearchStatus) -> &'static str {
    match s {
        SearchStatus::Found => "found",
        SearchStatus::None => "none",
        SearchStatus::Budget => "budget",
    }
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(ToString::to_string).unwrap_or_default()
}

#[derive(Serialize)]
struct XrayOut {
    permutation: Permutation,
    direction: Direction,
    xray: XRay,
    characteristic: Characteristic,
}

pub fn xray(g: &Global, perm: Option<String>, direction: Direction) -> Outcome {
    let pi = parse::parse_permutation(&g.input(perm, "permutation")?)?;
    let x = match direction {
        Direction::Diag => diagonal_xray(&pi),
        Direction::Antidiag => antidiagonal_xray(&pi),
    };
    let c = characteristic_of_xray(&x)?;
    let text = lines(&[("xray", x.to_string()), ("characteristic", c.to_string())]);
    let mut table = Table::new(["permutation", "direction", "xray", "characteristic"]);
    let dir = match direction {
        Direction::Diag => "diag",
        Direction::Antidiag => "antidiag",
    };
    table.push([pi.to_string(), dir.into(), x.to_string(), c.to_string()]);
    let out = XrayOut {
        permutation: pi,
        direction,
        xray: x,
        characteristic: c,
    };
    Ok(Rendered::new(&out, text, &table, Exit::Ok))
}

#[derive(Serialize)]
struct SolveOut {
    differences: DifferenceMultiset,
    status: SearchStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pairing: Option<Pairing>,
    #[serde(skip_serializing_if = "Option::is_none")]
    sequence: Option<SkolemSequence>,
    /// Only for extremal inputs.
    #[serde(skip_serializing_if = "Option::is_none")]
    permutation: Option<Permutation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    involution: Option<Permutation>,
    nodes_explored: u64,
}

#[derive(Serialize)]
struct CountOut {
    differences: DifferenceMultiset,
    extremal: bool,
    pairings: u128,
}

#[derive(Serialize)]
struct SequenceOut {
    sequence: SkolemSequence,
    differences: DifferenceMultiset,
    pairing: Pairing,
    #[serde(skip_serializing_if = "Option::is_none")]
    permutation: Option<Permutation>,
    involution: Permutation,
}

pub fn skolem(g: &Global, action: SkolemAction, input: Option<String>) -> Outcome {
    match action {
        SkolemAction::Solve => {
            let a = parse::parse_multiset(&g.input(input, "differences")?)?;
            let r = solve_partition(&a, g.budget());
            let status = r.status();
            let pairing = r.witness().cloned();
            let sequence = pairing.as_ref().map(pairing_to_sequence);
            let permutation = pairing
                .as_ref()
                .filter(|p| p.is_extremal())
                .map(extremal_pairing_to_permutation)
                .transpose()?;
            let involution = pairing.as_ref().map(pairing_to_involution);
            let text = lines(&[
                ("status", status_name(status).into()),
                ("pairing", opt(&pairing)),
                ("sequence", opt(&sequence)),
                ("permutation", opt(&permutation)),
                ("involution", opt(&involution)),
                ("nodes", r.nodes_explored.to_string()),
            ]);
            let mut table = Table::new([
                "differences",
                "status",
                "pairing",
                "sequence",
                "permutation",
                "involution",
                "nodes",
            ]);
            table.push([
                a.to_string(),
                status_name(status).into(),
                opt(&pairing),
                opt(&sequence),
                opt(&permutation),
                opt(&involution),
                r.nodes_explored.to_string(),
            ]);
            let out = SolveOut {
                differences: a,
                status,
                pairing,
                sequence,
                permutation,
                involution,
                nodes_explored: r.nodes_explored,
            };
            Ok(Rendered::new(&out, text, &table, status_exit(status)))
        }
        SkolemAction::Count => {
            let a = parse::parse_multiset(&g.input(input, "differences")?)?;
            let count = count_partitions(&a);
            let extremal = is_extremal(&a);
            let text = lines(&[
                ("pairings", count.to_string()),
                ("extremal", extremal.to_string()),
            ]);
            let mut table = Table::new(["differences", "extremal", "pairings"]);
            table.push([a.to_string(), extremal.to_string(), count.to_string()]);
            let out = CountOut {
                differences: a,
                extremal,
                pairings: count,
            };
            Ok(Rendered::new(&out, text, &table, Exit::Ok))
        }
        SkolemAction::Sequence => {
            let s = parse::parse_sequence(&g.input(input, "sequence")?)?;
            let pairing = s.to_pairing();
            let differences = pairing.differences();
            let permutation = pairing
                .is_extremal()
                .then(|| extremal_pairing_to_permutation(&pairing))
                .transpose()?;
            let involution = pairing_to_involution(&pairing);
            let text = lines(&[
                ("differences", differences.to_string()),
                ("pairing", pairing.to_string()),
                ("permutation", opt(&permutation)),
                ("involution", involution.to_string()),
            ]);
            let mut table = Table::new([
                "sequence",
                "differences",
                "pairing",
                "permutation",
                "involution",
            ]);
            table.push([
                s.to_string(),
                differences.to_string(),
                pairing.to_string(),
                opt(&permutation),
                involution.to_string(),
            ]);
            let out = SequenceOut {
                sequence: s,
                differences,
                pairing,
                permutation,
                involution,
            };
            Ok(Rendered::new(&out, text, &table, Exit::Ok))
        }
    }
}

#[derive(Serialize)]
struct BijectionOut {
    kind: BijectionKind,
    pairing: Pairing,
    differences: DifferenceMultiset,
    sequence: SkolemSequence,
    permutation: Permutation,
    characteristic: Characteristic,
    #[serde(skip_serializing_if = "Option::is_none")]
    predicted_characteristic: Option<Characteristic>,
}

pub fn bijection(
    g: &Global,
    kind: BijectionKind,
    pairing: Option<String>,
    sequence: Option<String>,
    perm: Option<String>,
) -> Outcome {
    let (pairing, permutation) = match (pairing, sequence, perm) {
        (Some(p), None, None) => (Some(parse::parse_pairing(&p)?), None),
        (None, Some(s), None) => (Some(parse::parse_sequence(&s)?.to_pairing()), None),
        (None, None, Some(p)) => (None, Some(parse::parse_permutation(&p)?)),
        (None, None, None) => match &g.input {
            // a file holds a pairing (JSON pairs or s-t list)
            Some(_) => (
                Some(parse::parse_pairing(&g.input(None, "pairing")?)?),
                None,
            ),
            None => return Err(Failure::usage("give --pairing, --sequence, --perm or --in")),
        },
        _ => {
            return Err(Failure::usage(
                "give only one of --pairing, --sequence, --perm",
            ))
        }
    };
    let (pairing, permutation) = match (kind, pairing, permutation) {
        (BijectionKind::Extremal, Some(p), _) => {
            let pi = extremal_pairing_to_permutation(&p)?;
            (p, pi)
        }
        (BijectionKind::Extremal, None, Some(pi)) => (permutation_to_extremal_pairing(&pi), pi),
        (BijectionKind::Involution, Some(p), _) => {
            let pi = pairing_to_involution(&p);
            (p, pi)
        }
        (BijectionKind::Involution, None, Some(pi)) => (involution_to_pairing(&pi)?, pi),
        (_, None, None) => unreachable!("one source is always parsed"),
    };
    let differences = pairing.differences();
    let sequence = pairing_to_sequence(&pairing);
    let characteristic = toeplitz_characteristic(&permutation);
    let predicted = match kind {
        BijectionKind::Involution => Some(involution_characteristic(&differences)?),
        BijectionKind::Extremal => None,
    };
    let text = lines(&[
        ("pairing", pairing.to_string()),
        ("differences", differences.to_string()),
        ("sequence", sequence.to_string()),
        ("permutation", permutation.to_string()),
        ("characteristic", characteristic.to_string()),
        ("predicted", opt(&predicted)),
    ]);
    let mut table = Table::new([
        "pairing",
        "differences",
        "sequence",
        "permutation",
        "characteristic",
        "predicted",
    ]);
    table.push([
        pairing.to_string(),
        differences.to_string(),
        sequence.to_string(),
        permutation.to_string(),
        characteristic.to_string(),
        opt(&predicted),
    ]);
    let out = BijectionOut {
        kind,
        pairing,
        differences,
        sequence,
        permutation,
        characteristic,
        predicted_characteristic: predicted,
    };
    Ok(Rendered::new(&out, text, &table, Exit::Ok))
}

#[derive(Serialize)]
struct RecognizeOut {
    target: XRay,
    status: SearchStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    permutation: Option<Permutation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    matrix: Option<DSMatrix>,
    #[serde(skip_serializing_if = "Option::is_none")]
    nodes_explored: Option<u64>,
}

fn matrix_text(d: &DSMatrix) -> String {
    d.rows()
        .iter()
        .map(|row| {
            row.iter()
                .map(format_rational)
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn matrix_cell(d: &DSMatrix) -> String {
    d.rows()
        .iter()
        .map(|row| {
            row.iter()
                .map(format_rational)
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join(";")
}

pub fn recognize(g: &Global, xray: Option<String>, ds: bool) -> Outcome {
    let target = parse::parse_xray(&g.input(xray, "x-ray")?)?;
    let out = if ds {
        let matrix = ds_xray_feasible(&target)?;
        RecognizeOut {
            status: if matrix.is_some() {
                SearchStatus::Found
            } else {
                SearchStatus::None
            },
            target,
            permutation: None,
            matrix,
            nodes_explored: None,
        }
    } else {
        let r = recognize_xray(&target, g.budget())?;
        RecognizeOut {
            status: r.status(),
            nodes_explored: Some(r.nodes_explored),
            permutation: r.into_witness(),
            target,
            matrix: None,
        }
    };
    let witness = match (&out.permutation, &out.matrix) {
        (Some(pi), _) => pi.to_string(),
        (_, Some(d)) => matrix_cell(d),
        _ => String::new(),
    };
    let text = match (&out.permutation, &out.matrix) {
        (Some(pi), _) => format!("{pi}\n"),
        (_, Some(d)) => format!("{}\n", matrix_text(d)),
        _ => format!("{}\n", status_name(out.status)),
    };
    let mut table = Table::new(["target", "status", "witness"]);
    table.push([
        out.target.to_string(),
        status_name(out.status).into(),
        witness,
    ]);
    Ok(Rendered::new(&out, text, &table, status_exit(out.status)))
}

fn orders(g: &Global, range_arg: Option<String>) -> Result<RangeInclusive<usize>, Failure> {
    let range_arg = range_arg.ok_or_else(|| Failure::usage("missing --n"))?;
    let range = parse::parse_order_range(&range_arg)?;
    if *range.end() > g.max_n as usize {
        return Err(Failure::usage(format!(
            "order {} exceeds the cap {} (raise --max-n or SKOLEM_XRAY_MAX_N)",
            range.end(),
            g.max_n
        )));
    }
    Ok(range)
}

fn pool(g: &Global) -> Result<rayon::ThreadPool, Failure> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(g.jobs as usize)
        .build()
        .map_err(|e| Failure::usage(format!("cannot start workers: {e}")))
}

fn report_table(reports: &[ConjectureReport]) -> Table {
    let keys: BTreeSet<&String> = reports
        .iter()
        .flat_map(|r| r.counts.iter().flat_map(|c| c.keys()))
        .collect();
    let mut header = vec!["conjecture".to_string(), "n".into(), "status".into()];
    header.extend(keys.iter().map(|k| k.to_string()));
    let mut table = Table::new(header);
    for r in reports {
        let mut row = vec![
            conjecture_number(r).to_string(),
            r.order.to_string(),
            status_label(r.status).to_string(),
        ];
        row.extend(
            keys.iter()
                .map(|k| r.count(k).map(|v| v.to_string()).unwrap_or_default()),
        );
        table.push(row);
    }
    table
}

fn conjecture_number(r: &ConjectureReport) -> u8 {
    serde_json::to_value(r.conjecture_id)
        .ok()
        .and_then(|v| v.as_str().and_then(|s| s[1..].parse().ok()))
        .unwrap_or(0)
}

fn status_label(s: ReportStatus) -> &'static str {
    match s {
        ReportStatus::Verified => "verified",
        ReportStatus::Counterexample => "counterexample",
        ReportStatus::BudgetExhausted => "budget_exhausted",
    }
}

fn sweep_exit(reports: &[ConjectureReport]) -> Exit {
    if reports
        .iter()
        .any(|r| r.status == ReportStatus::Counterexample)
    {
        Exit::Counterexample
    } else if reports
        .iter()
        .any(|r| r.status == ReportStatus::BudgetExhausted)
    {
        Exit::Budget
    } else {
        Exit::Ok
    }
}

fn run_one(
    k: u8,
    n: usize,
    multisets: bool,
    cfg: &LabConfig,
) -> skolem_xray::Result<ConjectureReport> {
    match (k, multisets) {
        (1, _) => verify_conjecture_1(n, cfg),
        (2, false) => verify_conjecture_2(n, cfg),
        (2, true) => verify_conjecture_2_multisets(n, cfg),
        (3, _) => verify_conjecture_3(n, cfg),
        (4, _) => verify_conjecture_4(n, cfg),
        (5, _) => verify_conjecture_5(n, cfg),
        _ => verify_conjecture_6(n, cfg),
    }
}

fn with_witnesses(reports: &[ConjectureReport]) -> String {
    let mut text = report_table(reports).to_text();
    for r in reports {
        if let Some(w) = &r.witness {
            text.push_str(&format!("witness n={}: {w}\n", r.order));
        }
    }
    text
}

pub fn verify(
    g: &Global,
    conjecture: Option<u8>,
    range_arg: Option<String>,
    multisets: bool,
    report_dir: Option<PathBuf>,
) -> Outcome {
    let Some(k) = conjecture else {
        return recheck_reports(g);
    };
    if g.input.is_some() {
        return Err(Failure::usage(
            "--in rechecks saved reports and cannot be combined with --conjecture",
        ));
    }
    if multisets && k != 2 {
        return Err(Failure::usage("--multisets applies to conjecture 2 only"));
    }
    let range = orders(g, range_arg)?;
    let cfg = g.lab();
    let reports: Vec<ConjectureReport> = pool(g)?.install(|| {
        range
            .into_par_iter()
            .map(|n| {
                let start = Instant::now();
                let r = run_one(k, n, multisets, &cfg);
                if let Ok(r) = &r {
                    g.progress(&format!(
                        "conjecture {k} n={n}: {} ({:.2?})",
                        status_label(r.status),
                        start.elapsed()
                    ));
                }
                r
            })
            .collect::<skolem_xray::Result<_>>()
    })?;
    if let Some(dir) = report_dir {
        std::fs::create_dir_all(&dir)
            .map_err(|e| Failure::usage(format!("cannot create {}: {e}", dir.display())))?;
        for r in &reports {
            let path = dir.join(format!("conjecture-{k}-n{}.json", r.order));
            let body = serde_json::to_string_pretty(r).expect("report serializes") + "\n";
            std::fs::write(&path, body)
                .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))?;
        }
    }
    let table = report_table(&reports);
    Ok(Rendered::new(
        &reports,
        with_witnesses(&reports),
        &table,
        sweep_exit(&reports),
    ))
}

#[derive(Serialize)]
struct RecheckOut {
    conjecture: u8,
    n: usize,
    status: ReportStatus,
    confirmed: bool,
}

/// Reads one report or a list of reports and re-derives their witnesses.
fn recheck_reports(g: &Global) -> Outcome {
    if g.input.is_none() {
        return Err(Failure::usage(
            "give --conjecture to sweep, or --in REPORT to recheck",
        ));
    }
    let body = g.input(None, "report")?;
    let reports: Vec<ConjectureReport> = serde_json::from_str::<Vec<ConjectureReport>>(&body)
        .or_else(|_| serde_json::from_str::<ConjectureReport>(&body).map(|r| vec![r]))
        .map_err(|e| Failure::usage(format!("not a report: {e}")))?;
    let mut rows = Vec::new();
    for r in &reports {
        rows.push(RecheckOut {
            conjecture: conjecture_number(r),
            n: r.order,
            status: r.status,
            confirmed: recheck(r)?,
        });
    }
    let mut table = Table::new(["conjecture", "n", "status", "confirmed"]);
    for r in &rows {
        table.push([
            r.conjecture.to_string(),
            r.n.to_string(),
            status_label(r.status).into(),
            r.confirmed.to_string(),
        ]);
    }
    let genuine = rows
        .iter()
        .any(|r| r.status == ReportStatus::Counterexample && r.confirmed);
    let exit = if genuine {
        Exit::Counterexample
    } else {
        Exit::Ok
    };
    Ok(Rendered::new(&rows, table.to_text(), &table, exit))
}

#[derive(Serialize)]
struct ScoreOut {
    n: usize,
    count: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    brute_force_count: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    vectors: Option<Vec<ScoreVector>>,
}

pub fn score_vectors(
    g: &Global,
    range_arg: Option<String>,
    list: bool,
    brute_force: bool,
) -> Outcome {
    let range_arg = match range_arg {
        Some(s) => Some(s),
        None if g.input.is_some() => Some(g.input(None, "order")?.trim().to_string()),
        None => None,
    };
    let range = orders(g, range_arg)?;
    let rows: Vec<ScoreOut> = pool(g)?.install(|| {
        range
            .into_par_iter()
            .map(|n| -> skolem_xray::Result<ScoreOut> {
                let count = count_score_vectors(n)?;
                let brute_force_count = if brute_force {
                    Some(enumerate_score_vectors_bruteforce(n)?.len() as u64)
                } else {
                    None
                };
                let vectors = if list {
                    Some(enumerate_score_vectors(n)?.into_iter().collect())
                } else {
                    None
                };
                g.progress(&format!("score vectors n={n}: {count}"));
                Ok(ScoreOut {
                    n,
                    count,
                    brute_force_count,
                    vectors,
                })
            })
            .collect::<skolem_xray::Result<_>>()
    })?;
    let mut header = vec!["n", "count"];
    if brute_force {
        header.push("brute_force");
    }
    let mut table = Table::new(header);
    let mut text = String::new();
    for r in &rows {
        let mut row = vec![r.n.to_string(), r.count.to_string()];
        row.extend(r.brute_force_count.map(|c| c.to_string()));
        table.push(row);
    }
    text.push_str(&table.to_text());
    for r in &rows {
        for v in r.vectors.iter().flatten() {
            let scores: Vec<String> = v.scores().iter().map(u64::to_string).collect();
            text.push_str(&format!("n={} ({})\n", r.n, scores.join(",")));
        }
    }
    let mismatch = rows
        .iter()
        .any(|r| r.brute_force_count.is_some_and(|b| b != r.count));
    let exit = if mismatch {
        Exit::Counterexample
    } else {
        Exit::Ok
    };
    Ok(Rendered::new(&rows, text, &table, exit))
}

#[derive(Serialize)]
struct BirkhoffOut {
    n: usize,
    terms: skolem_xray::ds::BirkhoffDecomposition,
    #[serde(with = "skolem_xray::rational::text")]
    coefficient_sum: Rational,
}

pub fn birkhoff(g: &Global, matrix: Option<String>) -> Outcome {
    let d = parse::parse_ds_matrix(&g.input(matrix, "matrix")?)?;
    let dec = birkhoff_decompose(&d)?;
    let mut table = Table::new(["coefficient", "permutation"]);
    for t in dec.terms() {
        table.push([format_rational(&t.coeff), t.perm.to_string()]);
    }
    let text = dec
        .terms()
        .iter()
        .map(|t| format!("{} {}\n", format_rational(&t.coeff), t.perm))
        .collect();
    let out = BirkhoffOut {
        n: d.order(),
        coefficient_sum: dec.coefficient_sum(),
        terms: dec,
    };
    Ok(Rendered::new(&out, text, &table, Exit::Ok))
}
