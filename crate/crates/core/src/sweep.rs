//! Exhaustive checks over all small connected graphs.

use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::certificate::{verify_certificate, Certificate, CertificateKind, Verdict};
use crate::coloring::chromatic_number;
use crate::enumerate::{generate_connected_graphs, MAX_GENERATED_ORDER};
use crate::graph::{Graph, GraphError};
use crate::graph6::{decode_graph6, encode_graph6, Graph6Error};
use crate::oracle::oracle_witness;
use crate::witness::{find_witness_report, ProbeLog};

/// Environment variable read for the worker count when none is given.
pub const JOBS_ENV: &str = "CHIDELTA_JOBS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Proof,
    Oracle,
    Both,
}

impl Method {
    fn proof(self) -> bool {
        self != Method::Oracle
    }

    fn oracle(self) -> bool {
        self != Method::Proof
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct KindCounts {
    pub clique: usize,
    pub high_odd_hole: usize,
    pub c7_complement: usize,
}

impl KindCounts {
    fn add(&mut self, kind: CertificateKind) {
        match kind {
            CertificateKind::Clique => self.clique += 1,
            CertificateKind::HighOddHole => self.high_odd_hole += 1,
            CertificateKind::C7Complement => self.c7_complement += 1,
        }
    }

    pub fn total(&self) -> usize {
        self.clique + self.high_odd_hole + self.c7_complement
    }
}

/// Tallies for one order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderReport {
    pub order: usize,
    pub graphs: usize,
    pub chi_eq_delta: usize,
    pub proof: KindCounts,
    pub oracle: KindCounts,
    pub verification_failures: usize,
    pub disagreements: usize,
    pub exceptional: usize,
    pub oracle_fallbacks: usize,
    /// Graphs in a corpus file that were skipped for being disconnected.
    pub skipped_disconnected: usize,
    pub wall_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub method: Method,
    pub orders: Vec<OrderReport>,
}

impl SweepReport {
    pub fn order(&self, n: usize) -> Option<&OrderReport> {
        self.orders.iter().find(|r| r.order == n)
    }

    pub fn total_exceptional(&self) -> usize {
        self.orders.iter().map(|r| r.exceptional).sum()
    }

    pub fn total_failures(&self) -> usize {
        self.orders
            .iter()
            .map(|r| r.verification_failures + r.disagreements)
            .sum()
    }

    /// The report with all timings zeroed, for comparing runs.
    pub fn without_timing(&self) -> SweepReport {
        let mut r = self.clone();
        for o in &mut r.orders {
            o.wall_ms = 0;
        }
        r
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for SweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:>3} {:>8} {:>9} {:>16} {:>16} {:>8} {:>11} {:>9} {:>9}",
            "n",
            "graphs",
            "chi=delta",
            "proof k/h/c7",
            "oracle k/h/c7",
            "failures",
            "exceptional",
            "fallback",
            "ms"
        )?;
        for r in &self.orders {
            let kinds =
                |k: &KindCounts| format!("{}/{}/{}", k.clique, k.high_odd_hole, k.c7_complement);
            writeln!(
                f,
                "{:>3} {:>8} {:>9} {:>16} {:>16} {:>8} {:>11} {:>9} {:>9}",
                r.order,
                r.graphs,
                r.chi_eq_delta,
                kinds(&r.proof),
                kinds(&r.oracle),
                r.verification_failures + r.disagreements,
                r.exceptional,
                r.oracle_fallbacks,
                r.wall_ms
            )?;
        }
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum SweepError {
    #[error("{graph6}: {reason}")]
    Failure { graph6: String, reason: String },
    #[error("sweep orders must lie in 1..={MAX_GENERATED_ORDER}, got {min}..={max}")]
    OrderRange { min: usize, max: usize },
    #[error("order 9 takes minutes; pass the explicit opt-in to run it")]
    OrderNineNotAllowed,
    #[error("line {line}: {source}")]
    Corpus { line: usize, source: Graph6Error },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("worker pool: {0}")]
    Pool(String),
}

#[derive(Debug, Clone)]
pub struct SweepOptions {
    pub min_n: usize,
    pub max_n: usize,
    pub method: Method,
    /// Worker count; falls back to [`JOBS_ENV`], then to the number of CPUs.
    pub jobs: Option<usize>,
    pub allow_n9: bool,
}

impl SweepOptions {
    pub fn new(max_n: usize, method: Method) -> Self {
        SweepOptions {
            min_n: 1,
            max_n,
            method,
            jobs: None,
            allow_n9: false,
        }
    }
}

/// What happened to one graph.
#[derive(Debug, Clone, Default)]
struct Outcome {
    chi_eq_delta: bool,
    proof: Option<CertificateKind>,
    oracle: Option<CertificateKind>,
    fallback: bool,
}

fn check(g: &Graph, cert: &Certificate, who: &str) -> Result<CertificateKind, String> {
    match verify_certificate(g, cert) {
        Verdict::Accept => Ok(cert.kind()),
        Verdict::Reject(r) => Err(format!("{who} certificate {cert} rejected: {r}")),
    }
}

fn evaluate(g: &Graph, method: Method) -> Result<Outcome, String> {
    let delta = g.max_degree().map_err(|e| e.to_string())?;
    if chromatic_number(g) != delta {
        return Ok(Outcome::default());
    }
    let mut out = Outcome {
        chi_eq_delta: true,
        ..Outcome::default()
    };
    if method.proof() {
        let report = find_witness_report(g, &mut ProbeLog::disabled())
            .map_err(|e| format!("proof search failed: {e}"))?;
        out.proof = Some(check(g, &report.certificate, "proof")?);
        out.fallback = report.used_oracle_fallback();
    }
    if method.oracle() {
        let cert = oracle_witness(g).ok_or("oracle found no certificate")?;
        out.oracle = Some(check(g, &cert, "oracle")?);
    }
    if let (Some(p), Some(o)) = (out.proof, out.oracle) {
        let c7 = CertificateKind::C7Complement;
        if (p == c7) != (o == c7) {
            return Err(format!(
                "methods disagree on exceptionality: proof {p}, oracle {o}"
            ));
        }
    }
    Ok(out)
}

fn with_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, SweepError> {
    let jobs = jobs.or_else(|| std::env::var(JOBS_ENV).ok()?.parse().ok());
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        builder = builder.num_threads(j);
    }
    let pool = builder
        .build()
        .map_err(|e| SweepError::Pool(e.to_string()))?;
    Ok(pool.install(f))
}

/// Runs `method` over `graphs` in parallel and merges the results in input
/// order; the first failure in that order is the one reported.
fn tally(graphs: &[Graph], method: Method, report: &mut OrderReport) -> Result<(), SweepError> {
    let results: Vec<Result<Outcome, String>> =
        graphs.par_iter().map(|g| evaluate(g, method)).collect();
    for (g, res) in graphs.iter().zip(results) {
        let out = res.map_err(|reason| SweepError::Failure {
            graph6: encode_graph6(g).unwrap_or_else(|_| "<unencodable>".into()),
            reason,
        })?;
        report.graphs += 1;
        if !out.chi_eq_delta {
            continue;
        }
        report.chi_eq_delta += 1;
        if let Some(k) = out.proof {
            report.proof.add(k);
        }
        if let Some(k) = out.oracle {
            report.oracle.add(k);
        }
        if out.proof == Some(CertificateKind::C7Complement)
            || out.oracle == Some(CertificateKind::C7Complement)
        {
            report.exceptional += 1;
        }
        if out.fallback {
            report.oracle_fallbacks += 1;
        }
    }
    Ok(())
}

/// Checks every connected graph of order `min_n..=max_n` with `chi = Delta`.
pub fn theorem_sweep(opts: &SweepOptions) -> Result<SweepReport, SweepError> {
    if opts.min_n == 0 || opts.max_n > MAX_GENERATED_ORDER || opts.min_n > opts.max_n {
        return Err(SweepError::OrderRange {
            min: opts.min_n,
            max: opts.max_n,
        });
    }
    if opts.max_n == 9 && !opts.allow_n9 {
        return Err(SweepError::OrderNineNotAllowed);
    }
    with_pool(opts.jobs, || {
        let mut orders = Vec::new();
        for n in opts.min_n..=opts.max_n {
            let start = Instant::now();
            let graphs = generate_connected_graphs(n)?;
            let mut report = OrderReport {
                order: n,
                ..OrderReport::default()
            };
            tally(&graphs, opts.method, &mut report)?;
            report.wall_ms = start.elapsed().as_millis() as u64;
            log::info!(
                "order {n}: {} graphs, {} with chi = Delta",
                report.graphs,
                report.chi_eq_delta
            );
            orders.push(report);
        }
        Ok(SweepReport {
            method: opts.method,
            orders,
        })
    })?
}

/// As [`theorem_sweep`], over graph6 lines instead of generated graphs.
/// Blank lines are ignored and disconnected graphs are counted and skipped.
pub fn corpus_sweep(
    text: &str,
    method: Method,
    jobs: Option<usize>,
) -> Result<SweepReport, SweepError> {
    let mut by_order: std::collections::BTreeMap<usize, (Vec<Graph>, usize)> = Default::default();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let g = decode_graph6(line.trim()).map_err(|source| SweepError::Corpus {
            line: i + 1,
            source,
        })?;
        let slot = by_order.entry(g.order()).or_default();
        if g.order() > 0 && g.is_connected() {
            slot.0.push(g);
        } else {
            slot.1 += 1;
        }
    }
    with_pool(jobs, || {
        let mut orders = Vec::new();
        for (n, (graphs, skipped)) in by_order {
            let start = Instant::now();
            let mut report = OrderReport {
                order: n,
                skipped_disconnected: skipped,
                ..OrderReport::default()
            };
            tally(&graphs, method, &mut report)?;
            report.wall_ms = start.elapsed().as_millis() as u64;
            orders.push(report);
        }
        Ok(SweepReport { method, orders })
    })?
}
