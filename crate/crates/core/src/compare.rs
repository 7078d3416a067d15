//! Greedy-versus-exact comparison rows and their CSV form.

use std::fmt::Write as _;
use std::time::Instant;

use crate::error::Result;
use crate::exact::{sparing_exact, ExactConfig};
use crate::graph::Graph;
use crate::greedy::run_greedy;

pub const CSV_HEADER: &str =
    "id,n,m,phi_greedy,phi_literal,phi_exact,gap,greedy_optimal,t_greedy_ms,t_exact_ms";

#[derive(Debug, Clone, PartialEq)]
pub struct CompareRow {
    pub id: usize,
    pub n: usize,
    pub m: usize,
    pub phi_greedy: usize,
    pub phi_literal: usize,
    pub phi_exact: usize,
    pub t_greedy_ms: f64,
    pub t_exact_ms: f64,
}

impl CompareRow {
    pub fn gap(&self) -> usize {
        self.phi_greedy - self.phi_exact
    }

    pub fn greedy_optimal(&self) -> bool {
        self.gap() == 0
    }

    /// One CSV line without the trailing newline. Timings are written as 0
    /// when `timing` is false so that repeated runs are byte-identical.
    pub fn to_csv(&self, timing: bool) -> String {
        let (tg, te) = if timing {
            (self.t_greedy_ms, self.t_exact_ms)
        } else {
            (0.0, 0.0)
        };
        format!(
            "{},{},{},{},{},{},{},{},{:.3},{:.3}",
            self.id,
            self.n,
            self.m,
            self.phi_greedy,
            self.phi_literal,
            self.phi_exact,
            self.gap(),
            self.greedy_optimal(),
            tg,
            te
        )
    }
}

/// Runs greedy and the configured exact method on one instance.
pub fn compare_instance(id: usize, g: &Graph, cfg: &ExactConfig) -> Result<CompareRow> {
    let start = Instant::now();
    let greedy = run_greedy(g);
    let t_greedy_ms = start.elapsed().as_secs_f64() * 1e3;

    let start = Instant::now();
    let exact = sparing_exact(g, cfg)?;
    let t_exact_ms = start.elapsed().as_secs_f64() * 1e3;

    assert!(
        greedy.phi >= exact.phi,
        "greedy value {} below optimum {} on instance {id}",
        greedy.phi,
        exact.phi
    );
    Ok(CompareRow {
        id,
        n: g.n(),
        m: g.m(),
        phi_greedy: greedy.phi,
        phi_literal: greedy.phi_literal.unwrap_or(greedy.phi),
        phi_exact: exact.phi,
        t_greedy_ms,
        t_exact_ms,
    })
}

pub fn to_csv(rows: &[CompareRow], timing: bool) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in rows {
        let _ = writeln!(out, "{}", row.to_csv(timing));
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
pub struct Summary {
    pub rows: usize,
    pub mean_gap: f64,
    pub max_gap: usize,
    pub greedy_optimal_fraction: f64,
    /// `(gap, count)` in increasing gap order.
    pub gap_histogram: Vec<(usize, usize)>,
}

impl Summary {
    pub fn from_rows(rows: &[CompareRow]) -> Self {
        let mut hist = std::collections::BTreeMap::new();
        for r in rows {
            *hist.entry(r.gap()).or_insert(0) += 1;
        }
        let count = rows.len().max(1) as f64;
        Summary {
            rows: rows.len(),
            mean_gap: rows.iter().map(|r| r.gap() as f64).sum::<f64>() / count,
            max_gap: rows.iter().map(CompareRow::gap).max().unwrap_or(0),
            greedy_optimal_fraction: rows.iter().filter(|r| r.greedy_optimal()).count() as f64
                / count,
            gap_histogram: hist.into_iter().collect(),
        }
    }
}

impl std::fmt::Display for Summary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let hist: Vec<String> = self
            .gap_histogram
            .iter()
            .map(|(gap, count)| format!("{gap}:{count}"))
            .collect();
        write!(
            f,
            "summary rows={} mean_gap={:.4} max_gap={} greedy_optimal={:.4} gap_hist={}",
            self.rows,
            self.mean_gap,
            self.max_gap,
            self.greedy_optimal_fraction,
            hist.join(",")
        )
    }
}
