use std::collections::BTreeSet;

use sparing::{EdgeSet, IterationRecord, SparingResult, VertexId};

pub fn vertices(set: &BTreeSet<VertexId>) -> String {
    let items: Vec<String> = set.iter().map(ToString::to_string).collect();
    format!("{{{}}}", items.join(","))
}

pub fn edges(set: &EdgeSet) -> String {
    let items: Vec<String> = set.iter().map(ToString::to_string).collect();
    format!("{{{}}}", items.join(","))
}

pub fn discrepancy(r: &SparingResult) -> String {
    if r.discrepancy.is_empty() {
        "none".into()
    } else {
        edges(&r.discrepancy)
    }
}

pub fn iteration(rec: &IterationRecord) -> String {
    format!(
        "pick={} deg={} new_singletons={} new_mono_edges={}",
        rec.picked,
        rec.degree_at_pick,
        vertices(&rec.new_singletons),
        edges(&rec.new_mono_edges)
    )
}

/// Full greedy trace: one line per round, then the summary lines.
pub fn trace(r: &SparingResult) -> String {
    let mut out = String::new();
    for rec in &r.trace {
        out.push_str(&iteration(rec));
        out.push('\n');
    }
    out.push_str(&format!("I={}\n", vertices(&r.independent_set)));
    out.push_str(&format!("phi={}\n", r.phi));
    if let Some(lit) = r.phi_literal {
        out.push_str(&format!("phi_literal={lit}\n"));
    }
    out.push_str(&format!("discrepancy={}\n", discrepancy(r)));
    out
}

pub fn result_line(r: &SparingResult, elapsed_ms: f64) -> String {
    let mut line = format!(
        "phi={} I={} method={} elapsed={:.3}",
        r.phi,
        vertices(&r.independent_set),
        r.method,
        elapsed_ms
    );
    if let Some(lit) = r.phi_literal {
        line.push_str(&format!(
            " phi_literal={lit} discrepancy={}",
            discrepancy(r)
        ));
    }
    if !r.optimal && r.method != sparing::Method::Greedy {
        line.push_str(" status=upper_bound");
    }
    line
}
