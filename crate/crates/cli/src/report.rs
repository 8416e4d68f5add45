use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt::Write;
use trapspaces::trapspaces::MAX_ENUMERATION_DIMENSION;
use trapspaces::{
    build_graph, classify_network, enumerate_trapspaces, graph_property, minimal_trapspaces, principal_table,
    trapping_graph, transient_and_period, BooleanNetwork, ClassReport, GraphKind, GraphProperty,
    Result,
};

/// Largest `n` accepted when only minimal trapspaces are requested.
pub const MAX_MINIMAL_ONLY_DIMENSION: usize = 16;

#[derive(Debug, Serialize)]
pub struct TrapspaceCounts {
    pub principal_distinct: Option<usize>,
    pub all: Option<usize>,
    pub minimal: usize,
}

#[derive(Debug, Serialize)]
pub struct AnalysisReport {
    pub name: Option<String>,
    pub dimension: usize,
    pub classes: Option<ClassReport>,
    pub trapspaces: TrapspaceCounts,
    pub minimal_trapspaces: Vec<String>,
    pub transient: usize,
    pub period: u128,
    /// Property table per graph kind, keyed by property name.
    pub graphs: Option<BTreeMap<&'static str, BTreeMap<&'static str, bool>>>,
}

impl AnalysisReport {
    /// Full report, or with `minimal_only` just the minimal trapspaces and
    /// the transient/period pair.
    pub fn compute(f: &BooleanNetwork, name: Option<String>, minimal_only: bool) -> Result<Self> {
        let n = f.dimension();
        let (minimal, _) = minimal_trapspaces(f);
        let (transient, period) = transient_and_period(f)?;
        let mut report = AnalysisReport {
            name,
            dimension: n,
            classes: None,
            trapspaces: TrapspaceCounts {
                principal_distinct: None,
                all: None,
                minimal: minimal.len(),
            },
            minimal_trapspaces: minimal.iter().map(|t| t.to_string()).collect(),
            transient,
            period,
            graphs: None,
        };
        if minimal_only {
            return Ok(report);
        }
        let mut principal = principal_table(f);
        principal.sort();
        principal.dedup();
        report.trapspaces.principal_distinct = Some(principal.len());
        report.trapspaces.all = Some(enumerate_trapspaces(f)?.len());
        report.classes = Some(classify_network(f)?);
        let graphs = [
            ("asynchronous", build_graph(f, GraphKind::Asynchronous)?),
            ("general_asynchronous", build_graph(f, GraphKind::General)?),
            ("trapping", trapping_graph(f)?),
        ];
        report.graphs = Some(
            graphs
                .iter()
                .map(|(kind, g)| {
                    let props = GraphProperty::ALL
                        .iter()
                        .map(|&p| (p.name(), graph_property(g, p)))
                        .collect();
                    (*kind, props)
                })
                .collect(),
        );
        Ok(report)
    }

    pub fn limit(minimal_only: bool) -> usize {
        if minimal_only {
            MAX_MINIMAL_ONLY_DIMENSION
        } else {
            MAX_ENUMERATION_DIMENSION
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut line = |k: &str, v: String| writeln!(out, "{k}: {v}").expect("writing to a String");
        if let Some(name) = &self.name {
            line("name", name.clone());
        }
        line("dimension", self.dimension.to_string());
        if let Some(all) = self.trapspaces.all {
            line("trapspaces", all.to_string());
        }
        if let Some(p) = self.trapspaces.principal_distinct {
            line("principal", p.to_string());
        }
        line("minimal", self.trapspaces.minimal.to_string());
        line("minimal trapspaces", self.minimal_trapspaces.join(" "));
        line("transient", self.transient.to_string());
        line("period", self.period.to_string());
        if let Some(classes) = &self.classes {
            for (k, v) in classes.entries() {
                line(k, v.to_string());
            }
        }
        if let Some(graphs) = &self.graphs {
            for (kind, props) in graphs {
                let row: Vec<String> = props.iter().map(|(p, v)| format!("{p}={v}")).collect();
                line(&format!("graph {kind}"), row.join(" "));
            }
        }
        out
    }
}
