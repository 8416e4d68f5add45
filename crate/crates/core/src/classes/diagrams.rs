//! The four implication diagrams between classes of networks, with their
//! counterexample fixtures, and a verifier that checks both directions:
//! every arrow holds on a population, and every fixture breaks its non-arrow.

use super::{classify_network, ClassReport};
use crate::dynamics::{build_graph, graph_property, GraphKind, GraphProperty, HypercubeGraph};
use crate::error::Result;
use crate::fixtures;
use crate::network::BooleanNetwork;
use crate::trapspaces::trapping_graph;
use rayon::prelude::*;
use std::fmt;
use std::sync::OnceLock;

/// Which graph of a network a graph property refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraphOf {
    Asynchronous,
    GeneralAsynchronous,
    Trapping,
}

impl GraphOf {
    fn short(self) -> &'static str {
        match self {
            GraphOf::Asynchronous => "A",
            GraphOf::GeneralAsynchronous => "GA",
            GraphOf::Trapping => "TG",
        }
    }
}

/// A diagram node: a class of networks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    Trapping,
    Commutative,
    Marseille,
    Lille,
    Bijective,
    LocallyBijective,
    GloballyBijective,
    Involutive,
    LocallyInvolutive,
    GloballyInvolutive,
    Idempotent,
    LocallyIdempotent,
    GloballyIdempotent,
    Dpt,
    Fixable,
    TrapspaceFp,
    IntervalFp,
    IntervalUfp,
    Graph(GraphOf, GraphProperty),
    /// Conjunction of two classes.
    Both(&'static Property, &'static Property),
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Property::Trapping => "trapping",
            Property::Commutative => "commutative",
            Property::Marseille => "Marseille",
            Property::Lille => "Lille",
            Property::Bijective => "bijective",
            Property::LocallyBijective => "locally bijective",
            Property::GloballyBijective => "globally bijective",
            Property::Involutive => "involutive",
            Property::LocallyInvolutive => "locally involutive",
            Property::GloballyInvolutive => "globally involutive",
            Property::Idempotent => "idempotent",
            Property::LocallyIdempotent => "locally idempotent",
            Property::GloballyIdempotent => "globally idempotent",
            Property::Dpt => "DPT",
            Property::Fixable => "fixable",
            Property::TrapspaceFp => "Trapspace-FP",
            Property::IntervalFp => "Interval-FP",
            Property::IntervalUfp => "Interval-UFP",
            Property::Graph(g, p) => return write!(f, "{} {}", p.name(), g.short()),
            Property::Both(a, b) => return write!(f, "{a} and {b}"),
        };
        f.write_str(s)
    }
}

/// Which networks an arrow is claimed for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Guard {
    All,
    Trapping,
    Commutative,
}

impl fmt::Display for Guard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Guard::All => "all",
            Guard::Trapping => "trapping",
            Guard::Commutative => "commutative",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub source: Property,
    pub target: Property,
    pub guard: Guard,
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} => {} [{}]", self.source, self.target, self.guard)
    }
}

/// A fixture claimed to satisfy `source` and `guard` while violating `target`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub label: &'static str,
    pub fixture: &'static str,
    pub source: Property,
    pub target: Property,
    pub guard: Guard,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DiagramId {
    Symmetric,
    Marseille,
    Triangular,
    Lille,
}

impl DiagramId {
    pub const ALL: [DiagramId; 4] = [
        DiagramId::Symmetric,
        DiagramId::Marseille,
        DiagramId::Triangular,
        DiagramId::Lille,
    ];

    pub fn name(self) -> &'static str {
        match self {
            DiagramId::Symmetric => "symmetric",
            DiagramId::Marseille => "marseille",
            DiagramId::Triangular => "triangular",
            DiagramId::Lille => "lille",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramSpec {
    pub id: DiagramId,
    pub nodes: Vec<Property>,
    pub edges: Vec<Edge>,
    pub counterexamples: Vec<Counterexample>,
}

use GraphOf::{Asynchronous as A, GeneralAsynchronous as GA, Trapping as TG};
use GraphProperty::{Oriented, SinkTerminal, Symmetric, Triangular};

const fn g(on: GraphOf, p: GraphProperty) -> Property {
    Property::Graph(on, p)
}

static UFP_IDEMPOTENT: Property = Property::Both(&Property::IntervalUfp, &Property::Idempotent);

fn arrow(source: Property, target: Property, guard: Guard) -> Edge {
    Edge { source, target, guard }
}

/// `source -> target` for all networks and `target -> source` under `back`.
fn pair(edges: &mut Vec<Edge>, source: Property, target: Property, back: Option<Guard>) {
    edges.push(arrow(source, target, Guard::All));
    if let Some(guard) = back {
        edges.push(arrow(target, source, guard));
    }
}

fn cx(
    label: &'static str,
    fixture: &'static str,
    source: Property,
    target: Property,
    guard: Guard,
) -> Counterexample {
    Counterexample { label, fixture, source, target, guard }
}

impl DiagramSpec {
    pub fn new(id: DiagramId) -> Self {
        use Guard::{All, Commutative as C, Trapping as T};
        use Property::*;
        let mut edges = Vec::new();
        let (nodes, counterexamples) = match id {
            DiagramId::Symmetric => {
                let (sga, st, sa) = (g(GA, Symmetric), g(TG, Symmetric), g(A, Symmetric));
                pair(&mut edges, sga, Marseille, Some(All));
                pair(&mut edges, sga, GloballyInvolutive, Some(All));
                pair(&mut edges, sga, st, Some(T));
                pair(&mut edges, sga, sa, Some(T));
                pair(&mut edges, sa, LocallyBijective, Some(All));
                pair(&mut edges, sa, LocallyInvolutive, Some(All));
                (
                    vec![GloballyInvolutive, sga, Marseille, st, sa, LocallyInvolutive, LocallyBijective],
                    vec![
                        cx("(a)", "symmetric/a", st, sa, All),
                        cx("(b)", "symmetric/b", sa, st, All),
                    ],
                )
            }
            DiagramId::Marseille => {
                pair(&mut edges, Marseille, GloballyBijective, Some(T));
                pair(&mut edges, GloballyBijective, LocallyBijective, Some(T));
                pair(&mut edges, GloballyBijective, Bijective, Some(C));
                pair(&mut edges, Marseille, Involutive, Some(C));
                pair(&mut edges, Involutive, Bijective, Some(T));
                (
                    vec![Marseille, Involutive, GloballyBijective, LocallyBijective, Bijective],
                    vec![
                        cx("(c)", "marseille/c", Involutive, LocallyBijective, T),
                        cx("(d)", "marseille/d", Bijective, Involutive, All),
                    ],
                )
            }
            DiagramId::Triangular => {
                let (tt, ot) = (g(TG, Triangular), g(TG, Oriented));
                let (tga, oga) = (g(GA, Triangular), g(GA, Oriented));
                let (ta, oa) = (g(A, Triangular), g(A, Oriented));
                let (sta, stga, stt) = (g(A, SinkTerminal), g(GA, SinkTerminal), g(TG, SinkTerminal));
                pair(&mut edges, tt, ot, Some(All));
                pair(&mut edges, tga, oga, Some(T));
                pair(&mut edges, ta, oa, Some(T));
                pair(&mut edges, tt, tga, Some(T));
                pair(&mut edges, tga, ta, Some(C));
                pair(&mut edges, oga, oa, Some(C));
                pair(&mut edges, ta, sta, Some(C));
                pair(&mut edges, sta, stga, Some(T));
                pair(&mut edges, stga, stt, Some(T));
                pair(&mut edges, tt, Dpt, Some(All));
                pair(&mut edges, oa, LocallyIdempotent, Some(All));
                pair(&mut edges, sta, Fixable, Some(All));
                pair(&mut edges, stt, TrapspaceFp, Some(All));
                (
                    vec![tt, ot, Dpt, tga, oga, ta, oa, LocallyIdempotent, sta, Fixable, stga, stt, TrapspaceFp],
                    vec![
                        cx("(e)", "triangular/e", tga, tt, All),
                        cx("(f)", "triangular/f", ta, oga, T),
                        cx("(g)", "triangular/g", oga, stt, All),
                        cx("(h)", "triangular/h", stt, stga, All),
                        cx("(i)", "triangular/i", stga, sta, All),
                        cx("(j)", "triangular/j", sta, oa, T),
                    ],
                )
            }
            DiagramId::Lille => {
                let ufp = UFP_IDEMPOTENT;
                let (tga, ta, oga) = (g(GA, Triangular), g(A, Triangular), g(GA, Oriented));
                pair(&mut edges, Lille, ufp, Some(T));
                pair(&mut edges, ufp, IntervalUfp, Some(C));
                pair(&mut edges, IntervalUfp, IntervalFp, Some(C));
                pair(&mut edges, Lille, GloballyIdempotent, Some(C));
                pair(&mut edges, Dpt, tga, Some(T));
                pair(&mut edges, GloballyIdempotent, Idempotent, Some(C));
                pair(&mut edges, GloballyIdempotent, Dpt, Some(C));
                pair(&mut edges, tga, ta, Some(C));
                pair(&mut edges, tga, oga, Some(T));
                pair(&mut edges, ta, LocallyIdempotent, Some(T));
                pair(&mut edges, oga, LocallyIdempotent, Some(C));
                pair(&mut edges, ta, Fixable, Some(C));
                pair(&mut edges, Fixable, TrapspaceFp, Some(T));
                pair(&mut edges, ufp, Idempotent, Some(C));
                pair(&mut edges, Idempotent, IntervalFp, Some(C));
                pair(&mut edges, IntervalFp, TrapspaceFp, Some(T));
                (
                    vec![
                        Lille, ufp, GloballyIdempotent, IntervalUfp, Idempotent, Dpt, tga, ta, oga,
                        LocallyIdempotent, Fixable, IntervalFp, TrapspaceFp,
                    ],
                    vec![
                        cx("(k)", "lille/k", ufp, Fixable, All),
                        cx("(l)", "lille/l", ufp, LocallyIdempotent, All),
                        cx("(m)", "lille/m", IntervalUfp, Idempotent, T),
                        cx("(n)", "lille/n", GloballyIdempotent, IntervalUfp, All),
                        cx("(o)", "lille/o", Dpt, Idempotent, T),
                        cx("(p)", "lille/p", Idempotent, LocallyIdempotent, T),
                        cx("(q)", "lille/q", IntervalUfp, LocallyIdempotent, T),
                    ],
                )
            }
        };
        Self { id, nodes, edges, counterexamples }
    }
}

/// Class flags of one network plus its three graphs, built on demand.
pub struct NetworkFacts {
    pub network: BooleanNetwork,
    pub report: ClassReport,
    graphs: [OnceLock<HypercubeGraph>; 3],
}

impl NetworkFacts {
    pub fn new(network: BooleanNetwork) -> Result<Self> {
        let report = classify_network(&network)?;
        Ok(Self {
            network,
            report,
            graphs: Default::default(),
        })
    }

    fn graph(&self, on: GraphOf) -> &HypercubeGraph {
        let f = &self.network;
        self.graphs[on as usize].get_or_init(|| {
            match on {
                GraphOf::Asynchronous => build_graph(f, GraphKind::Asynchronous),
                GraphOf::GeneralAsynchronous => build_graph(f, GraphKind::General),
                GraphOf::Trapping => trapping_graph(f),
            }
            .expect("classified networks are small enough for graphs")
        })
    }

    pub fn holds(&self, p: Property) -> bool {
        let r = &self.report;
        match p {
            Property::Trapping => r.trapping,
            Property::Commutative => r.commutative,
            Property::Marseille => r.marseille,
            Property::Lille => r.lille,
            Property::Bijective => r.bijective,
            Property::LocallyBijective => r.locally_bijective,
            Property::GloballyBijective => r.globally_bijective,
            Property::Involutive => r.involutive,
            Property::LocallyInvolutive => r.locally_involutive,
            Property::GloballyInvolutive => r.globally_involutive,
            Property::Idempotent => r.idempotent,
            Property::LocallyIdempotent => r.locally_idempotent,
            Property::GloballyIdempotent => r.globally_idempotent,
            Property::Dpt => r.dpt,
            Property::Fixable => r.fixable,
            Property::TrapspaceFp => r.trapspace_fp,
            Property::IntervalFp => r.interval_fp,
            Property::IntervalUfp => r.interval_ufp,
            Property::Graph(on, prop) => graph_property(self.graph(on), prop),
            Property::Both(a, b) => self.holds(*a) && self.holds(*b),
        }
    }

    pub fn guard(&self, guard: Guard) -> bool {
        match guard {
            Guard::All => true,
            Guard::Trapping => self.report.trapping,
            Guard::Commutative => self.report.commutative,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ViolationKind {
    /// An arrow failed on a population member.
    Edge(Edge),
    /// A fixture does not break the implication it was drawn for.
    Counterexample { label: &'static str, reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Violation {
    pub diagram: DiagramId,
    pub network: Vec<u32>,
    pub dimension: usize,
    pub kind: ViolationKind,
}

impl Violation {
    pub fn network(&self) -> BooleanNetwork {
        BooleanNetwork::from_table(self.dimension, self.network.clone()).expect("recorded table")
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ViolationKind::Edge(e) => write!(f, "{} diagram: arrow {e} fails", self.diagram.name()),
            ViolationKind::Counterexample { label, reason } => {
                write!(f, "{} diagram: counterexample {label}: {reason}", self.diagram.name())
            }
        }
    }
}

/// Arrows of `d` that fail on one network.
pub fn edge_violations(d: &DiagramSpec, facts: &NetworkFacts) -> Vec<Violation> {
    d.edges
        .iter()
        .filter(|e| facts.guard(e.guard) && facts.holds(e.source) && !facts.holds(e.target))
        .map(|e| Violation {
            diagram: d.id,
            network: facts.network.table().to_vec(),
            dimension: facts.network.dimension(),
            kind: ViolationKind::Edge(*e),
        })
        .collect()
}

/// Counterexample fixtures of `d` that do not break their implication.
pub fn counterexample_violations(d: &DiagramSpec) -> Result<Vec<Violation>> {
    let mut out = Vec::new();
    for c in &d.counterexamples {
        let facts = NetworkFacts::new(fixtures::named(c.fixture)?)?;
        let mut problems = Vec::new();
        if !facts.guard(c.guard) {
            problems.push(format!("guard `{}` does not hold", c.guard));
        }
        if !facts.holds(c.source) {
            problems.push(format!("source `{}` does not hold", c.source));
        }
        if facts.holds(c.target) {
            problems.push(format!("target `{}` holds", c.target));
        }
        if !problems.is_empty() {
            out.push(Violation {
                diagram: d.id,
                network: facts.network.table().to_vec(),
                dimension: facts.network.dimension(),
                kind: ViolationKind::Counterexample {
                    label: c.label,
                    reason: problems.join("; "),
                },
            });
        }
    }
    Ok(out)
}

/// Checks every arrow of `d` on `population` and every counterexample
/// fixture of `d`. Violations come back sorted by network, then arrow.
pub fn verify_diagram(d: &DiagramSpec, population: &[BooleanNetwork]) -> Result<Vec<Violation>> {
    let per_network: Vec<Vec<Violation>> = population
        .par_iter()
        .map(|f| Ok(edge_violations(d, &NetworkFacts::new(f.clone())?)))
        .collect::<Result<_>>()?;
    let mut out: Vec<Violation> = per_network.into_iter().flatten().collect();
    out.extend(counterexample_violations(d)?);
    out.sort();
    Ok(out)
}
