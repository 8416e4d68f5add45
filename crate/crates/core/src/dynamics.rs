//! Asynchronous and general asynchronous graphs on `B^n`, graph predicates,
//! strongly connected components, and transient/period of the synchronous
//! iteration.

use crate::cube::{check_dimension, check_same, Configuration, Subcube};
use crate::error::{Error, Result};
use crate::network::BooleanNetwork;
use std::fmt;

/// Largest dimension for which a graph is materialised (`4^n` bits).
pub const MAX_GRAPH_DIMENSION: usize = 14;

/// A digraph on the vertices of `B^n`, one out-neighbourhood bitset per vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HypercubeGraph {
    n: u8,
    words: usize,
    rows: Vec<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphKind {
    /// `A(f)`: single-coordinate updates.
    Asynchronous,
    /// `GA(f)`: out-neighbourhood `[x, f(x)]`.
    General,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraphProperty {
    Reflexive,
    Symmetric,
    Transitive,
    Oriented,
    Triangular,
    SinkTerminal,
}

impl GraphProperty {
    pub const ALL: [GraphProperty; 6] = [
        GraphProperty::Reflexive,
        GraphProperty::Symmetric,
        GraphProperty::Transitive,
        GraphProperty::Oriented,
        GraphProperty::Triangular,
        GraphProperty::SinkTerminal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GraphProperty::Reflexive => "reflexive",
            GraphProperty::Symmetric => "symmetric",
            GraphProperty::Transitive => "transitive",
            GraphProperty::Oriented => "oriented",
            GraphProperty::Triangular => "triangular",
            GraphProperty::SinkTerminal => "sink-terminal",
        }
    }
}

impl HypercubeGraph {
    /// The graph on `B^n` with no arcs at all.
    pub fn empty(n: usize) -> Result<Self> {
        check_dimension(n)?;
        if n > MAX_GRAPH_DIMENSION {
            return Err(Error::DimensionTooLarge {
                operation: "graph",
                limit: MAX_GRAPH_DIMENSION,
                n,
            });
        }
        let words = (1usize << n).div_ceil(64);
        Ok(Self {
            n: n as u8,
            words,
            rows: vec![0; words << n],
        })
    }

    /// Builds a graph from explicit out-neighbourhoods, one per vertex in increasing order.
    pub fn from_out_sets(n: usize, out: &[Vec<Configuration>]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        if out.len() != 1 << n {
            return Err(Error::TableLength {
                expected: 1 << n,
                found: out.len(),
            });
        }
        for (u, row) in out.iter().enumerate() {
            for v in row {
                check_same(n, v.dimension())?;
                g.insert(u as u32, v.bits());
            }
        }
        Ok(g)
    }

    pub fn dimension(&self) -> usize {
        self.n as usize
    }

    pub fn vertex_count(&self) -> usize {
        1 << self.n
    }

    #[inline]
    fn row(&self, u: u32) -> &[u64] {
        let start = u as usize * self.words;
        &self.rows[start..start + self.words]
    }

    #[inline]
    fn row_mut(&mut self, u: u32) -> &mut [u64] {
        let start = u as usize * self.words;
        &mut self.rows[start..start + self.words]
    }

    #[inline]
    pub(crate) fn insert(&mut self, u: u32, v: u32) {
        self.row_mut(u)[v as usize / 64] |= 1 << (v % 64);
    }

    #[inline]
    pub(crate) fn has(&self, u: u32, v: u32) -> bool {
        self.row(u)[v as usize / 64] >> (v % 64) & 1 == 1
    }

    pub(crate) fn insert_subcube(&mut self, u: u32, cube: &Subcube) {
        for v in cube.member_bits() {
            self.insert(u, v);
        }
    }

    pub(crate) fn successors(&self, u: u32) -> impl Iterator<Item = u32> + '_ {
        self.row(u).iter().enumerate().flat_map(|(w, &word)| {
            let mut word = word;
            std::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let b = word.trailing_zeros();
                word &= word - 1;
                Some(w as u32 * 64 + b)
            })
        })
    }

    pub fn has_arc(&self, u: Configuration, v: Configuration) -> Result<bool> {
        check_same(self.dimension(), u.dimension())?;
        check_same(self.dimension(), v.dimension())?;
        Ok(self.has(u.bits(), v.bits()))
    }

    /// `N^out(x)` in increasing order.
    pub fn out_neighbours(&self, x: Configuration) -> Result<Vec<Configuration>> {
        check_same(self.dimension(), x.dimension())?;
        let n = self.dimension();
        Ok(self
            .successors(x.bits())
            .map(|v| Configuration::from_raw(n, v))
            .collect())
    }

    /// All arcs `(u, v)` in lexicographic order, loops included.
    pub fn arcs(&self) -> Vec<(Configuration, Configuration)> {
        let n = self.dimension();
        (0..self.vertex_count() as u32)
            .flat_map(|u| {
                self.successors(u).map(move |v| {
                    (Configuration::from_raw(n, u), Configuration::from_raw(n, v))
                })
            })
            .collect()
    }

    pub fn arc_count(&self) -> usize {
        self.rows.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Arc-set inclusion.
    pub fn is_subgraph(&self, other: &Self) -> Result<bool> {
        check_same(self.dimension(), other.dimension())?;
        Ok(self
            .rows
            .iter()
            .zip(&other.rows)
            .all(|(a, b)| a & !b == 0))
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        check_same(self.dimension(), other.dimension())?;
        let mut out = self.clone();
        for (a, b) in out.rows.iter_mut().zip(&other.rows) {
            *a |= b;
        }
        Ok(out)
    }

    /// The out-neighbourhood of `u` as a subcube, if it is one.
    pub(crate) fn out_subcube(&self, u: u32) -> Option<Subcube> {
        let mut it = self.successors(u);
        let first = it.next()?;
        let mut free = 0u32;
        let mut count = 1usize;
        for v in it {
            free |= v ^ first;
            count += 1;
        }
        let cube = Subcube::from_raw(self.dimension(), free, first);
        (cube.size() == count).then_some(cube)
    }
}

impl fmt::Debug for HypercubeGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.dimension();
        let mut map = f.debug_map();
        for u in 0..self.vertex_count() as u32 {
            let outs: Vec<String> = self
                .successors(u)
                .map(|v| Configuration::from_raw(n, v).to_string())
                .collect();
            map.entry(&Configuration::from_raw(n, u).to_string(), &outs);
        }
        map.finish()
    }
}

/// `A(f)` or `GA(f)`; both are reflexive.
pub fn build_graph(f: &BooleanNetwork, kind: GraphKind) -> Result<HypercubeGraph> {
    let n = f.dimension();
    let mut g = HypercubeGraph::empty(n)?;
    for x in 0..f.size() as u32 {
        g.insert(x, x);
        let d = f.delta_at(x);
        match kind {
            GraphKind::Asynchronous => {
                let mut rest = d;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    g.insert(x, x ^ bit);
                    rest &= rest - 1;
                }
            }
            GraphKind::General => g.insert_subcube(x, &f.interval_raw(x)),
        }
    }
    Ok(g)
}

/// Inverts `GA`: `f(x)` is the opposite of `x` in its out-neighbourhood.
pub fn network_from_graph(g: &HypercubeGraph) -> Result<BooleanNetwork> {
    let n = g.dimension();
    let mut image = Vec::with_capacity(g.vertex_count());
    for x in 0..g.vertex_count() as u32 {
        if !g.has(x, x) {
            return Err(Error::NotReflexive(Configuration::from_raw(n, x)));
        }
        let cube = g
            .out_subcube(x)
            .ok_or_else(|| Error::NotSubcube(Configuration::from_raw(n, x)))?;
        image.push(x ^ cube.free_bits());
    }
    BooleanNetwork::from_table(n, image)
}

pub fn graph_property(g: &HypercubeGraph, p: GraphProperty) -> bool {
    let vs = g.vertex_count() as u32;
    match p {
        GraphProperty::Reflexive => (0..vs).all(|x| g.has(x, x)),
        GraphProperty::Symmetric => {
            (0..vs).all(|u| g.successors(u).all(|v| g.has(v, u)))
        }
        GraphProperty::Transitive => (0..vs).all(|u| {
            let ru = g.row(u);
            g.successors(u)
                .all(|v| g.row(v).iter().zip(ru).all(|(a, b)| a & !b == 0))
        }),
        GraphProperty::Oriented => {
            (0..vs).all(|u| g.successors(u).all(|v| u == v || !g.has(v, u)))
        }
        GraphProperty::Triangular => {
            let c = strongly_connected_components(g);
            c.members.iter().all(|m| m.len() == 1)
        }
        GraphProperty::SinkTerminal => {
            let c = strongly_connected_components(g);
            c.members
                .iter()
                .zip(&c.terminal)
                .all(|(m, &t)| !t || m.len() == 1)
        }
    }
}

/// SCC partition of a graph together with terminality in the condensation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Components {
    n: u8,
    /// Component index of every vertex.
    pub component_of: Vec<u32>,
    /// Members of each component in increasing order.
    pub members: Vec<Vec<u32>>,
    /// Whether no arc leaves the component.
    pub terminal: Vec<bool>,
}

impl Components {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Components as configuration sets, sorted.
    pub fn sets(&self) -> Vec<Vec<Configuration>> {
        let n = self.n as usize;
        let mut out: Vec<Vec<Configuration>> = self
            .members
            .iter()
            .map(|m| m.iter().map(|&v| Configuration::from_raw(n, v)).collect())
            .collect();
        out.sort();
        out
    }

    pub fn terminal_sets(&self) -> Vec<Vec<Configuration>> {
        let n = self.n as usize;
        let mut out: Vec<Vec<Configuration>> = self
            .members
            .iter()
            .zip(&self.terminal)
            .filter(|(_, &t)| t)
            .map(|(m, _)| m.iter().map(|&v| Configuration::from_raw(n, v)).collect())
            .collect();
        out.sort();
        out
    }
}

/// Iterative Tarjan. Components come out in reverse topological order.
pub fn strongly_connected_components(g: &HypercubeGraph) -> Components {
    const UNSEEN: u32 = u32::MAX;
    let vs = g.vertex_count();
    let mut index = vec![UNSEEN; vs];
    let mut low = vec![0u32; vs];
    let mut on_stack = vec![false; vs];
    let mut stack: Vec<u32> = Vec::new();
    let mut component_of = vec![UNSEEN; vs];
    let mut members: Vec<Vec<u32>> = Vec::new();
    let mut next = 0u32;

    for root in 0..vs as u32 {
        if index[root as usize] != UNSEEN {
            continue;
        }
        let mut call: Vec<(u32, Vec<u32>)> = Vec::new();
        index[root as usize] = next;
        low[root as usize] = next;
        next += 1;
        stack.push(root);
        on_stack[root as usize] = true;
        call.push((root, g.successors(root).collect::<Vec<_>>()));
        while let Some((u, succ)) = call.last_mut() {
            let u = *u;
            if let Some(v) = succ.pop() {
                let vi = v as usize;
                if index[vi] == UNSEEN {
                    index[vi] = next;
                    low[vi] = next;
                    next += 1;
                    stack.push(v);
                    on_stack[vi] = true;
                    call.push((v, g.successors(v).collect()));
                } else if on_stack[vi] {
                    low[u as usize] = low[u as usize].min(index[vi]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent as usize] = low[parent as usize].min(low[u as usize]);
            }
            if low[u as usize] == index[u as usize] {
                let id = members.len() as u32;
                let mut comp = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack");
                    on_stack[w as usize] = false;
                    component_of[w as usize] = id;
                    comp.push(w);
                    if w == u {
                        break;
                    }
                }
                comp.sort_unstable();
                members.push(comp);
            }
        }
    }

    let terminal = members
        .iter()
        .enumerate()
        .map(|(id, comp)| {
            comp.iter().all(|&u| {
                g.successors(u)
                    .all(|v| component_of[v as usize] == id as u32)
            })
        })
        .collect();
    Components {
        n: g.dimension() as u8,
        component_of,
        members,
        terminal,
    }
}

/// Smallest `t` and `p >= 1` with `f^(t+p) = f^t`.
///
/// `t` is the longest path into a cycle of the functional graph and `p` the
/// lcm of all cycle lengths.
pub fn transient_and_period(f: &BooleanNetwork) -> Result<(usize, u128)> {
    let size = f.size();
    // 0 = unvisited, 1 = on the current path, 2 = done
    let mut state = vec![0u8; size];
    let mut depth = vec![0usize; size];
    let mut period: u128 = 1;
    let mut transient = 0usize;
    let mut path: Vec<u32> = Vec::new();

    for start in 0..size as u32 {
        if state[start as usize] != 0 {
            continue;
        }
        path.clear();
        let mut x = start;
        while state[x as usize] == 0 {
            state[x as usize] = 1;
            path.push(x);
            x = f.at(x);
        }
        let mut tail_end = path.len();
        let mut base_depth = 0;
        if state[x as usize] == 1 {
            // closed a new cycle at x
            let pos = path.iter().position(|&y| y == x).expect("cycle entry");
            let len = (path.len() - pos) as u128;
            period = lcm(period, len)?;
            for &y in &path[pos..] {
                depth[y as usize] = 0;
                state[y as usize] = 2;
            }
            tail_end = pos;
        } else {
            base_depth = depth[x as usize];
        }
        for (k, &y) in path[..tail_end].iter().rev().enumerate() {
            let d = base_depth + k + 1;
            depth[y as usize] = d;
            state[y as usize] = 2;
            transient = transient.max(d);
        }
    }
    Ok((transient, period))
}

fn lcm(a: u128, b: u128) -> Result<u128> {
    fn gcd(mut a: u128, mut b: u128) -> u128 {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    }
    (a / gcd(a, b)).checked_mul(b).ok_or(Error::PeriodOverflow)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{f_ex3, named};

    fn c(s: &str) -> Configuration {
        s.parse().unwrap()
    }

    fn cs(list: &[&str]) -> Vec<Configuration> {
        list.iter().map(|s| c(s)).collect()
    }

    #[test]
    fn general_graph_examples() {
        let ga = build_graph(&f_ex3(), GraphKind::General).unwrap();
        assert_eq!(
            ga.out_neighbours(c("000")).unwrap(),
            cs(&["000", "100", "010", "110"])
        );
        let a = build_graph(&BooleanNetwork::identity(3).unwrap(), GraphKind::Asynchronous).unwrap();
        assert_eq!(a.arc_count(), 8);
        let neg = build_graph(&BooleanNetwork::negation(3).unwrap(), GraphKind::General).unwrap();
        assert_eq!(neg.arc_count(), 64);
    }

    #[test]
    fn ga_extra_arcs() {
        let f = f_ex3();
        let a = build_graph(&f, GraphKind::Asynchronous).unwrap();
        let ga = build_graph(&f, GraphKind::General).unwrap();
        assert!(a.is_subgraph(&ga).unwrap());
        let extra: Vec<_> = ga
            .arcs()
            .into_iter()
            .filter(|&(u, v)| !a.has_arc(u, v).unwrap())
            .map(|(u, v)| format!("{u}->{v}"))
            .collect();
        assert_eq!(extra, vec!["000->110", "001->100", "011->110"]);
    }

    #[test]
    fn network_from_graph_errors() {
        let mut out = vec![Vec::new(); 4];
        out[0] = cs(&["00", "11"]);
        for (x, row) in out.iter_mut().enumerate().skip(1) {
            row.push(Configuration::new(2, x as u32).unwrap());
        }
        let g = HypercubeGraph::from_out_sets(2, &out).unwrap();
        assert_eq!(network_from_graph(&g), Err(Error::NotSubcube(c("00"))));
        out[0] = cs(&["01"]);
        let g = HypercubeGraph::from_out_sets(2, &out).unwrap();
        assert_eq!(network_from_graph(&g), Err(Error::NotReflexive(c("00"))));
    }

    #[test]
    fn property_examples() {
        let neg = build_graph(&BooleanNetwork::negation(2).unwrap(), GraphKind::General).unwrap();
        assert!(graph_property(&neg, GraphProperty::Symmetric));
        let ga = build_graph(&f_ex3(), GraphKind::General).unwrap();
        assert!(!graph_property(&ga, GraphProperty::Transitive));
        let d = named("marseille/d").unwrap();
        let a = build_graph(&d, GraphKind::Asynchronous).unwrap();
        assert!(graph_property(&a, GraphProperty::Oriented));
        assert!(!graph_property(&a, GraphProperty::Triangular));
    }

    #[test]
    fn scc_examples() {
        let id = BooleanNetwork::identity(3).unwrap();
        let comps = strongly_connected_components(&build_graph(&id, GraphKind::Asynchronous).unwrap());
        assert_eq!(comps.len(), 8);
        assert!(comps.terminal.iter().all(|&t| t));

        let neg = BooleanNetwork::negation(1).unwrap();
        let comps = strongly_connected_components(&build_graph(&neg, GraphKind::Asynchronous).unwrap());
        assert_eq!(comps.sets(), vec![cs(&["0", "1"])]);

        let comps = strongly_connected_components(&build_graph(&f_ex3(), GraphKind::Asynchronous).unwrap());
        assert_eq!(
            comps.terminal_sets(),
            vec![cs(&["100"]), cs(&["110"]), cs(&["101"])]
        );
    }

    #[test]
    fn transient_examples() {
        assert_eq!(transient_and_period(&BooleanNetwork::identity(3).unwrap()).unwrap(), (0, 1));
        assert_eq!(transient_and_period(&BooleanNetwork::negation(3).unwrap()).unwrap(), (0, 2));
        let f = crate::generators::long_transient_trapping(4).unwrap();
        assert_eq!(transient_and_period(&f).unwrap(), (4, 2));
    }

    #[test]
    fn lcm_overflow() {
        assert_eq!(lcm(u128::MAX, 2), Err(Error::PeriodOverflow));
        assert_eq!(lcm(4, 6), Ok(12));
    }
}
