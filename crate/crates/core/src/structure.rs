//! Network-structure digraph and the graph algorithms behind pinned-node
//! selection. Vertices are 0-based node indices; arcs `i → j` mean node `i`
//! is a functional input of node `j`.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap, VecDeque};
use std::fmt::{self, Write};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::BooleanNetwork;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub tail: usize,
    pub head: usize,
}

impl Edge {
    pub fn new(tail: usize, head: usize) -> Self {
        Edge { tail, head }
    }

    pub fn is_loop(&self) -> bool {
        self.tail == self.head
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}", self.tail + 1, self.head + 1)
    }
}

/// Serialized 1-based, as `[tail, head]`.
impl Serialize for Edge {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.tail + 1, self.head + 1].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Edge {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [t, h] = <[usize; 2]>::deserialize(d)?;
        if t == 0 || h == 0 {
            return Err(serde::de::Error::custom("arc endpoints are 1-based"));
        }
        Ok(Edge::new(t - 1, h - 1))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    arcs: BTreeSet<Edge>,
}

impl Digraph {
    pub fn new(n: usize) -> Self {
        Digraph {
            n,
            arcs: BTreeSet::new(),
        }
    }

    pub fn from_arcs(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Digraph::new(n);
        for (t, h) in arcs {
            g.add_arc(Edge::new(t, h));
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn add_arc(&mut self, e: Edge) -> bool {
        assert!(e.tail < self.n && e.head < self.n, "arc {e} outside graph");
        self.arcs.insert(e)
    }

    pub fn remove_arc(&mut self, e: &Edge) -> bool {
        self.arcs.remove(e)
    }

    pub fn contains(&self, e: &Edge) -> bool {
        self.arcs.contains(e)
    }

    pub fn arcs(&self) -> impl Iterator<Item = Edge> + '_ {
        self.arcs.iter().copied()
    }

    pub fn in_arcs(&self, v: usize) -> Vec<Edge> {
        self.arcs.iter().filter(|e| e.head == v).copied().collect()
    }

    /// Subgraph induced by `vertices` (vertex numbering kept).
    pub fn induced(&self, vertices: &[usize]) -> Digraph {
        let mut keep = vec![false; self.n];
        for &v in vertices {
            keep[v] = true;
        }
        Digraph {
            n: self.n,
            arcs: self
                .arcs
                .iter()
                .filter(|e| keep[e.tail] && keep[e.head])
                .copied()
                .collect(),
        }
    }

    pub fn without(&self, removed: &[Edge]) -> Digraph {
        let mut g = self.clone();
        for e in removed {
            g.arcs.remove(e);
        }
        g
    }

    fn adjacency(&self) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
        let mut out = vec![Vec::new(); self.n];
        let mut inc = vec![Vec::new(); self.n];
        for e in &self.arcs {
            out[e.tail].push(e.head);
            inc[e.head].push(e.tail);
        }
        (out, inc)
    }
}

/// `entry(i, j)` is set iff node `j` is a functional input of node `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    rows: Vec<Vec<usize>>,
}

impl IncidenceMatrix {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].binary_search(&j).is_ok()
    }

    /// Support of row `i`, ascending.
    pub fn row(&self, i: usize) -> &[usize] {
        &self.rows[i]
    }

    pub fn to_digraph(&self) -> Digraph {
        let mut g = Digraph::new(self.rows.len());
        for (i, row) in self.rows.iter().enumerate() {
            for &j in row {
                g.arcs.insert(Edge::new(j, i));
            }
        }
        g
    }
}

pub fn incidence(net: &BooleanNetwork) -> IncidenceMatrix {
    IncidenceMatrix {
        rows: (0..net.len()).map(|k| net.neighbors(k).to_vec()).collect(),
    }
}

pub fn network_structure(net: &BooleanNetwork) -> Digraph {
    incidence(net).to_digraph()
}

/// Arcs with tail in `from` and head in `to`, ordered by (head, tail).
pub fn boundary_arcs(g: &Digraph, from: &[usize], to: &[usize]) -> Vec<Edge> {
    let mut in_from = vec![false; g.n];
    let mut in_to = vec![false; g.n];
    from.iter().for_each(|&v| in_from[v] = true);
    to.iter().for_each(|&v| in_to[v] = true);
    let mut arcs: Vec<Edge> = g
        .arcs
        .iter()
        .filter(|e| in_from[e.tail] && in_to[e.head])
        .copied()
        .collect();
    arcs.sort_by_key(|e| (e.head, e.tail));
    arcs
}

/// Greedy feedback arc set.
///
/// Self-loops are always included. The remaining arcs are ranked by a vertex
/// sequence built by repeatedly peeling sinks to the back and sources to the
/// front, otherwise moving the vertex with the largest out-degree minus
/// in-degree to the front (lowest index on ties). Arcs pointing backwards in
/// that sequence form the returned set, in lexicographic order.
pub fn feedback_arc_set(g: &Digraph) -> Vec<Edge> {
    let n = g.n;
    let (out, inc) = g.adjacency();
    let mut outdeg: Vec<usize> = (0..n)
        .map(|v| out[v].iter().filter(|&&h| h != v).count())
        .collect();
    let mut indeg: Vec<usize> = (0..n)
        .map(|v| inc[v].iter().filter(|&&t| t != v).count())
        .collect();
    let mut alive = vec![true; n];
    let mut remaining = n;
    let mut front = Vec::with_capacity(n);
    let mut back = VecDeque::with_capacity(n);

    let remove = |v: usize, alive: &mut Vec<bool>, outdeg: &mut Vec<usize>, indeg: &mut Vec<usize>| {
        alive[v] = false;
        for &h in out[v].iter().filter(|&&h| h != v && alive[h]) {
            indeg[h] -= 1;
        }
        for &t in inc[v].iter().filter(|&&t| t != v && alive[t]) {
            outdeg[t] -= 1;
        }
    };

    while remaining > 0 {
        let mut progressed = true;
        while progressed {
            progressed = false;
            while let Some(v) = (0..n).find(|&v| alive[v] && outdeg[v] == 0) {
                remove(v, &mut alive, &mut outdeg, &mut indeg);
                back.push_front(v);
                remaining -= 1;
                progressed = true;
            }
            while let Some(v) = (0..n).find(|&v| alive[v] && indeg[v] == 0) {
                remove(v, &mut alive, &mut outdeg, &mut indeg);
                front.push(v);
                remaining -= 1;
                progressed = true;
            }
        }
        if remaining > 0 {
            let v = (0..n)
                .filter(|&v| alive[v])
                .max_by_key(|&v| (outdeg[v] as isize - indeg[v] as isize, Reverse(v)))
                .unwrap();
            remove(v, &mut alive, &mut outdeg, &mut indeg);
            front.push(v);
            remaining -= 1;
        }
    }

    let mut rank = vec![0usize; n];
    for (r, &v) in front.iter().chain(back.iter()).enumerate() {
        rank[v] = r;
    }
    g.arcs
        .iter()
        .filter(|e| e.is_loop() || rank[e.tail] > rank[e.head])
        .copied()
        .collect()
}

/// Topological order, smallest available vertex first; `None` on a cycle.
pub fn topological_order(g: &Digraph) -> Option<Vec<usize>> {
    let (out, inc) = g.adjacency();
    let mut indeg: Vec<usize> = inc.iter().map(Vec::len).collect();
    let mut ready: BinaryHeap<Reverse<usize>> =
        (0..g.n).filter(|&v| indeg[v] == 0).map(Reverse).collect();
    let mut order = Vec::with_capacity(g.n);
    while let Some(Reverse(v)) = ready.pop() {
        order.push(v);
        for &h in &out[v] {
            indeg[h] -= 1;
            if indeg[h] == 0 {
                ready.push(Reverse(h));
            }
        }
    }
    (order.len() == g.n).then_some(order)
}

/// A self-loop counts as a cycle.
pub fn is_acyclic(g: &Digraph) -> bool {
    topological_order(g).is_some()
}

/// Length in arcs of the longest directed path.
pub fn longest_path(g: &Digraph) -> Result<usize> {
    let order = topological_order(g).ok_or(Error::Cyclic)?;
    Ok(path_lengths(g, &order).0.into_iter().max().unwrap_or(0))
}

/// Longest path ending at / starting from each vertex, with path counts.
fn path_lengths(g: &Digraph, order: &[usize]) -> (Vec<usize>, Vec<usize>, Vec<u128>, Vec<u128>) {
    let (out, inc) = g.adjacency();
    let n = g.n;
    let mut ending = vec![0usize; n];
    let mut ending_count = vec![1u128; n];
    for &v in order {
        for &t in &inc[v] {
            let len = ending[t] + 1;
            if len > ending[v] {
                ending[v] = len;
                ending_count[v] = ending_count[t];
            } else if len == ending[v] && ending[v] > 0 {
                ending_count[v] = ending_count[v].saturating_add(ending_count[t]);
            }
        }
    }
    let mut starting = vec![0usize; n];
    let mut starting_count = vec![1u128; n];
    for &v in order.iter().rev() {
        for &h in &out[v] {
            let len = starting[h] + 1;
            if len > starting[v] {
                starting[v] = len;
                starting_count[v] = starting_count[h];
            } else if len == starting[v] && starting[v] > 0 {
                starting_count[v] = starting_count[v].saturating_add(starting_count[h]);
            }
        }
    }
    (ending, starting, ending_count, starting_count)
}

/// Outcome of [`enforce_diameter`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DiameterCut {
    /// Vertices whose in-arcs were all removed, in selection order.
    pub sourced: Vec<usize>,
    pub removed: Vec<Edge>,
}

/// Greedily turns vertices into sources until the longest path is at most
/// `bound` arcs. Each round picks the unprotected vertex that is the interior
/// or end point of the most maximum-length paths (lowest index on ties).
pub fn enforce_diameter(g: &Digraph, protected: &[usize], bound: usize) -> Result<DiameterCut> {
    let mut graph = g.clone();
    let mut is_protected = vec![false; g.n];
    protected.iter().for_each(|&v| is_protected[v] = true);
    let mut cut = DiameterCut::default();
    loop {
        let order = topological_order(&graph).ok_or(Error::Cyclic)?;
        let (ending, starting, ending_count, starting_count) = path_lengths(&graph, &order);
        let diam = ending.iter().copied().max().unwrap_or(0);
        if diam <= bound {
            return Ok(cut);
        }
        let pick = (0..g.n)
            .filter(|&v| !is_protected[v] && ending[v] > 0 && ending[v] + starting[v] == diam)
            .max_by_key(|&v| {
                (
                    ending_count[v].saturating_mul(starting_count[v]),
                    Reverse(v),
                )
            });
        let Some(v) = pick else {
            return Ok(cut);
        };
        let arcs = graph.in_arcs(v);
        for e in &arcs {
            graph.remove_arc(e);
        }
        cut.sourced.push(v);
        cut.removed.extend(arcs);
    }
}

/// Styling for DOT export.
#[derive(Debug, Clone, Default)]
pub struct DotStyle<'a> {
    /// Arcs drawn dashed (they need not be present in the graph).
    pub removed: &'a [Edge],
    /// Vertices drawn as double circles.
    pub pinned: &'a [usize],
    /// Vertices filled in grey, e.g. the fixed-state nodes.
    pub highlighted: &'a [usize],
}

pub fn to_dot(g: &Digraph, names: &[String], style: &DotStyle<'_>) -> String {
    let mut out = String::from("digraph structure {\n    node [shape=circle];\n");
    for (v, name) in names.iter().enumerate().take(g.n) {
        let mut attrs = vec![format!("label=\"{}\"", escape(name))];
        if style.pinned.contains(&v) {
            attrs.push("shape=doublecircle".into());
        }
        if style.highlighted.contains(&v) {
            attrs.push("style=filled".into());
            attrs.push("fillcolor=lightgrey".into());
        }
        writeln!(out, "    n{} [{}];", v + 1, attrs.join(", ")).unwrap();
    }
    let mut all: BTreeSet<(Edge, bool)> = g.arcs().map(|e| (e, false)).collect();
    for e in style.removed {
        all.remove(&(*e, false));
        all.insert((*e, true));
    }
    for (e, dashed) in all {
        let attr = if dashed { " [style=dashed]" } else { "" };
        writeln!(out, "    n{} -> n{}{};", e.tail + 1, e.head + 1, attr).unwrap();
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
