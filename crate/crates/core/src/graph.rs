//! Simple undirected graphs on dense vertex ids `0..n`.
//!
//! Adjacency is one `u64` row per vertex, so the order is capped at
//! [`MAX_ORDER`]. Graphs are immutable once built; every structural edit
//! returns a new graph.

use serde::Serialize;
use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use crate::error::{parse_err, Error, Result};
use crate::vertex_set::VertexSet;

pub type VertexId = usize;

/// Largest supported order (the graph6 short form limit).
pub const MAX_ORDER: usize = 62;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        check_order(n)?;
        Ok(Graph { adj: vec![0; n] })
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    fn insert_edge(&mut self, u: VertexId, v: VertexId) -> Result<()> {
        let n = self.order();
        if u >= n || v >= n {
            return Err(Error::Validation(format!(
                "edge {u}-{v} has an endpoint outside 0..{n}"
            )));
        }
        if u == v {
            return Err(Error::Validation(format!("self-loop at vertex {u}")));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.order()
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.order() && v < 64 && self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: VertexId) -> VertexSet {
        VertexSet::from_bits(self.adj[v])
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.size());
        for u in self.vertices() {
            for v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n == 0 {
            return true;
        }
        self.component_of(0).len() == n
    }

    /// Vertex set of the connected component containing `v`.
    pub fn component_of(&self, v: VertexId) -> VertexSet {
        let mut seen = 1u64 << v;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for u in VertexSet::from_bits(frontier) {
                next |= self.adj[u];
            }
            frontier = next & !seen;
            seen |= next;
        }
        VertexSet::from_bits(seen)
    }

    /// Two-colouring if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let n = self.order();
        let mut side: Vec<Option<bool>> = vec![None; n];
        for s in self.vertices() {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for w in self.neighbors(u) {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// `d_G(x, y)`, or `None` when `y` is unreachable.
    pub fn distance(&self, x: VertexId, y: VertexId) -> Option<usize> {
        let mut seen = 1u64 << x;
        let mut frontier = seen;
        let mut d = 0;
        while frontier != 0 {
            if frontier >> y & 1 == 1 {
                return Some(d);
            }
            let mut next = 0;
            for u in VertexSet::from_bits(frontier) {
                next |= self.adj[u];
            }
            frontier = next & !seen;
            seen |= next;
            d += 1;
        }
        None
    }

    /// `G[X]`, relabelled to `0..|X|` in ascending order of the original ids.
    /// Returns the subgraph and the original id of each new vertex.
    pub fn induced(&self, keep: VertexSet) -> (Graph, Vec<VertexId>) {
        let ids = keep.intersection(self.vertex_set()).to_vec();
        let mut pos = vec![usize::MAX; self.order()];
        for (i, &v) in ids.iter().enumerate() {
            pos[v] = i;
        }
        let adj = ids
            .iter()
            .map(|&v| {
                self.neighbors(v)
                    .intersection(keep)
                    .iter()
                    .fold(0u64, |acc, w| acc | 1 << pos[w])
            })
            .collect();
        (Graph { adj }, ids)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[VertexId]) -> Graph {
        let n = self.order();
        assert_eq!(perm.len(), n);
        let mut adj = vec![0u64; n];
        for u in 0..n {
            for v in self.neighbors(u) {
                adj[perm[u]] |= 1 << perm[v];
            }
        }
        Graph { adj }
    }

    fn with_fresh_vertices(&self, k: usize) -> Result<Graph> {
        check_order(self.order() + k)?;
        let mut adj = self.adj.clone();
        adj.resize(self.order() + k, 0);
        Ok(Graph { adj })
    }

    fn without_edge(&self, u: VertexId, v: VertexId) -> Graph {
        let mut g = self.clone();
        g.adj[u] &= !(1 << v);
        g.adj[v] &= !(1 << u);
        g
    }

    /// Replaces edge `uv` by the path `u w1 w2 v`, where `w1 = n` and
    /// `w2 = n + 1` are fresh vertices.
    pub fn even_subdivide(&self, u: VertexId, v: VertexId) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::Domain(format!("{u}-{v} is not an edge")));
        }
        let n = self.order();
        let mut g = self.without_edge(u, v).with_fresh_vertices(2)?;
        g.insert_edge(u, n)?;
        g.insert_edge(n, n + 1)?;
        g.insert_edge(n + 1, v)?;
        Ok(g)
    }

    /// Attaches an odd path of `length` edges from `u` to `v` whose
    /// `length - 1` internal vertices are fresh (numbered from `n` on, in
    /// order from `u`). `u == v` closes the ear into an odd cycle through `u`.
    pub fn attach_odd_ear(&self, u: VertexId, v: VertexId, length: usize) -> Result<Graph> {
        let n = self.order();
        if u >= n || v >= n {
            return Err(Error::Domain(format!("ear endpoint outside 0..{n}")));
        }
        if length.is_multiple_of(2) {
            return Err(Error::Domain(format!("ear length {length} is not odd")));
        }
        if length == 1 {
            if u == v {
                return Err(Error::Domain("closed ear of length 1 is a loop".into()));
            }
            if self.has_edge(u, v) {
                return Err(Error::Domain(format!(
                    "{u}-{v} is already an edge; a length-1 ear would be parallel"
                )));
            }
        }
        let mut g = self.with_fresh_vertices(length - 1)?;
        let mut prev = u;
        for w in n..n + length - 1 {
            g.insert_edge(prev, w)?;
            prev = w;
        }
        g.insert_edge(prev, v)?;
        Ok(g)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.order();
        let mut g = self.with_fresh_vertices(other.order())?;
        for (u, v) in other.edges() {
            g.insert_edge(u + n, v + n)?;
        }
        Ok(g)
    }

    pub fn with_edges(&self, edges: &[(VertexId, VertexId)]) -> Result<Graph> {
        let mut g = self.clone();
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds `k` isolated vertices.
    pub fn with_isolated(&self, k: usize) -> Result<Graph> {
        self.with_fresh_vertices(k)
    }
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_ORDER {
        return Err(Error::Capacity {
            what: "graph order",
            got: n,
            limit: MAX_ORDER,
        });
    }
    Ok(())
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.order())?;
        for (i, (u, v)) in self.edges().into_iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            order: usize,
            edges: Vec<(VertexId, VertexId)>,
        }
        Repr {
            order: self.order(),
            edges: self.edges(),
        }
        .serialize(s)
    }
}

/// Result of [`parse_edge_list`]: the dense graph plus the original label of
/// every dense vertex id.
#[derive(Clone, Debug)]
pub struct LabelledGraph {
    pub graph: Graph,
    pub labels: Vec<u64>,
}

impl LabelledGraph {
    /// True when the input labels were already `0..n`.
    pub fn is_identity(&self) -> bool {
        self.labels.iter().enumerate().all(|(i, &l)| l == i as u64)
    }
}

/// Parses one edge per line (`u v`, whitespace separated). Commas also
/// separate records, `#` starts a comment. Ids are remapped to `0..n` in
/// ascending order of their value.
pub fn parse_edge_list(text: &str) -> Result<LabelledGraph> {
    let mut raw = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = line.split('#').next().unwrap_or("");
        for record in line.split([',', ';']) {
            let toks: Vec<&str> = record.split_whitespace().collect();
            match toks.as_slice() {
                [] => {}
                [a, b] => {
                    let u: u64 = a
                        .parse()
                        .map_err(|_| parse_err(lineno, format!("bad vertex id {a:?}")))?;
                    let v: u64 = b
                        .parse()
                        .map_err(|_| parse_err(lineno, format!("bad vertex id {b:?}")))?;
                    if u == v {
                        return Err(Error::Validation(format!(
                            "self-loop at vertex {u} (line {lineno})"
                        )));
                    }
                    raw.push((u, v));
                }
                _ => {
                    return Err(parse_err(
                        lineno,
                        format!("expected two vertex ids, got {:?}", record.trim()),
                    ))
                }
            }
        }
    }
    let mut ids: BTreeMap<u64, VertexId> =
        raw.iter().flat_map(|&(u, v)| [(u, 0), (v, 0)]).collect();
    for (i, slot) in ids.values_mut().enumerate() {
        *slot = i;
    }
    let labels: Vec<u64> = ids.keys().copied().collect();
    let edges: Vec<_> = raw.iter().map(|(u, v)| (ids[u], ids[v])).collect();
    let graph = Graph::from_edges(labels.len(), &edges)?;
    Ok(LabelledGraph { graph, labels })
}

pub fn path(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Domain(format!(
            "cycle needs at least 3 vertices, got {n}"
        )));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges)
}

/// Two odd cycles `C_a` (vertices `0..a`) and `C_b` (vertices `a..a+b`)
/// joined by a path of `path_len` edges from vertex `0` to vertex `a`; the
/// path's internal vertices come last.
pub fn barbell(a: usize, b: usize, path_len: usize) -> Result<Graph> {
    for c in [a, b] {
        if c < 3 || c % 2 == 0 {
            return Err(Error::Domain(format!(
                "barbell cycles must be odd and >= 3, got {c}"
            )));
        }
    }
    if path_len == 0 {
        return Err(Error::Domain(
            "barbell path must have at least one edge".into(),
        ));
    }
    let n = a + b + path_len - 1;
    let mut edges = Vec::new();
    edges.extend((0..a).map(|i| (i, (i + 1) % a)));
    edges.extend((0..b).map(|i| (a + i, a + (i + 1) % b)));
    let mut prev = 0;
    for w in a + b..n {
        edges.push((prev, w));
        prev = w;
    }
    edges.push((prev, a));
    Graph::from_edges(n, &edges)
}
