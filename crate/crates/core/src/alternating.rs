//! Alternating walks and paths.
//!
//! Walk existence is decided on the *state digraph*: a state `(v, p)` means
//! "standing at `v`, the next edge must have parity `p`". A walk may repeat
//! vertices, so reachability between states is exactly walk existence. Simple
//! paths have no such shortcut and are found by exhaustive search.

use serde::Serialize;
use std::ops::ControlFlow;

use crate::configurations::Blossom;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::matching::Matching;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Matched,
    Unmatched,
}

impl Parity {
    pub fn flip(self) -> Parity {
        match self {
            Parity::Matched => Parity::Unmatched,
            Parity::Unmatched => Parity::Matched,
        }
    }

    pub fn of(m: &Matching, u: VertexId, v: VertexId) -> Parity {
        if m.contains(u, v) {
            Parity::Matched
        } else {
            Parity::Unmatched
        }
    }

    fn index(self) -> usize {
        match self {
            Parity::Matched => 0,
            Parity::Unmatched => 1,
        }
    }
}

/// Endpoint type of an alternating walk: parity of its first and last edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum WalkClass {
    Mm,
    Nn,
    Mn,
    Nm,
    Trivial,
}

impl WalkClass {
    pub fn from_ends(first: Parity, last: Parity) -> WalkClass {
        match (first, last) {
            (Parity::Matched, Parity::Matched) => WalkClass::Mm,
            (Parity::Unmatched, Parity::Unmatched) => WalkClass::Nn,
            (Parity::Matched, Parity::Unmatched) => WalkClass::Mn,
            (Parity::Unmatched, Parity::Matched) => WalkClass::Nm,
        }
    }

    /// `(first, last)` edge parities; `None` for the trivial class.
    pub fn ends(self) -> Option<(Parity, Parity)> {
        match self {
            WalkClass::Mm => Some((Parity::Matched, Parity::Matched)),
            WalkClass::Nn => Some((Parity::Unmatched, Parity::Unmatched)),
            WalkClass::Mn => Some((Parity::Matched, Parity::Unmatched)),
            WalkClass::Nm => Some((Parity::Unmatched, Parity::Matched)),
            WalkClass::Trivial => None,
        }
    }

    /// Class of the same walk traversed backwards.
    pub fn reversed(self) -> WalkClass {
        match self {
            WalkClass::Mn => WalkClass::Nm,
            WalkClass::Nm => WalkClass::Mn,
            c => c,
        }
    }
}

/// A walk whose consecutive edges alternate in and out of a reference
/// matching. Zero-length walks (one vertex) are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct AlternatingWalk {
    vertices: Vec<VertexId>,
    #[serde(skip)]
    matched: Vec<bool>,
}

impl AlternatingWalk {
    pub fn new(g: &Graph, m: &Matching, vertices: Vec<VertexId>) -> Result<AlternatingWalk> {
        if vertices.is_empty() {
            return Err(Error::Validation("a walk has at least one vertex".into()));
        }
        if let Some(&v) = vertices.iter().find(|&&v| v >= g.order()) {
            return Err(Error::Validation(format!("walk vertex {v} not in graph")));
        }
        let mut matched = Vec::with_capacity(vertices.len() - 1);
        for w in vertices.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(Error::Validation(format!(
                    "{}-{} is not an edge",
                    w[0], w[1]
                )));
            }
            matched.push(m.contains(w[0], w[1]));
        }
        if let Some(i) = matched.windows(2).position(|p| p[0] == p[1]) {
            return Err(Error::Validation(format!(
                "walk does not alternate at vertex {} (position {})",
                vertices[i + 1],
                i + 1
            )));
        }
        Ok(AlternatingWalk { vertices, matched })
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<VertexId> {
        self.vertices
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.matched.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matched.is_empty()
    }

    pub fn start(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn end(&self) -> VertexId {
        *self.vertices.last().unwrap()
    }

    pub fn is_closed(&self) -> bool {
        !self.is_empty() && self.start() == self.end()
    }

    pub fn is_path(&self) -> bool {
        self.vertex_set().len() == self.vertices.len()
    }

    pub fn first_parity(&self) -> Option<Parity> {
        self.matched.first().map(|&b| parity_from(b))
    }

    pub fn last_parity(&self) -> Option<Parity> {
        self.matched.last().map(|&b| parity_from(b))
    }

    pub fn class(&self) -> WalkClass {
        match (self.first_parity(), self.last_parity()) {
            (Some(f), Some(l)) => WalkClass::from_ends(f, l),
            _ => WalkClass::Trivial,
        }
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().collect()
    }

    pub fn reversed(&self) -> AlternatingWalk {
        AlternatingWalk {
            vertices: self.vertices.iter().rev().copied().collect(),
            matched: self.matched.iter().rev().copied().collect(),
        }
    }
}

fn parity_from(matched: bool) -> Parity {
    if matched {
        Parity::Matched
    } else {
        Parity::Unmatched
    }
}

pub fn classify_walk(g: &Graph, m: &Matching, vertices: &[VertexId]) -> Result<WalkClass> {
    Ok(AlternatingWalk::new(g, m, vertices.to_vec())?.class())
}

/// A set of states of a [`StateDigraph`] as a 128-bit mask (`2 * 62` states fit).
pub type StateSet = u128;

/// Index of state `(v, p)`.
pub fn state(v: VertexId, p: Parity) -> usize {
    2 * v + p.index()
}

pub fn state_vertex(s: usize) -> VertexId {
    s / 2
}

pub fn state_parity(s: usize) -> Parity {
    if s.is_multiple_of(2) {
        Parity::Matched
    } else {
        Parity::Unmatched
    }
}

/// Arc `(v, p) -> (u, !p)` iff `vu` is an edge and `vu ∈ M ⇔ p = matched`.
#[derive(Clone, Debug)]
pub struct StateDigraph {
    succ: Vec<StateSet>,
    pred: Vec<StateSet>,
}

impl StateDigraph {
    pub fn new(g: &Graph, m: &Matching) -> StateDigraph {
        let n = g.order();
        let mut succ = vec![0u128; 2 * n];
        let mut pred = vec![0u128; 2 * n];
        for v in g.vertices() {
            for u in g.neighbors(v) {
                let p = Parity::of(m, v, u);
                let (from, to) = (state(v, p), state(u, p.flip()));
                succ[from] |= 1 << to;
                pred[to] |= 1 << from;
            }
        }
        StateDigraph { succ, pred }
    }

    pub fn node_count(&self) -> usize {
        self.succ.len()
    }

    pub fn arc_count(&self) -> usize {
        self.succ.iter().map(|s| s.count_ones() as usize).sum()
    }

    pub fn successors(&self, s: usize) -> StateSet {
        self.succ[s]
    }

    pub fn predecessors(&self, s: usize) -> StateSet {
        self.pred[s]
    }

    pub fn has_arc(&self, from: usize, to: usize) -> bool {
        self.succ[from] >> to & 1 == 1
    }

    /// States reachable from `from` by paths of length >= 0.
    pub fn forward(&self, from: StateSet) -> StateSet {
        closure(&self.succ, from)
    }

    /// States from which `to` is reachable by paths of length >= 0.
    pub fn backward(&self, to: StateSet) -> StateSet {
        closure(&self.pred, to)
    }

    /// States reachable from `from` by paths of length >= 1.
    pub fn forward_strict(&self, from: StateSet) -> StateSet {
        self.forward(image(&self.succ, from))
    }

    /// A shortest state path (as vertices) from some state in `from` to some
    /// state in `to`, of length >= 1 when `strict`.
    pub fn shortest_walk(
        &self,
        from: StateSet,
        to: StateSet,
        strict: bool,
    ) -> Option<Vec<VertexId>> {
        if !strict {
            if let Some(s) = states(from & to).next() {
                return Some(vec![state_vertex(s)]);
            }
        }
        // parent[t] for states at depth >= 1; depth-1 states point into `from`.
        let mut parent = vec![usize::MAX; self.succ.len()];
        let mut depth_one: StateSet = 0;
        let mut queue = std::collections::VecDeque::new();
        for s in states(from) {
            for t in states(self.succ[s] & !depth_one) {
                depth_one |= 1 << t;
                parent[t] = s;
                queue.push_back(t);
            }
        }
        let mut seen = depth_one;
        while let Some(s) = queue.pop_front() {
            if to >> s & 1 == 1 {
                let mut rev = vec![state_vertex(s)];
                let mut t = s;
                while depth_one >> t & 1 == 0 {
                    t = parent[t];
                    rev.push(state_vertex(t));
                }
                rev.push(state_vertex(parent[t]));
                rev.reverse();
                return Some(rev);
            }
            for t in states(self.succ[s] & !seen) {
                seen |= 1 << t;
                parent[t] = s;
                queue.push_back(t);
            }
        }
        None
    }
}

fn image(adj: &[StateSet], from: StateSet) -> StateSet {
    states(from).fold(0, |acc, s| acc | adj[s])
}

fn closure(adj: &[StateSet], from: StateSet) -> StateSet {
    let mut seen = from;
    let mut frontier = from;
    while frontier != 0 {
        let next = image(adj, frontier);
        frontier = next & !seen;
        seen |= next;
    }
    seen
}

/// Iterates the state indices in a mask.
pub fn states(mut set: StateSet) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            return None;
        }
        let s = set.trailing_zeros() as usize;
        set &= set - 1;
        Some(s)
    })
}

/// Vertices having at least one state in `set`.
pub fn state_vertices(set: StateSet) -> VertexSet {
    states(set).map(state_vertex).collect()
}

pub fn build_state_digraph(g: &Graph, m: &Matching) -> StateDigraph {
    StateDigraph::new(g, m)
}

/// Whether an alternating walk of `class` (length >= 1) runs from `from` to
/// `to`. Walks may repeat vertices and edges. [`WalkClass::Trivial`] asks for
/// the zero-length walk, which exists iff `from == to`.
pub fn walk_exists(
    g: &Graph,
    m: &Matching,
    from: VertexId,
    to: VertexId,
    class: WalkClass,
) -> bool {
    walk_exists_in(&StateDigraph::new(g, m), from, to, class)
}

pub fn walk_exists_in(sd: &StateDigraph, from: VertexId, to: VertexId, class: WalkClass) -> bool {
    let Some((first, last)) = class.ends() else {
        return from == to;
    };
    let reach = sd.forward_strict(1 << state(from, first));
    reach >> state(to, last.flip()) & 1 == 1
}

/// Calls `visit` on every simple alternating path that starts at `from` with
/// an edge of parity `first` and avoids `avoid`. The visitor sees the path
/// (with `from` first) and the parity of its last edge; returning `Break`
/// stops the whole search.
pub fn for_each_alternating_path<F>(
    g: &Graph,
    m: &Matching,
    from: VertexId,
    first: Parity,
    avoid: VertexSet,
    mut visit: F,
) -> ControlFlow<()>
where
    F: FnMut(&[VertexId], Parity) -> ControlFlow<()>,
{
    let mut path = vec![from];
    let mut on_path = VertexSet::singleton(from).union(avoid);
    extend_paths(g, m, &mut path, &mut on_path, first, &mut visit)
}

fn extend_paths<F>(
    g: &Graph,
    m: &Matching,
    path: &mut Vec<VertexId>,
    on_path: &mut VertexSet,
    next: Parity,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[VertexId], Parity) -> ControlFlow<()>,
{
    let cur = *path.last().unwrap();
    let candidates = match next {
        Parity::Matched => match m.partner(cur) {
            Some(w) => VertexSet::singleton(w),
            None => VertexSet::EMPTY,
        },
        Parity::Unmatched => {
            let mut c = g.neighbors(cur);
            if let Some(w) = m.partner(cur) {
                c.remove(w);
            }
            c
        }
    };
    for w in candidates.difference(*on_path) {
        path.push(w);
        on_path.insert(w);
        let flow = match visit(path, next) {
            ControlFlow::Continue(()) => extend_paths(g, m, path, on_path, next.flip(), visit),
            brk => brk,
        };
        path.pop();
        on_path.remove(w);
        flow?;
    }
    ControlFlow::Continue(())
}

/// A simple alternating path of `class` from `from` to `to`, if any. Paths
/// here are nontrivial, so `from == to` yields `None`.
pub fn find_alternating_path(
    g: &Graph,
    m: &Matching,
    from: VertexId,
    to: VertexId,
    class: WalkClass,
) -> Option<Vec<VertexId>> {
    find_alternating_path_within(g, m, from, to, class, g.vertex_set())
}

/// As [`find_alternating_path`], restricted to the subgraph induced by `within`.
pub fn find_alternating_path_within(
    g: &Graph,
    m: &Matching,
    from: VertexId,
    to: VertexId,
    class: WalkClass,
    within: VertexSet,
) -> Option<Vec<VertexId>> {
    let (first, last) = class.ends()?;
    if from == to || !within.contains(from) || !within.contains(to) {
        return None;
    }
    let avoid = g.vertex_set().difference(within);
    let mut found = None;
    let _ = for_each_alternating_path(g, m, from, first, avoid, |p, parity| {
        if *p.last().unwrap() == to && parity == last {
            found = Some(p.to_vec());
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    found
}

/// Outcome of removing cycles from an alternating walk.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SimplifiedWalk {
    /// A simple path with the endpoints and end parities of the input (or a
    /// single vertex, when the input was a closed walk of even length).
    Path { path: Vec<VertexId> },
    /// The walk's first self-intersection after even-cycle removal closes
    /// an odd cycle: `prefix` runs from the walk start to the blossom base.
    Blossom {
        prefix: Vec<VertexId>,
        blossom: Blossom,
    },
}

/// Splices out even closed sub-walks as soon as they close (leftmost first)
/// until either the walk is a simple path or the first self-intersection
/// closes an odd cycle.
pub fn simplify_walk(g: &Graph, m: &Matching, w: &AlternatingWalk) -> Result<SimplifiedWalk> {
    let mut stack: Vec<VertexId> = Vec::with_capacity(w.vertices().len());
    let mut pos = vec![usize::MAX; g.order()];
    for &x in w.vertices() {
        if pos[x] == usize::MAX {
            pos[x] = stack.len();
            stack.push(x);
            continue;
        }
        let i = pos[x];
        let cycle_len = stack.len() - i;
        if cycle_len.is_multiple_of(2) {
            for &y in &stack[i + 1..] {
                pos[y] = usize::MAX;
            }
            stack.truncate(i + 1);
        } else {
            let blossom = Blossom::new(g, m, stack[i..].to_vec()).map_err(|e| {
                Error::Invariant(format!(
                    "odd cycle on an alternating walk is not a blossom: {e}"
                ))
            })?;
            return Ok(SimplifiedWalk::Blossom {
                prefix: stack[..=i].to_vec(),
                blossom,
            });
        }
    }
    Ok(SimplifiedWalk::Path { path: stack })
}

/// Finds a blossom on a closed alternating walk of odd length (first and
/// last edge of equal parity at the closing vertex).
pub fn extract_blossom_from_closed_walk(
    g: &Graph,
    m: &Matching,
    w: &AlternatingWalk,
) -> Result<Blossom> {
    if !w.is_closed() {
        return Err(Error::Domain("walk is not closed".into()));
    }
    if w.len().is_multiple_of(2) {
        return Err(Error::Domain(
            "closed walk has even length: its seam alternates and it need not contain an odd cycle"
                .into(),
        ));
    }
    match simplify_walk(g, m, w)? {
        SimplifiedWalk::Blossom { blossom, .. } => Ok(blossom),
        SimplifiedWalk::Path { path } => Err(Error::Invariant(format!(
            "closed odd alternating walk reduced to {path:?} without an odd cycle"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle};

    fn k2() -> (Graph, Matching) {
        let g = complete(2).unwrap();
        let m = Matching::from_edges(&g, &[(0, 1)]).unwrap();
        (g, m)
    }

    #[test]
    fn classify_simple_cases() {
        let (g, m) = k2();
        assert_eq!(classify_walk(&g, &m, &[0, 1]).unwrap(), WalkClass::Mm);
        assert_eq!(classify_walk(&g, &m, &[0]).unwrap(), WalkClass::Trivial);
        let c4 = cycle(4).unwrap();
        let m4 = Matching::from_edges(&c4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            classify_walk(&c4, &m4, &[3, 0, 1, 2]).unwrap(),
            WalkClass::Nn
        );
        assert_eq!(classify_walk(&c4, &m4, &[0, 1, 2]).unwrap(), WalkClass::Mn);
        assert_eq!(
            classify_walk(&c4, &m4, &[1, 2, 3, 0, 1]).unwrap(),
            WalkClass::Nm
        );
        assert!(classify_walk(&c4, &m4, &[0, 3, 2]).is_ok());
        assert!(classify_walk(&c4, &m4, &[0, 2]).is_err());
        let m1 = Matching::from_edges(&c4, &[(0, 1)]).unwrap();
        assert!(classify_walk(&c4, &m1, &[1, 2, 3]).is_err());
    }

    #[test]
    fn state_digraph_k2() {
        let (g, m) = k2();
        let sd = build_state_digraph(&g, &m);
        assert_eq!(sd.node_count(), 4);
        assert_eq!(sd.arc_count(), 2);
        assert!(sd.has_arc(state(0, Parity::Matched), state(1, Parity::Unmatched)));
        assert!(sd.has_arc(state(1, Parity::Matched), state(0, Parity::Unmatched)));
    }

    #[test]
    fn state_digraph_c4_out_degrees() {
        let g = cycle(4).unwrap();
        let m = Matching::from_edges(&g, &[(0, 1), (2, 3)]).unwrap();
        let sd = build_state_digraph(&g, &m);
        assert!((0..sd.node_count()).all(|s| sd.successors(s) != 0));
    }

    #[test]
    fn walk_exists_k2() {
        let (g, m) = k2();
        assert!(walk_exists(&g, &m, 0, 1, WalkClass::Mm));
        assert!(!walk_exists(&g, &m, 0, 1, WalkClass::Nn));
        assert!(!walk_exists(&g, &m, 0, 0, WalkClass::Mm));
        assert!(walk_exists(&g, &m, 0, 0, WalkClass::Trivial));
    }

    #[test]
    fn path_search() {
        let g = cycle(4).unwrap();
        let m = Matching::from_edges(&g, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            find_alternating_path(&g, &m, 0, 3, WalkClass::Mm),
            Some(vec![0, 1, 2, 3])
        );
        assert_eq!(
            find_alternating_path(&g, &m, 0, 3, WalkClass::Nn),
            Some(vec![0, 3])
        );
        assert_eq!(find_alternating_path(&g, &m, 0, 2, WalkClass::Nn), None);
        assert_eq!(
            find_alternating_path(&g, &m, 0, 2, WalkClass::Mn),
            Some(vec![0, 1, 2])
        );
        assert_eq!(
            find_alternating_path(&g, &m, 1, 2, WalkClass::Nn),
            Some(vec![1, 2])
        );
        assert_eq!(find_alternating_path(&g, &m, 0, 0, WalkClass::Mm), None);
    }

    #[test]
    fn simplify_simple_path_is_identity() {
        let g = cycle(6).unwrap();
        let m = Matching::from_edges(&g, &[(1, 2), (3, 4)]).unwrap();
        let w = AlternatingWalk::new(&g, &m, vec![0, 1, 2, 3, 4, 5]).unwrap();
        assert_eq!(
            simplify_walk(&g, &m, &w).unwrap(),
            SimplifiedWalk::Path {
                path: vec![0, 1, 2, 3, 4, 5]
            }
        );
    }

    #[test]
    fn simplify_removes_even_detour() {
        // 5 -n- 1 -m- 0 ... with the square 1,2,3,4 traversed from 1 and back.
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 1), (1, 5)]).unwrap();
        let m = Matching::from_edges(&g, &[(0, 1), (2, 3)]).unwrap();
        let w = AlternatingWalk::new(&g, &m, vec![0, 1, 2, 3, 4, 1, 5]);
        assert!(w.is_err());
        let w = AlternatingWalk::new(&g, &m, vec![5, 1, 0]).unwrap();
        assert_eq!(
            simplify_walk(&g, &m, &w).unwrap(),
            SimplifiedWalk::Path {
                path: vec![5, 1, 0]
            }
        );
        let c4 = cycle(4).unwrap();
        let m4 = Matching::from_edges(&c4, &[(0, 1), (2, 3)]).unwrap();
        let closed = AlternatingWalk::new(&c4, &m4, vec![0, 1, 2, 3, 0, 1]).unwrap();
        assert_eq!(
            simplify_walk(&c4, &m4, &closed).unwrap(),
            SimplifiedWalk::Path { path: vec![0, 1] }
        );
        let closed = AlternatingWalk::new(&c4, &m4, vec![0, 1, 2, 3, 0]).unwrap();
        assert!(extract_blossom_from_closed_walk(&c4, &m4, &closed).is_err());
    }

    #[test]
    fn extract_triangle_blossom() {
        let g = cycle(3).unwrap();
        let m = Matching::from_edges(&g, &[(1, 2)]).unwrap();
        let w = AlternatingWalk::new(&g, &m, vec![0, 1, 2, 0]).unwrap();
        let b = extract_blossom_from_closed_walk(&g, &m, &w).unwrap();
        assert_eq!(b.base(), 0);
        assert_eq!(b.vertex_set().to_vec(), vec![0, 1, 2]);
        let open = AlternatingWalk::new(&g, &m, vec![0, 1, 2]).unwrap();
        assert!(extract_blossom_from_closed_walk(&g, &m, &open).is_err());
    }

    #[test]
    fn shortest_walk_strict_returns_to_start() {
        let g = cycle(3).unwrap();
        let m = Matching::from_edges(&g, &[(1, 2)]).unwrap();
        let sd = StateDigraph::new(&g, &m);
        // From (0, unmatched) back to 0 arriving by an unmatched edge.
        let w = sd
            .shortest_walk(
                1 << state(0, Parity::Unmatched),
                1 << state(0, Parity::Matched),
                true,
            )
            .unwrap();
        assert_eq!(w.len(), 4);
        assert_eq!((w[0], w[3]), (0, 0));
    }
}
