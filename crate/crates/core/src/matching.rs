//! Matchings, maximum matchings in general graphs, enumeration of all
//! maximum matchings, and rotation along even alternating cycles.

use serde::Serialize;
use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::limits::Limits;
use crate::vertex_set::VertexSet;

const NONE: usize = usize::MAX;

/// A matching stored as its involution: `mate[v] == v` iff `v` is unmatched.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    mate: Vec<VertexId>,
}

impl Matching {
    pub fn empty(n: usize) -> Matching {
        Matching {
            mate: (0..n).collect(),
        }
    }

    /// Validates that `edges` are edges of `g` and pairwise vertex-disjoint.
    pub fn from_edges(g: &Graph, edges: &[(VertexId, VertexId)]) -> Result<Matching> {
        let mut m = Matching::empty(g.order());
        for &(u, v) in edges {
            if !g.has_edge(u, v) {
                return Err(Error::Domain(format!(
                    "{u}-{v} is not an edge of the graph"
                )));
            }
            if m.is_matched(u) || m.is_matched(v) {
                if m.mate[u] == v {
                    continue;
                }
                return Err(Error::Domain(format!(
                    "edge {u}-{v} shares an endpoint with another matching edge"
                )));
            }
            m.mate[u] = v;
            m.mate[v] = u;
        }
        Ok(m)
    }

    fn from_mate_array(mate: &[usize]) -> Matching {
        Matching {
            mate: mate
                .iter()
                .enumerate()
                .map(|(v, &w)| if w == NONE { v } else { w })
                .collect(),
        }
    }

    /// Checks that every matched pair is an edge of `g` and the order agrees.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.mate.len() != g.order() {
            return Err(Error::Domain(format!(
                "matching is over {} vertices, graph has {}",
                self.mate.len(),
                g.order()
            )));
        }
        for (u, &v) in self.mate.iter().enumerate() {
            if v != u && (self.mate.get(v) != Some(&u) || !g.has_edge(u, v)) {
                return Err(Error::Domain(format!(
                    "{u}-{v} is not a valid matching edge"
                )));
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.mate.len()
    }

    /// `M(v)`: the partner of `v`, or `v` itself when unmatched.
    pub fn involution(&self, v: VertexId) -> VertexId {
        self.mate[v]
    }

    pub fn partner(&self, v: VertexId) -> Option<VertexId> {
        let w = self.mate[v];
        (w != v).then_some(w)
    }

    pub fn is_matched(&self, v: VertexId) -> bool {
        self.mate[v] != v
    }

    pub fn contains(&self, u: VertexId, v: VertexId) -> bool {
        u != v && self.mate.get(u) == Some(&v)
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.mate
            .iter()
            .enumerate()
            .filter(|&(v, &w)| w != v)
            .count()
            / 2
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_perfect(&self) -> bool {
        (0..self.order()).all(|v| self.is_matched(v))
    }

    /// Sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        self.mate
            .iter()
            .enumerate()
            .filter(|&(v, &w)| v < w)
            .map(|(v, &w)| (v, w))
            .collect()
    }

    pub fn exposed(&self) -> VertexSet {
        (0..self.order()).filter(|&v| !self.is_matched(v)).collect()
    }

    /// `M(H)`: matching edges with both endpoints in `within`.
    pub fn edges_within(&self, within: VertexSet) -> Vec<(VertexId, VertexId)> {
        self.edges()
            .into_iter()
            .filter(|&(u, v)| within.contains(u) && within.contains(v))
            .collect()
    }

    /// `self Δ cycle`, where `cycle` is an even cycle of `g` alternating with
    /// respect to `self`. The closing vertex may be repeated at the end.
    pub fn rotate(&self, g: &Graph, cycle: &[VertexId]) -> Result<Matching> {
        let cyc = match cycle {
            [first, .., last] if first == last && cycle.len() > 1 => &cycle[..cycle.len() - 1],
            _ => cycle,
        };
        let k = cyc.len();
        if k < 4 || k % 2 == 1 {
            return Err(Error::Domain(format!(
                "rotation needs an even cycle, got {k} vertices"
            )));
        }
        if cyc.iter().collect::<VertexSet>().len() != k {
            return Err(Error::Domain("rotation cycle repeats a vertex".into()));
        }
        let flags: Vec<bool> = (0..k)
            .map(|i| {
                let (u, v) = (cyc[i], cyc[(i + 1) % k]);
                if !g.has_edge(u, v) {
                    return Err(Error::Domain(format!("{u}-{v} is not an edge")));
                }
                Ok(self.contains(u, v))
            })
            .collect::<Result<_>>()?;
        if (0..k).any(|i| flags[i] == flags[(i + 1) % k]) {
            return Err(Error::Domain("cycle is not alternating".into()));
        }
        let mut out = self.clone();
        for i in 0..k {
            if !flags[i] {
                let (u, v) = (cyc[i], cyc[(i + 1) % k]);
                out.mate[u] = v;
                out.mate[v] = u;
            }
        }
        Ok(out)
    }
}

impl std::fmt::Debug for Matching {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Matching{:?}", self.edges())
    }
}

impl Serialize for Matching {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.edges())
    }
}

/// Edmonds' blossom-contraction search for an augmenting path from `root`.
/// Returns the exposed endpoint reached, with `parent` filled so that
/// [`augment`] can flip the path.
fn search_from(
    g: &Graph,
    mate: &[usize],
    root: VertexId,
    parent: &mut [usize],
) -> Option<VertexId> {
    let n = g.order();
    let mut base: Vec<usize> = (0..n).collect();
    let mut used = vec![false; n];
    parent.fill(NONE);
    let mut queue = VecDeque::from([root]);
    used[root] = true;

    let lca = |base: &[usize], parent: &[usize], mut a: usize, mut b: usize| -> usize {
        let mut seen = vec![false; n];
        loop {
            a = base[a];
            seen[a] = true;
            if mate[a] == NONE {
                break;
            }
            a = parent[mate[a]];
        }
        loop {
            b = base[b];
            if seen[b] {
                return b;
            }
            b = parent[mate[b]];
        }
    };

    fn mark_path(
        base: &[usize],
        parent: &mut [usize],
        mate: &[usize],
        in_blossom: &mut [bool],
        mut v: usize,
        b: usize,
        mut child: usize,
    ) {
        while base[v] != b {
            in_blossom[base[v]] = true;
            in_blossom[base[mate[v]]] = true;
            parent[v] = child;
            child = mate[v];
            v = parent[mate[v]];
        }
    }

    while let Some(v) = queue.pop_front() {
        for to in g.neighbors(v) {
            if base[v] == base[to] || mate[v] == to {
                continue;
            }
            if to == root || (mate[to] != NONE && parent[mate[to]] != NONE) {
                let cur = lca(&base, parent, v, to);
                let mut in_blossom = vec![false; n];
                mark_path(&base, parent, mate, &mut in_blossom, v, cur, to);
                mark_path(&base, parent, mate, &mut in_blossom, to, cur, v);
                for i in 0..n {
                    if in_blossom[base[i]] {
                        base[i] = cur;
                        if !used[i] {
                            used[i] = true;
                            queue.push_back(i);
                        }
                    }
                }
            } else if parent[to] == NONE {
                parent[to] = v;
                if mate[to] == NONE {
                    return Some(to);
                }
                used[mate[to]] = true;
                queue.push_back(mate[to]);
            }
        }
    }
    None
}

fn augment(mate: &mut [usize], parent: &[usize], end: VertexId) {
    let mut v = end;
    while v != NONE {
        let pv = parent[v];
        let next = mate[pv];
        mate[v] = pv;
        mate[pv] = v;
        v = next;
    }
}

fn mate_array(m: &Matching) -> Vec<usize> {
    (0..m.order())
        .map(|v| m.partner(v).unwrap_or(NONE))
        .collect()
}

/// A maximum matching. Exposed vertices are tried as roots in ascending
/// order and neighbours are scanned ascending, so the output is deterministic.
pub fn maximum_matching(g: &Graph) -> Matching {
    let n = g.order();
    let mut mate = vec![NONE; n];
    let mut parent = vec![NONE; n];
    for root in 0..n {
        if mate[root] == NONE {
            if let Some(end) = search_from(g, &mate, root, &mut parent) {
                augment(&mut mate, &parent, end);
            }
        }
    }
    Matching::from_mate_array(&mate)
}

/// `μ(G)`.
pub fn matching_number(g: &Graph) -> usize {
    maximum_matching(g).len()
}

/// True iff `m` admits no augmenting path in `g` (Berge), i.e. `|m| = μ(g)`.
pub fn is_maximum(g: &Graph, m: &Matching) -> Result<bool> {
    m.validate(g)?;
    let mate = mate_array(m);
    let mut parent = vec![NONE; g.order()];
    Ok((0..g.order()).all(|r| mate[r] != NONE || search_from(g, &mate, r, &mut parent).is_none()))
}

/// All maximum matchings of `g`, without duplicates, in a deterministic
/// order.
///
/// Branches on the smallest undecided vertex: leave it exposed (while the
/// deficiency budget `n - 2μ` allows) or match it to each undecided
/// neighbour. Branches whose remaining graph cannot complete a matching of
/// size `μ` are cut.
pub fn enumerate_maximum_matchings(g: &Graph, limits: &Limits) -> Result<Vec<Matching>> {
    let mut out = Vec::new();
    for_each_maximum_matching(g, limits, |m| {
        out.push(m.clone());
        std::ops::ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// Visitor form of [`enumerate_maximum_matchings`]; the visitor may stop the
/// enumeration early.
pub fn for_each_maximum_matching<F>(g: &Graph, limits: &Limits, mut visit: F) -> Result<()>
where
    F: FnMut(&Matching) -> std::ops::ControlFlow<()>,
{
    Limits::check(
        "order for matching enumeration",
        g.order(),
        limits.enumeration_order,
    )?;
    let n = g.order();
    let mu = matching_number(g);
    let mut state = EnumState {
        g,
        mate: vec![NONE; n],
        target: mu,
        count: 0,
        limit: limits.matching_count,
    };
    let budget = n - 2 * mu;
    let undecided = g.vertex_set();
    match state.recurse(undecided, 0, budget, &mut visit) {
        Step::Continue | Step::Stop => Ok(()),
        Step::Overflow => Err(Error::Capacity {
            what: "number of maximum matchings",
            got: limits.matching_count + 1,
            limit: limits.matching_count,
        }),
    }
}

enum Step {
    Continue,
    Stop,
    Overflow,
}

struct EnumState<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    target: usize,
    count: usize,
    limit: usize,
}

impl EnumState<'_> {
    fn recurse<F>(
        &mut self,
        undecided: VertexSet,
        size: usize,
        budget: usize,
        visit: &mut F,
    ) -> Step
    where
        F: FnMut(&Matching) -> std::ops::ControlFlow<()>,
    {
        let Some(v) = undecided.first() else {
            debug_assert_eq!(size, self.target);
            self.count += 1;
            if self.count > self.limit {
                return Step::Overflow;
            }
            return match visit(&Matching::from_mate_array(&self.mate)) {
                std::ops::ControlFlow::Continue(()) => Step::Continue,
                std::ops::ControlFlow::Break(()) => Step::Stop,
            };
        };
        let need = self.target - size;
        if 2 * need > undecided.len() {
            return Step::Continue;
        }
        if need > 0 {
            let (rest, _) = self.g.induced(undecided);
            if matching_number(&rest) < need {
                return Step::Continue;
            }
        }
        let mut rest = undecided;
        rest.remove(v);
        for w in self.g.neighbors(v).intersection(rest) {
            self.mate[v] = w;
            self.mate[w] = v;
            let mut next = rest;
            next.remove(w);
            let step = self.recurse(next, size + 1, budget, visit);
            self.mate[v] = NONE;
            self.mate[w] = NONE;
            if !matches!(step, Step::Continue) {
                return step;
            }
        }
        if budget > 0 {
            return self.recurse(rest, size, budget - 1, visit);
        }
        Step::Continue
    }
}
