//! Jflowers and Jposies. Their walks may repeat vertices, so both are decided
//! exactly by reachability in the state digraph: a state lies on some
//! qualifying walk iff it is reachable from a start state and can reach an end
//! state.

use crate::alternating::{state, state_vertices, Parity, StateDigraph, StateSet};
use crate::graph::{Graph, VertexId};
use crate::matching::Matching;
use crate::vertex_set::VertexSet;

use super::{Blossom, BlossomIndex, Jflower, Jposy};

struct Reach {
    sd: StateDigraph,
    starts: StateSet,
    ends: StateSet,
    fwd: StateSet,
    bwd: StateSet,
}

impl Reach {
    fn new(sd: StateDigraph, starts: StateSet, ends: StateSet) -> Reach {
        let fwd = sd.forward(starts);
        let bwd = sd.backward(ends);
        Reach {
            sd,
            starts,
            ends,
            fwd,
            bwd,
        }
    }

    fn has(set: StateSet, s: usize) -> bool {
        set >> s & 1 == 1
    }

    /// A walk from `from` through the state `s` to an end state.
    fn walk_through(&self, s: usize) -> Option<Vec<VertexId>> {
        let mut a = self.sd.shortest_walk(self.starts, 1 << s, false)?;
        let b = self.sd.shortest_walk(1 << s, self.ends, false)?;
        a.extend_from_slice(&b[1..]);
        Some(a)
    }
}

fn base_states(bases: VertexSet, p: Parity) -> StateSet {
    bases.iter().fold(0, |acc, b| acc | 1 << state(b, p))
}

/// Starts `(b, matched)` at bases, ends `(w, matched)` at unmatched vertices.
fn jflower_reach(g: &Graph, m: &Matching, idx: &BlossomIndex) -> Reach {
    let starts = base_states(idx.bases(), Parity::Matched);
    let ends = base_states(m.exposed(), Parity::Matched);
    Reach::new(StateDigraph::new(g, m), starts, ends)
}

/// Starts `(b, matched)`, ends `(b', unmatched)`: walks leave a base and
/// enter a base through matched edges.
fn jposy_reach(g: &Graph, m: &Matching, idx: &BlossomIndex) -> Reach {
    let starts = base_states(idx.bases(), Parity::Matched);
    let ends = base_states(idx.bases(), Parity::Unmatched);
    Reach::new(StateDigraph::new(g, m), starts, ends)
}

pub fn jflower_vertices(g: &Graph, m: &Matching) -> VertexSet {
    jflower_vertices_in(g, m, &BlossomIndex::new(g, m))
}

pub(crate) fn jflower_vertices_in(g: &Graph, m: &Matching, idx: &BlossomIndex) -> VertexSet {
    let r = jflower_reach(g, m, idx);
    let mut acc = state_vertices(r.fwd & r.bwd);
    for b in idx.bases() {
        if Reach::has(r.bwd, state(b, Parity::Matched)) {
            acc = acc.union(idx.union_at(b));
        }
    }
    acc
}

pub fn exists_jflower(g: &Graph, m: &Matching) -> bool {
    let idx = BlossomIndex::new(g, m);
    let r = jflower_reach(g, m, &idx);
    r.bwd & r.starts != 0
}

pub fn find_jflower(g: &Graph, m: &Matching) -> Option<Jflower> {
    let idx = BlossomIndex::new(g, m);
    let r = jflower_reach(g, m, &idx);
    let b = idx
        .bases()
        .iter()
        .find(|&b| Reach::has(r.bwd, state(b, Parity::Matched)))?;
    let walk =
        r.sd.shortest_walk(1 << state(b, Parity::Matched), r.ends, false)?;
    Some(Jflower {
        blossom: idx.at(b)[0].clone(),
        walk,
    })
}

pub fn find_jflower_containing(
    g: &Graph,
    m: &Matching,
    idx: &BlossomIndex,
    v: VertexId,
) -> Option<Jflower> {
    let r = jflower_reach(g, m, idx);
    for b in idx.bases() {
        let s = state(b, Parity::Matched);
        if !Reach::has(r.bwd, s) {
            continue;
        }
        if let Some(bl) = containing(idx.at(b), v) {
            return Some(Jflower {
                blossom: bl.clone(),
                walk: r.sd.shortest_walk(1 << s, r.ends, false)?,
            });
        }
    }
    for p in [Parity::Matched, Parity::Unmatched] {
        let s = state(v, p);
        if Reach::has(r.fwd & r.bwd, s) {
            let walk = r.walk_through(s)?;
            return Some(Jflower {
                blossom: idx.at(walk[0])[0].clone(),
                walk,
            });
        }
    }
    None
}

pub fn jposy_vertices(g: &Graph, m: &Matching) -> VertexSet {
    jposy_vertices_in(g, m, &BlossomIndex::new(g, m))
}

pub(crate) fn jposy_vertices_in(g: &Graph, m: &Matching, idx: &BlossomIndex) -> VertexSet {
    let r = jposy_reach(g, m, idx);
    let mut acc = state_vertices(r.fwd & r.bwd);
    for b in idx.bases() {
        if Reach::has(r.bwd, state(b, Parity::Matched))
            || Reach::has(r.fwd, state(b, Parity::Unmatched))
        {
            acc = acc.union(idx.union_at(b));
        }
    }
    acc
}

pub fn exists_jposy(g: &Graph, m: &Matching) -> bool {
    let idx = BlossomIndex::new(g, m);
    let r = jposy_reach(g, m, &idx);
    r.fwd & r.ends != 0
}

pub fn find_jposy(g: &Graph, m: &Matching) -> Option<Jposy> {
    let idx = BlossomIndex::new(g, m);
    let r = jposy_reach(g, m, &idx);
    let b = idx
        .bases()
        .iter()
        .find(|&b| Reach::has(r.bwd, state(b, Parity::Matched)))?;
    let walk =
        r.sd.shortest_walk(1 << state(b, Parity::Matched), r.ends, false)?;
    let b2 = *walk.last().unwrap();
    Some(Jposy {
        blossom1: idx.at(b)[0].clone(),
        blossom2: idx.at(b2)[0].clone(),
        walk,
    })
}

pub fn find_jposy_containing(
    g: &Graph,
    m: &Matching,
    idx: &BlossomIndex,
    v: VertexId,
) -> Option<Jposy> {
    let r = jposy_reach(g, m, idx);
    for b in idx.bases() {
        let Some(bl) = containing(idx.at(b), v) else {
            continue;
        };
        let out = state(b, Parity::Matched);
        if Reach::has(r.bwd, out) {
            let walk = r.sd.shortest_walk(1 << out, r.ends, false)?;
            let b2 = *walk.last().unwrap();
            return Some(Jposy {
                blossom1: bl.clone(),
                blossom2: idx.at(b2)[0].clone(),
                walk,
            });
        }
        let inn = state(b, Parity::Unmatched);
        if Reach::has(r.fwd, inn) {
            let walk = r.sd.shortest_walk(r.starts, 1 << inn, false)?;
            return Some(Jposy {
                blossom1: idx.at(walk[0])[0].clone(),
                blossom2: bl.clone(),
                walk,
            });
        }
    }
    for p in [Parity::Matched, Parity::Unmatched] {
        let s = state(v, p);
        if Reach::has(r.fwd & r.bwd, s) {
            let walk = r.walk_through(s)?;
            let b2 = *walk.last().unwrap();
            return Some(Jposy {
                blossom1: idx.at(walk[0])[0].clone(),
                blossom2: idx.at(b2)[0].clone(),
                walk,
            });
        }
    }
    None
}

fn containing(bs: &[Blossom], v: VertexId) -> Option<&Blossom> {
    bs.iter().find(|b| b.vertex_set().contains(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle};

    #[test]
    fn c5_jflower_and_no_jposy() {
        let g = cycle(5).unwrap();
        let m = Matching::from_edges(&g, &[(1, 2), (3, 4)]).unwrap();
        assert_eq!(jflower_vertices(&g, &m), g.vertex_set());
        let j = find_jflower(&g, &m).unwrap();
        j.validate(&g, &m).unwrap();
        assert_eq!(j.walk, vec![0]);
        assert!(!exists_jposy(&g, &m));
        assert!(jposy_vertices(&g, &m).is_empty());
    }

    #[test]
    fn k4_jposy() {
        let g = complete(4).unwrap();
        let m = Matching::from_edges(&g, &[(0, 1), (2, 3)]).unwrap();
        assert!(exists_jposy(&g, &m));
        find_jposy(&g, &m).unwrap().validate(&g, &m).unwrap();
        assert_eq!(jposy_vertices(&g, &m), g.vertex_set());
        assert!(jflower_vertices(&g, &m).is_empty());
        let idx = BlossomIndex::new(&g, &m);
        for v in g.vertices() {
            let j = find_jposy_containing(&g, &m, &idx, v).unwrap();
            j.validate(&g, &m).unwrap();
            assert!(j.vertex_set().contains(v));
        }
    }
}
