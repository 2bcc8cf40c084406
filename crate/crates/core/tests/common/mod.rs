//! Brute-force oracles. None of them reuses the library's search code: they
//! work from the definitions, over explicit subsets, permutations and walks.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use rand::Rng;
use sdgraph::configurations::{is_flower, is_posy, is_tposy, Blossom, Flower, Posy, Tposy};
use sdgraph::{Graph, Matching, VertexId};

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    loop {
        let g = random_graph(rng, n, p);
        if g.is_connected() {
            return g;
        }
    }
}

/// Every matching of `g`, as sorted edge lists.
pub fn all_matchings(g: &Graph) -> Vec<Vec<(VertexId, VertexId)>> {
    fn rec(
        edges: &[(VertexId, VertexId)],
        i: usize,
        used: u64,
        cur: &mut Vec<(VertexId, VertexId)>,
        out: &mut Vec<Vec<(VertexId, VertexId)>>,
    ) {
        if i == edges.len() {
            out.push(cur.clone());
            return;
        }
        rec(edges, i + 1, used, cur, out);
        let (u, v) = edges[i];
        if used >> u & 1 == 0 && used >> v & 1 == 0 {
            cur.push((u, v));
            rec(edges, i + 1, used | 1 << u | 1 << v, cur, out);
            cur.pop();
        }
    }
    let edges = g.edges();
    let mut out = Vec::new();
    rec(&edges, 0, 0, &mut Vec::new(), &mut out);
    out
}

pub fn brute_matching_number(g: &Graph) -> usize {
    all_matchings(g).iter().map(|m| m.len()).max().unwrap_or(0)
}

pub fn brute_maximum_matchings(g: &Graph) -> BTreeSet<Vec<(VertexId, VertexId)>> {
    let all = all_matchings(g);
    let mu = all.iter().map(|m| m.len()).max().unwrap_or(0);
    all.into_iter().filter(|m| m.len() == mu).collect()
}

pub fn brute_alpha(g: &Graph) -> usize {
    let n = g.order();
    (0u64..1 << n)
        .filter(|&s| (0..n).all(|v| s >> v & 1 == 0 || g.neighbors(v).bits() & s == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Endpoint-parity pairs `(vertex, last edge matched)` reachable from `from`
/// by alternating walks of exactly `1..=max_len` edges whose first edge has
/// the given parity, computed layer by layer.
pub fn bounded_walk_ends(
    g: &Graph,
    m: &Matching,
    from: VertexId,
    first_matched: bool,
    max_len: usize,
) -> HashSet<(VertexId, bool)> {
    let mut layer: HashSet<(VertexId, bool)> = HashSet::new();
    for w in g.neighbors(from) {
        if m.contains(from, w) == first_matched {
            layer.insert((w, first_matched));
        }
    }
    let mut seen = layer.clone();
    for _ in 1..max_len {
        let mut next = HashSet::new();
        for &(v, last) in &layer {
            for w in g.neighbors(v) {
                if m.contains(v, w) != last {
                    next.insert((w, !last));
                }
            }
        }
        seen.extend(next.iter().copied());
        layer = next;
    }
    seen
}

/// Every simple cycle of `g`, each once, as a vertex list starting at its
/// smallest vertex with `c[1] < c[last]`.
pub fn simple_cycles(g: &Graph) -> Vec<Vec<VertexId>> {
    fn rec(g: &Graph, start: VertexId, path: &mut Vec<VertexId>, out: &mut Vec<Vec<VertexId>>) {
        let cur = *path.last().unwrap();
        for w in g.neighbors(cur) {
            if w == start && path.len() >= 3 && path[1] < cur {
                out.push(path.clone());
            }
            if w > start && !path.contains(&w) {
                path.push(w);
                rec(g, start, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    for s in g.vertices() {
        rec(g, s, &mut vec![s], &mut out);
    }
    out
}

/// Blossoms by definition: odd cycles of length `2k + 1` with `k` matched
/// edges, as (base, vertex set).
pub fn brute_blossoms(g: &Graph, m: &Matching) -> BTreeSet<(VertexId, Vec<VertexId>)> {
    simple_cycles(g)
        .into_iter()
        .filter(|c| c.len() % 2 == 1)
        .filter_map(|c| {
            let k = c.len();
            let matched = (0..k).filter(|&i| m.contains(c[i], c[(i + 1) % k])).count();
            if matched != k / 2 {
                return None;
            }
            let base = *c.iter().find(|&&v| {
                (0..k).all(|i| {
                    let (a, b) = (c[i], c[(i + 1) % k]);
                    !(m.contains(a, b) && (a == v || b == v))
                })
            })?;
            let mut s = c.clone();
            s.sort_unstable();
            Some((base, s))
        })
        .collect()
}

/// Blossom objects for the cycles found by [`simple_cycles`].
pub fn brute_blossom_objects(g: &Graph, m: &Matching) -> Vec<Blossom> {
    simple_cycles(g)
        .into_iter()
        .filter_map(|c| Blossom::new(g, m, c).ok())
        .collect()
}

/// Every simple alternating path of `g` starting at `from` with a matched
/// edge, including `[from]`.
pub fn alternating_paths_from(g: &Graph, m: &Matching, from: VertexId) -> Vec<Vec<VertexId>> {
    fn rec(
        g: &Graph,
        m: &Matching,
        matched: bool,
        path: &mut Vec<VertexId>,
        out: &mut Vec<Vec<VertexId>>,
    ) {
        out.push(path.clone());
        let cur = *path.last().unwrap();
        for w in g.neighbors(cur) {
            if m.contains(cur, w) == matched && !path.contains(&w) {
                path.push(w);
                rec(g, m, !matched, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(g, m, true, &mut vec![from], &mut out);
    out
}

fn set_of(vs: impl IntoIterator<Item = VertexId>) -> u64 {
    vs.into_iter().fold(0, |s, v| s | 1 << v)
}

/// Union of all (blossom, stem) pairs accepted by the flower predicate.
/// Candidate stems are the alternating paths leaving the base.
pub fn brute_flower_vertices(g: &Graph, m: &Matching) -> u64 {
    let mut acc = 0;
    for b in brute_blossom_objects(g, m) {
        for p in alternating_paths_from(g, m, b.base()) {
            let f = Flower {
                blossom: b.clone(),
                stem: p,
            };
            if is_flower(g, m, &f) {
                acc |= f.vertex_set().bits();
            }
        }
    }
    acc
}

/// Unions over all (blossom, blossom, simple path) triples accepted by the
/// posy and Tposy predicates. Candidate links are the alternating paths whose
/// end edges are both matched.
pub fn brute_posy_vertices(g: &Graph, m: &Matching) -> (u64, u64) {
    let bs = brute_blossom_objects(g, m);
    let bases: BTreeSet<VertexId> = bs.iter().map(|b| b.base()).collect();
    let (mut posy, mut tposy) = (0, 0);
    for &b in &bases {
        for p in alternating_paths_from(g, m, b) {
            let k = p.len();
            if k < 2 || !m.contains(p[0], p[1]) || !m.contains(p[k - 2], p[k - 1]) {
                continue;
            }
            if !bases.contains(&p[k - 1]) {
                continue;
            }
            for b1 in bs.iter().filter(|x| x.base() == b) {
                for b2 in bs.iter().filter(|x| x.base() == p[k - 1]) {
                    let x = Posy {
                        blossom1: b1.clone(),
                        blossom2: b2.clone(),
                        link: p.clone(),
                    };
                    if is_posy(g, m, &x) {
                        posy |= x.vertex_set().bits();
                    }
                    let t = Tposy {
                        blossom1: b1.clone(),
                        blossom2: b2.clone(),
                        link: p.clone(),
                    };
                    if is_tposy(g, m, &t) {
                        tposy |= t.vertex_set().bits();
                    }
                }
            }
        }
    }
    (posy, tposy)
}

/// Explores alternating walks as (position, parity of the next edge, vertices
/// visited so far); every distinct such triple is visited once, so this
/// enumerates the vertex sets of walks of any length. Returns (vertex set, end)
/// for walks that start at `from` with a matched edge (or are trivial, if
/// `accept_trivial`) and stop at a vertex accepted by `accept` right after an
/// edge of parity `last_matched`.
fn walk_vertex_sets(
    g: &Graph,
    m: &Matching,
    from: VertexId,
    last_matched: bool,
    accept: &dyn Fn(VertexId) -> bool,
    accept_trivial: bool,
) -> HashSet<(u64, VertexId)> {
    let mut found = HashSet::new();
    if accept_trivial && accept(from) {
        found.insert((1 << from, from));
    }
    let mut seen: HashSet<(VertexId, bool, u64)> = HashSet::new();
    let mut stack = vec![(from, true, 1u64 << from)];
    while let Some((v, next_matched, visited)) = stack.pop() {
        if !seen.insert((v, next_matched, visited)) {
            continue;
        }
        for w in g.neighbors(v) {
            if m.contains(v, w) != next_matched {
                continue;
            }
            let vis = visited | 1 << w;
            if next_matched == last_matched && accept(w) {
                found.insert((vis, w));
            }
            stack.push((w, !next_matched, vis));
        }
    }
    found
}

fn blossom_union_at(bs: &[Blossom], b: VertexId) -> u64 {
    bs.iter()
        .filter(|x| x.base() == b)
        .fold(0, |acc, x| acc | x.vertex_set().bits())
}

/// Union over Jflowers: a blossom plus a walk from its base, first edge
/// matched, to an unmatched vertex (or the trivial walk at an unmatched base).
pub fn brute_jflower_vertices(g: &Graph, m: &Matching) -> u64 {
    let bs = brute_blossom_objects(g, m);
    let bases = set_of(bs.iter().map(|b| b.base()));
    let mut acc = 0;
    for b in (0..g.order()).filter(|&b| bases >> b & 1 == 1) {
        for (s, _) in walk_vertex_sets(g, m, b, false, &|w| !m.is_matched(w), true) {
            acc |= s | blossom_union_at(&bs, b);
        }
    }
    acc
}

/// Union over Jposies: two blossoms and an mm walk between their bases.
pub fn brute_jposy_vertices(g: &Graph, m: &Matching) -> u64 {
    let bs = brute_blossom_objects(g, m);
    let bases = set_of(bs.iter().map(|b| b.base()));
    let mut acc = 0;
    for b in (0..g.order()).filter(|&b| bases >> b & 1 == 1) {
        for (s, end) in walk_vertex_sets(g, m, b, true, &|w| bases >> w & 1 == 1, false) {
            acc |= s | blossom_union_at(&bs, b) | blossom_union_at(&bs, end);
        }
    }
    acc
}

/// Random alternating walk from a random vertex, cut at its first return to
/// the start that closes an odd walk (last edge of the same parity as the
/// first). `None` if no such return happens within `max_len` steps.
pub fn random_closed_odd_walk<R: Rng>(
    rng: &mut R,
    g: &Graph,
    m: &Matching,
    max_len: usize,
) -> Option<Vec<VertexId>> {
    let start = rng.gen_range(0..g.order());
    let first_matched = rng.gen_bool(0.5);
    let mut walk = vec![start];
    let mut matched = first_matched;
    while walk.len() <= max_len {
        let cur = *walk.last().unwrap();
        let opts: Vec<VertexId> = g
            .neighbors(cur)
            .iter()
            .filter(|&w| m.contains(cur, w) == matched)
            .collect();
        if opts.is_empty() {
            return None;
        }
        let w = opts[rng.gen_range(0..opts.len())];
        walk.push(w);
        if w == start && walk.len() % 2 == 0 {
            return Some(walk);
        }
        matched = !matched;
    }
    None
}

/// Components of `a Δ b` that are cycles, each closed (first vertex repeated).
pub fn difference_cycles(g: &Graph, a: &Matching, b: &Matching) -> Vec<Vec<VertexId>> {
    let mut seen = 0u64;
    let mut out = Vec::new();
    for s in g.vertices() {
        if seen >> s & 1 == 1 || a.partner(s) == b.partner(s) {
            continue;
        }
        let (Some(_), Some(_)) = (a.partner(s), b.partner(s)) else {
            continue;
        };
        let mut cyc = vec![s];
        let mut cur = s;
        let mut use_a = true;
        let closed = loop {
            let next = if use_a {
                a.partner(cur)
            } else {
                b.partner(cur)
            };
            let Some(next) = next else { break false };
            use_a = !use_a;
            cyc.push(next);
            if next == s {
                break true;
            }
            cur = next;
        };
        for &v in &cyc {
            seen |= 1 << v;
        }
        if closed {
            out.push(cyc);
        }
    }
    out
}
