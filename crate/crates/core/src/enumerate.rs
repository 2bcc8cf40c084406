//! Canonical labelling and exhaustive generation of small graphs.
//!
//! Canonical form: individualization-refinement. Colour refinement splits
//! cells by neighbour counts per cell until the colouring is equitable; the
//! first smallest non-singleton cell is then individualized vertex by vertex.
//! Each discrete colouring is a labelling, and the canonical code is the
//! smallest adjacency code over all leaves. Leaves that reproduce a known code
//! yield automorphisms, used to skip sibling branches in the same orbit.

use rayon::prelude::*;
use std::collections::HashSet;

use crate::error::Result;
use crate::graph::Graph;
use crate::limits::Limits;
use crate::vertex_set::VertexSet;

/// Largest order accepted by [`canonical_code`] (the code is a `u128`).
pub const CANON_MAX_ORDER: usize = 16;

/// Upper-triangle adjacency code of `g` relabelled by `lab` (vertex `v` gets
/// label `lab[v]`). Bit `k` for the `k`-th pair in order `(0,1), (0,2),
/// (1,2), (0,3), ...` of labels.
fn code_of(g: &Graph, lab: &[usize]) -> u128 {
    let n = g.order();
    let mut inv = [0usize; CANON_MAX_ORDER];
    for (v, &l) in lab.iter().enumerate() {
        inv[l] = v;
    }
    let mut code = 0u128;
    let mut k = 0;
    for j in 1..n {
        let row = g.neighbors(inv[j]).bits();
        for &vi in &inv[..j] {
            if row >> vi & 1 == 1 {
                code |= 1 << k;
            }
            k += 1;
        }
    }
    code
}

/// Refines `col` (colours `0..k`, every colour used) to the coarsest equitable
/// colouring below it. Colours are renumbered by sorted signature, so the
/// result depends only on the isomorphism class of `(g, col)`.
fn refine(g: &Graph, col: &mut [usize]) {
    let n = g.order();
    let mut ncol = col.iter().max().map_or(0, |&c| c + 1);
    loop {
        let mut cells = vec![0u64; ncol];
        for (v, &c) in col.iter().enumerate() {
            cells[c] |= 1 << v;
        }
        let mut sig: Vec<(Vec<u32>, usize)> = (0..n)
            .map(|v| {
                let row = g.neighbors(v).bits();
                let mut s = Vec::with_capacity(ncol + 1);
                s.push(col[v] as u32);
                s.extend(cells.iter().map(|&c| (row & c).count_ones()));
                (s, v)
            })
            .collect();
        sig.sort_unstable();
        let mut next = 0;
        for i in 0..n {
            if i > 0 && sig[i].0 != sig[i - 1].0 {
                next += 1;
            }
            col[sig[i].1] = next;
        }
        let k = next + 1;
        if k == ncol || n == 0 {
            return;
        }
        ncol = k;
    }
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(u128, Vec<usize>)>,
    first: Option<(u128, Vec<usize>)>,
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn leaf(&mut self, lab: &[usize]) {
        let code = code_of(self.g, lab);
        if self.first.is_none() {
            self.first = Some((code, lab.to_vec()));
        }
        for known in [&self.first, &self.best].into_iter().flatten() {
            if known.0 == code && known.1 != lab {
                self.autos.push(automorphism(&known.1, lab));
                break;
            }
        }
        if self.best.as_ref().is_none_or(|b| code < b.0) {
            self.best = Some((code, lab.to_vec()));
        }
    }

    fn node(&mut self, col: &[usize], prefix: &mut Vec<usize>) {
        let n = self.g.order();
        let ncol = col.iter().max().map_or(0, |&c| c + 1);
        if ncol == n {
            self.leaf(col);
            return;
        }
        let mut size = vec![0usize; ncol];
        for &c in col {
            size[c] += 1;
        }
        let target = (0..ncol)
            .filter(|&c| size[c] > 1)
            .min_by_key(|&c| (size[c], c))
            .unwrap();
        let cell: Vec<usize> = (0..n).filter(|&v| col[v] == target).collect();
        let mut done: Vec<usize> = Vec::new();
        for &v in &cell {
            if !done.is_empty() && self.same_orbit(prefix, &done, v) {
                continue;
            }
            done.push(v);
            // Individualize v: it keeps colour `target`, the rest of its cell
            // and every higher colour shift up by one.
            let mut c2: Vec<usize> = col
                .iter()
                .enumerate()
                .map(|(u, &c)| {
                    if c > target || (c == target && u != v) {
                        c + 1
                    } else {
                        c
                    }
                })
                .collect();
            refine(self.g, &mut c2);
            prefix.push(v);
            self.node(&c2, prefix);
            prefix.pop();
        }
    }

    /// Whether `v` is in the orbit of a vertex of `done` under the group
    /// generated by the known automorphisms fixing `prefix` pointwise.
    fn same_orbit(&self, prefix: &[usize], done: &[usize], v: usize) -> bool {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for a in &self.autos {
            if prefix.iter().any(|&p| a[p] != p) {
                continue;
            }
            for (x, &ax) in a.iter().enumerate() {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, ax));
                if rx != ry {
                    parent[rx] = ry;
                }
            }
        }
        let rv = find(&mut parent, v);
        done.iter().any(|&d| find(&mut parent, d) == rv)
    }
}

/// `a` with `lab1[v] = lab2[a(v)]`: maps each vertex to the vertex carrying
/// the same label in the other leaf.
fn automorphism(lab1: &[usize], lab2: &[usize]) -> Vec<usize> {
    let mut inv2 = vec![0; lab2.len()];
    for (v, &l) in lab2.iter().enumerate() {
        inv2[l] = v;
    }
    lab1.iter().map(|&l| inv2[l]).collect()
}

/// Canonical labelling: `lab[v]` is the canonical label of vertex `v`.
pub fn canonical_labelling(g: &Graph) -> Result<Vec<usize>> {
    Limits::check("graph order for canonical form", g.order(), CANON_MAX_ORDER)?;
    let mut col = vec![0; g.order()];
    refine(g, &mut col);
    let mut s = Search {
        g,
        best: None,
        first: None,
        autos: Vec::new(),
    };
    s.node(&col, &mut Vec::new());
    Ok(s.best.map_or_else(Vec::new, |b| b.1))
}

/// Isomorphism-invariant code; equal codes (at equal order) iff isomorphic.
pub fn canonical_code(g: &Graph) -> Result<u128> {
    Ok(code_of(g, &canonical_labelling(g)?))
}

pub fn canonical_form(g: &Graph) -> Result<Graph> {
    let lab = canonical_labelling(g)?;
    Ok(g.permuted(&lab))
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    Ok(g.order() == h.order() && g.size() == h.size() && canonical_code(g)? == canonical_code(h)?)
}

/// One representative per isomorphism class of graphs of order `n`, each in
/// canonical form, sorted by code.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    grow(n, false)
}

/// One canonical representative per isomorphism class of connected graphs of
/// order `n`. The empty graph (order 0) is not counted as connected.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Ok(Vec::new());
    }
    grow(n, true)
}

/// All connected graphs of orders `1..=max_order`, by increasing order.
pub fn connected_graphs_up_to(max_order: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    let mut layer = Vec::new();
    for n in 1..=max_order {
        layer = if n == 1 {
            grow(1, true)?
        } else {
            extend_layer(&layer, true)?
        };
        out.extend(layer.iter().cloned());
    }
    Ok(out)
}

fn grow(n: usize, connected: bool) -> Result<Vec<Graph>> {
    Limits::check("generation order", n, CANON_MAX_ORDER)?;
    let mut layer = vec![Graph::empty(0)?];
    for _ in 0..n {
        layer = extend_layer(&layer, connected)?;
    }
    Ok(layer)
}

/// Every graph of the next order arises from one of the current order by
/// adding a vertex (for connected graphs: a non-cut vertex, with a nonempty
/// neighbourhood, except when growing from order 0).
fn extend_layer(layer: &[Graph], connected: bool) -> Result<Vec<Graph>> {
    let codes: HashSet<u128> = layer
        .par_iter()
        .flat_map_iter(|g| {
            let n = g.order();
            let lo = if connected && n > 0 { 1u64 } else { 0 };
            (lo..1u64 << n).map(move |nb| {
                let edges: Vec<_> = VertexSet::from_bits(nb).iter().map(|u| (u, n)).collect();
                let h = g.with_isolated(1).and_then(|h| h.with_edges(&edges))?;
                canonical_code(&h)
            })
        })
        .collect::<Result<_>>()?;
    let mut codes: Vec<_> = codes.into_iter().collect();
    codes.sort_unstable();
    let n = layer.first().map_or(0, |g| g.order()) + 1;
    codes.into_iter().map(|c| graph_from_code(n, c)).collect()
}

fn graph_from_code(n: usize, code: u128) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> k & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path};

    #[test]
    fn isomorphic_relabellings_agree() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)]).unwrap();
        let perm = [3, 5, 0, 1, 4, 2];
        assert!(are_isomorphic(&g, &g.permuted(&perm)).unwrap());
        assert!(!are_isomorphic(&cycle(6).unwrap(), &path(6).unwrap()).unwrap());
        // C6 vs two disjoint triangles: same degree sequence.
        let tt = cycle(3)
            .unwrap()
            .disjoint_union(&cycle(3).unwrap())
            .unwrap();
        assert!(!are_isomorphic(&cycle(6).unwrap(), &tt).unwrap());
        assert_eq!(
            canonical_form(&complete(5).unwrap()).unwrap(),
            complete(5).unwrap()
        );
    }

    #[test]
    fn small_counts() {
        let all: Vec<usize> = (0..=6).map(|n| all_graphs(n).unwrap().len()).collect();
        assert_eq!(all, vec![1, 1, 2, 4, 11, 34, 156]);
        let conn: Vec<usize> = (1..=6)
            .map(|n| connected_graphs(n).unwrap().len())
            .collect();
        assert_eq!(conn, vec![1, 1, 2, 6, 21, 112]);
        assert_eq!(connected_graphs_up_to(5).unwrap().len(), 1 + 1 + 2 + 6 + 21);
    }
}
