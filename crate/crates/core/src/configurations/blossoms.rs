use crate::error::Result;
use crate::graph::{Graph, VertexId};
use crate::limits::Limits;
use crate::matching::Matching;
use crate::vertex_set::VertexSet;

use super::Blossom;

/// Every blossom relative to `m`, grouped by base.
#[derive(Clone, Debug)]
pub struct BlossomIndex {
    by_base: Vec<Vec<Blossom>>,
    union: Vec<VertexSet>,
    bases: VertexSet,
}

impl BlossomIndex {
    pub fn new(g: &Graph, m: &Matching) -> BlossomIndex {
        let n = g.order();
        let mut by_base = vec![Vec::new(); n];
        let mut union = vec![VertexSet::EMPTY; n];
        let mut bases = VertexSet::EMPTY;
        for b in g.vertices() {
            blossoms_at(g, m, b, &mut by_base[b]);
            if !by_base[b].is_empty() {
                bases.insert(b);
                union[b] = by_base[b]
                    .iter()
                    .fold(VertexSet::EMPTY, |s, x| s.union(x.vertex_set()));
            }
        }
        BlossomIndex {
            by_base,
            union,
            bases,
        }
    }

    pub fn bases(&self) -> VertexSet {
        self.bases
    }

    pub fn at(&self, base: VertexId) -> &[Blossom] {
        &self.by_base[base]
    }

    /// Union of the vertex sets of all blossoms with this base.
    pub fn union_at(&self, base: VertexId) -> VertexSet {
        self.union[base]
    }

    /// Blossoms at `base` whose vertex set avoids `avoid`.
    pub fn avoiding(&self, base: VertexId, avoid: VertexSet) -> impl Iterator<Item = &Blossom> {
        self.by_base[base]
            .iter()
            .filter(move |b| b.vertex_set().is_disjoint(avoid))
    }

    pub fn union_avoiding(&self, base: VertexId, avoid: VertexSet) -> VertexSet {
        self.avoiding(base, avoid)
            .fold(VertexSet::EMPTY, |s, b| s.union(b.vertex_set()))
    }

    pub fn all(&self) -> impl Iterator<Item = &Blossom> {
        self.by_base.iter().flatten()
    }
}

/// All blossoms relative to `m`, ordered by base and then by cycle.
pub fn enumerate_blossoms(g: &Graph, m: &Matching, limits: &Limits) -> Result<Vec<Blossom>> {
    Limits::check("graph order", g.order(), limits.enumeration_order)?;
    m.validate(g)?;
    let mut out = Vec::new();
    for b in g.vertices() {
        let start = out.len();
        blossoms_at(g, m, b, &mut out);
        out[start..].sort();
    }
    Ok(out)
}

/// Cycles `b, x1, M(x1), x2, M(x2), ..., b`: each step out of a vertex is an
/// unmatched edge followed by the forced matched edge.
fn blossoms_at(g: &Graph, m: &Matching, b: VertexId, out: &mut Vec<Blossom>) {
    let mut on = VertexSet::singleton(b);
    if let Some(mb) = m.partner(b) {
        on.insert(mb);
    }
    let mut path = vec![b];
    extend(g, m, b, &mut path, &mut on, out);
}

fn extend(
    g: &Graph,
    m: &Matching,
    b: VertexId,
    path: &mut Vec<VertexId>,
    on: &mut VertexSet,
    out: &mut Vec<Blossom>,
) {
    let cur = *path.last().unwrap();
    for x in g.neighbors(cur).difference(*on) {
        let Some(y) = m.partner(x) else { continue };
        if on.contains(y) {
            continue;
        }
        path.extend([x, y]);
        on.insert(x);
        on.insert(y);
        if g.has_edge(y, b) && path[1] < y {
            out.push(Blossom {
                base: b,
                cycle: path.clone(),
            });
        }
        extend(g, m, b, path, on, out);
        path.truncate(path.len() - 2);
        on.remove(x);
        on.remove(y);
    }
}
