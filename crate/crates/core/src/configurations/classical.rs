use std::ops::ControlFlow;

use crate::alternating::{for_each_alternating_path, Parity};
use crate::graph::{Graph, VertexId};
use crate::matching::Matching;
use crate::vertex_set::VertexSet;

use super::{link_interior, BlossomIndex, Flower, Posy, Tposy};

/// Every stem from `b`: simple alternating paths from `b` starting with a
/// matched edge and ending at an unmatched vertex, or `[b]` when `b` is
/// unmatched.
pub fn stems_from(g: &Graph, m: &Matching, b: VertexId) -> Vec<Vec<VertexId>> {
    let mut out = Vec::new();
    let _ = each_stem(g, m, b, |s| {
        out.push(s.to_vec());
        ControlFlow::Continue(())
    });
    out
}

fn each_stem<F>(g: &Graph, m: &Matching, b: VertexId, mut f: F) -> ControlFlow<()>
where
    F: FnMut(&[VertexId]) -> ControlFlow<()>,
{
    if !m.is_matched(b) {
        return f(&[b]);
    }
    for_each_alternating_path(g, m, b, Parity::Matched, VertexSet::EMPTY, |p, last| {
        if last == Parity::Unmatched && !m.is_matched(*p.last().unwrap()) {
            f(p)
        } else {
            ControlFlow::Continue(())
        }
    })
}

/// Calls `f(blossom, stem)` for every flower.
pub fn for_each_flower<F>(g: &Graph, m: &Matching, idx: &BlossomIndex, mut f: F) -> ControlFlow<()>
where
    F: FnMut(&super::Blossom, &[VertexId]) -> ControlFlow<()>,
{
    for b in idx.bases() {
        each_stem(g, m, b, |stem| {
            let tail: VertexSet = stem[1..].iter().collect();
            for bl in idx.avoiding(b, tail) {
                f(bl, stem)?;
            }
            ControlFlow::Continue(())
        })?;
    }
    ControlFlow::Continue(())
}

pub fn find_flowers(g: &Graph, m: &Matching) -> Vec<Flower> {
    let idx = BlossomIndex::new(g, m);
    let mut out = Vec::new();
    let _ = for_each_flower(g, m, &idx, |bl, stem| {
        out.push(Flower {
            blossom: bl.clone(),
            stem: stem.to_vec(),
        });
        ControlFlow::Continue(())
    });
    out
}

pub fn flower_vertices(g: &Graph, m: &Matching) -> VertexSet {
    flower_vertices_in(g, m, &BlossomIndex::new(g, m))
}

pub(crate) fn flower_vertices_in(g: &Graph, m: &Matching, idx: &BlossomIndex) -> VertexSet {
    let mut acc = VertexSet::EMPTY;
    for b in idx.bases() {
        let _ = each_stem(g, m, b, |stem| {
            let s: VertexSet = stem.iter().collect();
            let petals = idx.union_avoiding(b, s.difference(VertexSet::singleton(b)));
            if !petals.is_empty() {
                acc = acc.union(petals).union(s);
            }
            ControlFlow::Continue(())
        });
    }
    acc
}

pub fn find_flower_containing(
    g: &Graph,
    m: &Matching,
    idx: &BlossomIndex,
    v: VertexId,
) -> Option<Flower> {
    let mut found = None;
    let _ = for_each_flower(g, m, idx, |bl, stem| {
        if bl.vertex_set().contains(v) || stem.contains(&v) {
            found = Some(Flower {
                blossom: bl.clone(),
                stem: stem.to_vec(),
            });
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    found
}

/// Calls `f(link)` for every simple mm-alternating path between two distinct
/// blossom bases. Each link is reported once, from the smaller base to the
/// larger.
pub fn for_each_link<F>(g: &Graph, m: &Matching, idx: &BlossomIndex, mut f: F) -> ControlFlow<()>
where
    F: FnMut(&[VertexId]) -> ControlFlow<()>,
{
    let bases = idx.bases();
    for b in bases {
        if !m.is_matched(b) {
            continue;
        }
        for_each_alternating_path(g, m, b, Parity::Matched, VertexSet::EMPTY, |p, last| {
            let end = *p.last().unwrap();
            if last == Parity::Matched && end > b && bases.contains(end) {
                f(p)
            } else {
                ControlFlow::Continue(())
            }
        })?;
    }
    ControlFlow::Continue(())
}

pub fn find_posies(g: &Graph, m: &Matching) -> Vec<Posy> {
    let idx = BlossomIndex::new(g, m);
    let mut out = Vec::new();
    let _ = for_each_link(g, m, &idx, |link| {
        let (b1, b2) = (link[0], *link.last().unwrap());
        for x in idx.at(b1) {
            for y in idx.at(b2) {
                out.push(Posy {
                    blossom1: x.clone(),
                    blossom2: y.clone(),
                    link: link.to_vec(),
                });
            }
        }
        ControlFlow::Continue(())
    });
    out
}

pub fn posy_vertices(g: &Graph, m: &Matching) -> VertexSet {
    posy_vertices_in(g, m, &BlossomIndex::new(g, m))
}

pub(crate) fn posy_vertices_in(g: &Graph, m: &Matching, idx: &BlossomIndex) -> VertexSet {
    let mut acc = VertexSet::EMPTY;
    let _ = for_each_link(g, m, idx, |link| {
        let (b1, b2) = (link[0], *link.last().unwrap());
        acc = acc
            .union(idx.union_at(b1))
            .union(idx.union_at(b2))
            .union(link.iter().collect());
        ControlFlow::Continue(())
    });
    acc
}

/// Calls `f` for every Tposy.
pub fn for_each_tposy<F>(g: &Graph, m: &Matching, idx: &BlossomIndex, mut f: F) -> ControlFlow<()>
where
    F: FnMut(Tposy) -> ControlFlow<()>,
{
    for_each_link(g, m, idx, |link| {
        let inner = link_interior(link);
        let (b1, b2) = (link[0], *link.last().unwrap());
        for x in idx.avoiding(b1, inner) {
            for y in idx.avoiding(b2, inner) {
                f(Tposy {
                    blossom1: x.clone(),
                    blossom2: y.clone(),
                    link: link.to_vec(),
                })?;
            }
        }
        ControlFlow::Continue(())
    })
}

pub fn find_tposies(g: &Graph, m: &Matching) -> Vec<Tposy> {
    let idx = BlossomIndex::new(g, m);
    let mut out = Vec::new();
    let _ = for_each_tposy(g, m, &idx, |t| {
        out.push(t);
        ControlFlow::Continue(())
    });
    out
}

pub fn tposy_vertices(g: &Graph, m: &Matching) -> VertexSet {
    tposy_vertices_in(g, m, &BlossomIndex::new(g, m))
}

pub(crate) fn tposy_vertices_in(g: &Graph, m: &Matching, idx: &BlossomIndex) -> VertexSet {
    let mut acc = VertexSet::EMPTY;
    let _ = for_each_link(g, m, idx, |link| {
        let inner = link_interior(link);
        let u1 = idx.union_avoiding(link[0], inner);
        let u2 = idx.union_avoiding(*link.last().unwrap(), inner);
        if !u1.is_empty() && !u2.is_empty() {
            acc = acc.union(u1).union(u2).union(link.iter().collect());
        }
        ControlFlow::Continue(())
    });
    acc
}

pub fn find_tposy_containing(
    g: &Graph,
    m: &Matching,
    idx: &BlossomIndex,
    v: VertexId,
) -> Option<Tposy> {
    let mut found = None;
    let _ = for_each_tposy(g, m, idx, |t| {
        if t.vertex_set().contains(v) {
            found = Some(t);
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    found
}

/// Whether `m` admits a flower or a posy.
pub fn exists_flower_or_posy(g: &Graph, m: &Matching) -> bool {
    let idx = BlossomIndex::new(g, m);
    for_each_flower(g, m, &idx, |_, _| ControlFlow::Break(())).is_break()
        || for_each_link(g, m, &idx, |_| ControlFlow::Break(())).is_break()
}

/// Whether `m` admits a flower or a Tposy.
pub fn exists_flower_or_tposy(g: &Graph, m: &Matching) -> bool {
    let idx = BlossomIndex::new(g, m);
    for_each_flower(g, m, &idx, |_, _| ControlFlow::Break(())).is_break()
        || for_each_tposy(g, m, &idx, |_| ControlFlow::Break(())).is_break()
}
