//! Independence number, König–Egerváry tests and Hamiltonicity.

use serde::Serialize;
use std::ops::ControlFlow;

use crate::configurations::{exists_flower_or_posy, exists_flower_or_tposy};
use crate::error::Result;
use crate::graph::Graph;
use crate::limits::Limits;
use crate::matching::{for_each_maximum_matching, matching_number};
use crate::vertex_set::VertexSet;

/// Exact α(G) by branch and bound. The bound at each node is the number of
/// cliques in a greedy clique cover of the remaining candidates.
pub fn independence_number(g: &Graph, limits: &Limits) -> Result<usize> {
    Limits::check("graph order", g.order(), limits.independence_order)?;
    let mut best = 0;
    mis(g, g.vertex_set().bits(), 0, &mut best);
    Ok(best)
}

fn mis(g: &Graph, mut cand: u64, mut size: usize, best: &mut usize) {
    // Vertices of degree <= 1 in the candidate graph belong to some maximum
    // independent set, so they are taken without branching.
    while let Some(v) = VertexSet::from_bits(cand)
        .iter()
        .find(|&v| (g.neighbors(v).bits() & cand).count_ones() <= 1)
    {
        cand &= !(g.neighbors(v).bits() | 1 << v);
        size += 1;
    }
    if cand == 0 {
        *best = (*best).max(size);
        return;
    }
    if size + clique_cover_bound(g, cand) <= *best {
        return;
    }
    let v = VertexSet::from_bits(cand)
        .iter()
        .max_by_key(|&v| (g.neighbors(v).bits() & cand).count_ones())
        .unwrap();
    mis(g, cand & !(g.neighbors(v).bits() | 1 << v), size + 1, best);
    mis(g, cand & !(1 << v), size, best);
}

fn clique_cover_bound(g: &Graph, mut cand: u64) -> usize {
    let mut cliques = 0;
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= !(1 << v);
        let mut common = g.neighbors(v).bits() & cand;
        while common != 0 {
            let w = common.trailing_zeros() as usize;
            cand &= !(1 << w);
            common &= g.neighbors(w).bits() & !(1 << w);
        }
        cliques += 1;
    }
    cliques
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum KeMethod {
    Direct,
    Sterboul,
    Tposy,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct KeVerdict {
    pub alpha: usize,
    pub mu: usize,
    /// Vertex cover number, `n - alpha`.
    pub tau: usize,
    pub is_ke: bool,
    pub method: KeMethod,
    /// Maximum matchings inspected (0 for the direct method).
    pub matchings_checked: usize,
    /// Sterboul only: either every maximum matching carries a flower or posy,
    /// or none does.
    pub uniform: Option<bool>,
}

fn verdict(g: &Graph, limits: &Limits, method: KeMethod) -> Result<KeVerdict> {
    let alpha = independence_number(g, limits)?;
    let mu = matching_number(g);
    Ok(KeVerdict {
        alpha,
        mu,
        tau: g.order() - alpha,
        is_ke: alpha + mu == g.order(),
        method,
        matchings_checked: 0,
        uniform: None,
    })
}

/// `α + μ = n`.
pub fn is_ke_direct(g: &Graph, limits: &Limits) -> Result<KeVerdict> {
    verdict(g, limits, KeMethod::Direct)
}

/// KE iff no maximum matching admits a flower or posy. Every maximum matching
/// is inspected, so `uniform` records whether they all agree.
pub fn is_ke_sterboul(g: &Graph, limits: &Limits) -> Result<KeVerdict> {
    let mut v = verdict(g, limits, KeMethod::Sterboul)?;
    let (mut with, mut without) = (0usize, 0usize);
    for_each_maximum_matching(g, limits, |m| {
        if exists_flower_or_posy(g, m) {
            with += 1;
        } else {
            without += 1;
        }
        ControlFlow::Continue(())
    })?;
    v.is_ke = with == 0;
    v.matchings_checked = with + without;
    v.uniform = Some(with == 0 || without == 0);
    Ok(v)
}

/// KE iff no maximum matching admits a flower or Tposy; stops at the first
/// matching that does.
pub fn is_ke_tposy(g: &Graph, limits: &Limits) -> Result<KeVerdict> {
    let mut v = verdict(g, limits, KeMethod::Tposy)?;
    let mut checked = 0;
    let mut found = false;
    for_each_maximum_matching(g, limits, |m| {
        checked += 1;
        if exists_flower_or_tposy(g, m) {
            found = true;
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    v.is_ke = !found;
    v.matchings_checked = checked;
    Ok(v)
}

/// Backtracking search for a Hamiltonian cycle through vertex 0.
pub fn is_hamiltonian(g: &Graph, limits: &Limits) -> Result<bool> {
    let n = g.order();
    Limits::check("graph order", n, limits.hamiltonian_order)?;
    if n < 3 || !g.is_connected() || g.vertices().any(|v| g.degree(v) < 2) {
        return Ok(false);
    }
    let full = g.vertex_set().bits();
    Ok(extend_cycle(g, 0, 1, full))
}

fn extend_cycle(g: &Graph, cur: usize, visited: u64, full: u64) -> bool {
    if visited == full {
        return g.has_edge(cur, 0);
    }
    let rest = full & !visited;
    // Every unvisited vertex still needs two usable neighbours.
    for w in VertexSet::from_bits(rest) {
        let avail = g.neighbors(w).bits() & (rest | 1 | 1 << cur);
        if avail.count_ones() < 2 {
            return false;
        }
    }
    for w in g.neighbors(cur).intersection(VertexSet::from_bits(rest)) {
        if extend_cycle(g, w, visited | 1 << w, full) {
            return true;
        }
    }
    false
}
