//! The six matching configurations (blossom, flower, posy, Tposy, Jflower,
//! Jposy), their definition-level validators, detection relative to a fixed
//! maximum matching, and vertex marking over all maximum matchings.

mod blossoms;
mod classical;
mod gadget;
mod generalized;
mod marking;

pub use blossoms::{enumerate_blossoms, BlossomIndex};
pub use classical::{
    exists_flower_or_posy, exists_flower_or_tposy, find_flower_containing, find_flowers,
    find_posies, find_tposies, find_tposy_containing, flower_vertices, for_each_flower,
    for_each_link, for_each_tposy, posy_vertices, stems_from, tposy_vertices,
};
pub use gadget::{flower_gadget, Gadget};
pub use generalized::{
    exists_jflower, exists_jposy, find_jflower, find_jflower_containing, find_jposy,
    find_jposy_containing, jflower_vertices, jposy_vertices,
};
pub use marking::{
    is_sd_graph, mark_vertices, marks_for_matching, witness_for_vertex, MarkReport, MatchingMarks,
    Witness,
};

use serde::Serialize;

use crate::alternating::{AlternatingWalk, Parity, WalkClass};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::matching::Matching;
use crate::vertex_set::VertexSet;

/// Odd cycle of length `2k + 1` carrying exactly `k` matched edges. Stored
/// with the base first and oriented so that `cycle[1] < cycle[last]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Blossom {
    base: VertexId,
    cycle: Vec<VertexId>,
}

impl Blossom {
    /// Accepts the cycle in any rotation or direction, closed (`first == last`)
    /// or not.
    pub fn new(g: &Graph, m: &Matching, cycle: Vec<VertexId>) -> Result<Blossom> {
        let mut cycle = cycle;
        if cycle.len() > 1 && cycle.first() == cycle.last() {
            cycle.pop();
        }
        let len = cycle.len();
        if len < 3 || len.is_multiple_of(2) {
            return Err(Error::Validation(format!(
                "a blossom needs odd length >= 3, got {len}"
            )));
        }
        if let Some(&v) = cycle.iter().find(|&&v| v >= g.order()) {
            return Err(Error::Validation(format!("cycle vertex {v} not in graph")));
        }
        let set: VertexSet = cycle.iter().collect();
        if set.len() != len {
            return Err(Error::Validation("cycle repeats a vertex".into()));
        }
        let mut matched_at = vec![false; len];
        let mut matched = 0;
        for i in 0..len {
            let (u, v) = (cycle[i], cycle[(i + 1) % len]);
            if !g.has_edge(u, v) {
                return Err(Error::Validation(format!("{u}-{v} is not an edge")));
            }
            if m.contains(u, v) {
                matched += 1;
                matched_at[i] = true;
                matched_at[(i + 1) % len] = true;
            }
        }
        if matched != len / 2 {
            return Err(Error::Validation(format!(
                "cycle of length {len} has {matched} matched edges, needs {}",
                len / 2
            )));
        }
        let i = matched_at.iter().position(|&b| !b).unwrap();
        Ok(Blossom::canonical(cycle, i))
    }

    /// Rotates `cycle` to start at index `base_at` and fixes the orientation.
    pub(crate) fn canonical(mut cycle: Vec<VertexId>, base_at: usize) -> Blossom {
        cycle.rotate_left(base_at);
        if cycle[1] > cycle[cycle.len() - 1] {
            cycle[1..].reverse();
        }
        Blossom {
            base: cycle[0],
            cycle,
        }
    }

    pub fn validate(&self, g: &Graph, m: &Matching) -> Result<()> {
        let b = Blossom::new(g, m, self.cycle.clone())?;
        if b.base != self.base {
            return Err(Error::Validation(format!(
                "blossom base is {}, recorded as {}",
                b.base, self.base
            )));
        }
        Ok(())
    }

    pub fn base(&self) -> VertexId {
        self.base
    }

    pub fn cycle(&self) -> &[VertexId] {
        &self.cycle
    }

    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.cycle.iter().collect()
    }

    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let k = self.cycle.len();
        (0..k)
            .map(|i| ordered(self.cycle[i], self.cycle[(i + 1) % k]))
            .collect()
    }
}

fn ordered(u: VertexId, v: VertexId) -> (VertexId, VertexId) {
    (u.min(v), u.max(v))
}

fn path_edges(p: &[VertexId]) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
    p.windows(2).map(|w| ordered(w[0], w[1]))
}

pub fn is_blossom(g: &Graph, m: &Matching, cycle: &[VertexId]) -> bool {
    Blossom::new(g, m, cycle.to_vec()).is_ok()
}

/// A blossom with a stem: an even alternating path from the base, starting
/// with a matched edge, to an unmatched vertex, meeting the blossom only at
/// the base. The stem is `[base]` when the base is unmatched.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Flower {
    pub blossom: Blossom,
    pub stem: Vec<VertexId>,
}

impl Flower {
    pub fn validate(&self, g: &Graph, m: &Matching) -> Result<()> {
        self.blossom.validate(g, m)?;
        let stem = AlternatingWalk::new(g, m, self.stem.clone())?;
        if stem.start() != self.blossom.base {
            return Err(Error::Validation("stem does not start at the base".into()));
        }
        if !stem.is_path() {
            return Err(Error::Validation("stem is not a simple path".into()));
        }
        if m.is_matched(stem.end()) {
            return Err(Error::Validation(format!(
                "stem ends at matched vertex {}",
                stem.end()
            )));
        }
        if !stem.is_empty() && stem.class() != WalkClass::Mn {
            return Err(Error::Validation(
                "stem must start matched and end unmatched".into(),
            ));
        }
        let shared = stem.vertex_set().intersection(self.blossom.vertex_set());
        if shared != VertexSet::singleton(self.blossom.base) {
            return Err(Error::Validation(format!(
                "stem meets the blossom in {shared}"
            )));
        }
        Ok(())
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.blossom.vertex_set().union(self.stem.iter().collect())
    }

    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut e = self.blossom.edges();
        e.extend(path_edges(&self.stem));
        e
    }
}

/// Two blossoms with distinct bases joined by a simple mm-alternating link
/// from `blossom1.base()` to `blossom2.base()`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Posy {
    pub blossom1: Blossom,
    pub blossom2: Blossom,
    pub link: Vec<VertexId>,
}

/// A posy whose link has no interior vertex on either blossom.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Tposy {
    pub blossom1: Blossom,
    pub blossom2: Blossom,
    pub link: Vec<VertexId>,
}

fn validate_linked(
    g: &Graph,
    m: &Matching,
    b1: &Blossom,
    b2: &Blossom,
    link: &[VertexId],
) -> Result<()> {
    b1.validate(g, m)?;
    b2.validate(g, m)?;
    if b1.base == b2.base {
        return Err(Error::Validation("posy blossoms share their base".into()));
    }
    let w = AlternatingWalk::new(g, m, link.to_vec())?;
    if w.start() != b1.base || w.end() != b2.base {
        return Err(Error::Validation("link does not join the two bases".into()));
    }
    if !w.is_path() {
        return Err(Error::Validation("link is not a simple path".into()));
    }
    if w.class() != WalkClass::Mm {
        return Err(Error::Validation(
            "link must start and end with matched edges".into(),
        ));
    }
    Ok(())
}

fn link_interior(link: &[VertexId]) -> VertexSet {
    link[1..link.len() - 1].iter().collect()
}

impl Posy {
    pub fn validate(&self, g: &Graph, m: &Matching) -> Result<()> {
        validate_linked(g, m, &self.blossom1, &self.blossom2, &self.link)
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.blossom1
            .vertex_set()
            .union(self.blossom2.vertex_set())
            .union(self.link.iter().collect())
    }

    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut e = self.blossom1.edges();
        e.extend(self.blossom2.edges());
        e.extend(path_edges(&self.link));
        e.sort_unstable();
        e.dedup();
        e
    }
}

impl Tposy {
    pub fn validate(&self, g: &Graph, m: &Matching) -> Result<()> {
        validate_linked(g, m, &self.blossom1, &self.blossom2, &self.link)?;
        let inner = link_interior(&self.link);
        if !inner.is_disjoint(self.blossom1.vertex_set().union(self.blossom2.vertex_set())) {
            return Err(Error::Validation("link interior meets a blossom".into()));
        }
        Ok(())
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.as_posy().vertex_set()
    }

    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        self.as_posy().edges()
    }

    pub fn as_posy(&self) -> Posy {
        Posy {
            blossom1: self.blossom1.clone(),
            blossom2: self.blossom2.clone(),
            link: self.link.clone(),
        }
    }

    /// The union of the two blossoms and the link as a spanning subgraph of
    /// `g`, with the matching restricted to it.
    pub fn subgraph(&self, g: &Graph, m: &Matching) -> Result<(Graph, Matching)> {
        let edges = self.edges();
        let h = Graph::empty(g.order())?.with_edges(&edges)?;
        let mh: Vec<_> = m
            .edges()
            .into_iter()
            .filter(|&(u, v)| h.has_edge(u, v))
            .collect();
        let mh = Matching::from_edges(&h, &mh)?;
        Ok((h, mh))
    }
}

/// A blossom with an alternating walk from its base to an unmatched vertex.
/// The walk starts with a matched edge, or is `[base]` when the base is
/// unmatched.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Jflower {
    pub blossom: Blossom,
    pub walk: Vec<VertexId>,
}

impl Jflower {
    pub fn validate(&self, g: &Graph, m: &Matching) -> Result<()> {
        self.blossom.validate(g, m)?;
        let w = AlternatingWalk::new(g, m, self.walk.clone())?;
        if w.start() != self.blossom.base {
            return Err(Error::Validation("walk does not start at the base".into()));
        }
        if m.is_matched(w.end()) {
            return Err(Error::Validation(format!(
                "walk ends at matched vertex {}",
                w.end()
            )));
        }
        if w.first_parity().is_some_and(|p| p != Parity::Matched) {
            return Err(Error::Validation(
                "walk must start with a matched edge".into(),
            ));
        }
        Ok(())
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.blossom.vertex_set().union(self.walk.iter().collect())
    }
}

/// Two blossoms, possibly equal, with an mm-alternating walk between their
/// bases.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Jposy {
    pub blossom1: Blossom,
    pub blossom2: Blossom,
    pub walk: Vec<VertexId>,
}

impl Jposy {
    pub fn validate(&self, g: &Graph, m: &Matching) -> Result<()> {
        self.blossom1.validate(g, m)?;
        self.blossom2.validate(g, m)?;
        let w = AlternatingWalk::new(g, m, self.walk.clone())?;
        if w.start() != self.blossom1.base || w.end() != self.blossom2.base {
            return Err(Error::Validation("walk does not join the two bases".into()));
        }
        if w.class() != WalkClass::Mm {
            return Err(Error::Validation(
                "walk must start and end with matched edges".into(),
            ));
        }
        Ok(())
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.blossom1
            .vertex_set()
            .union(self.blossom2.vertex_set())
            .union(self.walk.iter().collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Configuration {
    Blossom(Blossom),
    Flower(Flower),
    Posy(Posy),
    Tposy(Tposy),
    Jflower(Jflower),
    Jposy(Jposy),
}

impl Configuration {
    pub fn kind(&self) -> &'static str {
        match self {
            Configuration::Blossom(_) => "blossom",
            Configuration::Flower(_) => "flower",
            Configuration::Posy(_) => "posy",
            Configuration::Tposy(_) => "tposy",
            Configuration::Jflower(_) => "jflower",
            Configuration::Jposy(_) => "jposy",
        }
    }

    pub fn validate(&self, g: &Graph, m: &Matching) -> Result<()> {
        match self {
            Configuration::Blossom(c) => c.validate(g, m),
            Configuration::Flower(c) => c.validate(g, m),
            Configuration::Posy(c) => c.validate(g, m),
            Configuration::Tposy(c) => c.validate(g, m),
            Configuration::Jflower(c) => c.validate(g, m),
            Configuration::Jposy(c) => c.validate(g, m),
        }
    }

    pub fn vertex_set(&self) -> VertexSet {
        match self {
            Configuration::Blossom(c) => c.vertex_set(),
            Configuration::Flower(c) => c.vertex_set(),
            Configuration::Posy(c) => c.vertex_set(),
            Configuration::Tposy(c) => c.vertex_set(),
            Configuration::Jflower(c) => c.vertex_set(),
            Configuration::Jposy(c) => c.vertex_set(),
        }
    }
}

pub fn is_flower(g: &Graph, m: &Matching, f: &Flower) -> bool {
    f.validate(g, m).is_ok()
}

pub fn is_posy(g: &Graph, m: &Matching, p: &Posy) -> bool {
    p.validate(g, m).is_ok()
}

pub fn is_tposy(g: &Graph, m: &Matching, t: &Tposy) -> bool {
    t.validate(g, m).is_ok()
}

pub fn is_jflower(g: &Graph, m: &Matching, j: &Jflower) -> bool {
    j.validate(g, m).is_ok()
}

pub fn is_jposy(g: &Graph, m: &Matching, j: &Jposy) -> bool {
    j.validate(g, m).is_ok()
}
