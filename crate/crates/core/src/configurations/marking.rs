use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;
use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::graph6;
use crate::limits::Limits;
use crate::matching::{enumerate_maximum_matchings, for_each_maximum_matching, Matching};
use crate::vertex_set::VertexSet;

use super::classical::{flower_vertices_in, posy_vertices_in, tposy_vertices_in};
use super::generalized::{jflower_vertices_in, jposy_vertices_in};
use super::{
    find_flower_containing, find_jflower_containing, find_jposy_containing, find_tposy_containing,
    BlossomIndex, Configuration,
};

/// Vertices covered by each configuration type relative to one matching.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct MatchingMarks {
    pub flower: VertexSet,
    pub posy: VertexSet,
    pub tposy: VertexSet,
    pub jflower: VertexSet,
    pub jposy: VertexSet,
}

impl MatchingMarks {
    pub fn v_t(&self) -> VertexSet {
        self.flower.union(self.tposy)
    }

    pub fn v_esg(&self) -> VertexSet {
        self.flower.union(self.posy)
    }

    pub fn v_j(&self) -> VertexSet {
        self.jflower.union(self.jposy)
    }
}

pub fn marks_for_matching(g: &Graph, m: &Matching) -> MatchingMarks {
    let idx = BlossomIndex::new(g, m);
    MatchingMarks {
        flower: flower_vertices_in(g, m, &idx),
        posy: posy_vertices_in(g, m, &idx),
        tposy: tposy_vertices_in(g, m, &idx),
        jflower: jflower_vertices_in(g, m, &idx),
        jposy: jposy_vertices_in(g, m, &idx),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub matching: Matching,
    pub configuration: Configuration,
}

impl Witness {
    pub fn validate(&self, g: &Graph) -> Result<()> {
        self.matching.validate(g)?;
        self.configuration.validate(g, &self.matching)
    }
}

/// `v_t`, `v_esg` and `v_j` are unions over every maximum matching.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MarkReport {
    pub graph6: String,
    pub order: usize,
    pub matching_number: usize,
    pub maximum_matchings: usize,
    pub v_t: VertexSet,
    pub v_esg: VertexSet,
    pub v_j: VertexSet,
    /// For each marked vertex: the first maximum matching (in enumeration
    /// order) with a flower or Tposy through it, flowers tried first. Falls
    /// back to a Jflower or Jposy if no such matching exists.
    pub witnesses: BTreeMap<VertexId, Witness>,
}

impl MarkReport {
    pub fn is_sd(&self) -> bool {
        self.v_t.len() == self.order
    }

    /// `v_t = v_esg = v_j`.
    pub fn sets_agree(&self) -> bool {
        self.v_t == self.v_esg && self.v_esg == self.v_j
    }
}

pub fn mark_vertices(g: &Graph, limits: &Limits) -> Result<MarkReport> {
    let ms = enumerate_maximum_matchings(g, limits)?;
    let marks: Vec<MatchingMarks> = ms.par_iter().map(|m| marks_for_matching(g, m)).collect();
    let mut v_t = VertexSet::EMPTY;
    let mut v_esg = VertexSet::EMPTY;
    let mut v_j = VertexSet::EMPTY;
    for mk in &marks {
        v_t = v_t.union(mk.v_t());
        v_esg = v_esg.union(mk.v_esg());
        v_j = v_j.union(mk.v_j());
    }
    let all = v_t.union(v_esg).union(v_j);
    let witnesses = all
        .to_vec()
        .into_par_iter()
        .map(|v| witness_from_marks(g, &ms, &marks, v).map(|w| (v, w)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    Ok(MarkReport {
        graph6: graph6::encode(g),
        order: g.order(),
        matching_number: ms.first().map_or(0, |m| m.len()),
        maximum_matchings: ms.len(),
        v_t,
        v_esg,
        v_j,
        witnesses,
    })
}

fn witness_from_marks(
    g: &Graph,
    ms: &[Matching],
    marks: &[MatchingMarks],
    v: VertexId,
) -> Result<Witness> {
    let missing = || Error::Invariant(format!("vertex {v} is marked but no witness was rebuilt"));
    if let Some(i) = marks.iter().position(|mk| mk.v_t().contains(v)) {
        let m = &ms[i];
        let idx = BlossomIndex::new(g, m);
        let configuration = if marks[i].flower.contains(v) {
            Configuration::Flower(find_flower_containing(g, m, &idx, v).ok_or_else(missing)?)
        } else {
            Configuration::Tposy(find_tposy_containing(g, m, &idx, v).ok_or_else(missing)?)
        };
        return Ok(Witness {
            matching: m.clone(),
            configuration,
        });
    }
    if let Some(i) = marks.iter().position(|mk| mk.v_j().contains(v)) {
        let m = &ms[i];
        let idx = BlossomIndex::new(g, m);
        let configuration = if marks[i].jflower.contains(v) {
            Configuration::Jflower(find_jflower_containing(g, m, &idx, v).ok_or_else(missing)?)
        } else {
            Configuration::Jposy(find_jposy_containing(g, m, &idx, v).ok_or_else(missing)?)
        };
        return Ok(Witness {
            matching: m.clone(),
            configuration,
        });
    }
    Err(missing())
}

/// Whether every vertex lies in a flower or Tposy for some maximum matching.
pub fn is_sd_graph(g: &Graph, limits: &Limits) -> Result<bool> {
    let full = g.vertex_set();
    let mut acc = VertexSet::EMPTY;
    for_each_maximum_matching(g, limits, |m| {
        let idx = BlossomIndex::new(g, m);
        acc = acc
            .union(flower_vertices_in(g, m, &idx))
            .union(tposy_vertices_in(g, m, &idx));
        if acc == full {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(acc == full)
}

/// A maximum matching and a flower or Tposy through `v`, searching matchings
/// in enumeration order and flowers before Tposies. `None` iff `v` lies on
/// no Jflower or Jposy for any maximum matching.
pub fn witness_for_vertex(g: &Graph, v: VertexId, limits: &Limits) -> Result<Option<Witness>> {
    if v >= g.order() {
        return Err(Error::Domain(format!(
            "vertex {v} not in graph of order {}",
            g.order()
        )));
    }
    let mut found = None;
    let mut in_vj = false;
    for_each_maximum_matching(g, limits, |m| {
        let idx = BlossomIndex::new(g, m);
        let configuration = find_flower_containing(g, m, &idx, v)
            .map(Configuration::Flower)
            .or_else(|| find_tposy_containing(g, m, &idx, v).map(Configuration::Tposy));
        if let Some(configuration) = configuration {
            found = Some(Witness {
                matching: m.clone(),
                configuration,
            });
            return ControlFlow::Break(());
        }
        in_vj = in_vj
            || jflower_vertices_in(g, m, &idx).contains(v)
            || jposy_vertices_in(g, m, &idx).contains(v);
        ControlFlow::Continue(())
    })?;
    if found.is_none() && in_vj {
        return Err(Error::Invariant(format!(
            "vertex {v} lies on a Jflower or Jposy but on no flower or Tposy"
        )));
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, path};

    #[test]
    fn c5_and_c4() {
        let l = Limits::default();
        let r = mark_vertices(&cycle(5).unwrap(), &l).unwrap();
        assert_eq!(r.v_t, VertexSet::full(5));
        assert!(r.sets_agree() && r.is_sd());
        assert_eq!(r.witnesses.len(), 5);
        for w in r.witnesses.values() {
            w.validate(&cycle(5).unwrap()).unwrap();
        }
        let r = mark_vertices(&cycle(4).unwrap(), &l).unwrap();
        assert!(r.v_j.is_empty() && !r.is_sd());
        assert!(is_sd_graph(&cycle(5).unwrap(), &l).unwrap());
        assert!(!is_sd_graph(&path(4).unwrap(), &l).unwrap());
        assert_eq!(witness_for_vertex(&cycle(4).unwrap(), 0, &l).unwrap(), None);
    }
}
