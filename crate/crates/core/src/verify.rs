//! Exhaustive verification sweeps over generated or supplied graphs.
//!
//! Counterexamples never abort a sweep; they are collected as report rows
//! with enough data to reproduce them.

use rayon::prelude::*;
use serde::Serialize;
use std::collections::{BTreeMap, HashSet};
use std::ops::ControlFlow;

use crate::configurations::{exists_jposy, is_sd_graph, mark_vertices, tposy_vertices, MarkReport};
use crate::enumerate::{canonical_code, connected_graphs_up_to};
use crate::error::Result;
use crate::graph::{barbell, complete, Graph, VertexId};
use crate::graph6;
use crate::ke::{is_hamiltonian, is_ke_direct, is_ke_sterboul, is_ke_tposy, KeVerdict};
use crate::limits::Limits;
use crate::matching::{for_each_maximum_matching, matching_number};
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    /// `V_T = V_ESG = V_J`, with every recorded witness valid.
    Main,
    /// The direct and flower-or-posy KE tests agree, and either every maximum
    /// matching carries a flower or posy or none does.
    Sterboul,
    /// The direct and flower-or-Tposy KE tests agree.
    Tposy,
    /// A Jposy for some maximum matching implies not KE.
    Jposy,
    /// With a perfect matching: KE iff no perfect matching has a Jposy.
    Corollary,
}

impl Check {
    pub const ALL: [Check; 5] = [
        Check::Main,
        Check::Sterboul,
        Check::Tposy,
        Check::Jposy,
        Check::Corollary,
    ];
}

#[derive(Clone, Debug, Serialize)]
pub struct Counterexample {
    pub check: Check,
    pub graph6: String,
    pub edges: Vec<(VertexId, VertexId)>,
    pub detail: String,
    pub marks: Option<MarkReport>,
    pub verdicts: Vec<KeVerdict>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    /// Graphs to which the check applied.
    pub checked: usize,
    pub counterexamples: usize,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct VerificationReport {
    pub graphs: usize,
    pub tallies: BTreeMap<Check, Tally>,
    pub counterexamples: Vec<Counterexample>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    fn merge(mut self, other: VerificationReport) -> VerificationReport {
        self.graphs += other.graphs;
        for (k, t) in other.tallies {
            let e = self.tallies.entry(k).or_default();
            e.checked += t.checked;
            e.counterexamples += t.counterexamples;
        }
        self.counterexamples.extend(other.counterexamples);
        self
    }
}

/// Runs `checks` on every connected graph of order `1..=max_order`.
pub fn verify_theorems(
    max_order: usize,
    checks: &[Check],
    limits: &Limits,
) -> Result<VerificationReport> {
    let graphs = connected_graphs_up_to(max_order)?;
    verify_graphs(&graphs, checks, limits)
}

/// Runs `checks` on each graph; the report lists counterexamples in input
/// order.
pub fn verify_graphs(
    graphs: &[Graph],
    checks: &[Check],
    limits: &Limits,
) -> Result<VerificationReport> {
    let parts = graphs
        .par_iter()
        .map(|g| verify_one(g, checks, limits))
        .collect::<Result<Vec<_>>>()?;
    Ok(parts
        .into_iter()
        .fold(VerificationReport::default(), VerificationReport::merge))
}

fn verify_one(g: &Graph, checks: &[Check], limits: &Limits) -> Result<VerificationReport> {
    let mut r = VerificationReport {
        graphs: 1,
        ..Default::default()
    };
    let direct = is_ke_direct(g, limits)?;
    for &c in checks {
        let Some(failure) = run_check(g, c, &direct, limits)? else {
            continue;
        };
        let t = r.tallies.entry(c).or_default();
        t.checked += 1;
        if let Err(mut cx) = failure {
            t.counterexamples += 1;
            cx.verdicts.insert(0, direct);
            r.counterexamples.push(cx);
        }
    }
    Ok(r)
}

/// `None` if the check does not apply to `g`.
fn run_check(
    g: &Graph,
    check: Check,
    direct: &KeVerdict,
    limits: &Limits,
) -> Result<Option<std::result::Result<(), Counterexample>>> {
    let cx = |detail: String| Counterexample {
        check,
        graph6: graph6::encode(g),
        edges: g.edges(),
        detail,
        marks: None,
        verdicts: Vec::new(),
    };
    let outcome = match check {
        Check::Main => {
            let marks = mark_vertices(g, limits)?;
            let bad_witness = marks
                .witnesses
                .iter()
                .find_map(|(v, w)| w.validate(g).err().map(|e| (*v, e)));
            if !marks.sets_agree() {
                let mut c = cx(format!(
                    "V_T = {}, V_ESG = {}, V_J = {}",
                    marks.v_t, marks.v_esg, marks.v_j
                ));
                c.marks = Some(marks);
                Err(c)
            } else if let Some((v, e)) = bad_witness {
                let mut c = cx(format!("witness for vertex {v} is invalid: {e}"));
                c.marks = Some(marks);
                Err(c)
            } else {
                Ok(())
            }
        }
        Check::Sterboul => {
            let s = is_ke_sterboul(g, limits)?;
            if s.is_ke != direct.is_ke || s.uniform != Some(true) {
                let mut c = cx(format!(
                    "direct KE = {}, flower/posy KE = {}, uniform over matchings = {:?}",
                    direct.is_ke, s.is_ke, s.uniform
                ));
                c.verdicts.push(s);
                Err(c)
            } else {
                Ok(())
            }
        }
        Check::Tposy => {
            let t = is_ke_tposy(g, limits)?;
            if t.is_ke != direct.is_ke {
                let mut c = cx(format!(
                    "direct KE = {}, flower/Tposy KE = {}",
                    direct.is_ke, t.is_ke
                ));
                c.verdicts.push(t);
                Err(c)
            } else {
                Ok(())
            }
        }
        Check::Jposy => {
            let mut offending = None;
            if direct.is_ke {
                for_each_maximum_matching(g, limits, |m| {
                    if exists_jposy(g, m) {
                        offending = Some(m.edges());
                        ControlFlow::Break(())
                    } else {
                        ControlFlow::Continue(())
                    }
                })?;
            }
            match offending {
                Some(m) => Err(cx(format!(
                    "KE graph with a Jposy relative to matching {m:?}"
                ))),
                None => Ok(()),
            }
        }
        Check::Corollary => {
            if 2 * matching_number(g) != g.order() {
                return Ok(None);
            }
            let mut with_jposy = None;
            for_each_maximum_matching(g, limits, |m| {
                if exists_jposy(g, m) {
                    with_jposy = Some(m.edges());
                    ControlFlow::Break(())
                } else {
                    ControlFlow::Continue(())
                }
            })?;
            if direct.is_ke == with_jposy.is_none() {
                Ok(())
            } else {
                Err(cx(format!(
                    "KE = {}, perfect matching with a Jposy: {with_jposy:?}",
                    direct.is_ke
                )))
            }
        }
    };
    Ok(Some(outcome))
}

/// Even subdivisions of barbell(3,3,1) and of K4 of order at most
/// `max_order`, one per isomorphism class.
pub fn tposy_base_graphs(max_order: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for seed in [barbell(3, 3, 1)?, complete(4)?] {
        let mut layer = vec![seed];
        while !layer.is_empty() {
            let mut next = Vec::new();
            for g in layer {
                if g.order() > max_order || !seen.insert((g.order(), canonical_code(&g)?)) {
                    continue;
                }
                for (u, v) in g.edges() {
                    next.push(g.even_subdivide(u, v)?);
                }
                out.push(g);
            }
            layer = next;
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct EarFailure {
    pub base_graph6: String,
    pub u: VertexId,
    pub v: VertexId,
    pub length: usize,
    /// Vertices of `G + P` on no Tposy for any maximum matching.
    pub uncovered: VertexSet,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct EarReport {
    pub base_graphs: usize,
    pub instances: usize,
    pub failures: Vec<EarFailure>,
}

impl EarReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// For every base graph, every odd ear of length 1, 3 or 5 on every pair of
/// attachment vertices (equal endpoints for lengths 3 and 5; nonadjacent
/// endpoints for length 1): every vertex of `G + P` must lie on a Tposy for
/// some maximum matching.
pub fn ear_tposy_suite(bases: &[Graph], limits: &Limits) -> Result<EarReport> {
    let mut jobs = Vec::new();
    for (i, g) in bases.iter().enumerate() {
        for u in g.vertices() {
            for v in u..g.order() {
                for length in [1, 3, 5] {
                    if length == 1 && (u == v || g.has_edge(u, v)) {
                        continue;
                    }
                    jobs.push((i, u, v, length));
                }
            }
        }
    }
    let failures = jobs
        .par_iter()
        .map(|&(i, u, v, length)| {
            let h = bases[i].attach_odd_ear(u, v, length)?;
            let covered = tposy_cover(&h, limits)?;
            Ok((covered != h.vertex_set()).then(|| EarFailure {
                base_graph6: graph6::encode(&bases[i]),
                u,
                v,
                length,
                uncovered: h.vertex_set().difference(covered),
            }))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(EarReport {
        base_graphs: bases.len(),
        instances: jobs.len(),
        failures: failures.into_iter().flatten().collect(),
    })
}

/// Union of Tposy vertex sets over all maximum matchings, stopping once every
/// vertex is covered.
pub fn tposy_cover(g: &Graph, limits: &Limits) -> Result<VertexSet> {
    let full = g.vertex_set();
    let mut acc = VertexSet::EMPTY;
    for_each_maximum_matching(g, limits, |m| {
        acc = acc.union(tposy_vertices(g, m));
        if acc == full {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(acc)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum ConjectureClass {
    Ke,
    Sd,
    Counterexample,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjectureRow {
    pub graph6: String,
    pub order: usize,
    pub class: ConjectureClass,
    /// Full marking data, kept for counterexamples only.
    pub marks: Option<MarkReport>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct ConjectureReport {
    pub max_order: usize,
    /// Connected Hamiltonian graphs of even order (K2 included), classified.
    pub even: Vec<ConjectureRow>,
    pub counts: BTreeMap<ConjectureClass, usize>,
    /// Connected Hamiltonian graphs of odd order checked to be SD.
    pub odd_checked: usize,
    /// Odd-order Hamiltonian graphs that are not SD (graph6).
    pub odd_failures: Vec<String>,
}

impl ConjectureReport {
    pub fn even_counterexamples(&self) -> impl Iterator<Item = &ConjectureRow> {
        self.even
            .iter()
            .filter(|r| r.class == ConjectureClass::Counterexample)
    }
}

/// Classifies every connected Hamiltonian graph of even order `<= max_order`
/// as KE, SD or neither, and checks that every one of odd order is SD.
pub fn conjecture_scan(max_order: usize, limits: &Limits) -> Result<ConjectureReport> {
    let graphs = connected_graphs_up_to(max_order)?;
    conjecture_scan_graphs(&graphs, max_order, limits)
}

pub fn conjecture_scan_graphs(
    graphs: &[Graph],
    max_order: usize,
    limits: &Limits,
) -> Result<ConjectureReport> {
    enum Row {
        Even(ConjectureRow),
        Odd(Option<String>),
    }
    let rows = graphs
        .par_iter()
        .map(|g| -> Result<Option<Row>> {
            // K2 counts as Hamiltonian here: its one edge is the degenerate
            // spanning cycle.
            let k2 = g.order() == 2 && g.size() == 1;
            if !k2 && !is_hamiltonian(g, limits)? {
                return Ok(None);
            }
            let sd = is_sd_graph(g, limits)?;
            if g.order() % 2 == 1 {
                return Ok(Some(Row::Odd((!sd).then(|| graph6::encode(g)))));
            }
            let class = if is_ke_direct(g, limits)?.is_ke {
                ConjectureClass::Ke
            } else if sd {
                ConjectureClass::Sd
            } else {
                ConjectureClass::Counterexample
            };
            let marks = match class {
                ConjectureClass::Counterexample => Some(mark_vertices(g, limits)?),
                _ => None,
            };
            Ok(Some(Row::Even(ConjectureRow {
                graph6: graph6::encode(g),
                order: g.order(),
                class,
                marks,
            })))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut rep = ConjectureReport {
        max_order,
        ..Default::default()
    };
    for row in rows.into_iter().flatten() {
        match row {
            Row::Even(r) => {
                *rep.counts.entry(r.class).or_default() += 1;
                rep.even.push(r);
            }
            Row::Odd(fail) => {
                rep.odd_checked += 1;
                rep.odd_failures.extend(fail);
            }
        }
    }
    Ok(rep)
}
