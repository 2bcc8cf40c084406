//! Example graphs with their distinguished maximum matchings.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::matching::Matching;

#[derive(Clone, Debug, Serialize)]
pub struct Fixture {
    pub name: &'static str,
    pub graph: Graph,
    pub matching: Matching,
    /// Odd ears added to a smaller graph, each listed from endpoint to
    /// endpoint. Their internal vertices are the highest-numbered ones.
    pub ears: Vec<Vec<VertexId>>,
}

impl Fixture {
    /// The graph before any ear was attached.
    pub fn base_order(&self) -> usize {
        self.graph.order() - self.ears.iter().map(|e| e.len() - 2).sum::<usize>()
    }

    /// The graph with only the ear at `index` attached, relabelled so that the
    /// ear's internal vertices directly follow the base vertices.
    pub fn with_single_ear(&self, index: usize) -> Result<Graph> {
        let ear = self
            .ears
            .get(index)
            .ok_or_else(|| Error::Domain(format!("fixture {} has no ear {index}", self.name)))?;
        let base = self.base_order();
        let (g, _) = self.graph.induced(crate::vertex_set::VertexSet::full(base));
        g.attach_odd_ear(ear[0], *ear.last().unwrap(), ear.len() - 1)
    }
}

pub const FIXTURE_NAMES: [&str; 7] = [
    "edmonds_fig1",
    "jflower_fig4",
    "posy_fig5",
    "tposy_case1_fig6",
    "tposy_case2_fig7",
    "tposy_case3_fig8",
    "tposy_case4_fig9",
];

fn build(
    name: &'static str,
    n: usize,
    edges: &[(VertexId, VertexId)],
    matched: &[(VertexId, VertexId)],
    ears: &[&[VertexId]],
) -> Result<Fixture> {
    let mut all = edges.to_vec();
    all.extend_from_slice(matched);
    for e in ears {
        all.extend(e.windows(2).map(|w| (w[0], w[1])));
    }
    let graph = Graph::from_edges(n, &all)?;
    let matching = Matching::from_edges(&graph, matched)?;
    Ok(Fixture {
        name,
        graph,
        matching,
        ears: ears.iter().map(|e| e.to_vec()).collect(),
    })
}

fn cycle_edges(vs: &[VertexId]) -> Vec<(VertexId, VertexId)> {
    (0..vs.len())
        .map(|i| (vs[i], vs[(i + 1) % vs.len()]))
        .collect()
}

pub fn named_fixture(name: &str) -> Result<Fixture> {
    match name {
        "edmonds_fig1" => build(
            "edmonds_fig1",
            5,
            &[(0, 1), (0, 2), (0, 4), (1, 2), (2, 3), (2, 4), (3, 4)],
            &[(1, 2), (3, 4)],
            &[],
        ),
        "jflower_fig4" => build(
            "jflower_fig4",
            17,
            &[
                (1, 0),
                (0, 4),
                (2, 3),
                (7, 8),
                (5, 9),
                (6, 10),
                (11, 1),
                (2, 12),
                (9, 13),
                (10, 14),
                (4, 15),
                (16, 13),
                (11, 12),
                (0, 8),
                (4, 9),
                (1, 3),
                (1, 7),
                (11, 7),
                (6, 1),
            ],
            &[
                (0, 5),
                (1, 2),
                (3, 4),
                (6, 7),
                (9, 10),
                (8, 11),
                (13, 14),
                (15, 16),
            ],
            &[],
        ),
        "posy_fig5" => build(
            "posy_fig5",
            10,
            &[
                (1, 2),
                (1, 5),
                (3, 4),
                (0, 6),
                (7, 8),
                (9, 5),
                (9, 4),
                (0, 5),
                (5, 8),
                (2, 0),
            ],
            &[(2, 3), (4, 5), (0, 1), (6, 7), (8, 9)],
            &[],
        ),
        "tposy_case1_fig6" => {
            let mut e = cycle_edges(&[0, 1, 2]);
            e.extend([(2, 3), (3, 4), (4, 5)]);
            e.extend(cycle_edges(&[5, 6, 7]));
            build(
                "tposy_case1_fig6",
                14,
                &e,
                &[(0, 1), (2, 3), (4, 5), (6, 7), (8, 9), (10, 11), (12, 13)],
                &[&[2, 8, 9, 3], &[3, 10, 11, 4], &[3, 12, 13, 5]],
            )
        }
        "tposy_case2_fig7" => {
            let mut e = cycle_edges(&(0..11).collect::<Vec<_>>());
            e.push((0, 11));
            e.extend(cycle_edges(&[11, 12, 13]));
            build(
                "tposy_case2_fig7",
                20,
                &e,
                &[
                    (0, 11),
                    (12, 13),
                    (1, 2),
                    (3, 4),
                    (5, 6),
                    (7, 8),
                    (9, 10),
                    (18, 19),
                    (14, 15),
                    (16, 17),
                ],
                &[&[2, 17, 16, 3], &[9, 14, 15, 10], &[6, 18, 19, 8]],
            )
        }
        "tposy_case3_fig8" => {
            let mut e = cycle_edges(&(0..9).collect::<Vec<_>>());
            e.extend([(0, 9), (9, 10), (10, 11)]);
            e.extend(cycle_edges(&[11, 12, 13]));
            build(
                "tposy_case3_fig8",
                22,
                &e,
                &[
                    (0, 9),
                    (10, 11),
                    (12, 13),
                    (1, 2),
                    (3, 4),
                    (5, 6),
                    (7, 8),
                    (16, 17),
                    (18, 19),
                    (14, 15),
                    (20, 21),
                ],
                &[
                    &[2, 16, 17, 9],
                    &[8, 14, 15, 10],
                    &[2, 18, 19, 10],
                    &[8, 20, 21, 11],
                ],
            )
        }
        "tposy_case4_fig9" => {
            let mut e = cycle_edges(&[0, 1, 2, 3, 4]);
            e.push((0, 5));
            e.extend(cycle_edges(&[5, 6, 7, 8, 9]));
            build(
                "tposy_case4_fig9",
                18,
                &e,
                &[
                    (16, 17),
                    (0, 5),
                    (10, 12),
                    (11, 13),
                    (14, 15),
                    (1, 2),
                    (6, 7),
                    (8, 9),
                    (3, 4),
                ],
                &[
                    &[2, 11, 13, 7],
                    &[2, 10, 12, 6],
                    &[4, 14, 15, 9],
                    &[4, 16, 17, 8],
                ],
            )
        }
        other => Err(Error::Domain(format!(
            "unknown fixture {other:?}; known: {}",
            FIXTURE_NAMES.join(", ")
        ))),
    }
}
