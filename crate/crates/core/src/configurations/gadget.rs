use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::matching::Matching;

/// Fresh vertices of a triangle gadget: `u - x`, triangle `x, y, z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Gadget {
    pub u: VertexId,
    pub x: VertexId,
    pub y: VertexId,
    pub z: VertexId,
}

impl Gadget {
    /// `m` extended by `ux` and `yz`.
    pub fn extend_matching(&self, g2: &Graph, m: &Matching) -> Result<Matching> {
        let mut edges = m.edges();
        edges.extend([(self.u, self.x), (self.y, self.z)]);
        Matching::from_edges(g2, &edges)
    }
}

/// Attaches a triangle to `u` by a pendant edge. `u` must be unmatched by
/// `m`; the fresh vertices are numbered `n, n + 1, n + 2`.
pub fn flower_gadget(g: &Graph, m: &Matching, u: VertexId) -> Result<(Graph, Gadget)> {
    if u >= g.order() {
        return Err(Error::Domain(format!(
            "vertex {u} not in graph of order {}",
            g.order()
        )));
    }
    m.validate(g)?;
    if m.is_matched(u) {
        return Err(Error::Domain(format!("gadget vertex {u} is matched")));
    }
    let n = g.order();
    let (x, y, z) = (n, n + 1, n + 2);
    let g2 = g
        .with_isolated(3)?
        .with_edges(&[(u, x), (x, y), (x, z), (y, z)])?;
    Ok((g2, Gadget { u, x, y, z }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k1_becomes_paw() {
        let g = Graph::empty(1).unwrap();
        let (g2, gd) = flower_gadget(&g, &Matching::empty(1), 0).unwrap();
        assert_eq!((g2.order(), g2.size()), (4, 4));
        assert_eq!((gd.x, gd.y, gd.z), (1, 2, 3));
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let m = Matching::from_edges(&k2, &[(0, 1)]).unwrap();
        assert!(flower_gadget(&k2, &m, 0).is_err());
    }
}
