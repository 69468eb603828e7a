use serde::Serialize;

use super::{Graph, GraphError};

/// Decomposition of the neighbourhoods of an edge `x ~ y`.
///
/// `triangle` holds the common neighbours, `rx`/`ry` the remaining
/// neighbours of `x`/`y` with the opposite endpoint removed. `cost[i][j]` is
/// the graph distance between `rx[i]` and `ry[j]`; the path through the edge
/// bounds it by 3.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeContext {
    pub x: usize,
    pub y: usize,
    pub deg_x: usize,
    pub deg_y: usize,
    pub triangle: Vec<usize>,
    pub rx: Vec<usize>,
    pub ry: Vec<usize>,
    pub cost: Vec<Vec<u32>>,
}

/// Upper bound on any distance between `R_x` and `R_y`.
pub(crate) const LEG_CAP: usize = 3;

impl Graph {
    pub fn edge_context(&self, x: usize, y: usize) -> Result<EdgeContext, GraphError> {
        self.check_edge(x, y)?;
        let (nx, ny) = (self.neighbors(x), self.neighbors(y));
        let triangle: Vec<usize> = nx
            .iter()
            .copied()
            .filter(|v| ny.binary_search(v).is_ok())
            .collect();
        let rx: Vec<usize> = nx
            .iter()
            .copied()
            .filter(|&v| v != y && triangle.binary_search(&v).is_err())
            .collect();
        let ry: Vec<usize> = ny
            .iter()
            .copied()
            .filter(|&v| v != x && triangle.binary_search(&v).is_err())
            .collect();
        let cost = rx
            .iter()
            .map(|&u| {
                let ball = self
                    .bounded_distances(u, LEG_CAP)
                    .expect("neighbour index is valid");
                ry.iter()
                    .map(|v| *ball.get(v).unwrap_or(&LEG_CAP) as u32)
                    .collect()
            })
            .collect();
        Ok(EdgeContext {
            x,
            y,
            deg_x: nx.len(),
            deg_y: ny.len(),
            triangle,
            rx,
            ry,
            cost,
        })
    }
}

impl EdgeContext {
    pub fn equal_degree(&self) -> Option<usize> {
        (self.deg_x == self.deg_y).then_some(self.deg_x)
    }

    /// Costs between `S1(x) \ △` and `S1(y) \ △`. Row 0 is `y` and column 0
    /// is `x`; both endpoints sit at distance 1 from everything on the other
    /// side of the edge.
    pub fn zero_idleness_cost(&self) -> Vec<Vec<u32>> {
        let mut rows = Vec::with_capacity(self.rx.len() + 1);
        rows.push(vec![1; self.ry.len() + 1]);
        for row in &self.cost {
            let mut r = Vec::with_capacity(row.len() + 1);
            r.push(1);
            r.extend_from_slice(row);
            rows.push(r);
        }
        rows
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn hexagon_edge() {
        let ctx = cycle(6).edge_context(0, 1).unwrap();
        assert!(ctx.triangle.is_empty());
        assert_eq!(ctx.rx, vec![5]);
        assert_eq!(ctx.ry, vec![2]);
        assert_eq!(ctx.cost, vec![vec![3]]);
        assert_eq!(ctx.zero_idleness_cost(), vec![vec![1, 1], vec![1, 3]]);
    }

    #[test]
    fn k4_edge_has_empty_remainders() {
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let ctx = k4.edge_context(0, 1).unwrap();
        assert_eq!(ctx.triangle, vec![2, 3]);
        assert!(ctx.rx.is_empty() && ctx.ry.is_empty() && ctx.cost.is_empty());
        assert_eq!(ctx.zero_idleness_cost(), vec![vec![1]]);
    }

    #[test]
    fn non_edge_is_rejected() {
        assert_eq!(cycle(6).edge_context(0, 2), Err(GraphError::NotAnEdge(0, 2)));
    }
}
