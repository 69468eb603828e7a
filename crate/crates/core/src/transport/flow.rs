//! Successive-shortest-path min-cost flow on small integer networks.

#[derive(Debug, Clone, Copy)]
struct Arc {
    to: usize,
    cap: i64,
    cost: i64,
}

#[derive(Debug, Clone)]
pub struct MinCostFlow {
    n: usize,
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
}

impl MinCostFlow {
    pub fn new(n: usize) -> Self {
        MinCostFlow {
            n,
            arcs: Vec::new(),
            out: vec![Vec::new(); n],
        }
    }

    /// Adds `from -> to` and its residual twin; returns the arc id.
    pub fn add_arc(&mut self, from: usize, to: usize, cap: i64, cost: i64) -> usize {
        let id = self.arcs.len();
        self.arcs.push(Arc { to, cap, cost });
        self.arcs.push(Arc { to: from, cap: 0, cost: -cost });
        self.out[from].push(id);
        self.out[to].push(id + 1);
        id
    }

    pub fn flow_on(&self, id: usize) -> i64 {
        self.arcs[id + 1].cap
    }

    /// Pushes up to `limit` units from `s` to `t` along cheapest augmenting
    /// paths (Bellman-Ford, so negative residual costs are fine). Returns
    /// `(flow, cost)`.
    pub fn run(&mut self, s: usize, t: usize, limit: i64) -> (i64, i64) {
        let (mut flow, mut cost) = (0i64, 0i64);
        while flow < limit {
            let mut dist = vec![i64::MAX; self.n];
            let mut via = vec![usize::MAX; self.n];
            dist[s] = 0;
            let mut changed = true;
            while changed {
                changed = false;
                for u in 0..self.n {
                    if dist[u] == i64::MAX {
                        continue;
                    }
                    for &id in &self.out[u] {
                        let a = self.arcs[id];
                        if a.cap > 0 && dist[u] + a.cost < dist[a.to] {
                            dist[a.to] = dist[u] + a.cost;
                            via[a.to] = id;
                            changed = true;
                        }
                    }
                }
            }
            if dist[t] == i64::MAX {
                break;
            }
            let mut push = limit - flow;
            let mut v = t;
            while v != s {
                let id = via[v];
                push = push.min(self.arcs[id].cap);
                v = self.arcs[id ^ 1].to;
            }
            let mut v = t;
            while v != s {
                let id = via[v];
                self.arcs[id].cap -= push;
                self.arcs[id ^ 1].cap += push;
                v = self.arcs[id ^ 1].to;
            }
            flow += push;
            cost += push * dist[t];
        }
        (flow, cost)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn picks_cheaper_route() {
        // 0 -> 1 -> 3 costs 2, 0 -> 2 -> 3 costs 5; capacity forces a split.
        let mut f = MinCostFlow::new(4);
        let a = f.add_arc(0, 1, 2, 1);
        f.add_arc(1, 3, 2, 1);
        let b = f.add_arc(0, 2, 5, 2);
        f.add_arc(2, 3, 5, 3);
        assert_eq!(f.run(0, 3, 3), (3, 2 * 2 + 5));
        assert_eq!((f.flow_on(a), f.flow_on(b)), (2, 1));
    }

    #[test]
    fn reroutes_through_residual_arcs() {
        let mut f = MinCostFlow::new(4);
        f.add_arc(0, 1, 1, 1);
        f.add_arc(0, 2, 1, 1);
        f.add_arc(1, 3, 1, 1);
        f.add_arc(1, 2, 1, 0);
        f.add_arc(2, 3, 1, 10);
        assert_eq!(f.run(0, 3, 10), (2, 13));
    }
}
