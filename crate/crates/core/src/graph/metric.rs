use std::collections::{BTreeMap, VecDeque};

use super::{Graph, GraphError};

impl Graph {
    /// Shortest-path distance from `s` to `t`; `None` when unreachable.
    pub fn distance(&self, s: usize, t: usize) -> Result<Option<usize>, GraphError> {
        self.check_vertex(s)?;
        self.check_vertex(t)?;
        if s == t {
            return Ok(Some(0));
        }
        let mut dist = vec![usize::MAX; self.n()];
        let mut queue = VecDeque::from([s]);
        dist[s] = 0;
        while let Some(u) = queue.pop_front() {
            for &v in self.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    if v == t {
                        return Ok(Some(dist[v]));
                    }
                    queue.push_back(v);
                }
            }
        }
        Ok(None)
    }

    /// Distances from `s` to every vertex; `None` for unreachable ones.
    pub fn bfs_distances(&self, s: usize) -> Result<Vec<Option<usize>>, GraphError> {
        self.check_vertex(s)?;
        let mut dist = vec![None; self.n()];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &v in self.neighbors(u) {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        Ok(dist)
    }

    /// All vertices within `cap` steps of `s`, with their distances.
    pub fn bounded_distances(
        &self,
        s: usize,
        cap: usize,
    ) -> Result<BTreeMap<usize, usize>, GraphError> {
        self.check_vertex(s)?;
        let mut seen = BTreeMap::from([(s, 0)]);
        let mut frontier = vec![s];
        for depth in 1..=cap {
            let mut next = Vec::new();
            for &u in &frontier {
                for &v in self.neighbors(u) {
                    if let std::collections::btree_map::Entry::Vacant(e) = seen.entry(v) {
                        e.insert(depth);
                        next.push(v);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            frontier = next;
        }
        Ok(seen)
    }

    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n()];
        let mut count = 0;
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
        }
        count
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Length of a shortest cycle; `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let n = self.n();
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        for root in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            let mut queue = VecDeque::from([root]);
            'bfs: while let Some(u) = queue.pop_front() {
                // Nothing found from deeper levels can beat the current best.
                if let Some(b) = best {
                    if 2 * dist[u] + 1 >= b {
                        break 'bfs;
                    }
                }
                for &v in self.neighbors(u) {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        let len = dist[u] + dist[v] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Largest pairwise distance; `None` if disconnected. Graphs with fewer
    /// than two vertices have diameter 0.
    pub fn diameter(&self) -> Option<usize> {
        let mut diam = 0;
        for s in 0..self.n() {
            for d in self.bfs_distances(s).expect("vertex in range") {
                diam = diam.max(d?);
            }
        }
        Some(diam)
    }
}
