//! Exhaustive census of connected d-regular graphs at small orders.
//!
//! Candidates are generated in breadth-first labelled form: vertices are
//! processed in index order, and vertex `v` completes its degree using
//! already discovered higher vertices plus a block of fresh ones. Every
//! connected graph has such a labelling, so the search is complete. Each
//! candidate is reduced to its canonical code and duplicates are dropped.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::curvature::{self, CurvatureError};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("(n = {n}, d = {d}) is outside the supported range: {envelope}")]
    OutOfSupportedRange {
        n: usize,
        d: usize,
        envelope: &'static str,
    },
    #[error("no {d}-regular graph on {n} vertices: {reason}")]
    InvalidRequest {
        n: usize,
        d: usize,
        reason: &'static str,
    },
    #[error(transparent)]
    Curvature(#[from] CurvatureError),
}

pub const SUPPORTED_RANGE: &str = "1 <= d, n <= 10 for d <= 3, n <= 9 for d >= 4";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CensusRequest {
    pub n: usize,
    pub d: usize,
}

impl CensusRequest {
    pub fn new(n: usize, d: usize) -> Result<Self, EnumerateError> {
        let cap = if d <= 3 { 10 } else { 9 };
        if d == 0 || n > cap {
            return Err(EnumerateError::OutOfSupportedRange {
                n,
                d,
                envelope: SUPPORTED_RANGE,
            });
        }
        if d >= n {
            return Err(EnumerateError::InvalidRequest { n, d, reason: "d must be below n" });
        }
        if (n * d) % 2 != 0 {
            return Err(EnumerateError::InvalidRequest { n, d, reason: "n·d must be even" });
        }
        Ok(CensusRequest { n, d })
    }
}

/// Graph6-order upper-triangle bits x(0,1), x(0,2), x(1,2), x(0,3), …
/// packed with the first bit most significant, so numeric order is
/// lexicographic order.
pub type CanonicalCode = u64;

const MAX_CANON_N: usize = 11;

fn code_len(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Smallest graph6 bit string over all relabelings of `g`.
pub fn canonical_code(g: &Graph) -> CanonicalCode {
    let n = g.n();
    assert!(n <= MAX_CANON_N, "canonical codes are limited to n <= {MAX_CANON_N}");
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    canonical_from_masks(&adj)
}

fn canonical_from_masks(adj: &[u32]) -> CanonicalCode {
    let n = adj.len();
    if n <= 1 {
        return 0;
    }
    let mut search = Canon {
        adj,
        perm: Vec::with_capacity(n),
        cols: Vec::with_capacity(n),
        best: None,
    };
    search.descend((1u32 << n) - 1);
    let cols = search.best.expect("some labelling exists");
    let mut code = 0u64;
    for (j, &col) in cols.iter().enumerate().skip(1) {
        code = (code << j) | col as u64;
    }
    code
}

/// Branch and bound over partial labellings. Column `k` of a labelling is the
/// adjacency of its `k`-th vertex to the `k` earlier ones, read as a k-bit
/// number; a labelling survives only while its column sequence can still
/// match or beat the best one found.
struct Canon<'a> {
    adj: &'a [u32],
    perm: Vec<usize>,
    cols: Vec<u32>,
    best: Option<Vec<u32>>,
}

impl Canon<'_> {
    fn column(&self, u: usize) -> u32 {
        self.perm
            .iter()
            .fold(0u32, |c, &p| (c << 1) | (self.adj[p] >> u & 1))
    }

    fn descend(&mut self, free: u32) {
        let k = self.perm.len();
        if free == 0 {
            if self.best.as_ref().map_or(true, |b| self.cols < *b) {
                self.best = Some(self.cols.clone());
            }
            return;
        }
        let mut min = u32::MAX;
        let mut rest = free;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            min = min.min(self.column(u));
        }
        if let Some(best) = &self.best {
            match self.cols[..].cmp(&best[..k]) {
                std::cmp::Ordering::Greater => return,
                std::cmp::Ordering::Equal if min > best[k] => return,
                _ => {}
            }
        }
        let mut rest = free;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.column(u) == min {
                self.perm.push(u);
                self.cols.push(min);
                self.descend(free & !(1 << u));
                self.cols.pop();
                self.perm.pop();
            }
        }
    }
}

/// Rebuilds the graph whose graph6 bit string is `code`.
pub fn graph_from_code(n: usize, code: CanonicalCode) -> Graph {
    let bits = code_len(n);
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> (bits - 1 - k) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges).expect("code describes a simple graph")
}

#[derive(Clone)]
struct Partial {
    n: usize,
    d: usize,
    adj: Vec<u32>,
    deg: Vec<usize>,
    discovered: usize,
    next: usize,
}

impl Partial {
    fn new(n: usize, d: usize) -> Self {
        Partial {
            n,
            d,
            adj: vec![0; n],
            deg: vec![0; n],
            discovered: 1,
            next: 0,
        }
    }

    fn link(&mut self, u: usize, w: usize) {
        self.adj[u] |= 1 << w;
        self.adj[w] |= 1 << u;
        self.deg[u] += 1;
        self.deg[w] += 1;
    }

    fn unlink(&mut self, u: usize, w: usize) {
        self.adj[u] &= !(1 << w);
        self.adj[w] &= !(1 << u);
        self.deg[u] -= 1;
        self.deg[w] -= 1;
    }

    /// Enumerates completions of vertex `self.next`. Calls `leaf` on each
    /// partial state once `stop_at` vertices are complete.
    fn expand(&mut self, stop_at: usize, leaf: &mut dyn FnMut(&Partial)) {
        let v = self.next;
        if v == stop_at || v == self.n {
            leaf(self);
            return;
        }
        if v >= self.discovered {
            // Queue ran dry before all vertices were reached.
            return;
        }
        let need = self.d - self.deg[v];
        let candidates: Vec<usize> = (v + 1..self.discovered)
            .filter(|&w| self.deg[w] < self.d && self.adj[v] >> w & 1 == 0)
            .collect();
        let c = candidates.len();
        for subset in 0u32..(1 << c) {
            let s = subset.count_ones() as usize;
            if s > need {
                continue;
            }
            let fresh = need - s;
            if self.discovered + fresh > self.n {
                continue;
            }
            let chosen: Vec<usize> = (0..c)
                .filter(|&i| subset >> i & 1 == 1)
                .map(|i| candidates[i])
                .collect();
            let base = self.discovered;
            for &w in &chosen {
                self.link(v, w);
            }
            for w in base..base + fresh {
                self.link(v, w);
            }
            self.discovered += fresh;
            self.next += 1;
            self.expand(stop_at, leaf);
            self.next -= 1;
            self.discovered -= fresh;
            for w in base..base + fresh {
                self.unlink(v, w);
            }
            for &w in &chosen {
                self.unlink(v, w);
            }
        }
    }
}

/// One representative per isomorphism class of connected `d`-regular graphs
/// on `n` vertices, sorted by canonical code.
pub fn enumerate_regular(req: CensusRequest) -> Vec<Graph> {
    enumerate_codes(req)
        .into_iter()
        .map(|code| graph_from_code(req.n, code))
        .collect()
}

pub fn enumerate_codes(req: CensusRequest) -> Vec<CanonicalCode> {
    let CensusRequest { n, d } = req;
    // Expand the first few vertices serially, then fan out.
    let split = 3.min(n);
    let mut roots = Vec::new();
    Partial::new(n, d).expand(split, &mut |p| roots.push(p.clone()));
    let codes: BTreeSet<CanonicalCode> = roots
        .into_par_iter()
        .map(|mut root| {
            let mut local = BTreeSet::new();
            root.expand(n, &mut |p| {
                debug_assert!(p.deg.iter().all(|&k| k == d));
                local.insert(canonical_from_masks(&p.adj));
            });
            local
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    codes.into_iter().collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CensusTable {
    pub n: usize,
    pub d: usize,
    pub total: usize,
    pub ric_positive: usize,
    pub bone_idle: usize,
    pub ricci_flat: usize,
}

pub fn census_with_classification(req: CensusRequest) -> Result<CensusTable, EnumerateError> {
    let graphs = enumerate_regular(req);
    let classes = graphs
        .par_iter()
        .map(curvature::classify_graph)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CensusTable {
        n: req.n,
        d: req.d,
        total: graphs.len(),
        ric_positive: classes.iter().filter(|c| c.ric_positive()).count(),
        bone_idle: classes.iter().filter(|c| c.bone_idle).count(),
        ricci_flat: classes.iter().filter(|c| c.ricci_flat).count(),
    })
}
