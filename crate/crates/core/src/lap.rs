//! Linear assignment on square integer cost matrices.
//!
//! [`solve_auction`] is the production solver. [`solve_hungarian`] and
//! [`solve_bruteforce`] exist as independent oracles.

use std::collections::VecDeque;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LapError {
    #[error("cost matrix is not square: row {row} has {len} entries, expected {n}")]
    NonSquare { row: usize, len: usize, n: usize },
    #[error("negative cost {value} at ({row}, {col})")]
    NegativeCost { row: usize, col: usize, value: i64 },
    #[error("brute force is limited to n <= {max}, got n = {n}")]
    TooLarge { n: usize, max: usize },
    #[error("entry {value} at ({row}, {col}) is outside {{1, 2, 3}}")]
    EntryOutOfRange { row: usize, col: usize, value: u64 },
}

pub const BRUTEFORCE_MAX_N: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CostMatrix {
    n: usize,
    entries: Vec<u64>,
}

impl CostMatrix {
    pub fn new<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self, LapError> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for (row, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != n {
                return Err(LapError::NonSquare { row, len: r.len(), n });
            }
            for (col, &value) in r.iter().enumerate() {
                if value < 0 {
                    return Err(LapError::NegativeCost { row, col, value });
                }
                entries.push(value as u64);
            }
        }
        Ok(CostMatrix { n, entries })
    }

    pub fn from_unsigned<R: AsRef<[u32]>>(rows: &[R]) -> Result<Self, LapError> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for (row, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != n {
                return Err(LapError::NonSquare { row, len: r.len(), n });
            }
            entries.extend(r.iter().map(|&v| v as u64));
        }
        Ok(CostMatrix { n, entries })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> u64) -> Self {
        let entries = (0..n * n).map(|k| f(k / n, k % n)).collect();
        CostMatrix { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.n + j]
    }

    pub fn max_entry(&self) -> u64 {
        self.entries.iter().copied().max().unwrap_or(0)
    }

    /// The matrix with row `i` and column `j` removed.
    pub fn minor(&self, i: usize, j: usize) -> CostMatrix {
        let m = self.n - 1;
        CostMatrix::from_fn(m, |r, c| {
            self.get(r + usize::from(r >= i), c + usize::from(c >= j))
        })
    }

    pub fn cost_of(&self, perm: &[usize]) -> u64 {
        perm.iter().enumerate().map(|(i, &j)| self.get(i, j)).sum()
    }
}

/// `perm[i]` is the column assigned to row `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssignmentSolution {
    pub perm: Vec<usize>,
    pub total_cost: u64,
}

impl AssignmentSolution {
    fn from_perm(c: &CostMatrix, perm: Vec<usize>) -> Self {
        debug_assert!(is_permutation(&perm), "solver returned a non-bijection");
        let total_cost = c.cost_of(&perm);
        AssignmentSolution { perm, total_cost }
    }
}

pub fn is_permutation(perm: &[usize]) -> bool {
    let mut seen = vec![false; perm.len()];
    perm.iter()
        .all(|&j| j < perm.len() && !std::mem::replace(&mut seen[j], true))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct AuctionStats {
    pub bids: u64,
}

pub fn solve_auction(c: &CostMatrix) -> AssignmentSolution {
    solve_auction_with_stats(c).0
}

/// Forward auction for minimisation. Costs are scaled by `n + 1` and `ε = 1`,
/// so the final assignment is within `n < n + 1` scaled units of optimal,
/// which on integer data means exactly optimal.
pub fn solve_auction_with_stats(c: &CostMatrix) -> (AssignmentSolution, AuctionStats) {
    let n = c.n();
    let mut stats = AuctionStats::default();
    if n == 0 {
        return (AssignmentSolution { perm: vec![], total_cost: 0 }, stats);
    }
    let scale = n as i64 + 1;
    let cost = |i: usize, j: usize| c.get(i, j) as i64 * scale;
    let mut price = vec![0i64; n];
    let mut owner: Vec<Option<usize>> = vec![None; n];
    let mut assigned: Vec<Option<usize>> = vec![None; n];
    let mut queue: VecDeque<usize> = (0..n).collect();

    while let Some(i) = queue.pop_front() {
        stats.bids += 1;
        let mut best = (i64::MAX, usize::MAX);
        let mut second = i64::MAX;
        for j in 0..n {
            let v = cost(i, j) + price[j];
            if v < best.0 {
                second = best.0;
                best = (v, j);
            } else if v < second {
                second = v;
            }
        }
        let (v1, j) = best;
        // A single object has no competitor; any positive raise is valid.
        let gamma = if n == 1 { 0 } else { second - v1 };
        price[j] += gamma + 1;
        if let Some(prev) = owner[j].replace(i) {
            assigned[prev] = None;
            queue.push_back(prev);
        }
        assigned[i] = Some(j);
    }
    let perm = assigned.into_iter().map(|j| j.expect("every bidder assigned")).collect();
    (AssignmentSolution::from_perm(c, perm), stats)
}

/// O(n³) Hungarian method with row/column potentials.
pub fn solve_hungarian(c: &CostMatrix) -> AssignmentSolution {
    let n = c.n();
    if n == 0 {
        return AssignmentSolution { perm: vec![], total_cost: 0 };
    }
    // 1-based arrays; column 0 is a virtual start.
    let inf = i64::MAX / 4;
    let mut u = vec![0i64; n + 1];
    let mut v = vec![0i64; n + 1];
    let mut p = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        p[0] = i;
        let mut j0 = 0;
        let mut minv = vec![inf; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut delta = inf;
            let mut j1 = 0;
            for j in 1..=n {
                if !used[j] {
                    let cur = c.get(i0 - 1, j - 1) as i64 - u[i0] - v[j];
                    if cur < minv[j] {
                        minv[j] = cur;
                        way[j] = j0;
                    }
                    if minv[j] < delta {
                        delta = minv[j];
                        j1 = j;
                    }
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut perm = vec![0; n];
    for j in 1..=n {
        perm[p[j] - 1] = j - 1;
    }
    AssignmentSolution::from_perm(c, perm)
}

/// Exhaustive search over all permutations; first optimum in lexicographic
/// order of `perm` wins.
pub fn solve_bruteforce(c: &CostMatrix) -> Result<AssignmentSolution, LapError> {
    let n = c.n();
    if n > BRUTEFORCE_MAX_N {
        return Err(LapError::TooLarge { n, max: BRUTEFORCE_MAX_N });
    }
    let mut best: Option<AssignmentSolution> = None;
    for_each_permutation(n, |perm| {
        let cost = c.cost_of(perm);
        if best.as_ref().map_or(true, |b| cost < b.total_cost) {
            best = Some(AssignmentSolution { perm: perm.to_vec(), total_cost: cost });
        }
    });
    Ok(best.expect("at least the empty permutation"))
}

/// Calls `f` on every permutation of `0..n` in lexicographic order.
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    fn rec(perm: &mut Vec<usize>, used: &mut [bool], f: &mut dyn FnMut(&[usize])) {
        let n = used.len();
        if perm.len() == n {
            f(perm);
            return;
        }
        for j in 0..n {
            if !used[j] {
                used[j] = true;
                perm.push(j);
                rec(perm, used, f);
                perm.pop();
                used[j] = false;
            }
        }
    }
    rec(&mut Vec::with_capacity(n), &mut vec![false; n], &mut f);
}

/// Optimal cost together with the largest single entry used by any optimal
/// assignment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MaxLeg {
    pub total: u64,
    pub max_leg: u64,
    /// Set for the 0×0 matrix, where `total` and `max_leg` are 0 by
    /// convention.
    pub empty: bool,
}

/// For each leg value `v` in 3, 2, 1, a cell `(i, j)` with cost `v` lies on
/// some optimal assignment iff the optimum of its minor plus `v` equals the
/// overall optimum.
pub fn min_assignment_cost_with_max_leg(c: &CostMatrix) -> Result<MaxLeg, LapError> {
    let n = c.n();
    for i in 0..n {
        for j in 0..n {
            let value = c.get(i, j);
            if !(1..=3).contains(&value) {
                return Err(LapError::EntryOutOfRange { row: i, col: j, value });
            }
        }
    }
    if n == 0 {
        return Ok(MaxLeg { total: 0, max_leg: 0, empty: true });
    }
    let total = solve_hungarian(c).total_cost;
    for v in (1..=3).rev() {
        for i in 0..n {
            for j in 0..n {
                if c.get(i, j) == v && solve_hungarian(&c.minor(i, j)).total_cost + v == total {
                    return Ok(MaxLeg { total, max_leg: v, empty: false });
                }
            }
        }
    }
    unreachable!("an optimal assignment uses at least one cell")
}
