//! Generators for named graphs and small fixtures.
//!
//! Every generator is deterministic; vertex numbering is documented per
//! family so that edges can be addressed by index.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid parameters for {family}: {reason}")]
    InvalidParams { family: &'static str, reason: String },
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("cartesian product of an empty graph")]
    EmptyGraph,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Fixture {
    /// Six vertices, designated edge with degrees (2, 3).
    Example1,
    /// Nine vertices, designated edge with degrees (3, 4).
    Example2,
    /// Nine-vertex 4-regular graph with a zero-curvature edge.
    Counterexample9v4r,
    Petersen,
    Dodecahedral,
}

impl Fixture {
    pub const ALL: [Fixture; 5] = [
        Fixture::Example1,
        Fixture::Example2,
        Fixture::Counterexample9v4r,
        Fixture::Petersen,
        Fixture::Dodecahedral,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Fixture::Example1 => "example1",
            Fixture::Example2 => "example2",
            Fixture::Counterexample9v4r => "counterexample_9v4r",
            Fixture::Petersen => "petersen",
            Fixture::Dodecahedral => "dodecahedral",
        }
    }

    /// The edge the fixture was drawn to illustrate.
    pub fn designated_edge(self) -> (usize, usize) {
        (0, 1)
    }
}

impl std::str::FromStr for Fixture {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Fixture::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| FamilyError::UnknownFixture(s.to_string()))
    }
}

impl fmt::Display for Fixture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// C_n on `0..n`, `i ~ i+1 mod n`.
    Cycle(usize),
    /// Path on `n` vertices.
    Path(usize),
    /// K_{1,k}: centre 0, leaves `1..=k`.
    Star(usize),
    Complete(usize),
    /// K_{a,b}: parts `0..a` and `a..a+b`.
    CompleteBipartite(usize, usize),
    /// Q_k on `0..2^k`, adjacent when labels differ in one bit.
    Hypercube(usize),
    /// K_{m×2} on `0..2m`; `2k` and `2k+1` are the only non-adjacent pairs.
    CocktailParty(usize),
    Petersen,
    Dodecahedral,
    /// Y_n = C_n □ K_2: outer cycle `0..n`, inner cycle `n..2n`, spokes `i ~ i+n`.
    Prism(usize),
    /// M_n: cycle on `0..2n` plus chords `i ~ i+n`.
    MoebiusLadder(usize),
    /// BI_n: inner cycle x_k = k, outer cycle y_k = n+k, and y_k ~ x_{k±1}.
    BoneIdleRing(usize),
    /// d-regular graph on (3d+8)/2 vertices whose edge (0, 1) has κ = 0 and
    /// κ_0 = −1/d.
    Sharpness(usize),
    Fixture(Fixture),
}

fn invalid(family: &'static str, reason: impl Into<String>) -> FamilyError {
    FamilyError::InvalidParams {
        family,
        reason: reason.into(),
    }
}

fn build(n: usize, edges: Vec<(usize, usize)>) -> Graph {
    Graph::from_edges(n, edges).expect("generator emits a simple graph")
}

fn cycle_edges(offset: usize, n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).map(move |i| (offset + i, offset + (i + 1) % n))
}

impl Family {
    pub fn generate(&self) -> Result<Graph, FamilyError> {
        match *self {
            Family::Cycle(n) => {
                if n < 3 {
                    return Err(invalid("cycle", format!("need n >= 3, got {n}")));
                }
                Ok(build(n, cycle_edges(0, n).collect()))
            }
            Family::Path(n) => {
                if n < 1 {
                    return Err(invalid("path", "need n >= 1"));
                }
                Ok(build(n, (1..n).map(|i| (i - 1, i)).collect()))
            }
            Family::Star(k) => {
                if k < 1 {
                    return Err(invalid("star", "need at least one leaf"));
                }
                Ok(build(k + 1, (1..=k).map(|i| (0, i)).collect()))
            }
            Family::Complete(n) => {
                if n < 1 {
                    return Err(invalid("complete", "need n >= 1"));
                }
                Ok(complete(n))
            }
            Family::CompleteBipartite(a, b) => {
                if a < 1 || b < 1 {
                    return Err(invalid("kbipartite", format!("need a, b >= 1, got {a}, {b}")));
                }
                let edges = (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))).collect();
                Ok(build(a + b, edges))
            }
            Family::Hypercube(k) => {
                if !(1..=20).contains(&k) {
                    return Err(invalid("hypercube", format!("need 1 <= k <= 20, got {k}")));
                }
                let n = 1usize << k;
                let edges = (0..n)
                    .flat_map(|v| (0..k).map(move |b| (v, v ^ (1 << b))))
                    .filter(|&(u, v)| u < v)
                    .collect();
                Ok(build(n, edges))
            }
            Family::CocktailParty(m) => {
                if m < 2 {
                    return Err(invalid("cocktail", format!("need m >= 2, got {m}")));
                }
                let n = 2 * m;
                let edges = (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .filter(|&(i, j)| i / 2 != j / 2)
                    .collect();
                Ok(build(n, edges))
            }
            Family::Petersen => Ok(generalized_petersen(5, 2)),
            Family::Dodecahedral => Ok(generalized_petersen(10, 2)),
            Family::Prism(n) => {
                if n < 3 {
                    return Err(invalid("prism", format!("need n >= 3, got {n}")));
                }
                let mut edges: Vec<_> = cycle_edges(0, n).chain(cycle_edges(n, n)).collect();
                edges.extend((0..n).map(|i| (i, i + n)));
                Ok(build(2 * n, edges))
            }
            Family::MoebiusLadder(n) => {
                if n < 2 {
                    return Err(invalid("moebius", format!("need n >= 2, got {n}")));
                }
                let mut edges: Vec<_> = cycle_edges(0, 2 * n).collect();
                edges.extend((0..n).map(|i| (i, i + n)));
                Ok(build(2 * n, edges))
            }
            Family::BoneIdleRing(n) => {
                if n < 6 {
                    return Err(invalid("bi", format!("need n >= 6, got {n}")));
                }
                let mut edges: Vec<_> = cycle_edges(0, n).chain(cycle_edges(n, n)).collect();
                for k in 0..n {
                    edges.push((n + k, (k + 1) % n));
                    edges.push((n + k, (k + n - 1) % n));
                }
                Ok(build(2 * n, edges))
            }
            Family::Sharpness(d) => sharpness(d),
            Family::Fixture(f) => Ok(figure_fixture(f)),
        }
    }

    /// Short label in the command-line grammar, e.g. `cycle:6`.
    pub fn label(&self) -> String {
        match *self {
            Family::Cycle(n) => format!("cycle:{n}"),
            Family::Path(n) => format!("path:{n}"),
            Family::Star(k) => format!("star:{k}"),
            Family::Complete(n) => format!("complete:{n}"),
            Family::CompleteBipartite(a, b) => format!("kbipartite:{a},{b}"),
            Family::Hypercube(k) => format!("hypercube:{k}"),
            Family::CocktailParty(m) => format!("cocktail:{m}"),
            Family::Petersen => "petersen".into(),
            Family::Dodecahedral => "dodecahedral".into(),
            Family::Prism(n) => format!("prism:{n}"),
            Family::MoebiusLadder(n) => format!("moebius:{n}"),
            Family::BoneIdleRing(n) => format!("bi:{n}"),
            Family::Sharpness(d) => format!("sharpness:{d}"),
            Family::Fixture(f) => format!("fixture:{f}"),
        }
    }
}

fn complete(n: usize) -> Graph {
    build(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect())
}

/// GP(n, k): outer cycle `0..n`, spokes `i ~ i+n`, inner `n+i ~ n+(i+k mod n)`.
fn generalized_petersen(n: usize, k: usize) -> Graph {
    let mut edges: Vec<_> = cycle_edges(0, n).collect();
    for i in 0..n {
        edges.push((i, n + i));
        edges.push((n + i, n + (i + k) % n));
    }
    build(2 * n, edges)
}

/// Layout with `l = d/2`: x = 0, y = 1, z_0..z_{l-3}, x_0..x_l, y_0..y_l,
/// v1, v2.
fn sharpness(d: usize) -> Result<Graph, FamilyError> {
    if d < 12 || d % 2 != 0 {
        return Err(invalid("sharpness", format!("need even d >= 12, got {d}")));
    }
    let l = d / 2;
    let z = |i: usize| 2 + i;
    let xi = |i: usize| 2 + (l - 2) + i;
    let yi = |i: usize| 2 + (l - 2) + (l + 1) + i;
    let v1 = 2 + (l - 2) + 2 * (l + 1);
    let v2 = v1 + 1;
    let n = v2 + 1;
    debug_assert_eq!(n, (3 * d + 8) / 2);
    let (x, y) = (0, 1);

    let mut edges = vec![(x, y)];
    for i in 0..=l - 3 {
        edges.push((x, z(i)));
        edges.push((y, z(i)));
    }
    for i in 0..=l {
        edges.push((x, xi(i)));
        edges.push((y, yi(i)));
    }
    for i in 0..=l - 3 {
        for j in (0..l).filter(|&j| j != i) {
            edges.push((z(i), xi(j)));
        }
        let skip = [(2 * i) % (l + 1), (2 * i + 1) % (l + 1)];
        for j in (0..=l).filter(|j| !skip.contains(j)) {
            edges.push((z(i), yi(j)));
        }
    }
    for i in 0..=l {
        for j in i + 1..=l {
            if (i, j) != (l - 2, l - 1) {
                edges.push((xi(i), xi(j)));
            }
            edges.push((yi(i), yi(j)));
        }
    }
    for j in 0..=l - 2 {
        edges.push((xi(l), yi(j)));
    }
    for v in [v1, v2] {
        for i in 0..l {
            edges.push((v, xi(i)));
        }
        for i in (0..=l - 6).chain([l - 1, l]) {
            edges.push((v, yi(i)));
        }
    }
    edges.extend([
        (v1, yi(l - 5)),
        (v1, yi(l - 4)),
        (v2, yi(l - 3)),
        (v2, yi(l - 2)),
        (v1, v2),
    ]);
    let g = build(n, edges);
    if g.regular_degree() != Some(d) {
        return Err(invalid("sharpness", format!("construction is not {d}-regular")));
    }
    Ok(g)
}

pub fn figure_fixture(f: Fixture) -> Graph {
    // One-based vertex labels as drawn; shifted to zero-based below.
    let one_based: &[(usize, usize)] = match f {
        Fixture::Example1 => &[(1, 2), (1, 3), (2, 4), (2, 5), (6, 3), (6, 4), (6, 5)],
        Fixture::Example2 => &[
            (1, 2),
            (1, 3),
            (1, 5),
            (2, 9),
            (2, 4),
            (3, 4),
            (2, 6),
            (5, 7),
            (6, 7),
            (3, 8),
            (5, 8),
            (8, 9),
        ],
        Fixture::Counterexample9v4r => &[
            (1, 2),
            (1, 3),
            (1, 4),
            (1, 5),
            (2, 6),
            (2, 7),
            (2, 8),
            (3, 4),
            (3, 5),
            (4, 5),
            (6, 7),
            (6, 8),
            (7, 8),
            (9, 3),
            (9, 4),
            (9, 7),
            (9, 6),
            (5, 8),
        ],
        Fixture::Petersen => return generalized_petersen(5, 2),
        Fixture::Dodecahedral => return generalized_petersen(10, 2),
    };
    let n = one_based.iter().map(|&(u, v)| u.max(v)).max().unwrap_or(0);
    build(n, one_based.iter().map(|&(u, v)| (u - 1, v - 1)).collect())
}

/// Cartesian product; vertex `(a, b)` gets index `a·|B| + b`.
pub fn cartesian_product(a: &Graph, b: &Graph) -> Result<Graph, FamilyError> {
    let (na, nb) = (a.n(), b.n());
    if na == 0 || nb == 0 {
        return Err(FamilyError::EmptyGraph);
    }
    let idx = |i: usize, j: usize| i * nb + j;
    let mut edges = Vec::with_capacity(na * b.edge_count() + nb * a.edge_count());
    for i in 0..na {
        for (u, v) in b.edges() {
            edges.push((idx(i, u), idx(i, v)));
        }
    }
    for (u, v) in a.edges() {
        for j in 0..nb {
            edges.push((idx(u, j), idx(v, j)));
        }
    }
    Ok(build(na * nb, edges))
}

/// `g □ g □ … □ g` with `k ≥ 1` factors.
pub fn cartesian_power(g: &Graph, k: usize) -> Result<Graph, FamilyError> {
    if k == 0 {
        return Err(invalid("product", "need at least one factor"));
    }
    let mut acc = g.clone();
    for _ in 1..k {
        acc = cartesian_product(&acc, g)?;
    }
    Ok(acc)
}
