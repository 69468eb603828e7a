//! Independent oracles and shared fixtures for the integration tests.
//!
//! Nothing here calls into the code paths it is used to check: distances
//! come from Floyd-Warshall, W1 from a brute-force search over the dual
//! (1-Lipschitz potentials), canonical forms from all n! relabelings.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use ricci_core::families::{cartesian_power, cartesian_product, Family, Fixture};
use ricci_core::transport::DiscreteMeasure;
use ricci_core::{Graph, Rational};

pub fn floyd_warshall(g: &Graph) -> Vec<Vec<Option<usize>>> {
    let n = g.n();
    let inf = usize::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 0;
    }
    for (u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d.into_iter()
        .map(|row| row.into_iter().map(|x| (x < inf).then_some(x)).collect())
        .collect()
}

/// Shortest cycle through each edge: distance between its ends with the edge
/// removed, plus one.
pub fn girth_oracle(g: &Graph) -> Option<usize> {
    let edges: Vec<_> = g.edges().collect();
    let mut best = None;
    for &(u, v) in &edges {
        let rest = Graph::from_edges(g.n(), edges.iter().copied().filter(|&e| e != (u, v))).unwrap();
        if let Some(d) = floyd_warshall(&rest)[u][v] {
            best = Some(best.map_or(d + 1, |b: usize| b.min(d + 1)));
        }
    }
    best
}

/// graph6 built from an explicit bit string.
pub fn graph6_reference(g: &Graph) -> String {
    let n = g.n();
    let mut bits = String::new();
    for j in 0..n {
        for i in 0..j {
            bits.push(if g.has_edge(i, j) { '1' } else { '0' });
        }
    }
    while bits.len() % 6 != 0 {
        bits.push('0');
    }
    let mut out = String::new();
    out.push(char::from(n as u8 + 63));
    for chunk in bits.as_bytes().chunks(6) {
        let v = u8::from_str_radix(std::str::from_utf8(chunk).unwrap(), 2).unwrap();
        out.push(char::from(v + 63));
    }
    out
}

/// Every permutation of `0..n`, by Heap's algorithm.
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        for i in 0..k - 1 {
            heap(k - 1, a, out);
            if k % 2 == 0 {
                a.swap(i, k - 1);
            } else {
                a.swap(0, k - 1);
            }
        }
        heap(k - 1, a, out);
    }
    let mut out = Vec::new();
    heap(n, &mut (0..n).collect(), &mut out);
    out
}

/// Minimum over all relabelings of the graph6 bit string, as a string.
pub fn canonical_bruteforce(g: &Graph) -> String {
    let n = g.n();
    all_permutations(n)
        .into_iter()
        .map(|p| {
            // Vertex p[k] is placed at position k.
            let mut s = String::new();
            for j in 0..n {
                for i in 0..j {
                    s.push(if g.has_edge(p[i], p[j]) { '1' } else { '0' });
                }
            }
            s
        })
        .min()
        .unwrap()
}

pub fn code_to_bits(code: u64, n: usize) -> String {
    let len = n * n.saturating_sub(1) / 2;
    (0..len)
        .map(|k| if code >> (len - 1 - k) & 1 == 1 { '1' } else { '0' })
        .collect()
}

/// Cost and longest leg over all optimal permutations.
pub fn max_leg_oracle(rows: &[Vec<i64>]) -> (i64, i64) {
    let n = rows.len();
    let mut best = i64::MAX;
    let mut leg = 0;
    for p in all_permutations(n) {
        let cost: i64 = (0..n).map(|i| rows[i][p[i]]).sum();
        let longest = (0..n).map(|i| rows[i][p[i]]).max().unwrap_or(0);
        if cost < best {
            best = cost;
            leg = longest;
        } else if cost == best {
            leg = leg.max(longest);
        }
    }
    if n == 0 {
        (0, 0)
    } else {
        (best, leg)
    }
}

pub fn min_assignment_oracle(rows: &[Vec<i64>]) -> i64 {
    max_leg_oracle(rows).0
}

/// W1 via Kantorovich duality: the largest `Σ f(v)(μ(v) − ν(v))` over
/// integer potentials on the joint support with |f(u) − f(v)| ≤ d(u, v).
/// Difference constraints with integer bounds have integral optima, so the
/// integer search is exact.
pub fn w1_dual_oracle(g: &Graph, mu: &DiscreteMeasure, nu: &DiscreteMeasure) -> Rational {
    let dist = floyd_warshall(g);
    let mut support: Vec<usize> = mu.atoms().iter().chain(nu.atoms()).map(|&(v, _)| v).collect();
    support.sort_unstable();
    support.dedup();
    let weight: Vec<Rational> = support.iter().map(|&v| mu.mass(v) - nu.mass(v)).collect();
    let span = support
        .iter()
        .flat_map(|&a| support.iter().map(move |&b| (a, b)))
        .map(|(a, b)| dist[a][b].expect("connected support") as i64)
        .max()
        .unwrap_or(0);
    let mut f = vec![0i64; support.len()];
    let mut best = None;
    fn rec(
        k: usize,
        f: &mut Vec<i64>,
        support: &[usize],
        dist: &[Vec<Option<usize>>],
        weight: &[Rational],
        span: i64,
        best: &mut Option<Rational>,
    ) {
        if k == support.len() {
            let val: Rational = f
                .iter()
                .zip(weight)
                .map(|(&fv, &w)| Rational::integer(fv) * w)
                .sum();
            if best.map_or(true, |b| val > b) {
                *best = Some(val);
            }
            return;
        }
        for value in -span..=span {
            let ok = (0..k).all(|j| (value - f[j]).abs() <= dist[support[k]][support[j]].unwrap() as i64);
            if ok {
                f[k] = value;
                rec(k + 1, f, support, dist, weight, span, best);
            }
        }
    }
    // f is shift invariant; pin the first potential to 0.
    if support.is_empty() {
        return Rational::ZERO;
    }
    f[0] = 0;
    rec(1, &mut f, &support, &dist, &weight, span, &mut best);
    best.unwrap()
}

/// Uniform random simple connected d-regular graph by the pairing model
/// with rejection.
pub fn random_regular<R: Rng>(n: usize, d: usize, rng: &mut R) -> Graph {
    assert!(n * d % 2 == 0 && d < n);
    loop {
        let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat(v).take(d)).collect();
        points.shuffle(rng);
        let mut edges: Vec<(usize, usize)> = points
            .chunks(2)
            .map(|p| (p[0].min(p[1]), p[0].max(p[1])))
            .collect();
        if edges.iter().any(|&(u, v)| u == v) {
            continue;
        }
        edges.sort_unstable();
        if edges.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        let g = Graph::from_edges(n, edges).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}

/// Random (n, d) with n ≤ 14, 3 ≤ d ≤ 6, n·d even and d < n.
pub fn random_regular_params<R: Rng>(rng: &mut R) -> (usize, usize) {
    loop {
        let d = rng.gen_range(3..=6);
        let n = rng.gen_range(d + 1..=14);
        if n * d % 2 == 0 {
            return (n, d);
        }
    }
}

pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for j in 0..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn gen(f: Family) -> Graph {
    f.generate().unwrap()
}

/// Named graphs used across suites.
pub fn fixtures() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = Vec::new();
    let mut add = |f: Family| out.push((f.label(), gen(f)));
    for n in 3..=10 {
        add(Family::Cycle(n));
    }
    for n in 2..=7 {
        add(Family::Complete(n));
    }
    for n in 2..=5 {
        add(Family::CompleteBipartite(n, n));
    }
    add(Family::CompleteBipartite(2, 3));
    for k in 2..=4 {
        add(Family::Hypercube(k));
    }
    for m in 2..=5 {
        add(Family::CocktailParty(m));
    }
    add(Family::Petersen);
    add(Family::Dodecahedral);
    for n in 3..=7 {
        add(Family::Prism(n));
    }
    for n in 2..=7 {
        add(Family::MoebiusLadder(n));
    }
    for n in 6..=8 {
        add(Family::BoneIdleRing(n));
    }
    add(Family::Sharpness(12));
    add(Family::Path(5));
    add(Family::Star(4));
    for f in Fixture::ALL {
        add(Family::Fixture(f));
    }
    let k3 = gen(Family::Complete(3));
    let c5 = gen(Family::Cycle(5));
    out.push(("rook3x3".into(), cartesian_product(&k3, &k3).unwrap()));
    out.push(("c5^2".into(), cartesian_power(&c5, 2).unwrap()));
    out
}

pub fn rook_3x3() -> Graph {
    let k3 = gen(Family::Complete(3));
    cartesian_product(&k3, &k3).unwrap()
}

pub fn r(num: i64, den: i64) -> Rational {
    Rational::frac(num, den)
}
