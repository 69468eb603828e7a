//! Exact 1-Wasserstein distances between finitely supported measures on a
//! graph, and the α-Ollivier-Ricci curvature computed from them.

mod flow;

pub use flow::MinCostFlow;

use std::collections::BTreeMap;

use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransportError {
    #[error("idleness {0} is outside [0, 1]")]
    AlphaOutOfRange(Rational),
    #[error("vertex {0} is isolated, so its measure needs idleness 1")]
    IsolatedVertex(usize),
    #[error("not a probability measure: {0}")]
    NotProbability(String),
    #[error("no path from {from} to {to}")]
    UnreachableMass { from: usize, to: usize },
    #[error("endpoints coincide at vertex {0}")]
    SameVertex(usize),
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("common denominator of the masses overflows")]
    Overflow,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Probability measure with finite support, atoms sorted by vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiscreteMeasure {
    atoms: Vec<(usize, Rational)>,
}

impl DiscreteMeasure {
    pub fn new(mut atoms: Vec<(usize, Rational)>) -> Result<Self, TransportError> {
        atoms.sort_by_key(|&(v, _)| v);
        if let Some(w) = atoms.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(TransportError::NotProbability(format!(
                "vertex {} appears twice",
                w[0].0
            )));
        }
        if let Some(&(v, m)) = atoms.iter().find(|(_, m)| !m.is_positive()) {
            return Err(TransportError::NotProbability(format!(
                "mass {m} at vertex {v} is not positive"
            )));
        }
        let total: Rational = atoms.iter().map(|&(_, m)| m).sum();
        if total != Rational::ONE {
            return Err(TransportError::NotProbability(format!(
                "total mass is {total}"
            )));
        }
        Ok(DiscreteMeasure { atoms })
    }

    pub fn dirac(v: usize) -> Self {
        DiscreteMeasure {
            atoms: vec![(v, Rational::ONE)],
        }
    }

    pub fn atoms(&self) -> &[(usize, Rational)] {
        &self.atoms
    }

    pub fn mass(&self, v: usize) -> Rational {
        self.atoms
            .binary_search_by_key(&v, |&(u, _)| u)
            .map_or(Rational::ZERO, |i| self.atoms[i].1)
    }
}

pub fn check_alpha(alpha: Rational) -> Result<(), TransportError> {
    if alpha < Rational::ZERO || alpha > Rational::ONE {
        Err(TransportError::AlphaOutOfRange(alpha))
    } else {
        Ok(())
    }
}

/// Lazy random walk step from `x`: mass `alpha` stays, the rest is spread
/// evenly over the neighbours. Zero-mass atoms are left out.
pub fn vertex_measure(
    g: &Graph,
    x: usize,
    alpha: Rational,
) -> Result<DiscreteMeasure, TransportError> {
    g.check_vertex(x)?;
    check_alpha(alpha)?;
    let deg = g.degree(x);
    if alpha == Rational::ONE {
        return Ok(DiscreteMeasure::dirac(x));
    }
    if deg == 0 {
        return Err(TransportError::IsolatedVertex(x));
    }
    let share = (Rational::ONE - alpha) / Rational::integer(deg as i64);
    let mut atoms: Vec<(usize, Rational)> = g.neighbors(x).iter().map(|&v| (v, share)).collect();
    if alpha.is_positive() {
        atoms.push((x, alpha));
    }
    atoms.sort_by_key(|&(v, _)| v);
    Ok(DiscreteMeasure { atoms })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Shipment {
    pub from: usize,
    pub to: usize,
    pub mass: Rational,
    pub distance: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransportPlan {
    pub shipments: Vec<Shipment>,
    pub cost: Rational,
}

impl TransportPlan {
    /// Mass leaving each vertex.
    pub fn outflow(&self) -> BTreeMap<usize, Rational> {
        let mut m = BTreeMap::new();
        for s in &self.shipments {
            let cur = m.get(&s.from).copied().unwrap_or_default();
            m.insert(s.from, cur + s.mass);
        }
        m
    }

    /// Mass arriving at each vertex.
    pub fn inflow(&self) -> BTreeMap<usize, Rational> {
        let mut m = BTreeMap::new();
        for s in &self.shipments {
            let cur = m.get(&s.to).copied().unwrap_or_default();
            m.insert(s.to, cur + s.mass);
        }
        m
    }
}

/// Exact W1 between `mu` and `nu`.
pub fn wasserstein1(
    g: &Graph,
    mu: &DiscreteMeasure,
    nu: &DiscreteMeasure,
) -> Result<Rational, TransportError> {
    Ok(optimal_plan(g, mu, nu, true)?.cost)
}

/// Optimal transport plan. With `clear_shared`, mass present in both
/// measures at the same vertex stays put and only the residual is routed
/// through the flow network; some optimal plan always does this.
pub fn optimal_plan(
    g: &Graph,
    mu: &DiscreteMeasure,
    nu: &DiscreteMeasure,
    clear_shared: bool,
) -> Result<TransportPlan, TransportError> {
    for &(v, _) in mu.atoms.iter().chain(&nu.atoms) {
        g.check_vertex(v)?;
    }
    let mut shipments = Vec::new();
    let mut supply: Vec<(usize, Rational)> = Vec::new();
    let mut demand: Vec<(usize, Rational)> = Vec::new();
    if clear_shared {
        for &(v, m) in &mu.atoms {
            let stay = m.min(nu.mass(v));
            if stay.is_positive() {
                shipments.push(Shipment { from: v, to: v, mass: stay, distance: 0 });
            }
            if m > stay {
                supply.push((v, m - stay));
            }
        }
        for &(v, m) in &nu.atoms {
            let rest = m - m.min(mu.mass(v));
            if rest.is_positive() {
                demand.push((v, rest));
            }
        }
    } else {
        supply = mu.atoms.clone();
        demand = nu.atoms.clone();
    }
    if supply.is_empty() {
        return Ok(TransportPlan { shipments, cost: Rational::ZERO });
    }

    let mut scale: i128 = 1;
    for &(_, m) in supply.iter().chain(&demand) {
        scale = scale.lcm(&(m.denom() as i128));
        if scale > i64::MAX as i128 {
            return Err(TransportError::Overflow);
        }
    }
    let to_units = |m: Rational| -> Result<i64, TransportError> {
        let units = m.numer() as i128 * (scale / m.denom() as i128);
        i64::try_from(units).map_err(|_| TransportError::Overflow)
    };

    let (ns, nd) = (supply.len(), demand.len());
    let source = 0;
    let sink = ns + nd + 1;
    let mut net = MinCostFlow::new(ns + nd + 2);
    let mut total = 0i64;
    for (i, &(_, m)) in supply.iter().enumerate() {
        let units = to_units(m)?;
        total = total.checked_add(units).ok_or(TransportError::Overflow)?;
        net.add_arc(source, 1 + i, units, 0);
    }
    for (j, &(_, m)) in demand.iter().enumerate() {
        net.add_arc(1 + ns + j, sink, to_units(m)?, 0);
    }
    let mut routes = Vec::with_capacity(ns * nd);
    for (i, &(u, _)) in supply.iter().enumerate() {
        let dist = g.bfs_distances(u)?;
        for (j, &(v, _)) in demand.iter().enumerate() {
            let d = dist[v].ok_or(TransportError::UnreachableMass { from: u, to: v })?;
            let id = net.add_arc(1 + i, 1 + ns + j, total, d as i64);
            routes.push((id, u, v, d));
        }
    }
    let (shipped, cost) = net.run(source, sink, total);
    assert_eq!(shipped, total, "balanced network must saturate");

    let unit = Rational::new(1, scale as i64).expect("positive scale");
    for (id, from, to, distance) in routes {
        let f = net.flow_on(id);
        if f > 0 {
            shipments.push(Shipment {
                from,
                to,
                mass: Rational::integer(f) * unit,
                distance,
            });
        }
    }
    shipments.sort_by_key(|s| (s.from, s.to));
    Ok(TransportPlan {
        shipments,
        cost: Rational::integer(cost) * unit,
    })
}

/// κ_α(x, y) = 1 − W1(μ_x^α, μ_y^α) / d(x, y). Works for any pair of distinct
/// vertices in one component, adjacent or not.
pub fn kappa_alpha_direct(
    g: &Graph,
    x: usize,
    y: usize,
    alpha: Rational,
) -> Result<Rational, TransportError> {
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    if x == y {
        return Err(TransportError::SameVertex(x));
    }
    check_alpha(alpha)?;
    let d = g
        .distance(x, y)?
        .ok_or(TransportError::UnreachableMass { from: x, to: y })?;
    let mu = vertex_measure(g, x, alpha)?;
    let nu = vertex_measure(g, y, alpha)?;
    let w = wasserstein1(g, &mu, &nu)?;
    Ok(Rational::ONE - w / Rational::integer(d as i64))
}

/// Lin-Lu-Yau curvature of an edge from a single transport problem at
/// `α = 1/(max(d_x, d_y) + 1)`, where κ_α = (1 − α)κ.
pub fn kappa_lly_direct(g: &Graph, x: usize, y: usize) -> Result<Rational, TransportError> {
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    if x == y {
        return Err(TransportError::SameVertex(x));
    }
    if !g.has_edge(x, y) {
        return Err(TransportError::NotAnEdge(x, y));
    }
    let alpha = lly_alpha(g.degree(x).max(g.degree(y)));
    let k = kappa_alpha_direct(g, x, y, alpha)?;
    Ok(k / (Rational::ONE - alpha))
}

/// `1/(d + 1)`, the start of the last linear piece of the idleness function.
pub fn lly_alpha(d: usize) -> Rational {
    Rational::new(1, d as i64 + 1).expect("positive denominator")
}
