//! Closed-form curvature of edges whose endpoints have equal degree, and the
//! edge and graph classifications built on top of it.
//!
//! For an edge `x ~ y` of degree `d` with optimal assignment cost `C` between
//! `R_x` and `R_y`:
//!
//! * κ = (d + 1 − C) / d
//! * κ_0 = (d − C₀) / d, with `C₀` the optimal cost between `S1(x) \ △` and
//!   `S1(y) \ △`
//! * κ_α = (1 − α)κ for α ≥ 1/(d + 1), and
//!   (1 − α)κ_0 + α·d·(κ − κ_0) below that.
//!
//! Edges with unequal endpoint degrees are handed to [`crate::transport`].

use serde::Serialize;
use thiserror::Error;

use crate::graph::{EdgeContext, Graph, GraphError};
use crate::lap::{self, CostMatrix};
use crate::rational::Rational;
use crate::transport::{self, TransportError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurvatureError {
    #[error("edge {x}-{y} has unequal degrees {deg_x} and {deg_y}")]
    UnequalDegrees {
        x: usize,
        y: usize,
        deg_x: usize,
        deg_y: usize,
    },
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("idleness {0} is outside [0, 1]")]
    AlphaOutOfRange(Rational),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no edges")]
    NoEdges,
    #[error("graph is not regular")]
    NotRegular,
    #[error(transparent)]
    Graph(GraphError),
    #[error(transparent)]
    Transport(TransportError),
}

impl From<GraphError> for CurvatureError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::NotAnEdge(x, y) => CurvatureError::NotAnEdge(x, y),
            e => CurvatureError::Graph(e),
        }
    }
}

impl From<TransportError> for CurvatureError {
    fn from(e: TransportError) -> Self {
        match e {
            TransportError::NotAnEdge(x, y) => CurvatureError::NotAnEdge(x, y),
            TransportError::AlphaOutOfRange(a) => CurvatureError::AlphaOutOfRange(a),
            TransportError::Graph(g) => g.into(),
            e => CurvatureError::Transport(e),
        }
    }
}

fn common_degree(ctx: &EdgeContext) -> Result<usize, CurvatureError> {
    ctx.equal_degree().ok_or(CurvatureError::UnequalDegrees {
        x: ctx.x,
        y: ctx.y,
        deg_x: ctx.deg_x,
        deg_y: ctx.deg_y,
    })
}

fn over_d(num: i64, d: usize) -> Rational {
    Rational::new(num, d as i64).expect("degree is positive")
}

fn leg_matrix(ctx: &EdgeContext) -> CostMatrix {
    CostMatrix::from_unsigned(&ctx.cost).expect("equal degrees give a square matrix")
}

/// Lin-Lu-Yau curvature from the optimal assignment between `R_x` and `R_y`.
pub fn kappa_lly_formula(ctx: &EdgeContext) -> Result<Rational, CurvatureError> {
    let d = common_degree(ctx)?;
    if ctx.rx.is_empty() {
        return Ok(over_d(d as i64 + 1, d));
    }
    let cost = lap::solve_auction(&leg_matrix(ctx)).total_cost;
    Ok(over_d(d as i64 + 1 - cost as i64, d))
}

/// κ together with the leg counts of one optimal assignment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ModifiedLly {
    pub kappa: Rational,
    /// Legs of length 1 (4-cycles through the edge).
    pub square_count: usize,
    /// Legs of length 2 (5-cycles through the edge).
    pub pentagon_count: usize,
}

/// κ = (−2d + 4 + 3|△| + 2|□| + |⬠|)/d. The reported assignment is, among
/// all optimal ones, one with the most unit legs.
pub fn kappa_lly_modified(ctx: &EdgeContext) -> Result<ModifiedLly, CurvatureError> {
    let d = common_degree(ctx)?;
    let (mut squares, mut pentagons) = (0, 0);
    if !ctx.rx.is_empty() {
        let m = leg_matrix(ctx);
        let n = m.n() as u64;
        // Scaling by n + 1 keeps optimal cost primary; the −1 on unit
        // entries breaks ties towards more squares.
        let biased = CostMatrix::from_fn(m.n(), |i, j| {
            let c = m.get(i, j);
            c * (n + 1) - u64::from(c == 1)
        });
        let sol = lap::solve_auction(&biased);
        for (i, &j) in sol.perm.iter().enumerate() {
            match m.get(i, j) {
                1 => squares += 1,
                2 => pentagons += 1,
                _ => {}
            }
        }
    }
    let num = -2 * d as i64
        + 4
        + 3 * ctx.triangle.len() as i64
        + 2 * squares as i64
        + pentagons as i64;
    Ok(ModifiedLly {
        kappa: over_d(num, d),
        square_count: squares,
        pentagon_count: pentagons,
    })
}

/// κ_0 from the assignment between `S1(x) \ △` and `S1(y) \ △`.
pub fn kappa_zero_formula(g: &Graph, x: usize, y: usize) -> Result<Rational, CurvatureError> {
    kappa_zero_from_context(&g.edge_context(x, y)?)
}

pub fn kappa_zero_from_context(ctx: &EdgeContext) -> Result<Rational, CurvatureError> {
    let d = common_degree(ctx)?;
    if ctx.rx.is_empty() {
        return Ok(over_d(d as i64 - 1, d));
    }
    let m = CostMatrix::from_unsigned(&ctx.zero_idleness_cost()).expect("square");
    let cost = lap::solve_auction(&m).total_cost;
    Ok(over_d(d as i64 - cost as i64, d))
}

/// κ_0 = κ − (3 − L)/d where `L` is the longest leg over all optimal
/// assignments; κ_0 = κ − 2/d when `R_x` is empty.
pub fn kappa_zero_via_relation(ctx: &EdgeContext) -> Result<Rational, CurvatureError> {
    let d = common_degree(ctx)?;
    let kappa = kappa_lly_formula(ctx)?;
    if ctx.rx.is_empty() {
        return Ok(kappa - over_d(2, d));
    }
    let leg = lap::min_assignment_cost_with_max_leg(&leg_matrix(ctx))
        .expect("edge costs lie in {1, 2, 3}");
    Ok(kappa - over_d(3 - leg.max_leg as i64, d))
}

/// κ_α for any α in [0, 1].
pub fn kappa_alpha_formula(ctx: &EdgeContext, alpha: Rational) -> Result<Rational, CurvatureError> {
    transport::check_alpha(alpha)?;
    Ok(idleness_profile(ctx)?.value_at(alpha))
}

/// The idleness function α ↦ κ_α of an equal-degree edge: linear on
/// `[0, b]` and on `[b, 1]` with `b = 1/(d + 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IdlenessProfile {
    pub degree: usize,
    pub breakpoint: Rational,
    pub value_at_zero: Rational,
    pub kappa: Rational,
    pub slope_first: Rational,
    pub slope_last: Rational,
}

impl IdlenessProfile {
    pub fn value_at(&self, alpha: Rational) -> Rational {
        let one = Rational::ONE;
        if alpha >= self.breakpoint {
            (one - alpha) * self.kappa
        } else {
            let d = Rational::integer(self.degree as i64);
            (one - alpha) * self.value_at_zero + alpha * d * (self.kappa - self.value_at_zero)
        }
    }

    /// `(start, end, value at start, value at end)` of each linear piece.
    /// A single piece when κ = κ_0.
    pub fn segments(&self) -> Vec<(Rational, Rational, Rational, Rational)> {
        let (zero, one, b) = (Rational::ZERO, Rational::ONE, self.breakpoint);
        if self.kappa == self.value_at_zero {
            vec![(zero, one, self.value_at(zero), zero)]
        } else {
            vec![
                (zero, b, self.value_at(zero), self.value_at(b)),
                (b, one, self.value_at(b), zero),
            ]
        }
    }

    pub fn is_identically_zero(&self) -> bool {
        self.kappa.is_zero() && self.value_at_zero.is_zero()
    }
}

pub fn idleness_profile(ctx: &EdgeContext) -> Result<IdlenessProfile, CurvatureError> {
    let d = common_degree(ctx)?;
    let kappa = kappa_lly_formula(ctx)?;
    let kappa0 = kappa_zero_from_context(ctx)?;
    Ok(profile_from(d, kappa, kappa0))
}

fn profile_from(d: usize, kappa: Rational, kappa0: Rational) -> IdlenessProfile {
    let dr = Rational::integer(d as i64);
    IdlenessProfile {
        degree: d,
        breakpoint: transport::lly_alpha(d),
        value_at_zero: kappa0,
        kappa,
        slope_first: dr * (kappa - kappa0) - kappa0,
        slope_last: -kappa,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeDegree {
    Equal(usize),
    Pair(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CurvatureReport {
    pub x: usize,
    pub y: usize,
    pub degree: EdgeDegree,
    pub kappa: Rational,
    pub kappa0: Rational,
    /// `c` with κ − κ_0 = c/d, for equal-degree edges.
    pub gap_numerator: Option<i64>,
    /// `1/(max(d_x, d_y) + 1)`.
    pub breakpoint: Rational,
    pub triangle_count: usize,
    pub is_ricci_flat_edge: bool,
    pub is_zero_ricci_flat_edge: bool,
    pub is_bone_idle_edge: bool,
    #[serde(skip)]
    pub context: EdgeContext,
}

impl CurvatureReport {
    /// κ_α at any idleness, using the closed form when degrees agree.
    pub fn kappa_alpha(&self, g: &Graph, alpha: Rational) -> Result<Rational, CurvatureError> {
        match self.degree {
            EdgeDegree::Equal(d) => {
                transport::check_alpha(alpha)?;
                Ok(profile_from(d, self.kappa, self.kappa0).value_at(alpha))
            }
            EdgeDegree::Pair(..) => Ok(transport::kappa_alpha_direct(g, self.x, self.y, alpha)?),
        }
    }

    pub fn profile(&self) -> Option<IdlenessProfile> {
        match self.degree {
            EdgeDegree::Equal(d) => Some(profile_from(d, self.kappa, self.kappa0)),
            EdgeDegree::Pair(..) => None,
        }
    }
}

pub fn edge_report(g: &Graph, x: usize, y: usize) -> Result<CurvatureReport, CurvatureError> {
    let ctx = g.edge_context(x, y)?;
    report_from_context(g, ctx)
}

fn report_from_context(g: &Graph, ctx: EdgeContext) -> Result<CurvatureReport, CurvatureError> {
    let (x, y) = (ctx.x, ctx.y);
    let (degree, kappa, kappa0, gap) = match ctx.equal_degree() {
        Some(d) => {
            let kappa = kappa_lly_formula(&ctx)?;
            let kappa0 = kappa_zero_from_context(&ctx)?;
            let gap = (kappa - kappa0) * Rational::integer(d as i64);
            debug_assert!(gap.is_integer());
            (EdgeDegree::Equal(d), kappa, kappa0, Some(gap.numer()))
        }
        None => {
            let kappa = transport::kappa_lly_direct(g, x, y)?;
            let kappa0 = transport::kappa_alpha_direct(g, x, y, Rational::ZERO)?;
            (EdgeDegree::Pair(ctx.deg_x, ctx.deg_y), kappa, kappa0, None)
        }
    };
    Ok(CurvatureReport {
        x,
        y,
        degree,
        kappa,
        kappa0,
        gap_numerator: gap,
        breakpoint: transport::lly_alpha(ctx.deg_x.max(ctx.deg_y)),
        triangle_count: ctx.triangle.len(),
        is_ricci_flat_edge: kappa.is_zero(),
        is_zero_ricci_flat_edge: kappa0.is_zero(),
        is_bone_idle_edge: kappa.is_zero() && kappa0.is_zero(),
        context: ctx,
    })
}

/// Reports for every edge in lexicographic order.
pub fn graph_reports(g: &Graph) -> Result<Vec<CurvatureReport>, CurvatureError> {
    g.edges().map(|(x, y)| edge_report(g, x, y)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GraphClass {
    /// Minimum Lin-Lu-Yau curvature over all edges.
    pub ric_min: Rational,
    pub ricci_flat: bool,
    pub zero_ricci_flat: bool,
    pub bone_idle: bool,
}

impl GraphClass {
    pub fn ric_positive(&self) -> bool {
        self.ric_min.is_positive()
    }

    pub fn from_reports(reports: &[CurvatureReport]) -> Option<GraphClass> {
        let ric_min = reports.iter().map(|r| r.kappa).min()?;
        Some(GraphClass {
            ric_min,
            ricci_flat: reports.iter().all(|r| r.is_ricci_flat_edge),
            zero_ricci_flat: reports.iter().all(|r| r.is_zero_ricci_flat_edge),
            bone_idle: reports.iter().all(|r| r.is_bone_idle_edge),
        })
    }
}

pub fn check_classifiable(g: &Graph) -> Result<(), CurvatureError> {
    if g.edge_count() == 0 {
        return Err(CurvatureError::NoEdges);
    }
    if !g.is_connected() {
        return Err(CurvatureError::Disconnected);
    }
    Ok(())
}

pub fn classify_graph(g: &Graph) -> Result<GraphClass, CurvatureError> {
    Ok(classify_with_reports(g)?.0)
}

pub fn classify_with_reports(
    g: &Graph,
) -> Result<(GraphClass, Vec<CurvatureReport>), CurvatureError> {
    check_classifiable(g)?;
    let reports = graph_reports(g)?;
    let class = GraphClass::from_reports(&reports).expect("at least one edge");
    Ok((class, reports))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PositivityAudit {
    /// Whether d > 2n/3 − 2.
    pub applies: bool,
    /// `ric_min > 0` when the bound applies; vacuously true otherwise.
    pub conclusion_verified: bool,
    pub ric_min: Option<Rational>,
}

/// Checks that a d-regular graph with d > 2n/3 − 2 has positive curvature on
/// every edge.
pub fn check_positivity_bound(g: &Graph) -> Result<PositivityAudit, CurvatureError> {
    let d = g.regular_degree().ok_or(CurvatureError::NotRegular)?;
    let applies = 3 * d + 6 > 2 * g.n();
    if !applies {
        return Ok(PositivityAudit {
            applies,
            conclusion_verified: true,
            ric_min: None,
        });
    }
    let class = classify_graph(g)?;
    Ok(PositivityAudit {
        applies,
        conclusion_verified: class.ric_positive(),
        ric_min: Some(class.ric_min),
    })
}
