use std::io::Write;

use ricci_core::curvature::{self, CurvatureReport, EdgeDegree};
use ricci_core::enumerate::{census_with_classification, CensusRequest};
use ricci_core::graph::emit_graph6;
use ricci_core::Rational;
use serde::Serialize;
use serde_json::json;

use crate::error::CliError;
use crate::source::LoadedGraph;
use crate::expr::parse_expr;
use crate::{CensusArgs, EdgeArgs, FamilyArgs, GraphArgs, GraphFormat};

#[derive(Debug, Serialize)]
struct AlphaValue {
    alpha: Rational,
    value: Rational,
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn degree_text(d: EdgeDegree) -> String {
    match d {
        EdgeDegree::Equal(d) => format!("{d} (equal)"),
        EdgeDegree::Pair(a, b) => format!("{a}, {b}"),
    }
}

pub fn cmd_edge(args: &EdgeArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let loaded = LoadedGraph::load(&args.source)?;
    let (x, y) = match (&args.x, &args.y) {
        (Some(x), Some(y)) => (loaded.vertex(x)?, loaded.vertex(y)?),
        (None, None) => loaded.designated_edge.ok_or_else(|| {
            CliError::Input("give the edge endpoints X Y".into())
        })?,
        _ => return Err(CliError::Input("give both endpoints X and Y".into())),
    };
    let g = &loaded.graph;
    let report = curvature::edge_report(g, x, y)?;

    let alphas: Vec<Rational> = if args.alphas.is_empty() {
        let b = report.breakpoint;
        vec![Rational::ZERO, b, Rational::frac(1, 2), Rational::ONE]
    } else {
        args.alphas
            .iter()
            .map(|a| a.parse::<Rational>().map_err(|e| CliError::Input(e.to_string())))
            .collect::<Result<_, _>>()?
    };
    let mut table = Vec::with_capacity(alphas.len());
    for alpha in alphas {
        table.push(AlphaValue {
            alpha,
            value: report.kappa_alpha(g, alpha)?,
        });
    }

    if args.json {
        let v = json!({
            "x": x,
            "y": y,
            "labels": [loaded.label(x), loaded.label(y)],
            "report": report,
            "kappa_alpha": table,
            "profile": report.profile(),
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("serialisable"))?;
        return Ok(());
    }
    writeln!(out, "edge {}-{}", loaded.label(x), loaded.label(y))?;
    writeln!(out, "degrees: {}", degree_text(report.degree))?;
    writeln!(out, "triangles: {}", report.triangle_count)?;
    writeln!(out, "kappa: {}", report.kappa)?;
    writeln!(out, "kappa_0: {}", report.kappa0)?;
    if let Some(c) = report.gap_numerator {
        writeln!(out, "gap: {} (c = {c})", report.kappa - report.kappa0)?;
    }
    writeln!(out, "breakpoint: {}", report.breakpoint)?;
    writeln!(
        out,
        "ricci_flat_edge: {}  zero_ricci_flat_edge: {}  bone_idle_edge: {}",
        yes_no(report.is_ricci_flat_edge),
        yes_no(report.is_zero_ricci_flat_edge),
        yes_no(report.is_bone_idle_edge)
    )?;
    writeln!(out, "kappa_alpha:")?;
    for row in &table {
        writeln!(out, "  alpha = {:<8} {}", row.alpha.to_string(), row.value)?;
    }
    Ok(())
}

fn edge_line(r: &CurvatureReport, loaded: &LoadedGraph) -> String {
    format!(
        "{:>4} {:>4}  {:>8}  {:>8}  {}{}{}",
        loaded.label(r.x),
        loaded.label(r.y),
        r.kappa.to_string(),
        r.kappa0.to_string(),
        if r.is_ricci_flat_edge { "F" } else { "-" },
        if r.is_zero_ricci_flat_edge { "Z" } else { "-" },
        if r.is_bone_idle_edge { "B" } else { "-" },
    )
}

pub fn cmd_graph(args: &GraphArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let loaded = LoadedGraph::load(&args.source)?;
    let g = &loaded.graph;
    let (class, reports) = curvature::classify_with_reports(g)?;
    let positivity = g
        .regular_degree()
        .map(|_| curvature::check_positivity_bound(g))
        .transpose()?;
    if args.json {
        let v = json!({
            "n": g.n(),
            "m": g.edge_count(),
            "regular_degree": g.regular_degree(),
            "girth": g.girth(),
            "diameter": g.diameter(),
            "class": class,
            "ric_positive": class.ric_positive(),
            "positivity_bound": positivity,
            "edges": reports,
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("serialisable"))?;
        return Ok(());
    }
    let opt = |v: Option<usize>| v.map_or("inf".to_string(), |v| v.to_string());
    writeln!(out, "n: {}  m: {}", g.n(), g.edge_count())?;
    writeln!(
        out,
        "regular degree: {}",
        g.regular_degree().map_or("irregular".to_string(), |d| d.to_string())
    )?;
    writeln!(out, "girth: {}  diameter: {}", opt(g.girth()), opt(g.diameter()))?;
    writeln!(out, "ric_min: {}", class.ric_min)?;
    writeln!(
        out,
        "ric_positive: {}  ricci_flat: {}  zero_ricci_flat: {}  bone_idle: {}",
        yes_no(class.ric_positive()),
        yes_no(class.ricci_flat),
        yes_no(class.zero_ricci_flat),
        yes_no(class.bone_idle)
    )?;
    if let Some(p) = positivity {
        writeln!(
            out,
            "degree bound d > 2n/3 - 2: {}{}",
            yes_no(p.applies),
            if p.applies { format!(" (Ric > 0: {})", yes_no(p.conclusion_verified)) } else { String::new() }
        )?;
    }
    writeln!(out, "   x    y     kappa   kappa_0  flags")?;
    for r in &reports {
        writeln!(out, "{}", edge_line(r, &loaded))?;
    }
    Ok(())
}

pub fn cmd_census(args: &CensusArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let req = CensusRequest::new(args.n, args.d)?;
    let table = census_with_classification(req)?;
    if args.json {
        writeln!(out, "{}", serde_json::to_string(&table).expect("serialisable"))?;
        return Ok(());
    }
    writeln!(out, "n = {}, d = {}", table.n, table.d)?;
    writeln!(out, "total: {}", table.total)?;
    writeln!(out, "ric_positive: {}", table.ric_positive)?;
    writeln!(out, "ricci_flat: {}", table.ricci_flat)?;
    writeln!(out, "bone_idle: {}", table.bone_idle)?;
    Ok(())
}

pub fn cmd_family(args: &FamilyArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let g = parse_expr(&args.expr)?.build()?;
    match args.format {
        GraphFormat::Graph6 => writeln!(out, "{}", emit_graph6(&g)?)?,
        GraphFormat::Edgelist => write!(out, "{}", g.to_edge_list())?,
    }
    Ok(())
}
