//! Batch classification of graph6 files.
//!
//! Lines are read in fixed-size chunks; each chunk is classified in parallel
//! and written back in input order before the next chunk is read.

use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};

use rayon::prelude::*;
use ricci_core::curvature::{classify_with_reports, CurvatureReport};
use ricci_core::graph::parse_graph6;
use ricci_core::Rational;
use serde::{Serialize, Serializer};

use crate::error::CliError;
use crate::{Emit, ScanArgs};

const CHUNK: usize = 1024;

pub const CSV_COLUMNS: [&str; 8] = [
    "id",
    "n",
    "regular_degree",
    "ric_min_num",
    "ric_min_den",
    "ricci_flat",
    "zero_ricci_flat",
    "bone_idle",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegularDegree {
    Regular(usize),
    Irregular,
}

impl std::fmt::Display for RegularDegree {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RegularDegree::Regular(d) => write!(f, "{d}"),
            RegularDegree::Irregular => f.write_str("irregular"),
        }
    }
}

impl Serialize for RegularDegree {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            RegularDegree::Regular(d) => s.serialize_u64(*d as u64),
            RegularDegree::Irregular => s.serialize_str("irregular"),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EdgeDetail {
    pub x: usize,
    pub y: usize,
    pub kappa: Rational,
    pub kappa0: Rational,
    pub bone_idle: bool,
}

impl From<&CurvatureReport> for EdgeDetail {
    fn from(r: &CurvatureReport) -> Self {
        EdgeDetail {
            x: r.x,
            y: r.y,
            kappa: r.kappa,
            kappa0: r.kappa0,
            bone_idle: r.is_bone_idle_edge,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanRecord {
    /// One-based line number in the input.
    pub id: usize,
    pub n: usize,
    pub regular_degree: RegularDegree,
    pub ric_min: Rational,
    pub ric_positive: bool,
    pub ricci_flat: bool,
    pub zero_ricci_flat: bool,
    pub bone_idle: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<EdgeDetail>>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct ScanSummary {
    pub total: usize,
    pub ric_positive: usize,
    pub ricci_flat: usize,
    pub bone_idle: usize,
    pub failed: usize,
}

#[derive(Debug)]
enum LineFailure {
    Parse(String),
    Domain(String),
}

fn classify_line(id: usize, line: &str, detail: bool) -> Result<ScanRecord, LineFailure> {
    let g = parse_graph6(line.as_bytes()).map_err(|e| LineFailure::Parse(e.to_string()))?;
    let (class, reports) =
        classify_with_reports(&g).map_err(|e| LineFailure::Domain(e.to_string()))?;
    Ok(ScanRecord {
        id,
        n: g.n(),
        regular_degree: g
            .regular_degree()
            .map_or(RegularDegree::Irregular, RegularDegree::Regular),
        ric_min: class.ric_min,
        ric_positive: class.ric_positive(),
        ricci_flat: class.ricci_flat,
        zero_ricci_flat: class.zero_ricci_flat,
        bone_idle: class.bone_idle,
        edges: detail.then(|| reports.iter().map(EdgeDetail::from).collect()),
    })
}

struct Sink<'a> {
    emit: Emit,
    detail: bool,
    out: &'a mut dyn Write,
}

impl Sink<'_> {
    fn header(&mut self) -> io::Result<()> {
        if self.emit == Emit::Csv {
            let mut cols = CSV_COLUMNS.join(",");
            if self.detail {
                cols.push_str(",edges");
            }
            writeln!(self.out, "{cols}")?;
        }
        Ok(())
    }

    fn record(&mut self, r: &ScanRecord) -> io::Result<()> {
        match self.emit {
            Emit::Json => writeln!(self.out, "{}", serde_json::to_string(r).expect("serialisable")),
            Emit::Csv => {
                let mut w = csv::WriterBuilder::new()
                    .has_headers(false)
                    .from_writer(&mut *self.out);
                let mut row = vec![
                    r.id.to_string(),
                    r.n.to_string(),
                    r.regular_degree.to_string(),
                    r.ric_min.numer().to_string(),
                    r.ric_min.denom().to_string(),
                    r.ricci_flat.to_string(),
                    r.zero_ricci_flat.to_string(),
                    r.bone_idle.to_string(),
                ];
                if let Some(edges) = &r.edges {
                    let cells: Vec<String> = edges
                        .iter()
                        .map(|e| format!("{}-{}:{}:{}", e.x, e.y, e.kappa, e.kappa0))
                        .collect();
                    row.push(cells.join(" "));
                }
                w.write_record(&row).map_err(io::Error::other)?;
                w.flush()
            }
        }
    }

    fn footer(&mut self, s: &ScanSummary) -> io::Result<()> {
        match self.emit {
            Emit::Json => writeln!(
                self.out,
                "{}",
                serde_json::to_string(&serde_json::json!({ "summary": s })).expect("serialisable")
            ),
            Emit::Csv => writeln!(
                self.out,
                "# total={},ric_positive={},ricci_flat={},bone_idle={},failed={}",
                s.total, s.ric_positive, s.ricci_flat, s.bone_idle, s.failed
            ),
        }
    }
}

pub fn cmd_scan(args: &ScanArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    let reader: Box<dyn BufRead> = if args.input.as_os_str() == "-" {
        Box::new(BufReader::new(io::stdin()))
    } else {
        let f = File::open(&args.input).map_err(|e| {
            CliError::Input(format!("cannot open {}: {e}", args.input.display()))
        })?;
        Box::new(BufReader::new(f))
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs)
        .build()
        .map_err(|e| CliError::Input(format!("cannot start {} workers: {e}", args.jobs)))?;

    let mut sink = Sink {
        emit: args.emit,
        detail: args.detail,
        out,
    };
    sink.header()?;
    let mut summary = ScanSummary::default();
    let (mut parse_failures, mut domain_failures) = (0usize, 0usize);
    let mut lines = reader.lines().enumerate();
    loop {
        let mut chunk: Vec<(usize, String)> = Vec::with_capacity(CHUNK);
        for (i, line) in lines.by_ref() {
            let line = line.map_err(|e| CliError::Input(format!("read error: {e}")))?;
            if !line.trim().is_empty() {
                chunk.push((i + 1, line));
            }
            if chunk.len() == CHUNK {
                break;
            }
        }
        if chunk.is_empty() {
            break;
        }
        let results: Vec<_> = pool.install(|| {
            chunk
                .par_iter()
                .map(|(id, line)| (*id, classify_line(*id, line, args.detail)))
                .collect()
        });
        for (id, res) in results {
            match res {
                Ok(rec) => {
                    summary.total += 1;
                    summary.ric_positive += usize::from(rec.ric_positive);
                    summary.ricci_flat += usize::from(rec.ricci_flat);
                    summary.bone_idle += usize::from(rec.bone_idle);
                    sink.record(&rec)?;
                }
                Err(failure) => {
                    summary.failed += 1;
                    let msg = match failure {
                        LineFailure::Parse(m) => {
                            parse_failures += 1;
                            m
                        }
                        LineFailure::Domain(m) => {
                            domain_failures += 1;
                            m
                        }
                    };
                    writeln!(err, "line {id}: {msg}")?;
                }
            }
        }
    }
    sink.footer(&summary)?;
    if args.strict {
        if parse_failures > 0 {
            return Err(CliError::Input(format!("{parse_failures} line(s) failed to parse")));
        }
        if domain_failures > 0 {
            return Err(CliError::Domain(format!(
                "{domain_failures} graph(s) could not be classified"
            )));
        }
    }
    Ok(())
}
