//! Family expressions in the form `name[:p1[,p2]]`.
//!
//! `product A B` takes two nested expressions and builds `A □ B`.
//! `fixture:<name>` selects one of the drawn fixtures.

use ricci_core::families::{cartesian_product, Family, Fixture};
use ricci_core::Graph;

use crate::error::CliError;

pub const GRAMMAR: &str = "expected `name[:p1[,p2]]` with name one of cycle, path, star, \
complete, kbipartite, hypercube, cocktail, petersen, dodecahedral, prism, moebius, bi, \
sharpness, fixture:<example1|example2|counterexample_9v4r|petersen|dodecahedral>, \
or `product <expr> <expr>`";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphExpr {
    Family(Family),
    Product(Box<GraphExpr>, Box<GraphExpr>),
}

impl GraphExpr {
    pub fn build(&self) -> Result<Graph, CliError> {
        match self {
            GraphExpr::Family(f) => f.generate().map_err(parse_err),
            GraphExpr::Product(a, b) => {
                cartesian_product(&a.build()?, &b.build()?).map_err(parse_err)
            }
        }
    }

    /// Designated edge for fixtures and the sharpness construction.
    pub fn designated_edge(&self) -> Option<(usize, usize)> {
        match self {
            GraphExpr::Family(Family::Fixture(f)) => Some(f.designated_edge()),
            GraphExpr::Family(Family::Sharpness(_)) => Some((0, 1)),
            _ => None,
        }
    }
}

fn parse_err(msg: impl std::fmt::Display) -> CliError {
    CliError::Input(format!("{msg}; {GRAMMAR}"))
}

/// Parses a whitespace-separated token sequence into exactly one expression.
pub fn parse_expr<S: AsRef<str>>(tokens: &[S]) -> Result<GraphExpr, CliError> {
    let toks: Vec<&str> = tokens
        .iter()
        .flat_map(|t| t.as_ref().split_whitespace())
        .collect();
    let mut pos = 0;
    let expr = parse_one(&toks, &mut pos)?;
    if pos != toks.len() {
        return Err(parse_err(format!("unexpected trailing `{}`", toks[pos..].join(" "))));
    }
    Ok(expr)
}

fn parse_one(toks: &[&str], pos: &mut usize) -> Result<GraphExpr, CliError> {
    let tok = *toks.get(*pos).ok_or_else(|| parse_err("missing family expression"))?;
    *pos += 1;
    if tok == "product" {
        let a = parse_one(toks, pos)?;
        let b = parse_one(toks, pos)?;
        return Ok(GraphExpr::Product(Box::new(a), Box::new(b)));
    }
    let (name, params) = match tok.split_once(':') {
        Some((n, p)) => (n, Some(p)),
        None => (tok, None),
    };
    if name == "fixture" {
        let which = params.ok_or_else(|| parse_err("fixture needs a name"))?;
        let f: Fixture = which.parse().map_err(parse_err)?;
        return Ok(GraphExpr::Family(Family::Fixture(f)));
    }
    let nums: Vec<usize> = match params {
        None => Vec::new(),
        Some(p) => p
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| parse_err(format!("`{s}` is not a nonnegative integer in `{tok}`")))
            })
            .collect::<Result<_, _>>()?,
    };
    let arity = |want: usize| -> Result<(), CliError> {
        if nums.len() == want {
            Ok(())
        } else {
            Err(parse_err(format!("`{name}` takes {want} parameter(s), got {}", nums.len())))
        }
    };
    let one = |f: fn(usize) -> Family| -> Result<Family, CliError> {
        arity(1)?;
        Ok(f(nums[0]))
    };
    let family = match name {
        "cycle" => one(Family::Cycle)?,
        "path" => one(Family::Path)?,
        "star" => one(Family::Star)?,
        "complete" => one(Family::Complete)?,
        "hypercube" => one(Family::Hypercube)?,
        "cocktail" => one(Family::CocktailParty)?,
        "prism" => one(Family::Prism)?,
        "moebius" => one(Family::MoebiusLadder)?,
        "bi" => one(Family::BoneIdleRing)?,
        "sharpness" => one(Family::Sharpness)?,
        "kbipartite" => match nums.as_slice() {
            [a] => Family::CompleteBipartite(*a, *a),
            [a, b] => Family::CompleteBipartite(*a, *b),
            _ => return Err(parse_err("`kbipartite` takes 1 or 2 parameters")),
        },
        "petersen" => {
            arity(0)?;
            Family::Petersen
        }
        "dodecahedral" => {
            arity(0)?;
            Family::Dodecahedral
        }
        other => return Err(parse_err(format!("unknown family `{other}`"))),
    };
    Ok(GraphExpr::Family(family))
}
