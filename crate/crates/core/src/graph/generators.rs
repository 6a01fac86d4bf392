use std::fmt;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

/// Named graph families. Every count is the total number of vertices, except
/// `CompleteBipartite` which takes its two part sizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    /// `K_{1,n-1}` with the centre at 0.
    Star(usize),
    /// Hub 0, rim `1..n` in cyclic order.
    Wheel(usize),
    Empty(usize),
}

impl Family {
    pub fn order(&self) -> usize {
        match *self {
            Family::Path(n)
            | Family::Cycle(n)
            | Family::Complete(n)
            | Family::Star(n)
            | Family::Wheel(n)
            | Family::Empty(n) => n,
            Family::CompleteBipartite(a, b) => a + b,
        }
    }

    fn keyword(&self) -> &'static str {
        match self {
            Family::Path(_) => "path",
            Family::Cycle(_) => "cycle",
            Family::Complete(_) => "complete",
            Family::CompleteBipartite(..) => "complete_bipartite",
            Family::Star(_) => "star",
            Family::Wheel(_) => "wheel",
            Family::Empty(_) => "empty",
        }
    }

    /// Parses a family from its keyword and parameters, e.g. `("cycle", ["5"])`.
    pub fn from_args(family: &str, params: &[String]) -> Result<Family> {
        let nums = params
            .iter()
            .map(|p| {
                p.parse::<usize>()
                    .map_err(|_| Error::Invalid(format!("bad parameter {p:?} for {family}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let want = if family == "complete_bipartite" { 2 } else { 1 };
        if nums.len() != want {
            return Err(Error::Invalid(format!(
                "{family} takes {want} parameter(s), got {}",
                nums.len()
            )));
        }
        Ok(match family {
            "path" => Family::Path(nums[0]),
            "cycle" => Family::Cycle(nums[0]),
            "complete" => Family::Complete(nums[0]),
            "complete_bipartite" => Family::CompleteBipartite(nums[0], nums[1]),
            "star" => Family::Star(nums[0]),
            "wheel" => Family::Wheel(nums[0]),
            "empty" => Family::Empty(nums[0]),
            other => return Err(Error::Invalid(format!("unknown family {other:?}"))),
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::CompleteBipartite(a, b) => write!(f, "{} {a} {b}", self.keyword()),
            other => write!(f, "{} {}", other.keyword(), other.order()),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        let mut parts = s.split_whitespace();
        let family = parts
            .next()
            .ok_or_else(|| Error::Invalid("empty family".into()))?;
        let params: Vec<String> = parts.map(str::to_owned).collect();
        Family::from_args(family, &params)
    }
}

fn at_least(family: &'static str, min: usize, got: usize) -> Result<()> {
    if got < min {
        return Err(Error::BelowMinimum { family, min, got });
    }
    Ok(())
}

pub fn generate(family: Family) -> Result<Graph> {
    let mut edges = Vec::new();
    let (n, name) = match family {
        Family::Path(n) => {
            at_least("path", 1, n)?;
            edges.extend((1..n).map(|v| (v - 1, v)));
            (n, format!("P{n}"))
        }
        Family::Cycle(n) => {
            at_least("cycle", 3, n)?;
            edges.extend((1..n).map(|v| (v - 1, v)));
            edges.push((n - 1, 0));
            (n, format!("C{n}"))
        }
        Family::Complete(n) => {
            at_least("complete", 1, n)?;
            edges.extend((0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))));
            (n, format!("K{n}"))
        }
        Family::CompleteBipartite(a, b) => {
            at_least("complete_bipartite", 1, a)?;
            at_least("complete_bipartite", 1, b)?;
            edges.extend((0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))));
            (a + b, format!("K{a},{b}"))
        }
        Family::Star(n) => {
            at_least("star", 1, n)?;
            edges.extend((1..n).map(|v| (0, v)));
            (n, format!("K1,{}", n.saturating_sub(1)))
        }
        Family::Wheel(n) => {
            at_least("wheel", 4, n)?;
            edges.extend((1..n).map(|v| (0, v)));
            edges.extend((2..n).map(|v| (v - 1, v)));
            edges.push((n - 1, 1));
            (n, format!("W{n}"))
        }
        Family::Empty(n) => (n, format!("E{n}")),
    };
    Ok(Graph::new(n, edges)?.with_name(name))
}
