//! Standard graph families, deterministic and seeded-random.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Rejection-sampling attempts before `random-connected` gives up.
pub const MAX_CONNECTED_ATTEMPTS: usize = 100_000;

#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// Star with the given number of leaves.
    Star(usize),
    /// Comb with `n` spine vertices and `n` teeth.
    Comb(usize),
    RandomConnected { n: usize, p: f64 },
    RandomSplit { clique: usize, independent: usize, p: f64 },
}

pub const FAMILY_NAMES: [&str; 7] = [
    "path",
    "cycle",
    "complete",
    "star",
    "comb",
    "random-connected",
    "random-split",
];

impl Family {
    /// Parses a family name and its positional parameters, e.g.
    /// `("random-connected", ["8", "0.3"])`.
    pub fn parse(name: &str, params: &[String]) -> Result<Self> {
        let count = |i: usize| -> Result<usize> {
            let raw = params
                .get(i)
                .ok_or_else(|| Error::InvalidParameter(format!("{name}: missing parameter {}", i + 1)))?;
            let value: usize = raw
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("{name}: '{raw}' is not a count")))?;
            if value == 0 {
                return Err(Error::InvalidParameter(format!("{name}: sizes must be positive")));
            }
            Ok(value)
        };
        let probability = |i: usize| -> Result<f64> {
            let raw = params
                .get(i)
                .ok_or_else(|| Error::InvalidParameter(format!("{name}: missing probability")))?;
            let p: f64 = raw
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("{name}: '{raw}' is not a probability")))?;
            if !(p > 0.0 && p <= 1.0) {
                return Err(Error::InvalidParameter(format!(
                    "{name}: probability {p} outside (0,1]"
                )));
            }
            Ok(p)
        };
        let arity = match name {
            "path" | "cycle" | "complete" | "star" | "comb" => 1,
            "random-connected" => 2,
            "random-split" => 3,
            _ => return Err(Error::UnknownFamily(name.to_string())),
        };
        if params.len() != arity {
            return Err(Error::InvalidParameter(format!(
                "{name} takes {arity} parameter(s), got {}",
                params.len()
            )));
        }
        let family = match name {
            "path" => Family::Path(count(0)?),
            "cycle" => Family::Cycle(count(0)?),
            "complete" => Family::Complete(count(0)?),
            "star" => Family::Star(count(0)?),
            "comb" => Family::Comb(count(0)?),
            "random-connected" => Family::RandomConnected {
                n: count(0)?,
                p: probability(1)?,
            },
            _ => Family::RandomSplit {
                clique: count(0)?,
                independent: count(1)?,
                p: probability(2)?,
            },
        };
        if let Family::Cycle(n) = family {
            if n < 3 {
                return Err(Error::InvalidParameter("cycle needs at least 3 vertices".into()));
            }
        }
        Ok(family)
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Path(_) => "path",
            Family::Cycle(_) => "cycle",
            Family::Complete(_) => "complete",
            Family::Star(_) => "star",
            Family::Comb(_) => "comb",
            Family::RandomConnected { .. } => "random-connected",
            Family::RandomSplit { .. } => "random-split",
        }
    }

    pub fn is_random(&self) -> bool {
        matches!(self, Family::RandomConnected { .. } | Family::RandomSplit { .. })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) | Family::Cycle(n) | Family::Complete(n) | Family::Star(n) | Family::Comb(n) => {
                write!(f, "{} {n}", self.name())
            }
            Family::RandomConnected { n, p } => write!(f, "{} {n} {p}", self.name()),
            Family::RandomSplit {
                clique,
                independent,
                p,
            } => write!(f, "{} {clique} {independent} {p}", self.name()),
        }
    }
}

/// Builds a member of `family`. Random families draw from a ChaCha8 stream
/// seeded with `seed` (0 when absent); deterministic families ignore it.
pub fn generate(family: &Family, seed: Option<u64>) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.unwrap_or(0));
    generate_with(family, &mut rng)
}

pub fn generate_with<R: Rng + ?Sized>(family: &Family, rng: &mut R) -> Result<Graph> {
    match *family {
        Family::Path(n) => path(n),
        Family::Cycle(n) => cycle(n),
        Family::Complete(n) => complete(n),
        Family::Star(leaves) => star(leaves),
        Family::Comb(n) => comb(n),
        Family::RandomConnected { n, p } => random_connected(n, p, rng),
        Family::RandomSplit {
            clique,
            independent,
            p,
        } => random_split(clique, independent, p, rng),
    }
}

pub fn path(n: usize) -> Result<Graph> {
    Graph::new(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter("cycle needs at least 3 vertices".into()));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// Center 0 with leaves `1..=leaves`.
pub fn star(leaves: usize) -> Result<Graph> {
    Graph::new(leaves + 1, (1..=leaves).map(|i| (0, i)))
}

/// Spine `0 - 1 - ... - (n-1)` with tooth `i - (n+i)` on each spine vertex.
pub fn comb(n: usize) -> Result<Graph> {
    let spine = (1..n).map(|i| (i - 1, i));
    let teeth = (0..n).map(|i| (i, n + i));
    Graph::new(2 * n, spine.chain(teeth))
}

fn check_probability(p: f64) -> Result<()> {
    if p > 0.0 && p <= 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("probability {p} outside (0,1]")))
    }
}

/// `G(n, p)` conditioned on connectivity by rejection.
pub fn random_connected<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
    check_probability(p)?;
    if n == 0 {
        return Err(Error::InvalidParameter("graph needs at least one vertex".into()));
    }
    for _ in 0..MAX_CONNECTED_ATTEMPTS {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, edges)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::InvalidParameter(format!(
        "no connected G({n}, {p}) sample in {MAX_CONNECTED_ATTEMPTS} attempts"
    )))
}

/// Clique on `0..clique`, independent set on the rest. Each independent
/// vertex joins each clique vertex with probability `p`, and at least one.
pub fn random_split<R: Rng + ?Sized>(
    clique: usize,
    independent: usize,
    p: f64,
    rng: &mut R,
) -> Result<Graph> {
    check_probability(p)?;
    if clique == 0 {
        return Err(Error::InvalidParameter("split graph needs a nonempty clique".into()));
    }
    let mut edges: Vec<(Vertex, Vertex)> = (0..clique)
        .flat_map(|u| (u + 1..clique).map(move |v| (u, v)))
        .collect();
    for v in clique..clique + independent {
        let before = edges.len();
        for c in 0..clique {
            if rng.gen_bool(p) {
                edges.push((c, v));
            }
        }
        if edges.len() == before {
            edges.push((rng.gen_range(0..clique), v));
        }
    }
    Graph::new(clique + independent, edges)
}
