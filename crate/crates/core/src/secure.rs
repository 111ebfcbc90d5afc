//! 2-secure domination: defender search, certificate-producing verifier,
//! the exact solver, and the two approximation pipelines built on the
//! greedy domination routines.
//!
//! A set `S` is 2-secure dominating when it dominates the graph and every
//! unordered pair of distinct vertices `{u1, u2}` (members of `S` included)
//! has distinct defenders `v1 ∈ N[u1] ∩ S`, `v2 ∈ N[u2] ∩ S` such that
//! `(S \ {v1, v2}) ∪ {u1, u2}` still dominates.

use std::fmt;

use crate::domination::{self, greedy_2dominating, greedy_dominating, is_dominating};
use crate::error::{Error, Result};
use crate::gadgets::{inapprox_gadget, InapproxVertices};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::report::{Problem, SolveReport};
use crate::search::{self, Masks};

/// Default vertex limit for the exact 2-SDS search.
pub const DEFAULT_SECURE_BUDGET: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DefenseEntry {
    pub attack: (Vertex, Vertex),
    pub defenders: (Vertex, Vertex),
}

/// Defender pair for every unordered attack pair, ordered by attack pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefenseCertificate {
    entries: Vec<DefenseEntry>,
}

impl DefenseCertificate {
    pub fn entries(&self) -> &[DefenseEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn defenders(&self, u1: Vertex, u2: Vertex) -> Option<(Vertex, Vertex)> {
        let key = (u1.min(u2), u1.max(u2));
        let entry = self
            .entries
            .binary_search_by_key(&key, |e| e.attack)
            .ok()
            .map(|i| self.entries[i])?;
        // Defenders are stored for the attack in ascending order.
        Some(if u1 <= u2 {
            entry.defenders
        } else {
            (entry.defenders.1, entry.defenders.0)
        })
    }

    /// Re-checks every entry against `g` and `s` from scratch: coverage of
    /// all pairs, membership, adjacency, and domination after the swap.
    pub fn replay(&self, g: &Graph, s: &VertexSet) -> bool {
        let n = g.n();
        if self.entries.len() != n * n.saturating_sub(1) / 2 {
            return false;
        }
        let pairs = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
        pairs.zip(&self.entries).all(|(pair, e)| {
            let (u1, u2) = e.attack;
            let (v1, v2) = e.defenders;
            if pair != e.attack || v1 == v2 || !s.contains(v1) || !s.contains(v2) {
                return false;
            }
            if !g.in_closed_neighborhood(v1, u1) || !g.in_closed_neighborhood(v2, u2) {
                return false;
            }
            let swapped: VertexSet = s
                .iter()
                .copied()
                .filter(|&x| x != v1 && x != v2)
                .chain([u1, u2])
                .collect();
            is_dominating(g, &swapped)
        })
    }
}

/// Why a candidate set is not 2-secure dominating.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rejection {
    InvalidVertex(Vertex),
    TooSmall { size: usize },
    Undominated(Vertex),
    Undefended { u1: Vertex, u2: Vertex },
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::InvalidVertex(v) => write!(f, "vertex {v} is not in the graph"),
            Rejection::TooSmall { size } => {
                write!(f, "set has {size} vertices, two distinct defenders are required")
            }
            Rejection::Undominated(v) => write!(f, "vertex {v} is not dominated"),
            Rejection::Undefended { u1, u2 } => write!(f, "attack on ({u1},{u2}) cannot be defended"),
        }
    }
}

/// Domination counts of `S`, reused across all attack pairs.
struct Defense<'a> {
    g: &'a Graph,
    member: Vec<bool>,
    count: Vec<usize>,
    undominated: Vec<Vertex>,
}

impl<'a> Defense<'a> {
    fn new(g: &'a Graph, s: &VertexSet) -> Self {
        let member = s.indicator(g.n());
        let count: Vec<usize> = g
            .vertices()
            .map(|x| usize::from(member[x]) + g.neighbors(x).iter().filter(|&&y| member[y]).count())
            .collect();
        let undominated = g.vertices().filter(|&x| count[x] == 0).collect();
        Self {
            g,
            member,
            count,
            undominated,
        }
    }

    fn closed_in_s(&self, u: Vertex) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = std::iter::once(u)
            .chain(self.g.neighbors(u).iter().copied())
            .filter(|&v| self.member[v])
            .collect();
        out.sort_unstable();
        out
    }

    /// Only vertices near a removed defender, or already undominated by `S`,
    /// can be undominated after the swap.
    fn swap_dominates(&self, u1: Vertex, u2: Vertex, v1: Vertex, v2: Vertex) -> bool {
        let g = self.g;
        let dominated = |x: Vertex| {
            if g.in_closed_neighborhood(x, u1) || g.in_closed_neighborhood(x, u2) {
                return true;
            }
            let lost = usize::from(g.in_closed_neighborhood(x, v1))
                + usize::from(g.in_closed_neighborhood(x, v2));
            self.count[x] > lost
        };
        let near = |v: Vertex| std::iter::once(v).chain(g.neighbors(v).iter().copied());
        near(v1).chain(near(v2)).all(dominated) && self.undominated.iter().all(|&x| dominated(x))
    }

    fn defend(&self, u1: Vertex, u2: Vertex) -> Option<(Vertex, Vertex)> {
        let first = self.closed_in_s(u1);
        let second = self.closed_in_s(u2);
        first.iter().find_map(|&v1| {
            second
                .iter()
                .find(|&&v2| v1 != v2 && self.swap_dominates(u1, u2, v1, v2))
                .map(|&v2| (v1, v2))
        })
    }
}

/// Lexicographically least ordered defender pair for the attack `(u1, u2)`.
pub fn find_defenders(
    g: &Graph,
    s: &VertexSet,
    u1: Vertex,
    u2: Vertex,
) -> Result<Option<(Vertex, Vertex)>> {
    g.check_vertex(u1)?;
    g.check_vertex(u2)?;
    for &v in s {
        g.check_vertex(v)?;
    }
    if u1 == u2 {
        return Err(Error::SameAttackers(u1));
    }
    Ok(Defense::new(g, s).defend(u1, u2))
}

/// Certificate for `s` if it is a 2-SDS of `g`; otherwise the first failure,
/// with attack pairs scanned in lexicographic order.
pub fn verify_2sds(g: &Graph, s: &VertexSet) -> std::result::Result<DefenseCertificate, Rejection> {
    if let Some(&v) = s.iter().find(|&&v| v >= g.n()) {
        return Err(Rejection::InvalidVertex(v));
    }
    if s.len() < 2 {
        return Err(Rejection::TooSmall { size: s.len() });
    }
    let defense = Defense::new(g, s);
    if let Some(&v) = defense.undominated.first() {
        return Err(Rejection::Undominated(v));
    }
    let n = g.n();
    let mut entries = Vec::with_capacity(n * (n - 1) / 2);
    for u1 in 0..n {
        for u2 in u1 + 1..n {
            let defenders = defense.defend(u1, u2).ok_or(Rejection::Undefended { u1, u2 })?;
            entries.push(DefenseEntry {
                attack: (u1, u2),
                defenders,
            });
        }
    }
    Ok(DefenseCertificate { entries })
}

pub fn is_2sds(g: &Graph, s: &VertexSet) -> bool {
    verify_2sds(g, s).is_ok()
}

fn require_connected(g: &Graph, min_n: usize) -> Result<()> {
    if g.n() < min_n {
        return Err(Error::InvalidParameter(format!(
            "graph needs at least {min_n} vertices, has {}",
            g.n()
        )));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Minimum 2-SDS by size-increasing enumeration from `max(2, γ(G))`.
/// Only dominating candidates reach the pair check. Returns the
/// lexicographically least minimum witness together with its certificate.
pub fn exact_gamma_2s(g: &Graph, budget: usize) -> Result<SolveReport> {
    require_connected(g, 2)?;
    let masks = Masks::new(g, budget)?;
    let mut examined = 0;
    let gamma = (1..=g.n())
        .find(|&k| search::first_dominating_subset(&masks, k, &mut examined, &mut |_| true).is_some())
        .expect("V dominates");
    for k in gamma.max(2)..=g.n() {
        let found =
            search::first_dominating_subset(&masks, k, &mut examined, &mut |s| masks.two_secure(s));
        if let Some(mask) = found {
            let witness = search::to_set(mask);
            let certificate = verify_2sds(g, &witness).expect("mask and list verifiers disagree");
            return Ok(SolveReport {
                problem: Problem::TwoSecureDominating,
                value: witness.len(),
                witness,
                certificate: Some(certificate),
                subsets_examined: examined,
            });
        }
    }
    unreachable!("V is a 2-SDS of every connected graph with n >= 2")
}

/// Greedy 2-dominating set `D2`, extended by a greedy dominating set of
/// `G[V \ D2]`.
pub fn approx_2sds(g: &Graph) -> Result<VertexSet> {
    require_connected(g, 2)?;
    let two_dom = greedy_2dominating(g);
    let rest = two_dom.complement(g.n());
    if rest.is_empty() {
        return Ok(two_dom);
    }
    let (sub, map) = g.induced_subgraph(&rest)?;
    Ok(two_dom.union(&map.lift(&greedy_dominating(&sub))))
}

/// Which branch of [`dom_set_approx`] produced the set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DomSetBranch {
    /// A dominating set of size at most `k` exists and was returned.
    Exact,
    /// The set was read off a 2-SDS of the inapproximability gadget.
    Gadget,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DomSetApprox {
    pub set: VertexSet,
    pub branch: DomSetBranch,
}

/// Dominating set through the inapproximability gadget: small optima are
/// found exactly, otherwise a 2-SDS `S` of the gadget is computed with
/// [`approx_2sds`], restricted to the original vertices, and patched by at
/// most one vertex for each of the two rules (`w2 ∈ S`; `w1, z1 ∈ S`).
pub fn dom_set_approx(g: &Graph, k: usize) -> Result<DomSetApprox> {
    require_connected(g, 1)?;
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    if let Some(set) = domination::dominating_set_at_most(g, k) {
        return Ok(DomSetApprox {
            set,
            branch: DomSetBranch::Exact,
        });
    }

    let gadget = inapprox_gadget(g);
    let gadget_set = approx_2sds(&gadget.graph)?;
    let n = g.n();
    let special = InapproxVertices::for_source(n);
    let mut set: VertexSet = gadget_set.iter().copied().filter(|&v| v < n).collect();

    if gadget_set.contains(special.w2) {
        if let Some(v) = domination::undominated_vertex(g, &set) {
            set.insert(v);
        }
    }
    if gadget_set.contains(special.w1) && gadget_set.contains(special.z1) {
        if let Some(v) = domination::undominated_vertex(g, &set) {
            set.insert(v);
        }
    }
    if !is_dominating(g, &set) {
        return Err(Error::PatchInsufficient {
            graph: g.clone(),
            set,
            gadget_set,
        });
    }
    Ok(DomSetApprox {
        set,
        branch: DomSetBranch::Gadget,
    })
}
