//! Classical domination and 2-domination: checkers, the two greedy
//! approximations, and an exact enumeration solver.

use crate::error::Result;
use crate::graph::{Graph, Vertex, VertexSet};
use crate::report::{Problem, SolveReport};
use crate::search::{self, Masks};

/// Default vertex limit for exact (2-)domination search.
pub const DEFAULT_DOMINATION_BUDGET: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DominationKind {
    Dominating,
    TwoDominating,
}

/// Every vertex outside `set` has a neighbor inside it.
pub fn is_dominating(g: &Graph, set: &VertexSet) -> bool {
    undominated_vertex(g, set).is_none()
}

/// Least vertex with no closed neighbor in `set`, if any.
pub fn undominated_vertex(g: &Graph, set: &VertexSet) -> Option<Vertex> {
    let member = set.indicator(g.n());
    g.vertices()
        .find(|&v| !member[v] && !g.neighbors(v).iter().any(|&u| member[u]))
}

/// Every vertex outside `set` has at least two neighbors inside it.
pub fn is_2dominating(g: &Graph, set: &VertexSet) -> bool {
    let member = set.indicator(g.n());
    g.vertices()
        .all(|v| member[v] || g.neighbors(v).iter().filter(|&&u| member[u]).count() >= 2)
}

/// Greedy set cover over closed neighborhoods: repeatedly take the vertex
/// covering the most uncovered vertices, least id on ties.
pub fn greedy_dominating(g: &Graph) -> VertexSet {
    let n = g.n();
    let mut uncovered = vec![true; n];
    let mut left = n;
    let mut chosen = VertexSet::new();
    while left > 0 {
        let gain = |v: Vertex| {
            usize::from(uncovered[v]) + g.neighbors(v).iter().filter(|&&u| uncovered[u]).count()
        };
        let best = argmax_least(g.vertices().map(gain));
        chosen.insert(best);
        for u in std::iter::once(best).chain(g.neighbors(best).iter().copied()) {
            if std::mem::replace(&mut uncovered[u], false) {
                left -= 1;
            }
        }
    }
    chosen
}

/// Greedy multicover for 2-domination. Each vertex starts with residual
/// demand 2; taking `v` clears its own demand and lowers every positive
/// neighbor demand by one. The gain of `v` is its own residual plus the
/// number of neighbors with positive residual.
pub fn greedy_2dominating(g: &Graph) -> VertexSet {
    let n = g.n();
    let mut residual = vec![2u32; n];
    let mut chosen = vec![false; n];
    let mut set = VertexSet::new();
    while residual.iter().any(|&r| r > 0) {
        let gain = |v: Vertex| {
            if chosen[v] {
                return 0;
            }
            residual[v] as usize + g.neighbors(v).iter().filter(|&&u| residual[u] > 0).count()
        };
        let best = argmax_least(g.vertices().map(gain));
        chosen[best] = true;
        set.insert(best);
        residual[best] = 0;
        for &u in g.neighbors(best) {
            residual[u] = residual[u].saturating_sub(1);
        }
    }
    set
}

fn argmax_least(gains: impl Iterator<Item = usize>) -> Vertex {
    let mut best = (0, 0);
    for (v, gain) in gains.enumerate() {
        if gain > best.1 {
            best = (v, gain);
        }
    }
    debug_assert!(best.1 > 0, "greedy loop ran without positive gain");
    best.0
}

/// Minimum set of the requested kind by size-increasing enumeration. The
/// lexicographically least minimum set is returned.
pub fn exact_minimum(g: &Graph, kind: DominationKind, budget: usize) -> Result<SolveReport> {
    let masks = Masks::new(g, budget)?;
    let mut examined = 0;
    let problem = match kind {
        DominationKind::Dominating => Problem::Dominating,
        DominationKind::TwoDominating => Problem::TwoDominating,
    };
    for k in 0..=g.n() {
        let found = match kind {
            DominationKind::Dominating => {
                search::first_dominating_subset(&masks, k, &mut examined, &mut |_| true)
            }
            DominationKind::TwoDominating => search::first_dominating_subset(
                &masks,
                k,
                &mut examined,
                &mut |s| masks.two_dominates(s),
            ),
        };
        if let Some(mask) = found {
            let witness = search::to_set(mask);
            return Ok(SolveReport {
                problem,
                value: witness.len(),
                witness,
                certificate: None,
                subsets_examined: examined,
            });
        }
    }
    unreachable!("the full vertex set satisfies every domination kind")
}

/// Lexicographically least minimum dominating set among those of size at
/// most `k`, without any vertex budget. Runs in `O(n^k)` subset checks.
pub fn dominating_set_at_most(g: &Graph, k: usize) -> Option<VertexSet> {
    let n = g.n();
    if n == 0 {
        return Some(VertexSet::new());
    }
    let member_limit = k.min(n);
    let mut chosen = Vec::with_capacity(member_limit);
    (1..=member_limit).find_map(|size| {
        chosen.clear();
        first_combination(g, size, 0, &mut chosen)
    })
}

fn first_combination(g: &Graph, size: usize, start: Vertex, chosen: &mut Vec<Vertex>) -> Option<VertexSet> {
    if chosen.len() == size {
        let set: VertexSet = chosen.iter().copied().collect();
        return is_dominating(g, &set).then_some(set);
    }
    for v in start..=g.n() - (size - chosen.len()) {
        chosen.push(v);
        if let Some(found) = first_combination(g, size, v + 1, chosen) {
            return Some(found);
        }
        chosen.pop();
    }
    None
}
