//! Bitmask subset enumeration shared by the exact solvers.
//!
//! Subsets of a fixed size are visited in lexicographic order of their sorted
//! member lists, so the first accepted subset is the lexicographically least.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub(crate) const MAX_MASK_VERTICES: usize = 64;

pub(crate) struct Masks {
    pub n: usize,
    pub closed: Vec<u64>,
    pub open: Vec<u64>,
    pub full: u64,
}

impl Masks {
    pub fn new(g: &Graph, budget: usize) -> Result<Self> {
        let n = g.n();
        let limit = budget.min(MAX_MASK_VERTICES);
        if n > limit {
            return Err(Error::BudgetExceeded { n, budget: limit });
        }
        let open: Vec<u64> = g
            .vertices()
            .map(|v| g.neighbors(v).iter().fold(0, |acc, &u| acc | (1 << u)))
            .collect();
        let closed = open.iter().enumerate().map(|(v, &m)| m | (1 << v)).collect();
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Ok(Self {
            n,
            closed,
            open,
            full,
        })
    }

    pub fn dominates(&self, set: u64) -> bool {
        self.closed.iter().all(|&c| c & set != 0)
    }

    pub fn two_dominates(&self, set: u64) -> bool {
        (0..self.n).all(|x| set & (1 << x) != 0 || (self.open[x] & set).count_ones() >= 2)
    }

    /// Every unordered attack pair admits distinct defenders whose swap
    /// leaves a dominating set.
    pub fn two_secure(&self, set: u64) -> bool {
        if set.count_ones() < 2 || !self.dominates(set) {
            return false;
        }
        (0..self.n).all(|u1| (u1 + 1..self.n).all(|u2| self.defend(set, u1, u2).is_some()))
    }

    pub fn defend(&self, set: u64, u1: usize, u2: usize) -> Option<(usize, usize)> {
        let attackers = (1u64 << u1) | (1u64 << u2);
        for v1 in bits(self.closed[u1] & set) {
            for v2 in bits(self.closed[u2] & set) {
                if v1 == v2 {
                    continue;
                }
                let swapped = (set & !(1u64 << v1) & !(1u64 << v2)) | attackers;
                if self.dominates(swapped) {
                    return Some((v1, v2));
                }
            }
        }
        None
    }
}

pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

pub(crate) fn to_set(mask: u64) -> VertexSet {
    bits(mask).collect()
}

/// Lexicographically least `k`-subset that dominates the graph and passes
/// `accept`. Branches that can no longer dominate the least undominated
/// vertex are cut, which never removes a dominating subset.
pub(crate) fn first_dominating_subset(
    masks: &Masks,
    k: usize,
    examined: &mut u64,
    accept: &mut dyn FnMut(u64) -> bool,
) -> Option<u64> {
    fn go(
        masks: &Masks,
        start: usize,
        remaining: usize,
        chosen: u64,
        covered: u64,
        examined: &mut u64,
        accept: &mut dyn FnMut(u64) -> bool,
    ) -> Option<u64> {
        let undominated = masks.full & !covered;
        if remaining == 0 {
            *examined += 1;
            return (undominated == 0 && accept(chosen)).then_some(chosen);
        }
        if undominated != 0 {
            let u = undominated.trailing_zeros() as usize;
            let highest = 63 - masks.closed[u].leading_zeros() as usize;
            if highest < start {
                return None;
            }
        }
        for v in start..=masks.n - remaining {
            let found = go(
                masks,
                v + 1,
                remaining - 1,
                chosen | (1 << v),
                covered | masks.closed[v],
                examined,
                accept,
            );
            if found.is_some() {
                return found;
            }
        }
        None
    }

    if k > masks.n {
        return None;
    }
    go(masks, 0, k, 0, 0, examined, accept)
}
