//! Simple undirected graphs on dense vertex ids `0..n`, plus the structural
//! primitives (neighborhoods, induced subgraphs, elimination orderings) the
//! solvers are built on.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// Immutable simple undirected graph. Neighbor lists are sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs and orientation are
    /// collapsed; out-of-range endpoints and self-loops are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::InvalidVertex { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            m += list.len();
        }
        Ok(Self { adj, m: m / 2 })
    }

    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// `u ∈ N[v]`.
    pub fn in_closed_neighborhood(&self, u: Vertex, v: Vertex) -> bool {
        u == v || self.has_edge(u, v)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                vertex: v,
                n: self.n(),
            })
        }
    }

    pub fn closed_neighborhood(&self, v: Vertex) -> Result<VertexSet> {
        self.check_vertex(v)?;
        let mut members = self.adj[v].clone();
        let pos = members.partition_point(|&x| x < v);
        members.insert(pos, v);
        Ok(VertexSet(members))
    }

    /// One traversal from vertex 0 reaches everything. The empty graph is
    /// reported as disconnected.
    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    queue.push_back(v);
                }
            }
        }
        reached == n
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// `G[keep]` with vertices renumbered contiguously in their original order.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Result<(Graph, SubgraphMap)> {
        if keep.is_empty() {
            return Err(Error::EmptyKeep);
        }
        for &v in keep.iter() {
            self.check_vertex(v)?;
        }
        let mut to_new = vec![None; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            to_new[v] = Some(i);
        }
        let adj = keep
            .iter()
            .map(|&v| self.adj[v].iter().filter_map(|&u| to_new[u]).collect::<Vec<_>>())
            .collect::<Vec<_>>();
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Ok((
            Graph { adj, m },
            SubgraphMap {
                to_old: keep.0.clone(),
                to_new,
            },
        ))
    }

    /// Least `u ∈ N[v]` whose closed neighborhood contains `N[w]` for every
    /// `w ∈ N[v]`.
    pub fn maximum_neighbor(&self, v: Vertex) -> Result<Option<Vertex>> {
        self.check_vertex(v)?;
        let alive = vec![true; self.n()];
        Ok(self.maximum_neighbor_within(v, &alive))
    }

    /// Peels the least-indexed doubly simplicial vertex until none remain.
    /// Returns the removal order when every vertex peels.
    pub fn find_dpeo(&self) -> Option<Ordering> {
        let n = self.n();
        let mut alive = vec![true; n];
        let mut perm = Vec::with_capacity(n);
        for _ in 0..n {
            let next = (0..n).find(|&v| alive[v] && self.is_doubly_simplicial_within(v, &alive))?;
            alive[next] = false;
            perm.push(next);
        }
        Some(Ordering(perm))
    }

    /// Replays `order` and checks every vertex is doubly simplicial in the
    /// subgraph induced by itself and its successors.
    pub fn is_dpeo(&self, order: &Ordering) -> bool {
        let n = self.n();
        if order.0.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &v in &order.0 {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        let mut alive = vec![true; n];
        for &v in &order.0 {
            if !self.is_doubly_simplicial_within(v, &alive) {
                return false;
            }
            alive[v] = false;
        }
        true
    }

    fn closed_within<'a>(&'a self, v: Vertex, alive: &'a [bool]) -> impl Iterator<Item = Vertex> + 'a {
        std::iter::once(v).chain(self.adj[v].iter().copied().filter(move |&u| alive[u]))
    }

    fn is_simplicial_within(&self, v: Vertex, alive: &[bool]) -> bool {
        let nbrs: Vec<Vertex> = self.adj[v].iter().copied().filter(|&u| alive[u]).collect();
        nbrs.iter()
            .enumerate()
            .all(|(i, &a)| nbrs[i + 1..].iter().all(|&b| self.has_edge(a, b)))
    }

    fn maximum_neighbor_within(&self, v: Vertex, alive: &[bool]) -> Option<Vertex> {
        let mut closed: Vec<Vertex> = self.closed_within(v, alive).collect();
        closed.sort_unstable();
        closed.iter().copied().find(|&u| {
            closed.iter().all(|&w| {
                self.closed_within(w, alive)
                    .all(|x| self.in_closed_neighborhood(x, u))
            })
        })
    }

    fn is_doubly_simplicial_within(&self, v: Vertex, alive: &[bool]) -> bool {
        self.is_simplicial_within(v, alive) && self.maximum_neighbor_within(v, alive).is_some()
    }
}

/// Vertex correspondence between a graph and one of its induced subgraphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgraphMap {
    to_old: Vec<Vertex>,
    to_new: Vec<Option<Vertex>>,
}

impl SubgraphMap {
    pub fn to_old(&self, v: Vertex) -> Vertex {
        self.to_old[v]
    }

    pub fn to_new(&self, v: Vertex) -> Option<Vertex> {
        self.to_new.get(v).copied().flatten()
    }

    pub fn lift(&self, set: &VertexSet) -> VertexSet {
        VertexSet(set.iter().map(|&v| self.to_old[v]).collect())
    }
}

/// Sorted, duplicate-free set of vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    pub fn all(n: usize) -> Self {
        Self((0..n).collect())
    }

    /// Checked constructor: every id must be valid for `g`.
    pub fn for_graph(g: &Graph, members: impl IntoIterator<Item = Vertex>) -> Result<Self> {
        let set: Self = members.into_iter().collect();
        for &v in set.iter() {
            g.check_vertex(v)?;
        }
        Ok(set)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn insert(&mut self, v: Vertex) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, v);
                true
            }
        }
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Vertex> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).copied().collect()
    }

    /// Vertices of `0..n` not in the set.
    pub fn complement(&self, n: usize) -> VertexSet {
        VertexSet((0..n).filter(|&v| !self.contains(v)).collect())
    }

    /// Membership indicator of length `n`.
    pub fn indicator(&self, n: usize) -> Vec<bool> {
        let mut flags = vec![false; n];
        for &v in &self.0 {
            flags[v] = true;
        }
        flags
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut members: Vec<Vertex> = iter.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        Self(members)
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a Vertex;
    type IntoIter = std::slice::Iter<'a, Vertex>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// A permutation of the vertices, e.g. an elimination order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ordering(Vec<Vertex>);

impl Ordering {
    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }
}
