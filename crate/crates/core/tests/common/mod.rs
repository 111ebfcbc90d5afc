//! Test-only oracles written straight from the definitions: adjacency
//! matrices, full subset scans, no pruning, no shared code with the solvers.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use secdom::{Graph, VertexSet};

pub struct Oracle {
    n: usize,
    adj: Vec<Vec<bool>>,
}

impl Oracle {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut adj = vec![vec![false; n]; n];
        for (u, v) in g.edges() {
            adj[u][v] = true;
            adj[v][u] = true;
        }
        Self { n, adj }
    }

    fn closed(&self, a: usize, b: usize) -> bool {
        a == b || self.adj[a][b]
    }

    pub fn dominating(&self, s: &[bool]) -> bool {
        (0..self.n).all(|u| s[u] || (0..self.n).any(|v| s[v] && self.adj[u][v]))
    }

    pub fn two_dominating(&self, s: &[bool]) -> bool {
        (0..self.n).all(|u| s[u] || (0..self.n).filter(|&v| s[v] && self.adj[u][v]).count() >= 2)
    }

    /// Every ordered pair of distinct attacked vertices, every ordered pair
    /// of distinct defenders.
    pub fn two_secure(&self, s: &[bool]) -> bool {
        if !self.dominating(s) {
            return false;
        }
        let n = self.n;
        (0..n).all(|u1| {
            (0..n).filter(|&u2| u2 != u1).all(|u2| {
                (0..n).any(|v1| {
                    (0..n).any(|v2| {
                        if v1 == v2 || !s[v1] || !s[v2] || !self.closed(v1, u1) || !self.closed(v2, u2) {
                            return false;
                        }
                        let mut t = s.to_vec();
                        t[v1] = false;
                        t[v2] = false;
                        t[u1] = true;
                        t[u2] = true;
                        self.dominating(&t)
                    })
                })
            })
        })
    }

    fn minimum(&self, ok: impl Fn(&[bool]) -> bool) -> usize {
        let n = self.n;
        (0u32..1 << n)
            .filter_map(|mask| {
                let s: Vec<bool> = (0..n).map(|v| mask & (1 << v) != 0).collect();
                ok(&s).then_some(mask.count_ones() as usize)
            })
            .min()
            .expect("the full vertex set qualifies")
    }

    pub fn gamma(&self) -> usize {
        self.minimum(|s| self.dominating(s))
    }

    pub fn gamma2(&self) -> usize {
        self.minimum(|s| self.two_dominating(s))
    }

    pub fn gamma2s(&self) -> usize {
        self.minimum(|s| self.two_secure(s))
    }
}

pub fn flags(n: usize, set: &VertexSet) -> Vec<bool> {
    (0..n).map(|v| set.contains(v)).collect()
}

pub fn mask_set(n: usize, mask: u32) -> VertexSet {
    (0..n).filter(|&v| mask & (1 << v) != 0).collect()
}

pub fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new(n, edges.iter().copied()).unwrap()
}

pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

pub fn complete(n: usize) -> Graph {
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
}

pub fn star(leaves: usize) -> Graph {
    Graph::new(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
}

/// Seeded connected graphs: random spanning tree plus extra edges with
/// probability `p`. Independent of the crate's generators.
pub fn random_connected(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn edge_list(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("n={} [{}]", g.n(), edges.join(","))
}

/// Prints one acceptance line and fails the test when `failures` is
/// nonempty.
pub fn report(criterion: &str, checked: usize, failures: &[String]) {
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("{status} {criterion}: {checked} checks, {} failures", failures.len());
    for f in failures.iter().take(20) {
        println!("    {f}");
    }
    assert!(failures.is_empty(), "{criterion} failed: {failures:?}");
}
