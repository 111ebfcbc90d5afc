//! The three hardness constructions (inapproximability gadget, bounded-degree
//! APX gadget, GS graph). Original vertices keep their ids `0..n` in every
//! construction; role labels use 1-based names so they can be read against
//! hand-drawn figures.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GadgetKind {
    Inapprox,
    Apx,
    Gs,
}

impl GadgetKind {
    pub fn label(self) -> &'static str {
        match self {
            GadgetKind::Inapprox => "inapprox",
            GadgetKind::Apx => "apx",
            GadgetKind::Gs => "gs",
        }
    }
}

impl fmt::Display for GadgetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl std::str::FromStr for GadgetKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "inapprox" => Ok(GadgetKind::Inapprox),
            "apx" => Ok(GadgetKind::Apx),
            "gs" => Ok(GadgetKind::Gs),
            other => Err(Error::InvalidParameter(format!("unknown gadget kind '{other}'"))),
        }
    }
}

/// A constructed graph, a role label per vertex, and the parameter
/// translation back to the source instance.
#[derive(Clone, Debug)]
pub struct GadgetResult {
    pub kind: GadgetKind,
    pub source_n: usize,
    pub graph: Graph,
    pub roles: Vec<String>,
    pub param_map: Vec<(String, String)>,
}

impl GadgetResult {
    pub fn role(&self, v: Vertex) -> &str {
        &self.roles[v]
    }

    pub fn vertex(&self, role: &str) -> Option<Vertex> {
        self.roles.iter().position(|r| r == role)
    }
}

/// Ids of the five vertices the inapproximability gadget appends.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InapproxVertices {
    pub w1: Vertex,
    pub w2: Vertex,
    pub z1: Vertex,
    pub z2: Vertex,
    pub z3: Vertex,
}

impl InapproxVertices {
    pub fn for_source(n: usize) -> Self {
        Self {
            w1: n,
            w2: n + 1,
            z1: n + 2,
            z2: n + 3,
            z3: n + 4,
        }
    }
}

fn original_roles(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("v_{i}")).collect()
}

/// `G'` on `V ∪ {w1, w2, z1, z2, z3}`: both `w` vertices are joined to all
/// of `V`, `z1` hangs off `w1`, and the path `w2 - z2 - z3` hangs off `w2`.
/// There is no `w1 - w2` edge.
pub fn inapprox_gadget(g: &Graph) -> GadgetResult {
    let n = g.n();
    let x = InapproxVertices::for_source(n);
    let edges = g
        .edges()
        .chain((0..n).flat_map(|v| [(v, x.w1), (v, x.w2)]))
        .chain([(x.w1, x.z1), (x.w2, x.z2), (x.z2, x.z3)]);
    let graph = Graph::new(n + 5, edges).expect("gadget edges are in range");
    let mut roles = original_roles(n);
    roles.extend(["w1", "w2", "z1", "z2", "z3"].map(String::from));
    GadgetResult {
        kind: GadgetKind::Inapprox,
        source_n: n,
        graph,
        roles,
        param_map: vec![
            ("vertices".into(), format!("n+5={}", n + 5)),
            (
                "2sds_to_dom".into(),
                "a 2-SDS of size s in G' restricts to a dominating set of size <= s in G".into(),
            ),
            (
                "dom_to_2sds".into(),
                "a dominating set D of G gives the 2-SDS D+{w1,w2,z2} of size |D|+3 in G'".into(),
            ),
        ],
    }
}

/// Attachment units used by [`apx_gadget`]: `ceil(n/2)`.
pub fn apx_units(n: usize) -> usize {
    n.div_ceil(2)
}

/// Id of `x_unit^level` (both 1-based) in an APX gadget built from `n`
/// original vertices.
pub fn apx_vertex(n: usize, unit: usize, level: usize) -> Vertex {
    debug_assert!((1..=3).contains(&level) && unit >= 1);
    n + 3 * (unit - 1) + (level - 1)
}

/// Consecutive original vertices `(v_1, v_2), (v_3, v_4), ...` share an
/// attachment vertex `x_i^1`, an odd last vertex gets its own, and every
/// `x_i^1` carries the pendant path `x_i^1 - x_i^2 - x_i^3`.
pub fn apx_gadget(g: &Graph) -> GadgetResult {
    let n = g.n();
    let units = apx_units(n);
    let mut edges: Vec<(Vertex, Vertex)> = g.edges().collect();
    for v in 0..n {
        edges.push((v, apx_vertex(n, v / 2 + 1, 1)));
    }
    for unit in 1..=units {
        edges.push((apx_vertex(n, unit, 1), apx_vertex(n, unit, 2)));
        edges.push((apx_vertex(n, unit, 2), apx_vertex(n, unit, 3)));
    }
    let graph = Graph::new(n + 3 * units, edges).expect("gadget edges are in range");
    let mut roles = original_roles(n);
    for unit in 1..=units {
        roles.extend((1..=3).map(|level| format!("x_{unit}^{level}")));
    }
    let mut param_map = vec![
        ("vertices".into(), format!("n+3*ceil(n/2)={}", n + 3 * units)),
        (
            "gamma2s".into(),
            format!("gamma2s(G') = gamma(G) + 2*ceil(n/2) = gamma(G) + {}", 2 * units),
        ),
    ];
    for unit in 1..=units {
        let first = 2 * unit - 1;
        let attached = if 2 * unit <= n {
            format!("v_{first},v_{}", first + 1)
        } else {
            format!("v_{first}")
        };
        param_map.push((format!("attach.x_{unit}^1"), attached));
    }
    let delta = g.max_degree();
    if delta > 3 {
        param_map.push((
            "warning".into(),
            format!("source max degree {delta} exceeds 3; degree bound of G' does not apply"),
        ));
    }
    GadgetResult {
        kind: GadgetKind::Apx,
        source_n: n,
        graph,
        roles,
        param_map,
    }
}

/// Ids of the star unit attached to original vertex `v`: `(a, b, c, d)`
/// with `b` the center.
pub fn gs_unit(n: usize, v: Vertex) -> (Vertex, Vertex, Vertex, Vertex) {
    let base = n + 4 * v;
    (base, base + 1, base + 2, base + 3)
}

/// GS graph: every `v_i` gets a 4-vertex star (center `b_i`, leaves `a_i`,
/// `c_i`, `d_i`) joined through the edge `v_i - a_i`.
pub fn gs_graph(g: &Graph) -> Result<GadgetResult> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let mut edges: Vec<(Vertex, Vertex)> = g.edges().collect();
    let mut roles = original_roles(n);
    for v in 0..n {
        let (a, b, c, d) = gs_unit(n, v);
        edges.extend([(v, a), (b, a), (b, c), (b, d)]);
        roles.extend(["a", "b", "c", "d"].map(|r| format!("{r}_{}", v + 1)));
    }
    let graph = Graph::new(5 * n, edges).expect("gadget edges are in range");
    Ok(GadgetResult {
        kind: GadgetKind::Gs,
        source_n: n,
        graph,
        roles,
        param_map: vec![
            ("vertices".into(), format!("5n={}", 5 * n)),
            ("gamma2s".into(), format!("gamma2s(G') = 3n = {}", 3 * n)),
            (
                "domination".into(),
                format!("G has a dominating set of size <= k iff G' has one of size <= k+{n}"),
            ),
        ],
    })
}

/// The 2-SDS `{v_i, b_i, c_i}` of a GS graph built from `n` vertices.
pub fn gs_witness(n: usize) -> VertexSet {
    (0..n)
        .flat_map(|v| {
            let (_, b, c, _) = gs_unit(n, v);
            [v, b, c]
        })
        .collect()
}

/// `D ∪ {w1, w2, z2}` for a dominating set `D` of the source graph.
pub fn inapprox_witness(n: usize, dominating: &VertexSet) -> VertexSet {
    let x = InapproxVertices::for_source(n);
    dominating.iter().copied().chain([x.w1, x.w2, x.z2]).collect()
}

/// `D ∪ {x_i^1, x_i^2}` for a dominating set `D` of the source graph.
pub fn apx_witness(n: usize, dominating: &VertexSet) -> VertexSet {
    let attachments = (1..=apx_units(n)).flat_map(|u| [apx_vertex(n, u, 1), apx_vertex(n, u, 2)]);
    dominating.iter().copied().chain(attachments).collect()
}
