//! Experiment harness: the structural identity suite over all small connected
//! graphs, and the approximation-ratio table over generated instances.

use std::io::Write;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::domination::{exact_minimum, DominationKind};
use crate::enumerate;
use crate::error::{Error, Result};
use crate::gadgets::{self, apx_units};
use crate::generate::{self, Family};
use crate::graph::Graph;
use crate::secure::{approx_2sds, exact_gamma_2s, verify_2sds};

#[derive(Clone, Copy, Debug)]
pub struct Budgets {
    pub domination: usize,
    pub secure: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Self {
            domination: crate::domination::DEFAULT_DOMINATION_BUDGET,
            secure: crate::secure::DEFAULT_SECURE_BUDGET,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    Skip,
}

impl Outcome {
    fn label(self) -> &'static str {
        match self {
            Outcome::Pass => "PASS",
            Outcome::Fail => "FAIL",
            Outcome::Skip => "SKIP",
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

impl Summary {
    fn record(&mut self, outcome: Outcome) {
        match outcome {
            Outcome::Pass => self.pass += 1,
            Outcome::Fail => self.fail += 1,
            Outcome::Skip => self.skip += 1,
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct IdentityOptions {
    pub max_n: usize,
    pub budgets: Budgets,
    /// Test hook: detach `d_1` from its star in every GS graph.
    pub corrupt_gadget: bool,
}

fn edge_label(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().map(|(u, v)| format!("{u}-{v}")).collect();
    if edges.is_empty() {
        "none".into()
    } else {
        edges.join(",")
    }
}

fn gs_for(g: &Graph, corrupt: bool) -> Result<Graph> {
    let gadget = gadgets::gs_graph(g)?.graph;
    if !corrupt {
        return Ok(gadget);
    }
    let (_, b, _, d) = gadgets::gs_unit(g.n(), 0);
    Graph::new(gadget.n(), gadget.edges().filter(|&e| e != (b, d)))
}

/// Checks every identity on every connected graph with at most `max_n`
/// vertices (up to isomorphism), writing one line per check.
pub fn run_identities(opts: &IdentityOptions, out: &mut dyn Write) -> Result<Summary> {
    if opts.max_n == 0 || opts.max_n > enumerate::MAX_ENUMERATION_VERTICES {
        return Err(Error::InvalidParameter(format!(
            "--max-n must be in 1..={}",
            enumerate::MAX_ENUMERATION_VERTICES
        )));
    }
    let budgets = opts.budgets;
    let mut summary = Summary::default();
    let mut emit = |name: &str, g: &Graph, outcome: Outcome, detail: String| -> Result<()> {
        summary.record(outcome);
        writeln!(
            out,
            "{} {name} n={} m={} edges={} {detail}",
            outcome.label(),
            g.n(),
            g.m(),
            edge_label(g)
        )
        .map_err(io_err)
    };
    let compare = |lhs: Result<usize>, rhs: usize, relation: fn(usize, usize) -> bool| match lhs {
        Ok(lhs) => (
            if relation(lhs, rhs) { Outcome::Pass } else { Outcome::Fail },
            format!("lhs={lhs} rhs={rhs}"),
        ),
        Err(e) => (Outcome::Fail, format!("error={e}")),
    };

    for g in enumerate::connected_graphs_up_to(opts.max_n) {
        let n = g.n();
        let gamma = exact_minimum(&g, DominationKind::Dominating, budgets.domination)?;

        // GS graph: gamma2s(G') = 3n.
        let gs = gs_for(&g, opts.corrupt_gadget)?;
        if gs.n() <= budgets.secure {
            let (o, d) = compare(exact_gamma_2s(&gs, budgets.secure).map(|r| r.value), 3 * n, |a, b| a == b);
            emit("gs-theorem", &g, o, d)?;
        } else {
            emit("gs-theorem", &g, Outcome::Skip, format!("gadget_n={}", gs.n()))?;
        }
        let witness = gadgets::gs_witness(n);
        let o = if verify_2sds(&gs, &witness).is_ok() { Outcome::Pass } else { Outcome::Fail };
        emit("gs-witness", &g, o, format!("set={witness}"))?;

        // GS graph: gamma(G') = gamma(G) + n.
        if gs.n() <= budgets.domination {
            let lhs = exact_minimum(&gs, DominationKind::Dominating, budgets.domination).map(|r| r.value);
            let (o, d) = compare(lhs, gamma.value + n, |a, b| a == b);
            emit("gs-lemma", &g, o, d)?;
        } else {
            emit("gs-lemma", &g, Outcome::Skip, format!("gadget_n={}", gs.n()))?;
        }

        // APX gadget: gamma2s(G') = gamma(G) + 2 ceil(n/2), Delta(G') <= 4.
        let apx = gadgets::apx_gadget(&g).graph;
        if g.max_degree() > 3 {
            emit("apx-claim", &g, Outcome::Skip, format!("delta={}", g.max_degree()))?;
        } else if apx.n() > budgets.secure {
            emit("apx-claim", &g, Outcome::Skip, format!("gadget_n={}", apx.n()))?;
        } else {
            let rhs = gamma.value + 2 * apx_units(n);
            let (mut o, mut d) = compare(exact_gamma_2s(&apx, budgets.secure).map(|r| r.value), rhs, |a, b| a == b);
            if apx.max_degree() > 4 {
                o = Outcome::Fail;
            }
            d.push_str(&format!(" gadget_delta={}", apx.max_degree()));
            emit("apx-claim", &g, o, d)?;
        }

        // Inapproximability gadget: |V'| = n+5, gamma2s(G') <= gamma(G)+3.
        let inapprox = gadgets::inapprox_gadget(&g).graph;
        if inapprox.n() > budgets.secure {
            emit("inapprox-bound", &g, Outcome::Skip, format!("gadget_n={}", inapprox.n()))?;
        } else {
            let lhs = exact_gamma_2s(&inapprox, budgets.secure).map(|r| r.value);
            let (mut o, mut d) = compare(lhs, gamma.value + 3, |a, b| a <= b);
            let witness = gadgets::inapprox_witness(n, &gamma.witness);
            let witness_ok = verify_2sds(&inapprox, &witness).is_ok();
            if inapprox.n() != n + 5 || !witness_ok {
                o = Outcome::Fail;
            }
            d.push_str(&format!(" gadget_n={} witness_ok={witness_ok}", inapprox.n()));
            emit("inapprox-bound", &g, o, d)?;
        }
    }
    writeln!(
        out,
        "summary pass={} fail={} skip={}",
        summary.pass, summary.fail, summary.skip
    )
    .map_err(io_err)?;
    Ok(summary)
}

fn io_err(source: std::io::Error) -> Error {
    Error::Io {
        path: "<output>".into(),
        source,
    }
}

/// One line of the ratio table. Optional columns are blank when the exact
/// solver was not run.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct ExperimentRow {
    pub family: String,
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    pub gamma: Option<usize>,
    pub gamma2s: Option<usize>,
    pub approx_size: usize,
    pub ratio: Option<f64>,
    pub elapsed_ms: u64,
}

impl ExperimentRow {
    /// Approximation output verified and, when the optimum is known,
    /// within `Δ + 1` of it.
    pub fn within_bound(&self) -> bool {
        self.ratio.is_none_or(|r| r <= (self.delta + 1) as f64)
    }
}

#[derive(Clone, Debug)]
pub struct RatioOptions {
    pub family: String,
    pub n: usize,
    pub p: f64,
    pub trials: usize,
    pub seed: u64,
    pub budgets: Budgets,
}

fn family_for(name: &str, n: usize, p: f64) -> Result<Family> {
    let params: Vec<String> = match name {
        "random-connected" => vec![n.to_string(), p.to_string()],
        "random-split" => {
            if n < 2 {
                return Err(Error::InvalidParameter("random-split needs n >= 2".into()));
            }
            let clique = n.div_ceil(2);
            vec![clique.to_string(), (n - clique).to_string(), p.to_string()]
        }
        _ => vec![n.to_string()],
    };
    Family::parse(name, &params)
}

/// Runs `approx_2sds` on `trials` instances drawn from one seeded stream.
/// Fails if any output is not a 2-SDS.
pub fn run_ratios(opts: &RatioOptions) -> Result<Vec<ExperimentRow>> {
    let family = family_for(&opts.family, opts.n, opts.p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut rows = Vec::with_capacity(opts.trials);
    for _ in 0..opts.trials {
        let g = generate::generate_with(&family, &mut rng)?;
        let start = Instant::now();
        let approx = approx_2sds(&g)?;
        if let Err(rejection) = verify_2sds(&g, &approx) {
            return Err(Error::InvalidParameter(format!(
                "approx-2sds output {approx} rejected: {rejection}"
            )));
        }
        let gamma = (g.n() <= opts.budgets.domination)
            .then(|| exact_minimum(&g, DominationKind::Dominating, opts.budgets.domination))
            .transpose()?
            .map(|r| r.value);
        let gamma2s = (g.n() <= opts.budgets.secure)
            .then(|| exact_gamma_2s(&g, opts.budgets.secure))
            .transpose()?
            .map(|r| r.value);
        rows.push(ExperimentRow {
            family: family.name().to_string(),
            n: g.n(),
            m: g.m(),
            delta: g.max_degree(),
            gamma,
            gamma2s,
            approx_size: approx.len(),
            ratio: gamma2s.map(|opt| approx.len() as f64 / opt as f64),
            elapsed_ms: start.elapsed().as_millis() as u64,
        });
    }
    Ok(rows)
}

pub fn write_csv(rows: &[ExperimentRow], out: &mut dyn Write) -> Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    for row in rows {
        writer
            .serialize(row)
            .map_err(|e| Error::InvalidParameter(format!("csv: {e}")))?;
    }
    writer.flush().map_err(io_err)
}
