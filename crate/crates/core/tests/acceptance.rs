//! Acceptance suite. Each test covers one criterion and prints a single
//! PASS/FAIL line (run with `--nocapture` to see them).

mod common;

use std::path::Path;
use std::process::Command;

use common::*;
use secdom::cli::graphfile;
use secdom::domination::{
    exact_minimum, greedy_2dominating, greedy_dominating, is_dominating, DEFAULT_DOMINATION_BUDGET,
};
use secdom::enumerate::connected_graphs_up_to;
use secdom::gadgets::{self, apx_units};
use secdom::secure::{approx_2sds, dom_set_approx, exact_gamma_2s, verify_2sds, DomSetBranch, DEFAULT_SECURE_BUDGET};
use secdom::{DominationKind, Graph};

fn gamma(g: &Graph) -> usize {
    exact_minimum(g, DominationKind::Dominating, DEFAULT_DOMINATION_BUDGET)
        .unwrap()
        .value
}

fn gamma2s(g: &Graph) -> usize {
    exact_gamma_2s(g, DEFAULT_SECURE_BUDGET).unwrap().value
}

#[test]
fn criterion_01_verifier_matches_oracle() {
    let mut graphs: Vec<Graph> = connected_graphs_up_to(6).into_iter().filter(|g| g.n() >= 2).collect();
    let mut r = rng(101);
    graphs.extend((0..200).map(|_| random_connected(&mut r, 6, 0.3)));

    let mut checked = 0;
    let mut failures = Vec::new();
    for g in &graphs {
        let oracle = Oracle::new(g);
        let n = g.n();
        for mask in 0u32..1 << n {
            if mask.count_ones() < 2 {
                continue;
            }
            let s = mask_set(n, mask);
            let verdict = verify_2sds(g, &s);
            let expected = oracle.two_secure(&flags(n, &s));
            checked += 1;
            if verdict.is_ok() != expected {
                failures.push(format!("{} S={s} verifier={verdict:?} oracle={expected}", edge_list(g)));
            } else if let Ok(cert) = verdict {
                if !cert.replay(g, &s) || !is_dominating(g, &s) {
                    failures.push(format!("{} S={s} certificate does not replay", edge_list(g)));
                }
            }
        }
    }
    report("criterion 1 (verifier = definition oracle, n <= 6)", checked, &failures);
}

#[test]
fn criterion_02_gamma2s_table() {
    let mut failures = Vec::new();
    let mut checked = 0;
    let named = [("P3", path(3), 2), ("C4", cycle(4), 2), ("K1,3", star(3), 3)];
    for (name, g, expected) in &named {
        let oracle = Oracle::new(g).gamma2s();
        let value = gamma2s(g);
        checked += 1;
        if value != *expected || oracle != *expected {
            failures.push(format!("{name}: solver={value} oracle={oracle} expected={expected}"));
        }
    }
    for g in connected_graphs_up_to(6).into_iter().filter(|g| g.n() >= 2) {
        let report = exact_gamma_2s(&g, DEFAULT_SECURE_BUDGET).unwrap();
        let oracle = Oracle::new(&g);
        let (value, gamma) = (report.value, oracle.gamma());
        checked += 1;
        if value < gamma.max(2) || value > g.n() || value != oracle.gamma2s() {
            failures.push(format!("{}: gamma2s={value} gamma={gamma}", edge_list(&g)));
        }
        if !oracle.two_secure(&flags(g.n(), &report.witness)) || report.witness.len() != value {
            failures.push(format!("{}: witness {} rejected by oracle", edge_list(&g), report.witness));
        }
    }
    report("criterion 2 (gamma2s table, max(2,gamma) <= gamma2s <= n)", checked, &failures);
}

#[test]
fn criterion_03_gs_theorem() {
    let mut failures = Vec::new();
    let mut checked = 0;
    for (name, g) in [("K1", complete(1)), ("K2", complete(2)), ("K3", complete(3)), ("P3", path(3))] {
        let gs = gadgets::gs_graph(&g).unwrap().graph;
        let value = gamma2s(&gs);
        checked += 1;
        if value != 3 * g.n() {
            // Small enough for the definition-literal oracle to confirm.
            let oracle = (gs.n() <= 5).then(|| Oracle::new(&gs).gamma2s());
            failures.push(format!(
                "{name}: gamma2s(G')={value} (oracle {oracle:?}), expected 3n={}",
                3 * g.n()
            ));
        }
    }
    for g in connected_graphs_up_to(6) {
        let gs = gadgets::gs_graph(&g).unwrap().graph;
        let witness = gadgets::gs_witness(g.n());
        checked += 1;
        if let Err(rejection) = verify_2sds(&gs, &witness) {
            failures.push(format!("{}: {{v_i,b_i,c_i}} rejected: {rejection}", edge_list(&g)));
        }
    }
    report("criterion 3 (GS graph: gamma2s = 3n)", checked, &failures);
}

#[test]
fn criterion_04_gs_domination_lemma() {
    let mut failures = Vec::new();
    let cases = [
        ("K1", complete(1)),
        ("K2", complete(2)),
        ("K3", complete(3)),
        ("P4", path(4)),
        ("C4", cycle(4)),
    ];
    for (name, g) in &cases {
        let gs = gadgets::gs_graph(g).unwrap().graph;
        let (lhs, rhs) = (gamma(&gs), gamma(g) + g.n());
        if lhs != rhs {
            failures.push(format!("{name}: gamma(G')={lhs}, gamma(G)+n={rhs}"));
        }
    }
    report("criterion 4 (GS graph: gamma(G') = gamma(G) + n)", cases.len(), &failures);
}

#[test]
fn criterion_05_apx_identity() {
    let mut failures = Vec::new();
    let mut checked = 0;
    // Figure instance: 4-cycle v1 v2 v3 v4 with chord v2 v4.
    let figure = graph(4, &[(0, 1), (1, 2), (2, 3), (0, 3), (1, 3)]);
    let mut graphs = vec![figure];
    graphs.extend(connected_graphs_up_to(5).into_iter().filter(|g| g.max_degree() <= 3));
    for g in &graphs {
        let gadget = gadgets::apx_gadget(g).graph;
        let n = g.n();
        checked += 1;
        if gadget.n() != n + 3 * apx_units(n) || gadget.max_degree() > 4 {
            failures.push(format!("{}: gadget n={} delta={}", edge_list(g), gadget.n(), gadget.max_degree()));
        }
        let (lhs, rhs) = (gamma2s(&gadget), gamma(g) + 2 * apx_units(n));
        if lhs != rhs {
            failures.push(format!("{}: gamma2s(G')={lhs}, gamma(G)+2ceil(n/2)={rhs}", edge_list(g)));
        }
    }
    for g in connected_graphs_up_to(7).into_iter().filter(|g| g.max_degree() <= 3) {
        checked += 1;
        let delta = gadgets::apx_gadget(&g).graph.max_degree();
        if delta > 4 {
            failures.push(format!("{}: gadget max degree {delta}", edge_list(&g)));
        }
    }
    report("criterion 5 (APX gadget: gamma2s = gamma + 2ceil(n/2), delta <= 4)", checked, &failures);
}

#[test]
fn criterion_06_inapprox_bound() {
    let mut failures = Vec::new();
    let graphs = connected_graphs_up_to(6);
    for g in &graphs {
        let n = g.n();
        let gadget = gadgets::inapprox_gadget(g).graph;
        let dom = exact_minimum(g, DominationKind::Dominating, DEFAULT_DOMINATION_BUDGET).unwrap();
        if gadget.n() != n + 5 {
            failures.push(format!("{}: gadget has {} vertices", edge_list(g), gadget.n()));
        }
        let value = gamma2s(&gadget);
        if value > dom.value + 3 {
            failures.push(format!("{}: gamma2s(G')={value} > gamma+3={}", edge_list(g), dom.value + 3));
        }
        let witness = gadgets::inapprox_witness(n, &dom.witness);
        if let Err(rejection) = verify_2sds(&gadget, &witness) {
            failures.push(format!("{}: D*+{{w1,w2,z2}} rejected: {rejection}", edge_list(g)));
        }
    }
    report("criterion 6 (inapprox gadget: n+5 vertices, gamma2s <= gamma+3)", graphs.len(), &failures);
}

#[test]
fn criterion_07_approx_2sds() {
    let mut failures = Vec::new();
    let mut r = rng(707);
    let mut ratio_checks = 0;
    let trials = 600;
    for i in 0..trials {
        let n = 2 + i % 19;
        let p = [0.1, 0.25, 0.5][i % 3];
        let g = random_connected(&mut r, n, p);
        let d = approx_2sds(&g).unwrap();
        if let Err(rejection) = verify_2sds(&g, &d) {
            failures.push(format!("{}: output {d} rejected: {rejection}", edge_list(&g)));
            continue;
        }
        if n <= 9 {
            ratio_checks += 1;
            let bound = (g.max_degree() + 1) * gamma2s(&g);
            if d.len() > bound {
                failures.push(format!("{}: |D|={} > (delta+1)*gamma2s={bound}", edge_list(&g), d.len()));
            }
        }
    }
    assert!(ratio_checks >= 100);
    report("criterion 7 (approx-2sds sound, ratio <= delta+1)", trials, &failures);
}

#[test]
fn criterion_08_dom_set_approx() {
    let mut failures = Vec::new();
    let mut r = rng(808);
    let (mut exact, mut gadget) = (0, 0);
    let archive = Path::new(env!("CARGO_TARGET_TMPDIR")).join("dom-set-approx-failures");
    let trials = 240;
    for i in 0..trials {
        let n = 1 + i % 14;
        let k = 1 + i % 3;
        let g = random_connected(&mut r, n, 0.2);
        match dom_set_approx(&g, k) {
            Ok(result) => {
                match result.branch {
                    DomSetBranch::Exact => exact += 1,
                    DomSetBranch::Gadget => gadget += 1,
                }
                if !is_dominating(&g, &result.set) {
                    failures.push(format!("{} k={k}: {} does not dominate", edge_list(&g), result.set));
                }
            }
            Err(e) => {
                std::fs::create_dir_all(&archive).unwrap();
                let file = archive.join(format!("instance-{i}.txt"));
                graphfile::write_file(&file, &graphfile::format_graph(&g)).unwrap();
                failures.push(format!("{} k={k}: {e} (archived at {})", edge_list(&g), file.display()));
            }
        }
    }
    println!("    branches: exact={exact} gadget={gadget}");
    if exact == 0 || gadget == 0 {
        failures.push(format!("branch coverage incomplete: exact={exact} gadget={gadget}"));
    }
    report("criterion 8 (dom-set-approx always dominates)", trials, &failures);
}

#[test]
fn criterion_09_greedy_ratios() {
    let mut failures = Vec::new();
    let mut findings = Vec::new();
    let mut r = rng(909);
    let trials = 320;
    for i in 0..trials {
        let n = 1 + i % 9;
        let g = random_connected(&mut r, n, [0.15, 0.3, 0.6][i % 3]);
        let bound = 1.0 + ((g.max_degree() + 1) as f64).ln();
        let oracle = Oracle::new(&g);

        let dom = greedy_dominating(&g);
        let gamma = oracle.gamma();
        if dom.len() as f64 > bound * gamma as f64 + 1e-9 {
            failures.push(format!("{}: greedy dom {} > {bound:.3}*{gamma}", edge_list(&g), dom.len()));
        }

        let two = greedy_2dominating(&g);
        let gamma2 = oracle.gamma2();
        if two.len() as f64 > bound * gamma2 as f64 + 1e-9 {
            findings.push(format!("{}: greedy 2dom {} > {bound:.3}*{gamma2}", edge_list(&g), two.len()));
        }
    }
    println!("    2-domination ln-ratio findings: {}", findings.len());
    for f in findings.iter().take(10) {
        println!("    finding: {f}");
    }
    report("criterion 9 (greedy domination within 1+ln(delta+1))", trials, &failures);
}

fn secdom() -> Command {
    Command::new(env!("CARGO_BIN_EXE_secdom"))
}

#[test]
fn criterion_10_cli_contract() {
    let dir = tempfile::tempdir().unwrap();
    let mut failures = Vec::new();
    let mut checked = 0;

    // Round trip on every small connected graph and a batch of random ones.
    let mut r = rng(1010);
    let mut graphs = connected_graphs_up_to(5);
    graphs.extend((0..50).map(|i| random_connected(&mut r, 2 + i % 15, 0.3)));
    for g in &graphs {
        checked += 1;
        let text = graphfile::format_graph(g);
        let back = graphfile::parse_graph(&text, Path::new("roundtrip")).unwrap();
        if &back != g || graphfile::format_graph(&back) != text {
            failures.push(format!("round trip changed {}", edge_list(g)));
        }
    }

    // Seeded generation is byte-identical across runs.
    let outputs: Vec<Vec<u8>> = (0..2)
        .map(|_| {
            secdom()
                .args(["gen", "random-connected", "8", "0.3", "--seed", "7"])
                .output()
                .unwrap()
                .stdout
        })
        .collect();
    checked += 1;
    if outputs[0] != outputs[1] || outputs[0].is_empty() {
        failures.push("seeded generation differs between runs".into());
    }

    // Exit-code table.
    let p3 = dir.path().join("p3.txt");
    let k13 = dir.path().join("k13.txt");
    let bad = dir.path().join("bad.txt");
    let big = dir.path().join("big.txt");
    graphfile::write_file(&p3, &graphfile::format_graph(&path(3))).unwrap();
    graphfile::write_file(&k13, &graphfile::format_graph(&star(3))).unwrap();
    graphfile::write_file(&bad, "3 2\n0 1\n1 1\n").unwrap();
    graphfile::write_file(&big, &graphfile::format_graph(&path(20))).unwrap();
    let s = |p: &Path| p.to_str().unwrap().to_string();
    let cases: Vec<(Vec<String>, i32)> = vec![
        (vec!["verify".into(), s(&p3), "0".into(), "2".into()], 0),
        (vec!["verify".into(), s(&k13), "0".into(), "1".into()], 1),
        (vec!["verify".into(), s(&bad), "0".into(), "1".into()], 2),
        (vec!["solve".into(), s(&big), "2sds".into()], 3),
        (vec!["solve".into(), s(&p3), "2sds".into()], 0),
    ];
    for (args, code) in &cases {
        checked += 1;
        let status = secdom().args(args).output().unwrap().status.code();
        if status != Some(*code) {
            failures.push(format!("secdom {} exited {status:?}, expected {code}", args.join(" ")));
        }
    }

    checked += 1;
    let out = secdom().args(["experiment", "identities", "--max-n", "4"]).output().unwrap();
    if out.status.code() != Some(0) {
        let stdout = String::from_utf8_lossy(&out.stdout);
        let fails: Vec<&str> = stdout.lines().filter(|l| l.starts_with("FAIL")).collect();
        failures.push(format!("experiment identities --max-n 4 exited {:?}: {fails:?}", out.status.code()));
    }
    report("criterion 10 (CLI contract)", checked, &failures);
}
