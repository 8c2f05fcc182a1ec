use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use longcycle::cli::exit;
use longcycle::formats::{
    parse_cycle, write_cycle, write_digraph, write_ugraph, Mapping, RoleKind,
};
use longcycle::harness::{
    complete_bipartite, complete_graph, cycle_graph, directed_cycle, path_graph,
};
use longcycle::{
    build_edge_clique_reduction, hamiltonian_cycle_exact, lift_hamiltonian_cycle, Digraph,
    GadgetParams, SearchBudget,
};
use tempfile::TempDir;

fn longcycle(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_longcycle"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn put(dir: &TempDir, name: &str, contents: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

/// Reduces `g` with the given extra flags and returns (graph, mapping) paths.
fn reduce(dir: &TempDir, input: &Path, extra: &[&str]) -> (Output, PathBuf, PathBuf) {
    let h = dir.path().join("h.gr");
    let m = dir.path().join("h.json");
    let mut args = vec![
        "reduce",
        s(input),
        "--out-graph",
        s(&h),
        "--out-mapping",
        s(&m),
    ];
    args.extend_from_slice(extra);
    (longcycle(&args), h, m)
}

#[test]
fn reduce_c4_reports_sizes() {
    let dir = TempDir::new().unwrap();
    let g = put(&dir, "c4.gr", &write_ugraph(&cycle_graph(4)));
    let (out, h, m) = reduce(&dir, &g, &["--a", "3"]);
    assert_eq!(out.status.code(), Some(exit::OK), "{}", stderr(&out));
    assert_eq!(stdout(&out).trim(), "threshold=8 mindeg=5 |V|=196 |A|=1088");
    assert!(h.exists());
    let mapping = Mapping::from_json(&std::fs::read_to_string(m).unwrap()).unwrap();
    assert!(mapping.canonical);

    let check = longcycle(&["check", s(&h), "--mindeg"]);
    assert_eq!(stdout(&check).trim(), "5");
}

#[test]
fn reduce_rejects_path() {
    let dir = TempDir::new().unwrap();
    let g = put(&dir, "p3.gr", &write_ugraph(&path_graph(3)));
    let (out, h, _) = reduce(&dir, &g, &[]);
    assert_eq!(out.status.code(), Some(exit::NOT_TWO_CONNECTED));
    assert!(stderr(&out).contains("2-connected"), "{}", stderr(&out));
    assert!(!h.exists());
}

#[test]
fn reduce_error_codes_are_distinct() {
    let dir = TempDir::new().unwrap();
    let bad = put(&dir, "bad.gr", "p edge 3 1\ne 1 x\n");
    assert_eq!(reduce(&dir, &bad, &[]).0.status.code(), Some(exit::PARSE));
    let k4 = put(&dir, "k4.gr", &write_ugraph(&complete_graph(4)));
    assert_eq!(
        reduce(&dir, &k4, &["--a", "5"]).0.status.code(),
        Some(exit::TOO_FEW_VERTICES)
    );
    assert_eq!(
        reduce(&dir, &k4, &["--a", "2"]).0.status.code(),
        Some(exit::BAD_PARAMS)
    );
    let d = put(&dir, "d.gr", &write_digraph(&directed_cycle(4)));
    assert_eq!(
        reduce(&dir, &d, &[]).0.status.code(),
        Some(exit::WRONG_KIND)
    );
    let missing = dir.path().join("nope.gr");
    assert_eq!(reduce(&dir, &missing, &[]).0.status.code(), Some(exit::IO));
}

#[test]
fn reduce_with_test_params_is_not_canonical() {
    let dir = TempDir::new().unwrap();
    let g = put(&dir, "c4.gr", &write_ugraph(&cycle_graph(4)));
    let (out, _, m) = reduce(&dir, &g, &["--clique-count", "1", "--clique-size", "3"]);
    assert_eq!(out.status.code(), Some(exit::OK));
    let text = std::fs::read_to_string(m).unwrap();
    assert!(text.contains("\"canonical\": false"), "{text}");
}

#[test]
fn solve_directed_c6() {
    let dir = TempDir::new().unwrap();
    let g = put(&dir, "c6.gr", &write_digraph(&directed_cycle(6)));
    let witness = dir.path().join("c6.cycle");
    let out = longcycle(&[
        "solve",
        s(&g),
        "--threshold",
        "6",
        "--out-cycle",
        s(&witness),
    ]);
    assert_eq!(out.status.code(), Some(exit::OK));
    assert_eq!(stdout(&out).lines().next(), Some("FOUND 6"));
    let check = longcycle(&["check", s(&g), "--validate-cycle", s(&witness)]);
    assert_eq!(stdout(&check).trim(), "valid length=6");
}

#[test]
fn solve_reduced_k23_is_notfound() {
    let dir = TempDir::new().unwrap();
    let g = put(&dir, "k23.gr", &write_ugraph(&complete_bipartite(2, 3)));
    let (_, h, _) = reduce(&dir, &g, &["--clique-count", "1", "--clique-size", "3"]);
    let out = longcycle(&["solve", s(&h), "--threshold", "10"]);
    assert_eq!(out.status.code(), Some(exit::REJECT));
    assert_eq!(stdout(&out).trim(), "NOTFOUND");
}

#[test]
fn solve_with_tiny_budget_is_unknown() {
    let dir = TempDir::new().unwrap();
    let g = put(&dir, "k23.gr", &write_ugraph(&complete_bipartite(2, 3)));
    let (_, h, _) = reduce(&dir, &g, &[]);
    let out = longcycle(&["solve", s(&h), "--threshold", "10", "--node-limit", "10"]);
    assert_eq!(out.status.code(), Some(exit::INCONCLUSIVE));
    assert_eq!(stdout(&out).trim(), "UNKNOWN");
}

#[test]
fn solve_witnesses_validate() {
    let dir = TempDir::new().unwrap();
    let k4 = put(&dir, "k4.gr", &write_ugraph(&complete_graph(4)));
    let (_, h, _) = reduce(&dir, &k4, &["--clique-count", "1", "--clique-size", "3"]);
    for goal in [&["--threshold", "8"][..], &["--longest"][..]] {
        let witness = dir.path().join("w.cycle");
        let mut args = vec!["solve", s(&h), "--out-cycle", s(&witness)];
        args.extend_from_slice(goal);
        let out = longcycle(&args);
        assert_eq!(out.status.code(), Some(exit::OK), "{}", stdout(&out));
        let check = longcycle(&["check", s(&h), "--validate-cycle", s(&witness)]);
        assert_eq!(check.status.code(), Some(exit::OK), "{}", stdout(&check));
    }
}

#[test]
fn solve_needs_directed_input() {
    let dir = TempDir::new().unwrap();
    let g = put(&dir, "c4.gr", &write_ugraph(&cycle_graph(4)));
    let out = longcycle(&["solve", s(&g), "--longest"]);
    assert_eq!(out.status.code(), Some(exit::WRONG_KIND));
}

#[test]
fn check_two_connected() {
    let dir = TempDir::new().unwrap();
    let tri = put(
        &dir,
        "tri.gr",
        &write_digraph(&complete_graph(3).bidirected()),
    );
    let out = longcycle(&["check", s(&tri), "--two-connected"]);
    assert_eq!(out.status.code(), Some(exit::OK));
    assert_eq!(stdout(&out).trim(), "true");

    let c3 = put(&dir, "c3.gr", &write_digraph(&directed_cycle(3)));
    let out = longcycle(&["check", s(&c3), "--two-connected"]);
    assert_eq!(out.status.code(), Some(exit::REJECT));
    assert_eq!(stdout(&out).trim(), "false cut_vertex=1");

    let p3 = put(&dir, "p3.gr", &write_ugraph(&path_graph(3)));
    let out = longcycle(&["check", s(&p3), "--two-connected"]);
    assert_eq!(stdout(&out).trim(), "false cut_vertex=2");
}

#[test]
fn check_validates_lifted_cycle() {
    let dir = TempDir::new().unwrap();
    let g = cycle_graph(4);
    let r = build_edge_clique_reduction(&g, &GadgetParams::canonical(3)).unwrap();
    let ham = hamiltonian_cycle_exact(&g, SearchBudget::unlimited());
    let lifted = lift_hamiltonian_cycle(&r, ham.cycle().unwrap()).unwrap();
    let h = put(&dir, "h.gr", &write_digraph(r.graph()));
    let c = put(&dir, "lift.cycle", &write_cycle(lifted.vertices()));
    let out = longcycle(&["check", s(&h), "--validate-cycle", s(&c)]);
    assert_eq!(stdout(&out).trim(), "valid length=8");
    assert_eq!(out.status.code(), Some(exit::OK));

    let mut broken = lifted.vertices().to_vec();
    broken.swap(0, 1);
    let c = put(&dir, "broken.cycle", &write_cycle(&broken));
    let out = longcycle(&["check", s(&h), "--validate-cycle", s(&c)]);
    assert_eq!(out.status.code(), Some(exit::REJECT));
    assert!(stdout(&out).starts_with("invalid: "), "{}", stdout(&out));
}

#[test]
fn verify_named_small() {
    let dir = TempDir::new().unwrap();
    let prefix = dir.path().join("report");
    let out = longcycle(&[
        "verify",
        "--corpus",
        "named-small",
        "--seed",
        "42",
        "--report",
        s(&prefix),
    ]);
    assert_eq!(
        out.status.code(),
        Some(exit::OK),
        "{}{}",
        stdout(&out),
        stderr(&out)
    );
    let tsv = std::fs::read_to_string(prefix.with_extension("tsv")).unwrap();
    for name in ["complete_bipartite_2_3", "petersen"] {
        let line = tsv
            .lines()
            .find(|l| l.split('\t').nth(1) == Some(name))
            .unwrap();
        let cols: Vec<&str> = line.split('\t').collect();
        // status checked, Hamiltonian no, equivalence holds
        assert_eq!(cols[5], "checked", "{line}");
        assert_eq!(cols[6], "no", "{line}");
        assert_eq!(cols[cols.len() - 1], "true", "{line}");
    }
    assert!(prefix.with_extension("json").exists());
}

#[test]
fn verify_degree_only_canonical() {
    let out = longcycle(&[
        "verify",
        "--corpus",
        "random",
        "--params",
        "canonical",
        "--degree-only",
    ]);
    assert_eq!(out.status.code(), Some(exit::OK), "{}", stderr(&out));
    let table = stdout(&out);
    assert!(table.lines().skip(1).all(|l| l.ends_with("\ttrue")));
    assert_eq!(table.lines().count(), 1 + 2 * 200);
}

#[test]
fn verify_unknown_corpus() {
    let out = longcycle(&["verify", "--corpus", "nope"]);
    assert_eq!(out.status.code(), Some(exit::PRECONDITION));
}

fn corrupted_k4(dir: &TempDir) -> (PathBuf, PathBuf, PathBuf) {
    let g = put(dir, "k4.gr", &write_ugraph(&complete_graph(4)));
    let (_, h, m) = reduce(dir, &g, &["--clique-count", "1", "--clique-size", "3"]);
    let clean = h.with_extension("clean.json");
    std::fs::copy(&m, &clean).unwrap();
    let mut mapping = Mapping::from_json(&std::fs::read_to_string(&m).unwrap()).unwrap();
    // every clique vertex in the first clique now claims to be original
    for rec in mapping
        .roles
        .iter_mut()
        .filter(|r| r.kind == RoleKind::Clique && r.edge == Some([1, 2]))
    {
        rec.kind = RoleKind::Original;
        rec.edge = None;
        rec.index = None;
        rec.position = None;
    }
    std::fs::write(&m, mapping.to_json()).unwrap();
    (h, m, clean)
}

#[test]
fn verify_replay_detects_corrupted_mapping() {
    let dir = TempDir::new().unwrap();
    let (h, bad, clean) = corrupted_k4(&dir);

    let out = longcycle(&["verify", "--instance", s(&h), "--mapping", s(&clean)]);
    assert_eq!(out.status.code(), Some(exit::OK), "{}", stdout(&out));
    assert!(stdout(&out).contains("equivalence: source_hamiltonian=true long_cycle=true"));

    // lift a Hamiltonian cycle that uses the edge 1-2
    let r = build_edge_clique_reduction(&complete_graph(4), &GadgetParams::test(3)).unwrap();
    let ham = longcycle::validate_cycle(&complete_graph(4), &[1, 2, 3, 4]).unwrap();
    let lifted = lift_hamiltonian_cycle(&r, &ham).unwrap();
    let c = put(&dir, "lift.cycle", &write_cycle(lifted.vertices()));
    assert_eq!(
        parse_cycle(&std::fs::read_to_string(&c).unwrap())
            .unwrap()
            .len(),
        8
    );

    let out = longcycle(&[
        "verify",
        "--instance",
        s(&h),
        "--mapping",
        s(&bad),
        "--cycle",
        s(&c),
    ]);
    assert_ne!(out.status.code(), Some(exit::OK));
    assert!(stdout(&out).contains("NotAlternating"), "{}", stdout(&out));
}

#[test]
fn mindeg_cycle_examples() {
    let dir = TempDir::new().unwrap();
    let k5 = put(
        &dir,
        "k5.gr",
        &write_digraph(&complete_graph(5).bidirected()),
    );
    let out = longcycle(&["mindeg-cycle", s(&k5)]);
    assert_eq!(out.status.code(), Some(exit::OK));
    let last = stdout(&out).lines().last().unwrap().to_string();
    let len: usize = last.split_whitespace().next().unwrap()["length=".len()..]
        .parse()
        .unwrap();
    assert!(len >= 5, "{last}");
    assert!(last.ends_with("mindeg=4 bound_ok=true"));

    let c7 = put(&dir, "c7.gr", &write_digraph(&directed_cycle(7)));
    let out = longcycle(&["mindeg-cycle", s(&c7)]);
    assert_eq!(
        stdout(&out).lines().last(),
        Some("length=7 mindeg=1 bound_ok=true")
    );

    let sink = Digraph::from_arcs(3, [(1, 2), (2, 3), (3, 1), (1, 3)]).unwrap();
    let sink = Digraph::from_arcs(4, sink.arcs().chain([(1, 4)])).unwrap();
    let f = put(&dir, "sink.gr", &write_digraph(&sink));
    let out = longcycle(&["mindeg-cycle", s(&f)]);
    assert_eq!(out.status.code(), Some(exit::MINDEG_ZERO));
}

#[test]
fn named_prints_graph_file() {
    let out = longcycle(&["named", "petersen"]);
    assert_eq!(out.status.code(), Some(exit::OK));
    assert!(stdout(&out).starts_with("p edge 10 15"), "{}", stdout(&out));
    let out = longcycle(&["named", "no_such_graph"]);
    assert_eq!(out.status.code(), Some(exit::PRECONDITION));
}
