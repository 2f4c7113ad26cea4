use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};
use std::sync::atomic::{AtomicUsize, Ordering};

fn scratch(name: &str, contents: &str) -> PathBuf {
    static NEXT: AtomicUsize = AtomicUsize::new(0);
    let dir = std::env::temp_dir().join(format!("dpc-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join(format!("{}-{name}", NEXT.fetch_add(1, Ordering::Relaxed)));
    fs::write(&path, contents).unwrap();
    path
}

fn dpc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dpc"))
        .args(args)
        .env_remove("DPC_LIMITS")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const TRANSITIVE: &str = "3 3\n0 1\n1 2\n0 2\n";
const CYCLIC: &str = "# directed triangle\n3 3\n0 1\n1 2\n2 0\n";

#[test]
fn analyze_reports_rho_star() {
    let p = scratch("tt.dg", TRANSITIVE);
    let o = dpc(&["analyze", p.to_str().unwrap()]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("rho_star: 1\n"), "{text}");
    assert!(text.contains("source_number: 1\n"));
    assert!(text.contains("img: 1\n"));
}

#[test]
fn analyze_json_uses_fraction_strings() {
    let p = scratch("pair.dg", "6 6\n0 1\n1 2\n0 2\n3 4\n4 5\n3 5\n");
    let o = dpc(&["analyze", p.to_str().unwrap(), "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["verdict"]["rho_star"], "2/1");
    assert_eq!(v["verdict"]["source_number"], 2);
    assert_eq!(v["invariants"]["alpha_star"], "2/1");
}

#[test]
fn counts_with_verification() {
    let p = scratch("tt.dg", TRANSITIVE);
    let host = scratch("host.dg", "");
    let o = dpc(&[
        "gen-host",
        "--n",
        "40",
        "--maxout",
        "3",
        "--seed",
        "7",
        "-o",
        host.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    for kind in ["hom", "sub", "indsub"] {
        let o = dpc(&[
            "count",
            kind,
            p.to_str().unwrap(),
            host.to_str().unwrap(),
            "--verify",
            "--threads",
            "2",
        ]);
        assert!(o.status.success(), "{kind}: {}", String::from_utf8_lossy(&o.stderr));
        let text = stdout(&o);
        let engine = text.lines().next().unwrap().to_string();
        let o = dpc(&["count", kind, p.to_str().unwrap(), host.to_str().unwrap(), "--brute"]);
        assert_eq!(stdout(&o).trim(), engine);
    }
}

#[test]
fn count_examples() {
    let arc = scratch("arc.dg", "2 1\n0 1\n");
    let tt = scratch("tt.dg", TRANSITIVE);
    let o = dpc(&["count", "indsub", arc.to_str().unwrap(), tt.to_str().unwrap()]);
    assert_eq!(stdout(&o), "3\n");
    let ct = scratch("ct.dg", CYCLIC);
    let o = dpc(&["count", "hom", ct.to_str().unwrap(), ct.to_str().unwrap()]);
    assert_eq!(stdout(&o), "3\n");
}

#[test]
fn basis_blocks_parse_back() {
    let p = scratch("path.dg", "3 2\n0 1\n1 2\n");
    let o = dpc(&["basis", "sub", p.to_str().unwrap()]);
    assert!(o.status.success());
    let text = stdout(&o);
    let blocks: Vec<&str> = text.split("\n\n").collect();
    assert_eq!(blocks.len(), 5);
    let mut total = 0i64;
    for b in blocks {
        let coeff = b.lines().next().unwrap().strip_prefix("# coefficient ").unwrap();
        let (num, den) = coeff.split_once('/').unwrap();
        assert_eq!(den, "1");
        total += num.parse::<i64>().unwrap();
        dpc_core::format::parse_digraph(b).unwrap();
    }
    assert_eq!(total, -1 + 1 - 1 - 1 + 2);
}

#[test]
fn fhtw_of_a_triangle_hypergraph() {
    let h = scratch("k3.hg", "3 3\n2 0 1\n2 1 2\n2 0 2\n");
    let o = dpc(&["fhtw", h.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("fhtw: 3/2\n"));
}

#[test]
fn interpolation_recovers_the_pattern_count() {
    let ct = scratch("ct.dg", CYCLIC);
    let o = dpc(&["interpolate", ct.to_str().unwrap(), ct.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    assert!(text.starts_with("hom: 3\n"), "{text}");
    assert!(text.contains("queries: "));
}

#[test]
fn gadget_round_trip() {
    let loop_pattern = scratch("loop.dg", "1 1\n0 0\n");
    let host = scratch("host.cdg", "3 0\ncolors\n0 0\n1 0\n2 0\n");
    let out = std::env::temp_dir().join(format!("dpc-cli-{}-out.cdg", std::process::id()));
    let o = dpc(&[
        "gadget",
        "loop",
        loop_pattern.to_str().unwrap(),
        host.to_str().unwrap(),
        "0",
        "-o",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).starts_with("before: 3\nafter: 3\n"));
    let lifted = dpc_core::format::parse_colored(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(lifted.graph.loop_count(), 3);

    let tt = scratch("tt.dg", TRANSITIVE);
    let minor_host = scratch("arc-host.cdg", "3 2\n0 2\n1 2\ncolors\n0 0\n1 0\n2 1\n");
    let o = dpc(&[
        "gadget",
        "sink",
        tt.to_str().unwrap(),
        minor_host.to_str().unwrap(),
        "2",
        "-o",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).starts_with("before: 2\nafter: 2\n"));
}

#[test]
fn exit_codes() {
    assert_eq!(dpc(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(dpc(&[]).status.code(), Some(1));
    assert_eq!(dpc(&["--help"]).status.code(), Some(0));

    let dup = scratch("dup.dg", "2 2\n0 1\n0 1\n");
    let o = dpc(&["analyze", dup.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("duplicate arc"));

    let garbage = scratch("garbage.dg", "2 1\n0 one\n");
    let o = dpc(&["analyze", garbage.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));

    let big = scratch("big.dg", "8 0\n");
    let host = scratch("host.dg", "2 0\n");
    let o = dpc(&["count", "sub", big.to_str().unwrap(), host.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    let o = dpc(&[
        "--limit",
        "sub_pattern=8",
        "count",
        "sub",
        big.to_str().unwrap(),
        host.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0\n");
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));

    let o = Command::new(env!("CARGO_BIN_EXE_dpc"))
        .args(["count", "sub", big.to_str().unwrap(), host.to_str().unwrap()])
        .env("DPC_LIMITS", "sub_pattern=8")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn gen_host_is_deterministic() {
    let a = dpc(&[
        "gen-host",
        "--n",
        "25",
        "--maxout",
        "2",
        "--seed",
        "3",
        "--acyclic",
        "--loops",
    ]);
    let b = dpc(&[
        "gen-host",
        "--n",
        "25",
        "--maxout",
        "2",
        "--seed",
        "3",
        "--acyclic",
        "--loops",
    ]);
    assert_eq!(a.stdout, b.stdout);
    let g = dpc_core::format::parse_digraph(&stdout(&a)).unwrap();
    assert_eq!(g.vertex_count(), 25);
    assert!(g.max_outdegree() <= 2);
}
