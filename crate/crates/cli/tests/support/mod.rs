//! Shared by the golden and acceptance targets.
#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

pub const CASES: &[(&str, &[&str])] = &[
    ("hilbert_k3", &["hilbert", "k3.txt"]),
    ("hilbert_pi3", &["hilbert", "pi3.txt"]),
    ("hilbert_pi3_json", &["hilbert", "pi3.txt", "--json"]),
    ("count_k3_4", &["count", "k3.txt", "--sum", "4"]),
    (
        "count_pi3_3_json",
        &["count", "pi3.txt", "--sum", "3", "--json"],
    ),
    ("ehrhart_k3", &["ehrhart", "k3.txt"]),
    ("ehrhart_c4", &["ehrhart", "c4.txt"]),
    ("ehrhart_pi3", &["ehrhart", "pi3.txt"]),
    ("ehrhart_path3", &["ehrhart", "path3.txt"]),
    ("faces_gamma3", &["faces", "gamma3.txt"]),
    (
        "faces_b3_dim0_json",
        &["birkhoff", "--n", "3", "faces", "--dim", "0", "--json"],
    ),
    (
        "edge_graph_b3_dot",
        &["birkhoff", "--n", "3", "edge-graph", "--dot"],
    ),
    ("edge_graph_gamma3", &["edge-graph", "gamma3.txt"]),
    ("poset_pi2_dot", &["poset", "pi2.txt", "--dot"]),
    ("poset_gamma3", &["poset", "gamma3.txt"]),
    (
        "classes_b3_dim1",
        &["birkhoff", "--n", "3", "classes", "--dim", "1"],
    ),
    (
        "classes_b3_dim0_image",
        &["classes", "pi3.txt", "--dim", "0", "--bipartite-image"],
    ),
    (
        "classes_gamma3_json",
        &["classes", "gamma3.txt", "--dim", "0", "--json"],
    ),
    ("matchings_k4", &["matchings", "k4.txt"]),
    ("matchings_c4_max1", &["matchings", "c4.txt", "--max", "1"]),
    (
        "factorize_parts",
        &[
            "factorize",
            "k22_ones.txt",
            "k22_ones.txt",
            "--parts",
            "k22_matchings.parts",
        ],
    ),
    (
        "factorize_search_json",
        &["factorize", "k22_ones.txt", "k22_ones.txt", "--json"],
    ),
    ("cayley_s3", &["cayley", "s3.table"]),
    ("cayley_z4_json", &["cayley", "z4.table", "--json"]),
    ("convert_bipartite", &["convert", "bipartite", "pi2.txt"]),
    (
        "convert_from_matrix",
        &["convert", "from-matrix", "perm3.matrix"],
    ),
    (
        "convert_from_matrix_general",
        &[
            "convert",
            "from-matrix",
            "sym3.matrix",
            "--target",
            "general",
        ],
    ),
    ("check_eulerian3", &["check", "eulerian3.txt"]),
    ("check_pi3_json", &["check", "pi3.txt", "--json"]),
];

pub fn dir(sub: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join(sub)
}

pub fn run(args: &[&str]) -> String {
    let out = Command::new(env!("CARGO_BIN_EXE_magiclat"))
        .args(args)
        .current_dir(dir("fixtures"))
        .output()
        .expect("binary runs");
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

/// Golden cases whose output differs from the stored file.
pub fn golden_mismatches() -> Vec<&'static str> {
    CASES
        .iter()
        .filter(|(name, args)| {
            let path = dir("golden").join(format!("{name}.out"));
            std::fs::read_to_string(path).ok().as_deref() != Some(run(args).as_str())
        })
        .map(|(name, _)| *name)
        .collect()
}
