use magiclat::graph::io::parse_edge_list;
use std::path::Path;
use std::process::{Command, Output};

fn magiclat(args: &[&str], env: &[(&str, &str)]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_magiclat"))
        .args(args)
        .envs(env.iter().copied())
        .current_dir(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures"))
        .output()
        .expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    magiclat(args, &[]).status.code().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = magiclat(args, &[]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["count", "k3.txt", "--sum", "2"]), 0);
    assert_eq!(code(&["hilbert", "mixed.txt"]), 2);
    assert_eq!(code(&["hilbert", "no-such-file.txt"]), 2);
    assert_eq!(code(&["hilbert", "k3.txt", "--bogus"]), 2);
    assert_eq!(code(&["hilbert"]), 2);
    assert_eq!(code(&["hilbert", "k7.txt"]), 3);
    assert_eq!(code(&["cayley", "bad.table"]), 1);
    assert_eq!(code(&["convert", "bipartite", "k3.txt"]), 1);
    assert_eq!(code(&["birkhoff", "--n", "2", "hilbert", "k3.txt"]), 2);
}

#[test]
fn edge_cap_from_environment() {
    let tight = magiclat(&["hilbert", "k4.txt"], &[("MAGICLAT_MAX_EDGES", "5")]);
    assert_eq!(tight.status.code(), Some(3));
    let loose = magiclat(&["hilbert", "k4.txt"], &[("MAGICLAT_MAX_EDGES", "6")]);
    assert_eq!(loose.status.code(), Some(0));
}

#[test]
fn spec_examples() {
    assert_eq!(stdout(&["count", "k3.txt", "--sum", "4"]), "1\n");
    assert!(stdout(&["cayley", "s3.table"]).ends_with("magic: true, sum: 15\n"));
    let faces: serde_json::Value = serde_json::from_str(&stdout(&[
        "birkhoff", "--n", "3", "faces", "--dim", "0", "--json",
    ]))
    .unwrap();
    assert_eq!(faces["faces"].as_array().unwrap().len(), 6);
}

#[test]
fn birkhoff_forwards_to_pi() {
    assert_eq!(
        stdout(&["birkhoff", "--n", "3", "hilbert"]),
        stdout(&["hilbert", "pi3.txt"])
    );
    assert_eq!(
        stdout(&["birkhoff", "--n", "2", "count", "--sum", "3"]),
        "4\n"
    );
}

#[test]
fn matrix_round_trip_through_cli() {
    let dir = std::env::temp_dir().join(format!("magiclat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for (matrix, target) in [
        ("semi3.matrix", "digraph"),
        ("semi3.matrix", "bipartite"),
        ("sym3.matrix", "general"),
    ] {
        let labeled = stdout(&["convert", "from-matrix", matrix, "--target", target]);
        let path = dir.join(format!("{target}.txt"));
        std::fs::write(&path, labeled).unwrap();
        let back = stdout(&["convert", "to-matrix", path.to_str().unwrap()]);
        let original = std::fs::read_to_string(
            Path::new(env!("CARGO_MANIFEST_DIR"))
                .join("tests/fixtures")
                .join(matrix),
        )
        .unwrap();
        assert_eq!(back, original);
    }
    let image = stdout(&["convert", "bipartite", "pi3.txt"]);
    let path = dir.join("image.txt");
    std::fs::write(&path, image).unwrap();
    let back = stdout(&["convert", "digraph", path.to_str().unwrap()]);
    let pi3 = std::fs::read_to_string(
        Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/pi3.txt"),
    )
    .unwrap();
    assert_eq!(
        parse_edge_list(&back).unwrap(),
        parse_edge_list(&pi3).unwrap()
    );
    std::fs::remove_dir_all(&dir).unwrap();
}
