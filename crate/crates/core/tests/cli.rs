use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gf2kq"))
        .args(args)
        .output()
        .unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn synth(dir: &Path, poly: &str, variant: &str, extra: &[&str]) -> (Output, String) {
    let out = dir.join(format!("{}-{variant}.qc", poly.replace(',', "_")));
    let out_s = out.to_str().unwrap().to_string();
    let mut args = vec![
        "synth",
        "--poly",
        poly,
        "--variant",
        variant,
        "--out",
        &out_s,
    ];
    args.extend_from_slice(extra);
    (run(&args), out_s)
}

#[test]
fn synth_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    for v in ["compact", "linear-depth", "log-depth", "baseline"] {
        let (o, path) = synth(dir.path(), "4,1,0", v, &[]);
        assert_eq!(code(&o), 0, "{v}: {}", String::from_utf8_lossy(&o.stderr));
        let o = run(&[
            "verify",
            "--circuit",
            &path,
            "--poly",
            "4,1,0",
            "--exhaustive",
        ]);
        assert_eq!(code(&o), 0, "{v}: {}", String::from_utf8_lossy(&o.stdout));
        let o = run(&[
            "verify",
            "--circuit",
            &path,
            "--poly",
            "4,1,0",
            "--trials",
            "200",
            "--seed",
            "7",
        ]);
        assert_eq!(code(&o), 0);
    }
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&synth(dir.path(), "4,2,0", "compact", &[]).0), 2);
    assert_eq!(code(&synth(dir.path(), "9,7,0", "log-depth", &[]).0), 2);
    assert_eq!(
        code(&synth(dir.path(), "9,7,0", "log-depth", &["--allow-reducible"]).0),
        0
    );
    assert_eq!(code(&synth(dir.path(), "8,4,3,1,0", "log-depth", &[]).0), 3);
    assert_eq!(
        code(&synth(dir.path(), "4,1,0", "linear-depth", &["--form", "toffoli"]).0),
        3
    );
    assert_eq!(
        code(&synth(dir.path(), "4,1,0", "compact", &["--form", "toffoli"]).0),
        0
    );
    assert_eq!(code(&synth(dir.path(), "not-a-poly", "compact", &[]).0), 4);
    assert_eq!(code(&run(&["frobnicate"])), 4);
    let missing = dir.path().join("missing.qc");
    assert_eq!(
        code(&run(&[
            "verify",
            "--circuit",
            missing.to_str().unwrap(),
            "--poly",
            "4,1,0"
        ])),
        4
    );
}

#[test]
fn wrong_modulus_and_corruption_fail() {
    let dir = tempfile::tempdir().unwrap();
    let (_, path) = synth(dir.path(), "4,1,0", "compact", &[]);
    let o = run(&[
        "verify",
        "--circuit",
        &path,
        "--poly",
        "4,3,0",
        "--exhaustive",
    ]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stdout).contains("counterexample"));

    // drop one gate line from the netlist
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines: Vec<&str> = text.lines().collect();
    let i = lines.iter().position(|l| l.starts_with("CCZ")).unwrap();
    lines.remove(i);
    let bad = dir.path().join("bad.qc");
    std::fs::write(&bad, lines.join("\n") + "\n").unwrap();
    let o = run(&[
        "verify",
        "--circuit",
        bad.to_str().unwrap(),
        "--poly",
        "4,1,0",
        "--exhaustive",
    ]);
    assert_eq!(code(&o), 1);
}

fn slope(text: &str, variant: &str, column: &str) -> f64 {
    let tag = format!("# fit variant={variant} column={column} slope=");
    let line = text.lines().find(|l| l.starts_with(&tag)).unwrap();
    line[tag.len()..]
        .split_whitespace()
        .next()
        .unwrap()
        .parse()
        .unwrap()
}

#[test]
fn bench_fit() {
    let o = run(&[
        "bench",
        "--sizes",
        "4,8,16,32,64",
        "--variant",
        "compact,baseline",
        "--fit",
    ]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.starts_with("n,"));
    let s = slope(&text, "compact", "ccz");
    assert!((1.50..=1.66).contains(&s), "{s}");
    assert!((slope(&text, "baseline", "toffoli") - 2.0).abs() < 1e-9);

    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("b.csv");
    let o = run(&["bench", "--sizes", "4..6", "--csv", csv.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let rows = std::fs::read_to_string(&csv).unwrap();
    assert_eq!(
        rows.lines().filter(|l| !l.starts_with('#')).count(),
        1 + 3 * 4
    );
}

#[test]
fn catalog_lookups() {
    let o = run(&["catalog", "--n", "7", "--family", "trinomial"]);
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8_lossy(&o.stdout).starts_with("7 7,1,0"));
    let o = run(&["catalog", "--n", "7"]);
    assert!(String::from_utf8_lossy(&o.stdout).contains("7,5,3,1,0"));
    // no trinomial of degree 8
    assert_eq!(
        code(&run(&["catalog", "--n", "8", "--family", "trinomial"])),
        2
    );
    assert_eq!(code(&run(&["catalog", "--n", "1"])), 2);
}
