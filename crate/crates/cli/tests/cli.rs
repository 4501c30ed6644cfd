use std::f64::consts::{FRAC_PI_4, PI};
use std::process::{Command, Output};

fn tubegeo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tubegeo"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = tubegeo(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn field(report: &str, key: &str) -> String {
    report
        .lines()
        .find_map(|l| l.strip_prefix(&format!("{key}=")))
        .unwrap_or_else(|| panic!("no {key} in {report}"))
        .to_string()
}

fn number(report: &str, key: &str) -> f64 {
    field(report, key).parse().unwrap()
}

#[test]
fn kappa_examples() {
    let r = stdout(&["kappa", "--X", "1,0", "--Y", "0,1"]);
    assert!((number(&r, "r") - 1.0).abs() < 1e-12);
    assert!((number(&r, "theta") - FRAC_PI_4).abs() < 1e-12);

    let r = stdout(&["kappa", "--X", "1.2732395,0", "--Y", "0,0"]);
    assert!((number(&r, "r") - 1.0).abs() < 1e-6);

    let r = stdout(&["kappa", "--X", "3,0", "--Y", "4,0"]);
    assert!((number(&r, "r") - 5.0 * PI / 4.0).abs() < 1e-12);
    assert_eq!(number(&r, "theta"), 0.0);
}

#[test]
fn kappa_rejects_zero_and_garbage() {
    assert_eq!(
        tubegeo(&["kappa", "--X", "0,0", "--Y", "0,0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        tubegeo(&["kappa", "--X", "1", "--Y", "0,0"]).status.code(),
        Some(2)
    );
    assert_eq!(
        tubegeo(&["kappa", "--X", "a,b", "--Y", "0,0"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn negative_components_parse() {
    let r = stdout(&["kappa", "--X", "-1,0", "--Y", "0,-1"]);
    assert!((number(&r, "r") - 1.0).abs() < 1e-12);
}

#[test]
fn indicatrix_endpoints() {
    let csv = stdout(&["indicatrix", "--n", "2"]);
    let rows: Vec<Vec<f64>> = csv
        .lines()
        .skip(1)
        .map(|l| l.split(',').map(|v| v.parse().unwrap()).collect())
        .collect();
    assert_eq!(csv.lines().next(), Some("theta,x,y"));
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0], vec![0.0, 4.0 / PI, 0.0]);
    assert_eq!(rows[1], vec![FRAC_PI_4, 1.0, 1.0]);
}

#[test]
fn indicatrix_columns_are_monotone() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ind.csv");
    stdout(&[
        "indicatrix",
        "--n",
        "100",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    let text = std::fs::read_to_string(path).unwrap();
    let rows: Vec<Vec<f64>> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').map(|v| v.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 100);
    assert!(rows
        .windows(2)
        .all(|w| w[1][1] < w[0][1] && w[1][2] > w[0][2]));
}

#[test]
fn indicatrix_json() {
    let text = stdout(&["indicatrix", "--n", "3", "--format", "json"]);
    let rows: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 3);
    assert_eq!(rows[2]["y"], 1.0);
}

#[test]
fn indicatrix_usage_errors() {
    assert_eq!(tubegeo(&["indicatrix", "--n", "1"]).status.code(), Some(2));
    let out = tubegeo(&["indicatrix", "--n", "5", "--out", "/nonexistent/dir/x.csv"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn geodesic_classification() {
    let r = stdout(&["geodesic", "classify", "--a", "1,0,0,1", "--b", "0,0"]);
    assert_eq!(field(&r, "class"), "EmbeddedCircle");

    let r = stdout(&["geodesic", "classify", "--a", "1,0,0,0", "--b", "0,0"]);
    assert_eq!(field(&r, "class"), "TwoPointAntipodal");
    let angles: Vec<f64> = field(&r, "singular_angles")
        .split(',')
        .map(|v| v.parse().unwrap())
        .collect();
    assert!((angles[0] - PI / 2.0).abs() < 1e-12 && (angles[1] - 1.5 * PI).abs() < 1e-12);

    let r = stdout(&["geodesic", "classify", "--a", "1,0,0,0", "--b", "0,1"]);
    assert_eq!(field(&r, "class"), "FoldedArc");
}

#[test]
fn geodesic_trace_has_512_rows_on_the_boundary() {
    let csv = stdout(&[
        "geodesic",
        "trace",
        "--a",
        "1,0,0,0",
        "--b",
        "0,1",
        "--basis",
        "ellipse:2,1",
    ]);
    let rows: Vec<Vec<f64>> = csv
        .lines()
        .skip(1)
        .map(|l| l.split(',').map(|v| v.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 512);
    for r in rows {
        assert!(((r[1] / 2.0).powi(2) + r[2].powi(2) - 1.0).abs() < 1e-12);
    }
}

#[test]
fn geodesic_extend() {
    let r = stdout(&[
        "geodesic", "extend", "--a", "1,0,0,1", "--b", "0,0", "--lambda", "0.3,-0.2",
    ]);
    assert!((number(&r, "re1") - 0.3).abs() < 1e-12);
    assert!((number(&r, "re2") - 0.2).abs() < 1e-12);
    for bad in [
        &[
            "geodesic", "extend", "--a", "1,0,0,1", "--b", "0,0", "--lambda", "1,0",
        ][..],
        &["geodesic", "extend", "--a", "1,0,0,1", "--b", "0,0"][..],
        &["geodesic", "classify", "--a", "0,0,0,0", "--b", "0,0"][..],
    ] {
        assert_eq!(tubegeo(bad).status.code(), Some(2), "{bad:?}");
    }
}

#[test]
fn schwarz_examples() {
    let flags = |r: &str| ["sufficient", "admissible", "necessary"].map(|k| field(r, k));
    assert_eq!(
        flags(&stdout(&[
            "schwarz", "--d", "0.6366,0", "--dbar", "0.6366,0"
        ])),
        ["true"; 3]
    );
    assert_eq!(
        flags(&stdout(&["schwarz", "--d", "1,0", "--dbar", "0,0"])),
        ["false", "true", "true"]
    );
    assert_eq!(
        flags(&stdout(&["schwarz", "--d", "1.5,0", "--dbar", "0,0"])),
        ["false"; 3]
    );
    assert_eq!(
        tubegeo(&["schwarz", "--d", "1", "--dbar", "0,0"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn bivalence_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fold.json");
    let out = tubegeo(&[
        "bivalence",
        "--a",
        "1,0,0,0",
        "--b",
        "0,1",
        "--resolution",
        "512",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stderr.is_empty());
    let report: serde_json::Value = serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    assert_eq!(report["max_preimage_count"], 2);
    assert_eq!(report["endpoint_gaps"].as_array().unwrap().len(), 2);
}

#[test]
fn bivalence_warns_on_homeomorphic_data() {
    let out = tubegeo(&[
        "bivalence",
        "--a",
        "1,0,0,1",
        "--b",
        "0,0",
        "--resolution",
        "256",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["max_preimage_count"], 1);
}

#[test]
fn bivalence_rejects_small_resolution() {
    let out = tubegeo(&[
        "bivalence",
        "--a",
        "1,0,0,0",
        "--b",
        "0,1",
        "--resolution",
        "32",
    ]);
    assert_eq!(out.status.code(), Some(2));
}
