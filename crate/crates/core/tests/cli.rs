use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use proptest::prelude::*;

use fuzzy_bspline::cli::{self, RunConfig};
use fuzzy_bspline::render::TableFormat;
use fuzzy_bspline::{CrispPoint, Dataset, Error, FuzzyDataPoint};

fn fixture_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn fixture() -> PathBuf {
    fixture_dir().join("table51.json")
}

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fuzzy-bspline"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, body: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, body).unwrap();
    p
}

fn swapped_fixture() -> String {
    fs::read_to_string(fixture()).unwrap().replacen(
        "\"ll\": [-12, 0], \"l\": [-11, 0]",
        "\"ll\": [-11, 0], \"l\": [-12, 0]",
        1,
    )
}

#[test]
fn validate_fixture_is_ok() {
    let out = bin(&["validate", fixture().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "ok");
}

#[test]
fn validate_empty_file_is_parse_error() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "empty.json", "");
    let out = bin(&["validate", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("parse error"));
}

#[test]
fn validate_corrupted_row_names_pair() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "bad.json", &swapped_fixture());
    let out = bin(&["validate", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(
        err.contains("point 0: x is not monotone at pair (ll, l)"),
        "{err}"
    );
}

#[test]
fn load_rejects_single_point_and_swapped_pair() {
    let dir = tempfile::tempdir().unwrap();
    let one = write(
        dir.path(),
        "one.json",
        r#"[{"ll": [0, 0], "l": [1, 0], "rl": [2, 0], "crisp": [3, 0], "lr": [4, 0], "r": [5, 0], "rr": [6, 0]}]"#,
    );
    match cli::load_dataset(&one) {
        Err(Error::Validation(report)) => assert!(report.to_string().contains("length < 2")),
        other => panic!("unexpected {other:?}"),
    }
    let swapped = write(dir.path(), "swapped.json", &swapped_fixture());
    match cli::load_dataset(&swapped) {
        Err(Error::Validation(report)) => assert!(report.to_string().contains("(ll, l)")),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn load_fixture_has_four_points() {
    let d = cli::load_dataset(fixture()).unwrap();
    assert_eq!(d.len(), 4);
    assert_eq!(d.label, "table51");
    assert_eq!(d.points, fuzzy_bspline::fixtures::table51());
}

#[test]
fn table_matches_golden_file() {
    let golden = fs::read(fixture_dir().join("table51_golden.txt")).unwrap();
    let out = bin(&["table", fixture().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(out.stdout, golden);

    let d = cli::load_dataset(fixture()).unwrap();
    let lib = cli::cmd_table(&d, &RunConfig::default(), TableFormat::Text, false).unwrap();
    assert_eq!(lib.as_bytes(), golden.as_slice());
}

#[test]
fn table_cells() {
    let text = String::from_utf8(bin(&["table", fixture().to_str().unwrap()]).stdout).unwrap();
    let defuzz = text.split("Defuzzification").nth(1).unwrap();
    assert!(defuzz
        .lines()
        .nth(2)
        .unwrap()
        .ends_with("(-4.1111, 0.0000)"));
    let reduced = text.split("Type-reduction").nth(1).unwrap();
    assert!(reduced
        .lines()
        .nth(3)
        .unwrap()
        .ends_with("(15.0000, 17.0000)"));
}

#[test]
fn table_at_alpha_one_collapses() {
    let d = cli::load_dataset(fixture()).unwrap();
    let config = RunConfig {
        alpha: 1.0,
        ..RunConfig::default()
    };
    let text = cli::cmd_table(&d, &config, TableFormat::Text, false).unwrap();
    let defuzz = text.split("Defuzzification").nth(1).unwrap();
    for line in defuzz.lines().skip(2).filter(|l| !l.is_empty()) {
        let cells: Vec<&str> = line[4..]
            .split(')')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .collect();
        assert_eq!(cells.len(), 2, "{line}");
        assert_eq!(cells[0], cells[1]);
    }
}

#[test]
fn table_source_values_flag() {
    let out = bin(&["table", fixture().to_str().unwrap(), "--source-values"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("i = 1: (15.0000, 17.0000)  source: (15, 7)"));
    assert!(text.contains("i = 3: (43.8333, 10.0000)  source: (48.8333, 10)"));
}

#[test]
fn table_csv_format() {
    let out = bin(&["table", fixture().to_str().unwrap(), "--format", "csv"]);
    let text = String::from_utf8_lossy(&out.stdout);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("stage,i,channel,x,y"));
    assert_eq!(text.lines().count(), 1 + 4 * (7 + 7 + 3 + 2));
    assert!(text.contains("reduced,3,right,43.8333,10.0000"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(bin(&[]).status.code(), Some(2));
    assert_eq!(bin(&["table"]).status.code(), Some(2));
    let f = fixture();
    let f = f.to_str().unwrap();
    assert_eq!(bin(&["table", f, "--alpha", "1.5"]).status.code(), Some(2));
    assert_eq!(bin(&["curves", f, "--degree", "9"]).status.code(), Some(2));
    assert_eq!(
        bin(&["curves", f, "--parametrization", "bogus"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        bin(&["validate", "/nonexistent/file.json"]).status.code(),
        Some(2)
    );
}

#[test]
fn curves_write_svg_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin(&[
        "curves",
        fixture().to_str().unwrap(),
        "--samples",
        "50",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    for (stem, channels) in [
        ("a_fuzzy", 7),
        ("b_alpha-cut", 7),
        ("c_reduced", 3),
        ("d_defuzzified", 1),
    ] {
        let csv = fs::read_to_string(dir.path().join(format!("{stem}.csv"))).unwrap();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("t,channel,x,y"));
        assert_eq!(lines.count(), 50 * channels, "{stem}");
        let svg = fs::read_to_string(dir.path().join(format!("{stem}.svg"))).unwrap();
        let doc = roxmltree::Document::parse(&svg).unwrap();
        let root = doc.root_element();
        assert_eq!(root.attribute("version"), Some("1.1"));
        assert_eq!(
            root.descendants()
                .filter(|n| n.has_tag_name("polyline"))
                .count(),
            channels
        );
        assert_eq!(
            root.descendants()
                .filter(|n| n.has_tag_name("circle"))
                .count(),
            4 * channels
        );
    }
}

#[test]
fn curves_view_box_has_margin() {
    let dir = tempfile::tempdir().unwrap();
    let d = cli::load_dataset(fixture()).unwrap();
    let config = RunConfig {
        samples: 400,
        format: cli::OutputFormat::Json,
        ..RunConfig::default()
    };
    cli::cmd_curves(&d, &config, dir.path()).unwrap();
    let rows: Vec<serde_json::Value> =
        serde_json::from_str(&fs::read_to_string(dir.path().join("d_defuzzified.json")).unwrap())
            .unwrap();
    assert_eq!(rows.len(), 400);
    let xs: Vec<f64> = rows.iter().map(|r| r["x"].as_f64().unwrap()).collect();
    let ys: Vec<f64> = rows.iter().map(|r| r["y"].as_f64().unwrap()).collect();
    let (x0, x1) = (
        xs.iter().cloned().fold(f64::INFINITY, f64::min),
        xs.iter().cloned().fold(f64::NEG_INFINITY, f64::max),
    );
    let (y0, y1) = (
        ys.iter().cloned().fold(f64::INFINITY, f64::min),
        ys.iter().cloned().fold(f64::NEG_INFINITY, f64::max),
    );

    let svg = fs::read_to_string(dir.path().join("d_defuzzified.svg")).unwrap();
    let doc = roxmltree::Document::parse(&svg).unwrap();
    let vb: Vec<f64> = doc
        .root_element()
        .attribute("viewBox")
        .unwrap()
        .split_whitespace()
        .map(|v| v.parse().unwrap())
        .collect();
    let (w, h) = (x1 - x0, y1 - y0);
    let tol = 1e-9;
    assert!((vb[0] - (x0 - 0.05 * w)).abs() < tol);
    assert!((vb[1] - (-y1 - 0.05 * h)).abs() < tol);
    assert!((vb[2] - 1.1 * w).abs() < tol);
    assert!((vb[3] - 1.1 * h).abs() < tol);
    assert!(!dir.path().join("d_defuzzified.csv").exists());
}

#[test]
fn curves_svg_only_format() {
    let dir = tempfile::tempdir().unwrap();
    let d = cli::load_dataset(fixture()).unwrap();
    let config = RunConfig {
        format: cli::OutputFormat::Svg,
        ..RunConfig::default()
    };
    let files = cli::cmd_curves(&d, &config, dir.path()).unwrap();
    assert_eq!(files.len(), 4);
    assert!(files.iter().all(|f| f.extension().unwrap() == "svg"));
}

#[test]
fn curves_unwritable_output() {
    let dir = tempfile::tempdir().unwrap();
    let blocker = write(dir.path(), "file", "");
    let d = cli::load_dataset(fixture()).unwrap();
    let err = cli::cmd_curves(&d, &RunConfig::default(), blocker.join("sub")).unwrap_err();
    assert!(matches!(err, Error::Io { .. }));
    assert_eq!(cli::exit_code(&err), 2);
}

#[test]
fn commands_are_deterministic() {
    let run = || {
        let dir = tempfile::tempdir().unwrap();
        bin(&[
            "curves",
            fixture().to_str().unwrap(),
            "--out",
            dir.path().to_str().unwrap(),
        ]);
        let mut files: Vec<(String, Vec<u8>)> = fs::read_dir(dir.path())
            .unwrap()
            .map(|e| {
                let e = e.unwrap();
                (
                    e.file_name().to_string_lossy().into_owned(),
                    fs::read(e.path()).unwrap(),
                )
            })
            .collect();
        files.sort();
        files
    };
    let a = run();
    assert_eq!(a.len(), 8);
    assert_eq!(a, run());
    assert_eq!(
        bin(&["table", fixture().to_str().unwrap()]).stdout,
        bin(&["table", fixture().to_str().unwrap()]).stdout
    );
}

fn arbitrary_point() -> impl Strategy<Value = FuzzyDataPoint> {
    proptest::array::uniform7((-1e6..1e6f64, -1e6..1e6f64))
        .prop_map(|pairs| FuzzyDataPoint::from_array(pairs.map(|(x, y)| CrispPoint::new(x, y))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn save_then_load_is_identity(points in proptest::collection::vec(arbitrary_point(), 0..6)) {
        let dir = tempfile::tempdir().unwrap();
        let d = Dataset::new("roundtrip", points);
        let path = dir.path().join("roundtrip.json");
        cli::save_dataset(&d, &path).unwrap();
        prop_assert_eq!(cli::read_dataset(&path).unwrap(), d);
    }
}
