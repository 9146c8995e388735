//! The library half of the command-line front end: dataset files, run
//! configuration, and the `validate`, `table` and `curves` commands.
//!
//! Dataset files are JSON: a top-level array of points, each an object with
//! the keys `ll`, `l`, `rl`, `crisp`, `lr`, `r`, `rr`, each a two-element
//! array `[x, y]`.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde_json::Value;

use crate::bspline::ParamChoice;
use crate::bundle::FuzzyCurveBundle;
use crate::fixtures;
use crate::ops::run_point_pipeline;
use crate::point::{CrispPoint, Dataset, FuzzyDataPoint, Lateral};
use crate::render::{self, fmt_point4, TableFormat};
use crate::{Error, Result};

pub const MAX_DEGREE: usize = 5;

/// Process exit statuses.
pub mod exit {
    pub const OK: i32 = 0;
    pub const INVALID: i32 = 1;
    pub const USAGE: i32 = 2;
}

/// Exit status for a failed command: 1 for validation failures, 2 otherwise.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Validation(_) => exit::INVALID,
        _ => exit::USAGE,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Csv,
    Svg,
    Json,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "svg" => Ok(OutputFormat::Svg),
            "json" => Ok(OutputFormat::Json),
            _ => Err(format!("unknown format `{s}` (expected csv, svg or json)")),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Svg => "svg",
            OutputFormat::Json => "json",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RunConfig {
    pub alpha: f64,
    pub degree: usize,
    pub parametrization: ParamChoice,
    pub samples: usize,
    pub format: OutputFormat,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            alpha: 0.5,
            degree: 3,
            parametrization: ParamChoice::ChordLength,
            samples: 200,
            format: OutputFormat::Csv,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        crate::ops::Alpha::new(self.alpha)?;
        if !(1..=MAX_DEGREE).contains(&self.degree) {
            return Err(Error::DegreeOutOfRange {
                degree: self.degree,
                max: MAX_DEGREE,
            });
        }
        if self.samples < 2 {
            return Err(Error::Arity {
                what: "curve samples",
                required: 2,
                actual: self.samples,
            });
        }
        Ok(())
    }
}

/// Parses dataset text without validating the points.
pub fn parse_dataset(text: &str, label: &str) -> Result<Dataset> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let Value::Array(items) = value else {
        return Err(Error::Parse {
            line: 1,
            column: 1,
            message: "expected a top-level list of points".into(),
        });
    };
    let points = items
        .iter()
        .enumerate()
        .map(|(index, item)| parse_point(index, item))
        .collect::<Result<Vec<_>>>()?;
    Ok(Dataset::new(label, points))
}

fn parse_point(index: usize, item: &Value) -> Result<FuzzyDataPoint> {
    let Value::Object(map) = item else {
        return Err(Error::BadValue {
            index,
            key: "",
            message: "expected an object with keys ll, l, rl, crisp, lr, r, rr".into(),
        });
    };
    let mut out = [CrispPoint::default(); 7];
    for (slot, lateral) in out.iter_mut().zip(Lateral::ALL) {
        let key = lateral.key();
        let v = map.get(key).ok_or(Error::MissingKey { index, key })?;
        let bad = |message: &str| Error::BadValue {
            index,
            key,
            message: message.into(),
        };
        let pair = v.as_array().ok_or_else(|| bad("expected [x, y]"))?;
        if pair.len() != 2 {
            return Err(bad("expected exactly two numbers"));
        }
        let x = pair[0].as_f64().ok_or_else(|| bad("x is not a number"))?;
        let y = pair[1].as_f64().ok_or_else(|| bad("y is not a number"))?;
        *slot = CrispPoint::new(x, y);
    }
    Ok(FuzzyDataPoint::from_array(out))
}

fn label_of(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default()
}

/// Reads and parses a dataset file without validating it.
pub fn read_dataset(path: impl AsRef<Path>) -> Result<Dataset> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_dataset(&text, &label_of(path))
}

/// Reads, parses and validates a dataset file. The label is the file stem.
pub fn load_dataset(path: impl AsRef<Path>) -> Result<Dataset> {
    let d = read_dataset(path)?;
    d.validate().into_result()?;
    Ok(d)
}

/// Serializes a dataset, one point per line.
pub fn dataset_to_json(d: &Dataset) -> Result<String> {
    let mut out = String::from("[\n");
    for (index, p) in d.points.iter().enumerate() {
        let mut fields = Vec::with_capacity(7);
        for (lateral, q) in Lateral::ALL.iter().zip(p.to_array()) {
            if !q.is_finite() {
                return Err(Error::BadValue {
                    index,
                    key: lateral.key(),
                    message: "non-finite values cannot be saved".into(),
                });
            }
            let num = |v: f64| serde_json::to_string(&v).expect("finite numbers serialize");
            fields.push(format!(
                "\"{}\": [{}, {}]",
                lateral.key(),
                num(q.x),
                num(q.y)
            ));
        }
        let sep = if index + 1 < d.points.len() { "," } else { "" };
        out.push_str(&format!("  {{{}}}{sep}\n", fields.join(", ")));
    }
    out.push_str("]\n");
    Ok(out)
}

pub fn save_dataset(d: &Dataset, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    fs::write(path, dataset_to_json(d)?).map_err(|e| Error::io(path, e))
}

/// The printed report and exit status of `validate`.
pub fn cmd_validate(path: impl AsRef<Path>) -> (String, i32) {
    match read_dataset(path) {
        Err(e) => (format!("error: {e}"), exit_code(&e)),
        Ok(d) => {
            let report = d.validate();
            let code = if report.is_ok() {
                exit::OK
            } else {
                exit::INVALID
            };
            (report.to_string(), code)
        }
    }
}

/// Type-reduction cells where the published source table disagrees with its
/// own defuzzification row: `(point index, value printed in the source)`.
pub const SOURCE_ERRATA: [(usize, &str); 2] = [(1, "(15, 7)"), (3, "(48.8333, 10)")];

/// The four-stage table. With `source_values`, the reference dataset at
/// alpha 0.5 also gets the source table's misprinted cells listed next to
/// the computed ones.
pub fn cmd_table(
    d: &Dataset,
    config: &RunConfig,
    format: TableFormat,
    source_values: bool,
) -> Result<String> {
    config.validate()?;
    d.validate().into_result()?;
    let records = d
        .points
        .iter()
        .map(|p| run_point_pipeline(p, config.alpha))
        .collect::<Result<Vec<_>>>()?;
    let mut out = render::stage_table(&records, config.alpha, format);
    if source_values {
        out.push('\n');
        if d.points.as_slice() == fixtures::table51().as_slice() && config.alpha == 0.5 {
            out.push_str(
                "Errata, type-reduction right footprint (computed vs printed in source)\n",
            );
            for (i, printed) in SOURCE_ERRATA {
                out.push_str(&format!(
                    "i = {i}: {}  source: {printed}\n",
                    fmt_point4(records[i].reduced.right)
                ));
            }
        } else {
            out.push_str("No source values are known for this dataset and alpha.\n");
        }
    }
    Ok(out)
}

/// Writes one SVG per stage and, for csv/json formats, one sample file per
/// stage into `out_dir`. Returns the written paths in stage order.
pub fn cmd_curves(
    d: &Dataset,
    config: &RunConfig,
    out_dir: impl AsRef<Path>,
) -> Result<Vec<PathBuf>> {
    config.validate()?;
    let out_dir = out_dir.as_ref();
    let bundle = FuzzyCurveBundle::build(d, config.degree, config.parametrization)?;
    fs::create_dir_all(out_dir).map_err(|e| Error::io(out_dir, e))?;
    let mut written = Vec::new();
    for b in bundle.all_stages(config.alpha)? {
        let stage = b.stage();
        let stem = format!("{}_{}", stage.letter(), stage.name());
        let samples = b.sample(config.samples)?;
        let mut title = format!("{} ({}) {}", d.label, stage.letter(), stage.name());
        if let Some(a) = b.alpha() {
            title.push_str(&format!(", alpha = {}", a.get()));
        }
        let mut write = |ext: &str, body: String| -> Result<()> {
            let path = out_dir.join(format!("{stem}.{ext}"));
            fs::write(&path, body).map_err(|e| Error::io(&path, e))?;
            written.push(path);
            Ok(())
        };
        write("svg", render::bundle_svg(&b, &samples, &title))?;
        match config.format {
            OutputFormat::Csv => write("csv", render::samples_csv(&samples))?,
            OutputFormat::Json => write("json", render::samples_json(&samples))?,
            OutputFormat::Svg => {}
        }
    }
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::table51_dataset;

    #[test]
    fn parse_errors_carry_position() {
        match parse_dataset("[\n  {\"ll\": [1, 2],\n  oops", "x") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_dataset("", "x"), Err(Error::Parse { .. })));
        assert!(matches!(parse_dataset("{}", "x"), Err(Error::Parse { .. })));
    }

    #[test]
    fn missing_key_is_named() {
        let text = r#"[{"ll": [0, 0], "l": [0, 0], "rl": [0, 0], "crisp": [0, 0], "lr": [0, 0], "rr": [0, 0]}]"#;
        assert!(matches!(
            parse_dataset(text, "x"),
            Err(Error::MissingKey { index: 0, key: "r" })
        ));
    }

    #[test]
    fn malformed_pairs_are_rejected() {
        let with = |v: &str| {
            format!(
                r#"[{{"ll": {v}, "l": [0, 0], "rl": [0, 0], "crisp": [0, 0], "lr": [0, 0], "r": [0, 0], "rr": [0, 0]}}]"#
            )
        };
        for v in ["[0]", "[0, 1, 2]", "[\"a\", 0]", "3"] {
            assert!(
                matches!(
                    parse_dataset(&with(v), "x"),
                    Err(Error::BadValue { key: "ll", .. })
                ),
                "{v}"
            );
        }
    }

    #[test]
    fn json_text_round_trips() {
        let d = table51_dataset();
        let back = parse_dataset(&dataset_to_json(&d).unwrap(), "table51").unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn config_ranges() {
        assert!(RunConfig::default().validate().is_ok());
        let bad = [
            RunConfig {
                alpha: 1.5,
                ..Default::default()
            },
            RunConfig {
                degree: 0,
                ..Default::default()
            },
            RunConfig {
                degree: 6,
                ..Default::default()
            },
            RunConfig {
                samples: 1,
                ..Default::default()
            },
        ];
        for c in bad {
            assert!(c.validate().is_err(), "{c:?}");
        }
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&Error::Validation(Default::default())), 1);
        assert_eq!(exit_code(&Error::AlphaOutOfRange(2.0)), 2);
    }
}
