//! Text, CSV, JSON and SVG output.

use std::fmt::Write as _;

use serde::Serialize;

use crate::bundle::{Channel, ChannelSamples, FuzzyCurveBundle};
use crate::ops::StageRecord;
use crate::point::{CrispPoint, Lateral};

/// Rounds to 4 decimals, ties away from zero. Never returns `-0.0`.
pub fn round4(v: f64) -> f64 {
    let r = (v * 1e4).round() / 1e4;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// `(x, y)` with both coordinates rounded to 4 decimals.
pub fn fmt_point4(p: CrispPoint) -> String {
    format!("({:.4}, {:.4})", round4(p.x), round4(p.y))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TableFormat {
    #[default]
    Text,
    Csv,
}

const CELL: usize = 22;

fn block(
    out: &mut String,
    title: &str,
    headers: &[&str],
    rows: impl Iterator<Item = Vec<CrispPoint>>,
) {
    let mut lines = Vec::new();
    let mut head = format!("{:<4}", "i");
    for h in headers {
        let _ = write!(head, "{h:<CELL$}");
    }
    lines.push(head);
    for (i, row) in rows.enumerate() {
        let mut line = format!("{i:<4}");
        for p in row {
            let _ = write!(line, "{:<CELL$}", fmt_point4(p));
        }
        lines.push(line);
    }
    out.push_str(title);
    out.push('\n');
    for l in lines {
        out.push_str(l.trim_end());
        out.push('\n');
    }
}

/// The four stage blocks for every point, in the order input, alpha-cut,
/// type-reduction, defuzzification.
pub fn stage_table(records: &[StageRecord], alpha: f64, format: TableFormat) -> String {
    let lateral: Vec<&str> = Lateral::ALL.iter().map(|l| l.key()).collect();
    match format {
        TableFormat::Text => {
            let mut out = String::new();
            block(
                &mut out,
                "Fuzzy data points",
                &lateral,
                records.iter().map(|r| r.input.to_array().to_vec()),
            );
            out.push('\n');
            block(
                &mut out,
                &format!("Alpha-cut, alpha = {alpha}"),
                &lateral,
                records
                    .iter()
                    .map(|r| r.alpha_cut.point.to_array().to_vec()),
            );
            out.push('\n');
            block(
                &mut out,
                &format!("Type-reduction, alpha = {alpha}"),
                &["left", "crisp", "right"],
                records.iter().map(|r| r.reduced.to_array().to_vec()),
            );
            out.push('\n');
            block(
                &mut out,
                &format!("Defuzzification, alpha = {alpha}"),
                &["crisp", "defuzzified"],
                records.iter().map(|r| vec![r.input.crisp, r.defuzzified]),
            );
            out
        }
        TableFormat::Csv => {
            let mut out = String::from("stage,i,channel,x,y\n");
            let mut row = |stage: &str, i: usize, channel: &str, p: CrispPoint| {
                let _ = writeln!(
                    out,
                    "{stage},{i},{channel},{:.4},{:.4}",
                    round4(p.x),
                    round4(p.y)
                );
            };
            for (i, r) in records.iter().enumerate() {
                for (l, p) in Lateral::ALL.iter().zip(r.input.to_array()) {
                    row("fuzzy", i, l.key(), p);
                }
            }
            for (i, r) in records.iter().enumerate() {
                for (l, p) in Lateral::ALL.iter().zip(r.alpha_cut.point.to_array()) {
                    row("alpha-cut", i, l.key(), p);
                }
            }
            for (i, r) in records.iter().enumerate() {
                for (name, p) in ["left", "crisp", "right"].iter().zip(r.reduced.to_array()) {
                    row("reduced", i, name, p);
                }
            }
            for (i, r) in records.iter().enumerate() {
                row("defuzzified", i, "crisp", r.input.crisp);
                row("defuzzified", i, "defuzzified", r.defuzzified);
            }
            out
        }
    }
}

#[derive(Serialize)]
struct SampleRow<'a> {
    t: f64,
    channel: &'a str,
    x: f64,
    y: f64,
}

fn sample_rows(samples: &[ChannelSamples]) -> impl Iterator<Item = SampleRow<'_>> {
    samples.iter().flat_map(|s| {
        s.params
            .iter()
            .zip(&s.points)
            .map(move |(&t, p)| SampleRow {
                t,
                channel: s.channel.name(),
                x: p.x,
                y: p.y,
            })
    })
}

/// `t,channel,x,y` rows, one per sample per channel.
pub fn samples_csv(samples: &[ChannelSamples]) -> String {
    let mut out = String::from("t,channel,x,y\n");
    for r in sample_rows(samples) {
        let _ = writeln!(out, "{},{},{},{}", r.t, r.channel, r.x, r.y);
    }
    out
}

pub fn samples_json(samples: &[ChannelSamples]) -> String {
    let rows: Vec<SampleRow<'_>> = sample_rows(samples).collect();
    let mut s = serde_json::to_string_pretty(&rows).expect("sample rows serialize");
    s.push('\n');
    s
}

fn color(channel: Channel) -> &'static str {
    match channel {
        Channel::Lateral(Lateral::LeftLeft) => "#08519c",
        Channel::Lateral(Lateral::Left) => "#3182bd",
        Channel::Lateral(Lateral::RightLeft) => "#6baed6",
        Channel::Lateral(Lateral::Crisp) => "#000000",
        Channel::Lateral(Lateral::LeftRight) => "#fc9272",
        Channel::Lateral(Lateral::Right) => "#de2d26",
        Channel::Lateral(Lateral::RightRight) => "#a50f15",
        Channel::ReducedLeft => "#3182bd",
        Channel::ReducedRight => "#de2d26",
        Channel::Defuzzified => "#31a354",
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// One SVG 1.1 document for a bundle: a polyline per channel plus a marker
/// per data point.
///
/// Coordinates are written in data units inside a group that flips the y
/// axis, so polyline vertices are the sampled curve points verbatim. The view
/// box is the sample bounding box with a 5% margin on each side.
pub fn bundle_svg(bundle: &FuzzyCurveBundle, samples: &[ChannelSamples], title: &str) -> String {
    let all = samples.iter().flat_map(|s| &s.points);
    let (mut x0, mut x1, mut y0, mut y1) = (
        f64::INFINITY,
        f64::NEG_INFINITY,
        f64::INFINITY,
        f64::NEG_INFINITY,
    );
    for p in all {
        x0 = x0.min(p.x);
        x1 = x1.max(p.x);
        y0 = y0.min(p.y);
        y1 = y1.max(p.y);
    }
    let w = if x1 > x0 { x1 - x0 } else { 1.0 };
    let h = if y1 > y0 { y1 - y0 } else { 1.0 };
    let (mx, my) = (0.05 * w, 0.05 * h);
    let (vx, vy, vw, vh) = (x0 - mx, -y1 - my, w + 2.0 * mx, h + 2.0 * my);
    let radius = 0.006 * vw.max(vh);

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"600\" viewBox=\"{vx} {vy} {vw} {vh}\">"
    );
    let _ = writeln!(out, "  <title>{}</title>", escape(title));
    out.push_str("  <g transform=\"scale(1,-1)\">\n");
    for s in samples {
        let points: Vec<String> = s
            .points
            .iter()
            .map(|p| format!("{},{}", p.x, p.y))
            .collect();
        let _ = writeln!(
            out,
            "    <polyline class=\"curve\" data-channel=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\" vector-effect=\"non-scaling-stroke\" points=\"{}\"/>",
            s.channel,
            color(s.channel),
            points.join(" ")
        );
    }
    for c in bundle.channels() {
        for p in &c.data {
            let _ = writeln!(
                out,
                "    <circle class=\"datum\" data-channel=\"{}\" cx=\"{}\" cy=\"{}\" r=\"{radius}\" fill=\"{}\"/>",
                c.channel,
                p.x,
                p.y,
                color(c.channel)
            );
        }
    }
    out.push_str("  </g>\n</svg>\n");
    out
}
