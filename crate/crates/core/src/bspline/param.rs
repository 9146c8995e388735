use std::fmt;
use std::str::FromStr;

use crate::point::CrispPoint;
use crate::{Error, Result};

/// How interpolation parameters are assigned to data points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum ParamChoice {
    Uniform,
    #[default]
    ChordLength,
    Centripetal,
}

impl ParamChoice {
    pub const ALL: [ParamChoice; 3] = [
        ParamChoice::Uniform,
        ParamChoice::ChordLength,
        ParamChoice::Centripetal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ParamChoice::Uniform => "uniform",
            ParamChoice::ChordLength => "chord-length",
            ParamChoice::Centripetal => "centripetal",
        }
    }
}

impl fmt::Display for ParamChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ParamChoice {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        ParamChoice::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| {
                format!(
                    "unknown parametrization `{s}` (expected uniform, chord-length or centripetal)"
                )
            })
    }
}

/// Assigns a parameter in `[0, 1]` to each point.
///
/// The result is strictly increasing, starts at exactly 0 and ends at
/// exactly 1. Chord-length uses cumulative segment lengths; centripetal uses
/// their square roots.
pub fn parametrize(points: &[CrispPoint], choice: ParamChoice) -> Result<Vec<f64>> {
    let n = points.len();
    if n < 2 {
        return Err(Error::Arity {
            what: "parametrization points",
            required: 2,
            actual: n,
        });
    }
    let last = (n - 1) as f64;
    let weight = |a: &CrispPoint, b: &CrispPoint| {
        let d = (b.x - a.x).hypot(b.y - a.y);
        match choice {
            ParamChoice::Centripetal => d.sqrt(),
            _ => d,
        }
    };
    let mut params = Vec::with_capacity(n);
    match choice {
        ParamChoice::Uniform => params.extend((0..n).map(|i| i as f64 / last)),
        ParamChoice::ChordLength | ParamChoice::Centripetal => {
            let mut cumulative = Vec::with_capacity(n);
            cumulative.push(0.0);
            let mut total = 0.0;
            for (i, w) in points.windows(2).enumerate() {
                let step = weight(&w[0], &w[1]);
                if step.is_nan() || step <= 0.0 || total + step == total {
                    return Err(Error::DegenerateChord { index: i });
                }
                total += step;
                cumulative.push(total);
            }
            params.extend(cumulative.iter().map(|c| c / total));
        }
    }
    params[n - 1] = 1.0;
    if let Some(i) = params.windows(2).position(|w| w[0] >= w[1]) {
        return Err(Error::DegenerateChord { index: i });
    }
    Ok(params)
}
