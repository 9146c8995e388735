//! Perfectly normal type-2 fuzzy data points.
//!
//! A fuzzy data point is stored as seven ordered 2D positions: the left
//! footprint `(ll, l, rl)`, the crisp point, and the right footprint
//! `(lr, r, rr)`. Membership grades are not stored. Perfect normality means
//! the lower and upper primary memberships are triangular with apex grade 1
//! at the crisp point, so the seven abscissae determine them completely.
//!
//! Validation never fails eagerly; it returns a [`ValidationReport`] listing
//! every violated constraint so a caller can show them all at once.

use std::fmt;

use serde::{Deserialize, Serialize};

/// A plain 2D point in model units.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct CrispPoint {
    pub x: f64,
    pub y: f64,
}

impl CrispPoint {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn coord(&self, axis: Axis) -> f64 {
        match axis {
            Axis::X => self.x,
            Axis::Y => self.y,
        }
    }

    /// Applies `f` to each coordinate.
    pub fn map(self, mut f: impl FnMut(f64) -> f64) -> Self {
        Self::new(f(self.x), f(self.y))
    }

    /// Combines two points coordinate by coordinate.
    pub fn zip_with(self, other: Self, mut f: impl FnMut(f64, f64) -> f64) -> Self {
        Self::new(f(self.x, other.x), f(self.y, other.y))
    }

    /// Maximum absolute coordinate difference.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (self.x - other.x).abs().max((self.y - other.y).abs())
    }
}

impl From<(f64, f64)> for CrispPoint {
    fn from((x, y): (f64, f64)) -> Self {
        Self::new(x, y)
    }
}

impl fmt::Display for CrispPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    X,
    Y,
}

impl Axis {
    pub const BOTH: [Axis; 2] = [Axis::X, Axis::Y];
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axis::X => "x",
            Axis::Y => "y",
        })
    }
}

/// One of the seven lateral positions of a fuzzy data point, in order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Lateral {
    LeftLeft,
    Left,
    RightLeft,
    Crisp,
    LeftRight,
    Right,
    RightRight,
}

impl Lateral {
    pub const ALL: [Lateral; 7] = [
        Lateral::LeftLeft,
        Lateral::Left,
        Lateral::RightLeft,
        Lateral::Crisp,
        Lateral::LeftRight,
        Lateral::Right,
        Lateral::RightRight,
    ];

    /// The key used in dataset files and output headers.
    pub fn key(self) -> &'static str {
        match self {
            Lateral::LeftLeft => "ll",
            Lateral::Left => "l",
            Lateral::RightLeft => "rl",
            Lateral::Crisp => "crisp",
            Lateral::LeftRight => "lr",
            Lateral::Right => "r",
            Lateral::RightRight => "rr",
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Lateral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

/// A perfectly normal type-2 fuzzy data point.
///
/// Field order follows [`Lateral::ALL`]. The type itself does not enforce the
/// monotonicity constraint; call [`FuzzyDataPoint::validate`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FuzzyDataPoint {
    pub ll: CrispPoint,
    pub l: CrispPoint,
    pub rl: CrispPoint,
    pub crisp: CrispPoint,
    pub lr: CrispPoint,
    pub r: CrispPoint,
    pub rr: CrispPoint,
}

impl FuzzyDataPoint {
    pub fn from_array(points: [CrispPoint; 7]) -> Self {
        let [ll, l, rl, crisp, lr, r, rr] = points;
        Self {
            ll,
            l,
            rl,
            crisp,
            lr,
            r,
            rr,
        }
    }

    /// Builds a point from seven `(x, y)` pairs in lateral order.
    pub fn from_pairs(pairs: [(f64, f64); 7]) -> Self {
        Self::from_array(pairs.map(CrispPoint::from))
    }

    /// A point with no uncertainty: all seven positions at `p`.
    pub fn singleton(p: CrispPoint) -> Self {
        Self::from_array([p; 7])
    }

    pub fn to_array(&self) -> [CrispPoint; 7] {
        [
            self.ll, self.l, self.rl, self.crisp, self.lr, self.r, self.rr,
        ]
    }

    pub fn get(&self, channel: Lateral) -> CrispPoint {
        self.to_array()[channel.index()]
    }

    /// Applies `f` to every position, crisp included.
    pub fn map(&self, f: impl FnMut(CrispPoint) -> CrispPoint) -> Self {
        Self::from_array(self.to_array().map(f))
    }

    /// The same point with its lateral sequence reversed (`ll` swaps with
    /// `rr`, and so on). A valid point stays valid.
    pub fn reversed(&self) -> Self {
        let mut a = self.to_array();
        a.reverse();
        Self::from_array(a)
    }

    pub fn validate(&self) -> ValidationReport {
        validate_point(self)
    }
}

/// An ordered list of fuzzy data points with a display label.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    pub label: String,
    pub points: Vec<FuzzyDataPoint>,
}

impl Dataset {
    pub fn new(label: impl Into<String>, points: Vec<FuzzyDataPoint>) -> Self {
        Self {
            label: label.into(),
            points,
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// The crisp positions, in order.
    pub fn crisp_points(&self) -> Vec<CrispPoint> {
        self.channel(Lateral::Crisp)
    }

    /// The positions of one lateral channel across all points.
    pub fn channel(&self, channel: Lateral) -> Vec<CrispPoint> {
        self.points.iter().map(|p| p.get(channel)).collect()
    }

    pub fn validate(&self) -> ValidationReport {
        validate_dataset(self)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    NonFinite {
        channel: Lateral,
        axis: Axis,
        value: f64,
    },
    /// An adjacent pair steps against the overall direction of the sequence.
    NotMonotone {
        axis: Axis,
        pair: (Lateral, Lateral),
        values: (f64, f64),
    },
    /// A reduced `(left, crisp, right)` triple is not monotone.
    TripleNotMonotone {
        axis: Axis,
        values: (f64, f64, f64),
    },
    TooFewPoints {
        len: usize,
    },
    /// Crisp point `index` equals crisp point `index + 1`.
    RepeatedCrisp {
        index: usize,
        point: CrispPoint,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NonFinite {
                channel,
                axis,
                value,
            } => write!(f, "{axis} of {channel} is not finite ({value})"),
            Violation::NotMonotone {
                axis,
                pair: (a, b),
                values: (va, vb),
            } => write!(
                f,
                "{axis} is not monotone at pair ({a}, {b}): {va} then {vb}"
            ),
            Violation::TripleNotMonotone {
                axis,
                values: (a, b, c),
            } => write!(
                f,
                "{axis} of (left, crisp, right) is not monotone: {a}, {b}, {c}"
            ),
            Violation::TooFewPoints { len } => {
                write!(f, "length < 2: dataset has {len} point(s)")
            }
            Violation::RepeatedCrisp { index, point } => write!(
                f,
                "repeated crisp point {point} at indices {index} and {}",
                index + 1
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Issue {
    /// Index of the offending point, or `None` for dataset-level issues.
    pub point: Option<usize>,
    pub violation: Violation,
}

/// The outcome of a validation: empty means ok.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ValidationReport {
    pub issues: Vec<Issue>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.issues.is_empty()
    }

    pub fn violations(&self) -> impl Iterator<Item = &Violation> {
        self.issues.iter().map(|i| &i.violation)
    }

    pub fn into_result(self) -> crate::Result<()> {
        if self.is_ok() {
            Ok(())
        } else {
            Err(crate::Error::Validation(self))
        }
    }

    pub(crate) fn push(&mut self, point: Option<usize>, violation: Violation) {
        self.issues.push(Issue { point, violation });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return f.write_str("ok");
        }
        for (n, issue) in self.issues.iter().enumerate() {
            if n > 0 {
                writeln!(f)?;
            }
            match issue.point {
                Some(i) => write!(f, "point {i}: {}", issue.violation)?,
                None => write!(f, "dataset: {}", issue.violation)?,
            }
        }
        Ok(())
    }
}

/// Checks a single point: all positions finite, and each coordinate
/// monotone (non-decreasing or non-increasing) along the lateral sequence.
pub fn validate_point(p: &FuzzyDataPoint) -> ValidationReport {
    let mut report = ValidationReport::default();
    for issue in point_violations(p) {
        report.push(None, issue);
    }
    report
}

fn point_violations(p: &FuzzyDataPoint) -> Vec<Violation> {
    let seq = p.to_array();
    let mut out = Vec::new();
    for axis in Axis::BOTH {
        let values = seq.map(|q| q.coord(axis));
        let mut finite = true;
        for (channel, &value) in Lateral::ALL.iter().zip(&values) {
            if !value.is_finite() {
                finite = false;
                out.push(Violation::NonFinite {
                    channel: *channel,
                    axis,
                    value,
                });
            }
        }
        if finite {
            monotone_violations(axis, &values, &mut out);
        }
    }
    out
}

fn monotone_violations(axis: Axis, values: &[f64; 7], out: &mut Vec<Violation>) {
    // Direction comes from the endpoints; when they tie, from the first step.
    let overall = values[6] - values[0];
    let direction = if overall != 0.0 {
        overall.signum()
    } else {
        match values.windows(2).map(|w| w[1] - w[0]).find(|d| *d != 0.0) {
            Some(d) => d.signum(),
            None => return,
        }
    };
    for k in 0..6 {
        let step = values[k + 1] - values[k];
        if step * direction < 0.0 {
            out.push(Violation::NotMonotone {
                axis,
                pair: (Lateral::ALL[k], Lateral::ALL[k + 1]),
                values: (values[k], values[k + 1]),
            });
        }
    }
}

/// Checks every point plus the dataset-level constraints: at least two
/// points, and no two consecutive crisp points identical.
pub fn validate_dataset(d: &Dataset) -> ValidationReport {
    let mut report = ValidationReport::default();
    if d.points.len() < 2 {
        report.push(
            None,
            Violation::TooFewPoints {
                len: d.points.len(),
            },
        );
    }
    for (i, p) in d.points.iter().enumerate() {
        for v in point_violations(p) {
            report.push(Some(i), v);
        }
    }
    for (i, w) in d.points.windows(2).enumerate() {
        if w[0].crisp == w[1].crisp {
            report.push(
                None,
                Violation::RepeatedCrisp {
                    index: i,
                    point: w[0].crisp,
                },
            );
        }
    }
    report
}
