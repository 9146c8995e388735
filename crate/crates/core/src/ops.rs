//! The point-level pipeline: alpha-cut, type-reduction, defuzzification.
//!
//! Every stage is an affine combination of positions with coefficients that
//! do not depend on the positions themselves. The curve bundle relies on
//! that to run the same stages on control points.

use crate::numeric::{lerp, mean3};
use crate::point::{Axis, CrispPoint, FuzzyDataPoint, ValidationReport, Violation};
use crate::{Error, Result};

/// An alpha level in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Alpha(f64);

impl Alpha {
    pub fn new(value: f64) -> Result<Self> {
        if (0.0..=1.0).contains(&value) {
            Ok(Self(value))
        } else {
            Err(Error::AlphaOutOfRange(value))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for Alpha {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        Self::new(value)
    }
}

/// Moves a lateral position toward the crisp position by `alpha`:
/// `(1 - alpha) * v + alpha * crisp`, coordinate-wise.
pub fn cut_toward(v: CrispPoint, crisp: CrispPoint, alpha: Alpha) -> CrispPoint {
    v.zip_with(crisp, |a, c| lerp(a, c, alpha.0))
}

/// Coordinate-wise mean of three positions.
pub fn centroid3(a: CrispPoint, b: CrispPoint, c: CrispPoint) -> CrispPoint {
    CrispPoint::new(mean3(a.x, b.x, c.x), mean3(a.y, b.y, c.y))
}

/// A fuzzy data point after the alpha-cut.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaCutPoint {
    pub point: FuzzyDataPoint,
    pub alpha: Alpha,
}

/// A type-1 triple produced by type-reduction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReducedPoint {
    pub left: CrispPoint,
    pub crisp: CrispPoint,
    pub right: CrispPoint,
    pub alpha: Alpha,
}

impl ReducedPoint {
    pub fn to_array(&self) -> [CrispPoint; 3] {
        [self.left, self.crisp, self.right]
    }

    /// Per coordinate, `(left, crisp, right)` must be monotone.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        for axis in Axis::BOTH {
            let [a, b, c] = self.to_array().map(|p| p.coord(axis));
            if !(a.is_finite() && b.is_finite() && c.is_finite()) || (b - a) * (c - b) < 0.0 {
                report.push(
                    None,
                    Violation::TripleNotMonotone {
                        axis,
                        values: (a, b, c),
                    },
                );
            }
        }
        report
    }
}

/// Shrinks every lateral position of `p` toward its crisp position.
///
/// At `alpha = 0` the point is returned unchanged; at `alpha = 1` all seven
/// positions equal the crisp one. Both ends are exact.
pub fn alpha_cut(p: &FuzzyDataPoint, alpha: f64) -> Result<AlphaCutPoint> {
    let alpha = Alpha::new(alpha)?;
    p.validate().into_result()?;
    let crisp = p.crisp;
    Ok(AlphaCutPoint {
        point: p.map(|v| cut_toward(v, crisp, alpha)),
        alpha,
    })
}

/// Centroid-min type-reduction: each footprint collapses to the mean of its
/// three positions.
pub fn type_reduce(a: &AlphaCutPoint) -> Result<ReducedPoint> {
    let p = &a.point;
    p.validate().into_result()?;
    Ok(ReducedPoint {
        left: centroid3(p.ll, p.l, p.rl),
        crisp: p.crisp,
        right: centroid3(p.lr, p.r, p.rr),
        alpha: a.alpha,
    })
}

/// Mean of the reduced triple.
pub fn defuzzify(r: &ReducedPoint) -> Result<CrispPoint> {
    r.validate().into_result()?;
    Ok(centroid3(r.left, r.crisp, r.right))
}

/// All three stage outputs for one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StageRecord {
    pub input: FuzzyDataPoint,
    pub alpha_cut: AlphaCutPoint,
    pub reduced: ReducedPoint,
    pub defuzzified: CrispPoint,
}

pub fn run_point_pipeline(p: &FuzzyDataPoint, alpha: f64) -> Result<StageRecord> {
    let cut = alpha_cut(p, alpha)?;
    let reduced = type_reduce(&cut)?;
    let defuzzified = defuzzify(&reduced)?;
    Ok(StageRecord {
        input: *p,
        alpha_cut: cut,
        reduced,
        defuzzified,
    })
}
