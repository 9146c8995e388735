use super::{DenseLu, KnotVector};
use crate::point::CrispPoint;
use crate::{Error, Result};

/// A clamped B-spline curve in the plane.
#[derive(Debug, Clone, PartialEq)]
pub struct SplineCurve {
    knots: KnotVector,
    control: Vec<CrispPoint>,
}

impl SplineCurve {
    pub fn new(knots: KnotVector, control: Vec<CrispPoint>) -> Result<Self> {
        if control.len() != knots.control_count() {
            return Err(Error::InvalidKnots(format!(
                "{} knots at degree {} need {} control points, got {}",
                knots.knots().len(),
                knots.degree(),
                knots.control_count(),
                control.len()
            )));
        }
        Ok(Self { knots, control })
    }

    pub fn degree(&self) -> usize {
        self.knots.degree()
    }

    pub fn knots(&self) -> &KnotVector {
        &self.knots
    }

    pub fn control(&self) -> &[CrispPoint] {
        &self.control
    }

    /// A curve on the same knots with control points replaced through `f`.
    pub fn map_control(&self, f: impl FnMut(&CrispPoint) -> CrispPoint) -> Self {
        Self {
            knots: self.knots.clone(),
            control: self.control.iter().map(f).collect(),
        }
    }

    /// De Boor evaluation.
    pub fn eval(&self, t: f64) -> Result<CrispPoint> {
        let p = self.degree();
        let k = self.knots.span(t)?;
        let u = self.knots.knots();
        let mut d: Vec<CrispPoint> = self.control[k - p..=k].to_vec();
        for r in 1..=p {
            for j in (r..=p).rev() {
                let lo = u[j + k - p];
                let hi = u[j + 1 + k - r];
                let a = (t - lo) / (hi - lo);
                d[j] = d[j - 1].zip_with(d[j], |prev, cur| (1.0 - a) * prev + a * cur);
            }
        }
        Ok(d[p])
    }

    /// `sum_j control[j] * B_j(t)` straight from the basis functions; slower
    /// than [`SplineCurve::eval`], useful as a cross-check.
    pub fn eval_by_basis(&self, t: f64) -> Result<CrispPoint> {
        let row = self.knots.basis_row(t)?;
        Ok(row
            .iter()
            .zip(&self.control)
            .fold(CrispPoint::default(), |acc, (b, c)| {
                CrispPoint::new(acc.x + b * c.x, acc.y + b * c.y)
            }))
    }
}

/// A factored collocation system for fixed parameters and knots, reusable
/// across any number of data channels.
#[derive(Debug, Clone)]
pub struct Interpolator {
    params: Vec<f64>,
    knots: KnotVector,
    lu: DenseLu,
}

impl Interpolator {
    pub fn new(params: &[f64], knots: KnotVector) -> Result<Self> {
        if params.len() != knots.control_count() {
            return Err(Error::Arity {
                what: "interpolation parameters matching the knot vector",
                required: knots.control_count(),
                actual: params.len(),
            });
        }
        let rows = params
            .iter()
            .map(|&t| knots.basis_row(t))
            .collect::<Result<Vec<_>>>()?;
        let lu = DenseLu::factor(&rows)?;
        Ok(Self {
            params: params.to_vec(),
            knots,
            lu,
        })
    }

    pub fn params(&self) -> &[f64] {
        &self.params
    }

    pub fn knots(&self) -> &KnotVector {
        &self.knots
    }

    /// Control points of the curve passing through `data` at the parameters.
    pub fn fit(&self, data: &[CrispPoint]) -> Result<SplineCurve> {
        if data.len() != self.params.len() {
            return Err(Error::Arity {
                what: "data points matching the parameters",
                required: self.params.len(),
                actual: data.len(),
            });
        }
        let xs: Vec<f64> = data.iter().map(|p| p.x).collect();
        let ys: Vec<f64> = data.iter().map(|p| p.y).collect();
        let cx = self.lu.solve(&xs);
        let cy = self.lu.solve(&ys);
        let control = cx
            .into_iter()
            .zip(cy)
            .map(|(x, y)| CrispPoint::new(x, y))
            .collect();
        SplineCurve::new(self.knots.clone(), control)
    }
}

/// Solves for the control points of the curve on `knots` that passes through
/// `data[i]` at `params[i]`.
pub fn solve_interpolation(
    data: &[CrispPoint],
    params: &[f64],
    knots: &KnotVector,
) -> Result<SplineCurve> {
    Interpolator::new(params, knots.clone())?.fit(data)
}

/// `n` evenly spaced parameters over the whole knot range, both ends included
/// exactly.
pub fn sample_parameters(knots: &KnotVector, n: usize) -> Result<Vec<f64>> {
    if n < 2 {
        return Err(Error::Arity {
            what: "curve samples",
            required: 2,
            actual: n,
        });
    }
    let (a, b) = (knots.start(), knots.end());
    let last = (n - 1) as f64;
    let mut ts: Vec<f64> = (0..n).map(|i| a + (b - a) * (i as f64 / last)).collect();
    ts[0] = a;
    ts[n - 1] = b;
    Ok(ts)
}

pub fn sample_curve(c: &SplineCurve, n: usize) -> Result<Vec<CrispPoint>> {
    sample_parameters(c.knots(), n)?
        .into_iter()
        .map(|t| c.eval(t))
        .collect()
}
