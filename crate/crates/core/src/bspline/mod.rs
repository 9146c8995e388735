//! Crisp B-spline machinery: parametrization, clamped knot vectors,
//! Cox–de Boor basis evaluation, global interpolation and de Boor evaluation.

mod curve;
mod knots;
mod linalg;
mod param;

pub use curve::{sample_curve, sample_parameters, solve_interpolation, Interpolator, SplineCurve};
pub use knots::{average_knots, cox_de_boor, KnotVector};
pub use linalg::DenseLu;
pub use param::{parametrize, ParamChoice};

/// Smallest pivot magnitude accepted by the collocation solve.
pub const PIVOT_TOLERANCE: f64 = 1e-12;
