//! Perfectly normal type-2 fuzzy data points and their interpolating
//! B-spline curves.
//!
//! A fuzzy data point carries a crisp position plus a left and a right
//! footprint of three positions each. The point pipeline shrinks the
//! footprints by an alpha-cut, reduces each footprint to its centroid, and
//! averages the result into one crisp point. The curve side interpolates
//! every lateral channel with a clamped B-spline on shared parameters and
//! runs the same pipeline on control points.
//!
//! ```
//! use fuzzy_bspline::{fixtures, run_point_pipeline};
//!
//! let row = fixtures::table51()[0];
//! let record = run_point_pipeline(&row, 0.5).unwrap();
//! assert!((record.defuzzified.x - -4.1111).abs() < 5e-5);
//! ```

pub mod bspline;
pub mod bundle;
pub mod cli;
mod error;
pub mod fixtures;
pub mod numeric;
pub mod ops;
pub mod point;
pub mod render;

pub use bspline::{
    average_knots, parametrize, sample_curve, solve_interpolation, KnotVector, ParamChoice,
    SplineCurve,
};
pub use bundle::{Channel, FuzzyCurveBundle, Stage};
pub use error::{Error, Result};
pub use ops::{
    alpha_cut, defuzzify, run_point_pipeline, type_reduce, Alpha, AlphaCutPoint, ReducedPoint,
    StageRecord,
};
pub use point::{
    validate_dataset, validate_point, CrispPoint, Dataset, FuzzyDataPoint, Lateral,
    ValidationReport,
};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/fuzzy-points.md")]
    mod fuzzy_points {}
    #[doc = include_str!("../../../book/src/pipeline.md")]
    mod pipeline {}
    #[doc = include_str!("../../../book/src/bspline.md")]
    mod bspline {}
    #[doc = include_str!("../../../book/src/curves.md")]
    mod curves {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
