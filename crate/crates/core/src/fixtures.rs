//! The four-point reference dataset used throughout the docs and tests.

use crate::point::{Dataset, FuzzyDataPoint};

/// Four fuzzy data points, each listed as `ll, l, rl, crisp, lr, r, rr`.
pub fn table51() -> [FuzzyDataPoint; 4] {
    [
        FuzzyDataPoint::from_pairs([
            (-12.0, 0.0),
            (-11.0, 0.0),
            (-9.0, 0.0),
            (-5.0, 0.0),
            (3.0, 0.0),
            (6.0, 0.0),
            (9.0, 0.0),
        ]),
        FuzzyDataPoint::from_pairs([
            (15.0, 28.0),
            (15.0, 26.0),
            (15.0, 25.0),
            (15.0, 20.0),
            (15.0, 16.0),
            (15.0, 14.0),
            (15.0, 12.0),
        ]),
        FuzzyDataPoint::from_pairs([
            (17.0, -13.0),
            (15.0, -15.0),
            (13.0, -17.0),
            (10.0, -20.0),
            (8.0, -22.0),
            (5.0, -25.0),
            (3.0, -27.0),
        ]),
        FuzzyDataPoint::from_pairs([
            (30.0, 10.0),
            (32.0, 10.0),
            (34.0, 10.0),
            (40.0, 10.0),
            (46.0, 10.0),
            (48.0, 10.0),
            (49.0, 10.0),
        ]),
    ]
}

pub fn table51_dataset() -> Dataset {
    Dataset::new("table51", table51().to_vec())
}
