use crate::{Error, Result};

/// A clamped knot vector together with its degree.
///
/// The first and last `degree + 1` knots coincide, interior knots have
/// multiplicity at most `degree`, and the vector is non-decreasing. The
/// number of control points it supports is `len - degree - 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct KnotVector {
    degree: usize,
    knots: Vec<f64>,
}

impl KnotVector {
    pub fn new(degree: usize, knots: Vec<f64>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidKnots(msg));
        if degree < 1 {
            return bad("degree must be at least 1".into());
        }
        if knots.len() < 2 * (degree + 1) {
            return bad(format!(
                "degree {degree} needs at least {} knots, got {}",
                2 * (degree + 1),
                knots.len()
            ));
        }
        if knots.iter().any(|k| !k.is_finite()) {
            return bad("knots must be finite".into());
        }
        if let Some(i) = knots.windows(2).position(|w| w[0] > w[1]) {
            return bad(format!("knots decrease at index {}", i + 1));
        }
        let m = knots.len() - 1;
        let (start, end) = (knots[0], knots[m]);
        if start >= end {
            return bad("knot range is empty".into());
        }
        if knots[degree] != start || knots[m - degree] != end {
            return bad(format!("end knots must be repeated {} times", degree + 1));
        }
        if knots[degree + 1] == start || knots[m - degree - 1] == end {
            return bad(format!(
                "end knots must be repeated exactly {} times",
                degree + 1
            ));
        }
        let interior = &knots[degree + 1..m - degree];
        let mut run = 1;
        for w in interior.windows(2) {
            run = if w[0] == w[1] { run + 1 } else { 1 };
            if run > degree {
                return bad(format!(
                    "interior knot {} repeated more than {degree} times",
                    w[0]
                ));
            }
        }
        Ok(Self { degree, knots })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn knots(&self) -> &[f64] {
        &self.knots
    }

    pub fn control_count(&self) -> usize {
        self.knots.len() - self.degree - 1
    }

    pub fn start(&self) -> f64 {
        self.knots[0]
    }

    pub fn end(&self) -> f64 {
        self.knots[self.knots.len() - 1]
    }

    pub fn check_parameter(&self, t: f64) -> Result<()> {
        if t >= self.start() && t <= self.end() {
            Ok(())
        } else {
            Err(Error::ParameterOutOfRange {
                t,
                start: self.start(),
                end: self.end(),
            })
        }
    }

    /// Index `k` of the knot span with `knots[k] <= t < knots[k + 1]`. At the
    /// right end the last non-empty span is returned.
    pub fn span(&self, t: f64) -> Result<usize> {
        self.check_parameter(t)?;
        let k = self.knots.partition_point(|&u| u <= t) - 1;
        Ok(k.min(self.control_count() - 1))
    }

    /// `B_{i,degree}(t)` by the Cox–de Boor recursion.
    pub fn basis(&self, i: usize, t: f64) -> Result<f64> {
        self.check_parameter(t)?;
        if i >= self.control_count() {
            return Err(Error::Arity {
                what: "basis index bound",
                required: i + 1,
                actual: self.control_count(),
            });
        }
        Ok(cox_de_boor(&self.knots, i, self.degree, t))
    }

    /// All `control_count` basis values at `t`.
    pub fn basis_row(&self, t: f64) -> Result<Vec<f64>> {
        self.check_parameter(t)?;
        Ok((0..self.control_count())
            .map(|i| cox_de_boor(&self.knots, i, self.degree, t))
            .collect())
    }
}

/// The Cox–de Boor recursion on a raw knot slice, with `0/0 = 0`.
///
/// The last non-empty span is treated as closed, so at `t = knots.last()`
/// the final basis function is 1.
pub fn cox_de_boor(knots: &[f64], i: usize, degree: usize, t: f64) -> f64 {
    if degree == 0 {
        let (lo, hi) = (knots[i], knots[i + 1]);
        let last = knots[knots.len() - 1];
        let inside = lo <= t && t < hi;
        let closing = t == last && lo < hi && hi == last;
        return if inside || closing { 1.0 } else { 0.0 };
    }
    let mut value = 0.0;
    let left_den = knots[i + degree] - knots[i];
    if left_den > 0.0 {
        let b = cox_de_boor(knots, i, degree - 1, t);
        if b != 0.0 {
            value += (t - knots[i]) / left_den * b;
        }
    }
    let right_den = knots[i + degree + 1] - knots[i + 1];
    if right_den > 0.0 {
        let b = cox_de_boor(knots, i + 1, degree - 1, t);
        if b != 0.0 {
            value += (knots[i + degree + 1] - t) / right_den * b;
        }
    }
    value
}

/// Clamped knot vector from interpolation parameters by averaging: interior
/// knot `j` is the mean of `params[j..j + degree]`.
pub fn average_knots(params: &[f64], degree: usize) -> Result<KnotVector> {
    if degree < 1 {
        return Err(Error::InvalidKnots("degree must be at least 1".into()));
    }
    let count = params.len();
    if count < degree + 1 {
        return Err(Error::Arity {
            what: "parameters for this degree",
            required: degree + 1,
            actual: count,
        });
    }
    let (start, end) = (params[0], params[count - 1]);
    let mut knots = Vec::with_capacity(count + degree + 1);
    knots.extend(std::iter::repeat_n(start, degree + 1));
    for j in 1..count - degree {
        let window = &params[j..j + degree];
        knots.push(window.iter().sum::<f64>() / degree as f64);
    }
    knots.extend(std::iter::repeat_n(end, degree + 1));
    KnotVector::new(degree, knots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn bezier3() -> KnotVector {
        KnotVector::new(3, vec![0., 0., 0., 0., 1., 1., 1., 1.]).unwrap()
    }

    #[test]
    fn four_params_cubic_has_no_interior_knots() {
        let kv = average_knots(&[0.0, 0.2, 0.7, 1.0], 3).unwrap();
        assert_eq!(kv.knots(), &[0., 0., 0., 0., 1., 1., 1., 1.]);
    }

    #[test]
    fn quadratic_averaging() {
        let kv = average_knots(&[0.0, 0.25, 0.75, 1.0], 2).unwrap();
        assert_eq!(kv.knots(), &[0., 0., 0., 0.5, 1., 1., 1.]);
    }

    #[test]
    fn cubic_averaging_on_uniform_params() {
        let kv = average_knots(&[0.0, 0.25, 0.5, 0.75, 1.0], 3).unwrap();
        assert_eq!(kv.knots(), &[0., 0., 0., 0., 0.5, 1., 1., 1., 1.]);
        assert_eq!(kv.control_count(), 5);
    }

    #[test]
    fn too_few_params() {
        assert!(matches!(
            average_knots(&[0.0, 0.5, 1.0], 3),
            Err(Error::Arity { .. })
        ));
    }

    #[test]
    fn rejects_malformed_vectors() {
        assert!(KnotVector::new(2, vec![0., 0., 0., 1., 1.]).is_err());
        assert!(KnotVector::new(1, vec![0., 0., 0.7, 0.5, 1., 1.]).is_err());
        assert!(KnotVector::new(2, vec![0., 0., 0.5, 1., 1., 1.]).is_err());
        assert!(KnotVector::new(2, vec![0., 0., 0., 0., 1., 1., 1.]).is_err());
        assert!(KnotVector::new(2, vec![0., 0., 0., 0.5, 0.5, 0.5, 1., 1., 1.]).is_err());
        assert!(KnotVector::new(1, vec![1., 1., 1., 1.]).is_err());
    }

    #[test]
    fn clamped_endpoints() {
        let kv = bezier3();
        assert_eq!(kv.basis_row(0.0).unwrap(), vec![1.0, 0.0, 0.0, 0.0]);
        assert_eq!(kv.basis_row(1.0).unwrap(), vec![0.0, 0.0, 0.0, 1.0]);
    }

    #[test]
    fn single_span_cubic_is_bernstein() {
        let row = bezier3().basis_row(0.5).unwrap();
        for (b, want) in row.iter().zip([0.125, 0.375, 0.375, 0.125]) {
            assert_abs_diff_eq!(*b, want, epsilon = 1e-15);
        }
    }

    #[test]
    fn out_of_range_parameter() {
        let kv = bezier3();
        assert!(matches!(
            kv.basis(0, 1.0 + 1e-12),
            Err(Error::ParameterOutOfRange { .. })
        ));
        assert!(kv.basis(0, -0.1).is_err());
        assert!(kv.basis(0, f64::NAN).is_err());
        assert!(kv.basis(4, 0.5).is_err());
    }

    #[test]
    fn span_lookup() {
        let kv = KnotVector::new(2, vec![0., 0., 0., 0.3, 0.6, 1., 1., 1.]).unwrap();
        assert_eq!(kv.span(0.0).unwrap(), 2);
        assert_eq!(kv.span(0.3).unwrap(), 3);
        assert_eq!(kv.span(0.99).unwrap(), 4);
        assert_eq!(kv.span(1.0).unwrap(), 4);
    }
}
