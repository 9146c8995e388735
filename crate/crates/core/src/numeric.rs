//! Small floating-point helpers shared by the point and curve stages.

/// Linear interpolation `(1 - t) * a + t * b`.
///
/// Exact at both ends (`t = 0` gives `a`, `t = 1` gives `b`), returns `a` when
/// `a == b`, and is monotone in `t`. Same scheme as C++20 `std::lerp`.
pub fn lerp(a: f64, b: f64, t: f64) -> f64 {
    if (a <= 0.0 && b >= 0.0) || (a >= 0.0 && b <= 0.0) {
        return t * b + (1.0 - t) * a;
    }
    if t == 1.0 {
        return b;
    }
    let x = a + t * (b - a);
    if (t > 1.0) == (b > a) {
        x.max(b)
    } else {
        x.min(b)
    }
}

/// Arithmetic mean of three values, clamped to their range so that rounding
/// can never push it outside `[min, max]`.
pub fn mean3(a: f64, b: f64, c: f64) -> f64 {
    let lo = a.min(b).min(c);
    let hi = a.max(b).max(c);
    ((a + b + c) / 3.0).clamp(lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lerp_endpoints_are_exact() {
        for &(a, b) in &[(0.1, 0.7), (-3.3, 2.9), (1e-20, 1.0), (-12.0, -5.0)] {
            assert_eq!(lerp(a, b, 0.0), a);
            assert_eq!(lerp(a, b, 1.0), b);
        }
        assert_eq!(lerp(0.1, 0.1, 0.37), 0.1);
    }

    #[test]
    fn lerp_is_monotone_in_t() {
        let (a, b) = (0.3, 0.30000000000000004);
        let mut prev = lerp(a, b, 0.0);
        for k in 1..=1000 {
            let x = lerp(a, b, k as f64 / 1000.0);
            assert!(x >= prev);
            prev = x;
        }
    }

    #[test]
    fn mean3_stays_in_range() {
        assert_eq!(mean3(0.1, 0.1, 0.1), 0.1);
        assert_eq!(mean3(-8.5, -8.0, -7.0), -23.5 / 3.0);
    }
}
