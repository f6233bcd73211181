//! Comparison tolerances shared by the whole crate.

/// Relative tolerance for comparing products of floats.
pub const REL_TOL: f64 = 1e-12;
/// Absolute floor under [`REL_TOL`].
pub const ABS_TOL: f64 = 1e-15;
/// Relative tolerance for simplicity and incidence tests.
pub const INCIDENCE_TOL: f64 = 1e-9;

/// `|a - b| <= max(abs, rel * max(|a|, |b|))`.
pub fn approx_eq(a: f64, b: f64, rel: f64, abs: f64) -> bool {
    (a - b).abs() <= abs.max(rel * a.abs().max(b.abs()))
}

/// [`approx_eq`] with the default tolerances.
pub fn close(a: f64, b: f64) -> bool {
    approx_eq(a, b, REL_TOL, ABS_TOL)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floors_and_scales() {
        assert!(close(0.0, 1e-16));
        assert!(!close(0.0, 1e-14));
        assert!(close(1e6, 1e6 + 1e-7));
        assert!(!close(1.0, 1.0 + 1e-10));
    }
}
