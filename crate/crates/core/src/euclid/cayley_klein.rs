//! Distances in the elliptic and hyperbolic Cayley-Klein spaces.

use crate::algebra::Signature;
use crate::error::{PgaError, Result};
use crate::multivector::Multivector;

/// Diagonal bilinear form: `⟨x,x⟩⟨y,y⟩ − ⟨x,y⟩²` via Lagrange's identity,
/// which stays accurate when the two vectors are nearly parallel.
fn forms(g: &[f64], x: &[f64], y: &[f64]) -> (f64, f64, f64, f64) {
    let dot = |a: &[f64], b: &[f64]| a.iter().zip(b).zip(g).map(|((a, b), g)| g * a * b).sum();
    let mut wedge = 0.0;
    for i in 0..g.len() {
        for j in i + 1..g.len() {
            let m = x[i] * y[j] - x[j] * y[i];
            wedge += g[i] * g[j] * m * m;
        }
    }
    (dot(x, x), dot(y, y), dot(x, y), wedge)
}

/// Distance between two vectors of Cl(4,0,0) (elliptic) or Cl(3,1,0)
/// (hyperbolic, points inside the absolute).
pub fn noneuclidean_distance(x: &Multivector, y: &Multivector, sig: Signature) -> Result<f64> {
    if x.signature() != sig || y.signature() != sig {
        return Err(PgaError::SignatureMismatch(x.signature(), sig));
    }
    if x.homogeneous_grade() != Some(1) || y.homogeneous_grade() != Some(1) {
        return Err(PgaError::InvalidArgument(
            "distance is defined between vectors".into(),
        ));
    }
    let g: Vec<f64> = (0..sig.dim()).map(|i| sig.square(i)).collect();
    let (xx, yy, xy, w) = forms(&g, x.grade_coeffs(1), y.grade_coeffs(1));
    match (sig.p, sig.n, sig.z) {
        (4, 0, 0) => {
            if xx == 0.0 || yy == 0.0 {
                return Err(PgaError::UndefinedDistance("zero vector".into()));
            }
            // antipodal representatives name the same point
            Ok(w.max(0.0).sqrt().atan2(xy.abs()))
        }
        (3, 1, 0) => {
            if xx == 0.0 || yy == 0.0 {
                return Err(PgaError::UndefinedDistance(
                    "null vector lies on the absolute".into(),
                ));
            }
            if xx > 0.0 || yy > 0.0 {
                return Err(PgaError::UndefinedDistance(
                    "point outside the absolute".into(),
                ));
            }
            // cosh d = |xy|/√(xx yy), sinh d = √(−w)/√(xx yy)
            let s = (xx * yy).sqrt();
            Ok(((-w).max(0.0).sqrt() / s).asinh())
        }
        _ => Err(PgaError::UnsupportedSignature(format!(
            "no Cayley-Klein distance for {sig}"
        ))),
    }
}

/// `d_ε` for the form `ε x0 y0 + Σ xi yi` on homogeneous coordinates.
pub fn epsilon_distance(x: &[f64], y: &[f64], eps: f64) -> Result<f64> {
    if x.len() != y.len() || x.is_empty() {
        return Err(PgaError::InvalidArgument(
            "coordinate lengths differ".into(),
        ));
    }
    if eps <= 0.0 {
        return Err(PgaError::InvalidArgument("ε must be positive".into()));
    }
    let mut g = vec![1.0; x.len()];
    g[0] = eps;
    let (xx, yy, xy, w) = forms(&g, x, y);
    if xx == 0.0 || yy == 0.0 {
        return Err(PgaError::UndefinedDistance("zero vector".into()));
    }
    Ok(w.max(0.0).sqrt().atan2(xy))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;

    fn v(sig: Signature, c: &[f64]) -> Multivector {
        Multivector::from_grade_in(Algebra::get(sig), 1, c).unwrap()
    }

    #[test]
    fn elliptic() {
        let s = Signature::new(4, 0, 0).unwrap();
        let x = v(s, &[1.0, 2.0, 0.5, -1.0]);
        assert_eq!(noneuclidean_distance(&x, &x, s).unwrap(), 0.0);
        let d = noneuclidean_distance(&v(s, &[1.0, 0.0, 0.0, 0.0]), &v(s, &[0.0, 1.0, 0.0, 0.0]), s);
        assert!((d.unwrap() - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
    }

    #[test]
    fn hyperbolic_is_additive_along_a_geodesic() {
        let s = Signature::new(3, 1, 0).unwrap();
        // e0 squares to −1 in Cl(3,1,0); points are (cosh t, sinh t, 0, 0)
        let p = |t: f64| v(s, &[t.cosh(), t.sinh(), 0.0, 0.0]);
        let (a, b, c) = (p(-0.3), p(0.4), p(1.7));
        let ab = noneuclidean_distance(&a, &b, s).unwrap();
        let bc = noneuclidean_distance(&b, &c, s).unwrap();
        let ac = noneuclidean_distance(&a, &c, s).unwrap();
        assert!((ab - 0.7).abs() < 1e-14);
        assert!((ac - ab - bc).abs() < 1e-14);
    }

    #[test]
    fn hyperbolic_rejects_null_and_outside() {
        let s = Signature::new(3, 1, 0).unwrap();
        let null = v(s, &[1.0, 1.0, 0.0, 0.0]);
        let inside = v(s, &[1.0, 0.0, 0.0, 0.0]);
        let outside = v(s, &[0.0, 1.0, 0.0, 0.0]);
        assert!(matches!(
            noneuclidean_distance(&null, &inside, s),
            Err(PgaError::UndefinedDistance(_))
        ));
        assert!(noneuclidean_distance(&outside, &inside, s).is_err());
    }

    #[test]
    fn scaled_epsilon_distance_approaches_euclidean() {
        let d = epsilon_distance(&[1.0, 0.0], &[1.0, 3.0], 1e8).unwrap();
        assert!((1e4 * d - 3.0).abs() < 1e-6);
    }
}
