//! Euclidean geometry in Cl(2,0,1) and Cl(3,0,1).

mod bivector;
mod cayley_klein;

pub use bivector::{Bivector3, Pitch};
pub use cayley_klein::{epsilon_distance, noneuclidean_distance};

use crate::algebra::Algebra;
use crate::dual_number::DualNumber;
use crate::duality::join;
use crate::error::{PgaError, Result};
use crate::multivector::Multivector;
use crate::tolerance::INCIDENCE_TOL;

/// `E0 + xE1 + yE2 + zE3`.
pub fn point(x: f64, y: f64, z: f64) -> Multivector {
    Multivector::from_grade_in(Algebra::pga3(), 3, &[1.0, x, y, z]).expect("four coordinates")
}

/// `E0 + xE1 + yE2`.
pub fn point2(x: f64, y: f64) -> Multivector {
    Multivector::from_grade_in(Algebra::pga2(), 2, &[1.0, x, y]).expect("three coordinates")
}

/// Ideal point (free vector) `xE1 + yE2 + zE3`.
pub fn ideal_point(x: f64, y: f64, z: f64) -> Multivector {
    Multivector::from_grade_in(Algebra::pga3(), 3, &[0.0, x, y, z]).expect("four coordinates")
}

/// Ideal point `xE1 + yE2` in the plane.
pub fn ideal_point2(x: f64, y: f64) -> Multivector {
    Multivector::from_grade_in(Algebra::pga2(), 2, &[0.0, x, y]).expect("three coordinates")
}

/// The plane `ax + by + cz + d = 0` as `d e0 + a e1 + b e2 + c e3`.
pub fn plane(a: f64, b: f64, c: f64, d: f64) -> Multivector {
    Multivector::from_grade_in(Algebra::pga3(), 1, &[d, a, b, c]).expect("four coordinates")
}

/// The line `ax + by + c = 0` as `c e0 + a e1 + b e2`.
pub fn line2(a: f64, b: f64, c: f64) -> Multivector {
    Multivector::from_grade_in(Algebra::pga2(), 1, &[c, a, b]).expect("three coordinates")
}

fn point_grade(x: &Multivector) -> usize {
    x.algebra().dim() - 1
}

fn check_pga(x: &Multivector) -> Result<()> {
    if x.signature().is_euclidean_pga() {
        Ok(())
    } else {
        Err(PgaError::UnsupportedSignature(format!(
            "euclidean operation on {}",
            x.signature()
        )))
    }
}

/// Homogeneous point coordinates `(w, x, y[, z])`, weight first, no division.
pub fn raw_point_coords(p: &Multivector) -> Vec<f64> {
    p.grade_coeffs(point_grade(p)).to_vec()
}

/// Cartesian coordinates of a finite point, dividing by the signed weight.
pub fn dehomogenize(p: &Multivector) -> Result<Vec<f64>> {
    check_pga(p)?;
    let c = raw_point_coords(p);
    if c[0] == 0.0 {
        return Err(PgaError::NotNormalizable(
            "ideal point has no cartesian coordinates".into(),
        ));
    }
    Ok(c[1..].iter().map(|v| v / c[0]).collect())
}

/// `√(a·a)` for a vector (line or plane).
pub fn norm_vector(a: &Multivector) -> Result<f64> {
    check_pga(a)?;
    let n = norm(a);
    if n == 0.0 {
        return Err(PgaError::NotNormalizable(
            "ideal vector has zero euclidean norm".into(),
        ));
    }
    Ok(n)
}

/// The weight (E0 coefficient) of a point; may be negative.
pub fn norm_point(p: &Multivector) -> f64 {
    p.grade_coeffs(point_grade(p))[0]
}

/// Coefficient of `I`: the map `αI ↦ α`.
pub fn strip_i(x: &Multivector) -> f64 {
    x.pseudoscalar_part()
}

/// `√|⟨x x̃⟩₀|`, the euclidean norm of any homogeneous element.
pub fn norm(x: &Multivector) -> f64 {
    let s = x.geometric_product(&x.reverse()).expect("same algebra");
    s.scalar_part().abs().sqrt()
}

/// Scale to unit norm. Points are divided by their signed weight.
pub fn normalize(x: &Multivector) -> Result<Multivector> {
    check_pga(x)?;
    if x.homogeneous_grade() == Some(point_grade(x)) {
        let w = norm_point(x);
        if w == 0.0 {
            return Err(PgaError::NotNormalizable("ideal point".into()));
        }
        return Ok(x / w);
    }
    let n = norm(x);
    if n == 0.0 {
        return Err(PgaError::NotNormalizable(format!(
            "{x} has zero euclidean norm"
        )));
    }
    Ok(x / n)
}

/// `‖V ∨ P‖` for an ideal point `V` and a finite point `P`.
pub fn ideal_norm(v: &Multivector, p: &Multivector) -> Result<f64> {
    let p = normalize(p)?;
    Ok(norm(&join(v, &p)?))
}

/// `‖P ∨ Q‖` after normalizing both points.
pub fn distance(p: &Multivector, q: &Multivector) -> Result<f64> {
    let p = normalize(p)?;
    let q = normalize(q)?;
    Ok(norm(&join(&p, &q)?))
}

/// Angle between two euclidean elements of equal grade, in `[0, π]`.
pub fn angle(a: &Multivector, b: &Multivector) -> Result<f64> {
    let na = norm_vector(a)?;
    let nb = norm_vector(b)?;
    let c = a.geometric_product(&b.reverse())?.scalar_part() / (na * nb);
    Ok(c.clamp(-1.0, 1.0).acos())
}

/// Null plane `P ∨ Ξ` of a point; the joining plane when `Ξ` is simple.
pub fn null_plane(p: &Multivector, xi: &Bivector3) -> Result<Multivector> {
    join(p, &xi.to_multivector())
}

/// Null point `a ∧ Ξ` of a plane; the intersection point when `Ξ` is simple.
pub fn null_point(a: &Multivector, xi: &Bivector3) -> Result<Multivector> {
    a.outer(&xi.to_multivector())
}

/// Nearest point of the line `Ξ` to `P`: `(P·Ξ)Ξ⁻¹`.
pub fn project_point_on_line(p: &Multivector, xi: &Bivector3) -> Result<Multivector> {
    let x = xi.to_multivector();
    let k = point_grade(p);
    let foot = (p.inner(&x)? * &x).grade(k);
    normalize(&foot)
}

/// Orthogonal projection `(Ξ·a)a⁻¹` of a line onto a plane.
pub fn project_line_on_plane(xi: &Bivector3, a: &Multivector) -> Result<Bivector3> {
    let n = norm_vector(a)?;
    let x = xi.to_multivector();
    let proj = (x.inner(a)? * a).grade(2) / (n * n);
    Bivector3::from_multivector(&proj)
}

/// `P·x`: the plane through `P` perpendicular to a line, or the line through
/// `P` perpendicular to a plane (3D) or line (2D).
pub fn perpendicular(p: &Multivector, x: &Multivector) -> Result<Multivector> {
    p.inner(x)
}

/// `axis(Ξ × Φ)`, the line meeting both at right angles.
pub fn common_normal(xi: &Bivector3, phi: &Bivector3) -> Result<Bivector3> {
    let c = xi.commutator(*phi);
    if c.norm() <= INCIDENCE_TOL * xi.norm() * phi.norm() {
        return Err(PgaError::Degenerate(
            "parallel lines have no unique common normal".into(),
        ));
    }
    c.axis()
}

/// `⟨ΞΦ⟩₀ + ⟨ΞΦ⟩₄` for normalized lines, with the sign fixed so the real part
/// is non-negative.
pub fn dual_angle(xi: &Bivector3, phi: &Bivector3) -> Result<DualNumber> {
    let a = xi.normalized()?.to_multivector();
    let b = phi.normalized()?.to_multivector();
    let z = DualNumber::from_multivector(&(a * b));
    if z.re < 0.0 || (z.re == 0.0 && z.du > 0.0) {
        Ok(-z)
    } else {
        Ok(z)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn b3(name: &str) -> Multivector {
        Multivector::basis_in(Algebra::pga3(), name).unwrap()
    }

    fn biv(m: &Multivector) -> Bivector3 {
        Bivector3::from_multivector(m).unwrap()
    }

    #[test]
    fn norms() {
        assert_eq!(norm_vector(&b3("e1")).unwrap(), 1.0);
        let p = Multivector::from_grade_in(Algebra::pga2(), 2, &[3.0, 6.0, 0.0]).unwrap();
        assert_eq!(norm_point(&p), 3.0);
        assert!(matches!(
            normalize(&b3("e0")),
            Err(PgaError::NotNormalizable(_))
        ));
        assert!(normalize(&plane(0.0, 3.0, 4.0, 1.0)).unwrap().approx_eq(&plane(0.0, 0.6, 0.8, 0.2)));
        assert_eq!(dehomogenize(&(point(1.0, 2.0, 3.0) * -2.0)).unwrap(), vec![1.0, 2.0, 3.0]);
        assert_eq!(raw_point_coords(&(point2(1.0, 2.0) * -1.0)), vec![-1.0, -1.0, -2.0]);
    }

    #[test]
    fn ideal_norms() {
        let v = ideal_point2(3.0, 4.0);
        assert!((ideal_norm(&v, &point2(0.0, 0.0)).unwrap() - 5.0).abs() < 1e-15);
        assert!((ideal_norm(&v, &point2(7.0, 0.0)).unwrap() - 5.0).abs() < 1e-15);
        assert_eq!(ideal_norm(&ideal_point2(1.0, 0.0), &point2(0.0, 0.0)).unwrap(), 1.0);
        let v3 = ideal_point(3.0, 4.0, 0.0);
        assert!((ideal_norm(&v3, &point(-1.0, 2.0, 5.0)).unwrap() - 5.0).abs() < 1e-14);
    }

    #[test]
    fn distances_and_angles() {
        assert_eq!(distance(&point(0.0, 0.0, 0.0), &point(3.0, 4.0, 0.0)).unwrap(), 5.0);
        assert_eq!(distance(&point2(0.0, 0.0), &point2(3.0, 4.0)).unwrap(), 5.0);
        let p = point(1.0, -2.0, 0.5);
        assert_eq!(distance(&p, &p).unwrap(), 0.0);
        let a = angle(&b3("e1"), &b3("e2")).unwrap();
        assert!((a - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
        let a = angle(&line2(1.0, 0.0, 0.0), &line2(1.0, 1.0, 3.0)).unwrap();
        assert!((a - std::f64::consts::FRAC_PI_4).abs() < 1e-15);
    }

    #[test]
    fn null_system() {
        let z_axis = biv(&b3("e12"));
        assert!(null_plane(&point(0.0, 0.0, 4.0), &z_axis).unwrap().is_zero());
        let o = null_point(&b3("e3"), &z_axis).unwrap();
        let w = norm_point(&o);
        assert!(w != 0.0);
        assert_eq!(o / w, point(0.0, 0.0, 0.0));
        let xi = Bivector3::new(0.3, -1.0, 2.0, 0.5, 0.7, -0.2);
        let p = point(1.0, 2.0, -0.5);
        let n = null_plane(&p, &xi).unwrap();
        assert!(join(&n, &p).unwrap().max_abs() < 1e-14);
        let back = null_point(&n, &xi).unwrap();
        let back = normalize(&back).unwrap();
        assert!(back.approx_eq_tol(&p, 1e-12, 1e-12));
    }

    #[test]
    fn projections() {
        let x_axis = biv(&join(&point(0.0, 0.0, 0.0), &point(1.0, 0.0, 0.0)).unwrap());
        let f = project_point_on_line(&point(1.0, 1.0, 0.0), &x_axis).unwrap();
        assert!(f.approx_eq(&point(1.0, 0.0, 0.0)));
        let on = point(-2.5, 0.0, 0.0);
        assert!(project_point_on_line(&on, &x_axis).unwrap().approx_eq(&on));
        // x-axis lies in the plane z = 0
        let z0 = plane(0.0, 0.0, 1.0, 0.0);
        let pr = project_line_on_plane(&(x_axis * 2.0), &z0).unwrap();
        assert!(pr.approx_eq(x_axis * 2.0, 1e-15));
        // plane through P perpendicular to the x-axis is x = 1
        let perp = perpendicular(&point(1.0, 5.0, -3.0), &x_axis.to_multivector()).unwrap();
        let perp = normalize(&perp).unwrap();
        let expected = plane(1.0, 0.0, 0.0, -1.0);
        assert!(perp.approx_eq(&expected) || perp.approx_eq(&-expected));
    }

    fn brute_nearest(p: [f64; 3], a: [f64; 3], d: [f64; 3]) -> [f64; 3] {
        let dd: f64 = d.iter().map(|v| v * v).sum();
        let t = (0..3).map(|i| (p[i] - a[i]) * d[i]).sum::<f64>() / dd;
        [a[0] + t * d[0], a[1] + t * d[1], a[2] + t * d[2]]
    }

    #[test]
    fn common_normal_examples() {
        let x_axis = biv(&join(&point(0.0, 0.0, 0.0), &point(1.0, 0.0, 0.0)).unwrap());
        let y_up = biv(&join(&point(0.0, 0.0, 1.0), &point(0.0, 1.0, 1.0)).unwrap());
        let n = common_normal(&x_axis, &y_up).unwrap();
        let z_axis = biv(&join(&point(0.0, 0.0, 0.0), &point(0.0, 0.0, 1.0)).unwrap());
        let z_axis = z_axis.normalized().unwrap();
        assert!(n.approx_eq(z_axis, 1e-15) || n.approx_eq(-z_axis, 1e-15));
        assert!(matches!(
            common_normal(&x_axis, &(x_axis * 3.0)),
            Err(PgaError::Degenerate(_))
        ));
        // intersecting lines: the normal passes through the intersection
        let a = biv(&join(&point(1.0, 1.0, 1.0), &point(2.0, 1.0, 1.0)).unwrap());
        let b = biv(&join(&point(1.0, 1.0, 1.0), &point(1.0, 3.0, 2.0)).unwrap());
        let n = common_normal(&a, &b).unwrap();
        assert!(join(&n.to_multivector(), &point(1.0, 1.0, 1.0)).unwrap().max_abs() < 1e-14);
    }

    #[test]
    fn dual_angle_signs() {
        let x_axis = biv(&join(&point(0.0, 0.0, 0.0), &point(1.0, 0.0, 0.0)).unwrap());
        let y_up = biv(&join(&point(0.0, 0.0, 1.0), &point(0.0, 1.0, 1.0)).unwrap());
        // perpendicular, distance 1
        let z = dual_angle(&x_axis, &y_up).unwrap();
        assert_eq!(z.re, 0.0);
        assert!((z.du.abs() - 1.0).abs() < 1e-15);
        // intersecting at right angles
        let y_axis = biv(&join(&point(0.0, 0.0, 0.0), &point(0.0, 1.0, 0.0)).unwrap());
        assert!(dual_angle(&x_axis, &y_axis).unwrap().approx_eq(DualNumber::ZERO, 1e-15));
        // same line, either orientation
        assert!(dual_angle(&x_axis, &-x_axis).unwrap().approx_eq(DualNumber::ONE, 1e-15));
    }

    fn arb3() -> impl Strategy<Value = [f64; 3]> {
        prop::array::uniform3(-5.0f64..5.0)
    }

    proptest! {
        #[test]
        fn point_projection_matches_brute_force(p in arb3(), a in arb3(), d in arb3()) {
            let dn = d.iter().map(|v| v * v).sum::<f64>().sqrt();
            prop_assume!(dn > 0.1);
            let line = biv(&join(&point(a[0], a[1], a[2]), &point(a[0] + d[0], a[1] + d[1], a[2] + d[2])).unwrap());
            let f = dehomogenize(&project_point_on_line(&point(p[0], p[1], p[2]), &line).unwrap()).unwrap();
            let o = brute_nearest(p, a, d);
            for i in 0..3 {
                prop_assert!((f[i] - o[i]).abs() < 1e-9, "{f:?} vs {o:?}");
            }
        }

        #[test]
        fn line_distance_matches_coordinate_oracle(
            a in arb3(), d in arb3(), b in arb3(), e in arb3()
        ) {
            let dn = d.iter().map(|v| v * v).sum::<f64>().sqrt();
            let en = e.iter().map(|v| v * v).sum::<f64>().sqrt();
            prop_assume!(dn > 0.1 && en > 0.1);
            let l = |p: [f64; 3], v: [f64; 3]| biv(&join(&point(p[0], p[1], p[2]), &point(p[0] + v[0], p[1] + v[1], p[2] + v[2])).unwrap()).normalized().unwrap();
            let xi = l(a, d);
            let phi = l(b, e);
            let cross = [d[1] * e[2] - d[2] * e[1], d[2] * e[0] - d[0] * e[2], d[0] * e[1] - d[1] * e[0]];
            let cn = cross.iter().map(|v| v * v).sum::<f64>().sqrt();
            prop_assume!(cn > 0.05 * dn * en);
            let sin_a = cn / (dn * en);
            let dist = ((0..3).map(|i| (b[i] - a[i]) * cross[i]).sum::<f64>() / cn).abs();
            let w = strip_i(&(xi.to_multivector() ^ phi.to_multivector()));
            prop_assert!((w.abs() - sin_a * dist).abs() < 1e-10 * (1.0 + dist));
            let z = dual_angle(&xi, &phi).unwrap();
            prop_assert!((z.du.abs() - sin_a * dist).abs() < 1e-10 * (1.0 + dist));
            prop_assert!((z.re - (1.0 - sin_a * sin_a).sqrt()).abs() < 1e-10);
        }

        #[test]
        fn pitch_is_invariant_under_rigid_motion(
            c in prop::array::uniform6(-3.0f64..3.0),
            m in prop::array::uniform8(-2.0f64..2.0),
        ) {
            let xi = Bivector3::from_array(c);
            prop_assume!(xi.norm() > 0.2);
            let g = crate::versor::normalize_rotor(&Multivector::from_coeffs_in(
                Algebra::pga3(),
                even_coeffs(&m),
            ).unwrap());
            prop_assume!(g.is_ok());
            let g = g.unwrap();
            let moved = biv(&crate::versor::sandwich(&g, &xi.to_multivector()).unwrap());
            match (xi.pitch(), moved.pitch()) {
                (Pitch::Finite(p), Pitch::Finite(q)) => prop_assert!((p - q).abs() < 1e-9 * (1.0 + p.abs())),
                _ => prop_assert!(false),
            }
        }
    }

    fn even_coeffs(m: &[f64; 8]) -> Vec<f64> {
        let alg = Algebra::pga3();
        let mut c = vec![0.0; 16];
        c[0] = m[0];
        for (n, i) in alg.grade_range(2).enumerate() {
            c[i] = m[1 + n];
        }
        c[15] = m[7];
        c
    }
}
