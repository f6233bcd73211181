//! The inertia tensor as a symmetric bilinear form on bivectors.

use crate::algebra::{Algebra, Signature};
use crate::duality::join;
use crate::error::{PgaError, Result};
use crate::euclid::{point, strip_i, Bivector3};
use crate::multivector::Multivector;
use nalgebra::{Matrix3, Matrix6, SymmetricEigen, Vector6};

/// Ratio of smallest to largest eigenvalue below which `A` counts as singular.
pub const SINGULAR_RATIO: f64 = 1e-12;

/// A mass at a fixed position in the body frame.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MassPoint {
    pub mass: f64,
    pub position: [f64; 3],
}

impl MassPoint {
    pub fn new(mass: f64, position: [f64; 3]) -> Self {
        MassPoint { mass, position }
    }
}

fn reversal(v: &Vector6<f64>) -> Vector6<f64> {
    Vector6::new(v[5], v[4], v[3], v[2], v[1], v[0])
}

fn to_vec(b: Bivector3) -> Vector6<f64> {
    Vector6::from_row_slice(&b.to_array())
}

fn from_vec(v: &Vector6<f64>) -> Bivector3 {
    Bivector3::new(v[0], v[1], v[2], v[3], v[4], v[5])
}

/// Matrix `M` with `A(Ω, Ξ) = ξᵀ M ω` in the coordinates `(p01, …, p23)`.
#[derive(Clone, Debug, PartialEq)]
pub struct InertiaTensor {
    matrix: Matrix6<f64>,
    inverse: Option<Matrix6<f64>>,
}

fn basis(i: usize) -> Bivector3 {
    let mut a = [0.0; 6];
    a[i] = 1.0;
    Bivector3::from_array(a)
}

/// `R ∨ 2(Ω × R)`.
fn lever(r: &Multivector, omega: Bivector3) -> Multivector {
    let v = omega.to_multivector().commutator(r).expect("same algebra") * 2.0;
    join(r, &v).expect("same algebra")
}

impl InertiaTensor {
    /// `A = Σ Aᵢ` with `Aᵢ(Ω, Ξ) = −m/2 S(((R ∨ 2(Ω×R)) I) ∧ (R ∨ 2(Ξ×R)))`.
    pub fn assemble(points: &[MassPoint]) -> Self {
        let i = Multivector::basis_in(Algebra::pga3(), "I").expect("pseudoscalar");
        let mut m = Matrix6::zeros();
        for p in points {
            let r = point(p.position[0], p.position[1], p.position[2]);
            let levers: Vec<Multivector> = (0..6).map(|k| lever(&r, basis(k))).collect();
            let polars: Vec<Multivector> = levers.iter().map(|l| l * &i).collect();
            for a in 0..6 {
                for b in 0..6 {
                    m[(b, a)] += -0.5 * p.mass * strip_i(&(&polars[a] ^ &levers[b]));
                }
            }
        }
        Self::from_matrix(m)
    }

    /// From a symmetric matrix; the inverse is kept when `M` is positive definite.
    pub fn from_matrix(matrix: Matrix6<f64>) -> Self {
        let eig = SymmetricEigen::new(matrix);
        let max = eig.eigenvalues.max();
        let min = eig.eigenvalues.min();
        let inverse = if max > 0.0 && min / max > SINGULAR_RATIO {
            matrix.cholesky().map(|c| c.inverse())
        } else {
            None
        };
        InertiaTensor { matrix, inverse }
    }

    pub fn matrix(&self) -> &Matrix6<f64> {
        &self.matrix
    }

    pub fn is_invertible(&self) -> bool {
        self.inverse.is_some()
    }

    /// `A(Ω, Ξ)`.
    pub fn form(&self, omega: Bivector3, xi: Bivector3) -> f64 {
        (to_vec(xi).transpose() * self.matrix * to_vec(omega))[0]
    }

    /// `E = A(Ω, Ω)`.
    pub fn energy(&self, omega: Bivector3) -> f64 {
        self.form(omega, omega)
    }

    /// `Π = A(Ω)`, the bivector with `A(Ω, Ξ) = −S(Ξ ∧ Π)` for every `Ξ`.
    pub fn apply(&self, omega: Bivector3) -> Bivector3 {
        from_vec(&-reversal(&(self.matrix * to_vec(omega))))
    }

    /// `Ω = A⁻¹(Π)`.
    pub fn inverse_apply(&self, pi: Bivector3) -> Result<Bivector3> {
        let inv = self.inverse.as_ref().ok_or_else(|| {
            PgaError::Singular(
                "inertia tensor is singular (degenerate mass distribution)".into(),
            )
        })?;
        Ok(from_vec(&(inv * -reversal(&to_vec(pi)))))
    }

    /// `J(Ω I_A)` computed in the Clifford algebra whose inner product on the
    /// six bivector directions is `A`.
    pub fn clifford_apply(&self, omega: Bivector3) -> Result<Bivector3> {
        if self.inverse.is_none() {
            return Err(PgaError::Singular(
                "auxiliary algebra needs a positive definite inertia tensor".into(),
            ));
        }
        let eig = SymmetricEigen::new(self.matrix);
        let q = eig.eigenvectors;
        let d = eig.eigenvalues;
        let ca = Algebra::get(Signature::new(6, 0, 0)?);
        // bivector basis element b_j in the A-orthonormal frame
        let frame = |v: &Vector6<f64>| {
            let c: Vec<f64> = (0..6)
                .map(|k| (0..6).map(|i| v[i] * q[(i, k)]).sum::<f64>() * d[k].sqrt())
                .collect();
            Multivector::from_grade_in(ca, 1, &c).expect("six coordinates")
        };
        // I_A = b_1 ∧ … ∧ b_6
        let kappa = q.determinant() * d.iter().product::<f64>().sqrt();
        let unit = Multivector::unit_in(ca, ca.size() - 1);
        let x = frame(&to_vec(omega)).inner(&(unit * kappa))?;
        let mut coords = Vector6::zeros();
        for j in 0..6 {
            let bj = frame(&to_vec(basis(j)));
            coords[j] = (bj ^ &x).pseudoscalar_part() / kappa;
        }
        Ok(from_vec(&-reversal(&coords)))
    }
}

/// Centroid and principal axes of a mass distribution.
#[derive(Clone, Debug, PartialEq)]
pub struct PrincipalFrame {
    pub centroid: [f64; 3],
    /// Columns are principal directions, right-handed.
    pub axes: [[f64; 3]; 3],
    /// Principal moments in descending order.
    pub moments: [f64; 3],
    /// Rotor taking principal coordinates to the original ones.
    pub rotor: Multivector,
}

impl PrincipalFrame {
    /// Coordinates of a point relative to the principal frame.
    pub fn to_principal(&self, p: [f64; 3]) -> [f64; 3] {
        let d = [
            p[0] - self.centroid[0],
            p[1] - self.centroid[1],
            p[2] - self.centroid[2],
        ];
        let mut out = [0.0; 3];
        for (k, o) in out.iter_mut().enumerate() {
            *o = (0..3).map(|i| self.axes[i][k] * d[i]).sum();
        }
        out
    }
}

/// Translate to the mass centroid, then rotate to principal axes with
/// moments in descending order.
pub fn principal_frame(points: &[MassPoint]) -> Result<PrincipalFrame> {
    let total: f64 = points.iter().map(|p| p.mass).sum();
    if total <= 0.0 {
        return Err(PgaError::Degenerate("body has no mass".into()));
    }
    let mut c = [0.0; 3];
    for p in points {
        for (ck, xk) in c.iter_mut().zip(p.position) {
            *ck += p.mass * xk / total;
        }
    }
    let mut t = Matrix3::<f64>::zeros();
    for p in points {
        let r = [
            p.position[0] - c[0],
            p.position[1] - c[1],
            p.position[2] - c[2],
        ];
        let rr: f64 = r.iter().map(|x| x * x).sum();
        for i in 0..3 {
            for j in 0..3 {
                let delta = if i == j { rr } else { 0.0 };
                t[(i, j)] += p.mass * (delta - r[i] * r[j]);
            }
        }
    }
    let eig = SymmetricEigen::new(t);
    let mut order = [0usize, 1, 2];
    order.sort_by(|&a, &b| eig.eigenvalues[b].total_cmp(&eig.eigenvalues[a]));
    let mut rot = Matrix3::zeros();
    for (col, &k) in order.iter().enumerate() {
        rot.set_column(col, &eig.eigenvectors.column(k));
    }
    if rot.determinant() < 0.0 {
        rot.set_column(2, &-rot.column(2));
    }
    let moments = [
        eig.eigenvalues[order[0]],
        eig.eigenvalues[order[1]],
        eig.eigenvalues[order[2]],
    ];
    let mut axes = [[0.0; 3]; 3];
    for (i, row) in axes.iter_mut().enumerate() {
        for (j, a) in row.iter_mut().enumerate() {
            *a = rot[(i, j)];
        }
    }
    let rotor = crate::versor::translator3(c[0], c[1], c[2]) * rotation_rotor(&rot);
    Ok(PrincipalFrame {
        centroid: c,
        axes,
        moments,
        rotor,
    })
}

/// Rotor of a proper rotation matrix.
///
/// A right-handed quaternion `(w, x, y, z)` corresponds to the rotor
/// `w − x e23 − y e31 − z e12`.
pub fn rotation_rotor(rot: &Matrix3<f64>) -> Multivector {
    let q = nalgebra::UnitQuaternion::from_matrix(rot);
    let b = Bivector3::new(0.0, 0.0, 0.0, -q.k, -q.j, -q.i);
    Multivector::scalar_in(Algebra::pga3(), q.w) + b.to_multivector()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::euclid::dehomogenize;
    use crate::versor::sandwich;
    use proptest::prelude::*;

    fn sample_body() -> Vec<MassPoint> {
        vec![
            MassPoint::new(1.0, [1.0, 0.2, -0.3]),
            MassPoint::new(2.0, [-0.5, 1.0, 0.4]),
            MassPoint::new(0.5, [0.1, -0.7, 1.2]),
            MassPoint::new(1.5, [0.3, 0.3, 0.3]),
        ]
    }

    /// `Σ 2m (R ∨ (Ω × R))`, the summed particle momenta.
    fn momentum_oracle(points: &[MassPoint], omega: Bivector3) -> Bivector3 {
        points
            .iter()
            .map(|p| {
                let r = point(p.position[0], p.position[1], p.position[2]);
                let l = lever(&r, omega);
                Bivector3::from_multivector(&l).unwrap() * p.mass
            })
            .sum()
    }

    #[test]
    fn single_particle_at_origin() {
        let a = InertiaTensor::assemble(&[MassPoint::new(2.0, [0.0; 3])]);
        let m = a.matrix();
        // rotations about lines through the origin move nothing
        for i in 3..6 {
            for j in 0..6 {
                assert_eq!(m[(i, j)], 0.0);
            }
        }
        for i in 0..3 {
            for j in 0..3 {
                let expected = if i == j { 2.0 * 4.0 * 0.5 } else { 0.0 };
                assert_eq!(m[(i, j)], expected, "{i} {j}");
            }
        }
        assert!(!a.is_invertible());
    }

    #[test]
    fn translation_energy_is_half_m_v_squared() {
        // Ω = −½ v·(e01, e02, e03) moves every point with velocity v
        let body = sample_body();
        let a = InertiaTensor::assemble(&body);
        let v = [0.3, -1.2, 0.8];
        let omega = Bivector3::new(-0.5 * v[0], -0.5 * v[1], -0.5 * v[2], 0.0, 0.0, 0.0);
        let mass: f64 = body.iter().map(|p| p.mass).sum();
        let e = 0.5 * mass * v.iter().map(|x| x * x).sum::<f64>();
        assert!((a.energy(omega) - e).abs() < 1e-13);
    }

    #[test]
    fn empty_body() {
        let a = InertiaTensor::assemble(&[]);
        assert_eq!(*a.matrix(), Matrix6::zeros());
        assert!(matches!(a.inverse_apply(Bivector3::ZERO), Err(PgaError::Singular(_))));
    }

    #[test]
    fn collinear_body_is_singular() {
        let body = [
            MassPoint::new(1.0, [0.0, 0.0, 0.0]),
            MassPoint::new(1.0, [1.0, 0.0, 0.0]),
            MassPoint::new(1.0, [2.0, 0.0, 0.0]),
        ];
        assert!(!InertiaTensor::assemble(&body).is_invertible());
    }

    #[test]
    fn spherical_body_has_proportional_rotation_block() {
        let mut body = Vec::new();
        for s in [-1.0, 1.0] {
            body.push(MassPoint::new(1.0, [s, 0.0, 0.0]));
            body.push(MassPoint::new(1.0, [0.0, s, 0.0]));
            body.push(MassPoint::new(1.0, [0.0, 0.0, s]));
        }
        let a = InertiaTensor::assemble(&body);
        let omega = Bivector3::new(0.0, 0.0, 0.0, 0.3, -0.4, 1.1);
        let pi = a.apply(omega);
        // Π is a multiple of the polar line ΩI
        let k = pi.p01 / omega.times_i().p01;
        assert!(k > 0.0);
        assert!(pi.approx_eq(omega.times_i() * k, 1e-14));
    }

    #[test]
    fn principal_frame_recovers_a_rotated_box() {
        let local = [
            MassPoint::new(1.0, [2.0, 0.0, 0.0]),
            MassPoint::new(1.0, [-2.0, 0.0, 0.0]),
            MassPoint::new(1.0, [0.0, 1.0, 0.0]),
            MassPoint::new(1.0, [0.0, -1.0, 0.0]),
            MassPoint::new(1.0, [0.0, 0.0, 0.5]),
            MassPoint::new(1.0, [0.0, 0.0, -0.5]),
        ];
        let axis = Bivector3::new(0.0, 0.0, 0.0, 0.2, 0.5, -0.3);
        let g = crate::versor::translator3(1.0, -2.0, 0.5) * crate::versor::rotator3(&axis, 0.9).unwrap();
        let body: Vec<MassPoint> = local
            .iter()
            .map(|p| {
                let q = sandwich(&g, &point(p.position[0], p.position[1], p.position[2])).unwrap();
                let c = dehomogenize(&q).unwrap();
                MassPoint::new(p.mass, [c[0], c[1], c[2]])
            })
            .collect();
        let f = principal_frame(&body).unwrap();
        assert!((f.centroid[0] - 1.0).abs() < 1e-12 && (f.centroid[1] + 2.0).abs() < 1e-12);
        assert!(f.moments[0] >= f.moments[1] && f.moments[1] >= f.moments[2]);
        for p in &body {
            let local = f.to_principal(p.position);
            let back = sandwich(&f.rotor, &point(local[0], local[1], local[2])).unwrap();
            let c = dehomogenize(&back).unwrap();
            for (ck, xk) in c.iter().zip(p.position) {
                assert!((ck - xk).abs() < 1e-12);
            }
        }
        // the body has no products of inertia in the principal frame
        let moved: Vec<MassPoint> = body.iter().map(|p| MassPoint::new(p.mass, f.to_principal(p.position))).collect();
        let f2 = principal_frame(&moved).unwrap();
        assert!(f2.centroid.iter().all(|c| c.abs() < 1e-12));
    }

    fn arb_body() -> impl Strategy<Value = Vec<MassPoint>> {
        prop::collection::vec(
            (0.1f64..3.0, prop::array::uniform3(-2.0f64..2.0)).prop_map(|(m, p)| MassPoint::new(m, p)),
            4..7,
        )
    }

    fn arb_biv() -> impl Strategy<Value = Bivector3> {
        prop::array::uniform6(-2.0f64..2.0).prop_map(Bivector3::from_array)
    }

    proptest! {
        #[test]
        fn symmetric_and_positive(body in arb_body(), w in arb_biv(), x in arb_biv()) {
            let a = InertiaTensor::assemble(&body);
            prop_assert!((a.form(w, x) - a.form(x, w)).abs() < 1e-10 * (1.0 + a.form(w, w).abs() + a.form(x, x).abs()));
            prop_assert!(a.energy(w) >= -1e-12);
        }

        #[test]
        fn apply_matches_summed_particle_momenta(body in arb_body(), w in arb_biv()) {
            let a = InertiaTensor::assemble(&body);
            let pi = a.apply(w);
            prop_assert!(pi.approx_eq(momentum_oracle(&body, w), 1e-11));
        }

        #[test]
        fn energy_forms_agree(body in arb_body(), w in arb_biv()) {
            let a = InertiaTensor::assemble(&body);
            let pi = a.apply(w);
            let wedge = -strip_i(&(w.to_multivector() ^ pi.to_multivector()));
            prop_assert!((a.energy(w) - wedge).abs() < 1e-10 * (1.0 + wedge.abs()));
        }

        #[test]
        fn inverse_undoes_apply(body in arb_body(), w in arb_biv()) {
            let a = InertiaTensor::assemble(&body);
            prop_assume!(a.is_invertible());
            let back = a.inverse_apply(a.apply(w)).unwrap();
            prop_assert!(back.approx_eq(w, 1e-8));
        }

        #[test]
        fn clifford_path_matches_matrix(body in arb_body(), w in arb_biv()) {
            let a = InertiaTensor::assemble(&body);
            prop_assume!(a.is_invertible());
            prop_assert!(a.clifford_apply(w).unwrap().approx_eq(a.apply(w), 1e-10));
        }
    }
}
