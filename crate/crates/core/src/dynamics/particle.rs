//! Newtonian particles as weighted lines.

use crate::duality::join;
use crate::error::{PgaError, Result};
use crate::euclid::{ideal_point, norm_point, point, strip_i, Bivector3};
use crate::multivector::Multivector;

/// A point mass at `position` moving with `velocity`.
#[derive(Clone, Debug, PartialEq)]
pub struct Particle {
    pub mass: f64,
    /// Normalized point (weight 1).
    pub position: Multivector,
    /// Ideal point (weight 0).
    pub velocity: Multivector,
}

impl Particle {
    pub fn new(mass: f64, position: [f64; 3], velocity: [f64; 3]) -> Self {
        Particle {
            mass,
            position: point(position[0], position[1], position[2]),
            velocity: ideal_point(velocity[0], velocity[1], velocity[2]),
        }
    }

    /// From a finite point (any weight) and an ideal point.
    pub fn from_points(mass: f64, position: &Multivector, velocity: &Multivector) -> Result<Self> {
        let w = norm_point(position);
        if w == 0.0 {
            return Err(PgaError::InvalidArgument("particle position is ideal".into()));
        }
        if norm_point(velocity) != 0.0 {
            return Err(PgaError::InvalidArgument(
                "particle velocity must be an ideal point".into(),
            ));
        }
        Ok(Particle {
            mass,
            position: position / w,
            velocity: velocity.clone(),
        })
    }

    /// `Λ = R ∨ Ṙ`.
    pub fn spear(&self) -> Bivector3 {
        let l = join(&self.position, &self.velocity).expect("same algebra");
        Bivector3::from_multivector(&l).expect("grade 2")
    }

    /// `Π = mΛ`.
    pub fn momentum(&self) -> Bivector3 {
        self.spear() * self.mass
    }

    /// `Γ = ΛI`, always ideal.
    pub fn velocity_state(&self) -> Bivector3 {
        self.spear().times_i()
    }

    /// `m/2 ‖Ṙ‖∞²`.
    pub fn kinetic_energy(&self) -> f64 {
        let v = &self.velocity.grade_coeffs(3)[1..];
        0.5 * self.mass * v.iter().map(|c| c * c).sum::<f64>()
    }

    /// `−m/2 Λ·Λ`.
    pub fn kinetic_energy_spear(&self) -> f64 {
        let l = self.spear();
        -0.5 * self.mass * l.dot(l)
    }

    /// `−½ S(Γ ∧ Π)`.
    pub fn kinetic_energy_states(&self) -> f64 {
        let w = self.velocity_state().to_multivector() ^ self.momentum().to_multivector();
        -0.5 * strip_i(&w)
    }
}

/// `Ṗ = 2(Ω × P)`: the velocity of a point carried by the motion `Ω`.
pub fn orbit_derivative(omega: &Bivector3, p: &Multivector) -> Result<Multivector> {
    Ok(omega.to_multivector().commutator(p)? * 2.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use proptest::prelude::*;

    #[test]
    fn spear_examples() {
        let p = Particle::new(1.0, [0.0; 3], [1.0, 0.0, 0.0]);
        assert_eq!(p.spear(), Bivector3::new(0.0, 0.0, 0.0, 0.0, 0.0, 1.0));
        assert_eq!(p.spear().direction_vector(), [1.0, 0.0, 0.0]);
        let still = Particle::new(2.0, [1.0, 2.0, 3.0], [0.0; 3]);
        assert_eq!(still.spear(), Bivector3::ZERO);
        assert_eq!(still.momentum(), Bivector3::ZERO);
        assert_eq!(still.kinetic_energy(), 0.0);
    }

    #[test]
    fn unit_speed_energy() {
        let p = Particle::new(1.0, [0.3, -1.0, 2.0], [0.0, 1.0, 0.0]);
        assert_eq!(p.kinetic_energy(), 0.5);
    }

    #[test]
    fn from_points_normalizes() {
        let p = Particle::from_points(1.0, &(point(1.0, 2.0, 3.0) * -2.0), &ideal_point(1.0, 0.0, 0.0)).unwrap();
        assert_eq!(p.position, point(1.0, 2.0, 3.0));
        assert!(Particle::from_points(1.0, &ideal_point(1.0, 0.0, 0.0), &ideal_point(1.0, 0.0, 0.0)).is_err());
        assert!(Particle::from_points(1.0, &point(0.0, 0.0, 0.0), &point(1.0, 0.0, 0.0)).is_err());
    }

    #[test]
    fn linear_and_angular_momentum() {
        // Πo carries mv, Π∞ carries r × mv
        let p = Particle::new(2.0, [0.0, 1.0, 0.0], [3.0, 0.0, 0.0]);
        let pi = p.momentum();
        assert_eq!(pi.direction_vector(), [6.0, 0.0, 0.0]);
        assert_eq!([pi.p01, pi.p02, pi.p03], [0.0, 0.0, -6.0]);
    }

    #[test]
    fn orbit_examples() {
        let z = Bivector3::new(0.0, 0.0, 0.0, 1.0, 0.0, 0.0);
        assert!(orbit_derivative(&z, &point(0.0, 0.0, 0.0)).unwrap().is_zero());
        let v = orbit_derivative(&z, &point(1.0, 0.0, 0.0)).unwrap();
        assert_eq!(v.homogeneous_grade(), Some(3));
        let c = v.grade_coeffs(3);
        assert_eq!(c[0], 0.0);
        assert_eq!(c[1], 0.0);
        assert_eq!(c[2].abs(), 2.0);
        assert_eq!(c[3], 0.0);
        let t = Bivector3::new(0.5, -1.0, 2.0, 0.0, 0.0, 0.0);
        let a = orbit_derivative(&t, &point(1.0, 2.0, 3.0)).unwrap();
        let b = orbit_derivative(&t, &point(-4.0, 0.5, 1.0)).unwrap();
        assert_eq!(a, b);
        assert_eq!(norm_point(&a), 0.0);
    }

    fn arb3() -> impl Strategy<Value = [f64; 3]> {
        prop::array::uniform3(-4.0f64..4.0)
    }

    proptest! {
        #[test]
        fn three_energy_forms_agree(m in 0.1f64..5.0, r in arb3(), v in arb3()) {
            let p = Particle::new(m, r, v);
            let e = p.kinetic_energy();
            prop_assert!((p.kinetic_energy_spear() - e).abs() <= 1e-12 * (1.0 + e));
            prop_assert!((p.kinetic_energy_states() - e).abs() <= 1e-12 * (1.0 + e));
            prop_assert!(p.velocity_state().is_ideal());
        }

        #[test]
        fn orbit_is_polar_of_null_plane(c in prop::array::uniform6(-3.0f64..3.0), r in arb3()) {
            let omega = Bivector3::from_array(c);
            let p = point(r[0], r[1], r[2]);
            let lhs = orbit_derivative(&omega, &p).unwrap();
            let i = Multivector::basis_in(Algebra::pga3(), "I").unwrap();
            let rhs = join(&omega.to_multivector(), &p).unwrap() * i * 2.0;
            prop_assert!(lhs.approx_eq_tol(&rhs, 1e-12, 1e-12));
        }

        #[test]
        fn orbit_matches_rotor_flow(c in prop::array::uniform6(-1.0f64..1.0), r in arb3()) {
            // d/dt e^{tΩ} P e^{−tΩ} at t = 0
            let omega = Bivector3::from_array(c);
            let p = point(r[0], r[1], r[2]);
            let h = 1e-5;
            let at = |t: f64| {
                let g = crate::versor::exp_bivector(&(omega * t).to_multivector()).unwrap();
                crate::versor::sandwich(&g, &p).unwrap()
            };
            let fd = (at(h) - at(-h)) / (2.0 * h);
            let exact = orbit_derivative(&omega, &p).unwrap();
            prop_assert!(fd.approx_eq_tol(&exact, 1e-8, 1e-8));
        }
    }
}
