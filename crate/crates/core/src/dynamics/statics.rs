//! Forces as bivectors, and the power a force delivers to a motion.

use crate::duality::join;
use crate::euclid::{ideal_point, ideal_point2, point, point2, Bivector3};
use crate::multivector::Multivector;
use crate::tolerance::INCIDENCE_TOL;

/// `H(F) = P ∨ i(V)`: coordinates `(m_x, m_y, m_z | v_z, v_y, v_x)` with
/// `M = P × V` the moment about the origin.
pub fn force_homogeneous(p: [f64; 3], v: [f64; 3]) -> Bivector3 {
    let h = join(&point(p[0], p[1], p[2]), &ideal_point(v[0], v[1], v[2])).expect("same algebra");
    Bivector3::from_multivector(&h).expect("grade 2")
}

/// Planar `H(F) = P ∨ i(V) = m e0 − v_y e1 + v_x e2`, `m = x v_y − y v_x`.
pub fn force_homogeneous2(p: [f64; 2], v: [f64; 2]) -> Multivector {
    join(&point2(p[0], p[1]), &ideal_point2(v[0], v[1])).expect("same algebra")
}

/// Componentwise sum of homogeneous forces.
pub fn resultant(forces: &[Bivector3]) -> Bivector3 {
    forces.iter().copied().sum()
}

/// Sum of planar homogeneous forces.
pub fn resultant2(forces: &[Multivector]) -> Multivector {
    let mut out = Multivector::zero_in(crate::algebra::Algebra::pga2());
    for f in forces {
        out += f;
    }
    out
}

/// What a force system reduces to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ForceKind {
    Null,
    Couple,
    SingleForce,
    /// A force plus a couple about its line (a wrench).
    Wrench,
}

/// Classify a resultant relative to `scale` (the size of the contributing forces).
pub fn classify(h: Bivector3, scale: f64) -> ForceKind {
    let tol = INCIDENCE_TOL * scale.max(h.max_abs());
    if h.max_abs() <= tol {
        ForceKind::Null
    } else if h.norm() <= tol {
        ForceKind::Couple
    } else if h.pluecker(h).abs() <= tol * scale.max(h.max_abs()) {
        ForceKind::SingleForce
    } else {
        ForceKind::Wrench
    }
}

/// `−S(Ω ∧ Δ)`.
pub fn power(omega: Bivector3, delta: Bivector3) -> f64 {
    -omega.pluecker(delta)
}

/// `Ė` for `E = A(Ω, Ω)`: twice [`power`], since points move with `2(Ω × P)`.
pub fn energy_rate(omega: Bivector3, delta: Bivector3) -> f64 {
    2.0 * power(omega, delta)
}

/// Trapezoidal integral of [`power`] over samples `(t, Ω, Δ)`.
pub fn work(samples: &[(f64, Bivector3, Bivector3)]) -> f64 {
    samples
        .windows(2)
        .map(|w| {
            let (t0, o0, d0) = w[0];
            let (t1, o1, d1) = w[1];
            0.5 * (t1 - t0) * (power(o0, d0) + power(o1, d1))
        })
        .sum()
}
