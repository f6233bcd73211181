//! Sandwich operators, rotors, and the exponential and logarithm of
//! bivectors in Cl(2,0,1) and Cl(3,0,1).

use crate::algebra::{Algebra, Signature};
use crate::dual_number::DualNumber;
use crate::error::{PgaError, Result};
use crate::euclid::Bivector3;
use crate::multivector::Multivector;

/// Below this bivector norm the logarithm falls back to first order.
pub const LOG_SERIES_CUTOFF: f64 = 1e-7;

fn dual_part(n: &Multivector) -> Result<DualNumber> {
    let dim = n.algebra().dim();
    let residue = n
        .coeffs()
        .iter()
        .enumerate()
        .filter(|&(i, _)| {
            let k = n.algebra().grade_of(i);
            k != 0 && k != dim
        })
        .fold(0.0f64, |m, (_, c)| m.max(c.abs()));
    if residue > 1e-9 * n.max_abs() {
        return Err(PgaError::InvalidArgument(
            "not a versor: g g̃ has grades other than 0 and n".into(),
        ));
    }
    Ok(DualNumber::from_multivector(n))
}

/// `g⁻¹ = g̃ (g g̃)⁻¹`, with `g g̃` a dual number.
pub fn versor_inverse(g: &Multivector) -> Result<Multivector> {
    let rev = g.reverse();
    let n = dual_part(&g.geometric_product(&rev)?)?;
    let inv = n.inverse()?;
    Ok(rev * inv.to_multivector(g))
}

/// `g X g⁻¹`.
pub fn sandwich(g: &Multivector, x: &Multivector) -> Result<Multivector> {
    let inv = versor_inverse(g)?;
    g.geometric_product(x)?.geometric_product(&inv)
}

/// Reflection in the plane (3D) or line (2D) `a`.
pub fn reflection(a: &Multivector, x: &Multivector) -> Result<Multivector> {
    if a.homogeneous_grade() != Some(1) {
        return Err(PgaError::InvalidArgument(
            "reflection needs a vector".into(),
        ));
    }
    sandwich(a, x)
}

/// `1 + ½(y E1 − x E2)`: translation of the plane by `(x, y)`.
pub fn translator2(x: f64, y: f64) -> Multivector {
    Multivector::from_coeffs_in(
        Algebra::pga2(),
        vec![1.0, 0.0, 0.0, 0.0, 0.0, 0.5 * y, -0.5 * x, 0.0],
    )
    .expect("eight coefficients")
}

/// `1 − ½(x e01 + y e02 + z e03)`: translation of space by `(x, y, z)`.
pub fn translator3(x: f64, y: f64, z: f64) -> Multivector {
    exp_bivector(&Bivector3::new(-0.5 * x, -0.5 * y, -0.5 * z, 0.0, 0.0, 0.0).to_multivector())
        .expect("ideal bivector")
}

/// `cos(θ/2) + sin(θ/2) P` for a normalized euclidean point `P` of the plane.
///
/// Turns clockwise by `θ` (counterclockwise for negative `θ`).
pub fn rotator2(center: &Multivector, theta: f64) -> Result<Multivector> {
    if center.signature() != Signature::PGA2 || center.homogeneous_grade() != Some(2) {
        return Err(PgaError::InvalidArgument(
            "rotation center must be a point of Cl(2,0,1)".into(),
        ));
    }
    let w = center.coeff("E0");
    if w == 0.0 {
        return Err(PgaError::InvalidArgument("rotation center is ideal".into()));
    }
    let p = center / w;
    let (s, c) = (0.5 * theta).sin_cos();
    Ok(Multivector::scalar_in(Algebra::pga2(), c) + p * s)
}

/// `cos(θ/2) + sin(θ/2) Φ` for a euclidean line `Φ` (normalized here).
///
/// Turns clockwise by `θ` when viewed from the tip of the direction `e0Φ`.
pub fn rotator3(axis: &Bivector3, theta: f64) -> Result<Multivector> {
    if !axis.is_simple() {
        return Err(PgaError::InvalidArgument("rotation axis must be simple".into()));
    }
    let phi = axis.normalized()?;
    Ok(exp_screw(&phi, DualNumber::new(0.5 * theta, 0.0)))
}

fn sinc(t: f64) -> f64 {
    if t.abs() < 1e-4 {
        1.0 - t * t / 6.0
    } else {
        t.sin() / t
    }
}

/// `(cos t − sinc t) / t²`.
fn cos_minus_sinc(t: f64) -> f64 {
    if t.abs() < 1e-3 {
        -1.0 / 3.0 + t * t / 30.0
    } else {
        (t.cos() - t.sin() / t) / (t * t)
    }
}

/// `e^B` for a bivector of Cl(2,0,1) or Cl(3,0,1).
pub fn exp_bivector(b: &Multivector) -> Result<Multivector> {
    let alg = b.algebra();
    if !b.grades().iter().all(|&k| k == 2) {
        return Err(PgaError::InvalidArgument(
            "exponential expects a bivector".into(),
        ));
    }
    match b.signature() {
        Signature::PGA2 => {
            let t = b.coeff("E0");
            Ok(Multivector::scalar_in(alg, t.cos()) + b * sinc(t))
        }
        Signature::PGA3 => {
            let x = Bivector3::from_multivector(b)?;
            let t = x.norm();
            let p = x.pluecker(x);
            let st = sinc(t);
            let bi = x.times_i();
            let mut out = Multivector::zero_in(alg);
            out.set(0, t.cos());
            out.set(15, 0.5 * p * st);
            let biv = x * st + bi * (-0.5 * p * cos_minus_sinc(t));
            Ok(out + biv.to_multivector())
        }
        s => Err(PgaError::UnsupportedSignature(format!(
            "exponential implemented for 2,0,1 and 3,0,1, got {s}"
        ))),
    }
}

/// `e^{(t + uI)Φ} = cos(t+uI) + sin(t+uI) Φ` for a normalized axis `Φ`.
pub fn exp_screw(axis: &Bivector3, z: DualNumber) -> Multivector {
    let c = z.cos();
    let s = z.sin();
    let mut out = Multivector::zero_in(Algebra::pga3());
    out.set(0, c.re);
    out.set(15, c.du);
    out + axis.scale_dual(s).to_multivector()
}

/// `g g̃` as a dual number.
pub fn rotor_norm(g: &Multivector) -> Result<DualNumber> {
    dual_part(&g.geometric_product(&g.reverse())?)
}

/// Whether `g` is even and `g g̃ = 1` within `tol`.
pub fn is_rotor(g: &Multivector, tol: f64) -> bool {
    if g.grades().iter().any(|k| k % 2 == 1) {
        return false;
    }
    match rotor_norm(g) {
        Ok(n) => n.approx_eq(DualNumber::ONE, tol),
        Err(_) => false,
    }
}

/// `√(g g̃)⁻¹ g`, restoring the rotor constraint.
pub fn normalize_rotor(g: &Multivector) -> Result<Multivector> {
    if g.grades().iter().any(|k| k % 2 == 1) {
        return Err(PgaError::InvalidArgument("rotor must be even".into()));
    }
    let n = rotor_norm(g)?;
    if n.re <= 0.0 {
        return Err(PgaError::NotNormalizable(
            "ideal element has no rotor normalization".into(),
        ));
    }
    let w = n.sqrt()?.inverse()?;
    Ok(w.scale(g))
}

/// `log g`, the bivector `B` with `e^B = g`.
///
/// The rotation half-angle lies in `[0, π)`; translators get the bivector
/// itself, and near-identity rotors fall back to first order.
pub fn log_rotor(g: &Multivector) -> Result<Multivector> {
    match g.signature() {
        Signature::PGA2 => log2(g),
        Signature::PGA3 => Ok(screw_log(g)?.bivector().to_multivector()),
        s => Err(PgaError::UnsupportedSignature(format!(
            "logarithm implemented for 2,0,1 and 3,0,1, got {s}"
        ))),
    }
}

fn log2(g: &Multivector) -> Result<Multivector> {
    let g = normalize_rotor(g)?;
    let s = g.scalar_part();
    let m = g.grade(2);
    let m0 = m.coeff("E0");
    if m0.abs() < LOG_SERIES_CUTOFF {
        return Ok(if s < 0.0 { -m } else { m });
    }
    let theta = m0.atan2(s);
    Ok(m * (theta / m0))
}

/// Logarithm of a 3D rotor as an axis and dual angle.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScrewLog {
    /// Normalized simple euclidean line.
    pub axis: Bivector3,
    /// `t + uI`: half rotation angle and half translation distance.
    pub angle: DualNumber,
}

impl ScrewLog {
    /// `(t + uI) Φ`.
    pub fn bivector(&self) -> Bivector3 {
        self.axis.scale_dual(self.angle)
    }

    pub fn exp(&self) -> Multivector {
        exp_screw(&self.axis, self.angle)
    }
}

/// Axis and dual angle of a 3D rotor.
pub fn screw_log(g: &Multivector) -> Result<ScrewLog> {
    if g.signature() != Signature::PGA3 {
        return Err(PgaError::SignatureMismatch(g.signature(), Signature::PGA3));
    }
    let g = normalize_rotor(g)?;
    let s = g.scalar_part();
    let sd = g.pseudoscalar_part();
    let x = Bivector3::from_multivector(&g)?;
    let c = x.norm();
    if c < LOG_SERIES_CUTOFF {
        let x = if s < 0.0 { -x } else { x };
        if c == 0.0 {
            // translator: the axis through the origin
            let rho = x.ideal_norm();
            if rho == 0.0 {
                return Ok(ScrewLog {
                    axis: Bivector3::new(0.0, 0.0, 0.0, 1.0, 0.0, 0.0),
                    angle: DualNumber::ZERO,
                });
            }
            let axis = Bivector3::new(0.0, 0.0, 0.0, -x.p03 / rho, -x.p02 / rho, -x.p01 / rho);
            return Ok(ScrewLog {
                axis,
                angle: DualNumber::new(0.0, rho),
            });
        }
        let d = -x.pluecker(x) / (2.0 * c);
        let axis = x / c + x.times_i() * (-d / (c * c));
        return Ok(ScrewLog {
            axis,
            angle: DualNumber::new(c, d),
        });
    }
    let t = c.atan2(s);
    let d = -x.pluecker(x) / (2.0 * c);
    let (sin_t, cos_t) = t.sin_cos();
    let u = if cos_t.abs() > sin_t.abs() {
        d / cos_t
    } else {
        -sd / sin_t
    };
    let axis = x / c + x.times_i() * (-d / (c * c));
    Ok(ScrewLog {
        axis,
        angle: DualNumber::new(t, u),
    })
}

/// `(e^{tΦ}, e^{uIΦ})`: commuting rotation and translation along the axis.
pub fn screw_decompose(g: &Multivector) -> Result<(Multivector, Multivector)> {
    let l = screw_log(g)?;
    let rot = exp_screw(&l.axis, DualNumber::new(l.angle.re, 0.0));
    let tr = exp_screw(&l.axis, DualNumber::new(0.0, l.angle.du));
    Ok((rot, tr))
}
