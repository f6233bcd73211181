//! Euler equations of a free or forced rigid body, integrated with RK4.

use super::inertia::InertiaTensor;
use super::statics::force_homogeneous;
use crate::algebra::Algebra;
use crate::error::{PgaError, Result};
use crate::euclid::{dehomogenize, point, Bivector3};
use crate::multivector::Multivector;
use crate::versor::{normalize_rotor, sandwich};

/// Which frame a state is expressed in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Frame {
    Body,
    Space,
}

/// A bivector tagged with its frame.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FramedBivector {
    pub frame: Frame,
    pub value: Bivector3,
}

impl FramedBivector {
    pub fn body(value: Bivector3) -> Self {
        FramedBivector {
            frame: Frame::Body,
            value,
        }
    }

    pub fn space(value: Bivector3) -> Self {
        FramedBivector {
            frame: Frame::Space,
            value,
        }
    }

    /// Re-express in `target` using the body-to-space rotor `g`.
    pub fn to_frame(self, target: Frame, g: &Multivector) -> Result<Self> {
        if self.frame == target {
            return Ok(self);
        }
        let value = match target {
            Frame::Space => frame_convert(&self.value.to_multivector(), g, Frame::Space)?,
            Frame::Body => frame_convert(&self.value.to_multivector(), g, Frame::Body)?,
        };
        Ok(FramedBivector {
            frame: target,
            value: Bivector3::from_multivector(&value)?,
        })
    }

    /// Sum; both terms must share a frame.
    pub fn try_add(self, other: Self) -> Result<Self> {
        if self.frame != other.frame {
            return Err(PgaError::InvalidArgument(format!(
                "cannot combine {:?} and {:?} frame states",
                self.frame, other.frame
            )));
        }
        Ok(FramedBivector {
            frame: self.frame,
            value: self.value + other.value,
        })
    }

    /// `−S(self ∧ other)`; both must share a frame.
    pub fn pairing(self, other: Self) -> Result<f64> {
        if self.frame != other.frame {
            return Err(PgaError::InvalidArgument(format!(
                "cannot pair {:?} and {:?} frame states",
                self.frame, other.frame
            )));
        }
        Ok(-self.value.pluecker(other.value))
    }
}

/// `g X g̃` into space, `g̃ X g` into the body.
pub fn frame_convert(x: &Multivector, g: &Multivector, target: Frame) -> Result<Multivector> {
    let gr = g.reverse();
    match target {
        Frame::Space => g.geometric_product(x)?.geometric_product(&gr),
        Frame::Body => gr.geometric_product(x)?.geometric_product(g),
    }
}

/// External load on the body, expressed in the body frame.
pub trait ForceModel {
    fn body_force(&self, t: f64, g: &Multivector) -> Bivector3;
}

impl<F: Fn(f64, &Multivector) -> Bivector3> ForceModel for F {
    fn body_force(&self, t: f64, g: &Multivector) -> Bivector3 {
        self(t, g)
    }
}

/// A force with a fixed space-frame vector acting at a material point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BodyPointForce {
    /// Application point in body coordinates.
    pub point: [f64; 3],
    /// Force vector in space coordinates.
    pub vector: [f64; 3],
    pub t_start: Option<f64>,
    pub t_end: Option<f64>,
}

impl BodyPointForce {
    pub fn new(point: [f64; 3], vector: [f64; 3]) -> Self {
        BodyPointForce {
            point,
            vector,
            t_start: None,
            t_end: None,
        }
    }

    /// Active on `[t_start, t_end)`.
    pub fn is_active(&self, t: f64) -> bool {
        self.t_start.is_none_or(|s| t >= s) && self.t_end.is_none_or(|e| t < e)
    }

    /// `H(F)` in space.
    pub fn space_force(&self, t: f64, g: &Multivector) -> Bivector3 {
        if !self.is_active(t) {
            return Bivector3::ZERO;
        }
        let p = point(self.point[0], self.point[1], self.point[2]);
        let ps = sandwich(g, &p).expect("rotor");
        let c = dehomogenize(&ps).expect("finite point");
        force_homogeneous([c[0], c[1], c[2]], self.vector)
    }
}

impl ForceModel for BodyPointForce {
    fn body_force(&self, t: f64, g: &Multivector) -> Bivector3 {
        let s = self.space_force(t, g);
        if s == Bivector3::ZERO {
            return s;
        }
        let b = frame_convert(&s.to_multivector(), g, Frame::Body).expect("same algebra");
        Bivector3::from_multivector(&b).expect("grade 2")
    }
}

impl ForceModel for [BodyPointForce] {
    fn body_force(&self, t: f64, g: &Multivector) -> Bivector3 {
        self.iter().map(|f| f.body_force(t, g)).sum()
    }
}

impl ForceModel for Vec<BodyPointForce> {
    fn body_force(&self, t: f64, g: &Multivector) -> Bivector3 {
        self.as_slice().body_force(t, g)
    }
}

/// Pose `g` (body to space), body momentum `Πc`, and time.
#[derive(Clone, Debug, PartialEq)]
pub struct MotionState {
    pub g: Multivector,
    pub pi_body: Bivector3,
    pub t: f64,
}

impl MotionState {
    pub fn new(g: Multivector, pi_body: Bivector3) -> Self {
        MotionState { g, pi_body, t: 0.0 }
    }

    /// Start at the identity pose from a body-frame velocity.
    pub fn from_body_velocity(inertia: &InertiaTensor, omega_body: Bivector3) -> Self {
        MotionState::new(
            Multivector::scalar_in(Algebra::pga3(), 1.0),
            inertia.apply(omega_body),
        )
    }

    /// `Ωc = A⁻¹(Πc)`.
    pub fn body_velocity(&self, inertia: &InertiaTensor) -> Result<Bivector3> {
        inertia.inverse_apply(self.pi_body)
    }

    /// `Ωs = g Ωc g̃`.
    pub fn space_velocity(&self, inertia: &InertiaTensor) -> Result<Bivector3> {
        let w = self.body_velocity(inertia)?;
        Bivector3::from_multivector(&frame_convert(&w.to_multivector(), &self.g, Frame::Space)?)
    }

    /// `Πs = g Πc g̃`.
    pub fn space_momentum(&self) -> Bivector3 {
        let m = frame_convert(&self.pi_body.to_multivector(), &self.g, Frame::Space)
            .expect("same algebra");
        Bivector3::from_multivector(&m).expect("grade 2")
    }

    /// `E = A(Ωc, Ωc)`.
    pub fn energy(&self, inertia: &InertiaTensor) -> Result<f64> {
        Ok(inertia.energy(self.body_velocity(inertia)?))
    }

    /// `E = −S(Ωc ∧ Πc)`.
    pub fn energy_wedge(&self, inertia: &InertiaTensor) -> Result<f64> {
        let w = self.body_velocity(inertia)?;
        Ok(-w.pluecker(self.pi_body))
    }

    /// Space position of a body-frame point.
    pub fn space_point(&self, p: [f64; 3]) -> [f64; 3] {
        let q = sandwich(&self.g, &point(p[0], p[1], p[2])).expect("rotor");
        let c = dehomogenize(&q).expect("finite point");
        [c[0], c[1], c[2]]
    }
}

struct Deriv {
    g: Multivector,
    pi: Bivector3,
}

fn derivative(
    inertia: &InertiaTensor,
    force: Option<&dyn ForceModel>,
    t: f64,
    g: &Multivector,
    pi: Bivector3,
) -> Result<Deriv> {
    let omega = inertia.inverse_apply(pi)?;
    let dg = g * omega.to_multivector();
    let load = force.map_or(Bivector3::ZERO, |f| f.body_force(t, g));
    let dpi = load + pi.commutator(omega) * 2.0;
    Ok(Deriv { g: dg, pi: dpi })
}

/// One RK4 step of `ġ = gΩc`, `Π̇c = Δc + 2 Πc × Ωc`, then renormalize `g`.
pub fn euler_step(
    state: &MotionState,
    inertia: &InertiaTensor,
    force: Option<&dyn ForceModel>,
    dt: f64,
) -> Result<MotionState> {
    if dt.is_nan() || dt <= 0.0 {
        return Err(PgaError::InvalidArgument(format!(
            "time step must be positive, got {dt}"
        )));
    }
    let (t, g, pi) = (state.t, &state.g, state.pi_body);
    let k1 = derivative(inertia, force, t, g, pi)?;
    let k2 = derivative(
        inertia,
        force,
        t + 0.5 * dt,
        &(g + &k1.g * (0.5 * dt)),
        pi + k1.pi * (0.5 * dt),
    )?;
    let k3 = derivative(
        inertia,
        force,
        t + 0.5 * dt,
        &(g + &k2.g * (0.5 * dt)),
        pi + k2.pi * (0.5 * dt),
    )?;
    let k4 = derivative(inertia, force, t + dt, &(g + &k3.g * dt), pi + k3.pi * dt)?;
    let w = dt / 6.0;
    let g_next = g + (k1.g + k2.g * 2.0 + k3.g * 2.0 + k4.g) * w;
    let pi_next = pi + (k1.pi + k2.pi * 2.0 + k3.pi * 2.0 + k4.pi) * w;
    Ok(MotionState {
        g: normalize_rotor(&g_next)?,
        pi_body: pi_next,
        t: t + dt,
    })
}

/// `steps` RK4 steps; returns every state including the initial one.
pub fn integrate(
    state: &MotionState,
    inertia: &InertiaTensor,
    force: Option<&dyn ForceModel>,
    dt: f64,
    steps: usize,
) -> Result<Vec<MotionState>> {
    let mut out = Vec::with_capacity(steps + 1);
    out.push(state.clone());
    for _ in 0..steps {
        let next = euler_step(out.last().expect("nonempty"), inertia, force, dt)?;
        out.push(next);
    }
    Ok(out)
}
