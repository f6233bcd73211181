//! Rigid-body dynamics.

mod inertia;
mod motion;
mod particle;
mod statics;

pub use inertia::{
    principal_frame, rotation_rotor, InertiaTensor, MassPoint, PrincipalFrame, SINGULAR_RATIO,
};
pub use motion::{
    euler_step, frame_convert, integrate, BodyPointForce, ForceModel, Frame, FramedBivector,
    MotionState,
};
pub use particle::{orbit_derivative, Particle};
pub use statics::{
    classify, energy_rate, force_homogeneous, force_homogeneous2, power, resultant, resultant2,
    work, ForceKind,
};
