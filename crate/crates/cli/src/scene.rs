//! Scene files and the trajectory writer.

use crate::error::CliError;
use pga_core::dynamics::{euler_step, BodyPointForce, InertiaTensor, MassPoint, MotionState};
use pga_core::versor::{is_rotor, normalize_rotor};
use pga_core::{Algebra, Bivector3, Multivector, Signature};
use serde::{Deserialize, Serialize};
use std::io::Write;

/// Even blades of Cl(3,0,1) in the order used for `rotor0` and the `g*` columns.
pub const ROTOR_BLADES: [&str; 8] = ["1", "e01", "e02", "e03", "e12", "e31", "e23", "I"];

fn default_signature() -> String {
    "3,0,1".to_string()
}

fn is_default_signature(s: &String) -> bool {
    *s == default_signature()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Body {
    pub mass: f64,
    pub position: [f64; 3],
}

/// Exactly one of the two must be given.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Initial {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega_body: Option<[f64; 6]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pi_body: Option<[f64; 6]>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Force {
    /// Body-frame application point.
    pub point: [f64; 3],
    /// Space-frame force vector.
    pub vector: [f64; 3],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t_start: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t_end: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Integrator {
    pub dt: f64,
    pub steps: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SceneConfig {
    #[serde(default = "default_signature", skip_serializing_if = "is_default_signature")]
    pub signature: String,
    pub bodies: Vec<Body>,
    pub initial: Initial,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rotor0: Option<[f64; 8]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub forces: Vec<Force>,
    pub integrator: Integrator,
    /// Body-frame points whose space positions are written out.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub outputs: Vec<[f64; 3]>,
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn finite(xs: &[f64]) -> bool {
    xs.iter().all(|x| x.is_finite())
}

impl SceneConfig {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let scene: SceneConfig =
            serde_json::from_str(text).map_err(|e| usage(format!("malformed scene: {e}")))?;
        scene.validate()?;
        Ok(scene)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }

    pub fn validate(&self) -> Result<(), CliError> {
        let sig: Signature = self
            .signature
            .parse()
            .map_err(|e| usage(format!("scene signature: {e}")))?;
        if sig != Signature::PGA3 {
            return Err(usage(format!(
                "scene signature must be 3,0,1, got {sig}"
            )));
        }
        if self.bodies.is_empty() {
            return Err(usage("scene has no bodies"));
        }
        for (k, b) in self.bodies.iter().enumerate() {
            if !(b.mass > 0.0 && b.mass.is_finite()) || !finite(&b.position) {
                return Err(usage(format!(
                    "body {k}: mass must be positive and coordinates finite"
                )));
            }
        }
        match (&self.initial.omega_body, &self.initial.pi_body) {
            (Some(x), None) | (None, Some(x)) if finite(x) => {}
            (Some(_), Some(_)) | (None, None) => {
                return Err(usage(
                    "initial: give exactly one of omega_body and pi_body",
                ))
            }
            _ => return Err(usage("initial state must be finite")),
        }
        if let Some(g) = &self.rotor0 {
            if !finite(g) {
                return Err(usage("rotor0 must be finite"));
            }
        }
        for (k, f) in self.forces.iter().enumerate() {
            let times = [f.t_start, f.t_end];
            if !finite(&f.point) || !finite(&f.vector) || times.iter().flatten().any(|t| !t.is_finite())
            {
                return Err(usage(format!("force {k}: values must be finite")));
            }
        }
        if !(self.integrator.dt > 0.0 && self.integrator.dt.is_finite()) {
            return Err(usage("integrator.dt must be positive"));
        }
        if self.integrator.steps < 1 {
            return Err(usage("integrator.steps must be at least 1"));
        }
        for p in &self.outputs {
            if !finite(p) {
                return Err(usage("output points must be finite"));
            }
        }
        Ok(())
    }

    pub fn mass_points(&self) -> Vec<MassPoint> {
        self.bodies
            .iter()
            .map(|b| MassPoint::new(b.mass, b.position))
            .collect()
    }

    pub fn body_forces(&self) -> Vec<BodyPointForce> {
        self.forces
            .iter()
            .map(|f| BodyPointForce {
                point: f.point,
                vector: f.vector,
                t_start: f.t_start,
                t_end: f.t_end,
            })
            .collect()
    }

    pub fn initial_rotor(&self) -> Result<Multivector, CliError> {
        let alg = Algebra::pga3();
        let Some(c) = &self.rotor0 else {
            return Ok(Multivector::scalar_in(alg, 1.0));
        };
        let g = rotor_from_coeffs(c);
        if !is_rotor(&g, 1e-9) {
            return Err(usage("rotor0 is not a unit rotor"));
        }
        Ok(normalize_rotor(&g)?)
    }
}

/// Build `Σ c_k b_k` over [`ROTOR_BLADES`].
pub fn rotor_from_coeffs(c: &[f64; 8]) -> Multivector {
    let alg = Algebra::pga3();
    let mut g = Multivector::zero_in(alg);
    for (name, &x) in ROTOR_BLADES.iter().zip(c) {
        g.set(alg.index_of(name).expect("even blade"), x);
    }
    g
}

/// Coefficients over [`ROTOR_BLADES`].
pub fn rotor_coeffs(g: &Multivector) -> [f64; 8] {
    let alg = g.algebra();
    std::array::from_fn(|k| g.get(alg.index_of(ROTOR_BLADES[k]).expect("even blade")))
}

pub fn csv_header(outputs: usize) -> Vec<String> {
    let mut h = vec!["t".to_string()];
    h.extend((0..8).map(|k| format!("g{k}")));
    h.extend((0..6).map(|k| format!("pi{k}")));
    h.push("energy".to_string());
    for k in 0..outputs {
        for c in ["x", "y", "z"] {
            h.push(format!("p{k}_{c}"));
        }
    }
    h
}

fn num(x: f64) -> String {
    format!("{x:.16e}")
}

/// Integrate the scene and write every `stride`-th state, starting at `t = 0`.
/// Returns the number of rows written.
pub fn simulate<W: Write>(scene: &SceneConfig, stride: usize, out: W) -> Result<usize, CliError> {
    if stride == 0 {
        return Err(usage("stride must be at least 1"));
    }
    scene.validate()?;
    let inertia = InertiaTensor::assemble(&scene.mass_points());
    if !inertia.is_invertible() {
        return Err(CliError::Numeric(
            "singular inertia: the bodies span less than a solid".into(),
        ));
    }
    let g0 = scene.initial_rotor()?;
    let pi0 = match (&scene.initial.omega_body, &scene.initial.pi_body) {
        (Some(w), _) => inertia.apply(Bivector3::from_array(*w)),
        (_, Some(p)) => Bivector3::from_array(*p),
        _ => unreachable!("validated"),
    };
    let forces = scene.body_forces();
    let mut state = MotionState::new(g0, pi0);
    let mut w = csv::Writer::from_writer(out);
    w.write_record(csv_header(scene.outputs.len()))
        .map_err(|e| CliError::Io(e.to_string()))?;
    let mut rows = 0;
    let mut row = |s: &MotionState, w: &mut csv::Writer<W>| -> Result<(), CliError> {
        let mut rec = vec![num(s.t)];
        rec.extend(rotor_coeffs(&s.g).iter().map(|&x| num(x)));
        rec.extend(s.pi_body.to_array().iter().map(|&x| num(x)));
        rec.push(num(s.energy(&inertia)?));
        for p in &scene.outputs {
            rec.extend(s.space_point(*p).iter().map(|&x| num(x)));
        }
        w.write_record(&rec).map_err(|e| CliError::Io(e.to_string()))?;
        rows += 1;
        Ok(())
    };
    row(&state, &mut w)?;
    for k in 1..=scene.integrator.steps {
        state = euler_step(&state, &inertia, Some(&forces), scene.integrator.dt)?;
        if k % stride == 0 {
            row(&state, &mut w)?;
        }
    }
    w.flush().map_err(|e| CliError::Io(e.to_string()))?;
    Ok(rows)
}
