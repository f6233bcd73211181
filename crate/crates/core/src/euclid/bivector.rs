//! Lines and screws of Cl(3,0,1) in plane-based Plücker coordinates.

use crate::algebra::Algebra;
use crate::dual_number::DualNumber;
use crate::error::{PgaError, Result};
use crate::multivector::Multivector;
use crate::tolerance::INCIDENCE_TOL;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

/// A 3D bivector `p01 e01 + p02 e02 + p03 e03 + p12 e12 + p31 e31 + p23 e23`.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Bivector3 {
    pub p01: f64,
    pub p02: f64,
    pub p03: f64,
    pub p12: f64,
    pub p31: f64,
    pub p23: f64,
}

/// Pitch of a screw: finite, or infinite for a pure translation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Pitch {
    Finite(f64),
    Infinite,
}

impl Bivector3 {
    pub const ZERO: Bivector3 = Bivector3::new(0.0, 0.0, 0.0, 0.0, 0.0, 0.0);

    pub const fn new(p01: f64, p02: f64, p03: f64, p12: f64, p31: f64, p23: f64) -> Self {
        Bivector3 {
            p01,
            p02,
            p03,
            p12,
            p31,
            p23,
        }
    }

    /// Coordinates in canonical order `(p01, p02, p03, p12, p31, p23)`.
    pub fn from_array(a: [f64; 6]) -> Self {
        Bivector3::new(a[0], a[1], a[2], a[3], a[4], a[5])
    }

    pub fn to_array(self) -> [f64; 6] {
        [self.p01, self.p02, self.p03, self.p12, self.p31, self.p23]
    }

    /// Grade-2 part of a Cl(3,0,1) element.
    pub fn from_multivector(m: &Multivector) -> Result<Self> {
        if m.signature() != Algebra::pga3().signature() {
            return Err(PgaError::SignatureMismatch(
                m.signature(),
                Algebra::pga3().signature(),
            ));
        }
        let c = m.grade_coeffs(2);
        Ok(Bivector3::new(c[0], c[1], c[2], c[3], c[4], c[5]))
    }

    pub fn to_multivector(self) -> Multivector {
        Multivector::from_grade_in(Algebra::pga3(), 2, &self.to_array()).expect("six coordinates")
    }

    /// Ideal part `(p01, p02, p03)`.
    pub fn ideal_part(self) -> Bivector3 {
        Bivector3::new(self.p01, self.p02, self.p03, 0.0, 0.0, 0.0)
    }

    /// Euclidean part `(p12, p31, p23)`, a line through the origin.
    pub fn euclidean_part(self) -> Bivector3 {
        Bivector3::new(0.0, 0.0, 0.0, self.p12, self.p31, self.p23)
    }

    /// `(Ξ∞, Ξo)`.
    pub fn split(self) -> (Bivector3, Bivector3) {
        (self.ideal_part(), self.euclidean_part())
    }

    /// Length of the euclidean part.
    pub fn norm(self) -> f64 {
        (self.p12 * self.p12 + self.p31 * self.p31 + self.p23 * self.p23).sqrt()
    }

    /// Length of the ideal part.
    pub fn ideal_norm(self) -> f64 {
        (self.p01 * self.p01 + self.p02 * self.p02 + self.p03 * self.p03).sqrt()
    }

    /// Largest absolute coordinate.
    pub fn max_abs(self) -> f64 {
        self.to_array().iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    pub fn is_ideal(self) -> bool {
        self.p12 == 0.0 && self.p31 == 0.0 && self.p23 == 0.0
    }

    /// Plücker inner product: `Ξ ∧ Φ = ⟨Ξ, Φ⟩_P I`.
    pub fn pluecker(self, o: Bivector3) -> f64 {
        self.p01 * o.p23
            + self.p02 * o.p31
            + self.p03 * o.p12
            + self.p12 * o.p03
            + self.p31 * o.p02
            + self.p23 * o.p01
    }

    /// `⟨Ξ, Ξ⟩_P` within `1e-9 ‖Ξ‖²`.
    pub fn is_simple(self) -> bool {
        let scale = self.to_array().iter().map(|c| c * c).sum::<f64>();
        self.pluecker(self).abs() <= INCIDENCE_TOL * scale
    }

    /// Inner product `Ξ · Φ = −(p12 g12 + p31 g31 + p23 g23)`.
    pub fn dot(self, o: Bivector3) -> f64 {
        -(self.p12 * o.p12 + self.p31 * o.p31 + self.p23 * o.p23)
    }

    /// `Ξ I`, the polar ideal line.
    pub fn times_i(self) -> Bivector3 {
        Bivector3::new(-self.p23, -self.p31, -self.p12, 0.0, 0.0, 0.0)
    }

    /// `(a + bI) Ξ`.
    pub fn scale_dual(self, z: DualNumber) -> Bivector3 {
        self * z.re + self.times_i() * z.du
    }

    /// Commutator `Ξ × Φ`.
    pub fn commutator(self, o: Bivector3) -> Bivector3 {
        let c = self
            .to_multivector()
            .commutator(&o.to_multivector())
            .expect("same algebra");
        Bivector3::from_multivector(&c).expect("same algebra")
    }

    /// Direction vector `p23 E1 + p31 E2 + p12 E3` (an ideal point).
    pub fn direction(self) -> Multivector {
        Multivector::from_grade_in(Algebra::pga3(), 3, &[0.0, self.p23, self.p31, self.p12])
            .expect("four coordinates")
    }

    /// Direction as `(x, y, z)`.
    pub fn direction_vector(self) -> [f64; 3] {
        [self.p23, self.p31, self.p12]
    }

    /// Scaled to unit euclidean part.
    pub fn normalized(self) -> Result<Bivector3> {
        let n = self.norm();
        if n == 0.0 {
            return Err(PgaError::NotNormalizable(
                "ideal bivector has no euclidean norm".into(),
            ));
        }
        Ok(self / n)
    }

    /// `(a, b)` with `(a + bI) Ξ` simple, `a = 2|Ξo|² > 0` and `b = ⟨Ξ,Ξ⟩_P`.
    fn axis_factor(self) -> Result<DualNumber> {
        if self.is_ideal() {
            return Err(PgaError::NoAxis(
                "ideal bivector (translation) has no axis".into(),
            ));
        }
        let a = -2.0 * self.pluecker(self.times_i());
        let b = self.pluecker(self);
        Ok(DualNumber::new(a, b))
    }

    /// The axis: the normalized simple euclidean line in `span{Ξ, ΞI}`.
    pub fn axis(self) -> Result<Bivector3> {
        self.axis_and_angle().map(|(axis, _)| axis)
    }

    /// `(Φ, c + dI)` with `Ξ = (c + dI) Φ`, `Φ` the axis and `c > 0`.
    pub fn axis_and_angle(self) -> Result<(Bivector3, DualNumber)> {
        let f = self.axis_factor()?;
        let raw = self.scale_dual(f);
        let n = raw.norm();
        let axis = raw / n;
        // Ξ = (f/n)⁻¹ Φ
        let z = (f * (1.0 / n)).inverse()?;
        Ok((axis, z))
    }

    /// `−⟨Ξ,Ξ⟩_P / ⟨Ξ,ΞI⟩_P`, infinite for ideal `Ξ`.
    pub fn pitch(self) -> Pitch {
        if self.is_ideal() {
            return Pitch::Infinite;
        }
        Pitch::Finite(-self.pluecker(self) / self.pluecker(self.times_i()))
    }

    pub fn approx_eq(self, o: Bivector3, tol: f64) -> bool {
        let scale = self.max_abs().max(o.max_abs()).max(1.0);
        (self - o).max_abs() <= tol * scale
    }
}

impl Add for Bivector3 {
    type Output = Bivector3;
    fn add(self, o: Bivector3) -> Bivector3 {
        Bivector3::new(
            self.p01 + o.p01,
            self.p02 + o.p02,
            self.p03 + o.p03,
            self.p12 + o.p12,
            self.p31 + o.p31,
            self.p23 + o.p23,
        )
    }
}

impl AddAssign for Bivector3 {
    fn add_assign(&mut self, o: Bivector3) {
        *self = *self + o;
    }
}

impl Sub for Bivector3 {
    type Output = Bivector3;
    fn sub(self, o: Bivector3) -> Bivector3 {
        self + (-o)
    }
}

impl Neg for Bivector3 {
    type Output = Bivector3;
    fn neg(self) -> Bivector3 {
        self * -1.0
    }
}

impl Mul<f64> for Bivector3 {
    type Output = Bivector3;
    fn mul(self, s: f64) -> Bivector3 {
        Bivector3::from_array(self.to_array().map(|c| c * s))
    }
}

impl Div<f64> for Bivector3 {
    type Output = Bivector3;
    fn div(self, s: f64) -> Bivector3 {
        self * (1.0 / s)
    }
}

impl std::iter::Sum for Bivector3 {
    fn sum<I: Iterator<Item = Bivector3>>(iter: I) -> Bivector3 {
        iter.fold(Bivector3::ZERO, |a, b| a + b)
    }
}
