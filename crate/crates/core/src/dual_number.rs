//! Dual numbers `a + bI` with `I² = 0`.

use crate::error::{PgaError, Result};
use crate::multivector::Multivector;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct DualNumber {
    pub re: f64,
    pub du: f64,
}

impl DualNumber {
    pub const ZERO: DualNumber = DualNumber { re: 0.0, du: 0.0 };
    pub const ONE: DualNumber = DualNumber { re: 1.0, du: 0.0 };

    pub fn new(re: f64, du: f64) -> Self {
        DualNumber { re, du }
    }

    pub fn conj(self) -> Self {
        DualNumber::new(self.re, -self.du)
    }

    /// The real part; `z z̄ = re²`.
    pub fn norm(self) -> f64 {
        self.re
    }

    pub fn is_euclidean(self) -> bool {
        self.re != 0.0
    }

    /// `z̄ / a²`.
    pub fn inverse(self) -> Result<Self> {
        if self.re == 0.0 {
            return Err(PgaError::Singular(format!(
                "ideal dual number {self} has no inverse"
            )));
        }
        Ok(DualNumber::new(1.0 / self.re, -self.du / (self.re * self.re)))
    }

    /// `√a + b/(2√a) I`.
    pub fn sqrt(self) -> Result<Self> {
        if self.re <= 0.0 {
            return Err(PgaError::InvalidArgument(format!(
                "dual square root needs a positive real part, got {self}"
            )));
        }
        let c = self.re.sqrt();
        Ok(DualNumber::new(c, self.du / (2.0 * c)))
    }

    /// `cos x − y sin x I`.
    pub fn cos(self) -> Self {
        DualNumber::new(self.re.cos(), -self.du * self.re.sin())
    }

    /// `sin x + y cos x I`.
    pub fn sin(self) -> Self {
        DualNumber::new(self.re.sin(), self.du * self.re.cos())
    }

    /// Scalar plus pseudoscalar part of a multivector.
    pub fn from_multivector(m: &Multivector) -> Self {
        DualNumber::new(m.scalar_part(), m.pseudoscalar_part())
    }

    pub fn to_multivector(self, like: &Multivector) -> Multivector {
        let mut out = Multivector::zero_in(like.algebra());
        let n = out.coeffs().len();
        out.set(0, self.re);
        out.set(n - 1, self.du);
        out
    }

    /// `z m`; dual numbers commute with every element.
    pub fn scale(self, m: &Multivector) -> Multivector {
        let i = Multivector::unit_in(m.algebra(), m.coeffs().len() - 1);
        m.scale(self.re) + (i * m).scale(self.du)
    }

    pub fn approx_eq(self, other: Self, tol: f64) -> bool {
        (self.re - other.re).abs() <= tol && (self.du - other.du).abs() <= tol
    }
}

impl fmt::Display for DualNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.du < 0.0 {
            write!(f, "{} - {}I", self.re, -self.du)
        } else {
            write!(f, "{} + {}I", self.re, self.du)
        }
    }
}

impl Add for DualNumber {
    type Output = DualNumber;
    fn add(self, o: DualNumber) -> DualNumber {
        DualNumber::new(self.re + o.re, self.du + o.du)
    }
}

impl Sub for DualNumber {
    type Output = DualNumber;
    fn sub(self, o: DualNumber) -> DualNumber {
        DualNumber::new(self.re - o.re, self.du - o.du)
    }
}

impl Mul for DualNumber {
    type Output = DualNumber;
    fn mul(self, o: DualNumber) -> DualNumber {
        DualNumber::new(self.re * o.re, self.re * o.du + self.du * o.re)
    }
}

impl Mul<f64> for DualNumber {
    type Output = DualNumber;
    fn mul(self, s: f64) -> DualNumber {
        DualNumber::new(self.re * s, self.du * s)
    }
}

impl Neg for DualNumber {
    type Output = DualNumber;
    fn neg(self) -> DualNumber {
        DualNumber::new(-self.re, -self.du)
    }
}

impl From<f64> for DualNumber {
    fn from(re: f64) -> Self {
        DualNumber::new(re, 0.0)
    }
}
