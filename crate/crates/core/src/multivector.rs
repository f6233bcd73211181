//! Dense multivectors and the products of the carrying algebra.

use crate::algebra::{Algebra, Signature};
use crate::error::{PgaError, Result};
use crate::tolerance::{ABS_TOL, REL_TOL};
use std::fmt;
use std::ops::{Add, AddAssign, BitOr, BitXor, Div, Mul, Neg, Sub, SubAssign};

/// A general element: `2^dim` coefficients over the canonical basis.
#[derive(Clone)]
pub struct Multivector {
    alg: &'static Algebra,
    coeffs: Vec<f64>,
}

impl Multivector {
    pub fn zero_in(alg: &'static Algebra) -> Self {
        Multivector {
            alg,
            coeffs: vec![0.0; alg.size()],
        }
    }

    pub fn zero(sig: Signature) -> Self {
        Self::zero_in(Algebra::get(sig))
    }

    pub fn scalar_in(alg: &'static Algebra, s: f64) -> Self {
        let mut m = Self::zero_in(alg);
        m.coeffs[0] = s;
        m
    }

    pub fn scalar(sig: Signature, s: f64) -> Self {
        Self::scalar_in(Algebra::get(sig), s)
    }

    /// Unit basis blade by canonical index.
    pub fn unit_in(alg: &'static Algebra, index: usize) -> Self {
        let mut m = Self::zero_in(alg);
        m.coeffs[index] = 1.0;
        m
    }

    /// Unit basis blade by name, e.g. `"e31"`.
    pub fn basis_in(alg: &'static Algebra, name: &str) -> Result<Self> {
        let idx = alg
            .index_of(name)
            .ok_or_else(|| PgaError::InvalidArgument(format!("unknown blade name {name:?}")))?;
        Ok(Self::unit_in(alg, idx))
    }

    pub fn basis(sig: Signature, name: &str) -> Result<Self> {
        Self::basis_in(Algebra::get(sig), name)
    }

    pub fn from_coeffs_in(alg: &'static Algebra, coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.len() != alg.size() {
            return Err(PgaError::InvalidArgument(format!(
                "expected {} coefficients, got {}",
                alg.size(),
                coeffs.len()
            )));
        }
        Ok(Multivector { alg, coeffs })
    }

    pub fn from_coeffs(sig: Signature, coeffs: Vec<f64>) -> Result<Self> {
        Self::from_coeffs_in(Algebra::get(sig), coeffs)
    }

    /// Element of grade `k` from its `dim choose k` coefficients.
    pub fn from_grade_in(alg: &'static Algebra, k: usize, values: &[f64]) -> Result<Self> {
        let range = alg.grade_range(k);
        if values.len() != range.len() {
            return Err(PgaError::InvalidArgument(format!(
                "grade {k} needs {} coefficients, got {}",
                range.len(),
                values.len()
            )));
        }
        let mut m = Self::zero_in(alg);
        m.coeffs[range].copy_from_slice(values);
        Ok(m)
    }

    /// Same coefficients read in another algebra of equal dimension.
    pub fn reinterpret(&self, alg: &'static Algebra) -> Result<Self> {
        Self::from_coeffs_in(alg, self.coeffs.clone())
    }

    pub fn algebra(&self) -> &'static Algebra {
        self.alg
    }

    pub fn signature(&self) -> Signature {
        self.alg.signature()
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn coeffs_mut(&mut self) -> &mut [f64] {
        &mut self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<f64> {
        self.coeffs
    }

    pub fn get(&self, index: usize) -> f64 {
        self.coeffs[index]
    }

    pub fn set(&mut self, index: usize, value: f64) {
        self.coeffs[index] = value;
    }

    /// Coefficient by blade name; unknown names read as 0.
    pub fn coeff(&self, name: &str) -> f64 {
        self.alg.index_of(name).map_or(0.0, |i| self.coeffs[i])
    }

    /// Coefficients of grade `k` in canonical order.
    pub fn grade_coeffs(&self, k: usize) -> &[f64] {
        &self.coeffs[self.alg.grade_range(k)]
    }

    pub fn scalar_part(&self) -> f64 {
        self.coeffs[0]
    }

    pub fn pseudoscalar_part(&self) -> f64 {
        self.coeffs[self.coeffs.len() - 1]
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.alg.signature() != other.alg.signature() {
            return Err(PgaError::SignatureMismatch(
                self.alg.signature(),
                other.alg.signature(),
            ));
        }
        Ok(())
    }

    fn product_filtered(&self, other: &Self, keep: impl Fn(usize, usize, usize) -> bool) -> Self {
        let alg = self.alg;
        let n = alg.size();
        let mut out = vec![0.0; n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0.0 {
                continue;
            }
            let gi = alg.grade_of(i);
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b == 0.0 {
                    continue;
                }
                let cell = alg.cell(i, j);
                if cell.sign == 0.0 || !keep(gi, alg.grade_of(j), alg.grade_of(cell.index)) {
                    continue;
                }
                out[cell.index] += cell.sign * a * b;
            }
        }
        Multivector { alg, coeffs: out }
    }

    /// Geometric product `ab`.
    pub fn geometric_product(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.product_filtered(other, |_, _, _| true))
    }

    /// Outer product `a ∧ b`; the meet when read in the plane-based algebra.
    pub fn outer(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.product_filtered(other, |k, l, g| g == k + l))
    }

    /// Inner product: the grade `|k - l|` part of the product of grade parts.
    pub fn inner(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.product_filtered(other, |k, l, g| g == k.abs_diff(l)))
    }

    /// Commutator product `½(ab − ba)`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        let ab = self.geometric_product(other)?;
        let ba = other.geometric_product(self)?;
        Ok((ab - ba) * 0.5)
    }

    /// Reversion, `(−1)^{k(k−1)/2}` on grade `k`.
    pub fn reverse(&self) -> Self {
        let mut out = self.clone();
        for (i, c) in out.coeffs.iter_mut().enumerate() {
            let k = self.alg.grade_of(i);
            if (k * k.saturating_sub(1) / 2) % 2 == 1 {
                *c = -*c;
            }
        }
        out
    }

    /// Grade projection `⟨a⟩_k`.
    pub fn grade(&self, k: usize) -> Self {
        let mut out = Self::zero_in(self.alg);
        if k <= self.alg.dim() {
            let r = self.alg.grade_range(k);
            out.coeffs[r.clone()].copy_from_slice(&self.coeffs[r]);
        }
        out
    }

    /// Sorted list of grades with a nonzero coefficient.
    pub fn grades(&self) -> Vec<usize> {
        (0..=self.alg.dim())
            .filter(|&k| self.grade_coeffs(k).iter().any(|&c| c != 0.0))
            .collect()
    }

    /// The single grade present, if any.
    pub fn homogeneous_grade(&self) -> Option<usize> {
        match self.grades().as_slice() {
            [k] => Some(*k),
            _ => None,
        }
    }

    /// Even-grade part.
    pub fn even(&self) -> Self {
        let mut out = self.clone();
        for (i, c) in out.coeffs.iter_mut().enumerate() {
            if self.alg.grade_of(i) % 2 == 1 {
                *c = 0.0;
            }
        }
        out
    }

    pub fn scale(&self, s: f64) -> Self {
        Multivector {
            alg: self.alg,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Multivector {
            alg: self.alg,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0.0)
    }

    /// Largest absolute coefficient.
    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// Euclidean norm of the coefficient vector (a size measure, not a metric norm).
    pub fn coeff_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    /// Largest absolute coefficient difference.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }

    /// Componentwise closeness relative to the larger operand.
    pub fn approx_eq_tol(&self, other: &Self, rel: f64, abs: f64) -> bool {
        if self.alg.signature() != other.alg.signature() {
            return false;
        }
        let scale = self.max_abs().max(other.max_abs());
        self.max_abs_diff(other) <= abs.max(rel * scale)
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.approx_eq_tol(other, REL_TOL, ABS_TOL)
    }

    /// Copy with coefficients below `tol * max(1, max_abs)` set to zero.
    pub fn chop(&self, tol: f64) -> Self {
        let cut = tol * self.max_abs().max(1.0);
        Multivector {
            alg: self.alg,
            coeffs: self
                .coeffs
                .iter()
                .map(|&c| if c.abs() <= cut { 0.0 } else { c })
                .collect(),
        }
    }
}

impl PartialEq for Multivector {
    fn eq(&self, other: &Self) -> bool {
        self.alg.signature() == other.alg.signature() && self.coeffs == other.coeffs
    }
}

fn fmt_coeff(c: f64) -> String {
    format!("{c}")
}

impl fmt::Display for Multivector {
    /// Nonzero components in canonical order, e.g. `0.5 + 0.5*e12 - E2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0.0 {
                continue;
            }
            let name = &self.alg.blade(i).name;
            let mag = c.abs();
            let body = if i == 0 {
                fmt_coeff(mag)
            } else if mag == 1.0 {
                name.clone()
            } else {
                format!("{}*{name}", fmt_coeff(mag))
            };
            match (first, c < 0.0) {
                (true, false) => write!(f, "{body}")?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multivector[{}]({self})", self.alg.signature())
    }
}

fn expect_same(a: &Multivector, b: &Multivector) {
    if let Err(e) = a.check(b) {
        panic!("{e}");
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&Multivector> for &Multivector {
            type Output = Multivector;
            fn $method(self, rhs: &Multivector) -> Multivector {
                expect_same(self, rhs);
                let f: fn(&Multivector, &Multivector) -> Multivector = $body;
                f(self, rhs)
            }
        }
        impl $tr<Multivector> for Multivector {
            type Output = Multivector;
            fn $method(self, rhs: Multivector) -> Multivector {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Multivector> for Multivector {
            type Output = Multivector;
            fn $method(self, rhs: &Multivector) -> Multivector {
                (&self).$method(rhs)
            }
        }
        impl $tr<Multivector> for &Multivector {
            type Output = Multivector;
            fn $method(self, rhs: Multivector) -> Multivector {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, |a, b| a.try_add(b).expect("checked"));
binop!(Sub, sub, |a, b| a.try_add(&-b).expect("checked"));
binop!(Mul, mul, |a, b| a.product_filtered(b, |_, _, _| true));
binop!(BitXor, bitxor, |a, b| a.product_filtered(b, |k, l, g| g == k + l));
binop!(BitOr, bitor, |a, b| a
    .product_filtered(b, |k, l, g| g == k.abs_diff(l)));

impl Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self.scale(-1.0)
    }
}

impl Neg for Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self.scale(-1.0)
    }
}

impl Mul<f64> for &Multivector {
    type Output = Multivector;
    fn mul(self, s: f64) -> Multivector {
        self.scale(s)
    }
}

impl Mul<f64> for Multivector {
    type Output = Multivector;
    fn mul(self, s: f64) -> Multivector {
        self.scale(s)
    }
}

impl Mul<Multivector> for f64 {
    type Output = Multivector;
    fn mul(self, m: Multivector) -> Multivector {
        m.scale(self)
    }
}

impl Mul<&Multivector> for f64 {
    type Output = Multivector;
    fn mul(self, m: &Multivector) -> Multivector {
        m.scale(self)
    }
}

impl Div<f64> for Multivector {
    type Output = Multivector;
    fn div(self, s: f64) -> Multivector {
        self.scale(1.0 / s)
    }
}

impl Div<f64> for &Multivector {
    type Output = Multivector;
    fn div(self, s: f64) -> Multivector {
        self.scale(1.0 / s)
    }
}

impl AddAssign<&Multivector> for Multivector {
    fn add_assign(&mut self, rhs: &Multivector) {
        expect_same(self, rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl SubAssign<&Multivector> for Multivector {
    fn sub_assign(&mut self, rhs: &Multivector) {
        expect_same(self, rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
    }
}
