//! The isomorphism `J` between the point-based and plane-based algebras,
//! the metric polarity `Π`, and the join built from `J`.
//!
//! Both algebras share the canonical coordinate layout, so `J` is a pure
//! index permutation: it maps each canonical blade to its oriented
//! complement. Its outer product in the point-based algebra is the same
//! coefficient function as [`Multivector::outer`], which makes
//! `join(a, b) = J(J(a) ∧ J(b))` independent of the metric.

use crate::algebra::{Algebra, Signature};
use crate::error::Result;
use crate::multivector::Multivector;
use std::ops::BitAnd;

/// `J(x)`: grade `k` goes to grade `dim - k`; on 3D bivectors the coordinate
/// tuple is reversed.
pub fn dual_j(x: &Multivector) -> Multivector {
    let alg = x.algebra();
    let mut out = Multivector::zero_in(alg);
    for (i, &c) in x.coeffs().iter().enumerate() {
        out.set(alg.dual_index(i), c);
    }
    out
}

/// The regressive product (join in the plane-based algebra).
pub fn join(a: &Multivector, b: &Multivector) -> Result<Multivector> {
    Ok(dual_j(&dual_j(a).outer(&dual_j(b))?))
}

/// Meet; the plain outer product of the plane-based algebra.
pub fn meet(a: &Multivector, b: &Multivector) -> Result<Multivector> {
    a.outer(b)
}

fn elliptic(x: &Multivector) -> &'static Algebra {
    let dim = x.algebra().dim();
    Algebra::get(Signature::new(dim, 0, 0).expect("dimension already validated"))
}

/// `Π(x)`: right multiplication by the pseudoscalar of the elliptic algebra
/// of the same dimension, read back on the same coordinates.
///
/// On vectors this agrees with `J` coordinate for coordinate; on other grades
/// it can differ from `J` by a sign, and `Π∘Π = ±id` per grade.
pub fn metric_polarity(x: &Multivector) -> Multivector {
    let ell = elliptic(x);
    let xe = x.reinterpret(ell).expect("same dimension");
    let i = Multivector::unit_in(ell, ell.size() - 1);
    (xe * i).reinterpret(x.algebra()).expect("same dimension")
}

/// Inverse of [`metric_polarity`]: right multiplication by `I⁻¹ = Ĩ`.
pub fn metric_polarity_inverse(x: &Multivector) -> Multivector {
    let ell = elliptic(x);
    let xe = x.reinterpret(ell).expect("same dimension");
    let i_inv = Multivector::unit_in(ell, ell.size() - 1).reverse();
    (xe * i_inv).reinterpret(x.algebra()).expect("same dimension")
}

/// Regressive product through the elliptic polarity, `Π⁻¹(Π(a) ∧ Π(b))`.
///
/// Agrees with [`join`] up to a sign that depends only on the grades.
pub fn regressive_via_polarity(a: &Multivector, b: &Multivector) -> Result<Multivector> {
    let pa = metric_polarity(a);
    let pb = metric_polarity(b);
    Ok(metric_polarity_inverse(&pa.outer(&pb)?))
}

impl BitAnd<&Multivector> for &Multivector {
    type Output = Multivector;

    /// Join; panics on signature mismatch like the other operators.
    fn bitand(self, rhs: &Multivector) -> Multivector {
        join(self, rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl BitAnd<Multivector> for Multivector {
    type Output = Multivector;
    fn bitand(self, rhs: Multivector) -> Multivector {
        &self & &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn b(sig: Signature, name: &str) -> Multivector {
        Multivector::basis(sig, name).unwrap()
    }

    #[test]
    fn j_examples() {
        let s = Signature::PGA3;
        assert_eq!(dual_j(&b(s, "e01")), b(s, "e23"));
        assert_eq!(dual_j(&b(s, "e31")), b(s, "e02"));
        assert_eq!(dual_j(&b(s, "e1")), b(s, "E1"));
        assert_eq!(dual_j(&Multivector::scalar(s, 1.0)), b(s, "I"));
        assert_eq!(dual_j(&b(s, "I")), Multivector::scalar(s, 1.0));
    }

    #[test]
    fn j_reverses_bivector_tuple() {
        let alg = Algebra::pga3();
        let x = Multivector::from_grade_in(alg, 2, &[1., 2., 3., 4., 5., 6.]).unwrap();
        assert_eq!(dual_j(&x).grade_coeffs(2), &[6., 5., 4., 3., 2., 1.]);
    }

    #[test]
    fn join_of_origin_and_ideal_x_is_x_axis() {
        let s = Signature::PGA2;
        let l = join(&b(s, "E0"), &b(s, "E1")).unwrap();
        assert_eq!(l, b(s, "e2"));
    }

    #[test]
    fn join_point_with_itself_vanishes() {
        let alg = Algebra::pga3();
        let p = Multivector::from_grade_in(alg, 3, &[1.0, 0.3, -2.0, 4.0]).unwrap();
        assert!(join(&p, &p).unwrap().is_zero());
    }

    #[test]
    fn collinearity_through_join() {
        let alg = Algebra::pga2();
        let p = Multivector::from_grade_in(alg, 2, &[1.0, 0.0, 0.0]).unwrap();
        let q = Multivector::from_grade_in(alg, 2, &[1.0, 1.0, 2.0]).unwrap();
        let on = Multivector::from_grade_in(alg, 2, &[1.0, 3.0, 6.0]).unwrap();
        let off = Multivector::from_grade_in(alg, 2, &[1.0, 3.0, 5.0]).unwrap();
        let l = join(&p, &q).unwrap();
        assert!(join(&l, &on).unwrap().is_zero());
        assert!(!join(&l, &off).unwrap().is_zero());
    }

    #[test]
    fn polarity_on_vectors_matches_j() {
        let s = Signature::PGA3;
        for name in ["e0", "e1", "e2", "e3"] {
            assert_eq!(metric_polarity(&b(s, name)), dual_j(&b(s, name)));
        }
    }

    #[test]
    fn polarity_squares_to_plus_minus_identity() {
        for dim in 2..=6 {
            let alg = Algebra::get(Signature::new(dim, 0, 0).unwrap());
            for k in 0..=dim {
                let mut x = Multivector::zero_in(alg);
                for (n, i) in alg.grade_range(k).enumerate() {
                    x.set(i, 1.0 + n as f64);
                }
                let pp = metric_polarity(&metric_polarity(&x));
                assert!(pp == x || pp == -x.clone(), "dim {dim} grade {k}");
            }
        }
    }

    fn arb_blade(sig: Signature, grade: usize) -> impl Strategy<Value = Multivector> {
        let alg = Algebra::get(sig);
        prop::collection::vec(prop::collection::vec(-2.0f64..2.0, alg.dim()), grade).prop_map(
            move |vs| {
                let mut acc = Multivector::scalar_in(alg, 1.0);
                for v in vs {
                    let vec = Multivector::from_grade_in(alg, 1, &v).unwrap();
                    acc = &acc ^ &vec;
                }
                acc
            },
        )
    }

    fn arb_blade_pair() -> impl Strategy<Value = (Multivector, Multivector)> {
        (2usize..=5, 0usize..=5, 0usize..=5).prop_flat_map(|(dim, k, l)| {
            let sig = Signature::new(dim - 1, 0, 1).unwrap();
            (arb_blade(sig, k.min(dim)), arb_blade(sig, l.min(dim)))
        })
    }

    proptest! {
        #[test]
        fn j_is_an_involution(c in prop::collection::vec(-5.0f64..5.0, 16)) {
            let x = Multivector::from_coeffs(Signature::PGA3, c).unwrap();
            prop_assert_eq!(dual_j(&dual_j(&x)), x);
        }

        #[test]
        fn join_matches_polarity_regressive_up_to_grade_sign((a, bb) in arb_blade_pair()) {
            let j = join(&a, &bb).unwrap();
            let p = regressive_via_polarity(&a, &bb).unwrap();
            let plus = j.max_abs_diff(&p);
            let minus = j.max_abs_diff(&(-p.clone()));
            let scale = 1.0 + j.max_abs();
            prop_assert!(plus.min(minus) <= 1e-12 * scale, "{j:?} vs {p:?}");
        }

        #[test]
        fn j_exchanges_meet_and_join((a, bb) in arb_blade_pair()) {
            let l = dual_j(&meet(&a, &bb).unwrap());
            let r = join(&dual_j(&a), &dual_j(&bb)).unwrap();
            prop_assert!(l.approx_eq(&r));
        }

        #[test]
        fn join_is_associative_on_points(
            p in prop::collection::vec(-3.0f64..3.0, 12)
        ) {
            let alg = Algebra::pga3();
            let pt = |o: usize| Multivector::from_grade_in(alg, 3, &[1.0, p[o], p[o + 1], p[o + 2]]).unwrap();
            let (x, y, z) = (pt(0), pt(3), pt(6));
            let l = join(&join(&x, &y).unwrap(), &z).unwrap();
            let r = join(&x, &join(&y, &z).unwrap()).unwrap();
            prop_assert!(l.approx_eq(&r));
        }

        #[test]
        fn meet_of_two_lines_is_incident_with_both(c in prop::collection::vec(-3.0f64..3.0, 6)) {
            let alg = Algebra::pga2();
            let a = Multivector::from_grade_in(alg, 1, &c[0..3]).unwrap();
            let l = Multivector::from_grade_in(alg, 1, &c[3..6]).unwrap();
            let x = meet(&a, &l).unwrap();
            prop_assert!((&a ^ &x).max_abs() <= 1e-12 * (1.0 + x.max_abs()));
            prop_assert!((&l ^ &x).max_abs() <= 1e-12 * (1.0 + x.max_abs()));
        }
    }
}
