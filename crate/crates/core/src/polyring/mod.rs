//! Exact sparse multivariate polynomials, monomial orders and the
//! affine/projective homogenization dictionary.

mod field;
mod monomial;
mod order;
mod parse;
mod poly;

pub use field::{denominator_lcm, Field, Fp, Rational};
pub use monomial::Monomial;
pub use order::{ModuleLayout, MonomialOrder, OrderKind};
pub use parse::{parse_ideal_file, parse_vars_header, IdealFile};
pub use poly::{Degree, MultiPoly, Ring, HOMOGENIZING_VAR};
pub(crate) use parse::shift;
pub(crate) use poly::merge_scaled;

/// Rational number from a numerator/denominator pair.
pub fn q(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::sync::Arc;

    fn ring2() -> Arc<Ring> {
        Ring::new(&["z1", "z2"])
    }

    fn p(r: &Arc<Ring>, s: &str) -> MultiPoly {
        MultiPoly::parse(r, s).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        let r = Ring::new(&["x"]);
        assert_eq!(&p(&r, "x + 1") * &p(&r, "x - 1"), p(&r, "x^2 - 1"));
        let a = p(&r, "3*x^2 + 2");
        assert_eq!(&a + &MultiPoly::zero(&r), a);
        let prod = &p(&r, "1/2*x") * &p(&r, "2/3*x");
        assert_eq!(prod, p(&r, "1/3*x^2"));
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = p(&ring2(), "z1");
        let b = p(&Ring::new(&["x"]), "x");
        assert!(matches!(a.checked_add(&b), Err(crate::Error::RingMismatch(_))));
        assert!(a.checked_mul(&b).is_err());
    }

    #[test]
    fn homogenize_examples() {
        let r = ring2();
        let f = p(&r, "z1^2 + z2").homogenize(2).unwrap();
        assert_eq!(f, p(&f.ring().clone(), "z1^2 + z2*z0"));
        let one = p(&r, "1").homogenize(3).unwrap();
        assert_eq!(one.to_string(), "z0^3");
        for pp in [3u32, 5, 7] {
            let cusp = p(&r, &format!("z1^2 - z2^{pp}")).homogenize(pp).unwrap();
            let hr = cusp.ring().clone();
            assert_eq!(cusp, p(&hr, &format!("z1^2*z0^{} - z2^{pp}", pp - 2)));
            assert!(cusp.is_homogeneous());
            assert_eq!(cusp.degree(), Degree::Finite(pp));
        }
        assert!(matches!(
            p(&r, "z1^3").homogenize(2),
            Err(crate::Error::DegreeTooSmall { target: 2, actual: 3 })
        ));
    }

    #[test]
    fn dehomogenize_examples() {
        let h = Ring::new(&["z0", "z1", "z2"]);
        assert_eq!(p(&h, "z1^2 + z2*z0").dehomogenize().unwrap().to_string(), "z1^2 + z2");
        assert_eq!(p(&h, "z0^3").dehomogenize().unwrap().to_string(), "1");
        let a = p(&h, "z1^2*z0^3 - z2^5").dehomogenize().unwrap();
        assert_eq!(a, p(&ring2(), "z1^2 - z2^5"));
    }

    #[test]
    fn degree_examples() {
        let r = ring2();
        assert_eq!(p(&r, "z1^2*z2 + z1").degree(), Degree::Finite(3));
        assert_eq!(MultiPoly::zero(&r).degree(), Degree::NegInfinity);
        let f = p(&r, "z1 + 7");
        assert_eq!(f.homogenize(6).unwrap().degree(), Degree::Finite(6));
        // the -inf sentinel keeps deg(FQ) = deg F + deg Q
        let z = MultiPoly::zero(&r);
        assert_eq!((&f * &z).degree(), f.degree() + z.degree());
    }

    #[test]
    fn prime_field_image() {
        let r = Ring::new(&["x", "y"]);
        let f = p(&r, "1/2*x + 3*y - 7");
        let fr = r.over(Fp::field(7).unwrap());
        let g = f.to_field(&fr).unwrap();
        assert_eq!(g.to_string(), "-3*x + 3*y");
    }

    fn small_poly(r: Arc<Ring>) -> impl Strategy<Value = MultiPoly> {
        let n = r.nvars();
        proptest::collection::vec((proptest::collection::vec(0u32..4, n), -5i64..6, 1i64..4), 0..6)
            .prop_map(move |ts| {
                MultiPoly::from_terms(&r, ts.into_iter().map(|(e, a, b)| (Monomial::new(e), q(a, b))))
            })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(Ring::new(&["x", "y", "z"])),
                       b in small_poly(Ring::new(&["x", "y", "z"])),
                       c in small_poly(Ring::new(&["x", "y", "z"]))) {
            let r = a.ring().clone();
            let (b, c) = (b.with_ring(&r).unwrap(), c.with_ring(&r).unwrap());
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert!((&a - &a).is_zero());
            prop_assert_eq!((&a * &b).degree(), a.degree() + b.degree());
        }

        #[test]
        fn homogenize_roundtrip(a in small_poly(Ring::new(&["z1", "z2"])), extra in 0u32..3) {
            let d = a.degree().finite().unwrap_or(0) + extra;
            let h = a.homogenize(d).unwrap();
            prop_assert!(h.is_homogeneous());
            if !a.is_zero() {
                prop_assert_eq!(h.degree(), Degree::Finite(d));
            }
            let back = h.dehomogenize().unwrap();
            prop_assert_eq!(&back, &a);
        }

        #[test]
        fn format_parse_roundtrip(a in small_poly(Ring::new(&["x", "y", "z"]))) {
            let text = a.to_string();
            let b = MultiPoly::parse(a.ring(), &text).unwrap();
            prop_assert_eq!(a, b);
        }
    }
}
