//! The integral-domain norm analogue: for a rational prime theta and a
//! divisor theta' of theta in a monogenic ring Z[alpha], the norm of
//! theta' taken from the subfield Q(theta') is theta^n times a unit of
//! Z, with n at most the degree of Q(theta') over Q.
//!
//! The ambient ring is always Z[alpha] for an algebraic integer alpha,
//! so norms of ring elements are rational integers and "unit" means
//! exactly +1 or -1, both checkable without any further infrastructure.

use alloc::vec::Vec;

use num_integer::Integer as NumIntegerOps;
use num_traits::{One, Signed, Zero};

use crate::arith::{is_prime_integer, Field, Integer, Rational, Rationals};
use crate::error::{Error, Result};
use crate::factor_qq::ZPoly;
use crate::linalg;
use crate::numfield::{NFElement, NumberField};
use crate::poly;

/// The ring Z[alpha] for alpha with monic integer minimal polynomial,
/// together with its fraction field Q(alpha).
#[derive(Clone, Debug)]
pub struct MonogenicRing {
    field: NumberField,
    minpoly: ZPoly,
}

/// An element of the ring: integer coordinates in the power basis
/// `1, alpha, ..., alpha^(d-1)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RingElement {
    coords: Vec<Integer>,
}

impl RingElement {
    pub fn new(coords: Vec<Integer>) -> Self {
        RingElement { coords }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        RingElement { coords: coords.iter().map(|&c| Integer::from(c)).collect() }
    }

    pub fn coords(&self) -> &[Integer] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }
}

/// The outcome record of a norm-theorem verification.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NormReport {
    pub theta: Integer,
    pub theta_prime: RingElement,
    /// The norm of theta' from Q(theta'), the product of its distinct
    /// conjugates.
    pub big_theta: Integer,
    /// Largest exponent with theta^n dividing the norm.
    pub n: usize,
    /// The cofactor norm / theta^n.
    pub u: Integer,
    /// The degree bound [Q(theta') : Q].
    pub bound: usize,
    pub u_is_unit: bool,
    pub n_within_bound: bool,
}

impl NormReport {
    pub fn pass(&self) -> bool {
        self.u_is_unit && self.n_within_bound
    }
}

impl MonogenicRing {
    /// Presents Z[alpha]; the minimal polynomial must be monic with
    /// integer coefficients and irreducible over Q.
    pub fn new(minpoly: &ZPoly, rng_seed: u64) -> Result<Self> {
        if minpoly.degree().is_none_or(|d| d == 0) {
            return Err(Error::ConstantPolynomial);
        }
        if minpoly.leading_coefficient() != Some(&Integer::one()) {
            return Err(Error::NotMonic);
        }
        let rational = poly::from_coeffs(
            &Rationals,
            minpoly
                .coeffs()
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        );
        let field = NumberField::new(rational, rng_seed)?;
        Ok(MonogenicRing { field, minpoly: minpoly.clone() })
    }

    pub fn degree(&self) -> usize {
        self.field.degree()
    }

    pub fn minimal_polynomial(&self) -> &ZPoly {
        &self.minpoly
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    /// The element as a member of the fraction field.
    pub fn to_field(&self, a: &RingElement) -> Result<NFElement> {
        if a.coords.len() != self.degree() {
            return Err(Error::FieldMismatch);
        }
        Ok(self.field.from_poly(&poly::from_coeffs(
            &Rationals,
            a.coords
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        )))
    }

    /// Whether `theta_prime` divides the rational integer `theta` in the
    /// ring: solves `theta_prime * nu = theta` exactly over Q and checks
    /// that the quotient has integer coordinates.
    pub fn ring_divides(
        &self,
        theta_prime: &RingElement,
        theta: &Integer,
    ) -> Result<Option<RingElement>> {
        if theta_prime.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let tp = self.to_field(theta_prime)?;
        let d = self.degree();
        // Columns of the multiplication-by-theta_prime matrix.
        let mut columns = Vec::with_capacity(d);
        let mut basis = self.field.one();
        let alpha = self.field.generator();
        for i in 0..d {
            let col = self.field.mul(&tp, &basis);
            columns.push(col.coords().to_vec());
            if i + 1 < d {
                basis = self.field.mul(&basis, &alpha);
            }
        }
        let mut rhs = alloc::vec![Rational::zero(); d];
        rhs[0] = Rational::from_integer(theta.clone());
        let solution = linalg::solve(&Rationals, &columns, &rhs)?
            .expect("multiplication by a nonzero element is invertible");
        let mut coords = Vec::with_capacity(d);
        for c in solution {
            match c.to_integer() {
                Some(z) => coords.push(z),
                None => return Ok(None),
            }
        }
        Ok(Some(RingElement { coords }))
    }

    /// Norm from the subfield generated by the element: (-1)^k times the
    /// constant term of its degree-k minimal polynomial, the product of
    /// its distinct conjugates. Integer because the element is integral
    /// over Z.
    pub fn ring_norm(&self, a: &RingElement) -> Result<Integer> {
        let e = self.to_field(a)?;
        let mp = self.field.minimal_polynomial(&e);
        let k = mp.degree().expect("minimal polynomials are nonconstant");
        let c0 = mp.coeffs()[0].clone();
        let signed = if k.is_multiple_of(2) { c0 } else { Rationals.neg(&c0) };
        signed.to_integer().ok_or_else(|| {
            Error::InternalInconsistency("norm of an integral element must be an integer".into())
        })
    }

    /// Certifies the norm identity for a rational prime `theta` (up to
    /// sign) and a ring divisor `theta_prime` of it: the norm equals
    /// `theta^n * u` with `u` in {+1, -1} and `n <= [Q(theta') : Q]`.
    pub fn verify_norm_theorem(
        &self,
        theta: &Integer,
        theta_prime: &RingElement,
    ) -> Result<NormReport> {
        if !is_prime_integer(theta) {
            return Err(Error::NotPrime);
        }
        if self.ring_divides(theta_prime, theta)?.is_none() {
            return Err(Error::DoesNotDivide);
        }
        let big_theta = self.ring_norm(theta_prime)?;
        debug_assert!(!big_theta.is_zero());

        let e = self.to_field(theta_prime)?;
        let bound = self
            .field
            .minimal_polynomial(&e)
            .degree()
            .expect("nonconstant");

        // Largest n with theta^n dividing the norm; the minimality of n
        // is mirrored by the cofactor not being divisible by theta.
        let mut n = 0usize;
        let mut u = big_theta.clone();
        loop {
            let (q, r) = u.div_rem(theta);
            if r.is_zero() && !q.is_zero() {
                u = q;
                n += 1;
            } else {
                break;
            }
        }
        debug_assert!(!(&u % theta).is_zero());

        let u_is_unit = u.abs().is_one();
        let n_within_bound = n <= bound;
        Ok(NormReport {
            theta: theta.clone(),
            theta_prime: theta_prime.clone(),
            big_theta,
            n,
            u,
            bound,
            u_is_unit,
            n_within_bound,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor_qq::zp_from_i64;

    fn gaussian_ring() -> MonogenicRing {
        MonogenicRing::new(&zp_from_i64(&[1, 0, 1]), 0).unwrap()
    }

    fn sqrt2_ring() -> MonogenicRing {
        MonogenicRing::new(&zp_from_i64(&[-2, 0, 1]), 0).unwrap()
    }

    #[test]
    fn ring_construction_validates() {
        assert_eq!(
            MonogenicRing::new(&zp_from_i64(&[1, 0, 2]), 0).unwrap_err(),
            Error::NotMonic
        );
        assert_eq!(
            MonogenicRing::new(&zp_from_i64(&[-1, 0, 1]), 0).unwrap_err(),
            Error::NotIrreducible
        );
    }

    #[test]
    fn divides_examples() {
        let zi = gaussian_ring();
        // (2+i)(2-i) = 5
        let nu = zi
            .ring_divides(&RingElement::from_i64(&[2, 1]), &Integer::from(5))
            .unwrap()
            .unwrap();
        assert_eq!(nu, RingElement::from_i64(&[2, -1]));
        // 3 does not divide 5 in Z[i].
        assert!(zi
            .ring_divides(&RingElement::from_i64(&[3, 0]), &Integer::from(5))
            .unwrap()
            .is_none());
        assert_eq!(
            zi.ring_divides(&RingElement::from_i64(&[0, 0]), &Integer::from(5))
                .unwrap_err(),
            Error::ZeroDivisor
        );

        let z2 = sqrt2_ring();
        // sqrt2 * sqrt2 = 2
        let nu = z2
            .ring_divides(&RingElement::from_i64(&[0, 1]), &Integer::from(2))
            .unwrap()
            .unwrap();
        assert_eq!(nu, RingElement::from_i64(&[0, 1]));
    }

    #[test]
    fn norm_examples() {
        let zi = gaussian_ring();
        assert_eq!(
            zi.ring_norm(&RingElement::from_i64(&[2, 1])).unwrap(),
            Integer::from(5)
        );
        // A rational integer sits in the subfield Q of degree 1: the
        // norm from there is the element itself.
        assert_eq!(
            zi.ring_norm(&RingElement::from_i64(&[3, 0])).unwrap(),
            Integer::from(3)
        );
        let z2 = sqrt2_ring();
        assert_eq!(
            z2.ring_norm(&RingElement::from_i64(&[0, 1])).unwrap(),
            Integer::from(-2)
        );
    }

    #[test]
    fn norm_theorem_fixed_corpus() {
        let zi = gaussian_ring();
        let z2 = sqrt2_ring();
        let cases: alloc::vec::Vec<(&MonogenicRing, i64, &[i64], i64, usize, i64, usize)> = alloc::vec![
            // (ring, theta, theta', Theta, n, u, bound)
            (&zi, 5, &[2, 1][..], 5, 1, 1, 2),
            (&zi, 2, &[1, 1][..], 2, 1, 1, 2),
            (&zi, 3, &[3, 0][..], 3, 1, 1, 1),
            (&z2, 2, &[0, 1][..], -2, 1, -1, 2),
            (&z2, 7, &[3, 1][..], 7, 1, 1, 2),
        ];
        for (ring, theta, tp, big, n, u, bound) in cases {
            let report = ring
                .verify_norm_theorem(&Integer::from(theta), &RingElement::from_i64(tp))
                .unwrap();
            assert!(report.pass(), "{report:?}");
            assert_eq!(report.big_theta, Integer::from(big));
            assert_eq!(report.n, n);
            assert_eq!(report.u, Integer::from(u));
            assert_eq!(report.bound, bound);
        }
    }

    #[test]
    fn unit_divisor_gives_n_zero() {
        // i divides 5 (5 = i * (-5i)); its norm is 1, so n = 0, u = 1.
        let zi = gaussian_ring();
        let report = zi
            .verify_norm_theorem(&Integer::from(5), &RingElement::from_i64(&[0, 1]))
            .unwrap();
        assert!(report.pass());
        assert_eq!(report.n, 0);
        assert_eq!(report.u, Integer::from(1));
    }

    #[test]
    fn negative_prime_accepted() {
        let zi = gaussian_ring();
        let report = zi
            .verify_norm_theorem(&Integer::from(-5), &RingElement::from_i64(&[2, 1]))
            .unwrap();
        assert!(report.pass());
        assert_eq!(report.n, 1);
        assert_eq!(report.u, Integer::from(-1));
    }

    #[test]
    fn hypothesis_gates() {
        let zi = gaussian_ring();
        assert_eq!(
            zi.verify_norm_theorem(&Integer::from(4), &RingElement::from_i64(&[2, 0]))
                .unwrap_err(),
            Error::NotPrime
        );
        // 2+i does not divide 7 in Z[i].
        assert_eq!(
            zi.verify_norm_theorem(&Integer::from(7), &RingElement::from_i64(&[2, 1]))
                .unwrap_err(),
            Error::DoesNotDivide
        );
    }

    #[test]
    fn full_norm_is_subfield_norm_power() {
        // For a in the ring, the norm from the full field equals the
        // subfield norm raised to [K : Q(a)].
        let zi = gaussian_ring();
        let elems = [
            RingElement::from_i64(&[3, 0]),
            RingElement::from_i64(&[2, 1]),
            RingElement::from_i64(&[-1, 4]),
        ];
        for a in &elems {
            let e = zi.to_field(a).unwrap();
            let full = zi.field().norm(&e);
            let sub = zi.ring_norm(a).unwrap();
            let k = zi.degree() / zi.field().minimal_polynomial(&e).degree().unwrap();
            let sub_pow = Rationals.pow(&Rational::from_integer(sub), k as u64);
            assert_eq!(full, sub_pow);
        }
    }
}
