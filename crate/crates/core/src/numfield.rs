//! Simple algebraic extensions presented by a monic minimal polynomial,
//! and the number-field operations built on them: minimal polynomials of
//! elements, norms, primitive elements for composite extensions, and
//! Trager factorization of polynomials over a number field.
//!
//! `QuotientField<F>` is the generic quotient `F[Y]/(m(Y))`; instantiated
//! over the rationals it is a number field, over a prime field it is the
//! finite field F_{p^d} used by the Frobenius instantiation of the
//! conjugate-product machinery.

use alloc::vec::Vec;

use crate::arith::{fingerprint, Field, Rational, Rationals};
use crate::error::{Error, Result};
use crate::factor_qq;
use crate::linalg::{self, DependencyFinder};
use crate::poly::{self, Poly};

/// Upper bound on the degree of any extension constructed here; splitting
/// fields of quartics reach 24, and nothing at desk scale goes beyond.
pub const MAX_EXTENSION_DEGREE: usize = 24;

/// The field `F[Y]/(modulus)` for a monic irreducible modulus.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuotientField<F: Field> {
    base: F,
    modulus: Poly<F::Elem>,
    tag: u64,
}

/// An element of a [`QuotientField`]: coordinates in the power basis
/// `1, y, ..., y^(d-1)`, tagged with the fingerprint of the owning field
/// so cross-field operations are caught rather than silently coerced.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct QElem<E> {
    tag: u64,
    coords: Vec<E>,
}

impl<E> QElem<E> {
    pub fn coords(&self) -> &[E] {
        &self.coords
    }
}

/// A number field Q(gamma).
pub type NumberField = QuotientField<Rationals>;

/// An element of a number field.
pub type NFElement = QElem<Rational>;

impl<F: Field> QuotientField<F> {
    /// Presents `F[Y]/(modulus)` without verifying irreducibility; the
    /// caller guarantees the modulus is monic and irreducible over `F`.
    pub(crate) fn new_unchecked(base: F, modulus: Poly<F::Elem>) -> Self {
        debug_assert!(poly::is_monic(&base, &modulus));
        debug_assert!(modulus.degree().is_some_and(|d| d >= 1));
        let tag = fingerprint(&modulus);
        QuotientField { base, modulus, tag }
    }

    pub fn base(&self) -> &F {
        &self.base
    }

    pub fn modulus(&self) -> &Poly<F::Elem> {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().expect("modulus is nonconstant")
    }

    /// The class of `Y`, i.e. the generator of the extension.
    pub fn generator(&self) -> QElem<F::Elem> {
        self.from_poly(&poly::x(&self.base))
    }

    pub fn from_base(&self, c: F::Elem) -> QElem<F::Elem> {
        self.from_poly(&poly::constant(&self.base, c))
    }

    /// Reduces a polynomial in the generator to an element.
    pub fn from_poly(&self, a: &Poly<F::Elem>) -> QElem<F::Elem> {
        let r = poly::rem(&self.base, a, &self.modulus).expect("modulus nonzero");
        let mut coords = r.into_coeffs();
        coords.resize(self.degree(), self.base.zero());
        QElem { tag: self.tag, coords }
    }

    /// The coordinate polynomial of an element (trailing zeros trimmed).
    pub fn to_poly(&self, a: &QElem<F::Elem>) -> Poly<F::Elem> {
        self.check(a);
        poly::from_coeffs(&self.base, a.coords.clone())
    }

    /// The base-field value of an element, if it has one.
    pub fn to_base(&self, a: &QElem<F::Elem>) -> Option<F::Elem> {
        self.check(a);
        a.coords[1..]
            .iter()
            .all(|c| self.base.is_zero(c))
            .then(|| a.coords[0].clone())
    }

    pub fn is_member(&self, a: &QElem<F::Elem>) -> bool {
        a.tag == self.tag && a.coords.len() == self.degree()
    }

    fn check(&self, a: &QElem<F::Elem>) {
        assert!(self.is_member(a), "element does not belong to this field");
    }

    fn ensure_member(&self, a: &QElem<F::Elem>) -> Result<()> {
        if self.is_member(a) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    /// Checked product; [`Error::FieldMismatch`] on foreign elements.
    pub fn try_mul(&self, a: &QElem<F::Elem>, b: &QElem<F::Elem>) -> Result<QElem<F::Elem>> {
        self.ensure_member(a)?;
        self.ensure_member(b)?;
        Ok(self.mul(a, b))
    }

    /// Checked inverse; [`Error::FieldMismatch`] or [`Error::DivisionByZero`].
    pub fn try_inverse(&self, a: &QElem<F::Elem>) -> Result<QElem<F::Elem>> {
        self.ensure_member(a)?;
        self.inv(a)
    }

    pub fn try_div(&self, a: &QElem<F::Elem>, b: &QElem<F::Elem>) -> Result<QElem<F::Elem>> {
        Ok(self.mul(a, &self.try_inverse(b)?))
    }

    /// Evaluates the coordinate polynomial of `a` at `image`. This is the
    /// action of the field homomorphism sending the generator to `image`.
    pub fn substitute(&self, a: &QElem<F::Elem>, image: &QElem<F::Elem>) -> QElem<F::Elem> {
        self.check(a);
        self.check(image);
        let mut acc = self.zero();
        for c in a.coords.iter().rev() {
            acc = self.add(&self.mul(&acc, image), &self.from_base(c.clone()));
        }
        acc
    }

    /// Lifts a base-field polynomial coefficientwise.
    pub fn lift_poly(&self, a: &Poly<F::Elem>) -> Poly<QElem<F::Elem>> {
        poly::from_coeffs(
            self,
            a.coeffs().iter().map(|c| self.from_base(c.clone())).collect(),
        )
    }

    /// Projects a polynomial back to the base field; `None` if some
    /// coefficient lies outside it.
    pub fn project_poly(&self, a: &Poly<QElem<F::Elem>>) -> Option<Poly<F::Elem>> {
        let coeffs: Option<Vec<F::Elem>> = a.coeffs().iter().map(|c| self.to_base(c)).collect();
        Some(poly::from_coeffs(&self.base, coeffs?))
    }
}

impl<F: Field> Field for QuotientField<F> {
    type Elem = QElem<F::Elem>;

    fn zero(&self) -> Self::Elem {
        QElem { tag: self.tag, coords: alloc::vec![self.base.zero(); self.degree()] }
    }

    fn one(&self) -> Self::Elem {
        self.from_base(self.base.one())
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_base(self.base.from_i64(n))
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.check(a);
        self.check(b);
        let coords = a
            .coords
            .iter()
            .zip(&b.coords)
            .map(|(x, y)| self.base.add(x, y))
            .collect();
        QElem { tag: self.tag, coords }
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.check(a);
        QElem { tag: self.tag, coords: a.coords.iter().map(|x| self.base.neg(x)).collect() }
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.check(a);
        self.check(b);
        let prod = poly::mul(&self.base, &self.to_poly(a), &self.to_poly(b));
        self.from_poly(&prod)
    }

    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem> {
        self.check(a);
        let ap = self.to_poly(a);
        if ap.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // Extended Euclid in F[Y]: s*a + t*modulus = 1 since the modulus
        // is irreducible and a is a nonzero residue.
        let (g, s, _) = poly::extended_gcd(&self.base, &ap, &self.modulus)?;
        debug_assert!(g.is_constant(), "modulus must be irreducible");
        Ok(self.from_poly(&s))
    }

    fn characteristic(&self) -> Option<u64> {
        self.base.characteristic()
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        self.check(a);
        a.coords.iter().all(|c| self.base.is_zero(c))
    }
}

// ---------------------------------------------------------------------------
// Number-field specifics
// ---------------------------------------------------------------------------

/// Result of adjoining a root: the collapsed absolute field Q(gamma')
/// with gamma' = gamma + t*beta, and the images of the old generator and
/// of the adjoined root inside it.
#[derive(Clone, Debug)]
pub struct AdjoinedRoot {
    pub field: NumberField,
    pub gamma_image: NFElement,
    pub beta_image: NFElement,
    pub t: u32,
}

impl NumberField {
    /// Presents Q(gamma) by a monic irreducible minimal polynomial; the
    /// irreducibility hypothesis is verified.
    pub fn new(minpoly: Poly<Rational>, rng_seed: u64) -> Result<Self> {
        if minpoly.degree().is_none_or(|d| d == 0) {
            return Err(Error::ConstantPolynomial);
        }
        if !poly::is_monic(&Rationals, &minpoly) {
            return Err(Error::NotMonic);
        }
        if minpoly.degree() != Some(1) {
            let fs = factor_qq::factor_over_q(&minpoly, rng_seed)?;
            if fs.len() != 1 || fs[0].1 != 1 {
                return Err(Error::NotIrreducible);
            }
        }
        Ok(QuotientField::new_unchecked(Rationals, minpoly))
    }

    /// The rational field presented as a degree-1 extension; the base of
    /// coefficient-field towers.
    pub fn rationals() -> Self {
        QuotientField::new_unchecked(Rationals, poly::x(&Rationals))
    }

    /// The monic minimal polynomial of an element over Q, found as the
    /// first linear dependence among the powers 1, a, a^2, ...
    pub fn minimal_polynomial(&self, a: &NFElement) -> Poly<Rational> {
        self.check(a);
        let mut finder = DependencyFinder::new(Rationals, self.degree());
        let mut power = self.one();
        for k in 0..=self.degree() {
            if let Some(dep) = finder
                .push(power.coords.clone())
                .expect("rational elimination cannot fail")
            {
                // a^k = sum(dep[i] * a^i): minimal polynomial is
                // X^k - sum dep[i] X^i.
                let mut coeffs: Vec<Rational> =
                    dep.iter().map(|c| Rationals.neg(c)).collect();
                coeffs.push(Rational::one());
                let mp = poly::from_coeffs(&Rationals, coeffs);
                debug_assert_eq!(mp.degree(), Some(k));
                debug_assert_eq!(self.degree() % k.max(1), 0);
                return mp;
            }
            power = self.mul(&power, a);
        }
        unreachable!("the powers of an element cannot stay independent past the degree")
    }

    /// Norm from the full presented field: the resultant of the minimal
    /// polynomial of the field with the coordinate polynomial, equal to
    /// the product of all conjugates of the element.
    pub fn norm(&self, a: &NFElement) -> Rational {
        self.check(a);
        let ap = self.to_poly(a);
        if ap.is_zero() {
            return Rational::zero();
        }
        poly::resultant(&Rationals, &self.modulus, &ap).expect("both nonzero")
    }

    /// Adjoins a root of `rel_minpoly` (monic, irreducible over this
    /// field) and collapses the tower to a single absolute extension
    /// Q(gamma + t*beta) for the smallest `t >= 1` that works; `t` is
    /// bounded by the number of pairs of conjugate sums, at most
    /// `C(24, 2) + 1` at the degree cap.
    pub fn adjoin_root(&self, rel_minpoly: &Poly<NFElement>) -> Result<AdjoinedRoot> {
        let r = rel_minpoly
            .degree()
            .ok_or(Error::ZeroPolynomial)?;
        if r == 0 {
            return Err(Error::ConstantPolynomial);
        }
        debug_assert!(poly::is_monic(self, rel_minpoly));
        for c in rel_minpoly.coeffs() {
            self.check(c);
        }
        if r == 1 {
            // The root already lies in this field.
            let beta = self.neg(&rel_minpoly.coeffs()[0]);
            return Ok(AdjoinedRoot {
                field: self.clone(),
                gamma_image: self.generator(),
                beta_image: beta,
                t: 0,
            });
        }
        let d = self.degree();
        let new_degree = d * r;
        if new_degree > MAX_EXTENSION_DEGREE {
            return Err(Error::DegreeCapExceeded(new_degree));
        }

        // Coordinate polynomials of the relative minimal polynomial's
        // coefficients: q(Y, X) = sum_j chat_j(Y) X^j.
        let chat: Vec<Poly<Rational>> = rel_minpoly
            .coeffs()
            .iter()
            .map(|c| self.to_poly(c))
            .collect();

        for t in 1..=300u32 {
            let resolvent = self.composite_minimal_polynomial(&chat, r, t, new_degree)?;
            let dr = poly::derivative(&Rationals, &resolvent);
            if !poly::gcd(&Rationals, &resolvent, &dr)?.is_constant() {
                continue;
            }
            // Squarefree resolvent: gamma + t*beta is primitive and the
            // resolvent is its minimal polynomial.
            debug_assert!(poly::is_monic(&Rationals, &resolvent));
            debug_assert_eq!(resolvent.degree(), Some(new_degree));
            let field = QuotientField::new_unchecked(Rationals, resolvent);
            let theta = field.generator();

            // beta is the unique common root of mu(theta - t*W) and of
            // q(theta - t*W, W); extract it from the monic linear gcd.
            let t_elem = field.from_i64(t as i64);
            let shift = poly::from_coeffs(
                &field,
                alloc::vec![theta.clone(), field.neg(&t_elem)],
            );
            let mu_w = poly::compose(&field, &field.lift_rational_poly(&self.modulus), &shift);
            let mut q_w: Poly<NFElement> = Poly::zero();
            for (j, cj) in chat.iter().enumerate() {
                let cj_shift = poly::compose(&field, &field.lift_rational_poly(cj), &shift);
                let term = poly::mul(
                    &field,
                    &cj_shift,
                    &poly::monomial(&field, field.one(), j),
                );
                q_w = poly::add(&field, &q_w, &term);
            }
            let g = poly::gcd(&field, &mu_w, &q_w)?;
            if g.degree() != Some(1) {
                return Err(Error::InternalInconsistency(alloc::format!(
                    "primitive-element gcd has degree {:?}",
                    g.degree()
                )));
            }
            let beta = field.neg(&g.coeffs()[0]);
            let gamma = field.sub(&theta, &field.mul(&t_elem, &beta));
            return Ok(AdjoinedRoot { field, gamma_image: gamma, beta_image: beta, t });
        }
        Err(Error::InternalInconsistency(
            "primitive-element multiplier search exhausted".into(),
        ))
    }

    /// Resultant_Y(mu(Y), t^r * q(Y, (X - Y)/t)) computed by evaluation
    /// and interpolation; monic of degree `expected` in X, with roots
    /// gamma_i + t*beta_ij.
    fn composite_minimal_polynomial(
        &self,
        chat: &[Poly<Rational>],
        r: usize,
        t: u32,
        expected: usize,
    ) -> Result<Poly<Rational>> {
        let qq = Rationals;
        let mut samples: Vec<(Rational, Rational)> = Vec::with_capacity(expected + 1);
        let mut k = 0i64;
        while samples.len() < expected + 1 {
            let x0 = Rational::from_i64(k);
            k = if k > 0 { -k } else { -k + 1 };
            // P(Y) = sum_j chat_j(Y) * (x0 - Y)^j * t^(r - j)
            let lin = poly::from_coeffs(&qq, alloc::vec![x0.clone(), qq.from_i64(-1)]);
            let mut lin_pow = poly::one(&qq);
            let mut p_y: Poly<Rational> = Poly::zero();
            for (j, cj) in chat.iter().enumerate() {
                let t_pow = qq.pow(&qq.from_i64(t as i64), (r - j) as u64);
                let term = poly::scale(&qq, &poly::mul(&qq, cj, &lin_pow), &t_pow);
                p_y = poly::add(&qq, &p_y, &term);
                if j + 1 < chat.len() {
                    lin_pow = poly::mul(&qq, &lin_pow, &lin);
                }
            }
            let value = if p_y.is_zero() {
                Rational::zero()
            } else {
                poly::resultant(&qq, &self.modulus, &p_y)?
            };
            samples.push((x0, value));
        }
        poly::interpolate(&qq, &samples)
    }

    fn lift_rational_poly(&self, a: &Poly<Rational>) -> Poly<NFElement> {
        self.lift_poly(a)
    }

    /// Trager factorization over the number field: squarefree split,
    /// shift by a multiple of the generator until the norm is squarefree,
    /// factor the norm over Q, and pull the factors back by gcd.
    pub fn trager_factor(
        &self,
        a: &Poly<NFElement>,
        rng_seed: u64,
    ) -> Result<Vec<(Poly<NFElement>, usize)>> {
        if a.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut out: Vec<(Poly<NFElement>, usize)> = Vec::new();
        for (part, mult) in poly::squarefree_decomposition(self, a)? {
            for factor in self.trager_squarefree(&part, rng_seed)? {
                out.push((factor, mult));
            }
        }
        out.sort_by(|(f1, _), (f2, _)| f1.canonical_cmp(f2));
        Ok(out)
    }

    fn trager_squarefree(
        &self,
        part: &Poly<NFElement>,
        rng_seed: u64,
    ) -> Result<Vec<Poly<NFElement>>> {
        debug_assert!(poly::is_monic(self, part));
        let deg = part.degree().expect("nonzero");
        if deg == 0 {
            return Ok(Vec::new());
        }
        let qq = Rationals;
        for shift_mult in 0u32.. {
            // b(X) = part(X - s*gamma)
            let gamma_s = self.from_poly(&poly::from_i64(&qq, &[0, -(shift_mult as i64)]));
            let shift = poly::from_coeffs(self, alloc::vec![gamma_s, self.one()]);
            let b = poly::compose(self, part, &shift);

            let norm = self.poly_norm(&b)?;
            let dn = poly::derivative(&qq, &norm);
            if dn.is_zero() || !poly::gcd(&qq, &norm, &dn)?.is_constant() {
                continue;
            }
            let norm_factors = factor_qq::factor_over_q(&norm, rng_seed)?;
            debug_assert!(norm_factors.iter().all(|(_, m)| *m == 1));
            if norm_factors.len() == 1 {
                return Ok(alloc::vec![part.clone()]);
            }
            let unshift = poly::from_coeffs(
                self,
                alloc::vec![
                    self.from_poly(&poly::from_i64(&qq, &[0, shift_mult as i64])),
                    self.one()
                ],
            );
            let mut factors = Vec::with_capacity(norm_factors.len());
            for (ni, _) in &norm_factors {
                let ni_lifted = self.lift_rational_poly(ni);
                let gi = poly::gcd(self, &b, &ni_lifted)?;
                debug_assert!(gi.degree().is_some_and(|d| d >= 1));
                factors.push(poly::compose(self, &gi, &unshift));
            }
            // Multiply-back exactness of the squarefree split.
            debug_assert_eq!(
                factors
                    .iter()
                    .fold(poly::one(self), |acc, f| poly::mul(self, &acc, f)),
                *part
            );
            return Ok(factors);
        }
        unreachable!("shift search terminates for squarefree input")
    }

    /// The norm of a polynomial: Res_Y(mu(Y), b(Y, X)), a rational
    /// polynomial of degree deg(b) * [field : Q], computed by evaluation
    /// and interpolation.
    fn poly_norm(&self, b: &Poly<NFElement>) -> Result<Poly<Rational>> {
        let qq = Rationals;
        let coeff_polys: Vec<Poly<Rational>> =
            b.coeffs().iter().map(|c| self.to_poly(c)).collect();
        let expected = b.degree().expect("nonzero") * self.degree();
        let mut samples: Vec<(Rational, Rational)> = Vec::with_capacity(expected + 1);
        let mut k = 0i64;
        while samples.len() < expected + 1 {
            let x0 = Rational::from_i64(k);
            k = if k > 0 { -k } else { -k + 1 };
            // P(Y) = sum_j coeff_j(Y) * x0^j
            let mut p_y: Poly<Rational> = Poly::zero();
            let mut x_pow = Rational::one();
            for (j, cj) in coeff_polys.iter().enumerate() {
                p_y = poly::add(&qq, &p_y, &poly::scale(&qq, cj, &x_pow));
                if j + 1 < coeff_polys.len() {
                    x_pow = qq.mul(&x_pow, &x0);
                }
            }
            let value = if p_y.is_zero() {
                Rational::zero()
            } else {
                poly::resultant(&qq, &self.modulus, &p_y)?
            };
            samples.push((x0, value));
        }
        poly::interpolate(&qq, &samples)
    }

    /// Expresses `a` in the power basis of the subfield generated by
    /// `embed` (of the stated degree), if it lies there.
    pub(crate) fn express_in_subfield(
        &self,
        embed: &NFElement,
        sub_degree: usize,
        a: &NFElement,
    ) -> Result<Option<Vec<Rational>>> {
        self.check(embed);
        self.check(a);
        let mut columns = Vec::with_capacity(sub_degree);
        let mut power = self.one();
        for _ in 0..sub_degree {
            columns.push(power.coords.clone());
            power = self.mul(&power, embed);
        }
        linalg::solve(&Rationals, &columns, &a.coords)
    }
}
