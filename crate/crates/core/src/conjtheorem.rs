//! Conjugates of a divisor of an irreducible separable polynomial, their
//! product, and the verified identities tying them together.
//!
//! Setting: `f` irreducible and separable over a base field `K`, and `g`
//! a divisor of `f` whose coefficients lie in the splitting field `M`.
//! The distinct conjugates `g^sigma` under `Gal(M/K)` are enumerated,
//! their count `m` is compared against the independently computed degree
//! `[L:K]` of the coefficient field `L = K(coefficients of g)`, and the
//! product `h` of the distinct conjugates is certified to equal
//! `c * f^n` coefficient-exactly with `n = m * deg(g) / deg(f)`.
//!
//! Two instantiations share the machinery: `K = Q` with the splitting
//! module providing `M` and the Galois group, and `K = F_p` where `M` is
//! `F_p[Y]/(f)` and the group is generated by the Frobenius map.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use crate::arith::{lcm_u64, Field, PrimeField, Rationals};
use crate::error::{Error, Result};
use crate::factor_fp;
use crate::numfield::{NFElement, NumberField, QElem, QuotientField};
use crate::poly::{self, Poly};
use crate::splitting::{automorphisms, SplittingField};

/// Caps for the prime-field instantiation.
pub const MAX_FP_DEGREE: usize = 12;
pub const MAX_FP_PRIME: u64 = 97;

/// How the divisor `g` is provided.
#[derive(Clone, Debug)]
pub enum DivisorSpec<E> {
    /// Product of `X - r_i` over a nonempty subset of root indices;
    /// always a valid monic divisor since `f` splits with distinct roots.
    RootIndices(Vec<usize>),
    /// Explicit coefficient list over the splitting field; divisibility
    /// is then checked by exact division.
    Explicit(Poly<E>),
}

/// The base-field-specific pieces of the verification: the independent
/// computation of `[L:K]` and the corollary's irreducibility test.
pub trait ConjugacyBase: Field + Sized {
    /// Degree of `K(elems)` over `K`, computed without any reference to
    /// conjugate counting.
    fn coefficient_field_degree(
        ext: &QuotientField<Self>,
        elems: &[QElem<Self::Elem>],
        rng_seed: u64,
    ) -> Result<usize>;

    /// Whether `g` (with the given roots inside the extension) is
    /// irreducible over `L = K(coefficients of g)`.
    fn divisor_irreducible_over_l(
        ext: &QuotientField<Self>,
        g: &Poly<QElem<Self::Elem>>,
        g_roots: &[QElem<Self::Elem>],
        rng_seed: u64,
    ) -> Result<bool>;
}

/// A validated instance of the hypothesis block: base field, `f`, the
/// splitting structure with its automorphism images, and the divisor.
#[derive(Clone, Debug)]
pub struct ConjugateSetting<F: ConjugacyBase> {
    ext: QuotientField<F>,
    f: Poly<F::Elem>,
    roots: Vec<QElem<F::Elem>>,
    gamma_images: Vec<QElem<F::Elem>>,
    g: Poly<QElem<F::Elem>>,
    rng_seed: u64,
}

/// Outcome of the corollary check.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CorollaryStatus {
    NotChecked,
    Holds,
    Failed,
    NotApplicable(String),
}

/// Pass/fail record for each certified assertion.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TheoremAssertions {
    /// Conjugate count equals the independently computed `[L:K]`.
    pub m_equals_l_degree: bool,
    /// Every coefficient of `h` reduced exactly to the base field.
    pub h_in_base_field: bool,
    /// `m * deg(g)` is divisible by `deg(f)`.
    pub n_integral: bool,
    /// `h = c * f^n`, coefficient by coefficient.
    pub h_equals_c_f_n: bool,
    /// For monic `g` the constant must be 1; `None` when `g` is not monic.
    pub c_is_one_for_monic: Option<bool>,
}

impl TheoremAssertions {
    pub fn all_pass(&self) -> bool {
        self.m_equals_l_degree
            && self.h_in_base_field
            && self.n_integral
            && self.h_equals_c_f_n
            && self.c_is_one_for_monic.unwrap_or(true)
    }
}

/// The outcome record of a verification run.
#[derive(Clone, Debug)]
pub struct VerificationReport<F: Field> {
    /// Number of distinct conjugates of `g`.
    pub m: usize,
    /// `[L:K]`, computed independently of `m`.
    pub l_degree: usize,
    /// The exponent `m * deg(g) / deg(f)` (0 when not integral).
    pub n: usize,
    /// The base-field constant, the product of the conjugates' leading
    /// coefficients.
    pub c: F::Elem,
    /// The product of the distinct conjugates, reduced to the base field.
    pub h: Poly<F::Elem>,
    /// The distinct conjugates themselves, canonically sorted.
    pub conjugates: Vec<Poly<QElem<F::Elem>>>,
    pub assertions: TheoremAssertions,
    pub corollary: CorollaryStatus,
}

impl<F: Field> VerificationReport<F> {
    /// True when every applicable assertion holds (a corollary marked
    /// not applicable does not fail the report).
    pub fn pass(&self) -> bool {
        self.assertions.all_pass() && self.corollary != CorollaryStatus::Failed
    }
}

/// The monic divisor with the given root subset: product of `X - r_i`.
pub fn divisor_from_roots<F: Field>(
    ext: &QuotientField<F>,
    roots: &[QElem<F::Elem>],
    indices: &[usize],
) -> Result<Poly<QElem<F::Elem>>> {
    if indices.is_empty() {
        return Err(Error::EmptySet);
    }
    let distinct: BTreeSet<usize> = indices.iter().copied().collect();
    let mut g = poly::one(ext);
    for &i in &distinct {
        let r = roots.get(i).ok_or(Error::IndexOutOfRange(i))?;
        let linear = poly::from_coeffs(ext, alloc::vec![ext.neg(r), ext.one()]);
        g = poly::mul(ext, &g, &linear);
    }
    Ok(g)
}

impl<F: ConjugacyBase> ConjugateSetting<F> {
    fn build(
        ext: QuotientField<F>,
        f: Poly<F::Elem>,
        roots: Vec<QElem<F::Elem>>,
        gamma_images: Vec<QElem<F::Elem>>,
        divisor: &DivisorSpec<QElem<F::Elem>>,
        rng_seed: u64,
    ) -> Result<Self> {
        debug_assert!(poly::is_monic(ext.base(), &f));
        let g = match divisor {
            DivisorSpec::RootIndices(indices) => divisor_from_roots(&ext, &roots, indices)?,
            DivisorSpec::Explicit(g) => {
                for c in g.coeffs() {
                    if !ext.is_member(c) {
                        return Err(Error::FieldMismatch);
                    }
                }
                g.clone()
            }
        };
        match g.degree() {
            None | Some(0) => return Err(Error::DegenerateDivisor),
            Some(_) => {}
        }
        let f_lifted = ext.lift_poly(&f);
        if !poly::divides(&ext, &g, &f_lifted)? {
            return Err(Error::HypothesisViolated("g does not divide f".into()));
        }
        Ok(ConjugateSetting { ext, f, roots, gamma_images, g, rng_seed })
    }

    pub fn extension(&self) -> &QuotientField<F> {
        &self.ext
    }

    pub fn f(&self) -> &Poly<F::Elem> {
        &self.f
    }

    pub fn g(&self) -> &Poly<QElem<F::Elem>> {
        &self.g
    }

    pub fn roots(&self) -> &[QElem<F::Elem>] {
        &self.roots
    }

    /// Order of the acting automorphism group.
    pub fn group_order(&self) -> usize {
        self.gamma_images.len()
    }

    fn apply(&self, w: &QElem<F::Elem>, g: &Poly<QElem<F::Elem>>) -> Poly<QElem<F::Elem>> {
        poly::from_coeffs(
            &self.ext,
            g.coeffs().iter().map(|c| self.ext.substitute(c, w)).collect(),
        )
    }

    /// The distinct conjugates `{g^sigma}`, de-duplicated by exact
    /// equality and canonically sorted.
    pub fn conjugates(&self) -> Vec<Poly<QElem<F::Elem>>> {
        let set: BTreeSet<Poly<QElem<F::Elem>>> = self
            .gamma_images
            .iter()
            .map(|w| self.apply(w, &self.g))
            .collect();
        set.into_iter().collect()
    }

    /// `[L:K]` for `L = K(coefficients of g)`, computed independently of
    /// the conjugate count.
    pub fn coefficient_field_degree(&self) -> Result<usize> {
        F::coefficient_field_degree(&self.ext, self.g.coeffs(), self.rng_seed)
    }

    /// Product of the distinct conjugates, with every coefficient reduced
    /// exactly to the base field. The reduction is asserted, not assumed:
    /// a coefficient outside the base field is an internal bug and
    /// surfaces as [`Error::NotInBaseField`].
    pub fn conjugate_product(&self) -> Result<Poly<F::Elem>> {
        let mut h = poly::one(&self.ext);
        for conj in self.conjugates() {
            h = poly::mul(&self.ext, &h, &conj);
        }
        self.ext.project_poly(&h).ok_or(Error::NotInBaseField)
    }

    /// Runs the full identity check: `m = [L:K]`, `h` lies in the base
    /// field, `n = m * deg(g) / deg(f)` is an integer, and `h = c * f^n`.
    pub fn verify_theorem(&self) -> Result<VerificationReport<F>> {
        self.recheck_hypotheses()?;

        let base = self.ext.base().clone();
        let conjugates = self.conjugates();
        let m = conjugates.len();
        let l_degree = self.coefficient_field_degree()?;

        let mut h_ext = poly::one(&self.ext);
        let mut c_ext = self.ext.one();
        for conj in &conjugates {
            h_ext = poly::mul(&self.ext, &h_ext, conj);
            c_ext = self
                .ext
                .mul(&c_ext, conj.leading_coefficient().expect("nonzero conjugate"));
        }
        let h = self.ext.project_poly(&h_ext).ok_or(Error::NotInBaseField)?;
        let c = self.ext.to_base(&c_ext).ok_or(Error::NotInBaseField)?;

        let deg_f = self.f.degree().expect("nonzero");
        let deg_g = self.g.degree().expect("nonzero");
        debug_assert_eq!(h.degree(), Some(m * deg_g));
        let n_integral = (m * deg_g).is_multiple_of(deg_f);
        let n = if n_integral { m * deg_g / deg_f } else { 0 };

        let h_equals_c_f_n = n_integral && {
            let f_pow = poly::pow(&base, &self.f, n);
            h == poly::scale(&base, &f_pow, &c)
        };

        let c_is_one_for_monic = poly::is_monic(&self.ext, &self.g)
            .then(|| base.is_one(&c));

        let assertions = TheoremAssertions {
            m_equals_l_degree: m == l_degree,
            h_in_base_field: true,
            n_integral,
            h_equals_c_f_n,
            c_is_one_for_monic,
        };
        Ok(VerificationReport {
            m,
            l_degree,
            n,
            c,
            h,
            conjugates,
            assertions,
            corollary: CorollaryStatus::NotChecked,
        })
    }

    /// Runs the theorem check and then the corollary: when `g` is monic
    /// and irreducible over `L` and `f` has a primitive root, `h = f`.
    /// When a hypothesis fails the report is marked not applicable
    /// rather than failed.
    pub fn verify_corollary(&self) -> Result<VerificationReport<F>> {
        let mut report = self.verify_theorem()?;

        if !poly::is_monic(&self.ext, &self.g) {
            report.corollary =
                CorollaryStatus::NotApplicable("g is not monic".into());
            return Ok(report);
        }
        // f has a primitive root exactly when one root generates all of
        // M; every root of an irreducible f generates a subfield of
        // degree deg(f), so this reads [M:K] = deg(f).
        let deg_f = self.f.degree().expect("nonzero");
        if self.ext.degree() != deg_f {
            report.corollary = CorollaryStatus::NotApplicable(alloc::format!(
                "f has no primitive root: [M:K] = {} but deg f = {}",
                self.ext.degree(),
                deg_f
            ));
            return Ok(report);
        }
        let g_roots: Vec<QElem<F::Elem>> = self
            .roots
            .iter()
            .filter(|r| self.ext.is_zero(&poly::eval(&self.ext, &self.g, r)))
            .cloned()
            .collect();
        debug_assert_eq!(g_roots.len(), self.g.degree().unwrap());
        if !F::divisor_irreducible_over_l(&self.ext, &self.g, &g_roots, self.rng_seed)? {
            report.corollary =
                CorollaryStatus::NotApplicable("g is not irreducible over L".into());
            return Ok(report);
        }

        report.corollary = if report.n == 1 && report.h == self.f && report.pass() {
            CorollaryStatus::Holds
        } else {
            CorollaryStatus::Failed
        };
        Ok(report)
    }

    fn recheck_hypotheses(&self) -> Result<()> {
        let base = self.ext.base();
        let df = poly::derivative(base, &self.f);
        if df.is_zero() || !poly::gcd(base, &self.f, &df)?.is_constant() {
            return Err(Error::HypothesisViolated("f is not separable".into()));
        }
        let f_lifted = self.ext.lift_poly(&self.f);
        if !poly::divides(&self.ext, &self.g, &f_lifted)? {
            return Err(Error::HypothesisViolated("g does not divide f".into()));
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Rational instantiation
// ---------------------------------------------------------------------------

impl ConjugateSetting<Rationals> {
    /// Builds the rational-field setting from a splitting field; the
    /// automorphism group is enumerated from the splitting structure.
    pub fn over_rationals(
        m: &SplittingField,
        divisor: &DivisorSpec<NFElement>,
        rng_seed: u64,
    ) -> Result<Self> {
        let autos = automorphisms(m)?;
        let gamma_images = autos.iter().map(|a| a.gamma_image().clone()).collect();
        Self::build(
            m.field().clone(),
            m.defining_polynomial().clone(),
            m.roots().to_vec(),
            gamma_images,
            divisor,
            rng_seed,
        )
    }
}

/// Presents `L = Q(elems)` as an absolute number field together with the
/// image of its generator inside the ambient field, by iterating the
/// primitive-element collapse over the elements.
pub(crate) fn present_coefficient_field(
    ext: &NumberField,
    elems: &[NFElement],
    rng_seed: u64,
) -> Result<(NumberField, NFElement)> {
    let mut l = NumberField::rationals();
    let mut embed = ext.zero();
    for a in elems {
        let pa = ext.minimal_polynomial(a);
        if pa.degree() == Some(1) {
            continue;
        }
        let rel = if l.degree() == 1 {
            l.lift_poly(&pa)
        } else {
            // Relative minimal polynomial: the irreducible factor of the
            // absolute one over L that vanishes at a (under the
            // embedding of L into the ambient field).
            let factors = l.trager_factor(&l.lift_poly(&pa), rng_seed)?;
            let mut found = None;
            for (fac, _) in &factors {
                let value = eval_mapped(ext, &l, fac, &embed, a);
                if ext.is_zero(&value) {
                    found = Some(fac.clone());
                    break;
                }
            }
            found.ok_or_else(|| {
                Error::InternalInconsistency(
                    "no factor of the minimal polynomial vanishes at the element".into(),
                )
            })?
        };
        if rel.degree() == Some(1) {
            continue;
        }
        let adjoined = l.adjoin_root(&rel)?;
        // New generator is gamma + t*a, so its image follows the tower.
        let t_a = ext.mul(&ext.from_i64(adjoined.t as i64), a);
        embed = ext.add(&embed, &t_a);
        l = adjoined.field;
    }
    Ok((l, embed))
}

/// Evaluates a polynomial with coefficients in `l` at a point of `ext`,
/// mapping each coefficient through the embedding `l -> ext` first.
fn eval_mapped(
    ext: &NumberField,
    _l: &NumberField,
    fac: &Poly<NFElement>,
    embed: &NFElement,
    point: &NFElement,
) -> NFElement {
    let mut acc = ext.zero();
    for c in fac.coeffs().iter().rev() {
        // Coefficient of l, written in powers of the embedded generator.
        let mut mapped = ext.zero();
        for cc in c.coords().iter().rev() {
            mapped = ext.add(&ext.mul(&mapped, embed), &ext.from_base(cc.clone()));
        }
        acc = ext.add(&ext.mul(&acc, point), &mapped);
    }
    acc
}

impl ConjugacyBase for Rationals {
    fn coefficient_field_degree(
        ext: &QuotientField<Self>,
        elems: &[QElem<Self::Elem>],
        rng_seed: u64,
    ) -> Result<usize> {
        let (l, _) = present_coefficient_field(ext, elems, rng_seed)?;
        Ok(l.degree())
    }

    fn divisor_irreducible_over_l(
        ext: &QuotientField<Self>,
        g: &Poly<QElem<Self::Elem>>,
        _g_roots: &[QElem<Self::Elem>],
        rng_seed: u64,
    ) -> Result<bool> {
        let (l, embed) = present_coefficient_field(ext, g.coeffs(), rng_seed)?;
        if l.degree() == 1 {
            // L = Q: g has rational coefficients.
            let g_q = ext
                .project_poly(g)
                .ok_or_else(|| Error::InternalInconsistency("coefficients not rational".into()))?;
            if g_q.degree() == Some(1) {
                return Ok(true);
            }
            let fs = crate::factor_qq::factor_over_q(&g_q, rng_seed)?;
            return Ok(fs.len() == 1 && fs[0].1 == 1);
        }
        // Express each coefficient of g in the power basis of L.
        let mut coeffs_l = Vec::with_capacity(g.coeffs().len());
        for c in g.coeffs() {
            let coords = ext
                .express_in_subfield(&embed, l.degree(), c)?
                .ok_or_else(|| {
                    Error::InternalInconsistency(
                        "coefficient lies outside its own coefficient field".into(),
                    )
                })?;
            coeffs_l.push(l.from_poly(&poly::from_coeffs(&Rationals, coords)));
        }
        let g_l = poly::from_coeffs(&l, coeffs_l);
        if g_l.degree() == Some(1) {
            return Ok(true);
        }
        let fs = l.trager_factor(&g_l, rng_seed)?;
        Ok(fs.len() == 1 && fs[0].1 == 1)
    }
}

// ---------------------------------------------------------------------------
// Prime-field (Frobenius) instantiation
// ---------------------------------------------------------------------------

/// The finite field `F_p[Y]/(f)` together with its Frobenius-generated
/// Galois structure: roots `Y, Y^p, Y^(p^2), ...` and group images
/// `Frob^k : Y -> Y^(p^k)` for `0 <= k < deg f`.
pub fn frobenius_setting(
    field: &PrimeField,
    f: &Poly<crate::arith::PrimeFieldElement>,
    divisor: &DivisorSpec<QElem<crate::arith::PrimeFieldElement>>,
    rng_seed: u64,
) -> Result<ConjugateSetting<PrimeField>> {
    let p = field.modulus();
    if p > MAX_FP_PRIME {
        return Err(Error::CapExceeded(alloc::format!(
            "p = {p} exceeds the cap {MAX_FP_PRIME}"
        )));
    }
    let deg = f.degree().ok_or(Error::ZeroPolynomial)?;
    if deg == 0 {
        return Err(Error::ConstantPolynomial);
    }
    if deg > MAX_FP_DEGREE {
        return Err(Error::CapExceeded(alloc::format!(
            "deg f = {deg} exceeds the cap {MAX_FP_DEGREE}"
        )));
    }
    if !factor_fp::is_irreducible_mod_p(field, f)? {
        return Err(Error::NotIrreducible);
    }
    let f = poly::monic(field, f)?;
    let ext = QuotientField::new_unchecked(*field, f.clone());

    // Roots are the Frobenius orbit of the generator; the group images
    // are the same elements, identity (k = 0) first.
    let mut roots = Vec::with_capacity(deg);
    let mut r = ext.generator();
    for _ in 0..deg {
        roots.push(r.clone());
        r = ext.pow(&r, p);
    }
    debug_assert_eq!(r, ext.generator());
    let gamma_images = roots.clone();

    ConjugateSetting::build(ext, f, roots, gamma_images, divisor, rng_seed)
}

impl ConjugacyBase for PrimeField {
    fn coefficient_field_degree(
        ext: &QuotientField<Self>,
        elems: &[QElem<Self::Elem>],
        _rng_seed: u64,
    ) -> Result<usize> {
        // The least k fixing every coefficient under Frobenius^k is the
        // lcm of the individual orbit lengths; no linear algebra needed.
        let p = ext.base().modulus();
        let mut k = 1u64;
        for a in elems {
            let mut y = ext.pow(a, p);
            let mut len = 1u64;
            while y != *a {
                y = ext.pow(&y, p);
                len += 1;
            }
            k = lcm_u64(k, len);
        }
        Ok(k as usize)
    }

    fn divisor_irreducible_over_l(
        ext: &QuotientField<Self>,
        g: &Poly<QElem<Self::Elem>>,
        g_roots: &[QElem<Self::Elem>],
        rng_seed: u64,
    ) -> Result<bool> {
        // g is irreducible over L = F_{p^k} exactly when its roots form
        // a single orbit under x -> x^(p^k).
        let k = Self::coefficient_field_degree(ext, g.coeffs(), rng_seed)?;
        let p = ext.base().modulus();
        let frob_l = |x: &QElem<Self::Elem>| {
            let mut y = x.clone();
            for _ in 0..k {
                y = ext.pow(&y, p);
            }
            y
        };
        let root_set: BTreeSet<&QElem<Self::Elem>> = g_roots.iter().collect();
        let mut orbit = BTreeSet::new();
        let mut current = g_roots[0].clone();
        loop {
            orbit.insert(current.clone());
            current = frob_l(&current);
            if orbit.contains(&current) {
                break;
            }
        }
        Ok(orbit.len() == root_set.len() && orbit.iter().all(|x| root_set.contains(x)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{PrimeFieldElement, Rational};
    use crate::splitting::build_splitting_field;

    fn qp(coeffs: &[i64]) -> Poly<Rational> {
        poly::from_i64(&Rationals, coeffs)
    }

    fn setting_q(
        f: &[i64],
        indices: &[usize],
    ) -> ConjugateSetting<Rationals> {
        let m = build_splitting_field(&qp(f), 0).unwrap();
        ConjugateSetting::over_rationals(&m, &DivisorSpec::RootIndices(indices.to_vec()), 0)
            .unwrap()
    }

    #[test]
    fn divisor_from_roots_examples() {
        let m = build_splitting_field(&qp(&[1, 0, 1]), 0).unwrap();
        let ext = m.field();
        // One root: X - r_0.
        let g = divisor_from_roots(ext, m.roots(), &[0]).unwrap();
        let expected =
            poly::from_coeffs(ext, alloc::vec![ext.neg(&m.roots()[0]), ext.one()]);
        assert_eq!(g, expected);
        // All roots: f itself.
        let g_all = divisor_from_roots(ext, m.roots(), &[0, 1]).unwrap();
        assert_eq!(g_all, ext.lift_poly(&qp(&[1, 0, 1])));
        // Errors.
        assert_eq!(
            divisor_from_roots(ext, m.roots(), &[]).unwrap_err(),
            Error::EmptySet
        );
        assert_eq!(
            divisor_from_roots(ext, m.roots(), &[5]).unwrap_err(),
            Error::IndexOutOfRange(5)
        );
    }

    #[test]
    fn conjugates_of_full_divisor_is_singleton() {
        let s = setting_q(&[1, 0, 1], &[0, 1]);
        let conjugates = s.conjugates();
        assert_eq!(conjugates.len(), 1);
        assert_eq!(conjugates[0], s.extension().lift_poly(s.f()));
        assert_eq!(s.coefficient_field_degree().unwrap(), 1);
    }

    #[test]
    fn gaussian_linear_divisor() {
        let s = setting_q(&[1, 0, 1], &[0]);
        let conjugates = s.conjugates();
        assert_eq!(conjugates.len(), 2);
        assert_eq!(s.coefficient_field_degree().unwrap(), 2);
        assert_eq!(s.conjugate_product().unwrap(), qp(&[1, 0, 1]));

        let report = s.verify_theorem().unwrap();
        assert!(report.pass());
        assert_eq!((report.m, report.l_degree, report.n), (2, 2, 1));
        assert_eq!(report.c, Rational::from_i64(1));
        assert_eq!(report.h, qp(&[1, 0, 1]));
    }

    // Indices of the roots {r, r^2} for a chosen primitive fifth root of
    // unity inside the splitting field of the fifth cyclotomic.
    fn zeta_zeta_squared_indices(m: &SplittingField) -> Vec<usize> {
        let ext = m.field();
        let r = m.roots()[0].clone();
        let r2 = ext.mul(&r, &r);
        let j = m.roots().iter().position(|s| *s == r2).unwrap();
        alloc::vec![0, j]
    }

    #[test]
    fn cyclotomic5_pair_gives_n_2() {
        // Orbit oracle by hand: sigma_k sends root set {z, z^2} to
        // {z^k, z^2k}; the four index pairs {1,2},{2,4},{3,1},{4,3} are
        // distinct, so m = 4, and every root of f appears in exactly two
        // of them, so h = f^2.
        let m = build_splitting_field(&qp(&[1, 1, 1, 1, 1]), 0).unwrap();
        let indices = zeta_zeta_squared_indices(&m);
        let s =
            ConjugateSetting::over_rationals(&m, &DivisorSpec::RootIndices(indices), 0).unwrap();

        let report = s.verify_theorem().unwrap();
        assert!(report.pass(), "{report:?}");
        assert_eq!((report.m, report.l_degree, report.n), (4, 4, 2));
        let f = qp(&[1, 1, 1, 1, 1]);
        assert_eq!(report.h, poly::mul(&Rationals, &f, &f));

        // Each root of f lies in exactly two conjugates.
        for r in m.roots() {
            let count = report
                .conjugates
                .iter()
                .filter(|g| m.field().is_zero(&poly::eval(m.field(), g, r)))
                .count();
            assert_eq!(count, 2);
        }

        // Hand expansion of the divisor: for roots {r, r^2} it is
        // X^2 - (r + r^2) X + r^3, and the constant term r^3 generates
        // the whole field, so the independent degree computation sees 4.
        let ext = m.field();
        let g = s.g();
        let r = &m.roots()[0];
        let r2 = ext.mul(r, r);
        let r3 = ext.mul(&r2, r);
        assert_eq!(g.coeffs()[0], r3);
        assert_eq!(g.coeffs()[1], ext.neg(&ext.add(r, &r2)));
        assert_eq!(ext.minimal_polynomial(&g.coeffs()[0]).degree(), Some(4));
    }

    #[test]
    fn corollary_on_cyclotomic5_inverse_pair() {
        // g with roots {z, z^4 = z^-1} has coefficient field Q(z + z^-1)
        // of degree 2; the corollary applies and h = f.
        let m = build_splitting_field(&qp(&[1, 1, 1, 1, 1]), 0).unwrap();
        let ext = m.field();
        let r = m.roots()[0].clone();
        let r4 = ext.inv(&r).unwrap();
        let j = m.roots().iter().position(|s| *s == r4).unwrap();
        let s = ConjugateSetting::over_rationals(
            &m,
            &DivisorSpec::RootIndices(alloc::vec![0, j]),
            0,
        )
        .unwrap();

        let report = s.verify_corollary().unwrap();
        assert_eq!(report.corollary, CorollaryStatus::Holds);
        assert_eq!((report.m, report.l_degree, report.n), (2, 2, 1));
        assert_eq!(report.h, qp(&[1, 1, 1, 1, 1]));
        // The middle coefficient z + z^4 satisfies X^2 + X - 1
        // (hand check: z + z^-1 = (-1 + sqrt5)/2).
        let mid = &s.g().coeffs()[1];
        let mp = ext.minimal_polynomial(&ext.neg(mid));
        assert_eq!(mp, qp(&[-1, 1, 1]));
    }

    #[test]
    fn corollary_not_applicable_without_primitive_root() {
        // X^3 - 2: [M:Q] = 6 but deg f = 3, so no root is primitive.
        let s = setting_q(&[-2, 0, 0, 1], &[0]);
        let report = s.verify_corollary().unwrap();
        assert!(matches!(report.corollary, CorollaryStatus::NotApplicable(_)));
        // The theorem part still passes.
        assert!(report.assertions.all_pass());
        assert_eq!((report.m, report.l_degree, report.n), (3, 3, 1));
    }

    #[test]
    fn two_root_divisor_of_cubic_gives_n_2() {
        // For f = X^3 - 2 and g a product of two roots, the coefficient
        // field is the degree-3 field of the omitted root, so m = 3 and
        // h = f^2.
        let s = setting_q(&[-2, 0, 0, 1], &[0, 1]);
        let report = s.verify_theorem().unwrap();
        assert!(report.pass());
        assert_eq!((report.m, report.l_degree, report.n), (3, 3, 2));
        let f = qp(&[-2, 0, 0, 1]);
        assert_eq!(report.h, poly::mul(&Rationals, &f, &f));
    }

    #[test]
    fn orbit_stability_under_every_automorphism() {
        let m = build_splitting_field(&qp(&[1, 1, 1, 1, 1]), 0).unwrap();
        let indices = zeta_zeta_squared_indices(&m);
        let s =
            ConjugateSetting::over_rationals(&m, &DivisorSpec::RootIndices(indices), 0).unwrap();
        let conjugates = s.conjugates();
        for w in &s.gamma_images {
            let mut mapped: Vec<_> = conjugates.iter().map(|g| s.apply(w, g)).collect();
            mapped.sort();
            assert_eq!(mapped, conjugates);
        }
    }

    #[test]
    fn explicit_divisor_entry() {
        let m = build_splitting_field(&qp(&[1, 0, 1]), 0).unwrap();
        let ext = m.field().clone();
        // Explicit g = X - r_0, non-monic variant 2X - 2r_0 also divides.
        let r = m.roots()[0].clone();
        let g = poly::from_coeffs(&ext, alloc::vec![ext.neg(&r), ext.one()]);
        let doubled = poly::scale(&ext, &g, &ext.from_i64(2));
        let s = ConjugateSetting::over_rationals(&m, &DivisorSpec::Explicit(doubled), 0).unwrap();
        let report = s.verify_theorem().unwrap();
        assert!(report.pass());
        assert_eq!(report.m, 2);
        // c = 2 * 2 = 4, h = 4 * f.
        assert_eq!(report.c, Rational::from_i64(4));
        assert_eq!(report.assertions.c_is_one_for_monic, None);
        assert_eq!(
            report.h,
            poly::scale(&Rationals, &qp(&[1, 0, 1]), &Rational::from_i64(4))
        );
    }

    #[test]
    fn explicit_divisor_must_divide() {
        let m = build_splitting_field(&qp(&[1, 0, 1]), 0).unwrap();
        let ext = m.field().clone();
        let bad = poly::from_coeffs(&ext, alloc::vec![ext.one(), ext.one()]); // X + 1
        let err =
            ConjugateSetting::over_rationals(&m, &DivisorSpec::Explicit(bad), 0).unwrap_err();
        assert_eq!(err, Error::HypothesisViolated("g does not divide f".into()));
    }

    #[test]
    fn degenerate_divisor_rejected() {
        let m = build_splitting_field(&qp(&[1, 0, 1]), 0).unwrap();
        let ext = m.field().clone();
        let constant = poly::constant(&ext, ext.one());
        let err = ConjugateSetting::over_rationals(&m, &DivisorSpec::Explicit(constant), 0)
            .unwrap_err();
        assert_eq!(err, Error::DegenerateDivisor);
    }

    // --- Frobenius instantiation ---

    fn fp(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn fpp(field: &PrimeField, coeffs: &[i64]) -> Poly<PrimeFieldElement> {
        poly::from_i64(field, coeffs)
    }

    #[test]
    fn frobenius_f4_setting() {
        let f2 = fp(2);
        let f = fpp(&f2, &[1, 1, 1]);
        let s = frobenius_setting(&f2, &f, &DivisorSpec::RootIndices(alloc::vec![0]), 0)
            .unwrap();
        assert_eq!(s.group_order(), 2);
        assert_eq!(s.roots().len(), 2);
        // alpha^2 is the second root.
        let alpha = &s.roots()[0];
        assert_eq!(s.roots()[1], s.extension().mul(alpha, alpha));

        // (X + alpha)(X + alpha^2) = X^2 + X + 1 since alpha + alpha^2 = 1
        // and alpha^3 = 1.
        let report = s.verify_theorem().unwrap();
        assert!(report.pass());
        assert_eq!((report.m, report.l_degree, report.n), (2, 2, 1));
        assert_eq!(report.h, f);
    }

    #[test]
    fn frobenius_cubic_mod_5() {
        let f5 = fp(5);
        let f = fpp(&f5, &[1, 1, 0, 1]); // X^3 + X + 1, no roots mod 5
        for r in 0..5 {
            let e = f5.from_i64(r);
            assert!(!f5.is_zero(&poly::eval(&f5, &f, &e)));
        }
        let s = frobenius_setting(&f5, &f, &DivisorSpec::RootIndices(alloc::vec![0]), 0)
            .unwrap();
        assert_eq!(s.group_order(), 3);
        let report = s.verify_corollary().unwrap();
        assert_eq!(report.corollary, CorollaryStatus::Holds);
        assert_eq!(report.h, f);
    }

    #[test]
    fn frobenius_x2_plus_1_mod_3() {
        let f3 = fp(3);
        let f = fpp(&f3, &[1, 0, 1]);
        let s = frobenius_setting(&f3, &f, &DivisorSpec::RootIndices(alloc::vec![0]), 0)
            .unwrap();
        // Roots are alpha and alpha^3 = -alpha.
        let alpha = &s.roots()[0];
        assert_eq!(s.roots()[1], s.extension().neg(alpha));
        assert_eq!(s.group_order(), 2);
    }

    #[test]
    fn frobenius_caps_and_hypotheses() {
        let f101 = fp(101);
        let f = fpp(&f101, &[1, 0, 1]);
        assert!(matches!(
            frobenius_setting(&f101, &f, &DivisorSpec::RootIndices(alloc::vec![0]), 0),
            Err(Error::CapExceeded(_))
        ));

        let f5 = fp(5);
        let reducible = fpp(&f5, &[1, 0, 1]); // (X+2)(X+3) mod 5
        assert!(matches!(
            frobenius_setting(&f5, &reducible, &DivisorSpec::RootIndices(alloc::vec![0]), 0),
            Err(Error::NotIrreducible)
        ));

        let mut coeffs = alloc::vec![0i64; 14];
        coeffs[13] = 1;
        coeffs[0] = 1;
        let too_big = fpp(&f5, &coeffs);
        assert!(matches!(
            frobenius_setting(&f5, &too_big, &DivisorSpec::RootIndices(alloc::vec![0]), 0),
            Err(Error::CapExceeded(_))
        ));
    }

    #[test]
    fn fp_coefficient_degree_is_orbit_lcm() {
        // In F_{2^4}, an element of the F_4 subfield has orbit length 2.
        let f2 = fp(2);
        let mut rng = crate::rng::SplitMix64::new(3);
        let f = factor_fp::random_irreducible(&f2, 4, &mut rng).unwrap();
        let s = frobenius_setting(&f2, &f, &DivisorSpec::RootIndices(alloc::vec![0]), 0)
            .unwrap();
        let ext = s.extension();
        // The generator has full orbit 4.
        let gen_deg = PrimeField::coefficient_field_degree(
            ext,
            &[ext.generator()],
            0,
        )
        .unwrap();
        assert_eq!(gen_deg, 4);
        // A base-field element has orbit 1.
        let one_deg =
            PrimeField::coefficient_field_degree(ext, &[ext.one()], 0).unwrap();
        assert_eq!(one_deg, 1);
    }

    #[test]
    fn minimality_of_n_by_trial_division() {
        // deg h = n deg f makes h | f^(n-1) impossible; the trial
        // division is still performed.
        let s = setting_q(&[-2, 0, 0, 1], &[0, 1]);
        let report = s.verify_theorem().unwrap();
        assert_eq!(report.n, 2);
        let f_prev = poly::pow(&Rationals, s.f(), report.n - 1);
        let (_, rem) = poly::divmod(&Rationals, &f_prev, &report.h).unwrap();
        assert!(!rem.is_zero());
    }
}
