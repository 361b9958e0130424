//! Splitting fields over the rationals and their automorphism groups.
//!
//! The splitting field of a separable irreducible `f` is built by
//! iterated root adjunction: adjoin one root, factor the cofactor with
//! Trager's method, adjoin a root of any remaining nonlinear factor via
//! the primitive-element collapse, and repeat until `f` splits into
//! linear factors. Automorphisms are enumerated from the images of the
//! generator, which is tracked as an integer combination of the roots.

use alloc::vec::Vec;

use crate::arith::{Field, Rational, Rationals};
use crate::error::{Error, Result};
use crate::factor_qq;
use crate::numfield::{NFElement, NumberField};
use crate::poly::{self, Poly};

/// The degree window accepted for the defining polynomial.
pub const MIN_INPUT_DEGREE: usize = 2;
pub const MAX_INPUT_DEGREE: usize = 5;

/// The splitting field M of `f` over Q, with the full root list of `f`
/// inside it, roots in coordinate-lexicographic order.
#[derive(Clone, Debug)]
pub struct SplittingField {
    field: NumberField,
    f: Poly<Rational>,
    roots: Vec<NFElement>,
    /// The generator gamma as an integer combination of the roots;
    /// maintained through every adjunction so that candidate
    /// automorphism images can be enumerated from root permutations.
    gamma_combo: Vec<i64>,
}

/// An element of Gal(M/Q): the image of the generator, with the induced
/// permutation of the root list cached for display and orbit work.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Automorphism {
    gamma_image: NFElement,
    root_perm: Vec<usize>,
}

impl Automorphism {
    pub fn gamma_image(&self) -> &NFElement {
        &self.gamma_image
    }

    pub fn root_permutation(&self) -> &[usize] {
        &self.root_perm
    }

    /// Nontrivial cycles of the root permutation, each rotated to start
    /// at its smallest index, sorted by first element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.root_perm.len();
        let mut seen = alloc::vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = alloc::vec![start];
            seen[start] = true;
            let mut next = self.root_perm[start];
            while next != start {
                seen[next] = true;
                cycle.push(next);
                next = self.root_perm[next];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }
}

impl SplittingField {
    pub fn field(&self) -> &NumberField {
        &self.field
    }

    /// The monic defining polynomial.
    pub fn defining_polynomial(&self) -> &Poly<Rational> {
        &self.f
    }

    pub fn roots(&self) -> &[NFElement] {
        &self.roots
    }

    pub fn degree(&self) -> usize {
        self.field.degree()
    }
}

/// Evaluates the coordinate polynomial of `a` (an element of `from`) at
/// `image` (an element of `to`): the homomorphism determined by sending
/// the generator of `from` to `image`.
fn map_element(to: &NumberField, a: &NFElement, image: &NFElement) -> NFElement {
    let mut acc = to.zero();
    for c in a.coords().iter().rev() {
        acc = to.add(&to.mul(&acc, image), &to.from_base(c.clone()));
    }
    acc
}

/// Constructs the splitting field of `f` over Q.
///
/// `f` must be separable, irreducible, and of degree between 2 and 5;
/// the internal extension degree is capped at 24.
pub fn build_splitting_field(f: &Poly<Rational>, rng_seed: u64) -> Result<SplittingField> {
    let deg = f.degree().ok_or(Error::ZeroPolynomial)?;
    if !(MIN_INPUT_DEGREE..=MAX_INPUT_DEGREE).contains(&deg) {
        return Err(Error::DegreeCapExceeded(deg));
    }
    let f = poly::monic(&Rationals, f)?;
    let df = poly::derivative(&Rationals, &f);
    if !poly::gcd(&Rationals, &f, &df)?.is_constant() {
        return Err(Error::NotSeparable);
    }
    if !factor_qq::is_irreducible_over_q(&f)? {
        return Err(Error::NotIrreducible);
    }

    let mut field = NumberField::new(f.clone(), rng_seed)?;
    let mut roots = alloc::vec![field.generator()];
    let mut gamma_combo = alloc::vec![1i64];

    loop {
        // Cofactor of the known roots inside the current field.
        let mut cofactor = field.lift_poly(&f);
        for r in &roots {
            let linear = poly::from_coeffs(&field, alloc::vec![field.neg(r), field.one()]);
            cofactor = poly::div_exact(&field, &cofactor, &linear)?;
        }
        if cofactor.is_constant() {
            break;
        }
        let factors = field.trager_factor(&cofactor, rng_seed)?;
        for (factor, mult) in &factors {
            debug_assert_eq!(*mult, 1, "f is separable");
            if factor.degree() == Some(1) {
                roots.push(field.neg(&factor.coeffs()[0]));
                gamma_combo.push(0);
            } else {
                // Adjoin a root of the first nonlinear irreducible factor
                // and remap everything into the collapsed field; any
                // remaining factors are rediscovered on the next pass.
                let ext = field.adjoin_root(factor)?;
                roots = roots
                    .iter()
                    .map(|r| map_element(&ext.field, r, &ext.gamma_image))
                    .collect();
                roots.push(ext.beta_image.clone());
                gamma_combo.push(ext.t as i64);
                field = ext.field;
                break;
            }
        }
    }

    if roots.len() != deg {
        return Err(Error::InternalInconsistency(alloc::format!(
            "found {} roots for degree {deg}",
            roots.len()
        )));
    }
    let lifted = field.lift_poly(&f);
    for r in &roots {
        if !field.is_zero(&poly::eval(&field, &lifted, r)) {
            return Err(Error::InternalInconsistency("listed root does not vanish".into()));
        }
    }

    // Canonical coordinate-lexicographic root order, permuting the
    // generator combination alongside.
    let mut order: Vec<usize> = (0..roots.len()).collect();
    order.sort_by(|&i, &j| roots[i].cmp(&roots[j]));
    let roots_sorted: Vec<NFElement> = order.iter().map(|&i| roots[i].clone()).collect();
    let combo_sorted: Vec<i64> = order.iter().map(|&i| gamma_combo[i]).collect();
    for w in roots_sorted.windows(2) {
        if w[0] == w[1] {
            return Err(Error::InternalInconsistency("repeated root".into()));
        }
    }

    Ok(SplittingField { field, f, roots: roots_sorted, gamma_combo: combo_sorted })
}

/// Enumerates Gal(M/Q): one automorphism per root of the generator's
/// minimal polynomial inside M. Since every automorphism permutes the
/// roots of `f` and the generator is an integer combination of them,
/// candidates are images of that combination under root permutations.
/// The identity is listed first, the rest in coordinate-lexicographic
/// order of the generator image.
pub fn automorphisms(m: &SplittingField) -> Result<Vec<Automorphism>> {
    let field = &m.field;
    let n = m.roots.len();
    let mut candidates: alloc::collections::BTreeSet<NFElement> =
        alloc::collections::BTreeSet::new();
    for perm in permutations(n) {
        let mut w = field.zero();
        for (i, &c) in m.gamma_combo.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let term = field.mul(&field.from_i64(c), &m.roots[perm[i]]);
            w = field.add(&w, &term);
        }
        candidates.insert(w);
    }

    let modulus = field.modulus().clone();
    let mut autos = Vec::new();
    for w in candidates {
        let value = poly::eval(field, &field.lift_poly(&modulus), &w);
        if !field.is_zero(&value) {
            continue;
        }
        // gamma -> w extends to an automorphism; compute the induced
        // root permutation.
        let mut root_perm = Vec::with_capacity(n);
        for r in &m.roots {
            let image = map_element(field, r, &w);
            let j = m
                .roots
                .iter()
                .position(|s| *s == image)
                .ok_or_else(|| {
                    Error::InternalInconsistency("automorphism does not permute roots".into())
                })?;
            root_perm.push(j);
        }
        autos.push(Automorphism { gamma_image: w, root_perm });
    }

    if autos.len() != field.degree() {
        return Err(Error::InternalInconsistency(alloc::format!(
            "found {} generator conjugates in a degree-{} field",
            autos.len(),
            field.degree()
        )));
    }
    let generator = field.generator();
    autos.sort_by(|a, b| {
        let a_id = a.gamma_image == generator;
        let b_id = b.gamma_image == generator;
        b_id.cmp(&a_id).then_with(|| a.gamma_image.cmp(&b.gamma_image))
    });
    Ok(autos)
}

/// Applies an automorphism to a field element.
pub fn apply_automorphism(
    m: &SplittingField,
    sigma: &Automorphism,
    a: &NFElement,
) -> Result<NFElement> {
    if !m.field.is_member(a) {
        return Err(Error::FieldMismatch);
    }
    Ok(map_element(&m.field, a, &sigma.gamma_image))
}

/// Applies an automorphism coefficientwise to a polynomial over M; the
/// degree is preserved since automorphisms send nonzero to nonzero.
pub fn apply_to_poly(
    m: &SplittingField,
    sigma: &Automorphism,
    g: &Poly<NFElement>,
) -> Result<Poly<NFElement>> {
    let coeffs: Result<Vec<NFElement>> = g
        .coeffs()
        .iter()
        .map(|c| apply_automorphism(m, sigma, c))
        .collect();
    let out = poly::from_coeffs(&m.field, coeffs?);
    debug_assert_eq!(out.degree(), g.degree());
    Ok(out)
}

/// The composition `sigma . tau` (apply `tau` first).
pub fn compose(m: &SplittingField, sigma: &Automorphism, tau: &Automorphism) -> Automorphism {
    let gamma_image = map_element(&m.field, &tau.gamma_image, &sigma.gamma_image);
    let root_perm = tau.root_perm.iter().map(|&i| sigma.root_perm[i]).collect();
    Automorphism { gamma_image, root_perm }
}

pub fn is_identity(m: &SplittingField, sigma: &Automorphism) -> bool {
    sigma.gamma_image == m.field.generator()
}

/// All permutations of `0..n` in a deterministic order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, rest: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..rest.len() {
            let v = rest.remove(i);
            prefix.push(v);
            go(prefix, rest, out);
            prefix.pop();
            rest.insert(i, v);
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut (0..n).collect(), &mut out);
    out
}
