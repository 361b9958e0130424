//! Complete factorization of univariate polynomials over F_p:
//! squarefree decomposition, distinct-degree factorization, and
//! Cantor-Zassenhaus equal-degree splitting.
//!
//! Randomness is confined to the equal-degree split and driven by an
//! injectable seed; every public result is canonically sorted, so outputs
//! do not depend on the seed.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::One;

use crate::arith::{Field, PrimeField, PrimeFieldElement};
use crate::error::{Error, Result};
use crate::poly::{self, Poly};
use crate::rng::SplitMix64;

pub type FpPoly = Poly<PrimeFieldElement>;

/// `base^exp mod modulus` with an arbitrary-precision exponent.
fn powmod_big(field: &PrimeField, base: &FpPoly, exp: &BigUint, modulus: &FpPoly) -> Result<FpPoly> {
    let mut acc = poly::one(field);
    let mut sq = poly::rem(field, base, modulus)?;
    let bits = exp.bits();
    for i in 0..bits {
        if exp.bit(i) {
            acc = poly::rem(field, &poly::mul(field, &acc, &sq), modulus)?;
        }
        if i + 1 < bits {
            sq = poly::rem(field, &poly::mul(field, &sq, &sq), modulus)?;
        }
    }
    Ok(acc)
}

fn powmod_u64(field: &PrimeField, base: &FpPoly, exp: u64, modulus: &FpPoly) -> Result<FpPoly> {
    powmod_big(field, base, &BigUint::from(exp), modulus)
}

/// Squarefree decomposition over F_p, handling p-th powers: returns monic
/// squarefree parts with multiplicities whose product (with multiplicity)
/// is the monic part of the input.
pub fn squarefree_decomposition_fp(
    field: &PrimeField,
    a: &FpPoly,
) -> Result<Vec<(FpPoly, usize)>> {
    if a.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let a = poly::monic(field, a)?;
    if a.is_constant() {
        return Ok(Vec::new());
    }
    let p = field.modulus() as usize;
    let da = poly::derivative(field, &a);

    if da.is_zero() {
        // a = b(X^p) = b(X)^p since coefficients are Frobenius-fixed in F_p.
        let root = pth_root(field, &a, p);
        let inner = squarefree_decomposition_fp(field, &root)?;
        return Ok(inner.into_iter().map(|(f, m)| (f, m * p)).collect());
    }

    let g = poly::gcd(field, &a, &da)?;
    let mut w = poly::div_exact(field, &a, &g)?;
    let mut g = g;
    let mut out: Vec<(FpPoly, usize)> = Vec::new();
    let mut i = 1usize;
    while !w.is_constant() {
        let y = poly::gcd(field, &w, &g)?;
        let z = poly::div_exact(field, &w, &y)?;
        if !z.is_constant() {
            out.push((poly::monic(field, &z)?, i));
        }
        w = y;
        g = poly::div_exact(field, &g, &w)?;
        i += 1;
    }
    if !g.is_constant() {
        // Remaining factors have multiplicity divisible by p.
        let root = pth_root(field, &g, p);
        for (f, m) in squarefree_decomposition_fp(field, &root)? {
            out.push((f, m * p));
        }
    }
    out.sort_by(|(f1, m1), (f2, m2)| m1.cmp(m2).then_with(|| f1.canonical_cmp(f2)));
    Ok(out)
}

/// For `a` with zero derivative, the polynomial `b` with `b(X)^p = a(X)`.
fn pth_root(field: &PrimeField, a: &FpPoly, p: usize) -> FpPoly {
    let coeffs: Vec<PrimeFieldElement> = a
        .coeffs()
        .iter()
        .step_by(p)
        .cloned()
        .collect();
    poly::from_coeffs(field, coeffs)
}

/// Distinct-degree factorization of a monic squarefree polynomial:
/// returns `(product of all irreducible factors of degree d, d)` pairs,
/// ascending in `d`, whose product is the input.
pub fn ddf(field: &PrimeField, a: &FpPoly) -> Result<Vec<(FpPoly, usize)>> {
    if a.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !poly::is_monic(field, a) {
        return Err(Error::NotMonic);
    }
    let da = poly::derivative(field, a);
    if da.is_zero() || !poly::gcd(field, a, &da)?.is_constant() {
        return Err(Error::NotSquarefree);
    }

    let p = field.modulus();
    let x = poly::x(field);
    let mut rest = a.clone();
    let mut frob = x.clone(); // X^(p^d) mod rest
    let mut out = Vec::new();
    let mut d = 0usize;
    while rest.degree().is_some_and(|deg| deg >= 2 * (d + 1)) {
        d += 1;
        frob = powmod_u64(field, &frob, p, &rest)?;
        let g = poly::gcd(field, &poly::sub(field, &frob, &x), &rest)?;
        if !g.is_constant() {
            out.push((g.clone(), d));
            rest = poly::div_exact(field, &rest, &g)?;
            frob = poly::rem(field, &frob, &rest)?;
        }
    }
    if let Some(deg) = rest.degree() {
        if deg > 0 {
            out.push((rest, deg));
        }
    }
    Ok(out)
}

/// Cantor-Zassenhaus equal-degree factorization: splits a monic product
/// of irreducible factors all of degree `d` into the sorted factor list.
/// Deterministic for a given seed.
pub fn edf(field: &PrimeField, a: &FpPoly, d: usize, rng_seed: u64) -> Result<Vec<FpPoly>> {
    if a.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !poly::is_monic(field, a) {
        return Err(Error::NotMonic);
    }
    let deg = a.degree().unwrap_or(0);
    if d == 0 || !deg.is_multiple_of(d) {
        return Err(Error::PreconditionViolated(alloc::format!(
            "degree {deg} is not a multiple of the factor degree {d}"
        )));
    }
    let mut rng = SplitMix64::new(rng_seed);
    let mut out = Vec::new();
    split_equal_degree(field, a.clone(), d, &mut rng, &mut out)?;
    // Post-hoc degree bookkeeping: every factor must have degree exactly d.
    if out.iter().any(|f| f.degree() != Some(d)) {
        return Err(Error::PreconditionViolated(alloc::format!(
            "input has an irreducible factor of degree != {d}"
        )));
    }
    out.sort();
    Ok(out)
}

fn split_equal_degree(
    field: &PrimeField,
    a: FpPoly,
    d: usize,
    rng: &mut SplitMix64,
    out: &mut Vec<FpPoly>,
) -> Result<()> {
    let deg = a.degree().expect("nonzero");
    if deg == d {
        out.push(a);
        return Ok(());
    }
    let p = field.modulus();
    // Retry cap so that violated preconditions surface as errors instead
    // of spinning.
    for _ in 0..128 {
        let r = random_poly(field, deg, rng);
        if r.is_constant() {
            continue;
        }
        let b = if p == 2 {
            // Trace map over F_{2^d}: r + r^2 + r^4 + ... + r^(2^(d-1)).
            let mut term = poly::rem(field, &r, &a)?;
            let mut sum = term.clone();
            for _ in 1..d {
                term = poly::rem(field, &poly::mul(field, &term, &term), &a)?;
                sum = poly::add(field, &sum, &term);
            }
            sum
        } else {
            // r^((p^d - 1)/2) - 1 mod a.
            let exp = (BigUint::from(p).pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
            let pw = powmod_big(field, &r, &exp, &a)?;
            poly::sub(field, &pw, &poly::one(field))
        };
        if b.is_zero() {
            continue;
        }
        let g = poly::gcd(field, &b, &a)?;
        let gdeg = g.degree().unwrap_or(0);
        if gdeg == 0 || gdeg == deg {
            continue;
        }
        let cof = poly::div_exact(field, &a, &g)?;
        split_equal_degree(field, g, d, rng, out)?;
        split_equal_degree(field, cof, d, rng, out)?;
        return Ok(());
    }
    Err(Error::PreconditionViolated(alloc::format!(
        "equal-degree split failed to converge for degree {d}"
    )))
}

pub(crate) fn random_poly(field: &PrimeField, deg_below: usize, rng: &mut SplitMix64) -> FpPoly {
    let p = field.modulus();
    let coeffs: Vec<PrimeFieldElement> = (0..deg_below)
        .map(|_| field.from_i64(rng.below(p) as i64))
        .collect();
    poly::from_coeffs(field, coeffs)
}

/// Complete factorization over F_p: `a = lc * prod f_i^(e_i)` with the
/// monic irreducible factors canonically sorted.
pub fn factor_mod_p(
    field: &PrimeField,
    a: &FpPoly,
    rng_seed: u64,
) -> Result<Vec<(FpPoly, usize)>> {
    if a.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut rng = SplitMix64::new(rng_seed);
    let mut out: Vec<(FpPoly, usize)> = Vec::new();
    for (part, mult) in squarefree_decomposition_fp(field, a)? {
        for (prod, d) in ddf(field, &part)? {
            for f in edf(field, &prod, d, rng.next_u64())? {
                out.push((f, mult));
            }
        }
    }
    out.sort_by(|(f1, _), (f2, _)| f1.canonical_cmp(f2));
    Ok(out)
}

/// Rabin irreducibility test for polynomials of degree >= 1 over F_p.
pub fn is_irreducible_mod_p(field: &PrimeField, a: &FpPoly) -> Result<bool> {
    let Some(n) = a.degree() else {
        return Err(Error::ConstantPolynomial);
    };
    if n == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let a = poly::monic(field, a)?;
    if n == 1 {
        return Ok(true);
    }
    let p = field.modulus();
    let x = poly::x(field);
    // For every prime q | n: gcd(X^(p^(n/q)) - X, a) must be constant.
    for q in prime_divisors(n) {
        let exp = BigUint::from(p).pow((n / q) as u32);
        let h = powmod_big(field, &x, &exp, &a)?;
        let g = poly::gcd(field, &poly::sub(field, &h, &x), &a)?;
        if !g.is_constant() {
            return Ok(false);
        }
    }
    // And X^(p^n) == X mod a.
    let exp = BigUint::from(p).pow(n as u32);
    let h = powmod_big(field, &x, &exp, &a)?;
    Ok(poly::sub(field, &h, &x).is_zero())
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2usize;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// A uniformly random monic irreducible polynomial of the given degree;
/// used by the randomized test suites.
pub fn random_irreducible(
    field: &PrimeField,
    degree: usize,
    rng: &mut SplitMix64,
) -> Result<FpPoly> {
    assert!(degree >= 1);
    loop {
        let mut coeffs: Vec<PrimeFieldElement> = (0..degree)
            .map(|_| field.from_i64(rng.below(field.modulus()) as i64))
            .collect();
        coeffs.push(field.one());
        let cand = poly::from_coeffs(field, coeffs);
        if is_irreducible_mod_p(field, &cand)? {
            return Ok(cand);
        }
    }
}
