//! Irreducibility testing and complete factorization over the rationals:
//! reduction modulo a good prime, quadratic Hensel lifting, and bounded
//! factor recombination (Zassenhaus).
//!
//! Rational inputs are split into content and a primitive integer
//! polynomial; lifting and recombination happen over the integers, and
//! monic rational factors are restored at the end.

use alloc::vec::Vec;

use num_integer::Integer as NumIntegerOps;
use num_traits::{One, Signed, Zero};

use crate::arith::{ceil_sqrt, is_prime_u64, Field, Integer, PrimeField, Rational, Rationals};
use crate::error::{Error, Result};
use crate::factor_fp::{self, FpPoly};
use crate::poly::{self, Poly};
use crate::rng::SplitMix64;

/// Dense polynomial with integer coefficients.
pub type ZPoly = Poly<Integer>;

/// Recombination searches subsets of the modular factors; beyond this many
/// the subset space is too large for desk scale.
pub const MAX_MODULAR_FACTORS: usize = 26;

/// How many good primes are tried before settling on the one with the
/// fewest modular factors.
const CANDIDATE_PRIMES: usize = 5;

// ---------------------------------------------------------------------------
// Integer polynomial helpers
// ---------------------------------------------------------------------------

/// Integer polynomial from big-integer coefficients, low power first.
pub fn zp(coeffs: Vec<Integer>) -> ZPoly {
    Poly::from_trimmed(coeffs, |c| c.is_zero())
}

/// Integer polynomial from machine integers, low power first.
pub fn zp_from_i64(coeffs: &[i64]) -> ZPoly {
    zp(coeffs.iter().map(|&c| Integer::from(c)).collect())
}

fn zp_add(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let n = a.coeffs().len().max(b.coeffs().len());
    let zero = Integer::zero();
    zp((0..n)
        .map(|i| a.coeffs().get(i).unwrap_or(&zero) + b.coeffs().get(i).unwrap_or(&zero))
        .collect())
}

fn zp_sub(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let n = a.coeffs().len().max(b.coeffs().len());
    let zero = Integer::zero();
    zp((0..n)
        .map(|i| a.coeffs().get(i).unwrap_or(&zero) - b.coeffs().get(i).unwrap_or(&zero))
        .collect())
}

fn zp_mul(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_zero() || b.is_zero() {
        return Poly::zero();
    }
    let mut out = alloc::vec![Integer::zero(); a.coeffs().len() + b.coeffs().len() - 1];
    for (i, ai) in a.coeffs().iter().enumerate() {
        for (j, bj) in b.coeffs().iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    zp(out)
}

fn zp_scale(a: &ZPoly, c: &Integer) -> ZPoly {
    zp(a.coeffs().iter().map(|x| x * c).collect())
}

/// Coefficients reduced into `[0, m)`.
fn zp_mod(a: &ZPoly, m: &Integer) -> ZPoly {
    zp(a.coeffs().iter().map(|c| c.mod_floor(m)).collect())
}

/// Coefficients reduced into the symmetric range around zero.
fn zp_symmetric(a: &ZPoly, m: &Integer) -> ZPoly {
    let half = m / 2;
    zp(a.coeffs()
        .iter()
        .map(|c| {
            let r = c.mod_floor(m);
            if r > half {
                r - m
            } else {
                r
            }
        })
        .collect())
}

fn zp_mul_mod(a: &ZPoly, b: &ZPoly, m: &Integer) -> ZPoly {
    zp_mod(&zp_mul(a, b), m)
}

/// Division with remainder modulo `m`; the divisor must be monic.
fn zp_divmod_monic_mod(a: &ZPoly, b: &ZPoly, m: &Integer) -> (ZPoly, ZPoly) {
    debug_assert_eq!(b.leading_coefficient(), Some(&Integer::one()));
    let db = b.coeffs().len() - 1;
    if a.coeffs().len() < b.coeffs().len() {
        return (Poly::zero(), zp_mod(a, m));
    }
    let mut rem: Vec<Integer> = a.coeffs().to_vec();
    let dq = a.coeffs().len() - b.coeffs().len();
    let mut quot = alloc::vec![Integer::zero(); dq + 1];
    for i in (0..=dq).rev() {
        let top = rem[i + db].mod_floor(m);
        if top.is_zero() {
            continue;
        }
        for (j, bj) in b.coeffs().iter().enumerate() {
            let delta = &top * bj;
            rem[i + j] = (&rem[i + j] - delta).mod_floor(m);
        }
        quot[i] = top;
    }
    (zp_mod(&zp(quot), m), zp_mod(&zp(rem), m))
}

/// Greatest common divisor of the coefficients, nonnegative.
pub(crate) fn content(a: &ZPoly) -> Integer {
    a.coeffs().iter().fold(Integer::zero(), |acc, c| acc.gcd(c))
}

/// Divides out the content and normalizes the sign so the leading
/// coefficient is positive.
pub fn primitive_part(a: &ZPoly) -> ZPoly {
    if a.is_zero() {
        return Poly::zero();
    }
    let mut c = content(a);
    if a.leading_coefficient().is_some_and(|lc| lc.is_negative()) {
        c = -c;
    }
    zp(a.coeffs().iter().map(|x| x / &c).collect())
}

/// Exact polynomial division over the integers; `None` when `b` does not
/// divide `a` in `Z[X]`.
pub fn zp_divexact(a: &ZPoly, b: &ZPoly) -> Option<ZPoly> {
    if b.is_zero() {
        return None;
    }
    if a.is_zero() {
        return Some(Poly::zero());
    }
    if a.coeffs().len() < b.coeffs().len() {
        return None;
    }
    let lcb = b.leading_coefficient().unwrap();
    let db = b.coeffs().len() - 1;
    let mut rem: Vec<Integer> = a.coeffs().to_vec();
    let dq = a.coeffs().len() - b.coeffs().len();
    let mut quot = alloc::vec![Integer::zero(); dq + 1];
    for i in (0..=dq).rev() {
        let top = rem[i + db].clone();
        if top.is_zero() {
            continue;
        }
        let (q, r) = top.div_rem(lcb);
        if !r.is_zero() {
            return None;
        }
        for (j, bj) in b.coeffs().iter().enumerate() {
            rem[i + j] -= &q * bj;
        }
        quot[i] = q;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return None;
    }
    Some(zp(quot))
}

/// Reduction of an integer polynomial modulo p.
pub(crate) fn zp_to_fp(field: &PrimeField, a: &ZPoly) -> FpPoly {
    let p = Integer::from(field.modulus());
    poly::from_coeffs(
        field,
        a.coeffs()
            .iter()
            .map(|c| {
                let r = c.mod_floor(&p);
                field.from_i64(i64::try_from(r).expect("residue fits"))
            })
            .collect(),
    )
}

/// Lift of an F_p polynomial to integer coefficients in `[0, p)`.
pub(crate) fn fp_to_zp(a: &FpPoly) -> ZPoly {
    zp(a.coeffs().iter().map(|c| Integer::from(c.residue())).collect())
}

/// Clears denominators: returns `(s, c)` with `a = c * s`, `s` a primitive
/// integer polynomial with positive leading coefficient.
pub fn clear_denominators(a: &Poly<Rational>) -> (ZPoly, Rational) {
    if a.is_zero() {
        return (Poly::zero(), Rational::zero());
    }
    let lcm_den = a
        .coeffs()
        .iter()
        .fold(Integer::one(), |acc, c| acc.lcm(c.denom()));
    let scaled = zp(a
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&lcm_den / c.denom()))
        .collect());
    let prim = primitive_part(&scaled);
    let lead_scaled = scaled.leading_coefficient().unwrap();
    let lead_prim = prim.leading_coefficient().unwrap();
    let c = Rational::new(lead_scaled / lead_prim, lcm_den).expect("nonzero denominator");
    (prim, c)
}

/// An integer polynomial viewed over the rationals.
pub fn zp_to_rational(a: &ZPoly) -> Poly<Rational> {
    poly::from_coeffs(
        &Rationals,
        a.coeffs()
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect(),
    )
}

// ---------------------------------------------------------------------------
// Prime selection and coefficient bounds
// ---------------------------------------------------------------------------

/// The smallest prime not dividing the leading coefficient for which the
/// reduction stays squarefree. Always exists for squarefree input.
pub fn choose_good_prime(a: &ZPoly) -> u64 {
    good_primes(a).next().expect("squarefree input admits a good prime")
}

fn good_primes(a: &ZPoly) -> impl Iterator<Item = u64> + '_ {
    (2u64..).filter(move |&p| is_prime_u64(p) && prime_is_good(a, p))
}

fn prime_is_good(a: &ZPoly, p: u64) -> bool {
    let Ok(field) = PrimeField::new(p) else { return false };
    let lc = a.leading_coefficient().expect("nonzero");
    if lc.mod_floor(&Integer::from(p)).is_zero() {
        return false;
    }
    let ap = zp_to_fp(&field, a);
    let dap = poly::derivative(&field, &ap);
    if dap.is_zero() {
        return false;
    }
    poly::gcd(&field, &ap, &dap).is_ok_and(|g| g.is_constant())
}

/// Landau-Mignotte style bound used to pick the lifting precision:
/// any integer factor of `a`, after the leading-coefficient adjustment
/// `lc(a) * g / lc(g)` used during recombination, has all coefficients of
/// absolute value at most `2^deg(a) * ||a||_2 * |lc(a)|`.
pub fn landau_mignotte_bound(a: &ZPoly) -> Integer {
    let deg = a.degree().expect("nonzero") as u32;
    let norm_sq = a
        .coeffs()
        .iter()
        .fold(Integer::zero(), |acc, c| acc + c * c);
    let lc = a.leading_coefficient().unwrap().abs();
    (Integer::one() << deg) * ceil_sqrt(&norm_sq) * lc
}

// ---------------------------------------------------------------------------
// Hensel lifting
// ---------------------------------------------------------------------------

/// Lifts a coprime monic factorization of `a` modulo p to modulo `p^k`,
/// where `k` is minimal with `p^k > 2 * target_bound`. Quadratic lifting;
/// returns the lifted factors (coefficients in `[0, p^k)`) and `p^k`.
pub fn hensel_lift(
    a: &ZPoly,
    factors_mod_p: &[FpPoly],
    target_bound: &Integer,
) -> Result<(Vec<ZPoly>, Integer)> {
    if a.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let first = factors_mod_p
        .first()
        .and_then(|f| f.leading_coefficient())
        .ok_or_else(|| Error::PreconditionViolated("no factors given".into()))?;
    let field = PrimeField::new(first.modulus())?;
    let p = Integer::from(field.modulus());

    for f in factors_mod_p {
        if !poly::is_monic(&field, f) || f.is_constant() {
            return Err(Error::PreconditionViolated(
                "factors must be monic and nonconstant".into(),
            ));
        }
    }
    for (i, f) in factors_mod_p.iter().enumerate() {
        for g in &factors_mod_p[i + 1..] {
            if !poly::gcd(&field, f, g)?.is_constant() {
                return Err(Error::NotCoprime);
            }
        }
    }
    // lc(a) * prod(f_i) must reproduce a mod p.
    let lc = a.leading_coefficient().unwrap();
    if lc.mod_floor(&p).is_zero() {
        return Err(Error::PreconditionViolated(
            "p divides the leading coefficient".into(),
        ));
    }
    let lc_p = zp_to_fp(&field, &zp(alloc::vec![lc.clone()]));
    let mut prod = lc_p;
    for f in factors_mod_p {
        prod = poly::mul(&field, &prod, f);
    }
    if prod != zp_to_fp(&field, a) {
        return Err(Error::PreconditionViolated(
            "factor product does not match the input mod p".into(),
        ));
    }

    // Minimal k with p^k > 2 * bound.
    let mut pk = p.clone();
    let two_bound = Integer::from(2) * target_bound;
    while pk <= two_bound {
        pk *= &p;
    }

    // Work with the monic input a / lc mod p^k.
    let lc_inv = mod_inverse(lc, &pk).expect("p does not divide lc");
    let w = zp_mod(&zp_scale(a, &lc_inv), &pk);
    debug_assert_eq!(w.leading_coefficient(), Some(&Integer::one()));

    let lifted = lift_list(&field, &w, factors_mod_p, &p, &pk)?;
    Ok((lifted, pk))
}

/// Inverse of `a` modulo `m`, when gcd(a, m) = 1.
fn mod_inverse(a: &Integer, m: &Integer) -> Option<Integer> {
    let e = a.extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

fn lift_list(
    field: &PrimeField,
    w: &ZPoly,
    fs: &[FpPoly],
    p: &Integer,
    pk: &Integer,
) -> Result<Vec<ZPoly>> {
    if fs.len() == 1 {
        debug_assert_eq!(w.degree(), fs[0].degree());
        return Ok(alloc::vec![w.clone()]);
    }
    let mid = fs.len() / 2;
    let (left, right) = fs.split_at(mid);
    let mut g0 = poly::one(field);
    for f in left {
        g0 = poly::mul(field, &g0, f);
    }
    let mut h0 = poly::one(field);
    for f in right {
        h0 = poly::mul(field, &h0, f);
    }
    let (gcd, s0, t0) = poly::extended_gcd(field, &g0, &h0)?;
    if !gcd.is_constant() {
        return Err(Error::NotCoprime);
    }

    let mut g = fp_to_zp(&g0);
    let mut h = fp_to_zp(&h0);
    let mut s = fp_to_zp(&s0);
    let mut t = fp_to_zp(&t0);
    let mut m = p.clone();
    while &m < pk {
        let m2 = core::cmp::min(&m * &m, pk.clone());
        (g, h, s, t) = hensel_step(w, &g, &h, &s, &t, &m2);
        m = m2;
    }

    let mut out = lift_list(field, &g, left, p, pk)?;
    out.extend(lift_list(field, &h, right, p, pk)?);
    Ok(out)
}

/// One quadratic Hensel step: given `w = g*h` and `s*g + t*h = 1` modulo
/// some m with `m2 | m^2`, produces the same data modulo `m2`.
fn hensel_step(
    w: &ZPoly,
    g: &ZPoly,
    h: &ZPoly,
    s: &ZPoly,
    t: &ZPoly,
    m2: &Integer,
) -> (ZPoly, ZPoly, ZPoly, ZPoly) {
    let e = zp_mod(&zp_sub(&zp_mod(w, m2), &zp_mul_mod(g, h, m2)), m2);
    let (q, r) = zp_divmod_monic_mod(&zp_mul_mod(s, &e, m2), h, m2);
    let g_new = zp_mod(
        &zp_add(&zp_add(g, &zp_mul_mod(t, &e, m2)), &zp_mul_mod(&q, g, m2)),
        m2,
    );
    let h_new = zp_mod(&zp_add(h, &r), m2);
    debug_assert_eq!(h_new.leading_coefficient(), Some(&Integer::one()));
    debug_assert_eq!(g_new.degree(), g.degree());

    let b = zp_mod(
        &zp_sub(
            &zp_add(&zp_mul_mod(s, &g_new, m2), &zp_mul_mod(t, &h_new, m2)),
            &zp(alloc::vec![Integer::one()]),
        ),
        m2,
    );
    let (c, d) = zp_divmod_monic_mod(&zp_mul_mod(s, &b, m2), &h_new, m2);
    let s_new = zp_mod(&zp_sub(s, &d), m2);
    let t_new = zp_mod(
        &zp_sub(&zp_sub(t, &zp_mul_mod(t, &b, m2)), &zp_mul_mod(&c, &g_new, m2)),
        m2,
    );
    (g_new, h_new, s_new, t_new)
}

// ---------------------------------------------------------------------------
// Factorization over Q
// ---------------------------------------------------------------------------

/// Exact factorization over the rationals: `a = lc(a) * prod f_i^(e_i)`
/// with monic irreducible rational factors, canonically sorted.
pub fn factor_over_q(a: &Poly<Rational>, rng_seed: u64) -> Result<Vec<(Poly<Rational>, usize)>> {
    if a.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut rng = SplitMix64::new(rng_seed);
    let mut out: Vec<(Poly<Rational>, usize)> = Vec::new();
    for (part, mult) in poly::squarefree_decomposition(&Rationals, a)? {
        let (s, _) = clear_denominators(&part);
        for f in factor_squarefree_primitive(&s, rng.next_u64())? {
            let monic = poly::monic(&Rationals, &zp_to_rational(&f))?;
            out.push((monic, mult));
        }
    }
    out.sort_by(|(f1, _), (f2, _)| f1.canonical_cmp(f2));
    Ok(out)
}

/// True exactly when the factorization is a single factor of multiplicity
/// one.
pub fn is_irreducible_over_q(a: &Poly<Rational>) -> Result<bool> {
    if a.degree().is_none_or(|d| d == 0) {
        return Err(Error::ConstantPolynomial);
    }
    let fs = factor_over_q(a, 0)?;
    Ok(fs.len() == 1 && fs[0].1 == 1)
}

/// Zassenhaus factorization of a primitive squarefree integer polynomial
/// with positive leading coefficient; returns primitive irreducible
/// integer factors in discovery order.
fn factor_squarefree_primitive(s: &ZPoly, rng_seed: u64) -> Result<Vec<ZPoly>> {
    let deg = s.degree().expect("nonzero");
    if deg == 0 {
        return Ok(Vec::new());
    }
    if deg == 1 {
        return Ok(alloc::vec![s.clone()]);
    }

    let mut rng = SplitMix64::new(rng_seed);
    // Among the first few good primes, pick the one giving the fewest
    // modular factors; totally split reductions defeat recombination.
    let mut best: Option<(PrimeField, Vec<FpPoly>)> = None;
    for p in good_primes(s).take(CANDIDATE_PRIMES) {
        let field = PrimeField::new(p)?;
        let sp = poly::monic(&field, &zp_to_fp(&field, s))?;
        let factors = factor_mod_p_squarefree(&field, &sp, rng.next_u64())?;
        if factors.len() == 1 {
            return Ok(alloc::vec![s.clone()]);
        }
        if best.as_ref().is_none_or(|(_, b)| factors.len() < b.len()) {
            best = Some((field, factors));
        }
    }
    let (_, pool) = best.expect("at least one good prime");
    if pool.len() > MAX_MODULAR_FACTORS {
        return Err(Error::TooManyModularFactors(pool.len()));
    }

    let bound = landau_mignotte_bound(s);
    let (lifted, pk) = hensel_lift(s, &pool, &bound)?;
    Ok(recombine(s, lifted, &pk))
}

fn factor_mod_p_squarefree(field: &PrimeField, sp: &FpPoly, seed: u64) -> Result<Vec<FpPoly>> {
    let factors = factor_fp::factor_mod_p(field, sp, seed)?;
    debug_assert!(factors.iter().all(|(_, m)| *m == 1));
    Ok(factors.into_iter().map(|(f, _)| f).collect())
}

/// Searches subsets of the lifted modular factors for true integer
/// factors, smallest cardinality first.
fn recombine(s: &ZPoly, mut pool: Vec<ZPoly>, pk: &Integer) -> Vec<ZPoly> {
    let mut remaining = s.clone();
    let mut out = Vec::new();
    let mut size = 1usize;
    'sizes: while 2 * size <= pool.len() {
        let mut comb = Combinations::new(pool.len(), size);
        while let Some(idx) = comb.next() {
            if let Some(g) = try_subset(&remaining, &pool, idx, pk) {
                let q = zp_divexact(&remaining, &g).expect("candidate verified");
                out.push(g);
                remaining = q;
                let chosen: Vec<usize> = idx.to_vec();
                pool = pool
                    .into_iter()
                    .enumerate()
                    .filter_map(|(i, f)| (!chosen.contains(&i)).then_some(f))
                    .collect();
                continue 'sizes;
            }
        }
        size += 1;
    }
    if remaining.degree().is_some_and(|d| d > 0) {
        out.push(remaining);
    } else {
        debug_assert_eq!(remaining.coeffs(), &[Integer::one()]);
    }
    out
}

/// Tests one subset: reconstructs `lc * prod(subset)` in the symmetric
/// range and checks exact divisibility.
fn try_subset(remaining: &ZPoly, pool: &[ZPoly], idx: &[usize], pk: &Integer) -> Option<ZPoly> {
    let lc = remaining.leading_coefficient().expect("nonzero");
    let deg_sum: usize = idx.iter().map(|&i| pool[i].degree().unwrap_or(0)).sum();
    if deg_sum >= remaining.degree().unwrap_or(0) {
        return None;
    }
    // Cheap screen on the constant term before the full product.
    let s0 = remaining.coeffs().first().cloned().unwrap_or_else(Integer::zero);
    if !s0.is_zero() {
        let mut t0 = lc.mod_floor(pk);
        for &i in idx {
            let c0 = pool[i].coeffs().first().cloned().unwrap_or_else(Integer::zero);
            t0 = (t0 * c0).mod_floor(pk);
        }
        let half = pk / 2;
        if t0 > half {
            t0 -= pk;
        }
        if t0.is_zero() || !(lc * &s0).is_multiple_of(&t0) {
            return None;
        }
    }
    let mut cand = zp(alloc::vec![lc.clone()]);
    for &i in idx {
        cand = zp_mul_mod(&cand, &pool[i], pk);
    }
    let cand = primitive_part(&zp_symmetric(&cand, pk));
    zp_divexact(remaining, &cand).is_some().then_some(cand)
}

/// Plain lexicographic k-subset index generator.
struct Combinations {
    n: usize,
    idx: Vec<usize>,
    started: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations { n, idx: (0..k).collect(), started: false }
    }

    fn next(&mut self) -> Option<&[usize]> {
        let k = self.idx.len();
        if k > self.n {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.idx);
        }
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if self.idx[i] != i + self.n - k {
                break;
            }
        }
        self.idx[i] += 1;
        for j in i + 1..k {
            self.idx[j] = self.idx[j - 1] + 1;
        }
        Some(&self.idx)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp(coeffs: &[i64]) -> Poly<Rational> {
        poly::from_i64(&Rationals, coeffs)
    }

    #[test]
    fn good_prime_examples() {
        // X^4 + 1: mod 2 it is (X+1)^4; mod 3 squarefree.
        assert_eq!(choose_good_prime(&zp_from_i64(&[1, 0, 0, 0, 1])), 3);
        // X^2 + 1: mod 2 gives (X+1)^2.
        assert_eq!(choose_good_prime(&zp_from_i64(&[1, 0, 1])), 3);
        // X^2 - 2: mod 2 gives X^2.
        assert_eq!(choose_good_prime(&zp_from_i64(&[-2, 0, 1])), 3);
    }

    #[test]
    fn mignotte_bound_form() {
        // 2^2 * ceil(sqrt(1 + 4)) * 2 = 4 * 3 * 2 = 24 for 2X^2 + 1.
        assert_eq!(landau_mignotte_bound(&zp_from_i64(&[1, 0, 2])), Integer::from(24));
    }

    #[test]
    fn hensel_lift_x2_plus_1_mod_25() {
        // Oracle: 7^2 = 49 = -1 + 2*25, so X+7 and X+18 = X-7 mod 25.
        let f5 = PrimeField::new(5).unwrap();
        let a = zp_from_i64(&[1, 0, 1]);
        let factors = alloc::vec![poly::from_i64(&f5, &[2, 1]), poly::from_i64(&f5, &[3, 1])];
        let (lifted, pk) = hensel_lift(&a, &factors, &Integer::from(10)).unwrap();
        assert_eq!(pk, Integer::from(25));
        assert_eq!(lifted, alloc::vec![zp_from_i64(&[7, 1]), zp_from_i64(&[18, 1])]);
        // Square back: the product must be X^2 + 1 mod 25.
        let back = zp_mod(&zp_mul(&lifted[0], &lifted[1]), &pk);
        assert_eq!(back, zp_mod(&a, &pk));
    }

    #[test]
    fn hensel_lift_x2_minus_2_mod_49() {
        // Oracle: 10^2 = 100 = 2 + 2*49.
        let f7 = PrimeField::new(7).unwrap();
        let a = zp_from_i64(&[-2, 0, 1]);
        let factors = alloc::vec![poly::from_i64(&f7, &[3, 1]), poly::from_i64(&f7, &[4, 1])];
        let (lifted, pk) = hensel_lift(&a, &factors, &Integer::from(12)).unwrap();
        assert_eq!(pk, Integer::from(49));
        assert_eq!(lifted, alloc::vec![zp_from_i64(&[10, 1]), zp_from_i64(&[39, 1])]);
    }

    #[test]
    fn hensel_lift_single_factor() {
        let f3 = PrimeField::new(3).unwrap();
        let a = zp_from_i64(&[1, 0, 1]);
        let factors = alloc::vec![poly::from_i64(&f3, &[1, 0, 1])];
        let (lifted, pk) = hensel_lift(&a, &factors, &Integer::from(5)).unwrap();
        assert_eq!(pk, Integer::from(27));
        assert_eq!(lifted, alloc::vec![zp_mod(&a, &pk)]);
    }

    #[test]
    fn hensel_lift_rejects_non_coprime() {
        let f5 = PrimeField::new(5).unwrap();
        let a = zp_from_i64(&[1, 2, 1]);
        let factors = alloc::vec![poly::from_i64(&f5, &[1, 1]), poly::from_i64(&f5, &[1, 1])];
        assert_eq!(hensel_lift(&a, &factors, &Integer::from(10)), Err(Error::NotCoprime));
    }

    #[test]
    fn factor_x4_plus_1_irreducible() {
        // Irreducible over Q though reducible mod every prime.
        let fs = factor_over_q(&qp(&[1, 0, 0, 0, 1]), 0).unwrap();
        assert_eq!(fs, alloc::vec![(qp(&[1, 0, 0, 0, 1]), 1)]);
        assert!(is_irreducible_over_q(&qp(&[1, 0, 0, 0, 1])).unwrap());
    }

    #[test]
    fn factor_x4_minus_1() {
        let fs = factor_over_q(&qp(&[-1, 0, 0, 0, 1]), 0).unwrap();
        assert_eq!(
            fs,
            alloc::vec![(qp(&[-1, 1]), 1), (qp(&[1, 1]), 1), (qp(&[1, 0, 1]), 1)]
        );
    }

    // Eisenstein criterion after substituting X -> X + 1; the independent
    // oracle for the fifth cyclotomic polynomial.
    fn eisenstein_after_shift(a: &Poly<Rational>, p: i64) -> bool {
        let shifted = poly::compose(&Rationals, a, &qp(&[1, 1]));
        let (s, _) = clear_denominators(&shifted);
        let p = Integer::from(p);
        let lc_ok = !s.leading_coefficient().unwrap().is_multiple_of(&p);
        let mid_ok = s.coeffs()[..s.coeffs().len() - 1]
            .iter()
            .all(|c| c.is_multiple_of(&p));
        let c0_ok = !s.coeffs()[0].is_multiple_of(&(&p * &p));
        lc_ok && mid_ok && c0_ok
    }

    #[test]
    fn factor_cyclotomic_5_irreducible() {
        let phi5 = qp(&[1, 1, 1, 1, 1]);
        assert!(eisenstein_after_shift(&phi5, 5));
        assert_eq!(factor_over_q(&phi5, 0).unwrap(), alloc::vec![(phi5.clone(), 1)]);
    }

    #[test]
    fn irreducibility_examples() {
        assert!(is_irreducible_over_q(&qp(&[1, 0, 1])).unwrap());
        assert!(!is_irreducible_over_q(&qp(&[-1, 0, 1])).unwrap());
        // X^3 - 2 is Eisenstein at 2 directly.
        let c = zp_from_i64(&[-2, 0, 0, 1]);
        let two = Integer::from(2);
        assert!(c.coeffs()[..3].iter().all(|x| x.is_multiple_of(&two)));
        assert!(!c.coeffs()[0].is_multiple_of(&Integer::from(4)));
        assert!(is_irreducible_over_q(&qp(&[-2, 0, 0, 1])).unwrap());
        assert_eq!(is_irreducible_over_q(&qp(&[5])), Err(Error::ConstantPolynomial));
    }

    #[test]
    fn factor_with_multiplicities_and_content() {
        // 3/2 * (X-1)^2 * (X^2+1)
        let a = poly::scale(
            &Rationals,
            &poly::mul(
                &Rationals,
                &poly::pow(&Rationals, &qp(&[-1, 1]), 2),
                &qp(&[1, 0, 1]),
            ),
            &Rational::from_pair(3, 2),
        );
        let fs = factor_over_q(&a, 0).unwrap();
        assert_eq!(fs, alloc::vec![(qp(&[-1, 1]), 2), (qp(&[1, 0, 1]), 1)]);
        // Multiply-back with the leading coefficient is exact.
        let mut back = poly::constant(&Rationals, a.leading_coefficient().unwrap().clone());
        for (f, m) in &fs {
            back = poly::mul(&Rationals, &back, &poly::pow(&Rationals, f, *m));
        }
        assert_eq!(back, a);
    }

    #[test]
    fn factor_zero_rejected() {
        assert_eq!(factor_over_q(&Poly::zero(), 0), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn combinations_enumerate() {
        let mut c = Combinations::new(4, 2);
        let mut all = Vec::new();
        while let Some(ix) = c.next() {
            all.push(ix.to_vec());
        }
        assert_eq!(
            all,
            alloc::vec![
                alloc::vec![0, 1],
                alloc::vec![0, 2],
                alloc::vec![0, 3],
                alloc::vec![1, 2],
                alloc::vec![1, 3],
                alloc::vec![2, 3]
            ]
        );
    }
}
