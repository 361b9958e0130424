//! Dense univariate polynomials over a coefficient field.
//!
//! `Poly<E>` is a plain container (coefficient `i` is the coefficient of
//! `X^i`; the zero polynomial is the empty sequence). All arithmetic takes
//! the owning [`Field`] as the first argument, so one set of routines
//! serves the rationals, prime fields and algebraic extensions alike.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::arith::Field;
use crate::error::{Error, Result};

/// Dense polynomial; highest-index coefficient nonzero unless empty.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

impl<E> Poly<E> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Option<&E> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }
}

impl<E> Poly<E> {
    /// Builds from coefficients (index = power), trimming trailing
    /// elements matching the given zero predicate. Used where the
    /// coefficients form a ring that is not a field, e.g. the integers.
    pub fn from_trimmed(mut coeffs: Vec<E>, is_zero: impl Fn(&E) -> bool) -> Self {
        while coeffs.last().is_some_and(&is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }
}

impl<E: Ord> Poly<E> {
    /// The canonical tie-break order used everywhere for reproducible
    /// enumeration: degree first, then the coefficient sequence
    /// lexicographically by ascending power.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl<E: Ord> PartialOrd for Poly<E> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<E: Ord> Ord for Poly<E> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical_cmp(other)
    }
}

/// Builds a polynomial from coefficients (index = power), trimming
/// trailing zeros into canonical form.
pub fn from_coeffs<F: Field>(field: &F, coeffs: Vec<F::Elem>) -> Poly<F::Elem> {
    Poly::from_trimmed(coeffs, |c| field.is_zero(c))
}

pub fn constant<F: Field>(field: &F, c: F::Elem) -> Poly<F::Elem> {
    from_coeffs(field, alloc::vec![c])
}

pub fn one<F: Field>(field: &F) -> Poly<F::Elem> {
    constant(field, field.one())
}

/// The monomial `c * X^k`.
pub fn monomial<F: Field>(field: &F, c: F::Elem, k: usize) -> Poly<F::Elem> {
    if field.is_zero(&c) {
        return Poly::zero();
    }
    let mut coeffs = alloc::vec![field.zero(); k + 1];
    coeffs[k] = c;
    Poly { coeffs }
}

/// The indeterminate `X`.
pub fn x<F: Field>(field: &F) -> Poly<F::Elem> {
    monomial(field, field.one(), 1)
}

/// Convenience constructor from small integers, low power first.
pub fn from_i64<F: Field>(field: &F, coeffs: &[i64]) -> Poly<F::Elem> {
    from_coeffs(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
}

pub fn add<F: Field>(field: &F, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
    let n = a.coeffs.len().max(b.coeffs.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let c = match (a.coeffs.get(i), b.coeffs.get(i)) {
            (Some(x), Some(y)) => field.add(x, y),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => unreachable!(),
        };
        out.push(c);
    }
    from_coeffs(field, out)
}

pub fn neg<F: Field>(field: &F, a: &Poly<F::Elem>) -> Poly<F::Elem> {
    Poly { coeffs: a.coeffs.iter().map(|c| field.neg(c)).collect() }
}

pub fn sub<F: Field>(field: &F, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
    add(field, a, &neg(field, b))
}

/// Schoolbook product; adequate at desk-scale degrees.
pub fn mul<F: Field>(field: &F, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
    if a.is_zero() || b.is_zero() {
        return Poly::zero();
    }
    let mut out = alloc::vec![field.zero(); a.coeffs.len() + b.coeffs.len() - 1];
    for (i, ai) in a.coeffs.iter().enumerate() {
        if field.is_zero(ai) {
            continue;
        }
        for (j, bj) in b.coeffs.iter().enumerate() {
            out[i + j] = field.add(&out[i + j], &field.mul(ai, bj));
        }
    }
    from_coeffs(field, out)
}

pub fn scale<F: Field>(field: &F, a: &Poly<F::Elem>, c: &F::Elem) -> Poly<F::Elem> {
    from_coeffs(field, a.coeffs.iter().map(|x| field.mul(x, c)).collect())
}

pub fn pow<F: Field>(field: &F, a: &Poly<F::Elem>, mut n: usize) -> Poly<F::Elem> {
    let mut base = a.clone();
    let mut acc = one(field);
    while n > 0 {
        if n & 1 == 1 {
            acc = mul(field, &acc, &base);
        }
        n >>= 1;
        if n > 0 {
            base = mul(field, &base, &base);
        }
    }
    acc
}

/// Euclidean division: `a = q*b + r` with `deg r < deg b`.
pub fn divmod<F: Field>(
    field: &F,
    a: &Poly<F::Elem>,
    b: &Poly<F::Elem>,
) -> Result<(Poly<F::Elem>, Poly<F::Elem>)> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let db = b.coeffs.len() - 1;
    if a.coeffs.len() < b.coeffs.len() {
        return Ok((Poly::zero(), a.clone()));
    }
    let lc_inv = field.inv(b.leading_coefficient().expect("b nonzero"))?;
    let mut rem = a.coeffs.clone();
    let dq = a.coeffs.len() - b.coeffs.len();
    let mut quot = alloc::vec![field.zero(); dq + 1];
    for i in (0..=dq).rev() {
        let top = rem[i + db].clone();
        if field.is_zero(&top) {
            continue;
        }
        let q = field.mul(&top, &lc_inv);
        for (j, bj) in b.coeffs.iter().enumerate() {
            rem[i + j] = field.sub(&rem[i + j], &field.mul(&q, bj));
        }
        quot[i] = q;
    }
    debug_assert!(rem[db..].iter().all(|c| field.is_zero(c)));
    rem.truncate(db);
    Ok((from_coeffs(field, quot), from_coeffs(field, rem)))
}

pub fn rem<F: Field>(field: &F, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Result<Poly<F::Elem>> {
    Ok(divmod(field, a, b)?.1)
}

/// Exact division; errors when the remainder is nonzero.
pub fn div_exact<F: Field>(
    field: &F,
    a: &Poly<F::Elem>,
    b: &Poly<F::Elem>,
) -> Result<Poly<F::Elem>> {
    let (q, r) = divmod(field, a, b)?;
    if !r.is_zero() {
        return Err(Error::InternalInconsistency(alloc::format!(
            "expected exact division, remainder has degree {:?}",
            r.degree()
        )));
    }
    Ok(q)
}

pub fn divides<F: Field>(field: &F, b: &Poly<F::Elem>, a: &Poly<F::Elem>) -> Result<bool> {
    Ok(rem(field, a, b)?.is_zero())
}

/// Scales a nonzero polynomial to leading coefficient one.
pub fn monic<F: Field>(field: &F, a: &Poly<F::Elem>) -> Result<Poly<F::Elem>> {
    let lc = a.leading_coefficient().ok_or(Error::ZeroPolynomial)?;
    if field.is_one(lc) {
        return Ok(a.clone());
    }
    let inv = field.inv(lc)?;
    Ok(scale(field, a, &inv))
}

pub fn is_monic<F: Field>(field: &F, a: &Poly<F::Elem>) -> bool {
    a.leading_coefficient().is_some_and(|c| field.is_one(c))
}

/// Monic greatest common divisor by the Euclidean algorithm.
pub fn gcd<F: Field>(field: &F, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Result<Poly<F::Elem>> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::BothZero);
    }
    let mut r0 = a.clone();
    let mut r1 = b.clone();
    while !r1.is_zero() {
        let r = rem(field, &r0, &r1)?;
        r0 = r1;
        r1 = r;
    }
    monic(field, &r0)
}

/// Extended Euclid: returns `(g, s, t)` with `s*a + t*b = g`, `g` monic.
pub fn extended_gcd<F: Field>(
    field: &F,
    a: &Poly<F::Elem>,
    b: &Poly<F::Elem>,
) -> Result<(Poly<F::Elem>, Poly<F::Elem>, Poly<F::Elem>)> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::BothZero);
    }
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (one(field), Poly::zero());
    let (mut t0, mut t1) = (Poly::zero(), one(field));
    while !r1.is_zero() {
        let (q, r) = divmod(field, &r0, &r1)?;
        (r0, r1) = (r1, r);
        let ns = sub(field, &s0, &mul(field, &q, &s1));
        (s0, s1) = (s1, ns);
        let nt = sub(field, &t0, &mul(field, &q, &t1));
        (t0, t1) = (t1, nt);
    }
    let lc_inv = field.inv(r0.leading_coefficient().expect("nonzero"))?;
    Ok((
        scale(field, &r0, &lc_inv),
        scale(field, &s0, &lc_inv),
        scale(field, &t0, &lc_inv),
    ))
}

pub fn derivative<F: Field>(field: &F, a: &Poly<F::Elem>) -> Poly<F::Elem> {
    if a.coeffs.len() <= 1 {
        return Poly::zero();
    }
    let out = a.coeffs[1..]
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let k = field.from_i64((i + 1) as i64);
            field.mul(c, &k)
        })
        .collect();
    from_coeffs(field, out)
}

/// Resultant of two nonzero polynomials, by the Euclidean scheme.
///
/// With the convention `Res(a, b) = lc(a)^deg(b) * prod b(alpha_i)` over
/// the roots of `a` counted with multiplicity. Zero exactly when the two
/// polynomials share a nonconstant common factor.
pub fn resultant<F: Field>(field: &F, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Result<F::Elem> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut a = a.clone();
    let mut b = b.clone();
    let mut acc = field.one();
    loop {
        let da = a.coeffs.len() - 1;
        let db = b.coeffs.len() - 1;
        if db == 0 {
            // Res(a, c) = c^deg(a)
            return Ok(field.mul(&acc, &field.pow(&b.coeffs[0], da as u64)));
        }
        if da == 0 {
            // Res(c, b) = c^deg(b)
            return Ok(field.mul(&acc, &field.pow(&a.coeffs[0], db as u64)));
        }
        // Res(a, b) = (-1)^(da*db) * lc(b)^(da - dr) * Res(b, a rem b)
        let r = rem(field, &a, &b)?;
        if r.is_zero() {
            return Ok(field.zero());
        }
        if (da * db) % 2 == 1 {
            acc = field.neg(&acc);
        }
        let dr = r.coeffs.len() - 1;
        let lcb = b.leading_coefficient().expect("nonzero").clone();
        acc = field.mul(&acc, &field.pow(&lcb, (da - dr) as u64));
        a = b;
        b = r;
    }
}

/// The squarefree part `a / gcd(a, a')`, monic.
///
/// In characteristic p a vanishing derivative of a nonconstant input means
/// the polynomial is a p-th power and is rejected as inseparable.
pub fn squarefree_part<F: Field>(field: &F, a: &Poly<F::Elem>) -> Result<Poly<F::Elem>> {
    if a.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let da = derivative(field, a);
    if da.is_zero() {
        if a.is_constant() {
            return monic(field, a);
        }
        debug_assert!(field.characteristic().is_some());
        return Err(Error::InseparableInput);
    }
    let g = gcd(field, a, &da)?;
    let q = div_exact(field, a, &g)?;
    monic(field, &q)
}

/// Horner evaluation.
pub fn eval<F: Field>(field: &F, a: &Poly<F::Elem>, x: &F::Elem) -> F::Elem {
    let mut acc = field.zero();
    for c in a.coeffs.iter().rev() {
        acc = field.add(&field.mul(&acc, x), c);
    }
    acc
}

/// Substitutes the polynomial `b` for the indeterminate of `a`.
pub fn compose<F: Field>(field: &F, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
    let mut acc = Poly::zero();
    for c in a.coeffs.iter().rev() {
        acc = add(field, &mul(field, &acc, b), &constant(field, c.clone()));
    }
    acc
}

/// Yun's squarefree decomposition in characteristic zero: returns the
/// monic squarefree parts with their multiplicities, product recovering
/// the monic input.
pub fn squarefree_decomposition<F: Field>(
    field: &F,
    a: &Poly<F::Elem>,
) -> Result<Vec<(Poly<F::Elem>, usize)>> {
    debug_assert!(field.characteristic().is_none());
    if a.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let a = monic(field, a)?;
    if a.is_constant() {
        return Ok(Vec::new());
    }
    let da = derivative(field, &a);
    let g = gcd(field, &a, &da)?;
    let mut c = div_exact(field, &a, &g)?;
    let mut d = sub(field, &div_exact(field, &da, &g)?, &derivative(field, &c));
    let mut out = Vec::new();
    let mut i = 1usize;
    while !c.is_constant() {
        let p = gcd(field, &c, &d)?;
        if !p.is_constant() {
            out.push((p.clone(), i));
        }
        c = div_exact(field, &c, &p)?;
        d = sub(field, &div_exact(field, &d, &p)?, &derivative(field, &c));
        i += 1;
    }
    Ok(out)
}

/// Lagrange interpolation through distinct sample points.
pub(crate) fn interpolate<F: Field>(
    field: &F,
    points: &[(F::Elem, F::Elem)],
) -> Result<Poly<F::Elem>> {
    let mut acc = Poly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut li = one(field);
        let mut denom = field.one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let factor = from_coeffs(field, alloc::vec![field.neg(xj), field.one()]);
            li = mul(field, &li, &factor);
            denom = field.mul(&denom, &field.sub(xi, xj));
        }
        let w = field.mul(yi, &field.inv(&denom)?);
        acc = add(field, &acc, &scale(field, &li, &w));
    }
    Ok(acc)
}
