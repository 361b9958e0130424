//! Exact scalar arithmetic: arbitrary-precision integers and rationals,
//! prime-field scalars, and the coefficient-field contract every higher
//! module is generic over.

use core::fmt;
use core::hash::{Hash, Hasher};

use num_bigint::BigInt;
use num_integer::Integer as NumIntegerOps;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer in canonical sign + magnitude form.
pub type Integer = BigInt;

/// The coefficient-field contract.
///
/// A `Field` value is a description of the field (for the rationals a unit
/// struct, for a prime field the modulus, for an extension the minimal
/// polynomial); elements are plain immutable values. All operations are
/// pure. Binary operations panic when handed elements of two different
/// fields; the checked entry points on the concrete field types return
/// [`Error::FieldMismatch`] instead.
pub trait Field: Clone + PartialEq + fmt::Debug {
    type Elem: Clone + PartialEq + Eq + PartialOrd + Ord + Hash + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// Multiplicative inverse; `Err(DivisionByZero)` on zero.
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;

    /// `None` means characteristic zero.
    fn characteristic(&self) -> Option<u64>;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn pow(&self, a: &Self::Elem, mut n: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            n >>= 1;
        }
        acc
    }
}

// ---------------------------------------------------------------------------
// Rationals
// ---------------------------------------------------------------------------

/// Exact rational number in canonical reduced form: positive denominator,
/// gcd(|num|, den) = 1, zero stored as 0/1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Canonical reduced form of `num/den`; rejects a zero denominator.
    pub fn new(num: Integer, den: Integer) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(num, den)))
    }

    pub fn from_integer(n: Integer) -> Self {
        Rational(BigRational::from_integer(n))
    }

    pub fn from_i64(n: i64) -> Self {
        Self::from_integer(Integer::from(n))
    }

    /// `a/b` from machine integers; panics if `b == 0`.
    pub fn from_pair(a: i64, b: i64) -> Self {
        Self::new(Integer::from(a), Integer::from(b)).expect("nonzero denominator")
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &Integer {
        self.0.numer()
    }

    pub fn denom(&self) -> &Integer {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// The integer value, if the denominator is 1.
    pub fn to_integer(&self) -> Option<Integer> {
        self.is_integer().then(|| self.0.numer().clone())
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The field of rational numbers.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }

    fn one(&self) -> Rational {
        Rational::one()
    }

    fn from_i64(&self, n: i64) -> Rational {
        Rational::from_i64(n)
    }

    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        Rational(&a.0 + &b.0)
    }

    fn neg(&self, a: &Rational) -> Rational {
        Rational(-&a.0)
    }

    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        Rational(&a.0 * &b.0)
    }

    fn inv(&self, a: &Rational) -> Result<Rational> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.one().0 / &a.0))
    }

    fn characteristic(&self) -> Option<u64> {
        None
    }

    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
}

// ---------------------------------------------------------------------------
// Prime fields
// ---------------------------------------------------------------------------

/// Deterministic trial-division primality test; desk scale, `n < 2^63`.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.checked_mul(d).is_some_and(|sq| sq <= n) {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Largest modulus accepted for prime fields, so that products of two
/// residues fit in a `u64`.
pub const MAX_PRIME_MODULUS: u64 = 1 << 31;

/// The prime field F_p for a prime `p < 2^31`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Constructs F_p, checking primality by trial division.
    pub fn new(p: u64) -> Result<Self> {
        if p >= MAX_PRIME_MODULUS {
            return Err(Error::CapExceeded(alloc::format!(
                "prime modulus {p} exceeds 2^31"
            )));
        }
        if !is_prime_u64(p) {
            return Err(Error::NotPrime);
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// The residue of `n` as a field element.
    pub fn elem(&self, n: i64) -> PrimeFieldElement {
        self.from_i64(n)
    }

    fn check(&self, a: &PrimeFieldElement) {
        assert_eq!(a.modulus, self.p, "prime field element has wrong modulus");
    }
}

/// An element of F_p; carries its modulus so cross-field use is caught.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimeFieldElement {
    residue: u64,
    modulus: u64,
}

impl PrimeFieldElement {
    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }
}

impl fmt::Debug for PrimeFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue)
    }
}

impl fmt::Display for PrimeFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue)
    }
}

impl Field for PrimeField {
    type Elem = PrimeFieldElement;

    fn zero(&self) -> PrimeFieldElement {
        PrimeFieldElement { residue: 0, modulus: self.p }
    }

    fn one(&self) -> PrimeFieldElement {
        PrimeFieldElement { residue: 1 % self.p, modulus: self.p }
    }

    fn from_i64(&self, n: i64) -> PrimeFieldElement {
        let r = n.rem_euclid(self.p as i64) as u64;
        PrimeFieldElement { residue: r, modulus: self.p }
    }

    fn add(&self, a: &PrimeFieldElement, b: &PrimeFieldElement) -> PrimeFieldElement {
        self.check(a);
        self.check(b);
        PrimeFieldElement { residue: (a.residue + b.residue) % self.p, modulus: self.p }
    }

    fn neg(&self, a: &PrimeFieldElement) -> PrimeFieldElement {
        self.check(a);
        PrimeFieldElement { residue: (self.p - a.residue) % self.p, modulus: self.p }
    }

    fn mul(&self, a: &PrimeFieldElement, b: &PrimeFieldElement) -> PrimeFieldElement {
        self.check(a);
        self.check(b);
        PrimeFieldElement { residue: (a.residue * b.residue) % self.p, modulus: self.p }
    }

    fn inv(&self, a: &PrimeFieldElement) -> Result<PrimeFieldElement> {
        self.check(a);
        if a.residue == 0 {
            return Err(Error::DivisionByZero);
        }
        // Extended Euclid on (residue, p).
        let (mut r0, mut r1) = (a.residue as i64, self.p as i64);
        let (mut s0, mut s1) = (1i64, 0i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1, "modulus must be prime");
        Ok(self.from_i64(s0))
    }

    fn characteristic(&self) -> Option<u64> {
        Some(self.p)
    }

    fn is_zero(&self, a: &PrimeFieldElement) -> bool {
        a.residue == 0
    }
}

// ---------------------------------------------------------------------------
// Small helpers shared across the crate
// ---------------------------------------------------------------------------

pub(crate) fn gcd_u64(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd_u64(b, a % b) }
}

pub(crate) fn lcm_u64(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 { 0 } else { a / gcd_u64(a, b) * b }
}

/// FNV-1a over the `Hash` encoding of a value; used to fingerprint field
/// presentations so that elements can carry their owning field's identity.
pub(crate) fn fingerprint<T: Hash>(value: &T) -> u64 {
    struct Fnv(u64);
    impl Hasher for Fnv {
        fn finish(&self) -> u64 {
            self.0
        }
        fn write(&mut self, bytes: &[u8]) {
            for &b in bytes {
                self.0 ^= b as u64;
                self.0 = self.0.wrapping_mul(0x0000_0100_0000_01b3);
            }
        }
    }
    let mut h = Fnv(0xcbf2_9ce4_8422_2325);
    value.hash(&mut h);
    h.finish()
}

/// Exact integer square root rounded up.
pub(crate) fn ceil_sqrt(n: &Integer) -> Integer {
    debug_assert!(!n.is_negative());
    let r = num_integer::Roots::sqrt(n);
    if &(&r * &r) == n {
        r
    } else {
        r + 1
    }
}

/// Trial-division primality for arbitrary-precision integers (desk scale).
pub fn is_prime_integer(n: &Integer) -> bool {
    let n = n.abs();
    if n < Integer::from(2) {
        return false;
    }
    let two = Integer::from(2);
    if n.is_multiple_of(&two) {
        return n == two;
    }
    let mut d = Integer::from(3);
    while (&d * &d) <= n {
        if n.is_multiple_of(&d) {
            return false;
        }
        d += 2;
    }
    true
}
