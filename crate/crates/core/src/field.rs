//! Finite fields `F_{p^s}` with a fixed modulus and table-driven arithmetic.
//!
//! An element is stored as the integer `c_0 + c_1 p + ... + c_{s-1} p^{s-1}`
//! of its coefficient vector in the polynomial basis `1, y, ..., y^{s-1}`,
//! where `y` is a root of the modulus. Multiplication goes through discrete
//! log tables relative to the canonical generator and addition of nonzero
//! elements through a Zech logarithm table, so every operation is O(1).
//!
//! Two total orders are in play. The integer encoding orders elements with
//! `c_{s-1}` most significant; the canonical order used for sorting factors,
//! choosing the default modulus and choosing the generator compares the
//! coefficient vectors `(c_0, c_1, ..., c_{s-1})` lexicographically. See
//! [`FieldSpec::order_key`].

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::arith;
use crate::error::{Error, Result};
use crate::poly::Poly;

/// Largest field size accepted by [`FieldSpec::new`].
pub const MAX_FIELD_SIZE: u64 = 1 << 20;

const NO_LOG: u32 = u32::MAX;

/// A field element, in integer encoding. Only meaningful together with the
/// [`FieldSpec`] that produced it.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem(u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    /// The integer encoding `c_0 + c_1 p + ...`.
    pub fn encoding(self) -> u64 {
        self.0 as u64
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

struct FieldData {
    p: u32,
    s: u32,
    q: u32,
    modulus: Vec<u32>,
    generator: Elem,
    // exp[k] = g^k for 0 <= k < q - 1
    exp: Vec<u32>,
    // log[e] for e != 0; log[0] = NO_LOG
    log: Vec<u32>,
    // zech[d] = log(1 + g^d), NO_LOG when 1 + g^d = 0
    zech: Vec<u32>,
}

/// A concrete finite field `F_{p^s}`. Cheap to clone.
#[derive(Clone)]
pub struct FieldSpec(Arc<FieldData>);

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.s == other.0.s && self.0.modulus == other.0.modulus)
    }
}

impl Eq for FieldSpec {}

impl Hash for FieldSpec {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.p.hash(state);
        self.0.s.hash(state);
        self.0.modulus.hash(state);
    }
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}^{} mod {:?}", self.0.p, self.0.s, self.0.modulus)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.s == 1 {
            write!(f, "F_{}", self.0.p)
        } else {
            write!(f, "F_{}^{}", self.0.p, self.0.s)
        }
    }
}

/// Builds `F_{p^s}`, with the default modulus unless one is supplied
/// (coefficients constant term first, monic, degree `s`).
pub fn make_field(p: u64, s: u32, modulus: Option<&[u32]>) -> Result<FieldSpec> {
    match modulus {
        Some(m) => FieldSpec::with_modulus(p, s, m),
        None => FieldSpec::new(p, s),
    }
}

fn check_size(p: u64, s: u32) -> Result<u32> {
    if !arith::is_prime(p) {
        return Err(Error::CompositeP(p));
    }
    if s == 0 {
        return Err(Error::ZeroDegree);
    }
    let too_large = Error::FieldTooLarge {
        p,
        s,
        bound: MAX_FIELD_SIZE,
    };
    let q = p.checked_pow(s).ok_or(too_large.clone())?;
    if q > MAX_FIELD_SIZE {
        return Err(too_large);
    }
    Ok(q as u32)
}

impl FieldSpec {
    /// `F_{p^s}` with the default modulus: the smallest monic irreducible of
    /// degree `s` under lexicographic order of `(a_0, ..., a_{s-1})`.
    pub fn new(p: u64, s: u32) -> Result<Self> {
        check_size(p, s)?;
        let p32 = p as u32;
        if s == 1 {
            return Ok(Self::build(p32, 1, vec![0, 1]));
        }
        let prime = Self::build(p32, 1, vec![0, 1]);
        let count = p.pow(s);
        for key in 0..count {
            let mut coeffs = key_to_digits(key, p32, s);
            // a_0 = 0 means x divides the candidate
            if coeffs[0] == 0 {
                continue;
            }
            coeffs.push(1);
            let cand = Poly::from_coeffs(
                &prime,
                coeffs.iter().map(|&c| Elem(c)).collect(),
            );
            if cand.is_irreducible() {
                return Ok(Self::build(p32, s, coeffs));
            }
        }
        unreachable!("an irreducible polynomial of every degree exists")
    }

    /// `F_{p^s}` with an explicit modulus.
    pub fn with_modulus(p: u64, s: u32, modulus: &[u32]) -> Result<Self> {
        check_size(p, s)?;
        if modulus.len() != s as usize + 1 {
            return Err(Error::InvalidModulus(format!(
                "expected {} coefficients, got {}",
                s + 1,
                modulus.len()
            )));
        }
        if modulus.last() != Some(&1) {
            return Err(Error::InvalidModulus("modulus must be monic".into()));
        }
        if modulus.iter().any(|&c| c as u64 >= p) {
            return Err(Error::InvalidModulus("coefficient not reduced mod p".into()));
        }
        let p32 = p as u32;
        if s > 1 {
            let prime = Self::build(p32, 1, vec![0, 1]);
            let cand = Poly::from_coeffs(&prime, modulus.iter().map(|&c| Elem(c)).collect());
            if !cand.is_irreducible() {
                return Err(Error::ReducibleModulus(p));
            }
        }
        Ok(Self::build(p32, s, modulus.to_vec()))
    }

    fn build(p: u32, s: u32, modulus: Vec<u32>) -> Self {
        let q = p.pow(s);
        let order = (q - 1) as u64;
        let primes = arith::prime_divisors(order);
        let mut generator = None;
        for key in 1..q as u64 {
            let cand = key_to_digits(key, p, s);
            let is_generator = primes
                .iter()
                .all(|&l| !is_one(&slow_pow(&cand, order / l, p, &modulus)));
            if is_generator {
                generator = Some(cand);
                break;
            }
        }
        let g = generator.expect("multiplicative group is cyclic");

        let mut exp = Vec::with_capacity(order as usize);
        let mut log = vec![NO_LOG; q as usize];
        let mut cur = vec![0u32; s as usize];
        cur[0] = 1;
        for k in 0..order as u32 {
            let enc = digits_to_enc(&cur, p);
            exp.push(enc);
            log[enc as usize] = k;
            cur = slow_mul(&cur, &g, p, &modulus);
        }
        let mut zech = Vec::with_capacity(order as usize);
        for &v in &exp {
            let c0 = v % p;
            let w = if c0 == p - 1 { v - (p - 1) } else { v + 1 };
            zech.push(log[w as usize]);
        }
        let generator = Elem(digits_to_enc(&g, p));
        FieldSpec(Arc::new(FieldData {
            p,
            s,
            q,
            modulus,
            generator,
            exp,
            log,
            zech,
        }))
    }

    pub fn p(&self) -> u64 {
        self.0.p as u64
    }

    pub fn s(&self) -> u32 {
        self.0.s
    }

    pub fn q(&self) -> u64 {
        self.0.q as u64
    }

    /// Modulus coefficients, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    /// The canonical primitive element: the smallest element, in canonical
    /// order, of multiplicative order `q - 1`.
    pub fn generator(&self) -> Elem {
        self.0.generator
    }

    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }

    pub fn one(&self) -> Elem {
        Elem::ONE
    }

    pub fn neg_one(&self) -> Elem {
        Elem(self.0.p - 1)
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> Elem {
        Elem(n.rem_euclid(self.0.p as i64) as u32)
    }

    /// Element from its integer encoding.
    pub fn elem(&self, encoding: u64) -> Result<Elem> {
        if encoding >= self.q() {
            return Err(Error::InvalidElement(encoding));
        }
        Ok(Elem(encoding as u32))
    }

    /// Element from its coefficient vector (constant term first, length `s`).
    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<Elem> {
        if coeffs.len() != self.0.s as usize || coeffs.iter().any(|&c| c >= self.0.p) {
            return Err(Error::InvalidArgument(format!(
                "coefficient vector {coeffs:?} is not a reduced length-{} vector",
                self.0.s
            )));
        }
        Ok(Elem(digits_to_enc(coeffs, self.0.p)))
    }

    pub fn coeffs(&self, e: Elem) -> Vec<u32> {
        key_digits_le(e.0 as u64, self.0.p, self.0.s)
    }

    /// Sort key realizing the canonical order: lexicographic on
    /// `(c_0, c_1, ..., c_{s-1})`.
    pub fn order_key(&self, e: Elem) -> u64 {
        if self.0.s == 1 {
            return e.0 as u64;
        }
        let p = self.0.p as u64;
        self.coeffs(e).iter().fold(0u64, |acc, &c| acc * p + c as u64)
    }

    pub fn cmp_elems(&self, a: Elem, b: Elem) -> Ordering {
        self.order_key(a).cmp(&self.order_key(b))
    }

    /// All `q` elements in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.0.q).map(Elem)
    }

    /// The `q - 1` nonzero elements in encoding order.
    pub fn units(&self) -> impl Iterator<Item = Elem> {
        (1..self.0.q).map(Elem)
    }

    fn order_u64(&self) -> u64 {
        (self.0.q - 1) as u64
    }

    fn exp_of(&self, k: u64) -> Elem {
        Elem(self.0.exp[(k % self.order_u64()) as usize])
    }

    /// Discrete log to the canonical generator, `None` for zero.
    pub fn log(&self, e: Elem) -> Option<u64> {
        match self.0.log[e.0 as usize] {
            NO_LOG => None,
            l => Some(l as u64),
        }
    }

    /// `generator^k` for any integer `k`.
    pub fn gen_pow(&self, k: i64) -> Elem {
        let ord = self.order_u64() as i128;
        self.exp_of((k as i128).rem_euclid(ord) as u64)
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 {
            return b;
        }
        if b.0 == 0 {
            return a;
        }
        let p = self.0.p;
        if self.0.s == 1 {
            return Elem((a.0 + b.0) % p);
        }
        let ord = self.0.q - 1;
        let la = self.0.log[a.0 as usize];
        let lb = self.0.log[b.0 as usize];
        let d = if lb >= la { lb - la } else { lb + ord - la };
        match self.0.zech[d as usize] {
            NO_LOG => Elem::ZERO,
            z => self.exp_of(la as u64 + z as u64),
        }
    }

    pub fn neg(&self, a: Elem) -> Elem {
        if a.0 == 0 || self.0.p == 2 {
            return a;
        }
        if self.0.s == 1 {
            return Elem(self.0.p - a.0);
        }
        let la = self.0.log[a.0 as usize] as u64;
        self.exp_of(la + self.order_u64() / 2)
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        if self.0.s == 1 {
            return Elem(((a.0 as u64 * b.0 as u64) % self.0.p as u64) as u32);
        }
        let la = self.0.log[a.0 as usize] as u64;
        let lb = self.0.log[b.0 as usize] as u64;
        self.exp_of(la + lb)
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        let la = self.log(a).ok_or(Error::DivisionByZero)?;
        Ok(self.exp_of(self.order_u64() - la))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e` for any integer exponent; negative exponents invert first.
    pub fn pow(&self, a: Elem, e: i64) -> Result<Elem> {
        match self.log(a) {
            None if e > 0 => Ok(Elem::ZERO),
            None if e == 0 => Ok(Elem::ONE),
            None => Err(Error::DivisionByZero),
            Some(la) => {
                let ord = self.order_u64() as i128;
                let k = (la as i128 * e as i128).rem_euclid(ord);
                Ok(self.exp_of(k as u64))
            }
        }
    }

    /// `a^e` for a nonnegative exponent.
    pub fn pow_u(&self, a: Elem, e: u64) -> Elem {
        match self.log(a) {
            None if e == 0 => Elem::ONE,
            None => Elem::ZERO,
            Some(la) => self.exp_of(arith::mul_mod(la, e, self.order_u64())),
        }
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: Elem) -> Result<u64> {
        let la = self.log(a).ok_or(Error::ZeroElement)?;
        let ord = self.order_u64();
        Ok(ord / arith::gcd(la, ord))
    }

    /// The canonical element of order exactly `n`: `generator^((q-1)/n)`.
    pub fn root_of_unity(&self, n: u64) -> Result<Elem> {
        let ord = self.order_u64();
        if n == 0 || ord % n != 0 {
            return Err(Error::NoSuchRoot(n));
        }
        Ok(self.exp_of(ord / n))
    }

    /// The unique `lam0` with `lam0^(p^r) = lam`. Computed as `lam^e` with
    /// `e` the inverse of `p^r` modulo `q - 1`.
    pub fn prth_root(&self, lam: Elem, r: u32) -> Result<Elem> {
        let l = self.log(lam).ok_or(Error::ZeroElement)?;
        let ord = self.order_u64();
        let pr = arith::pow_mod(self.p(), r as u64, ord);
        let e = arith::inv_mod(pr, ord).expect("p is coprime to q - 1");
        Ok(self.exp_of(arith::mul_mod(l, e, ord)))
    }

    /// Some `delta` with `delta^n = lam`, or `None` if `lam` is not an
    /// `n`-th power. With `L = log(lam)` a root exists iff
    /// `gcd(n, q-1) | L`; the smallest nonnegative discrete log solving
    /// `n k = L (mod q-1)` is returned.
    pub fn nth_root_of(&self, lam: Elem, n: u64) -> Result<Option<Elem>> {
        let l = self.log(lam).ok_or(Error::ZeroElement)?;
        if n == 0 {
            return Err(Error::InvalidArgument("root index must be positive".into()));
        }
        let ord = self.order_u64();
        let g = arith::gcd(n % ord, ord);
        if l % g != 0 {
            return Ok(None);
        }
        let reduced = ord / g;
        let k = if reduced == 1 {
            0
        } else {
            let inv = arith::inv_mod((n / g) % reduced, reduced).expect("coprime after reduction");
            arith::mul_mod((l / g) % reduced, inv, reduced)
        };
        Ok(Some(self.exp_of(k)))
    }

    /// Binds an element to this field.
    pub fn felt(&self, e: Elem) -> Felt {
        Felt {
            field: self.clone(),
            elem: e,
        }
    }
}

/// An element together with its field; arithmetic is checked for field
/// agreement.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Felt {
    field: FieldSpec,
    elem: Elem,
}

impl Felt {
    pub fn new(field: &FieldSpec, elem: Elem) -> Self {
        field.felt(elem)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn elem(&self) -> Elem {
        self.elem
    }

    pub fn coeffs(&self) -> Vec<u32> {
        self.field.coeffs(self.elem)
    }

    fn same(&self, other: &Felt) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Felt) -> Result<Felt> {
        self.same(other)?;
        Ok(self.field.felt(self.field.add(self.elem, other.elem)))
    }

    pub fn sub(&self, other: &Felt) -> Result<Felt> {
        self.same(other)?;
        Ok(self.field.felt(self.field.sub(self.elem, other.elem)))
    }

    pub fn mul(&self, other: &Felt) -> Result<Felt> {
        self.same(other)?;
        Ok(self.field.felt(self.field.mul(self.elem, other.elem)))
    }

    pub fn div(&self, other: &Felt) -> Result<Felt> {
        self.same(other)?;
        Ok(self.field.felt(self.field.div(self.elem, other.elem)?))
    }

    pub fn inv(&self) -> Result<Felt> {
        Ok(self.field.felt(self.field.inv(self.elem)?))
    }

    pub fn pow(&self, e: i64) -> Result<Felt> {
        Ok(self.field.felt(self.field.pow(self.elem, e)?))
    }

    pub fn order(&self) -> Result<u64> {
        self.field.element_order(self.elem)
    }
}

impl fmt::Display for Felt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.elem.0)
    }
}

// Coefficient vector (c_0 first) for a canonical-order key, where c_0 is the
// most significant digit.
fn key_to_digits(key: u64, p: u32, s: u32) -> Vec<u32> {
    let mut digits = key_digits_le(key, p, s);
    digits.reverse();
    digits
}

fn key_digits_le(mut v: u64, p: u32, s: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(s as usize);
    for _ in 0..s {
        out.push((v % p as u64) as u32);
        v /= p as u64;
    }
    out
}

fn digits_to_enc(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0u32, |acc, &c| acc * p + c)
}

fn is_one(d: &[u32]) -> bool {
    d[0] == 1 && d[1..].iter().all(|&c| c == 0)
}

// Schoolbook product of two residues modulo (p, modulus); used only while
// building the tables.
fn slow_mul(a: &[u32], b: &[u32], p: u32, modulus: &[u32]) -> Vec<u32> {
    let s = a.len();
    let p64 = p as u64;
    let mut prod = vec![0u64; 2 * s - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p64;
        }
    }
    for top in (s..prod.len()).rev() {
        let c = prod[top];
        if c == 0 {
            continue;
        }
        prod[top] = 0;
        for (k, &m) in modulus[..s].iter().enumerate() {
            let idx = top - s + k;
            prod[idx] = (prod[idx] + (p64 - c) * m as u64) % p64;
        }
    }
    prod.truncate(s);
    prod.into_iter().map(|c| c as u32).collect()
}

fn slow_pow(a: &[u32], mut e: u64, p: u32, modulus: &[u32]) -> Vec<u32> {
    let mut acc = vec![0u32; a.len()];
    acc[0] = 1;
    let mut base = a.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = slow_mul(&acc, &base, p, modulus);
        }
        base = slow_mul(&base, &base, p, modulus);
        e >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_basics() {
        let f = FieldSpec::new(5, 1).unwrap();
        assert_eq!(f.q(), 5);
        assert_eq!(f.element_order(f.generator()).unwrap(), 4);
        assert_eq!(f.generator(), Elem(2));
        assert_eq!(f.add(Elem(2), Elem(3)), Elem::ZERO);
        assert_eq!(f.inv(Elem(3)).unwrap(), Elem(2));
        assert_eq!(f.element_order(Elem(2)).unwrap(), 4);
        assert_eq!(f.element_order(f.neg_one()).unwrap(), 2);
        assert_eq!(f.element_order(f.one()).unwrap(), 1);
    }

    #[test]
    fn composite_characteristic_rejected() {
        assert_eq!(FieldSpec::new(4, 1).unwrap_err(), Error::CompositeP(4));
        assert_eq!(FieldSpec::new(1, 1).unwrap_err(), Error::CompositeP(1));
        assert!(matches!(FieldSpec::new(5, 9), Err(Error::FieldTooLarge { .. })));
    }

    #[test]
    fn default_modulus_is_smallest_irreducible() {
        // x^2 + 1 splits over F_5; x^2 + x + 1 has discriminant -3 = 2, a non-square.
        let f = FieldSpec::new(5, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        // F_9: x^2 + 1 is irreducible over F_3 (-1 is a non-square).
        assert_eq!(FieldSpec::new(3, 2).unwrap().modulus(), &[1, 0, 1]);
        // F_4: x^2 + x + 1.
        assert_eq!(FieldSpec::new(2, 2).unwrap().modulus(), &[1, 1, 1]);
    }

    #[test]
    fn supplied_modulus_validated() {
        assert!(FieldSpec::with_modulus(5, 2, &[2, 0, 1]).is_ok());
        assert_eq!(
            FieldSpec::with_modulus(5, 2, &[1, 0, 1]).unwrap_err(),
            Error::ReducibleModulus(5)
        );
        assert!(matches!(
            FieldSpec::with_modulus(5, 2, &[2, 0, 2]),
            Err(Error::InvalidModulus(_))
        ));
        let alt = FieldSpec::with_modulus(5, 2, &[3, 0, 1]).unwrap();
        assert_ne!(alt, FieldSpec::new(5, 2).unwrap());
    }

    #[test]
    fn exhaustive_generator_order_f25() {
        // brute-force power table of the generator
        let f = FieldSpec::new(5, 2).unwrap();
        let g = f.generator();
        let mut seen = std::collections::HashSet::new();
        let mut cur = f.one();
        for _ in 0..24 {
            assert!(seen.insert(cur));
            cur = f.mul(cur, g);
        }
        assert_eq!(cur, f.one());
        assert_eq!(seen.len(), 24);
        // generator is the smallest element of order 24 in canonical order
        let smallest = f
            .units()
            .filter(|&e| f.element_order(e).unwrap() == 24)
            .min_by_key(|&e| f.order_key(e))
            .unwrap();
        assert_eq!(smallest, g);
        let b12 = f.pow(g, 12).unwrap();
        assert_eq!(f.mul(b12, b12), f.one());
    }

    #[test]
    fn zech_addition_matches_coefficientwise() {
        for (p, s) in [(5u64, 2u32), (3, 2), (2, 3), (3, 3), (7, 2)] {
            let f = FieldSpec::new(p, s).unwrap();
            for a in f.elements() {
                for b in f.elements() {
                    let ca = f.coeffs(a);
                    let cb = f.coeffs(b);
                    let sum: Vec<u32> = ca
                        .iter()
                        .zip(&cb)
                        .map(|(&x, &y)| (x + y) % p as u32)
                        .collect();
                    assert_eq!(f.coeffs(f.add(a, b)), sum);
                    assert_eq!(f.add(f.sub(a, b), b), a);
                }
            }
        }
    }

    #[test]
    fn multiplication_matches_schoolbook() {
        let f = FieldSpec::new(3, 3).unwrap();
        for a in f.elements() {
            for b in f.elements() {
                let expect = slow_mul(&f.coeffs(a), &f.coeffs(b), 3, f.modulus());
                assert_eq!(f.coeffs(f.mul(a, b)), expect);
            }
        }
    }

    #[test]
    fn fermat_for_all_units() {
        for (p, s) in [(5u64, 1u32), (11, 2), (3, 4), (7, 2), (2, 5)] {
            let f = FieldSpec::new(p, s).unwrap();
            for a in f.units() {
                assert_eq!(f.pow_u(a, f.q() - 1), f.one());
            }
        }
    }

    #[test]
    fn roots_of_unity() {
        let f = FieldSpec::new(5, 1).unwrap();
        assert_eq!(f.root_of_unity(2).unwrap(), Elem(4));
        let r4 = f.root_of_unity(4).unwrap();
        assert!(r4 == Elem(2) || r4 == Elem(3));
        assert_eq!(f.root_of_unity(3).unwrap_err(), Error::NoSuchRoot(3));
    }

    #[test]
    fn prth_root_examples() {
        let f5 = FieldSpec::new(5, 1).unwrap();
        for lam in f5.units() {
            assert_eq!(f5.prth_root(lam, 1).unwrap(), lam);
        }
        let f9 = FieldSpec::new(3, 2).unwrap();
        let b = f9.generator();
        assert_eq!(f9.prth_root(b, 1).unwrap(), f9.pow(b, 3).unwrap());
        assert_eq!(f9.prth_root(f9.one(), 3).unwrap(), f9.one());
        assert_eq!(f9.prth_root(Elem::ZERO, 1).unwrap_err(), Error::ZeroElement);
    }

    #[test]
    fn nth_root_examples() {
        let f5 = FieldSpec::new(5, 1).unwrap();
        assert_eq!(f5.nth_root_of(Elem(2), 2).unwrap(), None);
        assert_eq!(f5.nth_root_of(f5.one(), 7).unwrap(), Some(f5.one()));
        let f25 = FieldSpec::new(5, 2).unwrap();
        let b = f25.generator();
        let lam = f25.pow(b, 2).unwrap();
        let delta = f25.nth_root_of(lam, 1750).unwrap().unwrap();
        assert_eq!(delta, f25.pow(b, 11).unwrap());
        assert_eq!(f25.pow_u(delta, 1750), lam);
    }

    #[test]
    fn felt_checks_fields() {
        let f5 = FieldSpec::new(5, 1).unwrap();
        let f7 = FieldSpec::new(7, 1).unwrap();
        let a = f5.felt(Elem(2));
        let b = f7.felt(Elem(2));
        assert_eq!(a.add(&b).unwrap_err(), Error::FieldMismatch);
        assert_eq!(a.div(&f5.felt(Elem::ZERO)).unwrap_err(), Error::DivisionByZero);
        assert_eq!(a.pow(-1).unwrap(), f5.felt(Elem(3)));
        assert_eq!(a.mul(&a.inv().unwrap()).unwrap(), f5.felt(Elem::ONE));
    }
}
