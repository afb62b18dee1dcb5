//! Dense univariate polynomials over a [`FieldSpec`].

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::arith;
use crate::error::{Error, Result};
use crate::field::{Elem, FieldSpec};

/// A polynomial with coefficients constant term first and no trailing
/// (leading-degree) zeros; the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    field: FieldSpec,
    coeffs: Vec<Elem>,
}

impl Poly {
    pub fn from_coeffs(field: &FieldSpec, mut coeffs: Vec<Elem>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    /// Polynomial with prime-subfield coefficients given as integers.
    pub fn from_ints(field: &FieldSpec, coeffs: &[i64]) -> Self {
        Self::from_coeffs(field, coeffs.iter().map(|&c| field.from_int(c)).collect())
    }

    pub fn zero(field: &FieldSpec) -> Self {
        Self::from_coeffs(field, Vec::new())
    }

    pub fn one(field: &FieldSpec) -> Self {
        Self::constant(field, Elem::ONE)
    }

    pub fn constant(field: &FieldSpec, c: Elem) -> Self {
        Self::from_coeffs(field, vec![c])
    }

    pub fn x(field: &FieldSpec) -> Self {
        Self::monomial(field, Elem::ONE, 1)
    }

    /// `c x^d`.
    pub fn monomial(field: &FieldSpec, c: Elem, d: usize) -> Self {
        let mut coeffs = vec![Elem::ZERO; d + 1];
        coeffs[d] = c;
        Self::from_coeffs(field, coeffs)
    }

    /// `x^m - c`.
    pub fn binomial(field: &FieldSpec, m: usize, c: Elem) -> Self {
        let mut coeffs = vec![Elem::ZERO; m + 1];
        coeffs[m] = Elem::ONE;
        coeffs[0] = field.sub(coeffs[0], c);
        Self::from_coeffs(field, coeffs)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == Elem::ONE
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lead(&self) -> Elem {
        self.coeffs.last().copied().unwrap_or(Elem::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == Elem::ONE
    }

    fn check_field(&self, other: &Poly) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    fn add_impl(&self, other: &Poly) -> Poly {
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| f.add(self.coeff(i), other.coeff(i))).collect();
        Poly::from_coeffs(f, coeffs)
    }

    fn sub_impl(&self, other: &Poly) -> Poly {
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect();
        Poly::from_coeffs(f, coeffs)
    }

    fn mul_impl(&self, other: &Poly) -> Poly {
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Poly::zero(f);
        }
        let mut out = vec![Elem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::from_coeffs(f, out)
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.check_field(other)?;
        Ok(self.add_impl(other))
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        self.check_field(other)?;
        Ok(self.sub_impl(other))
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_field(other)?;
        Ok(self.mul_impl(other))
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: Elem) -> Poly {
        let f = &self.field;
        Poly::from_coeffs(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![Elem::ZERO; k];
        coeffs.extend_from_slice(&self.coeffs);
        Poly::from_coeffs(&self.field, coeffs)
    }

    /// Quotient and remainder with `deg(rem) < deg(divisor)`.
    pub fn divrem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.check_field(divisor)?;
        let f = &self.field;
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        if self.coeffs.len() <= dd {
            return Ok((Poly::zero(f), self.clone()));
        }
        let inv_lead = f.inv(divisor.lead())?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Elem::ZERO; rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            let c = f.mul(rem[top], inv_lead);
            if c.is_zero() {
                continue;
            }
            quot[top - dd] = c;
            for (k, &d) in divisor.coeffs.iter().enumerate() {
                let idx = top - dd + k;
                rem[idx] = f.sub(rem[idx], f.mul(c, d));
            }
        }
        rem.truncate(dd);
        Ok((Poly::from_coeffs(f, quot), Poly::from_coeffs(f, rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.divrem(divisor)?.1)
    }

    /// Exact quotient; fails with [`Error::NotADivisor`] on a nonzero remainder.
    pub fn exact_div(&self, divisor: &Poly) -> Result<Poly> {
        let (q, r) = self.divrem(divisor)?;
        if !r.is_zero() {
            return Err(Error::NotADivisor);
        }
        Ok(q)
    }

    pub fn divides(&self, other: &Poly) -> Result<bool> {
        Ok(other.rem(self)?.is_zero())
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.check_field(other)?;
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        if a.is_zero() {
            Ok(a)
        } else {
            a.monicize()
        }
    }

    pub fn pow(&self, mut e: u64) -> Poly {
        let mut acc = Poly::one(&self.field);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_impl(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_impl(&base);
            }
        }
        acc
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, mut e: u64, modulus: &Poly) -> Result<Poly> {
        let mut acc = Poly::one(&self.field).rem(modulus)?;
        let mut base = self.rem(modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_impl(&base).rem(modulus)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_impl(&base).rem(modulus)?;
            }
        }
        Ok(acc)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: Elem) -> Elem {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(Elem::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Poly {
        let f = &self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.mul(f.from_int((i as u64 % f.p()) as i64), c))
            .collect();
        Poly::from_coeffs(f, coeffs)
    }

    /// The twist `f(x) -> f(c x)`.
    pub fn substitute_scaled(&self, c: Elem) -> Result<Poly> {
        if c.is_zero() {
            return Err(Error::ZeroScale);
        }
        let f = &self.field;
        let mut power = Elem::ONE;
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for &a in &self.coeffs {
            coeffs.push(f.mul(a, power));
            power = f.mul(power, c);
        }
        Ok(Poly::from_coeffs(f, coeffs))
    }

    /// `x^deg f * f(1/x)`: the coefficient vector reversed. With `monic`
    /// set, the result is divided by its leading coefficient `f(0)`.
    pub fn reciprocal(&self, monic: bool) -> Result<Poly> {
        if self.is_zero() || self.coeffs[0].is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        let r = Poly::from_coeffs(&self.field, coeffs);
        if monic {
            r.monicize()
        } else {
            Ok(r)
        }
    }

    /// Divides by the leading coefficient.
    pub fn monicize(&self) -> Result<Poly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let inv = self.field.inv(self.lead())?;
        Ok(self.scale(inv))
    }

    /// `gcd(f, f') = 1`.
    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        self.gcd(&self.derivative())
            .map(|g| g.is_one())
            .unwrap_or(false)
    }

    /// Rabin's irreducibility test over `F_q`: `x^(q^d) = x (mod f)` and
    /// `gcd(x^(q^(d/l)) - x, f) = 1` for each prime `l | d`.
    pub fn is_irreducible(&self) -> bool {
        let Some(d) = self.degree() else {
            return false;
        };
        if d == 0 {
            return false;
        }
        if d == 1 {
            return true;
        }
        let f = match self.monicize() {
            Ok(f) => f,
            Err(_) => return false,
        };
        let q = self.field.q();
        let x = Poly::x(&self.field);
        // frob[i] = x^(q^i) mod f
        let mut frob = vec![x.rem(&f).expect("nonzero modulus")];
        for i in 1..=d {
            let next = frob[i - 1].pow_mod(q, &f).expect("nonzero modulus");
            frob.push(next);
        }
        if frob[d] != frob[0] {
            return false;
        }
        arith::prime_divisors(d as u64).into_iter().all(|l| {
            let h = frob[d / l as usize].sub_impl(&x);
            h.gcd(&f).map(|g| g.is_one()).unwrap_or(false)
        })
    }

    /// Canonical order: degree first, then coefficient tuple (constant term
    /// first) under the field's canonical element order.
    pub fn canonical_cmp(&self, other: &Poly) -> Ordering {
        self.coeffs.len().cmp(&other.coeffs.len()).then_with(|| {
            for (&a, &b) in self.coeffs.iter().zip(&other.coeffs) {
                match self.field.cmp_elems(a, b) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            Ordering::Equal
        })
    }

    /// Product of a list of polynomials (one for an empty list).
    pub fn product<'a, I: IntoIterator<Item = &'a Poly>>(field: &FieldSpec, items: I) -> Poly {
        items
            .into_iter()
            .fold(Poly::one(field), |acc, p| acc.mul_impl(p))
    }
}

fn assert_same(a: &Poly, b: &Poly) {
    assert!(a.field == b.field, "polynomials over different fields");
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert_same(self, rhs);
        self.add_impl(rhs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        assert_same(self, rhs);
        self.sub_impl(rhs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_same(self, rhs);
        self.mul_impl(rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::zero(&self.field).sub_impl(self)
    }
}

/// Comma-separated integer encodings, constant term first; `0` for zero.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.encoding().to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}
