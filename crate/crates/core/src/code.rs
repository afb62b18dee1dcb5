//! Constacyclic codes as ideals `<A(x)>` of `F_q[x] / <x^n - lambda>`.
//!
//! With `n = 2^a m p^r` and `lambda0` the unique `p^r`-th root of `lambda`,
//! `x^n - lambda = (x^(2^a m) - lambda0)^(p^r)`. The monic irreducible factors
//! of `x^(2^a m) - lambda0` form the *factor base*; every code is generated by
//! `prod f_i^(k_i)` with `0 <= k_i <= p^r`, and distinct exponent vectors give
//! distinct codes.

use num_bigint::BigUint;

use crate::arith;
use crate::cyclo::{self, FactorList};
use crate::error::{Error, Result};
use crate::field::{Elem, FieldSpec};
use crate::matrix::Matrix;
use crate::poly::Poly;

/// `n = 2^a m p^r` with `m` odd and coprime to `p`.
///
/// In characteristic 2 the two power-of-two parts coincide; the whole
/// 2-adic part is then assigned to `r` and `a = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CodeShape {
    pub p: u64,
    pub a: u32,
    pub m: u64,
    pub r: u32,
    pub n: u64,
}

impl CodeShape {
    pub fn decompose(n: u64, p: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("code length must be positive".into()));
        }
        if !arith::is_prime(p) {
            return Err(Error::CompositeP(p));
        }
        let (r, rest) = arith::split_power(n, p);
        let (a, m) = if p == 2 { (0, rest) } else { arith::split_power(rest, 2) };
        Ok(CodeShape { p, a, m, r, n })
    }

    pub fn new(p: u64, a: u32, m: u64, r: u32) -> Result<Self> {
        if m % 2 == 0 {
            return Err(Error::EvenM(m));
        }
        if m % p == 0 {
            return Err(Error::NotCoprimeToCharacteristic { m, p });
        }
        if p == 2 && a > 0 {
            return Err(Error::InvalidArgument(
                "in characteristic 2 the 2-adic part is carried by r".into(),
            ));
        }
        let n = (1u64 << a)
            .checked_mul(m)
            .and_then(|v| v.checked_mul(p.checked_pow(r)?))
            .ok_or_else(|| Error::InvalidArgument("length overflows".into()))?;
        Self::decompose(n, p)
    }

    /// `2^a m`, the degree of the squarefree part of `x^n - lambda`.
    pub fn base_len(&self) -> u64 {
        (1u64 << self.a) * self.m
    }

    /// `p^r`, the multiplicity of every base factor.
    pub fn p_pow_r(&self) -> u64 {
        self.p.pow(self.r)
    }
}

/// Monic irreducible factors of `x^(2^a m) - lambda0`, where
/// `lambda0^(p^r) = lambda`. Each divides `x^n - lambda` with multiplicity `p^r`.
pub fn factor_base(field: &FieldSpec, shape: &CodeShape, lam: Elem) -> Result<FactorList> {
    check_shape(field, shape)?;
    let lam0 = field.prth_root(lam, shape.r)?;
    cyclo::factor_binomial(field, shape.base_len(), lam0)
}

fn check_shape(field: &FieldSpec, shape: &CodeShape) -> Result<()> {
    if shape.p != field.p() {
        return Err(Error::InvalidArgument(format!(
            "shape characteristic {} differs from the field's {}",
            shape.p,
            field.p()
        )));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentVector {
    pub base: Vec<Poly>,
    pub exps: Vec<u64>,
}

impl ExponentVector {
    pub fn new(base: Vec<Poly>, exps: Vec<u64>) -> Result<Self> {
        if base.len() != exps.len() {
            return Err(Error::InvalidArgument(format!(
                "{} exponents for {} base factors",
                exps.len(),
                base.len()
            )));
        }
        Ok(ExponentVector { base, exps })
    }

    pub fn generator(&self, field: &FieldSpec) -> Poly {
        self.base
            .iter()
            .zip(&self.exps)
            .fold(Poly::one(field), |acc, (f, &e)| &acc * &f.pow(e))
    }
}

/// A `lambda`-constacyclic code of length `n` with monic generator `A(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstaCode {
    field: FieldSpec,
    shape: CodeShape,
    lam: Elem,
    gen: Poly,
    dim: usize,
}

impl ConstaCode {
    /// Code generated by the monic associate of `gen`, which must divide
    /// `x^n - lambda`.
    pub fn from_generator(field: &FieldSpec, n: u64, lam: Elem, gen: &Poly) -> Result<Self> {
        if lam.is_zero() {
            return Err(Error::ZeroElement);
        }
        if gen.field() != field {
            return Err(Error::FieldMismatch);
        }
        let shape = CodeShape::decompose(n, field.p())?;
        let gen = gen.monicize()?;
        let modulus = Poly::binomial(field, n as usize, lam);
        if !gen.divides(&modulus)? {
            return Err(Error::NotADivisor);
        }
        let dim = n as usize - gen.deg();
        Ok(ConstaCode {
            field: field.clone(),
            shape,
            lam,
            gen,
            dim,
        })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn shape(&self) -> &CodeShape {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.shape.n as usize
    }

    pub fn lam(&self) -> Elem {
        self.lam
    }

    pub fn generator(&self) -> &Poly {
        &self.gen
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `x^n - lambda`.
    pub fn modulus(&self) -> Poly {
        Poly::binomial(&self.field, self.n(), self.lam)
    }

    /// `B(x) = (x^n - lambda) / A(x)`.
    pub fn check_polynomial(&self) -> Poly {
        self.modulus()
            .exact_div(&self.gen)
            .expect("generator divides the modulus")
    }

    /// Exponents of the generator over the canonical factor base.
    pub fn exponents(&self) -> Result<ExponentVector> {
        let base = factor_base(&self.field, &self.shape, self.lam)?.polys();
        let mut rest = self.gen.clone();
        let mut exps = Vec::with_capacity(base.len());
        for f in &base {
            let mut e = 0;
            loop {
                let (q, r) = rest.divrem(f)?;
                if !r.is_zero() {
                    break;
                }
                rest = q;
                e += 1;
            }
            exps.push(e);
        }
        debug_assert!(rest.is_one());
        ExponentVector::new(base, exps)
    }

    /// Whether a length-`n` word lies in the code, i.e. `A(x)` divides it
    /// modulo `x^n - lambda`.
    pub fn contains(&self, word: &[Elem]) -> Result<bool> {
        if word.len() != self.n() {
            return Err(Error::InvalidArgument("word has the wrong length".into()));
        }
        let w = Poly::from_coeffs(&self.field, word.to_vec());
        Ok(w.rem(&self.gen)?.is_zero())
    }
}

/// `prod base_i^(exps_i)`; the base must be the canonical factor base of
/// `x^n - lambda`.
pub fn build_code(
    field: &FieldSpec,
    shape: &CodeShape,
    lam: Elem,
    ev: &ExponentVector,
) -> Result<ConstaCode> {
    let base = factor_base(field, shape, lam)?;
    if ev.base != base.polys() {
        return Err(Error::BadBase);
    }
    build_from_base(field, shape, lam, &ev.base, &ev.exps)
}

fn build_from_base(
    field: &FieldSpec,
    shape: &CodeShape,
    lam: Elem,
    base: &[Poly],
    exps: &[u64],
) -> Result<ConstaCode> {
    let max = shape.p_pow_r();
    if let Some(&exp) = exps.iter().find(|&&e| e > max) {
        return Err(Error::ExponentRange { exp, max });
    }
    let gen = base
        .iter()
        .zip(exps)
        .fold(Poly::one(field), |acc, (f, &e)| &acc * &f.pow(e));
    let dim = shape.n as usize - gen.deg();
    Ok(ConstaCode {
        field: field.clone(),
        shape: *shape,
        lam,
        gen,
        dim,
    })
}

/// All codes of a given length and constant: an exact total and a
/// lexicographic stream over exponent vectors.
pub struct CodeEnumeration {
    pub total: BigUint,
    pub base: Vec<Poly>,
    pub stream: CodeStream,
}

/// Restartable by calling [`enumerate_codes`] again.
pub struct CodeStream {
    field: FieldSpec,
    shape: CodeShape,
    lam: Elem,
    base: Vec<Poly>,
    next: Option<Vec<u64>>,
    remaining: Option<usize>,
}

impl Iterator for CodeStream {
    type Item = (Vec<u64>, ConstaCode);

    fn next(&mut self) -> Option<Self::Item> {
        if self.remaining == Some(0) {
            return None;
        }
        let exps = self.next.take()?;
        if let Some(r) = self.remaining.as_mut() {
            *r -= 1;
        }
        self.next = odometer(&exps, self.shape.p_pow_r());
        let code = build_from_base(&self.field, &self.shape, self.lam, &self.base, &exps)
            .expect("exponents are in range");
        Some((exps, code))
    }
}

// Lexicographic successor of `v` in [0, max]^len, last index fastest.
pub(crate) fn odometer(v: &[u64], max: u64) -> Option<Vec<u64>> {
    let mut next = v.to_vec();
    for i in (0..next.len()).rev() {
        if next[i] < max {
            next[i] += 1;
            return Some(next);
        }
        next[i] = 0;
    }
    None
}

pub fn enumerate_codes(
    field: &FieldSpec,
    shape: &CodeShape,
    lam: Elem,
    limit: Option<usize>,
) -> Result<CodeEnumeration> {
    let base = factor_base(field, shape, lam)?.polys();
    let total = BigUint::from(shape.p_pow_r() + 1).pow(base.len() as u32);
    let stream = CodeStream {
        field: field.clone(),
        shape: *shape,
        lam,
        base: base.clone(),
        next: Some(vec![0; base.len()]),
        remaining: limit,
    };
    Ok(CodeEnumeration {
        total,
        base,
        stream,
    })
}

/// The Euclidean dual: the `lambda^(-1)`-constacyclic code generated by the
/// monic reciprocal of `B(x) = (x^n - lambda) / A(x)`.
pub fn dual(c: &ConstaCode) -> ConstaCode {
    let f = &c.field;
    let b = c.check_polynomial();
    let gen = b.reciprocal(true).expect("B(0) divides -lambda, so it is nonzero");
    let lam = f.inv(c.lam).expect("lambda is nonzero");
    ConstaCode {
        field: f.clone(),
        shape: c.shape,
        lam,
        dim: c.n() - gen.deg(),
        gen,
    }
}

/// `C = C^perp`: requires `lambda = lambda^(-1)` and `A = monic(B*)`.
pub fn is_self_dual(c: &ConstaCode) -> bool {
    let f = &c.field;
    if f.inv(c.lam).ok() != Some(c.lam) {
        return false;
    }
    dual(c).gen == c.gen
}

/// Rows `x^i A(x)` for `i < dim`.
pub fn generator_matrix(c: &ConstaCode) -> Result<Matrix> {
    if c.dim == 0 {
        return Err(Error::ZeroDimension);
    }
    let n = c.n();
    let rows: Vec<Vec<Elem>> = (0..c.dim)
        .map(|i| {
            let mut row = vec![Elem::ZERO; n];
            for (j, &a) in c.gen.coeffs().iter().enumerate() {
                row[i + j] = a;
            }
            row
        })
        .collect();
    Matrix::from_rows(&c.field, n, &rows)
}

/// Coordinate scaling `(c_0, ..., c_{n-1}) -> (c_0, delta c_1, ..., delta^(n-1) c_{n-1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialMap {
    field: FieldSpec,
    pub delta: Elem,
    pub n: usize,
}

impl MonomialMap {
    pub fn new(field: &FieldSpec, delta: Elem, n: usize) -> Result<Self> {
        if delta.is_zero() {
            return Err(Error::ZeroElement);
        }
        Ok(MonomialMap {
            field: field.clone(),
            delta,
            n,
        })
    }

    pub fn scalars(&self) -> Vec<Elem> {
        let f = &self.field;
        let mut out = Vec::with_capacity(self.n);
        let mut cur = Elem::ONE;
        for _ in 0..self.n {
            out.push(cur);
            cur = f.mul(cur, self.delta);
        }
        out
    }

    pub fn apply(&self, word: &[Elem]) -> Vec<Elem> {
        word.iter()
            .zip(self.scalars())
            .map(|(&w, s)| self.field.mul(w, s))
            .collect()
    }

    /// The map with `delta^(-1)`; composing with `self` gives the identity.
    pub fn inverse(&self) -> MonomialMap {
        MonomialMap {
            field: self.field.clone(),
            delta: self.field.inv(self.delta).expect("delta is nonzero"),
            n: self.n,
        }
    }
}

/// If `delta^n = lambda` has a solution, the cyclic code `<monic(A(delta x))>`
/// together with the map `c_i -> delta^i c_i`, which carries `c` onto that
/// cyclic code (its inverse carries the cyclic code back onto `c`).
pub fn cyclic_equivalent(c: &ConstaCode) -> Result<Option<(MonomialMap, ConstaCode)>> {
    let f = &c.field;
    let Some(delta) = f.nth_root_of(c.lam, c.shape.n)? else {
        return Ok(None);
    };
    let gen = c.gen.substitute_scaled(delta)?.monicize()?;
    let cyclic = ConstaCode::from_generator(f, c.shape.n, f.one(), &gen)?;
    Ok(Some((MonomialMap::new(f, delta, c.n())?, cyclic)))
}
