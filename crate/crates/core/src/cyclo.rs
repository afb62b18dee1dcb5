//! Cyclotomic cosets, multiplicative orders, binomial factorizations and the
//! twisted factor grids of `x^(2^a m) -/+ c`.

use std::collections::HashMap;

use crate::arith;
use crate::error::{Error, Result};
use crate::factor;
use crate::field::{Elem, FieldSpec};
use crate::poly::Poly;

/// Smallest `t >= 1` with `q^t = 1 (mod m)`; `ord_1(q) = 1`.
pub fn multiplicative_order(q: u64, m: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::InvalidArgument("modulus must be positive".into()));
    }
    if m == 1 {
        return Ok(1);
    }
    if arith::gcd(q % m, m) != 1 {
        return Err(Error::NotCoprime { a: q, b: m });
    }
    let q = q % m;
    let mut t = 1;
    let mut acc = q;
    while acc != 1 {
        acc = arith::mul_mod(acc, q, m);
        t += 1;
    }
    Ok(t)
}

/// A `q`-cyclotomic coset modulo `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coset {
    pub modulus: u64,
    pub q: u64,
    pub rep: u64,
    /// Sorted ascending.
    pub members: Vec<u64>,
}

impl Coset {
    /// The coset of `i` modulo `n`.
    pub fn of(i: u64, n: u64, q: u64) -> Coset {
        let start = i % n;
        let mut members = vec![start];
        let mut cur = arith::mul_mod(start, q, n);
        while cur != start {
            members.push(cur);
            cur = arith::mul_mod(cur, q, n);
        }
        members.sort_unstable();
        Coset {
            modulus: n,
            q,
            rep: members[0],
            members,
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, i: u64) -> bool {
        self.members.binary_search(&(i % self.modulus)).is_ok()
    }

    /// `{-j mod n : j in self}`.
    pub fn negated(&self) -> Coset {
        Coset::of(self.modulus - self.rep, self.modulus, self.q)
    }

    /// `Cl(i) = Cl(-i)`.
    pub fn is_symmetric(&self) -> bool {
        self.contains((self.modulus - self.rep) % self.modulus)
    }
}

/// Partition of `{0, ..., n-1}` into `q`-cosets, sorted by representative.
pub fn cyclotomic_cosets(n: u64, q: u64) -> Result<Vec<Coset>> {
    if n == 0 {
        return Err(Error::InvalidArgument("modulus must be positive".into()));
    }
    if arith::gcd(q % n, n) != 1 && n > 1 {
        return Err(Error::NotCoprime { a: q, b: n });
    }
    let mut seen = vec![false; n as usize];
    let mut out = Vec::new();
    for i in 0..n {
        if seen[i as usize] {
            continue;
        }
        let c = Coset::of(i, n, q);
        for &j in &c.members {
            seen[j as usize] = true;
        }
        out.push(c);
    }
    Ok(out)
}

/// A target polynomial with its monic irreducible factors and multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorList {
    pub target: Poly,
    /// Sorted by [`Poly::canonical_cmp`].
    pub factors: Vec<(Poly, u32)>,
}

impl FactorList {
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn polys(&self) -> Vec<Poly> {
        self.factors.iter().map(|(f, _)| f.clone()).collect()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.factors.iter().map(|(f, _)| f.deg()).collect()
    }

    /// `lead(target) * prod f_i^e_i`, which equals the target exactly.
    pub fn product(&self) -> Poly {
        let field = self.target.field();
        let prod = self
            .factors
            .iter()
            .fold(Poly::one(field), |acc, (f, e)| &acc * &f.pow(*e as u64));
        prod.scale(self.target.lead())
    }
}

/// Complete factorization of `x^m - c` for `gcd(m, p) = 1`, `c != 0`.
pub fn factor_binomial(field: &FieldSpec, m: u64, c: Elem) -> Result<FactorList> {
    if m == 0 {
        return Err(Error::InvalidArgument("binomial degree must be positive".into()));
    }
    if m % field.p() == 0 {
        return Err(Error::NotCoprimeToCharacteristic { m, p: field.p() });
    }
    if c.is_zero() {
        return Err(Error::ZeroConstant);
    }
    let target = Poly::binomial(field, m as usize, c);
    let factors = factor::factor(&target)?;
    debug_assert!(factors.iter().all(|(_, e)| *e == 1));
    Ok(FactorList { target, factors })
}

/// Which twists `alpha^(-k)` enter a [`FactorGrid`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TwistVariant {
    /// `k = 1..2^a` with `alpha` of order `2^a`.
    All,
    /// `2k`, `k = 1..2^a`, with `alpha` of order `2^(a+1)`.
    Even,
    /// `2k - 1`, `k = 1..2^a`, with `alpha` of order `2^(a+1)`.
    Odd,
}

impl TwistVariant {
    pub fn name(self) -> &'static str {
        match self {
            TwistVariant::All => "all",
            TwistVariant::Even => "even",
            TwistVariant::Odd => "odd",
        }
    }

    fn exponent(self, k: u64) -> u64 {
        match self {
            TwistVariant::All => k,
            TwistVariant::Even => 2 * k,
            TwistVariant::Odd => 2 * k - 1,
        }
    }
}

impl std::str::FromStr for TwistVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(TwistVariant::All),
            "even" => Ok(TwistVariant::Even),
            "odd" => Ok(TwistVariant::Odd),
            other => Err(Error::InvalidArgument(format!("unknown variant {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridEntry {
    /// Twist index, `1..=2^a`.
    pub k: u64,
    /// Index into the base factors of `x^m - 1`.
    pub i: usize,
    /// The exponent `e` in `alpha^(-e)` (`k`, `2k` or `2k-1`).
    pub twist_exponent: u64,
    /// `scale^(-1) alpha^(-e)`.
    pub substitution: Elem,
    /// `f_i(substitution * x)` before normalization.
    pub raw: Poly,
    /// Monic associate of `raw`.
    pub poly: Poly,
}

/// The factors `f_i(scale^(-1) alpha^(-e) x)` of a twisted binomial, indexed
/// by twist `k` and base factor `i`.
#[derive(Clone, Debug)]
pub struct FactorGrid {
    pub a: u32,
    pub m: u64,
    pub variant: TwistVariant,
    pub twist_root: Elem,
    pub scale: Elem,
    pub base_factors: FactorList,
    pub entries: Vec<GridEntry>,
}

impl FactorGrid {
    pub fn field(&self) -> &FieldSpec {
        self.base_factors.target.field()
    }

    /// `2^a m`.
    pub fn degree(&self) -> u64 {
        (1u64 << self.a) * self.m
    }

    /// `x^(2^a m) - scale^(2^a m)` for the all/even variants,
    /// `x^(2^a m) + scale^(2^a m)` for odd.
    pub fn target(&self) -> Poly {
        let f = self.field();
        let c = f.pow_u(self.scale, self.degree());
        let c = match self.variant {
            TwistVariant::Odd => f.neg(c),
            _ => c,
        };
        Poly::binomial(f, self.degree() as usize, c)
    }

    pub fn get(&self, k: u64, i: usize) -> Option<&Poly> {
        self.entries
            .iter()
            .find(|e| e.k == k && e.i == i)
            .map(|e| &e.poly)
    }

    /// Product of the monic entries.
    pub fn product(&self) -> Poly {
        Poly::product(self.field(), self.entries.iter().map(|e| &e.poly))
    }

    /// Product of the un-normalized twists. For the all variant with
    /// `a >= 1` and unit scale this is `-(x^(2^a m) - 1)`: the leading
    /// coefficients multiply to `prod_k alpha^(-k m) = (-1)^m = -1`.
    pub fn raw_product(&self) -> Poly {
        Poly::product(self.field(), self.entries.iter().map(|e| &e.raw))
    }

    /// Entries sorted canonically, for comparison with a flat factorization.
    pub fn sorted_polys(&self) -> Vec<Poly> {
        let mut v: Vec<Poly> = self.entries.iter().map(|e| e.poly.clone()).collect();
        v.sort_by(|a, b| a.canonical_cmp(b));
        v
    }
}

/// Twisted factorization built from the factors of `x^m - 1` (`m` odd,
/// coprime to `p`).
pub fn factor_grid(
    field: &FieldSpec,
    a: u32,
    m: u64,
    scale: Elem,
    variant: TwistVariant,
) -> Result<FactorGrid> {
    if m % 2 == 0 {
        return Err(Error::EvenM(m));
    }
    if scale.is_zero() {
        return Err(Error::ZeroScale);
    }
    let root_order = match variant {
        TwistVariant::All => 1u64 << a,
        TwistVariant::Even | TwistVariant::Odd => 1u64 << (a + 1),
    };
    let alpha = field
        .root_of_unity(root_order)
        .map_err(|_| Error::NoSuchRootOfUnity(root_order))?;
    let base = factor_binomial(field, m, field.one())?;
    let inv_scale = field.inv(scale)?;
    let mut entries = Vec::new();
    for k in 1..=(1u64 << a) {
        let e = variant.exponent(k);
        let substitution = field.mul(inv_scale, field.pow(alpha, -(e as i64))?);
        for (i, (f, _)) in base.factors.iter().enumerate() {
            let raw = f.substitute_scaled(substitution)?;
            let poly = raw.monicize()?;
            entries.push(GridEntry {
                k,
                i,
                twist_exponent: e,
                substitution,
                raw,
                poly,
            });
        }
    }
    Ok(FactorGrid {
        a,
        m,
        variant,
        twist_root: alpha,
        scale,
        base_factors: base,
        entries,
    })
}

/// `F_(q^t)` together with an embedding of `F_q`.
struct SplittingField {
    big: FieldSpec,
    back: HashMap<Elem, Elem>,
}

impl SplittingField {
    fn new(field: &FieldSpec, t: u32) -> Result<Self> {
        let big = FieldSpec::new(field.p(), field.s() * t)?;
        let embed: Vec<Elem> = if field.s() == 1 {
            field.elements().map(|e| big.from_int(e.encoding() as i64)).collect()
        } else {
            // a root of the small modulus inside the copy of F_q in the big field
            let modulus = Poly::from_ints(
                &big,
                &field.modulus().iter().map(|&c| c as i64).collect::<Vec<_>>(),
            );
            let step = (big.q() - 1) / (field.q() - 1);
            let theta = (0..field.q() - 1)
                .map(|k| big.gen_pow((k * step) as i64))
                .find(|&c| modulus.eval(c).is_zero())
                .expect("the modulus splits in F_(q^t)");
            field
                .elements()
                .map(|e| {
                    field.coeffs(e).iter().rev().fold(Elem::ZERO, |acc, &c| {
                        big.add(big.mul(acc, theta), big.from_int(c as i64))
                    })
                })
                .collect()
        };
        let back = embed
            .iter()
            .enumerate()
            .map(|(i, &b)| (b, field.elem(i as u64).expect("in range")))
            .collect();
        Ok(SplittingField { big, back })
    }

    fn pull_back(&self, field: &FieldSpec, p: &Poly) -> Poly {
        let coeffs = p
            .coeffs()
            .iter()
            .map(|c| *self.back.get(c).expect("coefficient lies in the base field"))
            .collect();
        Poly::from_coeffs(field, coeffs)
    }
}

/// `prod_{j in coset} (x - zeta^j)` where `zeta = G^((q^t - 1)/n)`, `G` the
/// canonical generator of `F_(q^t)` and `t = ord_n(q)`.
pub fn minimal_polynomial(field: &FieldSpec, n: u64, coset: &Coset) -> Result<Poly> {
    let q = field.q();
    if n == 0 || (n > 1 && arith::gcd(q % n, n) != 1) {
        return Err(Error::NotCoprime { a: q, b: n });
    }
    if coset.modulus != n || coset.q % n != q % n {
        return Err(Error::InvalidArgument(format!(
            "coset is not a {q}-coset modulo {n}"
        )));
    }
    let t = multiplicative_order(q, n)? as u32;
    let split = SplittingField::new(field, t)?;
    let big = &split.big;
    let zeta = big.gen_pow(((big.q() - 1) / n) as i64);
    let roots = coset
        .members
        .iter()
        .map(|&j| Poly::from_coeffs(big, vec![big.neg(big.pow_u(zeta, j)), Elem::ONE]));
    let prod = roots.fold(Poly::one(big), |acc, r| &acc * &r);
    Ok(split.pull_back(field, &prod))
}
