//! Self-dual negacyclic codes of length `n = 2^a m p^r`.
//!
//! With `M = 2^a m`, `x^n + 1 = (x^M + 1)^(p^r)`. A negacyclic code `<A>` is
//! self-dual iff `A = monic(B*)`, `B = (x^n + 1) / A`. A self-reciprocal
//! factor `g` of `x^M + 1` would need exponent `k` with `k = p^r - k`, which
//! is impossible for odd `p`; a reciprocal pair `(h, h*)` needs exponents
//! summing to `p^r`. Hence the structural criterion: a self-dual code exists
//! iff `x^M + 1` has no self-reciprocal irreducible factor.
//!
//! A second, order-parity criterion (existence iff `ord_m(q)` is odd, under
//! `q = 1 mod 2^(a+1)`) is exposed unchanged as [`selfdual_exists_paper`].
//! The two disagree on some shapes; [`consistency_report`] runs both plus
//! the brute-force oracle and records which claims conflict.

use num_bigint::BigUint;

use crate::code::{self, CodeShape, ConstaCode};
use crate::cyclo;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::oracle;
use crate::poly::Poly;

/// Lengths up to which the consistency report runs the matrix oracle.
pub const ORACLE_MAX_N: u64 = 256;
/// Cap on candidate generators for the exhaustive oracle search.
pub const ORACLE_MAX_CANDIDATES: u64 = 4096;

/// Factors of `x^M + 1` split into self-reciprocal ones and reciprocal pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairClassification {
    pub target: Poly,
    /// Factors `g` with `monic(g*) = g`, in canonical order.
    pub selfrec: Vec<Poly>,
    /// `(h, monic(h*))` with `h` the canonically smaller of the two.
    pub pairs: Vec<(Poly, Poly)>,
}

impl PairClassification {
    /// Product of every classified factor.
    pub fn product(&self) -> Poly {
        let f = self.target.field();
        let mut acc = Poly::product(f, &self.selfrec);
        for (h, hs) in &self.pairs {
            acc = &(&acc * h) * hs;
        }
        acc
    }

    pub fn num_factors(&self) -> usize {
        self.selfrec.len() + 2 * self.pairs.len()
    }
}

/// Factors `x^M + 1` (requires `gcd(M, p) = 1`) and pairs each factor with
/// its monic reciprocal.
pub fn classify_factors(field: &FieldSpec, big_m: u64) -> Result<PairClassification> {
    let fl = cyclo::factor_binomial(field, big_m, field.neg_one())?;
    let mut selfrec = Vec::new();
    let mut pairs = Vec::new();
    let mut taken = vec![false; fl.len()];
    let polys = fl.polys();
    for (i, f) in polys.iter().enumerate() {
        if taken[i] {
            continue;
        }
        taken[i] = true;
        let star = f.reciprocal(true)?;
        if &star == f {
            selfrec.push(f.clone());
            continue;
        }
        let j = polys
            .iter()
            .position(|g| *g == star)
            .expect("the reciprocal of a factor of x^M + 1 is a factor");
        taken[j] = true;
        // factors are in canonical order and i < j
        pairs.push((f.clone(), star));
    }
    Ok(PairClassification {
        target: fl.target,
        selfrec,
        pairs,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Criterion {
    /// No self-reciprocal factor, certified by an explicit witness.
    Structural,
    /// `ord_m(q)` odd.
    PaperOrd,
}

impl Criterion {
    pub fn name(self) -> &'static str {
        match self {
            Criterion::Structural => "structural",
            Criterion::PaperOrd => "paper",
        }
    }
}

#[derive(Clone, Debug)]
pub struct ExistenceVerdict {
    pub exists: bool,
    pub criterion: Criterion,
    /// Self-reciprocal factors blocking existence (structural only).
    pub obstruction: Vec<Poly>,
    /// A self-dual code, when one exists (structural only).
    pub witness: Option<ConstaCode>,
    /// `ord_m(q)` (paper criterion only).
    pub ord_value: Option<u64>,
}

fn negacyclic_check(field: &FieldSpec, shape: &CodeShape) -> Result<()> {
    if shape.p != field.p() {
        return Err(Error::InvalidArgument(format!(
            "shape characteristic {} differs from the field's {}",
            shape.p,
            field.p()
        )));
    }
    if field.p() == 2 {
        return Err(Error::HypothesisViolated(
            "negacyclic and cyclic codes coincide in characteristic 2".into(),
        ));
    }
    Ok(())
}

/// Structural existence test. When a code exists the witness takes every
/// pair `(h, h*)` with exponents `(p^r, 0)`.
pub fn selfdual_exists_structural(field: &FieldSpec, shape: &CodeShape) -> Result<ExistenceVerdict> {
    negacyclic_check(field, shape)?;
    let cls = classify_factors(field, shape.base_len())?;
    if !cls.selfrec.is_empty() {
        return Ok(ExistenceVerdict {
            exists: false,
            criterion: Criterion::Structural,
            obstruction: cls.selfrec,
            witness: None,
            ord_value: None,
        });
    }
    let pr = shape.p_pow_r();
    let gen = cls
        .pairs
        .iter()
        .fold(Poly::one(field), |acc, (h, _)| &acc * &h.pow(pr));
    let witness = ConstaCode::from_generator(field, shape.n, field.neg_one(), &gen)?;
    debug_assert!(code::is_self_dual(&witness));
    Ok(ExistenceVerdict {
        exists: true,
        criterion: Criterion::Structural,
        obstruction: Vec::new(),
        witness: Some(witness),
        ord_value: None,
    })
}

/// Existence iff `ord_m(q)` is odd, for `a >= 1` and `q = 1 (mod 2^(a+1))`.
/// The rule is applied as is; see [`consistency_report`] for where it fails.
pub fn selfdual_exists_paper(field: &FieldSpec, shape: &CodeShape) -> Result<ExistenceVerdict> {
    negacyclic_check(field, shape)?;
    let q = field.q();
    if shape.a < 1 {
        return Err(Error::HypothesisViolated(format!(
            "requires a >= 1, got a = {}",
            shape.a
        )));
    }
    let modulus = 1u64 << (shape.a + 1);
    if q % modulus != 1 {
        return Err(Error::HypothesisViolated(format!(
            "requires q = 1 (mod {modulus}), got q = {q}"
        )));
    }
    let ord = cyclo::multiplicative_order(q, shape.m)?;
    Ok(ExistenceVerdict {
        exists: ord % 2 == 1,
        criterion: Criterion::PaperOrd,
        obstruction: Vec::new(),
        witness: None,
        ord_value: Some(ord),
    })
}

pub struct SelfDualEnumeration {
    pub total: BigUint,
    pub classification: PairClassification,
    pub stream: SelfDualStream,
}

/// Generators `prod h_i^(b_i) (h_i*)^(p^r - b_i)`, `b` lexicographic.
pub struct SelfDualStream {
    field: FieldSpec,
    n: u64,
    pr: u64,
    pairs: Vec<(Poly, Poly)>,
    next: Option<Vec<u64>>,
    remaining: Option<usize>,
}

impl Iterator for SelfDualStream {
    type Item = (Vec<u64>, ConstaCode);

    fn next(&mut self) -> Option<Self::Item> {
        if self.remaining == Some(0) {
            return None;
        }
        let b = self.next.take()?;
        if let Some(r) = self.remaining.as_mut() {
            *r -= 1;
        }
        self.next = code::odometer(&b, self.pr);
        let gen = self
            .pairs
            .iter()
            .zip(&b)
            .fold(Poly::one(&self.field), |acc, ((h, hs), &bi)| {
                &(&acc * &h.pow(bi)) * &hs.pow(self.pr - bi)
            });
        let c = ConstaCode::from_generator(&self.field, self.n, self.field.neg_one(), &gen)
            .expect("pair products divide x^n + 1");
        Some((b, c))
    }
}

pub fn enumerate_selfdual(
    field: &FieldSpec,
    shape: &CodeShape,
    limit: Option<usize>,
) -> Result<SelfDualEnumeration> {
    negacyclic_check(field, shape)?;
    let cls = classify_factors(field, shape.base_len())?;
    let pr = shape.p_pow_r();
    let exists = cls.selfrec.is_empty();
    let total = if exists {
        BigUint::from(pr + 1).pow(cls.pairs.len() as u32)
    } else {
        BigUint::from(0u32)
    };
    let stream = SelfDualStream {
        field: field.clone(),
        n: shape.n,
        pr,
        pairs: cls.pairs.clone(),
        next: exists.then(|| vec![0; cls.pairs.len()]),
        remaining: limit,
    };
    Ok(SelfDualEnumeration {
        total,
        classification: cls,
        stream,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// Every available claim gives this answer.
    Agree(bool),
    /// At least two claims conflict.
    Disagree,
}

#[derive(Clone, Debug)]
pub struct ConsistencyReport {
    pub shape: CodeShape,
    pub structural: ExistenceVerdict,
    /// The order-parity verdict, or why its hypotheses fail.
    pub paper: std::result::Result<ExistenceVerdict, String>,
    /// Brute-force answer when the shape is small enough.
    pub oracle: Option<bool>,
    pub outcome: Outcome,
}

impl ConsistencyReport {
    /// Names of the claims that differ from the structural verdict.
    pub fn conflicts(&self) -> Vec<&'static str> {
        let s = self.structural.exists;
        let mut out = Vec::new();
        if let Ok(p) = &self.paper {
            if p.exists != s {
                out.push("paper");
            }
        }
        if self.oracle.is_some_and(|o| o != s) {
            out.push("oracle");
        }
        out
    }
}

/// Runs both criteria and, for `n <= ORACLE_MAX_N`, the oracle: the
/// witness is checked with `G G^T = 0`, or, when no witness is claimed,
/// every candidate generator of dimension `n/2` is tried.
pub fn consistency_report(field: &FieldSpec, shape: &CodeShape) -> Result<ConsistencyReport> {
    let structural = selfdual_exists_structural(field, shape)?;
    let paper = match selfdual_exists_paper(field, shape) {
        Ok(v) => Ok(v),
        Err(Error::HypothesisViolated(why)) => Err(why),
        Err(e) => return Err(e),
    };
    let oracle = if shape.n > ORACLE_MAX_N {
        None
    } else if let Some(w) = &structural.witness {
        Some(oracle::check_matrix_selfdual(&code::generator_matrix(w)?)?)
    } else {
        let candidates = oracle::divisor_count(field, shape.n, field.neg_one())?;
        if candidates <= BigUint::from(ORACLE_MAX_CANDIDATES) {
            Some(oracle::exhaustive_selfdual_search(field, shape.n, field.neg_one())?.is_some())
        } else {
            None
        }
    };
    let mut claims = vec![structural.exists];
    if let Ok(p) = &paper {
        claims.push(p.exists);
    }
    claims.extend(oracle);
    let outcome = if claims.iter().all(|&c| c == claims[0]) {
        Outcome::Agree(claims[0])
    } else {
        Outcome::Disagree
    };
    Ok(ConsistencyReport {
        shape: *shape,
        structural,
        paper,
        oracle,
        outcome,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> FieldSpec {
        FieldSpec::new(5, 1).unwrap()
    }

    #[test]
    fn classify_small() {
        let f = f5();
        let c = classify_factors(&f, 2).unwrap();
        assert!(c.selfrec.is_empty());
        assert_eq!(
            c.pairs,
            vec![(Poly::from_ints(&f, &[-3, 1]), Poly::from_ints(&f, &[-2, 1]))]
        );
        let c = classify_factors(&f, 1).unwrap();
        assert_eq!(c.selfrec, vec![Poly::from_ints(&f, &[1, 1])]);
        assert!(c.pairs.is_empty());
        let c = classify_factors(&f, 14).unwrap();
        assert!(c.selfrec.is_empty());
        let mut degs: Vec<usize> = c.pairs.iter().map(|(h, _)| h.deg()).collect();
        degs.sort();
        assert_eq!(degs, vec![1, 6]);
        assert_eq!(c.product(), c.target);
    }

    #[test]
    fn structural_examples() {
        let f = f5();
        let v = selfdual_exists_structural(&f, &CodeShape::decompose(5, 5).unwrap()).unwrap();
        assert!(!v.exists);
        assert_eq!(v.obstruction, vec![Poly::from_ints(&f, &[1, 1])]);
        let v = selfdual_exists_structural(&f, &CodeShape::decompose(70, 5).unwrap()).unwrap();
        assert!(v.exists);
        let w = v.witness.unwrap();
        assert_eq!(w.dim(), 35);
        assert!(code::is_self_dual(&w));
    }

    #[test]
    fn paper_criterion_hypotheses() {
        let f7 = FieldSpec::new(7, 1).unwrap();
        // 7 is not 1 mod 4
        assert!(matches!(
            selfdual_exists_paper(&f7, &CodeShape::decompose(14, 7).unwrap()),
            Err(Error::HypothesisViolated(_))
        ));
        let f = f5();
        assert!(matches!(
            selfdual_exists_paper(&f, &CodeShape::decompose(15, 5).unwrap()),
            Err(Error::HypothesisViolated(_))
        ));
        let v = selfdual_exists_paper(&f, &CodeShape::decompose(70, 5).unwrap()).unwrap();
        assert!(!v.exists);
        assert_eq!(v.ord_value, Some(6));
    }

    #[test]
    fn enumerate_length_ten() {
        let f = f5();
        let e = enumerate_selfdual(&f, &CodeShape::decompose(10, 5).unwrap(), None).unwrap();
        assert_eq!(e.total, BigUint::from(6u32));
        let codes: Vec<_> = e.stream.collect();
        assert_eq!(codes.len(), 6);
        for (b, c) in &codes {
            assert!(code::is_self_dual(c));
            let (h, hs) = &e.classification.pairs[0];
            assert_eq!(c.generator(), &(&h.pow(b[0]) * &hs.pow(5 - b[0])));
        }
        let e = enumerate_selfdual(&f, &CodeShape::decompose(5, 5).unwrap(), None).unwrap();
        assert_eq!(e.total, BigUint::from(0u32));
        assert_eq!(e.stream.count(), 0);
    }
}
