//! Brute-force ground truth at desk scale.
//!
//! Nothing here relies on the factor-base machinery of [`crate::code`]:
//! codewords come from explicit multiplication, duals from orthogonality
//! (exhaustive or by null space), and self-duality from `G G^T = 0`.

use std::collections::HashSet;

use num_bigint::BigUint;

use crate::code::{self, ConstaCode};
use crate::error::{Error, Result};
use crate::factor;
use crate::field::{Elem, FieldSpec};
use crate::matrix::Matrix;
use crate::poly::Poly;

/// Default cap on the number of vectors an exhaustive routine may visit.
pub const DEFAULT_BOUND: u64 = 20_000;

/// Size bounds for the exhaustive routines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBounds {
    /// Cap on `q^dim` for codeword enumeration.
    pub codewords: u64,
    /// Cap on `q^n` for scans of the ambient space.
    pub ambient: u64,
}

impl Default for OracleBounds {
    fn default() -> Self {
        OracleBounds {
            codewords: DEFAULT_BOUND,
            ambient: DEFAULT_BOUND,
        }
    }
}

/// `q^k`, or `None` past `u64::MAX`.
pub fn checked_size(q: u64, k: usize) -> Option<u64> {
    q.checked_pow(u32::try_from(k).ok()?)
}

fn too_large(q: u64, k: usize, bound: u64) -> Error {
    Error::TooLarge {
        size: format!("{q}^{k}"),
        bound,
    }
}

/// An explicit set of length-`n` vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodewordSet {
    pub field: FieldSpec,
    pub n: usize,
    pub words: HashSet<Vec<Elem>>,
}

impl CodewordSet {
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &[Elem]) -> bool {
        self.words.contains(w)
    }

    /// Closed under addition and scalar multiples (checked exhaustively over
    /// pairs when small, otherwise on a deterministic sample).
    pub fn is_linear(&self) -> bool {
        let f = &self.field;
        let words: Vec<&Vec<Elem>> = self.words.iter().collect();
        let step = (words.len() / 64).max(1);
        for a in words.iter().step_by(step) {
            for c in f.elements() {
                let s: Vec<Elem> = a.iter().map(|&x| f.mul(c, x)).collect();
                if !self.contains(&s) {
                    return false;
                }
            }
            for b in words.iter().step_by(step) {
                let s: Vec<Elem> = a.iter().zip(b.iter()).map(|(&x, &y)| f.add(x, y)).collect();
                if !self.contains(&s) {
                    return false;
                }
            }
        }
        true
    }
}

/// All `a(x) A(x)` with `deg a < dim`; no reduction is needed since the
/// degree stays below `n`.
pub fn codeword_set(c: &ConstaCode, bound: u64) -> Result<CodewordSet> {
    let f = c.field();
    let q = f.q();
    let k = c.dim();
    let size = checked_size(q, k).filter(|&s| s <= bound).ok_or_else(|| too_large(q, k, bound))?;
    let n = c.n();
    let mut words = HashSet::with_capacity(size as usize);
    let mut msg = vec![0u64; k];
    loop {
        let a = Poly::from_coeffs(f, msg.iter().map(|&m| f.elem(m).expect("in range")).collect());
        let w = &a * c.generator();
        let mut word = w.coeffs().to_vec();
        word.resize(n, Elem::ZERO);
        words.insert(word);
        match code::odometer(&msg, q - 1) {
            Some(next) => msg = next,
            None => break,
        }
    }
    Ok(CodewordSet {
        field: f.clone(),
        n,
        words,
    })
}

/// All linear combinations of the rows of `basis`.
pub fn span(basis: &Matrix, bound: u64) -> Result<CodewordSet> {
    let f = basis.field();
    let n = basis.ncols();
    let k = basis.nrows();
    checked_size(f.q(), k)
        .filter(|&s| s <= bound)
        .ok_or_else(|| too_large(f.q(), k, bound))?;
    let mut words = vec![vec![Elem::ZERO; n]];
    for i in 0..k {
        let row = basis.row(i);
        let mut next = Vec::with_capacity(words.len() * f.q() as usize);
        for w in &words {
            for c in f.elements() {
                next.push(
                    w.iter()
                        .zip(row)
                        .map(|(&x, &r)| f.add(x, f.mul(c, r)))
                        .collect(),
                );
            }
        }
        words = next;
    }
    Ok(CodewordSet {
        field: f.clone(),
        n,
        words: words.into_iter().collect(),
    })
}

/// `(c_0, ..., c_{n-1}) -> (lambda c_{n-1}, c_0, ..., c_{n-2})`.
pub fn constashift(field: &FieldSpec, w: &[Elem], lam: Elem) -> Vec<Elem> {
    let n = w.len();
    if n == 0 {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(n);
    out.push(field.mul(lam, w[n - 1]));
    out.extend_from_slice(&w[..n - 1]);
    out
}

pub fn check_shift_closure(ws: &CodewordSet, lam: Elem) -> bool {
    ws.words
        .iter()
        .all(|w| ws.contains(&constashift(&ws.field, w, lam)))
}

fn dot(f: &FieldSpec, a: &[Elem], b: &[Elem]) -> Elem {
    a.iter()
        .zip(b)
        .fold(Elem::ZERO, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
}

/// Every vector of `F_q^n` orthogonal to every word of `ws`; requires
/// `q^n <= bound`.
pub fn bruteforce_dual(ws: &CodewordSet, bound: u64) -> Result<CodewordSet> {
    let f = &ws.field;
    let q = f.q();
    let n = ws.n;
    checked_size(q, n)
        .filter(|&s| s <= bound)
        .ok_or_else(|| too_large(q, n, bound))?;
    let words: Vec<&Vec<Elem>> = ws.words.iter().collect();
    let mut out = HashSet::new();
    let mut v = vec![0u64; n];
    loop {
        let x: Vec<Elem> = v.iter().map(|&c| f.elem(c).expect("in range")).collect();
        if words.iter().all(|w| dot(f, &x, w).is_zero()) {
            out.insert(x);
        }
        match code::odometer(&v, q - 1) {
            Some(next) => v = next,
            None => break,
        }
    }
    Ok(CodewordSet {
        field: f.clone(),
        n,
        words: out,
    })
}

/// Reduced row echelon basis of the space spanned by `ws`.
pub fn basis_of(ws: &CodewordSet) -> Matrix {
    let f = &ws.field;
    let n = ws.n;
    // rows kept with a leading 1 at their pivot and zeros in earlier pivots
    let mut rows: Vec<(usize, Vec<Elem>)> = Vec::new();
    for w in &ws.words {
        let mut v = w.clone();
        for (pc, row) in &rows {
            let c = v[*pc];
            if !c.is_zero() {
                for (x, &y) in v.iter_mut().zip(row) {
                    *x = f.sub(*x, f.mul(c, y));
                }
            }
        }
        if let Some(pc) = v.iter().position(|x| !x.is_zero()) {
            let inv = f.inv(v[pc]).expect("nonzero");
            for x in v.iter_mut() {
                *x = f.mul(*x, inv);
            }
            rows.push((pc, v));
        }
    }
    let rows: Vec<Vec<Elem>> = rows.into_iter().map(|(_, r)| r).collect();
    Matrix::from_rows(f, n, &rows).expect("equal lengths").rref().0
}

/// Basis of `{x : G x = 0}`, the Euclidean dual of the row space of `G`.
pub fn nullspace_dual(g: &Matrix) -> Matrix {
    g.nullspace()
}

/// `2k = n` and `G G^T = 0`, for `G` of full row rank `k`.
pub fn check_matrix_selfdual(g: &Matrix) -> Result<bool> {
    if g.rank() != g.nrows() {
        return Err(Error::RankDeficient);
    }
    if 2 * g.nrows() != g.ncols() {
        return Ok(false);
    }
    Ok(g.mul_transpose(g)?.is_zero())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinDistance {
    Exact(usize),
    /// The zero code has no nonzero word.
    Undefined,
    /// `q^dim` exceeds the enumeration cap.
    AboveCap,
}

/// Minimum Hamming weight of a nonzero codeword, by exhaustive enumeration
/// of at most `cap` codewords.
pub fn min_distance(c: &ConstaCode, cap: u64) -> MinDistance {
    if c.dim() == 0 {
        return MinDistance::Undefined;
    }
    match codeword_set(c, cap) {
        Ok(ws) => MinDistance::Exact(
            ws.words
                .iter()
                .map(|w| w.iter().filter(|x| !x.is_zero()).count())
                .filter(|&wt| wt > 0)
                .min()
                .expect("a nonzero code has a nonzero word"),
        ),
        Err(_) => MinDistance::AboveCap,
    }
}

/// Monic divisors of `x^n - lambda` of degree `d`, built from a fresh
/// general-purpose factorization of the whole binomial.
pub fn divisors_of_degree(field: &FieldSpec, n: u64, lam: Elem, d: usize) -> Result<Vec<Poly>> {
    let target = Poly::binomial(field, n as usize, lam);
    let fs = factor::factor(&target)?;
    let mut out = Vec::new();
    let mut exps = vec![0u32; fs.len()];
    loop {
        let deg: usize = fs.iter().zip(&exps).map(|((g, _), &e)| g.deg() * e as usize).sum();
        if deg == d {
            out.push(
                fs.iter()
                    .zip(&exps)
                    .fold(Poly::one(field), |acc, ((g, _), &e)| &acc * &g.pow(e as u64)),
            );
        }
        // odometer with per-position maxima
        let mut i = fs.len();
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if exps[i] < fs[i].1 {
                exps[i] += 1;
                break;
            }
            exps[i] = 0;
        }
    }
}

/// Number of monic divisors of `x^n - lambda`, from the general
/// factorization: `prod (e_i + 1)`.
pub fn divisor_count(field: &FieldSpec, n: u64, lam: Elem) -> Result<BigUint> {
    let target = Poly::binomial(field, n as usize, lam);
    let fs = factor::factor(&target)?;
    Ok(fs
        .iter()
        .fold(BigUint::from(1u32), |acc, (_, e)| acc * BigUint::from(*e + 1)))
}

/// Number of monic divisors of `x^n - lambda` by trial division. Only
/// degrees up to `n/2` are scanned: a divisor of degree `d < n/2` pairs with
/// its cofactor of degree `n - d`.
pub fn divisor_count_bruteforce(field: &FieldSpec, n: u64, lam: Elem, bound: u64) -> Result<u64> {
    let q = field.q();
    let n = n as usize;
    let half = n / 2;
    (0..=half)
        .map(|d| checked_size(q, d))
        .sum::<Option<u64>>()
        .filter(|&t| t <= bound)
        .ok_or_else(|| too_large(q, half, bound))?;
    let mut count = 0;
    let mut acc = Vec::new();
    for d in 0..=half {
        let weight = if 2 * d == n { 1 } else { 2 };
        let mut low = vec![0u64; d];
        loop {
            // x^n - lambda has no root at zero
            if d == 0 || low[0] != 0 {
                let low_elems: Vec<Elem> = low.iter().map(|&c| field.elem(c).expect("in range")).collect();
                if x_pow_mod_is(field, &low_elems, n, lam, &mut acc) {
                    count += weight;
                }
            }
            match code::odometer(&low, q - 1) {
                Some(next) => low = next,
                None => break,
            }
        }
    }
    Ok(count)
}

// Whether `x^n = lambda` modulo the monic polynomial `x^d + low(x)`, by
// stepping `x^k mod D` one multiplication by `x` at a time.
fn x_pow_mod_is(field: &FieldSpec, low: &[Elem], n: usize, lam: Elem, acc: &mut Vec<Elem>) -> bool {
    let d = low.len();
    if d == 0 {
        return true;
    }
    acc.clear();
    acc.resize(d, Elem::ZERO);
    acc[0] = Elem::ONE;
    for _ in 0..n {
        let top = acc[d - 1];
        acc.copy_within(0..d - 1, 1);
        acc[0] = Elem::ZERO;
        if !top.is_zero() {
            for (a, &l) in acc.iter_mut().zip(low) {
                *a = field.sub(*a, field.mul(top, l));
            }
        }
    }
    acc[0] == lam && acc[1..].iter().all(|c| c.is_zero())
}

/// Searches every monic divisor of degree `n/2` of `x^n - lambda` for one
/// whose generator matrix is self-orthogonal. Returns the first witness.
pub fn exhaustive_selfdual_search(field: &FieldSpec, n: u64, lam: Elem) -> Result<Option<Poly>> {
    if n % 2 == 1 {
        return Ok(None);
    }
    for gen in divisors_of_degree(field, n, lam, (n / 2) as usize)? {
        let c = ConstaCode::from_generator(field, n, lam, &gen)?;
        if check_matrix_selfdual(&code::generator_matrix(&c)?)? {
            return Ok(Some(gen));
        }
    }
    Ok(None)
}
