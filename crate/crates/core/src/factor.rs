//! Factorization of polynomials over `F_q`: squarefree decomposition,
//! distinct-degree splitting, then Cantor-Zassenhaus equal-degree splitting.
//!
//! The equal-degree step is randomized with a fixed seed, and the output is
//! re-sorted canonically, so results are deterministic.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::Elem;
use crate::poly::Poly;

const SEED: u64 = 0x5eed_c0de;

/// Monic irreducible factors of `f` with multiplicities, sorted by
/// [`Poly::canonical_cmp`]. The leading coefficient of `f` is dropped.
pub fn factor(f: &Poly) -> Result<Vec<(Poly, u32)>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let f = f.monicize()?;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut out: Vec<(Poly, u32)> = Vec::new();
    for (part, mult) in squarefree_decomposition(&f)? {
        for (d, block) in distinct_degree(&part)? {
            for g in equal_degree(&block, d, &mut rng)? {
                match out.iter_mut().find(|(h, _)| *h == g) {
                    Some(entry) => entry.1 += mult,
                    None => out.push((g, mult)),
                }
            }
        }
    }
    out.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    Ok(out)
}

/// Writes a monic `f` as `prod g_i^i` with each `g_i` squarefree and the
/// `g_i` pairwise coprime. Only nonconstant parts are returned.
pub fn squarefree_decomposition(f: &Poly) -> Result<Vec<(Poly, u32)>> {
    let field = f.field().clone();
    let mut out = Vec::new();
    if f.deg() == 0 {
        return Ok(out);
    }
    let d = f.derivative();
    let mut c = f.gcd(&d)?;
    let mut w = f.exact_div(&c)?;
    let mut i = 1u32;
    while !w.is_one() {
        let y = w.gcd(&c)?;
        let fac = w.exact_div(&y)?;
        if !fac.is_one() {
            out.push((fac.monicize()?, i));
        }
        w = y;
        c = c.exact_div(&w)?;
        i += 1;
    }
    if !c.is_one() {
        // what is left is a p-th power
        let p = field.p() as usize;
        let root_exp = field.q() / field.p();
        let coeffs = c
            .coeffs()
            .iter()
            .step_by(p)
            .map(|&a| field.pow_u(a, root_exp))
            .collect();
        let root = Poly::from_coeffs(&field, coeffs);
        for (g, j) in squarefree_decomposition(&root.monicize()?)? {
            out.push((g, j * p as u32));
        }
    }
    Ok(out)
}

/// Splits a squarefree monic `f` into `(d, product of all degree-d factors)`.
pub fn distinct_degree(f: &Poly) -> Result<Vec<(usize, Poly)>> {
    let field = f.field().clone();
    let q = field.q();
    let x = Poly::x(&field);
    let mut rest = f.clone();
    let mut h = x.rem(&rest)?;
    let mut out = Vec::new();
    let mut d = 1;
    while rest.deg() >= 2 * d {
        h = h.pow_mod(q, &rest)?;
        let g = (&h - &x).gcd(&rest)?;
        if !g.is_one() {
            rest = rest.exact_div(&g)?;
            h = h.rem(&rest)?;
            out.push((d, g));
        }
        d += 1;
    }
    if rest.deg() > 0 {
        out.push((rest.deg(), rest));
    }
    Ok(out)
}

/// Splits a squarefree monic `f` whose irreducible factors all have degree
/// `d` into those factors (unsorted).
pub fn equal_degree(f: &Poly, d: usize, rng: &mut ChaCha8Rng) -> Result<Vec<Poly>> {
    let field = f.field().clone();
    let target = f.deg() / d;
    let mut done: Vec<Poly> = Vec::new();
    let mut pending = vec![f.clone()];
    while let Some(u) = pending.pop() {
        if u.deg() == d {
            done.push(u);
            continue;
        }
        loop {
            let coeffs = (0..u.deg())
                .map(|_| field.elem(rng.gen_range(0..field.q())))
                .collect::<Result<Vec<Elem>>>()?;
            let a = Poly::from_coeffs(&field, coeffs);
            if a.deg() == 0 {
                continue;
            }
            let b = splitting_element(&a, &u, d)?;
            let g = b.gcd(&u)?;
            if g.deg() > 0 && g.deg() < u.deg() {
                let other = u.exact_div(&g)?;
                pending.push(g);
                pending.push(other.monicize()?);
                break;
            }
        }
    }
    debug_assert_eq!(done.len(), target);
    Ok(done)
}

// For odd q: a^((q^d - 1)/2) - 1, computed as (a^(1 + q + ... + q^(d-1)))^((q-1)/2)
// to keep exponents small. For q even: the trace a + a^2 + ... + a^(2^(sd-1)).
fn splitting_element(a: &Poly, u: &Poly, d: usize) -> Result<Poly> {
    let field = u.field();
    let q = field.q();
    if field.p() == 2 {
        let steps = field.s() as usize * d;
        let mut t = a.rem(u)?;
        let mut acc = t.clone();
        for _ in 1..steps {
            t = (&t * &t).rem(u)?;
            acc = &acc + &t;
        }
        return Ok(acc);
    }
    let mut t = a.rem(u)?;
    let mut norm = t.clone();
    for _ in 1..d {
        t = t.pow_mod(q, u)?;
        norm = (&norm * &t).rem(u)?;
    }
    let b = norm.pow_mod((q - 1) / 2, u)?;
    Ok(&b - &Poly::one(field))
}
