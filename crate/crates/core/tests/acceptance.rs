//! End-to-end acceptance checks. Runs without the libtest harness so that
//! every criterion prints exactly one PASS/FAIL line.

use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use constacyclic::code::{self, CodeShape, ConstaCode};
use constacyclic::cyclo::{self, TwistVariant};
use constacyclic::oracle::{self, DEFAULT_BOUND};
use constacyclic::selfdual::{self, Outcome};
use constacyclic::{Elem, FieldSpec, Poly};

type Check = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn field(q: u64) -> FieldSpec {
    let (p, s) = match q {
        4 => (2, 2),
        9 => (3, 2),
        25 => (5, 2),
        49 => (7, 2),
        p => (p, 1),
    };
    FieldSpec::new(p, s).expect("valid field")
}

fn err<E: std::fmt::Debug>(e: E) -> String {
    format!("{e:?}")
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<Duration, String> {
    let t = start.elapsed();
    if t > limit {
        return Err(format!("{what} took {t:?}, limit {limit:?}"));
    }
    Ok(t)
}

// x^7 - 1 over F_25.
fn criterion_1() -> Check {
    let f = field(25);
    let fl = cyclo::factor_binomial(&f, 7, f.one()).map_err(err)?;
    let mut degs = fl.degrees();
    degs.sort();
    ensure!(degs == vec![1, 3, 3], "degrees {degs:?}");
    let linear = Poly::from_ints(&f, &[4, 1]);
    ensure!(fl.polys().contains(&linear), "x + 4 missing");
    for p in fl.polys().iter().filter(|p| p.deg() == 3) {
        ensure!(p.coeff(0) == f.from_int(4), "cubic {p} has constant term {:?}", p.coeff(0));
        ensure!(p.is_irreducible(), "cubic {p} reducible");
    }
    let prod = Poly::product(&f, &fl.polys());
    ensure!(prod == Poly::binomial(&f, 7, f.one()), "product is {prod}");
    Ok(format!("factors {}", fl.polys().iter().map(|p| format!("[{p}]")).collect::<String>()))
}

// The order-parity criterion.
fn criterion_2() -> Check {
    let cases = [(5, 70, false, 6), (9, 30, false, 2), (9, 126, true, 3)];
    for (q, n, expect, ord) in cases {
        let f = field(q);
        let shape = CodeShape::decompose(n, f.p()).map_err(err)?;
        let v = selfdual::selfdual_exists_paper(&f, &shape).map_err(err)?;
        ensure!(v.exists == expect, "q={q} n={n}: got {}", v.exists);
        ensure!(v.ord_value == Some(ord), "q={q} n={n}: ord {:?}", v.ord_value);
    }
    Ok("(5,70)=false ord 6; (9,30)=false ord 2; (9,126)=true ord 3".into())
}

// Explicit self-dual witnesses where the order-parity criterion says none exist.
fn criterion_3() -> Check {
    let start = Instant::now();
    for (q, n) in [(5, 70), (9, 30)] {
        let f = field(q);
        let shape = CodeShape::decompose(n, f.p()).map_err(err)?;
        let v = selfdual::selfdual_exists_structural(&f, &shape).map_err(err)?;
        ensure!(v.exists, "q={q} n={n}: structural says no");
        let w = v.witness.ok_or("no witness")?;
        ensure!(code::is_self_dual(&w), "q={q} n={n}: A != monic(B*)");
        let g = code::generator_matrix(&w).map_err(err)?;
        ensure!(g.nrows() as u64 * 2 == n, "dim {} for n={n}", g.nrows());
        ensure!(oracle::check_matrix_selfdual(&g).map_err(err)?, "q={q} n={n}: G G^T != 0");
        let r = selfdual::consistency_report(&f, &shape).map_err(err)?;
        ensure!(r.outcome == Outcome::Disagree, "q={q} n={n}: {:?}", r.outcome);
    }
    let f = field(9);
    let r = selfdual::consistency_report(&f, &CodeShape::decompose(126, 3).map_err(err)?).map_err(err)?;
    ensure!(r.outcome == Outcome::Agree(true), "q=9 n=126: {:?}", r.outcome);
    let t = within(start, Duration::from_secs(10), "criterion 3")?;
    Ok(format!("DISAGREE (5,70), DISAGREE (9,30), AGREE (9,126) in {t:.2?}"))
}

// Structural existence against every divisor of x^n + 1.
fn criterion_4() -> Check {
    let start = Instant::now();
    let mut shapes = 0;
    let mut tested = 0usize;
    for q in [5, 9, 13] {
        let f = field(q);
        let neg = f.neg_one();
        for n in 1..=20u64 {
            let shape = CodeShape::decompose(n, f.p()).map_err(err)?;
            let structural = selfdual::selfdual_exists_structural(&f, &shape).map_err(err)?.exists;
            let mut found = false;
            for d in 0..=n as usize {
                for gen in oracle::divisors_of_degree(&f, n, neg, d).map_err(err)? {
                    tested += 1;
                    let c = ConstaCode::from_generator(&f, n, neg, &gen).map_err(err)?;
                    if c.dim() == 0 {
                        continue;
                    }
                    let g = code::generator_matrix(&c).map_err(err)?;
                    if oracle::check_matrix_selfdual(&g).map_err(err)? {
                        found = true;
                    }
                }
            }
            ensure!(structural == found, "q={q} n={n}: structural {structural}, exhaustive {found}");
            shapes += 1;
        }
    }
    let t = within(start, Duration::from_secs(60), "criterion 4")?;
    Ok(format!("{shapes} shapes, {tested} generators in {t:.2?}"))
}

// Twisted-grid remultiplication.
fn criterion_5() -> Check {
    let mut grids = 0;
    for q in [5u64, 9, 13, 17, 25] {
        let f = field(q);
        for a in 0..=3u32 {
            for m in [1u64, 3, 5, 7, 9] {
                if m % f.p() == 0 {
                    continue;
                }
                let big = (1usize << a) * m as usize;
                let flat = cyclo::factor_binomial(&f, big as u64, f.one()).map_err(err)?.polys();
                if (q - 1) % (1 << a) == 0 {
                    let g = cyclo::factor_grid(&f, a, m, f.one(), TwistVariant::All).map_err(err)?;
                    let target = Poly::binomial(&f, big, f.one());
                    ensure!(g.product() == target, "all q={q} a={a} m={m}");
                    let raw_expected = if a >= 1 { -&target } else { target.clone() };
                    ensure!(g.raw_product() == raw_expected, "raw q={q} a={a} m={m}: {}", g.raw_product());
                    ensure!(g.sorted_polys() == flat, "all q={q} a={a} m={m}: grid differs from factorization");
                    grids += 1;
                }
                if (q - 1) % (1 << (a + 1)) == 0 {
                    let g = cyclo::factor_grid(&f, a, m, f.one(), TwistVariant::Odd).map_err(err)?;
                    let target = Poly::binomial(&f, big, f.neg_one());
                    ensure!(g.product() == target, "odd q={q} a={a} m={m}");
                    let flat = cyclo::factor_binomial(&f, big as u64, f.neg_one()).map_err(err)?.polys();
                    ensure!(g.sorted_polys() == flat, "odd q={q} a={a} m={m}: grid differs from factorization");
                    grids += 1;
                }
            }
        }
    }
    Ok(format!("{grids} grids; raw all-variant product is -(x^M - 1) for a >= 1"))
}

// Order and product identities for primitive 2^a-th roots of unity.
fn criterion_6() -> Check {
    let mut roots = 0;
    for q in [5u64, 9, 13, 17, 25] {
        let f = field(q);
        for a in 1..=3u32 {
            let order = 1u64 << a;
            if (q - 1) % order != 0 {
                continue;
            }
            for alpha in f.units().filter(|&u| f.element_order(u).ok() == Some(order)) {
                roots += 1;
                for i in 0..=a {
                    let o = f.element_order(f.pow_u(alpha, 1 << i)).map_err(err)?;
                    ensure!(o == 1 << (a - i), "q={q} a={a} i={i}: order {o}");
                }
                for m in (1..4 * order).step_by(2) {
                    let o = f.element_order(f.pow_u(alpha, m)).map_err(err)?;
                    ensure!(o == order, "q={q} a={a} m={m}: order {o}");
                }
                let prod = (1..=order).fold(f.one(), |acc, k| f.mul(acc, f.pow_u(alpha, k)));
                ensure!(prod == f.neg_one(), "q={q} a={a}: product {prod:?}");
            }
        }
    }
    Ok(format!("{roots} primitive roots checked"))
}

// Duality on generated codes.
fn criterion_7() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let lengths: [(u64, &[u64]); 3] = [
        (5, &[2, 4, 6, 8, 10, 12, 15, 20, 30, 40, 50, 60]),
        (9, &[2, 4, 6, 8, 10, 12, 18, 20, 24, 30]),
        (25, &[2, 3, 4, 6, 8, 12, 14, 24, 30]),
    ];
    let (mut codes, mut brute) = (0, 0);
    for (q, ns) in lengths {
        let f = field(q);
        let units: Vec<Elem> = f.units().collect();
        for &n in ns {
            let shape = CodeShape::decompose(n, f.p()).map_err(err)?;
            for _ in 0..8 {
                let lam = units[rng.gen_range(0..units.len())];
                let base = code::factor_base(&f, &shape, lam).map_err(err)?.polys();
                let exps: Vec<u64> = base.iter().map(|_| rng.gen_range(0..=shape.p_pow_r())).collect();
                let ev = code::ExponentVector::new(base, exps).map_err(err)?;
                let c = code::build_code(&f, &shape, lam, &ev).map_err(err)?;
                let d = code::dual(&c);
                ensure!(code::dual(&d) == c, "dual not an involution: q={q} n={n} gen {}", c.generator());
                ensure!(c.dim() + d.dim() == n as usize, "dimensions q={q} n={n}");
                ensure!(d.lam() == f.inv(lam).map_err(err)?, "dual constant");
                codes += 1;
                let small = oracle::checked_size(q, c.dim()).is_some_and(|s| s <= DEFAULT_BOUND);
                if !small || c.dim() == 0 || d.dim() == 0 {
                    continue;
                }
                brute += 1;
                let ws = oracle::codeword_set(&c, DEFAULT_BOUND).map_err(err)?;
                // dual computed from the enumerated words alone
                let orth = oracle::nullspace_dual(&oracle::basis_of(&ws));
                let gd = code::generator_matrix(&d).map_err(err)?;
                ensure!(orth.same_row_space(&gd), "dual mismatch q={q} n={n} gen {}", c.generator());
                if oracle::checked_size(q, n as usize).is_some_and(|s| s <= 400_000) {
                    let bd = oracle::bruteforce_dual(&ws, 400_000).map_err(err)?;
                    let dw = oracle::codeword_set(&d, 400_000).map_err(err)?;
                    ensure!(bd == dw, "exhaustive dual mismatch q={q} n={n}");
                }
            }
        }
    }
    ensure!(codes >= 200, "only {codes} codes");
    Ok(format!("{codes} codes, {brute} checked against the oracle dual"))
}

// Monomial equivalence with cyclic codes.
fn criterion_8() -> Check {
    let mut checked = 0;
    for q in [5u64, 9] {
        let f = field(q);
        for n in 1..=12u64 {
            let shape = CodeShape::decompose(n, f.p()).map_err(err)?;
            for lam in f.units() {
                let has_root = f.units().any(|d| f.pow_u(d, n) == lam);
                let en = code::enumerate_codes(&f, &shape, lam, None).map_err(err)?;
                for (_, c) in en.stream {
                    let eq = code::cyclic_equivalent(&c).map_err(err)?;
                    let Some((map, cyc)) = eq else {
                        ensure!(!has_root, "q={q} n={n}: missed an n-th root of {lam:?}");
                        continue;
                    };
                    ensure!(has_root, "q={q} n={n}: spurious root");
                    ensure!(f.pow_u(map.delta, n) == lam, "delta^n != lambda");
                    ensure!(cyc.lam() == f.one(), "not cyclic");
                    if !oracle::checked_size(q, c.dim()).is_some_and(|s| s <= DEFAULT_BOUND) {
                        continue;
                    }
                    let cw = oracle::codeword_set(&c, DEFAULT_BOUND).map_err(err)?;
                    let yw = oracle::codeword_set(&cyc, DEFAULT_BOUND).map_err(err)?;
                    let inv = map.inverse();
                    let image: std::collections::HashSet<Vec<Elem>> =
                        yw.words.iter().map(|w| inv.apply(w)).collect();
                    ensure!(image == cw.words, "q={q} n={n}: cyclic image differs from the code");
                    let forward: std::collections::HashSet<Vec<Elem>> =
                        cw.words.iter().map(|w| map.apply(w)).collect();
                    ensure!(forward == yw.words, "q={q} n={n}: code image differs from the cyclic code");
                    checked += 1;
                }
            }
        }
    }
    let f = field(25);
    let beta2 = f.gen_pow(2);
    let whole = ConstaCode::from_generator(&f, 1750, beta2, &Poly::one(&f)).map_err(err)?;
    let (map, _) = code::cyclic_equivalent(&whole).map_err(err)?.ok_or("no root for n = 1750")?;
    let k = f.log(map.delta).ok_or("delta is zero")?;
    ensure!((k * 1750) % 24 == 2, "delta = b^{k}: 1750 k != 2 mod 24");
    Ok(format!("{checked} codes set-equal; n=1750: delta = b^{k}"))
}

// Counting codes.
fn criterion_9() -> Check {
    let mut cases = 0;
    for q in [5u64, 9] {
        let f = field(q);
        let lams = [f.one(), f.neg_one(), f.generator()];
        for n in 1..=14u64 {
            let shape = CodeShape::decompose(n, f.p()).map_err(err)?;
            for lam in lams {
                let en = code::enumerate_codes(&f, &shape, lam, None).map_err(err)?;
                let brute = oracle::divisor_count_bruteforce(&f, n, lam, 10_000_000).map_err(err)?;
                ensure!(en.total == BigUint::from(brute), "q={q} n={n}: {} vs {brute}", en.total);
                let listed = en.stream.count();
                ensure!(BigUint::from(listed) == en.total, "q={q} n={n}: stream yields {listed}");
                cases += 1;
            }
        }
    }
    let f = field(25);
    let en = code::enumerate_codes(&f, &CodeShape::decompose(1750, 5).map_err(err)?, f.one(), Some(0))
        .map_err(err)?;
    let expect = BigUint::from(126u32).pow(6);
    ensure!(en.total == expect, "F_25 n=1750: {}", en.total);
    Ok(format!("{cases} cases; F_25 n=1750 count {}", en.total))
}

// Frobenius roots.
fn criterion_10() -> Check {
    let mut n = 0;
    for q in [5u64, 9, 25, 49] {
        let f = field(q);
        for r in 0..=3u32 {
            let pr = f.p().pow(r);
            for lam in f.units() {
                let l0 = f.prth_root(lam, r).map_err(err)?;
                ensure!(f.pow_u(l0, pr) == lam, "q={q} r={r}");
                n += 1;
            }
        }
    }
    Ok(format!("{n} roundtrips"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("factorization of x^7 - 1 over F_25", criterion_1),
        ("order-parity criterion", criterion_2),
        ("self-dual witnesses and discrepancy report", criterion_3),
        ("structural vs exhaustive existence, n <= 20", criterion_4),
        ("twisted grid remultiplication", criterion_5),
        ("roots of unity identities", criterion_6),
        ("duality properties", criterion_7),
        ("monomial equivalence with cyclic codes", criterion_8),
        ("code counts", criterion_9),
        ("Frobenius root roundtrip", criterion_10),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let res = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let t = start.elapsed();
        match res {
            Ok(detail) => println!("PASS {:>2} {name} [{t:.2?}]: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name} [{t:.2?}]: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
