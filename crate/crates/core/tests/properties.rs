use proptest::prelude::*;

use constacyclic::code::{self, CodeShape};
use constacyclic::factor;
use constacyclic::text;
use constacyclic::{Elem, FieldSpec, Poly};

fn fields() -> Vec<FieldSpec> {
    [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (3, 2), (5, 2), (2, 3)]
        .iter()
        .map(|&(p, s)| FieldSpec::new(p, s).unwrap())
        .collect()
}

prop_compose! {
    fn field_and_polys(max_deg: usize)
        (fi in 0..8usize)
        (f in Just(fields()[fi].clone()),
         a in prop::collection::vec(any::<u32>(), 0..=max_deg),
         b in prop::collection::vec(any::<u32>(), 0..=max_deg),
         c in prop::collection::vec(any::<u32>(), 0..=max_deg))
        -> (FieldSpec, Poly, Poly, Poly)
    {
        let mk = |v: &[u32]| {
            let q = f.q();
            Poly::from_coeffs(&f, v.iter().map(|&x| f.elem(x as u64 % q).unwrap()).collect())
        };
        let (pa, pb, pc) = (mk(&a), mk(&b), mk(&c));
        (f, pa, pb, pc)
    }
}

fn unit(f: &FieldSpec, k: u32) -> Elem {
    f.gen_pow(k as i64)
}

proptest! {
    #[test]
    fn field_axioms(fi in 0..8usize, x in any::<u32>(), y in any::<u32>(), z in any::<u32>()) {
        let f = &fields()[fi];
        let q = f.q();
        let [x, y, z] = [x, y, z].map(|v| f.elem(v as u64 % q).unwrap());
        prop_assert_eq!(f.add(x, f.add(y, z)), f.add(f.add(x, y), z));
        prop_assert_eq!(f.mul(x, f.mul(y, z)), f.mul(f.mul(x, y), z));
        prop_assert_eq!(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
        prop_assert_eq!(f.add(x, f.neg(x)), Elem::ZERO);
        if !x.is_zero() {
            prop_assert_eq!(f.mul(x, f.inv(x).unwrap()), Elem::ONE);
        }
        prop_assert_eq!(f.pow_u(x, q), x);
    }

    #[test]
    fn ring_axioms((f, a, b, c) in field_and_polys(8)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Poly::zero(&f));
        prop_assert_eq!(&a * &Poly::one(&f), a);
    }

    #[test]
    fn divrem_reconstructs((_f, a, b, _c) in field_and_polys(10)) {
        prop_assume!(!b.is_zero());
        let (q, r) = a.divrem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.deg() < b.deg());
    }

    #[test]
    fn gcd_divides_both((_f, a, b, _c) in field_and_polys(8)) {
        prop_assume!(!a.is_zero() || !b.is_zero());
        let g = a.gcd(&b).unwrap();
        prop_assert!(g.is_monic());
        prop_assert!(g.divides(&a).unwrap());
        prop_assert!(g.divides(&b).unwrap());
    }

    #[test]
    fn reciprocal_is_multiplicative((_f, a, b, _c) in field_and_polys(8)) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        prop_assume!(!a.coeff(0).is_zero() && !b.coeff(0).is_zero());
        let lhs = (&a * &b).reciprocal(false).unwrap();
        let rhs = &a.reciprocal(false).unwrap() * &b.reciprocal(false).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(a.reciprocal(false).unwrap().reciprocal(false).unwrap(), a);
    }

    #[test]
    fn substitution_composes((f, a, _b, _c) in field_and_polys(8), j in any::<u32>(), k in any::<u32>()) {
        let (u, v) = (unit(&f, j), unit(&f, k));
        let twice = a.substitute_scaled(u).unwrap().substitute_scaled(v).unwrap();
        prop_assert_eq!(twice, a.substitute_scaled(f.mul(u, v)).unwrap());
        let back = a.substitute_scaled(u).unwrap().substitute_scaled(f.inv(u).unwrap()).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn factorization_remultiplies((f, a, _b, _c) in field_and_polys(9)) {
        prop_assume!(!a.is_zero() && a.deg() > 0);
        let fs = factor::factor(&a).unwrap();
        let prod = fs.iter().fold(Poly::one(&f), |acc, (g, e)| &acc * &g.pow(*e as u64));
        prop_assert_eq!(prod.scale(a.lead()), a);
        for (g, _) in &fs {
            prop_assert!(g.is_monic() && g.is_irreducible());
        }
    }

    #[test]
    fn text_roundtrip((f, a, _b, _c) in field_and_polys(12)) {
        prop_assert_eq!(text::parse_poly(&f, &text::format_poly(&a)).unwrap(), a);
    }

    #[test]
    fn dual_is_an_involution(fi in 0..8usize, n in 1..24u64, k in any::<u32>(), seed in any::<u64>()) {
        let f = &fields()[fi];
        let lam = unit(f, k);
        let shape = CodeShape::decompose(n, f.p()).unwrap();
        let base = code::factor_base(f, &shape, lam).unwrap().polys();
        let pr = shape.p_pow_r();
        let exps: Vec<u64> = (0..base.len() as u64)
            .map(|i| (seed.rotate_left(7 * i as u32)) % (pr + 1))
            .collect();
        let c = code::build_code(f, &shape, lam, &code::ExponentVector::new(base, exps).unwrap()).unwrap();
        let d = code::dual(&c);
        prop_assert_eq!(c.dim() + d.dim(), n as usize);
        prop_assert_eq!(code::dual(&d), c.clone());
        // every generator row of C is orthogonal to every generator row of the dual
        if c.dim() > 0 && d.dim() > 0 {
            let g = code::generator_matrix(&c).unwrap();
            let h = code::generator_matrix(&d).unwrap();
            prop_assert!(g.mul_transpose(&h).unwrap().is_zero());
        }
    }
}

#[test]
fn prth_root_exhaustive() {
    for f in fields() {
        for r in 0..=4u32 {
            let pr = f.p().pow(r);
            for lam in f.units() {
                let l0 = f.prth_root(lam, r).unwrap();
                assert_eq!(f.pow_u(l0, pr), lam, "{f} r={r}");
            }
        }
    }
}

#[test]
fn nth_root_matches_search() {
    for f in fields() {
        for n in 1..=30u64 {
            for lam in f.units() {
                let brute = f.units().find(|&d| f.pow_u(d, n) == lam);
                let got = f.nth_root_of(lam, n).unwrap();
                assert_eq!(got.is_some(), brute.is_some(), "{f} n={n} lam={lam:?}");
                if let Some(d) = got {
                    assert_eq!(f.pow_u(d, n), lam);
                }
            }
        }
    }
}
