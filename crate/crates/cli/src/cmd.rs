use std::collections::HashSet;

use serde_json::{json, Value};

use constacyclic::code::{self, CodeShape, ConstaCode};
use constacyclic::cyclo::{self, TwistVariant};
use constacyclic::oracle::{self, MinDistance};
use constacyclic::selfdual::{self, ExistenceVerdict, Outcome as Agreement};
use constacyclic::text;
use constacyclic::{factor, make_field, Elem, Error, FieldSpec, Poly, Result};

use crate::{CodeArgs, CodesCmd, Command, Criterion, FieldArgs, FieldCmd, GenArgs, ListArgs, SelfdualCmd, Variant, VerifyArgs};

/// Exit status for a verified disagreement between the existence criteria.
pub const DISAGREE: u8 = 2;

pub struct Doc {
    pub field: Value,
    pub result: Value,
}

pub struct Outcome {
    pub doc: Doc,
    pub status: u8,
}

fn ok(field: &FieldSpec, result: Value) -> Result<Outcome> {
    Ok(Outcome {
        doc: Doc {
            field: field_json(field),
            result,
        },
        status: 0,
    })
}

pub fn dispatch(command: &Command) -> Result<Outcome> {
    match command {
        Command::Field { cmd: FieldCmd::Info(f) } => field_info(f),
        Command::Factor { field, m, c } => factor_binomial(field, *m, c),
        Command::Grid {
            field,
            a,
            m,
            variant,
            scale,
        } => grid(field, *a, *m, *variant, scale),
        Command::Codes { cmd } => match cmd {
            CodesCmd::Count(c) => codes_count(c),
            CodesCmd::List { code, listing } => codes_list(code, listing),
            CodesCmd::Dual(g) => codes_dual(g),
            CodesCmd::Selfdual {
                cmd: SelfdualCmd::Exists { field, n, criterion },
            } => selfdual_exists(field, *n, *criterion),
            CodesCmd::Selfdual {
                cmd: SelfdualCmd::List { field, n, listing },
            } => selfdual_list(field, *n, listing),
            CodesCmd::Equiv(g) => codes_equiv(g),
        },
        Command::Verify(v) => verify(v),
    }
}

fn build_field(args: &FieldArgs) -> Result<FieldSpec> {
    make_field(args.p, args.s, args.modulus.as_deref())
}

fn parse_unit(field: &FieldSpec, tok: &str, what: &str) -> Result<Elem> {
    let e = text::parse_elem(field, tok)?;
    if e.is_zero() {
        return Err(Error::InvalidArgument(format!("{what} must be nonzero")));
    }
    Ok(e)
}

fn field_json(f: &FieldSpec) -> Value {
    json!({
        "p": f.p(),
        "s": f.s(),
        "q": f.q(),
        "modulus": f.modulus(),
        "generator": f.generator().encoding(),
    })
}

fn elem_json(f: &FieldSpec, e: Elem) -> Value {
    json!({
        "value": e.encoding(),
        "log": f.log(e),
    })
}

fn poly_json(p: &Poly) -> Value {
    json!({
        "coeffs": text::format_poly(p),
        "degree": p.degree(),
    })
}

fn shape_json(s: &CodeShape) -> Value {
    json!({ "a": s.a, "m": s.m, "r": s.r, "p_pow_r": s.p_pow_r() })
}

fn code_json(c: &ConstaCode) -> Value {
    json!({
        "n": c.n(),
        "lambda": elem_json(c.field(), c.lam()),
        "generator": poly_json(c.generator()),
        "dim": c.dim(),
    })
}

fn field_info(args: &FieldArgs) -> Result<Outcome> {
    let f = build_field(args)?;
    let g = f.generator();
    ok(
        &f,
        json!({
            "label": f.to_string(),
            "generator_order": f.element_order(g)?,
            "modulus_poly": f.modulus().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","),
        }),
    )
}

fn factor_binomial(args: &FieldArgs, m: u64, c: &str) -> Result<Outcome> {
    let f = build_field(args)?;
    if m == 0 {
        return Err(Error::ZeroDegree);
    }
    let c = parse_unit(&f, c, "c")?;
    let target = Poly::binomial(&f, m as usize, c);
    let fs = factor::factor(&target)?;
    let product = fs
        .iter()
        .fold(Poly::one(&f), |acc, (g, e)| &acc * &g.pow(*e as u64));
    let factors: Vec<Value> = fs
        .iter()
        .map(|(g, e)| json!({ "poly": poly_json(g), "multiplicity": e }))
        .collect();
    ok(
        &f,
        json!({
            "m": m,
            "c": elem_json(&f, c),
            "target": poly_json(&target),
            "factors": factors,
            "degrees": fs.iter().map(|(g, _)| g.deg()).collect::<Vec<_>>(),
            "product_matches": product == target,
        }),
    )
}

fn grid(args: &FieldArgs, a: u32, m: u64, variant: Variant, scale: &str) -> Result<Outcome> {
    let f = build_field(args)?;
    let scale = parse_unit(&f, scale, "scale")?;
    let v = match variant {
        Variant::All => TwistVariant::All,
        Variant::Even => TwistVariant::Even,
        Variant::Odd => TwistVariant::Odd,
    };
    let g = cyclo::factor_grid(&f, a, m, scale, v)?;
    let entries: Vec<Value> = g
        .entries
        .iter()
        .map(|e| {
            json!({
                "k": e.k,
                "i": e.i,
                "twist_exponent": e.twist_exponent,
                "poly": poly_json(&e.poly),
            })
        })
        .collect();
    let target = g.target();
    ok(
        &f,
        json!({
            "a": a,
            "m": m,
            "variant": v.name(),
            "twist_root": elem_json(&f, g.twist_root),
            "scale": elem_json(&f, scale),
            "base_factors": g.base_factors.polys().iter().map(poly_json).collect::<Vec<_>>(),
            "entries": entries,
            "target": poly_json(&target),
            "product_matches": g.product() == target,
            "raw_product": poly_json(&g.raw_product()),
        }),
    )
}

fn shape_and_lambda(args: &CodeArgs) -> Result<(FieldSpec, CodeShape, Elem)> {
    let f = build_field(&args.field)?;
    let shape = CodeShape::decompose(args.n, f.p())?;
    let lam = parse_unit(&f, &args.lambda, "lambda")?;
    Ok((f, shape, lam))
}

fn codes_count(args: &CodeArgs) -> Result<Outcome> {
    let (f, shape, lam) = shape_and_lambda(args)?;
    let en = code::enumerate_codes(&f, &shape, lam, Some(0))?;
    ok(
        &f,
        json!({
            "n": args.n,
            "lambda": elem_json(&f, lam),
            "shape": shape_json(&shape),
            "base_factors": en.base.iter().map(poly_json).collect::<Vec<_>>(),
            "count": en.total.to_string(),
        }),
    )
}

fn check_listing(total: &num_bigint::BigUint, listing: &ListArgs) -> Result<Option<usize>> {
    if listing.limit.is_none() && *total > listing.max_list.into() {
        return Err(Error::InvalidArgument(format!(
            "{total} entries exceed --max-list {}; pass --limit",
            listing.max_list
        )));
    }
    Ok(listing.limit)
}

fn codes_list(args: &CodeArgs, listing: &ListArgs) -> Result<Outcome> {
    let (f, shape, lam) = shape_and_lambda(args)?;
    let en = code::enumerate_codes(&f, &shape, lam, Some(0))?;
    let limit = check_listing(&en.total, listing)?;
    let en = code::enumerate_codes(&f, &shape, lam, limit)?;
    let codes: Vec<Value> = en
        .stream
        .map(|(exps, c)| {
            json!({
                "exponents": exps,
                "generator": poly_json(c.generator()),
                "dim": c.dim(),
            })
        })
        .collect();
    ok(
        &f,
        json!({
            "n": args.n,
            "lambda": elem_json(&f, lam),
            "shape": shape_json(&shape),
            "base_factors": en.base.iter().map(poly_json).collect::<Vec<_>>(),
            "count": en.total.to_string(),
            "listed": codes.len(),
            "codes": codes,
        }),
    )
}

fn parse_code(args: &GenArgs) -> Result<ConstaCode> {
    let (f, _, lam) = shape_and_lambda(&args.code)?;
    let gen = text::parse_poly(&f, &args.gen)?;
    ConstaCode::from_generator(&f, args.code.n, lam, &gen)
}

fn codes_dual(args: &GenArgs) -> Result<Outcome> {
    let c = parse_code(args)?;
    let d = code::dual(&c);
    ok(
        c.field(),
        json!({
            "code": code_json(&c),
            "dual": code_json(&d),
            "self_dual": code::is_self_dual(&c),
        }),
    )
}

fn codes_equiv(args: &GenArgs) -> Result<Outcome> {
    let c = parse_code(args)?;
    let f = c.field();
    let result = match code::cyclic_equivalent(&c)? {
        Some((map, cyc)) => json!({
            "code": code_json(&c),
            "equivalent": true,
            "delta": elem_json(f, map.delta),
            "cyclic": code_json(&cyc),
        }),
        None => json!({
            "code": code_json(&c),
            "equivalent": false,
            "delta": Value::Null,
            "cyclic": Value::Null,
        }),
    };
    ok(f, result)
}

fn structural_json(v: &ExistenceVerdict) -> Value {
    json!({
        "exists": v.exists,
        "obstruction": v.obstruction.iter().map(poly_json).collect::<Vec<_>>(),
        "witness": v.witness.as_ref().map(code_json),
    })
}

fn paper_json(v: &ExistenceVerdict) -> Value {
    json!({ "exists": v.exists, "ord_value": v.ord_value })
}

fn selfdual_exists(args: &FieldArgs, n: u64, criterion: Criterion) -> Result<Outcome> {
    let f = build_field(args)?;
    let shape = CodeShape::decompose(n, f.p())?;
    let head = json!({ "n": n, "shape": shape_json(&shape) });
    let mut result = match criterion {
        Criterion::Structural => {
            let v = selfdual::selfdual_exists_structural(&f, &shape)?;
            json!({ "criterion": "structural", "structural": structural_json(&v), "exists": v.exists })
        }
        Criterion::Paper => {
            let v = selfdual::selfdual_exists_paper(&f, &shape)?;
            json!({ "criterion": "paper", "paper": paper_json(&v), "exists": v.exists })
        }
        Criterion::Both => {
            let r = selfdual::consistency_report(&f, &shape)?;
            let paper = match &r.paper {
                Ok(v) => paper_json(v),
                Err(why) => json!({ "exists": Value::Null, "ord_value": Value::Null, "not_applicable": why }),
            };
            let (outcome, exists) = match r.outcome {
                Agreement::Agree(b) => ("AGREE", Value::Bool(b)),
                Agreement::Disagree => ("DISAGREE", Value::Null),
            };
            let result = json!({
                "criterion": "both",
                "structural": structural_json(&r.structural),
                "paper": paper,
                "oracle": r.oracle,
                "outcome": outcome,
                "exists": exists,
                "conflicts": r.conflicts(),
            });
            let status = if r.outcome == Agreement::Disagree { DISAGREE } else { 0 };
            let mut o = ok(&f, merge(head, result))?;
            o.status = status;
            return Ok(o);
        }
    };
    result = merge(head, result);
    ok(&f, result)
}

fn merge(mut a: Value, b: Value) -> Value {
    if let (Value::Object(x), Value::Object(y)) = (&mut a, b) {
        x.extend(y);
    }
    a
}

fn selfdual_list(args: &FieldArgs, n: u64, listing: &ListArgs) -> Result<Outcome> {
    let f = build_field(args)?;
    let shape = CodeShape::decompose(n, f.p())?;
    let en = selfdual::enumerate_selfdual(&f, &shape, Some(0))?;
    let limit = check_listing(&en.total, listing)?;
    let en = selfdual::enumerate_selfdual(&f, &shape, limit)?;
    let cls = &en.classification;
    let pairs: Vec<Value> = cls
        .pairs
        .iter()
        .map(|(h, hs)| json!({ "h": poly_json(h), "h_star": poly_json(hs) }))
        .collect();
    let selfrec: Vec<Value> = cls.selfrec.iter().map(poly_json).collect();
    let codes: Vec<Value> = en
        .stream
        .map(|(b, c)| json!({ "exponents": b, "generator": poly_json(c.generator()), "dim": c.dim() }))
        .collect();
    ok(
        &f,
        json!({
            "n": n,
            "shape": shape_json(&shape),
            "selfrec": selfrec,
            "pairs": pairs,
            "count": en.total.to_string(),
            "listed": codes.len(),
            "codes": codes,
        }),
    )
}

struct Checks(Vec<Value>);

impl Checks {
    fn record(&mut self, name: &str, passed: Option<bool>, detail: String) {
        let status = match passed {
            Some(true) => "pass",
            Some(false) => "fail",
            None => "skipped",
        };
        self.0.push(json!({ "name": name, "status": status, "detail": detail }));
    }

    fn failed(&self) -> usize {
        self.0.iter().filter(|c| c["status"] == "fail").count()
    }
}

fn verify(args: &VerifyArgs) -> Result<Outcome> {
    let c = parse_code(&args.gen)?;
    let f = c.field().clone();
    let q = f.q();
    let n = c.n();
    let bound = args.bound;
    let small = |k: usize| oracle::checked_size(q, k).is_some_and(|s| s <= bound);
    let mut checks = Checks(Vec::new());

    let d = code::dual(&c);
    checks.record(
        "dual_involution",
        Some(code::dual(&d) == c && c.dim() + d.dim() == n),
        format!("dim {} + dual dim {} = {n}", c.dim(), d.dim()),
    );

    let g = (c.dim() > 0).then(|| code::generator_matrix(&c)).transpose()?;
    let h = (d.dim() > 0).then(|| code::generator_matrix(&d)).transpose()?;
    match (&g, &h) {
        (Some(g), Some(h)) => {
            checks.record("generator_rank", Some(g.rank() == c.dim()), format!("rank {}", g.rank()));
            checks.record(
                "dual_orthogonal",
                Some(g.mul_transpose(h)?.is_zero()),
                "G H^T = 0".into(),
            );
        }
        _ => {
            checks.record("generator_rank", None, "trivial code".into());
            checks.record("dual_orthogonal", None, "trivial code".into());
        }
    }

    let words = if small(c.dim()) {
        Some(oracle::codeword_set(&c, bound)?)
    } else {
        None
    };
    match &words {
        Some(ws) => {
            checks.record(
                "shift_closure",
                Some(oracle::check_shift_closure(ws, c.lam())),
                format!("{} codewords", ws.len()),
            );
            let orth = oracle::nullspace_dual(&oracle::basis_of(ws));
            let same = match &h {
                Some(h) => orth.same_row_space(h),
                None => orth.nrows() == 0,
            };
            checks.record("dual_from_codewords", Some(same), "null space of enumerated words".into());
        }
        None => {
            checks.record("shift_closure", None, format!("{q}^{} codewords exceed the bound", c.dim()));
            checks.record("dual_from_codewords", None, format!("{q}^{} codewords exceed the bound", c.dim()));
        }
    }

    match (&words, small(n) && small(d.dim())) {
        (Some(ws), true) => {
            let bd = oracle::bruteforce_dual(ws, bound)?;
            let dw = oracle::codeword_set(&d, bound)?;
            checks.record("dual_exhaustive", Some(bd == dw), format!("{} dual words", bd.len()));
        }
        _ => checks.record("dual_exhaustive", None, format!("{q}^{n} vectors exceed the bound")),
    }

    let lam_selfinv = f.inv(c.lam())? == c.lam();
    let sd = code::is_self_dual(&c);
    let matrix_sd = match &g {
        Some(g) if lam_selfinv => Some(oracle::check_matrix_selfdual(g)?),
        _ => None,
    };
    match matrix_sd {
        Some(m) => checks.record("self_dual_consistent", Some(m == sd), format!("self-dual: {sd}")),
        None => checks.record("self_dual_consistent", None, format!("self-dual: {sd}")),
    }

    match (code::cyclic_equivalent(&c)?, &words) {
        (Some((map, cyc)), Some(ws)) if small(cyc.dim()) => {
            let cw = oracle::codeword_set(&cyc, bound)?;
            let image: HashSet<Vec<Elem>> = ws.words.iter().map(|w| map.apply(w)).collect();
            checks.record("cyclic_equivalence", Some(image == cw.words), "monomial image equals cyclic code".into());
        }
        (Some(_), _) => checks.record("cyclic_equivalence", None, "codeword sets exceed the bound".into()),
        (None, _) => checks.record("cyclic_equivalence", None, "lambda has no n-th root".into()),
    }

    let distance = match oracle::min_distance(&c, bound) {
        MinDistance::Exact(d) => json!(d),
        MinDistance::Undefined | MinDistance::AboveCap => Value::Null,
    };
    let failed = checks.failed();
    let mut o = ok(
        &f,
        json!({
            "code": code_json(&c),
            "dual": code_json(&d),
            "self_dual": sd,
            "min_distance": distance,
            "checks": checks.0,
            "failed": failed,
        }),
    )?;
    if failed > 0 {
        o.status = 1;
    }
    Ok(o)
}
