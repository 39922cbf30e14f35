//! One PASS/FAIL line per acceptance criterion. Exits non-zero when a
//! criterion fails for any reason other than the recorded misprints.

use std::time::{Duration, Instant};

use epoly_core::blocks::Blocks;
use epoly_core::expected::{self, MISPRINTS};
use epoly_core::fforacle::{self, Sl2};
use epoly_core::fibcalc::{bprime_quotient, bprime_table, contract_raw, BPrimeChar, TripleRule};
use epoly_core::report::{paper_regression, RegressionStatus};
use epoly_core::{genus2, twisted, untwisted};
use epoly_core::{poly, EvalTable, HMRep, IntPoly, MonodromyGroup};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

struct Outcome {
    pass: bool,
    detail: String,
    /// A failure that is recorded and pinned rather than a regression.
    recorded: bool,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome {
        pass: true,
        detail: detail.into(),
        recorded: false,
    }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome {
        pass: false,
        detail: detail.into(),
        recorded: false,
    }
}

fn check(ok: bool, detail: impl Into<String>) -> Outcome {
    if ok {
        pass(detail)
    } else {
        fail(detail)
    }
}

fn within(t: Duration, limit: Duration) -> String {
    format!("{:.3}s, limit {}s", t.as_secs_f64(), limit.as_secs())
}

fn criterion_1() -> Outcome {
    let t = Instant::now();
    let (res_m, res_m1) = (
        untwisted::character_variety_total(),
        twisted::twisted_total(),
    );
    let el = t.elapsed();
    let (Ok((_, _, m)), Ok((_, m1))) = (res_m, res_m1) else {
        return fail("pipeline error");
    };
    let em = poly("q^12 - 4q^10 + 74q^8 + 375q^6 + 16q^4 + q^2 + 1");
    let em1 = poly("q^12 - 4q^10 + 6q^8 - 252q^7 - 14q^6 - 252q^5 + 6q^4 - 4q^2 + 1");
    let limit = Duration::from_secs(1);
    check(
        m == em && m1 == em1 && el < limit,
        format!("e(M) = {m}; e(M1) = {m1}; {}", within(el, limit)),
    )
}

fn criterion_2() -> Outcome {
    let t = Instant::now();
    let rows = match paper_regression() {
        Ok(r) => r,
        Err(e) => return fail(format!("pipeline error: {e}")),
    };
    let el = t.elapsed();
    let limit = Duration::from_secs(5);
    let exact = rows
        .iter()
        .filter(|r| r.status == RegressionStatus::Match)
        .count();
    let misprinted: Vec<&str> = rows
        .iter()
        .filter(|r| matches!(r.status, RegressionStatus::Misprint(_)))
        .map(|r| r.name.as_str())
        .collect();
    let other: Vec<String> = rows
        .iter()
        .filter(|r| {
            matches!(
                r.status,
                RegressionStatus::Mismatch { .. } | RegressionStatus::NotComputed
            )
        })
        .map(|r| r.to_string())
        .collect();
    let detail = format!(
        "{exact}/{} published values reproduced exactly; differing: {:?}; {}",
        rows.len(),
        misprinted,
        within(el, limit)
    );
    if other.is_empty() && misprinted.is_empty() && el < limit {
        return pass(detail);
    }
    let recorded: Vec<&str> = MISPRINTS.iter().map(|(n, _)| *n).collect();
    Outcome {
        pass: false,
        recorded: other.is_empty() && misprinted == recorded && el < limit,
        detail: if other.is_empty() {
            format!(
                "{detail}; each differs from its printed display by exactly the recorded amount"
            )
        } else {
            format!("{detail}; unexpected: {other:?}")
        },
    }
}

fn criterion_3() -> Outcome {
    let Ok(b) = Blocks::load() else {
        return fail("blocks");
    };
    let Ok(raw) = twisted::zbar_prime_raw(&b) else {
        return fail("expansion");
    };
    let published_zbar_prime = expected::expected("twisted.e_Zbar_prime").expect("published");
    let mut parts = Vec::new();
    let mut ok = raw.num_terms() == 64;
    for rule in TripleRule::ALL {
        let Ok(e) = contract_raw(&raw, rule) else {
            return fail("contraction");
        };
        let at2 = e.eval(2);
        parts.push(format!("{rule:?} -> {at2} at q=2"));
        let want_identity = rule == TripleRule::SMinus2Parity;
        ok &= (e == published_zbar_prime) == want_identity;
        ok &= match rule {
            TripleRule::SMinus2Parity => at2 == 2472.into(),
            TripleRule::S2Parity => at2 == 8304.into(),
            TripleRule::LambdaSlot => at2 == 5712.into(),
        };
    }
    // the quotient route agrees with the raw contraction
    let quotient = raw
        .collapse(&bprime_quotient())
        .and_then(|r| r.e_map(&bprime_table()));
    ok &= quotient.as_ref() == Ok(&published_zbar_prime);
    check(
        ok,
        format!(
            "{} raw terms; {}; quotient contraction equals the published e(Zbar')",
            raw.num_terms(),
            parts.join(", ")
        ),
    )
}

fn criterion_4() -> Outcome {
    let run = || -> epoly_core::Result<(HMRep, Vec<IntPoly>)> {
        let b = Blocks::load()?;
        let (e_w, _) = twisted::twisted_total()?;
        let r_ybar4 = genus2::compute_r_ybar4()?;
        let e_y4 = genus2::compute_e_y4()?;
        let e_w4 = genus2::genus2x1_strata(&e_w)?;
        let sys = genus2::linear_system(&b, &e_w4, &e_y4, &r_ybar4)?;
        let sol = genus2::solve_system(&sys)?;
        let x: Vec<IntPoly> = ["T", "S2", "S-2", "S0"]
            .iter()
            .map(|n| sol.coeff_named(n))
            .collect();
        let residuals = sys
            .rows
            .iter()
            .zip(&sys.rhs)
            .map(|(row, r)| {
                row.iter()
                    .zip(&x)
                    .fold(-r.clone(), |acc, (c, v)| acc + c * v)
            })
            .collect();
        Ok((sol, residuals))
    };
    match run() {
        Err(e) => fail(format!("{e}")),
        Ok((sol, res)) => {
            let want = [
                poly("q^9 - 3q^7 + 6q^5"),
                poly("-45q^5 - 15q^3"),
                poly("15q^6 + 45q^4"),
                poly("-6q^4 + 3q^2 - 1"),
            ];
            let got = ["T", "S2", "S-2", "S0"].map(|n| sol.coeff_named(n));
            check(
                got == want && res.iter().all(IntPoly::is_zero),
                format!(
                    "R(Ybar4/Z2) = {sol}; residuals {:?}",
                    res.iter().map(|r| r.to_string()).collect::<Vec<_>>()
                ),
            )
        }
    }
}

fn counts(q: u64, center_minus: bool) -> epoly_core::Result<[u128; 3]> {
    let g = Sl2::new(q)?;
    let c = if center_minus {
        g.minus_identity()
    } else {
        g.identity()
    };
    let n1 = fforacle::commutator_distribution(&g);
    let n2 = fforacle::genus_convolve(&g, &n1, 2)?;
    let n3 = fforacle::genus_convolve(&g, &n1, 3)?;
    Ok([n1.at(c), n2.at(c), n3.at(c)])
}

fn compare(q: u64, polys: &[IntPoly; 3], got: [u128; 3]) -> (bool, String) {
    let evals = polys.iter().map(|p| p.eval(q as i64)).collect::<Vec<_>>();
    let ok = evals.iter().zip(got).all(|(e, c)| *e == c.into());
    (ok, format!("q={q}: {got:?}"))
}

fn criterion_5() -> Outcome {
    let Ok(b) = Blocks::load() else {
        return fail("blocks");
    };
    let Ok(u) = untwisted::UntwistedPipeline::compute() else {
        return fail("pipeline");
    };
    let polys = [b.x0.clone(), b.y0.clone(), u.e_v.clone()];
    let mut ok = true;
    let mut parts = Vec::new();
    let mut slowest = Duration::ZERO;
    for q in [3, 5, 7] {
        let t = Instant::now();
        let Ok(c) = counts(q, false) else {
            return fail(format!("q={q}"));
        };
        let el = t.elapsed();
        slowest = slowest.max(el);
        let (m, s) = compare(q, &polys, c);
        ok &= m;
        if q == 3 {
            ok &= c[0] == 168;
        }
        if q == 5 {
            ok &= c[2] == 28_861_413_120;
        }
        if q == 7 {
            ok &= el < Duration::from_secs(60);
        }
        parts.push(s);
    }
    check(
        ok,
        format!(
            "X0, Y0, V counts equal e(X0), e(Y0), e(V): {}; slowest {:.3}s, limit 60s",
            parts.join("; "),
            slowest.as_secs_f64()
        ),
    )
}

fn criterion_6() -> Outcome {
    let Ok(b) = Blocks::load() else {
        return fail("blocks");
    };
    let Ok(t) = twisted::TwistedPipeline::compute() else {
        return fail("pipeline");
    };
    let polys = [b.x1.clone(), b.y1.clone(), t.e_w.clone()];
    let mut ok = true;
    let mut parts = Vec::new();
    for q in [5, 13] {
        let start = Instant::now();
        let Ok(c) = counts(q, true) else {
            return fail(format!("q={q}"));
        };
        let el = start.elapsed();
        let (m, s) = compare(q, &polys, c);
        ok &= m && el < Duration::from_secs(300);
        if q == 5 {
            ok &= c[1] == 1_269_120;
        }
        parts.push(format!("{s} in {:.3}s", el.as_secs_f64()));
    }
    // the excluded class, shown for the record
    let Ok(c3) = counts(3, true) else {
        return fail("q=3");
    };
    let e3 = b.y1.eval(3);
    parts.push(format!(
        "excluded q=3 (3 mod 4): Y1 count {} vs e(Y1)(3) = {e3}",
        c3[1]
    ));
    ok &= c3[1] == 32640 && e3 == (-6240).into();
    check(
        ok,
        format!(
            "X1, Y1, W counts equal e(X1), e(Y1), e(W): {}",
            parts.join("; ")
        ),
    )
}

fn small_poly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-50i64..50, 0..6).prop_map(|c| IntPoly::from_coeffs(&c))
}

fn torus_rep() -> impl Strategy<Value = HMRep> {
    prop::collection::vec(small_poly(), 4).prop_map(|ps| {
        let g = MonodromyGroup::torus();
        let chars: Vec<_> = g.characters().collect();
        HMRep::from_terms(g, chars.into_iter().zip(ps))
    })
}

fn run<S: Strategy>(s: S, f: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Result<(), String> {
    let mut runner = TestRunner::new(Config {
        cases: 128,
        failure_persistence: None,
        ..Config::default()
    });
    runner.run(&s, f).map_err(|e| e.to_string())
}

fn criterion_7() -> Outcome {
    let mut failures = Vec::new();
    let mut note = |name: &str, r: Result<(), String>| {
        if let Err(e) = r {
            failures.push(format!("{name}: {e}"));
        }
    };

    note(
        "ring axioms",
        run((small_poly(), small_poly(), small_poly()), |(a, b, c)| {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &a * &b + &a * &c);
            prop_assert_eq!(&a + &IntPoly::zero(), a.clone());
            prop_assert_eq!(&a * &IntPoly::one(), a.clone());
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
            Ok(())
        }),
    );

    note(
        "tensor",
        run((torus_rep(), torus_rep(), torus_rep()), |(a, b, c)| {
            let unit = HMRep::trivial(MonodromyGroup::torus(), IntPoly::one());
            prop_assert_eq!(a.tensor(&unit).unwrap(), a.clone());
            prop_assert_eq!(a.tensor(&b).unwrap(), b.tensor(&a).unwrap());
            prop_assert_eq!(
                a.tensor(&b).unwrap().tensor(&c).unwrap(),
                a.tensor(&b.tensor(&c).unwrap()).unwrap()
            );
            Ok(())
        }),
    );

    note(
        "e-map linearity",
        run((torus_rep(), torus_rep(), small_poly()), |(a, b, k)| {
            let t = EvalTable::torus(MonodromyGroup::torus());
            let lhs = a.add(&b.scale(&k)).unwrap().e_map(&t).unwrap();
            prop_assert_eq!(lhs, a.e_map(&t).unwrap() + &k * b.e_map(&t).unwrap());
            Ok(())
        }),
    );

    let quotient = bprime_quotient();
    let classes: std::collections::HashSet<_> =
        BPrimeChar::all_raw().map(|c| c.normalize()).collect();
    let closed = BPrimeChar::all_raw().all(|x| {
        BPrimeChar::all_raw()
            .step_by(7)
            .all(|y| classes.contains(&x.product(y).normalize()))
    });
    let idempotent = BPrimeChar::all_raw().all(|c| c.normalize().normalize() == c.normalize());
    let consistent = BPrimeChar::all_raw()
        .all(|c| quotient.apply(c.raw_character()) == c.normalize().class_character());
    if classes.len() != 16 || !closed || !idempotent || !consistent {
        failures.push(format!(
            "B' group: {} classes, closed {closed}, idempotent {idempotent}, consistent {consistent}",
            classes.len()
        ));
    }

    match (
        twisted::twisted_total(),
        untwisted::UntwistedPipeline::compute(),
        genus2::compute_r_ybar4(),
    ) {
        (Ok((e_w, m1)), Ok(u), Ok(r)) => {
            if !(m1.is_palindromic(12) && m1.is_monic() && m1.degree() == Some(12)) {
                failures.push("e(M1) shape".into());
            }
            let pgl = IntPoly::q_cubed_minus_q();
            if e_w.div_exact(&pgl).is_err() || u.e_v_irr.div_exact(&pgl).is_err() {
                failures.push("divisibility by q^3 - q".into());
            }
            if r.terms()
                .any(|(_, p)| p.div_exact(&IntPoly::q_minus_one()).is_err())
                || r.num_terms() != 2
            {
                failures.push("divisibility of R(Ybar4) by q - 1".into());
            }
        }
        _ => failures.push("pipeline error".into()),
    }
    check(
        failures.is_empty(),
        if failures.is_empty() {
            "ring axioms, tensor unit/commutativity/associativity, e-map linearity (128 cases each); B' order 16, closed, normalization idempotent; e(M1) palindromic monic degree 12; exact divisibility of e(W), e(V) - e(V_red), R(Ybar4)".to_string()
        } else {
            failures.join("; ")
        },
    )
}

type Criterion = (u32, &'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 7] = [
        (1, "headline polynomials, exact, < 1 s", criterion_1),
        (2, "every published intermediate, exact, < 5 s", criterion_2),
        (3, "triple-character table derivation", criterion_3),
        (4, "linear system for R(Ybar4/Z2)", criterion_4),
        (5, "untwisted point counts, q = 3, 5, 7", criterion_5),
        (6, "twisted point counts, q = 5, 13", criterion_6),
        (7, "property suites", criterion_7),
    ];
    let mut unexpected = 0;
    for (n, title, f) in criteria {
        let o = f();
        let tag = if o.pass { "PASS" } else { "FAIL" };
        let note = if !o.pass && o.recorded {
            " (recorded)"
        } else {
            ""
        };
        println!("{tag} criterion {n}{note}: {title} -- {}", o.detail);
        if !o.pass && !o.recorded {
            unexpected += 1;
        }
    }
    if unexpected > 0 {
        std::process::exit(1);
    }
}
