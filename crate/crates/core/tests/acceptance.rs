//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits non-zero if any failed.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use gamma_periods::chains::{minimal_chain, pm_order};
use gamma_periods::geometry::{schneider, uses_meromorphic, Verdict};
use gamma_periods::numerics::arb::{format_sci, rel_error};
use gamma_periods::numerics::{
    quad_i, ref_beta, symmetry_ratio, ArbComplex, Numerics, PeriodMethod, Precision, Spouge,
};
use gamma_periods::symbolic::{solve_closed_form, Atom, PeriodExpr};
use gamma_periods::Fraction;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rug::{Float, Rational};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn frac(n: u64, d: u64) -> Fraction {
    Fraction::new(n, d).unwrap()
}

fn r(n: i64, d: i64) -> Rational {
    Rational::from((n, d))
}

fn period(n: u64, d: u64, e: Rational) -> PeriodExpr {
    PeriodExpr::atom(Atom::period(frac(n, d)).unwrap(), e)
}

fn prime(p: u64, e: Rational) -> PeriodExpr {
    PeriodExpr::prime_power(p, e).unwrap()
}

fn product(parts: &[PeriodExpr]) -> PeriodExpr {
    parts.iter().fold(PeriodExpr::one(), |acc, x| acc.mul(x))
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    if elapsed <= limit {
        Ok(())
    } else {
        Err(format!("took {elapsed:?}, limit {limit:?}"))
    }
}

fn table_symbolic() -> Outcome {
    let start = Instant::now();
    let half = r(1, 2);
    let one = r(1, 1);
    // nested radicals: G(1/4) = sqrt(2 I_4 sqrt(2 I_2)),
    // G(1/8) = sqrt(4 I_8 sqrt(4 I_4 sqrt(4 I_2)))
    let g4 = product(&[
        prime(2, one.clone()),
        period(4, 1, one.clone()),
        product(&[prime(2, one.clone()), period(2, 1, one.clone())]).pow(&half),
    ])
    .pow(&half);
    let inner8 = product(&[prime(2, r(2, 1)), period(2, 1, one.clone())]).pow(&half);
    let mid8 = product(&[prime(2, r(2, 1)), period(4, 1, one.clone()), inner8]).pow(&half);
    let g8 = product(&[prime(2, r(2, 1)), period(8, 1, one.clone()), mid8]).pow(&half);

    let sin5 = PeriodExpr::atom(Atom::sin_pi(frac(1, 5)).unwrap(), r(-1, 1));
    let expected: Vec<(u64, u32, PeriodExpr)> = vec![
        (2, 2, period(2, 1, one.clone())),
        (
            3,
            3,
            product(&[
                prime(2, r(1, 3)),
                prime(3, r(1, 2)),
                period(2, 1, one.clone()),
                period(3, 1, one.clone()),
            ]),
        ),
        (4, 2, g4.pow(&r(2, 1))),
        (
            5,
            5,
            product(&[
                prime(5, r(3, 1)),
                prime(2, r(-13, 5)),
                period(2, 1, one.clone()),
                period(5, 1, r(2, 1)),
                period(5, 2, one.clone()),
                sin5,
            ]),
        ),
        (
            7,
            7,
            product(&[
                prime(7, r(6, 1)),
                prime(2, r(-52, 7)),
                period(7, 1, r(4, 1)),
                period(7, 2, r(2, 1)),
                period(7, 4, one.clone()),
            ]),
        ),
        (8, 2, g8.pow(&r(2, 1))),
    ];
    for (q, e, want) in &expected {
        let cf = solve_closed_form(1, *q).map_err(|e| e.to_string())?;
        if cf.exponent != *e {
            return Err(format!("q = {q}: E = {} expected {e}", cf.exponent));
        }
        if cf.expr != *want {
            return Err(format!("q = {q}: closed form differs"));
        }
    }
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!(
        "q in {{2,3,4,5,7,8}} exact in {:?}",
        start.elapsed()
    ))
}

fn numeric_verification() -> Outcome {
    let start = Instant::now();
    let prec = Precision::new(50).unwrap();
    let numerics = Numerics::new(prec);
    let mut worst = Float::new(prec.bits());
    let mut count = 0;
    for q in 2u64..=20 {
        for p in 1..q {
            let x = frac(p, q);
            if x.den() != q {
                continue;
            }
            let cf = solve_closed_form(p, q).map_err(|e| e.to_string())?;
            let v = numerics
                .verify(&cf, PeriodMethod::Beta, 25)
                .map_err(|e| e.to_string())?;
            if !v.passed {
                return Err(format!("{x}: rel error {}", format_sci(&v.rel_error)));
            }
            if v.rel_error > worst {
                worst = v.rel_error;
            }
            count += 1;
        }
    }
    within(start.elapsed(), Duration::from_secs(60))?;
    Ok(format!(
        "{count} fractions, worst rel error {}, {:?}",
        format_sci(&worst),
        start.elapsed()
    ))
}

fn pow2_mod(m: u32, q: u64) -> u128 {
    (0..m).fold(1u128, |acc, _| acc * 2 % q as u128)
}

fn chain_theorem() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for q in (3u64..=199).step_by(2) {
        let (m, sign) = pm_order(2, q).map_err(|e| e.to_string())?;
        for p in 1..q {
            let x = frac(p, q);
            if x.den() != q {
                continue;
            }
            let chain = minimal_chain(p, q).map_err(|e| e.to_string())?;
            if chain.doublings != m || chain.closure.sign() != Some(sign) {
                return Err(format!(
                    "{x}: m = {} sign {:?}, expected {m} {sign}",
                    chain.doublings,
                    chain.closure.sign()
                ));
            }
            let image = (p as u128 * pow2_mod(m, q)) % q as u128;
            let plus = image == p as u128;
            let minus = image == (q - p) as u128;
            if plus == minus || plus != (sign == 1) {
                return Err(format!("{x}: 2^m p = {image} mod {q}, sign not unique"));
            }
            count += 1;
        }
    }
    within(start.elapsed(), Duration::from_secs(10))?;
    Ok(format!("{count} chains, {:?}", start.elapsed()))
}

fn quadrature_oracle() -> Outcome {
    let prec = Precision::new(50).unwrap();
    let bits = prec.bits();
    let tol = prec.ten_pow_neg(40);
    let half = Float::with_val(bits, 0.5f64);
    let mut worst = Float::new(bits);
    for (n, d) in [
        (1u64, 1u64),
        (3, 2),
        (7, 4),
        (2, 1),
        (5, 2),
        (3, 1),
        (7, 2),
        (4, 1),
        (5, 1),
        (7, 1),
        (8, 1),
    ] {
        let s = frac(n, d);
        let q = quad_i(s, prec).map_err(|e| e.to_string())?.value;
        let a = Float::with_val(bits, &s.recip().unwrap().to_rational());
        let beta = ref_beta(&a, &half, prec).map_err(|e| e.to_string())? * &a * 2u32;
        let diff = Float::with_val(bits, &q - &beta).abs();
        if diff >= tol {
            return Err(format!("I_{s}: |diff| = {}", format_sci(&diff)));
        }
        if diff > worst {
            worst = diff;
        }
    }
    let i2 = quad_i(Fraction::integer(2), prec)
        .map_err(|e| e.to_string())?
        .value;
    let pi_diff = Float::with_val(bits, &i2 - prec.pi()).abs();
    if pi_diff >= tol {
        return Err(format!("I_2 - pi = {}", format_sci(&pi_diff)));
    }
    Ok(format!(
        "worst |quad - beta| {}, |I_2 - pi| {}",
        format_sci(&worst),
        format_sci(&pi_diff)
    ))
}

fn meromorphic_column() -> Outcome {
    for (q, want) in [
        (2u64, false),
        (3, false),
        (4, false),
        (5, false),
        (6, false),
        (7, true),
        (8, false),
    ] {
        let cf = solve_closed_form(1, q).map_err(|e| e.to_string())?;
        let got = uses_meromorphic(&cf);
        if got != want {
            return Err(format!("q = {q}: {got}, expected {want}"));
        }
    }
    Ok("No for q in {2,3,4,5,6,8}, Yes for q = 7".into())
}

fn schneider_verdicts() -> Outcome {
    let mut seen = 0;
    for q in 2u64..=8 {
        let cf = solve_closed_form(1, q).map_err(|e| e.to_string())?;
        for s in cf.expr.period_indices() {
            let v = schneider(s).map_err(|e| e.to_string())?.verdict;
            let want = if s == Fraction::integer(2) {
                Verdict::CriterionNotApplicable
            } else {
                Verdict::ProvenTranscendental
            };
            if v != want {
                return Err(format!("q = {q}, I_{s}: {v}"));
            }
            seen += 1;
        }
    }
    Ok(format!("{seen} period factors checked"))
}

fn branch_symmetry() -> Outcome {
    let prec = Precision::new(50).unwrap();
    let bits = prec.bits();
    let mut phases = Vec::new();
    for n in 2u64..=8 {
        let rep = symmetry_ratio(n, prec).map_err(|e| e.to_string())?;
        let dev = Float::with_val(bits, &rep.modulus - 1u32).abs();
        if dev >= 1e-8 {
            return Err(format!("n = {n}: ||ratio| - 1| = {}", format_sci(&dev)));
        }
        if n == 2 {
            let minus_one = ArbComplex::from_real(Float::with_val(bits, -1i32));
            let d = rep.ratio.sub(&minus_one).abs();
            if d >= 1e-8 {
                return Err(format!("n = 2: |ratio + 1| = {}", format_sci(&d)));
            }
        }
        let over_pi = Float::with_val(bits, &rep.phase / prec.pi()).to_f64();
        phases.push(format!("{n}:{over_pi:.3}pi"));
    }
    Ok(format!("phases {}", phases.join(" ")))
}

fn identity_suite() -> Outcome {
    let prec = Precision::new(50).unwrap();
    let bits = prec.bits();
    let spouge = Spouge::for_precision(prec);
    let pi = prec.pi();
    let mut rng = StdRng::seed_from_u64(0x5eed_1e55);
    let mut samples = vec![Fraction::HALF];
    while samples.len() < 100 {
        let q = rng.gen_range(2u64..=1000);
        let p = rng.gen_range(1..2 * q);
        if p != q {
            samples.push(frac(p, q));
        }
    }
    let mut worst = Float::new(bits);
    for x in samples {
        let g = |y: &Float| spouge.gamma(y).map_err(|e| e.to_string());
        let xf = Float::with_val(bits, &x.to_rational());
        let gx = g(&xf)?;
        let gx1 = g(&Float::with_val(bits, &xf + 1u32))?;
        let rec = rel_error(&gx1, &Float::with_val(bits, &xf * &gx));
        let frac_part = if x > Fraction::ONE {
            x.minus_one().unwrap()
        } else {
            x
        };
        let t = Float::with_val(bits, &frac_part.to_rational());
        let refl =
            g(&t)? * g(&Float::with_val(bits, 1u32 - &t))? * Float::with_val(bits, &pi * &t).sin();
        let refl_err = rel_error(&refl, &pi);
        for e in [rec, refl_err] {
            if e >= 1e-45 {
                return Err(format!("{x}: rel error {}", format_sci(&e)));
            }
            if e > worst {
                worst = e;
            }
        }
    }
    Ok(format!(
        "100 samples, worst rel error {}",
        format_sci(&worst)
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 table closed forms", table_symbolic),
        ("2 numeric verification q <= 20", numeric_verification),
        ("3 chain theorem odd q <= 199", chain_theorem),
        ("4 quadrature vs beta", quadrature_oracle),
        ("5 meromorphic column", meromorphic_column),
        ("6 schneider verdicts", schneider_verdicts),
        ("7 branch symmetry modulus", branch_symmetry),
        ("8 recurrence and reflection", identity_suite),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why}");
            }
        }
    }
    println!("{} of 8 criteria passed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
