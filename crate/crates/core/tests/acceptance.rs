//! Acceptance suite. Prints one `[PASS]` / `[FAIL]` line per criterion and
//! exits nonzero if any criterion fails.

use hexcactus::asymptotics::{
    asymptotic_report, dominant_pole, exact_dominant_pole, pole_approx, printed_sigma1_squared,
    PRECISION,
};
use hexcactus::random_model::monte_carlo;
use hexcactus::verify::{probability_grid, reference_triples};
use hexcactus::{
    build_aux, build_chain, count_brute, count_chain, count_recursive, expect_by_enumeration,
    expect_states, gf_closed_form, special_case_gf, AttachmentSequence, AttachmentType, AuxVariant,
    ExactRational, IndexKind, ProbabilityTriple,
};
use rug::{Float, Rational};

use AttachmentType::*;
use IndexKind::*;

const SERIES_TERMS: usize = 51;
const POLE_TOLERANCE: f64 = 1e-6;
const POLE_N: u32 = 60;
const MC_N: usize = 10;
const MC_TRIALS: u64 = 100_000;
const MC_SEED: u64 = 0x5eed_2024;
const MC_SIGMAS: u32 = 4;

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion_1() -> Outcome {
    let empty = AttachmentSequence::new(0, vec![]).unwrap();
    let one = AttachmentSequence::new(1, vec![]).unwrap();
    let hexagon = build_chain(&one);
    let path = build_aux(&empty, Para, AuxVariant::Prime);
    ensure(hexagon.vertex_count() == 6 && hexagon.edge_count() == 6, || "R_1 is not C6".into())?;
    ensure(path.vertex_count() == 5 && path.edge_count() == 4, || "aux R_0 is not P5".into())?;
    for (kind, aux) in [(Hosoya, 8i64), (MerrifieldSimmons, 13)] {
        let s = expect_states(1, &ProbabilityTriple::uniform(), kind);
        ensure(s[0].base == 1 && s[1].base == 18, || format!("{kind}: base values {} {}", s[0].base, s[1].base))?;
        for v in [&s[0].prime, &s[0].tilde, &s[0].hat] {
            ensure(*v == aux, || format!("{kind}: auxiliary initial {v} != {aux}"))?;
        }
        let c6 = count_brute(&hexagon, kind).map_err(|e| e.to_string())?;
        ensure(c6 == 18, || format!("{kind}: brute C6 = {c6}"))?;
        for variant in AuxVariant::ALL {
            let g = build_aux(&empty, Para, variant);
            let b = count_brute(&g, kind).map_err(|e| e.to_string())?;
            ensure(b == aux as u64, || format!("{kind}: brute P5 = {b}"))?;
        }
        let r0 = count_brute(&build_chain(&empty), kind).map_err(|e| e.to_string())?;
        ensure(r0 == 1, || format!("{kind}: empty graph count {r0}"))?;
    }
    Ok("E(m0)=E(i0)=1, E(m1)=E(i1)=18, auxiliaries 8/13, matching brute force on C6 and P5".into())
}

/// Leading coefficients of the published pure-chain series, pinned.
fn published_prefix(case: AttachmentType, kind: IndexKind) -> &'static [i64] {
    match (kind, case) {
        (Hosoya, Ortho) => &[1, 18, 224, 2932, 38076],
        (Hosoya, Meta) => &[1, 18, 224, 2732],
        (Hosoya, Para) => &[1, 18, 224, 2832],
        (MerrifieldSimmons, Ortho) => &[2, 18, 194, 2002],
        (MerrifieldSimmons, Meta) => &[2, 18, 194, 2130],
        (MerrifieldSimmons, Para) => &[2, 18, 194, 2066],
    }
}

fn compare_published(kind: IndexKind) -> std::result::Result<Vec<(AttachmentType, ExactRational, ExactRational)>, String> {
    let mut zeroth = Vec::new();
    for case in AttachmentType::ALL {
        let ours = gf_closed_form(&ProbabilityTriple::pure(case), kind).series(SERIES_TERMS);
        let theirs = special_case_gf(case, kind).series(SERIES_TERMS);
        for (n, want) in published_prefix(case, kind).iter().enumerate() {
            ensure(theirs[n] == *want, || format!("{kind} {case}: published c_{n} = {} != {want}", theirs[n]))?;
        }
        for n in 1..SERIES_TERMS {
            ensure(ours[n] == theirs[n], || format!("{kind} {case}: n={n} {} vs {}", ours[n], theirs[n]))?;
        }
        zeroth.push((case, ours[0].clone(), theirs[0].clone()));
    }
    Ok(zeroth)
}

fn criterion_2() -> Outcome {
    for (case, ours, theirs) in compare_published(Hosoya)? {
        ensure(ours == theirs, || format!("{case}: n=0 {ours} vs {theirs}"))?;
    }
    Ok(format!("O, M, P series equal for n = 0..{}", SERIES_TERMS - 1))
}

fn criterion_3() -> Outcome {
    let zeroth = compare_published(MerrifieldSimmons)?;
    for (case, ours, theirs) in &zeroth {
        ensure(*ours == 1 && *theirs == 2, || format!("{case}: n=0 expected 1 vs 2, got {ours} vs {theirs}"))?;
    }
    Ok(format!(
        "independent-set series equal for n = 1..{}; n = 0 differs: computed 1, published 2",
        SERIES_TERMS - 1
    ))
}

fn criterion_4() -> Outcome {
    let mut cases = 0;
    for kind in IndexKind::ALL {
        for p in reference_triples() {
            let states = expect_states(6, &p, kind);
            for (n, s) in states.iter().enumerate() {
                let e = expect_by_enumeration(n, &p, kind).map_err(|e| e.to_string())?;
                ensure(e == s.base, || format!("{kind} p=({p}) n={n}: {} vs {e}", s.base))?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} exact agreements for n <= 6"))
}

fn criterion_5() -> Outcome {
    let mut cases = 0;
    for kind in IndexKind::ALL {
        for n in 0..=4 {
            for seq in AttachmentSequence::all(n) {
                let g = build_chain(&seq);
                let chain = count_chain(&seq, kind);
                let brute = count_brute(&g, kind).map_err(|e| e.to_string())?;
                let rec = count_recursive(&g, kind);
                ensure(brute == chain && rec == chain, || format!("{kind} {seq}: {chain} {brute} {rec}"))?;
                cases += 1;
            }
        }
        for n in 0..=2 {
            for seq in AttachmentSequence::all(n) {
                for pendant in AttachmentType::ALL {
                    for variant in AuxVariant::ALL {
                        let g = build_aux(&seq, pendant, variant);
                        let brute = count_brute(&g, kind).map_err(|e| e.to_string())?;
                        let rec = count_recursive(&g, kind);
                        ensure(brute == rec, || format!("{kind} aux n={n} {pendant} {}: {brute} {rec}", variant.name()))?;
                        cases += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{cases} graphs, three engines agree"))
}

fn criterion_6() -> Outcome {
    let grid = probability_grid();
    ensure(grid.len() >= 10, || format!("grid has {} points", grid.len()))?;
    for kind in IndexKind::ALL {
        for p in &grid {
            let gf = gf_closed_form(p, kind);
            let den = gf.denominator();
            let s = -den[1].as_rational().clone();
            let t = den.get(2).map(|d| -d.as_rational().clone()).unwrap_or_default();
            let want = ExactRational::from(Rational::from(s.square_ref()) + t * 4u32);
            let got = printed_sigma1_squared(p, kind);
            ensure(got == want, || format!("{kind} p=({p}): {got} vs {want}"))?;
        }
    }
    Ok(format!("{} grid points, both indices, exact", grid.len()))
}

fn criterion_7() -> Outcome {
    let mut worst = 0f64;
    for kind in IndexKind::ALL {
        for p in probability_grid() {
            let exact = expect_states(POLE_N as usize, &p, kind).pop().unwrap().base;
            let pd = dominant_pole(&gf_closed_form(&p, kind)).map_err(|e| format!("{kind} p=({p}): {e}"))?;
            let approx = pole_approx(&pd, POLE_N);
            let err = (Float::with_val(PRECISION, &approx / &Float::with_val(PRECISION, exact.as_rational())) - 1u32)
                .abs()
                .to_f64();
            ensure(err <= POLE_TOLERANCE, || format!("{kind} p=({p}): relative error {err:e}"))?;
            worst = worst.max(err);
        }
    }
    let exact = exact_dominant_pole(&gf_closed_form(&ProbabilityTriple::pure(Ortho), Hosoya))
        .ok_or("ortho matchings pole is not rational")?;
    ensure(exact.growth_rate == 13, || format!("lambda = {}", exact.growth_rate))?;
    ensure(exact.amplitude == ExactRational::from_ratio(4, 3), || format!("A = {}", exact.amplitude))?;
    Ok(format!(
        "max relative error {worst:.3e} <= {POLE_TOLERANCE:e} at n = {POLE_N}; ortho matchings lambda = 13, A = 4/3"
    ))
}

fn criterion_8() -> Outcome {
    let mut parts = Vec::new();
    let p = ProbabilityTriple::uniform();
    for kind in IndexKind::ALL {
        let est = monte_carlo(MC_N, &p, MC_TRIALS, MC_SEED, kind).map_err(|e| e.to_string())?;
        let exact = expect_states(MC_N, &p, kind).pop().unwrap().base;
        let diff = (Float::with_val(PRECISION, &est.mean) - exact.as_rational()).abs();
        let bound = Float::with_val(PRECISION, &est.std_err * MC_SIGMAS);
        let z = Float::with_val(PRECISION, &diff / &est.std_err).to_f64();
        ensure(diff <= bound, || format!("{kind}: |mean - exact| = {:.6e}, {z:.2} standard errors", diff.to_f64()))?;
        parts.push(format!("{kind} {z:.2} se"));
    }
    for kind in IndexKind::ALL {
        for case in AttachmentType::ALL {
            let est = monte_carlo(MC_N, &ProbabilityTriple::pure(case), 200, MC_SEED, kind).map_err(|e| e.to_string())?;
            let pure = count_chain(&AttachmentSequence::uniform(MC_N, case), kind);
            ensure(est.std_dev == 0, || format!("{kind} {case}: std_dev {}", est.std_dev))?;
            ensure(est.exact_mean == ExactRational::from(Rational::from(pure.as_integer())), || {
                format!("{kind} {case}: mean {} vs {pure}", est.exact_mean)
            })?;
        }
    }
    Ok(format!(
        "n = {MC_N}, {MC_TRIALS} trials, seed {MC_SEED:#x}: {}; degenerate triples have zero variance",
        parts.join(", ")
    ))
}

fn criterion_9() -> Outcome {
    let mut runs = 0;
    for kind in IndexKind::ALL {
        for p in probability_grid() {
            for n in [2usize, 10, 60] {
                let r = asymptotic_report(n, &p, kind).map_err(|e| format!("{kind} p=({p}) n={n}: {e}"))?;
                ensure(r.rel_err_printed.is_finite(), || {
                    format!("{kind} p=({p}) n={n}: printed relative error {}", r.rel_err_printed)
                })?;
                runs += 1;
            }
        }
    }
    Ok(format!("{runs} reports with finite printed-formula relative errors"))
}

fn main() {
    let criteria: [Criterion; 9] = [
        (1, "base values and auxiliary initials", criterion_1),
        (2, "pure-chain matching series", criterion_2),
        (3, "pure-chain independent-set series", criterion_3),
        (4, "enumeration oracle", criterion_4),
        (5, "engine equivalence", criterion_5),
        (6, "sigma1 identity", criterion_6),
        (7, "asymptotic convergence", criterion_7),
        (8, "Monte Carlo", criterion_8),
        (9, "printed asymptotic comparison", criterion_9),
    ];
    let mut failed = 0;
    for (id, name, run) in criteria {
        match run() {
            Ok(detail) => println!("[PASS] criterion {id}: {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] criterion {id}: {name}: {detail}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 9 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
