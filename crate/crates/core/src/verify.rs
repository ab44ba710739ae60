//! Internal cross-checks run by `hexcactus verify`.

use rug::Rational;
use serde::Serialize;

use crate::asymptotics::{dominant_pole, pole_approx, printed_sigma1_squared, PRECISION};
use crate::count::{count_brute, count_chain, count_recursive, IndexKind};
use crate::expectation::{
    expect_by_enumeration, expect_states, gf_closed_form, special_case_gf, ExactRational,
    ProbabilityTriple,
};
use crate::graph::{build_aux, build_chain, AttachmentSequence, AttachmentType, AuxVariant};

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, failures: Vec<String>, total: usize) -> Self {
        let detail = match failures.first() {
            None => format!("{total} cases agree"),
            Some(first) => format!("{} of {total} cases failed; first: {first}", failures.len()),
        };
        Self {
            name: name.to_string(),
            passed: failures.is_empty(),
            detail,
        }
    }
}

/// Rational probability points in `{0, 1/4, 1/3, 1/2, 1}^3` summing to one.
pub fn probability_grid() -> Vec<ProbabilityTriple> {
    let values = [(0, 1), (1, 4), (1, 3), (1, 2), (1, 1)];
    let mut grid = Vec::new();
    for a in values {
        for b in values {
            for c in values {
                if let Ok(p) = ProbabilityTriple::from_ratios(a, b, c) {
                    grid.push(p);
                }
            }
        }
    }
    grid
}

/// The five triples used for the exact cross-engine checks.
pub fn reference_triples() -> Vec<ProbabilityTriple> {
    vec![
        ProbabilityTriple::pure(AttachmentType::Ortho),
        ProbabilityTriple::pure(AttachmentType::Meta),
        ProbabilityTriple::pure(AttachmentType::Para),
        ProbabilityTriple::uniform(),
        ProbabilityTriple::from_ratios((1, 2), (1, 4), (1, 4)).expect("valid triple"),
    ]
}

fn engine_equivalence() -> Check {
    let mut failures = Vec::new();
    let mut total = 0;
    for kind in IndexKind::ALL {
        for n in 0..=4 {
            for seq in AttachmentSequence::all(n) {
                total += 1;
                let g = build_chain(&seq);
                let chain = count_chain(&seq, kind);
                let brute = count_brute(&g, kind);
                let rec = count_recursive(&g, kind);
                if brute.as_ref() != Ok(&chain) || rec != chain {
                    failures.push(format!("{kind} n={n} seq={seq:?}"));
                }
            }
            if n <= 2 {
                for seq in AttachmentSequence::all(n) {
                    for pendant in AttachmentType::ALL {
                        for variant in AuxVariant::ALL {
                            total += 1;
                            let g = build_aux(&seq, pendant, variant);
                            if count_brute(&g, kind) != Ok(count_recursive(&g, kind)) {
                                failures.push(format!("{kind} aux n={n} {pendant} {}", variant.name()));
                            }
                        }
                    }
                }
            }
        }
    }
    Check::new("engine equivalence", failures, total)
}

fn recurrence_matches_closed_form() -> Check {
    let mut failures = Vec::new();
    let mut total = 0;
    for kind in IndexKind::ALL {
        for p in reference_triples() {
            let states = expect_states(50, &p, kind);
            let series = gf_closed_form(&p, kind).series(51);
            for (s, c) in states.iter().zip(&series) {
                total += 1;
                if &s.base != c {
                    failures.push(format!("{kind} p=({p}) n={}", s.n));
                }
            }
        }
    }
    Check::new("recurrence equals closed-form series", failures, total)
}

fn enumeration_oracle() -> Check {
    let mut failures = Vec::new();
    let mut total = 0;
    for kind in IndexKind::ALL {
        for p in reference_triples() {
            let states = expect_states(6, &p, kind);
            for (n, s) in states.iter().enumerate() {
                total += 1;
                if expect_by_enumeration(n, &p, kind).ok().as_ref() != Some(&s.base) {
                    failures.push(format!("{kind} p=({p}) n={n}"));
                }
            }
        }
    }
    Check::new("recurrence equals enumeration", failures, total)
}

fn published_special_cases() -> Check {
    let mut failures = Vec::new();
    let mut total = 0;
    for kind in IndexKind::ALL {
        for case in AttachmentType::ALL {
            let ours = gf_closed_form(&ProbabilityTriple::pure(case), kind).series(51);
            let theirs = special_case_gf(case, kind).series(51);
            for (n, (x, y)) in ours.iter().zip(&theirs).enumerate() {
                total += 1;
                // Independent sets: the published forms start at 2 instead of 1.
                let expect_equal = !(kind == IndexKind::MerrifieldSimmons && n == 0);
                let ok = if expect_equal {
                    x == y
                } else {
                    *x == 1 && *y == 2
                };
                if !ok {
                    failures.push(format!("{kind} {case} n={n}: {x} vs {y}"));
                }
            }
        }
    }
    Check::new("published ortho/meta/para generating functions", failures, total)
}

fn sigma1_identity() -> Check {
    let mut failures = Vec::new();
    let mut total = 0;
    for kind in IndexKind::ALL {
        for p in probability_grid() {
            total += 1;
            let gf = gf_closed_form(&p, kind);
            let den = gf.denominator();
            let s = -den[1].as_rational().clone();
            let t = den
                .get(2)
                .map(|d| -d.as_rational().clone())
                .unwrap_or_default();
            let expected = ExactRational::from(Rational::from(s.square_ref()) + t * 4u32);
            if printed_sigma1_squared(&p, kind) != expected {
                failures.push(format!("{kind} p=({p})"));
            }
        }
    }
    Check::new("sigma1 squared equals s^2 + 4t", failures, total)
}

fn pole_convergence() -> Check {
    let mut failures = Vec::new();
    let mut total = 0;
    for kind in IndexKind::ALL {
        for p in probability_grid() {
            total += 1;
            let exact = expect_states(60, &p, kind).pop().expect("61 states").base;
            let ok = dominant_pole(&gf_closed_form(&p, kind)).is_ok_and(|pd| {
                let approx = pole_approx(&pd, 60);
                let exact = rug::Float::with_val(PRECISION, exact.as_rational());
                let err = (rug::Float::with_val(PRECISION, &approx / &exact) - 1u32).abs();
                err <= 1e-6
            });
            if !ok {
                failures.push(format!("{kind} p=({p})"));
            }
        }
    }
    Check::new("dominant pole within 1e-6 at n = 60", failures, total)
}

/// Runs every check. Each entry reports pass/fail with a short detail line.
pub fn run_checks() -> Vec<Check> {
    vec![
        engine_equivalence(),
        recurrence_matches_closed_form(),
        enumeration_oracle(),
        published_special_cases(),
        sigma1_identity(),
        pole_convergence(),
    ]
}
