use rug::Rational;
use serde::Serialize;

use super::{ExactRational, ProbabilityTriple};
use crate::count::IndexKind;
use crate::graph::AttachmentType;

/// Expected index of `R_n` together with the three pendant-path families at
/// the same `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExpectationState {
    pub n: usize,
    pub base: ExactRational,
    /// Path glued at its end vertex `x1`.
    pub prime: ExactRational,
    /// Path glued at `x2`.
    pub tilde: ExactRational,
    /// Path glued at its middle vertex `x3`.
    pub hat: ExactRational,
}

/// Coefficients of the coupled system for one index.
///
/// With `mix(k) = a * prime(k) + b * tilde(k) + c * hat(k)`:
///
/// ```text
/// base(n)  = chain * base(n-1) + link * mix(n-2)        n >= 2
/// prime(n) = prime.0 * base(n) + prime.1 * mix(n-1)    n >= 1
/// tilde(n) = tilde.0 * base(n) + tilde.1 * mix(n-1)
/// hat(n)   = hat.0 * base(n)   + hat.1 * mix(n-1)
/// ```
///
/// `chain` counts configurations of the new hexagon that leave the shared
/// vertex free on the hexagon side; `link` counts the remaining ones, which
/// reduce the previous chain to a pendant-path graph one size smaller.
struct Coefficients {
    chain: u32,
    link: u32,
    prime: (u32, u32),
    tilde: (u32, u32),
    hat: (u32, u32),
    /// Every auxiliary graph of `R_0` is the bare path on five vertices.
    path_value: u32,
}

impl Coefficients {
    fn of(kind: IndexKind) -> Self {
        match kind {
            IndexKind::Hosoya => Self {
                chain: 8,
                link: 10,
                prime: (5, 3),
                tilde: (3, 5),
                hat: (4, 4),
                path_value: 8,
            },
            IndexKind::MerrifieldSimmons => Self {
                chain: 5,
                link: 8,
                prime: (5, 3),
                tilde: (3, 7),
                hat: (4, 5),
                path_value: 13,
            },
        }
    }
}

struct Raw {
    base: Rational,
    prime: Rational,
    tilde: Rational,
    hat: Rational,
}

impl Raw {
    fn mix(&self, p: &ProbabilityTriple) -> Rational {
        Rational::from(p.weight(AttachmentType::Ortho) * &self.prime)
            + Rational::from(p.weight(AttachmentType::Meta) * &self.tilde)
            + Rational::from(p.weight(AttachmentType::Para) * &self.hat)
    }

    fn with_pendants(base: Rational, mix: &Rational, k: &Coefficients) -> Self {
        let aux = |(own, carried): (u32, u32)| Rational::from(&base * own) + Rational::from(mix * carried);
        Self {
            prime: aux(k.prime),
            tilde: aux(k.tilde),
            hat: aux(k.hat),
            base,
        }
    }
}

/// Iterates the coupled recurrences for `n = 0..=n_max`.
///
/// Initial values: `base(0) = 1`, `base(1) = 18`, and each auxiliary value at
/// `n = 0` is the index of the path on five vertices (8 matchings, 13
/// independent sets).
pub fn expect_states(n_max: usize, p: &ProbabilityTriple, kind: IndexKind) -> Vec<ExpectationState> {
    let k = Coefficients::of(kind);
    let path = Rational::from(k.path_value);
    let mut raw = vec![Raw {
        base: Rational::from(1),
        prime: path.clone(),
        tilde: path.clone(),
        hat: path,
    }];
    for n in 1..=n_max {
        let base = if n == 1 {
            Rational::from(18)
        } else {
            Rational::from(&raw[n - 1].base * k.chain) + raw[n - 2].mix(p) * k.link
        };
        let mix = raw[n - 1].mix(p);
        raw.push(Raw::with_pendants(base, &mix, &k));
    }
    raw.into_iter()
        .enumerate()
        .map(|(n, r)| ExpectationState {
            n,
            base: r.base.into(),
            prime: r.prime.into(),
            tilde: r.tilde.into(),
            hat: r.hat.into(),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn initial_values() {
        for kind in IndexKind::ALL {
            let s = expect_states(1, &ProbabilityTriple::uniform(), kind);
            assert_eq!(s[0].base, 1);
            assert_eq!(s[1].base, 18);
            let path: i64 = if kind == IndexKind::Hosoya { 8 } else { 13 };
            assert_eq!(s[0].prime, path);
            assert_eq!(s[0].tilde, path);
            assert_eq!(s[0].hat, path);
        }
    }

    #[test]
    fn second_and_third_terms() {
        let p = ProbabilityTriple::from_ratios((1, 5), (3, 10), (1, 2)).unwrap();
        assert_eq!(expect_states(2, &p, IndexKind::Hosoya)[2].base, 224);
        assert_eq!(expect_states(2, &p, IndexKind::MerrifieldSimmons)[2].base, 194);
        let u = ProbabilityTriple::uniform();
        assert_eq!(expect_states(3, &u, IndexKind::Hosoya)[3].base, 2832);
    }

    #[test]
    fn first_pendant_values() {
        let u = ProbabilityTriple::uniform();
        let ms = expect_states(1, &u, IndexKind::MerrifieldSimmons);
        assert_eq!(ms[1].prime, 5 * 18 + 3 * 13);
        assert_eq!(ms[1].tilde, 3 * 18 + 7 * 13);
        assert_eq!(ms[1].hat, 4 * 18 + 5 * 13);
        let h = expect_states(1, &u, IndexKind::Hosoya);
        assert_eq!(h[1].prime, 5 * 18 + 3 * 8);
    }

    #[test]
    fn base_is_strictly_increasing() {
        for kind in IndexKind::ALL {
            for p in [
                ProbabilityTriple::uniform(),
                ProbabilityTriple::pure(AttachmentType::Meta),
                ProbabilityTriple::from_ratios((0, 1), (4, 9), (5, 9)).unwrap(),
            ] {
                let s = expect_states(40, &p, kind);
                assert!(s.windows(2).all(|w| w[1].base > w[0].base));
            }
        }
    }
}
