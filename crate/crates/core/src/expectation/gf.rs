use rug::Rational;
use serde::Serialize;

use super::{ExactRational, ProbabilityTriple};
use crate::count::IndexKind;
use crate::error::{Error, Result};
use crate::graph::AttachmentType;

/// A rational function `N(x) / D(x)` with `D(0) = 1`, coefficients in
/// ascending powers of `x`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RationalGF {
    numerator: Vec<ExactRational>,
    denominator: Vec<ExactRational>,
}

impl RationalGF {
    /// Builds `N / D`, dividing both by `D(0)` when it is not already one.
    /// Trailing zero coefficients are dropped.
    pub fn new(numerator: Vec<ExactRational>, denominator: Vec<ExactRational>) -> Result<Self> {
        let lead = denominator
            .first()
            .map(|d| d.as_rational().clone())
            .unwrap_or_default();
        if lead == 0 {
            return Err(Error::InvalidArgument(
                "denominator must have a nonzero constant term".into(),
            ));
        }
        let scale = |v: Vec<ExactRational>| -> Vec<ExactRational> {
            let mut out: Vec<ExactRational> = v
                .into_iter()
                .map(|c| ExactRational::from(c.into_rational() / &lead))
                .collect();
            while out.last().is_some_and(ExactRational::is_zero) {
                out.pop();
            }
            out
        };
        Ok(Self {
            numerator: scale(numerator),
            denominator: scale(denominator),
        })
    }

    fn from_ints(numerator: &[i64], denominator: &[i64]) -> Self {
        let conv = |v: &[i64]| v.iter().map(|&c| ExactRational::from(c)).collect();
        Self::new(conv(numerator), conv(denominator)).expect("constant term is one")
    }

    pub fn numerator(&self) -> &[ExactRational] {
        &self.numerator
    }

    pub fn denominator(&self) -> &[ExactRational] {
        &self.denominator
    }

    /// Degree of the denominator.
    pub fn denominator_degree(&self) -> usize {
        self.denominator.len().saturating_sub(1)
    }

    pub fn series(&self, n_terms: usize) -> Vec<ExactRational> {
        series_expand(self, n_terms)
    }
}

/// First `n_terms` Taylor coefficients of `gf`.
///
/// Writing `D(x) = 1 - s_1 x - s_2 x^2 - ...`, the coefficients satisfy
/// `c_n = N_n + s_1 c_(n-1) + s_2 c_(n-2) + ...`.
pub fn series_expand(gf: &RationalGF, n_terms: usize) -> Vec<ExactRational> {
    let mut out: Vec<Rational> = Vec::with_capacity(n_terms);
    for n in 0..n_terms {
        let mut c = gf
            .numerator
            .get(n)
            .map(|v| v.as_rational().clone())
            .unwrap_or_default();
        for (k, d) in gf.denominator.iter().enumerate().skip(1).take(n) {
            c -= Rational::from(d.as_rational() * &out[n - k]);
        }
        out.push(c);
    }
    out.into_iter().map(ExactRational::from).collect()
}

/// The closed-form generating function of the expected index,
/// `sum_n E(index of R_n) x^n`, at the probability point `p`.
///
/// Matchings:
/// `(1 + (10 - 3a - 5b - 4c) x) / (1 - (8 + 3a + 5b + 4c) x - (26a - 10b + 8c) x^2)`.
///
/// Independent sets:
/// `(1 + (13 - 3a - 7b - 5c) x + (25a - 11b + 7c) x^2) / (1 - (5 + 3a + 7b + 5c) x - (25a - 11b + 7c) x^2)`.
pub fn gf_closed_form(p: &ProbabilityTriple, kind: IndexKind) -> RationalGF {
    let lin = |ka: i64, kb: i64, kc: i64| -> Rational {
        Rational::from(p.a() * ka) + Rational::from(p.b() * kb) + Rational::from(p.c() * kc)
    };
    let (numerator, denominator) = match kind {
        IndexKind::Hosoya => (
            vec![Rational::from(1), Rational::from(10) - lin(3, 5, 4)],
            vec![Rational::from(1), Rational::from(-8) - lin(3, 5, 4), -lin(26, -10, 8)],
        ),
        IndexKind::MerrifieldSimmons => (
            vec![Rational::from(1), Rational::from(13) - lin(3, 7, 5), lin(25, -11, 7)],
            vec![Rational::from(1), Rational::from(-5) - lin(3, 7, 5), -lin(25, -11, 7)],
        ),
    };
    let conv = |v: Vec<Rational>| v.into_iter().map(ExactRational::from).collect();
    RationalGF::new(conv(numerator), conv(denominator)).expect("constant term is one")
}

/// Generating functions for the pure ortho, meta and para chains in the
/// previously published form. The independent-set forms use
/// the constant term 2 at `n = 0`; every later coefficient agrees with
/// [`gf_closed_form`] at the matching pure triple.
pub fn special_case_gf(case: AttachmentType, kind: IndexKind) -> RationalGF {
    match (kind, case) {
        (IndexKind::Hosoya, AttachmentType::Ortho) => RationalGF::from_ints(&[1, 7], &[1, -11, -26]),
        (IndexKind::Hosoya, AttachmentType::Meta) => RationalGF::from_ints(&[1, 5], &[1, -13, 10]),
        (IndexKind::Hosoya, AttachmentType::Para) => RationalGF::from_ints(&[1, 6], &[1, -12, -8]),
        (IndexKind::MerrifieldSimmons, AttachmentType::Ortho) => {
            RationalGF::from_ints(&[2, 2], &[1, -8, -25])
        }
        (IndexKind::MerrifieldSimmons, AttachmentType::Meta) => {
            RationalGF::from_ints(&[2, -6], &[1, -12, 11])
        }
        (IndexKind::MerrifieldSimmons, AttachmentType::Para) => {
            RationalGF::from_ints(&[2, -2], &[1, -10, -7])
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use AttachmentType::*;

    fn ints(v: &[i64]) -> Vec<ExactRational> {
        v.iter().map(|&c| ExactRational::from(c)).collect()
    }

    #[test]
    fn closed_forms_at_pure_triples() {
        let h = gf_closed_form(&ProbabilityTriple::pure(Ortho), IndexKind::Hosoya);
        assert_eq!((h.numerator(), h.denominator()), (&ints(&[1, 7])[..], &ints(&[1, -11, -26])[..]));
        let ms = gf_closed_form(&ProbabilityTriple::pure(Meta), IndexKind::MerrifieldSimmons);
        assert_eq!(
            (ms.numerator(), ms.denominator()),
            (&ints(&[1, 6, -11])[..], &ints(&[1, -12, 11])[..])
        );
        let h = gf_closed_form(&ProbabilityTriple::pure(Para), IndexKind::Hosoya);
        assert_eq!((h.numerator(), h.denominator()), (&ints(&[1, 6])[..], &ints(&[1, -12, -8])[..]));
    }

    #[test]
    fn series_examples() {
        // Frozen from the integer recurrences c_n = 11 c_(n-1) + 26 c_(n-2)
        // and c_n = 8 c_(n-1) + 25 c_(n-2).
        assert_eq!(special_case_gf(Ortho, IndexKind::Hosoya).series(4), ints(&[1, 18, 224, 2932]));
        assert_eq!(
            special_case_gf(Ortho, IndexKind::MerrifieldSimmons).series(4),
            ints(&[2, 18, 194, 2002])
        );
        let one = RationalGF::new(ints(&[1]), ints(&[1])).unwrap();
        assert_eq!(one.series(4), ints(&[1, 0, 0, 0]));
        assert_eq!(one.denominator_degree(), 0);
    }

    #[test]
    fn special_cases_verbatim() {
        let g = special_case_gf(Meta, IndexKind::Hosoya);
        assert_eq!((g.numerator(), g.denominator()), (&ints(&[1, 5])[..], &ints(&[1, -13, 10])[..]));
        let g = special_case_gf(Para, IndexKind::MerrifieldSimmons);
        assert_eq!((g.numerator(), g.denominator()), (&ints(&[2, -2])[..], &ints(&[1, -10, -7])[..]));
    }

    #[test]
    fn normalizes_denominator() {
        let g = RationalGF::new(ints(&[2, 4]), ints(&[2, -6, 0])).unwrap();
        assert_eq!(g.numerator(), &ints(&[1, 2])[..]);
        assert_eq!(g.denominator(), &ints(&[1, -3])[..]);
        assert!(RationalGF::new(ints(&[1]), ints(&[0, 1])).is_err());
    }

    #[test]
    fn degenerate_quadratic_coefficient() {
        let p = ProbabilityTriple::from_ratios((0, 1), (4, 9), (5, 9)).unwrap();
        assert_eq!(gf_closed_form(&p, IndexKind::Hosoya).denominator_degree(), 1);
    }
}
