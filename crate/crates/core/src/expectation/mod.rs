//! Exact expected indices of the random chain `R_n(a, b, c)`.
//!
//! All arithmetic here is exact rational arithmetic.

mod gf;
mod recurrence;

use std::fmt;
use std::str::FromStr;

use rug::{Integer, Rational};
use serde::{Serialize, Serializer};

use crate::count::{count_chain, IndexKind};
use crate::error::{Error, Result};
use crate::graph::{AttachmentSequence, AttachmentType};

pub use gf::{gf_closed_form, series_expand, special_case_gf, RationalGF};
pub use recurrence::{expect_states, ExpectationState};

/// Largest `n` accepted by [`expect_by_enumeration`].
pub const ENUMERATION_LIMIT: usize = 8;

/// A reduced fraction with positive denominator.
///
/// Renders as `"p/q"`, or `"p"` when the denominator is one.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ExactRational(Rational);

impl ExactRational {
    pub fn zero() -> Self {
        Self(Rational::new())
    }

    pub fn one() -> Self {
        Self(Rational::from(1))
    }

    pub fn from_ratio(numer: i64, denom: i64) -> Self {
        Self(Rational::from((numer, denom)))
    }

    pub fn as_rational(&self) -> &Rational {
        &self.0
    }

    pub fn into_rational(self) -> Rational {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.cmp0() == std::cmp::Ordering::Equal
    }
}

impl From<Rational> for ExactRational {
    fn from(r: Rational) -> Self {
        Self(r)
    }
}

impl From<Integer> for ExactRational {
    fn from(v: Integer) -> Self {
        Self(Rational::from(v))
    }
}

impl From<i64> for ExactRational {
    fn from(v: i64) -> Self {
        Self(Rational::from(v))
    }
}

impl PartialEq<i64> for ExactRational {
    fn eq(&self, other: &i64) -> bool {
        self.0 == *other
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self.0.denom() == 1 {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

/// Accepts `p/q`, integers and terminating decimals such as `0.25`, all
/// converted exactly. Exponent notation is rejected.
impl FromStr for ExactRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let text = s.trim();
        let bad = || Error::ParseRational(s.to_string());
        if text.is_empty() {
            return Err(bad());
        }
        if let Some((numer, denom)) = text.split_once('/') {
            let numer: Integer = numer.trim().parse().map_err(|_| bad())?;
            let denom: Integer = denom.trim().parse().map_err(|_| bad())?;
            if denom == 0 {
                return Err(bad());
            }
            return Ok(Self(Rational::from((numer, denom))));
        }
        let (negative, body) = match text.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, text.strip_prefix('+').unwrap_or(text)),
        };
        let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
        let digits_ok = |d: &str| d.chars().all(|c| c.is_ascii_digit());
        if (whole.is_empty() && frac.is_empty()) || !digits_ok(whole) || !digits_ok(frac) {
            return Err(bad());
        }
        let digits = format!("{whole}{frac}");
        let numer: Integer = if digits.is_empty() { Integer::new() } else { digits.parse().map_err(|_| bad())? };
        let denom = Integer::from(Integer::u_pow_u(10, frac.len() as u32));
        let value = Rational::from((numer, denom));
        Ok(Self(if negative { -value } else { value }))
    }
}

impl Serialize for ExactRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Attachment probabilities `(a, b, c)` for ortho, meta and para.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProbabilityTriple {
    a: Rational,
    b: Rational,
    c: Rational,
}

impl ProbabilityTriple {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Result<Self> {
        for (name, v) in [("a", &a), ("b", &b), ("c", &c)] {
            if *v < 0 {
                return Err(Error::InvalidProbabilities(format!("{name} = {} is negative", ExactRational(v.clone()))));
            }
        }
        let sum = Rational::from(&a + &b) + &c;
        if sum != 1 {
            return Err(Error::InvalidProbabilities(format!(
                "a + b + c = {}, expected 1",
                ExactRational(sum)
            )));
        }
        Ok(Self { a, b, c })
    }

    /// Convenience constructor from small integer fractions.
    pub fn from_ratios(a: (i64, i64), b: (i64, i64), c: (i64, i64)) -> Result<Self> {
        Self::new(Rational::from(a), Rational::from(b), Rational::from(c))
    }

    /// The degenerate triple that always picks `kind`.
    pub fn pure(kind: AttachmentType) -> Self {
        let mut p = [Rational::new(), Rational::new(), Rational::new()];
        p[kind.distance() - 1] = Rational::from(1);
        let [a, b, c] = p;
        Self { a, b, c }
    }

    pub fn uniform() -> Self {
        let third = Rational::from((1, 3));
        Self {
            a: third.clone(),
            b: third.clone(),
            c: third,
        }
    }

    /// Parses `"a,b,c"` where each entry is accepted by [`ExactRational`].
    pub fn parse(text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split(',').collect();
        if parts.len() != 3 {
            return Err(Error::InvalidProbabilities(format!(
                "expected three comma-separated values, got {text:?}"
            )));
        }
        let mut values = parts
            .iter()
            .map(|p| p.parse::<ExactRational>().map(ExactRational::into_rational));
        let a = values.next().unwrap()?;
        let b = values.next().unwrap()?;
        let c = values.next().unwrap()?;
        Self::new(a, b, c)
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }

    /// Probability of choosing `kind` at one attachment.
    pub fn weight(&self, kind: AttachmentType) -> &Rational {
        match kind {
            AttachmentType::Ortho => &self.a,
            AttachmentType::Meta => &self.b,
            AttachmentType::Para => &self.c,
        }
    }

    /// Probability of the whole sequence under the model.
    pub fn sequence_probability(&self, seq: &AttachmentSequence) -> Rational {
        seq.choices()
            .iter()
            .fold(Rational::from(1), |acc, &t| acc * self.weight(t))
    }
}

impl fmt::Display for ProbabilityTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{},{}",
            ExactRational(self.a.clone()),
            ExactRational(self.b.clone()),
            ExactRational(self.c.clone())
        )
    }
}

impl Serialize for ProbabilityTriple {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = serializer.serialize_seq(Some(3))?;
        for v in [&self.a, &self.b, &self.c] {
            seq.serialize_element(&ExactRational(v.clone()))?;
        }
        seq.end()
    }
}

/// Expected index over all `3^(n-2)` sequences, weighted by their
/// probability. This is the definition of the expectation, evaluated
/// literally.
pub fn expect_by_enumeration(n: usize, p: &ProbabilityTriple, kind: IndexKind) -> Result<ExactRational> {
    if n > ENUMERATION_LIMIT {
        return Err(Error::SizeLimitExceeded {
            engine: "sequence enumeration",
            what: "n",
            limit: ENUMERATION_LIMIT,
            actual: n,
        });
    }
    let mut total = Rational::new();
    for seq in AttachmentSequence::all(n) {
        let weight = p.sequence_probability(&seq);
        if weight == 0 {
            continue;
        }
        total += weight * count_chain(&seq, kind).into_integer();
    }
    Ok(ExactRational(total))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_text_forms() {
        let r = |s: &str| s.parse::<ExactRational>().unwrap().to_string();
        assert_eq!(r("1/3"), "1/3");
        assert_eq!(r("2/6"), "1/3");
        assert_eq!(r("0.25"), "1/4");
        assert_eq!(r(".5"), "1/2");
        assert_eq!(r("3"), "3");
        assert_eq!(r("-1.50"), "-3/2");
        assert_eq!(r("4/-8"), "-1/2");
        for bad in ["", "1/0", "abc", "0.3.3", "1e-3", "."] {
            assert!(bad.parse::<ExactRational>().is_err(), "{bad}");
        }
    }

    #[test]
    fn probability_validation() {
        assert!(ProbabilityTriple::parse("1/3,1/3,1/3").is_ok());
        assert!(ProbabilityTriple::parse("0.5,0.25,0.25").is_ok());
        assert!(matches!(
            ProbabilityTriple::parse("0.3,0.3,0.3"),
            Err(Error::InvalidProbabilities(_))
        ));
        assert!(matches!(
            ProbabilityTriple::parse("-1/2,1,1/2"),
            Err(Error::InvalidProbabilities(_))
        ));
        assert!(ProbabilityTriple::parse("1,0").is_err());
        assert!(matches!(ProbabilityTriple::parse("x,0,1"), Err(Error::ParseRational(_))));
        assert_eq!(ProbabilityTriple::uniform().to_string(), "1/3,1/3,1/3");
    }

    #[test]
    fn enumeration_examples() {
        let p = ProbabilityTriple::from_ratios((1, 2), (1, 4), (1, 4)).unwrap();
        assert_eq!(expect_by_enumeration(3, &p, IndexKind::Hosoya).unwrap(), 2857);
        assert_eq!(expect_by_enumeration(2, &p, IndexKind::Hosoya).unwrap(), 224);
        let para = ProbabilityTriple::pure(AttachmentType::Para);
        assert_eq!(expect_by_enumeration(3, &para, IndexKind::MerrifieldSimmons).unwrap(), 2066);
        assert!(matches!(
            expect_by_enumeration(9, &para, IndexKind::Hosoya),
            Err(Error::SizeLimitExceeded { .. })
        ));
    }
}
