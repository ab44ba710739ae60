//! Growth laws of the expected indices.
//!
//! The normative asymptotic comes from the dominant pole of the closed-form
//! generating function: if `x*` is the smallest-modulus zero of the
//! denominator `D` and `N` is the numerator, then
//! `c_n ~ A * (1/x*)^n` with `A = -N(x*) / (x* D'(x*))`.
//!
//! The published closed-form asymptotic expressions are also evaluated
//! literally, as written, for comparison only.

use rug::ops::Pow;
use rug::{Float, Rational};
use serde::{Serialize, Serializer};

use crate::count::IndexKind;
use crate::error::{Error, Result};
use crate::expectation::{expect_states, gf_closed_form, ExactRational, ProbabilityTriple, RationalGF};

/// Working precision in bits (about 77 significant decimal digits).
pub const PRECISION: u32 = 256;

fn float<T>(value: T) -> Float
where
    Float: rug::Assign<T>,
{
    Float::with_val(PRECISION, value)
}

/// Decimal rendering with 40 significant digits, used for JSON output.
pub fn float_to_string(value: &Float) -> String {
    if value.is_finite() {
        value.to_string_radix(10, Some(40))
    } else {
        value.to_string()
    }
}

#[derive(Clone, Debug)]
pub struct PoleData {
    /// Smallest-modulus real zero `x*` of the denominator.
    pub dominant_root: Float,
    /// `1 / x*`.
    pub growth_rate: Float,
    /// `A` in `c_n ~ A * growth_rate^n`.
    pub amplitude: Float,
    /// The other zero of a quadratic denominator.
    pub secondary_root: Option<Float>,
}

/// Dominant pole computed in rational arithmetic, available when the
/// denominator splits over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactPole {
    pub dominant_root: ExactRational,
    pub growth_rate: ExactRational,
    pub amplitude: ExactRational,
}

fn eval_float(coeffs: &[ExactRational], x: &Float) -> Float {
    coeffs
        .iter()
        .rev()
        .fold(float(0), |acc, c| acc * x + c.as_rational())
}

fn eval_rational(coeffs: &[ExactRational], x: &Rational) -> Rational {
    coeffs
        .iter()
        .rev()
        .fold(Rational::new(), |acc, c| acc * x + c.as_rational())
}

fn derivative(coeffs: &[ExactRational]) -> Vec<ExactRational> {
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| ExactRational::from(Rational::from(c.as_rational() * k as u32)))
        .collect()
}

fn quadratic_terms(gf: &RationalGF) -> Result<(Rational, Rational)> {
    let den = gf.denominator();
    match gf.denominator_degree() {
        0 => Err(Error::DegenerateDenominator),
        1 => Ok((den[1].as_rational().clone(), Rational::new())),
        2 => Ok((den[1].as_rational().clone(), den[2].as_rational().clone())),
        d => Err(Error::UnsupportedDegree(d)),
    }
}

/// Locates the dominant pole of a generating function whose denominator has
/// degree one or two.
pub fn dominant_pole(gf: &RationalGF) -> Result<PoleData> {
    let (d1, d2) = quadratic_terms(gf)?;
    let (dominant, secondary) = if d2 == 0 {
        (float(-Rational::from(d1.recip_ref())), None)
    } else {
        // d2 x^2 + d1 x + 1 = 0, roots q / d2 and 1 / q with
        // q = -(d1 + sign(d1) sqrt(disc)) / 2 (no cancellation).
        let disc = Rational::from(d1.square_ref()) - Rational::from(&d2 * 4u32);
        if disc < 0 {
            return Err(Error::NoRealRoot);
        }
        if disc == 0 || d1 == 0 {
            return Err(Error::NoDominantRoot);
        }
        let root = float(&disc).sqrt();
        let q = if d1 > 0 {
            -(float(&d1) + root) / 2u32
        } else {
            (root - float(&d1)) / 2u32
        };
        let r1 = Float::with_val(PRECISION, &q / &d2);
        let r2 = q.recip();
        match r1.cmp_abs(&r2) {
            Some(std::cmp::Ordering::Less) => (r1, Some(r2)),
            Some(std::cmp::Ordering::Greater) => (r2, Some(r1)),
            _ => return Err(Error::NoDominantRoot),
        }
    };
    let n_at = eval_float(gf.numerator(), &dominant);
    let dd_at = eval_float(&derivative(gf.denominator()), &dominant);
    let amplitude = -n_at / (Float::with_val(PRECISION, &dominant * &dd_at));
    Ok(PoleData {
        growth_rate: Float::with_val(PRECISION, dominant.recip_ref()),
        dominant_root: dominant,
        amplitude,
        secondary_root: secondary,
    })
}

fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if *r < 0 || !r.numer().is_perfect_square() || !r.denom().is_perfect_square() {
        return None;
    }
    Some(Rational::from((r.numer().clone().sqrt(), r.denom().clone().sqrt())))
}

/// Exact dominant pole and amplitude when both roots of the denominator are
/// rational; `None` otherwise.
pub fn exact_dominant_pole(gf: &RationalGF) -> Option<ExactPole> {
    let (d1, d2) = quadratic_terms(gf).ok()?;
    let dominant = if d2 == 0 {
        -Rational::from(d1.recip_ref())
    } else {
        let disc = Rational::from(d1.square_ref()) - Rational::from(&d2 * 4u32);
        let root = rational_sqrt(&disc)?;
        let two_d2 = Rational::from(&d2 * 2u32);
        let r1 = (Rational::from(-&d1) + &root) / &two_d2;
        let r2 = (-d1 - root) / two_d2;
        match r1.clone().abs().cmp(&r2.clone().abs()) {
            std::cmp::Ordering::Less => r1,
            std::cmp::Ordering::Greater => r2,
            std::cmp::Ordering::Equal => return None,
        }
    };
    if dominant == 0 {
        return None;
    }
    let n_at = eval_rational(gf.numerator(), &dominant);
    let dd_at = eval_rational(&derivative(gf.denominator()), &dominant);
    let amplitude = -n_at / (Rational::from(&dominant * &dd_at));
    Some(ExactPole {
        growth_rate: Rational::from(dominant.recip_ref()).into(),
        dominant_root: dominant.into(),
        amplitude: amplitude.into(),
    })
}

/// `A * growth_rate^n`.
pub fn pole_approx(pd: &PoleData, n: u32) -> Float {
    let power = Float::with_val(PRECISION, (&pd.growth_rate).pow(n));
    power * &pd.amplitude
}

/// The printed `sigma_1^2` polynomial, exactly.
pub fn printed_sigma1_squared(p: &ProbabilityTriple, kind: IndexKind) -> ExactRational {
    let (a, b, c) = (p.a(), p.b(), p.c());
    let sq = |x: &Rational| Rational::from(x.square_ref());
    let prod = |x: &Rational, y: &Rational| Rational::from(x * y);
    let value: Rational = match kind {
        IndexKind::Hosoya => {
            9 * sq(a) + 30 * prod(a, b) + 24 * prod(a, c) + Rational::from(a * 152u32)
                + 25 * sq(b)
                + 40 * prod(b, c)
                + Rational::from(b * 40u32)
                + 16 * sq(c)
                + Rational::from(c * 96u32)
                + 64
        }
        IndexKind::MerrifieldSimmons => {
            9 * sq(a) + 42 * prod(a, b) + 30 * prod(a, c) + Rational::from(a * 130u32)
                + 49 * sq(b)
                + 70 * prod(b, c)
                + Rational::from(b * 26u32)
                + 25 * sq(c)
                + Rational::from(c * 78u32)
                + 25
        }
    };
    value.into()
}

#[derive(Clone, Debug)]
pub struct PrintedAsymptoticParams {
    pub sigma1: Float,
    pub sigma2: Float,
    /// Only the independent-set expression uses a third parameter.
    pub sigma3: Option<Float>,
}

pub fn printed_params(p: &ProbabilityTriple, kind: IndexKind) -> PrintedAsymptoticParams {
    let (a, b, c) = (p.a(), p.b(), p.c());
    let sigma1 = float(printed_sigma1_squared(p, kind).as_rational()).sqrt();
    let lin = |ka: i32, kb: i32, kc: i32| -> Rational {
        Rational::from(a * ka) + Rational::from(b * kb) + Rational::from(c * kc)
    };
    let prod = |x: &Rational, y: &Rational| Rational::from(x * y);
    match kind {
        IndexKind::Hosoya => {
            let sigma2 = lin(46, -30, 8) + 30 * prod(a, b) + 24 * prod(a, c) + 40 * prod(b, c);
            PrintedAsymptoticParams {
                sigma1,
                sigma2: float(&sigma2),
                sigma3: None,
            }
        }
        IndexKind::MerrifieldSimmons => {
            let sq = |x: &Rational| Rational::from(x.square_ref());
            let sigma3 = 9 * sq(a) + 49 * sq(b) + 25 * sq(c) - 20 + lin(53, -15, 19);
            PrintedAsymptoticParams {
                sigma1,
                sigma2: float(&lin(25, -11, 7)),
                sigma3: Some(float(&sigma3)),
            }
        }
    }
}

/// Evaluates the published asymptotic expression at `n` exactly as printed,
/// including its unusual prefactors and the `7b 3a sigma_1` style products.
/// The result may be inaccurate or non-finite; it is a comparator only.
pub fn printed_asymptotic(n: u32, p: &ProbabilityTriple, kind: IndexKind) -> Float {
    let params = printed_params(p, kind);
    let s1 = &params.sigma1;
    let (a, b, c) = (float(p.a()), float(p.b()), float(p.c()));
    let exponent = n + 1;
    match kind {
        IndexKind::Hosoya => {
            let prefactor = float(1) / float(Rational::from((1, 4))).pow(exponent);
            let bracket = params.sigma2.clone() - float(&a * s1) * 3u32 - float(&b * s1) * 5u32
                - float(&c * s1) * 4u32
                + float(a.square_ref()) * 9u32
                + float(b.square_ref()) * 25u32
                + float(c.square_ref()) * 16u32
                + float(s1 * 10u32)
                - 80u32;
            let ratio_num = float(&a * 3u32) + float(&b * 5u32) + float(&c * 4u32) - s1 + 8u32;
            let ratio_den = float(&a * 13u32) - float(&b * 5u32) + float(&c * 4u32);
            let base = -(ratio_num / ratio_den);
            let tail = float(&a * 52u32) - float(&b * 20u32) + float(&c * 16u32);
            let denominator = base.pow(exponent) * tail * s1;
            prefactor * bracket / denominator
        }
        IndexKind::MerrifieldSimmons => {
            let sigma2 = &params.sigma2;
            let sigma3 = params.sigma3.as_ref().expect("sigma3 is defined for independent sets");
            let prefactor = float(1) / float(0.5f64).pow(exponent);
            let three_a_s1 = float(&a * s1) * 3u32;
            let bracket = -three_a_s1.clone()
                - float(&b * &three_a_s1) * 7u32
                - float(&c * &three_a_s1) * 5u32
                + float(&a * &b) * 42u32
                + float(&a * &c) * 30u32
                + float(&b * &c) * 70u32
                + float(s1 * 4u32)
                + sigma3;
            let ratio_num = float(&a * 3u32) + float(&b * 7u32) + float(&c * 5u32) - s1 + 5u32;
            let base = -(ratio_num / sigma2);
            let denominator = base.pow(exponent) * s1 * sigma2;
            prefactor * bracket / denominator
        }
    }
}

/// Exact value, pole approximation and printed expression side by side.
#[derive(Clone, Debug)]
pub struct AsymptoticReport {
    pub n: usize,
    pub kind: IndexKind,
    pub probs: ProbabilityTriple,
    pub exact: ExactRational,
    pub pole_approx: Float,
    pub printed: Float,
    pub rel_err_pole: Float,
    pub rel_err_printed: Float,
}

fn relative_error(approx: &Float, exact: &Float) -> Float {
    (float(approx / exact) - 1u32).abs()
}

pub fn asymptotic_report(n: usize, p: &ProbabilityTriple, kind: IndexKind) -> Result<AsymptoticReport> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "asymptotic comparison needs n >= 2, got {n}"
        )));
    }
    let exponent = u32::try_from(n).map_err(|_| Error::InvalidArgument(format!("n = {n} is too large")))?;
    let exact = expect_states(n, p, kind).pop().expect("n + 1 states").base;
    let exact_float = float(exact.as_rational());
    let pole = dominant_pole(&gf_closed_form(p, kind))?;
    let pole_approx = pole_approx(&pole, exponent);
    let printed = printed_asymptotic(exponent, p, kind);
    Ok(AsymptoticReport {
        n,
        kind,
        probs: p.clone(),
        rel_err_pole: relative_error(&pole_approx, &exact_float),
        rel_err_printed: relative_error(&printed, &exact_float),
        exact,
        pole_approx,
        printed,
    })
}

fn finite_or_null(v: &Float) -> Option<f64> {
    let x = v.to_f64();
    x.is_finite().then_some(x)
}

impl Serialize for AsymptoticReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a> {
            n: usize,
            kind: IndexKind,
            probs: &'a ProbabilityTriple,
            exact: &'a ExactRational,
            pole_approx: String,
            printed: String,
            rel_err_pole: Option<f64>,
            rel_err_printed: Option<f64>,
        }
        Wire {
            n: self.n,
            kind: self.kind,
            probs: &self.probs,
            exact: &self.exact,
            pole_approx: float_to_string(&self.pole_approx),
            printed: float_to_string(&self.printed),
            rel_err_pole: finite_or_null(&self.rel_err_pole),
            rel_err_printed: finite_or_null(&self.rel_err_printed),
        }
        .serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expectation::special_case_gf;
    use crate::graph::AttachmentType::*;

    fn close(x: &Float, target: f64, tol: f64) -> bool {
        (x.to_f64() - target).abs() <= tol
    }

    #[test]
    fn ortho_matchings_pole() {
        let gf = gf_closed_form(&ProbabilityTriple::pure(Ortho), IndexKind::Hosoya);
        let pd = dominant_pole(&gf).unwrap();
        assert!(close(&pd.growth_rate, 13.0, 1e-60));
        assert!(close(&pd.amplitude, 4.0 / 3.0, 1e-60));
        assert!(close(pd.secondary_root.as_ref().unwrap(), -0.5, 1e-60));
        assert!(close(&pole_approx(&pd, 0), 4.0 / 3.0, 1e-12));
        assert!(close(&pole_approx(&pd, 3), 4.0 / 3.0 * 2197.0, 1e-9));
        let exact = exact_dominant_pole(&gf).unwrap();
        assert_eq!(exact.growth_rate, 13);
        assert_eq!(exact.amplitude, ExactRational::from_ratio(4, 3));
        assert_eq!(exact.dominant_root, ExactRational::from_ratio(1, 13));
    }

    #[test]
    fn meta_matchings_pole() {
        let gf = special_case_gf(Meta, IndexKind::Hosoya);
        let pd = dominant_pole(&gf).unwrap();
        let lambda = (13.0 + 129f64.sqrt()) / 2.0;
        assert!(close(&pd.growth_rate, lambda, 1e-12));
        assert!(close(&pd.dominant_root, (13.0 - 129f64.sqrt()) / 20.0, 1e-14));
        let approx = pole_approx(&pd, 3).to_f64();
        assert!((approx / 2732.0 - 1.0).abs() < 5e-4);
        assert!(exact_dominant_pole(&gf).is_none());
    }

    #[test]
    fn linear_denominator() {
        let p = ProbabilityTriple::from_ratios((0, 1), (4, 9), (5, 9)).unwrap();
        let gf = gf_closed_form(&p, IndexKind::Hosoya);
        let pd = dominant_pole(&gf).unwrap();
        assert!(pd.secondary_root.is_none());
        // Denominator 1 - (112/9) x, numerator 1 + (50/9) x.
        assert!(close(&pd.growth_rate, 112.0 / 9.0, 1e-14));
        assert!(close(&pd.amplitude, 1.0 + 50.0 / 112.0, 1e-14));
        let exact = exact_dominant_pole(&gf).unwrap();
        assert_eq!(exact.growth_rate, ExactRational::from_ratio(112, 9));
        let states = expect_states(20, &p, IndexKind::Hosoya);
        let exact = float(states[20].base.as_rational());
        assert!(relative_error(&pole_approx(&pd, 20), &exact) < 1e-60);
    }

    #[test]
    fn degenerate_inputs() {
        let constant = RationalGF::new(vec![1.into()], vec![1.into()]).unwrap();
        assert!(matches!(dominant_pole(&constant), Err(Error::DegenerateDenominator)));
        let complex = RationalGF::new(vec![1.into()], vec![1.into(), 0.into(), 1.into()]).unwrap();
        assert!(matches!(dominant_pole(&complex), Err(Error::NoRealRoot)));
        let symmetric = RationalGF::new(vec![1.into()], vec![1.into(), 0.into(), (-4).into()]).unwrap();
        assert!(matches!(dominant_pole(&symmetric), Err(Error::NoDominantRoot)));
        let cubic = RationalGF::new(vec![1.into()], vec![1.into(), 1.into(), 1.into(), 1.into()]).unwrap();
        assert!(matches!(dominant_pole(&cubic), Err(Error::UnsupportedDegree(3))));
    }

    #[test]
    fn printed_sigma_examples() {
        let ortho = ProbabilityTriple::pure(Ortho);
        assert_eq!(printed_sigma1_squared(&ortho, IndexKind::Hosoya), 225);
        assert!(close(&printed_params(&ortho, IndexKind::Hosoya).sigma1, 15.0, 1e-60));
        assert_eq!(printed_sigma1_squared(&ortho, IndexKind::MerrifieldSimmons), 164);
        let meta = ProbabilityTriple::pure(Meta);
        assert!(close(&printed_params(&meta, IndexKind::MerrifieldSimmons).sigma2, -11.0, 0.0));
    }

    #[test]
    fn report_fields() {
        let r = asymptotic_report(60, &ProbabilityTriple::pure(Ortho), IndexKind::Hosoya).unwrap();
        assert!(r.rel_err_pole.to_f64() <= 1e-6);
        let r = asymptotic_report(3, &ProbabilityTriple::pure(Meta), IndexKind::Hosoya).unwrap();
        let e = r.rel_err_pole.to_f64();
        assert!(e > 1e-5 && e < 5e-4, "{e}");
        for kind in IndexKind::ALL {
            let r = asymptotic_report(2, &ProbabilityTriple::uniform(), kind).unwrap();
            let expected: i64 = if kind == IndexKind::Hosoya { 224 } else { 194 };
            assert_eq!(r.exact, expected);
        }
        assert!(asymptotic_report(1, &ProbabilityTriple::uniform(), IndexKind::Hosoya).is_err());
    }
}
