//! C ABI over `hexcactus`.
//!
//! Conventions:
//!
//! * Every fallible function returns an [`HcStatus`]; on failure a message is
//!   available from [`hc_last_error`] on the same thread.
//! * Strings returned through `char **` out-parameters are owned by the
//!   caller and must be released with [`hc_string_free`].
//! * Opaque handles ([`HcProbs`], [`HcSeries`]) are released with their
//!   matching `*_free` function. Passing NULL to a `*_free` function is a
//!   no-op.
//! * Exact rationals are rendered as `"p/q"` (or `"p"`), big integers in
//!   decimal.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hexcactus::asymptotics::{asymptotic_report, dominant_pole};
use hexcactus::random_model::monte_carlo;
use hexcactus::verify::run_checks;
use hexcactus::{
    build_aux, build_chain, count, expect_states, gf_closed_form, special_case_gf, to_dot,
    AttachmentSequence, AttachmentType, AuxVariant, Engine, Error, IndexKind, ProbabilityTriple,
};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed input: probabilities, sequences, out-of-range arguments.
    InvalidInput = 3,
    /// A computation limit was hit or the computation is undefined.
    Computation = 4,
    Panic = 5,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HcKind {
    Hosoya = 0,
    MerrifieldSimmons = 1,
}

impl From<HcKind> for IndexKind {
    fn from(k: HcKind) -> Self {
        match k {
            HcKind::Hosoya => IndexKind::Hosoya,
            HcKind::MerrifieldSimmons => IndexKind::MerrifieldSimmons,
        }
    }
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HcEngine {
    Chain = 0,
    Brute = 1,
    Recursive = 2,
}

impl From<HcEngine> for Engine {
    fn from(e: HcEngine) -> Self {
        match e {
            HcEngine::Chain => Engine::Chain,
            HcEngine::Brute => Engine::Brute,
            HcEngine::Recursive => Engine::Recursive,
        }
    }
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HcAttachment {
    Ortho = 0,
    Meta = 1,
    Para = 2,
}

impl From<HcAttachment> for AttachmentType {
    fn from(a: HcAttachment) -> Self {
        match a {
            HcAttachment::Ortho => AttachmentType::Ortho,
            HcAttachment::Meta => AttachmentType::Meta,
            HcAttachment::Para => AttachmentType::Para,
        }
    }
}

/// Monte Carlo summary. Values are rounded to double precision; for very
/// long chains `mean` may be infinite, in which case use the CLI.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct HcMcEstimate {
    pub mean: f64,
    pub std_dev: f64,
    pub std_err: f64,
    pub trials: u64,
    pub n: u32,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct HcAsymptotic {
    pub growth_rate: f64,
    pub amplitude: f64,
    pub pole_approx: f64,
    pub printed: f64,
    pub rel_err_pole: f64,
    pub rel_err_printed: f64,
}

/// Opaque probability triple.
pub struct HcProbs(ProbabilityTriple);

/// Opaque list of exact rational coefficients.
pub struct HcSeries(Vec<CString>);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(message: &str) {
    let sanitized = message.replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(sanitized).expect("no interior NUL"));
}

struct Failure(HcStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = if e.is_usage() {
            HcStatus::InvalidInput
        } else {
            HcStatus::Computation
        };
        Failure(status, e.to_string())
    }
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> HcStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_last_error("");
            HcStatus::Ok
        }
        Ok(Err(Failure(status, message))) => {
            set_last_error(&message);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            HcStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(HcStatus::NullPointer, format!("{what} is NULL")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(HcStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

fn check_out<T>(out: *mut T) -> Result<(), Failure> {
    if out.is_null() {
        Err(Failure(HcStatus::NullPointer, "output pointer is NULL".into()))
    } else {
        Ok(())
    }
}

unsafe fn probs_ref<'a>(p: *const HcProbs) -> Result<&'a ProbabilityTriple, Failure> {
    p.as_ref()
        .map(|h| &h.0)
        .ok_or_else(|| Failure(HcStatus::NullPointer, "probability handle is NULL".into()))
}

unsafe fn write_string(out: *mut *mut c_char, value: String) -> Result<(), Failure> {
    let c = CString::new(value).map_err(|_| Failure(HcStatus::Computation, "interior NUL".into()))?;
    *out = c.into_raw();
    Ok(())
}

/// Message describing the most recent failure on this thread, or an empty
/// string. The pointer stays valid until the next `hc_*` call on this thread.
#[no_mangle]
pub extern "C" fn hc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn hc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `"a,b,c"` (exact rationals or terminating decimals summing to 1).
///
/// # Safety
/// `text` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_probs_parse(text: *const c_char, out: *mut *mut HcProbs) -> HcStatus {
    guard(|| {
        check_out(out)?;
        let p = ProbabilityTriple::parse(read_str(text, "text")?)?;
        *out = Box::into_raw(Box::new(HcProbs(p)));
        Ok(())
    })
}

/// Degenerate triple selecting one attachment with probability one.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_probs_pure(kind: HcAttachment, out: *mut *mut HcProbs) -> HcStatus {
    guard(|| {
        check_out(out)?;
        *out = Box::into_raw(Box::new(HcProbs(ProbabilityTriple::pure(kind.into()))));
        Ok(())
    })
}

/// # Safety
/// `p` must be NULL or a handle from `hc_probs_*`, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hc_probs_free(p: *mut HcProbs) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Exact index of the chain with `n` hexagons and attachment string `seq`
/// over `{o, m, p}`, as a decimal string.
///
/// # Safety
/// `seq` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_count(
    seq: *const c_char,
    n: u32,
    kind: HcKind,
    engine: HcEngine,
    out: *mut *mut c_char,
) -> HcStatus {
    guard(|| {
        check_out(out)?;
        let seq = AttachmentSequence::parse(n as usize, read_str(seq, "seq")?)?;
        let value = count(&seq, kind.into(), engine.into())?;
        write_string(out, value.to_string())
    })
}

/// Expected index of `R_n` as an exact rational string.
///
/// # Safety
/// `probs` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_expectation(
    probs: *const HcProbs,
    n: u32,
    kind: HcKind,
    out: *mut *mut c_char,
) -> HcStatus {
    guard(|| {
        check_out(out)?;
        let p = probs_ref(probs)?;
        let states = expect_states(n as usize, p, kind.into());
        write_string(out, states[n as usize].base.to_string())
    })
}

/// First `terms` coefficients of the closed-form generating function.
///
/// # Safety
/// `probs` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_series_new(
    probs: *const HcProbs,
    kind: HcKind,
    terms: usize,
    out: *mut *mut HcSeries,
) -> HcStatus {
    guard(|| {
        check_out(out)?;
        let gf = gf_closed_form(probs_ref(probs)?, kind.into());
        *out = Box::into_raw(Box::new(series_handle(gf.series(terms))));
        Ok(())
    })
}

/// First `terms` coefficients of the published pure-chain generating
/// function (constant term 2 for independent sets).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_series_published(
    case: HcAttachment,
    kind: HcKind,
    terms: usize,
    out: *mut *mut HcSeries,
) -> HcStatus {
    guard(|| {
        check_out(out)?;
        let gf = special_case_gf(case.into(), kind.into());
        *out = Box::into_raw(Box::new(series_handle(gf.series(terms))));
        Ok(())
    })
}

fn series_handle(values: Vec<hexcactus::ExactRational>) -> HcSeries {
    HcSeries(
        values
            .iter()
            .map(|v| CString::new(v.to_string()).expect("digits only"))
            .collect(),
    )
}

/// # Safety
/// `s` must be NULL or a live series handle.
#[no_mangle]
pub unsafe extern "C" fn hc_series_len(s: *const HcSeries) -> usize {
    s.as_ref().map_or(0, |s| s.0.len())
}

/// Coefficient `index` as a string borrowed from the handle, or NULL when
/// out of range. Valid until the handle is freed.
///
/// # Safety
/// `s` must be NULL or a live series handle.
#[no_mangle]
pub unsafe extern "C" fn hc_series_get(s: *const HcSeries, index: usize) -> *const c_char {
    s.as_ref()
        .and_then(|s| s.0.get(index))
        .map_or(ptr::null(), |c| c.as_ptr())
}

/// # Safety
/// `s` must be NULL or a live series handle.
#[no_mangle]
pub unsafe extern "C" fn hc_series_free(s: *mut HcSeries) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// DOT text of the chain, or of an auxiliary graph when `aux_variant` is 0
/// (prime), 1 (tilde) or 2 (hat); pass -1 for the bare chain.
///
/// # Safety
/// `seq` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_graph_dot(
    seq: *const c_char,
    n: u32,
    aux_variant: i32,
    pendant: HcAttachment,
    out: *mut *mut c_char,
) -> HcStatus {
    guard(|| {
        check_out(out)?;
        let seq = AttachmentSequence::parse(n as usize, read_str(seq, "seq")?)?;
        let g = match aux_variant {
            -1 => build_chain(&seq),
            v @ 0..=2 => build_aux(&seq, pendant.into(), AuxVariant::ALL[v as usize]),
            other => {
                return Err(Failure(
                    HcStatus::InvalidInput,
                    format!("aux_variant {other} must be -1, 0, 1 or 2"),
                ))
            }
        };
        write_string(out, to_dot(&g))
    })
}

/// # Safety
/// `probs` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_monte_carlo(
    probs: *const HcProbs,
    n: u32,
    trials: u64,
    seed: u64,
    kind: HcKind,
    out: *mut HcMcEstimate,
) -> HcStatus {
    guard(|| {
        check_out(out)?;
        let est = monte_carlo(n as usize, probs_ref(probs)?, trials, seed, kind.into())?;
        *out = HcMcEstimate {
            mean: est.mean.to_f64(),
            std_dev: est.std_dev.to_f64(),
            std_err: est.std_err.to_f64(),
            trials: est.trials,
            n,
        };
        Ok(())
    })
}

/// # Safety
/// `probs` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_asymptotic(
    probs: *const HcProbs,
    n: u32,
    kind: HcKind,
    out: *mut HcAsymptotic,
) -> HcStatus {
    guard(|| {
        check_out(out)?;
        let p = probs_ref(probs)?;
        let report = asymptotic_report(n as usize, p, kind.into())?;
        let pole = dominant_pole(&gf_closed_form(p, kind.into()))?;
        *out = HcAsymptotic {
            growth_rate: pole.growth_rate.to_f64(),
            amplitude: pole.amplitude.to_f64(),
            pole_approx: report.pole_approx.to_f64(),
            printed: report.printed.to_f64(),
            rel_err_pole: report.rel_err_pole.to_f64(),
            rel_err_printed: report.rel_err_printed.to_f64(),
        };
        Ok(())
    })
}

/// Runs the internal cross-check suite; `*passed` is set to whether every
/// check succeeded.
///
/// # Safety
/// `passed` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_verify(passed: *mut bool) -> HcStatus {
    guard(|| {
        check_out(passed)?;
        let checks = run_checks();
        *passed = checks.iter().all(|c| c.passed);
        Ok(())
    })
}
