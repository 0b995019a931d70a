//! C interface to the su2cert certificate engine.
//!
//! Objects cross the boundary as opaque handles that must be released with
//! the matching `*_free` function. Every fallible call returns a
//! [`Su2Status`]; on failure the message is available from
//! [`su2_last_error_message`] on the same thread until the next call.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use su2cert::certs::{certify, Certificate, Conclusion, Query};
use su2cert::knots::{casson_plus_one_surgery, KnotTable};
use su2cert::stein::SeifertData;
use su2cert::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Su2Status {
    Ok = 0,
    Abstain = 1,
    Inconsistent = 2,
    Parse = 3,
    NullPointer = 4,
    Internal = 5,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Su2Conclusion {
    NontrivialRep = 0,
    IrreducibleRep = 1,
    NoCertificate = 2,
}

impl From<Conclusion> for Su2Conclusion {
    fn from(c: Conclusion) -> Self {
        match c {
            Conclusion::NontrivialRep => Self::NontrivialRep,
            Conclusion::IrreducibleRep => Self::IrreducibleRep,
            Conclusion::NoCertificate => Self::NoCertificate,
        }
    }
}

/// Opaque knot table.
pub struct Su2KnotTable(KnotTable);

/// Opaque certificate.
pub struct Su2Certificate(Certificate);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> Su2Status {
    match e {
        Error::Parse(_) | Error::InvalidSlope(_) | Error::NotCoprime(..) | Error::Unregistered(_) => Su2Status::Parse,
        _ => Su2Status::Inconsistent,
    }
}

enum Fail {
    Null(&'static str),
    Lib(Error),
    Utf8,
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Lib(e)
    }
}

/// Runs `f` with panics and errors turned into a status.
fn guard(f: impl FnOnce() -> Result<Su2Status, Fail>) -> Su2Status {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) => s,
        Ok(Err(Fail::Null(what))) => {
            set_error(format!("null pointer: {what}"));
            Su2Status::NullPointer
        }
        Ok(Err(Fail::Utf8)) => {
            set_error("string argument is not valid UTF-8".into());
            Su2Status::Parse
        }
        Ok(Err(Fail::Lib(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("internal panic".into());
            Su2Status::Internal
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &'static str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail::Null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Fail::Utf8)
}

unsafe fn out_arg<'a, T>(p: *mut T, what: &'static str) -> Result<&'a mut T, Fail> {
    p.as_mut().ok_or(Fail::Null(what))
}

fn publish(cert: Certificate, out: &mut *mut Su2Certificate) -> Su2Status {
    let status = if cert.is_positive() { Su2Status::Ok } else { Su2Status::Abstain };
    *out = Box::into_raw(Box::new(Su2Certificate(cert)));
    status
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn su2_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message of the last failed call on this thread, or NULL. The pointer is
/// valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn su2_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// The built-in knot table.
#[no_mangle]
pub extern "C" fn su2_knot_table_builtin() -> *mut Su2KnotTable {
    Box::into_raw(Box::new(Su2KnotTable(KnotTable::builtin())))
}

/// Adds the records of a TOML table file. On failure the table is unchanged.
///
/// # Safety
/// `table` must come from [`su2_knot_table_builtin`]; `toml` must be a
/// NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn su2_knot_table_load(table: *mut Su2KnotTable, toml: *const c_char) -> Su2Status {
    guard(|| {
        let t = out_arg(table, "table")?;
        t.0.load_toml_str(str_arg(toml, "toml")?)?;
        Ok(Su2Status::Ok)
    })
}

/// # Safety
/// `table` must come from [`su2_knot_table_builtin`] or be NULL.
#[no_mangle]
pub unsafe extern "C" fn su2_knot_table_free(table: *mut Su2KnotTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// Certifies `S^3_slope(knot)`. On `Ok` or `Abstain`, `*out` receives a
/// certificate handle.
///
/// # Safety
/// Pointers must be valid; strings NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn su2_certify_surgery(
    table: *const Su2KnotTable,
    knot: *const c_char,
    slope: *const c_char,
    out: *mut *mut Su2Certificate,
) -> Su2Status {
    guard(|| {
        let t = table.as_ref().ok_or(Fail::Null("table"))?;
        let out = out_arg(out, "out")?;
        let q = Query::Surgery { knot: str_arg(knot, "knot")?.to_string(), slope: str_arg(slope, "slope")?.parse()? };
        Ok(publish(certify(&q, &t.0)?, out))
    })
}

/// Certifies a Seifert fibered space written as `M(e; q1/p1, ...)`.
///
/// # Safety
/// `data` must be NUL-terminated and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn su2_certify_seifert(data: *const c_char, out: *mut *mut Su2Certificate) -> Su2Status {
    guard(|| {
        let out = out_arg(out, "out")?;
        let q = Query::Seifert { data: str_arg(data, "data")?.parse()? };
        Ok(publish(certify(&q, &KnotTable::empty())?, out))
    })
}

/// # Safety
/// `cert` must be a live certificate handle.
#[no_mangle]
pub unsafe extern "C" fn su2_certificate_conclusion(cert: *const Su2Certificate) -> Su2Conclusion {
    cert.as_ref().map_or(Su2Conclusion::NoCertificate, |c| c.0.conclusion.into())
}

/// Re-executes every step of the certificate.
///
/// # Safety
/// `cert` must be a live certificate handle.
#[no_mangle]
pub unsafe extern "C" fn su2_certificate_validate(cert: *const Su2Certificate) -> Su2Status {
    guard(|| {
        let c = cert.as_ref().ok_or(Fail::Null("cert"))?;
        c.0.validate()?;
        Ok(Su2Status::Ok)
    })
}

/// JSON rendering; release with [`su2_string_free`]. NULL on failure.
///
/// # Safety
/// `cert` must be a live certificate handle.
#[no_mangle]
pub unsafe extern "C" fn su2_certificate_json(cert: *const Su2Certificate) -> *mut c_char {
    let Some(c) = cert.as_ref() else {
        set_error("null pointer: cert".into());
        return ptr::null_mut();
    };
    CString::new(c.0.to_json().to_string()).map_or(ptr::null_mut(), CString::into_raw)
}

/// # Safety
/// `cert` must come from a certify call or be NULL.
#[no_mangle]
pub unsafe extern "C" fn su2_certificate_free(cert: *mut Su2Certificate) {
    if !cert.is_null() {
        drop(Box::from_raw(cert));
    }
}

/// # Safety
/// `s` must come from this library or be NULL.
#[no_mangle]
pub unsafe extern "C" fn su2_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Casson invariant of +1 surgery on a table knot, as a reduced fraction.
///
/// # Safety
/// Pointers must be valid; `knot` NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn su2_casson_plus_one(
    table: *const Su2KnotTable,
    knot: *const c_char,
    numer: *mut i64,
    denom: *mut i64,
) -> Su2Status {
    guard(|| {
        let t = table.as_ref().ok_or(Fail::Null("table"))?;
        let (n, d) = (out_arg(numer, "numer")?, out_arg(denom, "denom")?);
        let l = casson_plus_one_surgery(&t.0.knot(str_arg(knot, "knot")?)?.alexander);
        let conv = |x: &su2cert::algebra::BigInt| {
            i64::try_from(x).map_err(|_| Fail::Lib(Error::Precondition("value exceeds 64 bits".into())))
        };
        *n = conv(l.numer())?;
        *d = conv(l.denom())?;
        Ok(Su2Status::Ok)
    })
}

/// `|H1|` of a Seifert fibered space; 0 means infinite.
///
/// # Safety
/// `data` must be NUL-terminated and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn su2_seifert_h1_order(data: *const c_char, out: *mut u64) -> Su2Status {
    guard(|| {
        let o = out_arg(out, "out")?;
        let d: SeifertData = str_arg(data, "data")?.parse()?;
        *o = d.h1_order();
        Ok(Su2Status::Ok)
    })
}
