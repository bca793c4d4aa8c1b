//! C interface to `symstruct`.
//!
//! Every fallible function returns a [`SymStatus`] and writes its result
//! through an out-pointer. On failure a message is available from
//! [`sym_last_error_message`] on the same thread. Strings returned by the
//! library are released with [`sym_string_free`]; handles with their own
//! `*_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use symstruct::decomp::{decompose, recompose, Decomposition};
use symstruct::oracle;
use symstruct::parser::{parse_monomial, parse_polynomial};
use symstruct::reduction::reduce;
use symstruct::structure::{module_dimension, IndexSet};
use symstruct::{Error, Polynomial};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Dimension = 4,
    InvalidArgument = 5,
    Capacity = 6,
    VerificationFailed = 7,
    Internal = 8,
}

/// Opaque polynomial over the integers.
pub struct SymPolynomial(Polynomial);

/// Opaque decomposition over the integers.
pub struct SymDecomposition(Decomposition);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', "?")).expect("nul bytes replaced");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn status_of(err: &Error) -> SymStatus {
    match err {
        Error::Parse(_) | Error::Json(_) => SymStatus::Parse,
        Error::DimensionMismatch { .. } | Error::VariableOutOfRange { .. } => SymStatus::Dimension,
        Error::Capacity(_) => SymStatus::Capacity,
        _ => SymStatus::InvalidArgument,
    }
}

struct Failure(SymStatus, String);

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        Failure(status_of(&err), err.to_string())
    }
}

/// Runs `body`, recording any failure or panic as the thread's last error.
fn guard(body: impl FnOnce() -> Result<SymStatus, Failure>) -> SymStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(status)) => status,
        Ok(Err(Failure(status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            SymStatus::Internal
        }
    }
}

unsafe fn read_str<'a>(text: *const c_char) -> Result<&'a str, Failure> {
    if text.is_null() {
        return Err(Failure(SymStatus::NullPointer, "null string argument".into()));
    }
    CStr::from_ptr(text)
        .to_str()
        .map_err(|e| Failure(SymStatus::InvalidUtf8, e.to_string()))
}

unsafe fn deref<'a, T>(handle: *const T) -> Result<&'a T, Failure> {
    handle
        .as_ref()
        .ok_or_else(|| Failure(SymStatus::NullPointer, "null handle".into()))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<SymStatus, Failure> {
    if out.is_null() {
        return Err(Failure(SymStatus::NullPointer, "null out-pointer".into()));
    }
    out.write(value);
    Ok(SymStatus::Ok)
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("rendered text has no nul bytes").into_raw()
}

/// Parses `text` as a polynomial in `n` variables.
///
/// # Safety
/// `text` must be a valid nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sym_polynomial_parse(
    text: *const c_char,
    n: usize,
    out: *mut *mut SymPolynomial,
) -> SymStatus {
    guard(|| {
        let u = parse_polynomial(read_str(text)?, n)?;
        write_out(out, Box::into_raw(Box::new(SymPolynomial(u))))
    })
}

/// Reads the JSON wire form `{"n": .., "terms": [..]}`.
///
/// # Safety
/// As for [`sym_polynomial_parse`].
#[no_mangle]
pub unsafe extern "C" fn sym_polynomial_from_json(
    text: *const c_char,
    out: *mut *mut SymPolynomial,
) -> SymStatus {
    guard(|| {
        let u = Polynomial::from_json(read_str(text)?)?;
        write_out(out, Box::into_raw(Box::new(SymPolynomial(u))))
    })
}

/// Canonical text form. Release with [`sym_string_free`].
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sym_polynomial_to_string(
    p: *const SymPolynomial,
    out: *mut *mut c_char,
) -> SymStatus {
    guard(|| write_out(out, to_c_string(deref(p)?.0.to_string())))
}

/// JSON wire form. Release with [`sym_string_free`].
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sym_polynomial_to_json(
    p: *const SymPolynomial,
    out: *mut *mut c_char,
) -> SymStatus {
    guard(|| write_out(out, to_c_string(deref(p)?.0.to_json())))
}

/// # Safety
/// `p` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sym_polynomial_free(p: *mut SymPolynomial) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Decomposes `p` with the default generators.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sym_decompose(
    p: *const SymPolynomial,
    out: *mut *mut SymDecomposition,
) -> SymStatus {
    guard(|| {
        let d = decompose(&deref(p)?.0, None)?;
        write_out(out, Box::into_raw(Box::new(SymDecomposition(d))))
    })
}

/// Expands a decomposition back into a polynomial.
///
/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sym_recompose(
    d: *const SymDecomposition,
    out: *mut *mut SymPolynomial,
) -> SymStatus {
    guard(|| {
        let u = recompose(&deref(d)?.0);
        write_out(out, Box::into_raw(Box::new(SymPolynomial(u))))
    })
}

/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sym_decomposition_to_json(
    d: *const SymDecomposition,
    out: *mut *mut c_char,
) -> SymStatus {
    guard(|| write_out(out, to_c_string(deref(d)?.0.to_json())))
}

/// Human-readable form such as `d1 ⊗ x1 − d2 ⊗ 1`, UTF-8 encoded.
///
/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sym_decomposition_render(
    d: *const SymDecomposition,
    out: *mut *mut c_char,
) -> SymStatus {
    guard(|| write_out(out, to_c_string(deref(d)?.0.render())))
}

/// Reads a decomposition JSON relative to the default generators.
///
/// # Safety
/// `text` must be a valid nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sym_decomposition_from_json(
    text: *const c_char,
    out: *mut *mut SymDecomposition,
) -> SymStatus {
    guard(|| {
        let d = Decomposition::from_json(read_str(text)?, None)?;
        write_out(out, Box::into_raw(Box::new(SymDecomposition(d))))
    })
}

/// # Safety
/// `d` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sym_decomposition_free(d: *mut SymDecomposition) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Reduced form of a monomial given as text, e.g. `x2^2*x3^3`.
///
/// # Safety
/// `text` must be a valid nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sym_reduce_monomial(
    text: *const c_char,
    n: usize,
    out: *mut *mut c_char,
) -> SymStatus {
    guard(|| {
        let m = parse_monomial(read_str(text)?.trim(), n)?;
        write_out(out, to_c_string(reduce(&m).to_string()))
    })
}

/// `dim V_I` for `I = members[0..len]`, which must contain `n`.
///
/// # Safety
/// `members` must point to `len` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sym_module_dimension(
    n: usize,
    members: *const usize,
    len: usize,
    out: *mut u64,
) -> SymStatus {
    guard(|| {
        if members.is_null() && len > 0 {
            return Err(Failure(SymStatus::NullPointer, "null members".into()));
        }
        let slice = if len == 0 {
            &[][..]
        } else {
            std::slice::from_raw_parts(members, len)
        };
        let s = IndexSet::new(n, slice.to_vec())?;
        let dim = u64::try_from(module_dimension(&s))
            .map_err(|_| Failure(SymStatus::Capacity, "dimension exceeds 64 bits".into()))?;
        write_out(out, dim)
    })
}

/// Runs the full oracle suite and writes its JSON report. Returns
/// `VerificationFailed` (with the report still written) when a check fails.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sym_verify_json(
    n: usize,
    max_degree: u32,
    seed: u64,
    trials: u64,
    out: *mut *mut c_char,
) -> SymStatus {
    guard(|| {
        let report = oracle::verify(n, max_degree, seed, trials)?;
        let json = serde_json::to_string(&report).expect("plain data serializes");
        write_out(out, to_c_string(json))?;
        if report.status.passed() {
            Ok(SymStatus::Ok)
        } else {
            set_error("verification failed".into());
            Ok(SymStatus::VerificationFailed)
        }
    })
}

/// Message for the last failure on this thread, or null. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn sym_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sym_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
