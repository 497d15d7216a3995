//! C ABI for `wcqsym`.
//!
//! Every function returns a [`WcqStatus`] and writes its result through an out pointer.
//! Elements are opaque handles released with [`wcq_element_free`] or [`wcq_sha_free`];
//! strings are released with [`wcq_string_free`]. After a non-OK status,
//! [`wcq_last_error`] describes the failure on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use wcqsym::hopf::{format_tensor2, Basis};
use wcqsym::literal::parse_element;
use wcqsym::projection::{phi, verify_kernel_truncation};
use wcqsym::rota_baxter::{
    diamond, format_sha, format_sha_tensor2, rb_check_random, rb_operator, sha_antipode,
    sha_coproduct, TensorBounds,
};
use wcqsym::{json, Error, ShaElem, WQSymElem};

/// Result code of every call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WcqStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Domain = 4,
    BasisMismatch = 5,
    TooLarge = 6,
    Panic = 7,
}

/// Basis of a `WCQSym` element.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WcqBasis {
    Monomial = 0,
    Fundamental = 1,
}

impl From<WcqBasis> for Basis {
    fn from(b: WcqBasis) -> Self {
        match b {
            WcqBasis::Monomial => Basis::M,
            WcqBasis::Fundamental => Basis::F,
        }
    }
}

impl From<Basis> for WcqBasis {
    fn from(b: Basis) -> Self {
        match b {
            Basis::M => WcqBasis::Monomial,
            Basis::F => WcqBasis::Fundamental,
        }
    }
}

/// An element of `WCQSym` in the M or F basis.
pub struct WcqElement(WQSymElem);

/// An element of the free Rota-Baxter algebra `Ш(x)`.
pub struct WcqShaElement(ShaElem);

#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct WcqKernelReport {
    pub span_dim: usize,
    pub rank: usize,
    pub kernel_dim: usize,
    pub basis_count: usize,
    pub basis_rank: usize,
    pub all_annihilated: bool,
    pub passed: bool,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct WcqRbCheckReport {
    pub trials: usize,
    pub seed: u64,
    pub failures: usize,
    pub passed: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(WcqStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Parse { .. } => WcqStatus::Parse,
            Error::BasisMismatch { .. } => WcqStatus::BasisMismatch,
            Error::TooLarge(_) => WcqStatus::TooLarge,
            _ => WcqStatus::Domain,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(WcqStatus::NullPointer, format!("{what} is null"))
}

fn set_last_error(message: Option<String>) {
    let message = message.map(|m| CString::new(m.replace('\0', " ")).unwrap_or_default());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = message);
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> WcqStatus {
    let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|payload| {
        let message = payload
            .downcast_ref::<&str>()
            .map(|s| s.to_string())
            .or_else(|| payload.downcast_ref::<String>().cloned())
            .unwrap_or_else(|| "unknown panic".to_string());
        Err(Failure(WcqStatus::Panic, message))
    });
    match outcome {
        Ok(()) => {
            set_last_error(None);
            WcqStatus::Ok
        }
        Err(Failure(status, message)) => {
            set_last_error(Some(message));
            status
        }
    }
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|e| Failure(WcqStatus::InvalidUtf8, format!("{what} is not UTF-8: {e}")))
}

unsafe fn borrow<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let s = CString::new(s).map_err(|e| Failure(WcqStatus::Domain, e.to_string()))?;
    if out.is_null() {
        return Err(null("out"));
    }
    out.write(s.into_raw());
    Ok(())
}

unsafe fn write_element(out: *mut *mut WcqElement, u: WQSymElem) -> Result<(), Failure> {
    write(out, Box::into_raw(Box::new(WcqElement(u))))
}

unsafe fn write_sha(out: *mut *mut WcqShaElement, u: ShaElem) -> Result<(), Failure> {
    write(out, Box::into_raw(Box::new(WcqShaElement(u))))
}

/// Message for the last failed call on this thread, or null. Free with [`wcq_string_free`].
#[no_mangle]
pub extern "C" fn wcq_last_error() -> *mut c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(ptr::null_mut(), |m| m.clone().into_raw())
    })
}

/// # Safety
/// `s` is null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn wcq_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses an element literal; unprefixed compositions are read in `basis`.
///
/// # Safety
/// `literal` is a NUL-terminated string and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn wcq_element_parse(
    literal: *const c_char,
    basis: WcqBasis,
    out: *mut *mut WcqElement,
) -> WcqStatus {
    guard(|| {
        let s = read_str(literal, "literal")?;
        write_element(out, parse_element(s, basis.into())?)
    })
}

/// # Safety
/// `u` is null or a handle returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn wcq_element_free(u: *mut WcqElement) {
    if !u.is_null() {
        drop(Box::from_raw(u));
    }
}

/// # Safety
/// `u` is a live handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn wcq_element_basis(u: *const WcqElement, out: *mut WcqBasis) -> WcqStatus {
    guard(|| write(out, borrow(u, "u")?.0.basis.into()))
}

/// Product, in the basis of `u`.
///
/// # Safety
/// `u` and `v` are live handles and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn wcq_element_mul(
    u: *const WcqElement,
    v: *const WcqElement,
    out: *mut *mut WcqElement,
) -> WcqStatus {
    guard(|| {
        let w = borrow(u, "u")?.0.mul(&borrow(v, "v")?.0)?;
        write_element(out, w)
    })
}

/// # Safety
/// `u` is a live handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn wcq_element_antipode(
    u: *const WcqElement,
    out: *mut *mut WcqElement,
) -> WcqStatus {
    guard(|| write_element(out, borrow(u, "u")?.0.antipode()?))
}

/// # Safety
/// `u` is a live handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn wcq_element_to_basis(
    u: *const WcqElement,
    basis: WcqBasis,
    out: *mut *mut WcqElement,
) -> WcqStatus {
    guard(|| write_element(out, borrow(u, "u")?.0.to_basis(basis.into())?))
}

/// Projection onto `QSym`, in the M basis.
///
/// # Safety
/// `u` is a live handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn wcq_element_phi(
    u: *const WcqElement,
    out: *mut *mut WcqElement,
) -> WcqStatus {
    guard(|| {
        let m = borrow(u, "u")?.0.to_m()?;
        write_element(out, WQSymElem::new(Basis::M, phi(&m.value)))
    })
}

/// Counit as a decimal string.
///
/// # Safety
/// `u` is a live handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn wcq_element_counit(
    u: *const WcqElement,
    out: *mut *mut c_char,
) -> WcqStatus {
    guard(|| write_string(out, borrow(u, "u")?.0.counit()?.to_string()))
}

/// Whether `u` and `v` are the same element, whatever their bases.
///
/// # Safety
/// `u` and `v` are live handles and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn wcq_element_equal(
    u: *const WcqElement,
    v: *const WcqElement,
    out: *mut bool,
) -> WcqStatus {
    guard(|| {
        let (u, v) = (&borrow(u, "u")?.0, &borrow(v, "v")?.0);
        let equal = if u.basis == v.basis {
            u.value == v.value
        } else {
            u.to_m()?.value == v.to_m()?.value
        };
        write(out, equal)
    })
}

/// # Safety
/// `u` is a live handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn wcq_element_to_string(
    u: *const WcqElement,
    out: *mut *mut c_char,
) -> WcqStatus {
    guard(|| write_string(out, borrow(u, "u")?.0.to_string()))
}

/// # Safety
/// `u` is a live handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn wcq_element_to_json(
    u: *const WcqElement,
    out: *mut *mut c_char,
) -> WcqStatus {
    guard(|| write_string(out, json::element(&borrow(u, "u")?.0).to_string()))
}

/// Coproduct in the basis of `u`, as text.
///
/// # Safety
/// `u` is a live handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn wcq_element_coproduct_string(
    u: *const WcqElement,
    out: *mut *mut c_char,
) -> WcqStatus {
    guard(|| {
        let u = &borrow(u, "u")?.0;
        write_string(out, format_tensor2(u.basis, &u.coproduct()?))
    })
}

/// Coproduct in the basis of `u`, as JSON.
///
/// # Safety
/// `u` is a live handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn wcq_element_coproduct_json(
    u: *const WcqElement,
    out: *mut *mut c_char,
) -> WcqStatus {
    guard(|| {
        let u = &borrow(u, "u")?.0;
        write_string(out, json::tensor2(u.basis, &u.coproduct()?).to_string())
    })
}

/// Checks the kernel basis of the projection on compositions of length at most
/// `max_len` with positive entries at most `max_entry`.
///
/// # Safety
/// `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn wcq_kernel_check(
    max_len: usize,
    max_entry: u64,
    out: *mut WcqKernelReport,
) -> WcqStatus {
    guard(|| {
        if max_len > 6 || max_entry > 6 {
            return Err(
                Error::TooLarge(format!("a kernel check at ({max_len}, {max_entry})")).into(),
            );
        }
        let r = verify_kernel_truncation(max_len, max_entry);
        write(
            out,
            WcqKernelReport {
                span_dim: r.span_dim,
                rank: r.rank,
                kernel_dim: r.kernel_dim,
                basis_count: r.basis_count,
                basis_rank: r.basis_rank,
                all_annihilated: r.all_annihilated,
                passed: r.passed(),
            },
        )
    })
}

/// # Safety
/// `literal` is a NUL-terminated string and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn wcq_sha_parse(
    literal: *const c_char,
    out: *mut *mut WcqShaElement,
) -> WcqStatus {
    guard(|| {
        let s = read_str(literal, "literal")?;
        write_sha(out, s.parse()?)
    })
}

/// # Safety
/// `u` is null or a handle returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn wcq_sha_free(u: *mut WcqShaElement) {
    if !u.is_null() {
        drop(Box::from_raw(u));
    }
}

/// Augmented mixable shuffle product of weight `lambda`.
///
/// # Safety
/// `u` and `v` are live handles and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn wcq_sha_mul(
    u: *const WcqShaElement,
    v: *const WcqShaElement,
    lambda: i64,
    out: *mut *mut WcqShaElement,
) -> WcqStatus {
    guard(|| {
        let w = diamond(&borrow(u, "u")?.0, &borrow(v, "v")?.0, &lambda.into());
        write_sha(out, w)
    })
}

/// The Rota-Baxter operator `P`.
///
/// # Safety
/// `u` is a live handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn wcq_sha_rb_operator(
    u: *const WcqShaElement,
    out: *mut *mut WcqShaElement,
) -> WcqStatus {
    guard(|| write_sha(out, rb_operator(&borrow(u, "u")?.0)))
}

/// # Safety
/// `u` is a live handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn wcq_sha_antipode(
    u: *const WcqShaElement,
    out: *mut *mut WcqShaElement,
) -> WcqStatus {
    guard(|| write_sha(out, sha_antipode(&borrow(u, "u")?.0)?))
}

/// # Safety
/// `u` and `v` are live handles and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn wcq_sha_equal(
    u: *const WcqShaElement,
    v: *const WcqShaElement,
    out: *mut bool,
) -> WcqStatus {
    guard(|| write(out, borrow(u, "u")?.0 == borrow(v, "v")?.0))
}

/// # Safety
/// `u` is a live handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn wcq_sha_to_string(
    u: *const WcqShaElement,
    out: *mut *mut c_char,
) -> WcqStatus {
    guard(|| write_string(out, format_sha(&borrow(u, "u")?.0)))
}

/// # Safety
/// `u` is a live handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn wcq_sha_to_json(
    u: *const WcqShaElement,
    out: *mut *mut c_char,
) -> WcqStatus {
    guard(|| write_string(out, json::sha(&borrow(u, "u")?.0).to_string()))
}

/// # Safety
/// `u` is a live handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn wcq_sha_coproduct_string(
    u: *const WcqShaElement,
    out: *mut *mut c_char,
) -> WcqStatus {
    guard(|| write_string(out, format_sha_tensor2(&sha_coproduct(&borrow(u, "u")?.0)?)))
}

/// # Safety
/// `u` is a live handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn wcq_sha_coproduct_json(
    u: *const WcqShaElement,
    out: *mut *mut c_char,
) -> WcqStatus {
    guard(|| {
        write_string(
            out,
            json::sha_tensor2(&sha_coproduct(&borrow(u, "u")?.0)?).to_string(),
        )
    })
}

/// Checks the Rota-Baxter identity of weight `lambda` on `trials` seeded random pairs.
///
/// # Safety
/// `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn wcq_rb_check(
    trials: usize,
    seed: u64,
    max_head: u64,
    max_len: usize,
    max_entry: u64,
    lambda: i64,
    out: *mut WcqRbCheckReport,
) -> WcqStatus {
    guard(|| {
        let bounds = TensorBounds {
            max_head,
            max_len,
            max_entry,
        };
        let r = rb_check_random(trials, seed, bounds, &lambda.into());
        write(
            out,
            WcqRbCheckReport {
                trials: r.trials,
                seed: r.seed,
                failures: r.failures.len(),
                passed: r.passed(),
            },
        )
    })
}
