//! C ABI over `selfdual-core`.
//!
//! Every function returns an [`SdStatus`]. On failure a message is kept per
//! thread and can be read with [`sd_last_error`]. Strings are written into
//! caller buffers as NUL-terminated UTF-8; `needed` always receives the
//! required size including the terminator, so a call with a null buffer and
//! zero length queries the size.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use selfdual_core::codes::{self, CodeSpec};
use selfdual_core::{cli, oracle, solver, Error, FieldSpec};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SdStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    CapExceeded = 3,
    Mismatch = 4,
    BufferTooSmall = 5,
    OutOfRange = 6,
    Panic = 7,
}

/// A finite field F_{2^m}.
pub struct SdField(FieldSpec);

/// A materialized list of codes.
pub struct SdCodeList(Vec<CodeSpec>);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn fail(status: SdStatus, msg: impl Into<String>) -> SdStatus {
    set_error(msg);
    status
}

fn from_error(e: Error) -> SdStatus {
    let status = match e {
        Error::CapExceeded { .. } | Error::SizeOverflow { .. } => SdStatus::CapExceeded,
        Error::CardinalityMismatch { .. } => SdStatus::Mismatch,
        _ => SdStatus::InvalidArgument,
    };
    fail(status, e.to_string())
}

fn guard(f: impl FnOnce() -> SdStatus) -> SdStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => {
            if status == SdStatus::Ok {
                set_error("");
            }
            status
        }
        Err(_) => fail(SdStatus::Panic, "internal panic"),
    }
}

/// Copies `s` into `buf`; `needed` gets `s.len() + 1`.
unsafe fn write_str(s: &str, buf: *mut c_char, len: usize, needed: *mut usize) -> SdStatus {
    if !needed.is_null() {
        *needed = s.len() + 1;
    }
    if buf.is_null() || len < s.len() + 1 {
        return fail(SdStatus::BufferTooSmall, format!("buffer needs {} bytes", s.len() + 1));
    }
    ptr::copy_nonoverlapping(s.as_ptr(), buf.cast::<u8>(), s.len());
    *buf.add(s.len()) = 0;
    SdStatus::Ok
}

/// Message for the last failed call on this thread, or an empty string.
/// Valid until the next call into this library from the same thread.
#[no_mangle]
pub extern "C" fn sd_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Creates F_{2^m}. `modulus` 0 selects the default irreducible polynomial.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sd_field_new(m: u32, modulus: u32, out: *mut *mut SdField) -> SdStatus {
    guard(|| {
        if out.is_null() {
            return fail(SdStatus::NullPointer, "out is null");
        }
        let field = if modulus == 0 { FieldSpec::with_default_modulus(m) } else { FieldSpec::new(m, modulus) };
        match field {
            Ok(f) => {
                *out = Box::into_raw(Box::new(SdField(f)));
                SdStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// # Safety
/// `field` must come from [`sd_field_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sd_field_free(field: *mut SdField) {
    if !field.is_null() {
        drop(Box::from_raw(field));
    }
}

/// # Safety
/// `field` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn sd_field_modulus(field: *const SdField, out: *mut u32) -> SdStatus {
    guard(|| {
        if field.is_null() || out.is_null() {
            return fail(SdStatus::NullPointer, "null argument");
        }
        *out = (*field).0.modulus();
        SdStatus::Ok
    })
}

unsafe fn write_count(
    count: Result<num_bigint::BigUint, Error>,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> SdStatus {
    match count {
        Ok(n) => write_str(&n.to_string(), buf, len, needed),
        Err(e) => from_error(e),
    }
}

fn checked(s: u32, m: u32) -> Result<(), Error> {
    if !(1..=codes::MAX_S).contains(&s) {
        return Err(Error::InvalidParameters(format!("s = {s} outside 1..={}", codes::MAX_S)));
    }
    FieldSpec::with_default_modulus(m).map(|_| ())
}

/// Number of self-dual cyclic codes of length 2^s, as a decimal string.
///
/// # Safety
/// `buf` must hold `len` bytes (or be null); `needed` may be null.
#[no_mangle]
pub unsafe extern "C" fn sd_count_selfdual(
    s: u32,
    m: u32,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> SdStatus {
    guard(|| write_count(checked(s, m).map(|()| codes::count_selfdual(s, m)), buf, len, needed))
}

/// Number of cyclic codes of length 2^s, as a decimal string.
///
/// # Safety
/// As for [`sd_count_selfdual`].
#[no_mangle]
pub unsafe extern "C" fn sd_count_all_cyclic(
    s: u32,
    m: u32,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> SdStatus {
    guard(|| write_count(checked(s, m).map(|()| codes::count_all_cyclic(s, m)), buf, len, needed))
}

/// Lists the self-dual codes of length 2^s in canonical order. Fails with
/// `CapExceeded` if there are more than `cap` (0 means the default cap).
///
/// # Safety
/// `field` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn sd_enumerate_selfdual(
    field: *const SdField,
    s: u32,
    cap: u64,
    out: *mut *mut SdCodeList,
) -> SdStatus {
    guard(|| {
        if field.is_null() || out.is_null() {
            return fail(SdStatus::NullPointer, "null argument");
        }
        let cap = if cap == 0 { oracle::configured_cap() } else { cap };
        match codes::enumerate_selfdual(s, &(*field).0, Some(cap)) {
            Ok(stream) => {
                *out = Box::into_raw(Box::new(SdCodeList(stream.collect())));
                SdStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// # Safety
/// `list` must come from [`sd_enumerate_selfdual`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sd_code_list_free(list: *mut SdCodeList) {
    if !list.is_null() {
        drop(Box::from_raw(list));
    }
}

/// # Safety
/// `list` must be a valid pointer or null.
#[no_mangle]
pub unsafe extern "C" fn sd_code_list_len(list: *const SdCodeList) -> usize {
    if list.is_null() {
        0
    } else {
        (*list).0.len()
    }
}

unsafe fn code_at<'a>(list: *const SdCodeList, index: usize) -> Result<&'a CodeSpec, SdStatus> {
    if list.is_null() {
        return Err(fail(SdStatus::NullPointer, "list is null"));
    }
    let list = &*list;
    list.0.get(index).ok_or_else(|| fail(SdStatus::OutOfRange, format!("index {index} out of range")))
}

/// The JSON record of code `index`, as printed by `selfdual enumerate`.
///
/// # Safety
/// `list` must be valid; `buf` must hold `len` bytes (or be null).
#[no_mangle]
pub unsafe extern "C" fn sd_code_list_json(
    list: *const SdCodeList,
    index: usize,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> SdStatus {
    guard(|| match code_at(list, index) {
        Ok(c) => write_str(&cli::record_json(c), buf, len, needed),
        Err(status) => status,
    })
}

/// Checks code `index` for self-duality by brute force from its generators.
///
/// # Safety
/// `list` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn sd_code_list_is_self_dual(list: *const SdCodeList, index: usize, out: *mut bool) -> SdStatus {
    guard(|| {
        if out.is_null() {
            return fail(SdStatus::NullPointer, "out is null");
        }
        match code_at(list, index) {
            Ok(c) => {
                *out = oracle::is_self_dual(c);
                SdStatus::Ok
            }
            Err(status) => status,
        }
    })
}

/// The parametrization of S_l^[delta], e.g. "(0, b1, b1, b3)".
///
/// # Safety
/// `buf` must hold `len` bytes (or be null); `needed` may be null.
#[no_mangle]
pub unsafe extern "C" fn sd_space_describe(
    l: usize,
    delta: usize,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> SdStatus {
    guard(|| match solver::solve_recursive(l).and_then(|s| s.truncate(delta)) {
        Ok(space) => write_str(&space.to_string(), buf, len, needed),
        Err(e) => from_error(e),
    })
}
