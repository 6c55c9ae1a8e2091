//! C ABI over the bsts library: opaque configuration handles, status
//! codes, and allocation-returning accessors. Every entry point is
//! panic-safe; failure details are kept per thread and read back with
//! [`bsts_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use bsts::canon::{canonical_form, raw_certificate};
use bsts::document::{parse_document_full, serialize_configuration};
use bsts::dot::emit_veldkamp_dot;
use bsts::families::{
    desargues, dual_veronesian, quasi_grassmannian, tetrahedra, veronesian,
};
use bsts::free_graphs::find_free_complete_graphs;
use bsts::hyperplanes::{enumerate_hyperplanes, labeled_veldkamp, veldkamp_space};
use bsts::incidence::{validate_psts, Configuration};

/// Status code returned by every fallible entry point.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BstsStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    ValidationError = 4,
    BudgetExceeded = 5,
    NotBinomial = 6,
    InternalError = 7,
}

/// An opaque, immutable configuration handle.
pub struct BstsConfiguration {
    inner: Configuration,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let text = CString::new(message.replace('\0', " "))
        .unwrap_or_else(|_| CString::new("invalid error text").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(text));
}

fn status_of(e: &bsts::Error) -> BstsStatus {
    match e {
        bsts::Error::Parse { .. } => BstsStatus::ParseError,
        bsts::Error::SearchBudgetExceeded(_) => BstsStatus::BudgetExceeded,
        _ => BstsStatus::ValidationError,
    }
}

fn guarded<F: FnOnce() -> BstsStatus>(body: F) -> BstsStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic".to_string());
            BstsStatus::InternalError
        }
    }
}

/// # Safety
/// `ptr` must be null or a valid NUL-terminated string.
unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, BstsStatus> {
    if ptr.is_null() {
        return Err(BstsStatus::NullArgument);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_error("argument is not valid UTF-8".to_string());
        BstsStatus::InvalidUtf8
    })
}

fn hand_out(cfg: Configuration, out: *mut *mut BstsConfiguration) -> BstsStatus {
    let boxed = Box::new(BstsConfiguration { inner: cfg });
    unsafe { *out = Box::into_raw(boxed) };
    BstsStatus::Ok
}

fn hand_out_string(text: String, out: *mut *mut c_char) -> BstsStatus {
    match CString::new(text) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            BstsStatus::Ok
        }
        Err(_) => {
            set_error("output contained an interior NUL byte".to_string());
            BstsStatus::InternalError
        }
    }
}

/// The most recent failure detail on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn bsts_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map(|s| s.as_ptr())
            .unwrap_or(ptr::null())
    })
}

/// A static description of a status code.
#[no_mangle]
pub extern "C" fn bsts_status_message(status: BstsStatus) -> *const c_char {
    let text: &'static [u8] = match status {
        BstsStatus::Ok => b"ok\0",
        BstsStatus::NullArgument => b"null argument\0",
        BstsStatus::InvalidUtf8 => b"invalid utf-8\0",
        BstsStatus::ParseError => b"parse error\0",
        BstsStatus::ValidationError => b"validation error\0",
        BstsStatus::BudgetExceeded => b"search budget exceeded\0",
        BstsStatus::NotBinomial => b"not a binomial configuration\0",
        BstsStatus::InternalError => b"internal error\0",
    };
    text.as_ptr() as *const c_char
}

/// Parses a configuration document (JSON text) into a handle.
///
/// # Safety
/// `json` must be a valid NUL-terminated string; `out` must be a valid
/// pointer. On success the caller owns the handle and must release it
/// with [`bsts_configuration_free`].
#[no_mangle]
pub unsafe extern "C" fn bsts_configuration_parse(
    json: *const c_char,
    out: *mut *mut BstsConfiguration,
) -> BstsStatus {
    if out.is_null() {
        return BstsStatus::NullArgument;
    }
    guarded(|| {
        let text = match read_str(json) {
            Ok(t) => t,
            Err(status) => return status,
        };
        match parse_document_full(text) {
            Ok((_, cfg)) => hand_out(cfg, out),
            Err(e) => {
                set_error(e.to_string());
                status_of(&e)
            }
        }
    })
}

/// Builds a named family: `desargues`, `quasi-grassmannian`,
/// `dual-veronesian` (parameter n), `veronesian` (parameter k), or
/// `tetrahedra` (parameter m).
///
/// # Safety
/// `family` must be a valid NUL-terminated string; `out` must be a valid
/// pointer. On success the caller owns the handle.
#[no_mangle]
pub unsafe extern "C" fn bsts_configuration_family(
    family: *const c_char,
    parameter: u32,
    out: *mut *mut BstsConfiguration,
) -> BstsStatus {
    if out.is_null() {
        return BstsStatus::NullArgument;
    }
    guarded(|| {
        let name = match read_str(family) {
            Ok(t) => t,
            Err(status) => return status,
        };
        let built = match name {
            "desargues" => desargues(parameter),
            "quasi-grassmannian" => quasi_grassmannian(parameter),
            "veronesian" => veronesian(parameter),
            "dual-veronesian" => dual_veronesian(parameter),
            "tetrahedra" => tetrahedra(parameter),
            other => {
                set_error(format!("unknown family {other:?}"));
                return BstsStatus::ValidationError;
            }
        };
        match built {
            Ok(cfg) => hand_out(cfg, out),
            Err(e) => {
                set_error(e.to_string());
                status_of(&e)
            }
        }
    })
}

/// Releases a handle returned by this library. Null is a no-op.
///
/// # Safety
/// `cfg` must be null or a handle obtained from this library that has not
/// been freed yet.
#[no_mangle]
pub unsafe extern "C" fn bsts_configuration_free(cfg: *mut BstsConfiguration) {
    if !cfg.is_null() {
        drop(Box::from_raw(cfg));
    }
}

/// Number of points; 0 for a null handle.
///
/// # Safety
/// `cfg` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bsts_configuration_points(cfg: *const BstsConfiguration) -> u32 {
    cfg.as_ref().map(|c| c.inner.points() as u32).unwrap_or(0)
}

/// Number of lines; 0 for a null handle.
///
/// # Safety
/// `cfg` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bsts_configuration_lines(cfg: *const BstsConfiguration) -> u32 {
    cfg.as_ref()
        .map(|c| c.inner.lines().len() as u32)
        .unwrap_or(0)
}

/// Whether the configuration satisfies the partial-Steiner axioms.
///
/// # Safety
/// `cfg` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bsts_configuration_is_psts(
    cfg: *const BstsConfiguration,
    out: *mut bool,
) -> BstsStatus {
    let (Some(cfg), false) = (cfg.as_ref(), out.is_null()) else {
        return BstsStatus::NullArgument;
    };
    guarded(|| {
        *out = validate_psts(&cfg.inner).is_psts;
        BstsStatus::Ok
    })
}

/// The order n of the binomial shape (C(n,2) points, C(n,3) lines), when
/// the configuration has one.
///
/// # Safety
/// `cfg` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bsts_configuration_binomial_order(
    cfg: *const BstsConfiguration,
    out: *mut u32,
) -> BstsStatus {
    let (Some(cfg), false) = (cfg.as_ref(), out.is_null()) else {
        return BstsStatus::NullArgument;
    };
    guarded(|| match validate_psts(&cfg.inner).binomial {
        Some(b) => {
            *out = b.order();
            BstsStatus::Ok
        }
        None => {
            set_error("configuration is not binomial".to_string());
            BstsStatus::NotBinomial
        }
    })
}

/// Serializes the configuration as a canonical document under `name`.
/// The returned string is owned by the caller; release it with
/// [`bsts_string_free`].
///
/// # Safety
/// `cfg` must be a live handle; `name` a valid string; `out` a valid
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn bsts_configuration_serialize(
    cfg: *const BstsConfiguration,
    name: *const c_char,
    out: *mut *mut c_char,
) -> BstsStatus {
    let (Some(cfg), false) = (cfg.as_ref(), out.is_null()) else {
        return BstsStatus::NullArgument;
    };
    guarded(|| {
        let name = match read_str(name) {
            Ok(t) => t,
            Err(status) => return status,
        };
        hand_out_string(serialize_configuration(name, &cfg.inner, None), out)
    })
}

/// Counts all hyperplanes.
///
/// # Safety
/// `cfg` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bsts_hyperplane_count(
    cfg: *const BstsConfiguration,
    out: *mut u64,
) -> BstsStatus {
    let (Some(cfg), false) = (cfg.as_ref(), out.is_null()) else {
        return BstsStatus::NullArgument;
    };
    guarded(|| match enumerate_hyperplanes(&cfg.inner) {
        Ok(hs) => {
            *out = hs.len() as u64;
            BstsStatus::Ok
        }
        Err(e) => {
            set_error(e.to_string());
            status_of(&e)
        }
    })
}

/// The projective dimension of the Veldkamp space (-1 when empty).
///
/// # Safety
/// `cfg` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bsts_veldkamp_dimension(
    cfg: *const BstsConfiguration,
    out: *mut i32,
) -> BstsStatus {
    let (Some(cfg), false) = (cfg.as_ref(), out.is_null()) else {
        return BstsStatus::NullArgument;
    };
    guarded(|| match veldkamp_space(&cfg.inner) {
        Ok(vs) => {
            *out = vs.dimension;
            BstsStatus::Ok
        }
        Err(e) => {
            set_error(e.to_string());
            status_of(&e)
        }
    })
}

/// Counts the freely contained complete graphs with `size` vertices.
///
/// # Safety
/// `cfg` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bsts_free_graph_count(
    cfg: *const BstsConfiguration,
    size: u32,
    out: *mut u64,
) -> BstsStatus {
    let (Some(cfg), false) = (cfg.as_ref(), out.is_null()) else {
        return BstsStatus::NullArgument;
    };
    guarded(|| match find_free_complete_graphs(&cfg.inner, size as usize) {
        Ok(found) => {
            *out = found.len() as u64;
            BstsStatus::Ok
        }
        Err(e) => {
            set_error(e.to_string());
            status_of(&e)
        }
    })
}

/// The canonical certificate as a hex string (caller-owned).
///
/// # Safety
/// `cfg` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bsts_certificate_hex(
    cfg: *const BstsConfiguration,
    out: *mut *mut c_char,
) -> BstsStatus {
    let (Some(cfg), false) = (cfg.as_ref(), out.is_null()) else {
        return BstsStatus::NullArgument;
    };
    guarded(|| match canonical_form(&cfg.inner) {
        Ok(sig) => hand_out_string(sig.certificate_hex(), out),
        Err(e) => {
            set_error(e.to_string());
            status_of(&e)
        }
    })
}

/// Certificate equality of two configurations.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bsts_is_isomorphic(
    a: *const BstsConfiguration,
    b: *const BstsConfiguration,
    out: *mut bool,
) -> BstsStatus {
    let (Some(a), Some(b), false) = (a.as_ref(), b.as_ref(), out.is_null()) else {
        return BstsStatus::NullArgument;
    };
    guarded(|| {
        *out = raw_certificate(&a.inner) == raw_certificate(&b.inner);
        BstsStatus::Ok
    })
}

/// The Veldkamp space rendered as DOT text (caller-owned string). With
/// `labeled` set, nodes carry the induced-geometry tags.
///
/// # Safety
/// `cfg` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bsts_veldkamp_dot(
    cfg: *const BstsConfiguration,
    labeled: bool,
    out: *mut *mut c_char,
) -> BstsStatus {
    let (Some(cfg), false) = (cfg.as_ref(), out.is_null()) else {
        return BstsStatus::NullArgument;
    };
    guarded(|| {
        let text = if labeled {
            match labeled_veldkamp(&cfg.inner) {
                Ok((vs, tags)) => emit_veldkamp_dot(&vs, Some(&tags)),
                Err(e) => {
                    set_error(e.to_string());
                    return status_of(&e);
                }
            }
        } else {
            match veldkamp_space(&cfg.inner) {
                Ok(vs) => emit_veldkamp_dot(&vs, None),
                Err(e) => {
                    set_error(e.to_string());
                    return status_of(&e);
                }
            }
        };
        hand_out_string(text, out)
    })
}

/// Releases a string returned by this library. Null is a no-op.
///
/// # Safety
/// `s` must be null or a string obtained from this library that has not
/// been freed yet.
#[no_mangle]
pub unsafe extern "C" fn bsts_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
