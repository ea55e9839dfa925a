//! C ABI over `easycat`.
//!
//! Handles are opaque pointers owned by the caller and released with the
//! matching `*_free` function. Every fallible call returns an [`EcStatus`];
//! on failure the message is available from [`ec_last_error`] on the same
//! thread. Strings returned through `char **` are freed with [`ec_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use easycat::linalg::{brauer_check, t_matrix_capped};
use easycat::{ClassName, ClosureBudget, Error, Geometry, Membership, PartitionDiagram};

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    ColorMismatch = 5,
    UnknownName = 6,
    BudgetExceeded = 7,
    SizeOverflow = 8,
    NotSaturated = 9,
    BufferTooSmall = 10,
    Panic = 11,
}

/// Result of a membership query.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EcMembership {
    In = 0,
    NotFoundWithinBudget = 1,
}

/// A two-row colored partition diagram.
pub struct EcDiagram(PartitionDiagram);

/// A saturated category closure.
pub struct EcClosure(easycat::CategoryClosure);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let s = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(s));
}

fn status_of(e: &Error) -> EcStatus {
    match e {
        Error::MalformedPartition(_) | Error::Parse(_) => EcStatus::Parse,
        Error::ColorMismatch { .. } => EcStatus::ColorMismatch,
        Error::UnknownGeometry(_) | Error::UnknownClass(_) => EcStatus::UnknownName,
        Error::BudgetExceeded(_) => EcStatus::BudgetExceeded,
        Error::SizeOverflow { .. } => EcStatus::SizeOverflow,
        Error::NotSaturated => EcStatus::NotSaturated,
        Error::EmptyUpperRow | Error::NotAPairing(_) | Error::NoSampler(_) | Error::InvalidArgument(_) => {
            EcStatus::InvalidArgument
        }
    }
}

struct Fail(EcStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> EcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            EcStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            EcStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(EcStatus::NullPointer, "null string argument".into()));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(EcStatus::InvalidUtf8, "string argument is not UTF-8".into()))
}

unsafe fn ref_arg<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    p.as_ref()
        .ok_or_else(|| Fail(EcStatus::NullPointer, "null handle".into()))
}

unsafe fn write_out<T>(out: *mut T, v: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(EcStatus::NullPointer, "null output pointer".into()));
    }
    out.write(v);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|_| Fail(EcStatus::InvalidArgument, "interior NUL".into()))?;
    write_out(out, c.into_raw())
}

unsafe fn write_diagram(out: *mut *mut EcDiagram, d: PartitionDiagram) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(EcStatus::NullPointer, "null output pointer".into()));
    }
    out.write(Box::into_raw(Box::new(EcDiagram(d))));
    Ok(())
}

/// Message of the last failed call on this thread, or NULL. Valid until the next call.
#[no_mangle]
pub extern "C" fn ec_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Static name of a status code.
#[no_mangle]
pub extern "C" fn ec_status_name(status: EcStatus) -> *const c_char {
    let s: &'static [u8] = match status {
        EcStatus::Ok => b"ok\0",
        EcStatus::NullPointer => b"null pointer\0",
        EcStatus::InvalidUtf8 => b"invalid utf-8\0",
        EcStatus::Parse => b"parse error\0",
        EcStatus::InvalidArgument => b"invalid argument\0",
        EcStatus::ColorMismatch => b"color mismatch\0",
        EcStatus::UnknownName => b"unknown name\0",
        EcStatus::BudgetExceeded => b"budget exceeded\0",
        EcStatus::SizeOverflow => b"size overflow\0",
        EcStatus::NotSaturated => b"not saturated\0",
        EcStatus::BufferTooSmall => b"buffer too small\0",
        EcStatus::Panic => b"panic\0",
    };
    s.as_ptr().cast()
}

/// Frees a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn ec_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `"wbw|bb;u1-l2,u2-u3,l1"`-style text.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ec_diagram_parse(text: *const c_char, out: *mut *mut EcDiagram) -> EcStatus {
    guard(|| {
        let d: PartitionDiagram = str_arg(text)?.parse()?;
        write_diagram(out, d)
    })
}

/// # Safety
/// `d` must come from this library and not be freed twice. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn ec_diagram_free(d: *mut EcDiagram) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Canonical text form.
///
/// # Safety
/// `d` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ec_diagram_to_string(d: *const EcDiagram, out: *mut *mut c_char) -> EcStatus {
    guard(|| write_string(out, ref_arg(d)?.0.to_string()))
}

/// Number of legs and number of blocks.
///
/// # Safety
/// `d` must be a live handle; outputs may be NULL.
#[no_mangle]
pub unsafe extern "C" fn ec_diagram_shape(d: *const EcDiagram, points: *mut usize, blocks: *mut usize) -> EcStatus {
    guard(|| {
        let d = &ref_arg(d)?.0;
        if !points.is_null() {
            points.write(d.num_points());
        }
        if !blocks.is_null() {
            blocks.write(d.num_blocks());
        }
        Ok(())
    })
}

/// `top` stacked on `bottom`; `loops` receives the number of removed closed components.
///
/// # Safety
/// Handles must be live; `out` writable; `loops` may be NULL.
#[no_mangle]
pub unsafe extern "C" fn ec_diagram_compose(
    top: *const EcDiagram,
    bottom: *const EcDiagram,
    out: *mut *mut EcDiagram,
    loops: *mut usize,
) -> EcStatus {
    guard(|| {
        let (d, l) = ref_arg(top)?.0.compose(&ref_arg(bottom)?.0)?;
        if !loops.is_null() {
            loops.write(l);
        }
        write_diagram(out, d)
    })
}

/// Horizontal concatenation.
///
/// # Safety
/// Handles must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ec_diagram_tensor(
    left: *const EcDiagram,
    right: *const EcDiagram,
    out: *mut *mut EcDiagram,
) -> EcStatus {
    guard(|| write_diagram(out, ref_arg(left)?.0.tensor(&ref_arg(right)?.0)))
}

/// Upside-down turning, colors preserved.
///
/// # Safety
/// `d` must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ec_diagram_involute(d: *const EcDiagram, out: *mut *mut EcDiagram) -> EcStatus {
    guard(|| write_diagram(out, ref_arg(d)?.0.involute()))
}

/// Moves the leftmost upper leg to the leftmost lower position, inverting its color.
///
/// # Safety
/// `d` must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ec_diagram_rotate(d: *const EcDiagram, out: *mut *mut EcDiagram) -> EcStatus {
    guard(|| write_diagram(out, ref_arg(d)?.0.rotate()?))
}

/// Whether `d` satisfies the predicate of a named class (`P2`, `calNC2`, `P2star`, ...).
///
/// # Safety
/// `d` live, `class` NUL-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ec_diagram_in_class(d: *const EcDiagram, class: *const c_char, out: *mut bool) -> EcStatus {
    guard(|| {
        let class: ClassName = str_arg(class)?.parse()?;
        let v = class.contains(&ref_arg(d)?.0)?;
        write_out(out, v)
    })
}

/// Dense `T_π` at dimension `n`, row-major into `buf` (entries are 0 or 1).
///
/// `rows` and `cols` always receive the shape; if `buf` is NULL or `len` is
/// too small the call returns `BufferTooSmall` without writing entries.
///
/// # Safety
/// `d` live; `buf` must hold `len` bytes when non-NULL; `rows`, `cols` writable.
#[no_mangle]
pub unsafe extern "C" fn ec_diagram_t_matrix(
    d: *const EcDiagram,
    n: usize,
    buf: *mut u8,
    len: usize,
    rows: *mut usize,
    cols: *mut usize,
) -> EcStatus {
    guard(|| {
        let d = &ref_arg(d)?.0;
        let k = d.upper().len() as u32;
        let l = d.lower().len() as u32;
        let size = |e: u32| {
            n.checked_pow(e)
                .ok_or_else(|| Fail(EcStatus::SizeOverflow, format!("{n}^{e} overflows")))
        };
        let (r, c) = (size(l)?, size(k)?);
        write_out(rows, r)?;
        write_out(cols, c)?;
        let total = r
            .checked_mul(c)
            .ok_or_else(|| Fail(EcStatus::SizeOverflow, "matrix too large".into()))?;
        if buf.is_null() || len < total {
            return Err(Fail(EcStatus::BufferTooSmall, format!("need {total} bytes")));
        }
        let m = t_matrix_capped(d, n, total.max(1))?;
        let out = std::slice::from_raw_parts_mut(buf, total);
        for (slot, v) in out.iter_mut().zip(m.data()) {
            *slot = u8::from(!v.is_zero());
        }
        Ok(())
    })
}

/// Closes a named geometry's generators up to `max_points` legs.
///
/// # Safety
/// `geometry` NUL-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ec_closure_new(geometry: *const c_char, max_points: usize, out: *mut *mut EcClosure) -> EcStatus {
    guard(|| {
        let g: Geometry = str_arg(geometry)?.parse()?;
        let c = g.spec().close(ClosureBudget::new(max_points, easycat::closure::DEFAULT_MAX_ROUNDS)?)?;
        c.ensure_saturated()?;
        write_out(out, Box::into_raw(Box::new(EcClosure(c))))
    })
}

/// # Safety
/// `c` must come from this library and not be freed twice. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn ec_closure_free(c: *mut EcClosure) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Number of diagrams in the closure.
///
/// # Safety
/// `c` live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ec_closure_size(c: *const EcClosure, out: *mut usize) -> EcStatus {
    guard(|| write_out(out, ref_arg(c)?.0.len()))
}

/// # Safety
/// Handles live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ec_closure_contains(
    c: *const EcClosure,
    d: *const EcDiagram,
    out: *mut EcMembership,
) -> EcStatus {
    guard(|| {
        let m = match ref_arg(c)?.0.contains(&ref_arg(d)?.0)? {
            Membership::In => EcMembership::In,
            _ => EcMembership::NotFoundWithinBudget,
        };
        write_out(out, m)
    })
}

/// Closure table as JSON.
///
/// # Safety
/// `c` live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ec_closure_to_json(c: *const EcClosure, out: *mut *mut c_char) -> EcStatus {
    guard(|| {
        let json = serde_json::to_string(&ref_arg(c)?.0.to_json())
            .map_err(|e| Fail(EcStatus::InvalidArgument, e.to_string()))?;
        write_string(out, json)
    })
}

/// Brauer comparison report as JSON.
///
/// # Safety
/// `geometry` NUL-terminated; `seeds` holds `num_seeds` values; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ec_brauer_json(
    geometry: *const c_char,
    n: usize,
    max_points: usize,
    seeds: *const u64,
    num_seeds: usize,
    out: *mut *mut c_char,
) -> EcStatus {
    guard(|| {
        let g: Geometry = str_arg(geometry)?.parse()?;
        if seeds.is_null() {
            return Err(Fail(EcStatus::NullPointer, "null seed array".into()));
        }
        let seeds = std::slice::from_raw_parts(seeds, num_seeds);
        let budget = ClosureBudget::new(max_points, easycat::closure::DEFAULT_MAX_ROUNDS)?;
        let r = brauer_check(&g.spec(), n, budget, seeds)?;
        let json = serde_json::to_string(&r).map_err(|e| Fail(EcStatus::InvalidArgument, e.to_string()))?;
        write_string(out, json)
    })
}
