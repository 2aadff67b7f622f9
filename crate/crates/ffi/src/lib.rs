//! C ABI over `gqt-core`.
//!
//! Fields and kernel geometries are opaque handles created by `*_new` /
//! `*_enumerate` and released with the matching `*_free`. Field elements
//! cross the boundary as their index (Σ c_i p^i). Every fallible call
//! returns a [`GqtStatus`]; the message of the last failure on the calling
//! thread is available from [`gqt_last_error_message`]. Strings returned by
//! the library must be released with [`gqt_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;

use gqt_core::galois::{FieldElement, FieldSpec};
use gqt_core::hermitian::standard_form;
use gqt_core::kernelgeo::{enumerate_kernel, verify_one_or_all, EnumerationOptions, KernelCatalog, KernelGeometry};
use gqt_core::protocols::{sdc_decode, sdc_encode, teleport, teleport_char2, SdcMessage};
use gqt_core::Error;

/// Status codes. Zero is success; domain errors mirror the core error kinds.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GqtStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    BufferTooSmall = 3,
    OutOfRange = 4,
    Panic = 5,
    NotPrime = 10,
    Reducible = 11,
    DegreeMismatch = 12,
    FieldTooLarge = 13,
    InvalidElement = 14,
    DivisionByZero = 15,
    FieldMismatch = 16,
    NoInvolution = 17,
    DimensionMismatch = 20,
    NotSquare = 21,
    NotHermitian = 22,
    DegenerateForm = 23,
    Singular = 24,
    ZeroVector = 25,
    DependentBasis = 26,
    TooLarge = 30,
    NotKernelPoint = 31,
    SelfOrthogonalInput = 32,
    NotUnique = 33,
    NotUnitary = 34,
    NotInSpan = 40,
    Char2NotSupported = 41,
    NotChar2 = 42,
    ZeroState = 43,
    Char2MessageUnsupported = 44,
    NotBellRay = 45,
    ExhaustedSearch = 50,
    SelfOrthogonalState = 51,
    DegenerateSpan = 52,
    MalformedBitstream = 53,
    InvalidArgument = 60,
}

impl From<&Error> for GqtStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::NotPrime(_) => GqtStatus::NotPrime,
            Error::Reducible(_) => GqtStatus::Reducible,
            Error::DegreeMismatch { .. } => GqtStatus::DegreeMismatch,
            Error::FieldTooLarge { .. } => GqtStatus::FieldTooLarge,
            Error::InvalidElement(_) => GqtStatus::InvalidElement,
            Error::DivisionByZero => GqtStatus::DivisionByZero,
            Error::FieldMismatch => GqtStatus::FieldMismatch,
            Error::NoInvolution => GqtStatus::NoInvolution,
            Error::DimensionMismatch { .. } => GqtStatus::DimensionMismatch,
            Error::NotSquare { .. } => GqtStatus::NotSquare,
            Error::NotHermitian => GqtStatus::NotHermitian,
            Error::DegenerateForm => GqtStatus::DegenerateForm,
            Error::Singular => GqtStatus::Singular,
            Error::ZeroVector => GqtStatus::ZeroVector,
            Error::DependentBasis => GqtStatus::DependentBasis,
            Error::TooLarge { .. } => GqtStatus::TooLarge,
            Error::NotKernelPoint => GqtStatus::NotKernelPoint,
            Error::SelfOrthogonalInput => GqtStatus::SelfOrthogonalInput,
            Error::NotUnique { .. } => GqtStatus::NotUnique,
            Error::NotUnitary => GqtStatus::NotUnitary,
            Error::NotInSpan => GqtStatus::NotInSpan,
            Error::Char2NotSupported => GqtStatus::Char2NotSupported,
            Error::NotChar2 => GqtStatus::NotChar2,
            Error::ZeroState => GqtStatus::ZeroState,
            Error::Char2MessageUnsupported(_) => GqtStatus::Char2MessageUnsupported,
            Error::NotBellRay => GqtStatus::NotBellRay,
            Error::ExhaustedSearch(_) => GqtStatus::ExhaustedSearch,
            Error::SelfOrthogonalState => GqtStatus::SelfOrthogonalState,
            Error::DegenerateSpan { .. } => GqtStatus::DegenerateSpan,
            Error::MalformedBitstream(_) => GqtStatus::MalformedBitstream,
            Error::InvalidArgument(_) => GqtStatus::InvalidArgument,
        }
    }
}

/// Binary field operations for [`gqt_field_binop`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GqtBinOp {
    Add = 0,
    Sub = 1,
    Mul = 2,
    Div = 3,
}

/// Opaque finite field handle.
pub struct GqtField {
    spec: Arc<FieldSpec>,
}

/// Opaque enumerated quantum kernel handle.
pub struct GqtKernel {
    geom: KernelGeometry,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: GqtStatus, msg: impl Into<String>) -> GqtStatus {
    set_error(msg.into());
    status
}

fn domain(e: Error) -> GqtStatus {
    fail(GqtStatus::from(&e), e.to_string())
}

fn guarded(f: impl FnOnce() -> GqtStatus) -> GqtStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(GqtStatus::Panic, "internal panic"),
    }
}

macro_rules! try_status {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(e) => return domain(e),
        }
    };
}

macro_rules! deref {
    ($ptr:expr) => {
        match unsafe { $ptr.as_ref() } {
            Some(v) => v,
            None => return fail(GqtStatus::NullPointer, concat!("null pointer: ", stringify!($ptr))),
        }
    };
}

fn write_out<T>(out: *mut T, value: T) -> GqtStatus {
    if out.is_null() {
        return fail(GqtStatus::NullPointer, "null output pointer");
    }
    unsafe { out.write(value) };
    GqtStatus::Ok
}

fn element(f: &GqtField, index: u32) -> Result<FieldElement, GqtStatus> {
    f.spec
        .element(index)
        .map_err(|_| fail(GqtStatus::OutOfRange, format!("element index {index} >= field order {}", f.spec.order())))
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map(CString::into_raw).unwrap_or(std::ptr::null_mut())
}

/// Copies the last error message of this thread into `buf` (NUL
/// terminated, truncated to `len`). Returns the full message length, or 0
/// when there is no error.
///
/// # Safety
/// `buf` must be null or valid for `len` bytes.
#[no_mangle]
pub unsafe extern "C" fn gqt_last_error_message(buf: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|e| {
        let e = e.borrow();
        let Some(msg) = e.as_ref() else { return 0 };
        let bytes = msg.as_bytes();
        if !buf.is_null() && len > 0 {
            let n = bytes.len().min(len - 1);
            std::ptr::copy_nonoverlapping(bytes.as_ptr() as *const c_char, buf, n);
            *buf.add(n) = 0;
        }
        bytes.len()
    })
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be null or a pointer previously returned by this library.
#[no_mangle]
pub unsafe extern "C" fn gqt_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds GF(p^k) with the default modulus.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gqt_field_new(p: u64, k: u32, out: *mut *mut GqtField) -> GqtStatus {
    guarded(|| {
        let spec = try_status!(gqt_core::galois::build_field(p, k, None));
        write_out(out, Box::into_raw(Box::new(GqtField { spec })))
    })
}

/// # Safety
/// `f` must be null or a handle from [`gqt_field_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn gqt_field_free(f: *mut GqtField) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// Number of elements, or 0 for a null handle.
///
/// # Safety
/// `f` must be null or a live field handle.
#[no_mangle]
pub unsafe extern "C" fn gqt_field_order(f: *const GqtField) -> u32 {
    f.as_ref().map_or(0, |f| f.spec.order())
}

/// Writes q for GF(q^2); fails with NoInvolution for odd k.
///
/// # Safety
/// `f` must be a live field handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gqt_field_q(f: *const GqtField, out: *mut u32) -> GqtStatus {
    guarded(|| {
        let f = deref!(f);
        match f.spec.q() {
            Some(q) => write_out(out, q),
            None => domain(Error::NoInvolution),
        }
    })
}

/// # Safety
/// `f` must be a live field handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gqt_field_binop(f: *const GqtField, op: GqtBinOp, a: u32, b: u32, out: *mut u32) -> GqtStatus {
    guarded(|| {
        let f = deref!(f);
        let (x, y) = match (element(f, a), element(f, b)) {
            (Ok(x), Ok(y)) => (x, y),
            (Err(s), _) | (_, Err(s)) => return s,
        };
        let r = match op {
            GqtBinOp::Add => x.try_add(&y),
            GqtBinOp::Sub => x.try_sub(&y),
            GqtBinOp::Mul => x.try_mul(&y),
            GqtBinOp::Div => x.try_div(&y),
        };
        write_out(out, try_status!(r).index())
    })
}

/// # Safety
/// `f` must be a live field handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gqt_field_inv(f: *const GqtField, a: u32, out: *mut u32) -> GqtStatus {
    guarded(|| {
        let f = deref!(f);
        let x = match element(f, a) {
            Ok(x) => x,
            Err(s) => return s,
        };
        write_out(out, try_status!(x.inv()).index())
    })
}

/// a^e; negative exponents invert first.
///
/// # Safety
/// `f` must be a live field handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gqt_field_pow(f: *const GqtField, a: u32, e: i64, out: *mut u32) -> GqtStatus {
    guarded(|| {
        let f = deref!(f);
        let x = match element(f, a) {
            Ok(x) => x,
            Err(s) => return s,
        };
        write_out(out, try_status!(x.pow(e)).index())
    })
}

/// The involution x -> x^q.
///
/// # Safety
/// `f` must be a live field handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gqt_field_conj(f: *const GqtField, a: u32, out: *mut u32) -> GqtStatus {
    guarded(|| {
        let f = deref!(f);
        let x = match element(f, a) {
            Ok(x) => x,
            Err(s) => return s,
        };
        write_out(out, try_status!(x.frobenius_involution()).index())
    })
}

/// x^(q+1).
///
/// # Safety
/// `f` must be a live field handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gqt_field_norm(f: *const GqtField, a: u32, out: *mut u32) -> GqtStatus {
    guarded(|| {
        let f = deref!(f);
        let x = match element(f, a) {
            Ok(x) => x,
            Err(s) => return s,
        };
        write_out(out, try_status!(x.norm()).index())
    })
}

/// Parses "t+1", "2" or "[1,1]" into an element index.
///
/// # Safety
/// `f` must be a live field handle, `text` a NUL-terminated string and
/// `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gqt_field_parse(f: *const GqtField, text: *const c_char, out: *mut u32) -> GqtStatus {
    guarded(|| {
        let f = deref!(f);
        if text.is_null() {
            return fail(GqtStatus::NullPointer, "null text");
        }
        let Ok(s) = CStr::from_ptr(text).to_str() else {
            return fail(GqtStatus::InvalidUtf8, "text is not UTF-8");
        };
        write_out(out, try_status!(f.spec.parse_element(s)).index())
    })
}

/// Polynomial text of an element, e.g. "t+1". Null on failure.
///
/// # Safety
/// `f` must be a live field handle. Free the result with
/// [`gqt_string_free`].
#[no_mangle]
pub unsafe extern "C" fn gqt_field_format(f: *const GqtField, a: u32) -> *mut c_char {
    let Some(f) = f.as_ref() else {
        set_error("null pointer: f".into());
        return std::ptr::null_mut();
    };
    match element(f, a) {
        Ok(x) => into_c_string(x.to_string()),
        Err(_) => std::ptr::null_mut(),
    }
}

/// Enumerates the kernel of the standard form in dimension `dim`.
///
/// # Safety
/// `f` must be a live field handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gqt_kernel_enumerate(
    f: *const GqtField,
    dim: usize,
    guard_override: bool,
    out: *mut *mut GqtKernel,
) -> GqtStatus {
    guarded(|| {
        let f = deref!(f);
        let form = try_status!(standard_form(&f.spec, dim));
        let opts = EnumerationOptions { guard_override, parallel: false };
        let geom = try_status!(enumerate_kernel(&form, opts));
        write_out(out, Box::into_raw(Box::new(GqtKernel { geom })))
    })
}

/// # Safety
/// `k` must be null or a handle from [`gqt_kernel_enumerate`] not yet
/// freed.
#[no_mangle]
pub unsafe extern "C" fn gqt_kernel_free(k: *mut GqtKernel) {
    if !k.is_null() {
        drop(Box::from_raw(k));
    }
}

/// # Safety
/// `k` must be null or a live kernel handle.
#[no_mangle]
pub unsafe extern "C" fn gqt_kernel_point_count(k: *const GqtKernel) -> usize {
    k.as_ref().map_or(0, |k| k.geom.points().len())
}

/// # Safety
/// `k` must be null or a live kernel handle.
#[no_mangle]
pub unsafe extern "C" fn gqt_kernel_line_count(k: *const GqtKernel) -> usize {
    k.as_ref().map_or(0, |k| k.geom.lines().len())
}

/// Normalized coordinates of point `i` as element indices.
///
/// # Safety
/// `k` must be a live kernel handle and `out` valid for `len` writes.
#[no_mangle]
pub unsafe extern "C" fn gqt_kernel_point(k: *const GqtKernel, i: usize, out: *mut u32, len: usize) -> GqtStatus {
    guarded(|| {
        let k = deref!(k);
        if i >= k.geom.points().len() {
            return fail(GqtStatus::OutOfRange, format!("no point with index {i}"));
        }
        let coords = k.geom.point(i).coords().entries();
        copy_out(coords.iter().map(FieldElement::index), coords.len(), out, len)
    })
}

/// Sorted point indices of line `i`.
///
/// # Safety
/// `k` must be a live kernel handle and `out` valid for `len` writes.
#[no_mangle]
pub unsafe extern "C" fn gqt_kernel_line(k: *const GqtKernel, i: usize, out: *mut usize, len: usize) -> GqtStatus {
    guarded(|| {
        let k = deref!(k);
        if i >= k.geom.lines().len() {
            return fail(GqtStatus::OutOfRange, format!("no line with index {i}"));
        }
        let line = k.geom.line(i);
        copy_out(line.iter().copied(), line.len(), out, len)
    })
}

unsafe fn copy_out<T>(items: impl Iterator<Item = T>, n: usize, out: *mut T, len: usize) -> GqtStatus {
    if out.is_null() {
        return fail(GqtStatus::NullPointer, "null output buffer");
    }
    if len < n {
        return fail(GqtStatus::BufferTooSmall, format!("need {n} slots, got {len}"));
    }
    for (j, v) in items.enumerate() {
        out.add(j).write(v);
    }
    GqtStatus::Ok
}

/// Runs the One-or-All check; writes the number of violating
/// (point, line) pairs plus unique-line failures.
///
/// # Safety
/// `k` must be a live kernel handle and `violations` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gqt_kernel_one_or_all(k: *const GqtKernel, violations: *mut u64) -> GqtStatus {
    guarded(|| {
        let k = deref!(k);
        let r = verify_one_or_all(&k.geom);
        write_out(violations, (r.violations.len() + r.unique_line_failures.len()) as u64)
    })
}

/// Point/line catalog as JSON. Null on failure.
///
/// # Safety
/// `k` must be a live kernel handle. Free the result with
/// [`gqt_string_free`].
#[no_mangle]
pub unsafe extern "C" fn gqt_kernel_catalog_json(k: *const GqtKernel) -> *mut c_char {
    let Some(k) = k.as_ref() else {
        set_error("null pointer: k".into());
        return std::ptr::null_mut();
    };
    match serde_json::to_string(&KernelCatalog::from_geometry(&k.geom)) {
        Ok(s) => into_c_string(s),
        Err(e) => {
            set_error(e.to_string());
            std::ptr::null_mut()
        }
    }
}

/// Teleports α|0⟩ + β|1⟩ and writes the JSON transcript to `out_json`.
/// `char2` selects the characteristic-2 procedure.
///
/// # Safety
/// `f` must be a live field handle and `out_json` valid for writes. Free
/// the transcript with [`gqt_string_free`].
#[no_mangle]
pub unsafe extern "C" fn gqt_teleport(
    f: *const GqtField,
    alpha: u32,
    beta: u32,
    char2: bool,
    seed: u64,
    out_json: *mut *mut c_char,
) -> GqtStatus {
    guarded(|| {
        let f = deref!(f);
        let (a, b) = match (element(f, alpha), element(f, beta)) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(s), _) | (_, Err(s)) => return s,
        };
        let t = if char2 { teleport_char2(&a, &b, seed) } else { teleport(&a, &b, seed) };
        let t = try_status!(t);
        let json = serde_json::to_string(&t.to_json()).expect("transcript serializes");
        write_out(out_json, into_c_string(json))
    })
}

/// Encodes a message (0 = "00", 1 = "01", 2 = "10", 3 = "11") on the
/// Bell state, measures and writes the decoded message.
///
/// # Safety
/// `f` must be a live field handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gqt_sdc_roundtrip(f: *const GqtField, message: u32, out: *mut u32) -> GqtStatus {
    guarded(|| {
        let f = deref!(f);
        if message > 3 {
            return fail(GqtStatus::OutOfRange, format!("message {message} is not two bits"));
        }
        let msg = SdcMessage { bits: [message & 2 != 0, message & 1 != 0] };
        let state = try_status!(sdc_encode(msg, &f.spec));
        let got = try_status!(sdc_decode(&state, &f.spec));
        write_out(out, (got.bits[0] as u32) << 1 | got.bits[1] as u32)
    })
}
