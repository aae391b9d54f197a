//! C ABI over the `ldyn` library.
//!
//! Graphs and witnesses cross the boundary as opaque handles created by
//! `ldyn_*_parse` / `ldyn_*_solve` calls and released with the matching
//! `_free`. Every fallible call returns an [`LdynStatus`]; on failure the
//! message is available from [`ldyn_last_error_message`] on the same thread.
//! Rationals are passed as numerator/denominator pairs.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use ldyn::{Error, Graph, ThresholdAssignment};

type Rational = num_rational::Ratio<i64>;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LdynStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Precondition = 4,
    CapExceeded = 5,
    BufferTooSmall = 6,
    Panic = 7,
}

/// Opaque graph handle.
pub struct LdynGraph {
    inner: Graph,
}

/// Opaque worst-case witness: a value, its threshold assignment and a minimum dynamo.
pub struct LdynWitness {
    inner: ldyn::LdynWitness,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: LdynStatus, msg: impl Into<String>) -> LdynStatus {
    set_error(msg.into());
    status
}

fn from_error(e: Error) -> LdynStatus {
    let status = match e {
        Error::Parse(_) => LdynStatus::Parse,
        Error::CapExceeded { .. } => LdynStatus::CapExceeded,
        _ => LdynStatus::Precondition,
    };
    fail(status, e.to_string())
}

fn guard(body: impl FnOnce() -> LdynStatus) -> LdynStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => fail(LdynStatus::Panic, "internal panic"),
    }
}

unsafe fn graph_ref<'a>(g: *const LdynGraph) -> Option<&'a Graph> {
    g.as_ref().map(|g| &g.inner)
}

unsafe fn slice<'a, T>(data: *const T, len: usize) -> Option<&'a [T]> {
    if len == 0 {
        Some(&[])
    } else if data.is_null() {
        None
    } else {
        Some(std::slice::from_raw_parts(data, len))
    }
}

fn rational(num: i64, den: i64) -> Result<Rational, LdynStatus> {
    if den == 0 {
        Err(fail(LdynStatus::Precondition, "zero denominator"))
    } else {
        Ok(Rational::new(num, den))
    }
}

unsafe fn copy_out<T: Copy>(
    src: &[T],
    buf: *mut T,
    capacity: usize,
    out_len: *mut usize,
) -> LdynStatus {
    if out_len.is_null() {
        return fail(LdynStatus::NullPointer, "out_len is null");
    }
    *out_len = src.len();
    if src.len() > capacity {
        return fail(
            LdynStatus::BufferTooSmall,
            format!("need {} entries", src.len()),
        );
    }
    if !src.is_empty() {
        if buf.is_null() {
            return fail(LdynStatus::NullPointer, "buffer is null");
        }
        ptr::copy_nonoverlapping(src.as_ptr(), buf, src.len());
    }
    LdynStatus::Ok
}

/// Message of the last failed call on this thread, or NULL. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn ldyn_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses the edge-list format (`n m` header, then `m` lines `u v`).
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ldyn_graph_parse(
    text: *const c_char,
    out: *mut *mut LdynGraph,
) -> LdynStatus {
    guard(|| {
        if text.is_null() || out.is_null() {
            return fail(LdynStatus::NullPointer, "text or out is null");
        }
        let Ok(text) = CStr::from_ptr(text).to_str() else {
            return fail(LdynStatus::InvalidUtf8, "graph text is not UTF-8");
        };
        match Graph::parse(text) {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(LdynGraph { inner }));
                LdynStatus::Ok
            }
            Err(e) => from_error(e.into()),
        }
    })
}

/// # Safety
/// `g` must be NULL or a handle from [`ldyn_graph_parse`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ldyn_graph_free(g: *mut LdynGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count, or 0 for a NULL handle.
///
/// # Safety
/// `g` must be NULL or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn ldyn_graph_vertex_count(g: *const LdynGraph) -> usize {
    graph_ref(g).map_or(0, Graph::n)
}

/// Edge count, or 0 for a NULL handle.
///
/// # Safety
/// `g` must be NULL or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn ldyn_graph_edge_count(g: *const LdynGraph) -> usize {
    graph_ref(g).map_or(0, Graph::m)
}

/// # Safety
/// `g` must be a live graph handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ldyn_graph_is_forest(g: *const LdynGraph, out: *mut bool) -> LdynStatus {
    guard(|| match (graph_ref(g), out.as_mut()) {
        (Some(g), Some(out)) => {
            *out = g.is_forest();
            LdynStatus::Ok
        }
        _ => fail(LdynStatus::NullPointer, "graph or out is null"),
    })
}

/// Whether `seed` activates every vertex under thresholds `tau`.
///
/// # Safety
/// `tau` must point to `tau_len` values and `seed` to `seed_len` values.
#[no_mangle]
pub unsafe extern "C" fn ldyn_is_dynamo(
    g: *const LdynGraph,
    tau: *const u32,
    tau_len: usize,
    seed: *const usize,
    seed_len: usize,
    out: *mut bool,
) -> LdynStatus {
    guard(|| {
        let (Some(g), Some(tau), Some(seed), Some(out)) = (
            graph_ref(g),
            slice(tau, tau_len),
            slice(seed, seed_len),
            out.as_mut(),
        ) else {
            return fail(LdynStatus::NullPointer, "null argument");
        };
        match ldyn::propagation::is_dynamo(g, &ThresholdAssignment::new(tau.to_vec()), seed) {
            Ok(b) => {
                *out = b;
                LdynStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Exhaustive minimum dynamo. Writes its size to `out_size` and its vertices
/// to `out_set` (capacity `set_capacity`; the graph's vertex count always suffices).
///
/// # Safety
/// Pointers must be valid for the stated lengths.
#[no_mangle]
pub unsafe extern "C" fn ldyn_min_dynamo(
    g: *const LdynGraph,
    tau: *const u32,
    tau_len: usize,
    cap: usize,
    out_set: *mut usize,
    set_capacity: usize,
    out_size: *mut usize,
) -> LdynStatus {
    guard(|| {
        let (Some(g), Some(tau)) = (graph_ref(g), slice(tau, tau_len)) else {
            return fail(LdynStatus::NullPointer, "null argument");
        };
        match ldyn::exact::min_dynamo(g, &ThresholdAssignment::new(tau.to_vec()), cap) {
            Ok((_, set)) => copy_out(&set, out_set, set_capacity, out_size),
            Err(e) => from_error(e),
        }
    })
}

/// Degree-sequence bound at average threshold `t_num / t_den`.
///
/// # Safety
/// `g` must be a live graph handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ldyn_ksz_bound(
    g: *const LdynGraph,
    t_num: i64,
    t_den: i64,
    out: *mut usize,
) -> LdynStatus {
    guard(|| {
        let (Some(g), Some(out)) = (graph_ref(g), out.as_mut()) else {
            return fail(LdynStatus::NullPointer, "null argument");
        };
        let t = match rational(t_num, t_den) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match ldyn::bounds::ksz_bound(g, t) {
            Ok(k) => {
                *out = k;
                LdynStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

fn emit(result: Result<ldyn::LdynWitness, Error>, out: *mut *mut LdynWitness) -> LdynStatus {
    match result {
        Ok(inner) => {
            // SAFETY: callers check `out` for NULL before computing.
            unsafe { *out = Box::into_raw(Box::new(LdynWitness { inner })) };
            LdynStatus::Ok
        }
        Err(e) => from_error(e),
    }
}

/// Worst-case minimum dynamo of a forest at average threshold `t_num / t_den`.
///
/// # Safety
/// `g` must be a live graph handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ldyn_forest_solve(
    g: *const LdynGraph,
    t_num: i64,
    t_den: i64,
    out: *mut *mut LdynWitness,
) -> LdynStatus {
    guard(|| {
        let Some(g) = graph_ref(g).filter(|_| !out.is_null()) else {
            return fail(LdynStatus::NullPointer, "null argument");
        };
        match rational(t_num, t_den) {
            Ok(t) => emit(ldyn::forest::ldyn_forest(g, t), out),
            Err(s) => s,
        }
    })
}

/// Exhaustive worst-case minimum dynamo (at most `cap` vertices).
///
/// # Safety
/// `g` must be a live graph handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ldyn_brute_solve(
    g: *const LdynGraph,
    t_num: i64,
    t_den: i64,
    allow_self_opinioned: bool,
    cap: usize,
    out: *mut *mut LdynWitness,
) -> LdynStatus {
    guard(|| {
        let Some(g) = graph_ref(g).filter(|_| !out.is_null()) else {
            return fail(LdynStatus::NullPointer, "null argument");
        };
        match rational(t_num, t_den) {
            Ok(t) => emit(
                ldyn::exact::ldyn_brute(g, t, allow_self_opinioned, cap),
                out,
            ),
            Err(s) => s,
        }
    })
}

/// # Safety
/// `w` must be NULL or a live witness handle.
#[no_mangle]
pub unsafe extern "C" fn ldyn_witness_value(w: *const LdynWitness) -> usize {
    w.as_ref().map_or(0, |w| w.inner.value)
}

/// Copies the witness thresholds into `buf`; `out_len` receives the length
/// even when the buffer is too small.
///
/// # Safety
/// `buf` must hold `capacity` values and `out_len` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ldyn_witness_tau(
    w: *const LdynWitness,
    buf: *mut u32,
    capacity: usize,
    out_len: *mut usize,
) -> LdynStatus {
    guard(|| match w.as_ref() {
        Some(w) => copy_out(w.inner.tau.values(), buf, capacity, out_len),
        None => fail(LdynStatus::NullPointer, "witness is null"),
    })
}

/// Copies the witness dynamo into `buf`.
///
/// # Safety
/// `buf` must hold `capacity` values and `out_len` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ldyn_witness_dynamo(
    w: *const LdynWitness,
    buf: *mut usize,
    capacity: usize,
    out_len: *mut usize,
) -> LdynStatus {
    guard(|| match w.as_ref() {
        Some(w) => copy_out(&w.inner.dynamo, buf, capacity, out_len),
        None => fail(LdynStatus::NullPointer, "witness is null"),
    })
}

/// # Safety
/// `w` must be NULL or a live witness handle.
#[no_mangle]
pub unsafe extern "C" fn ldyn_witness_free(w: *mut LdynWitness) {
    if !w.is_null() {
        drop(Box::from_raw(w));
    }
}

/// Runs the command-line front end on `argv` (without the program name) and
/// returns its JSON document in `out_json`, to be released with
/// [`ldyn_string_free`]. `out_status` receives the CLI exit status.
///
/// # Safety
/// `argv` must point to `argc` NUL-terminated strings.
#[no_mangle]
pub unsafe extern "C" fn ldyn_run(
    argv: *const *const c_char,
    argc: usize,
    out_json: *mut *mut c_char,
    out_status: *mut i32,
) -> LdynStatus {
    guard(|| {
        let Some(args) = slice(argv, argc).filter(|_| !out_json.is_null() && !out_status.is_null())
        else {
            return fail(LdynStatus::NullPointer, "null argument");
        };
        let mut owned = vec!["ldyn".to_string()];
        for &a in args {
            if a.is_null() {
                return fail(LdynStatus::NullPointer, "null argv entry");
            }
            match CStr::from_ptr(a).to_str() {
                Ok(s) => owned.push(s.to_string()),
                Err(_) => return fail(LdynStatus::InvalidUtf8, "argument is not UTF-8"),
            }
        }
        let out = ldyn::cli::run_from_args(owned);
        let text = CString::new(out.stdout.replace('\0', " ")).expect("interior NULs removed");
        *out_json = text.into_raw();
        *out_status = out.status;
        LdynStatus::Ok
    })
}

/// # Safety
/// `s` must be NULL or a string returned by [`ldyn_run`].
#[no_mangle]
pub unsafe extern "C" fn ldyn_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
