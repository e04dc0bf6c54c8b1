//! C ABI over the glis solvers.
//!
//! Graphs and interval models are opaque handles created by the parse
//! functions and released with the matching free functions. Every fallible
//! call returns a [`GlisStatus`]; outputs travel through out-pointers.
//! Strings returned by the serialize functions are NUL-terminated and owned
//! by the caller, who must release them with [`glis_string_free`].
//!
//! The C header is generated into `include/glis.h` by the build script.

use std::ffi::{CStr, CString, c_char};

use glis::error::Error;
use glis::graph::{ColoredGraph, Layout};
use glis::interval::{self, IcgCertificate, IntervalModel};
use glis::layout::{self, CvsResult, NoReason};
use glis::{fileio, oracle};

/// Opaque colored-graph handle.
pub struct GlisGraph(ColoredGraph);

/// Opaque interval-model handle.
pub struct GlisModel(IntervalModel);

/// Status code returned by every fallible function.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GlisStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidArgument = 4,
    TooLarge = 5,
    NotColoredLayout = 6,
    BufferTooSmall = 7,
    InternalError = 8,
}

/// Reason reported when the colored-layout question is answered no.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GlisNoReason {
    None = 0,
    MonochromaticEdge = 1,
    NoColoredLayout = 2,
}

/// Certificate check results; `valid` is the conjunction of the other four.
#[repr(C)]
#[derive(Clone, Copy, Debug)]
pub struct GlisVerifyReport {
    pub covers_input_edges: bool,
    pub overlap_matches_union: bool,
    pub properly_colored: bool,
    pub model_invariants: bool,
    pub valid: bool,
}

fn status_of(e: &Error) -> GlisStatus {
    match e {
        Error::Parse { .. } => GlisStatus::ParseError,
        Error::TooLarge { .. } => GlisStatus::TooLarge,
        Error::NotColoredLayout => GlisStatus::NotColoredLayout,
        Error::Internal(_) => GlisStatus::InternalError,
        _ => GlisStatus::InvalidArgument,
    }
}

/// Static description of a status code.
#[unsafe(no_mangle)]
pub extern "C" fn glis_status_message(status: GlisStatus) -> *const c_char {
    let msg: &'static CStr = match status {
        GlisStatus::Ok => c"ok",
        GlisStatus::NullPointer => c"null pointer argument",
        GlisStatus::InvalidUtf8 => c"input text is not valid UTF-8",
        GlisStatus::ParseError => c"file format error",
        GlisStatus::InvalidArgument => c"invalid argument",
        GlisStatus::TooLarge => c"instance too large for exact mode",
        GlisStatus::NotColoredLayout => c"layout is not a colored layout",
        GlisStatus::BufferTooSmall => c"output buffer too small",
        GlisStatus::InternalError => c"internal solver error",
    };
    msg.as_ptr()
}

unsafe fn utf8_in<'a>(text: *const c_char) -> Result<&'a str, GlisStatus> {
    if text.is_null() {
        return Err(GlisStatus::NullPointer);
    }
    unsafe { CStr::from_ptr(text) }.to_str().map_err(|_| GlisStatus::InvalidUtf8)
}

fn string_out(s: String) -> *mut c_char {
    CString::new(s).map_or(std::ptr::null_mut(), CString::into_raw)
}

/// Parses graph-file text into a new handle stored in `*out`.
///
/// # Safety
/// `text` must point to a NUL-terminated string and `out` to writable
/// storage for one pointer.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn glis_graph_parse(
    text: *const c_char,
    out: *mut *mut GlisGraph,
) -> GlisStatus {
    if out.is_null() {
        return GlisStatus::NullPointer;
    }
    let text = match unsafe { utf8_in(text) } {
        Ok(t) => t,
        Err(s) => return s,
    };
    match fileio::parse_graph(text) {
        Ok(g) => {
            unsafe { *out = Box::into_raw(Box::new(GlisGraph(g))) };
            GlisStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Releases a graph handle. Null is ignored.
///
/// # Safety
/// `g` must be a pointer returned by this library and not yet freed.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn glis_graph_free(g: *mut GlisGraph) {
    if !g.is_null() {
        drop(unsafe { Box::from_raw(g) });
    }
}

/// # Safety
/// `g` must be a live graph handle or null.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn glis_graph_vertex_count(g: *const GlisGraph) -> u32 {
    unsafe { g.as_ref() }.map_or(0, |g| g.0.n() as u32)
}

/// # Safety
/// `g` must be a live graph handle or null.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn glis_graph_palette_size(g: *const GlisGraph) -> u32 {
    unsafe { g.as_ref() }.map_or(0, |g| g.0.k())
}

/// # Safety
/// `g` must be a live graph handle or null.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn glis_graph_edge_count(g: *const GlisGraph) -> u32 {
    unsafe { g.as_ref() }.map_or(0, |g| g.0.edge_count() as u32)
}

/// Canonical graph-file text; free with [`glis_string_free`]. Null on error.
///
/// # Safety
/// `g` must be a live graph handle or null.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn glis_graph_serialize(g: *const GlisGraph) -> *mut c_char {
    match unsafe { g.as_ref() } {
        Some(g) => string_out(fileio::serialize_graph(&g.0)),
        None => std::ptr::null_mut(),
    }
}

/// Parses model-file text into a new handle stored in `*out`.
///
/// # Safety
/// `text` must point to a NUL-terminated string and `out` to writable
/// storage for one pointer.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn glis_model_parse(
    text: *const c_char,
    out: *mut *mut GlisModel,
) -> GlisStatus {
    if out.is_null() {
        return GlisStatus::NullPointer;
    }
    let text = match unsafe { utf8_in(text) } {
        Ok(t) => t,
        Err(s) => return s,
    };
    match fileio::parse_model(text) {
        Ok(m) => {
            unsafe { *out = Box::into_raw(Box::new(GlisModel(m))) };
            GlisStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Releases a model handle. Null is ignored.
///
/// # Safety
/// `m` must be a pointer returned by this library and not yet freed.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn glis_model_free(m: *mut GlisModel) {
    if !m.is_null() {
        drop(unsafe { Box::from_raw(m) });
    }
}

/// # Safety
/// `m` must be a live model handle or null.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn glis_model_vertex_count(m: *const GlisModel) -> u32 {
    unsafe { m.as_ref() }.map_or(0, |m| m.0.n() as u32)
}

/// Doubled endpoints of vertex `v`'s interval.
///
/// # Safety
/// `m` must be a live model handle; `out_a2` and `out_b2` must be writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn glis_model_interval(
    m: *const GlisModel,
    v: u32,
    out_a2: *mut i64,
    out_b2: *mut i64,
) -> GlisStatus {
    let Some(m) = (unsafe { m.as_ref() }) else {
        return GlisStatus::NullPointer;
    };
    if out_a2.is_null() || out_b2.is_null() {
        return GlisStatus::NullPointer;
    }
    if v as usize >= m.0.n() {
        return GlisStatus::InvalidArgument;
    }
    let (a2, b2) = m.0.interval(v);
    unsafe {
        *out_a2 = a2;
        *out_b2 = b2;
    }
    GlisStatus::Ok
}

/// Canonical model-file text; free with [`glis_string_free`]. Null on error.
///
/// # Safety
/// `m` must be a live model handle or null.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn glis_model_serialize(m: *const GlisModel) -> *mut c_char {
    match unsafe { m.as_ref() } {
        Some(m) => string_out(fileio::serialize_model(&m.0)),
        None => std::ptr::null_mut(),
    }
}

/// Releases a string returned by a serialize function. Null is ignored.
///
/// # Safety
/// `s` must be a string returned by this library and not yet freed.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn glis_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

unsafe fn write_layout(
    l: &Layout,
    layout_out: *mut u32,
    layout_len: usize,
) -> Result<(), GlisStatus> {
    if layout_out.is_null() {
        return Ok(()); // caller opted out of the witness
    }
    if layout_len < l.len() {
        return Err(GlisStatus::BufferTooSmall);
    }
    for (i, &v) in l.order().iter().enumerate() {
        unsafe { *layout_out.add(i) = v };
    }
    Ok(())
}

/// Minimum vertex separation. The witness layout is written to
/// `layout_out` (length `layout_len >= n`) unless it is null.
///
/// # Safety
/// `g` must be a live graph handle; `out_vs` must be writable; `layout_out`
/// must be null or point to at least `layout_len` writable u32 slots.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn glis_exact_vs(
    g: *const GlisGraph,
    out_vs: *mut u32,
    layout_out: *mut u32,
    layout_len: usize,
) -> GlisStatus {
    let Some(g) = (unsafe { g.as_ref() }) else {
        return GlisStatus::NullPointer;
    };
    if out_vs.is_null() {
        return GlisStatus::NullPointer;
    }
    match layout::exact_vs(&g.0) {
        Ok((vs, witness)) => {
            if let Err(s) = unsafe { write_layout(&witness, layout_out, layout_len) } {
                return s;
            }
            unsafe { *out_vs = vs };
            GlisStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Colored-layout decision. `*out_answer` is 1 for yes (witness written as
/// in [`glis_exact_vs`]) or 0 for no (reason in `*out_reason` if non-null).
///
/// # Safety
/// `g` must be a live graph handle; `out_answer` must be writable;
/// `layout_out` must be null or point to `layout_len` writable u32 slots;
/// `out_reason` must be null or writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn glis_solve_cvs(
    g: *const GlisGraph,
    out_answer: *mut i32,
    layout_out: *mut u32,
    layout_len: usize,
    out_reason: *mut GlisNoReason,
) -> GlisStatus {
    let Some(g) = (unsafe { g.as_ref() }) else {
        return GlisStatus::NullPointer;
    };
    if out_answer.is_null() {
        return GlisStatus::NullPointer;
    }
    match layout::solve_cvs(&g.0) {
        Ok(CvsResult::Yes { witness }) => {
            if let Err(s) = unsafe { write_layout(&witness, layout_out, layout_len) } {
                return s;
            }
            unsafe {
                *out_answer = 1;
                if !out_reason.is_null() {
                    *out_reason = GlisNoReason::None;
                }
            }
            GlisStatus::Ok
        }
        Ok(CvsResult::No { reason }) => {
            unsafe {
                *out_answer = 0;
                if !out_reason.is_null() {
                    *out_reason = match reason {
                        NoReason::MonochromaticEdge => GlisNoReason::MonochromaticEdge,
                        NoReason::NoColoredLayout => GlisNoReason::NoColoredLayout,
                    };
                }
            }
            GlisStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Interval sandwich decision. `*out_answer` is 1 for yes, in which case a
/// certificate model handle is stored in `*out_model` (unless null); the
/// added edges are recoverable via [`glis_added_edges`].
///
/// # Safety
/// `g` must be a live graph handle; `out_answer` must be writable;
/// `out_model` must be null or point to writable pointer storage.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn glis_solve_icg(
    g: *const GlisGraph,
    out_answer: *mut i32,
    out_model: *mut *mut GlisModel,
) -> GlisStatus {
    let Some(g) = (unsafe { g.as_ref() }) else {
        return GlisStatus::NullPointer;
    };
    if out_answer.is_null() {
        return GlisStatus::NullPointer;
    }
    match interval::solve_icg(&g.0) {
        Ok(Some(cert)) => {
            unsafe {
                *out_answer = 1;
                if !out_model.is_null() {
                    *out_model = Box::into_raw(Box::new(GlisModel(cert.model)));
                }
            }
            GlisStatus::Ok
        }
        Ok(None) => {
            unsafe { *out_answer = 0 };
            GlisStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

fn added_edges_of(g: &ColoredGraph, m: &IntervalModel) -> Vec<(u32, u32)> {
    let input: std::collections::BTreeSet<(u32, u32)> = g.edges().into_iter().collect();
    interval::model_to_graph(m)
        .into_iter()
        .filter(|e| !input.contains(e))
        .collect()
}

/// Number of overlap edges of `m` that are not edges of `g`.
///
/// # Safety
/// `g` and `m` must be live handles; `out_count` must be writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn glis_added_edge_count(
    g: *const GlisGraph,
    m: *const GlisModel,
    out_count: *mut u32,
) -> GlisStatus {
    let (Some(g), Some(m)) = (unsafe { g.as_ref() }, unsafe { m.as_ref() }) else {
        return GlisStatus::NullPointer;
    };
    if out_count.is_null() {
        return GlisStatus::NullPointer;
    }
    if m.0.n() != g.0.n() {
        return GlisStatus::InvalidArgument;
    }
    unsafe { *out_count = added_edges_of(&g.0, &m.0).len() as u32 };
    GlisStatus::Ok
}

/// Writes the added edges as flattened pairs `u0 v0 u1 v1 ...` into `buf`
/// (capacity `buf_len` u32 values, so at least twice the edge count).
///
/// # Safety
/// `g` and `m` must be live handles; `buf` must point to `buf_len` writable
/// u32 slots.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn glis_added_edges(
    g: *const GlisGraph,
    m: *const GlisModel,
    buf: *mut u32,
    buf_len: usize,
) -> GlisStatus {
    let (Some(g), Some(m)) = (unsafe { g.as_ref() }, unsafe { m.as_ref() }) else {
        return GlisStatus::NullPointer;
    };
    if buf.is_null() {
        return GlisStatus::NullPointer;
    }
    if m.0.n() != g.0.n() {
        return GlisStatus::InvalidArgument;
    }
    let added = added_edges_of(&g.0, &m.0);
    if buf_len < 2 * added.len() {
        return GlisStatus::BufferTooSmall;
    }
    for (i, (u, v)) in added.into_iter().enumerate() {
        unsafe {
            *buf.add(2 * i) = u;
            *buf.add(2 * i + 1) = v;
        }
    }
    GlisStatus::Ok
}

/// Checks `m` as a certificate for `g` (added edges taken to be the
/// overlaps beyond `g`'s edges) and fills `*out_report`.
///
/// # Safety
/// `g` and `m` must be live handles; `out_report` must be writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn glis_verify(
    g: *const GlisGraph,
    m: *const GlisModel,
    out_report: *mut GlisVerifyReport,
) -> GlisStatus {
    let (Some(g), Some(m)) = (unsafe { g.as_ref() }, unsafe { m.as_ref() }) else {
        return GlisStatus::NullPointer;
    };
    if out_report.is_null() {
        return GlisStatus::NullPointer;
    }
    let cert = IcgCertificate {
        added_edges: added_edges_of(&g.0, &m.0),
        model: m.0.clone(),
    };
    match interval::verify_certificate(&g.0, &cert) {
        Ok(r) => {
            unsafe {
                *out_report = GlisVerifyReport {
                    covers_input_edges: r.covers_input_edges,
                    overlap_matches_union: r.overlap_matches_union,
                    properly_colored: r.properly_colored,
                    model_invariants: r.model_invariants,
                    valid: r.valid(),
                };
            }
            GlisStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Interval model of a colored layout (`layout`, length `layout_len`,
/// must be a colored layout of `g`). Stores a new model handle in `*out`.
///
/// # Safety
/// `g` must be a live graph handle; `layout` must point to `layout_len`
/// readable u32 values; `out` must be writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn glis_layout_to_intervals(
    g: *const GlisGraph,
    layout: *const u32,
    layout_len: usize,
    out: *mut *mut GlisModel,
) -> GlisStatus {
    let Some(g) = (unsafe { g.as_ref() }) else {
        return GlisStatus::NullPointer;
    };
    if out.is_null() || (layout.is_null() && layout_len > 0) {
        return GlisStatus::NullPointer;
    }
    let order: Vec<u32> = (0..layout_len).map(|i| unsafe { *layout.add(i) }).collect();
    let l = match Layout::new(order) {
        Ok(l) => l,
        Err(e) => return status_of(&e),
    };
    match interval::layout_to_intervals(&g.0, &l) {
        Ok(m) => {
            unsafe { *out = Box::into_raw(Box::new(GlisModel(m))) };
            GlisStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Layout read off a model by increasing left endpoint, written to `buf`
/// (capacity `buf_len >= n`).
///
/// # Safety
/// `m` must be a live model handle; `buf` must point to `buf_len` writable
/// u32 slots (may be null if the model is empty).
#[unsafe(no_mangle)]
pub unsafe extern "C" fn glis_intervals_to_layout(
    m: *const GlisModel,
    buf: *mut u32,
    buf_len: usize,
) -> GlisStatus {
    let Some(m) = (unsafe { m.as_ref() }) else {
        return GlisStatus::NullPointer;
    };
    if buf.is_null() && m.0.n() > 0 {
        return GlisStatus::NullPointer;
    }
    let l = interval::intervals_to_layout(&m.0);
    match unsafe { write_layout(&l, buf, buf_len) } {
        Ok(()) => GlisStatus::Ok,
        Err(s) => s,
    }
}

/// Brute-force vertex separation by layout enumeration (small n only).
///
/// # Safety
/// `g` must be a live graph handle; `out_vs` must be writable.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn glis_brute_vs(g: *const GlisGraph, out_vs: *mut u32) -> GlisStatus {
    let Some(g) = (unsafe { g.as_ref() }) else {
        return GlisStatus::NullPointer;
    };
    if out_vs.is_null() {
        return GlisStatus::NullPointer;
    }
    match oracle::brute_vs(&g.0) {
        Ok(vs) => {
            unsafe { *out_vs = vs };
            GlisStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}
