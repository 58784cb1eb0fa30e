//! C ABI over `vnum`. Graphs live behind an opaque `VnumGraph` handle; every
//! call returns a `VnumStatus`, and the message of the most recent failure on
//! the calling thread is available from [`vnum_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use vnum::binomial::initial_ideal;
use vnum::graph::{encode_graph6, parse_graph};
use vnum::harness::{analyze, AnalyzeOptions};
use vnum::poly::Rationals;
use vnum::regularity::{reg_binomial_edge, HochsterOptions};
use vnum::vnumber::{v_empty, v_monomial, v_of};
use vnum::{Error, Graph};

/// Opaque graph handle.
pub struct VnumGraph(Graph);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VnumStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidGraph = 4,
    /// The graph has no edges, so the ideal is zero.
    Edgeless = 5,
    CapExceeded = 6,
    Internal = 7,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> VnumStatus {
    match e {
        Error::Parse { .. } | Error::Json(_) => VnumStatus::Parse,
        Error::VertexOutOfRange { .. } | Error::LoopEdge(..) | Error::DuplicateEdge(..) | Error::TooManyVertices(..) => {
            VnumStatus::InvalidGraph
        }
        Error::EdgelessGraph => VnumStatus::Edgeless,
        Error::CapExceeded { .. } => VnumStatus::CapExceeded,
        _ => VnumStatus::Internal,
    }
}

/// Runs `f`, turning errors and panics into a status plus a stored message.
fn guard(f: impl FnOnce() -> Result<(), VnumStatus>) -> VnumStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => VnumStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal panic".into());
            VnumStatus::Internal
        }
    }
}

fn fail(e: Error) -> VnumStatus {
    set_error(e.to_string());
    status_of(&e)
}

fn null() -> VnumStatus {
    set_error("null pointer argument".into());
    VnumStatus::NullPointer
}

unsafe fn graph_ref<'a>(g: *const VnumGraph) -> Result<&'a Graph, VnumStatus> {
    g.as_ref().map(|g| &g.0).ok_or_else(null)
}

unsafe fn write<T>(out: *mut T, v: T) -> Result<(), VnumStatus> {
    if out.is_null() {
        return Err(null());
    }
    out.write(v);
    Ok(())
}

fn to_c_string(s: String) -> Result<*mut c_char, VnumStatus> {
    CString::new(s).map(CString::into_raw).map_err(|_| {
        set_error("string contains a NUL byte".into());
        VnumStatus::Internal
    })
}

/// Message for the last failed call on this thread, or NULL. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn vnum_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses a graph6 string or an edge list (`u v` per line, 1-based).
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vnum_graph_parse(text: *const c_char, out: *mut *mut VnumGraph) -> VnumStatus {
    guard(|| {
        if text.is_null() {
            return Err(null());
        }
        let s = CStr::from_ptr(text).to_str().map_err(|_| {
            set_error("input is not UTF-8".into());
            VnumStatus::InvalidUtf8
        })?;
        let g = parse_graph(s).map_err(fail)?;
        write(out, Box::into_raw(Box::new(VnumGraph(g))))
    })
}

/// Builds a graph on `1..=n` from `edge_count` pairs stored flat in `edges`.
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values (may be NULL when
/// `edge_count` is 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vnum_graph_from_edges(
    n: usize,
    edges: *const u32,
    edge_count: usize,
    out: *mut *mut VnumGraph,
) -> VnumStatus {
    guard(|| {
        let flat: &[u32] = match (edges.is_null(), edge_count) {
            (_, 0) => &[],
            (true, _) => return Err(null()),
            (false, k) => std::slice::from_raw_parts(edges, 2 * k),
        };
        let pairs: Vec<(usize, usize)> = flat.chunks_exact(2).map(|p| (p[0] as usize, p[1] as usize)).collect();
        let g = Graph::from_edges(n, &pairs).map_err(fail)?;
        write(out, Box::into_raw(Box::new(VnumGraph(g))))
    })
}

/// Releases a handle; NULL is ignored.
///
/// # Safety
/// `g` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn vnum_graph_free(g: *mut VnumGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn vnum_graph_vertex_count(g: *const VnumGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.n())
}

/// # Safety
/// `g` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn vnum_graph_edge_count(g: *const VnumGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.edge_count())
}

/// The graph6 encoding; free the result with [`vnum_string_free`].
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vnum_graph_to_graph6(g: *const VnumGraph, out: *mut *mut c_char) -> VnumStatus {
    guard(|| {
        let s = to_c_string(encode_graph6(graph_ref(g)?))?;
        write(out, s)
    })
}

/// `v(J_G)` over the rationals.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vnum_v_number(g: *const VnumGraph, out: *mut u32) -> VnumStatus {
    guard(|| {
        let v = v_of(graph_ref(g)?, Rationals).map_err(fail)?;
        write(out, v)
    })
}

/// `v_∅(J_G)`, which equals the smallest minimal completion set size.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vnum_v_empty(g: *const VnumGraph, out: *mut u32) -> VnumStatus {
    guard(|| {
        let (v, _) = v_empty(graph_ref(g)?).map_err(fail)?;
        write(out, v)
    })
}

/// v-number of the lex initial ideal.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vnum_v_initial(g: *const VnumGraph, out: *mut u32) -> VnumStatus {
    guard(|| {
        let g = graph_ref(g)?;
        if g.edge_count() == 0 {
            return Err(fail(Error::EdgelessGraph));
        }
        let i = initial_ideal(g).map_err(fail)?;
        write(out, v_monomial(&i).map_err(fail)?.v)
    })
}

/// `reg(S/J_G)` with GF(2) homology. Refuses graphs with more than `cap_n`
/// vertices; a zero `budget_ms` means no time limit. `confirmed` is false
/// when the budget ran out and `out` holds only a lower bound.
///
/// # Safety
/// `g` must be a live handle; `out` and `confirmed` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vnum_regularity(
    g: *const VnumGraph,
    cap_n: usize,
    budget_ms: u64,
    out: *mut u32,
    confirmed: *mut bool,
) -> VnumStatus {
    guard(|| {
        if confirmed.is_null() {
            return Err(null());
        }
        let opts = HochsterOptions {
            budget: (budget_ms > 0).then(|| std::time::Duration::from_millis(budget_ms)),
            ..HochsterOptions::default()
        };
        let r = reg_binomial_edge(graph_ref(g)?, cap_n, &opts).map_err(fail)?;
        write(out, r.reg)?;
        write(confirmed, r.confirmed)
    })
}

/// Full analysis as JSON; free the result with [`vnum_string_free`].
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vnum_analyze_json(g: *const VnumGraph, out: *mut *mut c_char) -> VnumStatus {
    guard(|| {
        let a = analyze(graph_ref(g)?, &AnalyzeOptions::default()).map_err(fail)?;
        let s = serde_json::to_string(&a).map_err(|e| fail(e.into()))?;
        write(out, to_c_string(s)?)
    })
}

/// Frees a string returned by this library; NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn vnum_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
