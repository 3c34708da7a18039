//! C interface to the distideal toolkit.
//!
//! Graphs cross the boundary as opaque [`DiGraph`] handles created by the
//! `di_graph_*` constructors and released with [`di_graph_free`]. Every
//! fallible call returns a [`DiStatus`]; on failure a description is kept
//! per thread and can be read with [`di_last_error_message`]. Strings
//! returned through `char **` out-parameters are owned by the caller and must
//! be released with [`di_string_free`]. Panics never cross the boundary:
//! they are reported as [`DiStatus::Internal`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use distideal::error::Error;
use distideal::graph::{emit_graph6, parse_graph6, Atlas, Graph};
use distideal::groebner::Domain;
use distideal::harness::Harness;
use distideal::ideals::{
    ideal_triviality, lambda_membership, phi_over_rationals, phi_trivial_count, verdict_record, Decision,
    IdealOptions,
};
use distideal::linalg::snf;
use distideal::scan::scan_report;

/// Result codes of every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiStatus {
    Ok = 0,
    /// A required pointer argument was NULL.
    NullPointer = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// A graph6 string or edge array could not be read.
    Parse = 3,
    /// The graph is disconnected, so distances are undefined.
    Disconnected = 4,
    /// An index, order or vertex is out of range.
    OutOfRange = 5,
    /// A Gröbner completion ran out of its budget.
    BudgetExceeded = 6,
    /// An unknown catalogue or routine name.
    UnknownName = 7,
    /// The caller's buffer is too small; the required length was written.
    BufferTooSmall = 8,
    /// Any other failure, including a caught panic.
    Internal = 9,
}

/// Decision on a single distance ideal.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiDecision {
    Trivial = 0,
    NonTrivial = 1,
    Inconclusive = 2,
}

/// Trivial-ideal counts of a graph.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DiPhi {
    /// Φ: length of the trivial prefix of the distance ideals (a lower bound
    /// when `complete` is false).
    pub phi_ideals: usize,
    /// φ: number of invariant factors of the distance matrix equal to 1.
    pub phi_snf: usize,
    /// False when a Gröbner budget ran out before the ladder was settled.
    pub complete: bool,
}

/// Opaque graph handle.
pub struct DiGraph {
    graph: Graph,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(message: &str) {
    let text = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = text);
}

fn status_of(e: &Error) -> DiStatus {
    match e {
        Error::Graph6(_) | Error::EdgeList(_) | Error::InvalidGraph(_) | Error::PolyParse(_) => DiStatus::Parse,
        Error::Disconnected => DiStatus::Disconnected,
        Error::VertexOutOfRange { .. } | Error::IndexOutOfRange { .. } | Error::EnumerationRange { .. } => {
            DiStatus::OutOfRange
        }
        Error::BudgetExceeded(_) => DiStatus::BudgetExceeded,
        Error::UnknownAtlasName(_) | Error::UnknownLemmaMatrix(_) | Error::UnknownLemma(_) => DiStatus::UnknownName,
        _ => DiStatus::Internal,
    }
}

/// Runs `f`, recording failures and turning panics into
/// [`DiStatus::Internal`].
fn guard(f: impl FnOnce() -> Result<(), (DiStatus, String)>) -> DiStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error("");
            DiStatus::Ok
        }
        Ok(Err((status, message))) => {
            set_last_error(&message);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            DiStatus::Internal
        }
    }
}

type FfiResult<T> = Result<T, (DiStatus, String)>;

fn lift<T>(r: distideal::error::Result<T>) -> FfiResult<T> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null(what: &str) -> (DiStatus, String) {
    (DiStatus::NullPointer, format!("{what} is NULL"))
}

/// # Safety
/// `p` must be NULL or point to a live handle.
unsafe fn graph_ref<'a>(p: *const DiGraph) -> FfiResult<&'a Graph> {
    p.as_ref().map(|h| &h.graph).ok_or_else(|| null("graph"))
}

/// # Safety
/// `s` must be NULL or a NUL-terminated string.
unsafe fn str_arg<'a>(s: *const c_char, what: &str) -> FfiResult<&'a str> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s).to_str().map_err(|_| (DiStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

/// # Safety
/// `out` must be NULL or writable.
unsafe fn write_out<T>(out: *mut T, value: T) -> FfiResult<()> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

/// # Safety
/// `out` must be NULL or writable.
unsafe fn write_string(out: *mut *mut c_char, s: String) -> FfiResult<()> {
    let c = CString::new(s).map_err(|_| (DiStatus::Internal, "string contains NUL".to_string()))?;
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(c.into_raw());
    Ok(())
}

fn json<T: serde::Serialize>(value: &T) -> FfiResult<String> {
    serde_json::to_string(value).map_err(|e| (DiStatus::Internal, e.to_string()))
}

fn options(budget: u64) -> IdealOptions {
    let opts = IdealOptions::default();
    if budget == 0 {
        opts
    } else {
        opts.with_budget(budget)
    }
}

/// # Safety
/// `out` must be NULL or writable.
unsafe fn new_handle(out: *mut *mut DiGraph, graph: Graph) -> FfiResult<()> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(Box::into_raw(Box::new(DiGraph { graph })));
    Ok(())
}

/// Message describing the last failure on this thread (empty after a
/// success). The pointer stays valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn di_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn di_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must be NULL or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn di_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses one graph6 string.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn di_graph_from_graph6(text: *const c_char, out: *mut *mut DiGraph) -> DiStatus {
    guard(|| {
        let text = str_arg(text, "text")?;
        let g = lift(parse_graph6(text.trim()))?;
        new_handle(out, g)
    })
}

/// Builds a graph on `n` vertices from `m` edges stored as `2 * m`
/// consecutive endpoints.
///
/// # Safety
/// `edges` must point to `2 * m` readable values (it may be NULL when
/// `m == 0`) and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn di_graph_from_edges(
    n: usize,
    edges: *const usize,
    m: usize,
    out: *mut *mut DiGraph,
) -> DiStatus {
    guard(|| {
        let flat: &[usize] = if m == 0 {
            &[]
        } else if edges.is_null() {
            return Err(null("edges"));
        } else {
            std::slice::from_raw_parts(edges, 2 * m)
        };
        let pairs: Vec<(usize, usize)> = flat.chunks_exact(2).map(|c| (c[0], c[1])).collect();
        let g = lift(Graph::from_edges(n, &pairs))?;
        new_handle(out, g)
    })
}

/// A named graph of the built-in catalogue (for example "bull" or
/// "G_{6,7}").
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn di_graph_from_atlas(name: *const c_char, out: *mut *mut DiGraph) -> DiStatus {
    guard(|| {
        let name = str_arg(name, "name")?;
        let g = lift(Atlas::standard().get(name).cloned())?;
        new_handle(out, g)
    })
}

/// Releases a graph handle. NULL is ignored.
///
/// # Safety
/// `g` must be NULL or a handle from this library that was not yet freed.
#[no_mangle]
pub unsafe extern "C" fn di_graph_free(g: *mut DiGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn di_graph_order(g: *const DiGraph, out: *mut usize) -> DiStatus {
    guard(|| write_out(out, graph_ref(g)?.n()))
}

/// The graph6 encoding; free the result with [`di_string_free`].
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn di_graph_to_graph6(g: *const DiGraph, out: *mut *mut c_char) -> DiStatus {
    guard(|| {
        let s = lift(emit_graph6(graph_ref(g)?))?;
        write_string(out, s)
    })
}

/// Writes the `n x n` distance matrix row by row into `buf`. When `len` is
/// below `n * n`, nothing is written, `*required` receives `n * n` and the
/// status is [`DiStatus::BufferTooSmall`].
///
/// # Safety
/// `g` must be a live handle, `buf` must hold `len` writable values and
/// `required` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn di_distance_matrix(
    g: *const DiGraph,
    buf: *mut i64,
    len: usize,
    required: *mut usize,
) -> DiStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let d = lift(g.distances())?;
        let n = g.n();
        if !required.is_null() {
            required.write(n * n);
        }
        if len < n * n {
            return Err((DiStatus::BufferTooSmall, format!("{} values required", n * n)));
        }
        if buf.is_null() {
            return Err(null("buffer"));
        }
        let out = std::slice::from_raw_parts_mut(buf, n * n);
        for (i, row) in d.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                out[i * n + j] = v as i64;
            }
        }
        Ok(())
    })
}

/// Invariant factors of the distance matrix as a JSON array of decimal
/// strings, zeros included; free the result with [`di_string_free`].
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn di_smith_normal_form_json(g: *const DiGraph, out: *mut *mut c_char) -> DiStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let d = lift(g.distance_matrix())?;
        let mut diag: Vec<String> = snf(&d, false).invariant_factors.iter().map(|f| f.to_string()).collect();
        diag.resize(g.n(), "0".into());
        write_string(out, json(&diag)?)
    })
}

/// Φ and φ of a connected graph. `budget` bounds each Gröbner completion
/// (0 selects the default); `rational` works over ℚ instead of ℤ.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn di_phi(g: *const DiGraph, budget: u64, rational: bool, out: *mut DiPhi) -> DiStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let opts = options(budget);
        let r = lift(if rational { phi_over_rationals(g, &opts) } else { phi_trivial_count(g, &opts) })?;
        write_out(out, DiPhi { phi_ideals: r.phi_ideals, phi_snf: r.phi_snf, complete: r.complete })
    })
}

/// Decision on the `i`-th distance ideal over ℤ (`rational` false) or ℚ.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn di_ideal_triviality(
    g: *const DiGraph,
    i: usize,
    budget: u64,
    rational: bool,
    out: *mut DiDecision,
) -> DiStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let domain = if rational { Domain::Rationals } else { Domain::Integers };
        let v = lift(ideal_triviality(g, i, &options(budget).over(domain)))?;
        let d = match v.decision {
            Decision::Trivial => DiDecision::Trivial,
            Decision::NonTrivial => DiDecision::NonTrivial,
            Decision::Inconclusive => DiDecision::Inconclusive,
        };
        write_out(out, d)
    })
}

/// The verdict record of the `i`-th distance ideal over ℤ as JSON (graph,
/// i, decision, certificate kind and data, elapsed time).
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn di_ideal_verdict_json(
    g: *const DiGraph,
    i: usize,
    budget: u64,
    out: *mut *mut c_char,
) -> DiStatus {
    guard(|| {
        let rec = lift(verdict_record(graph_ref(g)?, i, &options(budget)))?;
        write_string(out, json(&rec)?)
    })
}

/// Whether Φ ≤ k over ℤ. Undecided cases fail with
/// [`DiStatus::BudgetExceeded`].
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn di_lambda_membership(g: *const DiGraph, k: usize, budget: u64, out: *mut bool) -> DiStatus {
    guard(|| {
        let member = lift(lambda_membership(graph_ref(g)?, k, &options(budget)))?;
        write_out(out, member)
    })
}

/// Forbidden-subgraph scan with the trivial-ideal ladder, as JSON.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn di_scan_json(g: *const DiGraph, budget: u64, out: *mut *mut c_char) -> DiStatus {
    guard(|| {
        let r = lift(scan_report(graph_ref(g)?, &Atlas::standard(), &options(budget)))?;
        write_string(out, json(&r)?)
    })
}

/// Runs one verification routine by identifier (for example "bull" or
/// "G67") and returns its report as JSON. `*passed` receives whether every
/// check passed.
///
/// # Safety
/// `id` must be a NUL-terminated string, `out` writable and `passed` NULL
/// or writable.
#[no_mangle]
pub unsafe extern "C" fn di_verify_lemma_json(
    id: *const c_char,
    budget: u64,
    passed: *mut bool,
    out: *mut *mut c_char,
) -> DiStatus {
    guard(|| {
        let id = str_arg(id, "id")?;
        let h = Harness { opts: options(budget), ..Harness::default() };
        let r = lift(h.lemma(id))?;
        if !passed.is_null() {
            passed.write(r.passed);
        }
        write_string(out, json(&r)?)
    })
}
