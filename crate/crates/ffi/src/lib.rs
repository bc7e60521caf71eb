//! C ABI over the `dilations` crate.
//!
//! Graphs and hypergraphs cross the boundary as opaque handles that the
//! caller frees with the matching `*_free` function. Every fallible call
//! returns a [`DlStatus`]; on failure, [`dl_last_error`] describes the
//! problem until the next call on the same thread. Strings returned by the
//! library are freed with [`dl_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use dilations::dilation::{
    builtin_hypergraph, dilate, generalized_power, search_berge_witness, BergeOutcome, Dilation,
    DilationClass, DilationSpec,
};
use dilations::graph::{
    generate, parse_edge_list, parse_graph6, write_edge_list, write_graph6, FamilySpec, Graph,
};
use dilations::hypergraph::Hypergraph;
use dilations::invariants::{self, Parameter, ProofMode, SolverConfig};
use dilations::Error;

/// Opaque simple graph.
pub struct DlGraph(Graph);

/// Opaque hypergraph.
pub struct DlHypergraph(Hypergraph);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DlStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Capacity = 4,
    Domain = 5,
    Constraint = 6,
    Witness = 7,
    Structural = 8,
    Feasibility = 9,
    Budget = 10,
    UnknownName = 11,
    Io = 12,
    /// The witness does not fit the caller's buffer.
    BufferTooSmall = 13,
    Panic = 14,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DlParameter {
    Gamma = 0,
    Nu = 1,
    Tau = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DlMode {
    BranchAndBound = 0,
    Exhaustive = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DlClass {
    Gamma0 = 0,
    Gamma1 = 1,
    Mixed = 2,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(DlStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::Parse { .. } => DlStatus::Parse,
            Error::Capacity(_) => DlStatus::Capacity,
            Error::Domain(_) => DlStatus::Domain,
            Error::Constraint { .. } => DlStatus::Constraint,
            Error::Witness(_) => DlStatus::Witness,
            Error::Structural(_) => DlStatus::Structural,
            Error::Feasibility(_) => DlStatus::Feasibility,
            Error::Budget { .. } => DlStatus::Budget,
            Error::UnknownName(_) => DlStatus::UnknownName,
            Error::Io(_) => DlStatus::Io,
        };
        Failure(status, e.to_string())
    }
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> DlStatus {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => DlStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            DlStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(DlStatus::NullPointer, format!("{what} is null"))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(DlStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn put<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

unsafe fn slice<'a>(p: *const usize, len: usize, what: &str) -> Result<&'a [usize], Failure> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s)
        .expect("library text has no NULs")
        .into_raw()
}

fn class(c: DilationClass) -> DlClass {
    match c {
        DilationClass::Gamma0 => DlClass::Gamma0,
        DilationClass::Gamma1 => DlClass::Gamma1,
        DilationClass::Mixed => DlClass::Mixed,
    }
}

/// Message for the last failed call on this thread, or NULL. Owned by the
/// library and valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn dl_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn dl_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must be NULL or a string returned by this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn dl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a graph from a family spec such as `"corona:cycle:3"`.
///
/// # Safety
/// `spec` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dl_graph_from_family(
    spec: *const c_char,
    out: *mut *mut DlGraph,
) -> DlStatus {
    guard(|| {
        let spec: FamilySpec = text(spec, "spec")?.parse()?;
        let g = generate(&spec)?;
        put(out, Box::into_raw(Box::new(DlGraph(g))), "out")
    })
}

/// # Safety
/// `g6` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dl_graph_from_graph6(
    g6: *const c_char,
    out: *mut *mut DlGraph,
) -> DlStatus {
    guard(|| {
        let g = parse_graph6(text(g6, "graph6")?)?;
        put(out, Box::into_raw(Box::new(DlGraph(g))), "out")
    })
}

/// # Safety
/// `edges` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dl_graph_from_edge_list(
    edges: *const c_char,
    out: *mut *mut DlGraph,
) -> DlStatus {
    guard(|| {
        let g = parse_edge_list(text(edges, "edge list")?)?;
        put(out, Box::into_raw(Box::new(DlGraph(g))), "out")
    })
}

/// # Safety
/// `g` must be NULL or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn dl_graph_free(g: *mut DlGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle; the out pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn dl_graph_size(
    g: *const DlGraph,
    order: *mut usize,
    edges: *mut usize,
) -> DlStatus {
    guard(|| {
        let g = &deref(g, "graph")?.0;
        put(order, g.n(), "order")?;
        put(edges, g.edge_count(), "edges")
    })
}

/// Writes a newly allocated graph6 string to `out`.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dl_graph_to_graph6(g: *const DlGraph, out: *mut *mut c_char) -> DlStatus {
    guard(|| {
        let g = &deref(g, "graph")?.0;
        put(out, into_c_string(write_graph6(g)), "out")
    })
}

/// Writes a newly allocated edge list to `out`.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dl_graph_to_edge_list(
    g: *const DlGraph,
    out: *mut *mut c_char,
) -> DlStatus {
    guard(|| {
        let g = &deref(g, "graph")?.0;
        put(out, into_c_string(write_edge_list(g)), "out")
    })
}

/// The graph as a 2-uniform hypergraph, edges in graph edge order.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dl_graph_to_hypergraph(
    g: *const DlGraph,
    out: *mut *mut DlHypergraph,
) -> DlStatus {
    guard(|| {
        let g = &deref(g, "graph")?.0;
        put(
            out,
            Box::into_raw(Box::new(DlHypergraph(g.to_hypergraph()))),
            "out",
        )
    })
}

/// Parses the `m <order>` text format.
///
/// # Safety
/// `src` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dl_hypergraph_parse(
    src: *const c_char,
    out: *mut *mut DlHypergraph,
) -> DlStatus {
    guard(|| {
        let h = Hypergraph::parse(text(src, "hypergraph text")?)?;
        put(out, Box::into_raw(Box::new(DlHypergraph(h))), "out")
    })
}

/// A built-in hypergraph by name, e.g. `"fano"`.
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dl_hypergraph_builtin(
    name: *const c_char,
    out: *mut *mut DlHypergraph,
) -> DlStatus {
    guard(|| {
        let h = builtin_hypergraph(text(name, "name")?)?;
        put(out, Box::into_raw(Box::new(DlHypergraph(h))), "out")
    })
}

/// # Safety
/// `h` must be NULL or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn dl_hypergraph_free(h: *mut DlHypergraph) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// # Safety
/// `h` must be a live handle; the out pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn dl_hypergraph_size(
    h: *const DlHypergraph,
    order: *mut usize,
    edges: *mut usize,
    rank: *mut usize,
) -> DlStatus {
    guard(|| {
        let h = &deref(h, "hypergraph")?.0;
        put(order, h.order(), "order")?;
        put(edges, h.edge_count(), "edges")?;
        put(rank, h.rank(), "rank")
    })
}

/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dl_hypergraph_to_text(
    h: *const DlHypergraph,
    out: *mut *mut c_char,
) -> DlStatus {
    guard(|| {
        let h = &deref(h, "hypergraph")?.0;
        put(out, into_c_string(h.to_text()), "out")
    })
}

unsafe fn emit_dilation(
    d: Dilation,
    out: *mut *mut DlHypergraph,
    out_class: *mut DlClass,
) -> Result<(), Failure> {
    if !out_class.is_null() {
        out_class.write(class(d.class()));
    }
    put(
        out,
        Box::into_raw(Box::new(DlHypergraph(d.hypergraph))),
        "out",
    )
}

/// The generalized power `G^{k,s}`. `out_class` may be NULL.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dl_generalized_power(
    g: *const DlGraph,
    k: usize,
    s: usize,
    out: *mut *mut DlHypergraph,
    out_class: *mut DlClass,
) -> DlStatus {
    guard(|| {
        let g = &deref(g, "graph")?.0;
        emit_dilation(generalized_power(g, k, s)?, out, out_class)
    })
}

/// A dilation with copy-block sizes per vertex and additional-block sizes
/// per edge (edges in lexicographic order). `out_class` may be NULL.
///
/// # Safety
/// The arrays must hold `copy_len` and `extra_len` elements; `g` must be
/// a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dl_dilate(
    g: *const DlGraph,
    k: usize,
    copy_sizes: *const usize,
    copy_len: usize,
    extra_sizes: *const usize,
    extra_len: usize,
    out: *mut *mut DlHypergraph,
    out_class: *mut DlClass,
) -> DlStatus {
    guard(|| {
        let g = &deref(g, "graph")?.0;
        let spec = DilationSpec {
            k,
            copy_sizes: slice(copy_sizes, copy_len, "copy_sizes")?.to_vec(),
            extra_sizes: slice(extra_sizes, extra_len, "extra_sizes")?.to_vec(),
        };
        emit_dilation(dilate(g, &spec)?, out, out_class)
    })
}

/// Exact value of `param`. `node_cap` 0 means the library default. When
/// `witness` is non-NULL the sorted witness is copied there; `witness_len`
/// (may be NULL) receives its length either way, and a too-small buffer
/// yields `BufferTooSmall` with the value still written.
///
/// # Safety
/// `h` must be a live handle, `value` writable, and `witness` (if given)
/// must hold `witness_cap` elements.
#[no_mangle]
pub unsafe extern "C" fn dl_solve(
    h: *const DlHypergraph,
    param: DlParameter,
    mode: DlMode,
    node_cap: u64,
    value: *mut usize,
    witness: *mut usize,
    witness_cap: usize,
    witness_len: *mut usize,
) -> DlStatus {
    guard(|| {
        let h = &deref(h, "hypergraph")?.0;
        let parameter = match param {
            DlParameter::Gamma => Parameter::Gamma,
            DlParameter::Nu => Parameter::Nu,
            DlParameter::Tau => Parameter::Tau,
        };
        let mut cfg = SolverConfig {
            mode: match mode {
                DlMode::BranchAndBound => ProofMode::BranchAndBound,
                DlMode::Exhaustive => ProofMode::Exhaustive,
            },
            ..SolverConfig::default()
        };
        if node_cap > 0 {
            cfg.node_cap = node_cap;
        }
        let c = invariants::solve(h, parameter, &cfg)?;
        put(value, c.value, "value")?;
        if !witness_len.is_null() {
            witness_len.write(c.witness.len());
        }
        if !witness.is_null() {
            if c.witness.len() > witness_cap {
                return Err(Failure(
                    DlStatus::BufferTooSmall,
                    format!(
                        "witness has {} entries, buffer holds {witness_cap}",
                        c.witness.len()
                    ),
                ));
            }
            ptr::copy_nonoverlapping(c.witness.as_ptr(), witness, c.witness.len());
        }
        Ok(())
    })
}

/// Whether `h` is a Berge-`g`. `node_cap` 0 means the library default.
///
/// # Safety
/// Handles must be live and `found` writable.
#[no_mangle]
pub unsafe extern "C" fn dl_is_berge(
    g: *const DlGraph,
    h: *const DlHypergraph,
    node_cap: u64,
    found: *mut bool,
) -> DlStatus {
    guard(|| {
        let g = &deref(g, "graph")?.0;
        let h = &deref(h, "hypergraph")?.0;
        if g.edge_count() != h.edge_count() {
            return put(found, false, "found");
        }
        let cap = if node_cap == 0 {
            invariants::DEFAULT_NODE_CAP
        } else {
            node_cap
        };
        let r = search_berge_witness(g, h, cap)?;
        put(found, matches!(r.outcome, BergeOutcome::Found(_)), "found")
    })
}
