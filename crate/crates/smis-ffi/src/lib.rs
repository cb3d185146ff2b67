//! C ABI over the core library: opaque handles, status codes, and
//! caller-provided buffers for strings. The header is generated into
//! `include/smis.h` at build time.
//!
//! Ownership rules: every `*_from_*`/`*_missing`/`*_union`/`*_witness`
//! call that reports [`SmisStatus::Ok`] transfers ownership of the
//! out-pointer to the caller, to be released with the matching `*_free`.
//! Passing the same handle to `*_free` twice, or a pointer not produced by
//! this library, is undefined behavior.

use smis_core::engine::{self, EngineConfig, Method};
use smis_core::family::{self, FamilyId, FamilyOutcome};
use smis_core::gadget;
use smis_core::graph::Graph;
use smis_core::oracle;
use smis_core::{emit_graph6, parse_graph6};
use std::os::raw::c_char;

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SmisStatus {
    Ok = 0,
    InvalidArgument = 1,
    ParseError = 2,
    ResourceLimit = 3,
    Inconclusive = 4,
    NullPointer = 5,
    BufferTooSmall = 6,
}

/// Graph family selector for `smis_family_missing`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SmisFamily {
    All = 0,
    Planar = 1,
    Bipartite = 2,
    Forest = 3,
}

impl SmisFamily {
    fn to_family(self) -> FamilyId {
        match self {
            SmisFamily::All => FamilyId::All,
            SmisFamily::Planar => FamilyId::Planar,
            SmisFamily::Bipartite => FamilyId::Bipartite,
            SmisFamily::Forest => FamilyId::Forest,
        }
    }
}

/// Opaque undirected graph handle.
pub struct SmisGraph {
    inner: Graph,
}

/// Opaque missing-subgraph result handle.
pub struct SmisFinding {
    order: usize,
    witness: Graph,
    code_hex: String,
    engine: bool,
}

fn config(workers: u32) -> EngineConfig {
    EngineConfig {
        workers: workers.max(1) as usize,
        ..EngineConfig::default()
    }
}

fn finding(r: engine::SmisResult) -> *mut SmisFinding {
    Box::into_raw(Box::new(SmisFinding {
        order: r.k,
        code_hex: format!("{:x}", r.code.bits()),
        witness: r.missing,
        engine: r.method == Method::Engine,
    }))
}

/// Copies `s` plus a NUL terminator into `buf`. On success `written` holds
/// the string length without the terminator; on `BufferTooSmall` it holds
/// the required capacity including the terminator.
unsafe fn fill_buffer(s: &str, buf: *mut c_char, cap: usize, written: *mut usize) -> SmisStatus {
    if buf.is_null() || written.is_null() {
        return SmisStatus::NullPointer;
    }
    let needed = s.len() + 1;
    if cap < needed {
        *written = needed;
        return SmisStatus::BufferTooSmall;
    }
    std::ptr::copy_nonoverlapping(s.as_ptr(), buf as *mut u8, s.len());
    *buf.add(s.len()) = 0;
    *written = s.len();
    SmisStatus::Ok
}

/// Parses a graph6 byte string.
///
/// # Safety
/// `data` must point to `len` readable bytes; `out` must be valid for
/// writes.
#[no_mangle]
pub unsafe extern "C" fn smis_graph_from_graph6(
    data: *const u8,
    len: usize,
    out: *mut *mut SmisGraph,
) -> SmisStatus {
    if data.is_null() || out.is_null() {
        return SmisStatus::NullPointer;
    }
    let bytes = std::slice::from_raw_parts(data, len);
    match parse_graph6(bytes) {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(SmisGraph { inner }));
            SmisStatus::Ok
        }
        Err(_) => SmisStatus::ParseError,
    }
}

/// Builds a graph from an endpoint array of `2 * edge_count` entries
/// `u0, v0, u1, v1, ...`.
///
/// # Safety
/// `endpoints` must point to `2 * edge_count` readable values (may be null
/// when `edge_count` is 0); `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn smis_graph_from_edges(
    n: u32,
    endpoints: *const u32,
    edge_count: usize,
    out: *mut *mut SmisGraph,
) -> SmisStatus {
    if out.is_null() || (endpoints.is_null() && edge_count > 0) {
        return SmisStatus::NullPointer;
    }
    let flat = if edge_count == 0 {
        &[][..]
    } else {
        std::slice::from_raw_parts(endpoints, 2 * edge_count)
    };
    let edges: Vec<(usize, usize)> = flat
        .chunks_exact(2)
        .map(|p| (p[0] as usize, p[1] as usize))
        .collect();
    match Graph::from_edges(n as usize, &edges) {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(SmisGraph { inner }));
            SmisStatus::Ok
        }
        Err(_) => SmisStatus::InvalidArgument,
    }
}

/// Releases a graph handle; null is a no-op.
///
/// # Safety
/// `g` must have been produced by this library and not freed before.
#[no_mangle]
pub unsafe extern "C" fn smis_graph_free(g: *mut SmisGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count; 0 for null.
///
/// # Safety
/// `g` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn smis_graph_vertex_count(g: *const SmisGraph) -> u32 {
    g.as_ref().map_or(0, |g| g.inner.vertex_count() as u32)
}

/// Edge count; 0 for null.
///
/// # Safety
/// `g` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn smis_graph_edge_count(g: *const SmisGraph) -> u64 {
    g.as_ref().map_or(0, |g| g.inner.edge_count() as u64)
}

/// 1 if the edge exists, 0 if not, -1 on null or out-of-range input.
///
/// # Safety
/// `g` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn smis_graph_has_edge(g: *const SmisGraph, u: u32, v: u32) -> i32 {
    match g.as_ref() {
        Some(g)
            if (u as usize) < g.inner.vertex_count() && (v as usize) < g.inner.vertex_count() =>
        {
            i32::from(g.inner.has_edge(u as usize, v as usize))
        }
        _ => -1,
    }
}

/// Disjoint union; the second operand's vertices are shifted.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn smis_graph_disjoint_union(
    a: *const SmisGraph,
    b: *const SmisGraph,
    out: *mut *mut SmisGraph,
) -> SmisStatus {
    let (Some(a), Some(b)) = (a.as_ref(), b.as_ref()) else {
        return SmisStatus::NullPointer;
    };
    if out.is_null() {
        return SmisStatus::NullPointer;
    }
    match a.inner.disjoint_union(&b.inner) {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(SmisGraph { inner }));
            SmisStatus::Ok
        }
        Err(_) => SmisStatus::ResourceLimit,
    }
}

/// Writes the graph6 encoding (NUL-terminated) into a caller buffer.
///
/// # Safety
/// `g` must be a live handle; `buf` must have `cap` writable bytes;
/// `written` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn smis_graph_to_graph6(
    g: *const SmisGraph,
    buf: *mut c_char,
    cap: usize,
    written: *mut usize,
) -> SmisStatus {
    let Some(g) = g.as_ref() else {
        return SmisStatus::NullPointer;
    };
    fill_buffer(&emit_graph6(&g.inner), buf, cap, written)
}

/// Finds the smallest missing induced subgraph of `g`.
///
/// # Safety
/// `g` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn smis_find_missing(
    g: *const SmisGraph,
    workers: u32,
    out: *mut *mut SmisFinding,
) -> SmisStatus {
    let Some(g) = g.as_ref() else {
        return SmisStatus::NullPointer;
    };
    if out.is_null() {
        return SmisStatus::NullPointer;
    }
    match engine::smis(&g.inner, &config(workers)) {
        Ok(r) => {
            *out = finding(r);
            SmisStatus::Ok
        }
        Err(_) => SmisStatus::ResourceLimit,
    }
}

/// Smallest missing induced subgraph from a restricted family, searching
/// orders up to `max_order`.
///
/// # Safety
/// `g` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn smis_family_missing(
    g: *const SmisGraph,
    fam: SmisFamily,
    max_order: u32,
    workers: u32,
    out: *mut *mut SmisFinding,
) -> SmisStatus {
    let Some(g) = g.as_ref() else {
        return SmisStatus::NullPointer;
    };
    if out.is_null() {
        return SmisStatus::NullPointer;
    }
    match family::smallest_missing_in_family(
        &g.inner,
        fam.to_family(),
        max_order as usize,
        &config(workers),
    ) {
        Ok(FamilyOutcome::Found(r)) => {
            *out = finding(r);
            SmisStatus::Ok
        }
        Ok(FamilyOutcome::Inconclusive { .. }) => SmisStatus::Inconclusive,
        Err(family::FamilyError::KmaxTooLarge { .. }) => SmisStatus::InvalidArgument,
        Err(_) => SmisStatus::ResourceLimit,
    }
}

/// Releases a finding handle; null is a no-op.
///
/// # Safety
/// `f` must have been produced by this library and not freed before.
#[no_mangle]
pub unsafe extern "C" fn smis_finding_free(f: *mut SmisFinding) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// Order (vertex count) of the missing subgraph; 0 for null.
///
/// # Safety
/// `f` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn smis_finding_order(f: *const SmisFinding) -> u32 {
    f.as_ref().map_or(0, |f| f.order as u32)
}

/// Clones the witness graph into a fresh handle.
///
/// # Safety
/// `f` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn smis_finding_witness(
    f: *const SmisFinding,
    out: *mut *mut SmisGraph,
) -> SmisStatus {
    let Some(f) = f.as_ref() else {
        return SmisStatus::NullPointer;
    };
    if out.is_null() {
        return SmisStatus::NullPointer;
    }
    *out = Box::into_raw(Box::new(SmisGraph {
        inner: f.witness.clone(),
    }));
    SmisStatus::Ok
}

/// Writes the witness code as lowercase hex (no 0x prefix, NUL-terminated).
///
/// # Safety
/// `f` must be a live handle; `buf`/`written` as in `smis_graph_to_graph6`.
#[no_mangle]
pub unsafe extern "C" fn smis_finding_code_hex(
    f: *const SmisFinding,
    buf: *mut c_char,
    cap: usize,
    written: *mut usize,
) -> SmisStatus {
    let Some(f) = f.as_ref() else {
        return SmisStatus::NullPointer;
    };
    fill_buffer(&f.code_hex, buf, cap, written)
}

/// 1 when the finding came from the counting engine, 0 from the
/// enumerate-and-test oracle, -1 for null.
///
/// # Safety
/// `f` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn smis_finding_used_engine(f: *const SmisFinding) -> i32 {
    f.as_ref().map_or(-1, |f| i32::from(f.engine))
}

/// Exact clique number, through the gadget reduction or directly via
/// branch and bound.
///
/// # Safety
/// `g` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn smis_clique_number(
    g: *const SmisGraph,
    workers: u32,
    via_reduction: bool,
    out: *mut u32,
) -> SmisStatus {
    let Some(g) = g.as_ref() else {
        return SmisStatus::NullPointer;
    };
    if out.is_null() {
        return SmisStatus::NullPointer;
    }
    let result = if via_reduction {
        gadget::clique_number_via_smis(&g.inner, &config(workers)).map_err(|e| match e {
            gadget::GadgetError::EmptyHost => SmisStatus::InvalidArgument,
            _ => SmisStatus::ResourceLimit,
        })
    } else {
        oracle::max_clique(&g.inner).map_err(|_| SmisStatus::ResourceLimit)
    };
    match result {
        Ok(omega) => {
            *out = omega as u32;
            SmisStatus::Ok
        }
        Err(status) => status,
    }
}

/// Builds the all-but-clique gadget X_i. When `labels` is non-null it
/// receives one label per vertex; `labels_written` reports how many were
/// (or would be) written.
///
/// # Safety
/// `out` must be valid for writes; `labels`, when non-null, must have
/// `labels_cap` writable entries and `labels_written` must be valid.
#[no_mangle]
pub unsafe extern "C" fn smis_build_xi(
    i: u32,
    out: *mut *mut SmisGraph,
    labels: *mut u32,
    labels_cap: usize,
    labels_written: *mut usize,
) -> SmisStatus {
    if out.is_null() {
        return SmisStatus::NullPointer;
    }
    let built = match gadget::build_xi(i as usize) {
        Ok(x) => x,
        Err(gadget::GadgetError::IndexOutOfRange { .. }) => return SmisStatus::InvalidArgument,
        Err(_) => return SmisStatus::ResourceLimit,
    };
    if !labels.is_null() {
        if labels_written.is_null() {
            return SmisStatus::NullPointer;
        }
        *labels_written = built.labels.len();
        if labels_cap < built.labels.len() {
            return SmisStatus::BufferTooSmall;
        }
        std::ptr::copy_nonoverlapping(built.labels.as_ptr(), labels, built.labels.len());
    }
    *out = Box::into_raw(Box::new(SmisGraph { inner: built.graph }));
    SmisStatus::Ok
}

/// Static library version string.
#[no_mangle]
pub extern "C" fn smis_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}
