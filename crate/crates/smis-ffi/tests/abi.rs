//! Exercises the C entry points exactly as a foreign caller would:
//! raw pointers, status codes, and caller-owned buffers.

use smis_ffi::*;
use std::os::raw::c_char;
use std::ptr;

fn graph_from_edges(n: u32, edges: &[(u32, u32)]) -> *mut SmisGraph {
    let flat: Vec<u32> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    let mut out: *mut SmisGraph = ptr::null_mut();
    let status = unsafe { smis_graph_from_edges(n, flat.as_ptr(), edges.len(), &mut out) };
    assert_eq!(status, SmisStatus::Ok);
    assert!(!out.is_null());
    out
}

fn to_graph6(g: *const SmisGraph) -> String {
    let mut buf = vec![0 as c_char; 4096];
    let mut written = 0usize;
    let status = unsafe { smis_graph_to_graph6(g, buf.as_mut_ptr(), buf.len(), &mut written) };
    assert_eq!(status, SmisStatus::Ok);
    let bytes: Vec<u8> = buf[..written].iter().map(|&c| c as u8).collect();
    String::from_utf8(bytes).unwrap()
}

#[test]
fn graph_construction_and_queries() {
    let g = graph_from_edges(3, &[(0, 1), (1, 2)]);
    unsafe {
        assert_eq!(smis_graph_vertex_count(g), 3);
        assert_eq!(smis_graph_edge_count(g), 2);
        assert_eq!(smis_graph_has_edge(g, 0, 1), 1);
        assert_eq!(smis_graph_has_edge(g, 0, 2), 0);
        assert_eq!(smis_graph_has_edge(g, 0, 9), -1);
        smis_graph_free(g);
    }
}

#[test]
fn graph6_roundtrip_through_the_abi() {
    let mut parsed: *mut SmisGraph = ptr::null_mut();
    let status = unsafe { smis_graph_from_graph6(b"Bw".as_ptr(), 2, &mut parsed) };
    assert_eq!(status, SmisStatus::Ok);
    assert_eq!(to_graph6(parsed), "Bw");
    unsafe { smis_graph_free(parsed) };

    let mut bad: *mut SmisGraph = ptr::null_mut();
    let status = unsafe { smis_graph_from_graph6(b"A1".as_ptr(), 2, &mut bad) };
    assert_eq!(status, SmisStatus::ParseError);
    assert!(bad.is_null());
}

#[test]
fn buffer_too_small_reports_needed_size() {
    let g = graph_from_edges(3, &[(0, 1), (1, 2), (2, 0)]);
    let mut buf = [0 as c_char; 1];
    let mut written = 0usize;
    let status = unsafe { smis_graph_to_graph6(g, buf.as_mut_ptr(), 1, &mut written) };
    assert_eq!(status, SmisStatus::BufferTooSmall);
    assert_eq!(written, 3); // "Bw" plus the terminator
    unsafe { smis_graph_free(g) };
}

#[test]
fn find_missing_on_the_gadget() {
    let mut x4: *mut SmisGraph = ptr::null_mut();
    let mut labels = [0u32; 14];
    let mut labels_written = 0usize;
    let status = unsafe { smis_build_xi(4, &mut x4, labels.as_mut_ptr(), 14, &mut labels_written) };
    assert_eq!(status, SmisStatus::Ok);
    assert_eq!(labels_written, 14);
    assert_eq!(&labels[..2], &[1, 2]);
    assert_eq!(unsafe { smis_graph_vertex_count(x4) }, 14);

    let mut finding: *mut SmisFinding = ptr::null_mut();
    let status = unsafe { smis_find_missing(x4, 2, &mut finding) };
    assert_eq!(status, SmisStatus::Ok);
    unsafe {
        assert_eq!(smis_finding_order(finding), 4);
        assert_eq!(smis_finding_used_engine(finding), 1);

        let mut hex = [0 as c_char; 16];
        let mut written = 0usize;
        assert_eq!(
            smis_finding_code_hex(finding, hex.as_mut_ptr(), 16, &mut written),
            SmisStatus::Ok
        );
        let hex: String = hex[..written].iter().map(|&c| c as u8 as char).collect();
        assert_eq!(hex, "3f");

        let mut witness: *mut SmisGraph = ptr::null_mut();
        assert_eq!(smis_finding_witness(finding, &mut witness), SmisStatus::Ok);
        assert_eq!(to_graph6(witness), "C~");
        smis_graph_free(witness);
        smis_finding_free(finding);
        smis_graph_free(x4);
    }
}

#[test]
fn family_search_and_inconclusive() {
    // Path on 10 vertices misses the triangle among planar graphs.
    let edges: Vec<(u32, u32)> = (1..10).map(|v| (v - 1, v)).collect();
    let p10 = graph_from_edges(10, &edges);
    let mut finding: *mut SmisFinding = ptr::null_mut();
    let status = unsafe { smis_family_missing(p10, SmisFamily::Planar, 7, 1, &mut finding) };
    assert_eq!(status, SmisStatus::Ok);
    unsafe {
        assert_eq!(smis_finding_order(finding), 3);
        assert_eq!(smis_finding_used_engine(finding), 0);
        smis_finding_free(finding);
    }

    // A clique contains every forest on <= 2 vertices... except it has no
    // pair of nonadjacent vertices, so order 2 already misses the empty
    // pair; cap the search at order 1 to force the inconclusive path.
    let mut finding2: *mut SmisFinding = ptr::null_mut();
    let status = unsafe { smis_family_missing(p10, SmisFamily::Forest, 1, 1, &mut finding2) };
    assert_eq!(status, SmisStatus::Inconclusive);
    assert!(finding2.is_null());

    let status = unsafe { smis_family_missing(p10, SmisFamily::Forest, 99, 1, &mut finding2) };
    assert_eq!(status, SmisStatus::InvalidArgument);
    unsafe { smis_graph_free(p10) };
}

#[test]
fn clique_number_both_routes() {
    let c5 = graph_from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
    let mut omega = 0u32;
    assert_eq!(
        unsafe { smis_clique_number(c5, 1, true, &mut omega) },
        SmisStatus::Ok
    );
    assert_eq!(omega, 2);
    assert_eq!(
        unsafe { smis_clique_number(c5, 1, false, &mut omega) },
        SmisStatus::Ok
    );
    assert_eq!(omega, 2);
    unsafe { smis_graph_free(c5) };
}

#[test]
fn union_shifts_the_second_operand() {
    let k2 = graph_from_edges(2, &[(0, 1)]);
    let mut u: *mut SmisGraph = ptr::null_mut();
    assert_eq!(
        unsafe { smis_graph_disjoint_union(k2, k2, &mut u) },
        SmisStatus::Ok
    );
    unsafe {
        assert_eq!(smis_graph_vertex_count(u), 4);
        assert_eq!(smis_graph_edge_count(u), 2);
        assert_eq!(smis_graph_has_edge(u, 2, 3), 1);
        assert_eq!(smis_graph_has_edge(u, 1, 2), 0);
        smis_graph_free(u);
        smis_graph_free(k2);
    }
}

#[test]
fn null_pointers_are_rejected() {
    unsafe {
        assert_eq!(smis_graph_vertex_count(ptr::null()), 0);
        assert_eq!(smis_graph_has_edge(ptr::null(), 0, 0), -1);
        assert_eq!(smis_finding_order(ptr::null()), 0);
        assert_eq!(smis_finding_used_engine(ptr::null()), -1);
        let mut out: *mut SmisGraph = ptr::null_mut();
        assert_eq!(
            smis_graph_from_graph6(ptr::null(), 0, &mut out),
            SmisStatus::NullPointer
        );
        assert_eq!(
            smis_find_missing(ptr::null(), 1, ptr::null_mut()),
            SmisStatus::NullPointer
        );
        smis_graph_free(ptr::null_mut());
        smis_finding_free(ptr::null_mut());
    }
}

#[test]
fn version_is_a_c_string() {
    let v = smis_version();
    assert!(!v.is_null());
    let s = unsafe { std::ffi::CStr::from_ptr(v) };
    assert_eq!(s.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn generated_header_covers_the_surface() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/smis.h"))
        .expect("header generated at build time");
    for symbol in [
        "typedef struct SmisGraph SmisGraph",
        "typedef struct SmisFinding SmisFinding",
        "smis_graph_from_graph6",
        "smis_graph_from_edges",
        "smis_graph_free",
        "smis_graph_to_graph6",
        "smis_graph_disjoint_union",
        "smis_find_missing",
        "smis_family_missing",
        "smis_finding_code_hex",
        "smis_clique_number",
        "smis_build_xi",
        "smis_version",
        "SMIS_STATUS_BUFFER_TOO_SMALL",
    ] {
        assert!(header.contains(symbol), "header is missing {symbol}");
    }
}
