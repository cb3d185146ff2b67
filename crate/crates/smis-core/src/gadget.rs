//! The all-but-clique gadget graphs X_i and the reductions built on them.
//!
//! X_i has `2^i - 2` vertices, contains every i-vertex graph except the
//! i-clique as an induced subgraph, and is labeled so that same-label
//! vertices form independent sets with no edge between labels 1 and 2.
//! Gluing X_i next to a host graph turns missing-subgraph search into an
//! exact clique-number procedure; the companion reduction maps 3-coloring
//! instances to clique instances.

use crate::code::SubgraphCode;
use crate::engine::{self, EngineConfig};
use crate::graph::{Graph, GraphError, MAX_VERTICES};
use crate::oracle;
use std::ops::Range;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GadgetError {
    #[error("gadget index {i} outside supported range [2, {max}]")]
    IndexOutOfRange { i: usize, max: usize },
    #[error("gadget X_{i} needs {vertices} vertices, over the {MAX_VERTICES} cap")]
    GadgetTooLarge { i: usize, vertices: usize },
    #[error("labels are malformed: {reason}")]
    BadLabels { reason: String },
    #[error("clique host must have at least one vertex")]
    EmptyHost,
    #[error("clique search exhausted resources at gadget index {i}: {reason}")]
    CliqueSearchExhausted { i: usize, reason: String },
    #[error("part count {t} invalid for {n} vertices")]
    BadPartCount { t: usize, n: usize },
    #[error("part size {size} exceeds the 3-coloring cap of {cap}")]
    PartSizeCap { size: usize, cap: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Largest buildable gadget index under the vertex cap: `2^12 - 2 = 4094`.
pub const MAX_GADGET_INDEX: usize = 20;

/// Part-size cap for the 3-coloring reduction (3^8 colorings per part).
pub const PART_SIZE_CAP: usize = 8;

/// A graph together with one integer label per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: Vec<u32>,
}

/// Builds the gadget X_i.
///
/// Base: two isolated vertices labeled 1 and 2. Step j adds `2^(j-1)`
/// vertices labeled j, one per subset S of {1..j-1} in binary-counter
/// order, each joined to every existing vertex whose label lies in S.
pub fn build_xi(i: usize) -> Result<LabeledGraph, GadgetError> {
    if !(2..=MAX_GADGET_INDEX).contains(&i) {
        return Err(GadgetError::IndexOutOfRange {
            i,
            max: MAX_GADGET_INDEX,
        });
    }
    let vertices = (1usize << i) - 2;
    if vertices > MAX_VERTICES {
        return Err(GadgetError::GadgetTooLarge { i, vertices });
    }
    let mut labels: Vec<u32> = vec![1, 2];
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for j in 3..=i {
        let existing = labels.len();
        for mask in 0u32..1 << (j - 1) {
            let v = labels.len();
            labels.push(j as u32);
            for (u, &lu) in labels[..existing].iter().enumerate() {
                if (mask >> (lu - 1)) & 1 != 0 {
                    edges.push((v, u));
                }
            }
        }
    }
    let graph = Graph::from_edges(vertices, &edges)?;
    Ok(LabeledGraph { graph, labels })
}

/// Outcome of one verified gadget property.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PropertyStatus {
    Pass,
    Fail,
    /// Not checked at this index (size caps).
    Skipped,
}

impl PropertyStatus {
    pub fn passed(self) -> bool {
        matches!(self, PropertyStatus::Pass)
    }
}

/// Per-property report from [`verify_xi`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct XiReport {
    /// Same-label vertices form independent sets.
    pub label_classes_independent: PropertyStatus,
    /// No edge joins the label-1 and label-2 vertices.
    pub no_edge_1_2: PropertyStatus,
    /// The clique number is exactly i - 1.
    pub clique_number: PropertyStatus,
    /// Every labeled i-vertex graph without a 1-2 edge embeds with labels
    /// preserved.
    pub labeled_universality: PropertyStatus,
}

impl XiReport {
    pub fn all_pass(&self) -> bool {
        self.label_classes_independent.passed()
            && self.no_edge_1_2.passed()
            && self.clique_number.passed()
            && self.labeled_universality.passed()
    }
}

/// Cap on the exhaustive labeled-universality check: 2^14 labeled graphs
/// at i = 6, each embedded into 62 candidate slots.
pub const VERIFY_EXHAUSTIVE_CAP: usize = 6;

/// Checks the four gadget properties of a labeled graph against index `i`.
///
/// Properties requiring exhaustive work degrade to `Skipped` above their
/// caps; malformed label structure is an error.
pub fn verify_xi(x: &LabeledGraph, i: usize) -> Result<XiReport, GadgetError> {
    if i < 2 {
        return Err(GadgetError::IndexOutOfRange {
            i,
            max: MAX_GADGET_INDEX,
        });
    }
    let n = x.graph.vertex_count();
    if x.labels.len() != n {
        return Err(GadgetError::BadLabels {
            reason: format!("{} labels for {} vertices", x.labels.len(), n),
        });
    }
    let mut class_size = vec![0usize; i + 1];
    for &l in &x.labels {
        if !(1..=i as u32).contains(&l) {
            return Err(GadgetError::BadLabels {
                reason: format!("label {l} outside 1..={i}"),
            });
        }
        class_size[l as usize] += 1;
    }
    if class_size[1] != 1 || (i >= 2 && class_size[2] != 1) {
        return Err(GadgetError::BadLabels {
            reason: "labels 1 and 2 must each appear exactly once".into(),
        });
    }
    for (j, &size) in class_size.iter().enumerate().skip(3) {
        if size != 1 << (j - 1) {
            return Err(GadgetError::BadLabels {
                reason: format!("label {j} must appear {} times", 1 << (j - 1)),
            });
        }
    }

    let independent = {
        let mut ok = true;
        'outer: for u in 0..n {
            for v in 0..u {
                if x.labels[u] == x.labels[v] && x.graph.has_edge(u, v) {
                    ok = false;
                    break 'outer;
                }
            }
        }
        status(ok)
    };

    let no_12 = {
        let v1 = x.labels.iter().position(|&l| l == 1).expect("checked");
        let v2 = x.labels.iter().position(|&l| l == 2).expect("checked");
        status(!x.graph.has_edge(v1, v2))
    };

    let clique = if n <= oracle::CLIQUE_ORDER_CAP && n > 0 {
        status(oracle::max_clique(&x.graph).expect("within cap") == i - 1)
    } else {
        PropertyStatus::Skipped
    };

    let universality = if i <= VERIFY_EXHAUSTIVE_CAP {
        status(labeled_universality_holds(x, i))
    } else {
        PropertyStatus::Skipped
    };

    Ok(XiReport {
        label_classes_independent: independent,
        no_edge_1_2: no_12,
        clique_number: clique,
        labeled_universality: universality,
    })
}

fn status(ok: bool) -> PropertyStatus {
    if ok {
        PropertyStatus::Pass
    } else {
        PropertyStatus::Fail
    }
}

/// Exhaustively embeds every i-vertex labeled graph without a 1-2 edge,
/// label-preservingly, into `x`. Pattern vertex j carries label j+1, so the
/// forbidden edge is the code bit for the pair (1, 0).
fn labeled_universality_holds(x: &LabeledGraph, i: usize) -> bool {
    let width = crate::code::code_width(i);
    let mut class: Vec<Vec<usize>> = vec![Vec::new(); i + 1];
    for (v, &l) in x.labels.iter().enumerate() {
        class[l as usize].push(v);
    }
    for raw in 0u64..1 << width {
        if raw & 1 != 0 {
            continue; // pattern has the forbidden 1-2 edge
        }
        let pattern = SubgraphCode::new(i, crate::code::CodeBits::from_u64(raw))
            .expect("width checked")
            .decode();
        if !embeds_with_labels(&pattern, x, &class) {
            return false;
        }
    }
    true
}

fn embeds_with_labels(pattern: &Graph, x: &LabeledGraph, class: &[Vec<usize>]) -> bool {
    // Pattern vertex j must map into class[j + 1]; classes are disjoint,
    // so injectivity is automatic.
    fn go(pattern: &Graph, x: &LabeledGraph, class: &[Vec<usize>], image: &mut Vec<usize>) -> bool {
        let depth = image.len();
        if depth == pattern.vertex_count() {
            return true;
        }
        'cand: for &c in &class[depth + 1] {
            for (l, &il) in image.iter().enumerate() {
                if pattern.has_edge(depth, l) != x.graph.has_edge(c, il) {
                    continue 'cand;
                }
            }
            image.push(c);
            if go(pattern, x, class, image) {
                return true;
            }
            image.pop();
        }
        false
    }
    go(pattern, x, class, &mut Vec::new())
}

/// Clique number through the missing-subgraph engine: for growing i, find
/// the smallest missing induced subgraph of `g` glued with X_i; the first
/// index whose missing subgraph is the i-clique exceeds the clique number
/// by one.
pub fn clique_number_via_smis(g: &Graph, cfg: &EngineConfig) -> Result<usize, GadgetError> {
    if g.vertex_count() == 0 {
        return Err(GadgetError::EmptyHost);
    }
    let exhausted = |i: usize, reason: String| GadgetError::CliqueSearchExhausted { i, reason };
    for i in 2.. {
        let xi = match build_xi(i) {
            Ok(x) => x,
            Err(e @ (GadgetError::GadgetTooLarge { .. } | GadgetError::IndexOutOfRange { .. })) => {
                return Err(exhausted(i, e.to_string()))
            }
            Err(e) => return Err(e),
        };
        let union = g
            .disjoint_union(&xi.graph)
            .map_err(|e| exhausted(i, e.to_string()))?;
        let result = engine::smis(&union, cfg).map_err(|e| exhausted(i, e.to_string()))?;
        // The union contains every graph of order < i, so the search never
        // answers below i; it answers exactly i with the clique as witness
        // iff the host has no i-clique.
        debug_assert!(result.k >= i);
        if result.k == i && result.code == SubgraphCode::clique(i).expect("i is in range") {
            return Ok(i - 1);
        }
    }
    unreachable!("the loop returns or errors")
}

/// One vertex of the 3-coloring reduction graph: a proper 3-coloring of a
/// single part of the host partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringVertex {
    pub part: usize,
    /// Colors of the part's vertices in order, each in 0..3.
    pub colors: Vec<u8>,
}

/// Output of [`reduce_3col_to_clique`].
#[derive(Debug, Clone)]
pub struct ThreeColorReduction {
    pub h: Graph,
    /// Contiguous host-vertex ranges, one per part.
    pub parts: Vec<Range<usize>>,
    /// Metadata for each vertex of `h`, in vertex order.
    pub vertices: Vec<ColoringVertex>,
}

/// Reduces 3-coloring of `g` to t-clique finding: vertices of the output
/// are proper 3-colorings of the parts of a balanced contiguous partition,
/// edges join colorings of different parts with no monochromatic crossing
/// edge. The output has a t-clique iff `g` is 3-colorable.
pub fn reduce_3col_to_clique(g: &Graph, t: usize) -> Result<ThreeColorReduction, GadgetError> {
    let n = g.vertex_count();
    if t == 0 || t > n {
        return Err(GadgetError::BadPartCount { t, n });
    }
    let base = n / t;
    let extra = n % t;
    let mut parts: Vec<Range<usize>> = Vec::with_capacity(t);
    let mut start = 0usize;
    for p in 0..t {
        let size = base + usize::from(p < extra);
        if size > PART_SIZE_CAP {
            return Err(GadgetError::PartSizeCap {
                size,
                cap: PART_SIZE_CAP,
            });
        }
        parts.push(start..start + size);
        start += size;
    }

    let mut vertices: Vec<ColoringVertex> = Vec::new();
    for (p, range) in parts.iter().enumerate() {
        let size = range.len();
        let total = 3u32.pow(size as u32);
        for seq in 0..total {
            let mut colors = Vec::with_capacity(size);
            let mut s = seq;
            for _ in 0..size {
                colors.push((s % 3) as u8);
                s /= 3;
            }
            let proper = range.clone().enumerate().all(|(a, u)| {
                range
                    .clone()
                    .enumerate()
                    .take(a)
                    .all(|(b, v)| !g.has_edge(u, v) || colors[a] != colors[b])
            });
            if proper {
                vertices.push(ColoringVertex { part: p, colors });
            }
        }
    }

    let mut edges = Vec::new();
    for a in 0..vertices.len() {
        for b in 0..a {
            let (va, vb) = (&vertices[a], &vertices[b]);
            if va.part == vb.part {
                continue;
            }
            let (ra, rb) = (parts[va.part].clone(), parts[vb.part].clone());
            let compatible = ra.clone().enumerate().all(|(ia, u)| {
                rb.clone()
                    .enumerate()
                    .all(|(ib, v)| !g.has_edge(u, v) || va.colors[ia] != vb.colors[ib])
            });
            if compatible {
                edges.push((a, b));
            }
        }
    }
    let h = Graph::from_edges(vertices.len(), &edges)?;
    Ok(ThreeColorReduction { h, parts, vertices })
}

/// Searches for a clique with one vertex per part; in the reduction graph
/// same-part vertices are never adjacent, so this decides the t-clique
/// question exactly.
pub fn t_clique_exists(red: &ThreeColorReduction) -> bool {
    let t = red.parts.len();
    let mut by_part: Vec<Vec<usize>> = vec![Vec::new(); t];
    for (v, meta) in red.vertices.iter().enumerate() {
        by_part[meta.part].push(v);
    }
    fn go(red: &ThreeColorReduction, by_part: &[Vec<usize>], chosen: &mut Vec<usize>) -> bool {
        let p = chosen.len();
        if p == by_part.len() {
            return true;
        }
        'cand: for &v in &by_part[p] {
            for &u in chosen.iter() {
                if !red.h.has_edge(v, u) {
                    continue 'cand;
                }
            }
            chosen.push(v);
            if go(red, by_part, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    go(red, &by_part, &mut Vec::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn x2_is_two_isolated_vertices() {
        let x = build_xi(2).unwrap();
        assert_eq!(x.graph.vertex_count(), 2);
        assert_eq!(x.graph.edge_count(), 0);
        assert_eq!(x.labels, vec![1, 2]);
    }

    #[test]
    fn x3_shape() {
        let x = build_xi(3).unwrap();
        assert_eq!(x.graph.vertex_count(), 6);
        assert_eq!(x.graph.edge_count(), 4);
        assert_eq!(x.labels, vec![1, 2, 3, 3, 3, 3]);
        // Subset vertices in binary-counter order: {}, {1}, {2}, {1,2}.
        assert_eq!(x.graph.degree(2), 0);
        assert!(x.graph.has_edge(3, 0) && !x.graph.has_edge(3, 1));
        assert!(x.graph.has_edge(4, 1) && !x.graph.has_edge(4, 0));
        assert!(x.graph.has_edge(5, 0) && x.graph.has_edge(5, 1));
    }

    #[test]
    fn xi_sizes_and_cliques() {
        for i in 2..=6 {
            let x = build_xi(i).unwrap();
            assert_eq!(x.graph.vertex_count(), (1 << i) - 2, "i = {i}");
            assert_eq!(oracle::max_clique(&x.graph).unwrap(), i - 1, "i = {i}");
        }
        assert_eq!(build_xi(5).unwrap().graph.edge_count(), 140);
        assert_eq!(build_xi(6).unwrap().graph.edge_count(), 620);
    }

    #[test]
    fn xi_is_incremental() {
        for i in 3..=6 {
            let smaller = build_xi(i - 1).unwrap();
            let bigger = build_xi(i).unwrap();
            let prefix: Vec<usize> = (0..smaller.graph.vertex_count()).collect();
            assert_eq!(bigger.graph.induced(&prefix).unwrap(), smaller.graph);
        }
    }

    #[test]
    fn verify_passes_for_built_gadgets() {
        for i in 2..=5 {
            let x = build_xi(i).unwrap();
            let report = verify_xi(&x, i).unwrap();
            assert!(report.all_pass(), "i = {i}: {report:?}");
        }
    }

    #[test]
    fn verify_catches_injected_1_2_edge() {
        let x = build_xi(4).unwrap();
        let mut edges = x.graph.edges();
        edges.push((0, 1));
        let mutated = LabeledGraph {
            graph: Graph::from_edges(x.graph.vertex_count(), &edges).unwrap(),
            labels: x.labels.clone(),
        };
        let report = verify_xi(&mutated, 4).unwrap();
        assert_eq!(report.no_edge_1_2, PropertyStatus::Fail);
    }

    #[test]
    fn verify_catches_same_label_edge() {
        let x = build_xi(3).unwrap();
        let mut edges = x.graph.edges();
        edges.push((2, 3)); // both labeled 3
        let mutated = LabeledGraph {
            graph: Graph::from_edges(6, &edges).unwrap(),
            labels: x.labels.clone(),
        };
        let report = verify_xi(&mutated, 3).unwrap();
        assert_eq!(report.label_classes_independent, PropertyStatus::Fail);
    }

    #[test]
    fn verify_rejects_bad_labels() {
        let x = build_xi(3).unwrap();
        let broken = LabeledGraph {
            graph: x.graph.clone(),
            labels: vec![1, 1, 3, 3, 3, 3],
        };
        assert!(matches!(
            verify_xi(&broken, 3),
            Err(GadgetError::BadLabels { .. })
        ));
    }

    #[test]
    fn clique_number_examples() {
        let cfg = EngineConfig::default();
        let edgeless = Graph::empty(3).unwrap();
        assert_eq!(clique_number_via_smis(&edgeless, &cfg).unwrap(), 1);
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(clique_number_via_smis(&k3, &cfg).unwrap(), 3);
        let c5 = generators::cycle(5).unwrap();
        assert_eq!(clique_number_via_smis(&c5, &cfg).unwrap(), 2);
        assert!(matches!(
            clique_number_via_smis(&Graph::empty(0).unwrap(), &cfg),
            Err(GadgetError::EmptyHost)
        ));
    }

    #[test]
    fn reduction_k3_singletons() {
        let red = reduce_3col_to_clique(&Graph::complete(3).unwrap(), 3).unwrap();
        assert_eq!(red.h.vertex_count(), 9);
        assert!(t_clique_exists(&red));
        assert_eq!(oracle::max_clique(&red.h).unwrap(), 3);
    }

    #[test]
    fn reduction_k4_two_parts() {
        let red = reduce_3col_to_clique(&Graph::complete(4).unwrap(), 2).unwrap();
        assert_eq!(red.h.vertex_count(), 12);
        assert!(red.h.is_edgeless());
        assert!(!t_clique_exists(&red));
    }

    #[test]
    fn reduction_c4_two_parts() {
        let red = reduce_3col_to_clique(&generators::cycle(4).unwrap(), 2).unwrap();
        assert!(t_clique_exists(&red));
    }

    #[test]
    fn reduction_rejects_bad_parameters() {
        let g = Graph::complete(3).unwrap();
        assert!(matches!(
            reduce_3col_to_clique(&g, 0),
            Err(GadgetError::BadPartCount { t: 0, n: 3 })
        ));
        assert!(matches!(
            reduce_3col_to_clique(&g, 4),
            Err(GadgetError::BadPartCount { t: 4, n: 3 })
        ));
        let big = Graph::empty(9).unwrap();
        assert!(matches!(
            reduce_3col_to_clique(&big, 1),
            Err(GadgetError::PartSizeCap { size: 9, .. })
        ));
    }

    #[test]
    fn gadget_caps() {
        assert!(matches!(
            build_xi(1),
            Err(GadgetError::IndexOutOfRange { i: 1, .. })
        ));
        assert!(matches!(
            build_xi(13),
            Err(GadgetError::GadgetTooLarge {
                i: 13,
                vertices: 8190
            })
        ));
    }
}
