//! Independent brute-force ground truth: canonical forms, induced-subgraph
//! containment, exhaustive enumeration of isomorphism classes, maximum
//! clique, and the hereditary family predicates.
//!
//! Nothing here shares code with the counting engine; results from this
//! module cross-check the engine and vice versa.

use crate::code::{code_width, encode_identity, CodeBits, SubgraphCode};
use crate::engine::{Diagnostics, Method, SmisResult};
use crate::graph::Graph;
use thiserror::Error;

/// Permutation-search cap for canonicalization.
pub const CANONICAL_ORDER_CAP: usize = 10;
/// Exhaustive-enumeration cap: `2^C(7,2) = 2^21` labeled graphs.
pub const ENUM_ORDER_CAP: usize = 7;
/// Bit-row cap for the exact clique search.
pub const CLIQUE_ORDER_CAP: usize = 64;
/// Planarity decisions run on enumerated candidates only.
pub const PLANARITY_ORDER_CAP: usize = 10;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("{what} supports at most {cap} vertices, got {n}")]
    OrderCap {
        what: &'static str,
        n: usize,
        cap: usize,
    },
    #[error("inconclusive: every graph up to order {cap} is contained")]
    Inconclusive { cap: usize },
}

/// Canonical code: the minimum of [`crate::code::encode_tuple`] over all
/// vertex orderings. Isomorphic graphs share one canonical code, and the
/// decoded canonical code is the class representative.
pub fn canonical_code(h: &Graph) -> Result<SubgraphCode, OracleError> {
    let k = h.vertex_count();
    if k == 0 || k > CANONICAL_ORDER_CAP {
        return Err(OracleError::OrderCap {
            what: "canonicalization",
            n: k,
            cap: CANONICAL_ORDER_CAP,
        });
    }
    if k == 1 {
        return Ok(SubgraphCode::new(1, CodeBits::ZERO).expect("zero-width code"));
    }
    let mut perm: Vec<usize> = (0..k).collect();
    let mut best = encode_perm(h, &perm);
    // Heap's algorithm over all k! orderings.
    let mut c = vec![0usize; k];
    let mut i = 0;
    while i < k {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            let bits = encode_perm(h, &perm);
            if bits < best {
                best = bits;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(SubgraphCode::new(k, best).expect("width checked"))
}

/// Code of `h` relabeled by `perm` (no validation; callers own the perm).
fn encode_perm(h: &Graph, perm: &[usize]) -> CodeBits {
    let mut bits = CodeBits::ZERO;
    for i in 1..perm.len() {
        let base = code_width(i);
        for j in 0..i {
            if h.adj_unchecked(perm[i], perm[j]) {
                bits.set_bit(base + j);
            }
        }
    }
    bits
}

/// True iff some injective map embeds `h` into `g` preserving both edges
/// and non-edges. Plain backtracking: pattern vertices in descending-degree
/// order, candidate images pruned by degree and mapped-pair consistency.
pub fn is_induced_subgraph(h: &Graph, g: &Graph) -> bool {
    let k = h.vertex_count();
    let n = g.vertex_count();
    if k == 0 {
        return true;
    }
    if k > n {
        return false;
    }
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(h.degree(v)));
    let hdeg: Vec<usize> = order.iter().map(|&v| h.degree(v)).collect();
    let gdeg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();

    struct Search<'a> {
        h: &'a Graph,
        g: &'a Graph,
        order: &'a [usize],
        hdeg: &'a [usize],
        gdeg: &'a [usize],
        image: Vec<usize>,
        used: Vec<u64>,
    }
    impl Search<'_> {
        fn go(&mut self, depth: usize) -> bool {
            if depth == self.order.len() {
                return true;
            }
            let n = self.gdeg.len();
            'cand: for c in 0..n {
                if (self.used[c >> 6] >> (c & 63)) & 1 != 0 || self.gdeg[c] < self.hdeg[depth] {
                    continue;
                }
                for l in 0..depth {
                    let need = self.h.adj_unchecked(self.order[depth], self.order[l]);
                    if need != self.g.adj_unchecked(c, self.image[l]) {
                        continue 'cand;
                    }
                }
                self.image.push(c);
                self.used[c >> 6] |= 1 << (c & 63);
                if self.go(depth + 1) {
                    return true;
                }
                self.used[c >> 6] &= !(1 << (c & 63));
                self.image.pop();
            }
            false
        }
    }
    Search {
        h,
        g,
        order: &order,
        hdeg: &hdeg,
        gdeg: &gdeg,
        image: Vec::with_capacity(k),
        used: vec![0u64; n.div_ceil(64)],
    }
    .go(0)
}

/// One canonical representative per isomorphism class of order `k`
/// satisfying `keep`, sorted by canonical code.
///
/// Sweeps all `2^C(k,2)` labeled codes in increasing order: an unvisited
/// code is the minimum of its orbit, so it is canonical; its whole orbit is
/// then marked visited.
pub fn enumerate_nonisomorphic(
    k: usize,
    keep: impl Fn(&Graph) -> bool,
) -> Result<Vec<Graph>, OracleError> {
    if k == 0 || k > ENUM_ORDER_CAP {
        return Err(OracleError::OrderCap {
            what: "exhaustive enumeration",
            n: k,
            cap: ENUM_ORDER_CAP,
        });
    }
    let width = code_width(k);
    let total: u64 = 1 << width;
    let mut visited = vec![0u64; (total as usize).div_ceil(64)];
    let perms = all_permutations(k);
    let mut reps = Vec::new();
    for c in 0..total {
        if visited[(c >> 6) as usize] >> (c & 63) & 1 != 0 {
            continue;
        }
        let rep = SubgraphCode::new(k, CodeBits::from_u64(c))
            .expect("sweep stays within the code width")
            .decode();
        for perm in &perms {
            let bits = encode_perm(&rep, perm).low_u64();
            visited[(bits >> 6) as usize] |= 1 << (bits & 63);
        }
        if keep(&rep) {
            reps.push(rep);
        }
    }
    Ok(reps)
}

fn all_permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..k).collect();
    out.push(perm.clone());
    let mut c = vec![0usize; k];
    let mut i = 0;
    while i < k {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            out.push(perm.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// Brute-force smallest missing induced subgraph: for growing k, test every
/// isomorphism class of order k for containment; the witness is the
/// absentee with the smallest canonical code.
///
/// Conclusive only while the answer has at most [`ENUM_ORDER_CAP`] vertices.
pub fn smis_oracle(g: &Graph) -> Result<SmisResult, OracleError> {
    let mut tested = 0u64;
    for k in 1..=ENUM_ORDER_CAP {
        for rep in enumerate_nonisomorphic(k, |_| true)? {
            tested += 1;
            if !is_induced_subgraph(&rep, g) {
                let code = encode_identity(&rep).expect("canonical representatives encode");
                return Ok(SmisResult {
                    k,
                    missing: rep,
                    code,
                    method: Method::Oracle,
                    diagnostics: Diagnostics {
                        levels: Vec::new(),
                        candidates_tested: tested,
                    },
                });
            }
        }
    }
    Err(OracleError::Inconclusive {
        cap: ENUM_ORDER_CAP,
    })
}

/// Exact clique number by branch and bound over u64 bit rows (n <= 64).
pub fn max_clique(g: &Graph) -> Result<usize, OracleError> {
    let n = g.vertex_count();
    if n > CLIQUE_ORDER_CAP {
        return Err(OracleError::OrderCap {
            what: "exact clique search",
            n,
            cap: CLIQUE_ORDER_CAP,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    let adj: Vec<u64> = (0..n).map(|v| g.row(v)[0]).collect();

    fn extend(adj: &[u64], mut cand: u64, size: usize, best: &mut usize) {
        while cand != 0 {
            if size + cand.count_ones() as usize <= *best {
                return;
            }
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            let grown = size + 1;
            if grown > *best {
                *best = grown;
            }
            extend(adj, cand & adj[v], grown, best);
        }
    }

    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = 0usize;
    extend(&adj, full, 0, &mut best);
    Ok(best.max(1))
}

/// Planarity for candidate-sized graphs: edge-count prefilter, then an
/// exhaustive search for a K5 or K3,3 minor.
pub fn is_planar(h: &Graph) -> Result<bool, OracleError> {
    let n = h.vertex_count();
    if n > PLANARITY_ORDER_CAP {
        return Err(OracleError::OrderCap {
            what: "planarity test",
            n,
            cap: PLANARITY_ORDER_CAP,
        });
    }
    if n <= 4 {
        return Ok(true);
    }
    let m = h.edge_count();
    if m > 3 * n - 6 {
        return Ok(false);
    }
    // A K3,3 minor needs 9 edges, a K5 minor 10.
    if m <= 8 {
        return Ok(true);
    }
    let k5_edges: Vec<(usize, usize)> = (0..5).flat_map(|a| (0..a).map(move |b| (b, a))).collect();
    let k33_edges: Vec<(usize, usize)> = (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect();
    Ok(!has_minor(h, &k5_edges, 5, &[&[0, 1, 2, 3, 4]])
        && !has_minor(h, &k33_edges, 6, &[&[0, 1, 2], &[3, 4, 5]]))
}

/// Minor containment by exhaustive branch-set assignment: each host vertex
/// joins one of `parts` branch sets or stays unused; a complete assignment
/// is a minor model when every branch set is nonempty and connected and
/// every minor edge has a host edge between its branch sets.
///
/// `symmetry` lists groups of interchangeable minor vertices; within a
/// group, branch sets must be first used in increasing order, which prunes
/// relabelings of the minor without losing any model.
fn has_minor(
    g: &Graph,
    minor_edges: &[(usize, usize)],
    parts: usize,
    symmetry: &[&[usize]],
) -> bool {
    let n = g.vertex_count();
    if n < parts {
        return false;
    }
    let rows: Vec<u64> = (0..n).map(|v| g.row(v)[0]).collect();

    struct Assign<'a> {
        rows: &'a [u64],
        minor_edges: &'a [(usize, usize)],
        parts: usize,
        symmetry: &'a [&'a [usize]],
        masks: Vec<u64>,
    }
    impl Assign<'_> {
        fn allowed(&self, s: usize) -> bool {
            // First-use order within each symmetry group.
            for group in self.symmetry {
                if let Some(pos) = group.iter().position(|&x| x == s) {
                    return group[..pos].iter().all(|&x| self.masks[x] != 0);
                }
            }
            true
        }

        fn complete(&self) -> bool {
            for &mask in &self.masks {
                if !connected(self.rows, mask) {
                    return false;
                }
            }
            self.minor_edges.iter().all(|&(a, b)| {
                let mut touch = 0u64;
                let mut bits = self.masks[a];
                while bits != 0 {
                    let v = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    touch |= self.rows[v];
                }
                touch & self.masks[b] != 0
            })
        }

        fn go(&mut self, v: usize, unused_left: usize) -> bool {
            let n = self.rows.len();
            if v == n {
                return self.complete();
            }
            let empty = self.masks.iter().filter(|&&m| m == 0).count();
            if empty > n - v {
                return false;
            }
            for s in 0..self.parts {
                if self.masks[s] == 0 && !self.allowed(s) {
                    continue;
                }
                self.masks[s] |= 1 << v;
                if self.go(v + 1, unused_left) {
                    return true;
                }
                self.masks[s] &= !(1 << v);
            }
            if unused_left > 0 && self.go(v + 1, unused_left - 1) {
                return true;
            }
            false
        }
    }

    fn connected(rows: &[u64], mask: u64) -> bool {
        if mask == 0 {
            return false;
        }
        let start = mask.trailing_zeros() as usize;
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            let mut bits = frontier;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                next |= rows[v] & mask;
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen & mask == mask
    }

    Assign {
        rows: &rows,
        minor_edges,
        parts,
        symmetry,
        masks: vec![0u64; parts],
    }
    .go(0, n - parts)
}

/// 2-colorability by BFS over every component.
pub fn is_bipartite(h: &Graph) -> bool {
    let n = h.vertex_count();
    let mut color = vec![u8::MAX; n];
    for start in 0..n {
        if color[start] != u8::MAX {
            continue;
        }
        color[start] = 0;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for u in h.neighbors(v) {
                if color[u] == u8::MAX {
                    color[u] = 1 - color[v];
                    queue.push_back(u);
                } else if color[u] == color[v] {
                    return false;
                }
            }
        }
    }
    true
}

/// Acyclicity via union-find.
pub fn is_forest(h: &Graph) -> bool {
    let n = h.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    for (u, v) in h.edges() {
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru == rv {
            return false;
        }
        parent[ru] = rv;
    }
    true
}

/// Proper 3-colorability by backtracking with palette symmetry breaking.
pub fn is_three_colorable(g: &Graph) -> bool {
    let n = g.vertex_count();
    let mut colors = vec![u8::MAX; n];
    fn go(g: &Graph, colors: &mut [u8], v: usize, palette_used: u8) -> bool {
        if v == colors.len() {
            return true;
        }
        let limit = (palette_used + 1).min(3);
        'c: for c in 0..limit {
            for u in g.neighbors(v) {
                if u < v && colors[u] == c {
                    continue 'c;
                }
            }
            colors[v] = c;
            if go(g, colors, v + 1, palette_used.max(c + 1)) {
                return true;
            }
        }
        colors[v] = u8::MAX;
        false
    }
    go(g, &mut colors, 0, 0)
}
