//! Fixed-width bit codes for labeled k-vertex subgraphs and the streaming
//! enumeration of codes over all ordered k-tuples of distinct vertices.
//!
//! The bit order is a frozen contract shared by every module and the CLI:
//! the pair `(i, j)` with `i > j` occupies bit `C(i,2) + j` (row-major
//! lower triangle). Codes compare as plain unsigned integers under this
//! layout.

use crate::graph::{Graph, VertexId};
use thiserror::Error;

/// Largest supported subgraph order; `C(22,2) = 231` bits fit in [`CodeBits`].
pub const MAX_SUBGRAPH_ORDER: usize = 22;

/// `C(k,2)`, the code width in bits for order `k`.
#[inline]
pub const fn code_width(k: usize) -> usize {
    k * (k - 1) / 2
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error("subgraph order {k} outside supported range [{min}, {max}]")]
    OrderOutOfRange { k: usize, min: usize, max: usize },
    #[error("tuple repeats vertex {v}")]
    DuplicateVertex { v: usize },
    #[error("tuple contains out-of-range vertex {v} (n = {n})")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("code bits exceed the {width}-bit width for order {k}")]
    BitsOutOfRange { k: usize, width: usize },
}

/// A 256-bit unsigned integer, wide enough for `C(22,2)` adjacency bits.
/// Limbs are little-endian; comparisons are numeric.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct CodeBits {
    limbs: [u64; 4],
}

impl CodeBits {
    pub const ZERO: CodeBits = CodeBits { limbs: [0; 4] };

    pub fn from_u64(v: u64) -> Self {
        CodeBits {
            limbs: [v, 0, 0, 0],
        }
    }

    /// All-ones value of the given bit width (e.g. the clique code).
    pub fn ones(width: usize) -> Self {
        let mut b = CodeBits::ZERO;
        for pos in 0..width {
            b.set_bit(pos);
        }
        b
    }

    #[inline(always)]
    pub fn bit(&self, pos: usize) -> bool {
        (self.limbs[pos >> 6] >> (pos & 63)) & 1 != 0
    }

    #[inline(always)]
    pub fn set_bit(&mut self, pos: usize) {
        self.limbs[pos >> 6] |= 1u64 << (pos & 63);
    }

    pub fn is_zero(&self) -> bool {
        self.limbs == [0; 4]
    }

    /// Low 64 bits; the full value when the width is at most 64.
    #[inline(always)]
    pub fn low_u64(&self) -> u64 {
        self.limbs[0]
    }

    /// Number of significant bits.
    pub fn bit_len(&self) -> usize {
        for i in (0..4).rev() {
            if self.limbs[i] != 0 {
                return 64 * i + (64 - self.limbs[i].leading_zeros() as usize);
            }
        }
        0
    }

    /// Adds one, wrapping at 2^256 (never reached for valid codes).
    pub fn increment(&mut self) {
        for limb in &mut self.limbs {
            let (v, carry) = limb.overflowing_add(1);
            *limb = v;
            if !carry {
                return;
            }
        }
    }
}

impl Ord for CodeBits {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        for i in (0..4).rev() {
            match self.limbs[i].cmp(&other.limbs[i]) {
                std::cmp::Ordering::Equal => continue,
                ord => return ord,
            }
        }
        std::cmp::Ordering::Equal
    }
}

impl PartialOrd for CodeBits {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::LowerHex for CodeBits {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut started = false;
        for i in (0..4).rev() {
            if started {
                write!(f, "{:016x}", self.limbs[i])?;
            } else if self.limbs[i] != 0 || i == 0 {
                write!(f, "{:x}", self.limbs[i])?;
                started = true;
            }
        }
        Ok(())
    }
}

impl std::fmt::Debug for CodeBits {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "0x{self:x}")
    }
}

/// A labeled k-vertex subgraph as its order plus `C(k,2)` adjacency bits.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubgraphCode {
    k: usize,
    bits: CodeBits,
}

impl std::fmt::Debug for SubgraphCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SubgraphCode(k={}, bits=0x{:x})", self.k, self.bits)
    }
}

impl SubgraphCode {
    /// Builds a code, validating `1 <= k <= 22` and the bit width.
    pub fn new(k: usize, bits: CodeBits) -> Result<Self, CodeError> {
        if !(1..=MAX_SUBGRAPH_ORDER).contains(&k) {
            return Err(CodeError::OrderOutOfRange {
                k,
                min: 1,
                max: MAX_SUBGRAPH_ORDER,
            });
        }
        let width = code_width(k);
        if bits.bit_len() > width {
            return Err(CodeError::BitsOutOfRange { k, width });
        }
        Ok(SubgraphCode { k, bits })
    }

    pub fn order(&self) -> usize {
        self.k
    }

    pub fn bits(&self) -> CodeBits {
        self.bits
    }

    /// The clique code of order `k`: all `C(k,2)` bits set.
    pub fn clique(k: usize) -> Result<Self, CodeError> {
        Self::new(k, CodeBits::ones(code_width(k)))
    }

    /// Decodes into the labeled graph the code describes:
    /// `encode_tuple(decode(c), 0..k) == c`.
    pub fn decode(&self) -> Graph {
        let mut g = Graph::empty(self.k).expect("order cap is far below the vertex cap");
        for i in 1..self.k {
            let base = code_width(i);
            for j in 0..i {
                if self.bits.bit(base + j) {
                    g.set_edge(i, j);
                }
            }
        }
        g
    }
}

/// Encodes the labeled subgraph induced by an ordered tuple of distinct
/// vertices: bit `C(i,2) + j` is set iff `g` joins `vs[i]` and `vs[j]`.
pub fn encode_tuple(g: &Graph, vs: &[VertexId]) -> Result<SubgraphCode, CodeError> {
    let k = vs.len();
    if !(2..=MAX_SUBGRAPH_ORDER).contains(&k) {
        return Err(CodeError::OrderOutOfRange {
            k,
            min: 2,
            max: MAX_SUBGRAPH_ORDER,
        });
    }
    check_tuple(g, vs)?;
    let mut bits = CodeBits::ZERO;
    for i in 1..k {
        let base = code_width(i);
        for j in 0..i {
            if g.adj_unchecked(vs[i], vs[j]) {
                bits.set_bit(base + j);
            }
        }
    }
    Ok(SubgraphCode { k, bits })
}

/// Code of a whole graph under the identity vertex order. Accepts k = 1.
pub fn encode_identity(g: &Graph) -> Result<SubgraphCode, CodeError> {
    let k = g.vertex_count();
    if !(1..=MAX_SUBGRAPH_ORDER).contains(&k) {
        return Err(CodeError::OrderOutOfRange {
            k,
            min: 1,
            max: MAX_SUBGRAPH_ORDER,
        });
    }
    if k == 1 {
        return SubgraphCode::new(1, CodeBits::ZERO);
    }
    let vs: Vec<usize> = (0..k).collect();
    encode_tuple(g, &vs)
}

fn check_tuple(g: &Graph, vs: &[VertexId]) -> Result<(), CodeError> {
    let n = g.vertex_count();
    let mut seen = vec![0u64; n.div_ceil(64).max(1)];
    for &v in vs {
        if v >= n {
            return Err(CodeError::VertexOutOfRange { v, n });
        }
        let (w, b) = (v / 64, v % 64);
        if seen[w] >> b & 1 != 0 {
            return Err(CodeError::DuplicateVertex { v });
        }
        seen[w] |= 1 << b;
    }
    Ok(())
}

/// Statistics returned by the streaming enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct StreamStats {
    /// Ordered tuples of distinct vertices visited.
    pub tuples: u64,
}

/// Streams the code of every ordered k-tuple of distinct vertices in
/// lexicographic tuple order; `n^(k)` visits in total.
///
/// The cursor keeps one prefix code per tuple position and recomputes only
/// the bits involving the deepest changed position, so the amortized update
/// cost per tuple is O(k).
pub fn stream_codes<F>(g: &Graph, k: usize, mut visit: F) -> Result<StreamStats, CodeError>
where
    F: FnMut(SubgraphCode),
{
    let firsts: Vec<usize> = (0..g.vertex_count()).collect();
    stream_codes_over_firsts(g, k, &firsts, move |bits| {
        visit(SubgraphCode { k, bits: *bits })
    })
}

/// Partitioned variant: streams only the tuples whose first coordinate lies
/// in `firsts` (in the given order). The union over a partition of the
/// vertex set equals the sequential stream as a multiset.
pub fn stream_codes_over_firsts<F>(
    g: &Graph,
    k: usize,
    firsts: &[VertexId],
    mut visit: F,
) -> Result<StreamStats, CodeError>
where
    F: FnMut(&CodeBits),
{
    if !(2..=MAX_SUBGRAPH_ORDER).contains(&k) {
        return Err(CodeError::OrderOutOfRange {
            k,
            min: 2,
            max: MAX_SUBGRAPH_ORDER,
        });
    }
    check_tuple(g, firsts)?;
    let n = g.vertex_count();
    if n < k {
        return Ok(StreamStats::default());
    }
    let mut cursor = TupleCursor {
        g,
        k,
        n,
        vs: [0; MAX_SUBGRAPH_ORDER],
        used: vec![0u64; n.div_ceil(64)],
        prefix: [CodeBits::ZERO; MAX_SUBGRAPH_ORDER + 1],
        tuples: 0,
    };
    for &v in firsts {
        cursor.vs[0] = v;
        cursor.mark(v);
        cursor.walk(1, &mut visit);
        cursor.unmark(v);
    }
    Ok(StreamStats {
        tuples: cursor.tuples,
    })
}

struct TupleCursor<'g> {
    g: &'g Graph,
    k: usize,
    n: usize,
    vs: [usize; MAX_SUBGRAPH_ORDER],
    used: Vec<u64>,
    /// `prefix[d]` encodes the first `d` tuple entries.
    prefix: [CodeBits; MAX_SUBGRAPH_ORDER + 1],
    tuples: u64,
}

impl<'g> TupleCursor<'g> {
    #[inline(always)]
    fn mark(&mut self, v: usize) {
        self.used[v >> 6] |= 1u64 << (v & 63);
    }

    #[inline(always)]
    fn unmark(&mut self, v: usize) {
        self.used[v >> 6] &= !(1u64 << (v & 63));
    }

    #[inline(always)]
    fn is_used(&self, v: usize) -> bool {
        (self.used[v >> 6] >> (v & 63)) & 1 != 0
    }

    /// Installs row `depth` for vertex `v`: copies the parent prefix and
    /// sets the bits pairing `v` with each earlier tuple entry.
    #[inline(always)]
    fn install(&mut self, depth: usize, v: usize) {
        let mut bits = self.prefix[depth];
        let base = code_width(depth);
        for j in 0..depth {
            if self.g.adj_unchecked(v, self.vs[j]) {
                bits.set_bit(base + j);
            }
        }
        self.prefix[depth + 1] = bits;
    }

    fn walk<F: FnMut(&CodeBits)>(&mut self, depth: usize, visit: &mut F) {
        if depth + 1 == self.k {
            // Leaf level: no deeper positions consult `used`.
            for v in 0..self.n {
                if !self.is_used(v) {
                    self.vs[depth] = v;
                    self.install(depth, v);
                    self.tuples += 1;
                    visit(&self.prefix[depth + 1]);
                }
            }
            return;
        }
        for v in 0..self.n {
            if !self.is_used(v) {
                self.vs[depth] = v;
                self.install(depth, v);
                self.mark(v);
                self.walk(depth + 1, visit);
                self.unmark(v);
            }
        }
    }
}
