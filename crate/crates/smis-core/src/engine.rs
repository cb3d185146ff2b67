//! The counting engine: tally every labeled k-vertex subgraph code over
//! all ordered k-tuples, search the table for a zero counter, and grow k
//! until a missing subgraph appears.
//!
//! For an n-vertex graph the search is guaranteed to stop with
//! `k <= 2*log2(n) + 2`: past that point the table has more cells than
//! there are tuples to fill them.

use crate::code::{
    code_width, stream_codes_over_firsts, CodeBits, CodeError, SubgraphCode, MAX_SUBGRAPH_ORDER,
};
use crate::graph::Graph;
use crate::oracle::{self, OracleError};
use std::collections::BTreeMap;
use std::collections::HashMap;
use std::io::{self, Write};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error("dense table for order {k} needs 2^{width} counters, over the budget of {budget} (sparse fallback disabled)")]
    DenseBudgetExceeded { k: usize, width: usize, budget: u64 },
    #[error("missing-subgraph search stopped at order {reached}; cap is {cap}")]
    OrderCapReached { reached: usize, cap: usize },
    #[error("internal: no missing subgraph up to the guaranteed cutoff {cap} for n = {n}")]
    CutoffContradiction { n: usize, cap: usize },
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// How counter storage is chosen for a given order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TablePolicy {
    /// Dense array when `2^C(k,2)` fits the budget, sparse table otherwise.
    #[default]
    Auto,
    /// Dense array or error.
    DenseOnly,
    /// Sparse table always.
    SparseOnly,
}

#[derive(Debug, Clone)]
pub struct EngineConfig {
    /// Worker threads for counting; the result is identical for any count.
    pub workers: usize,
    /// Largest dense table, in counters.
    pub dense_budget: u64,
    pub table_policy: TablePolicy,
    /// Optional user cap on the missing-subgraph order (resource guard).
    pub max_order: Option<usize>,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            workers: 1,
            dense_budget: 1 << 28,
            table_policy: TablePolicy::Auto,
            max_order: None,
        }
    }
}

enum Storage {
    Dense(Vec<u64>),
    Sparse(HashMap<CodeBits, u64>),
}

/// Occurrence counts of every labeled subgraph code of one order.
///
/// After a full count of an n-vertex graph the total mass equals the
/// falling factorial `n * (n-1) * ... * (n-k+1)`.
pub struct CounterTable {
    k: usize,
    storage: Storage,
}

impl CounterTable {
    fn new(k: usize, cfg: &EngineConfig) -> Result<Self, EngineError> {
        if !(2..=MAX_SUBGRAPH_ORDER).contains(&k) {
            return Err(CodeError::OrderOutOfRange {
                k,
                min: 2,
                max: MAX_SUBGRAPH_ORDER,
            }
            .into());
        }
        let width = code_width(k);
        let dense_fits = width < 64 && (1u64 << width) <= cfg.dense_budget;
        let dense = match cfg.table_policy {
            TablePolicy::Auto => dense_fits,
            TablePolicy::SparseOnly => false,
            TablePolicy::DenseOnly => {
                if !dense_fits {
                    return Err(EngineError::DenseBudgetExceeded {
                        k,
                        width,
                        budget: cfg.dense_budget,
                    });
                }
                true
            }
        };
        let storage = if dense {
            Storage::Dense(vec![0u64; 1usize << width])
        } else {
            Storage::Sparse(HashMap::new())
        };
        Ok(CounterTable { k, storage })
    }

    pub fn order(&self) -> usize {
        self.k
    }

    pub fn is_dense(&self) -> bool {
        matches!(self.storage, Storage::Dense(_))
    }

    #[inline(always)]
    fn bump(&mut self, bits: &CodeBits) {
        match &mut self.storage {
            Storage::Dense(cells) => {
                let c = &mut cells[bits.low_u64() as usize];
                *c = c.saturating_add(1);
            }
            Storage::Sparse(map) => {
                let c = map.entry(*bits).or_insert(0);
                *c = c.saturating_add(1);
            }
        }
    }

    /// Counter for one code; the code's order must match the table's.
    pub fn get(&self, code: &SubgraphCode) -> u64 {
        assert_eq!(code.order(), self.k, "code order does not match the table");
        match &self.storage {
            Storage::Dense(cells) => cells[code.bits().low_u64() as usize],
            Storage::Sparse(map) => map.get(&code.bits()).copied().unwrap_or(0),
        }
    }

    /// Total counter mass (saturating).
    pub fn total(&self) -> u64 {
        match &self.storage {
            Storage::Dense(cells) => cells.iter().fold(0u64, |a, &c| a.saturating_add(c)),
            Storage::Sparse(map) => map.values().fold(0u64, |a, &c| a.saturating_add(c)),
        }
    }

    /// Nonzero counters sorted by code.
    pub fn nonzero(&self) -> Vec<(SubgraphCode, u64)> {
        let mut out: Vec<(SubgraphCode, u64)> = match &self.storage {
            Storage::Dense(cells) => cells
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(i, &c)| {
                    (
                        SubgraphCode::new(self.k, CodeBits::from_u64(i as u64)).unwrap(),
                        c,
                    )
                })
                .collect(),
            Storage::Sparse(map) => map
                .iter()
                .filter(|(_, &c)| c != 0)
                .map(|(b, &c)| (SubgraphCode::new(self.k, *b).unwrap(), c))
                .collect(),
        };
        out.sort_unstable_by_key(|(code, _)| *code);
        out
    }

    /// Numerically smallest code with a zero counter, if any.
    pub fn first_missing(&self) -> Option<SubgraphCode> {
        match &self.storage {
            Storage::Dense(cells) => cells
                .iter()
                .position(|&c| c == 0)
                .map(|i| SubgraphCode::new(self.k, CodeBits::from_u64(i as u64)).unwrap()),
            Storage::Sparse(map) => {
                // In increasing order, skip codes present in the table; by
                // pigeonhole the first absentee shows up within len+1 steps
                // unless every code of this width occurs.
                let width = code_width(self.k);
                if width < 64 && map.len() as u64 >= 1u64 << width {
                    return None;
                }
                let mut cand = CodeBits::ZERO;
                loop {
                    if !map.contains_key(&cand) {
                        return Some(SubgraphCode::new(self.k, cand).unwrap());
                    }
                    cand.increment();
                }
            }
        }
    }

    fn absorb(&mut self, other: CounterTable) {
        assert_eq!(self.k, other.k);
        match (&mut self.storage, other.storage) {
            (Storage::Dense(a), Storage::Dense(b)) => {
                for (x, y) in a.iter_mut().zip(b) {
                    *x = x.saturating_add(y);
                }
            }
            (Storage::Sparse(a), Storage::Sparse(b)) => {
                for (bits, c) in b {
                    let e = a.entry(bits).or_insert(0);
                    *e = e.saturating_add(c);
                }
            }
            _ => unreachable!("partial tables share one storage mode"),
        }
    }
}

/// Counts every labeled k-vertex subgraph code of `g`.
///
/// With several workers the tuple space is partitioned on the first tuple
/// coordinate; each worker owns a private table and the tables merge by
/// addition, so the result is identical for any worker count.
pub fn count_labeled(g: &Graph, k: usize, cfg: &EngineConfig) -> Result<CounterTable, EngineError> {
    let n = g.vertex_count();
    let workers = cfg.workers.max(1).min(n.max(1));
    if workers == 1 {
        let mut table = CounterTable::new(k, cfg)?;
        let firsts: Vec<usize> = (0..n).collect();
        stream_codes_over_firsts(g, k, &firsts, |bits| table.bump(bits))?;
        return Ok(table);
    }
    let mut partials = Vec::with_capacity(workers);
    for _ in 0..workers {
        partials.push(CounterTable::new(k, cfg)?);
    }
    let done: Vec<CounterTable> = std::thread::scope(|s| {
        let handles: Vec<_> = partials
            .into_iter()
            .enumerate()
            .map(|(w, mut table)| {
                s.spawn(move || {
                    let firsts: Vec<usize> = (w..n).step_by(workers).collect();
                    stream_codes_over_firsts(g, k, &firsts, |bits| table.bump(bits))
                        .expect("arguments validated by the sequential path");
                    table
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    let mut it = done.into_iter();
    let mut table = it.next().expect("at least one worker");
    for part in it {
        table.absorb(part);
    }
    Ok(table)
}

/// Smallest zero-counter code at order `k`, or `None` when every labeled
/// k-vertex code occurs in `g`.
pub fn find_missing_at(
    g: &Graph,
    k: usize,
    cfg: &EngineConfig,
) -> Result<Option<SubgraphCode>, EngineError> {
    Ok(count_labeled(g, k, cfg)?.first_missing())
}

/// How a result was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Engine,
    Oracle,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Method::Engine => write!(f, "engine"),
            Method::Oracle => write!(f, "oracle"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LevelStats {
    pub k: usize,
    pub tuples: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Diagnostics {
    /// Per-order tuple mass examined by the engine.
    pub levels: Vec<LevelStats>,
    /// Containment tests performed by the enumerate-and-test oracle.
    pub candidates_tested: u64,
}

/// A smallest missing induced subgraph: the order, the witness graph, its
/// code, and how it was found.
#[derive(Debug, Clone)]
pub struct SmisResult {
    pub k: usize,
    pub missing: Graph,
    pub code: SubgraphCode,
    pub method: Method,
    pub diagnostics: Diagnostics,
}

/// Guaranteed success cutoff: `floor(2*log2(n)) + 2` for n >= 1.
pub fn smis_order_cap(n: usize) -> usize {
    if n <= 1 {
        2
    } else {
        (n as u128 * n as u128).ilog2() as usize + 2
    }
}

/// Finds the smallest missing induced subgraph of `g`.
///
/// Ties among equally small missing subgraphs break to the numerically
/// smallest code, which is also the smallest canonical code over missing
/// isomorphism classes, so the engine and the brute-force oracle agree
/// exactly.
pub fn smis(g: &Graph, cfg: &EngineConfig) -> Result<SmisResult, EngineError> {
    smis_with_observer(g, cfg, |_| {})
}

/// [`smis`] with a per-order hook over the finished counter tables, used
/// for the counts dump.
pub fn smis_with_observer(
    g: &Graph,
    cfg: &EngineConfig,
    mut observe: impl FnMut(&CounterTable),
) -> Result<SmisResult, EngineError> {
    let n = g.vertex_count();
    if n == 0 {
        // Nothing occurs in the empty graph; the single vertex is the
        // smallest graph of all.
        return Ok(SmisResult {
            k: 1,
            missing: Graph::empty(1).expect("one vertex"),
            code: SubgraphCode::new(1, CodeBits::ZERO).expect("zero-width code"),
            method: Method::Engine,
            diagnostics: Diagnostics::default(),
        });
    }
    let cap = smis_order_cap(n);
    let stop = cap
        .min(cfg.max_order.unwrap_or(usize::MAX))
        .min(MAX_SUBGRAPH_ORDER);
    let mut diagnostics = Diagnostics::default();
    for k in 2..=stop {
        let table = count_labeled(g, k, cfg)?;
        diagnostics.levels.push(LevelStats {
            k,
            tuples: table.total(),
        });
        observe(&table);
        if let Some(code) = table.first_missing() {
            return Ok(SmisResult {
                k,
                missing: code.decode(),
                code,
                method: Method::Engine,
                diagnostics,
            });
        }
    }
    if stop < cap {
        Err(EngineError::OrderCapReached { reached: stop, cap })
    } else {
        Err(EngineError::CutoffContradiction { n, cap })
    }
}

/// Copy counts per isomorphism class: for each class with canonical code
/// `c`, the number of k-vertex subsets of `g` inducing that class. Classes
/// with no occurrences are absent from the map.
pub fn unlabeled_counts(
    g: &Graph,
    k: usize,
    cfg: &EngineConfig,
) -> Result<BTreeMap<SubgraphCode, u64>, EngineError> {
    let table = count_labeled(g, k, cfg)?;
    let mut mass: BTreeMap<SubgraphCode, u64> = BTreeMap::new();
    for (code, count) in table.nonzero() {
        let canon = oracle::canonical_code(&code.decode())?;
        let e = mass.entry(canon).or_insert(0);
        *e = e.saturating_add(count);
    }
    let fact: u64 = (1..=k as u64).product();
    for count in mass.values_mut() {
        debug_assert_eq!(*count % fact, 0, "class mass must be a multiple of k!");
        *count /= fact;
    }
    Ok(mass)
}

/// Writes the regression dump: one `k hex-code count` line per nonzero
/// counter, sorted by code.
pub fn write_counts_dump(table: &CounterTable, out: &mut impl Write) -> io::Result<()> {
    for (code, count) in table.nonzero() {
        writeln!(out, "{} 0x{:x} {}", code.order(), code.bits(), count)?;
    }
    Ok(())
}
