//! Smallest missing induced subgraph drawn from a restricted hereditary
//! family: enumerate the family's isomorphism classes in increasing order
//! and test each for containment.
//!
//! The size of the answer is one more than the largest k for which the host
//! is k-induced-universal for the family.

use crate::code::encode_identity;
use crate::engine::{self, Diagnostics, EngineConfig, EngineError, Method, SmisResult};
use crate::graph::Graph;
use crate::oracle::{self, OracleError};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("candidate cap {kmax} exceeds the enumeration cap {cap}")]
    KmaxTooLarge { kmax: usize, cap: usize },
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Engine(#[from] EngineError),
}

/// A hereditary graph family with a decidable membership predicate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyId {
    All,
    Planar,
    Bipartite,
    Forest,
}

impl FamilyId {
    /// Membership test; planarity is capped at candidate sizes.
    pub fn contains(&self, h: &Graph) -> Result<bool, OracleError> {
        match self {
            FamilyId::All => Ok(true),
            FamilyId::Planar => oracle::is_planar(h),
            FamilyId::Bipartite => Ok(oracle::is_bipartite(h)),
            FamilyId::Forest => Ok(oracle::is_forest(h)),
        }
    }

    pub fn parse(s: &str) -> Option<FamilyId> {
        match s {
            "all" => Some(FamilyId::All),
            "planar" => Some(FamilyId::Planar),
            "bipartite" => Some(FamilyId::Bipartite),
            "forest" => Some(FamilyId::Forest),
            _ => None,
        }
    }
}

impl std::fmt::Display for FamilyId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FamilyId::All => write!(f, "all"),
            FamilyId::Planar => write!(f, "planar"),
            FamilyId::Bipartite => write!(f, "bipartite"),
            FamilyId::Forest => write!(f, "forest"),
        }
    }
}

/// Search outcome: either a missing family member or an exhausted cap.
#[derive(Debug, Clone)]
pub enum FamilyOutcome {
    Found(SmisResult),
    Inconclusive { kmax: usize },
}

impl FamilyOutcome {
    pub fn found(&self) -> Option<&SmisResult> {
        match self {
            FamilyOutcome::Found(r) => Some(r),
            FamilyOutcome::Inconclusive { .. } => None,
        }
    }
}

/// Smallest family member of `fam` absent from `g`, searching orders
/// `1..=kmax`; the witness is the absentee with the smallest canonical
/// code. `All` delegates to the counting engine, which has no candidate
/// cap.
pub fn smallest_missing_in_family(
    g: &Graph,
    fam: FamilyId,
    kmax: usize,
    cfg: &EngineConfig,
) -> Result<FamilyOutcome, FamilyError> {
    if fam == FamilyId::All {
        return Ok(FamilyOutcome::Found(engine::smis(g, cfg)?));
    }
    if kmax > oracle::ENUM_ORDER_CAP {
        return Err(FamilyError::KmaxTooLarge {
            kmax,
            cap: oracle::ENUM_ORDER_CAP,
        });
    }
    let mut tested = 0u64;
    for k in 1..=kmax {
        let members = oracle::enumerate_nonisomorphic(k, |h| {
            fam.contains(h)
                .expect("candidates are within the planarity cap")
        })?;
        for rep in members {
            tested += 1;
            if !oracle::is_induced_subgraph(&rep, g) {
                let code = encode_identity(&rep).expect("canonical representatives encode");
                return Ok(FamilyOutcome::Found(SmisResult {
                    k,
                    missing: rep,
                    code,
                    method: Method::Oracle,
                    diagnostics: Diagnostics {
                        levels: Vec::new(),
                        candidates_tested: tested,
                    },
                }));
            }
        }
    }
    Ok(FamilyOutcome::Inconclusive { kmax })
}

/// Largest k such that every family member with k vertices is an induced
/// subgraph of `g`; one less than the family-restricted missing size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UniversalityOutcome {
    Index(usize),
    Inconclusive { kmax: usize },
}

pub fn universality_index(
    g: &Graph,
    fam: FamilyId,
    kmax: usize,
    cfg: &EngineConfig,
) -> Result<UniversalityOutcome, FamilyError> {
    Ok(match smallest_missing_in_family(g, fam, kmax, cfg)? {
        FamilyOutcome::Found(r) => UniversalityOutcome::Index(r.k - 1),
        FamilyOutcome::Inconclusive { kmax } => UniversalityOutcome::Inconclusive { kmax },
    })
}
