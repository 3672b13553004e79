//! Invariants and verdicts: homology, pseudomanifold checks, ball and sphere
//! recognition, manifold verification, and shelling search.

mod homology;
mod shelling;
mod verdict;

pub use homology::{homology, homology_with_limit, HomologyProfile, DEFAULT_HOMOLOGY_LIMIT};
pub use shelling::{find_shelling, search_shelling, ShellingSearch, ShellingSequence};
pub use verdict::{
    audit_links, classify_exact, is_closed_pseudomanifold, recognize_ball_or_sphere,
    verify_combinatorial_manifold,
};

use std::fmt;

use crate::complex::{Simplex, VertexId};
use crate::flip::Schedule;
use crate::moves::Transcript;

/// Search limits shared by the recognition procedures.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Budget {
    /// Backtracking nodes for shelling search.
    pub shelling_nodes: u64,
    /// Flip reduction schedule.
    pub schedule: Schedule,
    /// Largest complex, in simplexes, handed to homology.
    pub homology_limit: u64,
}

impl Budget {
    pub const DEFAULT_SHELLING_NODES: u64 = 20_000;
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            shelling_nodes: Self::DEFAULT_SHELLING_NODES,
            schedule: Schedule::default(),
            homology_limit: DEFAULT_HOMOLOGY_LIMIT,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VerdictKind {
    Sphere,
    Ball,
    Manifold,
    NotManifold,
    /// Provably not what was asked for.
    Other,
    /// The budget ran out first.
    Unknown,
}

impl VerdictKind {
    pub fn name(self) -> &'static str {
        match self {
            VerdictKind::Sphere => "sphere",
            VerdictKind::Ball => "ball",
            VerdictKind::Manifold => "manifold",
            VerdictKind::NotManifold => "not-manifold",
            VerdictKind::Other => "other",
            VerdictKind::Unknown => "unknown",
        }
    }
}

impl fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Why a verdict holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Evidence {
    None,
    /// Settled by the exact classification of graphs and surfaces.
    Exact,
    Shelling(ShellingSequence),
    /// Bistellar moves from the complex to a simplex boundary.
    Reduction(Transcript),
    /// Bistellar moves from the complex with `apex⋆∂K` attached to a simplex
    /// boundary.
    ConedReduction { apex: VertexId, transcript: Transcript },
    Homology(HomologyProfile),
    Counterexample { simplex: Simplex, reason: String },
    /// Per-simplex link verdicts.
    Links(Vec<(Simplex, VerdictKind)>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub kind: VerdictKind,
    pub evidence: Evidence,
}

impl Verdict {
    pub fn new(kind: VerdictKind, evidence: Evidence) -> Self {
        Verdict { kind, evidence }
    }

    pub fn counterexample(kind: VerdictKind, simplex: Simplex, reason: impl Into<String>) -> Self {
        Verdict::new(
            kind,
            Evidence::Counterexample {
                simplex,
                reason: reason.into(),
            },
        )
    }

    pub fn is_positive(&self) -> bool {
        matches!(
            self.kind,
            VerdictKind::Sphere | VerdictKind::Ball | VerdictKind::Manifold
        )
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "verdict: {}", self.kind)?;
        match &self.evidence {
            Evidence::None => {}
            Evidence::Exact => writeln!(f, "evidence: exact classification")?,
            Evidence::Shelling(s) => {
                writeln!(f, "evidence: shelling")?;
                write!(f, "{s}")?;
            }
            Evidence::Reduction(t) => {
                writeln!(f, "evidence: reduction to a simplex boundary in {} moves", t.len())?;
            }
            Evidence::ConedReduction { apex, transcript } => {
                writeln!(
                    f,
                    "evidence: coned with apex {apex}, reduced to a simplex boundary in {} moves",
                    transcript.len()
                )?;
            }
            Evidence::Homology(h) => {
                writeln!(f, "evidence: homology")?;
                write!(f, "{h}")?;
            }
            Evidence::Counterexample { simplex, reason } => {
                writeln!(f, "counterexample: {simplex}: {reason}")?;
            }
            Evidence::Links(links) => {
                for (s, k) in links {
                    writeln!(f, "link of {s}: {k}")?;
                }
            }
        }
        Ok(())
    }
}
