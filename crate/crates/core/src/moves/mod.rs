//! The move families: stellar subdivision and weld, bistellar moves, stellar
//! exchanges, and elementary shellings with their inverses.

mod check;
mod enumerate;
mod transcript;

pub use check::{apply_move, check_move, IllegalReason, LegalityReport};
pub(crate) use check::factor_out_boundary;
pub use enumerate::{enumerate_moves, minimal_nonfaces};
pub use transcript::{apply_transcript, Step, Transcript};

use std::fmt;

use crate::complex::{Simplex, VertexId};

/// One move. Moves are plain data so transcripts can be serialized.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Move {
    /// Starring `(A,a)`: replace `st(A)` by `a⋆∂A⋆lk(A)`.
    Star { face: Simplex, apex: VertexId },
    /// Weld `(A,a)⁻¹`: replace `a⋆∂A⋆L` by `A⋆L`.
    Weld { apex: VertexId, face: Simplex },
    /// Bistellar move `κ(A,B)`, requiring `lk(A) = ∂B` and `B` new.
    Bistellar { a: Simplex, b: Simplex },
    /// Stellar exchange `κ(A,B)`, requiring `lk(A) = ∂B⋆L` and `B` new.
    Exchange { a: Simplex, b: Simplex },
    /// Elementary shelling from `B`: remove the facet `A⋆B`.
    Shell { a: Simplex, b: Simplex },
    /// Inverse shelling: glue the facet `A⋆B` along `A⋆∂B`.
    Unshell { a: Simplex, b: Simplex },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MoveFamily {
    Star,
    Weld,
    Bistellar,
    Exchange,
    Shell,
    Unshell,
}

impl MoveFamily {
    pub const ALL: [MoveFamily; 6] = [
        MoveFamily::Star,
        MoveFamily::Weld,
        MoveFamily::Bistellar,
        MoveFamily::Exchange,
        MoveFamily::Shell,
        MoveFamily::Unshell,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MoveFamily::Star => "star",
            MoveFamily::Weld => "weld",
            MoveFamily::Bistellar => "bistellar",
            MoveFamily::Exchange => "exchange",
            MoveFamily::Shell => "shell",
            MoveFamily::Unshell => "unshell",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.name() == name)
    }
}

impl Move {
    pub fn star(face: impl Into<Simplex>, apex: VertexId) -> Self {
        Move::Star {
            face: face.into(),
            apex,
        }
    }

    pub fn weld(apex: VertexId, face: impl Into<Simplex>) -> Self {
        Move::Weld {
            apex,
            face: face.into(),
        }
    }

    pub fn bistellar(a: impl Into<Simplex>, b: impl Into<Simplex>) -> Self {
        Move::Bistellar {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn exchange(a: impl Into<Simplex>, b: impl Into<Simplex>) -> Self {
        Move::Exchange {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn shell(a: impl Into<Simplex>, b: impl Into<Simplex>) -> Self {
        Move::Shell {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn unshell(a: impl Into<Simplex>, b: impl Into<Simplex>) -> Self {
        Move::Unshell {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn family(&self) -> MoveFamily {
        match self {
            Move::Star { .. } => MoveFamily::Star,
            Move::Weld { .. } => MoveFamily::Weld,
            Move::Bistellar { .. } => MoveFamily::Bistellar,
            Move::Exchange { .. } => MoveFamily::Exchange,
            Move::Shell { .. } => MoveFamily::Shell,
            Move::Unshell { .. } => MoveFamily::Unshell,
        }
    }

    /// The move undoing this one.
    pub fn invert(&self) -> Move {
        match self {
            Move::Star { face, apex } => Move::Weld {
                apex: *apex,
                face: face.clone(),
            },
            Move::Weld { apex, face } => Move::Star {
                face: face.clone(),
                apex: *apex,
            },
            Move::Bistellar { a, b } => Move::Bistellar {
                a: b.clone(),
                b: a.clone(),
            },
            Move::Exchange { a, b } => Move::Exchange {
                a: b.clone(),
                b: a.clone(),
            },
            Move::Shell { a, b } => Move::Unshell {
                a: a.clone(),
                b: b.clone(),
            },
            Move::Unshell { a, b } => Move::Shell {
                a: a.clone(),
                b: b.clone(),
            },
        }
    }

    pub fn relabel(&self, f: impl Fn(VertexId) -> VertexId) -> Move {
        match self {
            Move::Star { face, apex } => Move::Star {
                face: face.relabel(&f),
                apex: f(*apex),
            },
            Move::Weld { apex, face } => Move::Weld {
                apex: f(*apex),
                face: face.relabel(&f),
            },
            Move::Bistellar { a, b } => Move::Bistellar {
                a: a.relabel(&f),
                b: b.relabel(&f),
            },
            Move::Exchange { a, b } => Move::Exchange {
                a: a.relabel(&f),
                b: b.relabel(&f),
            },
            Move::Shell { a, b } => Move::Shell {
                a: a.relabel(&f),
                b: b.relabel(&f),
            },
            Move::Unshell { a, b } => Move::Unshell {
                a: a.relabel(&f),
                b: b.relabel(&f),
            },
        }
    }

    /// Every vertex label mentioned by the move.
    pub fn labels(&self) -> Vec<VertexId> {
        match self {
            Move::Star { face, apex } | Move::Weld { apex, face } => {
                let mut v = face.vertices().to_vec();
                v.push(*apex);
                v
            }
            Move::Bistellar { a, b }
            | Move::Exchange { a, b }
            | Move::Shell { a, b }
            | Move::Unshell { a, b } => a.union(b).vertices().to_vec(),
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::Star { face, apex } => write!(f, "STAR {face} {apex}"),
            Move::Weld { apex, face } => write!(f, "WELD {apex} {face}"),
            Move::Bistellar { a, b } => write!(f, "FLIP {a} ; {b}"),
            Move::Exchange { a, b } => write!(f, "XCHG {a} ; {b}"),
            Move::Shell { a, b } => write!(f, "SHELL {a} ; {b}"),
            Move::Unshell { a, b } => write!(f, "UNSHELL {a} ; {b}"),
        }
    }
}

impl fmt::Debug for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for Move {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        transcript::parse_move(s, 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inversion_pairs() {
        let a = Simplex::from([0, 1, 2]);
        assert_eq!(Move::star(a.clone(), 4).invert(), Move::weld(4, a.clone()));
        assert_eq!(
            Move::bistellar(a.clone(), [4]).invert(),
            Move::bistellar([4], a.clone())
        );
        assert_eq!(
            Move::shell([0], [1, 2]).invert(),
            Move::unshell([0], [1, 2])
        );
        for mv in [
            Move::star([1, 2], 7),
            Move::exchange([0], [3, 5]),
            Move::unshell([2, 3], [9]),
        ] {
            assert_eq!(mv.invert().invert(), mv);
        }
    }

    #[test]
    fn display_forms() {
        assert_eq!(Move::star([0, 1, 2], 4).to_string(), "STAR [0 1 2] 4");
        assert_eq!(Move::weld(4, [0, 1, 2]).to_string(), "WELD 4 [0 1 2]");
        assert_eq!(Move::bistellar([0, 1], [2, 3]).to_string(), "FLIP [0 1] ; [2 3]");
        assert_eq!(Move::exchange([0, 1], [2, 3]).to_string(), "XCHG [0 1] ; [2 3]");
        assert_eq!(Move::shell([0], [1, 2]).to_string(), "SHELL [0] ; [1 2]");
        assert_eq!(Move::unshell([0], [1, 2]).to_string(), "UNSHELL [0] ; [1 2]");
    }
}
