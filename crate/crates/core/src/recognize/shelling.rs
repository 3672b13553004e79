//! Shelling sequences and a backtracking search for them.

use std::collections::HashSet;
use std::fmt;

use crate::complex::{Complex, Simplex};
use crate::error::{Error, Result};
use crate::moves::{apply_move, enumerate_moves, Move, MoveFamily, Transcript};

/// A reduction of a ball (or, after removing one facet, a sphere) to a single
/// facet by elementary shellings.
///
/// Each step `(A, B)` removes the facet `A⋆B` from the current ball. The
/// complex `{∅}` counts as a ball whose only facet is `∅`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ShellingSequence {
    /// For a sphere, the facet removed first.
    pub removed: Option<Simplex>,
    pub steps: Vec<(Simplex, Simplex)>,
    /// The facet that remains.
    pub terminal: Simplex,
}

impl ShellingSequence {
    /// The trivial shelling of the single simplex `t`.
    pub fn single(t: Simplex) -> Self {
        ShellingSequence {
            removed: None,
            steps: Vec::new(),
            terminal: t,
        }
    }

    pub fn is_sphere(&self) -> bool {
        self.removed.is_some()
    }

    /// The shelling steps as moves.
    pub fn moves(&self) -> Transcript {
        self.steps
            .iter()
            .map(|(a, b)| Move::shell(a.clone(), b.clone()))
            .collect()
    }

    /// Replays the sequence on `x` and returns the final complex, which is
    /// the closure of `terminal`.
    pub fn replay(&self, x: &Complex) -> Result<Complex> {
        let mut cur = match &self.removed {
            Some(c) => {
                if !x.facets().contains(c) {
                    return Err(Error::InvalidShelling {
                        index: 0,
                        reason: format!("{c} is not a facet"),
                    });
                }
                x.without_facet(c)
            }
            None => x.clone(),
        };
        for (index, (a, b)) in self.steps.iter().enumerate() {
            cur = apply_move(&cur, &Move::shell(a.clone(), b.clone())).map_err(|e| {
                Error::InvalidShelling {
                    index,
                    reason: e.to_string(),
                }
            })?;
        }
        if cur != Complex::simplex(&self.terminal) {
            return Err(Error::InvalidShelling {
                index: self.steps.len(),
                reason: format!("ends at {cur:?}, not {}", self.terminal),
            });
        }
        Ok(cur)
    }

    /// The same sequence on relabeled vertices.
    pub fn relabel(&self, f: impl Fn(u32) -> u32) -> ShellingSequence {
        ShellingSequence {
            removed: self.removed.as_ref().map(|c| c.relabel(&f)),
            steps: self
                .steps
                .iter()
                .map(|(a, b)| (a.relabel(&f), b.relabel(&f)))
                .collect(),
            terminal: self.terminal.relabel(&f),
        }
    }
}

impl fmt::Display for ShellingSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(c) = &self.removed {
            writeln!(f, "REMOVE {c}")?;
        }
        for (a, b) in &self.steps {
            writeln!(f, "{}", Move::shell(a.clone(), b.clone()))?;
        }
        writeln!(f, "TERMINAL {}", self.terminal)
    }
}

/// Outcome of a bounded shelling search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShellingSearch {
    Found(ShellingSequence),
    /// The search space was exhausted; no shelling exists from the chosen
    /// starting data.
    NoneExists,
    BudgetExhausted,
}

impl ShellingSearch {
    pub fn found(self) -> Option<ShellingSequence> {
        match self {
            ShellingSearch::Found(s) => Some(s),
            _ => None,
        }
    }
}

/// Finds a shelling of `x` within `budget` search nodes, returning `None`
/// if there is none or the budget runs out.
///
/// A closed complex is searched in sphere mode, trying each facet in order
/// as the one removed first.
pub fn find_shelling(x: &Complex, budget: u64) -> Option<ShellingSequence> {
    search_shelling(x, budget).found()
}

pub fn search_shelling(x: &Complex, budget: u64) -> ShellingSearch {
    if x.is_void() || !x.is_pure() {
        return ShellingSearch::NoneExists;
    }
    if x.facet_count() == 1 {
        let t = x.facets().iter().next().expect("one facet").clone();
        return ShellingSearch::Found(ShellingSequence::single(t));
    }
    let boundary = match x.boundary_complex() {
        Ok(b) => b,
        Err(_) => return ShellingSearch::NoneExists,
    };
    let mut search = Search {
        budget,
        nodes: 0,
        failed: HashSet::new(),
    };
    if !boundary.is_void() {
        let mut steps = Vec::new();
        return match search.ball(x, &mut steps) {
            Ok(Some(t)) => ShellingSearch::Found(ShellingSequence {
                removed: None,
                steps,
                terminal: t,
            }),
            Ok(None) => ShellingSearch::NoneExists,
            Err(()) => ShellingSearch::BudgetExhausted,
        };
    }
    for c in x.facets() {
        let rest = x.without_facet(c);
        if rest.boundary_complex().is_err() {
            continue;
        }
        let mut steps = Vec::new();
        match search.ball(&rest, &mut steps) {
            Ok(Some(t)) => {
                return ShellingSearch::Found(ShellingSequence {
                    removed: Some(c.clone()),
                    steps,
                    terminal: t,
                })
            }
            Ok(None) => {}
            Err(()) => return ShellingSearch::BudgetExhausted,
        }
    }
    ShellingSearch::NoneExists
}

struct Search {
    budget: u64,
    nodes: u64,
    failed: HashSet<Complex>,
}

impl Search {
    /// Depth-first over legal shells in enumeration order. `Err` signals an
    /// exhausted budget.
    fn ball(&mut self, x: &Complex, steps: &mut Vec<(Simplex, Simplex)>) -> std::result::Result<Option<Simplex>, ()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(());
        }
        if x.facet_count() == 1 {
            return Ok(x.facets().iter().next().cloned());
        }
        if self.failed.contains(x) {
            return Ok(None);
        }
        for mv in enumerate_moves(x, MoveFamily::Shell) {
            let Move::Shell { a, b } = &mv else {
                unreachable!("shell enumeration yields shells")
            };
            let next = apply_move(x, &mv).expect("enumerated moves are legal");
            steps.push((a.clone(), b.clone()));
            if let Some(t) = self.ball(&next, steps)? {
                return Ok(Some(t));
            }
            steps.pop();
        }
        self.failed.insert(x.clone());
        Ok(None)
    }
}
