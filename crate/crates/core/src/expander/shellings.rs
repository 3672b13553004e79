//! Explicit shellings of cones and of joins with simplex boundaries.

use crate::complex::{Complex, Simplex, VertexId};
use crate::error::{Error, Result};
use crate::recognize::ShellingSequence;

/// Lifts a shelling of `X` to one of `v⋆X`. Sphere shellings become ball
/// shellings whose first step removes `v⋆C` for the removed facet `C`.
pub(crate) fn cone_lift(sh: &ShellingSequence, v: VertexId) -> ShellingSequence {
    let apex = Simplex::vertex(v);
    let mut steps = Vec::with_capacity(sh.steps.len() + 1);
    if let Some(c) = &sh.removed {
        steps.push((apex.clone(), c.clone()));
    }
    steps.extend(sh.steps.iter().map(|(a, b)| (a.with_vertex(v), b.clone())));
    ShellingSequence {
        removed: None,
        steps,
        terminal: sh.terminal.with_vertex(v),
    }
}

/// Shelling of `∂s`. For a single vertex this is the trivial shelling of
/// `{∅}`.
pub fn simplex_boundary_shelling(s: &Simplex) -> ShellingSequence {
    let Some(&c0) = s.vertices().first() else {
        panic!("the empty simplex has no boundary to shell");
    };
    if s.len() == 1 {
        return ShellingSequence::single(Simplex::empty());
    }
    let rest = s.without_vertex(c0);
    let lifted = cone_lift(&simplex_boundary_shelling(&rest), c0);
    ShellingSequence {
        removed: Some(rest),
        steps: lifted.steps,
        terminal: lifted.terminal,
    }
}

/// Lifts a shelling of `X` to one of `∂Δ⋆X`, where `Δ` is the simplex on
/// `delta`. `Δ = v⋆C` with `v` its smallest vertex.
pub(crate) fn join_lift(delta: &Simplex, sh: &ShellingSequence) -> ShellingSequence {
    if delta.len() <= 1 {
        return sh.clone();
    }
    if sh.removed.is_none() && sh.terminal.is_empty() {
        // X = {∅}, so ∂Δ⋆X = ∂Δ.
        return simplex_boundary_shelling(delta);
    }
    let v = delta.vertices()[0];
    let c = delta.without_vertex(v);
    match &sh.removed {
        None => {
            let mut steps: Vec<(Simplex, Simplex)> =
                sh.steps.iter().map(|(a, b)| (a.clone(), b.union(&c))).collect();
            steps.push((sh.terminal.clone(), c.clone()));
            let rest = cone_lift(&join_lift(&c, sh), v);
            steps.extend(rest.steps);
            ShellingSequence {
                removed: None,
                steps,
                terminal: rest.terminal,
            }
        }
        Some(d) => {
            let inner = cone_lift(&simplex_boundary_shelling(&c), v);
            let mut steps: Vec<(Simplex, Simplex)> =
                inner.steps.iter().map(|(a, b)| (a.clone(), b.union(d))).collect();
            steps.push((inner.terminal, d.clone()));
            let ball = ShellingSequence {
                removed: None,
                steps: sh.steps.clone(),
                terminal: sh.terminal.clone(),
            };
            let rest = join_lift(delta, &ball);
            steps.extend(rest.steps);
            ShellingSequence {
                removed: Some(c.union(d)),
                steps,
                terminal: rest.terminal,
            }
        }
    }
}

/// Shelling of `∂F₁⋆∂F₂⋆…` for vertex-disjoint simplexes `Fᵢ`.
pub fn join_of_boundaries_shelling(factors: &[Simplex]) -> ShellingSequence {
    factors
        .iter()
        .fold(ShellingSequence::single(Simplex::empty()), |sh, f| join_lift(f, &sh))
}

fn validate(x: &Complex, sh: &ShellingSequence) -> Result<()> {
    if x.is_unit() {
        return if sh == &ShellingSequence::single(Simplex::empty()) {
            Ok(())
        } else {
            Err(Error::InvalidShelling {
                index: 0,
                reason: "{∅} has only the trivial shelling".into(),
            })
        };
    }
    sh.replay(x).map(|_| ())
}

/// The shelling of `v⋆X` obtained from one of `X`: each step `(A, B)`
/// becomes `(v⋆A, B)`, and for a sphere the removed facet `C` is shelled
/// first as `(v, C)`.
pub fn cone_shelling(x: &Complex, sh: &ShellingSequence, v: VertexId) -> Result<ShellingSequence> {
    validate(x, sh)?;
    if x.has_vertex(v) {
        return Err(Error::JoinCollision { vertex: v });
    }
    Ok(cone_lift(sh, v))
}

/// The shelling of `∂Δ⋆X` obtained from one of `X`, where `Δ` is the simplex
/// on `delta`.
pub fn join_boundary_shelling(x: &Complex, delta: &Simplex, sh: &ShellingSequence) -> Result<ShellingSequence> {
    validate(x, sh)?;
    if let Some(&v) = delta.vertices().iter().find(|&&v| x.has_vertex(v)) {
        return Err(Error::JoinCollision { vertex: v });
    }
    Ok(join_lift(delta, sh))
}
