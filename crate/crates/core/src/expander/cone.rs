//! From shelled balls to cones, and starrings as bistellar moves.

use super::shellings::cone_lift;
use crate::complex::{Complex, Simplex, VertexId};
use crate::error::{Error, Result};
use crate::moves::{apply_move, Move, Transcript};
use crate::recognize::{find_shelling, Budget, ShellingSequence};

pub(crate) const NOTE_BALL_TO_CONE: &str = "ball-to-cone";

/// Bistellar moves turning the shelled ball `X` into `v⋆∂X`.
///
/// The first move stars the terminal facet with `v`; then each shelling
/// step `(A, B)` is undone, last first, by `κ(A, v⋆B)`. The length equals
/// the number of facets of `X`. Invert the result to go from the cone back
/// to `X`.
pub fn ball_to_cone_transcript(x: &Complex, sh: &ShellingSequence, v: VertexId) -> Result<Transcript> {
    if sh.is_sphere() {
        return Err(Error::InvalidShelling {
            index: 0,
            reason: "a ball shelling is required".into(),
        });
    }
    if x.has_vertex(v) {
        return Err(Error::JoinCollision { vertex: v });
    }
    sh.replay(x)?;
    let t = build(sh, v);
    let end = t.apply(x)?;
    let cone = x.boundary_complex()?.cone(v)?;
    if end != cone {
        return Err(Error::Expansion("ball-to-cone replay does not reach the cone".into()));
    }
    Ok(t)
}

fn build(sh: &ShellingSequence, v: VertexId) -> Transcript {
    let apex = Simplex::vertex(v);
    let mut t = Transcript::new();
    t.push_noted(Move::bistellar(sh.terminal.clone(), apex), NOTE_BALL_TO_CONE);
    for (a, b) in sh.steps.iter().rev() {
        t.push_noted(Move::bistellar(a.clone(), b.with_vertex(v)), NOTE_BALL_TO_CONE);
    }
    t
}

/// Bistellar moves from `M` to the starring `(A, apex)M`, given a shelling
/// of `lk(A, M)`.
pub fn star_move_transcript_with(
    m: &Complex,
    a: &Simplex,
    apex: VertexId,
    link_shelling: &ShellingSequence,
) -> Result<Transcript> {
    if a.is_empty() {
        return Err(Error::Expansion("cannot star the empty simplex".into()));
    }
    let star = m.star(a)?;
    let sh = a
        .vertices()
        .iter()
        .fold(link_shelling.clone(), |sh, &u| cone_lift(&sh, u));
    let t = ball_to_cone_transcript(&star, &sh, apex)?;
    let expected = apply_move(m, &Move::star(a.clone(), apex))?;
    let end = t.apply(m)?;
    if end != expected {
        return Err(Error::Expansion(format!(
            "starring {a} by bistellar moves does not match the stellar move"
        )));
    }
    Ok(t)
}

/// Bistellar moves from `M` to `(A, a)M` with `a` the fresh vertex of `M`.
/// The link of `A` is shelled by search within the budget.
pub fn star_move_transcript(m: &Complex, a: &Simplex, budget: &Budget) -> Result<Transcript> {
    star_move_transcript_apex(m, a, m.fresh_vertex(), budget)
}

/// [`star_move_transcript`] with a chosen apex.
pub fn star_move_transcript_apex(m: &Complex, a: &Simplex, apex: VertexId, budget: &Budget) -> Result<Transcript> {
    let link = m.link(a)?;
    let sh = find_shelling(&link, budget.shelling_nodes).ok_or_else(|| {
        Error::budget(format!("shelling search for lk({a}) = {link:?}"), budget.shelling_nodes)
    })?;
    star_move_transcript_with(m, a, apex, &sh)
}
