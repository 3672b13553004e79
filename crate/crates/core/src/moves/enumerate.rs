use std::collections::BTreeSet;

use super::check::{check_shell_in, factor_out_boundary};
use super::{check_move, Move, MoveFamily};
use crate::complex::{Complex, Simplex};

/// Minimal non-faces of `k` with at least two vertices: sets `S` of vertices
/// of `k` with `S ∉ k` but every proper face of `S` in `k`. Sorted.
pub fn minimal_nonfaces(k: &Complex) -> Vec<Simplex> {
    let vertices = k.vertices();
    let mut out = Vec::new();
    for t in k.faces() {
        if t.is_empty() {
            continue;
        }
        let top = *t.vertices().last().expect("nonempty");
        for &w in vertices.iter().filter(|&&w| w > top) {
            let s = t.with_vertex(w);
            if k.contains(&s) {
                continue;
            }
            if s.facets_of_boundary().all(|f| k.contains(&f)) {
                out.push(s);
            }
        }
    }
    out.sort();
    out
}

/// Candidates `B` with `lk = ∂B⋆L`, `B ∉ m`, `|B| ≥ 2`, sorted.
fn boundary_factors(m: &Complex, link: &Complex) -> Vec<Simplex> {
    minimal_nonfaces(link)
        .into_iter()
        .filter(|b| !m.contains(b) && factor_out_boundary(link, b).is_some())
        .collect()
}

fn nonempty_faces(m: &Complex) -> impl Iterator<Item = &Simplex> {
    m.faces().iter().filter(|s| !s.is_empty())
}

/// All legal moves of one family, ordered by `A` then `B`. New vertices are
/// labeled by [`Complex::fresh_vertex`].
pub fn enumerate_moves(m: &Complex, family: MoveFamily) -> Vec<Move> {
    let fresh = m.fresh_vertex();
    let fresh_b = Simplex::vertex(fresh);
    let mut out = Vec::new();
    match family {
        MoveFamily::Star => {
            out.extend(nonempty_faces(m).map(|a| Move::star(a.clone(), fresh)));
        }
        MoveFamily::Weld => {
            for v in m.vertices() {
                let link = m.link(&Simplex::vertex(v)).expect("vertex present");
                let mut bs = vec![fresh_b.clone()];
                bs.extend(boundary_factors(m, &link));
                bs.sort();
                out.extend(bs.into_iter().map(|b| Move::weld(v, b)));
            }
        }
        MoveFamily::Bistellar => {
            for a in nonempty_faces(m) {
                let link = m.link(a).expect("face present");
                if link.is_unit() {
                    out.push(Move::bistellar(a.clone(), fresh_b.clone()));
                    continue;
                }
                let b = Simplex::from_set(link.vertices());
                if b.len() >= 2 && !m.contains(&b) && link == Complex::simplex_boundary(&b) {
                    out.push(Move::bistellar(a.clone(), b));
                }
            }
        }
        MoveFamily::Exchange => {
            for a in nonempty_faces(m) {
                let link = m.link(a).expect("face present");
                let mut bs = vec![fresh_b.clone()];
                bs.extend(boundary_factors(m, &link));
                bs.sort();
                out.extend(bs.into_iter().map(|b| Move::exchange(a.clone(), b)));
            }
        }
        MoveFamily::Shell => {
            let Ok(boundary) = m.boundary_complex() else {
                return out;
            };
            for f in m.facets() {
                let n = f.len();
                for mask in 1..(1u32 << n) - 1 {
                    let a = Simplex::from_set((0..n).filter(|i| mask & (1 << i) != 0).map(|i| f.vertices()[i]));
                    let b = f.difference(&a);
                    if check_shell_in(m, &boundary, &a, &b) {
                        out.push(Move::shell(a, b));
                    }
                }
            }
        }
        MoveFamily::Unshell => {
            let Ok(boundary) = m.boundary_complex() else {
                return out;
            };
            let mut candidates: BTreeSet<(Simplex, Simplex)> = BTreeSet::new();
            let bverts = boundary.vertices();
            for ridge in boundary.facets() {
                candidates.insert((ridge.clone(), fresh_b.clone()));
                for &w in &bverts {
                    if ridge.contains_vertex(w) {
                        continue;
                    }
                    let f = ridge.with_vertex(w);
                    if m.contains(&f) {
                        continue;
                    }
                    let n = f.len();
                    for mask in 1..(1u32 << n) - 1 {
                        let a = Simplex::from_set(
                            (0..n).filter(|i| mask & (1 << i) != 0).map(|i| f.vertices()[i]),
                        );
                        let b = f.difference(&a);
                        if b.len() >= 2 {
                            candidates.insert((a, b));
                        }
                    }
                }
            }
            for (a, b) in candidates {
                let mv = Move::unshell(a, b);
                if check_move(m, &mv).legal {
                    out.push(mv);
                }
            }
        }
    }
    out.sort_by_key(key);
    out
}

fn key(mv: &Move) -> (Simplex, Simplex) {
    match mv {
        Move::Star { face, apex } => (face.clone(), Simplex::vertex(*apex)),
        Move::Weld { apex, face } => (Simplex::vertex(*apex), face.clone()),
        Move::Bistellar { a, b }
        | Move::Exchange { a, b }
        | Move::Shell { a, b }
        | Move::Unshell { a, b } => (a.clone(), b.clone()),
    }
}
