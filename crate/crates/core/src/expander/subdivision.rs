//! First derived subdivision as starrings, and its bistellar expansion.

use super::cone::star_move_transcript_apex;
use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::moves::{apply_move, Move, Transcript};
use crate::recognize::Budget;

/// Starrings producing the barycentric subdivision: every simplex of
/// dimension at least 1, in decreasing dimension and then lexicographic
/// order, with apex labels counting up from [`Complex::fresh_vertex`].
pub fn barycentric_starrings(m: &Complex) -> Vec<Move> {
    let mut faces: Vec<_> = m.faces().iter().filter(|s| s.len() >= 2).cloned().collect();
    faces.sort_by(|x, y| y.len().cmp(&x.len()).then_with(|| x.cmp(y)));
    let base = m.fresh_vertex();
    faces
        .into_iter()
        .zip(base..)
        .map(|(face, apex)| Move::star(face, apex))
        .collect()
}

/// The barycentric subdivision of `m`, labeled as by
/// [`barycentric_starrings`].
pub fn barycentric_subdivision(m: &Complex) -> Complex {
    barycentric_starrings(m)
        .iter()
        .fold(m.clone(), |k, mv| apply_move(&k, mv).expect("starrings of a derived subdivision are legal"))
}

/// Bistellar moves performing each starring in turn. Errors name the index
/// of the starring that failed.
pub fn subdivision_to_bistellar(m: &Complex, starrings: &[Move], budget: &Budget) -> Result<Transcript> {
    let mut cur = m.clone();
    let mut out = Transcript::new();
    for (i, mv) in starrings.iter().enumerate() {
        let Move::Star { face, apex } = mv else {
            return Err(Error::Expansion(format!("starring {i}: {mv} is not a starring")));
        };
        let next = apply_move(&cur, mv).map_err(|e| Error::Expansion(format!("starring {i}: {e}")))?;
        let t = star_move_transcript_apex(&cur, face, *apex, budget).map_err(|e| match e {
            Error::BudgetExhausted { what, limit } => Error::BudgetExhausted {
                what: format!("starring {i}: {what}"),
                limit,
            },
            e => Error::Expansion(format!("starring {i}: {e}")),
        })?;
        out.extend(t.annotate(&format!("starring {i}")));
        cur = next;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::isomorphic;

    #[test]
    fn derived_tetrahedron_boundary() {
        let s = Complex::standard_simplex_boundary(3);
        let b = barycentric_subdivision(&s);
        assert_eq!(b.f_vector().counts, vec![14, 36, 24]);
        let t = subdivision_to_bistellar(&s, &barycentric_starrings(&s), &Budget::default()).unwrap();
        assert_eq!(t.apply(&s).unwrap(), b);
        assert!(t.moves().all(|mv| matches!(mv, Move::Bistellar { .. })));
    }

    #[test]
    fn derived_subdivision_of_a_triangle_and_an_edge() {
        assert_eq!(
            barycentric_subdivision(&Complex::standard_simplex(2)).f_vector().counts,
            vec![7, 12, 6]
        );
        let e = barycentric_subdivision(&Complex::standard_simplex(1));
        assert!(isomorphic(&e, &Complex::from_facets(&[[0, 2], [1, 2]]).unwrap()).is_some());
    }

    #[test]
    fn single_facet_starring() {
        let s = Complex::standard_simplex_boundary(4);
        let t = subdivision_to_bistellar(&s, &[Move::star([0, 1, 2, 3], 5)], &Budget::default()).unwrap();
        assert_eq!(t.len(), 1);
        assert!(subdivision_to_bistellar(&s, &[], &Budget::default()).unwrap().is_empty());
    }

    #[test]
    fn errors_name_the_starring() {
        let s = Complex::standard_simplex_boundary(3);
        let bad = [Move::star([0, 1], 4), Move::star([0, 1], 5)];
        let err = subdivision_to_bistellar(&s, &bad, &Budget::default()).unwrap_err();
        assert!(err.to_string().contains("starring 1"), "{err}");
    }
}
