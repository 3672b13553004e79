use std::fmt;

use super::Move;
use crate::complex::{Complex, Simplex};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IllegalReason {
    EmptySimplex,
    NotDisjoint,
    /// A simplex the move operates on is missing.
    AbsentSimplex(Simplex),
    /// The new vertex of a starring already occurs in the complex.
    ApexPresent,
    /// The simplex a move would create is already present.
    NewSimplexPresent(Simplex),
    /// The link does not have the required form `∂B` or `∂B⋆L`.
    LinkMismatch,
    NotAFacet,
    DimensionMismatch,
    NotPure,
    NotPseudomanifold,
    /// `A ∩ ∂M ≠ ∂A`.
    NotInterior,
    /// `B⋆∂A ⊄ ∂M` (or `A⋆∂B ⊄ ∂M` when gluing).
    NotOnBoundary,
    /// The facet does not meet the rest of the complex in exactly `A⋆∂B`.
    ImproperGluing,
}

impl fmt::Display for IllegalReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IllegalReason::EmptySimplex => f.write_str("empty simplex where a nonempty one is required"),
            IllegalReason::NotDisjoint => f.write_str("simplexes share a vertex"),
            IllegalReason::AbsentSimplex(s) => write!(f, "{s} is not in the complex"),
            IllegalReason::ApexPresent => f.write_str("new vertex already in the complex"),
            IllegalReason::NewSimplexPresent(s) => write!(f, "{s} is already in the complex"),
            IllegalReason::LinkMismatch => f.write_str("link does not have the required form"),
            IllegalReason::NotAFacet => f.write_str("not a facet"),
            IllegalReason::DimensionMismatch => f.write_str("dimension mismatch"),
            IllegalReason::NotPure => f.write_str("complex is not pure"),
            IllegalReason::NotPseudomanifold => f.write_str("a ridge lies in three or more facets"),
            IllegalReason::NotInterior => f.write_str("A meets the boundary in more than its own boundary"),
            IllegalReason::NotOnBoundary => f.write_str("required faces are not on the boundary"),
            IllegalReason::ImproperGluing => f.write_str("facet is not glued along exactly A⋆∂B"),
        }
    }
}

/// Outcome of [`check_move`]. `link_factor` is the complex `L` with
/// `lk(A) = ∂B⋆L` for the families where it is defined.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LegalityReport {
    pub mv: Move,
    pub legal: bool,
    pub reason: Option<IllegalReason>,
    pub link_factor: Option<Complex>,
}

impl LegalityReport {
    fn ok(mv: &Move, link_factor: Option<Complex>) -> Self {
        LegalityReport {
            mv: mv.clone(),
            legal: true,
            reason: None,
            link_factor,
        }
    }

    fn illegal(mv: &Move, reason: IllegalReason) -> Self {
        LegalityReport {
            mv: mv.clone(),
            legal: false,
            reason: Some(reason),
            link_factor: None,
        }
    }
}

impl fmt::Display for LegalityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.reason {
            None => write!(f, "{} is legal", self.mv),
            Some(r) => write!(f, "{} is illegal: {r}", self.mv),
        }
    }
}

type Check<T> = std::result::Result<T, IllegalReason>;

fn require_nonempty(s: &Simplex) -> Check<()> {
    if s.is_empty() {
        Err(IllegalReason::EmptySimplex)
    } else {
        Ok(())
    }
}

fn require_present(m: &Complex, s: &Simplex) -> Check<()> {
    if m.contains(s) {
        Ok(())
    } else {
        Err(IllegalReason::AbsentSimplex(s.clone()))
    }
}

fn require_new(m: &Complex, s: &Simplex) -> Check<()> {
    if m.contains(s) {
        Err(IllegalReason::NewSimplexPresent(s.clone()))
    } else {
        Ok(())
    }
}

/// Computes `L` with `link = ∂B⋆L`, if the link factors that way.
pub(crate) fn factor_out_boundary(link: &Complex, b: &Simplex) -> Option<Complex> {
    let first = *b.vertices().first()?;
    let opposite = b.without_vertex(first);
    let rest = if opposite.is_empty() {
        link.clone()
    } else {
        link.link(&opposite).ok()?
    };
    if b.vertices().iter().any(|&v| rest.has_vertex(v)) {
        return None;
    }
    let rebuilt = Complex::simplex_boundary(b).join(&rest).ok()?;
    (&rebuilt == link).then_some(rest)
}

/// `lk(A,M) = ∂B⋆L` with `A ∈ M` and `B ∉ M`; returns `L`.
fn exchange_factor(m: &Complex, a: &Simplex, b: &Simplex) -> Check<Complex> {
    require_nonempty(a)?;
    require_nonempty(b)?;
    if !a.is_disjoint(b) {
        return Err(IllegalReason::NotDisjoint);
    }
    require_present(m, a)?;
    require_new(m, b)?;
    let link = m.link(a).map_err(|_| IllegalReason::AbsentSimplex(a.clone()))?;
    factor_out_boundary(&link, b).ok_or(IllegalReason::LinkMismatch)
}

/// Replaces the facets through `a` by `∂A⋆B⋆L`.
fn exchange_surgery(m: &Complex, a: &Simplex, b: &Simplex, l: &Complex) -> Complex {
    let mut added = Vec::new();
    for da in a.facets_of_boundary() {
        let base = da.union(b);
        for g in l.facets() {
            added.push(base.union(g));
        }
    }
    m.replace_facets(|f| a.is_face_of(f), added)
}

fn check_shell_with(m: &Complex, boundary: &Complex, a: &Simplex, b: &Simplex) -> Check<()> {
    require_nonempty(a)?;
    require_nonempty(b)?;
    if !a.is_disjoint(b) {
        return Err(IllegalReason::NotDisjoint);
    }
    let facet = a.union(b);
    if !m.facets().contains(&facet) {
        return Err(IllegalReason::NotAFacet);
    }
    if facet.dim() != m.dim() {
        return Err(IllegalReason::DimensionMismatch);
    }
    // A ∩ ∂M = ∂A: A itself is off the boundary, its proper faces are on it.
    if boundary.contains(a) {
        return Err(IllegalReason::NotInterior);
    }
    if a.len() >= 2 && !a.facets_of_boundary().all(|da| boundary.contains(&da)) {
        return Err(IllegalReason::NotInterior);
    }
    // B⋆∂A ⊂ ∂M.
    if !a.facets_of_boundary().all(|da| boundary.contains(&da.union(b))) {
        return Err(IllegalReason::NotOnBoundary);
    }
    let rest = m.without_facet(&facet);
    check_gluing(&rest, a, b)
}

/// The closed simplex `A⋆B` meets `rest` in exactly `A⋆∂B`.
fn check_gluing(rest: &Complex, a: &Simplex, b: &Simplex) -> Check<()> {
    if rest.contains(b) {
        return Err(IllegalReason::ImproperGluing);
    }
    if !b.facets_of_boundary().all(|db| rest.contains(&a.union(&db))) {
        return Err(IllegalReason::ImproperGluing);
    }
    Ok(())
}

fn shell_boundary(m: &Complex) -> Check<Complex> {
    match m.boundary_complex() {
        Ok(bd) => Ok(bd),
        Err(Error::NotPure) => Err(IllegalReason::NotPure),
        Err(_) => Err(IllegalReason::NotPseudomanifold),
    }
}

fn check_unshell(m: &Complex, a: &Simplex, b: &Simplex) -> Check<()> {
    require_nonempty(a)?;
    require_nonempty(b)?;
    if !a.is_disjoint(b) {
        return Err(IllegalReason::NotDisjoint);
    }
    let facet = a.union(b);
    require_new(m, &facet)?;
    if m.is_void() || facet.dim() != m.dim() {
        return Err(IllegalReason::DimensionMismatch);
    }
    let boundary = shell_boundary(m)?;
    check_gluing(m, a, b)?;
    if !b
        .facets_of_boundary()
        .all(|db| boundary.facets().contains(&a.union(&db)))
    {
        return Err(IllegalReason::NotOnBoundary);
    }
    let glued = Complex::from_simplices(m.facets().iter().cloned().chain([facet]));
    let glued_boundary = shell_boundary(&glued)?;
    check_shell_with(&glued, &glued_boundary, a, b)
}

fn evaluate(m: &Complex, mv: &Move) -> Check<Option<Complex>> {
    match mv {
        Move::Star { face, apex } => {
            require_nonempty(face)?;
            require_present(m, face)?;
            if m.has_vertex(*apex) {
                return Err(IllegalReason::ApexPresent);
            }
            Ok(None)
        }
        Move::Weld { apex, face } => {
            let a = Simplex::vertex(*apex);
            exchange_factor(m, &a, face).map(Some)
        }
        Move::Bistellar { a, b } => {
            let l = exchange_factor(m, a, b)?;
            if l.is_unit() {
                Ok(Some(l))
            } else {
                Err(IllegalReason::LinkMismatch)
            }
        }
        Move::Exchange { a, b } => exchange_factor(m, a, b).map(Some),
        Move::Shell { a, b } => {
            let boundary = shell_boundary(m)?;
            check_shell_with(m, &boundary, a, b).map(|_| None)
        }
        Move::Unshell { a, b } => check_unshell(m, a, b).map(|_| None),
    }
}

/// Reports whether `mv` can be applied to `m`, and why not if it cannot.
pub fn check_move(m: &Complex, mv: &Move) -> LegalityReport {
    match evaluate(m, mv) {
        Ok(l) => LegalityReport::ok(mv, l),
        Err(reason) => LegalityReport::illegal(mv, reason),
    }
}

pub(crate) fn check_shell_in(m: &Complex, boundary: &Complex, a: &Simplex, b: &Simplex) -> bool {
    check_shell_with(m, boundary, a, b).is_ok()
}

/// Applies a legal move; an illegal one yields [`Error::IllegalMove`].
pub fn apply_move(m: &Complex, mv: &Move) -> Result<Complex> {
    let l = evaluate(m, mv)
        .map_err(|reason| Error::IllegalMove(Box::new(LegalityReport::illegal(mv, reason))))?;
    Ok(surgery(m, mv, l.as_ref()))
}

/// Applies `mv` assuming it has been checked; `l` is its link factor.
pub(crate) fn surgery(m: &Complex, mv: &Move, l: Option<&Complex>) -> Complex {
    match mv {
        Move::Star { face, apex } => {
            let link = m.link(face).expect("checked");
            exchange_surgery(m, face, &Simplex::vertex(*apex), &link)
        }
        Move::Weld { apex, face } => {
            exchange_surgery(m, &Simplex::vertex(*apex), face, l.expect("checked"))
        }
        Move::Bistellar { a, b } | Move::Exchange { a, b } => {
            exchange_surgery(m, a, b, l.expect("checked"))
        }
        Move::Shell { a, b } => m.without_facet(&a.union(b)),
        Move::Unshell { a, b } => {
            Complex::from_simplices(m.facets().iter().cloned().chain([a.union(b)]))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(lists: &[&[u32]]) -> Complex {
        Complex::from_facets(lists).unwrap()
    }

    fn sphere2() -> Complex {
        Complex::standard_simplex_boundary(3)
    }

    #[test]
    fn one_to_three_move_is_legal() {
        let r = check_move(&sphere2(), &Move::bistellar([0, 1, 2], [4]));
        assert!(r.legal, "{r}");
        assert!(r.link_factor.unwrap().is_unit());
        let after = apply_move(&sphere2(), &Move::bistellar([0, 1, 2], [4])).unwrap();
        assert_eq!(after.f_vector().counts, vec![5, 9, 6]);
    }

    #[test]
    fn edge_flip_on_tetrahedron_boundary_is_illegal() {
        // The link of [0 1] is ∂[2 3], but [2 3] already exists.
        let r = check_move(&sphere2(), &Move::bistellar([0, 1], [2, 3]));
        assert_eq!(
            r.reason,
            Some(IllegalReason::NewSimplexPresent(Simplex::from([2, 3])))
        );
        let r = check_move(&sphere2(), &Move::bistellar([0, 1], [2, 4]));
        assert_eq!(r.reason, Some(IllegalReason::LinkMismatch));
    }

    #[test]
    fn edge_flip_on_octahedron() {
        let oct = cx(&[&[0], &[1]])
            .join(&cx(&[&[2], &[3]]))
            .unwrap()
            .join(&cx(&[&[4], &[5]]))
            .unwrap();
        // [1 3] is an edge, so it cannot be the new simplex.
        let r = check_move(&oct, &Move::bistellar([0, 2], [1, 3]));
        assert_eq!(
            r.reason,
            Some(IllegalReason::NewSimplexPresent(Simplex::from([1, 3])))
        );
        // [1 6] is new but lk([0 2]) is ∂[4 5].
        let r = check_move(&oct, &Move::bistellar([0, 2], [1, 6]));
        assert_eq!(r.reason, Some(IllegalReason::LinkMismatch));
        let r = check_move(&oct, &Move::bistellar([0, 2], [0, 4]));
        assert_eq!(r.reason, Some(IllegalReason::NotDisjoint));
        // lk([0 4]) = ∂[2 3] and the antipodal pair [2 3] is not an edge.
        let mv = Move::bistellar([0, 4], [2, 3]);
        assert!(check_move(&oct, &mv).legal);
        let flipped = apply_move(&oct, &mv).unwrap();
        assert_eq!(flipped.f_vector(), oct.f_vector());
        assert!(flipped.contains(&Simplex::from([2, 3])));
        assert!(!flipped.contains(&Simplex::from([0, 4])));
        assert_eq!(apply_move(&flipped, &mv.invert()).unwrap(), oct);
    }

    #[test]
    fn shell_on_two_triangle_disk() {
        let disk = cx(&[&[0, 1, 2], &[1, 2, 3]]);
        // The interior edge [1 2] is A; the free vertex 0 is B.
        let mv = Move::shell([1, 2], [0]);
        assert!(check_move(&disk, &mv).legal);
        assert_eq!(apply_move(&disk, &mv).unwrap(), cx(&[&[1, 2, 3]]));
        let swapped = check_move(&disk, &Move::shell([0], [1, 2]));
        assert_eq!(swapped.reason, Some(IllegalReason::NotInterior));
    }

    #[test]
    fn shell_of_single_facet_is_illegal() {
        let t = Complex::standard_simplex(2);
        for (a, b) in [(vec![0], vec![1, 2]), (vec![0, 1], vec![2])] {
            let mv = Move::shell(Simplex::from_set(a), Simplex::from_set(b));
            assert!(!check_move(&t, &mv).legal);
        }
    }

    #[test]
    fn unshell_inverts_shell() {
        let disk = cx(&[&[0, 1, 2], &[1, 2, 3]]);
        let shelled = apply_move(&disk, &Move::shell([1, 2], [0])).unwrap();
        let back = apply_move(&shelled, &Move::unshell([1, 2], [0])).unwrap();
        assert_eq!(back, disk);
        // Gluing along an interior-free edge to an existing vertex is refused.
        let r = check_move(&shelled, &Move::unshell([1, 2], [3]));
        assert!(!r.legal);
    }

    #[test]
    fn star_then_weld_restores_labels() {
        let s = sphere2();
        for face in [vec![0u32], vec![0, 1], vec![0, 1, 2]] {
            let a = Simplex::from_set(face);
            let starred = apply_move(&s, &Move::star(a.clone(), 4)).unwrap();
            let r = check_move(&starred, &Move::weld(4, a.clone()));
            assert!(r.legal, "{r}");
            assert_eq!(apply_move(&starred, &Move::weld(4, a)).unwrap(), s);
        }
    }

    #[test]
    fn star_counts() {
        let s = sphere2();
        let f = apply_move(&s, &Move::star([0, 1, 2], 4)).unwrap().f_vector();
        assert_eq!(f.counts, vec![5, 9, 6]);
        let f = apply_move(&s, &Move::star([0, 1], 4)).unwrap().f_vector();
        assert_eq!(f.counts, vec![5, 9, 6]);
        assert!(!check_move(&s, &Move::star([0, 1], 3)).legal);
        assert!(!check_move(&s, &Move::star([0, 1, 2, 3], 9)).legal);
    }

    #[test]
    fn exchange_with_trivial_factor_is_bistellar() {
        let s = sphere2();
        let a = Move::exchange([0, 1, 2], [7]);
        let b = Move::bistellar([0, 1, 2], [7]);
        assert_eq!(apply_move(&s, &a).unwrap(), apply_move(&s, &b).unwrap());
    }

    #[test]
    fn exchange_reports_link_factor() {
        // lk(0) in ∂Δ³ is ∂[1 2 3]; as ∂[1 2]⋆L the factor is L = {3}.
        let s = sphere2();
        let r = check_move(&s, &Move::exchange([0], [1, 2]));
        assert_eq!(r.reason, Some(IllegalReason::NewSimplexPresent(Simplex::from([1, 2]))));
        let starred = apply_move(&s, &Move::star([1, 2], 9)).unwrap();
        // After starring [1 2], the edge is gone and lk(9) = ∂[1 2]⋆{0,3}.
        let r = check_move(&starred, &Move::weld(9, [1, 2]));
        assert!(r.legal);
        assert_eq!(r.link_factor.unwrap(), cx(&[&[0], &[3]]));
        let r = check_move(&starred, &Move::exchange([9], [1, 2]));
        assert!(r.legal);
        assert_eq!(apply_move(&starred, &Move::exchange([9], [1, 2])).unwrap(), s);
    }

    #[test]
    fn illegal_move_error_carries_report() {
        let err = apply_move(&sphere2(), &Move::bistellar([0, 1], [2, 3])).unwrap_err();
        match err {
            Error::IllegalMove(r) => assert!(!r.legal),
            other => panic!("unexpected {other:?}"),
        }
    }
}
