//! Stellar exchanges expanded into bistellar moves.
//!
//! With `lk(A,M) = ∂B⋆𝒮⋆L'`, where `𝒮` is a join of simplex boundaries and
//! `L'` is reduced to a simplex boundary by a witness of exchanges, the
//! expansion recurses on `(dim L', witness length)`. The base case stars `A`
//! in `M` and `B` in `M'` with a common apex. A first witness move `κ(C,D)`
//! with `D ∉ M` closes a commuting square through `κ(A⋆C,D)`; with `D ∈ M`
//! the vertex `u` of `D` is first moved to a fresh vertex `v` by `κ(A⋆u,v)`.

use std::collections::HashMap;

use super::cone::star_move_transcript_with;
use super::shellings::join_of_boundaries_shelling;
use crate::complex::{Complex, Simplex, VertexId};
use crate::error::{Error, Result};
use crate::flip::{is_simplex_boundary, reduce, Schedule};
use crate::moves::{apply_move, check_move, minimal_nonfaces, Move, Transcript};
use crate::recognize::Budget;

const NOTE_BASE: &str = "exchange base case";

/// `lk(A,M) = ∂B⋆∂S₁⋆…⋆∂Sₖ⋆L'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkFactorization {
    pub b: Simplex,
    pub lprime: Complex,
    /// Simplexes whose boundaries are the remaining join factors.
    pub s: Vec<Simplex>,
    /// `dim L'`.
    pub m: i32,
}

impl LinkFactorization {
    /// The complex `∂S₁⋆…⋆∂Sₖ⋆L'`.
    pub fn link_factor(&self) -> Result<Complex> {
        self.s
            .iter()
            .try_fold(self.lprime.clone(), |k, f| k.join(&Complex::simplex_boundary(f)))
    }
}

/// Exchanges `κ(C,D)` taking `L'` to a simplex boundary.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Witness {
    pub moves: Vec<(Simplex, Simplex)>,
}

impl Witness {
    /// Reads starrings, welds, bistellar moves and exchanges as exchanges:
    /// `(C,c)` is `κ(C,c)` and `(c,C)⁻¹` is `κ(c,C)`.
    pub fn from_transcript(t: &Transcript) -> Result<Witness> {
        let moves = t
            .moves()
            .map(|mv| match mv {
                Move::Star { face, apex } => Ok((face.clone(), Simplex::vertex(*apex))),
                Move::Weld { apex, face } => Ok((Simplex::vertex(*apex), face.clone())),
                Move::Bistellar { a, b } | Move::Exchange { a, b } => Ok((a.clone(), b.clone())),
                other => Err(Error::InvalidWitness(format!("{other} is not a stellar move"))),
            })
            .collect::<Result<_>>()?;
        Ok(Witness { moves })
    }

    pub fn transcript(&self) -> Transcript {
        self.moves
            .iter()
            .map(|(c, d)| Move::exchange(c.clone(), d.clone()))
            .collect()
    }

    /// `r`, the number of moves.
    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// Replays on `l` and checks that the end is a simplex boundary (or
    /// `{∅}` for `l = {∅}`).
    pub fn validate(&self, l: &Complex) -> Result<Complex> {
        let mut cur = l.clone();
        for (i, (c, d)) in self.moves.iter().enumerate() {
            cur = apply_move(&cur, &Move::exchange(c.clone(), d.clone()))
                .map_err(|e| Error::InvalidWitness(format!("move {i}: {e}")))?;
        }
        if !(cur.is_unit() || is_simplex_boundary(&cur)) {
            return Err(Error::InvalidWitness(
                "witness does not end at a simplex boundary".into(),
            ));
        }
        Ok(cur)
    }

    /// Flip search for a witness on `l`.
    pub fn search(l: &Complex, sched: &Schedule) -> Option<Witness> {
        if l.is_unit() || is_simplex_boundary(l) {
            return Some(Witness::default());
        }
        let r = reduce(l, sched);
        if !r.reached_simplex_boundary() {
            return None;
        }
        Witness::from_transcript(&r.transcript).ok()
    }
}

/// Splits off simplex-boundary join factors of `l`, largest first. Returns
/// what is left and the factors.
pub fn greedy_factor(l: &Complex) -> (Complex, Vec<Simplex>) {
    let mut rest = l.clone();
    let mut factors = Vec::new();
    'outer: while !rest.is_unit() && !rest.is_void() {
        let mut candidates = minimal_nonfaces(&rest);
        if rest.vertices().len() == 1 {
            // A single point is ∂ of nothing; it stays in L'.
            break;
        }
        candidates.sort_by(|x, y| y.len().cmp(&x.len()).then_with(|| x.cmp(y)));
        for s in candidates {
            if let Some(r) = crate::moves::factor_out_boundary(&rest, &s) {
                factors.push(s);
                rest = r;
                continue 'outer;
            }
        }
        break;
    }
    (rest, factors)
}

/// Factors `lk(A,M)` for the exchange `κ(A,B)`.
pub fn factorize_link(m: &Complex, a: &Simplex, b: &Simplex) -> Result<LinkFactorization> {
    let report = check_move(m, &Move::exchange(a.clone(), b.clone()));
    let l = match (report.legal, report.link_factor.clone()) {
        (true, Some(l)) => l,
        _ => return Err(Error::IllegalMove(Box::new(report))),
    };
    let (lprime, s) = greedy_factor(&l);
    Ok(LinkFactorization {
        b: b.clone(),
        m: lprime.dim(),
        lprime,
        s,
    })
}

/// Bistellar moves from `M` to `κ(A,B)M` for a legal stellar exchange.
///
/// `w` must reduce `fact.lprime` to a simplex boundary. Witnesses for the
/// smaller links met along the way are found by flip search with
/// `budget.schedule`; failure is reported as a budget error naming the link.
pub fn exchange_to_bistellar(
    m: &Complex,
    a: &Simplex,
    fact: &LinkFactorization,
    w: &Witness,
    budget: &Budget,
) -> Result<Transcript> {
    let b = &fact.b;
    let report = check_move(m, &Move::exchange(a.clone(), b.clone()));
    let Some(l) = report.link_factor.clone().filter(|_| report.legal) else {
        return Err(Error::IllegalMove(Box::new(report)));
    };
    if fact.link_factor()? != l {
        return Err(Error::Expansion(format!(
            "factorization does not match lk({a}) = ∂{b}⋆L"
        )));
    }
    if fact.m != fact.lprime.dim() {
        return Err(Error::Expansion("factorization dimension is wrong".into()));
    }
    w.validate(&fact.lprime)?;
    let top = [
        m.max_vertex(),
        b.max_vertex(),
        w.moves
            .iter()
            .flat_map(|(c, d)| c.vertices().iter().chain(d.vertices()))
            .copied()
            .max(),
    ]
    .into_iter()
    .flatten()
    .max();
    let mut session = Session {
        next: top.map_or(0, |t| t + 1),
        schedule: budget.schedule,
    };
    let witness = session.normalize(&fact.lprime, &w.moves)?;
    let t = session.expand(m, a, b, &fact.s, &fact.lprime, &witness)?;
    let expected = apply_move(m, &Move::exchange(a.clone(), b.clone()))?;
    if t.apply(m)? != expected {
        return Err(Error::Expansion("expansion does not reach κ(A,B)M".into()));
    }
    Ok(t)
}

/// Owns the fresh-label counter shared by one expansion.
struct Session {
    next: VertexId,
    schedule: Schedule,
}

impl Session {
    fn fresh(&mut self) -> VertexId {
        let v = self.next;
        self.next += 1;
        v
    }

    /// Replaces labels introduced by the witness with session-fresh ones.
    fn normalize(&mut self, l: &Complex, moves: &[(Simplex, Simplex)]) -> Result<Vec<(Simplex, Simplex)>> {
        let mut raw = l.clone();
        let mut map: HashMap<VertexId, VertexId> = raw.vertices().into_iter().map(|v| (v, v)).collect();
        let mut out = Vec::with_capacity(moves.len());
        for (i, (c, d)) in moves.iter().enumerate() {
            for &x in c.vertices().iter().chain(d.vertices()) {
                if !raw.has_vertex(x) {
                    let y = self.fresh();
                    map.insert(x, y);
                }
            }
            let mv = Move::exchange(c.clone(), d.clone());
            raw = apply_move(&raw, &mv).map_err(|e| Error::InvalidWitness(format!("move {i}: {e}")))?;
            out.push((c.relabel(|v| map[&v]), d.relabel(|v| map[&v])));
        }
        Ok(out)
    }

    /// Searches a witness for a link met during the recursion.
    fn sub_witness(&mut self, l: &Complex) -> Result<Vec<(Simplex, Simplex)>> {
        let w = Witness::search(l, &self.schedule).ok_or_else(|| {
            Error::budget(
                format!("witness search for the link {l:?}"),
                self.schedule.max_moves,
            )
        })?;
        self.normalize(l, &w.moves)
    }

    /// Bistellar moves from `m` to `κ(a,b)m`, where
    /// `lk(a,m) = ∂b⋆∂s₁⋆…⋆lprime`.
    fn expand(
        &mut self,
        m: &Complex,
        a: &Simplex,
        b: &Simplex,
        s: &[Simplex],
        lprime: &Complex,
        witness: &[(Simplex, Simplex)],
    ) -> Result<Transcript> {
        let expected = s
            .iter()
            .chain(std::iter::once(b))
            .try_fold(lprime.clone(), |k, f| k.join(&Complex::simplex_boundary(f)))?;
        if m.link(a)? != expected {
            return Err(Error::Expansion(format!("lk({a}) does not factor as declared")));
        }
        // A 0-sphere, or a simplex boundary after the witness, joins 𝒮.
        let absorb = lprime.dim() == 0 || (witness.is_empty() && !lprime.is_unit());
        if absorb {
            if !is_simplex_boundary(lprime) {
                return Err(Error::InvalidWitness(format!(
                    "{lprime:?} is not a simplex boundary"
                )));
            }
            let mut s2 = s.to_vec();
            s2.push(Simplex::from_set(lprime.vertices()));
            return self.expand(m, a, b, &s2, &Complex::unit(), &[]);
        }
        if lprime.is_unit() {
            return self.base_case(m, a, b, s);
        }

        let (c, d) = &witness[0];
        let rest = &witness[1..];
        let report = check_move(lprime, &Move::exchange(c.clone(), d.clone()));
        let Some(l2) = report.link_factor.clone().filter(|_| report.legal) else {
            return Err(Error::InvalidWitness(report.to_string()));
        };
        let mprime = apply_move(m, &Move::exchange(a.clone(), b.clone()))?;
        let with = |first: &Simplex, extra: &[Simplex]| {
            let mut v = vec![first.clone()];
            v.extend_from_slice(s);
            v.extend_from_slice(extra);
            v
        };

        if !m.contains(d) {
            // M -κ(A⋆C,D)-> M₁ -κ(A,B)-> M₂ and M -κ(A,B)-> M' -κ(B⋆C,D)-> M₂.
            let (l3, extra) = greedy_factor(&l2);
            let w3 = self.sub_witness(&l3)?;
            let ac = a.union(c);
            let t1 = self.expand(m, &ac, d, &with(b, &extra), &l3, &w3)?;
            let m1 = apply_move(m, &Move::exchange(ac, d.clone()))?;
            let lprime1 = apply_move(lprime, &Move::exchange(c.clone(), d.clone()))?;
            let t2 = self.expand(&m1, a, b, s, &lprime1, rest)?;
            let m2 = apply_move(&m1, &Move::exchange(a.clone(), b.clone()))?;
            let bc = b.union(c);
            let t3 = self.expand(&mprime, &bc, d, &with(a, &extra), &l3, &w3)?;
            let m2_alt = apply_move(&mprime, &Move::exchange(bc, d.clone()))?;
            if m2 != m2_alt {
                return Err(Error::Expansion("the two paths to M₂ disagree".into()));
            }
            let mut t = t1;
            t.extend(t2);
            t.extend(t3.inverted());
            return Ok(t);
        }

        // D ∈ M: move the vertex u of D to a fresh v first.
        if d.len() < 2 {
            return Err(Error::Expansion(format!("witness vertex {d} already in M")));
        }
        let u = d.vertices()[0];
        let v = self.fresh();
        let uu = Simplex::vertex(u);
        let vv = Simplex::vertex(v);
        let (l3, extra) = greedy_factor(&lprime.link(&uu)?);
        let w3 = self.sub_witness(&l3)?;
        let au = a.with_vertex(u);
        let t1 = self.expand(m, &au, &vv, &with(b, &extra), &l3, &w3)?;
        let mhat = apply_move(m, &Move::exchange(au, vv.clone()))?;
        let swap = |x: VertexId| if x == u { v } else { x };
        let lhat = lprime.relabel(swap);
        let what: Vec<_> = witness
            .iter()
            .map(|(c, d)| (c.relabel(swap), d.relabel(swap)))
            .collect();
        let t2 = self.expand(&mhat, a, b, s, &lhat, &what)?;
        let mhat_prime = apply_move(&mhat, &Move::exchange(a.clone(), b.clone()))?;
        let bu = b.with_vertex(u);
        let t3 = self.expand(&mprime, &bu, &vv, &with(a, &extra), &l3, &w3)?;
        if apply_move(&mprime, &Move::exchange(bu, vv))? != mhat_prime {
            return Err(Error::Expansion("the two paths to M̂' disagree".into()));
        }
        let mut t = t1;
        t.extend(t2);
        t.extend(t3.inverted());
        Ok(t)
    }

    /// `M ≈ (A,a)M = (B,a)M' ≈ M'`, or the bistellar move itself when the
    /// link is exactly `∂B`.
    fn base_case(&mut self, m: &Complex, a: &Simplex, b: &Simplex, s: &[Simplex]) -> Result<Transcript> {
        let mv = Move::exchange(a.clone(), b.clone());
        if s.is_empty() {
            apply_move(m, &mv)?;
            return Ok(Transcript::from_moves([Move::bistellar(a.clone(), b.clone())]));
        }
        let mprime = apply_move(m, &mv)?;
        let apex = self.fresh();
        let mut fa = vec![b.clone()];
        fa.extend_from_slice(s);
        let mut fb = vec![a.clone()];
        fb.extend_from_slice(s);
        let t1 = star_move_transcript_with(m, a, apex, &join_of_boundaries_shelling(&fa))?;
        let t2 = star_move_transcript_with(&mprime, b, apex, &join_of_boundaries_shelling(&fb))?;
        if t1.apply(m)? != t2.apply(&mprime)? {
            return Err(Error::Expansion(format!(
                "starring {a} and {b} with {apex} disagree"
            )));
        }
        let mut t = t1.annotate(NOTE_BASE);
        t.extend(t2.inverted().annotate(NOTE_BASE));
        Ok(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::isomorphic;
    use crate::fixtures;
    use crate::moves::{enumerate_moves, MoveFamily};

    fn expand_all(m: &Complex, a: &Simplex, b: &Simplex, w: &Witness) -> Transcript {
        let fact = factorize_link(m, a, b).unwrap();
        let t = exchange_to_bistellar(m, a, &fact, w, &Budget::default()).unwrap();
        assert!(t.moves().all(|mv| matches!(mv, Move::Bistellar { .. })));
        let expected = apply_move(m, &Move::exchange(a.clone(), b.clone())).unwrap();
        assert_eq!(t.apply(m).unwrap(), expected);
        t
    }

    /// Shrinks a cycle to a triangle by 2→1 moves, always at the smallest
    /// vertex whose neighbors are not adjacent.
    fn cycle_witness(l: &Complex) -> Witness {
        let mut cur = l.clone();
        let mut moves = Vec::new();
        while cur.vertices().len() > 3 {
            let x = cur.vertices()[0];
            let nb = Simplex::from_set(cur.link(&Simplex::vertex(x)).unwrap().vertices());
            let mv = Move::exchange(Simplex::vertex(x), nb.clone());
            cur = apply_move(&cur, &mv).unwrap();
            moves.push((Simplex::vertex(x), nb));
        }
        Witness { moves }
    }

    #[test]
    fn unit_link_is_a_single_bistellar_move() {
        for m in [Complex::standard_simplex_boundary(3), Complex::standard_simplex_boundary(4)] {
            for mv in enumerate_moves(&m, MoveFamily::Bistellar) {
                let Move::Bistellar { a, b } = mv else { unreachable!() };
                let t = expand_all(&m, &a, &b, &Witness::default());
                assert_eq!(t.moves().cloned().collect::<Vec<_>>(), vec![Move::bistellar(a, b)]);
            }
        }
    }

    #[test]
    fn weld_on_a_starred_tetrahedron_boundary() {
        // lk(9) = ∂[1 2]⋆∂[0 3]; L' = {∅} and 𝒮 = ∂[0 3].
        let s = Complex::standard_simplex_boundary(3);
        let m = apply_move(&s, &Move::star([1, 2], 9)).unwrap();
        let fact = factorize_link(&m, &Simplex::vertex(9), &Simplex::from([1, 2])).unwrap();
        assert!(fact.lprime.is_unit());
        assert_eq!(fact.s, vec![Simplex::from([0, 3])]);
        let t = expand_all(&m, &Simplex::vertex(9), &Simplex::from([1, 2]), &Witness::default());
        assert!(t.len() > 1);
        assert_eq!(t.apply(&m).unwrap(), s);
    }

    #[test]
    fn zero_sphere_is_absorbed() {
        // In the octahedron lk([0 2]) = ∂[4 5]; exchanging the vertex 0 with
        // a new vertex meets L = square = ∂[2 3]⋆∂[4 5].
        let m = fixtures::octahedron();
        let fact = factorize_link(&m, &Simplex::vertex(0), &Simplex::vertex(9)).unwrap();
        assert!(fact.lprime.is_unit());
        assert_eq!(fact.s.len(), 2);
        expand_all(&m, &Simplex::vertex(0), &Simplex::vertex(9), &Witness::default());
    }

    #[test]
    fn suspension_square_with_a_pentagon() {
        // S⁰⋆S⁰⋆C₅: exchanging x with [p q] leaves L = C₅, whose chords are
        // not edges of M.
        let s0a = Complex::simplex_boundary(&Simplex::from([0, 1]));
        let s0b = Complex::simplex_boundary(&Simplex::from([2, 3]));
        let c5 = Complex::from_facets(&[[4, 5], [5, 6], [6, 7], [7, 8], [4, 8]]).unwrap();
        let m = s0a.join(&s0b).unwrap().join(&c5).unwrap();
        let (a, b) = (Simplex::vertex(0), Simplex::from([2, 3]));
        let fact = factorize_link(&m, &a, &b).unwrap();
        assert_eq!(fact.lprime, c5);
        assert!(fact.s.is_empty());
        let w = cycle_witness(&c5);
        assert_eq!(w.len(), 2);
        assert!(!m.contains(&w.moves[0].1));
        let t = expand_all(&m, &a, &b, &w);
        let again = exchange_to_bistellar(&m, &a, &fact, &w, &Budget::default()).unwrap();
        assert_eq!(t, again);
    }

    #[test]
    fn torus_vertex_relabeling_uses_the_fresh_vertex_trick() {
        // K₇ is complete, so every chord of lk(0) is an edge of the torus.
        let m = fixtures::torus7();
        let (a, b) = (Simplex::vertex(0), Simplex::vertex(7));
        let fact = factorize_link(&m, &a, &b).unwrap();
        assert_eq!(fact.m, 1);
        let w = cycle_witness(&fact.lprime);
        assert!(m.contains(&w.moves[0].1));
        let t = expand_all(&m, &a, &b, &w);
        let end = t.apply(&m).unwrap();
        assert!(isomorphic(&end, &m).is_some());
    }

    #[test]
    fn witness_labels_are_remapped() {
        // The witness stars an edge of C₄ with the label 1, which is taken in
        // M, then welds it back and shrinks C₄ to a triangle.
        let s0a = Complex::simplex_boundary(&Simplex::from([0, 1]));
        let s0b = Complex::simplex_boundary(&Simplex::from([2, 3]));
        let c4 = Complex::from_facets(&[[4, 5], [5, 6], [6, 7], [4, 7]]).unwrap();
        let m = s0a.join(&s0b).unwrap().join(&c4).unwrap();
        let fact = LinkFactorization {
            b: Simplex::from([2, 3]),
            lprime: c4,
            s: vec![],
            m: 1,
        };
        let w = Witness {
            moves: vec![
                (Simplex::from([4, 5]), Simplex::vertex(1)),
                (Simplex::vertex(1), Simplex::from([4, 5])),
                (Simplex::vertex(4), Simplex::from([5, 7])),
            ],
        };
        let t = exchange_to_bistellar(&m, &Simplex::vertex(0), &fact, &w, &Budget::default()).unwrap();
        let expected = apply_move(&m, &Move::exchange([0], [2, 3])).unwrap();
        assert_eq!(t.apply(&m).unwrap(), expected);
    }

    #[test]
    fn bad_inputs_are_rejected() {
        let m = fixtures::torus7();
        let (a, b) = (Simplex::vertex(0), Simplex::vertex(7));
        let fact = factorize_link(&m, &a, &b).unwrap();
        let budget = Budget::default();
        assert!(matches!(
            exchange_to_bistellar(&m, &a, &fact, &Witness::default(), &budget),
            Err(Error::InvalidWitness(_))
        ));
        let mut wrong = fact.clone();
        wrong.s.push(Simplex::from([20, 21]));
        assert!(exchange_to_bistellar(&m, &a, &wrong, &Witness::default(), &budget).is_err());
        assert!(factorize_link(&m, &a, &Simplex::vertex(1)).is_err());
    }

    #[test]
    fn greedy_factoring() {
        let sq = Complex::from_facets(&[[0, 2], [2, 1], [1, 3], [3, 0]]).unwrap();
        let (rest, f) = greedy_factor(&sq);
        assert!(rest.is_unit());
        assert_eq!(f.len(), 2);
        let t = fixtures::torus7();
        let (rest, f) = greedy_factor(&t);
        assert_eq!(rest, t);
        assert!(f.is_empty());
        let (rest, f) = greedy_factor(&Complex::standard_simplex_boundary(3));
        assert!(rest.is_unit());
        assert_eq!(f, vec![Simplex::from([0, 1, 2, 3])]);
    }
}
