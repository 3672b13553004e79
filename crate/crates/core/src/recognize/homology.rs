//! Exact integral simplicial homology.
//!
//! Each boundary matrix is first thinned by sparse elimination on unit
//! pivots, which handles nearly all of a typical triangulation, and the
//! remainder is brought to Smith normal form by pivoting on the entry of
//! smallest absolute value. Arithmetic runs in checked `i64` and restarts in
//! arbitrary precision if any operation would overflow.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::complex::{Complex, Simplex};
use crate::error::{Error, Result};

/// Default cap on the number of simplexes fed to the elimination.
pub const DEFAULT_HOMOLOGY_LIMIT: u64 = 2_000_000;

/// Betti numbers and torsion coefficients for dimensions `0..=n`.
///
/// `H₀` is unreduced, so a connected complex has `betti[0] = 1`. Torsion
/// coefficients are invariant factors, each dividing the next.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomologyProfile {
    pub betti: Vec<u64>,
    pub torsion: Vec<Vec<BigInt>>,
}

impl HomologyProfile {
    /// The profile of an `n`-sphere, `n ≥ 0`.
    pub fn sphere(n: usize) -> Self {
        let mut betti = vec![0; n + 1];
        betti[0] += 1;
        betti[n] += 1;
        HomologyProfile {
            betti,
            torsion: vec![Vec::new(); n + 1],
        }
    }

    /// The profile of a point, padded to dimension `n`.
    pub fn point(n: usize) -> Self {
        let mut betti = vec![0; n + 1];
        betti[0] = 1;
        HomologyProfile {
            betti,
            torsion: vec![Vec::new(); n + 1],
        }
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.iter().all(Vec::is_empty)
    }
}

impl fmt::Display for HomologyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, b) in self.betti.iter().enumerate() {
            write!(f, "H{k} = ")?;
            let mut parts = Vec::new();
            match b {
                0 => {}
                1 => parts.push("Z".to_string()),
                b => parts.push(format!("Z^{b}")),
            }
            for t in &self.torsion[k] {
                parts.push(format!("Z/{t}"));
            }
            if parts.is_empty() {
                parts.push("0".to_string());
            }
            writeln!(f, "{}", parts.join(" + "))?;
        }
        Ok(())
    }
}

pub fn homology(k: &Complex) -> Result<HomologyProfile> {
    homology_with_limit(k, DEFAULT_HOMOLOGY_LIMIT)
}

/// [`homology`] with an explicit cap on the total number of simplexes.
pub fn homology_with_limit(k: &Complex, limit: u64) -> Result<HomologyProfile> {
    let dim = k.dim();
    if dim < 0 {
        return Ok(HomologyProfile {
            betti: Vec::new(),
            torsion: Vec::new(),
        });
    }
    let n = dim as usize;
    let total = k.faces().len() as u64;
    if total > limit {
        return Err(Error::budget("homology", limit));
    }
    let mut by_dim: Vec<Vec<&Simplex>> = vec![Vec::new(); n + 1];
    for s in k.faces() {
        if !s.is_empty() {
            by_dim[s.len() - 1].push(s);
        }
    }
    let index: Vec<HashMap<&Simplex, usize>> = by_dim
        .iter()
        .map(|faces| faces.iter().enumerate().map(|(i, s)| (*s, i)).collect())
        .collect();

    // ranks[d] and factors[d] describe ∂_d : C_d → C_{d-1}, for d = 1..=n.
    let mut ranks = vec![0u64; n + 2];
    let mut factors: Vec<Vec<BigInt>> = vec![Vec::new(); n + 2];
    for d in 1..=n {
        let rows: Vec<Vec<(usize, i64)>> = by_dim[d]
            .iter()
            .map(|s| {
                let mut row: Vec<(usize, i64)> = s
                    .vertices()
                    .iter()
                    .enumerate()
                    .map(|(i, &v)| {
                        let face = s.without_vertex(v);
                        let sign = if i % 2 == 0 { 1 } else { -1 };
                        (index[d - 1][&face], sign)
                    })
                    .collect();
                row.sort_unstable();
                row
            })
            .collect();
        let (rank, inv) = smith_invariants(rows);
        ranks[d] = rank;
        factors[d] = inv;
    }

    let mut betti = Vec::with_capacity(n + 1);
    let mut torsion = Vec::with_capacity(n + 1);
    for d in 0..=n {
        let f = by_dim[d].len() as u64;
        betti.push(f - ranks[d] - ranks[d + 1]);
        torsion.push(factors[d + 1].clone());
    }
    Ok(HomologyProfile { betti, torsion })
}

/// Rank and nontrivial invariant factors of an integer matrix given by
/// sparse rows.
fn smith_invariants(rows: Vec<Vec<(usize, i64)>>) -> (u64, Vec<BigInt>) {
    let sparse = rows.clone();
    match eliminate::<i64>(rows.into_iter().map(|r| r.into_iter().collect()).collect()) {
        Some(r) => r,
        None => eliminate::<BigInt>(
            sparse
                .into_iter()
                .map(|r| r.into_iter().map(|(c, v)| (c, BigInt::from(v))).collect())
                .collect(),
        )
        .expect("arbitrary precision cannot overflow"),
    }
}

/// Integer arithmetic where every operation may refuse by overflowing.
trait Int: Clone + Eq + fmt::Debug {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn abs_key(&self) -> BigInt;
    fn add(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    /// Floor division quotient.
    fn div_floor(&self, o: &Self) -> Option<Self>;
    fn to_big(&self) -> BigInt;
}

impl Int for i64 {
    fn zero() -> Self {
        0
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn abs_key(&self) -> BigInt {
        BigInt::from(*self).abs()
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn div_floor(&self, o: &Self) -> Option<Self> {
        if *self == i64::MIN && *o == -1 {
            return None;
        }
        Some(Integer::div_floor(self, o))
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Int for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn abs_key(&self) -> BigInt {
        self.abs()
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn div_floor(&self, o: &Self) -> Option<Self> {
        Some(Integer::div_floor(self, o))
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

type Row<T> = BTreeMap<usize, T>;

/// `target += factor · source`, dropping zeros.
fn axpy<T: Int>(target: &mut Row<T>, factor: &T, source: &Row<T>) -> Option<()> {
    for (c, v) in source {
        let delta = factor.mul(v)?;
        let entry = target.entry(*c).or_insert_with(T::zero);
        *entry = entry.add(&delta)?;
        if entry.is_zero() {
            target.remove(c);
        }
    }
    Some(())
}

fn eliminate<T: Int>(mut rows: Vec<Row<T>>) -> Option<(u64, Vec<BigInt>)> {
    rows.retain(|r| !r.is_empty());
    let mut rank = 0u64;

    // Sparse phase: pivot on ±1 entries, preferring short rows and sparse
    // columns.
    let mut col_rows: HashMap<usize, Vec<usize>> = HashMap::new();
    for (i, r) in rows.iter().enumerate() {
        for c in r.keys() {
            col_rows.entry(*c).or_default().push(i);
        }
    }
    let mut alive = vec![true; rows.len()];
    let mut order: Vec<usize> = (0..rows.len()).collect();
    order.sort_by_key(|&i| rows[i].len());
    loop {
        let mut pivot: Option<(usize, usize)> = None;
        let mut best = usize::MAX;
        for &i in &order {
            if !alive[i] {
                continue;
            }
            for (c, v) in &rows[i] {
                if v.is_unit() {
                    let cost = (rows[i].len() - 1) * (col_rows.get(c).map_or(0, Vec::len).max(1) - 1);
                    if cost < best {
                        best = cost;
                        pivot = Some((i, *c));
                    }
                }
            }
            if best == 0 {
                break;
            }
        }
        let Some((p, c)) = pivot else { break };
        alive[p] = false;
        rank += 1;
        let prow = std::mem::take(&mut rows[p]);
        let pv = prow[&c].clone();
        let others: Vec<usize> = col_rows
            .get(&c)
            .map(|v| v.iter().copied().filter(|&i| alive[i]).collect())
            .unwrap_or_default();
        for i in others {
            let Some(v) = rows[i].get(&c).cloned() else { continue };
            // pv = ±1, so -v/pv = -v·pv.
            let factor = v.mul(&pv)?.neg()?;
            let before: Vec<usize> = rows[i].keys().copied().collect();
            axpy(&mut rows[i], &factor, &prow)?;
            for col in prow.keys() {
                if rows[i].contains_key(col) && !before.contains(col) {
                    col_rows.entry(*col).or_default().push(i);
                }
            }
            if rows[i].is_empty() {
                alive[i] = false;
            }
        }
        for col in prow.keys() {
            if let Some(list) = col_rows.get_mut(col) {
                list.retain(|&i| alive[i] && rows[i].contains_key(col));
            }
        }
    }

    // Dense phase on what is left.
    let rest: Vec<Row<T>> = rows
        .into_iter()
        .zip(alive)
        .filter(|(r, a)| *a && !r.is_empty())
        .map(|(r, _)| r)
        .collect();
    if rest.is_empty() {
        return Some((rank, Vec::new()));
    }
    let mut cols: Vec<usize> = rest.iter().flat_map(|r| r.keys().copied()).collect();
    cols.sort_unstable();
    cols.dedup();
    let cidx: HashMap<usize, usize> = cols.iter().enumerate().map(|(i, c)| (*c, i)).collect();
    let mut dense: Vec<Vec<T>> = rest
        .iter()
        .map(|r| {
            let mut row = vec![T::zero(); cols.len()];
            for (c, v) in r {
                row[cidx[c]] = v.clone();
            }
            row
        })
        .collect();
    let diag = dense_smith(&mut dense)?;
    rank += diag.len() as u64;
    Some((rank, normalize(diag)))
}

/// Diagonalizes `a` in place and returns the nonzero diagonal.
#[allow(clippy::needless_range_loop)]
fn dense_smith<T: Int>(a: &mut [Vec<T>]) -> Option<Vec<T>> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < m.min(n) {
        // Smallest nonzero entry of the trailing block.
        let mut best: Option<(usize, usize, BigInt)> = None;
        for (i, row) in a.iter().enumerate().skip(t) {
            for (j, v) in row.iter().enumerate().skip(t) {
                if !v.is_zero() {
                    let key = v.abs_key();
                    if best.as_ref().is_none_or(|b| key < b.2) {
                        best = Some((i, j, key));
                    }
                }
            }
        }
        let Some((pi, pj, _)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = a[t][t].clone();
            let mut dirty = false;
            // Clear column t below the pivot.
            for i in t + 1..m {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&p)?;
                let nq = q.neg()?;
                for j in t..n {
                    let delta = nq.mul(&a[t][j])?;
                    a[i][j] = a[i][j].add(&delta)?;
                }
                if !a[i][t].is_zero() {
                    dirty = true;
                }
            }
            // Clear row t right of the pivot.
            for j in t + 1..n {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&p)?;
                let nq = q.neg()?;
                for row in a.iter_mut().skip(t) {
                    let delta = nq.mul(&row[t])?;
                    row[j] = row[j].add(&delta)?;
                }
                if !a[t][j].is_zero() {
                    dirty = true;
                }
            }
            if !dirty {
                break;
            }
            // A smaller remainder appeared; move it onto the diagonal.
            let mut best: Option<(usize, usize, BigInt)> = None;
            for i in t..m {
                let v = &a[i][t];
                if !v.is_zero() && best.as_ref().is_none_or(|b| v.abs_key() < b.2) {
                    best = Some((i, t, v.abs_key()));
                }
            }
            for j in t..n {
                let v = &a[t][j];
                if !v.is_zero() && best.as_ref().is_none_or(|b| v.abs_key() < b.2) {
                    best = Some((t, j, v.abs_key()));
                }
            }
            let (bi, bj, _) = best.expect("pivot row or column is nonzero");
            a.swap(t, bi);
            for row in a.iter_mut() {
                row.swap(t, bj);
            }
        }
        diag.push(a[t][t].clone());
        t += 1;
    }
    Some(diag)
}

/// Rewrites a diagonal into invariant factors and drops the units.
fn normalize<T: Int>(diag: Vec<T>) -> Vec<BigInt> {
    let mut d: Vec<BigInt> = diag.iter().map(|x| x.to_big().abs()).collect();
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let g = d[i].gcd(&d[j]);
            let l = d[i].lcm(&d[j]);
            d[i] = g;
            d[j] = l;
        }
    }
    d.retain(|x| !x.is_one());
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn cx(lists: &[&[u32]]) -> Complex {
        Complex::from_facets(lists).unwrap()
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn spheres() {
        for n in 1..=5u32 {
            let h = homology(&Complex::standard_simplex_boundary(n + 1)).unwrap();
            assert_eq!(h, HomologyProfile::sphere(n as usize), "n = {n}");
        }
        let h = homology(&Complex::standard_simplex_boundary(4)).unwrap();
        assert_eq!(h.betti, vec![1, 0, 0, 1]);
    }

    #[test]
    fn contractible_simplex() {
        let h = homology(&Complex::standard_simplex(3)).unwrap();
        assert_eq!(h, HomologyProfile::point(3));
    }

    #[test]
    fn square_is_a_circle() {
        let sq = cx(&[&[0, 1], &[1, 2], &[2, 3], &[0, 3]]);
        assert_eq!(homology(&sq).unwrap().betti, vec![1, 1]);
    }

    #[test]
    fn torus() {
        let h = homology(&fixtures::torus7()).unwrap();
        assert_eq!(h.betti, vec![1, 2, 1]);
        assert!(h.is_torsion_free());
    }

    #[test]
    fn projective_plane_has_two_torsion() {
        let h = homology(&fixtures::projective_plane6()).unwrap();
        assert_eq!(h.betti, vec![1, 0, 0]);
        assert_eq!(h.torsion[1], big(&[2]));
    }

    #[test]
    fn disjoint_points() {
        let h = homology(&cx(&[&[0], &[1], &[2]])).unwrap();
        assert_eq!(h.betti, vec![3]);
    }

    #[test]
    fn smith_form_of_dense_matrices() {
        // diag(2, 3) normalizes to a single factor 6.
        let rows = vec![vec![(0, 2)], vec![(1, 3)]];
        assert_eq!(smith_invariants(rows), (2, big(&[6])));
        let rows = vec![vec![(0, 2), (1, 4)], vec![(0, 6), (1, 8)]];
        // det = -8, gcd of entries 2: factors 2, 4.
        assert_eq!(smith_invariants(rows), (2, big(&[2, 4])));
        let rows = vec![vec![(0, 4), (1, 6)], vec![(0, 6), (1, 9)]];
        assert_eq!(smith_invariants(rows).0, 1);
    }

    #[test]
    fn overflow_falls_back_to_big_integers() {
        // Eliminating the unit pivot multiplies two huge entries.
        let huge = i64::MAX / 2 + 1;
        let rows = vec![vec![(0, 1), (1, huge)], vec![(0, huge), (1, 5)]];
        assert!(eliminate::<i64>(rows.iter().map(|r| r.iter().copied().collect()).collect()).is_none());
        let (rank, inv) = smith_invariants(rows);
        assert_eq!(rank, 2);
        assert!(inv.len() == 1);
    }

    #[test]
    fn limit_is_enforced() {
        let r = homology_with_limit(&Complex::standard_simplex_boundary(4), 3);
        assert!(matches!(r, Err(Error::BudgetExhausted { .. })));
    }

    #[test]
    fn degenerate_complexes() {
        assert!(homology(&Complex::void()).unwrap().betti.is_empty());
        assert!(homology(&Complex::unit()).unwrap().betti.is_empty());
    }
}
