//! Abstract simplicial complexes stored by their facets.

mod facets_io;
mod iso;
mod simplex;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::OnceLock;

pub use facets_io::{format_facets, parse_facets};
pub use iso::{isomorphic, isomorphic_with_budget, Bijection, DEFAULT_ISO_BUDGET};
pub use simplex::{Simplex, VertexId};

use crate::error::{Error, Result};

/// A finite abstract simplicial complex.
///
/// Two degenerate complexes are distinguished: the *void* complex, which has
/// no simplexes at all, and the *unit* complex `{∅}`, which contains only the
/// empty simplex. The unit complex is the identity for [`Complex::join`], the
/// link of a facet, and the boundary `∂Δ⁰` of a single vertex.
#[derive(Clone)]
pub struct Complex {
    facets: BTreeSet<Simplex>,
    faces: OnceLock<BTreeSet<Simplex>>,
}

impl PartialEq for Complex {
    fn eq(&self, other: &Self) -> bool {
        self.facets == other.facets
    }
}

impl Eq for Complex {}

impl std::hash::Hash for Complex {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.facets.hash(state);
    }
}

impl fmt::Debug for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.facets.iter()).finish()
    }
}

/// Simplex counts per dimension, `f_0 ..= f_n`, and their alternating sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FVector {
    pub counts: Vec<u64>,
    pub euler: i64,
}

impl FVector {
    pub fn from_counts(counts: Vec<u64>) -> Self {
        let euler = counts
            .iter()
            .enumerate()
            .map(|(i, &c)| if i % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum();
        FVector { counts, euler }
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("f = (")?;
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "); chi = {}", self.euler)
    }
}

impl Complex {
    fn from_maximal(facets: BTreeSet<Simplex>) -> Self {
        Complex {
            facets,
            faces: OnceLock::new(),
        }
    }

    /// The complex with no simplexes.
    pub fn void() -> Self {
        Self::from_maximal(BTreeSet::new())
    }

    /// The complex `{∅}`.
    pub fn unit() -> Self {
        Self::from_maximal(BTreeSet::from([Simplex::empty()]))
    }

    /// Closure of a collection of simplexes; members that are faces of other
    /// members are absorbed.
    pub fn from_simplices<I: IntoIterator<Item = Simplex>>(simplices: I) -> Self {
        let mut all: Vec<Simplex> = simplices.into_iter().collect();
        all.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        all.dedup();
        let mut kept: Vec<Simplex> = Vec::with_capacity(all.len());
        let mut by_vertex: HashMap<VertexId, Vec<usize>> = HashMap::new();
        for s in all {
            let absorbed = match s.vertices().first() {
                Some(v) => by_vertex
                    .get(v)
                    .is_some_and(|idx| idx.iter().any(|&i| s.is_face_of(&kept[i]))),
                None => !kept.is_empty(),
            };
            if absorbed {
                continue;
            }
            for &v in s.vertices() {
                by_vertex.entry(v).or_default().push(kept.len());
            }
            kept.push(s);
        }
        Self::from_maximal(kept.into_iter().collect())
    }

    /// Closure of the given facet lists. Fails on a repeated vertex inside a
    /// list.
    pub fn from_facets<V: AsRef<[VertexId]>>(facet_lists: &[V]) -> Result<Self> {
        let simplices = facet_lists
            .iter()
            .map(|f| Simplex::new(f.as_ref().to_vec()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_simplices(simplices))
    }

    /// The closure of a single simplex.
    pub fn simplex(s: &Simplex) -> Self {
        Self::from_maximal(BTreeSet::from([s.clone()]))
    }

    /// `∂s`: all proper faces of `s`. `∂` of a vertex is `{∅}`, `∂∅` is void.
    pub fn simplex_boundary(s: &Simplex) -> Self {
        Self::from_maximal(s.facets_of_boundary().collect())
    }

    /// `Δⁿ` on the vertices `0..=n`.
    pub fn standard_simplex(n: u32) -> Self {
        Self::simplex(&Simplex::from_set(0..=n))
    }

    /// `∂Δⁿ` on the vertices `0..=n`.
    pub fn standard_simplex_boundary(n: u32) -> Self {
        Self::simplex_boundary(&Simplex::from_set(0..=n))
    }

    pub fn facets(&self) -> &BTreeSet<Simplex> {
        &self.facets
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    /// Every simplex of the complex, ∅ included unless the complex is void.
    pub fn faces(&self) -> &BTreeSet<Simplex> {
        self.faces.get_or_init(|| {
            let mut all = BTreeSet::new();
            for f in &self.facets {
                for face in f.faces() {
                    all.insert(face);
                }
            }
            all
        })
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        if let Some(faces) = self.faces.get() {
            return faces.contains(s);
        }
        self.facets.iter().any(|f| s.is_face_of(f))
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// True for `{∅}`.
    pub fn is_unit(&self) -> bool {
        self.facets.len() == 1 && self.facets.iter().next().is_some_and(Simplex::is_empty)
    }

    /// Maximal facet dimension; −1 for `{∅}` and −2 for the void complex.
    pub fn dim(&self) -> i32 {
        self.facets.iter().map(Simplex::dim).max().unwrap_or(-2)
    }

    pub fn is_pure(&self) -> bool {
        let d = self.dim();
        self.facets.iter().all(|f| f.dim() == d)
    }

    pub fn vertices(&self) -> Vec<VertexId> {
        let set: BTreeSet<VertexId> = self
            .facets
            .iter()
            .flat_map(|f| f.vertices().iter().copied())
            .collect();
        set.into_iter().collect()
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.facets.iter().any(|f| f.contains_vertex(v))
    }

    pub fn max_vertex(&self) -> Option<VertexId> {
        self.facets.iter().filter_map(Simplex::max_vertex).max()
    }

    /// `1 + max label`, or 0 when the complex has no vertices.
    pub fn fresh_vertex(&self) -> VertexId {
        self.max_vertex().map_or(0, |m| m + 1)
    }

    /// Facets having `a` as a face.
    pub fn facets_containing<'a>(&'a self, a: &'a Simplex) -> impl Iterator<Item = &'a Simplex> {
        self.facets.iter().filter(move |f| a.is_face_of(f))
    }

    /// `lk(A,K) = { B ∈ K : A⋆B ∈ K }`.
    pub fn link(&self, a: &Simplex) -> Result<Complex> {
        if a.is_empty() {
            if self.is_void() {
                return Err(Error::AbsentSimplex(a.clone()));
            }
            return Ok(self.clone());
        }
        let parts: Vec<Simplex> = self.facets_containing(a).map(|f| f.difference(a)).collect();
        if parts.is_empty() {
            return Err(Error::AbsentSimplex(a.clone()));
        }
        Ok(Self::from_simplices(parts))
    }

    /// Closed star `A⋆lk(A,K)`.
    pub fn star(&self, a: &Simplex) -> Result<Complex> {
        let facets: BTreeSet<Simplex> = self.facets_containing(a).cloned().collect();
        if facets.is_empty() {
            return Err(Error::AbsentSimplex(a.clone()));
        }
        Ok(Self::from_maximal(facets))
    }

    /// `K⋆L`; the vertex sets must be disjoint.
    pub fn join(&self, other: &Complex) -> Result<Complex> {
        let mine: BTreeSet<VertexId> = self.vertices().into_iter().collect();
        if let Some(v) = other.vertices().into_iter().find(|v| mine.contains(v)) {
            return Err(Error::JoinCollision { vertex: v });
        }
        let mut facets = BTreeSet::new();
        for f in &self.facets {
            for g in &other.facets {
                facets.insert(f.union(g));
            }
        }
        Ok(Self::from_maximal(facets))
    }

    /// `v⋆K`; `v` must be absent from `K`.
    pub fn cone(&self, v: VertexId) -> Result<Complex> {
        Complex::simplex(&Simplex::vertex(v)).join(self)
    }

    /// Counts of facets containing each ridge (codimension-one face).
    pub(crate) fn ridge_counts(&self) -> BTreeMap<Simplex, usize> {
        let mut counts = BTreeMap::new();
        for f in &self.facets {
            for r in f.facets_of_boundary() {
                *counts.entry(r).or_insert(0) += 1;
            }
        }
        counts
    }

    /// Closure of the ridges lying in exactly one facet. Void for a closed
    /// pseudomanifold.
    pub fn boundary_complex(&self) -> Result<Complex> {
        if !self.is_pure() {
            return Err(Error::NotPure);
        }
        let mut free = Vec::new();
        for (ridge, count) in self.ridge_counts() {
            match count {
                1 => free.push(ridge),
                2 => {}
                _ => return Err(Error::NotPseudomanifold { ridge, count }),
            }
        }
        Ok(Self::from_maximal(free.into_iter().collect()))
    }

    pub fn f_vector(&self) -> FVector {
        let dim = self.dim();
        if dim < 0 {
            return FVector::from_counts(Vec::new());
        }
        let mut counts = vec![0u64; dim as usize + 1];
        for s in self.faces() {
            if !s.is_empty() {
                counts[s.len() - 1] += 1;
            }
        }
        FVector::from_counts(counts)
    }

    /// Simplexes of dimension `k`, sorted.
    pub fn faces_of_dim(&self, k: i32) -> Vec<Simplex> {
        self.faces()
            .iter()
            .filter(|s| s.dim() == k)
            .cloned()
            .collect()
    }

    /// Applies a vertex relabeling; the map must be injective on the vertices.
    pub fn relabel(&self, f: impl Fn(VertexId) -> VertexId) -> Complex {
        Self::from_maximal(self.facets.iter().map(|s| s.relabel(&f)).collect())
    }

    /// The full subcomplex on the given vertex set.
    pub fn induced(&self, vertices: &BTreeSet<VertexId>) -> Complex {
        Self::from_simplices(self.facets.iter().map(|f| {
            Simplex::from_sorted_unchecked(
                f.vertices()
                    .iter()
                    .copied()
                    .filter(|v| vertices.contains(v))
                    .collect(),
            )
        }))
    }

    /// Replaces the facets satisfying `remove` by `added`, taking the closure.
    pub(crate) fn replace_facets(
        &self,
        remove: impl Fn(&Simplex) -> bool,
        added: impl IntoIterator<Item = Simplex>,
    ) -> Complex {
        Self::from_simplices(
            self.facets
                .iter()
                .filter(|f| !remove(f))
                .cloned()
                .chain(added),
        )
    }

    /// The closure of all facets other than `facet`.
    pub fn without_facet(&self, facet: &Simplex) -> Complex {
        let mut facets = self.facets.clone();
        facets.remove(facet);
        Self::from_maximal(facets)
    }
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_facets(self))
    }
}
