use std::fmt;

use crate::error::{Error, Result};

/// Vertex label. Labels are opaque; only their integer order matters.
pub type VertexId = u32;

/// A simplex as a strictly increasing list of vertex labels.
///
/// The empty list is the empty simplex ∅, of dimension −1, which is a face of
/// every simplex.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Simplex(Vec<VertexId>);

impl Simplex {
    pub fn empty() -> Self {
        Simplex(Vec::new())
    }

    pub fn vertex(v: VertexId) -> Self {
        Simplex(vec![v])
    }

    /// Builds a simplex from labels in any order, rejecting repeats.
    pub fn new(mut vertices: Vec<VertexId>) -> Result<Self> {
        vertices.sort_unstable();
        if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::MalformedSimplex { vertex: w[0] });
        }
        Ok(Simplex(vertices))
    }

    /// Builds a simplex from labels in any order, silently dropping repeats.
    pub fn from_set<I: IntoIterator<Item = VertexId>>(vertices: I) -> Self {
        let mut v: Vec<VertexId> = vertices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Simplex(v)
    }

    pub(crate) fn from_sorted_unchecked(vertices: Vec<VertexId>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Simplex(vertices)
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dim(&self) -> i32 {
        self.0.len() as i32 - 1
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// `self ≤ other`.
    pub fn is_face_of(&self, other: &Simplex) -> bool {
        if self.len() > other.len() {
            return false;
        }
        let mut it = other.0.iter();
        'outer: for v in &self.0 {
            for w in it.by_ref() {
                if w == v {
                    continue 'outer;
                }
                if w > v {
                    return false;
                }
            }
            return false;
        }
        true
    }

    pub fn is_disjoint(&self, other: &Simplex) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    /// Vertex union. Callers that need the join `A⋆B` check disjointness first.
    pub fn union(&self, other: &Simplex) -> Simplex {
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => {
                    out.push(self.0[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(other.0[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push(self.0[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Simplex(out)
    }

    pub fn difference(&self, other: &Simplex) -> Simplex {
        Simplex(
            self.0
                .iter()
                .copied()
                .filter(|v| !other.contains_vertex(*v))
                .collect(),
        )
    }

    pub fn with_vertex(&self, v: VertexId) -> Simplex {
        match self.0.binary_search(&v) {
            Ok(_) => self.clone(),
            Err(pos) => {
                let mut out = self.0.clone();
                out.insert(pos, v);
                Simplex(out)
            }
        }
    }

    pub fn without_vertex(&self, v: VertexId) -> Simplex {
        Simplex(self.0.iter().copied().filter(|&w| w != v).collect())
    }

    /// Codimension-one faces, i.e. the facets of `∂self`. For a vertex this is
    /// `[∅]`; for ∅ it is empty.
    pub fn facets_of_boundary(&self) -> impl Iterator<Item = Simplex> + '_ {
        (0..self.0.len()).map(move |i| {
            let mut v = self.0.clone();
            v.remove(i);
            Simplex(v)
        })
    }

    /// All faces including ∅ and `self`, in no particular order.
    pub fn faces(&self) -> impl Iterator<Item = Simplex> + '_ {
        let n = self.0.len();
        assert!(n < 32, "simplex too large to enumerate faces");
        (0u32..(1u32 << n)).map(move |mask| {
            Simplex(
                (0..n)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| self.0[i])
                    .collect(),
            )
        })
    }

    pub fn relabel(&self, f: impl Fn(VertexId) -> VertexId) -> Simplex {
        Simplex::from_set(self.0.iter().map(|&v| f(v)))
    }

    pub fn max_vertex(&self) -> Option<VertexId> {
        self.0.last().copied()
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<&[VertexId]> for Simplex {
    fn from(v: &[VertexId]) -> Self {
        Simplex::from_set(v.iter().copied())
    }
}

impl<const N: usize> From<[VertexId; N]> for Simplex {
    fn from(v: [VertexId; N]) -> Self {
        Simplex::from_set(v)
    }
}
