//! Simplicial isomorphism by backtracking over vertex assignments.
//!
//! Vertices are matched only within classes of equal local invariants, and
//! are assigned in breadth-first order over the 1-skeleton so that adjacency
//! constraints prune early.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};

use super::{Complex, Simplex, VertexId};
use crate::error::{Error, Result};

/// A vertex bijection, as sorted `(from, to)` pairs.
pub type Bijection = Vec<(VertexId, VertexId)>;

pub const DEFAULT_ISO_BUDGET: u64 = 2_000_000;

/// Returns a witness bijection `K → L`, or `None` if none exists.
///
/// Panics only if the default search budget is exhausted, which does not
/// happen for complexes of the sizes this crate works with.
pub fn isomorphic(k: &Complex, l: &Complex) -> Option<Bijection> {
    isomorphic_with_budget(k, l, DEFAULT_ISO_BUDGET).expect("isomorphism search budget exhausted")
}

pub fn isomorphic_with_budget(k: &Complex, l: &Complex, budget: u64) -> Result<Option<Bijection>> {
    if k.facet_count() != l.facet_count() || k.dim() != l.dim() {
        return Ok(None);
    }
    let kv = k.vertices();
    let lv = l.vertices();
    if kv.len() != lv.len() {
        return Ok(None);
    }
    if k.f_vector() != l.f_vector() {
        return Ok(None);
    }
    let ki = Invariants::new(k);
    let li = Invariants::new(l);
    let mut kinv: Vec<_> = kv.iter().map(|v| ki.signature[v].clone()).collect();
    let mut linv: Vec<_> = lv.iter().map(|v| li.signature[v].clone()).collect();
    kinv.sort();
    linv.sort();
    if kinv != linv {
        return Ok(None);
    }

    let order = search_order(&kv, &ki);
    let mut candidates: BTreeMap<&Vec<u64>, Vec<VertexId>> = BTreeMap::new();
    for v in &lv {
        candidates.entry(&li.signature[v]).or_default().push(*v);
    }
    let mut search = Search {
        k,
        l,
        ki: &ki,
        li: &li,
        order: &order,
        candidates: &candidates,
        forward: HashMap::new(),
        used: HashSet::new(),
        nodes: 0,
        budget,
    };
    if search.assign(0)? {
        let mut map: Bijection = search.forward.into_iter().collect();
        map.sort_unstable();
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

struct Invariants {
    /// Per vertex: number of faces of each dimension containing it.
    signature: HashMap<VertexId, Vec<u64>>,
    neighbors: HashMap<VertexId, BTreeSet<VertexId>>,
    /// Facets through each vertex.
    facets_at: HashMap<VertexId, Vec<Simplex>>,
}

impl Invariants {
    fn new(k: &Complex) -> Self {
        let width = (k.dim() + 2).max(1) as usize;
        let mut signature: HashMap<VertexId, Vec<u64>> = HashMap::new();
        let mut neighbors: HashMap<VertexId, BTreeSet<VertexId>> = HashMap::new();
        for s in k.faces() {
            for &v in s.vertices() {
                let sig = signature.entry(v).or_insert_with(|| vec![0; width + 1]);
                sig[s.len() - 1] += 1;
                if s.len() == 2 {
                    let other = if s.vertices()[0] == v {
                        s.vertices()[1]
                    } else {
                        s.vertices()[0]
                    };
                    neighbors.entry(v).or_default().insert(other);
                }
            }
        }
        let mut facets_at: HashMap<VertexId, Vec<Simplex>> = HashMap::new();
        for f in k.facets() {
            for &v in f.vertices() {
                facets_at.entry(v).or_default().push(f.clone());
                signature.get_mut(&v).expect("vertex has faces")[width] += 1;
            }
        }
        Invariants {
            signature,
            neighbors,
            facets_at,
        }
    }
}

fn search_order(vertices: &[VertexId], inv: &Invariants) -> Vec<VertexId> {
    let mut class_size: HashMap<&Vec<u64>, usize> = HashMap::new();
    for v in vertices {
        *class_size.entry(&inv.signature[v]).or_default() += 1;
    }
    let mut remaining: BTreeSet<VertexId> = vertices.iter().copied().collect();
    let mut order = Vec::with_capacity(vertices.len());
    while !remaining.is_empty() {
        let start = *remaining
            .iter()
            .min_by_key(|v| (class_size[&inv.signature[*v]], **v))
            .expect("nonempty");
        let mut queue = VecDeque::from([start]);
        remaining.remove(&start);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            if let Some(ns) = inv.neighbors.get(&v) {
                for n in ns {
                    if remaining.remove(n) {
                        queue.push_back(*n);
                    }
                }
            }
        }
    }
    order
}

struct Search<'a> {
    k: &'a Complex,
    l: &'a Complex,
    ki: &'a Invariants,
    li: &'a Invariants,
    order: &'a [VertexId],
    candidates: &'a BTreeMap<&'a Vec<u64>, Vec<VertexId>>,
    forward: HashMap<VertexId, VertexId>,
    used: HashSet<VertexId>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn assign(&mut self, depth: usize) -> Result<bool> {
        if depth == self.order.len() {
            let image = self.k.relabel(|v| self.forward[&v]);
            return Ok(&image == self.l);
        }
        let v = self.order[depth];
        let cands = &self.candidates[&self.ki.signature[&v]];
        for &w in cands {
            if self.used.contains(&w) {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::budget("isomorphism search", self.budget));
            }
            if !self.consistent(v, w) {
                continue;
            }
            self.forward.insert(v, w);
            self.used.insert(w);
            if self.assign(depth + 1)? {
                return Ok(true);
            }
            self.forward.remove(&v);
            self.used.remove(&w);
        }
        Ok(false)
    }

    fn consistent(&self, v: VertexId, w: VertexId) -> bool {
        let empty = BTreeSet::new();
        let kn = self.ki.neighbors.get(&v).unwrap_or(&empty);
        let ln = self.li.neighbors.get(&w).unwrap_or(&empty);
        for (&u, &x) in &self.forward {
            if kn.contains(&u) != ln.contains(&x) {
                return false;
            }
        }
        // Every facet through v whose vertices are all assigned must map onto
        // a facet of L.
        if let Some(fs) = self.ki.facets_at.get(&v) {
            for f in fs {
                let mapped: Option<Vec<VertexId>> = f
                    .vertices()
                    .iter()
                    .map(|&u| {
                        if u == v {
                            Some(w)
                        } else {
                            self.forward.get(&u).copied()
                        }
                    })
                    .collect();
                if let Some(img) = mapped {
                    if !self.l.facets().contains(&Simplex::from_set(img)) {
                        return false;
                    }
                }
            }
        }
        true
    }
}
