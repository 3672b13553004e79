//! Bistellar flip reduction by simulated annealing.
//!
//! The walk minimizes the f-vector lexicographically from the top dimension
//! down, `(f_n, f_{n−1}, …, f_0)`. At each step it takes an improving move
//! if one exists, chosen uniformly among the improving moves. Otherwise it
//! draws a move uniformly and accepts it with probability `exp(−Δ/T)`, where
//! `Δ` is the first nonzero component of the change. The temperature is
//! multiplied by `decay` after every accepted move.
//!
//! Randomness comes from ChaCha8 seeded with [`rand_core::SeedableRng::seed_from_u64`].
//! An index below `n` is drawn from a 64-bit output `x` as
//! `(x · n) >> 64`, and a uniform float as `(x >> 11) · 2⁻⁵³`. These
//! reductions are part of the reproducibility contract.

mod certificate;

pub use certificate::{prove_equivalent, verify_certificate, Certificate, Equivalence};

use std::cmp::Ordering;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::complex::Complex;
use crate::moves::{apply_move, enumerate_moves, Move, MoveFamily, Transcript};

/// Annealing parameters. The defaults are stable across releases.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Schedule {
    pub seed: u64,
    /// Number of walk steps, counting rejected proposals.
    pub max_moves: u64,
    pub temperature: f64,
    /// Multiplier in `(0, 1]` applied after each accepted move.
    pub decay: f64,
}

impl Schedule {
    pub const DEFAULT_SEED: u64 = 1;
    pub const DEFAULT_MAX_MOVES: u64 = 10_000;
    pub const DEFAULT_TEMPERATURE: f64 = 1.0;
    pub const DEFAULT_DECAY: f64 = 0.999;

    pub fn with_seed(seed: u64) -> Self {
        Schedule {
            seed,
            ..Schedule::default()
        }
    }
}

impl Default for Schedule {
    fn default() -> Self {
        Schedule {
            seed: Self::DEFAULT_SEED,
            max_moves: Self::DEFAULT_MAX_MOVES,
            temperature: Self::DEFAULT_TEMPERATURE,
            decay: Self::DEFAULT_DECAY,
        }
    }
}

/// The reproducible random source used by the walk.
pub struct WalkRng(ChaCha8Rng);

impl WalkRng {
    pub fn new(seed: u64) -> Self {
        WalkRng(ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform index in `0..n`; `n` must be positive.
    pub fn index(&mut self, n: usize) -> usize {
        ((self.next_u64() as u128 * n as u128) >> 64) as usize
    }

    /// Uniform in `[0, 1)`.
    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

/// Result of [`reduce`]: the best complex seen and the moves reaching it.
#[derive(Clone, Debug, PartialEq)]
pub struct Reduction {
    pub complex: Complex,
    pub transcript: Transcript,
    /// Walk steps taken, including rejected proposals.
    pub steps: u64,
}

impl Reduction {
    /// True if the result has `n + 2` vertices, the minimum for a closed
    /// `n`-dimensional pseudomanifold, attained only by `∂Δ^{n+1}`.
    pub fn reached_simplex_boundary(&self) -> bool {
        is_simplex_boundary(&self.complex)
    }
}

/// True if `k` is the boundary of a simplex (on any labels).
pub fn is_simplex_boundary(k: &Complex) -> bool {
    let n = k.dim();
    if n < 0 {
        return false;
    }
    let verts = k.vertices();
    verts.len() == n as usize + 2
        && k.is_pure()
        && k.facet_count() == verts.len()
}

/// Objective key `(f_n, …, f_0)`.
fn objective(k: &Complex) -> Vec<u64> {
    let mut f = k.f_vector().counts;
    f.reverse();
    f
}

/// First nonzero component of `to − from`, as a signed magnitude.
fn delta(from: &[u64], to: &[u64]) -> f64 {
    for (a, b) in from.iter().zip(to) {
        match b.cmp(a) {
            Ordering::Equal => continue,
            Ordering::Greater => return (b - a) as f64,
            Ordering::Less => return -((a - b) as f64),
        }
    }
    0.0
}

/// Change in the objective caused by `κ(A,B)` on a complex of dimension `n`,
/// from the face counts of `A⋆∂B` (removed) and `∂A⋆B` (added).
fn move_delta(mv: &Move, n: usize) -> Vec<i64> {
    let Move::Bistellar { a, b } = mv else {
        unreachable!("the walk only proposes bistellar moves")
    };
    let (p, q) = (a.len(), b.len());
    // Faces of A⋆∂B that are not in ∂A⋆∂B: A'⋆B' with A' = A, B' ⊊ B.
    // Faces of ∂A⋆B not in ∂A⋆∂B: A' ⊊ A, B' = B.
    let mut d = vec![0i64; n + 1];
    for (k, slot) in d.iter_mut().enumerate() {
        let size = k + 1;
        let removed = if size >= p && size - p < q { binom(q, size - p) } else { 0 };
        let added = if size >= q && size - q < p { binom(p, size - q) } else { 0 };
        *slot = added as i64 - removed as i64;
    }
    d.reverse();
    d
}

fn binom(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let mut r = 1u64;
    for i in 0..k {
        r = r * (n - i) as u64 / (i + 1) as u64;
    }
    r
}

fn first_nonzero(d: &[i64]) -> i64 {
    d.iter().copied().find(|&x| x != 0).unwrap_or(0)
}

/// Walks the bistellar move graph from `m` and returns the best complex
/// seen. Deterministic in `(m, sched)`. Stops early at `∂Δ^{n+1}`.
pub fn reduce(m: &Complex, sched: &Schedule) -> Reduction {
    let mut rng = WalkRng::new(sched.seed);
    let n = m.dim().max(0) as usize;
    let mut cur = m.clone();
    let mut cur_key = objective(&cur);
    let mut path: Vec<Move> = Vec::new();
    let mut best = (cur.clone(), cur_key.clone(), 0usize);
    let mut temperature = sched.temperature;
    let mut steps = 0;
    while steps < sched.max_moves && !is_simplex_boundary(&cur) {
        steps += 1;
        let moves = enumerate_moves(&cur, MoveFamily::Bistellar);
        if moves.is_empty() {
            break;
        }
        let deltas: Vec<i64> = moves.iter().map(|mv| first_nonzero(&move_delta(mv, n))).collect();
        let improving: Vec<usize> = (0..moves.len()).filter(|&i| deltas[i] < 0).collect();
        let chosen = if !improving.is_empty() {
            Some(improving[rng.index(improving.len())])
        } else {
            let i = rng.index(moves.len());
            let d = deltas[i] as f64;
            let accept = d <= 0.0 || (temperature > 0.0 && rng.unit() < (-d / temperature).exp());
            accept.then_some(i)
        };
        let Some(i) = chosen else { continue };
        let next = apply_move(&cur, &moves[i]).expect("enumerated moves are legal");
        let next_key = objective(&next);
        debug_assert_eq!(delta(&cur_key, &next_key), deltas[i] as f64);
        cur = next;
        cur_key = next_key;
        path.push(moves[i].clone());
        temperature *= sched.decay;
        if cur_key < best.1 {
            best = (cur.clone(), cur_key.clone(), path.len());
        }
    }
    path.truncate(best.2);
    Reduction {
        complex: best.0,
        transcript: Transcript::from_moves(path),
        steps,
    }
}
