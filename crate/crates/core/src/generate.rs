//! Seeded random graph generators for building verification corpora.
//!
//! Determinism contract: every generator is a pure function of its spec. The
//! random stream is ChaCha8 keyed from the 64-bit seed (`seed_from_u64`, the
//! SplitMix64 expansion documented by `rand_core`), so a spec reproduces the
//! same graph across runs and platforms. Connectivity rejection draws fresh
//! samples from the same stream, capped at [`MAX_ATTEMPTS`].

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, MAX_VERTICES};

/// Rejection cap for connectivity (and simplicity, for pairing models).
pub const MAX_ATTEMPTS: usize = 10_000;

/// Graph family plus its parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GraphFamily {
    /// Complete bipartite graph; ignores the seed.
    Complete,
    /// Each of the `n * m` possible edges kept with probability `p`,
    /// rejected until connected.
    RandomConnected { p: f64 },
    /// Every second-class vertex gets exactly `b` distinct first-class
    /// neighbors, rejected until connected.
    RandomRightRegular { b: usize },
    /// Uniform degree `a` on the first class and `b` on the second, built by
    /// configuration-style stub pairing with rejection of duplicate edges,
    /// then rejected until connected.
    RandomBiregular { a: usize, b: usize },
}

/// Reproducible generator request.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneratorSpec {
    pub family: GraphFamily,
    pub n: usize,
    pub m: usize,
    pub seed: u64,
}

impl GeneratorSpec {
    fn validate(&self) -> Result<()> {
        if self.n == 0 || self.m == 0 {
            return Err(Error::EmptySide);
        }
        if self.n + self.m > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                total: self.n + self.m,
                max: MAX_VERTICES,
            });
        }
        match self.family {
            GraphFamily::Complete => Ok(()),
            GraphFamily::RandomConnected { p } => {
                if !(0.0..=1.0).contains(&p) {
                    return Err(Error::InfeasibleSpec(format!(
                        "edge probability {p} outside [0, 1]"
                    )));
                }
                Ok(())
            }
            GraphFamily::RandomRightRegular { b } => {
                if b == 0 || b > self.n {
                    return Err(Error::InfeasibleSpec(format!(
                        "right degree {b} infeasible for n = {}",
                        self.n
                    )));
                }
                Ok(())
            }
            GraphFamily::RandomBiregular { a, b } => {
                if a == 0 || b == 0 || a > self.m || b > self.n {
                    return Err(Error::InfeasibleSpec(format!(
                        "degrees a = {a}, b = {b} infeasible for n = {}, m = {}",
                        self.n, self.m
                    )));
                }
                if a * self.n != b * self.m {
                    return Err(Error::InfeasibleSpec(format!(
                        "handshake fails: a*n = {} but b*m = {}",
                        a * self.n,
                        b * self.m
                    )));
                }
                Ok(())
            }
        }
    }
}

/// Generates the graph described by `spec`. Deterministic for a fixed spec.
pub fn generate(spec: &GeneratorSpec) -> Result<BipartiteGraph> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    match spec.family {
        GraphFamily::Complete => BipartiteGraph::complete(spec.n, spec.m),
        GraphFamily::RandomConnected { p } => retry_connected(|| {
            let mut edges = Vec::new();
            for i in 0..spec.n {
                for j in 0..spec.m {
                    if rng.random_bool(p) {
                        edges.push((i, j));
                    }
                }
            }
            Some(BipartiteGraph::new(spec.n, spec.m, &edges).expect("edges are in range"))
        }),
        GraphFamily::RandomRightRegular { b } => retry_connected(|| {
            let mut edges = Vec::with_capacity(b * spec.m);
            for j in 0..spec.m {
                let picks = rand::seq::index::sample(&mut rng, spec.n, b);
                edges.extend(picks.iter().map(|i| (i, j)));
            }
            Some(BipartiteGraph::new(spec.n, spec.m, &edges).expect("samples are distinct"))
        }),
        GraphFamily::RandomBiregular { a, b } => retry_connected(|| {
            // stub lists: first-class vertex i appears a times, second-class
            // vertex j appears b times; a shuffle of the second list pairs
            // them off
            let left: Vec<usize> = (0..spec.n).flat_map(|i| std::iter::repeat_n(i, a)).collect();
            let mut right: Vec<usize> =
                (0..spec.m).flat_map(|j| std::iter::repeat_n(j, b)).collect();
            right.shuffle(&mut rng);
            let edges: Vec<(usize, usize)> =
                left.iter().copied().zip(right.iter().copied()).collect();
            BipartiteGraph::new(spec.n, spec.m, &edges).ok() // duplicate pairing -> retry
        }),
    }
}

fn retry_connected(
    mut attempt: impl FnMut() -> Option<BipartiteGraph>,
) -> Result<BipartiteGraph> {
    for _ in 0..MAX_ATTEMPTS {
        if let Some(g) = attempt() {
            if g.is_connected() {
                return Ok(g);
            }
        }
    }
    Err(Error::ConnectivityRetriesExhausted {
        attempts: MAX_ATTEMPTS,
    })
}
