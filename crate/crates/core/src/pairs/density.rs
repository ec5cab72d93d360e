//! Pair density and the epsilon-regularity check, exact on tiny sets and
//! sampled on realistic ones.

use crate::bits::{self, VertexSet};
use crate::graph::SimpleGraph;
use num_rational::Ratio;
use rand::SeedableRng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PairsError {
    #[error("sides must be nonempty")]
    EmptySide,
    #[error("sides overlap at vertex {0}")]
    OverlappingSides(usize),
    #[error("exact regularity enumeration is limited to sides of {max}, got {got}")]
    ExactTooLarge { max: usize, got: usize },
}

/// Exact density `e(A,B) / (|A| |B|)` kept as a numerator/denominator pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Density {
    pub edges: usize,
    pub pairs: usize,
}

impl Density {
    pub fn value(&self) -> f64 {
        self.edges as f64 / self.pairs as f64
    }

    pub fn as_ratio(&self) -> Ratio<u64> {
        Ratio::new(self.edges as u64, self.pairs as u64)
    }
}

fn check_sides(a: &[usize], b: &[usize]) -> Result<(), PairsError> {
    if a.is_empty() || b.is_empty() {
        return Err(PairsError::EmptySide);
    }
    let aset: std::collections::HashSet<usize> = a.iter().copied().collect();
    if let Some(&v) = b.iter().find(|v| aset.contains(v)) {
        return Err(PairsError::OverlappingSides(v));
    }
    Ok(())
}

/// Exact rational density of the disjoint pair `(a, b)` in `host`.
pub fn density(host: &SimpleGraph, a: &[usize], b: &[usize]) -> Result<Density, PairsError> {
    check_sides(a, b)?;
    let b_bits = VertexSet::from_iter(host.n(), b.iter().copied());
    let edges = a
        .iter()
        .map(|&u| bits::count_and(host.row(u), b_bits.words()))
        .sum();
    Ok(Density {
        edges,
        pairs: a.len() * b.len(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RegularityMode {
    Exact,
    Sampled,
}

/// Outcome of a regularity check. Exact mode is a decision; sampled mode is
/// one-sided evidence (it can refute regularity, never certify it).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RegularityVerdict {
    pub density: Density,
    pub mode: RegularityMode,
    pub eps: f64,
    pub max_deviation: f64,
    /// A subset pair whose density deviates by at least `eps`, when found.
    pub witness: Option<(Vec<usize>, Vec<usize>)>,
    /// `Some(decision)` in exact mode.
    pub regular: Option<bool>,
    pub samples: u64,
}

const EXACT_LIMIT: usize = 16;

/// Checks `eps`-regularity of the pair `(a, b)`.
///
/// Exact mode enumerates every subset pair with `|A'| >= eps |A|` and
/// `|B'| >= eps |B|` (sides capped at 16; the enumeration is
/// `2^(|A|+|B|)`). Sampled mode draws `budget` uniform subset pairs at the
/// threshold sizes with the given seed.
pub fn regularity_check(
    host: &SimpleGraph,
    a: &[usize],
    b: &[usize],
    eps: f64,
    mode: RegularityMode,
    budget: u64,
    seed: u64,
) -> Result<RegularityVerdict, PairsError> {
    check_sides(a, b)?;
    let dens = density(host, a, b)?;
    let min_a = ((eps * a.len() as f64).ceil() as usize).max(1);
    let min_b = ((eps * b.len() as f64).ceil() as usize).max(1);

    match mode {
        RegularityMode::Exact => {
            for side in [a, b] {
                if side.len() > EXACT_LIMIT {
                    return Err(PairsError::ExactTooLarge {
                        max: EXACT_LIMIT,
                        got: side.len(),
                    });
                }
            }
            // cross-adjacency bitmasks, B indexed inside a machine word
            let rows: Vec<u32> = a
                .iter()
                .map(|&u| {
                    b.iter()
                        .enumerate()
                        .filter(|(_, &v)| host.has_edge(u, v))
                        .fold(0u32, |m, (j, _)| m | 1 << j)
                })
                .collect();
            let base = dens.value();
            let mut max_dev = 0.0f64;
            let mut witness = None;
            let mut esum = vec![0u32; 1 << a.len()];
            for bmask in 1u32..1 << b.len() {
                let bsize = bmask.count_ones() as usize;
                if bsize < min_b {
                    continue;
                }
                let cnt: Vec<u32> = rows.iter().map(|r| (r & bmask).count_ones()).collect();
                for amask in 1usize..1 << a.len() {
                    let low = amask.trailing_zeros() as usize;
                    esum[amask] = esum[amask & (amask - 1)] + cnt[low];
                    let asize = amask.count_ones() as usize;
                    if asize < min_a {
                        continue;
                    }
                    let d = esum[amask] as f64 / (asize * bsize) as f64;
                    let dev = (d - base).abs();
                    if dev > max_dev {
                        max_dev = dev;
                        if dev >= eps {
                            witness = Some((
                                pick(a, amask as u32),
                                pick(b, bmask),
                            ));
                        }
                    }
                }
            }
            Ok(RegularityVerdict {
                density: dens,
                mode,
                eps,
                max_deviation: max_dev,
                witness,
                regular: Some(max_dev < eps),
                samples: 0,
            })
        }
        RegularityMode::Sampled => {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let base = dens.value();
            let mut max_dev = 0.0f64;
            let mut witness = None;
            for _ in 0..budget {
                let sub_a = sample_subset(&mut rng, a, min_a);
                let sub_b = sample_subset(&mut rng, b, min_b);
                let d = density(host, &sub_a, &sub_b)?.value();
                let dev = (d - base).abs();
                if dev > max_dev {
                    max_dev = dev;
                    if dev >= eps {
                        witness = Some((sub_a, sub_b));
                    }
                }
            }
            Ok(RegularityVerdict {
                density: dens,
                mode,
                eps,
                max_deviation: max_dev,
                witness,
                regular: None,
                samples: budget,
            })
        }
    }
}

fn pick(side: &[usize], mask: u32) -> Vec<usize> {
    side.iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &v)| v)
        .collect()
}

fn sample_subset(rng: &mut impl rand::Rng, side: &[usize], size: usize) -> Vec<usize> {
    rand::seq::index::sample(rng, side.len(), size.min(side.len()))
        .iter()
        .map(|i| side[i])
        .collect()
}

/// The vertices of `a` with at least `(d - eps) |b|` neighbors in `b`.
pub fn typical_vertices(
    host: &SimpleGraph,
    a: &[usize],
    b: &[usize],
    eps: f64,
    d: f64,
) -> Vec<usize> {
    let b_bits = VertexSet::from_iter(host.n(), b.iter().copied());
    let threshold = (d - eps) * b.len() as f64;
    a.iter()
        .copied()
        .filter(|&v| bits::count_and(host.row(v), b_bits.words()) as f64 >= threshold)
        .collect()
}
