//! Seeded instance corpora shared by the integration tests.
#![allow(dead_code)]

use zerohull::generate::{generate, GenerateOptions};
use zerohull::Instance;

pub struct Sample {
    pub label: String,
    pub instance: Instance,
}

fn seed_for(d: usize, n: usize, containing: bool, rep: usize, salt: u64) -> u64 {
    salt.wrapping_mul(1_000_003)
        ^ ((d as u64) << 40 | (n as u64) << 24 | (containing as u64) << 16 | rep as u64)
}

fn sample(d: usize, n: usize, containing: bool, rep: usize, salt: u64, gp: bool) -> Sample {
    let seed = seed_for(d, n, containing, rep, salt);
    let mut opts = GenerateOptions::new(d, n, seed)
        .containing(containing)
        .general_position(gp);
    if !gp {
        // A tiny grid makes collinear triples and z on a segment common.
        opts = opts.bound(3);
    }
    let instance = generate(&opts).unwrap_or_else(|e| panic!("d={d} n={n} seed={seed}: {e}"));
    Sample {
        label: format!("d={d} n={n} containing={containing} seed={seed}"),
        instance,
    }
}

/// General-position instances over every `d <= 4`, `d + 1 <= n <= 12`, half
/// drawn to contain z and half unconstrained. 76 cells times `reps`.
pub fn mixed_corpus(reps: usize) -> Vec<Sample> {
    let mut out = Vec::new();
    for d in 1..=4 {
        for n in d + 1..=12 {
            for containing in [true, false] {
                for rep in 0..reps {
                    out.push(sample(d, n, containing, rep, 1, true));
                }
            }
        }
    }
    out
}

/// Containing general-position instances with `|S| = d + extra`.
pub fn fixed_excess(dims: &[usize], extra: usize, count: usize, salt: u64) -> Vec<Sample> {
    (0..count)
        .map(|i| {
            let d = dims[i % dims.len()];
            sample(d, d + extra, true, i, salt, true)
        })
        .collect()
}

/// Containing planar instances on a small grid, general position not enforced.
pub fn planar_grid(count: usize, max_n: usize) -> Vec<Sample> {
    (0..count)
        .map(|i| sample(2, 3 + i % (max_n - 2), true, i, 7, false))
        .collect()
}
