//! Seeded random instances with integer coordinates.

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::instance::Instance;
use crate::position::{is_general_position_set, is_general_position_z};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenerateOptions {
    pub dim: usize,
    pub n: usize,
    pub seed: u64,
    /// Coordinates are drawn uniformly from `[-bound, bound]`.
    pub bound: i64,
    /// Resample until z is interior to `conv(S)`.
    pub containing: bool,
    /// Resample until both general-position checks pass.
    pub general_position: bool,
    pub max_attempts: usize,
}

impl GenerateOptions {
    pub fn new(dim: usize, n: usize, seed: u64) -> GenerateOptions {
        GenerateOptions {
            dim,
            n,
            seed,
            bound: 100.max(n as i64),
            containing: false,
            general_position: true,
            max_attempts: 10_000,
        }
    }

    pub fn containing(mut self, yes: bool) -> Self {
        self.containing = yes;
        self
    }

    pub fn bound(mut self, bound: i64) -> Self {
        self.bound = bound;
        self
    }

    pub fn general_position(mut self, yes: bool) -> Self {
        self.general_position = yes;
        self
    }
}

/// Draws an instance with `z` at the origin. Deterministic in the options.
pub fn generate(opts: &GenerateOptions) -> Result<Instance> {
    if opts.dim == 0 || opts.n == 0 {
        return Err(Error::Precondition("d and n must be positive".into()));
    }
    if opts.bound < opts.n as i64 && opts.general_position {
        return Err(Error::Precondition(format!(
            "coordinate bound {} is smaller than n = {}",
            opts.bound, opts.n
        )));
    }
    if opts.bound < 1 {
        return Err(Error::Precondition("coordinate bound must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let z = Point::origin(opts.dim);
    for _ in 0..opts.max_attempts {
        let points: Vec<Point> = (0..opts.n)
            .map(|_| {
                let coords: Vec<i64> = (0..opts.dim)
                    .map(|_| rng.random_range(-opts.bound..=opts.bound))
                    .collect();
                Point::from_ints(&coords)
            })
            .collect();
        let Ok(inst) = Instance::new(opts.dim, points, z.clone()) else {
            continue;
        };
        if opts.general_position
            && !(is_general_position_z(&inst) && is_general_position_set(&inst))
        {
            continue;
        }
        if opts.containing && inst.is_avoiding(&(0..opts.n).collect::<Vec<_>>()) {
            continue;
        }
        return Ok(inst);
    }
    Err(Error::GenerationBudget {
        seed: opts.seed,
        attempts: opts.max_attempts,
    })
}
