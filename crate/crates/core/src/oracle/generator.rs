use std::fmt;
use std::str::FromStr;

use rand_core::{RngCore, SeedableRng};
pub use rand_xoshiro::SplitMix64;

use crate::banded::{BackwardPentaSystem, Band, MIN_SIZE};
use crate::scalar::Scalar;

/// A 1-based index into a band, either absolute or counted back from `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IndexSpec {
    At(usize),
    /// `n - k`
    FromEnd(usize),
}

impl IndexSpec {
    pub fn resolve(self, n: usize) -> usize {
        match self {
            IndexSpec::At(i) => i,
            IndexSpec::FromEnd(k) => n - k,
        }
    }
}

/// One entry of a band, e.g. `d_n` or `a_3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BandPosition {
    pub band: Band,
    pub index: IndexSpec,
}

impl BandPosition {
    /// The entry `d_n`, which becomes the first pivot.
    pub const D_N: BandPosition = BandPosition {
        band: Band::D,
        index: IndexSpec::FromEnd(0),
    };

    /// Resolves to a 1-based index valid for size `n`, if there is one.
    pub fn resolve(self, n: usize) -> Option<usize> {
        let i = match self.index {
            IndexSpec::FromEnd(k) if k > n => return None,
            spec => spec.resolve(n),
        };
        let first = self.band.first_index();
        (i >= first && i < first + self.band.len_for(n)).then_some(i)
    }
}

impl fmt::Display for BandPosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.index {
            IndexSpec::At(i) => write!(f, "{}_{i}", self.band.name()),
            IndexSpec::FromEnd(0) => write!(f, "{}_n", self.band.name()),
            IndexSpec::FromEnd(k) => write!(f, "{}_n-{k}", self.band.name()),
        }
    }
}

impl FromStr for BandPosition {
    type Err = String;

    /// Accepts `<band>_<index>` where band is one of `a_tilde`/`at`, `a`,
    /// `d`, `b`, `b_tilde`/`bt` and index is an integer, `n` or `n-k`.
    fn from_str(s: &str) -> Result<Self, String> {
        let bad = || format!("invalid band position `{s}` (expected e.g. d_n, a_3, b_tilde_n-1)");
        let (band, idx) = s.rsplit_once('_').ok_or_else(bad)?;
        let band = match band {
            "a_tilde" | "at" => Band::ATilde,
            "a" => Band::A,
            "d" => Band::D,
            "b" => Band::B,
            "b_tilde" | "bt" => Band::BTilde,
            _ => return Err(bad()),
        };
        let index = if idx == "n" {
            IndexSpec::FromEnd(0)
        } else if let Some(k) = idx.strip_prefix("n-") {
            IndexSpec::FromEnd(k.parse().map_err(|_| bad())?)
        } else {
            IndexSpec::At(idx.parse().map_err(|_| bad())?)
        };
        Ok(BandPosition { band, index })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RhsKind {
    /// Draw an integer solution `X` and set `Y = A X`.
    #[default]
    PlantedSolution,
    /// Draw `Y` directly.
    Random,
}

/// Parameters of [`generate`].
///
/// Draws come from a SplitMix64 stream seeded with `seed`. Each value is
/// `(next_u64() % (2m + 1)) as i64 - m` where `m = entry_range`, consumed in
/// the order ã, a, d, b, b̃ (each from its first element), then either the
/// planted solution `X` or `Y`. Forced zeros are applied before `Y = A X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorConfig {
    pub seed: u64,
    pub n: usize,
    pub entry_range: u64,
    pub force_zero: Vec<BandPosition>,
    pub rhs: RhsKind,
}

impl GeneratorConfig {
    pub fn new(seed: u64, n: usize, entry_range: u64) -> Self {
        GeneratorConfig {
            seed,
            n,
            entry_range,
            force_zero: Vec::new(),
            rhs: RhsKind::default(),
        }
    }

    pub fn with_zero(mut self, pos: BandPosition) -> Self {
        self.force_zero.push(pos);
        self
    }

    pub fn with_rhs(mut self, rhs: RhsKind) -> Self {
        self.rhs = rhs;
        self
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeneratedSystem<T> {
    pub system: BackwardPentaSystem<T>,
    /// The planted solution, when one was requested.
    pub solution: Option<Vec<T>>,
}

/// Builds a deterministic random system. Panics on an invalid config
/// (`n < 5`, `entry_range == 0`, or a forced position outside the bands).
pub fn generate<T: Scalar>(cfg: &GeneratorConfig) -> GeneratedSystem<T> {
    assert!(cfg.n >= MIN_SIZE, "generator needs n >= 5");
    assert!(cfg.entry_range >= 1, "generator needs entry_range >= 1");
    let n = cfg.n;
    let m = cfg.entry_range;
    let mut rng = SplitMix64::seed_from_u64(cfg.seed);
    let mut draw = |k: usize| -> Vec<T> {
        (0..k)
            .map(|_| T::from_i64((rng.next_u64() % (2 * m + 1)) as i64 - m as i64))
            .collect()
    };
    let a_tilde = draw(n - 2);
    let a = draw(n - 1);
    let d = draw(n);
    let b = draw(n - 1);
    let b_tilde = draw(n - 2);
    let tail = draw(n);

    let mut system = BackwardPentaSystem::new(a_tilde, a, d, b, b_tilde, vec![T::zero(); n])
        .expect("generated lengths are consistent");
    for pos in &cfg.force_zero {
        let i = pos
            .resolve(n)
            .unwrap_or_else(|| panic!("position {pos} is outside a system of size {n}"));
        system = system.with_entry(pos.band, i, T::zero());
    }
    match cfg.rhs {
        RhsKind::PlantedSolution => {
            let y = system.apply(&tail);
            GeneratedSystem {
                system: system.with_rhs(y).unwrap(),
                solution: Some(tail),
            }
        }
        RhsKind::Random => GeneratedSystem {
            system: system.with_rhs(tail).unwrap(),
            solution: None,
        },
    }
}
