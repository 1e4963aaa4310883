#![allow(dead_code)]

use backpenta::oracle::{generate, BandPosition, GeneratorConfig, RhsKind, SplitMix64};
use backpenta::{solve_symbolic_unevaluated, Band, BigRational, ExactSystem, Scalar};
use rand_core::{RngCore, SeedableRng};

pub fn ints(v: &[i64]) -> Vec<BigRational> {
    v.iter().map(|&x| BigRational::from_i64(x)).collect()
}

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Deterministic size in `[lo, hi]` for case `case` of a suite.
pub fn size_for(suite: u64, case: u64, lo: usize, hi: usize) -> usize {
    let mut rng = SplitMix64::seed_from_u64(suite.wrapping_mul(0x1000_0000) ^ case);
    lo + (rng.next_u64() % (hi - lo + 1) as u64) as usize
}

/// Random exact system with `d_n = 0` and a planted integer solution.
pub fn zero_lead_system(seed: u64, n: usize, range: u64) -> (ExactSystem, Vec<BigRational>) {
    let cfg = GeneratorConfig::new(seed, n, range).with_zero(BandPosition::D_N);
    let g = generate::<BigRational>(&cfg);
    (g.system, g.solution.unwrap())
}

/// Makes pivot `k` (1-based, `2 <= k <= n-1`) identically zero in the
/// symbolic run on top of a zero leading pivot.
///
/// The entries of `A₁` coupling row `k` to earlier rows (`a_{n-k+1}`,
/// `ã_{n-k+1}`, `ã_{n-k}`) are cleared so that `β_k` no longer depends on
/// the placeholder; a symbolic probe then reads `β_k` and it is subtracted
/// from `d_{n-k+1}`. The right-hand side is rebuilt from `solution`.
pub fn force_interior_zero(sys: &ExactSystem, k: usize, solution: &[BigRational]) -> ExactSystem {
    let n = sys.n();
    assert!((2..n).contains(&k));
    let zero = BigRational::from_i64(0);
    let mut s = sys.with_entry(Band::A, n - k + 1, zero.clone());
    if k >= 3 {
        s = s.with_entry(Band::ATilde, n - k + 1, zero.clone());
    }
    s = s.with_entry(Band::ATilde, n - k, zero);
    let probe = solve_symbolic_unevaluated(&s);
    let s = if probe.pivot_replacements.contains(&k) {
        s
    } else {
        let beta_k = probe.factors.beta[k - 1]
            .as_constant()
            .expect("decoupled pivot is free of the placeholder");
        let d = s.d()[n - k].clone() - beta_k;
        s.with_entry(Band::D, n - k + 1, d)
    };
    let y = s.apply(solution);
    s.with_rhs(y).unwrap()
}

/// Well-scaled float system: entries uniform on a grid in `[-1, 1]`.
pub fn scaled_float_system(seed: u64, n: usize) -> backpenta::FloatSystem {
    let cfg = GeneratorConfig::new(seed, n, 1000).with_rhs(RhsKind::Random);
    generate::<f64>(&cfg).system.map(|v| v / 1000.0)
}
