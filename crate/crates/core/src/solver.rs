//! LU recurrences for the row-reversed system and the two solve algorithms.
//!
//! With `A₁ = L U`, `L` unit lower triangular and `U` upper triangular,
//! the factor vectors obey (1-based, as conventionally written)
//!
//! ```text
//! α₁ = b_n                 αᵢ = b_{n-i+1} - γᵢ b̃_{n-i+2}
//! β₁ = d_n                 β₂ = d_{n-1} - α₁γ₂
//! βᵢ = d_{n-i+1} - (ã_{n-i+1}/β_{i-2}) b̃_{n-i+3} - α_{i-1}γᵢ
//! γ₂ = a_{n-1}/β₁          γᵢ = (a_{n-i+1} - (ã_{n-i+1}/β_{i-2}) α_{i-2}) / β_{i-1}
//! ```
//!
//! and `det(A₁) = ∏ βᵢ`. Every pivot `βᵢ` is inspected as soon as it is
//! formed. The numeric solve stops on a zero pivot; the symbolic solve
//! replaces it by the placeholder `x`, carries on over rational functions
//! and substitutes `x = 0` at the end.
//!
//! Pivot indices in errors and reports are 1-based.

use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::banded::{BackwardPentaSystem, PentaSystem};
use crate::oracle::DenseMatrix;
use crate::rational_fn::{RationalFnError, RationalFunction};
use crate::scalar::{Mode, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("zero pivot beta[{0}]")]
    ZeroPivot(usize),
    #[error("substituting x = 0 hits a pole in {what}")]
    PoleAtZero { what: String },
    #[error("system is singular: det(A1) vanishes at x = 0")]
    Singular,
}

/// Factor vectors of `A₁ = L U`.
///
/// `alpha[k]` is α_{k+1}, `beta[k]` is β_{k+1} and `gamma[k]` is γ_{k+2}.
/// `l_outer[k]` is the `L` entry at `(k+2, k)`, i.e. ã_{n-k-2}/β_{k+1};
/// `u_outer[k]` is the `U` entry at `(k, k+2)`, i.e. b̃_{n-k}.
#[derive(Debug, Clone, PartialEq)]
pub struct LUFactors<T> {
    pub n: usize,
    pub alpha: Vec<T>,
    pub beta: Vec<T>,
    pub gamma: Vec<T>,
    pub l_outer: Vec<T>,
    pub u_outer: Vec<T>,
}

impl<T: Scalar> LUFactors<T> {
    /// Dense unit lower-triangular factor.
    pub fn lower(&self) -> DenseMatrix<T> {
        let mut l = DenseMatrix::identity(self.n);
        for (k, g) in self.gamma.iter().enumerate() {
            l.set(k + 1, k, g.clone());
        }
        for (k, v) in self.l_outer.iter().enumerate() {
            l.set(k + 2, k, v.clone());
        }
        l
    }

    /// Dense upper-triangular factor.
    pub fn upper(&self) -> DenseMatrix<T> {
        let mut u = DenseMatrix::zeros(self.n);
        for (k, b) in self.beta.iter().enumerate() {
            u.set(k, k, b.clone());
        }
        for (k, a) in self.alpha.iter().enumerate() {
            u.set(k, k + 1, a.clone());
        }
        for (k, v) in self.u_outer.iter().enumerate() {
            u.set(k, k + 2, v.clone());
        }
        u
    }

    /// `det(A₁) = ∏ βᵢ`.
    pub fn determinant(&self) -> T {
        self.beta.iter().cloned().fold(T::one(), |acc, b| acc * b)
    }

    /// `det(A)`: reversing `n` rows takes ⌊n/2⌋ swaps.
    pub fn det_original(&self) -> T {
        reversal_sign(self.n, self.determinant())
    }
}

fn reversal_sign<T: Scalar>(n: usize, det_a1: T) -> T {
    if (n / 2) % 2 == 1 {
        -det_a1
    } else {
        det_a1
    }
}

/// Runs the recurrences, passing every freshly computed pivot through
/// `check` (with its 1-based index) before it is used.
fn factor_with<T, F>(sys: &PentaSystem<T>, mut check: F) -> Result<LUFactors<T>, SolveError>
where
    T: Scalar,
    F: FnMut(usize, T) -> Result<T, SolveError>,
{
    let n = sys.n();
    let (diag, sub1, sub2, sup1, sup2) =
        (sys.diag(), sys.sub1(), sys.sub2(), sys.sup1(), sys.sup2());
    let mut alpha = Vec::with_capacity(n - 1);
    let mut beta: Vec<T> = Vec::with_capacity(n);
    let mut gamma = Vec::with_capacity(n - 1);
    let mut l_outer = Vec::with_capacity(n - 2);

    beta.push(check(1, diag[0].clone())?);
    gamma.push(sub1[0].clone() / beta[0].clone());
    alpha.push(sup1[0].clone());
    let b2 = diag[1].clone() - alpha[0].clone() * gamma[0].clone();
    alpha.push(sup1[1].clone() - gamma[0].clone() * sup2[0].clone());
    beta.push(check(2, b2)?);

    for k in 2..n {
        let l = sub2[k - 2].clone() / beta[k - 2].clone();
        let g = (sub1[k - 1].clone() - l.clone() * alpha[k - 2].clone()) / beta[k - 1].clone();
        if k < n - 1 {
            alpha.push(sup1[k].clone() - g.clone() * sup2[k - 1].clone());
        }
        let bk =
            diag[k].clone() - l.clone() * sup2[k - 2].clone() - alpha[k - 1].clone() * g.clone();
        l_outer.push(l);
        gamma.push(g);
        beta.push(check(k + 1, bk)?);
    }

    Ok(LUFactors {
        n,
        alpha,
        beta,
        gamma,
        l_outer,
        u_outer: sup2.to_vec(),
    })
}

/// Factors `A₁`, failing on the first pivot that is exactly zero.
pub fn factor<T: Scalar>(sys: &PentaSystem<T>) -> Result<LUFactors<T>, SolveError> {
    factor_with(sys, |i, b| {
        if b.is_zero() {
            Err(SolveError::ZeroPivot(i))
        } else {
            Ok(b)
        }
    })
}

/// Like [`factor`], but also rejects pivots with `|β| < tol`.
pub fn factor_with_tolerance<T>(sys: &PentaSystem<T>, tol: f64) -> Result<LUFactors<T>, SolveError>
where
    T: Scalar + ToPrimitive,
{
    factor_with(sys, |i, b| {
        let small = b.is_zero() || b.to_f64().is_some_and(|v| v.abs() < tol);
        if small {
            Err(SolveError::ZeroPivot(i))
        } else {
            Ok(b)
        }
    })
}

/// Solves `L z = Y₁`.
pub fn forward_sweep<T: Scalar>(f: &LUFactors<T>, y1: &[T]) -> Vec<T> {
    let n = f.n;
    let mut z: Vec<T> = Vec::with_capacity(n);
    z.push(y1[0].clone());
    z.push(y1[1].clone() - f.gamma[0].clone() * z[0].clone());
    for k in 2..n {
        let v = y1[k].clone()
            - f.l_outer[k - 2].clone() * z[k - 2].clone()
            - f.gamma[k - 1].clone() * z[k - 1].clone();
        z.push(v);
    }
    z
}

/// Solves `U x = z`.
pub fn back_substitute<T: Scalar>(f: &LUFactors<T>, z: &[T]) -> Vec<T> {
    let n = f.n;
    let mut x = vec![T::zero(); n];
    x[n - 1] = z[n - 1].clone() / f.beta[n - 1].clone();
    x[n - 2] =
        (z[n - 2].clone() - f.alpha[n - 2].clone() * x[n - 1].clone()) / f.beta[n - 2].clone();
    for k in (0..n - 2).rev() {
        x[k] = (z[k].clone()
            - f.alpha[k].clone() * x[k + 1].clone()
            - f.u_outer[k].clone() * x[k + 2].clone())
            / f.beta[k].clone();
    }
    x
}

/// Outcome of a successful solve.
#[derive(Debug, Clone, PartialEq)]
pub struct SolveReport<T> {
    /// Solution in the original order `x₁..x_n`.
    pub x: Vec<T>,
    /// `det(A₁)`.
    pub det: T,
    pub mode: Mode,
    /// 1-based indices of pivots replaced by the placeholder (symbolic only).
    pub pivot_replacements: Vec<usize>,
}

impl<T: Scalar> SolveReport<T> {
    /// `det(A)` of the original backward system.
    pub fn det_original(&self) -> T {
        reversal_sign(self.x.len(), self.det.clone())
    }
}

/// Intermediate vectors of a numeric solve.
#[derive(Debug, Clone, PartialEq)]
pub struct Trace<T> {
    pub factors: LUFactors<T>,
    pub z: Vec<T>,
}

/// Numeric solve, returning the intermediate vectors as well.
pub fn solve_traced<T: Scalar>(
    sys: &BackwardPentaSystem<T>,
) -> Result<(SolveReport<T>, Trace<T>), SolveError> {
    let reversed = sys.reverse_rows();
    let factors = factor(&reversed)?;
    Ok(finish(&reversed, factors))
}

fn finish<T: Scalar>(
    reversed: &PentaSystem<T>,
    factors: LUFactors<T>,
) -> (SolveReport<T>, Trace<T>) {
    let z = forward_sweep(&factors, reversed.y1());
    let x = back_substitute(&factors, &z);
    let report = SolveReport {
        x,
        det: factors.determinant(),
        mode: T::MODE,
        pivot_replacements: Vec::new(),
    };
    (report, Trace { factors, z })
}

/// Solves `A X = Y` in O(n). Fails with [`SolveError::ZeroPivot`] when a
/// pivot is exactly zero; no pivoting is attempted.
pub fn solve<T: Scalar>(sys: &BackwardPentaSystem<T>) -> Result<SolveReport<T>, SolveError> {
    solve_traced(sys).map(|(r, _)| r)
}

/// [`solve_traced`] that also treats `|β| < tol` as a zero pivot.
pub fn solve_with_tolerance<T>(
    sys: &BackwardPentaSystem<T>,
    tol: f64,
) -> Result<(SolveReport<T>, Trace<T>), SolveError>
where
    T: Scalar + ToPrimitive,
{
    let reversed = sys.reverse_rows();
    let factors = factor_with_tolerance(&reversed, tol)?;
    Ok(finish(&reversed, factors))
}

/// Everything the symbolic solve produces before `x = 0` is substituted.
#[derive(Debug, Clone, PartialEq)]
pub struct SymbolicSolution {
    pub factors: LUFactors<RationalFunction>,
    pub z: Vec<RationalFunction>,
    pub x: Vec<RationalFunction>,
    /// `∏ βᵢ` as a rational function of the placeholder.
    pub det: RationalFunction,
    pub pivot_replacements: Vec<usize>,
}

impl SymbolicSolution {
    /// Substitutes `x = 0` in the solution and determinant.
    pub fn substitute_zero(&self) -> Result<SolveReport<BigRational>, SolveError> {
        let x = self
            .x
            .iter()
            .enumerate()
            .map(|(k, v)| {
                v.eval_at_zero().map_err(|e| match e {
                    RationalFnError::PoleAtZero => SolveError::PoleAtZero {
                        what: format!("x[{}] = {v}", k + 1),
                    },
                    other => unreachable!("evaluation only fails on poles: {other}"),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        let det = self
            .det
            .eval_at_zero()
            .map_err(|_| SolveError::PoleAtZero {
                what: format!("det(A1) = {}", self.det),
            })?;
        if det.is_zero() {
            return Err(SolveError::Singular);
        }
        Ok(SolveReport {
            x,
            det,
            mode: Mode::Symbolic,
            pivot_replacements: self.pivot_replacements.clone(),
        })
    }
}

/// Runs the recurrences over rational functions in the placeholder `x`,
/// replacing every identically zero pivot (including the last) by `x`.
/// Never fails: after replacement every divisor is nonzero.
pub fn solve_symbolic_unevaluated(sys: &BackwardPentaSystem<BigRational>) -> SymbolicSolution {
    let lifted = sys.map(|q| RationalFunction::constant(q.clone()));
    let reversed = lifted.reverse_rows();
    let mut replaced = Vec::new();
    let factors = factor_with(&reversed, |i, b| {
        if b.is_zero() {
            replaced.push(i);
            Ok(RationalFunction::x())
        } else {
            Ok(b)
        }
    })
    .expect("symbolic pivot check never fails");
    let z = forward_sweep(&factors, reversed.y1());
    let x = back_substitute(&factors, &z);
    let det = factors.determinant();
    SymbolicSolution {
        factors,
        z,
        x,
        det,
        pivot_replacements: replaced,
    }
}

/// Symbolic solve: zero pivots become `x`, and `x = 0` is substituted in
/// the solution and `det(A₁)`.
///
/// Replacing a zero pivot by `x` perturbs one diagonal entry of `A₁` by
/// `x`, so the unevaluated solution is `A₁(x)⁻¹ Y₁`. Its denominators divide
/// `det A₁(x)`, which equals `det A₁` at `x = 0`; a pole at zero therefore
/// means `A₁` is singular.
pub fn solve_symbolic(
    sys: &BackwardPentaSystem<BigRational>,
) -> Result<SolveReport<BigRational>, SolveError> {
    solve_symbolic_unevaluated(sys).substitute_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;
    use crate::oracle::{dense_det, dense_solve};

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn ints(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| BigRational::from_i64(x)).collect()
    }

    #[test]
    fn example_factors() {
        let f = factor(&five_by_five().reverse_rows()).unwrap();
        assert_eq!(
            f.beta,
            vec![q(-1, 1), q(2, 1), q(-7, 1), q(24, 7), q(10, 3)]
        );
        assert_eq!(f.gamma, vec![q(-4, 1), q(2, 1), q(8, 7), q(-2, 3)]);
        assert_eq!(f.alpha, vec![q(1, 1), q(6, 1), q(-3, 1), q(20, 7)]);
        assert_eq!(f.determinant(), q(160, 1));
    }

    #[test]
    fn example_trace() {
        let (r, t) = solve_traced(&five_by_five()).unwrap();
        assert_eq!(t.z, vec![q(4, 1), q(30, 1), q(-28, 1), q(28, 1), q(50, 3)]);
        assert_eq!(r.x, ints(&[1, 2, 3, 4, 5]));
        assert_eq!(r.det, q(160, 1));
        assert_eq!(r.mode, Mode::Exact);
    }

    #[test]
    fn first_pivot_zero() {
        assert_eq!(
            solve(&five_by_five_zero_lead()),
            Err(SolveError::ZeroPivot(1))
        );
        assert_eq!(
            factor(&five_by_five_zero_lead().reverse_rows())
                .unwrap_err()
                .to_string(),
            "zero pivot beta[1]"
        );
    }

    #[test]
    fn last_pivot_zero_is_reported() {
        // Pivots of call 1 are all nonzero; shifting d₁ by β_n makes β_n = 0.
        let s = six_by_six();
        let f = factor(&s.reverse_rows()).unwrap();
        let d1 = s.d()[0].clone() - f.beta[5].clone();
        let t = s.with_entry(crate::banded::Band::D, 1, d1);
        assert_eq!(solve(&t), Err(SolveError::ZeroPivot(6)));
    }

    #[test]
    fn anti_diagonal_only() {
        let z = |k: usize| vec![BigRational::zero(); k];
        let d = ints(&[2, 3, 5, 7, 11]);
        let y = ints(&[4, 9, 25, 49, 121]);
        let s = BackwardPentaSystem::new(z(3), z(4), d, z(4), z(3), y).unwrap();
        let f = factor(&s.reverse_rows()).unwrap();
        assert_eq!(f.beta, ints(&[11, 7, 5, 3, 2]));
        assert!(f.alpha.iter().chain(&f.gamma).all(Zero::is_zero));
        // Row i reads d_i x_{n-i+1} = y_i.
        assert_eq!(solve(&s).unwrap().x, ints(&[11, 7, 5, 3, 2]));

        let ones = BackwardPentaSystem::new(
            z(3),
            z(4),
            ints(&[1; 5]),
            z(4),
            z(3),
            ints(&[1, 2, 3, 4, 5]),
        )
        .unwrap();
        let r = solve(&ones).unwrap();
        assert_eq!(r.x, ints(&[5, 4, 3, 2, 1]));
        assert_eq!(r.det_original(), q(1, 1));
    }

    #[test]
    fn six_by_six_solution() {
        let r = solve(&six_by_six()).unwrap();
        assert_eq!(r.x, ints(&[1; 6]));
        assert_eq!(r.det, q(-8597, 1));
        assert_eq!(r.det_original(), q(8597, 1));
        assert_eq!(dense_det(&six_by_six().densify()), q(8597, 1));
    }

    #[test]
    fn det_parity_example() {
        let f = factor(&five_by_five().reverse_rows()).unwrap();
        assert_eq!(f.det_original(), q(160, 1));
        assert_eq!(dense_det(&five_by_five().densify()), q(160, 1));
    }

    #[test]
    fn lu_reconstructs_example() {
        let s = five_by_five();
        let f = factor(&s.reverse_rows()).unwrap();
        assert_eq!(f.lower().mul(&f.upper()), s.reverse_rows().densify());
    }

    #[test]
    fn float_solve() {
        let s = five_by_five().map(f64::from_rational);
        let r = solve(&s).unwrap();
        for (got, want) in r.x.iter().zip([1.0, 2.0, 3.0, 4.0, 5.0]) {
            assert!((got - want).abs() < 1e-12);
        }
        assert_eq!(r.mode, Mode::Float);
    }

    #[test]
    fn tolerance_rejects_small_pivot() {
        let s = five_by_five().map(f64::from_rational);
        assert!(solve_with_tolerance(&s, 0.5).is_ok());
        // β₁ = -1 is the first pivot below 1.5.
        assert_eq!(
            solve_with_tolerance(&s, 1.5).unwrap_err(),
            SolveError::ZeroPivot(1)
        );
    }

    #[test]
    fn symbolic_example() {
        let sol = solve_symbolic_unevaluated(&five_by_five_zero_lead());
        assert_eq!(sol.pivot_replacements, vec![1]);
        let r = sol.substitute_zero().unwrap();
        assert_eq!(r.x, ints(&[1, 2, 3, 4, 5]));
        assert_eq!(r.det, q(88, 1));
        assert_eq!(r.mode, Mode::Symbolic);
    }

    #[test]
    fn symbolic_without_zero_pivots_matches_exact() {
        let exact = solve(&six_by_six()).unwrap();
        let sym = solve_symbolic_unevaluated(&six_by_six());
        assert!(sym.pivot_replacements.is_empty());
        assert!(sym.x.iter().all(|v| v.as_constant().is_some()));
        let r = sym.substitute_zero().unwrap();
        assert_eq!(r.x, exact.x);
        assert_eq!(r.det, exact.det);
    }

    #[test]
    fn symbolic_singular_system() {
        // Rows 1 and 2 of A are both (0, 0, 1, 2, 3).
        let s = BackwardPentaSystem::new(
            ints(&[1, 0, 1]),
            ints(&[2, 1, 1, 1]),
            ints(&[3, 2, 1, 1, 1]),
            ints(&[3, 1, 1, 1]),
            ints(&[1, 1, 1]),
            ints(&[1, 1, 1, 1, 1]),
        )
        .unwrap();
        assert!(dense_solve(&s.densify(), s.y()).is_err());
        let err = solve_symbolic(&s).unwrap_err();
        assert!(
            matches!(err, SolveError::PoleAtZero { .. } | SolveError::Singular),
            "{err:?}"
        );
    }
}
