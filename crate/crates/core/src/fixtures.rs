//! The worked systems used throughout the tests and documentation.
//!
//! `five_by_five` and `five_by_five_zero_lead` are the two 5×5 systems with solution
//! `(1, 2, 3, 4, 5)`; the second has `d₅ = 0`, so the first pivot vanishes.
//! `six_by_six` and `six_by_six_zero_lead` are 6×6 systems with solution
//! all ones; the second has `d₆ = 0`.

use num_rational::BigRational;

use crate::banded::BackwardPentaSystem;
use crate::scalar::Scalar;

fn ints(v: &[i64]) -> Vec<BigRational> {
    v.iter().map(|&x| BigRational::from_i64(x)).collect()
}

fn system(
    at: &[i64],
    a: &[i64],
    d: &[i64],
    b: &[i64],
    bt: &[i64],
    y: &[i64],
) -> BackwardPentaSystem<BigRational> {
    BackwardPentaSystem::new(ints(at), ints(a), ints(d), ints(b), ints(bt), ints(y))
        .expect("fixture is well formed")
}

pub fn five_by_five() -> BackwardPentaSystem<BigRational> {
    system(
        &[3, 2, 3],
        &[-1, -2, 1, 4],
        &[1, 2, 2, -2, -1],
        &[4, 1, 2, 1],
        &[1, 2, 1],
        &[10, 26, 20, 14, 4],
    )
}

pub fn five_by_five_zero_lead() -> BackwardPentaSystem<BigRational> {
    system(
        &[3, 2, 3],
        &[-1, -2, 1, 4],
        &[1, 2, 2, -2, 0],
        &[4, 1, 2, 1],
        &[1, 2, 1],
        &[10, 26, 20, 14, 5],
    )
}

pub fn six_by_six() -> BackwardPentaSystem<BigRational> {
    system(
        &[3, -1, 7, -2],
        &[2, 5, 2, 3, -5],
        &[1, 3, 3, 5, 6, 14],
        &[2, 1, 2, 2, 1],
        &[-5, -7, 3, -10],
        &[6, 9, 8, 1, 6, 5],
    )
}

pub fn six_by_six_zero_lead() -> BackwardPentaSystem<BigRational> {
    system(
        &[3, -1, 7, -2],
        &[2, 5, 2, 3, -5],
        &[1, 3, 3, 5, 6, 0],
        &[2, 1, 2, 2, 1],
        &[-5, -7, 3, -10],
        &[6, 9, 8, 1, 6, -9],
    )
}
