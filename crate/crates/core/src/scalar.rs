//! The scalar-field contract shared by the float, exact and symbolic solvers.
//!
//! The exact instantiations ([`BigRational`] and
//! [`RationalFunction`](crate::rational_fn::RationalFunction)) satisfy the
//! field axioms. `f32` and `f64` satisfy them only approximately, the usual
//! floating point caveats apply.

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid numeric literal `{0}`")]
pub struct LiteralError(pub String);

/// Which arithmetic a solve ran in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Float,
    Exact,
    Symbolic,
}

impl Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Mode::Float => "float",
            Mode::Exact => "exact",
            Mode::Symbolic => "symbolic",
        })
    }
}

/// A field the banded recurrences can be written over once.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// Arithmetic mode reported by solves over this scalar.
    const MODE: Mode;

    fn from_rational(q: &BigRational) -> Self;

    fn from_i64(v: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(BigInt::from(v)))
    }

    /// Parses an integer, an exact decimal or a `p/q` rational.
    fn from_literal(text: &str) -> Result<Self, LiteralError> {
        parse_rational(text).map(|q| Self::from_rational(&q))
    }
}

impl Scalar for f64 {
    const MODE: Mode = Mode::Float;

    fn from_rational(q: &BigRational) -> Self {
        q.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f32 {
    const MODE: Mode = Mode::Float;

    fn from_rational(q: &BigRational) -> Self {
        q.to_f32().unwrap_or(f32::NAN)
    }
}

impl Scalar for BigRational {
    const MODE: Mode = Mode::Exact;

    fn from_rational(q: &BigRational) -> Self {
        q.clone()
    }
}

/// Parses the literal syntax of system files: optional sign followed by an
/// integer (`12`), an exact decimal (`-0.125`, `.5`, `3.`) or a rational
/// (`7/3`, `-24/7`). Decimals are converted exactly.
pub fn parse_rational(text: &str) -> Result<BigRational, LiteralError> {
    let err = || LiteralError(text.to_string());
    let (negative, body) = match text.as_bytes().first() {
        Some(b'-') => (true, &text[1..]),
        Some(b'+') => (false, &text[1..]),
        _ => (false, text),
    };
    let all_digits = |s: &str| !s.is_empty() && s.bytes().all(|c| c.is_ascii_digit());

    let value = if let Some((p, q)) = body.split_once('/') {
        if !all_digits(p) || !all_digits(q) {
            return Err(err());
        }
        let den: BigInt = q.parse().map_err(|_| err())?;
        if den.is_zero() {
            return Err(err());
        }
        BigRational::new(p.parse().map_err(|_| err())?, den)
    } else if let Some((int, frac)) = body.split_once('.') {
        if (int.is_empty() && frac.is_empty())
            || !(int.is_empty() || all_digits(int))
            || !(frac.is_empty() || all_digits(frac))
        {
            return Err(err());
        }
        let digits = format!("{int}{frac}");
        let num: BigInt = digits.parse().map_err(|_| err())?;
        let den = num_traits::pow(BigInt::from(10u32), frac.len());
        BigRational::new(num, den)
    } else {
        if !all_digits(body) {
            return Err(err());
        }
        BigRational::from_integer(body.parse().map_err(|_| err())?)
    };
    Ok(if negative { -value } else { value })
}

pub mod counting {
    //! An `f64` wrapper that counts every arithmetic operation performed on
    //! it. The counter is thread local so parallel tests do not interfere.

    use super::*;
    use std::cell::Cell;

    thread_local! {
        static OPS: Cell<u64> = const { Cell::new(0) };
    }

    fn bump() {
        OPS.with(|c| c.set(c.get() + 1));
    }

    /// Number of operations counted on this thread since the last reset.
    pub fn op_count() -> u64 {
        OPS.with(|c| c.get())
    }

    pub fn reset_op_count() {
        OPS.with(|c| c.set(0));
    }

    #[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
    pub struct Counted(pub f64);

    macro_rules! counted_binop {
        ($tr:ident, $method:ident, $op:tt) => {
            impl $tr for Counted {
                type Output = Counted;
                fn $method(self, rhs: Counted) -> Counted {
                    bump();
                    Counted(self.0 $op rhs.0)
                }
            }
        };
    }

    counted_binop!(Add, add, +);
    counted_binop!(Sub, sub, -);
    counted_binop!(Mul, mul, *);
    counted_binop!(Div, div, /);

    impl Neg for Counted {
        type Output = Counted;
        fn neg(self) -> Counted {
            bump();
            Counted(-self.0)
        }
    }

    impl Zero for Counted {
        fn zero() -> Self {
            Counted(0.0)
        }
        // Pivot tests count as operations too.
        fn is_zero(&self) -> bool {
            bump();
            self.0 == 0.0
        }
    }

    impl One for Counted {
        fn one() -> Self {
            Counted(1.0)
        }
    }

    impl ToPrimitive for Counted {
        fn to_i64(&self) -> Option<i64> {
            self.0.to_i64()
        }
        fn to_u64(&self) -> Option<u64> {
            self.0.to_u64()
        }
        fn to_f64(&self) -> Option<f64> {
            Some(self.0)
        }
    }

    impl Scalar for Counted {
        const MODE: Mode = Mode::Float;

        fn from_rational(q: &BigRational) -> Self {
            Counted(f64::from_rational(q))
        }
    }
}
