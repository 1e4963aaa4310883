//! Exact univariate polynomials and rational functions over the rationals.
//!
//! These carry the placeholder symbol `x` that the symbolic solver puts in
//! place of a zero pivot. Every [`RationalFunction`] is kept canonical:
//! numerator and denominator are coprime and the denominator is monic, so
//! equality is structural.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::scalar::{Mode, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RationalFnError {
    #[error("division by the zero rational function")]
    DivisionByZero,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("pole at x = 0")]
    PoleAtZero,
}

/// Dense polynomial in `x` with rational coefficients, lowest degree first.
/// The zero polynomial has no coefficients; otherwise the last one is nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigRational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// Convenience constructor from integer coefficients, lowest degree first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::new(vec![BigRational::zero(), BigRational::one()])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Coefficient of `x^0`.
    pub fn constant_term(&self) -> BigRational {
        self.coeffs
            .first()
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, at: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * at + c)
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Divides by the leading coefficient. The zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) => self.scale(&lc.recip()),
            None => Self::zero(),
        }
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), RationalFnError> {
        let dd = divisor.degree().ok_or(RationalFnError::DivisionByZero)?;
        let lc_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let shift = rem.len() - 1 - dd;
            let factor = rem.last().unwrap() * &lc_inv;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= &factor * c;
            }
            quot[shift] = factor;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Scales to a primitive integer polynomial with positive leading
    /// coefficient, returning the scale factor used.
    fn to_primitive_ints(&self) -> (Vec<BigInt>, BigRational) {
        let Some(lc) = self.leading() else {
            return (Vec::new(), BigRational::one());
        };
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let scaled: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        let content = scaled.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let content = if lc.is_negative() { -content } else { content };
        let ints = scaled.into_iter().map(|c| c / &content).collect();
        (ints, BigRational::new(lcm, content))
    }
}

/// Monic gcd by the Euclidean algorithm.
pub fn poly_gcd(p: &Polynomial, q: &Polynomial) -> Result<Polynomial, RationalFnError> {
    if p.is_zero() && q.is_zero() {
        return Err(RationalFnError::BothZero);
    }
    let (mut a, mut b) = (p.clone(), q.clone());
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b)?;
        // Keeping the remainder monic stops coefficient blow-up.
        a = b;
        b = r.monic();
    }
    Ok(a.monic())
}

impl Zero for Polynomial {
    fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for Polynomial {
    fn one() -> Self {
        Self::constant(BigRational::one())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = long.coeffs.clone();
        for (o, c) in out.iter_mut().zip(&short.coeffs) {
            *o += c;
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

macro_rules! forward_owned {
    ($ty:ty, $tr:ident, $method:ident) => {
        impl $tr for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Polynomial, Add, add);
forward_owned!(Polynomial, Sub, sub);
forward_owned!(Polynomial, Mul, mul);

impl fmt::Display for Polynomial {
    /// Integer-coefficient polynomials print as `9x-11`, `x^2+1`, `-x`.
    /// Fractional coefficients print as `7/3x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.abs();
            let mag = if deg > 0 && mag.is_one() {
                String::new()
            } else {
                mag.to_string()
            };
            let var = match deg {
                0 => String::new(),
                1 => "x".to_string(),
                d => format!("x^{d}"),
            };
            write!(f, "{sign}{mag}{var}")?;
            first = false;
        }
        Ok(())
    }
}

/// Canonical quotient `num / den` of polynomials in the placeholder `x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    /// Builds and canonicalizes `num / den`.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, RationalFnError> {
        if den.is_zero() {
            return Err(RationalFnError::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = poly_gcd(&num, &den).expect("denominator is nonzero");
        let (num, _) = num.div_rem(&g).expect("gcd is nonzero");
        let (den, _) = den.div_rem(&g).expect("gcd is nonzero");
        let lc_inv = den.leading().expect("denominator is nonzero").recip();
        RationalFunction {
            num: num.scale(&lc_inv),
            den: den.scale(&lc_inv),
        }
    }

    pub fn constant(c: BigRational) -> Self {
        RationalFunction {
            num: Polynomial::constant(c),
            den: Polynomial::one(),
        }
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    /// The placeholder symbol `x`.
    pub fn x() -> Self {
        Self::from_polynomial(Polynomial::x())
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    /// `Some(c)` when the function does not depend on `x`.
    pub fn as_constant(&self) -> Option<BigRational> {
        (self.num.is_constant() && self.den.is_constant())
            .then(|| self.num.constant_term() / self.den.constant_term())
    }

    pub fn eval(&self, at: &BigRational) -> Result<BigRational, RationalFnError> {
        let d = self.den.eval(at);
        if d.is_zero() {
            return Err(RationalFnError::PoleAtZero);
        }
        Ok(self.num.eval(at) / d)
    }

    /// Substitutes `x = 0`.
    pub fn eval_at_zero(&self) -> Result<BigRational, RationalFnError> {
        let d = self.den.constant_term();
        if d.is_zero() {
            return Err(RationalFnError::PoleAtZero);
        }
        Ok(self.num.constant_term() / d)
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, RationalFnError> {
        if rhs.is_zero() {
            return Err(RationalFnError::DivisionByZero);
        }
        Ok(Self::canonical(&self.num * &rhs.den, &self.den * &rhs.num))
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        RationalFunction {
            num: Polynomial::zero(),
            den: Polynomial::one(),
        }
    }
    /// Identically zero, not merely zero at `x = 0`.
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        Self::from_polynomial(Polynomial::one())
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::canonical(&self.num + &rhs.num, self.den.clone());
        }
        RationalFunction::canonical(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::canonical(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RationalFunction {
    type Output = RationalFunction;
    /// Panics on an identically zero divisor; see [`RationalFunction::checked_div`].
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self.checked_div(rhs)
            .expect("division by the zero rational function")
    }
}

forward_owned!(RationalFunction, Add, add);
forward_owned!(RationalFunction, Sub, sub);
forward_owned!(RationalFunction, Mul, mul);
forward_owned!(RationalFunction, Div, div);

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl Scalar for RationalFunction {
    const MODE: Mode = Mode::Symbolic;

    fn from_rational(q: &BigRational) -> Self {
        Self::constant(q.clone())
    }
}

impl fmt::Display for RationalFunction {
    /// Clears rational coefficients so that numerator and denominator are
    /// coprime integer polynomials, e.g. `-11/(9x-11)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(c) = self.as_constant() {
            return write!(f, "{c}");
        }
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let (den_ints, den_scale) = self.den.to_primitive_ints();
        let num = self.num.scale(&den_scale);
        let (num_ints, num_scale) = num.to_primitive_ints();
        // num = num_ints / num_scale; fold the rational leftover into both sides.
        let leftover = num_scale.recip();
        let (n_mul, d_mul) = (leftover.numer().clone(), leftover.denom().clone());
        let wrap = |coeffs: Vec<BigInt>, k: &BigInt| {
            Polynomial::new(
                coeffs
                    .into_iter()
                    .map(|c| BigRational::from_integer(c * k))
                    .collect(),
            )
        };
        let num_p = wrap(num_ints, &n_mul);
        let den_p = wrap(den_ints, &d_mul);
        let single_term = |p: &Polynomial| p.coeffs().iter().filter(|c| !c.is_zero()).count() <= 1;
        let num_s = num_p.to_string();
        let num_s = if single_term(&num_p) {
            num_s
        } else {
            format!("({num_s})")
        };
        write!(f, "{num_s}/({den_p})")
    }
}
