//! Number backends for the geometry kernel.
//!
//! Two implementations of [`Scalar`] exist: [`Exact`] (arbitrary-precision
//! rationals, every predicate decided with zero tolerance) and [`Float`]
//! (binary64 carrying a relative comparison tolerance). Kernel code is generic
//! over the trait, so mixing the two in one expression does not type-check:
//!
//! ```compile_fail
//! use planimetry::geom::{Exact, Float, Scalar};
//! let _ = Exact::from_int(1) + Float::new(1.0, 1e-9);
//! ```

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    Exact,
    Float,
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Backend::Exact => f.write_str("exact"),
            Backend::Float => f.write_str("float"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

/// Field arithmetic plus the tolerance-aware sign test every predicate
/// reduces to.
///
/// `scale` arguments are the magnitude of the quantity being tested (for
/// example `extent²` for a squared length). The float backend treats values
/// with `|x| <= eps * scale` as zero; the exact backend ignores `scale`.
pub trait Scalar:
    Clone
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    const BACKEND: Backend;

    fn from_ratio(num: i64, den: i64) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_ratio(n, 1)
    }

    fn zero() -> Self {
        Self::from_int(0)
    }

    fn one() -> Self {
        Self::from_int(1)
    }

    fn to_f64(&self) -> f64;

    fn sign_within(&self, scale: f64) -> Sign;

    /// Square root, or `None` when the root is negative or not representable
    /// in this backend.
    fn sqrt(&self) -> Option<Self>;

    /// Comparison tolerance carried by this value (0 for exact values).
    fn tolerance(&self) -> f64;

    /// `x` in this backend, with the tolerance of `self`. Exact values take
    /// the binary value of `x`; panics on non-finite input.
    fn lift(&self, x: f64) -> Self;

    /// Encodes `dot / sqrt(norm_sq)` as a value that is strictly monotone in
    /// the cosine and odd under negation. Float stores the cosine itself;
    /// exact stores `cos * |cos|`, which needs no square root.
    fn encode_cos(dot: Self, norm_sq: Self) -> Self;

    /// Encodes a cosine that is already known.
    fn encode_known_cos(cos: Self) -> Self;

    /// Inverse of the encodings above, as a float.
    fn decode_cos(&self) -> f64;

    fn is_zero_within(&self, scale: f64) -> bool {
        self.sign_within(scale) == Sign::Zero
    }

    /// For a squared length: whether the length itself is within
    /// `eps * scale` of zero.
    fn is_zero_length_sq(&self, scale: f64) -> bool {
        self.is_zero_within(self.tolerance() * scale * scale)
    }

    fn eq_within(&self, other: &Self, scale: f64) -> bool {
        (self.clone() - other.clone()).is_zero_within(scale)
    }

    /// `self < other`, with near-equal values counting as equal.
    fn lt_within(&self, other: &Self, scale: f64) -> bool {
        (other.clone() - self.clone()).sign_within(scale) == Sign::Positive
    }

    fn abs(&self) -> Self {
        if self.to_f64() < 0.0 {
            -self.clone()
        } else {
            self.clone()
        }
    }
}

/// Exact rational in lowest terms with a positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exact(BigRational);

impl Exact {
    pub fn new(value: BigRational) -> Self {
        // BigRational normalizes on construction.
        Exact(value)
    }

    /// Exact binary value of `x`; `None` for NaN or infinities.
    pub fn from_f64(x: f64) -> Option<Self> {
        BigRational::from_f64(x).map(Exact)
    }

    /// Parses `"p/q"`, an integer, or a plain decimal such as `"1.25"`.
    pub fn parse(text: &str) -> Option<Self> {
        let text = text.trim();
        if let Some((n, d)) = text.split_once('/') {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            return Some(Exact(BigRational::new(n, d)));
        }
        let (negative, body) = match text.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, text.strip_prefix('+').unwrap_or(text)),
        };
        let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
        if int_part.is_empty() && frac_part.is_empty() {
            return None;
        }
        if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
            return None;
        }
        let digits = format!("{int_part}{frac_part}");
        let numer: BigInt = digits.parse().ok()?;
        let denom = num_traits::pow(BigInt::from(10), frac_part.len());
        let value = BigRational::new(numer, denom);
        Some(Exact(if negative { -value } else { value }))
    }

    pub fn as_ratio(&self) -> &BigRational {
        &self.0
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }
}

impl fmt::Display for Exact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

macro_rules! forward_binop {
    ($ty:ident, $tr:ident, $method:ident) => {
        impl $tr for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                $ty($tr::$method(self.0, rhs.0))
            }
        }
    };
}

forward_binop!(Exact, Add, add);
forward_binop!(Exact, Sub, sub);
forward_binop!(Exact, Mul, mul);
forward_binop!(Exact, Div, div);

impl Neg for Exact {
    type Output = Exact;
    fn neg(self) -> Exact {
        Exact(-self.0)
    }
}

fn exact_int_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

impl Scalar for Exact {
    const BACKEND: Backend = Backend::Exact;

    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Exact(BigRational::new(num.into(), den.into()))
    }

    fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    fn sign_within(&self, _scale: f64) -> Sign {
        if self.0.is_zero() {
            Sign::Zero
        } else if self.0.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    fn sqrt(&self) -> Option<Self> {
        let n = exact_int_sqrt(self.0.numer())?;
        let d = exact_int_sqrt(self.0.denom())?;
        Some(Exact(BigRational::new(n, d)))
    }

    fn lift(&self, x: f64) -> Self {
        Exact::from_f64(x).expect("finite value")
    }

    fn tolerance(&self) -> f64 {
        0.0
    }

    fn encode_cos(dot: Self, norm_sq: Self) -> Self {
        let sq = dot.0.clone() * dot.0.clone() / norm_sq.0;
        if dot.0.is_negative() {
            Exact(-sq)
        } else {
            Exact(sq)
        }
    }

    fn encode_known_cos(cos: Self) -> Self {
        let magnitude = cos.0.abs();
        Exact(cos.0 * magnitude)
    }

    fn decode_cos(&self) -> f64 {
        let magnitude = self.0.abs().to_f64().unwrap_or(f64::NAN).sqrt();
        if self.0.is_negative() {
            -magnitude
        } else {
            magnitude
        }
    }

    fn abs(&self) -> Self {
        Exact(self.0.abs())
    }
}

impl Zero for Exact {
    fn zero() -> Self {
        Exact(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for Exact {
    fn one() -> Self {
        Exact(BigRational::one())
    }
}

/// Binary64 value with a relative comparison tolerance.
///
/// Arithmetic keeps the larger tolerance of its operands; constants built
/// with [`Scalar::from_ratio`] carry tolerance 0 so they never loosen a
/// comparison.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Float {
    pub value: f64,
    pub eps: f64,
}

impl Float {
    pub const DEFAULT_EPS: f64 = 1e-9;

    pub fn new(value: f64, eps: f64) -> Self {
        assert!(eps >= 0.0, "tolerance must be non-negative");
        Float { value, eps }
    }

    pub fn with_default_eps(value: f64) -> Self {
        Float::new(value, Self::DEFAULT_EPS)
    }
}

impl fmt::Display for Float {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

macro_rules! float_binop {
    ($tr:ident, $method:ident, $op:tt) => {
        impl $tr for Float {
            type Output = Float;
            #[inline]
            fn $method(self, rhs: Float) -> Float {
                Float {
                    value: self.value $op rhs.value,
                    eps: self.eps.max(rhs.eps),
                }
            }
        }
    };
}

float_binop!(Add, add, +);
float_binop!(Sub, sub, -);
float_binop!(Mul, mul, *);
float_binop!(Div, div, /);

impl Neg for Float {
    type Output = Float;
    #[inline]
    fn neg(self) -> Float {
        Float {
            value: -self.value,
            eps: self.eps,
        }
    }
}

impl Scalar for Float {
    const BACKEND: Backend = Backend::Float;

    fn from_ratio(num: i64, den: i64) -> Self {
        Float::new(num as f64 / den as f64, 0.0)
    }

    fn to_f64(&self) -> f64 {
        self.value
    }

    #[inline]
    fn sign_within(&self, scale: f64) -> Sign {
        if self.value.abs() <= self.eps * scale {
            Sign::Zero
        } else if self.value > 0.0 {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    fn sqrt(&self) -> Option<Self> {
        if self.value < 0.0 {
            // Tiny negatives are rounding noise around zero.
            return (self.value.abs() <= self.eps).then_some(Float::new(0.0, self.eps));
        }
        Some(Float::new(self.value.sqrt(), self.eps))
    }

    fn lift(&self, x: f64) -> Self {
        Float::new(x, self.eps)
    }

    fn tolerance(&self) -> f64 {
        self.eps
    }

    fn encode_cos(dot: Self, norm_sq: Self) -> Self {
        let cos = (dot.value / norm_sq.value.sqrt()).clamp(-1.0, 1.0);
        Float::new(cos, dot.eps.max(norm_sq.eps))
    }

    fn encode_known_cos(cos: Self) -> Self {
        cos
    }

    fn decode_cos(&self) -> f64 {
        self.value
    }

    fn abs(&self) -> Self {
        Float::new(self.value.abs(), self.eps)
    }
}
