//! Exact scalars: rationals and Gaussian rationals with a field tag.
//!
//! A scalar is `re + im·i` with arbitrary-precision rational parts. The tag
//! decides the conjugation semantics: over `Q` and `QiBilinear` conjugation
//! is the identity on the represented field element (for `Q` the imaginary
//! part is zero by construction), over `QiHermitian` it negates `im`.
//! All arithmetic is exact; there is no floating point anywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Which base field a scalar (or matrix) lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum FieldTag {
    /// Rational numbers.
    Q,
    /// Gaussian rationals with conjugation negating the imaginary part.
    QiHermitian,
    /// Gaussian rationals with trivial conjugation (plain bilinear pairing).
    QiBilinear,
}

impl FieldTag {
    /// True when scalars of this field may carry a nonzero imaginary part.
    pub fn is_gaussian(self) -> bool {
        !matches!(self, FieldTag::Q)
    }
}

/// An exact field element, kept in canonical reduced form by `BigRational`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExactScalar {
    re: BigRational,
    im: BigRational,
    field: FieldTag,
}

impl ExactScalar {
    pub fn new(re: BigRational, im: BigRational, field: FieldTag) -> Self {
        debug_assert!(field.is_gaussian() || im.is_zero(), "imaginary part over Q");
        ExactScalar { re, im, field }
    }

    pub fn rational(re: BigRational, field: FieldTag) -> Self {
        ExactScalar { re, im: BigRational::zero(), field }
    }

    pub fn zero(field: FieldTag) -> Self {
        Self::rational(BigRational::zero(), field)
    }

    pub fn one(field: FieldTag) -> Self {
        Self::rational(BigRational::one(), field)
    }

    /// The imaginary unit; only meaningful over the Gaussian fields.
    pub fn i(field: FieldTag) -> Self {
        debug_assert!(field.is_gaussian());
        ExactScalar { re: BigRational::zero(), im: BigRational::one(), field }
    }

    pub fn from_int(n: i64, field: FieldTag) -> Self {
        Self::rational(BigRational::from_integer(BigInt::from(n)), field)
    }

    pub fn from_ratio(num: i64, den: i64, field: FieldTag) -> Self {
        assert!(den != 0, "zero denominator");
        Self::rational(BigRational::new(BigInt::from(num), BigInt::from(den)), field)
    }

    pub fn field(&self) -> FieldTag {
        self.field
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    /// True when the imaginary part vanishes.
    pub fn is_rational(&self) -> bool {
        self.im.is_zero()
    }

    /// Field conjugation. A ring automorphism; the identity unless the tag
    /// is `QiHermitian`.
    pub fn conj(&self) -> Self {
        match self.field {
            FieldTag::QiHermitian => {
                ExactScalar { re: self.re.clone(), im: -self.im.clone(), field: self.field }
            }
            _ => self.clone(),
        }
    }

    /// `re² + im²`, the complex-absolute-value squared (independent of tag).
    pub fn norm_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "division by zero");
        if self.im.is_zero() {
            return Self::rational(self.re.recip(), self.field);
        }
        let n = self.norm_sq();
        ExactScalar { re: &self.re / &n, im: -&self.im / &n, field: self.field }
    }

    /// Sign of the real part (`-1`, `0`, `1`); panics on non-rational input.
    pub fn rational_sign(&self) -> i32 {
        assert!(self.im.is_zero(), "sign of a non-rational scalar");
        if self.re.is_zero() {
            0
        } else if self.re.is_positive() {
            1
        } else {
            -1
        }
    }

    fn assert_same_field(&self, other: &Self) {
        debug_assert_eq!(self.field, other.field, "mixed-field arithmetic");
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}i", self.im)
        } else if self.im.is_positive() {
            write!(f, "{}+{}i", self.re, self.im)
        } else {
            write!(f, "{}{}i", self.re, self.im)
        }
    }
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident, |$a:ident, $b:ident| $body:expr) => {
        impl<'a, 'b> $trait<&'b ExactScalar> for &'a ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &'b ExactScalar) -> ExactScalar {
                let $a = self;
                let $b = rhs;
                $a.assert_same_field($b);
                $body
            }
        }
        impl $trait<ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                (&self).$method(&rhs)
            }
        }
        impl<'b> $trait<&'b ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &'b ExactScalar) -> ExactScalar {
                (&self).$method(rhs)
            }
        }
    };
}

impl_binop!(Add, add, |a, b| ExactScalar {
    re: &a.re + &b.re,
    im: &a.im + &b.im,
    field: a.field,
});

impl_binop!(Sub, sub, |a, b| ExactScalar {
    re: &a.re - &b.re,
    im: &a.im - &b.im,
    field: a.field,
});

impl_binop!(Mul, mul, |a, b| {
    if a.im.is_zero() && b.im.is_zero() {
        ExactScalar::rational(&a.re * &b.re, a.field)
    } else {
        ExactScalar {
            re: &a.re * &b.re - &a.im * &b.im,
            im: &a.re * &b.im + &a.im * &b.re,
            field: a.field,
        }
    }
});

impl_binop!(Div, div, |a, b| a * &b.inv());

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar { re: -self.re.clone(), im: -self.im.clone(), field: self.field }
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> ExactScalar {
        ExactScalar::from_ratio(n, d, FieldTag::Q)
    }

    fn gh(re: (i64, i64), im: (i64, i64)) -> ExactScalar {
        ExactScalar::new(
            BigRational::new(BigInt::from(re.0), BigInt::from(re.1)),
            BigRational::new(BigInt::from(im.0), BigInt::from(im.1)),
            FieldTag::QiHermitian,
        )
    }

    #[test]
    fn canonical_form_reduces() {
        assert_eq!(q(2, 4), q(1, 2));
        assert_eq!(q(1, -2), q(-1, 2));
    }

    #[test]
    fn conj_is_involutive_homomorphism() {
        let a = gh((1, 2), (3, 5));
        let b = gh((-2, 7), (1, 3));
        assert_eq!(a.conj().conj(), a);
        assert_eq!((&a + &b).conj(), a.conj() + b.conj());
        assert_eq!((&a * &b).conj(), a.conj() * b.conj());
    }

    #[test]
    fn conj_trivial_over_q_and_bilinear() {
        let a = q(3, 7);
        assert_eq!(a.conj(), a);
        let z = ExactScalar::new(
            BigRational::from_integer(BigInt::from(2)),
            BigRational::from_integer(BigInt::from(5)),
            FieldTag::QiBilinear,
        );
        assert_eq!(z.conj(), z);
    }

    #[test]
    fn gaussian_inverse() {
        let z = gh((1, 1), (2, 1));
        let w = z.inv();
        assert!((z * w).is_one());
    }

    #[test]
    fn i_squares_to_minus_one() {
        let i = ExactScalar::i(FieldTag::QiBilinear);
        assert_eq!(&i * &i, ExactScalar::from_int(-1, FieldTag::QiBilinear));
    }
}
