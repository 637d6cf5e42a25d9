//! Coefficient fields.
//!
//! Everything in this crate is generic over [`Scalar`]. The exact
//! instantiation used by the CLI and the test-suite is
//! [`Rational`](crate::Rational); `f64` and `Ratio<i64>` also satisfy the
//! bound, which is handy for quick experiments but gives up exactness.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_traits::{FromPrimitive, Num};

/// A field of coefficients for graded rings, functionals and matrices.
pub trait Scalar:
    Num + Neg<Output = Self> + PartialOrd + Clone + Debug + Display + FromPrimitive + Send + Sync + 'static
{
    /// Embeds an integer. Panics only if the type cannot represent it.
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("integer not representable in scalar type")
    }

    /// Parses `"p/q"` or `"p"`.
    fn parse_ratio(s: &str) -> Option<Self> {
        let s = s.trim();
        // Ratio types only accept "p/q" through from_str_radix.
        let int = |t: &str| Self::from_str_radix(t, 10).or_else(|_| Self::from_str_radix(&format!("{t}/1"), 10)).ok();
        match s.split_once('/') {
            Some((num, den)) => {
                let num = int(num.trim())?;
                let den = int(den.trim())?;
                if den.is_zero() {
                    None
                } else {
                    Some(num / den)
                }
            }
            None => int(s),
        }
    }
}

impl<T> Scalar for T where
    T: Num + Neg<Output = T> + PartialOrd + Clone + Debug + Display + FromPrimitive + Send + Sync + 'static
{
}

/// `binom(a, b)` with the convention that it vanishes for `b < 0` or `a < b`.
pub fn binomial(a: i64, b: i64) -> i64 {
    if b < 0 || a < b {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: i64 = 1;
    for i in 0..b {
        acc = acc * (a - i) / (i + 1);
    }
    acc
}
