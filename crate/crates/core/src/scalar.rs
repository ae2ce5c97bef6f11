//! Scalar types the bound formulas are generic over.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Num, Signed, ToPrimitive};

/// An ordered field element: exact rationals or floats.
pub trait Scalar: Num + Clone + PartialOrd + Debug + Display + Send + Sync + 'static {
    /// Whether arithmetic is exact; only exact scalars may decide bounds.
    const EXACT: bool;

    fn from_i64(x: i64) -> Self;

    /// Smallest integer not below `self`.
    fn ceil_i64(&self) -> i64;

    fn to_f64(&self) -> f64;

    fn from_usize(x: usize) -> Self {
        Self::from_i64(i64::try_from(x).expect("value fits in i64"))
    }

    fn ratio(num: i64, den: i64) -> Self {
        Self::from_i64(num) / Self::from_i64(den)
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_i64(x: i64) -> Self {
        x as f64
    }

    fn ceil_i64(&self) -> i64 {
        self.ceil() as i64
    }

    fn to_f64(&self) -> f64 {
        *self
    }
}

impl Scalar for f32 {
    const EXACT: bool = false;

    fn from_i64(x: i64) -> Self {
        x as f32
    }

    fn ceil_i64(&self) -> i64 {
        self.ceil() as i64
    }

    fn to_f64(&self) -> f64 {
        *self as f64
    }
}

macro_rules! exact_ratio {
    ($int:ty, $conv:expr) => {
        impl Scalar for Ratio<$int> {
            const EXACT: bool = true;

            fn from_i64(x: i64) -> Self {
                Ratio::from_integer($conv(x))
            }

            fn ceil_i64(&self) -> i64 {
                self.ceil()
                    .to_integer()
                    .to_i64()
                    .expect("ceiling fits in i64")
            }

            fn to_f64(&self) -> f64 {
                self.numer().to_f64().unwrap_or(f64::NAN)
                    / self.denom().to_f64().unwrap_or(f64::NAN)
            }
        }
    };
}

exact_ratio!(i64, |x| x);
exact_ratio!(i128, |x: i64| x as i128);
exact_ratio!(BigInt, BigInt::from);

/// `a/b` or `a` for integral values.
pub fn format_ratio<T: Clone + Integer + Display + Signed>(r: &Ratio<T>) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Rational, Rational64};

    #[test]
    fn ceilings() {
        assert_eq!(Rational::ratio(4, 3).ceil_i64(), 2);
        assert_eq!(Rational::ratio(6, 3).ceil_i64(), 2);
        assert_eq!(Rational64::ratio(-1, 2).ceil_i64(), 0);
        assert_eq!(1.5f64.ceil_i64(), 2);
    }

    #[test]
    fn formatting() {
        assert_eq!(format_ratio(&Rational::ratio(40, 3)), "40/3");
        assert_eq!(format_ratio(&Rational::ratio(12, 2)), "6");
        assert!((Scalar::to_f64(&Rational::ratio(1, 3)) - 1.0 / 3.0).abs() < 1e-15);
    }
}
