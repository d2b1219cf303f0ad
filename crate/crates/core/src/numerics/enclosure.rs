use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

use super::rational::{ceil, decimal_directed, floor, Rational};
use super::Precision;

/// Extra binary places kept when endpoints are rounded outward.
const ROUNDING_GUARD_BITS: u64 = 32;

/// Denominators longer than this multiple of the target bit length trigger
/// outward rounding in [`Enclosure::compact`].
const DENOMINATOR_THRESHOLD_FACTOR: u64 = 16;

/// A closed interval `[lo, hi]` with exact rational endpoints that contains
/// some real value.
///
/// All arithmetic is outward-conservative: the exact result of the underlying
/// real operation on any members of the operands lies in the output.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Enclosure {
    lo: Rational,
    hi: Rational,
}

impl Enclosure {
    /// Panics if `lo > hi`.
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "enclosure endpoints out of order");
        Enclosure { lo, hi }
    }

    /// The interval spanned by two values in either order.
    pub fn spanning(a: Rational, b: Rational) -> Self {
        if a <= b {
            Enclosure { lo: a, hi: b }
        } else {
            Enclosure { lo: b, hi: a }
        }
    }

    pub fn point(value: Rational) -> Self {
        Enclosure {
            lo: value.clone(),
            hi: value,
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::point(Rational::from_integer(BigInt::from(n)))
    }

    /// `center ± radius`.
    pub fn ball(center: &Rational, radius: &Rational) -> Self {
        let r = radius.abs();
        Enclosure {
            lo: center - &r,
            hi: center + &r,
        }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    /// `other ⊆ self`.
    pub fn contains_enclosure(&self, other: &Enclosure) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// Every member is strictly positive.
    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    /// Every member is strictly negative.
    pub fn is_negative(&self) -> bool {
        self.hi.is_negative()
    }

    pub fn intersects(&self, other: &Enclosure) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn intersection(&self, other: &Enclosure) -> Option<Enclosure> {
        let lo = if self.lo >= other.lo { &self.lo } else { &other.lo };
        let hi = if self.hi <= other.hi { &self.hi } else { &other.hi };
        (lo <= hi).then(|| Enclosure {
            lo: lo.clone(),
            hi: hi.clone(),
        })
    }

    pub fn hull(&self, other: &Enclosure) -> Enclosure {
        let lo = if self.lo <= other.lo { &self.lo } else { &other.lo };
        let hi = if self.hi >= other.hi { &self.hi } else { &other.hi };
        Enclosure {
            lo: lo.clone(),
            hi: hi.clone(),
        }
    }

    pub fn abs(&self) -> Enclosure {
        if !self.lo.is_negative() {
            self.clone()
        } else if !self.hi.is_positive() {
            -self
        } else {
            let m = if -&self.lo > self.hi {
                -&self.lo
            } else {
                self.hi.clone()
            };
            Enclosure {
                lo: Rational::zero(),
                hi: m,
            }
        }
    }

    /// `x²` for `x` in the interval; tighter than `self * self` when the
    /// interval straddles zero.
    pub fn square(&self) -> Enclosure {
        let a = self.abs();
        Enclosure {
            lo: &a.lo * &a.lo,
            hi: &a.hi * &a.hi,
        }
    }

    pub fn scale(&self, k: &Rational) -> Enclosure {
        Enclosure::spanning(&self.lo * k, &self.hi * k)
    }

    pub fn shift(&self, k: &Rational) -> Enclosure {
        Enclosure {
            lo: &self.lo + k,
            hi: &self.hi + k,
        }
    }

    pub fn recip(&self) -> Result<Enclosure> {
        if self.contains_zero() {
            return Err(Error::domain("division by an enclosure containing 0"));
        }
        Ok(Enclosure {
            lo: self.hi.recip(),
            hi: self.lo.recip(),
        })
    }

    pub fn checked_div(&self, rhs: &Enclosure) -> Result<Enclosure> {
        Ok(self * &rhs.recip()?)
    }

    /// Clamp to `[lo, hi]`, for functions with a known range such as `sin`.
    pub fn clamp_to(&self, lo: &Rational, hi: &Rational) -> Enclosure {
        let l = if &self.lo < lo { lo.clone() } else { self.lo.clone() };
        let h = if &self.hi > hi { hi.clone() } else { self.hi.clone() };
        if l <= h {
            Enclosure { lo: l, hi: h }
        } else {
            // Only reachable if the enclosure was already outside the range.
            self.clone()
        }
    }

    /// Rounds both endpoints outward to multiples of `2^-bits`.
    pub fn round_outward(&self, bits: u64) -> Enclosure {
        let scale = Rational::from_integer(BigInt::one() << bits);
        let lo = Rational::new(floor(&(&self.lo * &scale)), scale.to_integer());
        let hi = Rational::new(ceil(&(&self.hi * &scale)), scale.to_integer());
        Enclosure { lo, hi }
    }

    /// Bounds denominator growth: if either endpoint's denominator exceeds
    /// 16× the bit length of `prec`, rounds outward to `2^-(bits + 32)`.
    /// The added width is far below `10^-D`.
    pub fn compact(self, prec: Precision) -> Enclosure {
        let threshold = DENOMINATOR_THRESHOLD_FACTOR * prec.bits().max(64);
        if self.lo.denom().bits() > threshold || self.hi.denom().bits() > threshold {
            self.round_outward(prec.bits() + ROUNDING_GUARD_BITS)
        } else {
            self
        }
    }

    /// Like [`Enclosure::compact`] but with a tight threshold: any
    /// denominator longer than `bits + 64` bits is rounded outward to
    /// `2^-(bits + 32)`. Used on arguments of series evaluations, where long
    /// denominators make every term expensive.
    pub fn shorten(&self, prec: Precision) -> Enclosure {
        let threshold = prec.bits() + 2 * ROUNDING_GUARD_BITS;
        if self.lo.denom().bits() > threshold || self.hi.denom().bits() > threshold {
            self.round_outward(prec.bits() + ROUNDING_GUARD_BITS)
        } else {
            self.clone()
        }
    }

    /// Endpoints as decimal strings with `places` digits, rounded outward.
    pub fn decimal_bounds(&self, places: u32) -> (alloc::string::String, alloc::string::String) {
        (
            decimal_directed(&self.lo, places, false),
            decimal_directed(&self.hi, places, true),
        )
    }
}

impl fmt::Debug for Enclosure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (lo, hi) = self.decimal_bounds(20);
        write!(f, "[{lo}, {hi}]")
    }
}

impl fmt::Display for Enclosure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let places = f.precision().unwrap_or(20) as u32;
        let (lo, hi) = self.decimal_bounds(places);
        write!(f, "[{lo}, {hi}]")
    }
}

impl From<Rational> for Enclosure {
    fn from(r: Rational) -> Self {
        Enclosure::point(r)
    }
}

impl Neg for &Enclosure {
    type Output = Enclosure;
    fn neg(self) -> Enclosure {
        Enclosure {
            lo: -&self.hi,
            hi: -&self.lo,
        }
    }
}

impl Neg for Enclosure {
    type Output = Enclosure;
    fn neg(self) -> Enclosure {
        -&self
    }
}

impl Add for &Enclosure {
    type Output = Enclosure;
    fn add(self, rhs: &Enclosure) -> Enclosure {
        Enclosure {
            lo: &self.lo + &rhs.lo,
            hi: &self.hi + &rhs.hi,
        }
    }
}

impl Sub for &Enclosure {
    type Output = Enclosure;
    fn sub(self, rhs: &Enclosure) -> Enclosure {
        Enclosure {
            lo: &self.lo - &rhs.hi,
            hi: &self.hi - &rhs.lo,
        }
    }
}

impl Mul for &Enclosure {
    type Output = Enclosure;
    fn mul(self, rhs: &Enclosure) -> Enclosure {
        if self.is_point() {
            return rhs.scale(&self.lo);
        }
        if rhs.is_point() {
            return self.scale(&rhs.lo);
        }
        let products = [
            &self.lo * &rhs.lo,
            &self.lo * &rhs.hi,
            &self.hi * &rhs.lo,
            &self.hi * &rhs.hi,
        ];
        let mut lo = &products[0];
        let mut hi = &products[0];
        for p in &products[1..] {
            if p < lo {
                lo = p;
            }
            if p > hi {
                hi = p;
            }
        }
        Enclosure {
            lo: lo.clone(),
            hi: hi.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for Enclosure {
            type Output = Enclosure;
            fn $method(self, rhs: Enclosure) -> Enclosure {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Enclosure> for Enclosure {
            type Output = Enclosure;
            fn $method(self, rhs: &Enclosure) -> Enclosure {
                (&self).$method(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rational::{int, ratio};

    fn enc(a: i64, b: i64) -> Enclosure {
        Enclosure::new(int(a), int(b))
    }

    #[test]
    fn multiplication_covers_sign_cases() {
        assert_eq!(&enc(-2, 3) * &enc(-5, 1), enc(-15, 10));
        assert_eq!(&enc(2, 3) * &enc(-5, -1), enc(-15, -2));
        assert_eq!(&enc(-1, 1) * &enc(-1, 1), enc(-1, 1));
    }

    #[test]
    fn square_of_straddling_interval_is_nonnegative() {
        assert_eq!(enc(-2, 1).square(), enc(0, 4));
        assert_eq!(enc(-3, -2).square(), enc(4, 9));
    }

    #[test]
    fn recip_rejects_zero() {
        assert!(enc(-1, 1).recip().is_err());
        assert!(enc(0, 0).recip().is_err());
        assert_eq!(enc(2, 4).recip().unwrap(), Enclosure::new(ratio(1, 4), ratio(1, 2)));
    }

    #[test]
    fn outward_rounding_keeps_containment() {
        let e = Enclosure::new(ratio(1, 3), ratio(2, 3));
        let r = e.round_outward(10);
        assert!(r.contains_enclosure(&e));
        assert!(r.lo().denom() <= &BigInt::from(1024));
        assert!(r.width() - e.width() <= ratio(2, 1024));
    }

    #[test]
    fn hull_and_intersection() {
        let a = enc(0, 2);
        let b = enc(1, 5);
        assert_eq!(a.hull(&b), enc(0, 5));
        assert_eq!(a.intersection(&b), Some(enc(1, 2)));
        assert_eq!(a.intersection(&enc(3, 4)), None);
        assert!(!a.intersects(&enc(3, 4)));
    }

    #[test]
    fn abs_cases() {
        assert_eq!(enc(-3, 1).abs(), enc(0, 3));
        assert_eq!(enc(-3, -1).abs(), enc(1, 3));
        assert_eq!(enc(1, 3).abs(), enc(1, 3));
    }

    #[test]
    #[should_panic]
    fn reversed_endpoints_panic() {
        let _ = enc(2, 1);
    }
}
