use alloc::string::{String, ToString};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact ratio of arbitrary-size integers, always stored reduced with a
/// positive denominator.
pub type Rational = BigRational;

/// Agreement reported when two values coincide exactly.
pub const MAX_AGREED_DIGITS: u32 = 100_000;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d`, reduced. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn pow10(k: u32) -> BigInt {
    num_traits::pow(BigInt::from(10u8), k as usize)
}

pub fn floor(r: &Rational) -> BigInt {
    r.numer().div_floor(r.denom())
}

pub fn ceil(r: &Rational) -> BigInt {
    -((-r.numer()).div_floor(r.denom()))
}

/// Largest `k ≥ 0` such that `width · 10^k ≤ 1`, i.e. the number of decimal
/// places to which an interval of this width pins its value down.
pub fn agreed_digits(width: &Rational) -> u32 {
    if width.is_zero() {
        return MAX_AGREED_DIGITS;
    }
    let inv = width.recip();
    if inv < Rational::one() {
        return 0;
    }
    let len = floor(&inv).to_string().len() as u32;
    (len - 1).min(MAX_AGREED_DIGITS)
}

/// Decimal expansion of `r` truncated toward zero after `places` digits.
pub fn decimal_truncated(r: &Rational, places: u32) -> String {
    let scaled = r * Rational::from_integer(pow10(places));
    let t = scaled.trunc().to_integer();
    format_scaled(&t, r.is_negative(), places)
}

/// Decimal expansion of `r` with `places` digits, rounded down (`up = false`)
/// or up (`up = true`), so the printed value bounds `r` from that side.
pub fn decimal_directed(r: &Rational, places: u32, up: bool) -> String {
    let scaled = r * Rational::from_integer(pow10(places));
    let t = if up { ceil(&scaled) } else { floor(&scaled) };
    let negative = t.is_negative();
    format_scaled(&t, negative, places)
}

fn format_scaled(t: &BigInt, negative: bool, places: u32) -> String {
    let digits = t.abs().to_string();
    let places = places as usize;
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    if places == 0 {
        out.push_str(&digits);
        return out;
    }
    if digits.len() <= places {
        out.push_str("0.");
        for _ in digits.len()..places {
            out.push('0');
        }
        out.push_str(&digits);
    } else {
        let (whole, frac) = digits.split_at(digits.len() - places);
        out.push_str(whole);
        out.push('.');
        out.push_str(frac);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floor_and_ceil_round_the_right_way() {
        assert_eq!(floor(&ratio(7, 2)), BigInt::from(3));
        assert_eq!(floor(&ratio(-7, 2)), BigInt::from(-4));
        assert_eq!(ceil(&ratio(7, 2)), BigInt::from(4));
        assert_eq!(ceil(&ratio(-7, 2)), BigInt::from(-3));
        assert_eq!(ceil(&int(5)), BigInt::from(5));
    }

    #[test]
    fn rationals_are_reduced() {
        let r = ratio(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
    }

    #[test]
    fn truncated_decimals() {
        assert_eq!(decimal_truncated(&ratio(2, 3), 4), "0.6666");
        assert_eq!(decimal_truncated(&ratio(-2, 3), 4), "-0.6666");
        assert_eq!(decimal_truncated(&ratio(1, 200), 2), "0.00");
        assert_eq!(decimal_truncated(&ratio(1234, 100), 1), "12.3");
        assert_eq!(decimal_truncated(&int(7), 0), "7");
    }

    #[test]
    fn directed_decimals_bound_the_value() {
        assert_eq!(decimal_directed(&ratio(2, 3), 3, false), "0.666");
        assert_eq!(decimal_directed(&ratio(2, 3), 3, true), "0.667");
        assert_eq!(decimal_directed(&ratio(-2, 3), 3, false), "-0.667");
        assert_eq!(decimal_directed(&ratio(-2, 3), 3, true), "-0.666");
    }

    #[test]
    fn agreed_digits_of_widths() {
        assert_eq!(agreed_digits(&ratio(1, 1000)), 3);
        assert_eq!(agreed_digits(&ratio(1, 999)), 2);
        assert_eq!(agreed_digits(&ratio(1, 1001)), 3);
        assert_eq!(agreed_digits(&int(5)), 0);
        assert_eq!(agreed_digits(&int(0)), MAX_AGREED_DIGITS);
    }
}
