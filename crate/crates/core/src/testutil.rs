use num_bigint::BigInt;

use crate::numerics::{pow10, Enclosure, Rational};

/// Exact value of a decimal literal such as `-0.125`.
pub(crate) fn dec(s: &str) -> Rational {
    let (neg, body) = match s.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, s),
    };
    let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
    let digits: BigInt = alloc::format!("{whole}{frac}").parse().unwrap();
    let r = Rational::new(digits, pow10(frac.len() as u32));
    if neg {
        -r
    } else {
        r
    }
}

/// A decimal truncated toward zero pins the true value to
/// `[trunc, trunc + ulp]` (mirrored for negatives); the enclosure must meet it.
pub(crate) fn meets_truncated(e: &Enclosure, s: &str) -> bool {
    let frac_len = s.split_once('.').map_or(0, |(_, f)| f.len()) as u32;
    let t = dec(s);
    let ulp = Rational::new(1.into(), pow10(frac_len));
    let range = if s.starts_with('-') {
        Enclosure::new(&t - &ulp, t)
    } else {
        Enclosure::new(t.clone(), t + ulp)
    };
    e.intersects(&range)
}
