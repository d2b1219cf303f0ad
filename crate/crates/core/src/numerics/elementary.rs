use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

use super::rational::{ceil, int};
use super::{refine, sum_alternating, Enclosure, Precision, Rational};

/// Number of halvings needed to bring `|x|` into `[0, 1]`.
fn halvings(x: &Rational) -> u32 {
    let mut k = 0;
    let mut bound = BigInt::one();
    let ax = x.abs();
    while ax > Rational::from_integer(bound.clone()) {
        bound <<= 1;
        k += 1;
    }
    k
}

fn magnitude_guard(x: &Rational) -> u32 {
    // e^|x| ≤ 3^⌈|x|⌉ and log₁₀3 < 0.48
    let c = ceil(&x.abs()).to_u64().unwrap_or(u64::MAX / 2);
    (c.saturating_mul(48) / 100).min(u32::MAX as u64 / 4) as u32
}

/// `e^y` for `|y| ≤ 1` by Taylor series. After summing the terms below
/// index `n` the remainder is at most `3|y|ⁿ/n!`.
fn exp_taylor(y: &Rational, wp: Precision) -> Enclosure {
    debug_assert!(y.abs() <= Rational::one());
    let half_tol = wp.tolerance() / int(2);
    let three = int(3);
    let mut sum = Rational::zero();
    let mut term = Rational::one();
    let mut n = 0i64;
    loop {
        sum += &term;
        n += 1;
        term = term * y / int(n);
        let rem = &three * term.abs();
        if rem <= half_tol {
            return Enclosure::ball(&sum, &rem).compact(wp);
        }
    }
}

/// Encloses `eˣ` with width at most `10^-D`.
///
/// Arguments with `|x| > 1` are halved `k` times, evaluated by Taylor series,
/// and squared back up with outward-rounded interval squaring.
pub fn exp_enclosure(x: &Rational, prec: Precision) -> Result<Enclosure> {
    if x.is_zero() {
        return Ok(Enclosure::point(Rational::one()));
    }
    let k = halvings(x);
    let y = x / Rational::from_integer(BigInt::one() << k);
    let guard = k * 3 / 10 + magnitude_guard(x) + 5;
    refine(prec, guard, |wp| {
        let mut acc = exp_taylor(&y, wp);
        for _ in 0..k {
            acc = acc.square().compact(wp);
        }
        Ok(acc)
    })
}

/// Encloses `√r` with width at most `10^-D`; exact for perfect squares of
/// rationals.
pub fn sqrt_enclosure(r: &Rational, prec: Precision) -> Result<Enclosure> {
    if r.is_negative() {
        return Err(Error::domain("square root of a negative number"));
    }
    if r.is_zero() {
        return Ok(Enclosure::point(Rational::zero()));
    }
    // √(a/b) = √(ab)/b, and ⌊√(ab·4ᵏ)⌋/(b·2ᵏ) is within 1/(b·2ᵏ) ≤ 2^-k below it.
    let k = prec.bits();
    let b = r.denom().clone();
    let scaled: BigInt = (r.numer() * &b) << (2 * k);
    let m = scaled.sqrt();
    let den = &b << k;
    let lo = Rational::new(m.clone(), den.clone());
    if &m * &m == scaled {
        return Ok(Enclosure::point(lo));
    }
    let hi = Rational::new(m + 1, den);
    Ok(Enclosure::new(lo, hi))
}

fn sin_cos_small(y: &Rational, wp: Precision) -> Result<(Enclosure, Enclosure)> {
    let y2 = y * y;
    let mut st = y.clone();
    let sin = sum_alternating(
        |n| {
            if n > 0 {
                st = -&st * &y2 / int((2 * n as i64) * (2 * n as i64 + 1));
            }
            st.clone()
        },
        0,
        wp,
    )?;
    let mut ct = Rational::one();
    let cos = sum_alternating(
        |n| {
            if n > 0 {
                ct = -&ct * &y2 / int((2 * n as i64 - 1) * (2 * n as i64));
            }
            ct.clone()
        },
        0,
        wp,
    )?;
    Ok((sin.compact(wp), cos.compact(wp)))
}

/// Encloses `(sin x, cos x)`, each with width at most `10^-D`.
///
/// For `|x| ≤ 1` the alternating Taylor series are summed directly; larger
/// arguments are halved and rebuilt with the double-angle formulas.
pub fn sin_cos_enclosure(x: &Rational, prec: Precision) -> Result<(Enclosure, Enclosure)> {
    if x.is_zero() {
        return Ok((
            Enclosure::point(Rational::zero()),
            Enclosure::point(Rational::one()),
        ));
    }
    let k = halvings(x);
    let y = x / Rational::from_integer(BigInt::one() << k);
    let tol = prec.tolerance();
    let one = Rational::one();
    let mut working = prec.digits() + k + 5;
    let mut best = None;
    for _ in 0..=prec.max_doublings() {
        let wp = prec.with_digits(working);
        let (mut s, mut c) = sin_cos_small(&y, wp)?;
        for _ in 0..k {
            let two = Enclosure::from_integer(2);
            let s2 = (&(&two * &s) * &c).clamp_to(&-&one, &one).compact(wp);
            let c2 = (&(&two * &c.square()) - &Enclosure::from_integer(1))
                .clamp_to(&-&one, &one)
                .compact(wp);
            s = s2;
            c = c2;
        }
        if s.width() <= tol && c.width() <= tol {
            return Ok((s, c));
        }
        best = Some(s);
        working = working.saturating_mul(2);
    }
    Err(Error::precision(prec.digits(), "sin/cos double-angle rebuild", best))
}

/// Encloses `I(c) = ∫₀¹ e^{−t²/c} dt = Σₙ (−1)ⁿ/(n!·(2n+1)·cⁿ)`.
///
/// The terms alternate and decrease in magnitude from `n₀ = ⌈1/c⌉` on.
pub fn gauss_integral(c: &Rational, prec: Precision) -> Result<Enclosure> {
    if !c.is_positive() {
        return Err(Error::domain("gauss_integral needs c > 0"));
    }
    let n0 = ceil(&c.recip())
        .to_usize()
        .ok_or_else(|| Error::domain("c too small for the alternating series"))?;
    let mut base = Rational::one();
    sum_alternating(
        |n| {
            if n > 0 {
                base = -&base / (c * int(n as i64));
            }
            &base / int(2 * n as i64 + 1)
        },
        n0,
        prec,
    )
}

/// `exp` over an interval argument; monotone, so the endpoints suffice.
pub(crate) fn exp_of(x: &Enclosure, prec: Precision) -> Result<Enclosure> {
    let x = &x.shorten(prec);
    if x.is_point() {
        return exp_enclosure(x.lo(), prec);
    }
    let lo = exp_enclosure(x.lo(), prec)?;
    let hi = exp_enclosure(x.hi(), prec)?;
    Ok(Enclosure::new(lo.lo().clone(), hi.hi().clone()))
}

/// `√` over an interval argument. Negative members are dropped; an interval
/// with no nonnegative member is a domain error.
pub(crate) fn sqrt_of(x: &Enclosure, prec: Precision) -> Result<Enclosure> {
    if x.is_negative() {
        return Err(Error::domain("square root of a negative number"));
    }
    let x = &x.shorten(prec);
    if x.is_point() {
        return sqrt_enclosure(x.lo(), prec);
    }
    let lo = if x.lo().is_negative() {
        Enclosure::point(Rational::zero())
    } else {
        sqrt_enclosure(x.lo(), prec)?
    };
    let hi = sqrt_enclosure(x.hi(), prec)?;
    Ok(Enclosure::new(lo.lo().clone(), hi.hi().clone()))
}

/// `(sin, cos)` over an interval argument, using `|sin′|, |cos′| ≤ 1` around
/// the midpoint.
pub(crate) fn sin_cos_of(x: &Enclosure, prec: Precision) -> Result<(Enclosure, Enclosure)> {
    let x = &x.shorten(prec);
    if x.is_point() {
        return sin_cos_enclosure(x.lo(), prec);
    }
    let mid = x.midpoint();
    let radius = x.width() / int(2);
    let (s, c) = sin_cos_enclosure(&mid, prec)?;
    let one = Rational::one();
    let widen = |e: Enclosure| {
        Enclosure::new(e.lo() - &radius, e.hi() + &radius).clamp_to(&-&one, &one)
    };
    Ok((widen(s), widen(c)))
}
