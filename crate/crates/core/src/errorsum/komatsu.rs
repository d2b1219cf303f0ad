use num_bigint::BigInt;
use num_traits::One;

use crate::contfrac::{convergents_from_quotients, HurwitzFamily};
use crate::error::{Error, Result};
use crate::numerics::{exp_enclosure, int, refine, sum_positive, Enclosure, Precision, Rational};

/// `P(m, n, c) = ∫₀¹ xᵐ(1−x)ⁿ e^{x/c} dx`, summed exactly from
/// `Σₖ (m+k)!·n! / (cᵏ·k!·(m+k+n+1)!)`.
///
/// Term ratio is `(m+k+1)/(c(k+1)(m+k+n+2)) ≤ 1/(c(k+1))`.
pub fn beta_exp_integral(m: u64, n: u64, c: u64, prec: Precision) -> Result<Enclosure> {
    if c == 0 {
        return Err(Error::domain("beta_exp_integral needs c >= 1"));
    }
    // t₀ = m!·n!/(m+n+1)!
    let mut t0 = Rational::one();
    for i in 1..=n {
        t0 *= Rational::new(BigInt::from(i), BigInt::from(m + i));
    }
    t0 /= int((m + n + 1) as i64);
    let mut t = t0;
    let c_r = int(c as i64);
    sum_positive(
        |k| {
            if k > 0 {
                let k = k as u64;
                t = &t * Rational::new(BigInt::from(m + k), BigInt::from(k * (m + k + n + 1))) / &c_r;
            }
            t.clone()
        },
        |k| Rational::new(BigInt::one(), BigInt::from(c * (k as u64 + 1))),
        prec,
    )
}

fn sign(neg: bool) -> Rational {
    if neg {
        int(-1)
    } else {
        int(1)
    }
}

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Integral side of `pₘ − α·qₘ`, `m = 3n + j`, for the Hurwitz families
/// `α = s·e^{1/(ℓs)}` (F1) and `α = s·e^{1/s}` (F2).
pub fn komatsu_residual(family: &HurwitzFamily, n: u64, j: u32, prec: Precision) -> Result<Enclosure> {
    if j > 2 {
        return Err(Error::domain("residue j must be 0, 1 or 2"));
    }
    let c = family.exponent_denominator();
    let s = family.s() as u64;
    let odd = n % 2 == 1;
    refine(prec, 10, |wp| {
        let p = |a: u64, b: u64| beta_exp_integral(a, b, c, wp);
        let s_r = int(s as i64);
        let (integral, pre) = match (family, j) {
            (HurwitzFamily::F1 { .. }, 0) => (
                p(n, n)?.scale(&s_r),
                -sign(odd) / (Rational::from_integer(BigInt::from(c).pow(n as u32 + 1) * factorial(n))),
            ),
            (HurwitzFamily::F1 { .. }, 1) => (
                &p(n + 1, n)? + &p(n, n)?.scale(&int(s as i64 - 1)),
                sign(odd) / Rational::from_integer(BigInt::from(c).pow(n as u32 + 1) * factorial(n)),
            ),
            (HurwitzFamily::F1 { .. }, _) => (
                p(n, n + 1)?,
                sign(!odd) / Rational::from_integer(BigInt::from(c).pow(n as u32 + 1) * factorial(n)),
            ),
            (HurwitzFamily::F2 { .. }, 0) => (
                p(n, n + 1)?,
                sign(!odd) / Rational::from_integer(BigInt::from(s).pow(n as u32 + 1) * factorial(n)),
            ),
            (HurwitzFamily::F2 { .. }, 1) => (
                p(n + 1, n + 1)?,
                sign(odd) / Rational::from_integer(BigInt::from(s).pow(n as u32 + 1) * factorial(n + 1)),
            ),
            (HurwitzFamily::F2 { .. }, _) => (
                &p(n + 2, n + 1)? + &p(n + 1, n + 1)?.scale(&int(s as i64 - 1)),
                sign(!odd) / Rational::from_integer(BigInt::from(s).pow(n as u32 + 2) * factorial(n + 1)),
            ),
        };
        Ok(integral.scale(&pre).compact(wp))
    })
}

/// Convergent side of the same residual: `pₘ − α·qₘ` with the convergents
/// built from the family's quotient stream and `α` from `exp_enclosure`.
pub fn convergent_side_residual(family: &HurwitzFamily, m: usize, prec: Precision) -> Result<Enclosure> {
    let conv = convergents_from_quotients(family.stream(), m + 1).pop().expect("m + 1 convergents");
    let q_digits = (conv.q.bits() * 3 / 10) as u32 + 1;
    refine(prec, q_digits + 10, |wp| {
        let alpha = exp_enclosure(&family.exponent(), wp)?.scale(&int(family.s() as i64));
        Ok(-conv.residual(&alpha))
    })
}
