use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::constexpr::{eval_enclosure, ConstExpr};
use crate::contfrac::{convergents, CertifiedQuotients, StopReason};
use crate::error::{Error, Result};
use crate::numerics::{int, ratio, Enclosure, Precision, Rational};

/// Encloses `Σₙ (qₙα − pₙ)·xⁿ` for `|x| ≤ 3/2`.
///
/// Tail: `|qₖα − pₖ| < 1/q_{k+1}` and `q_{N+1+j} ≥ F_{j+1}·q_{N+1} ≥
/// φ^{j−1}·q_{N+1}`, so the terms past `N` are at most
/// `φ·|x|^{N+1} / (q_{N+1}(1 − |x|/φ))` in total, with
/// `q_{N+1} ≥ q_N + q_{N−1}`.
pub fn error_sum_power_series(expr: &ConstExpr, x: &Rational, prec: Precision) -> Result<Enclosure> {
    if x.abs() > ratio(3, 2) {
        return Err(Error::domain("power series is only evaluated for |x| <= 3/2"));
    }
    // Rational bounds: 1/φ < 15451/25000, φ < 16181/10000.
    let rho = x.abs() * ratio(15451, 25000);
    let phi_hi = ratio(16181, 10000);
    let tail_factor = &phi_hi / (Rational::one() - &rho);

    let tol = prec.tolerance();
    let half = &tol / int(2);
    let mut working = 2 * prec.digits() + 20;
    for _ in 0..=prec.max_doublings() {
        let alpha = eval_enclosure(expr, prec.with_digits(working))?;
        working = working.saturating_mul(2);
        if !alpha.lo().is_positive() {
            if !alpha.hi().is_positive() {
                return Err(Error::domain("power series needs a positive constant"));
            }
            continue;
        }
        let mut walk = CertifiedQuotients::new(&alpha);
        let mut acc = Enclosure::point(Rational::zero());
        let mut x_pow = Rational::one();
        let mut q_prev = BigInt::zero();
        let mut done = None;
        for c in convergents(walk.by_ref()) {
            acc = &acc + &c.residual(&alpha).scale(&x_pow);
            x_pow *= x;
            if acc.width() > half {
                break;
            }
            let q_next = &c.q + &q_prev;
            let tail = &tail_factor * x_pow.abs() / Rational::from_integer(q_next);
            if acc.width() + &tail * int(2) <= tol {
                done = Some(Enclosure::new(acc.lo() - &tail, acc.hi() + &tail));
                break;
            }
            q_prev = c.q;
        }
        if let Some(enc) = done {
            return Ok(enc);
        }
        if walk.stop_reason() == Some(StopReason::Exact) && acc.width() <= tol {
            return Ok(acc);
        }
        if x.is_zero() && acc.width() <= tol {
            return Ok(acc);
        }
    }
    Err(Error::precision(
        prec.digits(),
        "power series did not converge within the escalation cap",
        None,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constexpr::parse;
    use crate::errorsum::error_sum_abs;

    #[test]
    fn at_zero_only_the_fractional_part_survives() {
        let p = Precision::new(20);
        let v = error_sum_power_series(&parse("sqrt(7)").unwrap(), &int(0), p).unwrap();
        let frac = eval_enclosure(&parse("sqrt(7)-2").unwrap(), Precision::new(30)).unwrap();
        assert!(v.intersects(&frac));
        assert!(v.width() <= p.tolerance());
    }

    #[test]
    fn at_minus_one_it_is_the_error_sum() {
        let p = Precision::new(20);
        let e = parse("e").unwrap();
        let v = error_sum_power_series(&e, &int(-1), p).unwrap();
        let abs = error_sum_abs(&e, p).unwrap().value;
        assert!(v.intersects(&abs));
    }

    #[test]
    fn golden_at_one_is_positive_and_smaller() {
        let p = Precision::new(15);
        let g = parse("(1+sqrt(5))/2").unwrap();
        let v = error_sum_power_series(&g, &int(1), p).unwrap();
        let abs = error_sum_abs(&g, p).unwrap().value;
        assert!(v.is_positive());
        assert!(v.hi() < abs.lo());
        // Oracle: the golden ratio's residuals are (−1)ⁿφ^{−(n+1)}, so at
        // x = 1 the series is Σ(−1)ⁿφ^{−(n+1)} = 1/(φ+1) = 2 − φ.
        let two_minus_phi = eval_enclosure(&parse("2-(1+sqrt(5))/2").unwrap(), Precision::new(30)).unwrap();
        assert!(v.intersects(&two_minus_phi));
    }

    #[test]
    fn edge_of_domain() {
        let p = Precision::new(10);
        let g = parse("sqrt(2)").unwrap();
        assert!(error_sum_power_series(&g, &ratio(3, 2), p).is_ok());
        assert!(error_sum_power_series(&g, &ratio(-3, 2), p).is_ok());
        assert!(matches!(
            error_sum_power_series(&g, &ratio(151, 100), p),
            Err(Error::Domain(_))
        ));
    }
}
