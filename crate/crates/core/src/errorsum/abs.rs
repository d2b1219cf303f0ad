use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::constexpr::{eval_enclosure, ConstExpr};
use crate::contfrac::{convergents, CertifiedQuotients, Convergent, StopReason};
use crate::error::{Error, Result};
use crate::numerics::{int, Enclosure, Precision, Rational};

/// Enclosure of `E(α)` together with how it was obtained.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorSumResult {
    pub value: Enclosure,
    /// Number of convergents summed explicitly.
    pub terms_used: usize,
    /// Bound on the neglected tail (already folded into `value`).
    pub tail_bound: Rational,
}

/// Bound on `Σ_{k>N} 1/q_k` from `q_{k+2} ≥ 2q_k`:
/// `2(1/q_{N+1} + 1/q_{N+2})`, with `q_{N+1} ≥ q_N + q_{N−1}` and
/// `q_{N+2} ≥ 2q_N + q_{N−1}` since every later quotient is at least 1.
fn pairing_tail(q_n: &BigInt, q_prev: &BigInt) -> Rational {
    let q1 = q_n + q_prev;
    let q2 = q_n * 2 + q_prev;
    (Rational::new(1.into(), q1) + Rational::new(1.into(), q2)) * int(2)
}

/// Sums `|qₙα − pₙ|` over the convergents certified by `alpha` until the
/// accumulated width plus the tail bound is at most `tol`.
///
/// Returns `None` when `alpha` is too wide to get there.
pub fn error_sum_of_enclosure(alpha: &Enclosure, tol: &Rational) -> Option<ErrorSumResult> {
    let half = tol / int(2);
    let mut walk = CertifiedQuotients::new(alpha);
    let mut acc = Enclosure::point(Rational::zero());
    let mut q_prev = BigInt::zero();
    let mut used = 0;
    for c in convergents(walk.by_ref()) {
        acc = &acc + &c.residual(alpha).abs();
        used = c.index + 1;
        if acc.width() > half {
            return None;
        }
        let tail = pairing_tail(&c.q, &q_prev);
        if acc.width() + &tail <= *tol {
            let value = Enclosure::new(acc.lo().clone(), acc.hi() + &tail);
            return Some(ErrorSumResult {
                value,
                terms_used: used,
                tail_bound: tail,
            });
        }
        q_prev = c.q;
    }
    (walk.stop_reason() == Some(StopReason::Exact)).then(|| ErrorSumResult {
        value: acc,
        terms_used: used,
        tail_bound: Rational::zero(),
    })
}

/// Encloses `E(α) = Σₙ |qₙα − pₙ|` for the positive constant `expr`.
///
/// The constant is enclosed at roughly twice the target digits so that the
/// interval terms `|qₙα − pₙ|` stay narrow up to `qₙ ≈ 10^D`; the working
/// precision doubles if quotients run out or the terms get too wide.
pub fn error_sum_abs(expr: &ConstExpr, prec: Precision) -> Result<ErrorSumResult> {
    let tol = prec.tolerance();
    let mut working = 2 * prec.digits() + 20;
    for _ in 0..=prec.max_doublings() {
        let alpha = eval_enclosure(expr, prec.with_digits(working))?;
        if !alpha.hi().is_positive() {
            return Err(Error::domain("error sum needs a positive constant"));
        }
        if alpha.lo().is_positive() {
            if let Some(r) = error_sum_of_enclosure(&alpha, &tol) {
                return Ok(r);
            }
        }
        working = working.saturating_mul(2);
    }
    Err(Error::precision(
        prec.digits(),
        "error sum did not converge within the escalation cap",
        None,
    ))
}

/// The first `count` convergents of `expr` (from the given quotient
/// stream) with enclosures of `qₙα − pₙ`, each at most `10^-D` wide.
pub fn signed_residuals<I>(
    expr: &ConstExpr,
    quotients: I,
    count: usize,
    prec: Precision,
) -> Result<Vec<(Convergent, Enclosure)>>
where
    I: IntoIterator<Item = BigInt>,
{
    let cs: Vec<Convergent> = convergents(quotients).take(count).collect();
    let q_max = cs.last().map_or(BigInt::from(1), |c| c.q.clone());
    let extra = (q_max.bits() * 3 / 10) as u32 + 3;
    let alpha = eval_enclosure(expr, prec.with_digits(prec.digits() + extra))?;
    Ok(cs
        .into_iter()
        .map(|c| {
            let r = c.residual(&alpha);
            (c, r)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constexpr::parse;
    use crate::contfrac::{extract_cf, HurwitzFamily};
    use crate::numerics::{exp_enclosure, gauss_integral, ratio, sqrt_enclosure};

    fn esum(text: &str, d: u32) -> ErrorSumResult {
        let r = error_sum_abs(&parse(text).unwrap(), Precision::new(d)).unwrap();
        assert!(r.value.width() <= Precision::new(d).tolerance());
        assert!(!r.tail_bound.is_negative());
        r
    }

    #[test]
    fn golden_ratio_error_sum_is_itself() {
        let r = esum("(1+sqrt(5))/2", 12);
        let phi = eval_enclosure(&parse("(1+sqrt(5))/2").unwrap(), Precision::new(30)).unwrap();
        assert!(r.value.intersects(&phi));
    }

    #[test]
    fn sqrt7_closed_form() {
        let r = esum("sqrt(7)", 12);
        let s7 = sqrt_enclosure(&int(7), Precision::new(30)).unwrap();
        let rhs = s7.scale(&ratio(5, 14)).shift(&ratio(1, 2));
        assert!(r.value.intersects(&rhs));
        // (7 + 5√7)/14 = 1.4449111825230680...
        assert!(crate::testutil::meets_truncated(&r.value, "1.444911182523"));
    }

    #[test]
    fn e_matches_gauss_integral_form() {
        let r = esum("e", 12);
        let p = Precision::new(30);
        let e = exp_enclosure(&int(1), p).unwrap();
        let i = gauss_integral(&int(1), p).unwrap();
        let rhs = &(&e * &i).scale(&int(2)) - &e;
        assert!(r.value.intersects(&rhs));
        assert!(crate::testutil::meets_truncated(&r.value, "1.341875"));
    }

    #[test]
    fn rational_alpha_sums_exactly() {
        // 8/3 = [2; 1, 2]: residuals 8/3·1 − 2, 3 − 8/3, 0.
        let r = esum("8/3", 20);
        assert_eq!(r.value, Enclosure::point(ratio(2, 3) + ratio(1, 3)));
        assert!(r.tail_bound.is_zero());
    }

    #[test]
    fn non_positive_is_domain_error() {
        assert!(matches!(
            error_sum_abs(&parse("1-e").unwrap(), Precision::new(5)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn nested_under_precision_increase() {
        let lo = esum("e^(1/3)", 15).value;
        let hi = esum("e^(1/3)", 25).value;
        assert!(lo.contains_enclosure(&hi));
    }

    #[test]
    fn residual_signs_alternate_and_respect_next_denominator() {
        let f = HurwitzFamily::f2(2).unwrap();
        let rs = signed_residuals(&f.alpha(), f.stream(), 40, Precision::new(30)).unwrap();
        for w in rs.windows(2) {
            let (c, r) = &w[0];
            let signed = if c.index % 2 == 0 { r.clone() } else { -r };
            assert!(signed.is_positive(), "index {}", c.index);
            let bound = Rational::new(1.into(), w[1].0.q.clone());
            assert!(r.abs().hi() < &bound);
        }
        let pq = extract_cf(&f.alpha(), 10).unwrap();
        assert_eq!(pq.terms, f.stream().take(10).collect::<Vec<_>>());
    }
}
