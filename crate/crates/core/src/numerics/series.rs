use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

use super::{Enclosure, Precision, Rational};

/// Iteration cap shared by the series summers.
pub const DEFAULT_TERM_CAP: usize = 200_000;

/// Encloses `Σₙ term(n)` for a series whose terms alternate in sign with
/// strictly decreasing magnitude from index `n0` on.
///
/// `term` is called with `n = 0, 1, 2, …` in order, so it may carry state
/// between calls. Summation stops at the first `N ≥ n0` with
/// `|term(N)| ≤ 10^-D`. The tail from `N` on has the sign of `term(N)` and
/// magnitude at most `|term(N)|`, so the sum lies between `S_{N-1}` and
/// `S_{N-1} + term(N)`.
pub fn sum_alternating<F>(mut term: F, n0: usize, prec: Precision) -> Result<Enclosure>
where
    F: FnMut(usize) -> Rational,
{
    let tol = prec.tolerance();
    let mut sum = Rational::zero();
    let mut n = 0usize;
    let mut next = term(0);
    loop {
        if n >= n0 && next.abs() <= tol {
            return Ok(Enclosure::spanning(sum.clone(), &sum + &next));
        }
        if n >= DEFAULT_TERM_CAP {
            let best = (n >= n0).then(|| Enclosure::spanning(sum.clone(), &sum + &next));
            return Err(Error::precision(
                prec.digits(),
                "alternating series hit the term cap",
                best,
            ));
        }
        sum += next;
        n += 1;
        next = term(n);
    }
}

/// Encloses `Σₙ term(n)` for a series of nonnegative terms.
///
/// `ratio_bound(n)` must bound `term(k+1)/term(k)` for every `k ≥ n`.
/// Once it is below 1 the tail after index `n` is at most
/// `term(n)·r/(1−r)`, and summation stops when that is `≤ 10^-D`.
pub fn sum_positive<F, R>(mut term: F, ratio_bound: R, prec: Precision) -> Result<Enclosure>
where
    F: FnMut(usize) -> Rational,
    R: Fn(usize) -> Rational,
{
    let tol = prec.tolerance();
    let one = Rational::one();
    let mut sum = Rational::zero();
    for n in 0..DEFAULT_TERM_CAP {
        let t = term(n);
        debug_assert!(!t.is_negative(), "sum_positive needs nonnegative terms");
        sum += &t;
        if t.is_zero() && n > 0 {
            // term(k+1) ≤ r·term(k) forces every later term to vanish.
            let r = ratio_bound(n);
            if r < one {
                return Ok(Enclosure::point(sum));
            }
            continue;
        }
        let r = ratio_bound(n);
        if r < one {
            let tail = &t * &r / (&one - &r);
            if tail <= tol {
                let hi = &sum + &tail;
                return Ok(Enclosure::new(sum, hi));
            }
        }
    }
    Err(Error::precision(
        prec.digits(),
        "positive series hit the term cap",
        None,
    ))
}
