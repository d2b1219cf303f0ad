use crate::error::{Error, Result};

use super::rational::{pow10, Rational};
use super::Enclosure;

/// Target accuracy: an enclosure meets precision `D` when its width is at
/// most `10^-D`.
///
/// Also carries the escalation cap used when a composite computation misses
/// its target and retries at doubled working precision.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Precision {
    digits: u32,
    max_doublings: u32,
}

impl Precision {
    pub const DEFAULT_MAX_DOUBLINGS: u32 = 6;

    /// `digits` is clamped to at least 1.
    pub fn new(digits: u32) -> Self {
        Precision {
            digits: digits.max(1),
            max_doublings: Self::DEFAULT_MAX_DOUBLINGS,
        }
    }

    pub fn with_max_doublings(self, max_doublings: u32) -> Self {
        Precision {
            max_doublings,
            ..self
        }
    }

    /// Same escalation cap, different digit target.
    pub fn with_digits(self, digits: u32) -> Self {
        Precision {
            digits: digits.max(1),
            ..self
        }
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn max_doublings(&self) -> u32 {
        self.max_doublings
    }

    /// `10^-D`.
    pub fn tolerance(&self) -> Rational {
        Rational::new(1.into(), pow10(self.digits))
    }

    /// Upper bound on `D·log₂10`.
    pub fn bits(&self) -> u64 {
        (self.digits as u64 * 3322).div_ceil(1000)
    }
}

/// Runs `f` at working precision `D + guard`, doubling the working digits up
/// to `prec.max_doublings()` times until the returned enclosure is at most
/// `10^-D` wide.
///
/// Precision failures from `f` count as a miss and trigger the next doubling;
/// any other error is returned immediately.
pub fn refine<F>(prec: Precision, guard: u32, mut f: F) -> Result<Enclosure>
where
    F: FnMut(Precision) -> Result<Enclosure>,
{
    let tol = prec.tolerance();
    let mut working = prec.digits() + guard;
    let mut best: Option<Enclosure> = None;
    for _ in 0..=prec.max_doublings() {
        match f(prec.with_digits(working)) {
            Ok(enc) => {
                if enc.width() <= tol {
                    return Ok(enc);
                }
                best = Some(enc);
            }
            Err(Error::Precision { best: b, .. }) => {
                if let Some(b) = b {
                    best = Some(*b);
                }
            }
            Err(e) => return Err(e),
        }
        working = working.saturating_mul(2);
    }
    Err(Error::precision(
        prec.digits(),
        "working precision doubled to the cap",
        best,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rational::ratio;

    #[test]
    fn bits_bound_digits() {
        // 2^bits >= 10^digits
        for d in [1u32, 10, 50, 300] {
            let p = Precision::new(d);
            let two_pow = num_traits::pow(num_bigint::BigInt::from(2), p.bits() as usize);
            assert!(two_pow >= pow10(d));
        }
    }

    #[test]
    fn zero_digits_clamps_to_one() {
        assert_eq!(Precision::new(0).digits(), 1);
    }

    #[test]
    fn refine_escalates_then_gives_up() {
        let mut calls = 0;
        let res = refine(Precision::new(5).with_max_doublings(2), 0, |_| {
            calls += 1;
            Ok(Enclosure::new(ratio(0, 1), ratio(1, 1)))
        });
        assert_eq!(calls, 3);
        match res {
            Err(Error::Precision { best: Some(b), .. }) => assert_eq!(b.hi(), &ratio(1, 1)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn refine_stops_at_first_success() {
        let mut seen = alloc::vec::Vec::new();
        let enc = refine(Precision::new(4), 1, |p| {
            seen.push(p.digits());
            let w = if p.digits() >= 10 { ratio(1, 100_000) } else { ratio(1, 10) };
            Ok(Enclosure::new(ratio(0, 1), w))
        })
        .unwrap();
        assert_eq!(seen, [5, 10]);
        assert_eq!(enc.width(), ratio(1, 100_000));
    }
}
