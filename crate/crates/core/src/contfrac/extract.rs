use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::constexpr::{eval_enclosure, ConstExpr};
use crate::error::{Error, Result};
use crate::numerics::{floor, Enclosure, Precision, Rational};

/// Cap on precision doublings while extracting partial quotients.
pub const EXTRACTION_MAX_DOUBLINGS: u32 = 20;

/// Why a [`CertifiedQuotients`] walk stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StopReason {
    /// The value is the rational given by the quotients so far.
    Exact,
    /// The enclosure no longer determines the next quotient.
    Undetermined,
}

/// Partial quotients of an enclosure, emitted only while every member of the
/// enclosure shares them.
///
/// Both endpoints are pushed through `x ↦ 1/(x − a)` together; the next
/// quotient is certified when `⌊lo⌋ = ⌊hi⌋` and `lo` is not itself that
/// integer.
#[derive(Debug, Clone)]
pub struct CertifiedQuotients {
    lo: Rational,
    hi: Rational,
    stopped: Option<StopReason>,
}

impl CertifiedQuotients {
    pub fn new(enc: &Enclosure) -> Self {
        CertifiedQuotients {
            lo: enc.lo().clone(),
            hi: enc.hi().clone(),
            stopped: None,
        }
    }

    pub fn stop_reason(&self) -> Option<StopReason> {
        self.stopped
    }
}

impl Iterator for CertifiedQuotients {
    type Item = BigInt;

    fn next(&mut self) -> Option<BigInt> {
        if self.stopped.is_some() {
            return None;
        }
        let a = floor(&self.lo);
        let a_r = Rational::from_integer(a.clone());
        if self.lo == self.hi {
            if self.lo == a_r {
                self.stopped = Some(StopReason::Exact);
            } else {
                let x = (&self.lo - &a_r).recip();
                self.lo = x.clone();
                self.hi = x;
            }
            return Some(a);
        }
        if floor(&self.hi) != a || self.lo == a_r {
            self.stopped = Some(StopReason::Undetermined);
            return None;
        }
        let lo = (&self.hi - &a_r).recip();
        let hi = (&self.lo - &a_r).recip();
        self.lo = lo;
        self.hi = hi;
        Some(a)
    }
}

/// A prefix of a regular continued fraction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialQuotients {
    pub terms: Vec<BigInt>,
    /// The expansion terminates after `terms` (the value is rational).
    pub complete: bool,
}

/// Canonical expansion of a rational (last quotient ≥ 2 when length ≥ 2).
pub fn quotients_of_rational(r: &Rational) -> Vec<BigInt> {
    CertifiedQuotients::new(&Enclosure::point(r.clone())).collect()
}

/// Up to `max` quotients certified by `enc`.
pub fn quotients_of_enclosure(enc: &Enclosure, max: usize) -> PartialQuotients {
    let mut walk = CertifiedQuotients::new(enc);
    let terms: Vec<BigInt> = walk.by_ref().take(max).collect();
    let complete = walk.stop_reason() == Some(StopReason::Exact)
        || (terms.len() == max && enc.is_point() && walk.next().is_none());
    PartialQuotients { terms, complete }
}

/// The first `count` partial quotients of a positive constant.
///
/// Starts from a working precision sized to `count` and doubles it (up to
/// [`EXTRACTION_MAX_DOUBLINGS`] times) until `count` quotients are
/// certified. Rational values that evaluate exactly return their full
/// canonical expansion, which may be shorter than `count`.
pub fn extract_cf(expr: &ConstExpr, count: usize) -> Result<PartialQuotients> {
    extract_cf_with_cap(expr, count, EXTRACTION_MAX_DOUBLINGS)
}

/// [`extract_cf`] with an explicit doubling cap. Each evaluation of `expr`
/// escalates at most `min(max_doublings, 6)` times on its own.
pub fn extract_cf_with_cap(
    expr: &ConstExpr,
    count: usize,
    max_doublings: u32,
) -> Result<PartialQuotients> {
    if count == 0 {
        return Err(Error::domain("extract_cf needs count >= 1"));
    }
    let mut digits = 20 + 2 * count as u32;
    let mut best: Option<Enclosure> = None;
    for _ in 0..=max_doublings {
        let inner = max_doublings.min(Precision::DEFAULT_MAX_DOUBLINGS);
        let enc = eval_enclosure(expr, Precision::new(digits).with_max_doublings(inner))?;
        if !enc.hi().is_positive() {
            return Err(Error::domain("continued fraction needs a positive value"));
        }
        if enc.lo().is_positive() {
            let pq = quotients_of_enclosure(&enc, count);
            if pq.complete || pq.terms.len() == count {
                return Ok(pq);
            }
        }
        best = Some(enc);
        digits = digits.saturating_mul(2);
    }
    Err(Error::precision(
        digits,
        "partial quotients still undetermined at the doubling cap",
        best,
    ))
}
