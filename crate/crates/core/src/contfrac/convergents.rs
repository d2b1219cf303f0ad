use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::numerics::{Enclosure, Rational};

/// The `index`-th convergent `p/q` of a regular continued fraction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Convergent {
    pub index: usize,
    pub p: BigInt,
    pub q: BigInt,
}

impl Convergent {
    pub fn value(&self) -> Rational {
        Rational::new(self.p.clone(), self.q.clone())
    }

    /// `q·α − p` over an enclosure of `α`.
    pub fn residual(&self, alpha: &Enclosure) -> Enclosure {
        let q = Rational::from_integer(self.q.clone());
        alpha.scale(&q).shift(&-Rational::from_integer(self.p.clone()))
    }
}

/// Lazily applies `pₙ = aₙpₙ₋₁ + pₙ₋₂`, `qₙ = aₙqₙ₋₁ + qₙ₋₂` to a stream of
/// partial quotients, seeded with `p₋₁ = 1, p₋₂ = 0, q₋₁ = 0, q₋₂ = 1`.
#[derive(Debug, Clone)]
pub struct Convergents<I> {
    quotients: I,
    index: usize,
    p: (BigInt, BigInt),
    q: (BigInt, BigInt),
}

pub fn convergents<I: IntoIterator<Item = BigInt>>(quotients: I) -> Convergents<I::IntoIter> {
    Convergents {
        quotients: quotients.into_iter(),
        index: 0,
        p: (BigInt::zero(), BigInt::one()),
        q: (BigInt::one(), BigInt::zero()),
    }
}

impl<I: Iterator<Item = BigInt>> Iterator for Convergents<I> {
    type Item = Convergent;

    fn next(&mut self) -> Option<Convergent> {
        let a = self.quotients.next()?;
        let p = &a * &self.p.1 + &self.p.0;
        let q = &a * &self.q.1 + &self.q.0;
        self.p = (core::mem::take(&mut self.p.1), p.clone());
        self.q = (core::mem::take(&mut self.q.1), q.clone());
        let c = Convergent {
            index: self.index,
            p,
            q,
        };
        self.index += 1;
        Some(c)
    }
}

/// The first `count` convergents, or fewer if the stream ends (rational `α`).
pub fn convergents_from_quotients<I>(quotients: I, count: usize) -> Vec<Convergent>
where
    I: IntoIterator<Item = BigInt>,
{
    convergents(quotients).take(count).collect()
}
