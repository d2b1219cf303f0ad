use num_bigint::BigInt;

use crate::constexpr::ConstExpr;
use crate::error::{Error, Result};
use crate::numerics::{int, ratio, Rational};

/// The two quasi-periodic expansions of scaled powers of `e`.
///
/// * `F1 { l, s }`: `s·e^{1/(ℓs)} = [s; ℓ−1, 1, 2s−1, 3ℓ−1, 1, 2s−1, 5ℓ−1, …]`
///   for `ℓ ≥ 2, s ≥ 1`.
/// * `F2 { s }`: `s·e^{1/s} = [s+1; 2s−1, 2, 1, 2s−1, 4, 1, …]` for `s ≥ 1`.
///   With `s = 1` this is Euler's expansion of `e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HurwitzFamily {
    F1 { l: u32, s: u32 },
    F2 { s: u32 },
}

impl HurwitzFamily {
    pub fn f1(l: u32, s: u32) -> Result<Self> {
        if l < 2 || s < 1 {
            return Err(Error::domain("F1 needs l >= 2 and s >= 1"));
        }
        Ok(HurwitzFamily::F1 { l, s })
    }

    pub fn f2(s: u32) -> Result<Self> {
        if s < 1 {
            return Err(Error::domain("F2 needs s >= 1"));
        }
        Ok(HurwitzFamily::F2 { s })
    }

    pub fn s(&self) -> u32 {
        match *self {
            HurwitzFamily::F1 { s, .. } | HurwitzFamily::F2 { s } => s,
        }
    }

    /// `c` in `α = s·e^{1/c}`: `ℓs` for F1, `s` for F2.
    pub fn exponent_denominator(&self) -> u64 {
        match *self {
            HurwitzFamily::F1 { l, s } => l as u64 * s as u64,
            HurwitzFamily::F2 { s } => s as u64,
        }
    }

    pub fn exponent(&self) -> Rational {
        ratio(1, self.exponent_denominator() as i64)
    }

    /// The constant as an expression, `s*e^(1/c)`.
    pub fn alpha(&self) -> ConstExpr {
        ConstExpr::mul(
            ConstExpr::rational(int(self.s() as i64)),
            ConstExpr::exp(ConstExpr::rational(self.exponent())),
        )
    }

    pub fn stream(&self) -> HurwitzStream {
        HurwitzStream {
            family: *self,
            index: 0,
        }
    }
}

/// Infinite stream of partial quotients of a [`HurwitzFamily`].
#[derive(Debug, Clone)]
pub struct HurwitzStream {
    family: HurwitzFamily,
    index: u64,
}

impl Iterator for HurwitzStream {
    type Item = BigInt;

    fn next(&mut self) -> Option<BigInt> {
        let n = self.index;
        self.index += 1;
        let s = self.family.s() as u64;
        let value: u64 = match self.family {
            HurwitzFamily::F1 { l, .. } => {
                if n == 0 {
                    s
                } else {
                    let k = (n - 1) / 3 + 1;
                    match (n - 1) % 3 {
                        0 => (2 * k - 1) * l as u64 - 1,
                        1 => 1,
                        _ => 2 * s - 1,
                    }
                }
            }
            HurwitzFamily::F2 { .. } => {
                if n == 0 {
                    s + 1
                } else {
                    let k = (n - 1) / 3 + 1;
                    match (n - 1) % 3 {
                        0 => 2 * s - 1,
                        1 => 2 * k,
                        _ => 1,
                    }
                }
            }
        };
        Some(BigInt::from(value))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contfrac::extract_cf;
    use alloc::vec::Vec;

    fn take(f: HurwitzFamily, n: usize) -> Vec<i64> {
        f.stream().take(n).map(|b| b.try_into().unwrap()).collect()
    }

    #[test]
    fn f2_with_s_one_is_euler() {
        assert_eq!(
            take(HurwitzFamily::f2(1).unwrap(), 9),
            [2, 1, 2, 1, 1, 4, 1, 1, 6]
        );
    }

    #[test]
    fn f1_l2_s1_is_sqrt_e() {
        let f = HurwitzFamily::f1(2, 1).unwrap();
        assert_eq!(take(f, 10), [1, 1, 1, 1, 5, 1, 1, 9, 1, 1]);
        let extracted = extract_cf(&crate::parse("e^(1/2)").unwrap(), 10).unwrap();
        let ex: Vec<i64> = extracted.terms.iter().map(|b| b.try_into().unwrap()).collect();
        assert_eq!(ex, take(f, 10));
    }

    #[test]
    fn invalid_parameters() {
        assert!(HurwitzFamily::f1(1, 1).is_err());
        assert!(HurwitzFamily::f1(2, 0).is_err());
        assert!(HurwitzFamily::f2(0).is_err());
    }

    #[test]
    fn alpha_prints_as_scaled_power() {
        let f = HurwitzFamily::f1(3, 2).unwrap();
        assert_eq!(alloc::format!("{}", f.alpha()), "(2 * e^(1/6))");
    }
}
