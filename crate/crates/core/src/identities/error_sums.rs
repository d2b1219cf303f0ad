//! Left-hand sides: constants whose error sum is taken through the
//! continued-fraction machinery.

use num_bigint::BigInt;

use crate::constexpr::ConstExpr;
use crate::contfrac::HurwitzFamily;
use crate::error::Result;
use crate::errorsum::error_sum_abs;
use crate::numerics::{ratio, Enclosure, Precision};

pub fn e_const() -> ConstExpr {
    ConstExpr::e()
}

pub fn e_pow_const(l: i64) -> ConstExpr {
    ConstExpr::exp(ConstExpr::rational(ratio(1, l)))
}

pub fn sqrt7_const() -> ConstExpr {
    ConstExpr::sqrt(ConstExpr::integer(7))
}

/// `(m + √(4+m²))/2`.
pub fn metallic_const(m: i64) -> ConstExpr {
    ConstExpr::div(
        ConstExpr::add(ConstExpr::integer(m), ConstExpr::sqrt(ConstExpr::integer(4 + m * m))),
        ConstExpr::integer(2),
    )
}

pub fn golden_const() -> ConstExpr {
    metallic_const(1)
}

/// `4(11 sin(1/2) − 6 cos(1/2)) / (53 cos(1/2) − 97 sin(1/2))`.
pub fn hetyei_const() -> ConstExpr {
    let half = || ConstExpr::rational(ratio(1, 2));
    let sin = || ConstExpr::sin(half());
    let cos = || ConstExpr::cos(half());
    let lin = |a: i64, x: ConstExpr, b: i64, y: ConstExpr| {
        ConstExpr::sub(ConstExpr::mul(ConstExpr::integer(a), x), ConstExpr::mul(ConstExpr::integer(b), y))
    };
    ConstExpr::div(
        ConstExpr::mul(ConstExpr::integer(4), lin(11, sin(), 6, cos())),
        lin(53, cos(), 97, sin()),
    )
}

/// Assumed quotients of [`hetyei_const`]: `a₀ = 4`, `a_{2k+1} = k + 3`,
/// `a_{2k+2} = 4`.
pub fn hetyei_pattern(n: usize) -> BigInt {
    if n % 2 == 1 {
        BigInt::from((n - 1) / 2 + 3)
    } else {
        BigInt::from(4)
    }
}

pub fn error_sum(expr: &ConstExpr, prec: Precision) -> Result<Enclosure> {
    Ok(error_sum_abs(expr, prec)?.value)
}

pub fn f1_error_sum(l: i64, s: i64, prec: Precision) -> Result<Enclosure> {
    let f = HurwitzFamily::f1(l as u32, s as u32)?;
    error_sum(&f.alpha(), prec)
}

pub fn f2_error_sum(s: i64, prec: Precision) -> Result<Enclosure> {
    let f = HurwitzFamily::f2(s as u32)?;
    error_sum(&f.alpha(), prec)
}
