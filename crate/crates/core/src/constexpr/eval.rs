use crate::error::{Error, Result};
use crate::numerics::elementary_ops::{exp_of, sin_cos_of, sqrt_of};
use crate::numerics::{refine, Enclosure, Precision};

use super::ConstExpr;

/// Guard digits added to the target before the first attempt.
const EVAL_GUARD: u32 = 10;

/// Encloses the value of `expr` with width at most `10^-D`.
///
/// The tree is evaluated bottom-up with every leaf computed at a working
/// precision; if the result is too wide the working precision is doubled.
/// A divisor that still straddles zero when the cap is reached is reported
/// as a domain error.
pub fn eval_enclosure(expr: &ConstExpr, prec: Precision) -> Result<Enclosure> {
    let mut straddled = false;
    let res = refine(prec, EVAL_GUARD, |wp| {
        let r = eval_at(expr, wp);
        straddled = matches!(&r, Err(Error::Precision { reason, .. }) if reason == STRADDLE);
        r
    });
    match res {
        Err(Error::Precision { .. }) if straddled => {
            Err(Error::domain("division by an enclosure containing 0"))
        }
        other => other,
    }
}

const STRADDLE: &str = "divisor straddles zero";

fn eval_at(expr: &ConstExpr, wp: Precision) -> Result<Enclosure> {
    let out = match expr {
        ConstExpr::Rational(r) => return Ok(Enclosure::point(r.clone())),
        ConstExpr::Exp(x) => exp_of(&eval_at(x, wp)?, wp)?,
        ConstExpr::Sqrt(x) => sqrt_of(&eval_at(x, wp)?, wp)?,
        ConstExpr::Sin(x) => sin_cos_of(&eval_at(x, wp)?, wp)?.0,
        ConstExpr::Cos(x) => sin_cos_of(&eval_at(x, wp)?, wp)?.1,
        ConstExpr::Neg(x) => -eval_at(x, wp)?,
        ConstExpr::Add(a, b) => &eval_at(a, wp)? + &eval_at(b, wp)?,
        ConstExpr::Sub(a, b) => &eval_at(a, wp)? - &eval_at(b, wp)?,
        ConstExpr::Mul(a, b) => &eval_at(a, wp)? * &eval_at(b, wp)?,
        ConstExpr::Div(a, b) => {
            let num = eval_at(a, wp)?;
            let den = eval_at(b, wp)?;
            if den.is_point() && den.contains_zero() {
                return Err(Error::domain("division by zero"));
            }
            if den.contains_zero() {
                return Err(Error::precision(wp.digits(), STRADDLE, None));
            }
            num.checked_div(&den)?
        }
    };
    Ok(out.compact(wp))
}
