use alloc::boxed::Box;
use core::fmt;

use num_traits::{One, Signed};

use crate::numerics::Rational;

/// Expression tree of a real constant.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ConstExpr {
    Rational(Rational),
    Exp(Box<ConstExpr>),
    Sqrt(Box<ConstExpr>),
    Sin(Box<ConstExpr>),
    Cos(Box<ConstExpr>),
    Neg(Box<ConstExpr>),
    Add(Box<ConstExpr>, Box<ConstExpr>),
    Sub(Box<ConstExpr>, Box<ConstExpr>),
    Mul(Box<ConstExpr>, Box<ConstExpr>),
    Div(Box<ConstExpr>, Box<ConstExpr>),
}

impl ConstExpr {
    pub fn rational(r: Rational) -> Self {
        ConstExpr::Rational(r)
    }

    pub fn integer(n: i64) -> Self {
        ConstExpr::Rational(crate::numerics::int(n))
    }

    /// `e` itself.
    pub fn e() -> Self {
        ConstExpr::Exp(Box::new(ConstExpr::Rational(Rational::one())))
    }

    pub fn exp(x: ConstExpr) -> Self {
        ConstExpr::Exp(Box::new(x))
    }

    pub fn sqrt(x: ConstExpr) -> Self {
        ConstExpr::Sqrt(Box::new(x))
    }

    pub fn sin(x: ConstExpr) -> Self {
        ConstExpr::Sin(Box::new(x))
    }

    pub fn cos(x: ConstExpr) -> Self {
        ConstExpr::Cos(Box::new(x))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(x: ConstExpr) -> Self {
        ConstExpr::Neg(Box::new(x))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(a: ConstExpr, b: ConstExpr) -> Self {
        ConstExpr::Add(Box::new(a), Box::new(b))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn sub(a: ConstExpr, b: ConstExpr) -> Self {
        ConstExpr::Sub(Box::new(a), Box::new(b))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(a: ConstExpr, b: ConstExpr) -> Self {
        ConstExpr::Mul(Box::new(a), Box::new(b))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn div(a: ConstExpr, b: ConstExpr) -> Self {
        ConstExpr::Div(Box::new(a), Box::new(b))
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            ConstExpr::Rational(r) => Some(r),
            _ => None,
        }
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, r: &Rational, in_exponent: bool) -> fmt::Result {
    if r.is_integer() && (in_exponent || !r.is_negative()) {
        return write!(f, "{}", r.numer());
    }
    if in_exponent {
        write!(f, "{}/{}", r.numer(), r.denom())
    } else if r.is_negative() {
        write!(f, "(-{}/{})", -r.numer(), r.denom())
    } else {
        write!(f, "({}/{})", r.numer(), r.denom())
    }
}

/// Prints an expression that [`parse`](super::parse) reads back into the
/// same tree.
impl fmt::Display for ConstExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstExpr::Rational(r) => write_rational(f, r, false),
            ConstExpr::Exp(x) => match x.as_ref() {
                ConstExpr::Rational(r) => {
                    f.write_str("e^(")?;
                    write_rational(f, r, true)?;
                    f.write_str(")")
                }
                other => write!(f, "exp({other})"),
            },
            ConstExpr::Sqrt(x) => write!(f, "sqrt({x})"),
            ConstExpr::Sin(x) => write!(f, "sin({x})"),
            ConstExpr::Cos(x) => write!(f, "cos({x})"),
            ConstExpr::Neg(x) => write!(f, "-({x})"),
            ConstExpr::Add(a, b) => write!(f, "({a} + {b})"),
            ConstExpr::Sub(a, b) => write!(f, "({a} - {b})"),
            ConstExpr::Mul(a, b) => write!(f, "({a} * {b})"),
            ConstExpr::Div(a, b) => write!(f, "({a} / {b})"),
        }
    }
}
