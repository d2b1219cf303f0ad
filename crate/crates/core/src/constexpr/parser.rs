use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::ConstExpr;
use crate::error::{Error, Result};
use crate::numerics::{pow10, Rational};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Number(Rational),
    Ident(String),
    Sym(char),
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Number(r) => alloc::format!("number `{r}`"),
            Tok::Ident(s) => alloc::format!("`{s}`"),
            Tok::Sym(c) => alloc::format!("`{c}`"),
            Tok::End => "end of input".to_string(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (at, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() || c == '.' {
            let mut int_digits = String::new();
            let mut frac_digits = String::new();
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                int_digits.push(chars[i].1);
                i += 1;
            }
            if i < chars.len() && chars[i].1 == '.' {
                i += 1;
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    frac_digits.push(chars[i].1);
                    i += 1;
                }
                if frac_digits.is_empty() {
                    let off = chars.get(i).map_or(text.len(), |p| p.0);
                    let found = chars.get(i).map_or("end of input".to_string(), |p| {
                        alloc::format!("`{}`", p.1)
                    });
                    return Err(Error::Syntax {
                        offset: off,
                        expected: vec!["digit"],
                        found,
                    });
                }
            }
            let digits = alloc::format!("{int_digits}{frac_digits}");
            let value: BigInt = digits.parse().expect("lexed digits");
            let r = Rational::new(value, pow10(frac_digits.len() as u32));
            out.push((Tok::Number(r), at));
        } else if c.is_ascii_alphabetic() {
            let mut word = String::new();
            while i < chars.len() && chars[i].1.is_ascii_alphanumeric() {
                word.push(chars[i].1);
                i += 1;
            }
            out.push((Tok::Ident(word), at));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Sym(c), at));
            i += 1;
        } else {
            return Err(Error::Syntax {
                offset: at,
                expected: vec!["number", "identifier", "operator"],
                found: alloc::format!("`{c}`"),
            });
        }
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

const FUNCTIONS: [&str; 4] = ["exp", "sqrt", "sin", "cos"];

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &[&'static str]) -> Result<T> {
        Err(Error::Syntax {
            offset: self.offset(),
            expected: expected.to_vec(),
            found: self.peek().describe(),
        })
    }

    fn expect(&mut self, c: char, label: &'static str) -> Result<()> {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            Ok(())
        } else {
            self.fail(&[label])
        }
    }

    fn expr(&mut self) -> Result<ConstExpr> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Sym('+') => {
                    self.bump();
                    lhs = ConstExpr::add(lhs, self.term()?);
                }
                Tok::Sym('-') => {
                    self.bump();
                    lhs = ConstExpr::sub(lhs, self.term()?);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<ConstExpr> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                Tok::Sym('*') => {
                    self.bump();
                    lhs = ConstExpr::mul(lhs, self.factor()?);
                }
                Tok::Sym('/') => {
                    self.bump();
                    lhs = fold_div(lhs, self.factor()?);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> Result<ConstExpr> {
        if *self.peek() == Tok::Sym('-') {
            self.bump();
            return Ok(match self.factor()? {
                ConstExpr::Rational(r) => ConstExpr::Rational(-r),
                other => ConstExpr::neg(other),
            });
        }
        let base = self.atom()?;
        if *self.peek() != Tok::Sym('^') {
            return Ok(base);
        }
        self.bump();
        self.expect('(', "`(`")?;
        let exp_at = self.offset();
        let exponent = self.rational_literal()?;
        self.expect(')', "`)`")?;
        power(base, exponent).ok_or(Error::Syntax {
            offset: exp_at,
            expected: vec!["integer exponent (only `e` takes fractional exponents)"],
            found: "fractional exponent".to_string(),
        })
    }

    /// `'-'? number ('/' '-'? number)?`
    fn rational_literal(&mut self) -> Result<Rational> {
        let num = self.signed_number()?;
        if *self.peek() != Tok::Sym('/') {
            return Ok(num);
        }
        self.bump();
        let at = self.offset();
        let den = self.signed_number()?;
        if den.is_zero() {
            return Err(Error::Syntax {
                offset: at,
                expected: vec!["nonzero denominator"],
                found: "0".to_string(),
            });
        }
        Ok(num / den)
    }

    fn signed_number(&mut self) -> Result<Rational> {
        let negative = *self.peek() == Tok::Sym('-');
        if negative {
            self.bump();
        }
        match self.peek().clone() {
            Tok::Number(r) => {
                self.bump();
                Ok(if negative { -r } else { r })
            }
            _ => self.fail(&["rational literal"]),
        }
    }

    fn atom(&mut self) -> Result<ConstExpr> {
        match self.peek().clone() {
            Tok::Number(r) => {
                self.bump();
                Ok(ConstExpr::Rational(r))
            }
            Tok::Sym('(') => {
                self.bump();
                let inner = self.expr()?;
                self.expect(')', "`)`")?;
                Ok(inner)
            }
            Tok::Ident(name) if name == "e" => {
                self.bump();
                Ok(ConstExpr::e())
            }
            Tok::Ident(name) if FUNCTIONS.contains(&name.as_str()) => {
                self.bump();
                self.expect('(', "`(`")?;
                let arg = self.expr()?;
                self.expect(')', "`)`")?;
                Ok(match name.as_str() {
                    "exp" => ConstExpr::exp(arg),
                    "sqrt" => ConstExpr::sqrt(arg),
                    "sin" => ConstExpr::sin(arg),
                    _ => ConstExpr::cos(arg),
                })
            }
            _ => self.fail(&["number", "`e`", "`exp(`", "`sqrt(`", "`sin(`", "`cos(`", "`(`"]),
        }
    }
}

/// A quotient of two literals is itself a literal.
fn fold_div(a: ConstExpr, b: ConstExpr) -> ConstExpr {
    match (a, b) {
        (ConstExpr::Rational(x), ConstExpr::Rational(y)) if !y.is_zero() => {
            ConstExpr::Rational(x / y)
        }
        (a, b) => ConstExpr::div(a, b),
    }
}

fn power(base: ConstExpr, exponent: Rational) -> Option<ConstExpr> {
    match base {
        ConstExpr::Exp(inner) => Some(match *inner {
            ConstExpr::Rational(r) => ConstExpr::exp(ConstExpr::Rational(r * exponent)),
            other => ConstExpr::exp(ConstExpr::mul(other, ConstExpr::Rational(exponent))),
        }),
        _ if !exponent.is_integer() => None,
        ConstExpr::Rational(r) if !(r.is_zero() && exponent < Rational::zero()) => {
            let k: i32 = exponent.to_integer().try_into().ok()?;
            Some(ConstExpr::Rational(num_traits::Pow::pow(&r, k)))
        }
        other => {
            let k: i64 = exponent.to_integer().try_into().ok()?;
            if k == 0 {
                return Some(ConstExpr::Rational(Rational::one()));
            }
            let mut acc = other.clone();
            for _ in 1..k.unsigned_abs() {
                acc = ConstExpr::Mul(Box::new(acc), Box::new(other.clone()));
            }
            Some(if k < 0 {
                fold_div(ConstExpr::Rational(Rational::one()), acc)
            } else {
                acc
            })
        }
    }
}

/// Parses the constant-expression language described in the
/// [module docs](super).
pub fn parse(text: &str) -> Result<ConstExpr> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return p.fail(&["operator", "end of input"]);
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{int, ratio};

    fn lit(n: i64, d: i64) -> ConstExpr {
        ConstExpr::Rational(ratio(n, d))
    }

    #[test]
    fn bare_e_is_exp_one() {
        assert_eq!(parse("e").unwrap(), ConstExpr::exp(lit(1, 1)));
    }

    #[test]
    fn scaled_power_of_e() {
        assert_eq!(
            parse("2*e^(1/6)").unwrap(),
            ConstExpr::mul(lit(2, 1), ConstExpr::exp(lit(1, 6)))
        );
    }

    #[test]
    fn golden_ratio_shape() {
        assert_eq!(
            parse("(1+sqrt(5))/2").unwrap(),
            ConstExpr::div(
                ConstExpr::add(lit(1, 1), ConstExpr::sqrt(lit(5, 1))),
                lit(2, 1)
            )
        );
    }

    #[test]
    fn dangling_caret_reports_offset() {
        match parse("e^") {
            Err(Error::Syntax { offset, expected, .. }) => {
                assert_eq!(offset, 2);
                assert_eq!(expected, ["`(`"]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn whitespace_is_ignored() {
        assert_eq!(parse(" sqrt ( 7 ) ").unwrap(), parse("sqrt(7)").unwrap());
    }

    #[test]
    fn decimals_are_exact() {
        assert_eq!(parse("0.25").unwrap(), lit(1, 4));
        assert_eq!(parse("1.5e^(1)").ok(), None);
        assert_eq!(parse("1.5*e").unwrap(), ConstExpr::mul(lit(3, 2), ConstExpr::e()));
    }

    #[test]
    fn literal_quotients_fold() {
        assert_eq!(parse("sin(1/2)").unwrap(), ConstExpr::sin(lit(1, 2)));
        assert_eq!(parse("-1/2").unwrap(), lit(-1, 2));
        assert_eq!(parse("1/2/3").unwrap(), lit(1, 6));
    }

    #[test]
    fn exponent_rules() {
        assert_eq!(parse("e^(-1/2)").unwrap(), ConstExpr::exp(lit(-1, 2)));
        assert_eq!(parse("(e^(1/3))^(3)").unwrap(), ConstExpr::exp(lit(1, 1)));
        assert_eq!(parse("exp(1/2)").unwrap(), ConstExpr::exp(lit(1, 2)));
        assert_eq!(parse("3^(2)").unwrap(), ConstExpr::Rational(int(9)));
        assert_eq!(
            parse("sqrt(2)^(2)").unwrap(),
            ConstExpr::mul(ConstExpr::sqrt(lit(2, 1)), ConstExpr::sqrt(lit(2, 1)))
        );
        assert!(matches!(parse("sqrt(2)^(1/2)"), Err(Error::Syntax { offset: 9, .. })));
        assert!(matches!(parse("e^(sqrt(2))"), Err(Error::Syntax { offset: 3, .. })));
    }

    #[test]
    fn syntax_errors() {
        assert!(matches!(parse(""), Err(Error::Syntax { offset: 0, .. })));
        assert!(matches!(parse("1 +"), Err(Error::Syntax { offset: 3, .. })));
        assert!(matches!(parse("(1"), Err(Error::Syntax { offset: 2, .. })));
        assert!(matches!(parse("1 2"), Err(Error::Syntax { offset: 2, .. })));
        assert!(matches!(parse("log(2)"), Err(Error::Syntax { offset: 0, .. })));
        assert!(matches!(parse("2 $ 3"), Err(Error::Syntax { offset: 2, .. })));
        assert!(matches!(parse("e^(1/0)"), Err(Error::Syntax { offset: 5, .. })));
    }

    #[test]
    fn display_reparses_to_same_tree() {
        for text in [
            "e",
            "2*e^(1/6)",
            "(1+sqrt(5))/2",
            "4*(11*sin(1/2)-6*cos(1/2))/(53*cos(1/2)-97*sin(1/2))",
            "-sqrt(3) - -2/7",
            "exp(sqrt(2))^(-3/2)",
            "e^(-1)",
        ] {
            let ast = parse(text).unwrap();
            let again = parse(&ast.to_string()).unwrap();
            assert_eq!(ast, again, "{text} -> {ast}");
        }
    }
}
