//! A small language of real constants.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := '-' factor | atom ('^' '(' rational ')')?
//! atom   := number | 'e' | 'exp(' expr ')' | 'sqrt(' expr ')'
//!         | 'sin(' expr ')' | 'cos(' expr ')' | '(' expr ')'
//! ```
//!
//! Numbers are integers or exact decimals (`0.25` is `1/4`). A quotient of
//! two literals is folded into a single rational literal, so `1/6` is one
//! node. `e^(p/q)` and `exp(...)^(p/q)` become an [`ConstExpr::Exp`] node;
//! other bases accept integer exponents only and expand to products.
//! Hyperbolic constants are written through `exp`, e.g. `tanh(1/2)` is
//! `(e^(1)-1)/(e^(1)+1)`.

mod ast;
mod eval;
mod parser;

pub use ast::ConstExpr;
pub use eval::eval_enclosure;
pub use parser::parse;
