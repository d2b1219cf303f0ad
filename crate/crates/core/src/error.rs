use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::numerics::Enclosure;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The input lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The escalation cap was reached before the target width was met.
    #[error("precision failure: could not reach 10^-{digits} after escalation ({reason})")]
    Precision {
        digits: u32,
        reason: String,
        /// Best valid enclosure found, if any.
        best: Option<Box<Enclosure>>,
    },

    #[error("syntax error at offset {offset}: expected {}, found {found}", ExpectedList(.expected))]
    Syntax {
        offset: usize,
        expected: Vec<&'static str>,
        found: String,
    },

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("invalid parameter for `{id}`: {message}")]
    InvalidParameter { id: String, message: String },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn precision(digits: u32, reason: impl Into<String>, best: Option<Enclosure>) -> Self {
        Error::Precision {
            digits,
            reason: reason.into(),
            best: best.map(Box::new),
        }
    }

    pub fn is_precision_failure(&self) -> bool {
        matches!(self, Error::Precision { .. })
    }
}

struct ExpectedList<'a>(&'a [&'static str]);

impl fmt::Display for ExpectedList<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            [] => f.write_str("nothing"),
            [one] => f.write_str(one),
            many => {
                f.write_str("one of ")?;
                for (i, tok) in many.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    f.write_str(tok)?;
                }
                Ok(())
            }
        }
    }
}
