//! Regular and generalized continued fractions.

mod convergents;
mod extract;
mod generalized;
mod hurwitz;

pub use convergents::{convergents, convergents_from_quotients, Convergent, Convergents};
pub use extract::{
    extract_cf, extract_cf_with_cap, quotients_of_enclosure, quotients_of_rational, CertifiedQuotients,
    PartialQuotients, StopReason, EXTRACTION_MAX_DOUBLINGS,
};
pub use generalized::{
    erfint_denominator, erfint_numerator, eval_erfint_cf, eval_generalized_cf,
    eval_generalized_cf_slices, ERFINT_OFFSET,
};
pub use hurwitz::{HurwitzFamily, HurwitzStream};
