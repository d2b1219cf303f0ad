use alloc::format;
use alloc::string::{String, ToString};
use core::time::Duration;

use num_bigint::BigInt;
use num_traits::One;

use crate::constexpr::eval_enclosure;
use crate::contfrac::{convergents, eval_erfint_cf, extract_cf};
use crate::error::{Error, Result};
use crate::numerics::{agreed_digits, refine, Enclosure, Precision, Rational};

use super::closed_forms as cf;
use super::error_sums as es;
use super::registry::{lookup, Params, Status};

/// Number of extracted quotients checked against the assumed pattern.
pub const HETYEI_CHECKED_QUOTIENTS: usize = 40;

/// Largest truncation depth tried for the generalized continued fraction.
pub const CONJ_MAX_TERMS: usize = 200;

#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport {
    pub id: String,
    pub params: Params,
    pub requested_digits: u32,
    /// `None` when the side could not be enclosed at all.
    pub lhs: Option<Enclosure>,
    pub rhs: Option<Enclosure>,
    pub agreed_digits: u32,
    pub pass: bool,
    pub status: Status,
    /// Left at zero here; callers with a clock fill it in.
    pub elapsed: Duration,
    pub note: Option<String>,
}

impl IdentityReport {
    /// True when the report failed because an escalation cap was hit.
    pub fn is_precision_failure(&self) -> bool {
        !self.pass && self.note.as_deref().is_some_and(|n| n.starts_with("precision failure"))
    }
}

/// Evaluates both sides of identity `id` to width `10^-digits`.
pub fn verify(id: &str, params: &Params, digits: u32) -> Result<IdentityReport> {
    verify_with(id, params, Precision::new(digits))
}

fn side<F>(prec: Precision, mut f: F) -> Result<Enclosure>
where
    F: FnMut(Precision) -> Result<Enclosure>,
{
    refine(prec, 10, |wp| Ok(f(wp)?.compact(wp)))
}

fn get(params: &Params, k: &str) -> i64 {
    params[k]
}

fn pattern_enclosure(prec: Precision) -> Result<Enclosure> {
    let tol = prec.tolerance();
    let mut prev: Option<(BigInt, BigInt)> = None;
    for c in convergents((0..).map(es::hetyei_pattern)).take(100_000) {
        if let Some((pp, qp)) = prev {
            let gap = Rational::new(BigInt::one(), &qp * &c.q);
            if gap <= tol {
                return Ok(Enclosure::spanning(Rational::new(pp, qp), c.value()));
            }
        }
        prev = Some((c.p, c.q));
    }
    Err(Error::precision(prec.digits(), "pattern convergents", None))
}

fn conj_enclosure(prec: Precision) -> Result<Enclosure> {
    let tol = prec.tolerance();
    let mut terms = 2;
    loop {
        let k = eval_erfint_cf(terms)?;
        if k.width() <= tol {
            return Ok(k);
        }
        if terms == CONJ_MAX_TERMS {
            return Err(Error::precision(
                prec.digits(),
                format!("generalized continued fraction still too wide at {CONJ_MAX_TERMS} terms"),
                Some(k),
            ));
        }
        terms = (terms * 2).min(CONJ_MAX_TERMS);
    }
}

/// Like [`verify`] with full control over the precision settings.
pub fn verify_with(id: &str, params: &Params, prec: Precision) -> Result<IdentityReport> {
    let identity = lookup(id)?;
    identity.validate(params)?;
    let mut note = None;
    let mut extra_ok = true;

    let sides: Result<(Enclosure, Enclosure)> = (|| {
        Ok(match identity.id {
            "eq1_main" => (es::error_sum(&es::e_const(), prec)?, side(prec, cf::eq1_rhs)?),
            "thm3_f1" => {
                let (l, s) = (get(params, "l"), get(params, "s"));
                (es::f1_error_sum(l, s, prec)?, side(prec, |wp| cf::thm3_f1_rhs(l, s, wp))?)
            }
            "thm3_f2" => {
                let s = get(params, "s");
                (es::f2_error_sum(s, prec)?, side(prec, |wp| cf::thm3_f2_rhs(s, wp))?)
            }
            "cor4_e" => (es::error_sum(&es::e_const(), prec)?, side(prec, cf::cor4_e_rhs)?),
            "cor4_epow" => {
                let l = get(params, "l");
                (es::error_sum(&es::e_pow_const(l), prec)?, side(prec, |wp| cf::cor4_epow_rhs(l, wp))?)
            }
            "cor5_closed" => {
                let (l, s) = (get(params, "l"), get(params, "s"));
                (
                    side(prec, |wp| cf::cor5_lhs(l, s, wp))?,
                    side(prec, |wp| cf::cor5_rhs(l, s, wp))?,
                )
            }
            "eq2_helper" => (side(prec, cf::eq2_helper_lhs)?, side(prec, cf::eq2_helper_rhs)?),
            "eq2_easier" => (es::error_sum(&es::e_const(), prec)?, side(prec, cf::eq2_easier_rhs)?),
            "eq3_othere" => (es::error_sum(&es::e_const(), prec)?, side(prec, cf::eq3_rhs)?),
            "eq4_otherpow" => {
                let l = get(params, "l");
                (es::error_sum(&es::e_pow_const(l), prec)?, side(prec, |wp| cf::eq4_rhs(l, wp))?)
            }
            "elsner_sqrt7" => (es::error_sum(&es::sqrt7_const(), prec)?, side(prec, cf::sqrt7_rhs)?),
            "elsner_metallic" => {
                let m = get(params, "m");
                (es::error_sum(&es::metallic_const(m), prec)?, side(prec, |wp| cf::metallic_rhs(m, wp))?)
            }
            "elsner_golden" => (es::error_sum(&es::golden_const(), prec)?, side(prec, cf::golden_rhs)?),
            "hetyei_cf" => {
                let expr = es::hetyei_const();
                let got = extract_cf(&expr, HETYEI_CHECKED_QUOTIENTS)?;
                let mismatch = (0..HETYEI_CHECKED_QUOTIENTS)
                    .find(|&n| got.terms.get(n) != Some(&es::hetyei_pattern(n)));
                if let Some(n) = mismatch {
                    extra_ok = false;
                    note = Some(format!("extracted quotient {n} differs from the pattern"));
                }
                (eval_enclosure(&expr, prec)?, pattern_enclosure(prec)?)
            }
            "conj_cf" => (conj_enclosure(prec)?, side(prec, cf::gauss_one)?),
            other => unreachable!("registry id `{other}` has no recipe"),
        })
    })();

    let (lhs, rhs) = match sides {
        Ok((l, r)) => (Some(l), Some(r)),
        Err(e) if e.is_precision_failure() => {
            let best = match &e {
                Error::Precision { best, .. } => best.as_deref().cloned(),
                _ => None,
            };
            note = Some(e.to_string());
            (best, None)
        }
        Err(e) => return Err(e),
    };

    let tol = prec.tolerance();
    let (agreed, pass) = match (&lhs, &rhs) {
        (Some(l), Some(r)) => {
            let agreed = agreed_digits(&l.hull(r).width());
            let pass = extra_ok && l.intersects(r) && l.width() <= tol && r.width() <= tol;
            (agreed, pass)
        }
        _ => (0, false),
    };
    if !pass && note.is_none() {
        note = Some("sides do not agree".to_string());
    }

    Ok(IdentityReport {
        id: identity.id.to_string(),
        params: params.clone(),
        requested_digits: prec.digits(),
        lhs,
        rhs,
        agreed_digits: agreed,
        pass,
        status: identity.status,
        elapsed: Duration::ZERO,
        note,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::registry;

    #[test]
    fn every_default_entry_passes_at_twenty_digits() {
        for ident in registry() {
            for params in ident.default_grid() {
                let r = verify(ident.id, &params, 20).unwrap();
                assert!(r.pass, "{} {:?}: {:?}", ident.id, params, r.note);
                assert!(r.agreed_digits >= 20, "{}", ident.id);
            }
        }
    }

    #[test]
    fn conjecture_is_reported_empirical() {
        let r = verify("conj_cf", &Params::new(), 30).unwrap();
        assert!(r.pass);
        assert_eq!(r.status, Status::Empirical);
    }

    #[test]
    fn agreement_grows_with_digits() {
        let lo = verify("elsner_golden", &Params::new(), 15).unwrap();
        let hi = verify("elsner_golden", &Params::new(), 30).unwrap();
        assert!(hi.agreed_digits >= lo.agreed_digits);
    }

    #[test]
    fn cap_hit_is_a_failed_report() {
        // far beyond what the truncation depth cap can reach
        let r = verify_with("conj_cf", &Params::new(), Precision::new(400)).unwrap();
        assert!(!r.pass);
        assert!(r.is_precision_failure());
        assert!(r.lhs.is_some() && r.rhs.is_none());
    }

    #[test]
    fn bad_requests_are_errors() {
        assert!(matches!(verify("nope", &Params::new(), 5), Err(Error::UnknownIdentity(_))));
        let p: Params = [("l".to_string(), 1), ("s".to_string(), 1)].into_iter().collect();
        assert!(matches!(verify("thm3_f1", &p, 5), Err(Error::InvalidParameter { .. })));
    }
}
