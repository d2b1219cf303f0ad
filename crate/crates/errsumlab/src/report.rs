use std::collections::BTreeMap;

use errsumlab_core::numerics::{agreed_digits, decimal_truncated};
use errsumlab_core::{Enclosure, IdentityReport};
use serde::{Deserialize, Serialize};

/// Extra digits printed past the requested ones for interval endpoints.
const ENDPOINT_EXTRA_DIGITS: u32 = 5;

/// Interval endpoints as decimal strings, rounded outward.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Interval {
    pub lo: String,
    pub hi: String,
}

impl Interval {
    pub fn new(enc: &Enclosure, places: u32) -> Self {
        let (lo, hi) = enc.decimal_bounds(places);
        Interval { lo, hi }
    }
}

/// The midpoint truncated to the digits the interval actually pins down,
/// and never more than `max_places`. A digit is only printed when both
/// endpoints truncate to it as well.
pub fn verified_decimal(enc: &Enclosure, max_places: u32) -> String {
    let mut places = agreed_digits(&enc.width()).min(max_places);
    while places > 0 && decimal_truncated(enc.lo(), places) != decimal_truncated(enc.hi(), places) {
        places -= 1;
    }
    decimal_truncated(&enc.midpoint(), places)
}

/// Interval width rounded up, for the `±` field.
pub fn width_string(enc: &Enclosure, places: u32) -> String {
    let w = Enclosure::point(enc.width());
    w.decimal_bounds(places).1
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonReport {
    pub id: String,
    pub params: BTreeMap<String, i64>,
    pub digits: u32,
    pub lhs: Option<Interval>,
    pub rhs: Option<Interval>,
    /// Width of the hull of both sides.
    #[serde(rename = "±")]
    pub plus_minus: Option<String>,
    pub agreed_digits: u32,
    pub pass: bool,
    pub status: String,
    pub elapsed_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl From<&IdentityReport> for JsonReport {
    fn from(r: &IdentityReport) -> Self {
        let places = r.requested_digits + ENDPOINT_EXTRA_DIGITS;
        let hull = match (&r.lhs, &r.rhs) {
            (Some(a), Some(b)) => Some(a.hull(b)),
            _ => None,
        };
        JsonReport {
            id: r.id.clone(),
            params: r.params.clone(),
            digits: r.requested_digits,
            lhs: r.lhs.as_ref().map(|e| Interval::new(e, places)),
            rhs: r.rhs.as_ref().map(|e| Interval::new(e, places)),
            plus_minus: hull.as_ref().map(|h| width_string(h, places)),
            agreed_digits: r.agreed_digits,
            pass: r.pass,
            status: r.status.as_str().to_string(),
            elapsed_ms: r.elapsed.as_millis() as u64,
            note: r.note.clone(),
        }
    }
}

/// One text line per report.
pub fn text_line(r: &IdentityReport) -> String {
    let verdict = if r.pass { "PASS" } else { "FAIL" };
    let params = if r.params.is_empty() {
        "-".to_string()
    } else {
        r.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(",")
    };
    let value = match (&r.lhs, &r.rhs) {
        (Some(a), Some(b)) => verified_decimal(&a.hull(b), r.requested_digits),
        _ => "?".to_string(),
    };
    let mut line = format!(
        "{verdict} {} {params} {value} agreed={}/{} {} {}ms",
        r.id,
        r.agreed_digits,
        r.requested_digits,
        r.status,
        r.elapsed.as_millis()
    );
    if let Some(note) = &r.note {
        if !r.pass {
            line.push_str(" (");
            line.push_str(note);
            line.push(')');
        }
    }
    line
}

#[cfg(test)]
mod tests {
    use super::*;
    use errsumlab_core::identities::{verify, Params};
    use errsumlab_core::numerics::ratio;

    #[test]
    fn verified_decimal_truncates() {
        let e = Enclosure::new(ratio(16180339887498, 10_000_000_000_000), ratio(16180339887499, 10_000_000_000_000));
        assert_eq!(verified_decimal(&e, 12), "1.618033988749");
        assert_eq!(verified_decimal(&e, 5), "1.61803");
        // endpoints straddle ...749|750; the carry reaches the 11th digit too
        let s = Enclosure::new(ratio(16180339887499, 10_000_000_000_000), ratio(16180339887501, 10_000_000_000_000));
        assert_eq!(verified_decimal(&s, 12), "1.6180339887");
    }

    #[test]
    fn json_fields() {
        let r = verify("elsner_golden", &Params::new(), 12).unwrap();
        let v = serde_json::to_value(JsonReport::from(&r)).unwrap();
        for k in ["id", "params", "digits", "lhs", "rhs", "agreed_digits", "pass", "status", "elapsed_ms", "±"] {
            assert!(v.get(k).is_some(), "missing {k}");
        }
        assert_eq!(v["status"], "proved");
        assert!(v["lhs"]["lo"].as_str().unwrap().starts_with("1.618033988749"));
    }

    #[test]
    fn text_line_shape() {
        let r = verify("elsner_golden", &Params::new(), 12).unwrap();
        let line = text_line(&r);
        assert!(line.starts_with("PASS elsner_golden - 1.6180339887"), "{line}");
        assert!(line.contains(" proved "), "{line}");
    }
}
