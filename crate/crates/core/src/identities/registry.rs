use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Parameter assignment, keyed by name.
pub type Params = BTreeMap<String, i64>;

/// Whether an identity is a theorem or only a numerical observation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Proved,
    Empirical,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Proved => "proved",
            Status::Empirical => "empirical",
        }
    }
}

impl core::fmt::Display for Status {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParamSpec {
    pub name: &'static str,
    pub min: i64,
    pub max: i64,
    /// Values used by the default grid.
    pub defaults: &'static [i64],
}

const PARAM_MAX: i64 = 1_000_000;

const fn param(name: &'static str, min: i64, defaults: &'static [i64]) -> ParamSpec {
    ParamSpec {
        name,
        min,
        max: PARAM_MAX,
        defaults,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Identity {
    pub id: &'static str,
    pub description: &'static str,
    pub status: Status,
    pub params: &'static [ParamSpec],
}

impl Identity {
    /// Cartesian product of the default values, in parameter order.
    pub fn default_grid(&self) -> Vec<Params> {
        let axes: Vec<(String, Vec<i64>)> = self
            .params
            .iter()
            .map(|p| (p.name.to_string(), p.defaults.to_vec()))
            .collect();
        cartesian(&axes)
    }

    /// Checks that `params` names exactly this identity's parameters, each
    /// within range.
    pub fn validate(&self, params: &Params) -> Result<()> {
        let invalid = |message: String| Error::InvalidParameter {
            id: self.id.to_string(),
            message,
        };
        for key in params.keys() {
            if !self.params.iter().any(|p| p.name == key) {
                return Err(invalid(format!("unknown parameter `{key}`")));
            }
        }
        for p in self.params {
            let v = *params
                .get(p.name)
                .ok_or_else(|| invalid(format!("missing parameter `{}`", p.name)))?;
            if v < p.min || v > p.max {
                return Err(invalid(format!(
                    "`{}` = {v} is outside {}..={}",
                    p.name, p.min, p.max
                )));
            }
        }
        Ok(())
    }
}

/// Cartesian product of named value lists; the last axis varies fastest.
pub fn cartesian(axes: &[(String, Vec<i64>)]) -> Vec<Params> {
    let mut out = vec![Params::new()];
    for (name, values) in axes {
        let mut next = Vec::with_capacity(out.len() * values.len());
        for base in &out {
            for v in values {
                let mut p = base.clone();
                p.insert(name.clone(), *v);
                next.push(p);
            }
        }
        out = next;
    }
    out
}

const L2: &[i64] = &[2, 3, 4];
const S3: &[i64] = &[1, 2, 3];

static REGISTRY: [Identity; 15] = [
    Identity {
        id: "eq1_main",
        description: "E(e) = (e/4)(-1 + 10 A(1,1)), A(1,1) = sum (-1)^n/((n+1)! (2n^2+7n+3))",
        status: Status::Proved,
        params: &[],
    },
    Identity {
        id: "thm3_f1",
        description: "E(s e^(1/(ls))) = e^(1/(ls)) sqrt(pi s/l) erf(1/sqrt(ls)) = (2/l) e^(1/(ls)) I(ls)",
        status: Status::Proved,
        params: &[param("l", 2, L2), param("s", 1, S3)],
    },
    Identity {
        id: "thm3_f2",
        description: "E(s e^(1/s)) = e^(1/s) sqrt(pi s) erf(1/sqrt(s)) + s(1 - e^(1/s)) - 1",
        status: Status::Proved,
        params: &[param("s", 1, &[1, 2, 3, 4])],
    },
    Identity {
        id: "cor4_e",
        description: "E(e) = 2e I(1) - e",
        status: Status::Proved,
        params: &[],
    },
    Identity {
        id: "cor4_epow",
        description: "E(e^(1/l)) = e^(1/l) sqrt(pi/l) erf(1/sqrt(l)) = (2/l) e^(1/l) I(l)",
        status: Status::Proved,
        params: &[param("l", 2, &[2, 3, 4, 5, 6])],
    },
    Identity {
        id: "cor5_closed",
        description: "A(l,s) = -ls/2 + (ls)^3/5 + (1/5) ls (2 - ls - (ls)^2) e^(-1/(ls)) + (4/5) I(ls)",
        status: Status::Proved,
        params: &[param("l", 1, S3), param("s", 1, S3)],
    },
    Identity {
        id: "eq2_helper",
        description: "sum (-1)^(n+1)/((n+1)! (2n+1)) = 1 - e^(-1) - 2 I(1)",
        status: Status::Proved,
        params: &[],
    },
    Identity {
        id: "eq2_easier",
        description: "E(e) = e sum (-1)^n/((n+1)! (2n+1)) - 1",
        status: Status::Proved,
        params: &[],
    },
    Identity {
        id: "eq3_othere",
        description: "E(e) = sum 2^(2n+1) n!/(2n+1)! - e",
        status: Status::Proved,
        params: &[],
    },
    Identity {
        id: "eq4_otherpow",
        description: "E(e^(1/l)) = sum 2^(2n+1) n!/(l^(n+1) (2n+1)!)",
        status: Status::Proved,
        params: &[param("l", 2, &[2, 3, 4, 5, 6])],
    },
    Identity {
        id: "elsner_sqrt7",
        description: "E(sqrt(7)) = (7 + 5 sqrt(7))/14",
        status: Status::Proved,
        params: &[],
    },
    Identity {
        id: "elsner_metallic",
        description: "E((m + sqrt(4+m^2))/2) = 1/((m + sqrt(4+m^2))/2 - 1)",
        status: Status::Proved,
        params: &[param("m", 1, &[1, 2, 3, 4, 5])],
    },
    Identity {
        id: "elsner_golden",
        description: "E((1+sqrt(5))/2) = (1+sqrt(5))/2",
        status: Status::Proved,
        params: &[],
    },
    Identity {
        id: "hetyei_cf",
        description: "4(11 sin(1/2) - 6 cos(1/2))/(53 cos(1/2) - 97 sin(1/2)) = [4; 3, 4, 4, 4, 5, 4, 6, 4, 7, 4, ...]",
        status: Status::Proved,
        params: &[],
    },
    Identity {
        id: "conj_cf",
        description: "I(1) = 3/8 + (5/4)/(3 + 9/(21 + ...)), numerators n(n+2)^2(2n-1)^2, denominators (2n+5)(n^2+n+1)",
        status: Status::Empirical,
        params: &[],
    },
];

/// Every identity, in reporting order.
pub fn registry() -> &'static [Identity] {
    &REGISTRY
}

pub fn lookup(id: &str) -> Result<&'static Identity> {
    REGISTRY
        .iter()
        .find(|i| i.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}
