//! Closed-form order/degree sets for regular, circulant, vertex-transitive
//! and Cayley nut graphs.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `d`-regular nut graphs for a fixed `3 <= d <= 12`.
    Reg(u32),
    Circ,
    Vt,
    Cay,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Reg(k) => write!(f, "reg{k}"),
            Family::Circ => f.write_str("circ"),
            Family::Vt => f.write_str("vt"),
            Family::Cay => f.write_str("cay"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "circ" => Ok(Family::Circ),
            "vt" => Ok(Family::Vt),
            "cay" => Ok(Family::Cay),
            _ => s
                .strip_prefix("reg")
                .and_then(|k| k.parse::<u32>().ok())
                .filter(|k| (3..=12).contains(k))
                .map(Family::Reg)
                .ok_or_else(|| {
                    Error::InvalidParameters(format!(
                        "unknown family '{s}' (expected reg3..reg12, circ, vt or cay)"
                    ))
                }),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FeasibilityQuery {
    family: Family,
    d: u64,
    n: u64,
}

impl FeasibilityQuery {
    pub fn new(family: Family, d: u64, n: u64) -> Result<Self> {
        if d == 0 || n == 0 {
            return Err(Error::InvalidParameters("degree and order must be positive".into()));
        }
        if let Family::Reg(k) = family {
            if !(3..=12).contains(&k) {
                return Err(Error::InvalidParameters(format!("reg{k} is not a known family")));
            }
            if u64::from(k) != d {
                return Err(Error::InvalidParameters(format!(
                    "family reg{k} fixes the degree to {k}, got {d}"
                )));
            }
        }
        Ok(FeasibilityQuery { family, d, n })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn degree(&self) -> u64 {
        self.d
    }

    pub fn order(&self) -> u64 {
        self.n
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Member,
    NonMember,
    UnknownBeyondTheorems,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Member => "member",
            Verdict::NonMember => "non-member",
            Verdict::UnknownBeyondTheorems => "unknown-beyond-theorems",
        })
    }
}

fn verdict(b: bool) -> Verdict {
    if b {
        Verdict::Member
    } else {
        Verdict::NonMember
    }
}

fn regular(d: u64, n: u64) -> bool {
    let even = n.is_multiple_of(2);
    match d {
        3 => n == 12 || (even && n >= 18),
        4 => matches!(n, 8 | 10 | 12) || n >= 14,
        5 => even && n >= 10,
        6 => n >= 12,
        7 => even && n >= 12,
        8 => n == 12 || n >= 14,
        9 => even && n >= 16,
        10 => n >= 15,
        11 => even && n >= 16,
        12 => n >= 16,
        _ => unreachable!("regular family degree checked on construction"),
    }
}

fn circulant(d: u64, n: u64) -> bool {
    let even = n.is_multiple_of(2);
    if !d.is_multiple_of(4) {
        false
    } else if d % 8 == 4 {
        even && n >= d + 4
    } else if d == 8 {
        n == 14 || (even && n >= 18)
    } else {
        even && n >= d + 6
    }
}

fn vertex_transitive(d: u64, n: u64) -> Verdict {
    match d % 4 {
        0 => verdict(n.is_multiple_of(2) && n >= d + 4),
        // Regular nut graphs of degree 2 do not exist: cycles have nullity 0 or 2.
        2 if d == 2 => Verdict::NonMember,
        2 if !n.is_multiple_of(4) || n < d + 6 => Verdict::NonMember,
        // Circ(m, ...) □ K2 with m = n/2 ≡ 2 (mod 4), m >= 4t + 6, d = 4t + 2.
        2 if n % 8 == 4 && n >= 2 * d + 8 => Verdict::Member,
        2 => Verdict::UnknownBeyondTheorems,
        _ => Verdict::NonMember,
    }
}

pub fn feasible(q: &FeasibilityQuery) -> Verdict {
    let (d, n) = (q.d, q.n);
    match q.family {
        Family::Reg(_) => verdict(regular(d, n)),
        Family::Circ => verdict(circulant(d, n)),
        Family::Vt | Family::Cay => vertex_transitive(d, n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ask(family: &str, d: u64, n: u64) -> Verdict {
        feasible(&FeasibilityQuery::new(family.parse().unwrap(), d, n).unwrap())
    }

    #[test]
    fn family_names() {
        assert_eq!("reg7".parse::<Family>().unwrap(), Family::Reg(7));
        assert!("reg2".parse::<Family>().is_err());
        assert!("reg13".parse::<Family>().is_err());
        assert!("torus".parse::<Family>().is_err());
        assert_eq!(Family::Reg(12).to_string(), "reg12");
    }

    #[test]
    fn query_validation() {
        assert!(FeasibilityQuery::new(Family::Reg(3), 4, 12).is_err());
        assert!(FeasibilityQuery::new(Family::Circ, 0, 12).is_err());
        assert!(FeasibilityQuery::new(Family::Circ, 4, 0).is_err());
    }

    #[test]
    fn vertex_transitive_degree_two_mod_four() {
        assert_eq!(ask("vt", 6, 20), Verdict::Member);
        assert_eq!(ask("cay", 6, 28), Verdict::Member);
        assert_eq!(ask("vt", 6, 24), Verdict::UnknownBeyondTheorems);
        assert_eq!(ask("vt", 6, 12), Verdict::UnknownBeyondTheorems);
        assert_eq!(ask("vt", 6, 10), Verdict::NonMember);
        assert_eq!(ask("vt", 6, 18), Verdict::NonMember);
        assert_eq!(ask("vt", 2, 12), Verdict::NonMember);
        assert_eq!(ask("cay", 5, 20), Verdict::NonMember);
    }

    #[test]
    fn circulant_members_have_degree_divisible_by_four() {
        for d in 1..=40 {
            for n in 1..=80 {
                if ask("circ", d, n) == Verdict::Member {
                    assert!(d % 4 == 0 && n % 2 == 0, "({d}, {n})");
                }
            }
        }
    }
}
