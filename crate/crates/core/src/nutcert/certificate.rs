use std::fmt;

use num_bigint::BigInt;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::polyz::IntPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Degree {
    Regular(usize),
    Irregular,
}

impl Serialize for Degree {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Degree::Regular(d) => s.serialize_u64(*d as u64),
            Degree::Irregular => s.serialize_str("irregular"),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::Regular(d) => write!(f, "{d}"),
            Degree::Irregular => f.write_str("irregular"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    DirectKernel,
    CirculantCyclotomic,
    ProductPolynomial,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::DirectKernel => "direct-kernel",
            Route::CirculantCyclotomic => "circulant-cyclotomic",
            Route::ProductPolynomial => "product-polynomial",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FailureReason {
    /// `cyclotomic_orders` lists the annihilating root orders on the
    /// circulant route.
    NullityNotOne {
        cyclotomic_orders: Option<Vec<u64>>,
    },
    KernelHasZero {
        zero_entries: usize,
    },
    /// `witness` is the gcd of `chi_G(x)` and `chi_H(-x)` with the factor `x`
    /// removed; its roots are the offending eigenvalues.
    SharedNonzeroEigenvalue {
        witness: IntPoly,
    },
}

impl FailureReason {
    pub fn tag(&self) -> &'static str {
        match self {
            FailureReason::NullityNotOne { .. } => "nullity_not_one",
            FailureReason::KernelHasZero { .. } => "kernel_has_zero",
            FailureReason::SharedNonzeroEigenvalue { .. } => "shared_nonzero_eigenvalue",
        }
    }
}

impl fmt::Display for FailureReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())?;
        match self {
            FailureReason::NullityNotOne {
                cyclotomic_orders: Some(orders),
            } => {
                let list: Vec<String> = orders.iter().map(u64::to_string).collect();
                write!(f, ": cyclotomic orders {}", list.join(","))
            }
            FailureReason::NullityNotOne { .. } => Ok(()),
            FailureReason::KernelHasZero { zero_entries } => {
                write!(f, ": {zero_entries} zero entries")
            }
            FailureReason::SharedNonzeroEigenvalue { witness } => write!(f, ": {witness}"),
        }
    }
}

/// Verdict plus the evidence behind it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NutCertificate {
    pub is_nut: bool,
    pub order: usize,
    pub degree: Degree,
    pub nullity: usize,
    pub kernel_vector: Option<Vec<BigInt>>,
    pub route: Route,
    pub failure_reason: Option<FailureReason>,
}

impl NutCertificate {
    /// Flat JSON object; kernel entries are decimal strings.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("certificate serializes")
    }
}

impl Serialize for NutCertificate {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("NutCertificate", 7)?;
        st.serialize_field("is_nut", &self.is_nut)?;
        st.serialize_field("order", &self.order)?;
        st.serialize_field("degree", &self.degree)?;
        st.serialize_field("nullity", &self.nullity)?;
        let kv: Option<Vec<String>> = self
            .kernel_vector
            .as_ref()
            .map(|v| v.iter().map(BigInt::to_string).collect());
        st.serialize_field("kernel_vector", &kv)?;
        st.serialize_field("route", &self.route)?;
        st.serialize_field(
            "failure_reason",
            &self.failure_reason.as_ref().map(ToString::to_string),
        )?;
        st.end()
    }
}

impl fmt::Display for NutCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "nut graph: {}", if self.is_nut { "yes" } else { "no" })?;
        writeln!(f, "order: {}", self.order)?;
        writeln!(f, "degree: {}", self.degree)?;
        writeln!(f, "nullity: {}", self.nullity)?;
        writeln!(f, "route: {}", self.route)?;
        if let Some(v) = &self.kernel_vector {
            let entries: Vec<String> = v.iter().map(BigInt::to_string).collect();
            writeln!(f, "kernel vector: [{}]", entries.join(", "))?;
        }
        if let Some(r) = &self.failure_reason {
            writeln!(f, "failure: {r}")?;
        }
        Ok(())
    }
}
