use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use super::d_family;
use crate::error::{Error, Result};
use crate::exactla::charpoly;
use crate::graphcore::{cartesian_product, named_graph, CirculantSpec, NamedGraph};
use crate::nutcert::{
    circulant_charpoly, circulant_is_nut, is_nut, product_polynomial_certificate,
    NutCertificate, ProductStrategy,
};
use crate::polyz::IntPoly;

/// Products of order above this use the polynomial route by default.
pub const DIRECT_ORDER_THRESHOLD: usize = 1500;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    /// `D(4t+6, t) □ F5`.
    I,
    /// `D(4t+6, t) □ F3`, `t ≢ 0 (mod 3)`.
    Ii,
    /// `D(4t+10, t) □ F3`, `t ≡ 0 (mod 3)`.
    Iii,
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "i" => Ok(Variant::I),
            "ii" => Ok(Variant::Ii),
            "iii" => Ok(Variant::Iii),
            _ => Err(Error::InvalidParameters(format!(
                "unknown variant '{s}' (expected i, ii or iii)"
            ))),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::I => "i",
            Variant::Ii => "ii",
            Variant::Iii => "iii",
        })
    }
}

impl Variant {
    pub fn admits(self, t: u64) -> bool {
        t >= 1
            && match self {
                Variant::I => true,
                Variant::Ii => !t.is_multiple_of(3),
                Variant::Iii => t.is_multiple_of(3),
            }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConjectureCase {
    variant: Variant,
    t: u64,
}

impl ConjectureCase {
    pub fn new(variant: Variant, t: u64) -> Result<Self> {
        if !variant.admits(t) {
            return Err(Error::InvalidParameters(format!(
                "variant {variant} does not apply to t = {t}"
            )));
        }
        Ok(ConjectureCase { variant, t })
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    pub fn circulant_order(&self) -> usize {
        let t = self.t as usize;
        match self.variant {
            Variant::Iii => 4 * t + 10,
            _ => 4 * t + 6,
        }
    }

    pub fn factor(&self) -> NamedGraph {
        match self.variant {
            Variant::I => NamedGraph::F5,
            _ => NamedGraph::FruchtF3,
        }
    }

    pub fn expected_degree(&self) -> usize {
        let t = self.t as usize;
        match self.variant {
            Variant::I => 4 * t + 5,
            _ => 4 * t + 3,
        }
    }

    pub fn circulant(&self) -> CirculantSpec {
        d_family(self.circulant_order(), self.t as usize).expect("admissible parameters")
    }

    pub fn product_order(&self) -> usize {
        self.circulant_order() * named_graph(self.factor()).order()
    }
}

/// Certifies the case, directly up to [`DIRECT_ORDER_THRESHOLD`] and through
/// the characteristic polynomials above it.
pub fn conjecture_check(case: &ConjectureCase) -> Result<NutCertificate> {
    let strategy = if case.product_order() <= DIRECT_ORDER_THRESHOLD {
        ProductStrategy::Direct
    } else {
        ProductStrategy::Polynomial
    };
    conjecture_check_with(case, strategy)
}

pub fn conjecture_check_with(
    case: &ConjectureCase,
    strategy: ProductStrategy,
) -> Result<NutCertificate> {
    let spec = case.circulant();
    let factor = named_graph(case.factor());
    let circ = spec.graph();
    match strategy {
        ProductStrategy::Direct => is_nut(&cartesian_product(&circ, &factor)?),
        ProductStrategy::Polynomial => {
            let cert_c = circulant_is_nut(&spec);
            let cert_f = is_nut(&factor)?;
            if !cert_c.is_nut {
                return Err(Error::FactorNotNut(format!("D({}, {})", spec.order(), case.t)));
            }
            product_polynomial_certificate(
                &circ,
                &factor,
                &cert_c,
                &cert_f,
                &circulant_charpoly(&spec),
                &charpoly(&factor.adjacency()),
            )
        }
    }
}

/// Whether `-3` is an eigenvalue of `D(4t+6, t)`.
pub fn minus_three_is_eigenvalue(t: u64) -> Result<bool> {
    let spec = d_family(4 * t as usize + 6, t as usize)?;
    circulant_charpoly(&spec).is_divisible_by(&IntPoly::from_i64(&[3, 1]))
}

/// Every admissible `t` in `t_min..=t_max`, in increasing order.
pub fn conjecture_sweep(
    variant: Variant,
    t_min: u64,
    t_max: u64,
) -> Vec<(u64, Result<NutCertificate>)> {
    let ts: Vec<u64> = (t_min.max(1)..=t_max).filter(|&t| variant.admits(t)).collect();
    ts.into_par_iter()
        .map(|t| {
            let case = ConjectureCase::new(variant, t).expect("filtered");
            (t, conjecture_check(&case))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nutcert::Degree;

    #[test]
    fn case_validation() {
        assert!(ConjectureCase::new(Variant::Ii, 3).is_err());
        assert!(ConjectureCase::new(Variant::Iii, 2).is_err());
        assert!(ConjectureCase::new(Variant::I, 0).is_err());
        let c = ConjectureCase::new(Variant::Iii, 3).unwrap();
        assert_eq!((c.circulant_order(), c.expected_degree(), c.product_order()), (22, 15, 264));
        assert_eq!("ii".parse::<Variant>().unwrap(), Variant::Ii);
        assert!("iv".parse::<Variant>().is_err());
    }

    #[test]
    fn smallest_cases_agree_across_routes() {
        for (v, t) in [(Variant::I, 1), (Variant::Ii, 1)] {
            let case = ConjectureCase::new(v, t).unwrap();
            let direct = conjecture_check_with(&case, ProductStrategy::Direct).unwrap();
            let poly = conjecture_check_with(&case, ProductStrategy::Polynomial).unwrap();
            assert!(direct.is_nut && poly.is_nut);
            assert_eq!(direct.degree, Degree::Regular(case.expected_degree()));
            assert_eq!(poly.degree, direct.degree);
        }
    }

    #[test]
    fn sweep_is_ordered() {
        let out = conjecture_sweep(Variant::Ii, 1, 5);
        let ts: Vec<u64> = out.iter().map(|(t, _)| *t).collect();
        assert_eq!(ts, vec![1, 2, 4, 5]);
        assert!(out.iter().all(|(_, c)| c.as_ref().unwrap().is_nut));
    }
}
