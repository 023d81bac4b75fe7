use num_bigint::BigInt;
use serde::Serialize;

use super::{is_prime, JumpSet};
use crate::error::{Error, Result};
use crate::exactla::charpoly;
use crate::graphcore::{cartesian_product, CirculantSpec, Graph};
use crate::nutcert::{is_nut, NutCertificate};
use crate::polyz::{cyclotomic_factors, laurent_substitute, CyclotomicFactorSet, IntPoly};

/// Threshold `ell` for `G □ Circ(2p, S)`, with the data that determines it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EllReport {
    pub alpha: u64,
    /// Largest order of a root of unity annihilating some `P_lambda`.
    pub beta: u64,
    pub ell: u64,
    pub factor_orders: CyclotomicFactorSet,
    #[serde(rename = "R_degree")]
    pub r_degree: usize,
}

/// `lambda * x^alpha + sum_s (x^(alpha+s) + x^(alpha-s))` with `alpha = max S`.
pub fn slice_polynomial(s: &JumpSet, lambda: i64) -> IntPoly {
    let alpha = s.max();
    let mut c = vec![BigInt::from(0); 2 * alpha + 1];
    c[alpha] += lambda;
    for j in s.iter() {
        c[alpha + j] += 1;
        c[alpha - j] += 1;
    }
    IntPoly::from_coeffs(c)
}

/// `ell = 1 + max(alpha, beta)`.
///
/// `R(x) = prod_lambda P_lambda(x)` over the spectrum of `G` is formed from
/// the characteristic polynomial, so its cyclotomic factors cover every
/// eigenvalue at once.
pub fn compute_ell(g: &Graph, s: &JumpSet) -> Result<EllReport> {
    let d = g
        .regular_degree()
        .ok_or_else(|| Error::Precondition("graph must be regular".into()))?;
    let t = s.t();
    if d >= 4 * t {
        return Err(Error::Precondition(format!(
            "degree {d} must be below 4t = {}",
            4 * t
        )));
    }
    let cert = is_nut(g)?;
    if !cert.is_nut {
        return Err(Error::Precondition("graph is not a nut graph".into()));
    }
    let alpha = s.max();
    let r = laurent_substitute(&charpoly(&g.adjacency()), &slice_polynomial(s, 0), alpha)?;
    let factor_orders = cyclotomic_factors(&r)?;
    // -1 always annihilates P_0, so the set is never empty.
    let beta = factor_orders.max().expect("order 2 divides R");
    Ok(EllReport {
        alpha: alpha as u64,
        beta,
        ell: 1 + beta.max(alpha as u64),
        factor_orders,
        r_degree: r.degree().unwrap_or(0),
    })
}

pub fn first_admissible_prime(ell: u64) -> u64 {
    (ell.max(2)..).find(|&p| is_prime(p)).expect("primes are unbounded")
}

#[derive(Clone, Debug)]
pub struct MainLemmaProduct {
    pub circulant: CirculantSpec,
    pub graph: Graph,
    pub report: EllReport,
    pub certificate: NutCertificate,
}

/// Builds `G □ Circ(2p, S)` and certifies it directly.
pub fn build_main_lemma(g: &Graph, s: &JumpSet, p: u64) -> Result<MainLemmaProduct> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let report = compute_ell(g, s)?;
    if p < report.ell {
        return Err(Error::PrimeBelowEll { p, ell: report.ell });
    }
    let circulant = CirculantSpec::new(2 * p as usize, s.iter())?;
    let graph = cartesian_product(g, &circulant.graph())?;
    let certificate = is_nut(&graph)?;
    Ok(MainLemmaProduct {
        circulant,
        graph,
        report,
        certificate,
    })
}
