//! Nut-property certification.
//!
//! Three routes produce a [`NutCertificate`]:
//! - the direct route computes the exact adjacency kernel;
//! - the circulant route finds the roots of unity annihilating the connection
//!   polynomial, restricted to orders dividing `n`;
//! - the product route decides `G □ H` for nut factors `G`, `H` from the gcd of
//!   `chi_G(x)` and `chi_H(-x)`: the product is a nut graph iff that gcd is `x`.

mod certificate;
pub mod feasibility;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactla::{charpoly, nullity_kernel, ExactMatrix};
use crate::graphcore::{cartesian_product, CirculantSpec, Graph};
use crate::polyz::{cyclotomic, cyclotomic_factors_among, euler_phi, poly_gcd, IntPoly};

pub use certificate::{Degree, FailureReason, NutCertificate, Route};
pub use feasibility::{feasible, Family, FeasibilityQuery, Verdict};

pub const DEFAULT_DIRECT_LIMIT: usize = 5000;
pub const MAX_ORDER_ENV: &str = "NUTFORGE_MAX_ORDER";

/// Largest order accepted by the direct route; `NUTFORGE_MAX_ORDER` overrides
/// the default.
pub fn direct_order_limit() -> usize {
    std::env::var(MAX_ORDER_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_DIRECT_LIMIT)
}

fn degree_of(g: &Graph) -> Degree {
    g.regular_degree().map_or(Degree::Irregular, Degree::Regular)
}

/// Direct route: exact nullity and kernel of the adjacency matrix.
pub fn is_nut(g: &Graph) -> Result<NutCertificate> {
    is_nut_with_limit(g, direct_order_limit())
}

pub fn is_nut_with_limit(g: &Graph, limit: usize) -> Result<NutCertificate> {
    let n = g.order();
    if n > limit {
        return Err(Error::OrderTooLarge { order: n, limit });
    }
    let k = nullity_kernel(&g.adjacency());
    if let Some(v) = &k.kernel_vector {
        // Re-check against the adjacency lists, independently of the matrix.
        assert!(g.annihilates(v), "kernel vector failed verification");
    }
    let failure_reason = match (&k.kernel_vector, k.nullity) {
        (_, m) if m != 1 => Some(FailureReason::NullityNotOne {
            cyclotomic_orders: None,
        }),
        (Some(v), _) if v.iter().any(Zero::is_zero) => Some(FailureReason::KernelHasZero {
            zero_entries: v.iter().filter(|x| x.is_zero()).count(),
        }),
        _ => None,
    };
    Ok(NutCertificate {
        is_nut: failure_reason.is_none(),
        order: n,
        degree: degree_of(g),
        nullity: k.nullity,
        kernel_vector: k.kernel_vector,
        route: Route::DirectKernel,
        failure_reason,
    })
}

pub(crate) fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Orders `b | n` such that `Phi_b` divides the connection polynomial; the
/// circulant's nullity is the sum of `phi(b)` over them.
pub fn circulant_zero_orders(spec: &CirculantSpec) -> Vec<u64> {
    let n = spec.order() as u64;
    let p = spec.connection_poly();
    if p.is_zero() {
        return divisors(n);
    }
    cyclotomic_factors_among(&p, divisors(n))
        .expect("connection polynomial is non-zero")
        .iter()
        .collect()
}

/// Circulant route.
///
/// Every zero eigenvalue comes from an `n`-th root of unity annihilating the
/// connection polynomial, with eigenvector `(1, z, z^2, ...)`. The nullity is
/// one exactly when the only such root is `1` (edgeless `K_1`) or `-1`; the
/// kernel vector is then constant or alternating and hence full.
pub fn circulant_is_nut(spec: &CirculantSpec) -> NutCertificate {
    let n = spec.order();
    let orders = circulant_zero_orders(spec);
    let nullity: u64 = orders.iter().map(|&b| euler_phi(b)).sum();
    let kernel_vector = match orders.as_slice() {
        [1] => Some(vec![BigInt::one(); n]),
        [2] => Some(
            (0..n)
                .map(|i| if i % 2 == 0 { BigInt::one() } else { -BigInt::one() })
                .collect(),
        ),
        _ => None,
    };
    let is_nut = kernel_vector.is_some();
    NutCertificate {
        is_nut,
        order: n,
        degree: Degree::Regular(spec.degree()),
        nullity: nullity as usize,
        kernel_vector,
        route: Route::CirculantCyclotomic,
        failure_reason: (!is_nut).then_some(FailureReason::NullityNotOne {
            cyclotomic_orders: Some(orders),
        }),
    }
}

/// Characteristic polynomial of a circulant without touching its `n x n`
/// adjacency matrix.
///
/// For each `b | n` the eigenvalues `P_A(z)` over primitive `b`-th roots `z`
/// are the eigenvalues of multiplication by `P_A(y)` on `Z[y] / Phi_b(y)`, a
/// `phi(b) x phi(b)` integer matrix.
pub fn circulant_charpoly(spec: &CirculantSpec) -> IntPoly {
    let p = spec.connection_poly();
    divisors(spec.order() as u64)
        .into_iter()
        .map(|b| {
            let phi_b = cyclotomic(b);
            let k = phi_b.degree().unwrap();
            let mut col = p.rem(&phi_b).expect("cyclotomic polynomials are monic");
            let mut m = ExactMatrix::zero(k);
            for j in 0..k {
                for i in 0..k {
                    m.set(i, j, col.coeff(i));
                }
                col = col.shift(1).rem(&phi_b).expect("monic");
            }
            charpoly(&m)
        })
        .product()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductStrategy {
    Direct,
    Polynomial,
}

/// Number of pairs `(lambda, mu)` with `lambda + mu = 0`, counted with
/// multiplicity, for monic `chi_g` and `chi_h`. This is the nullity of
/// `G □ H`.
pub fn product_nullity(chi_g: &IntPoly, chi_h: &IntPoly) -> Result<usize> {
    let neg = chi_h.negate_variable().primitive_part();
    let fg = chi_g.squarefree_decomposition()?;
    let fh = neg.squarefree_decomposition()?;
    let mut total = 0;
    for (a, i) in &fg {
        for (b, j) in &fh {
            total += i * j * poly_gcd(a, b)?.degree().unwrap_or(0);
        }
    }
    Ok(total)
}

pub fn product_is_nut(g: &Graph, h: &Graph, strategy: ProductStrategy) -> Result<NutCertificate> {
    match strategy {
        ProductStrategy::Direct => is_nut(&cartesian_product(g, h)?),
        ProductStrategy::Polynomial => {
            let cg = is_nut(g)?;
            let ch = is_nut(h)?;
            for (name, c) in [("first", &cg), ("second", &ch)] {
                if !c.is_nut {
                    let reason = c.failure_reason.as_ref().map(ToString::to_string);
                    return Err(Error::FactorNotNut(format!(
                        "{name} factor: {}",
                        reason.unwrap_or_default()
                    )));
                }
            }
            let chi_g = charpoly(&g.adjacency());
            let chi_h = charpoly(&h.adjacency());
            product_polynomial_certificate(g, h, &cg, &ch, &chi_g, &chi_h)
        }
    }
}

/// Polynomial-route verdict from already certified factors and their
/// characteristic polynomials.
pub fn product_polynomial_certificate(
    g: &Graph,
    h: &Graph,
    cert_g: &NutCertificate,
    cert_h: &NutCertificate,
    chi_g: &IntPoly,
    chi_h: &IntPoly,
) -> Result<NutCertificate> {
    if !(cert_g.is_nut && cert_h.is_nut) {
        return Err(Error::FactorNotNut("factor certificates must be positive".into()));
    }
    let shared = poly_gcd(chi_g, &chi_h.negate_variable())?;
    let order = g.order() * h.order();
    let degree = match (cert_g.degree, cert_h.degree) {
        (Degree::Regular(a), Degree::Regular(b)) => Degree::Regular(a + b),
        _ => Degree::Irregular,
    };
    if shared == IntPoly::x() {
        let u = cert_g.kernel_vector.as_ref().expect("nut certificate has a vector");
        let v = cert_h.kernel_vector.as_ref().expect("nut certificate has a vector");
        let w: Vec<BigInt> = u.iter().flat_map(|a| v.iter().map(move |b| a * b)).collect();
        let product = cartesian_product(g, h)?;
        assert!(product.annihilates(&w), "tensor kernel vector failed verification");
        return Ok(NutCertificate {
            is_nut: true,
            order,
            degree,
            nullity: 1,
            kernel_vector: Some(w),
            route: Route::ProductPolynomial,
            failure_reason: None,
        });
    }
    let witness = shared.exact_div(&IntPoly::x())?;
    Ok(NutCertificate {
        is_nut: false,
        order,
        degree,
        nullity: product_nullity(chi_g, chi_h)?,
        kernel_vector: None,
        route: Route::ProductPolynomial,
        failure_reason: Some(FailureReason::SharedNonzeroEigenvalue { witness }),
    })
}
