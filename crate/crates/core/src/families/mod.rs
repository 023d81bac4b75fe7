//! Constructions of regular nut graphs and the computations that justify them.

mod caux;
mod conjecture;
mod ell;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::graphcore::{cartesian_product, named_graph, CirculantSpec, Graph, NamedGraph};
use crate::nutcert::{divisors, Degree, FailureReason, NutCertificate, Route};
use crate::polyz::{cyclotomic_factors_among, euler_phi, IntPoly};

pub use caux::{caux_polynomials, caux_scan, CauxRow, CauxViolation};
pub use conjecture::{
    conjecture_check, conjecture_check_with, conjecture_sweep, minus_three_is_eigenvalue,
    ConjectureCase, Variant, DIRECT_ORDER_THRESHOLD,
};
pub use ell::{
    build_main_lemma, compute_ell, first_admissible_prime, slice_polynomial, EllReport,
    MainLemmaProduct,
};

/// `t` odd and `t` even distinct positive integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JumpSet {
    jumps: BTreeSet<usize>,
}

impl JumpSet {
    pub fn new(jumps: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for s in jumps {
            if s == 0 {
                return Err(Error::InvalidParameters("jumps must be positive".into()));
            }
            if !set.insert(s) {
                return Err(Error::DuplicateJump(s));
            }
        }
        let odd = set.iter().filter(|&&s| s % 2 == 1).count();
        let even = set.len() - odd;
        if set.is_empty() || odd != even {
            return Err(Error::InvalidParameters(format!(
                "need equally many odd and even jumps, got {odd} odd and {even} even"
            )));
        }
        Ok(JumpSet { jumps: set })
    }

    pub fn t(&self) -> usize {
        self.jumps.len() / 2
    }

    pub fn max(&self) -> usize {
        *self.jumps.last().expect("non-empty")
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.jumps.iter().copied()
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn check_family_params(n: usize, t: usize) -> Result<()> {
    if t == 0 {
        return Err(Error::InvalidParameters("t must be at least 1".into()));
    }
    if n % 4 != 2 {
        return Err(Error::InvalidParameters(format!("order {n} is not 2 mod 4")));
    }
    if n < 4 * t + 6 {
        return Err(Error::InvalidParameters(format!(
            "order {n} is below 4t + 6 = {}",
            4 * t + 6
        )));
    }
    Ok(())
}

fn d_family_jumps(n: usize, t: usize) -> impl Iterator<Item = usize> {
    let half = n / 2;
    (1..t)
        .chain([(n + 2) / 4, (n + 6) / 4])
        .chain(half + 1 - t..half)
}

/// `D(n, t)`: the `4t`-regular circulant on `n ≡ 2 (mod 4)` vertices with
/// jumps `1..t-1`, `(n+2)/4`, `(n+6)/4` and `n/2-(t-1)..n/2-1`.
pub fn d_family(n: usize, t: usize) -> Result<CirculantSpec> {
    check_family_params(n, t)?;
    CirculantSpec::new(n, d_family_jumps(n, t))
}

/// The `D(m, t)` jumps together with `m/2`.
pub fn cayley_family_circulant(m: usize, t: usize) -> Result<CirculantSpec> {
    check_family_params(m, t)?;
    CirculantSpec::new(m, d_family_jumps(m, t).chain([m / 2]))
}

/// `Circ(m, S ∪ {m/2}) □ K2`, a `(4t+2)`-regular Cayley graph on `Z_m × Z_2`.
pub fn cayley_family(m: usize, t: usize) -> Result<Graph> {
    let spec = cayley_family_circulant(m, t)?;
    cartesian_product(&spec.graph(), &named_graph(NamedGraph::K2))
}

/// Certifies `cayley_family(m, t)` from the spectrum `P_A(z) ± 1`, `z^m = 1`.
///
/// The zero eigenvalues are counted by the cyclotomic factors of `P_A + 1`
/// and `P_A - 1` among the divisors of `m`. The graph is nut iff the only one
/// is order 2 for `P_A + 1`, whose eigenvector `(-1)^g` on vertex `(g, h)`
/// is full.
pub fn cayley_family_spectral(m: usize, t: usize) -> Result<NutCertificate> {
    let spec = cayley_family_circulant(m, t)?;
    let p = spec.connection_poly();
    let shifted = |c: i64| &p + &IntPoly::constant(BigInt::from(c));
    let plus: Vec<u64> = cyclotomic_factors_among(&shifted(1), divisors(m as u64))?
        .iter()
        .collect();
    let minus: Vec<u64> = cyclotomic_factors_among(&shifted(-1), divisors(m as u64))?
        .iter()
        .collect();
    let nullity: u64 = plus.iter().chain(&minus).map(|&b| euler_phi(b)).sum();
    let is_nut = plus == [2] && minus.is_empty();
    let kernel_vector = is_nut.then(|| {
        (0..2 * m)
            .map(|i| if (i / 2) % 2 == 0 { BigInt::one() } else { -BigInt::one() })
            .collect()
    });
    let failure_reason = (!is_nut).then(|| {
        let mut orders: Vec<u64> = plus.iter().chain(&minus).copied().collect();
        orders.sort_unstable();
        orders.dedup();
        FailureReason::NullityNotOne {
            cyclotomic_orders: Some(orders),
        }
    });
    Ok(NutCertificate {
        is_nut,
        order: 2 * m,
        degree: Degree::Regular(spec.degree() + 1),
        nullity: nullity as usize,
        kernel_vector,
        route: Route::CirculantCyclotomic,
        failure_reason,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nutcert::{circulant_is_nut, is_nut};

    #[test]
    fn jump_set_parity() {
        let s = JumpSet::new([1, 2, 3, 6, 7, 10]).unwrap();
        assert_eq!((s.t(), s.max()), (3, 10));
        assert!(JumpSet::new([1, 3]).is_err());
        assert!(JumpSet::new([]).is_err());
        assert!(JumpSet::new([0, 1]).is_err());
        assert_eq!(JumpSet::new([1, 2, 2]), Err(Error::DuplicateJump(2)));
    }

    #[test]
    fn primes() {
        let small: Vec<u64> = (0..30).filter(|&p| is_prime(p)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(!is_prime(18));
        assert!(is_prime(7919));
    }

    #[test]
    fn d_family_examples() {
        assert_eq!(d_family(10, 1).unwrap(), CirculantSpec::new(10, [3, 4]).unwrap());
        let d = d_family(14, 2).unwrap();
        assert_eq!(d, CirculantSpec::new(14, [1, 4, 5, 6]).unwrap());
        assert_eq!(d.graph().regular_degree(), Some(8));
        assert!(circulant_is_nut(&d).is_nut);
        assert!(d_family(12, 1).is_err());
        assert!(d_family(10, 2).is_err());
        assert!(d_family(10, 0).is_err());
    }

    #[test]
    fn cayley_family_smallest() {
        let g = cayley_family(10, 1).unwrap();
        assert_eq!((g.order(), g.regular_degree()), (20, Some(6)));
        let direct = is_nut(&g).unwrap();
        let spectral = cayley_family_spectral(10, 1).unwrap();
        assert!(direct.is_nut && spectral.is_nut);
        assert_eq!(direct.kernel_vector, spectral.kernel_vector);
        assert_eq!(direct.degree, spectral.degree);
    }
}
