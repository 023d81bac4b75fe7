use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::IntPoly;
use crate::error::{Error, Result};

/// Cyclotomic orders `b` such that `Phi_b` divides a scanned polynomial.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct CyclotomicFactorSet {
    orders: BTreeSet<u64>,
}

impl CyclotomicFactorSet {
    pub fn from_orders(orders: impl IntoIterator<Item = u64>) -> Self {
        CyclotomicFactorSet {
            orders: orders.into_iter().collect(),
        }
    }

    pub fn orders(&self) -> &BTreeSet<u64> {
        &self.orders
    }

    pub fn contains(&self, b: u64) -> bool {
        self.orders.contains(&b)
    }

    pub fn max(&self) -> Option<u64> {
        self.orders.last().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.orders.is_empty()
    }

    /// Number of roots of unity covered, counted without multiplicity.
    pub fn root_count(&self) -> u64 {
        self.orders.iter().map(|&b| euler_phi(b)).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.orders.iter().copied()
    }
}

pub fn euler_phi(mut n: u64) -> u64 {
    assert!(n > 0, "phi(0) is undefined");
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn totients_up_to(limit: usize) -> Vec<u32> {
    let mut phi: Vec<u32> = (0..=limit as u32).collect();
    for i in 2..=limit {
        if phi[i] == i as u32 {
            for j in (i..=limit).step_by(i) {
                phi[j] -= phi[j] / i as u32;
            }
        }
    }
    phi
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn cache() -> &'static Mutex<HashMap<u64, Arc<IntPoly>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<IntPoly>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn cyclotomic_shared(b: u64) -> Arc<IntPoly> {
    if let Some(p) = cache().lock().unwrap().get(&b) {
        return Arc::clone(p);
    }
    let mut acc = IntPoly::x_pow_minus_one(b as usize);
    for d in divisors(b) {
        if d == b {
            break;
        }
        acc = acc
            .exact_div(&cyclotomic_shared(d))
            .expect("Phi_d divides x^b - 1 for every divisor d");
    }
    let acc = Arc::new(acc);
    cache()
        .lock()
        .unwrap()
        .entry(b)
        .or_insert_with(|| Arc::clone(&acc));
    acc
}

/// The `b`-th cyclotomic polynomial, obtained from `x^b - 1` by exact division
/// by `Phi_d` for every proper divisor `d` of `b`. Results are memoized.
pub fn cyclotomic(b: u64) -> IntPoly {
    assert!(b >= 1, "cyclotomic order must be positive");
    (*cyclotomic_shared(b)).clone()
}

// Remainder checks modulo a word prime reject most candidates cheaply. A
// non-zero residue proves the integer remainder is non-zero because Phi_b is
// monic; survivors are re-checked exactly.
const FILTER_PRIME: u64 = 2_147_483_647;

fn residues(p: &IntPoly) -> Vec<u64> {
    let m = BigInt::from(FILTER_PRIME);
    p.coeffs()
        .iter()
        .map(|c| c.mod_floor(&m).to_u64().unwrap())
        .collect()
}

fn divides_mod_prime(poly_res: &[u64], b: u64, phi_b: &IntPoly) -> bool {
    let b = b as usize;
    let mut rem: Vec<u64> = if poly_res.len() > b {
        let mut folded = vec![0u64; b];
        for (i, &c) in poly_res.iter().enumerate() {
            let slot = &mut folded[i % b];
            *slot = (*slot + c) % FILTER_PRIME;
        }
        folded
    } else {
        poly_res.to_vec()
    };
    let div = residues(phi_b);
    let dd = div.len() - 1;
    let support: Vec<(usize, u64)> = div[..dd]
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| (i, c))
        .collect();
    while rem.len() > dd {
        let q = rem.pop().unwrap();
        if q == 0 {
            continue;
        }
        let k = rem.len() - dd;
        for &(i, c) in &support {
            let slot = &mut rem[k + i];
            *slot = (*slot + FILTER_PRIME - q * c % FILTER_PRIME) % FILTER_PRIME;
        }
    }
    rem.iter().all(|&c| c == 0)
}

fn divides_exactly(poly: &IntPoly, b: u64, phi_b: &IntPoly) -> bool {
    let folded = if poly.degree().unwrap_or(0) >= b as usize {
        poly.fold_mod_x_pow_minus_one(b as usize)
    } else {
        poly.clone()
    };
    folded.rem(phi_b).expect("cyclotomic polynomials are monic").is_zero()
}

/// Every `b` with `Phi_b | poly`.
///
/// Candidates are the `b <= 2 deg^2` with `phi(b) <= deg`; the ceiling is
/// sufficient because `phi(b) >= sqrt(b / 2)`.
pub fn cyclotomic_factors(poly: &IntPoly) -> Result<CyclotomicFactorSet> {
    let deg = poly.degree().ok_or(Error::ZeroPolynomial)?;
    if deg == 0 {
        return Ok(CyclotomicFactorSet::default());
    }
    let ceiling = 2 * deg * deg;
    let phi = totients_up_to(ceiling);
    let candidates = (1..=ceiling as u64).filter(|&b| phi[b as usize] as usize <= deg);
    Ok(scan(poly, candidates))
}

/// Restricts the scan to the given candidate orders (e.g. the divisors of a
/// circulant's order).
pub fn cyclotomic_factors_among(
    poly: &IntPoly,
    candidates: impl IntoIterator<Item = u64>,
) -> Result<CyclotomicFactorSet> {
    let deg = poly.degree().ok_or(Error::ZeroPolynomial)? as u64;
    Ok(scan(
        poly,
        candidates.into_iter().filter(|&b| b >= 1 && euler_phi(b) <= deg),
    ))
}

fn scan(poly: &IntPoly, candidates: impl Iterator<Item = u64>) -> CyclotomicFactorSet {
    let res = residues(poly);
    let orders = candidates.filter(|&b| {
        let phi_b = cyclotomic_shared(b);
        divides_mod_prime(&res, b, &phi_b) && divides_exactly(poly, b, &phi_b)
    });
    CyclotomicFactorSet::from_orders(orders)
}
