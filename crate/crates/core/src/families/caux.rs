use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::polyz::{cyclotomic_factors, CyclotomicFactorSet, IntPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CauxViolation {
    /// 1 or 2.
    pub polynomial: u8,
    pub order: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CauxRow {
    pub t: u64,
    pub p1_orders: CyclotomicFactorSet,
    pub p2_orders: CyclotomicFactorSet,
    pub violations: Vec<CauxViolation>,
}

fn sparse(terms: &[(i64, u64)]) -> IntPoly {
    terms
        .iter()
        .map(|&(c, k)| IntPoly::monomial(BigInt::from(c), k as usize))
        .fold(IntPoly::zero(), |acc, m| &acc + &m)
}

/// `P1 = 2x^(4t+3) + x^(2t+8) - x^(2t) - 2x^5` and
/// `P2 = 2x^(4t+3) - x^(2t+8) + x^(2t) - 2x^5`.
pub fn caux_polynomials(t: u64) -> (IntPoly, IntPoly) {
    let p1 = sparse(&[(2, 4 * t + 3), (1, 2 * t + 8), (-1, 2 * t), (-2, 5)]);
    let p2 = sparse(&[(2, 4 * t + 3), (-1, 2 * t + 8), (1, 2 * t), (-2, 5)]);
    (p1, p2)
}

fn bad(b: u64) -> bool {
    b >= 3 && !b.is_multiple_of(4)
}

fn scan_one(t: u64) -> CauxRow {
    let (p1, p2) = caux_polynomials(t);
    // x = 0 is not a root of unity.
    let orders = |p: &IntPoly| {
        cyclotomic_factors(&p.strip_x_power()).expect("scan polynomials are non-zero")
    };
    let (p1_orders, p2_orders) = (orders(&p1), orders(&p2));
    let violations = [(1u8, &p1_orders), (2, &p2_orders)]
        .into_iter()
        .flat_map(|(polynomial, set)| {
            set.iter()
                .filter(|&b| bad(b))
                .map(move |order| CauxViolation { polynomial, order })
        })
        .collect();
    CauxRow {
        t,
        p1_orders,
        p2_orders,
        violations,
    }
}

/// Cyclotomic factors of `P1`, `P2` for `t = 1..=t_max`, in order of `t`.
pub fn caux_scan(t_max: u64) -> Vec<CauxRow> {
    (1..=t_max).into_par_iter().map(scan_one).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_polynomials() {
        let (p1, p2) = caux_polynomials(1);
        assert_eq!(p1, IntPoly::from_i64(&[0, 0, -1, 0, 0, -2, 0, 2, 0, 0, 1]));
        assert_eq!(p2, IntPoly::from_i64(&[0, 0, 1, 0, 0, -2, 0, 2, 0, 0, -1]));
    }

    #[test]
    fn small_scan_is_clean_and_ordered() {
        let rows = caux_scan(6);
        assert_eq!(rows.iter().map(|r| r.t).collect::<Vec<_>>(), vec![1, 2, 3, 4, 5, 6]);
        for r in &rows {
            assert!(r.violations.is_empty(), "t = {}", r.t);
            // x = 1 is a root of both.
            assert!(r.p1_orders.contains(1) && r.p2_orders.contains(1));
        }
    }
}
