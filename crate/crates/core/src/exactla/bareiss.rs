//! Fraction-free Gauss-Jordan elimination (Bareiss).
//!
//! After processing `k` pivots every entry is a `k x k` minor of the input, so
//! each division below is exact. All pivots end up equal to the last pivot
//! value `D`, and a kernel basis vector for a free column `f` is
//! `v_f = D`, `v_pivot(i) = -M[i][f]`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{ExactMatrix, KernelResult};

pub struct Reduced {
    pub rank: usize,
    pub pivots: Vec<usize>,
    /// Common value of every pivot after reduction (1 for rank 0).
    pub pivot_value: BigInt,
    pub rows: Vec<Vec<BigInt>>,
    pub swaps: usize,
}

pub fn reduce(a: &ExactMatrix) -> Reduced {
    let n = a.order();
    let mut m: Vec<Vec<BigInt>> = (0..n).map(|i| a.row(i).to_vec()).collect();
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut swaps = 0;
    let mut r = 0;
    for c in 0..n {
        if r == n {
            break;
        }
        let Some(p) = (r..n).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            m.swap(p, r);
            swaps += 1;
        }
        let pivot_row = m[r].clone();
        let pv = pivot_row[c].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let factor = std::mem::take(&mut row[c]);
            for j in 0..n {
                if j == c {
                    continue;
                }
                let mut x = &pv * &row[j];
                if !factor.is_zero() && !pivot_row[j].is_zero() {
                    x -= &factor * &pivot_row[j];
                }
                row[j] = if prev.is_one() { x } else { x / &prev };
            }
        }
        prev = pv;
        pivots.push(c);
        r += 1;
    }
    // Earlier pivot rows were rescaled each step; their pivot entries now equal prev.
    Reduced {
        rank: r,
        pivots,
        pivot_value: prev,
        rows: m,
        swaps,
    }
}

pub fn determinant(a: &ExactMatrix) -> BigInt {
    let red = reduce(a);
    if red.rank < a.order() {
        return BigInt::zero();
    }
    if red.swaps % 2 == 1 {
        -red.pivot_value
    } else {
        red.pivot_value
    }
}

pub fn rank(a: &ExactMatrix) -> usize {
    reduce(a).rank
}

pub fn kernel_basis(a: &ExactMatrix) -> Vec<Vec<BigInt>> {
    let n = a.order();
    let red = reduce(a);
    let mut is_pivot = vec![false; n];
    for &c in &red.pivots {
        is_pivot[c] = true;
    }
    (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![BigInt::zero(); n];
            v[f] = red.pivot_value.clone();
            for (i, &pc) in red.pivots.iter().enumerate() {
                v[pc] = -red.rows[i][f].clone();
            }
            v
        })
        .collect()
}

pub fn nullity_kernel_bareiss(a: &ExactMatrix) -> KernelResult {
    let basis = kernel_basis(a);
    debug_assert!(basis.iter().all(|v| a.annihilates(v)));
    KernelResult::from_basis(basis.len(), basis)
}
