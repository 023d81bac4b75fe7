use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::ExactMatrix;
use crate::polyz::IntPoly;

/// `det(xI - A)` by Berkowitz's division-free algorithm.
///
/// Step `k` borders the leading `k x k` block with row `R`, column `C` and
/// diagonal entry `a`, and multiplies the running coefficient vector by the
/// Toeplitz matrix with first column `1, -a, -R C, -R A C, ..., -R A^(k-1) C`.
/// Vector-matrix products only touch non-zero entries, which keeps adjacency
/// matrices cheap.
pub fn charpoly(a: &ExactMatrix) -> IntPoly {
    let n = a.order();
    let sparse = a.sparse_rows();
    // Coefficients from x^k down to x^0 for the leading k x k block.
    let mut coeffs: Vec<BigInt> = vec![BigInt::one()];
    for k in 0..n {
        let mut toeplitz = Vec::with_capacity(k + 2);
        toeplitz.push(BigInt::one());
        toeplitz.push(-a.get(k, k).clone());
        let mut w: Vec<BigInt> = a.row(k)[..k].to_vec();
        for step in 0..k {
            let dot: BigInt = (0..k)
                .filter(|&r| !w[r].is_zero())
                .map(|r| &w[r] * a.get(r, k))
                .sum();
            toeplitz.push(-dot);
            if step + 1 < k {
                let mut next = vec![BigInt::zero(); k];
                for (r, wr) in w.iter().enumerate() {
                    if wr.is_zero() {
                        continue;
                    }
                    for &(c, v) in sparse[r].iter().take_while(|(c, _)| *c < k) {
                        next[c] += wr * v;
                    }
                }
                w = next;
            }
        }
        let mut next = vec![BigInt::zero(); k + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            for (j, t) in toeplitz.iter().enumerate().take(i + 1) {
                if let Some(c) = coeffs.get(i - j) {
                    if !t.is_zero() && !c.is_zero() {
                        *slot += t * c;
                    }
                }
            }
        }
        coeffs = next;
    }
    coeffs.reverse();
    IntPoly::from_coeffs(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::bareiss::determinant;

    #[test]
    fn single_edge() {
        let k2 = ExactMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(charpoly(&k2), IntPoly::from_i64(&[-1, 0, 1]));
    }

    #[test]
    fn general_two_by_two() {
        let m = ExactMatrix::from_rows(&[vec![2, 3], vec![5, 7]]).unwrap();
        // x^2 - 9x + (14 - 15)
        assert_eq!(charpoly(&m), IntPoly::from_i64(&[-1, -9, 1]));
    }

    #[test]
    fn constant_term_is_signed_determinant() {
        let m = ExactMatrix::from_rows(&[
            vec![1, -2, 0, 3],
            vec![4, 0, 5, -1],
            vec![2, 2, -3, 0],
            vec![0, 1, 1, 6],
        ])
        .unwrap();
        let c0 = charpoly(&m).coeff(0);
        assert_eq!(c0, determinant(&m));
    }

    #[test]
    fn empty_matrix() {
        assert_eq!(charpoly(&ExactMatrix::zero(0)), IntPoly::one());
    }
}
