//! Exact linear algebra over the integers.
//!
//! Nullity and kernel vectors are computed without floating point. The
//! default route eliminates modulo word-sized primes, lifts the kernel basis
//! back to the integers and proves the result (see [`modular`]); fraction-free
//! Gauss-Jordan elimination in [`bareiss`] is the reference route and the
//! fallback.

pub mod bareiss;
mod charpoly;
pub mod modular;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

pub use charpoly::charpoly;

/// Square matrix of arbitrary-precision integers, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl ExactMatrix {
    pub fn new(n: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::InvalidParameters(format!(
                "expected {} entries for order {n}, got {}",
                n * n,
                entries.len()
            )));
        }
        Ok(ExactMatrix { n, entries })
    }

    pub fn zero(n: usize) -> Self {
        ExactMatrix {
            n,
            entries: vec![BigInt::zero(); n * n],
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidParameters("matrix must be square".into()));
        }
        Ok(ExactMatrix {
            n,
            entries: rows.iter().flatten().map(|&x| BigInt::from(x)).collect(),
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Non-zero entries per row, as `(column, value)` in column order.
    pub(crate) fn sparse_rows(&self) -> Vec<Vec<(usize, &BigInt)>> {
        (0..self.n)
            .map(|i| {
                self.row(i)
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .collect()
            })
            .collect()
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.n);
        (0..self.n)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, _)| !a.is_zero())
                    .map(|(a, x)| a * x)
                    .sum()
            })
            .collect()
    }

    /// Whether `A v = 0` holds exactly.
    pub fn annihilates(&self, v: &[BigInt]) -> bool {
        self.mul_vec(v).iter().all(Zero::is_zero)
    }
}

/// Nullity of a matrix together with its canonical kernel vector when the
/// kernel is one-dimensional.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelResult {
    pub nullity: usize,
    pub kernel_vector: Option<Vec<BigInt>>,
    pub full: Option<bool>,
}

impl KernelResult {
    pub(crate) fn from_basis(nullity: usize, basis: Vec<Vec<BigInt>>) -> Self {
        if nullity == 1 {
            let v = canonicalize(basis.into_iter().next().expect("one basis vector"));
            let full = v.iter().all(|x| !x.is_zero());
            KernelResult {
                nullity,
                kernel_vector: Some(v),
                full: Some(full),
            }
        } else {
            KernelResult {
                nullity,
                kernel_vector: None,
                full: None,
            }
        }
    }
}

/// Divides by the gcd of the entries and makes the first non-zero entry positive.
pub fn canonicalize(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return v;
    }
    let negate = v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    let g = if negate { -g } else { g };
    for x in &mut v {
        *x /= &g;
    }
    v
}

/// Exact nullity and, when it is one, the canonical primitive kernel vector.
pub fn nullity_kernel(a: &ExactMatrix) -> KernelResult {
    modular::nullity_kernel_modular(a).unwrap_or_else(|| bareiss::nullity_kernel_bareiss(a))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle4() -> ExactMatrix {
        ExactMatrix::from_rows(&[
            vec![0, 1, 0, 1],
            vec![1, 0, 1, 0],
            vec![0, 1, 0, 1],
            vec![1, 0, 1, 0],
        ])
        .unwrap()
    }

    #[test]
    fn four_cycle_has_nullity_two() {
        let k = nullity_kernel(&cycle4());
        assert_eq!(k.nullity, 2);
        assert_eq!(k.kernel_vector, None);
        assert_eq!(k.full, None);
    }

    #[test]
    fn one_by_one_zero_matrix() {
        let k = nullity_kernel(&ExactMatrix::zero(1));
        assert_eq!(k.nullity, 1);
        assert_eq!(k.kernel_vector, Some(vec![BigInt::from(1)]));
        assert_eq!(k.full, Some(true));
    }

    #[test]
    fn canonical_form() {
        let v = canonicalize([0, -4, 6, 2].map(BigInt::from).to_vec());
        assert_eq!(v, [0, 2, -3, -1].map(BigInt::from).to_vec());
    }

    #[test]
    fn nonsingular_matrix_has_trivial_kernel() {
        let a = ExactMatrix::from_rows(&[vec![2, 1], vec![1, 3]]).unwrap();
        assert_eq!(nullity_kernel(&a).nullity, 0);
    }
}
