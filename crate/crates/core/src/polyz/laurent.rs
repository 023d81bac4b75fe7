use super::IntPoly;
use crate::error::{Error, Result};

/// Clears denominators in `chi(-Q(x) / x^alpha)`.
///
/// `q_pos` is `x^alpha * Q(x)` for a Laurent polynomial `Q`. The result is
/// `x^(alpha * N) * chi(-q_pos / x^alpha)` with `N = deg chi`, which equals
/// `(-1)^N * prod_lambda (lambda * x^alpha + q_pos)` over the roots of `chi`.
/// A non-zero `z` is therefore a root of the result iff
/// `lambda * z^alpha + q_pos(z) = 0` for some root `lambda` of `chi`.
pub fn laurent_substitute(chi: &IntPoly, q_pos: &IntPoly, alpha: usize) -> Result<IntPoly> {
    if !chi.is_monic() {
        return Err(Error::NotMonic);
    }
    let n = chi.degree().unwrap();
    if n == 0 {
        return Err(Error::Precondition(
            "characteristic polynomial must have degree at least 1".into(),
        ));
    }
    let minus_q = -q_pos;
    let coeffs = chi.coeffs();
    let mut acc = IntPoly::constant(coeffs[n].clone());
    for j in (0..n).rev() {
        acc = &(&acc * &minus_q) + &IntPoly::monomial(coeffs[j].clone(), alpha * (n - j));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn single_zero_eigenvalue() {
        let r = laurent_substitute(&IntPoly::x(), &p(&[1, 0, 1]), 1).unwrap();
        assert_eq!(r, p(&[-1, 0, -1]));
    }

    #[test]
    fn linear_characteristic_polynomial() {
        // chi = y - 3, root lambda = 3: result is -(3 x^2 + q).
        let q = p(&[1, 4, 0, 2, 1]);
        let r = laurent_substitute(&p(&[-3, 1]), &q, 2).unwrap();
        let expected = -(&q + &IntPoly::monomial(BigInt::from(3), 2));
        assert_eq!(r, expected);
    }

    #[test]
    fn quadratic_matches_product_of_slices() {
        // chi = (y - 1)(y + 2); product of (lambda x^a + q) over both roots.
        let chi = p(&[-2, 1, 1]);
        let q = p(&[1, 0, 1, 1]);
        let a = 1;
        let slice = |l: i64| &IntPoly::monomial(BigInt::from(l), a) + &q;
        let expected = &slice(1) * &slice(-2);
        assert_eq!(laurent_substitute(&chi, &q, a).unwrap(), expected);
    }

    #[test]
    fn rejects_non_monic() {
        assert_eq!(
            laurent_substitute(&p(&[0, 2]), &p(&[1]), 0),
            Err(Error::NotMonic)
        );
    }
}
