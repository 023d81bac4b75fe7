use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use super::IntPoly;
use crate::error::{Error, Result};

/// Primitive gcd with positive leading coefficient, via the subresultant
/// pseudo-remainder sequence.
pub fn poly_gcd(a: &IntPoly, b: &IntPoly) -> Result<IntPoly> {
    match (a.is_zero(), b.is_zero()) {
        (true, true) => return Err(Error::GcdOfZeros),
        (true, false) => return Ok(b.primitive_part()),
        (false, true) => return Ok(a.primitive_part()),
        _ => {}
    }
    let (mut f, mut g) = if a.degree() >= b.degree() {
        (a.primitive_part(), b.primitive_part())
    } else {
        (b.primitive_part(), a.primitive_part())
    };
    let mut lc_scale = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = f.degree().unwrap() - g.degree().unwrap();
        let r = f.pseudo_rem(&g)?;
        match r.degree() {
            None => return Ok(g.primitive_part()),
            Some(0) => return Ok(IntPoly::one()),
            Some(_) => {}
        }
        let divisor = &lc_scale * Pow::pow(&h, delta);
        f = g;
        g = IntPoly::from_coeffs(r.coeffs().iter().map(|c| c / &divisor).collect());
        lc_scale = f.leading().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            Pow::pow(&lc_scale, delta) / Pow::pow(&h, delta - 1)
        };
        debug_assert!(!h.is_zero());
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn common_root_one() {
        let g = poly_gcd(&p(&[-1, 0, 1]), &p(&[-1, 0, 0, 1])).unwrap();
        assert_eq!(g, p(&[-1, 1]));
    }

    #[test]
    fn idempotent_up_to_content() {
        let a = p(&[-6, 4, 2]);
        assert_eq!(poly_gcd(&a, &a).unwrap(), p(&[-3, 2, 1]));
    }

    #[test]
    fn coprime_and_zero_cases() {
        assert_eq!(poly_gcd(&p(&[1, 1]), &p(&[-1, 1])).unwrap(), IntPoly::one());
        assert_eq!(poly_gcd(&p(&[0, -2]), &IntPoly::zero()).unwrap(), p(&[0, 1]));
        assert_eq!(
            poly_gcd(&IntPoly::zero(), &IntPoly::zero()),
            Err(Error::GcdOfZeros)
        );
    }

    #[test]
    fn classic_knuth_pair() {
        // Standard PRS example; the two polynomials are coprime.
        let a = p(&[-5, 2, 8, -3, -3, 0, 1, 0, 1]);
        let b = p(&[21, -9, -4, 0, 5, 0, 3]);
        assert_eq!(poly_gcd(&a, &b).unwrap(), IntPoly::one());
    }

    #[test]
    fn nontrivial_common_factor_with_contents() {
        let common = p(&[3, -2, 0, 5]);
        let a = &common * &p(&[7, 0, 2]);
        let b = (&common * &p(&[-1, 4])).scale(&BigInt::from(6));
        assert_eq!(poly_gcd(&a, &b).unwrap(), common);
    }
}
