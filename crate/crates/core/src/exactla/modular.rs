//! Multi-modular kernel computation with an exact certificate.
//!
//! Elimination modulo a prime `p` gives `rank_p(A) <= rank(A)`, hence an upper
//! bound `k = n - rank_p(A)` on the nullity. The echelon-form kernel basis mod
//! `p` is lifted through CRT and rational reconstruction to `k` integer
//! vectors. Each lifted vector carries an identity pattern on the free
//! columns, so once all of them satisfy `A v = 0` exactly they are linearly
//! independent and the nullity is exactly `k`.
//!
//! Primes whose rank or pivot pattern disagree with the best seen so far are
//! discarded. If the prime list runs out before the lift verifies, the caller
//! falls back to fraction-free elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{ExactMatrix, KernelResult};

const PRIMES: [u64; 40] = [
    2147483647, 2147483629, 2147483587, 2147483579, 2147483563, 2147483549, 2147483543,
    2147483497, 2147483489, 2147483477, 2147483423, 2147483399, 2147483353, 2147483323,
    2147483269, 2147483249, 2147483237, 2147483179, 2147483171, 2147483137, 2147483123,
    2147483077, 2147483069, 2147483059, 2147483053, 2147483033, 2147483029, 2147482951,
    2147482949, 2147482943, 2147482937, 2147482921, 2147482877, 2147482873, 2147482867,
    2147482859, 2147482819, 2147482817, 2147482811, 2147482801,
];

/// Kernel of `A mod P` in echelon form.
pub struct ModKernel {
    pub pivots: Vec<usize>,
    /// One vector per free column `f`, normalized to `v_f = 1` and zero on the
    /// other free columns.
    pub basis: Vec<Vec<u64>>,
}

fn pow_mod<const P: u64>(mut b: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    b %= P;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    acc
}

// The modulus is a const parameter so every `% P` compiles to a
// multiply-and-shift sequence instead of a hardware division.
fn kernel_mod<const P: u64>(a: &ExactMatrix) -> ModKernel {
    let n = a.order();
    let big_p = BigInt::from(P);
    let mut rows: Vec<Vec<u64>> = (0..n)
        .map(|i| {
            a.row(i)
                .iter()
                .map(|x| match x.to_i64() {
                    Some(v) => v.rem_euclid(P as i64) as u64,
                    None => x.mod_floor(&big_p).to_u64().unwrap(),
                })
                .collect()
        })
        .collect();

    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        if r == n {
            break;
        }
        let Some(p) = (r..n).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(p, r);
        let inv = pow_mod::<P>(rows[r][c], P - 2);
        for x in &mut rows[r][c..] {
            *x = *x * inv % P;
        }
        let (top, bottom) = rows.split_at_mut(r + 1);
        let pivot_row = &top[r][c..];
        for row in bottom.iter_mut() {
            let f = row[c];
            if f == 0 {
                continue;
            }
            let neg = P - f;
            for (x, &y) in row[c..].iter_mut().zip(pivot_row) {
                *x = (*x + neg * y) % P;
            }
        }
        pivots.push(c);
        r += 1;
    }

    let mut is_pivot = vec![false; n];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let basis = (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![0u64; n];
            v[f] = 1;
            for (i, &pc) in pivots.iter().enumerate().rev() {
                let row = &rows[i];
                let mut s = 0u64;
                for j in pc + 1..n {
                    if v[j] != 0 && row[j] != 0 {
                        s = (s + row[j] * v[j]) % P;
                    }
                }
                v[pc] = (P - s) % P;
            }
            v
        })
        .collect();
    ModKernel { pivots, basis }
}

macro_rules! dispatch {
    ($idx:expr, $a:expr, [$($i:literal),*]) => {
        match $idx {
            $($i => kernel_mod::<{ PRIMES[$i] }>($a),)*
            _ => unreachable!(),
        }
    };
}

fn kernel_mod_prime(idx: usize, a: &ExactMatrix) -> ModKernel {
    dispatch!(
        idx,
        a,
        [
            0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23,
            24, 25, 26, 27, 28, 29, 30, 31, 32, 33, 34, 35, 36, 37, 38, 39
        ]
    )
}

/// Rational reconstruction of `a mod m` with numerator and denominator
/// bounded by `sqrt(m / 2)`. Returns `(num, den)` with `den > 0`.
pub fn rational_reconstruct(a: &BigInt, m: &BigInt) -> Option<(BigInt, BigInt)> {
    let bound = (m / BigInt::from(2)).sqrt();
    let (mut r0, mut r1) = (m.clone(), a.mod_floor(m));
    let (mut s0, mut s1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        r0 = std::mem::replace(&mut r1, r2);
        let s2 = &s0 - &q * &s1;
        s0 = std::mem::replace(&mut s1, s2);
    }
    if s1.is_zero() || s1.abs() > bound || !r1.gcd(&s1).is_one() {
        return None;
    }
    if s1.is_negative() {
        Some((-r1, -s1))
    } else {
        Some((r1, s1))
    }
}

struct Lift {
    pivots: Vec<usize>,
    modulus: BigInt,
    /// CRT images of the basis vectors, reduced into `[0, modulus)`.
    images: Vec<Vec<BigInt>>,
}

impl Lift {
    fn absorb(&mut self, p: u64, basis: &[Vec<u64>]) {
        let bp = BigInt::from(p);
        let inv = self
            .modulus
            .mod_floor(&bp)
            .modpow(&BigInt::from(p - 2), &bp);
        for (img, res) in self.images.iter_mut().zip(basis) {
            for (x, &r) in img.iter_mut().zip(res) {
                let diff = (BigInt::from(r) - &*x).mod_floor(&bp);
                let t = (diff * &inv).mod_floor(&bp);
                *x += &self.modulus * t;
            }
        }
        self.modulus *= bp;
    }

    fn reconstruct(&self) -> Option<Vec<Vec<BigInt>>> {
        self.images
            .iter()
            .map(|img| {
                let fracs: Vec<(BigInt, BigInt)> = img
                    .iter()
                    .map(|x| rational_reconstruct(x, &self.modulus))
                    .collect::<Option<_>>()?;
                let lcm = fracs
                    .iter()
                    .fold(BigInt::one(), |l, (_, d)| l.lcm(d));
                Some(fracs.into_iter().map(|(nu, d)| nu * (&lcm / d)).collect())
            })
            .collect()
    }
}

/// Certified nullity and kernel; `None` if the prime list was exhausted.
pub fn nullity_kernel_modular(a: &ExactMatrix) -> Option<KernelResult> {
    let sparse = a.sparse_rows();
    let verifies = |v: &[BigInt]| {
        sparse.iter().all(|row| {
            row.iter()
                .map(|&(j, x)| x * &v[j])
                .sum::<BigInt>()
                .is_zero()
        })
    };

    let mut lift: Option<Lift> = None;
    for (idx, &p) in PRIMES.iter().enumerate() {
        let mk = kernel_mod_prime(idx, a);
        if mk.basis.is_empty() {
            return Some(KernelResult::from_basis(0, Vec::new()));
        }
        let accept_fresh = match &lift {
            None => true,
            Some(l) => {
                let (ours, theirs) = (&l.pivots, &mk.pivots);
                theirs.len() > ours.len() || (theirs.len() == ours.len() && theirs < ours)
            }
        };
        if accept_fresh {
            lift = Some(Lift {
                pivots: mk.pivots.clone(),
                modulus: BigInt::one(),
                images: vec![vec![BigInt::zero(); a.order()]; mk.basis.len()],
            });
        } else if lift.as_ref().is_some_and(|l| l.pivots != mk.pivots) {
            continue;
        }
        let l = lift.as_mut().unwrap();
        l.absorb(p, &mk.basis);
        if let Some(basis) = l.reconstruct() {
            if basis.iter().all(|v| verifies(v)) {
                return Some(KernelResult::from_basis(basis.len(), basis));
            }
        }
    }
    None
}
