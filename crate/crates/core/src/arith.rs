//! Exact integer and rational arithmetic plus the elementary number-theoretic
//! functions every other module consumes: integer square roots, divisor sums,
//! the Kronecker symbol and conductor decomposition of discriminants.
//!
//! All Euler-characteristic arithmetic is done in exact rationals ([`Rat`]);
//! the enumeration kernels elsewhere in the crate work on `u64`/`i64`, which
//! hold every intermediate value with room to spare for discriminants up to
//! 1e8.

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{Error, Result};

/// Exact rational number. Always stored in lowest terms with positive
/// denominator; equality is value equality.
pub type Rat = num_rational::BigRational;

/// Build a [`Rat`] from an integer pair (denominator must be nonzero).
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Squares modulo 64 occupy only 12 residue classes; used as a cheap filter
/// before taking an integer square root.
const SQUARE_MOD_64: u64 = {
    let mut mask = 0u64;
    let mut r = 0u64;
    while r < 64 {
        mask |= 1 << ((r * r) % 64);
        r += 1;
    }
    mask
};

/// Floor of the square root of `n`, exact for all `u64`.
pub fn isqrt_u64(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut r = (n as f64).sqrt() as u64;
    // One float round-trip can be off by one in either direction.
    while r.checked_mul(r).is_none_or(|sq| sq > n) {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).is_some_and(|sq| sq <= n) {
        r += 1;
    }
    r
}

/// Floor of the square root; `DomainError` on negative input.
pub fn isqrt(n: i64) -> Result<i64> {
    if n < 0 {
        return Err(Error::Domain(format!("isqrt of negative number {n}")));
    }
    Ok(isqrt_u64(n as u64) as i64)
}

/// Whether `n` is a perfect square.
pub fn is_square_u64(n: u64) -> bool {
    if (SQUARE_MOD_64 >> (n % 64)) & 1 == 0 {
        return false;
    }
    let r = isqrt_u64(n);
    r * r == n
}

/// Whether `n` is a perfect square; `DomainError` on negative input.
pub fn is_square(n: i64) -> Result<bool> {
    if n < 0 {
        return Err(Error::Domain(format!("is_square of negative number {n}")));
    }
    Ok(is_square_u64(n as u64))
}

/// Divisor sum σ₁(n) = Σ_{d | n} d, by trial division up to √n.
pub fn sigma1(n: u64) -> Result<u64> {
    if n < 1 {
        return Err(Error::Domain(format!("sigma1 requires n >= 1, got {n}")));
    }
    Ok(sigma1_raw(n))
}

pub(crate) fn sigma1_raw(n: u64) -> u64 {
    let mut sum = 0u64;
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            sum += d;
            let q = n / d;
            if q != d {
                sum += q;
            }
        }
        d += 1;
    }
    sum
}

/// Kronecker symbol (a/n), the extension of the Jacobi symbol to all
/// integers n. Fully multiplicative in n, with
/// (a/2) = 0 if a is even, +1 if a ≡ ±1 mod 8 and −1 if a ≡ ±3 mod 8.
pub fn kronecker(a: i64, n: i64) -> i32 {
    if n == 0 {
        return if a == 1 || a == -1 { 1 } else { 0 };
    }
    let mut a = a;
    let mut n = n;
    let mut result = 1i32;
    if n < 0 {
        n = -n;
        if a < 0 {
            result = -result;
        }
    }
    if n % 2 == 0 {
        if a % 2 == 0 {
            return 0;
        }
        while n % 2 == 0 {
            n /= 2;
            let r = a.rem_euclid(8);
            if r == 3 || r == 5 {
                result = -result;
            }
        }
    }
    // Jacobi symbol for odd n > 0 via quadratic reciprocity.
    a = a.rem_euclid(n);
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            let r = n % 8;
            if r == 3 || r == 5 {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}

/// gcd of three integers, taken over absolute values; gcd(0, 0, n) = |n|.
pub fn gcd3(a: i64, b: i64, c: i64) -> u64 {
    a.unsigned_abs()
        .gcd(&b.unsigned_abs())
        .gcd(&c.unsigned_abs())
}

/// gcd of four integers over absolute values.
pub fn gcd4(a: i64, b: i64, c: i64, d: i64) -> u64 {
    gcd3(a, b, c).gcd(&d.unsigned_abs())
}

/// Whether `n` is a fundamental discriminant: either n ≡ 1 mod 4 and
/// squarefree, or n = 4m with m ≡ 2, 3 mod 4 and m squarefree.
/// (n = 1 counts as the degenerate fundamental discriminant of the
/// square case.)
pub fn is_fundamental_discriminant(n: u64) -> bool {
    if n == 0 {
        return false;
    }
    match n % 4 {
        1 => is_squarefree(n),
        0 => {
            let m = n / 4;
            (m % 4 == 2 || m % 4 == 3) && is_squarefree(m)
        }
        _ => false,
    }
}

fn is_squarefree(n: u64) -> bool {
    let mut n = n;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return false;
            }
        }
        p += 1;
    }
    true
}

/// A validated positive discriminant D ≡ 0, 1 mod 4 together with its
/// conductor decomposition D = f²·D₀, where D₀ is fundamental.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Discriminant {
    value: u64,
    conductor: u64,
    fundamental: u64,
    is_square: bool,
    residue: u8,
}

impl Discriminant {
    /// Validate `n` and compute its conductor decomposition by trial removal
    /// of square factors followed by fundamental-discriminant normalization.
    pub fn new(n: i64) -> Result<Self> {
        if n <= 0 || n % 4 == 2 || n % 4 == 3 {
            return Err(Error::NotADiscriminant(n));
        }
        let value = n as u64;
        // Split value = f0² · m with m squarefree.
        let mut m = value;
        let mut f0 = 1u64;
        let mut p = 2u64;
        while p * p <= m {
            while m % (p * p) == 0 {
                m /= p * p;
                f0 *= p;
            }
            p += 1;
        }
        let (conductor, fundamental) = if m % 4 == 1 {
            (f0, m)
        } else {
            // m ≡ 2, 3 mod 4 forces f0 even because value ≡ 0, 1 mod 4.
            debug_assert_eq!(f0 % 2, 0);
            (f0 / 2, 4 * m)
        };
        debug_assert_eq!(conductor * conductor * fundamental, value);
        debug_assert!(is_fundamental_discriminant(fundamental));
        Ok(Discriminant {
            value,
            conductor,
            fundamental,
            is_square: m == 1,
            residue: (value % 4) as u8,
        })
    }

    /// The discriminant itself.
    pub fn value(&self) -> u64 {
        self.value
    }

    /// The conductor f in D = f²·D₀.
    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// The fundamental discriminant D₀ in D = f²·D₀ (D₀ = 1 for square D).
    pub fn fundamental(&self) -> u64 {
        self.fundamental
    }

    /// True exactly when D is a perfect square (equivalently D₀ = 1).
    pub fn is_square(&self) -> bool {
        self.is_square
    }

    /// D mod 4, always 0 or 1.
    pub fn residue(&self) -> u8 {
        self.residue
    }
}

impl std::fmt::Display for Discriminant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// All nonsquare discriminants in `[from, to]`, ascending.
pub fn nonsquare_discriminants(from: u64, to: u64) -> Vec<u64> {
    (from..=to)
        .filter(|&n| (n % 4 == 0 || n % 4 == 1) && !is_square_u64(n))
        .collect()
}
