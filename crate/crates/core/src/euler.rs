//! Exact orbifold Euler characteristics.
//!
//! χ(W_D) = −7·χ(X_D) where X_D is the Hilbert modular surface of
//! discriminant D, and
//!
//! ```text
//! χ(X_D) = 2·f³·ζ_{D₀}(−1)·F(D),   F(D) = Π_{p | f} (1 − (D₀/p)·p⁻²),
//! ```
//!
//! with D = f²·D₀ the conductor decomposition. The zeta value is evaluated
//! by Siegel's divisor sum
//!
//! ```text
//! ζ_{D₀}(−1) = (1/60) · Σ_{b ∈ ℤ, b² < D₀, b ≡ D₀ (mod 2)} σ₁((D₀ − b²)/4),
//! ```
//!
//! whose correctness here is pinned by bit-exact agreement with the 92
//! tabulated χ values (see the `corpus` module and the acceptance suite).
//! All arithmetic is exact; floating point appears only in inequality
//! spot-checks.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};

use crate::arith::{is_fundamental_discriminant, kronecker, sigma1, Discriminant, Rat};
use crate::error::{Error, Result};

/// The multiplicative pieces of χ(W_D).
#[derive(Debug, Clone, PartialEq)]
pub struct ChiBreakdown {
    /// ζ_{D₀}(−1), positive.
    pub zeta_m1: Rat,
    /// The conductor Euler product F(D); 1 for fundamental D.
    pub conductor_factor: Rat,
    /// χ(X_D) = 2·f³·ζ_{D₀}(−1)·F(D), positive.
    pub chi_x: Rat,
    /// χ(W_D) = −7·χ(X_D), negative.
    pub chi_w: Rat,
}

/// ζ_{D₀}(−1) for a fundamental discriminant D₀ > 1, as an exact rational.
pub fn zeta_m1(d0: u64) -> Result<Rat> {
    if d0 <= 1 || !is_fundamental_discriminant(d0) {
        return Err(Error::Domain(format!(
            "zeta_m1 requires a fundamental discriminant > 1, got {d0}"
        )));
    }
    let mut sum = 0u64;
    let mut b = d0 % 2;
    while b * b < d0 {
        let term = sigma1((d0 - b * b) / 4)?;
        sum += if b == 0 { term } else { 2 * term };
        b += 2;
    }
    Ok(Rat::new(BigInt::from(sum), BigInt::from(60)))
}

/// The conductor correction F(D) = Π_{p | f} (1 − (D₀/p)·p⁻²); the empty
/// product 1 when f = 1.
pub fn conductor_factor(d: &Discriminant) -> Rat {
    let d0 = d.fundamental() as i64;
    let mut factor = Rat::one();
    let mut f = d.conductor();
    let mut p = 2u64;
    while p * p <= f {
        if f % p == 0 {
            while f % p == 0 {
                f /= p;
            }
            factor *= euler_factor(d0, p);
        }
        p += 1;
    }
    if f > 1 {
        factor *= euler_factor(d0, f);
    }
    factor
}

fn euler_factor(d0: i64, p: u64) -> Rat {
    let p2 = BigInt::from(p * p);
    Rat::new(&p2 - BigInt::from(kronecker(d0, p as i64)), p2)
}

/// Assemble ζ_{D₀}(−1), F(D), χ(X_D) and χ(W_D) for a nonsquare D.
pub fn chi_breakdown(d: &Discriminant) -> Result<ChiBreakdown> {
    if d.is_square() {
        return Err(Error::SquareDiscriminant(d.value()));
    }
    let zeta = zeta_m1(d.fundamental())?;
    let factor = conductor_factor(d);
    let f = BigInt::from(d.conductor());
    let chi_x = Rat::from(BigInt::from(2) * (&f * &f * &f)) * &zeta * &factor;
    let chi_w = -Rat::from(BigInt::from(7)) * &chi_x;
    debug_assert!(chi_x.is_positive());
    Ok(ChiBreakdown {
        zeta_m1: zeta,
        conductor_factor: factor,
        chi_x,
        chi_w,
    })
}

/// ζ_{D₀}(2) = ζ(2)·L(2, χ_{D₀}) with the L-series truncated after `terms`
/// terms. The character sum has bounded partial sums, so the truncation
/// error is O(D₀/terms²). Used only by consistency checks.
pub fn zeta_d0_two_by_series(d0: u64, terms: u64) -> f64 {
    let l: f64 = (1..=terms)
        .map(|n| kronecker(d0 as i64, n as i64) as f64 / ((n * n) as f64))
        .sum();
    std::f64::consts::PI.powi(2) / 6.0 * l
}

/// Floating-point value of a [`Rat`], for inequality spot-checks.
pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().expect("rational fits in f64")
}
