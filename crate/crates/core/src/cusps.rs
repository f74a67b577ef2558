//! Cusp counting via splitting prototypes.
//!
//! W_D(6) has the same number of cusps as the genus-2 curve W_D(2), whose
//! cusps are classified by integer quadruples (a, b, c, e) with
//!
//! ```text
//! D = e² + 4bc,  b > 0,  c > 0,  c + e < b,  0 ≤ a < gcd(b, c),
//! gcd(a, b, c, e) = 1.
//! ```
//!
//! The enumeration runs e over |e| ≤ √(D−4) with e ≡ D mod 2, factors
//! (D − e²)/4 = b·c over divisor pairs and finally runs a over
//! [0, gcd(b, c)). Output order is lexicographic in (e, b, c, a) so
//! listings are reproducible.

use num_integer::Integer;
use serde::Serialize;

use crate::arith::{gcd4, isqrt_u64, Discriminant};
use crate::error::{Error, Result};

/// A splitting prototype (a, b, c, e) indexing one cusp.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Prototype {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub e: i64,
}

impl Prototype {
    /// Check the full defining conditions against a target discriminant.
    pub fn is_valid_for(&self, d: u64) -> bool {
        let Prototype { a, b, c, e } = *self;
        e * e + 4 * b * c == d as i64
            && b > 0
            && c > 0
            && c + e < b
            && 0 <= a
            && a < b.gcd(&c)
            && gcd4(a, b, c, e) == 1
    }
}

fn check_input(d: &Discriminant) -> Result<()> {
    if d.is_square() {
        return Err(Error::SquareDiscriminant(d.value()));
    }
    if d.value() < 5 {
        return Err(Error::Domain(format!(
            "cusp prototypes need D >= 5, got {}",
            d.value()
        )));
    }
    Ok(())
}

/// All prototypes for a nonsquare discriminant D ≥ 5, sorted by (e, b, c, a).
pub fn list_prototypes(d: &Discriminant) -> Result<Vec<Prototype>> {
    check_input(d)?;
    let v = d.value();
    let emax = isqrt_u64(v - 4) as i64;
    let mut protos = Vec::new();
    let mut e = -emax;
    if (e - v as i64).rem_euclid(2) != 0 {
        e += 1;
    }
    while e <= emax {
        let n = (v - (e * e) as u64) / 4;
        // divisor pairs b·c = n, collected then ordered by b
        let mut pairs: Vec<(i64, i64)> = Vec::new();
        let mut div = 1u64;
        while div * div <= n {
            if n % div == 0 {
                let (lo, hi) = (div as i64, (n / div) as i64);
                pairs.push((lo, hi));
                if lo != hi {
                    pairs.push((hi, lo));
                }
            }
            div += 1;
        }
        pairs.sort_unstable();
        for (b, c) in pairs {
            if c + e >= b {
                continue;
            }
            for a in 0..b.gcd(&c) {
                if gcd4(a, b, c, e) == 1 {
                    protos.push(Prototype { a, b, c, e });
                }
            }
        }
        e += 2;
    }
    Ok(protos)
}

/// The cusp count C(W_D(6)) = C(W_D(2)): the number of prototypes.
pub fn count_cusps(d: &Discriminant) -> Result<u64> {
    Ok(list_prototypes(d)?.len() as u64)
}
