//! Class numbers h(−C) of imaginary quadratic orders, computed by
//! enumerating primitive reduced binary quadratic forms.
//!
//! A form ax² + bxy + cy² of discriminant b² − 4ac = −C is reduced if
//! |b| ≤ a ≤ c with b ≥ 0 whenever |b| = a or a = c; each class of
//! primitive positive-definite forms contains exactly one reduced
//! representative, so h(−C) is the number of reduced primitive triples.

use serde::Serialize;

use crate::arith::gcd3;
use crate::error::{Error, Result};

/// A primitive reduced binary quadratic form (a, b, c) of negative
/// discriminant b² − 4ac = −C.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ReducedForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl ReducedForm {
    /// b² − 4ac, always the negative of the target C.
    pub fn discriminant(&self) -> i64 {
        self.b * self.b - 4 * self.a * self.c
    }

    /// |b| ≤ a ≤ c, with b ≥ 0 if |b| = a or a = c.
    pub fn is_reduced(&self) -> bool {
        let (a, b, c) = (self.a, self.b, self.c);
        a >= 1 && b.abs() <= a && a <= c && (b >= 0 || (b.abs() != a && a != c))
    }

    /// gcd(a, b, c) = 1.
    pub fn is_primitive(&self) -> bool {
        gcd3(self.a, self.b, self.c) == 1
    }
}

fn check_valid(c: u64) -> Result<()> {
    if c == 0 || (c % 4 != 0 && c % 4 != 3) {
        // −C must be ≡ 0 or 1 mod 4 to be a discriminant.
        return Err(Error::NotADiscriminant(-(c as i64)));
    }
    Ok(())
}

/// Visit every primitive reduced form of discriminant −C, in lexicographic
/// (a, b, c) order. Single source of truth for both listing and counting.
fn for_each_reduced_form(c: u64, mut visit: impl FnMut(i64, i64, i64)) {
    let cc = c as i64;
    let mut a = 1i64;
    while 3 * a * a <= cc {
        // b² ≡ −C mod 4 forces b ≡ C mod 2.
        let mut b = -a;
        if (b - cc).rem_euclid(2) != 0 {
            b += 1;
        }
        while b <= a {
            let num = b * b + cc;
            if num % (4 * a) == 0 {
                let q = num / (4 * a);
                let boundary = b.abs() == a || a == q;
                if q >= a && (b >= 0 || !boundary) && gcd3(a, b, q) == 1 {
                    visit(a, b, q);
                }
            }
            b += 2;
        }
        a += 1;
    }
}

/// All primitive reduced forms of discriminant −C, sorted lexicographically
/// by (a, b, c); exactly one representative per form class.
pub fn list_reduced_forms(c: u64) -> Result<Vec<ReducedForm>> {
    check_valid(c)?;
    let mut forms = Vec::new();
    for_each_reduced_form(c, |a, b, q| forms.push(ReducedForm { a, b, c: q }));
    Ok(forms)
}

/// The class number h(−C) of the imaginary quadratic order of
/// discriminant −C; always ≥ 1.
pub fn h_neg(c: u64) -> Result<u64> {
    check_valid(c)?;
    let mut count = 0u64;
    for_each_reduced_form(c, |_, _, _| count += 1);
    Ok(count)
}

/// Independent exhaustive-search oracle: enumerate all |b| ≤ a ≤ c' ≤ C with
/// b² − 4ac' = −C and filter by the reduction and primitivity predicates.
/// Kept deliberately separate from the production enumeration; used by tests
/// and the acceptance suite.
pub fn brute_force_reduced_forms(c: u64) -> Result<Vec<ReducedForm>> {
    check_valid(c)?;
    let cc = c as i64;
    let mut forms = Vec::new();
    // The filter keeps only |b| ≤ a ≤ c', so b² − 4ac' = −C forces
    // 3a² ≤ C and 4ac' ≤ a² + C; the scan stops exactly there.
    let mut a = 1i64;
    while 3 * a * a <= cc {
        let mut q = a;
        while 4 * a * q - a * a <= cc {
            for b in -a..=a {
                if b * b - 4 * a * q != -cc {
                    continue;
                }
                let form = ReducedForm { a, b, c: q };
                if form.is_reduced() && form.is_primitive() {
                    forms.push(form);
                }
            }
            q += 1;
        }
        a += 1;
    }
    forms.sort_by_key(|f| (f.a, f.b, f.c));
    Ok(forms)
}
