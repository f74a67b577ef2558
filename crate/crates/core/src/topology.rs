//! Assembly of the topological type of W_D(6).
//!
//! The curve is connected, so with χ its orbifold Euler characteristic,
//! C its cusp count and e_d its orbifold points the genus solves
//!
//! ```text
//! 2·h₀ − 2·g = χ + C + e₂·(1/2) + e₃·(2/3) + e₅·(4/5) + e₆·(5/6).
//! ```
//!
//! Integrality of the solved genus is the cross-module consistency gate:
//! it transitively validates e₂, e₃, χ and C against one another, and a
//! non-integral result is reported as an error, never rounded.

use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;

use crate::arith::{nonsquare_discriminants, rat, Discriminant, Rat};
use crate::cusps::count_cusps;
use crate::error::{Error, Result};
use crate::euler::{chi_breakdown, rat_to_f64};
use crate::orbifold::{e2, e3, e5, e6};

/// One full row of topological invariants.
#[derive(Debug, Clone, PartialEq)]
pub struct InvariantRecord {
    pub d: u64,
    /// Connected components; the curves are connected for all D.
    pub h0: u64,
    /// Orbifold Euler characteristic χ(W_D), an exact negative rational.
    pub chi: Rat,
    /// Number of cusps.
    pub cusps: u64,
    pub e2: u64,
    pub e3: u64,
    pub e5: u64,
    pub e6: u64,
    pub genus: u64,
}

/// Compute the invariant record of a nonsquare discriminant D ≥ 5.
///
/// Fails with `NonIntegralGenus` if the orbifold Euler formula does not
/// solve to a nonnegative integer, which would mean two of the underlying
/// computations disagree.
pub fn invariants(d: &Discriminant) -> Result<InvariantRecord> {
    let breakdown = chi_breakdown(d)?; // rejects squares
    if d.value() < 5 {
        return Err(Error::Domain(format!(
            "topological invariants need D >= 5, got {}",
            d.value()
        )));
    }
    let cusps = count_cusps(d)?;
    let (e2, e5, e6) = (e2(d), e5(d), e6(d));
    let e3 = e3(d)?;
    let h0 = 1u64;

    let deficit = breakdown.chi_w.clone()
        + Rat::from_integer(cusps.into())
        + rat(e2 as i64, 2)
        + rat(2 * e3 as i64, 3)
        + rat(4 * e5 as i64, 5)
        + rat(5 * e6 as i64, 6);
    let genus_rat = (rat(2 * h0 as i64, 1) - deficit) / rat(2, 1);
    if !genus_rat.is_integer() || genus_rat.is_negative() {
        return Err(Error::NonIntegralGenus {
            d: d.value(),
            value: genus_rat.to_string(),
        });
    }
    let genus = genus_rat
        .to_integer()
        .to_u64()
        .ok_or_else(|| Error::Internal(format!("genus overflow for D={}", d.value())))?;

    Ok(InvariantRecord {
        d: d.value(),
        h0,
        chi: breakdown.chi_w,
        cusps,
        e2,
        e3,
        e5,
        e6,
        genus,
    })
}

/// Result of checking one discriminant against the proven inequalities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundsReport {
    /// g < 1 + D^{3/2}·35/(48π²)
    pub genus_upper: f64,
    pub genus_upper_ok: bool,
    /// g ≥ (3/200)·D^{3/2} − D/6 − D^{3/4} − 150
    pub genus_lower: f64,
    pub genus_lower_ok: bool,
}

const FLOAT_MARGIN: f64 = 1e-6;

/// The explicit genus upper bound.
pub fn genus_upper_bound(d: u64) -> f64 {
    1.0 + (d as f64).powf(1.5) * 35.0 / (48.0 * std::f64::consts::PI.powi(2))
}

/// The explicit genus lower bound (negative for small D).
pub fn genus_lower_bound(d: u64) -> f64 {
    let x = d as f64;
    0.015 * x.powf(1.5) - x / 6.0 - x.powf(0.75) - 150.0
}

/// Check the two genus bounds for a computed record.
pub fn check_bounds(d: &Discriminant, rec: &InvariantRecord) -> BoundsReport {
    let g = rec.genus as f64;
    let upper = genus_upper_bound(d.value());
    let lower = genus_lower_bound(d.value());
    BoundsReport {
        genus_upper: upper,
        genus_upper_ok: g < upper + FLOAT_MARGIN,
        genus_lower: lower,
        genus_lower_ok: g >= lower - FLOAT_MARGIN,
    }
}

/// One failed inequality in a [`full_bounds_audit`].
#[derive(Debug, Clone, PartialEq)]
pub struct BoundViolation {
    pub d: u64,
    pub bound: &'static str,
    pub detail: String,
}

/// Audit every proven inequality for one record: the two genus bounds, the
/// cusp bound C/2 ≤ D^{3/4} + 150 + (5/4)·χ(X_D), e₂ < D/2 and e₃ < D/6.
pub fn full_bounds_audit(d: &Discriminant, rec: &InvariantRecord) -> Vec<BoundViolation> {
    let mut violations = Vec::new();
    let v = d.value();
    let report = check_bounds(d, rec);
    if !report.genus_upper_ok {
        violations.push(BoundViolation {
            d: v,
            bound: "genus upper",
            detail: format!("g = {} >= {}", rec.genus, report.genus_upper),
        });
    }
    if !report.genus_lower_ok {
        violations.push(BoundViolation {
            d: v,
            bound: "genus lower",
            detail: format!("g = {} < {}", rec.genus, report.genus_lower),
        });
    }
    // chi_X = -chi_W / 7, positive
    let chi_x = rat_to_f64(&rec.chi) / -7.0;
    let cusp_rhs = (v as f64).powf(0.75) + 150.0 + 1.25 * chi_x;
    if rec.cusps as f64 / 2.0 > cusp_rhs + FLOAT_MARGIN {
        violations.push(BoundViolation {
            d: v,
            bound: "cusp",
            detail: format!("C/2 = {} > {cusp_rhs}", rec.cusps as f64 / 2.0),
        });
    }
    if 2 * rec.e2 >= v {
        violations.push(BoundViolation {
            d: v,
            bound: "e2",
            detail: format!("e2 = {} >= D/2", rec.e2),
        });
    }
    if 6 * rec.e3 >= v {
        violations.push(BoundViolation {
            d: v,
            bound: "e3",
            detail: format!("e3 = {} >= D/6", rec.e3),
        });
    }
    violations
}

/// Records for every nonsquare discriminant in `[from, to]`, ascending;
/// computed in parallel, output order independent of worker count.
pub fn sweep(from: u64, to: u64) -> Result<Vec<InvariantRecord>> {
    nonsquare_discriminants(from.max(5), to)
        .into_par_iter()
        .map(|v| invariants(&Discriminant::new(v as i64)?))
        .collect()
}

/// All nonsquare discriminants D ≤ max with genus 0. The sweep must reach
/// at least 21 so that the classification is meaningful.
pub fn genus_zero_classification(max: u64) -> Result<Vec<u64>> {
    if max < 21 {
        return Err(Error::Domain(format!(
            "genus-zero classification needs max >= 21, got {max}"
        )));
    }
    Ok(sweep(5, max)?
        .into_iter()
        .filter(|r| r.genus == 0)
        .map(|r| r.d)
        .collect())
}
