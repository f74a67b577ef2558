//! The reference table of topological invariants and the machinery to
//! verify a computed sweep against it.
//!
//! The embedded corpus is a checked-in transcription of the published
//! table of invariants for all 86 nonsquare discriminants D ≤ 200
//! (including the six genus-zero rows, which carry the e₅/e₆ columns).
//! It is data, not derived output: the crate never regenerates it, it only
//! recomputes every row and diffs.

use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;

use crate::arith::{Discriminant, Rat};
use crate::error::{Error, Result};
use crate::topology::{invariants, InvariantRecord};
use rayon::prelude::*;

/// CSV schema, also used by the sweep output: one row per discriminant.
pub const CSV_HEADER: &str = "D,g,chi_num,chi_den,C,e2,e3,e5,e6";

/// Embedded transcription of the published invariant tables (D ≤ 200).
pub const EMBEDDED: &str = include_str!("../data/wd6_invariants.csv");

/// One corpus row; χ is carried as an exact integer pair in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CorpusRow {
    #[serde(rename = "D")]
    pub d: u64,
    pub g: u64,
    pub chi_num: i64,
    pub chi_den: u64,
    #[serde(rename = "C")]
    pub c: u64,
    pub e2: u64,
    pub e3: u64,
    pub e5: u64,
    pub e6: u64,
}

impl CorpusRow {
    /// χ as an exact rational.
    pub fn chi(&self) -> Rat {
        Rat::new(BigInt::from(self.chi_num), BigInt::from(self.chi_den))
    }

    /// Render in the sweep/corpus CSV schema.
    pub fn to_csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.d, self.g, self.chi_num, self.chi_den, self.c, self.e2, self.e3, self.e5, self.e6
        )
    }

    /// Project a computed record onto the row schema.
    pub fn from_record(rec: &InvariantRecord) -> Self {
        use num_traits::ToPrimitive;
        CorpusRow {
            d: rec.d,
            g: rec.genus,
            chi_num: rec.chi.numer().to_i64().expect("chi numerator fits i64"),
            chi_den: rec.chi.denom().to_u64().expect("chi denominator fits u64"),
            c: rec.cusps,
            e2: rec.e2,
            e3: rec.e3,
            e5: rec.e5,
            e6: rec.e6,
        }
    }
}

/// Parse a corpus file. Rejects a bad header, unparsable fields, χ not in
/// lowest terms, duplicate or invalid discriminants, and an empty table.
pub fn parse(text: &str) -> Result<Vec<CorpusRow>> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::Corpus("empty corpus".into()))?;
    if header.trim() != CSV_HEADER {
        return Err(Error::Corpus(format!(
            "bad header {header:?}, expected {CSV_HEADER:?}"
        )));
    }
    let mut rows = Vec::new();
    for (idx, line) in lines {
        let fields: Vec<&str> = line.trim().split(',').collect();
        if fields.len() != 9 {
            return Err(Error::Corpus(format!(
                "line {}: expected 9 fields, got {}",
                idx + 1,
                fields.len()
            )));
        }
        let field = |i: usize| -> Result<i64> {
            fields[i]
                .parse::<i64>()
                .map_err(|e| Error::Corpus(format!("line {}: field {i}: {e}", idx + 1)))
        };
        let unsigned = |i: usize| -> Result<u64> {
            let v = field(i)?;
            u64::try_from(v)
                .map_err(|_| Error::Corpus(format!("line {}: field {i} must be >= 0", idx + 1)))
        };
        let row = CorpusRow {
            d: unsigned(0)?,
            g: unsigned(1)?,
            chi_num: field(2)?,
            chi_den: unsigned(3)?,
            c: unsigned(4)?,
            e2: unsigned(5)?,
            e3: unsigned(6)?,
            e5: unsigned(7)?,
            e6: unsigned(8)?,
        };
        if row.chi_den == 0 || row.chi_num.unsigned_abs().gcd(&row.chi_den) != 1 {
            return Err(Error::Corpus(format!(
                "line {}: chi {}/{} not in lowest terms",
                idx + 1,
                row.chi_num,
                row.chi_den
            )));
        }
        match Discriminant::new(row.d as i64) {
            Ok(d) if !d.is_square() && d.value() >= 5 => {}
            _ => {
                return Err(Error::Corpus(format!(
                    "line {}: D={} is not a nonsquare discriminant >= 5",
                    idx + 1,
                    row.d
                )))
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(Error::Corpus("corpus contains no rows".into()));
    }
    let mut ds: Vec<u64> = rows.iter().map(|r| r.d).collect();
    ds.sort_unstable();
    ds.dedup();
    if ds.len() != rows.len() {
        return Err(Error::Corpus("duplicate discriminant in corpus".into()));
    }
    Ok(rows)
}

/// A column-level difference between a corpus row and the recomputation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub d: u64,
    pub column: &'static str,
    pub corpus: String,
    pub computed: String,
}

/// Recompute every corpus row and diff column by column. Returns all
/// mismatches ordered by D then column; empty means the corpus is
/// reproduced exactly.
pub fn verify(rows: &[CorpusRow]) -> Result<Vec<Mismatch>> {
    let mut results: Vec<(u64, Vec<Mismatch>)> = rows
        .par_iter()
        .map(|row| {
            let d = Discriminant::new(row.d as i64)?;
            let rec = invariants(&d)?;
            Ok((row.d, diff_row(row, &rec)))
        })
        .collect::<Result<Vec<_>>>()?;
    results.sort_by_key(|(d, _)| *d);
    Ok(results.into_iter().flat_map(|(_, m)| m).collect())
}

fn diff_row(row: &CorpusRow, rec: &InvariantRecord) -> Vec<Mismatch> {
    let mut out = Vec::new();
    let mut check = |column: &'static str, corpus: String, computed: String| {
        if corpus != computed {
            out.push(Mismatch {
                d: row.d,
                column,
                corpus,
                computed,
            });
        }
    };
    check("g", row.g.to_string(), rec.genus.to_string());
    check("chi", row.chi().to_string(), rec.chi.to_string());
    check("C", row.c.to_string(), rec.cusps.to_string());
    check("e2", row.e2.to_string(), rec.e2.to_string());
    check("e3", row.e3.to_string(), rec.e3.to_string());
    check("e5", row.e5.to_string(), rec.e5.to_string());
    check("e6", row.e6.to_string(), rec.e6.to_string());
    out
}
