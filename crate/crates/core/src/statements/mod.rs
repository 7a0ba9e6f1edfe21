//! The registry of theorem, conjecture and hypothesis statements, counting
//! sequences, and the classification searches over coefficient tuples.

mod classify;
mod registry;

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::forms::{count_witnesses, Statement};

pub use crate::prime::{is_prime_64, is_probable_prime_big};
pub use classify::{
    classify_pair, classify_quadruple, classify_triple, listed_pairs, listed_quadruples,
    pair_statement, quadruple_statement, triple_statement, PairClass, PairPart, QuadrupleClass,
    QuadruplePart, TripleClass,
};
pub use registry::{clause_ids, registry};

/// How an OEIS sequence counts representations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Convention {
    /// only tuples with |x| ≤ |y| ≤ … over interchangeable integer slots
    Canonical,
    /// every tuple counts
    Ordered,
    /// not pinned down; counting requests are refused
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OeisRef {
    pub a_number: String,
    pub convention: Convention,
}

impl OeisRef {
    pub fn is_well_formed(&self) -> bool {
        let b = self.a_number.as_bytes();
        b.len() == 7 && b[0] == b'A' && b[1..].iter().all(u8::is_ascii_digit)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatementRecord {
    pub statement: Statement,
    /// where the claim is stated, with notes on transcription choices
    pub paper_locus: String,
    /// largest n the source reports as checked, if any
    pub verified_bound_paper: Option<u64>,
    pub oeis_refs: Vec<OeisRef>,
    /// verification relies on probable-prime tests
    pub probabilistic: bool,
}

impl StatementRecord {
    pub fn id(&self) -> &str {
        &self.statement.id
    }

    /// The counting convention used by [`sequence`], if one is known.
    pub fn convention(&self) -> Option<(&str, Convention)> {
        self.oeis_refs
            .iter()
            .find(|r| r.convention != Convention::Unknown)
            .map(|r| (r.a_number.as_str(), r.convention))
    }
}

/// Suffix that selects a statement with its exclusions dropped.
pub const NO_EXCEPTIONS: &str = "-noexcept";

/// Finds a record by id. `<id>-noexcept` returns the statement with excluded
/// families and values removed.
pub fn lookup(id: &str) -> Result<StatementRecord> {
    let (base, strip) = match id.strip_suffix(NO_EXCEPTIONS) {
        Some(b) => (b, true),
        None => (id, false),
    };
    let mut rec = registry()
        .into_iter()
        .find(|r| r.statement.id == base)
        .ok_or_else(|| Error::UnknownStatement(id.to_string()))?;
    if strip {
        rec.statement = rec.statement.without_exclusions();
        rec.statement.id = id.to_string();
    }
    Ok(rec)
}

/// Witness counts for every applicable n in `[lo, hi]`, under the counting
/// convention attached to the statement.
pub fn sequence(id: &str, lo: i64, hi: i64) -> Result<Vec<(i64, u64)>> {
    let rec = lookup(id)?;
    let canonical = match rec.convention() {
        Some((_, Convention::Canonical)) => true,
        Some((_, Convention::Ordered)) => false,
        _ => return Err(Error::UnknownConvention(id.to_string())),
    };
    sequence_of(&rec.statement, canonical, lo, hi)
}

pub fn sequence_of(s: &Statement, canonical: bool, lo: i64, hi: i64) -> Result<Vec<(i64, u64)>> {
    let mut out = Vec::new();
    for n in lo..=hi {
        if s.applies(n) {
            out.push((n, count_witnesses(s, n, canonical)?));
        }
    }
    Ok(out)
}
