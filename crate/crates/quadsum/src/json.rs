//! Line-oriented JSON records for witnesses.

use serde::{Deserialize, Serialize};

use quadsum_core::{validate_witness, Result, Statement, Witness};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub n: i64,
    pub statement: String,
    pub values: Vec<i64>,
    pub terms: Vec<i64>,
    /// the integer the terms sum to (n itself unless the statement represents
    /// n², 2n² or an affine image of n)
    pub target: i64,
}

impl WitnessRecord {
    pub fn new(s: &Statement, n: i64, w: &Witness) -> Self {
        WitnessRecord {
            n,
            statement: s.id.clone(),
            values: w.values.clone(),
            terms: w.terms.clone(),
            target: w.n,
        }
    }

    pub fn to_witness(&self) -> Witness {
        Witness {
            n: self.target,
            values: self.values.clone(),
            terms: self.terms.clone(),
        }
    }

    /// Checks the record from scratch against `s`.
    pub fn revalidate(&self, s: &Statement) -> Result<bool> {
        Ok(s.id == self.statement
            && s.target_for(self.n)? == self.target
            && validate_witness(s, &self.to_witness())?)
    }
}
