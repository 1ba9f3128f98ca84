//! Detection outcome shared by every engine.

use crate::graph::Witness;

/// Found-with-witness or not found. Every positive verdict carries a
/// witness tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DetectionReport {
    witness: Option<Witness>,
}

impl DetectionReport {
    pub fn found(witness: Witness) -> Self {
        DetectionReport { witness: Some(witness) }
    }

    pub fn not_found() -> Self {
        DetectionReport { witness: None }
    }

    pub fn is_found(&self) -> bool {
        self.witness.is_some()
    }

    pub fn witness(&self) -> Option<&Witness> {
        self.witness.as_ref()
    }

    pub fn into_witness(self) -> Option<Witness> {
        self.witness
    }

    /// Translates the witness through an order reversal on n vertices.
    pub fn mirrored(self, n: usize) -> Self {
        DetectionReport { witness: self.witness.map(|w| w.mirror(n)) }
    }
}

/// Family detection outcome: which member was found, and where.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyReport {
    /// Index into the queried family plus the witness.
    pub found: Option<(usize, Witness)>,
}

impl FamilyReport {
    pub fn is_found(&self) -> bool {
        self.found.is_some()
    }
}
