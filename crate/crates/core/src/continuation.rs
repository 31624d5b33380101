//! Meromorphic continuation and residue extraction (stub).
pub struct ContinuationConfig;
pub struct ContinuationError;
pub struct ContinuationKind;
pub struct ResidueReport;
pub fn continue_beta() {}
pub fn residue() {}
pub fn residue_numeric() {}
