//! The explicit contraction `inc ≃ jnc → knc ≃ lnc` of `B^n` into
//! `z_*NB^{2n}`, verified cell by cell.

mod cells;
mod chain;
mod report;
mod values;
mod verify;
#[cfg(test)]
mod tests;

pub use chain::{
    corrupt_witness, random_chain, random_transport, validate_chain, verify_witness_identities, BNChain, BNMor, BNSimplex, ChainShape,
    ChainView, DrawnChain, IdentityFailure, IdentityReport,
};
pub use cells::{cell_degeneracy, cell_face, classify, keys, BNCell, Evaluator, Key, MapKind, Mismatch, Prism};
pub use values::{basic_path, stab_in, stab_in_mor, BasicPath, Blocks, Stage, Vertex};
pub use report::{verify_chain, verify_map, verify_map_cells, CellFailure, MapReport};
pub use verify::{contract_verify, ChainRun, ContractReport, Counterexample, StageSummary, VerifyConfig};
