//! Belief propagation on binary, GF(4) and supernode factor graphs.

mod check;
mod engine;
mod exact;
mod graph;

pub use check::{check_update_gf2, check_update_gf4, check_update_supernode};
pub use engine::{decode, BpConfig, BpOutput, BpWorkspace};
pub use exact::{brute_force_exact, ExactResult, MAX_CONFIGS};
pub use graph::{expand_syndrome, supernode_syndrome, CheckKind, FactorGraph};
