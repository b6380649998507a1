//! E-cycles, proper cycle sets, presentations of `IG(E)` and `RIG(E)`, and a
//! bounded semi-decision procedure for equivalence of E-chains modulo a set
//! of cycles.

mod cycles;
mod oracle;
mod presentation;

pub use cycles::{
    check_proper, gamma0, gamma_tau, is_tau_commutative, tau_evaluate, CycleSet, ECycle,
    ProperReport, Provenance, CYCLE_PREFIX_LIMIT,
};
pub use oracle::{
    apply_move, chain_equiv_oracle, chain_product, confirm_sandwich_relations, relation_chains,
    verify_path, word_chain, MoveKind, OracleOutcome, RelationCheck, Step,
};
pub use presentation::{present_ig, present_rig, Presentation};
