//! Ordered groupoids: `G(S)` with its evaluation functor, the chain
//! groupoid `G(E)`, singular E-squares, the inductive axioms, and the
//! reconstruction of `S` as `G(S)/p`.

mod chain;
mod gs;
mod ordered;
mod reconstruct;

pub use chain::{build_ge, chains_up_to, check_chain_groupoid, EChain};
pub use gs::{
    build_gs, check_epsilon_commutative, check_inductive_axioms, inductive_report,
    singular_squares, ESquare, GroupoidGS, InductiveReport, InversePair, SingularSquare,
    Singularity,
};
pub use ordered::{OrderedGroupoid, OrderedGroupoidReport};
pub use reconstruct::{p_related, reconstruct, reconstruct_with, Reconstruction};
