//! The groupoid `T_E` of ω-isomorphisms of a regular biordered set, and its
//! quotient `T_E/p`: a fundamental regular semigroup with biordered set `E`.

mod omega;
mod quotient;

pub use omega::{
    enumerate_omega_isos, p_related, restrict_left, restrict_right, tau_iso, OmegaIdeal, OmegaIso,
};
pub use quotient::{
    build_te_mod_p, build_te_mod_p_with, fundamental_image, Choice, FundamentalImage,
    FundamentalQuotient,
};
