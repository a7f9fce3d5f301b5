//! Triple operator integrals `∭ Ψ dE₁ T dE₂ R dE₃` and Schatten audits.

pub mod audit;
pub mod eval;
pub mod reps;

pub use audit::{audit_schatten_bounds, format_exponent, BoundTheorem, RepRef, SchattenReport, Verdict};
pub use eval::{
    toi_direct, toi_direct_indexed, toi_direct_table, toi_haagerup, toi_haagerup_like_1, toi_haagerup_like_2, toi_projective,
    toi_projector_sum,
};
pub use reps::{HaagerupLikeRep1, HaagerupLikeRep2, HaagerupRep, ProjectiveRep, Table3};
