//! Executable experiments: perturbation identities, the DFT counterexample
//! family and its growth laws, Lipschitz scans, bound audits and the
//! class-𝒞 check.

pub mod audit;
pub mod config;
pub mod counterexample;
pub mod identities;
pub mod probe;
pub mod random;
pub mod records;
pub mod scan;
pub mod trials;

pub use audit::{audit_trial, audit_trials, regime_exponents};
pub use config::{parse_exponent, RunConfig};
pub use counterexample::{
    build_counterexample, build_scaled_counterexample, dft_frame, dyadic_level, growth_law, holder_witness,
    measure_growth, scaled_counterexample, BesovInvariance, CounterexampleInstance, ScaledReport, LAW_TOL,
};
pub use identities::{
    verify_identity_102, verify_identity_121, verify_identity_121_via_reps, verify_identity_71,
    verify_identity_71_via_reps, LipschitzRatio, PerturbationReport, Residual, ScalarPerturbationReport,
};
pub use probe::{regime_probe, ProbeRecord};
pub use random::{random_hermitian, random_trigpoly1, random_trigpoly2, random_unitary, trial_rng, DEFAULT_SEED};
pub use records::{loglog_slope, records_to_csv, relative_verdict, ScanRecord};
pub use scan::{class_c_check, lipschitz_scan, random_class_c, random_pairs, ClassCReport, ScanFamily, CLASS_C_AUDIT};
pub use trials::{identity_trial, identity_trials, IdentityKind, IdentityRecord, MAX_TRIAL_DEGREE};
