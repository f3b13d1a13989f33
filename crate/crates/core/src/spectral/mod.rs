//! Symmetric eigensolver and spectral checks.

mod bounds;
mod eigen;
mod verify;

pub use bounds::{
    algebraic_connectivity, degree_upper_bound, fiedler_lower_bound, spectrum_subset,
    subset_sorted, SubsetWitness,
};
pub use eigen::{eigen_residual, eigen_sym, Spectrum, MAX_SWEEPS};
pub use verify::{
    lift_eigvec_residual, verify_all, AppliedTolerances, Check, CheckId, GraphSummary,
    SpectralData, Tolerances, VerificationReport,
};
