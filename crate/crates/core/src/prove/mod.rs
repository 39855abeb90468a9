//! Interval proofs, series certificates and exact checks.

mod bisect;
mod exact_checks;
mod limits;
mod nearzero;
mod registry;
mod taylor;
mod verify;

pub use bisect::{prove_positive, recheck_certificate, Leaf, ProofResult, ProofStats, ProveOptions, Status, Witness};
pub use exact_checks::{
    identity_check, sequence_check, IdentityFailure, IdentityId, IdentityReport, SequenceId, SequenceMode, SequenceReport,
    SignRecord,
};
pub use limits::{limit_report, scan_extremum, Endpoint, LimitReport, ScanReport, SCAN_GRID};
pub use nearzero::{
    largest_certified_epsilon, near_zero_certificate, near_zero_certificate_for, Coefficient, DifferenceSeries, Weight,
};
pub use registry::{ratio_expression, ratio_text, sharp_constant, sharp_constant_exact, sharp_constant_text, Side};
pub use taylor::{enclose, taylor_coefficients, taylor_form};
pub use verify::{core_domain, registered_claim, verify_inequality, VerifyOptions};
