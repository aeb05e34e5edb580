//! Repair schemes for Reed-Solomon codes over prime fields.
//!
//! Over a prime field a helper node cannot send a fraction of its symbol
//! through a linear map, so any repair cheaper than shipping whole symbols
//! must be nonlinear. This crate implements such schemes: each helper labels
//! its symbol with the cell index of a scaled arithmetic-progression
//! partition of F_p, and the failed symbol is reconstructed from the cell
//! indices alone. Scheme validity is decided by an exhaustive search oracle,
//! repair by the matching search decoder.
//!
//! The crate provides:
//! - exact F_p arithmetic with a centered-integer view, sumsets, and the
//!   lcm/gcd inequalities the constructions rest on ([`field`], [`numtheory`]);
//! - Reed-Solomon encoding, Lagrange interpolation, puncturing, and affine
//!   reparameterization ([`code`]);
//! - partitions, scheme validation, repair, and the extension-field lift
//!   ([`repair`]);
//! - explicit constructions: a [4,2] demonstration code, the two-half
//!   construction, orbit helper families, folded codes, and a randomized
//!   search for dimension-2 codes ([`constructions`]);
//! - bandwidth reports against the cut-set, improved, trivial, and
//!   subpacketization-2 comparison bounds, plus the secret-sharing leakage
//!   attack ([`bounds`]).

pub mod bounds;
pub mod code;
pub mod constructions;
pub mod error;
pub mod field;
pub mod numtheory;
pub mod repair;

pub use bounds::{
    bandwidth_report, consistent_secret_count, improved_bound_consistency, improved_bound_holds,
    leakage_attack_demo, report_from_params, u_set, LeakageDemo, RepairReport, USetDiagnostic,
};
pub use code::{interpolate, AffineMap, Codeword, Polynomial, RsCode};
pub use constructions::{
    calibrate_t, combinations, folded_code, halved_code, halved_scheme, orbit_helper_sets,
    orbit_member_scheme, orbit_reduced_code, search_k2, search_suggested_t, suggested_t,
    toy_code_and_schemes, CalibratedT, FoldedCode, FoldedRepairPlan, HalvedCode,
    OrbitHelperFamily, OrbitMember, SearchOutcome, ToyFixture,
};
pub use error::{Error, Result};
pub use field::{IntervalSpec, PrimeField, MAX_MODULUS};
pub use numtheory::{ceil_log2, is_prime, isqrt, lcm_product_bound, nth_root_floor, LcmBoundReport};
pub use repair::{
    cell_of, linear_gap, HelperMessage, RepairScheme, SchemeValidation, StandardPartition,
    DEFAULT_ENUM_BUDGET,
};
