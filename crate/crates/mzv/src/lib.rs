//! Exact values of multiple zeta functions and multiple zeta star functions
//! at non-positive integers.
//!
//! Everything is computed over the rationals. Values are available through
//! several independent routes (recurrences, Stirling-polynomial closed forms,
//! asymptotic coefficients, Gregory coefficients), and [`verify`] checks the
//! identities that tie those routes together.
//!
//! ```
//! use mzv::{mzf_rev, mzf_rev_stirling, rat, IndexTuple};
//!
//! let l: IndexTuple = "1,1".parse().unwrap();
//! assert_eq!(mzf_rev(&l), rat(1, 240));
//! assert_eq!(mzf_rev_stirling(&l), mzf_rev(&l));
//! ```

pub mod asym;
pub mod bernoulli;
pub mod cache;
pub mod cli;
pub mod error;
pub mod exact;
pub mod stirling;
pub mod values;
pub mod verify;

pub use asym::{
    admissible_n_set, asym_coeff, c_ir, c_ir_explicit, c_ir_recurrence, enumerate_i, enumerate_j,
    gregory, gregory_origin_check, parity_check, rev_via_gregory, star_coeff_relation_check,
    CompositionPair, DirectionVector, ShiftVector,
};
pub use bernoulli::{
    bernoulli_higher_order, bernoulli_number, bernoulli_poly, choi_identity_check, choi_value,
    zeta_neg, zeta_star_neg,
};
pub use error::{Error, Result};
pub use exact::{int, parse_rational, rat, Poly, Rational, Series, Var};
pub use stirling::{
    stirling_first, stirling_poly_first, stirling_poly_second, stirling_second, stirling_transform,
    TransformDirection,
};
pub use values::{
    akiyama_tanigawa_reg, akiyama_tanigawa_rev, mzf_reg, mzf_rev, mzf_rev_stirling, mzsf_reg,
    mzsf_rev, mzsf_rev_stirling, prop_zero_padding_check, sign_theorem_check, value, IndexTuple,
    ValueKind,
};
