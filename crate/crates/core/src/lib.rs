//! Exact logarithmic Chern classes and Bogomolov-Gieseker discriminants of
//! log smooth pairs `(X, D)` on projective spaces, smooth hypersurfaces and
//! Hirzebruch surfaces, plus an exhaustive search for equality cases.
//!
//! All arithmetic is exact; "equality holds" is a comparison with zero.
//!
//! ```
//! use logbg::{full_report, LogPair};
//!
//! let pair = LogPair::hirzebruch_two_sections(3).unwrap();
//! let report = full_report(&pair, None).unwrap();
//! assert!(report.discriminant.is_zero());
//! assert!(report.equality_n && report.minus_k_plus_d_nef);
//! ```

pub mod ambient;
pub mod bg;
pub mod chow;
pub mod cli;
pub mod descriptor;
mod error;
pub mod log_invariants;
pub mod output;
pub mod rational;
pub mod search;
pub mod verify;

pub use ambient::{AmbientModel, ChernData, ModelKind};
pub use bg::{check_equality_n, check_equality_n_plus_1, discriminant, full_report, BGReport};
pub use chow::CycleClass;
pub use error::{Error, Result};
pub use log_invariants::{slope, wedge_cotangent_slope, Component, LogPair};
pub use rational::Rational;
pub use search::{
    count_remark_claims, enumerate, enumerate_hypersurface, enumerate_pn, EqualityCase, Family,
    Mode, SearchConfig,
};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
