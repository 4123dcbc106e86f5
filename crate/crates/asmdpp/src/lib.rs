//! Alternating sign matrices, descending plane partitions, permutations,
//! the four statistics they share, lattice-path representations, and a
//! statistic-preserving bijection — with exhaustive verification at small
//! dimension built in.
//!
//! The crate is organized around three object families and the maps
//! between them:
//!
//! * [`Dpp`] — descending plane partitions, validated shifted arrays with
//!   weakly decreasing rows and strictly decreasing columns;
//! * [`Asm`] — alternating sign matrices over `{-1, 0, 1}`;
//! * [`Permutation`] / [`InversionWord`] — permutations in one-line
//!   notation and their inversion-word encoding.
//!
//! Both ASMs and DPPs carry the statistic quadruple
//! [`StatQuadruple`]`(p, m, t, b)`, and the two families are
//! equidistributed with respect to it ([`verify_equidistribution`]).
//! Restricted to permutation matrices and DPPs without special parts the
//! correspondence becomes an explicit bijection ([`perm_to_dpp`] /
//! [`dpp_to_perm`]) built from inversion words and non-intersecting
//! lattice paths ([`dpp_to_paths`] / [`paths_to_dpp`]).
//!
//! Everything is exhaustively checkable at desk scale, and the
//! [`verify`] module does exactly that:
//!
//! ```
//! use asmdpp::{verify_bijection_exhaustive, verify_equidistribution, Projection};
//!
//! let eq = verify_equidistribution(4, Projection::Quadruple, false)?;
//! assert!(eq.pass);
//! let bij = verify_bijection_exhaustive(5, false)?;
//! assert!(bij.pass && bij.cases == 120);
//! # Ok::<(), asmdpp::SizeOutOfRange>(())
//! ```
//!
//! All types are immutable values after construction and all operations
//! are pure functions, so everything is `Send + Sync` and may be used
//! freely across threads; the exhaustive sweeps take a `parallel` flag
//! that partitions the work internally.

pub mod asm;
pub mod bijection;
pub mod dpp;
pub mod enumerate;
pub mod paths;
pub mod perm;
pub mod stats;
pub mod verify;

pub use asm::{Asm, AsmError};
pub use bijection::{
    check_preservation, dpp_to_perm, perm_to_dpp, perm_to_path_family, BijectionError,
    PreservationReport,
};
pub use dpp::{Dpp, DppError};
pub use enumerate::{
    enumerate_asms, enumerate_dpps, enumerate_perms, SizeOutOfRange, ASM_MAX_N, DPP_MAX_N,
    PERM_MAX_N,
};
pub use paths::{
    check_nonintersecting, dpp_to_paths, paths_to_dpp, LatticePath, PathError, PathFamily, Step,
};
pub use perm::{InversionWord, PermError, Permutation};
pub use stats::{StatQuadruple, StatTriplet};
pub use verify::{
    verify_bijection_exhaustive, verify_equidistribution, BijectionReport, EquidistributionReport,
    Projection, StatHistogram,
};
