//! Exact-arithmetic engine for delta-invariant lower bounds on quasismooth
//! Fano 3-fold weighted hypersurfaces of index 1.
//!
//! The library is organized around the computation pipeline:
//!
//! * [`exactmath`] — arbitrary-precision rationals, sparse bivariate
//!   polynomials, closed-form definite integration, and a floating-point
//!   Gauss–Legendre oracle used only for cross-checking.
//! * [`geometry`] — family arithmetic in weighted projective space:
//!   anticanonical degree, monomial enumeration, cyclic-quotient singularity
//!   baskets, Kawamata blow-up numerics.
//! * [`centers`] — classification of singular points as birational-involution
//!   centers (QI/EI/IEI) and maximal-center tests on explicit members.
//! * [`flags`] — piecewise Zariski-decomposition profiles for the four flag
//!   constructions (I, IIa, IIb, BL) plus validated custom profiles.
//! * [`delta`] — S-invariant evaluation over profiles, closed forms, min-term
//!   assembly into verdicts, and alpha-to-delta conversion.
//! * [`catalog`] — the per-family, per-point case ledger for the eleven
//!   birationally rigid families, with an end-to-end verification sweep.

pub mod catalog;
pub mod centers;
pub mod delta;
pub mod exactmath;
pub mod flags;
pub mod geometry;

pub use catalog::{case_select, entries, verify, verify_all, CaseEntry, Summary, VerifyReport};
pub use centers::{
    bi_center_kind, classify_iei, classify_qi, BiCenterKind, CenterClass, CenterKind, TriState,
    WeightedPoly,
};
pub use delta::{
    alpha_to_delta, bl_closed_forms, delta_bound, f_term_closed_form, isolating_alpha_bound,
    s_values, DeltaVerdict, SBreakdown,
};
pub use exactmath::{BiPoly, LinForm, Rational, UniPoly};
pub use flags::{
    check_negative_definite, intersection_from_adjunction, solve_residual_intersections, FlagSpec,
    Segment, ZariskiProfile,
};
pub use geometry::{Family, KawamataData, QuotientSingularity};

/// Errors shared by every module of the engine.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("empty or negative interval: [{0}, {1}]")]
    EmptyInterval(String, String),
    #[error("malformed rational `{0}`")]
    BadRational(String),
    #[error("malformed monomial name `{0}` (coordinates are x, y, z, t, w)")]
    BadMonomial(String),
    #[error("bad family literal `{0}`: {1}")]
    BadFamilyLiteral(String, String),
    #[error("invalid family (d; a0..a4) = ({0}; {1:?}): {2}")]
    InvalidFamily(u64, [u64; 5], String),
    #[error("unknown family id {0}")]
    UnknownFamily(u64),
    #[error("stratum {0} contained in X: general member has non-isolated singularities")]
    StratumContained(String),
    #[error("quotient type 1/{0}({1},{2},{3}) is not terminal")]
    NonTerminal(u64, u64, u64, u64),
    #[error("vertex {0} admits no implicit-function coordinate: member not quasismooth there")]
    NotQuasismoothVertex(usize),
    #[error("degree mismatch: monomial {0:?} has degree {1}, hypersurface degree is {2}")]
    DegreeMismatch([u32; 5], u64, u64),
    #[error("not a QI center: no index j with d = 2a_k + a_j for k = {0}")]
    NotQiCenter(usize),
    #[error("QI normalization did not terminate (quasi-linear coefficient feedback)")]
    NormalizationDiverged,
    #[error("IEI classification applies only to the 1/3(1,1,2) point of family 23, got {0}")]
    WrongFamily(String),
    #[error("not a valid {0} configuration: {1}")]
    InvalidFlag(&'static str, String),
    #[error("invalid profile at segment {segment}: {reason}")]
    InvalidProfile { segment: usize, reason: String },
    #[error("point {0} not in the basket of family {1}")]
    PointNotInBasket(String, u64),
    #[error("no case ({0}) at {1} in family {2}")]
    NoSuchCase(String, String, u64),
    #[error("division by zero in {0}")]
    DivisionByZero(&'static str),
    #[error("malformed polynomial file, line {0}: {1}")]
    BadPolyFile(usize, String),
    #[error("malformed ledger, line {0}: {1}")]
    BadLedger(usize, String),
    #[error("bad point selector `{0}` (expected \"1/r(w1,w2,w3)\")")]
    BadPointSelector(String),
    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
