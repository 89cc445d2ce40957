//! Exact computation with truncated local cohomology modules of formal
//! power-series rings and their Matlis duals.
//!
//! Every module in scope is a *shaped* monomial module: each variable either
//! runs over nonnegative exponents (a power-series direction) or nonpositive
//! ones (an inverse-polynomial direction). `R = k[[X]]`, the injective hull
//! `E = k[X^-1]`, the local cohomology `H^i_{(X1..Xi)}(R)` and its Matlis
//! dual are all of this form, and an [`Element`] is a finite sum of monomials
//! in a [`TruncationBox`].

pub mod cech;
pub mod duality;
pub mod element;
pub mod expr_io;
pub mod independence;
pub mod linalg;
pub mod sample;
pub mod scalar;
pub mod suite;

pub use cech::{CechDegreePiece, CechError, CohomologyTable, EquivarianceReport};
pub use duality::{DualityError, PairingReport, RegularityReport, Torsion};
pub use element::{
    derivation_act, formal_partial, linear_combine, quotient_by_series_var, ring_act,
    AlgebraError, Element, Exponent, ModuleShape, Role, TruncationBox,
};
pub use expr_io::{
    parse_element, read_document, serialize_element, write_document, Body, Document,
    DocumentError, ParseError,
};
pub use independence::{
    DeltaEntry, DeltaSequence, IndependenceCertificate, IndependenceError, ShiftOutcome,
    ShiftWitness,
};
pub use scalar::{Field, Scalar, ScalarError};
pub use suite::{CheckReport, Suite};
