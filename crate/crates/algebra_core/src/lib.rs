//! Graded bracket tables for the planar exotic-symmetry family.
//!
//! The crate carries a catalog of Lie (super)algebras in the exact form
//! the rest of the workspace consumes: structure constants over the
//! shared parameter field, graded Jacobi verification, exact changes of
//! basis, Inonu-Wigner contractions as Laurent limits in a contraction
//! frequency, classical Casimir checks, and a versioned JSON image.
//!
//! Tables are immutable once built; every operation returns a fresh
//! table or a report.

mod basis;
mod casimir;
mod catalog;
mod contract;
mod error;
mod json;
mod table;

pub use basis::{change_basis, invert, rewrite_brackets, BasisMap, Matrix};
pub use casimir::{casimir_check, CasimirFailure, CasimirReport, QuadraticForm};
pub use catalog::{catalog_load, CATALOG};
pub use contract::{
    ads3_chiral_to_enh_scheme, ads3_cov_to_enh_scheme, cube_vertex, iw_contract,
    kinematic_contraction_suite, ContractionArrow, ContractionKind, ContractionScheme,
    CONTRACTION_PARAM,
};
pub use error::AlgebraError;
pub use json::{
    table_from_json, table_from_json_str, table_to_json, table_to_json_string, SCHEMA_VERSION,
};
pub use table::{
    table_from_parts, BracketTable, GenCombo, Generator, JacobiReport, JacobiViolation, Parity,
    TableBuilder,
};
