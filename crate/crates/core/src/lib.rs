//! Exact construction and analysis of generalized Cayley-Dickson doublings.

pub mod algebra;
pub mod doubling;
pub mod error;
pub mod field;
pub mod linalg;
pub mod isomaps;
pub mod structure;

pub use algebra::{AlgElement, Algebra, EtaleKind, NucleusPart, Provenance, Side};
pub use doubling::{dickson_double, make_etale, make_octonion, make_quaternion, make_quaternion_char2, DoublingSpec, Placement};
pub use error::{Error, Result};
pub use field::{FieldSpec, FieldValue};
pub use linalg::{Matrix, Subspace};
pub use isomaps::{fingerprint, AlgebraMap, Fingerprint, HomFailure, MapParams};
pub use structure::{certify, derivations, division_certificate, DerivationAlgebra, DivisionCertificate, Verdict};
