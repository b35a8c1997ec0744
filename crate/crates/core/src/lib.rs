//! Exact computation of derivations of quandle algebras `k[X]` over the
//! rationals and prime fields, together with the Lie transformation algebra
//! generated by left and right multiplications.
//!
//! ```
//! use qderiv::derivations::derivation_space;
//! use qderiv::exactla::FieldSpec;
//! use qderiv::quandle::Quandle;
//!
//! let d3 = Quandle::dihedral(3).unwrap();
//! assert_eq!(derivation_space(&d3, FieldSpec::Rationals).dim(), 0);
//! assert_eq!(derivation_space(&d3, FieldSpec::prime(3).unwrap()).dim(), 2);
//! ```

pub mod derivations;
pub mod exactla;
pub mod lietransform;
pub mod qalgebra;
pub mod quandle;
pub mod reference;
pub mod report;
