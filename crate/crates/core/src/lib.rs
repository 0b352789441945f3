//! Exact computations with monomial ideals: integral closure through the
//! Newton polyhedron, normality of powers, and the generator and length
//! invariants around Cohen–Macaulay normal Rees algebras.
//!
//! All arithmetic is exact. Membership in an integral closure is decided by
//! a rational simplex kernel ([`lp`]) and each answer carries a checkable
//! certificate.

pub mod error;
pub mod exec;
pub mod exponent;
pub mod ideal;
pub mod lp;
pub mod newton;
pub mod normality;
pub mod text;
pub mod verify;

pub use error::{Error, Result};
pub use exec::Exec;
pub use exponent::ExponentVector;
pub use ideal::{minimalize, Colength, MonomialIdeal};
pub use newton::{
    certificate, integral_closure, np_membership, ord_w, valuation_membership, ClosureCertificate, HullDecision,
    Separation, WeightVector,
};
pub use normality::{
    closure_of_power, first_failure_witness, is_integrally_closed, is_normal, BoundSource, NormalityReport, Verdict,
};
pub use text::{format_ideal, format_monomial, parse_ideal, parse_monomial, IdealFile, Variables};
