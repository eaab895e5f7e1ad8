//! Exact computations around gradings of the diagrammatic Hecke category:
//! Temperley–Lieb algebras at δ = 0, Jones–Wenzl projectors and their
//! existence in positive characteristic, grading groups and their
//! validation, and Hecke algebras with unequal parameters.

pub mod arith;
pub mod par;
pub mod grading;
pub mod temperley_lieb;
pub mod coxeter;
pub mod hecke;
pub mod dihedral_double0;
