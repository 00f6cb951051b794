//! Exact graded commutative algebra over `Q` and prime fields.

pub mod complex;
pub mod error;
pub mod families;
pub mod field;
pub mod groebner;
pub mod hilbert;
pub mod ideal;
pub mod matrix;
pub mod modules;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod resolution;
pub mod suites;
pub mod terms;

pub use complex::{buchsbaum_eisenbud, check_composition_zero, matrix_rank, BEReport, GradedComplex};
pub use error::{AlgebraError, Result};
pub use field::{Field, PrimeField, Rationals};
pub use groebner::{buchberger, ideal_membership, module_buchberger, normal_form, GroebnerBasis, ModuleElement};
pub use hilbert::HilbertSeries;
pub use ideal::{minors_ideal, monomial_curve_ideal, Ideal};
pub use matrix::{GradedFreeModule, GradedMatrix};
pub use modules::PresentedModule;
pub use monomial::{ModuleOrder, Monomial, MonomialOrder, TermOrder};
pub use resolution::{BettiTable, FreeResolution};
pub use poly::{Polynomial, Ring};
