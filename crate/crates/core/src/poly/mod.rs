//! Exact multivariate polynomials, monomial orders, Gröbner bases and the
//! ideal operations built on them.

pub mod field;
pub mod groebner;
pub mod ideal;
pub mod linalg;
pub mod monomial;
pub mod order;
pub mod polynomial;
pub mod squarefree;

pub use field::{Field, FieldTag, PrimeField, Rationals};
pub use groebner::{groebner, is_groebner, normal_form};
pub use ideal::{minimal_quotient_generators, Ideal, IdealText};
pub use monomial::{Monomial, MAX_VARS};
pub use order::{MonomialOrder, OrderKind};
pub use polynomial::{Poly, Ring};
pub use squarefree::SquarefreeIdeal;
