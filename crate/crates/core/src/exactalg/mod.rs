//! Exact arithmetic: sparse polynomials over Z or F2, factored sums over the
//! linear forms `v_i - v_j`, fraction-free elimination and Smith normal form.

mod factored;
mod linalg;
mod matrix;
mod poly;
mod ring;
mod snf;

pub use factored::{sum_factored, FactoredTerm};
pub use linalg::{
    certified_rank, integer_rank, kernel_basis, rank_over_fraction_field, rational_rank, rref, solve,
    specialize_matrix, specialized_rank, RankCertificate, Rref,
};
pub use matrix::{Entry, IntMatrix, Matrix, PolyMatrix};
pub use poly::{Monomial, Poly, Specialized};
pub use ring::{Coefficients, RingSpec, Variables};
pub use snf::{invariant_factors, smith_normal_form, Snf};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
