//! Exact symbolic verification of the confluent Cherednik algebras of type
//! C̆1C1: quantum torus embeddings, spherical subalgebras, rewriting for the
//! abstract D7/D8 algebras, classical limits and monodromy, and
//! q-difference operator representations with their polynomial
//! eigenfunctions.

pub mod error;
pub mod field;

pub use error::{Error, Result};
pub use field::{GaussianRational, Monomial, Poly, RationalFunction, Var, RF};
pub mod classical;
pub mod nc;
pub mod parse;
pub mod presentations;
pub mod rewrite;
pub mod qdiff;
pub mod qmat;
pub mod qpoly;
pub mod qtorus;
pub mod spherical;
pub mod suite;
pub mod ring;

pub use qtorus::{TorusElement, TorusMatrix2};
pub use ring::{Mat2, Ring};
pub use nc::{Env, Letter, NCExpression};
pub use parse::{parse_expression, ParseContext};
pub use qmat::{embed, embed_amended, AlgebraId, EmbeddingAssignment, Reading};
