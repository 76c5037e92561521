//! Semiclassical limits, monodromy cubics, shear coordinates and the
//! quantum shear algebra.

mod cubic;
mod laurent;
pub mod monodromy;
pub mod shear;

pub use cubic::{check_classical_cubic, classical_cubic, ClassicalCubic, ClassicalCubicCheck};
pub use laurent::{CommLaurent, Exp6};
pub use monodromy::{
    check_classical_monodromy, check_final_identification, check_fock_monodromy, check_quantum_monodromy,
    check_quantum_shear, MonReading,
};
pub use shear::{check_fricke, check_poisson, poisson_bracket};
