//! Finite-dimensional Hopf algebras as structure constants.
//!
//! Built-in algebras: group algebras, Sweedler's 4-dimensional algebra
//! (basis `1, g, x, gx`), Taft algebras (basis `x^i g^j`), the small quantum
//! group `u_q(sl₂)` (basis `F^a K^b E^c`) and duals of all of these.
//! Elements are coordinate vectors; the adjoint action `k.v = k₍₁₎ v S(k₍₂₎)`
//! is computed by contracting the stored tensors.

mod coalgebra;
mod constructors;
mod data;
mod format;
mod identities;

pub use coalgebra::{
    algebra_characters, coradical, coradical_filtration, find_free_basis, grouplikes,
    is_left_coideal_subalgebra, is_pointed, masuoka_freeness_criterion, Side,
};
pub use constructors::{
    dual_hopf, group_algebra, label_index, permute_basis, small_quantum_sl2, sweedler, taft,
    GroupTable,
};
pub use data::{AxiomCheck, AxiomReport, HopfAlgebraData, Pair, Triple};
pub use format::{parse_hsc, write_hsc};
pub use identities::{random_element, IdentityChecker, IdentityResult};

pub(crate) use data::nonzeros;
