//! Finitely presented `C_p`-Mackey functors: exact integer linear algebra,
//! finitely presented abelian groups, the box product, isotropy separation and
//! the classification of box-invertible functors.

pub mod abgroup;
pub mod cli;
pub mod error;
pub mod intlin;
pub mod mackey;
pub mod scalar;
pub mod separation;

pub use error::{Error, Result};
pub use mackey::{box_product, MackeyFunctor, MackeyMorphism, Prime};
pub use scalar::Scalar;

pub type Int = num_bigint::BigInt;
pub type IntMatrix = intlin::Matrix<Int>;
pub type IntSmithDecomposition = intlin::SmithDecomposition<Int>;
pub type FpAbGroup = abgroup::AbGroup<Int>;
pub type IntAbHom = abgroup::AbHom<Int>;
pub type IntMackeyFunctor = mackey::MackeyFunctor<Int>;
pub type IntMackeyMorphism = mackey::MackeyMorphism<Int>;
