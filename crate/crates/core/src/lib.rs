//! Exact-arithmetic construction and spectral analysis of Cayley multigraphs
//! over finite abelian groups and quaternion products Q8 x A.

pub mod algebra;
pub mod cyclotomic;
pub mod groups;
pub mod diophantine;
pub mod oracle;
pub mod sampling;
pub mod selftest;
pub mod spectra;
mod numutil;
mod polyops;

pub use algebra::{atom_partition, cone_decompose, in_boolean_algebra, AtomPartition};
pub use cyclotomic::{CycContext, CycInt};
pub use groups::{AbelianGroup, GMultiset, GroupElement, GroupSpec, Q8Elem};
pub use spectra::{SpectralValue, Spectrum};
