//! Characters, Littlewood complexes and resolutions for the orthosymplectic
//! supergroup `SpO(2m|1)` and its companion `O(2m+1)`, computed exactly.

pub mod character;
pub mod error;
pub mod laurent;
pub mod littlewood;
pub mod modrule;
pub mod oracle;
pub mod partition;
pub mod report;
pub mod ring;
pub mod schur;
pub mod superweyl;
pub mod verify;
pub mod weyl;
pub mod zmodule;

pub use character::{Basis, KClass};
pub use error::{Error, Result};
pub use laurent::Laurent;
pub use littlewood::{Homology, IdealVariant, TorTable};
pub use modrule::{modrule_border, modrule_weyl, tor1_partner, ModResult};
pub use partition::{enumerate_q, FrobCoords, Parity, Partition, QBound, QSetSpec};
pub use report::{Failure, SuiteReport};
pub use ring::CommRing;
pub use schur::{Graded, PairSum, SchurSum};
pub use weyl::Weight;
pub use zmodule::BigradedCharacter;
