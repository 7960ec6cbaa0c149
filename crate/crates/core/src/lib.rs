//! Exact computation in the algebra of Schur Q-functions.
//!
//! * [`composition`]: compositions, partitions and their partial orders.
//! * [`diagram`]: skew shapes, ribbons and the diagram operations
//!   `ᵗ`, `°`, `⊕`, `·`, `⊙`, `∘` and `•`.
//! * [`omega`]: elements of Ω in the strict `q_λ` basis, straightening,
//!   ribbon and skew expansions and the relation checks built on them.
//! * [`oracle`]: monomial-level ground truth by tableau enumeration.

pub mod composition;
pub mod det;
pub mod diagram;
pub mod error;
pub mod omega;
pub mod oracle;

pub use composition::{compositions_of, Composition, Dominance, Partition, StrictPartition};
pub use diagram::{CellSet, RibbonWord, SkewShape, Star};
pub use error::{Error, Result};
pub use omega::OmegaElem;
pub use oracle::SparsePoly;
