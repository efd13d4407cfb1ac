//! Generalized power series over strictly ordered commutative monoids,
//! projectors onto sub-supports, and checks of the Rota-Baxter identity
//! of weight -1.

pub mod cli;
pub mod laurent;
pub mod monoid;
pub mod oracle;
pub mod outcome;
pub mod parse;
pub mod rb;
pub mod sample;
pub mod scalar;
pub mod series;

pub use laurent::{LaurentError, TruncatedLaurent};
pub use monoid::{FiniteTable, MonoidElem, MonoidError, OrderedMonoid, Window};
pub use outcome::{CheckOutcome, Witness};
pub use rb::{Decomposition, Membership, Part, Projector, RbError};
pub use scalar::{Ring, Scalar, ScalarError};
pub use series::{Series, SeriesError};
