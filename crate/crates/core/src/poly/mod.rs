//! Exact polynomial arithmetic.

mod det;
mod laurent;
mod multi;
mod upoly;

pub use det::{bareiss_det, DetRing};
pub use laurent::LaurentPoly;
pub use multi::MultiPoly;
pub use upoly::UPoly;
