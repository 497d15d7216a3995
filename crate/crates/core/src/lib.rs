//! Exact arithmetic for weak composition quasi-symmetric functions.
//!
//! * [`monoid`]: exponent monoids, in particular `Ñ = {0, e, 1, 2, ...}`.
//! * [`composition`]: compositions over a monoid, weak compositions, refinement.
//! * [`lincomb`]: integer linear combinations and small exact elimination.
//! * [`quasi_shuffle`]: the weight-λ quasi-shuffle product.
//! * [`hopf`]: product, coproduct, counit, antipode and the `M`/`F` bases.
//! * [`projection`]: the projection `φ` onto `QSym` and its kernel.
//! * [`rota_baxter`]: the free commutative Rota-Baxter algebra `Ш(x)`.
//! * [`oracle`]: brute-force expansion in finitely many variables.
//! * [`literal`], [`json`]: text and JSON forms.
//!
//! ```
//! use wcqsym::{Composition, WQSymElem};
//!
//! let alpha: Composition = "(e,1,e,2)".parse().unwrap();
//! let s = WQSymElem::m(alpha).antipode().unwrap();
//! assert_eq!(
//!     s.to_string(),
//!     "M(2,e,1,e) + M(2,e,1) + 2*M(2,1,e) + 2*M(2,1) + M(3,e) + M(3)"
//! );
//! ```

pub mod composition;
pub mod error;
pub mod hopf;
pub mod json;
pub mod lincomb;
pub mod literal;
pub mod monoid;
pub mod oracle;
pub mod projection;
pub mod quasi_shuffle;
pub mod rota_baxter;

pub use composition::{Composition, WeakComposition};
pub use error::{Error, Result};
pub use hopf::{Basis, WQSymElem};
pub use lincomb::LinComb;
pub use monoid::{ExponentMonoid, NTilde};
pub use rota_baxter::{PureTensor, ShaElem};
