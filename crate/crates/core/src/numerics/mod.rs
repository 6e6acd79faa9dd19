//! Self-contained numeric kernels used by the rest of the crate: special
//! functions, one-dimensional adaptive quadrature, bracketed root finding,
//! damped Newton iteration for small systems, and small dense symmetric
//! linear algebra with Kronecker/vec utilities.
//!
//! Everything here is a pure function of its inputs and safe to call from
//! concurrent contexts.

pub mod linalg;
pub mod newton;
pub mod quad;
pub mod roots;
pub mod special;

pub use linalg::{kron, psd_inverse_sqrt, psd_sqrt, spd_inverse, sym_eigen, vec};
pub use newton::{newton_system, NewtonOutcome};
pub use quad::{integrate, integrate_half_line, integrate_real_line, QuadratureSpec, Side};
pub use roots::{find_root, RootBracket};
pub use special::{erfc, gamma, hurwitz_lerch_psi, log_gamma, std_normal};
