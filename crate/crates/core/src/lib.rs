//! Degenerate flag varieties over `𝔽_p` and the partial flags of `𝔽_p^{2n}`
//! they embed into, with the permutation combinatorics that counts both.
//!
//! The crate is organised bottom-up:
//!
//! * [`permgroup`]: permutations of `Sym_{2n}`, `σ_n`, `σ_d` and `ι`;
//! * [`bruhat`]: Bruhat order, parabolic quotients, interval polynomials;
//! * [`gf_linalg`]: subspaces, maps, forms and Grassmannians over `𝔽_p`;
//! * [`degflag`]: degenerate flags, the embedding `ζ` and its image;
//! * [`quiver_bs`]: the quiver `Γ_n`, the resolution `R_n` and
//!   the Bott–Samelson model `B_n`.

pub mod bruhat;
pub mod degflag;
pub mod error;
pub mod gf_linalg;
pub mod permgroup;
pub mod quiver_bs;

pub use error::{Error, Result};
