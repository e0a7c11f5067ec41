//! Exact invariant data for torus knots around the identity
//! `upsilon(T(p,q)) - sigma(T(p,q))/2 = b2^-(M_F)`, where `F` is the
//! non-orientable surface obtained by stacking band-move cobordisms from
//! the unknot up to `T(p,q)` and `M_F` is the double branched cover of the
//! 4-ball over it.
//!
//! All arithmetic is exact (64-bit integers, quarter-integer rationals and
//! big-rational matrix elimination); there is no floating point anywhere.
//! Each quantity is computed by at least two independent routes so the
//! library can machine-check its own tables:
//!
//! - [`upsilon::upsilon_fk`] / [`upsilon::upsilon_fk_fast`] evaluate
//!   upsilon by the Feller-Krcatovich recursion, step by step or batched
//!   Euclid-style.
//! - [`batson::upsilon_batson`] recovers the same value as a telescoping
//!   sum over the band-move sequence, with no recursion.
//! - [`signature::sigma_count`] evaluates the knot signature by an exact
//!   lattice count, cross-checked by the Seifert-form oracle
//!   [`signature::sigma_two_strand`] and by per-step parity constraints.
//! - [`braid::writhe_delta_oracle`] replays the braid word crossing by
//!   crossing to confirm the closed form `h(p-t) + t(q-h)` used above.
//! - [`batson::verify_theorem`] puts everything together for one knot and
//!   returns the assembled [`batson::InvariantRecord`].
//!
//! The `examples/` directory has one runnable program per capability;
//! the `ust` binary exposes the same operations as subcommands
//! (`upsilon`, `sigma`, `batson`, `verify`, `pretzel`, `table`).

pub mod arith;
pub mod batson;
pub mod braid;
pub mod cli;
pub mod error;
pub mod knot;
pub mod signature;
pub mod upsilon;

pub use arith::{ext_gcd, gcd, mod_inverse, QuarterRational};
pub use batson::{
    b2_minus_batson, band_pair, batson_sequence, batson_step, half_writhe_delta, next_knot,
    pretzel_f, upsilon_batson, verify_theorem, BatsonSequence, BatsonStep, InvariantRecord,
};
pub use braid::{
    initial_set_s, s_leq_q_count, standard_writhe, writhe_delta_oracle, InitialSetS,
    MarkedBraidState,
};
pub use error::{Error, Result};
pub use knot::TorusKnot;
pub use signature::{matrix_signature, sigma_count, sigma_two_strand, SymmetricIntMatrix};
pub use upsilon::{upsilon_fk, upsilon_fk_fast, UpsilonMemo};
