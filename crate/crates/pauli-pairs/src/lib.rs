//! Constructions and numerical verification of Pauli pairs and
//! ultimate-zero-divisor (UZD) sets in `L²(ℝ)` and `L²[0,2π]`.
//!
//! A *Pauli pair* is a pair of linearly independent square-integrable
//! functions `f, g` with `|f| = |g|` and `|f̂| = |ĝ|` almost everywhere —
//! two quantum states that position and momentum measurements cannot tell
//! apart. A *UZD set* is a set of nonzero functions whose pairwise products
//! vanish both pointwise and on the Fourier side; any two distinct members
//! combine into Pauli pairs with free unimodular weights.
//!
//! The crate builds the classical constructions and several step-function
//! families, and ships numeric verdicts for all of them:
//!
//! - [`numerics`] — grids, composite Gauss–Legendre quadrature, Fourier
//!   transforms (convention `f̂(y) = ∫ e^{-iyx} f(x) dx`), Fourier series
//!   coefficients, and `C^∞` bump windows.
//! - [`steppairs`] — Pauli pairs of step functions: the autocorrelation
//!   criterion, the complete four-step families `sol1`/`sol2`/`sol3`, the
//!   MP¹/MP² classifier, the collinearity lemma for unimodular points, and a
//!   grid+Newton oracle that enumerates all partners of a given step vector.
//! - [`constructions`] — Moroz–Perelomov pairs, the Ismagilov family
//!   `f_a = ĝ·φ(·-a)`, the interleaving operator `f_{a,b}`, UZD lines on ℝ,
//!   and Pauli-state pairs built from UZD sets.
//! - [`periodic`] — Rademacher functions, dyadic modulations `a^{[j]}`, their
//!   Fourier-coefficient vanishing patterns, and n-element UZD sets of
//!   `2π`-periodic smooth functions.
//! - [`verify`] — uniform [`verify::VerificationReport`] verdicts: is a pair
//!   a Pauli pair, is a set a UZD set, are two functions independent.
//! - [`io`] — JSON pair/set files and CSV curve export.
//! - [`cli`] — the `pauli` command-line tool built on all of the above.
//!
//! Every runnable capability has a demo under `examples/`; start with
//! `cargo run --example example_one`.

pub mod cli;
pub mod constructions;
mod error;
pub mod io;
pub mod numerics;
pub mod periodic;
pub mod steppairs;
pub mod verify;

pub use error::{Error, Result};
