//! Strategyproof allocation of divisible items between two agents with
//! linear utilities, without money.
//!
//! The crate has three layers:
//!
//! * **Mechanisms** — the even split, the 5/6-competitive two-item full
//!   mechanism, the partial `(f1, f2, Q, R)` family ([`two_item`]),
//!   Partial Allocation mechanisms and their weighted average for any
//!   number of items ([`multi_item`]), and dynamic-increasing-price
//!   purchase mechanisms ([`dip`]).
//! * **Verification** — numerical strategyproofness, convexity,
//!   sufficient-condition and competitive-ratio checkers, plus the
//!   compact upper-bound certificate ([`verify`]).
//! * **LP tooling** — builders, a solver backend with independent row
//!   re-verification, and a textual export format for the grid LPs that
//!   bound what strategyproof mechanisms can achieve ([`lp`]).
//!
//! See the book under `book/` for a guided tour.

pub mod core;
pub mod dip;
pub mod error;
pub mod lp;
pub mod multi_item;
pub mod numeric;
pub mod piecewise;
pub mod two_item;
pub mod verify;

pub use error::{Error, Result};

// The book's chapters are compiled as doc-tests, so every code block
// in `book/src` stays in sync with the library.
#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            mod $name {}
        };
    }
    chapter!(introduction, "../../../book/src/introduction.md");
    chapter!(model, "../../../book/src/model.md");
    chapter!(two_item, "../../../book/src/two-item.md");
    chapter!(partial, "../../../book/src/partial.md");
    chapter!(verification, "../../../book/src/verification.md");
    chapter!(bounds, "../../../book/src/bounds.md");
    chapter!(multi_item, "../../../book/src/multi-item.md");
    chapter!(prices, "../../../book/src/prices.md");
    chapter!(cli, "../../../book/src/cli.md");
}
