//! A workbench for computing with finite inverse semigroups and finite
//! left cancellative categories.
//!
//! The crate is organized around a handful of interlocking pieces:
//!
//! - [`pbij`] — partial bijections on a named finite ground set, the
//!   concrete model every inverse semigroup here embeds into;
//! - [`semigroup`] — a generic table-based engine: closure of a generating
//!   set, the natural partial order, Green's relations and eggbox diagrams,
//!   structural checks with witnesses, congruences, and isomorphism
//!   verification.
//!
//! The `examples/` directory shows one runnable tour per capability, and
//! the thin `zigzag` binary exposes the same operations on files.

pub mod cat;
pub mod cli;
pub mod corpus;
pub mod formats;
pub mod graph;
pub mod morita;
pub mod paths;
pub mod pbij;
pub mod semigroup;
