//! The book chapters from `book/`, re-exposed as rustdoc so that every
//! code example in the guide compiles and runs under `cargo test --doc`.
//!
//! mdbook renders the same files for reading; this module exists so the
//! snippets can never drift from the library.  Each chapter gets its own
//! empty module, which makes doctest failures name their chapter.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/oracles.md")]
pub mod oracles {}

#[doc = include_str!("../../../book/src/membership.md")]
pub mod membership {}

#[doc = include_str!("../../../book/src/dec-min.md")]
pub mod dec_min {}

#[doc = include_str!("../../../book/src/canonical.md")]
pub mod canonical {}

#[doc = include_str!("../../../book/src/matroid.md")]
pub mod matroid {}

#[doc = include_str!("../../../book/src/duality.md")]
pub mod duality {}

#[doc = include_str!("../../../book/src/applications.md")]
pub mod applications {}

#[doc = include_str!("../../../book/src/formats.md")]
pub mod formats {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
