//! Exact diagram calculus for Brauer envelopes of small categories, the
//! universal construction on their closed diagrams, pseudocharacters, and
//! generating functions of two-dimensional TQFTs.

pub mod exact;
pub mod exec;
pub mod fincat;

pub use exec::Execution;
pub mod brauer;
pub mod universal;
pub mod pseudochar;
pub mod tqft2;
