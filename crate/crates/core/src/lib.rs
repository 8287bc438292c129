//! Exact symbolic engine for the Homflypt-type invariant of links in the solid
//! torus, given as mixed braids, and for the braid band move equations that
//! present the skein module of the lens spaces `L(p,1)`.

pub mod braid;
pub mod hecke;
pub mod scalars;

mod cache;
pub use cache::set_cache_capacity;
pub mod checks;
pub mod skein;
pub mod trace;

#[cfg(test)]
mod proptests;
