//! Simulation and analysis of coordination games with and without a shared
//! entangled quantum state.
//!
//! Two games drive everything here. In the restaurant game, N agents each
//! pick one of N single-capacity restaurants with no communication; in the
//! stadium game, N·K agents pick among K gates of capacity αN. Classical
//! play leaves a 1/e fraction of restaurants empty per round and caps the
//! chance of a safe gate near one half at α = 1. A shared filled
//! lowest-Landau-level state changes that: measuring each particle's
//! angular momentum hands every agent a distinct label, and the induced
//! assignments fill every restaurant and balance every gate in a single
//! round, deterministically and fairly.
//!
//! The crate provides the classical baselines ([`classical`]), the quantum
//! state and its measurement model ([`qhall`]), the label-to-action rules
//! ([`coordination`]), and the two-diner entangled game with its Nash
//! analysis ([`nash`]), on top of shared numeric and randomness plumbing
//! ([`special`], [`stats`], [`rng`]).
//!
//! Everything is deterministic given a [`Seed`]: parallel Monte Carlo runs
//! derive one substream per trial, so results are independent of thread
//! count and platform.

pub mod classical;
pub mod coordination;
pub mod error;
pub mod nash;
pub mod qhall;
pub mod rng;
pub mod special;
pub mod stats;

pub use error::{Error, Result};
pub use rng::Seed;
