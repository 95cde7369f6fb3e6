//! Thermal quantum correlations of an axially symmetric qubit-qutrit
//! Heisenberg model: Gibbs states, negativity, measurement-induced
//! nonlocality (MIN), uncertainty-induced nonlocality (UIN) and the maximal
//! CHSH value, plus parameter sweeps and threshold location.

pub mod config;
pub mod error;
pub mod gibbs;
pub mod linalg;
pub mod measures;
pub mod model;
pub mod optimize;
pub mod presets;
pub mod summary;
pub mod sweep;
pub mod threshold;
