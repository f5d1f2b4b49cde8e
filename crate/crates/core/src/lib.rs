//! Small-doubling structure of finite integer and lattice sets: sumsets,
//! Freiman isomorphism and dimension, volume, extremal families, structural
//! scans and a 0-1 knapsack solver.

pub mod checks;
pub mod enumerate;
pub mod error;
pub mod extremal;
pub mod family;
pub mod iso;
pub mod knapsack;
pub mod lattice;
pub mod linalg;
pub mod par;
pub mod sets;
pub mod volume;

pub use error::{Error, Result};
pub use lattice::LatticeSet;
pub use par::Threads;
pub use sets::{doubling_stats, normalize, sumset, sym, DoublingStats, IntSet};
