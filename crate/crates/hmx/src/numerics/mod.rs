//! Deterministic numeric kernel shared by every other module: the Adam
//! optimizer, a finite-difference gradient oracle for tests, quaternion /
//! small-matrix rotation algebra, and a seeded, platform-independent PRNG.

mod adam;
mod fd;
pub mod linalg;
mod rng;
mod rotation;

pub use adam::{adam_step, Adam, AdamConfig, AdamState};
pub use fd::finite_diff_grad;
pub use rng::Prng;
pub use rotation::{Mat3, UnitQuaternion, Vec3};
