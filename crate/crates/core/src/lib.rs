//! Exact quantum theory over the finite fields GF(q^2).
//!
//! Scalars live in [`galois`], states and operators in [`hermitian`]. The
//! self-orthogonal part of the state space, the quantum kernel, is
//! enumerated and checked in [`kernelgeo`]. [`nogo`] classifies cloneable
//! and deletable pairs, [`protocols`] runs teleportation and super-dense
//! coding, and [`geocode`] combines the kernel geometry with super-dense
//! coding into a point-transport scheme. [`cli`] is the front end used by
//! the `gqt` binary.

pub mod cli;
pub mod error;
pub mod galois;
pub mod geocode;
pub mod hermitian;
pub mod kernelgeo;
pub mod nogo;
pub mod protocols;

pub use error::{Error, Result};
