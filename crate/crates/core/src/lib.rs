//! Fourier analysis, dissociated sets, Riesz products and Bohr sets on
//! finite abelian groups, with the iterative approximation algorithms that
//! lower-bound the A(G)-norm of indicator functions.
//!
//! Every structural claim a routine makes (containments, norm bounds,
//! approximation errors) is checked by direct computation before it returns.

pub mod bohr;
pub mod config;
pub mod dissociation;
pub mod error;
pub mod experiments;
pub mod families;
pub mod fourier;
pub mod group;
pub mod io;
pub mod iteration;
pub mod riesz;
pub mod spectra;
pub mod structure;

pub use error::{Error, Result};
pub use fourier::{fourier, inverse, GroupFunction, GroupMeasure, Norm, Spectrum, C64};
pub use group::{Character, Element, Group, GroupKind};
