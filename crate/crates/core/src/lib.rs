//! Simulator for pulsed, collinear type-II SPDC polarization-entangled
//! photon-pair sources.
//!
//! The pipeline mirrors a fibred source built around a periodically poled
//! lithium niobate crystal: [`dispersion`] supplies refractive indices,
//! group slopes and quasi-phase-matching; [`jsa`] builds the two-photon
//! joint spectral amplitude from the pump envelope and phase-matching
//! factors; [`filters`] applies fibre-filter transfer functions and splits
//! the state into its two polarization terms; [`analysis`] computes mode
//! overlaps and Schmidt decompositions; [`entanglement`] converts spectral
//! interference into two-qubit density matrices, fringes, visibilities and
//! the CHSH parameter; [`design`] covers temporal walk-off compensation and
//! filter-parameter optimization.
//!
//! All quantities are SI internally (meters, seconds, rad/s) unless a
//! function name or argument says otherwise (Sellmeier evaluation uses µm,
//! filter definitions use nm).

pub mod analysis;
pub mod design;
pub mod dispersion;
pub mod entanglement;
pub mod filters;
pub mod jsa;
pub mod units;

pub use analysis::{OverlapResult, SchmidtDecomposition};
pub use dispersion::{Axis, CrystalSpec, PhaseMismatch, SellmeierSet};
pub use entanglement::{FringeCurve, PolarizationState, VisibilityReport};
pub use filters::{FilterShape, FilterSpec, FilteredPair};
pub use jsa::{FrequencyGrid, JointAmplitude, PumpSpec};
