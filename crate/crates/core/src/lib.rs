//! Dual attraction-field representation for 2D line-segment maps.
//!
//! A segment map over an image lattice has an exact dual: assign every
//! pixel to its nearest segment (a region partition of the lattice) and
//! store the displacement from the pixel to its projection point on that
//! segment (the attraction field). The expansion direction turns 1D
//! segments into 2D regions; the squeeze direction collapses the field
//! back into segments and recovers the input almost perfectly, at any
//! image scale.
//!
//! The crate provides both directions plus everything needed to work with
//! fields produced elsewhere (e.g. predicted by a network):
//!
//! - [`geometry`] — points, segments, lattices and the clamped
//!   point-to-segment projection everything else is built on.
//! - [`codec`] — encoding a map into its region partition and attraction
//!   field.
//! - [`transforms`] — size normalization and invertible value stretching
//!   (the learning-friendly representation), with a tracked state machine.
//! - [`squeeze`] — the line proposal map and the greedy grouping decoder
//!   with aspect-ratio verification.
//! - [`metrics`] — pixel-wise precision / recall / F-measure and
//!   threshold sweeps.
//! - [`harness`] — multi-scale duality verification and a seeded
//!   synthetic-map generator.
//! - [`io`] — the binary field container, segment JSON, CSV reports, and
//!   PPM visualization.

pub mod codec;
pub mod error;
pub mod geometry;
pub mod harness;
pub mod io;
pub mod metrics;
pub mod squeeze;
pub mod transforms;

pub use codec::{
    compute_attraction_field, compute_region_partition, AttractionFieldMap, RegionPartitionMap,
    TransformState,
};
pub use error::{Error, Result};
pub use geometry::{
    attraction_vector, project_point_to_segment, ImageLattice, LineSegment, LineSegmentMap,
    Point2, Projection,
};
pub use harness::{
    default_scale_grid, generate_synthetic_map, scale_map, verify_duality, ScalePoint,
    ScaleSweepReport, SynthConfig,
};
pub use metrics::{
    afm_l1, default_threshold_grid, evaluate, f_measure, pr_sweep, rasterize_segments, EvalReport,
};
pub use squeeze::{
    build_line_proposal_map, squeeze, AttractionRecord, LineProposalMap, SqueezeOutput,
    SqueezeParams,
};
pub use transforms::{
    size_denormalize, size_normalize, stretch, stretch_value, unstretch, unstretch_value,
    STRETCH_EPSILON,
};
