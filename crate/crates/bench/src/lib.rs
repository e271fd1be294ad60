//! Shared fixtures for the pipeline benchmarks.

use afm_core::{
    compute_attraction_field, generate_synthetic_map, AttractionFieldMap, LineSegmentMap,
    SynthConfig,
};

/// The reference workload: one seeded 320x320 desk-scale map.
pub fn bench_map() -> LineSegmentMap {
    generate_synthetic_map(&SynthConfig::desk_scale(1234)).expect("valid config")
}

/// Its exactly encoded attraction field.
pub fn bench_field(map: &LineSegmentMap) -> AttractionFieldMap {
    compute_attraction_field(map).expect("non-empty map").0
}
