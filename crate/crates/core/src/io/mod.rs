//! File formats: the binary attraction-field container, segment-map JSON,
//! CSV reports, and PPM visualization. All writers emit deterministic byte
//! streams — identical inputs produce identical files.

mod afm;
mod ppm;
mod report;
mod segments;

pub use afm::{read_afm, read_afm_from, write_afm, write_afm_to, AFM_MAGIC};
pub use ppm::{render_afm_ppm, render_afm_ppm_to, render_segments_ppm, render_segments_ppm_to};
pub use report::{
    write_eval_csv, write_eval_csv_to, write_scale_sweep_csv, write_scale_sweep_csv_to,
    write_threshold_sweep_csv, write_threshold_sweep_csv_to,
};
pub use segments::{read_segments, write_segments, write_segments_to};
