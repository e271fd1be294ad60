//! Thin command-line shell over `afm-core`: every subcommand is a direct
//! composition of library calls, so CLI behavior and library behavior are
//! the same thing.
//!
//! Exit codes: 0 success, 1 validation/usage error, 2 I/O error.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use afm_core::{io, Error};

const EXIT_OK: i32 = 0;
const EXIT_VALIDATION: i32 = 1;
const EXIT_IO: i32 = 2;

#[derive(Parser)]
#[command(
    name = "afm",
    version,
    about = "Attraction-field duality for line-segment maps: encode, squeeze, evaluate"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Encode a segment map into an attraction field
    Encode {
        /// Segment map JSON to encode
        #[arg(long)]
        input: PathBuf,
        /// Output field file
        #[arg(long)]
        output: PathBuf,
        /// Divide components by the lattice dimensions
        #[arg(long)]
        normalize: bool,
        /// Apply the signed-log value stretching (needs --normalize)
        #[arg(long, requires = "normalize")]
        stretch: bool,
    },
    /// Decode an attraction field back into segments
    Squeeze {
        /// Field file; normalization/stretching recorded in its header is
        /// inverted automatically before decoding
        #[arg(long)]
        input: PathBuf,
        /// Output segment map JSON
        #[arg(long)]
        output: PathBuf,
        #[command(flatten)]
        params: SqueezeArgs,
    },
    /// Encode, squeeze and score a segment map across a range of scales
    Roundtrip {
        /// Segment map JSON
        #[arg(long)]
        input: PathBuf,
        /// Scale grid as LO:STEP:HI
        #[arg(long, default_value = "0.5:0.1:2.0")]
        scales: String,
        /// Output CSV (per-scale rows plus a trailing mean row)
        #[arg(long)]
        report: PathBuf,
    },
    /// Score a detected segment map against ground truth
    Eval {
        /// Detected segment map JSON
        #[arg(long)]
        detected: PathBuf,
        /// Ground-truth segment map JSON
        #[arg(long)]
        gt: PathBuf,
        /// Matching tolerance as a fraction of the image diagonal
        #[arg(long, default_value_t = 0.01)]
        tolerance: f64,
        /// Output CSV
        #[arg(long)]
        report: PathBuf,
    },
    /// Squeeze a field at every aspect-ratio threshold in 0.1..=1.0 and
    /// score each result
    Sweep {
        /// Field file (header transforms inverted automatically)
        #[arg(long)]
        afm: PathBuf,
        /// Ground-truth segment map JSON
        #[arg(long)]
        gt: PathBuf,
        /// Output CSV
        #[arg(long)]
        report: PathBuf,
    },
    /// Generate seeded synthetic segment maps
    Synth {
        /// Seed of the first map; map k uses seed + k
        #[arg(long)]
        seed: u64,
        /// Number of maps to generate
        #[arg(long)]
        count: usize,
        #[arg(long)]
        width: u32,
        #[arg(long)]
        height: u32,
        /// Directory for map_###.json files (created if missing)
        #[arg(long)]
        outdir: PathBuf,
        /// Fewest segments per map
        #[arg(long, default_value_t = 5)]
        min_segments: usize,
        /// Most segments per map
        #[arg(long, default_value_t = 30)]
        max_segments: usize,
        /// Shortest allowed segment in pixels
        #[arg(long, default_value_t = 20.0)]
        min_length: f64,
    },
    /// Render a segment map or field as a PPM image
    Viz {
        /// Segment JSON or field file (detected by content)
        #[arg(long)]
        input: PathBuf,
        /// Output PPM (P6)
        #[arg(long)]
        output: PathBuf,
    },
}

#[derive(Args)]
struct SqueezeArgs {
    /// Angular alignment threshold in degrees
    #[arg(long, default_value_t = 10.0)]
    tau: f64,
    /// Aspect-ratio ceiling for the rectangle check, in (0, 1]
    #[arg(long, default_value_t = 0.2)]
    aspect: f64,
    /// Search window radius in cells (1 = 3x3 window)
    #[arg(long, default_value_t = 1)]
    window: u32,
    /// Fewest records in an accepted support
    #[arg(long, default_value_t = 2)]
    min_support: usize,
    /// Shuffle the seed order with this seed (omit for row-major order)
    #[arg(long)]
    seed: Option<u64>,
}

impl SqueezeArgs {
    fn to_params(&self) -> afm_core::SqueezeParams {
        afm_core::SqueezeParams {
            window_radius: self.window,
            angular_threshold_deg: self.tau,
            aspect_ratio_max: self.aspect,
            min_support: self.min_support,
            rng_seed: self.seed,
        }
    }
}

/// Caps the worker pool at `AFM_THREADS` when set. Call once at startup.
pub fn init_thread_pool() {
    if let Some(n) = std::env::var("AFM_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n >= 1)
    {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

/// Parses argv and runs one subcommand, returning the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{err}");
                    EXIT_OK
                }
                _ => {
                    eprint!("{err}");
                    EXIT_VALIDATION
                }
            };
        }
    };
    match execute(cli.command) {
        Ok(()) => EXIT_OK,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::Io(_) => EXIT_IO,
                _ => EXIT_VALIDATION,
            }
        }
    }
}

fn execute(command: Command) -> afm_core::Result<()> {
    match command {
        Command::Encode {
            input,
            output,
            normalize,
            stretch,
        } => {
            let map = io::read_segments(&input)?;
            let (mut afm, _) = afm_core::compute_attraction_field(&map)?;
            if normalize {
                afm = afm_core::size_normalize(&afm)?;
            }
            if stretch {
                let (stretched, clamped) = afm_core::stretch(&afm)?;
                if clamped > 0 {
                    eprintln!("warning: {clamped} components clamped into the stretchable range");
                }
                afm = stretched;
            }
            io::write_afm(&afm, &output)
        }
        Command::Squeeze {
            input,
            output,
            params,
        } => {
            let afm = read_afm_as_raw(&input)?;
            let out = afm_core::squeeze(&afm, &params.to_params())?;
            io::write_segments(&out.segments, &output)
        }
        Command::Roundtrip {
            input,
            scales,
            report,
        } => {
            let map = io::read_segments(&input)?;
            let grid = parse_scale_grid(&scales)?;
            let sweep = afm_core::verify_duality(&map, &grid, &afm_core::SqueezeParams::default())?;
            io::write_scale_sweep_csv(&sweep, &report)
        }
        Command::Eval {
            detected,
            gt,
            tolerance,
            report,
        } => {
            let detected = io::read_segments(&detected)?;
            let gt = io::read_segments(&gt)?;
            let rep = afm_core::evaluate(&detected, &gt, tolerance)?;
            io::write_eval_csv(&rep, &report)
        }
        Command::Sweep { afm, gt, report } => {
            let afm = read_afm_as_raw(&afm)?;
            let gt = io::read_segments(&gt)?;
            let rows = afm_core::pr_sweep(
                &afm,
                &gt,
                &afm_core::default_threshold_grid(),
                &afm_core::SqueezeParams::default(),
            )?;
            io::write_threshold_sweep_csv(&rows, &report)
        }
        Command::Synth {
            seed,
            count,
            width,
            height,
            outdir,
            min_segments,
            max_segments,
            min_length,
        } => {
            std::fs::create_dir_all(&outdir)?;
            for k in 0..count {
                let config = afm_core::SynthConfig {
                    seed: seed + k as u64,
                    segment_count: min_segments..=max_segments,
                    min_length_px: min_length,
                    lattice: afm_core::ImageLattice::new(width, height)?,
                    min_endpoint_separation_px: 0.0,
                };
                let map = afm_core::generate_synthetic_map(&config)?;
                io::write_segments(&map, outdir.join(format!("map_{k:03}.json")))?;
            }
            Ok(())
        }
        Command::Viz { input, output } => {
            let bytes = std::fs::read(&input)?;
            if bytes.starts_with(&io::AFM_MAGIC) {
                let afm = io::read_afm_from(&bytes)?;
                io::render_afm_ppm(&afm, &output)
            } else {
                let map = io::read_segments(&input)?;
                io::render_segments_ppm(&map, &output)
            }
        }
    }
}

/// Reads a field and inverts whatever transforms its header records, so the
/// decoder always sees pixel-unit vectors.
fn read_afm_as_raw(path: &Path) -> afm_core::Result<afm_core::AttractionFieldMap> {
    let mut afm = io::read_afm(path)?;
    if afm.state() == afm_core::TransformState::Stretched {
        afm = afm_core::unstretch(&afm)?;
    }
    if afm.state() == afm_core::TransformState::SizeNormalized {
        afm = afm_core::size_denormalize(&afm)?;
    }
    Ok(afm)
}

/// Parses a LO:STEP:HI decimal grid exactly (no floating-point drift in the
/// emitted scale values).
fn parse_scale_grid(text: &str) -> afm_core::Result<Vec<f64>> {
    let parts: Vec<&str> = text.split(':').collect();
    let [lo, step, hi]: [&str; 3] = parts
        .try_into()
        .map_err(|_| Error::Domain(format!("scale grid must be LO:STEP:HI, got {text:?}")))?;

    let decimals = [lo, step, hi]
        .iter()
        .map(|p| p.split_once('.').map_or(0, |(_, frac)| frac.len()))
        .max()
        .unwrap();
    if decimals > 9 {
        return Err(Error::Domain("scale grid supports at most 9 decimals".into()));
    }
    let unit = 10u64.pow(decimals as u32);
    let to_fixed = |p: &str| -> afm_core::Result<u64> {
        let (int, frac) = p.split_once('.').unwrap_or((p, ""));
        if int.is_empty() && frac.is_empty()
            || int.chars().any(|c| !c.is_ascii_digit())
            || frac.chars().any(|c| !c.is_ascii_digit())
        {
            return Err(Error::Domain(format!("bad scale value {p:?}")));
        }
        let int: u64 = if int.is_empty() { 0 } else { int.parse().map_err(|_| Error::Domain(format!("bad scale value {p:?}")))? };
        let mut frac_val = 0u64;
        for (i, c) in frac.chars().enumerate() {
            frac_val += (c as u64 - '0' as u64) * 10u64.pow((decimals - 1 - i) as u32);
        }
        Ok(int * unit + frac_val)
    };
    let (lo, step, hi) = (to_fixed(lo)?, to_fixed(step)?, to_fixed(hi)?);
    if lo == 0 || step == 0 || hi < lo {
        return Err(Error::Domain(
            "scale grid needs positive LO and STEP with HI >= LO".into(),
        ));
    }
    Ok((lo..=hi)
        .step_by(step as usize)
        .map(|i| i as f64 / unit as f64)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_grid_is_sixteen_clean_scales() {
        let grid = parse_scale_grid("0.5:0.1:2.0").unwrap();
        assert_eq!(grid.len(), 16);
        assert_eq!(grid[0], 0.5);
        assert_eq!(grid[7], 1.2);
        assert_eq!(grid[15], 2.0);
    }

    #[test]
    fn grid_handles_mixed_decimals_and_integers() {
        assert_eq!(parse_scale_grid("1:1:3").unwrap(), vec![1.0, 2.0, 3.0]);
        assert_eq!(parse_scale_grid("0.25:0.25:1").unwrap(), vec![0.25, 0.5, 0.75, 1.0]);
        assert_eq!(parse_scale_grid("2:1:2").unwrap(), vec![2.0]);
    }

    #[test]
    fn grid_rejects_malformed_input() {
        assert!(parse_scale_grid("0.5:0.1").is_err());
        assert!(parse_scale_grid("0:0.1:2").is_err());
        assert!(parse_scale_grid("0.5:0:2").is_err());
        assert!(parse_scale_grid("2:0.1:1").is_err());
        assert!(parse_scale_grid("a:b:c").is_err());
        assert!(parse_scale_grid("0.5:-0.1:2.0").is_err());
    }
}
