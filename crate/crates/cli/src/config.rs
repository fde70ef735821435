//! Resolved experiment configuration. Written next to every output so a run
//! can be repeated byte for byte.

use std::path::PathBuf;

use gravrank::centrality::{EffgPeers, Measure, MeasureOptions};
use gravrank::{DrawMode, SiConfig, TauConvention};
use serde::Serialize;

use crate::{CliError, EffgPeersArg, Format, IoArgs, MeasureArgs, TauConventionArg};

pub struct SiArgs {
    pub beta: f64,
    pub t_max: usize,
    pub runs: usize,
    pub seed: u64,
}

pub struct EvaluateParams {
    pub beta_grid: Vec<f64>,
    pub t_max: usize,
    pub beta: f64,
    pub spread_t_max: usize,
    pub runs: usize,
    pub seed: u64,
    pub k: usize,
    pub tau_convention: TauConventionArg,
    pub reference: String,
    pub overlap_reference: String,
}

/// Sequence the tau sweep correlates against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Reference {
    Si,
    Measure(Measure),
}

impl Reference {
    fn parse(s: &str) -> Result<Self, CliError> {
        if s.trim().eq_ignore_ascii_case("si") {
            return Ok(Reference::Si);
        }
        s.parse()
            .map(Reference::Measure)
            .map_err(|e: gravrank::Error| CliError::Usage(format!("{e}, or `si`")))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ExperimentConfig {
    pub command: &'static str,
    pub version: &'static str,
    pub input: PathBuf,
    pub out: PathBuf,
    pub format: Format,
    pub ignore_extra_columns: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub measures: Vec<Measure>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub measure_options: Option<MeasureOptions>,
    /// `spread`: the simulation. `evaluate`: the tau sweep (beta taken from `beta_grid`).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub si: Option<SiConfig>,
    /// `evaluate`: SI ranking and rank-vs-spread tables.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spread_si: Option<SiConfig>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta_grid: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tau_convention: Option<TauConvention>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reference: Option<Reference>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub overlap_reference: Option<Measure>,
    pub dump_distances: bool,
}

impl ExperimentConfig {
    fn base(command: &'static str, io: &IoArgs) -> Self {
        ExperimentConfig {
            command,
            version: env!("CARGO_PKG_VERSION"),
            input: io.input.clone(),
            out: io.out.clone(),
            format: io.format,
            ignore_extra_columns: io.ignore_extra_columns,
            measures: Vec::new(),
            measure_options: None,
            si: None,
            spread_si: None,
            beta_grid: None,
            k: None,
            tau_convention: None,
            reference: None,
            overlap_reference: None,
            dump_distances: false,
        }
    }

    pub fn stats(io: &IoArgs) -> Result<Self, CliError> {
        Ok(Self::base("stats", io))
    }

    pub fn rank(io: &IoArgs, m: &MeasureArgs, dump_distances: bool) -> Result<Self, CliError> {
        let mut cfg = Self::base("rank", io);
        cfg.set_measures(m)?;
        cfg.dump_distances = dump_distances;
        Ok(cfg)
    }

    pub fn spread(io: &IoArgs, m: &MeasureArgs, si: SiArgs, k: usize) -> Result<Self, CliError> {
        let mut cfg = Self::base("spread", io);
        cfg.set_measures(m)?;
        let si = SiConfig {
            beta: si.beta,
            t_max: si.t_max,
            runs: si.runs,
            seed: si.seed,
            draw_mode: DrawMode::Sequential,
        };
        si.validate()?;
        if k == 0 {
            return Err(CliError::Usage("--k must be at least 1".into()));
        }
        cfg.si = Some(si);
        cfg.k = Some(k);
        Ok(cfg)
    }

    pub fn evaluate(io: &IoArgs, m: &MeasureArgs, p: EvaluateParams) -> Result<Self, CliError> {
        let mut cfg = Self::base("evaluate", io);
        cfg.set_measures(m)?;
        if p.beta_grid.is_empty() {
            return Err(CliError::Usage("--beta-grid is empty".into()));
        }
        let mut grid = Vec::with_capacity(p.beta_grid.len());
        for b in p.beta_grid {
            grid.push(gravrank::epidemics::clamp_beta(b)?);
        }
        let sweep = SiConfig {
            beta: grid[0],
            t_max: p.t_max,
            runs: p.runs,
            seed: p.seed,
            draw_mode: DrawMode::Sequential,
        };
        sweep.validate()?;
        let spread = SiConfig {
            beta: p.beta,
            t_max: p.spread_t_max,
            ..sweep
        };
        spread.validate()?;
        if p.k == 0 {
            return Err(CliError::Usage("--k must be at least 1".into()));
        }
        let overlap_reference: Measure = p.overlap_reference.parse()?;
        cfg.si = Some(sweep);
        cfg.spread_si = Some(spread);
        cfg.beta_grid = Some(grid);
        cfg.k = Some(p.k);
        cfg.tau_convention = Some(match p.tau_convention {
            TauConventionArg::Standard => TauConvention::Standard,
            TauConventionArg::PaperEq11 => TauConvention::PaperEq11,
        });
        cfg.reference = Some(Reference::parse(&p.reference)?);
        cfg.overlap_reference = Some(overlap_reference);
        Ok(cfg)
    }

    fn set_measures(&mut self, m: &MeasureArgs) -> Result<(), CliError> {
        self.measures = parse_measures(&m.measures)?;
        if !(0.0..=1.0).contains(&m.damping) {
            return Err(CliError::Usage(format!("--damping must lie in [0, 1], got {}", m.damping)));
        }
        if !(m.tol > 0.0) {
            return Err(CliError::Usage(format!("--tol must be positive, got {}", m.tol)));
        }
        if m.max_iter == 0 {
            return Err(CliError::Usage("--max-iter must be at least 1".into()));
        }
        self.measure_options = Some(MeasureOptions {
            tol: m.tol,
            max_iter: m.max_iter,
            damping: m.damping,
            effg_peers: match m.effg_peers {
                EffgPeersArg::All => EffgPeers::AllReachable,
                EffgPeersArg::SkipUnit => EffgPeers::SkipUnitDistance,
            },
        });
        Ok(())
    }
}

/// Comma-separated measure names, deduplicated in order of first mention.
pub fn parse_measures(list: &str) -> Result<Vec<Measure>, CliError> {
    let mut out = Vec::new();
    for name in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let m: Measure = name.parse()?;
        if !out.contains(&m) {
            out.push(m);
        }
    }
    if out.is_empty() {
        return Err(CliError::Usage(format!(
            "no measures given (valid: {})",
            Measure::valid_names()
        )));
    }
    Ok(out)
}
