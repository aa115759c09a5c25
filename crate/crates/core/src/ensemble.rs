//! Seeded ensembles comparing both planners across sample sizes.
//!
//! For sample size index `s` and run index `r` the stream seed is
//! `derive_seed(base_seed, &[s, r])`. The source counts are rescaled to each
//! sample size, a stream is synthesized, and both planners run on it (Part II
//! with the configured budget, by default the Part I lane count).

use alloc::vec::Vec;

use crate::domain::{Algorithm, VehicleRecord};
use crate::error::{Error, Result};
use crate::part1::simulate_part1;
use crate::part2::{simulate_part2, Budget};
use crate::rng::derive_seed;
use crate::stats::{linear_trend, mean, population_sd, scale_class_counts, ClassCountVector, Trend};
use crate::synth::{synthesize_stream, SynthConfig, SynthStream};
use crate::{reference, SimOptions};

#[derive(Debug, Clone, PartialEq)]
pub struct EnsembleSpec {
    pub sample_sizes: Vec<u64>,
    pub runs_per_size: u32,
    pub base_seed: u64,
    pub options: SimOptions,
    pub source_counts: ClassCountVector,
    /// Its `seed` is replaced per run.
    pub synth: SynthConfig,
    pub part2_budget: Budget,
}

impl Default for EnsembleSpec {
    fn default() -> Self {
        EnsembleSpec {
            sample_sizes: alloc::vec![20, 25, 30, 40, 50],
            runs_per_size: 100,
            base_seed: 1,
            options: SimOptions::default(),
            source_counts: reference::raw_sample(0),
            synth: SynthConfig::default(),
            part2_budget: Budget::Auto,
        }
    }
}

impl EnsembleSpec {
    pub fn validate(&self) -> Result<()> {
        if self.sample_sizes.is_empty() {
            return Err(Error::Config("at least one sample size is required".into()));
        }
        if self.sample_sizes.contains(&0) {
            return Err(Error::InvalidSampleSize);
        }
        if !self.sample_sizes.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::Config("sample sizes must be strictly increasing".into()));
        }
        if self.runs_per_size == 0 {
            return Err(Error::Config("runs per size must be at least 1".into()));
        }
        if let Budget::Fixed(0) = self.part2_budget {
            return Err(Error::InvalidBudget);
        }
        self.synth.validate()
    }

    pub fn run_seed(&self, size_index: usize, run_index: u32) -> u64 {
        derive_seed(self.base_seed, &[size_index as u64, u64::from(run_index)])
    }

    /// The stream simulated at one grid cell.
    pub fn run_stream(&self, size_index: usize, run_index: u32) -> Result<SynthStream> {
        let counts = scale_class_counts(&self.source_counts, self.sample_sizes[size_index])?;
        synthesize_stream(&counts, &self.synth.with_seed(self.run_seed(size_index, run_index)))
    }
}

/// Transition counts of both planners on one stream.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunRecord {
    pub sample_size: u64,
    pub size_index: usize,
    pub run_index: u32,
    pub seed: u64,
    pub vehicles: usize,
    pub part1_lanes: usize,
    pub part2_budget: usize,
    pub part1_transitions: u64,
    pub part2_transitions: u64,
}

impl RunRecord {
    pub fn transitions(&self, algorithm: Algorithm) -> u64 {
        match algorithm {
            Algorithm::Part1 => self.part1_transitions,
            Algorithm::Part2 => self.part2_transitions,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CompareRow {
    pub sample_size: u64,
    pub algorithm: Algorithm,
    pub mean_transitions: f64,
    /// Population standard deviation over runs.
    pub sd_transitions: f64,
    pub min_transitions: u64,
    pub max_transitions: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CompareResult {
    /// Sorted by `(sample_size, algorithm)`.
    pub rows: Vec<CompareRow>,
    /// Trend of mean transitions against sample size; `None` when fewer than
    /// two sample sizes were run.
    pub trends: Vec<(Algorithm, Option<Trend>)>,
    /// Every run, in grid order.
    pub runs: Vec<RunRecord>,
}

impl CompareResult {
    pub fn row(&self, sample_size: u64, algorithm: Algorithm) -> Option<&CompareRow> {
        self.rows
            .iter()
            .find(|r| r.sample_size == sample_size && r.algorithm == algorithm)
    }

    pub fn means(&self, algorithm: Algorithm) -> Vec<(u64, f64)> {
        self.rows
            .iter()
            .filter(|r| r.algorithm == algorithm)
            .map(|r| (r.sample_size, r.mean_transitions))
            .collect()
    }

    /// `(part1 - part2) / part1` of the mean transitions per sample size;
    /// `None` where the Part I mean is zero.
    pub fn relative_difference(&self) -> Vec<(u64, Option<f64>)> {
        self.means(Algorithm::Part1)
            .into_iter()
            .zip(self.means(Algorithm::Part2))
            .map(|((size, p1), (_, p2))| (size, (p1 > 0.0).then(|| (p1 - p2) / p1)))
            .collect()
    }
}

pub fn run_once(spec: &EnsembleSpec, size_index: usize, run_index: u32) -> Result<RunRecord> {
    let stream = spec.run_stream(size_index, run_index)?;
    run_on(spec, size_index, run_index, &stream.vehicles)
}

fn run_on(spec: &EnsembleSpec, size_index: usize, run_index: u32, vehicles: &[VehicleRecord]) -> Result<RunRecord> {
    let p1 = simulate_part1(vehicles, spec.options)?;
    let budget = spec.part2_budget.resolve(vehicles)?;
    let p2 = simulate_part2(vehicles, budget, spec.options)?;
    Ok(RunRecord {
        sample_size: spec.sample_sizes[size_index],
        size_index,
        run_index,
        seed: spec.run_seed(size_index, run_index),
        vehicles: vehicles.len(),
        part1_lanes: p1.lane_count,
        part2_budget: budget,
        part1_transitions: p1.transition_count,
        part2_transitions: p2.transition_count,
    })
}

/// Aggregates run records into per-size rows and trends.
pub fn aggregate(sample_sizes: &[u64], runs: Vec<RunRecord>) -> CompareResult {
    let mut rows = Vec::with_capacity(sample_sizes.len() * 2);
    for &size in sample_sizes {
        for algorithm in [Algorithm::Part1, Algorithm::Part2] {
            let counts: Vec<u64> = runs
                .iter()
                .filter(|r| r.sample_size == size)
                .map(|r| r.transitions(algorithm))
                .collect();
            if counts.is_empty() {
                continue;
            }
            let values: Vec<f64> = counts.iter().map(|&c| c as f64).collect();
            rows.push(CompareRow {
                sample_size: size,
                algorithm,
                mean_transitions: mean(&values).unwrap_or(0.0),
                sd_transitions: population_sd(&values).unwrap_or(0.0),
                min_transitions: counts.iter().copied().min().unwrap_or(0),
                max_transitions: counts.iter().copied().max().unwrap_or(0),
            });
        }
    }
    let trends = [Algorithm::Part1, Algorithm::Part2]
        .into_iter()
        .map(|algorithm| {
            let points: Vec<(f64, f64)> = rows
                .iter()
                .filter(|r| r.algorithm == algorithm)
                .map(|r| (r.sample_size as f64, r.mean_transitions))
                .collect();
            (algorithm, linear_trend(&points).ok())
        })
        .collect();
    CompareResult { rows, trends, runs }
}

/// Runs the whole grid. Any failing run fails the ensemble.
pub fn run_ensemble(spec: &EnsembleSpec) -> Result<CompareResult> {
    spec.validate()?;
    let mut runs = Vec::with_capacity(spec.sample_sizes.len() * spec.runs_per_size as usize);
    for size_index in 0..spec.sample_sizes.len() {
        for run_index in 0..spec.runs_per_size {
            runs.push(run_once(spec, size_index, run_index)?);
        }
    }
    Ok(aggregate(&spec.sample_sizes, runs))
}
