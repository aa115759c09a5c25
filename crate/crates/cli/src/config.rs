//! Flat `key = value` configuration files.
//!
//! One setting per line; blank lines and lines starting with `#` are ignored.
//!
//! | key | value |
//! |-----|-------|
//! | `seed` | stream seed for `sample` |
//! | `arrival_gap_max` | largest gap between consecutive arrivals, in ticks |
//! | `speed.<class>` | speed range `lo-hi` (or a single speed) for a class |
//! | `sample_sizes` | comma-separated, strictly increasing |
//! | `runs_per_size` | runs per sample size |
//! | `base_seed` | ensemble base seed |
//! | `mode` | `event` or `literal` |
//! | `interior` | `lower` or `upper` |
//! | `part2_budget` | `auto` or a positive integer |
//! | `counts.<class>` | source count of a class; classes keep file order |

use std::collections::HashSet;
use std::str::FromStr;

use laneplan_core::ensemble::EnsembleSpec;
use laneplan_core::{ClassCountVector, SpeedRange, SynthConfig};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ConfigFile {
    entries: Vec<Entry>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Entry {
    line: u64,
    key: String,
    value: String,
}

const PLAIN_KEYS: [&str; 8] = [
    "seed",
    "arrival_gap_max",
    "sample_sizes",
    "runs_per_size",
    "base_seed",
    "mode",
    "interior",
    "part2_budget",
];

impl ConfigFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = Vec::new();
        let mut seen = HashSet::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i as u64 + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let Some((key, value)) = trimmed.split_once('=') else {
                return Err(CliError::parse(line, 1, "expected `key = value`"));
            };
            let (key, value) = (key.trim(), value.trim());
            let known = PLAIN_KEYS.contains(&key)
                || key.strip_prefix("speed.").is_some_and(|c| !c.is_empty())
                || key.strip_prefix("counts.").is_some_and(|c| !c.is_empty());
            if !known {
                return Err(CliError::parse(line, 1, format!("unknown key `{key}`")));
            }
            if !seen.insert(key.to_string()) {
                return Err(CliError::parse(line, 1, format!("duplicate key `{key}`")));
            }
            entries.push(Entry {
                line,
                key: key.into(),
                value: value.into(),
            });
        }
        Ok(ConfigFile { entries })
    }

    fn get(&self, key: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.key == key)
    }

    fn value<T: FromStr>(&self, key: &str) -> Result<Option<T>>
    where
        T::Err: std::fmt::Display,
    {
        self.get(key)
            .map(|e| {
                e.value.parse::<T>().map_err(|err| {
                    CliError::parse(e.line, e.key.len() + 2, format!("invalid value for `{key}`: {err}"))
                })
            })
            .transpose()
    }

    fn prefixed<'a>(&'a self, prefix: &'a str) -> impl Iterator<Item = (&'a str, &'a Entry)> + 'a {
        self.entries
            .iter()
            .filter_map(move |e| e.key.strip_prefix(prefix).map(|class| (class, e)))
    }

    pub fn apply_synth(&self, synth: &mut SynthConfig) -> Result<()> {
        if let Some(seed) = self.value("seed")? {
            synth.seed = seed;
        }
        if let Some(gap) = self.value("arrival_gap_max")? {
            synth.arrival_gap_max = gap;
        }
        for (class, entry) in self.prefixed("speed.") {
            let range: SpeedRange = entry
                .value
                .parse()
                .map_err(|e| CliError::parse(entry.line, 1, format!("`{}`: {e}", entry.key)))?;
            synth.set_range(class, range);
        }
        synth
            .validate()
            .map_err(|e| CliError::parse(self.get("arrival_gap_max").map_or(0, |e| e.line), 1, e.to_string()))
    }

    pub fn apply_ensemble(&self, spec: &mut EnsembleSpec) -> Result<()> {
        self.apply_synth(&mut spec.synth)?;
        if let Some(entry) = self.get("sample_sizes") {
            spec.sample_sizes = parse_list(&entry.value)
                .map_err(|m| CliError::parse(entry.line, 1, format!("`sample_sizes`: {m}")))?;
        }
        if let Some(runs) = self.value("runs_per_size")? {
            spec.runs_per_size = runs;
        }
        if let Some(seed) = self.value("base_seed")? {
            spec.base_seed = seed;
        }
        if let Some(mode) = self.value("mode")? {
            spec.options.mode = mode;
        }
        if let Some(interior) = self.value("interior")? {
            spec.options.interior = interior;
        }
        if let Some(budget) = self.value("part2_budget")? {
            spec.part2_budget = budget;
        }
        let mut labels = Vec::new();
        let mut counts = Vec::new();
        for (class, entry) in self.prefixed("counts.") {
            labels.push(class.to_string());
            counts.push(
                entry
                    .value
                    .parse::<u64>()
                    .map_err(|_| CliError::parse(entry.line, 1, format!("invalid count for `{}`", entry.key)))?,
            );
        }
        if !labels.is_empty() {
            spec.source_counts = ClassCountVector::new(labels, counts)?;
        }
        Ok(())
    }
}

/// Comma-separated positive integers.
pub fn parse_list(text: &str) -> std::result::Result<Vec<u64>, String> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| format!("invalid number `{}`", t.trim()))
        })
        .collect()
}
