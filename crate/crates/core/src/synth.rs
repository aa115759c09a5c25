//! Seeded vehicle streams from class counts.
//!
//! Generation for a given `(counts, config)` proceeds in three passes over a
//! single [`SplitMix64`] seeded with `config.seed`:
//!
//! 1. a roster lists `counts[k]` entries for each class in label order, and
//!    each entry draws its speed uniformly from the class's range;
//! 2. the roster is shuffled (Fisher-Yates, last index first);
//! 3. arrival slots are filled in order, each adding a uniform gap in
//!    `0..=arrival_gap_max` to the previous arrival (starting from 0).
//!
//! Vehicle ids are `<label>-<position>` with spaces in the label replaced by
//! underscores and positions counted from 1.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::domain::{Speed, Tick, VehicleRecord};
use crate::error::{Error, Result};
use crate::rng::SplitMix64;
use crate::stats::ClassCountVector;

/// Inclusive integer speed interval in km/h, within 1..=100.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SpeedRange {
    lo: u32,
    hi: u32,
}

impl SpeedRange {
    pub fn new(lo: u32, hi: u32) -> Result<Self> {
        if lo == 0 || hi > 100 || lo > hi {
            return Err(Error::Config(alloc::format!(
                "speed range {lo}-{hi} must be non-empty and within 1-100"
            )));
        }
        Ok(SpeedRange { lo, hi })
    }

    pub fn single(kmh: u32) -> Result<Self> {
        Self::new(kmh, kmh)
    }

    pub fn lo(&self) -> u32 {
        self.lo
    }

    pub fn hi(&self) -> u32 {
        self.hi
    }

    pub fn contains(&self, speed: Speed) -> bool {
        speed.is_whole() && (self.lo..=self.hi).contains(&(speed.milli() / Speed::SCALE))
    }
}

impl fmt::Display for SpeedRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.lo, self.hi)
    }
}

impl FromStr for SpeedRange {
    type Err = Error;

    /// `lo-hi` or a single speed.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Config(alloc::format!("invalid speed range `{s}`"));
        let parse = |t: &str| t.trim().parse::<u32>().map_err(|_| bad());
        match s.split_once('-') {
            Some((lo, hi)) => SpeedRange::new(parse(lo)?, parse(hi)?),
            None => SpeedRange::single(parse(s)?),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SynthConfig {
    /// Speed interval per class label.
    pub class_speed_range: Vec<(String, SpeedRange)>,
    pub arrival_gap_max: Tick,
    pub seed: u64,
}

impl Default for SynthConfig {
    fn default() -> Self {
        let ranges = [
            ("Rickshaw", 1, 20),
            ("Trucks", 11, 40),
            ("LCV", 21, 45),
            ("Buses", 21, 45),
            ("Vehicles", 11, 50),
            ("Motor Cycle", 31, 50),
            ("Cars", 31, 60),
        ];
        SynthConfig {
            class_speed_range: ranges
                .iter()
                .map(|&(label, lo, hi)| (label.into(), SpeedRange { lo, hi }))
                .collect(),
            arrival_gap_max: 3,
            seed: 0,
        }
    }
}

impl SynthConfig {
    pub fn range_for(&self, label: &str) -> Option<SpeedRange> {
        self.class_speed_range
            .iter()
            .find(|(l, _)| l == label)
            .map(|&(_, r)| r)
    }

    /// Adds or replaces the range of one class.
    pub fn set_range(&mut self, label: &str, range: SpeedRange) {
        match self.class_speed_range.iter_mut().find(|(l, _)| l == label) {
            Some(entry) => entry.1 = range,
            None => self.class_speed_range.push((label.into(), range)),
        }
    }

    pub fn with_seed(&self, seed: u64) -> Self {
        SynthConfig {
            seed,
            ..self.clone()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.arrival_gap_max == 0 {
            return Err(Error::Config("arrival_gap_max must be at least 1".into()));
        }
        Ok(())
    }
}

/// A generated stream with the class of every vehicle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SynthStream {
    pub vehicles: Vec<VehicleRecord>,
    /// Index into the count vector's labels, per vehicle.
    pub classes: Vec<usize>,
}

impl SynthStream {
    /// Vehicles per class, in label order.
    pub fn multiplicities(&self, class_count: usize) -> Vec<u64> {
        let mut m = alloc::vec![0u64; class_count];
        for &c in &self.classes {
            m[c] += 1;
        }
        m
    }
}

pub fn synthesize_stream(counts: &ClassCountVector, config: &SynthConfig) -> Result<SynthStream> {
    config.validate()?;
    if counts.total() == 0 {
        return Err(Error::EmptyStream);
    }
    let ranges = counts
        .iter()
        .map(|(label, n)| match config.range_for(label) {
            Some(r) => Ok(Some(r)),
            None if n == 0 => Ok(None),
            None => Err(Error::Config(alloc::format!("no speed range configured for class `{label}`"))),
        })
        .collect::<Result<Vec<_>>>()?;

    let mut rng = SplitMix64::new(config.seed);
    let mut roster: Vec<(usize, u32)> = Vec::with_capacity(counts.total() as usize);
    for (class, (range, &n)) in ranges.iter().zip(counts.counts()).enumerate() {
        for _ in 0..n {
            let range = range.expect("range present for nonzero class");
            let kmh = rng.in_range(u64::from(range.lo), u64::from(range.hi)) as u32;
            roster.push((class, kmh));
        }
    }
    rng.shuffle(&mut roster);

    let mut arrival: Tick = 0;
    let mut vehicles = Vec::with_capacity(roster.len());
    let mut classes = Vec::with_capacity(roster.len());
    for (pos, &(class, kmh)) in roster.iter().enumerate() {
        let gap = rng.in_range(0, u64::from(config.arrival_gap_max)) as Tick;
        arrival = arrival
            .checked_add(gap)
            .ok_or_else(|| Error::Config("arrival ticks overflow".into()))?;
        let id = alloc::format!("{}-{}", counts.labels()[class].replace(' ', "_"), pos + 1);
        vehicles.push(VehicleRecord::new(id, Speed::from_kmh(kmh), arrival)?);
        classes.push(class);
    }
    Ok(SynthStream { vehicles, classes })
}
