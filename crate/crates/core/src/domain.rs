//! Value types shared by both planners and the speed-band classifier.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// Arrival time in abstract ticks.
pub type Tick = u32;

/// 1-based lane number.
pub type LaneIndex = usize;

/// A speed in km/h held as an exact count of thousandths.
///
/// Integer and decimal inputs (up to three fractional digits) are represented
/// without rounding, so every comparison and kinematic product is exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Speed(u32);

impl Speed {
    /// Thousandths per km/h.
    pub const SCALE: u32 = 1000;

    pub const fn from_kmh(kmh: u32) -> Self {
        Speed(kmh * Self::SCALE)
    }

    pub const fn from_milli(milli: u32) -> Self {
        Speed(milli)
    }

    pub const fn milli(self) -> u32 {
        self.0
    }

    pub fn kmh(self) -> f64 {
        f64::from(self.0) / f64::from(Self::SCALE)
    }

    pub fn is_whole(self) -> bool {
        self.0.is_multiple_of(Self::SCALE)
    }
}

impl fmt::Display for Speed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let whole = self.0 / Self::SCALE;
        let frac = self.0 % Self::SCALE;
        if frac == 0 {
            return write!(f, "{whole}");
        }
        let mut digits = alloc::format!("{frac:03}");
        while digits.ends_with('0') {
            digits.pop();
        }
        write!(f, "{whole}.{digits}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseSpeedError {
    #[error("empty speed")]
    Empty,
    #[error("invalid speed `{0}`")]
    Invalid(String),
    #[error("speed `{0}` has more than three decimal places")]
    TooPrecise(String),
    #[error("speed `{0}` is too large")]
    TooLarge(String),
    /// Syntactically valid but negative; callers treat this as a model error.
    #[error("speed `{0}` is negative")]
    Negative(String),
}

impl FromStr for Speed {
    type Err = ParseSpeedError;

    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ParseSpeedError::Empty);
        }
        let (negative, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s.strip_prefix('+').unwrap_or(s)),
        };
        let (int_part, frac_part) = match body.split_once('.') {
            Some((i, f)) => (i, f),
            None => (body, ""),
        };
        let all_digits = |t: &str| t.bytes().all(|b| b.is_ascii_digit());
        if (int_part.is_empty() && frac_part.is_empty())
            || !all_digits(int_part)
            || !all_digits(frac_part)
            || (body.contains('.') && frac_part.is_empty())
        {
            return Err(ParseSpeedError::Invalid(s.into()));
        }
        if frac_part.len() > 3 {
            return Err(ParseSpeedError::TooPrecise(s.into()));
        }
        let whole: u64 = if int_part.is_empty() {
            0
        } else {
            int_part
                .parse()
                .map_err(|_| ParseSpeedError::TooLarge(s.into()))?
        };
        let mut frac: u64 = 0;
        for i in 0..3 {
            let digit = frac_part.as_bytes().get(i).map_or(0, |b| u64::from(b - b'0'));
            frac = frac * 10 + digit;
        }
        let milli = whole
            .checked_mul(u64::from(Speed::SCALE))
            .and_then(|w| w.checked_add(frac))
            .and_then(|m| u32::try_from(m).ok())
            .ok_or_else(|| ParseSpeedError::TooLarge(s.into()))?;
        if negative && milli != 0 {
            return Err(ParseSpeedError::Negative(s.into()));
        }
        Ok(Speed(milli))
    }
}

/// The five speed bands, ordered slowest first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SpeedClass {
    A,
    B,
    C,
    D,
    E,
}

impl SpeedClass {
    pub const ALL: [SpeedClass; 5] = [
        SpeedClass::A,
        SpeedClass::B,
        SpeedClass::C,
        SpeedClass::D,
        SpeedClass::E,
    ];

    pub fn label(self) -> char {
        match self {
            SpeedClass::A => 'A',
            SpeedClass::B => 'B',
            SpeedClass::C => 'C',
            SpeedClass::D => 'D',
            SpeedClass::E => 'E',
        }
    }

    /// Open interval (low, high) in km/h.
    pub const fn bounds_kmh(self) -> (u32, u32) {
        match self {
            SpeedClass::A => (0, 11),
            SpeedClass::B => (10, 31),
            SpeedClass::C => (30, 46),
            SpeedClass::D => (45, 51),
            SpeedClass::E => (50, 101),
        }
    }
}

impl fmt::Display for SpeedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// Classifies a speed into its band.
///
/// The bands overlap on fractional speeds (e.g. 45.5 lies in both C and D);
/// the first band in A..E order whose open interval contains the speed wins.
pub fn classify_speed(speed: Speed) -> Result<SpeedClass> {
    let milli = speed.milli();
    SpeedClass::ALL
        .into_iter()
        .find(|class| {
            let (lo, hi) = class.bounds_kmh();
            lo * Speed::SCALE < milli && milli < hi * Speed::SCALE
        })
        .ok_or(Error::SpeedOutOfModel { kmh: speed.kmh() })
}

/// One sensed vehicle.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VehicleRecord {
    id: String,
    speed: Speed,
    arrival: Tick,
}

impl VehicleRecord {
    /// Fails with [`Error::SpeedOutOfModel`] unless 0 < speed < 101 km/h.
    pub fn new(id: impl Into<String>, speed: Speed, arrival: Tick) -> Result<Self> {
        classify_speed(speed)?;
        Ok(VehicleRecord {
            id: id.into(),
            speed,
            arrival,
        })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn speed(&self) -> Speed {
        self.speed
    }

    pub fn arrival(&self) -> Tick {
        self.arrival
    }

    pub fn class(&self) -> SpeedClass {
        classify_speed(self.speed).expect("vehicle speed validated on construction")
    }
}

/// Lane membership of every vehicle, by input position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaneAssignment {
    lane_count: usize,
    lanes: Vec<LaneIndex>,
}

impl LaneAssignment {
    pub(crate) fn new(lane_count: usize, lanes: Vec<LaneIndex>) -> Self {
        debug_assert!(lanes.iter().all(|&l| (1..=lane_count).contains(&l)));
        LaneAssignment { lane_count, lanes }
    }

    pub fn lane_count(&self) -> usize {
        self.lane_count
    }

    /// Lane of the vehicle at input position `pos`.
    pub fn lane_of(&self, pos: usize) -> LaneIndex {
        self.lanes[pos]
    }

    pub fn lanes(&self) -> &[LaneIndex] {
        &self.lanes
    }

    pub fn len(&self) -> usize {
        self.lanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lanes.is_empty()
    }

    /// Vehicle count per lane, index 0 holding lane 1.
    pub fn populations(&self) -> Vec<u64> {
        let mut pop = alloc::vec![0u64; self.lane_count];
        for &lane in &self.lanes {
            pop[lane - 1] += 1;
        }
        pop
    }

    /// Mean member speed per lane in km/h, from exact thousandth sums.
    pub fn average_speeds(&self, vehicles: &[VehicleRecord]) -> Vec<f64> {
        let mut sums = alloc::vec![0u64; self.lane_count];
        for (v, &lane) in vehicles.iter().zip(&self.lanes) {
            sums[lane - 1] += u64::from(v.speed().milli());
        }
        sums.iter()
            .zip(self.populations())
            .map(|(&sum, n)| exact_mean_kmh(sum, n))
            .collect()
    }
}

/// `sum_milli / (n * 1000)` as a single correctly rounded division.
pub(crate) fn exact_mean_kmh(sum_milli: u64, n: u64) -> f64 {
    if n == 0 {
        return 0.0;
    }
    sum_milli as f64 / (n as f64 * f64::from(Speed::SCALE))
}

/// Output of speed-class lane planning.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LanePlan {
    pub assignment: LaneAssignment,
    /// Class of each lane, index 0 holding lane 1.
    pub lane_class: Vec<SpeedClass>,
}

impl LanePlan {
    pub fn lane_count(&self) -> usize {
        self.assignment.lane_count()
    }

    pub fn lane_of(&self, pos: usize) -> LaneIndex {
        self.assignment.lane_of(pos)
    }

    pub fn class_of_lane(&self, lane: LaneIndex) -> SpeedClass {
        self.lane_class[lane - 1]
    }
}

/// A faster, later vehicle passing a slower, earlier one through an adjacent lane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionEvent {
    pub overtaker_id: String,
    pub overtaken_id: String,
    pub from_lane: LaneIndex,
    pub to_lane: LaneIndex,
    pub catch_up_ticks: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Algorithm {
    Part1,
    Part2,
}

impl Algorithm {
    pub fn as_str(self) -> &'static str {
        match self {
            Algorithm::Part1 => "part1",
            Algorithm::Part2 => "part2",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "part1" => Ok(Algorithm::Part1),
            "part2" => Ok(Algorithm::Part2),
            other => Err(Error::Config(alloc::format!("unknown algorithm `{other}`"))),
        }
    }
}

/// How overtaking pairs turn into a transition count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum CountingMode {
    /// One transition per overtaking pair.
    #[default]
    Event,
    /// One transition per tick at which the overtaker has not yet pulled ahead.
    Literal,
}

impl CountingMode {
    pub fn as_str(self) -> &'static str {
        match self {
            CountingMode::Event => "event",
            CountingMode::Literal => "literal",
        }
    }
}

impl fmt::Display for CountingMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CountingMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "event" => Ok(CountingMode::Event),
            "literal" => Ok(CountingMode::Literal),
            other => Err(Error::Config(alloc::format!("unknown counting mode `{other}`"))),
        }
    }
}

/// Aggregate result of one simulation.
///
/// Per-lane vectors are indexed by `lane - 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct SimulationReport {
    pub algorithm: Algorithm,
    pub counting_mode: CountingMode,
    pub lane_count: usize,
    pub transition_count: u64,
    /// Empty in literal mode.
    pub events: Vec<TransitionEvent>,
    pub lane_average_speed: Vec<f64>,
    pub lane_population: Vec<u64>,
}
