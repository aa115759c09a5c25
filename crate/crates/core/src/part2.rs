//! Population knowledge base with per-lane speed buffers.
//!
//! Each lane keeps the speeds of its members in insertion order together with
//! an exact running sum. An arriving vehicle is placed by the first rule that
//! applies:
//!
//! 1. its speed already sits in a lane's buffer: join the lowest such lane;
//! 2. fewer lanes than the budget exist: open a new lane for it;
//! 3. otherwise join the lane whose average is nearest, ties to the lowest index.
//!
//! Transitions are then counted exactly as in [`crate::part1`], with "same
//! lane" taking the place of "same speed class".

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::num::NonZeroUsize;

use crate::domain::{exact_mean_kmh, Algorithm, LaneAssignment, LaneIndex, SimulationReport, Speed, VehicleRecord};
use crate::error::{Error, Result};
use crate::part1::{build_lane_plan, report_for};
use crate::SimOptions;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaneState {
    index: LaneIndex,
    buffer: Vec<Speed>,
    sum_milli: u64,
}

impl LaneState {
    fn seeded(index: LaneIndex, speed: Speed) -> Self {
        LaneState {
            index,
            buffer: alloc::vec![speed],
            sum_milli: u64::from(speed.milli()),
        }
    }

    fn push(&mut self, speed: Speed) {
        self.buffer.push(speed);
        self.sum_milli += u64::from(speed.milli());
    }

    pub fn index(&self) -> LaneIndex {
        self.index
    }

    /// Member speeds in insertion order.
    pub fn buffer(&self) -> &[Speed] {
        &self.buffer
    }

    pub fn population(&self) -> u64 {
        self.buffer.len() as u64
    }

    /// Exact sum of member speeds in thousandths of km/h.
    pub fn speed_sum_milli(&self) -> u64 {
        self.sum_milli
    }

    /// Mean member speed in km/h.
    pub fn average(&self) -> f64 {
        exact_mean_kmh(self.sum_milli, self.population())
    }

    /// Orders `|speed - average|` between two lanes without rounding:
    /// compares `|s*n_a - S_a| * n_b` against `|s*n_b - S_b| * n_a`.
    fn cmp_distance(&self, other: &LaneState, speed: Speed) -> Ordering {
        let s = u128::from(speed.milli());
        let dev = |lane: &LaneState| (s * u128::from(lane.population())).abs_diff(u128::from(lane.sum_milli));
        (dev(self) * u128::from(other.population())).cmp(&(dev(other) * u128::from(self.population())))
    }
}

/// Lane state accumulated over a stream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnowledgeBase {
    lanes: Vec<LaneState>,
    budget: NonZeroUsize,
    formation_cursor: Option<usize>,
    processed: usize,
    // lowest lane holding each speed; a speed never lands in two lanes
    lane_of_speed: BTreeMap<Speed, LaneIndex>,
}

impl KnowledgeBase {
    pub fn new(budget: usize) -> Result<Self> {
        let budget = NonZeroUsize::new(budget).ok_or(Error::InvalidBudget)?;
        Ok(KnowledgeBase {
            lanes: Vec::new(),
            budget,
            formation_cursor: None,
            processed: 0,
            lane_of_speed: BTreeMap::new(),
        })
    }

    pub fn lanes(&self) -> &[LaneState] {
        &self.lanes
    }

    pub fn lane(&self, index: LaneIndex) -> &LaneState {
        &self.lanes[index - 1]
    }

    pub fn lane_count(&self) -> usize {
        self.lanes.len()
    }

    pub fn budget(&self) -> usize {
        self.budget.get()
    }

    /// Number of vehicles processed when the last lane was formed, once the
    /// budget has been reached.
    pub fn formation_cursor(&self) -> Option<usize> {
        self.formation_cursor
    }

    pub fn processed(&self) -> usize {
        self.processed
    }

    /// Places one vehicle and returns the successor state with its lane.
    pub fn assign(mut self, vehicle: &VehicleRecord) -> (Self, LaneIndex) {
        let speed = vehicle.speed();
        let lane = if let Some(&lane) = self.lane_of_speed.get(&speed) {
            self.lanes[lane - 1].push(speed);
            lane
        } else if self.lanes.len() < self.budget.get() {
            let lane = self.lanes.len() + 1;
            self.lanes.push(LaneState::seeded(lane, speed));
            if self.lanes.len() == self.budget.get() {
                self.formation_cursor = Some(self.processed + 1);
            }
            lane
        } else {
            let lane = self
                .lanes
                .iter()
                // min_by keeps the first of equal elements
                .min_by(|a, b| a.cmp_distance(b, speed))
                .expect("knowledge base holds at least one lane once its budget is spent")
                .index;
            self.lanes[lane - 1].push(speed);
            lane
        };
        self.lane_of_speed.entry(speed).or_insert(lane);
        self.processed += 1;
        (self, lane)
    }
}

/// Where the Part II lane budget comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Budget {
    /// The lane count of the speed-class plan for the same stream.
    #[default]
    Auto,
    Fixed(usize),
}

impl Budget {
    pub fn resolve(self, vehicles: &[VehicleRecord]) -> Result<usize> {
        match self {
            Budget::Auto => budget_from_part1(vehicles),
            Budget::Fixed(0) => Err(Error::InvalidBudget),
            Budget::Fixed(n) => Ok(n),
        }
    }
}

impl core::str::FromStr for Budget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "auto" => Ok(Budget::Auto),
            n => match n.parse::<usize>() {
                Ok(0) => Err(Error::InvalidBudget),
                Ok(n) => Ok(Budget::Fixed(n)),
                Err(_) => Err(Error::Config(alloc::format!("invalid budget `{n}` (expected a positive integer or auto)"))),
            },
        }
    }
}

/// Lane count of the speed-class plan, used as the Part II lane budget.
pub fn budget_from_part1(vehicles: &[VehicleRecord]) -> Result<usize> {
    Ok(build_lane_plan(vehicles)?.lane_count())
}

/// Feeds the stream through a fresh knowledge base in arrival order (input
/// order among equal arrivals) and returns the final state together with the
/// lane of each vehicle by input position.
pub fn assign_stream(vehicles: &[VehicleRecord], budget: usize) -> Result<(KnowledgeBase, LaneAssignment)> {
    if vehicles.is_empty() {
        return Err(Error::EmptyStream);
    }
    let mut order: Vec<usize> = (0..vehicles.len()).collect();
    order.sort_by_key(|&i| vehicles[i].arrival());
    let mut lanes = alloc::vec![0; vehicles.len()];
    let mut kb = KnowledgeBase::new(budget)?;
    for &pos in &order {
        let (next, lane) = kb.assign(&vehicles[pos]);
        kb = next;
        lanes[pos] = lane;
    }
    let assignment = LaneAssignment::new(kb.lane_count(), lanes);
    Ok((kb, assignment))
}

pub fn simulate_part2(vehicles: &[VehicleRecord], budget: usize, opts: SimOptions) -> Result<SimulationReport> {
    let (_, assignment) = assign_stream(vehicles, budget)?;
    report_for(Algorithm::Part2, vehicles, &assignment, opts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::CountingMode;
    use alloc::format;
    use alloc::vec;

    fn stream(spec: &[(u32, u32)]) -> Vec<VehicleRecord> {
        spec.iter()
            .enumerate()
            .map(|(i, &(s, a))| VehicleRecord::new(format!("v{}", i + 1), Speed::from_kmh(s), a).unwrap())
            .collect()
    }

    fn feed(budget: usize, speeds: &[u32]) -> (KnowledgeBase, Vec<LaneIndex>) {
        let mut kb = KnowledgeBase::new(budget).unwrap();
        let mut lanes = Vec::new();
        for (i, &s) in speeds.iter().enumerate() {
            let v = VehicleRecord::new(format!("v{i}"), Speed::from_kmh(s), i as u32).unwrap();
            let (next, lane) = kb.assign(&v);
            kb = next;
            lanes.push(lane);
        }
        (kb, lanes)
    }

    #[test]
    fn new_validates_budget() {
        assert_eq!(KnowledgeBase::new(0), Err(Error::InvalidBudget));
        let kb = KnowledgeBase::new(3).unwrap();
        assert_eq!(kb.lane_count(), 0);
        assert_eq!(kb.formation_cursor(), None);
        assert_eq!(KnowledgeBase::new(1).unwrap().budget(), 1);
    }

    #[test]
    fn assign_examples() {
        let (kb, lanes) = feed(2, &[10, 10, 50, 28]);
        assert_eq!(lanes, vec![1, 1, 2, 1]);
        assert_eq!(kb.lane(1).buffer(), &[Speed::from_kmh(10), Speed::from_kmh(10), Speed::from_kmh(28)]);
        assert_eq!(kb.lane(1).average(), 16.0);
        assert_eq!(kb.lane(2).average(), 50.0);
        assert_eq!(kb.formation_cursor(), Some(3));

        let (kb, lanes) = feed(3, &[10, 50]);
        assert_eq!(lanes, vec![1, 2]);
        assert_eq!(kb.lane_count(), 2);
        assert_eq!(kb.formation_cursor(), None);

        let (kb, lanes) = feed(1, &[10, 90]);
        assert_eq!(lanes, vec![1, 1]);
        assert_eq!(kb.lane(1).average(), 50.0);
    }

    #[test]
    fn nearest_average_ties_go_to_lowest_lane() {
        // lanes average 20 and 40; 30 is equidistant
        let (_, lanes) = feed(2, &[20, 40, 30]);
        assert_eq!(lanes, vec![1, 2, 1]);
    }

    #[test]
    fn exact_match_anywhere_in_buffer() {
        // 28 joins lane 1 by nearest average, then a second 28 must follow it
        // even though lane 1's first speed is 10
        let (_, lanes) = feed(2, &[10, 50, 28, 35, 28]);
        assert_eq!(lanes, vec![1, 2, 1, 2, 1]);
    }

    #[test]
    fn assign_leaves_snapshots_intact() {
        let kb = KnowledgeBase::new(2).unwrap();
        let v = VehicleRecord::new("a", Speed::from_kmh(10), 0).unwrap();
        let snapshot = kb.clone();
        let (next, _) = kb.assign(&v);
        assert_eq!(snapshot.lane_count(), 0);
        assert_eq!(next.lane_count(), 1);
    }

    #[test]
    fn simulate_examples() {
        let v = stream(&[(10, 0), (10, 3), (50, 1), (28, 2)]);
        let (_, assignment) = assign_stream(&v, 2).unwrap();
        assert_eq!(assignment.lanes(), &[1, 1, 2, 1]);
        let r = simulate_part2(&v, 2, SimOptions::default()).unwrap();
        assert_eq!(r.algorithm, Algorithm::Part2);
        assert_eq!(r.transition_count, 1);
        assert_eq!(r.events[0].overtaker_id, "v4");
        assert_eq!(r.events[0].overtaken_id, "v1");
        assert_eq!(r.lane_population, vec![3, 1]);
        assert_eq!(r.lane_average_speed, vec![16.0, 50.0]);

        let r = simulate_part2(&stream(&[(42, 0)]), 3, SimOptions::default()).unwrap();
        assert_eq!((r.lane_count, r.transition_count), (1, 0));

        assert_eq!(simulate_part2(&[], 2, SimOptions::default()), Err(Error::EmptyStream));
    }

    #[test]
    fn arrival_order_drives_the_fold() {
        // input order 50, 10, 12 but 10 arrives first
        let v = stream(&[(50, 5), (10, 0), (12, 9)]);
        let (_, assignment) = assign_stream(&v, 2).unwrap();
        assert_eq!(assignment.lanes(), &[2, 1, 1]);
    }

    #[test]
    fn single_lane_overtake_surfaces_error() {
        let v = stream(&[(10, 0), (90, 1)]);
        assert_eq!(
            simulate_part2(&v, 1, SimOptions::default()),
            Err(Error::PlanHasNoAdjacentLane { lane: 1 })
        );
        let r = simulate_part2(&v, 1, SimOptions::new(CountingMode::Literal)).unwrap();
        assert_eq!(r.transition_count, 0);
    }

    #[test]
    fn budget_examples() {
        assert_eq!(budget_from_part1(&stream(&[(5, 0), (20, 0), (7, 0), (60, 0)])), Ok(3));
        assert_eq!(budget_from_part1(&stream(&[(50, 0)])), Ok(1));
        let all: Vec<_> = (1..=100).map(|s| (s, 0)).collect();
        assert_eq!(budget_from_part1(&stream(&all)), Ok(5));
        assert_eq!(budget_from_part1(&[]), Err(Error::EmptyStream));
    }

    #[test]
    fn budget_parsing() {
        assert_eq!("auto".parse(), Ok(Budget::Auto));
        assert_eq!("4".parse(), Ok(Budget::Fixed(4)));
        assert_eq!("0".parse::<Budget>(), Err(Error::InvalidBudget));
        assert!("x".parse::<Budget>().is_err());
        let v = stream(&[(5, 0), (20, 0)]);
        assert_eq!(Budget::Auto.resolve(&v), Ok(2));
        assert_eq!(Budget::Fixed(7).resolve(&v), Ok(7));
    }
}
