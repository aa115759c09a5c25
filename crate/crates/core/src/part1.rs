//! Speed-class lane planning.
//!
//! Every vehicle is classified into a speed band, one lane is opened per band
//! present (numbered by first appearance), and every same-lane pair in which a
//! later vehicle is strictly faster than an earlier one is counted as an
//! overtaking transition through an adjacent lane.

use alloc::vec;
use alloc::vec::Vec;

use crate::domain::{
    Algorithm, CountingMode, LaneAssignment, LanePlan, SimulationReport, SpeedClass,
    TransitionEvent, VehicleRecord,
};
use crate::error::{Error, Result};
use crate::kinematics::{catch_up_ticks, literal_overtake_count, transition_target, OvertakePair};
use crate::SimOptions;

/// An overtaking pair tied back to input positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IndexedPair {
    /// Position of the earlier, slower vehicle.
    pub slow_pos: usize,
    /// Position of the later, faster vehicle.
    pub fast_pos: usize,
    pub pair: OvertakePair,
}

/// Opens a lane for each speed class the first time it is seen; later
/// vehicles of that class join it.
pub fn build_lane_plan(vehicles: &[VehicleRecord]) -> Result<LanePlan> {
    if vehicles.is_empty() {
        return Err(Error::EmptyStream);
    }
    let mut lane_of_class: [Option<usize>; 5] = [None; 5];
    let mut lane_class: Vec<SpeedClass> = Vec::new();
    let lanes = vehicles
        .iter()
        .map(|v| {
            let class = v.class();
            *lane_of_class[class as usize].get_or_insert_with(|| {
                lane_class.push(class);
                lane_class.len()
            })
        })
        .collect();
    Ok(LanePlan {
        assignment: LaneAssignment::new(lane_class.len(), lanes),
        lane_class,
    })
}

/// Every ordered pair `(i, j)` sharing a lane with `speed(i) < speed(j)` and
/// `arrival(i) <= arrival(j)`, in lexicographic order of input positions.
pub fn enumerate_overtake_pairs(
    vehicles: &[VehicleRecord],
    assignment: &LaneAssignment,
) -> Vec<IndexedPair> {
    assert_eq!(vehicles.len(), assignment.len(), "assignment built from another stream");
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); assignment.lane_count()];
    for (pos, &lane) in assignment.lanes().iter().enumerate() {
        members[lane - 1].push(pos);
    }
    let mut pairs = Vec::new();
    for (i, slow) in vehicles.iter().enumerate() {
        for &j in &members[assignment.lane_of(i) - 1] {
            let fast = &vehicles[j];
            if slow.speed() < fast.speed() && slow.arrival() <= fast.arrival() {
                let pair = OvertakePair::new(slow.speed(), fast.speed(), fast.arrival() - slow.arrival())
                    .expect("guard ensures slow < fast");
                pairs.push(IndexedPair {
                    slow_pos: i,
                    fast_pos: j,
                    pair,
                });
            }
        }
    }
    pairs
}

/// Turns pairs into a transition count.
///
/// Event mode yields one [`TransitionEvent`] per pair; literal mode sums the
/// per-tick counts and records no events. The count starts from zero, so the
/// lane count is reported separately rather than folded in.
pub fn count_transitions(
    vehicles: &[VehicleRecord],
    pairs: &[IndexedPair],
    assignment: &LaneAssignment,
    opts: SimOptions,
) -> Result<(u64, Vec<TransitionEvent>)> {
    match opts.mode {
        CountingMode::Literal => {
            let total = pairs.iter().map(|p| literal_overtake_count(&p.pair)).sum();
            Ok((total, Vec::new()))
        }
        CountingMode::Event => {
            let events = pairs
                .iter()
                .map(|p| {
                    let from_lane = assignment.lane_of(p.slow_pos);
                    let to_lane = transition_target(from_lane, assignment.lane_count(), opts.interior)
                        .map_err(|_| Error::PlanHasNoAdjacentLane { lane: from_lane })?;
                    Ok(TransitionEvent {
                        overtaker_id: vehicles[p.fast_pos].id().into(),
                        overtaken_id: vehicles[p.slow_pos].id().into(),
                        from_lane,
                        to_lane,
                        catch_up_ticks: catch_up_ticks(&p.pair),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            Ok((events.len() as u64, events))
        }
    }
}

pub(crate) fn report_for(
    algorithm: Algorithm,
    vehicles: &[VehicleRecord],
    assignment: &LaneAssignment,
    opts: SimOptions,
) -> Result<SimulationReport> {
    let pairs = enumerate_overtake_pairs(vehicles, assignment);
    let (transition_count, events) = count_transitions(vehicles, &pairs, assignment, opts)?;
    Ok(SimulationReport {
        algorithm,
        counting_mode: opts.mode,
        lane_count: assignment.lane_count(),
        transition_count,
        events,
        lane_average_speed: assignment.average_speeds(vehicles),
        lane_population: assignment.populations(),
    })
}

/// Classify, plan lanes and count transitions.
pub fn simulate_part1(vehicles: &[VehicleRecord], opts: SimOptions) -> Result<SimulationReport> {
    let plan = build_lane_plan(vehicles)?;
    report_for(Algorithm::Part1, vehicles, &plan.assignment, opts)
}
