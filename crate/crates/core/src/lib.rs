//! Lane planning for unplanned traffic zones.
//!
//! Two heuristics share one kinematic model:
//!
//! * [`part1`] classifies every vehicle into one of five speed bands, opens one
//!   lane per band present and counts the overtaking transitions inside each lane.
//! * [`part2`] runs a population knowledge base: lanes carry speed buffers and
//!   running averages, and each arriving vehicle joins the lane that already holds
//!   its exact speed or, once the lane budget is spent, the lane with the nearest
//!   average speed.
//!
//! [`stats`], [`synth`] and [`ensemble`] turn class-count tables into seeded
//! vehicle streams and aggregate many simulations into comparison curves.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, JSON and the
//! command line live in the companion `laneplan` crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod domain;
pub mod ensemble;
mod error;
pub mod kinematics;
pub mod part1;
pub mod part2;
pub mod reference;
pub mod rng;
pub mod stats;
pub mod synth;

pub use domain::{
    classify_speed, Algorithm, CountingMode, LaneAssignment, LaneIndex, LanePlan,
    SimulationReport, Speed, SpeedClass, Tick, TransitionEvent, VehicleRecord,
};
pub use error::{Error, Result};
pub use kinematics::{InteriorTransit, OvertakePair};
pub use part2::{KnowledgeBase, LaneState};
pub use stats::ClassCountVector;
pub use synth::{SpeedRange, SynthConfig};

/// Options shared by both planners when counting transitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SimOptions {
    pub mode: CountingMode,
    pub interior: InteriorTransit,
}

impl SimOptions {
    pub fn new(mode: CountingMode) -> Self {
        SimOptions {
            mode,
            ..SimOptions::default()
        }
    }
}
