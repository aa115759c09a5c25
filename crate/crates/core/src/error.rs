use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// Speed outside the open interval (0, 101) km/h.
    #[error("speed {kmh} km/h is outside the modelled range (0, 101)")]
    SpeedOutOfModel { kmh: f64 },
    #[error("vehicle stream is empty")]
    EmptyStream,
    #[error("lane {lane} of a {lane_count}-lane plan has no adjacent lane")]
    NoAdjacentLane { lane: usize, lane_count: usize },
    #[error("overtaking pair in single-lane plan: lane {lane} has no adjacent lane to transit through")]
    PlanHasNoAdjacentLane { lane: usize },
    #[error("invalid overtaking pair: slow speed must be strictly below fast speed")]
    InvalidPair,
    #[error("lane budget must be at least 1")]
    InvalidBudget,
    #[error("sample size must be at least 1")]
    InvalidSampleSize,
    #[error("degenerate distribution: {0}")]
    DegenerateDistribution(&'static str),
    #[error("degenerate fit: x values do not vary or fewer than two points")]
    DegenerateFit,
    #[error("{0}")]
    Config(String),
}
