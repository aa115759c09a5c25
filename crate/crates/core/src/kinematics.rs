//! Fixed-speed overtaking arithmetic.
//!
//! A slow vehicle enters a lane `head_start` ticks before a faster one. After
//! `t1` ticks of the faster vehicle's travel the slow one has covered
//! `slow * (head_start + t1)` and the fast one `fast * t1`. Both quantities
//! are compared in exact integer arithmetic on thousandths of km/h.

use core::str::FromStr;

use crate::domain::{LaneIndex, Speed, Tick};
use crate::error::{Error, Result};

/// A same-lane pair where the later vehicle is strictly faster.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OvertakePair {
    slow: Speed,
    fast: Speed,
    head_start: Tick,
}

impl OvertakePair {
    pub fn new(slow: Speed, fast: Speed, head_start: Tick) -> Result<Self> {
        if slow >= fast {
            return Err(Error::InvalidPair);
        }
        Ok(OvertakePair {
            slow,
            fast,
            head_start,
        })
    }

    pub fn slow(&self) -> Speed {
        self.slow
    }

    pub fn fast(&self) -> Speed {
        self.fast
    }

    pub fn head_start(&self) -> Tick {
        self.head_start
    }

    /// `(slow * head_start, fast - slow)` in thousandths.
    fn gap_and_closing(&self) -> (u64, u64) {
        let slow = u64::from(self.slow.milli());
        let fast = u64::from(self.fast.milli());
        (slow * u64::from(self.head_start), fast - slow)
    }
}

/// Smallest tick `t1 >= 1` at which the fast vehicle has drawn level:
/// `fast * t1 >= slow * (head_start + t1)`.
pub fn catch_up_ticks(pair: &OvertakePair) -> u64 {
    let (gap, closing) = pair.gap_and_closing();
    gap.div_ceil(closing).max(1)
}

/// Number of ticks `t1 >= 1` with `fast * t1 <= slow * (head_start + t1)`,
/// i.e. how often the tick loop increments its counter before the fast vehicle
/// pulls strictly ahead.
pub fn literal_overtake_count(pair: &OvertakePair) -> u64 {
    let (gap, closing) = pair.gap_and_closing();
    gap / closing
}

/// Which neighbour an interior lane passes through.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum InteriorTransit {
    /// `lane - 1`
    #[default]
    Lower,
    /// `lane + 1`
    Upper,
}

impl FromStr for InteriorTransit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lower" => Ok(InteriorTransit::Lower),
            "upper" => Ok(InteriorTransit::Upper),
            other => Err(Error::Config(alloc::format!(
                "unknown interior transit `{other}` (expected lower or upper)"
            ))),
        }
    }
}

/// Lane an overtaker moves into while passing.
///
/// Lane 1 passes through lane 2, the last lane through its only neighbour,
/// and interior lanes through the side chosen by `interior`.
pub fn transition_target(
    from_lane: LaneIndex,
    lane_count: usize,
    interior: InteriorTransit,
) -> Result<LaneIndex> {
    assert!(
        (1..=lane_count).contains(&from_lane),
        "lane {from_lane} outside 1..={lane_count}"
    );
    if lane_count < 2 {
        return Err(Error::NoAdjacentLane {
            lane: from_lane,
            lane_count,
        });
    }
    Ok(if from_lane == 1 {
        2
    } else if from_lane == lane_count {
        lane_count - 1
    } else {
        match interior {
            InteriorTransit::Lower => from_lane - 1,
            InteriorTransit::Upper => from_lane + 1,
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pair(slow: u32, fast: u32, t: Tick) -> OvertakePair {
        OvertakePair::new(Speed::from_kmh(slow), Speed::from_kmh(fast), t).unwrap()
    }

    /// The tick loop run directly: returns (first tick with d1 >= d,
    /// number of ticks with d1 <= d before the first d1 > d).
    fn tick_loop(slow: u64, fast: u64, t: u64) -> (u64, u64) {
        let mut caught = None;
        let mut literal = 0;
        let mut t1 = 0;
        loop {
            t1 += 1;
            let d = slow * (t + t1);
            let d1 = fast * t1;
            if caught.is_none() && d1 >= d {
                caught = Some(t1);
            }
            if d1 <= d {
                literal += 1;
            } else {
                return (caught.unwrap(), literal);
            }
        }
    }

    #[test]
    fn examples() {
        assert_eq!(catch_up_ticks(&pair(35, 45, 1)), 4);
        assert_eq!(catch_up_ticks(&pair(20, 40, 1)), 1);
        assert_eq!(catch_up_ticks(&pair(20, 40, 0)), 1);
        assert_eq!(literal_overtake_count(&pair(35, 45, 1)), 3);
        assert_eq!(literal_overtake_count(&pair(20, 40, 1)), 1);
        assert_eq!(literal_overtake_count(&pair(20, 40, 0)), 0);
    }

    #[test]
    fn examples_match_tick_loop() {
        assert_eq!(tick_loop(35, 45, 1), (4, 3));
        assert_eq!(tick_loop(20, 40, 1), (1, 1));
        assert_eq!(tick_loop(20, 40, 0), (1, 0));
    }

    #[test]
    fn pair_requires_strict_speed_increase() {
        assert_eq!(
            OvertakePair::new(Speed::from_kmh(40), Speed::from_kmh(40), 1),
            Err(Error::InvalidPair)
        );
        assert!(OvertakePair::new(Speed::from_kmh(41), Speed::from_kmh(40), 1).is_err());
    }

    #[test]
    fn fractional_speeds_are_exact() {
        // 10.5 vs 21: closing 10.5, gap 10.5 * 2 = 21 -> exactly 2 ticks
        let p = OvertakePair::new("10.5".parse().unwrap(), Speed::from_kmh(21), 2).unwrap();
        assert_eq!(catch_up_ticks(&p), 2);
        assert_eq!(literal_overtake_count(&p), 2);
    }

    #[test]
    fn transition_target_examples() {
        use InteriorTransit::*;
        assert_eq!(transition_target(1, 3, Lower), Ok(2));
        assert_eq!(transition_target(3, 3, Lower), Ok(2));
        assert_eq!(transition_target(2, 3, Lower), Ok(1));
        assert_eq!(transition_target(2, 3, Upper), Ok(3));
        assert_eq!(transition_target(2, 2, Upper), Ok(1));
        assert_eq!(
            transition_target(1, 1, Lower),
            Err(Error::NoAdjacentLane {
                lane: 1,
                lane_count: 1
            })
        );
    }

    proptest! {
        #[test]
        fn catch_up_relates_to_literal(slow in 1u32..100, extra in 1u32..100, t in 0u32..200) {
            let fast = (slow + extra).min(100);
            prop_assume!(slow < fast);
            let p = pair(slow, fast, t);
            let gap = u64::from(slow) * u64::from(t);
            let closing = u64::from(fast - slow);
            let c = catch_up_ticks(&p);
            let l = literal_overtake_count(&p);
            if gap % closing != 0 {
                prop_assert_eq!(c, l + 1);
            } else if gap / closing >= 1 {
                prop_assert_eq!(c, l);
            } else {
                prop_assert_eq!((c, l), (1, 0));
            }
        }

        #[test]
        fn catch_up_is_monotone(slow in 1u32..99, fast in 2u32..=100, t in 0u32..100) {
            prop_assume!(slow < fast);
            let base = catch_up_ticks(&pair(slow, fast, t));
            prop_assert!(catch_up_ticks(&pair(slow, fast, t + 1)) >= base);
            if slow + 1 < fast {
                prop_assert!(catch_up_ticks(&pair(slow + 1, fast, t)) >= base);
            }
            if fast < 100 {
                prop_assert!(catch_up_ticks(&pair(slow, fast + 1, t)) <= base);
            }
        }

        #[test]
        fn transition_target_is_adjacent(lane_count in 2usize..20, lane in 1usize..20, upper in any::<bool>()) {
            prop_assume!(lane <= lane_count);
            let interior = if upper { InteriorTransit::Upper } else { InteriorTransit::Lower };
            let to = transition_target(lane, lane_count, interior).unwrap();
            prop_assert_ne!(to, lane);
            prop_assert_eq!(to.abs_diff(lane), 1);
            prop_assert!((1..=lane_count).contains(&to));
        }
    }
}
