//! Canonical JSON renderings: sorted keys, two-space indentation, trailing
//! newline. Lane-keyed maps use the lane number as a string key.

use serde_json::{json, Map, Value};

use laneplan_core::ensemble::{CompareResult, EnsembleSpec};
use laneplan_core::stats::Trend;
use laneplan_core::{ClassCountVector, SimulationReport};

pub fn render(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("JSON values always serialize");
    text.push('\n');
    text
}

fn lane_map<T: Into<Value> + Copy>(values: &[T]) -> Value {
    Value::Object(
        values
            .iter()
            .enumerate()
            .map(|(i, &v)| ((i + 1).to_string(), v.into()))
            .collect::<Map<_, _>>(),
    )
}

pub fn report_value(report: &SimulationReport) -> Value {
    let events: Vec<Value> = report
        .events
        .iter()
        .map(|e| {
            json!({
                "overtakerId": e.overtaker_id,
                "overtakenId": e.overtaken_id,
                "fromLane": e.from_lane,
                "toLane": e.to_lane,
                "catchUpTicks": e.catch_up_ticks,
            })
        })
        .collect();
    json!({
        "algorithm": report.algorithm.as_str(),
        "countingMode": report.counting_mode.as_str(),
        "laneCount": report.lane_count,
        "transitionCount": report.transition_count,
        "events": events,
        "laneAverageSpeed": lane_map(&report.lane_average_speed),
        "lanePopulation": lane_map(&report.lane_population),
    })
}

pub fn stats_value(counts: &ClassCountVector, sample_size: u64, expectation: f64, sd: f64) -> Value {
    json!({
        "labels": counts.labels(),
        "counts": counts.counts(),
        "sampleSize": sample_size,
        "expectation": expectation,
        "populationSd": sd,
    })
}

fn trend_value(trend: Option<Trend>) -> Value {
    match trend {
        Some(t) => json!({ "slope": t.slope, "intercept": t.intercept, "rSquared": t.r_squared }),
        None => Value::Null,
    }
}

pub fn compare_value(spec: &EnsembleSpec, result: &CompareResult) -> Value {
    let rows: Vec<Value> = result
        .rows
        .iter()
        .map(|r| {
            json!({
                "sampleSize": r.sample_size,
                "algorithm": r.algorithm.as_str(),
                "meanTransitions": r.mean_transitions,
                "sdTransitions": r.sd_transitions,
                "minTransitions": r.min_transitions,
                "maxTransitions": r.max_transitions,
            })
        })
        .collect();
    let trends: Map<String, Value> = result
        .trends
        .iter()
        .map(|(a, t)| (a.as_str().to_string(), trend_value(*t)))
        .collect();
    let relative: Vec<Value> = result
        .relative_difference()
        .into_iter()
        .map(|(size, d)| json!({ "sampleSize": size, "part1MinusPart2OverPart1": d }))
        .collect();
    json!({
        "sampleSizes": spec.sample_sizes,
        "runsPerSize": spec.runs_per_size,
        "baseSeed": spec.base_seed,
        "countingMode": spec.options.mode.as_str(),
        "rows": rows,
        "trends": Value::Object(trends),
        "relativeDifference": relative,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use laneplan_core::part1::simulate_part1;
    use laneplan_core::{SimOptions, Speed, VehicleRecord};

    #[test]
    fn report_is_sorted_and_stable() {
        let vehicles: Vec<_> = [(35, 0), (45, 1), (5, 0)]
            .iter()
            .enumerate()
            .map(|(i, &(s, a))| VehicleRecord::new(format!("v{}", i + 1), Speed::from_kmh(s), a).unwrap())
            .collect();
        let report = simulate_part1(&vehicles, SimOptions::default()).unwrap();
        let text = render(&report_value(&report));
        assert_eq!(text, render(&report_value(&report)));
        let expected = r#"{
  "algorithm": "part1",
  "countingMode": "event",
  "events": [
    {
      "catchUpTicks": 4,
      "fromLane": 1,
      "overtakenId": "v1",
      "overtakerId": "v2",
      "toLane": 2
    }
  ],
  "laneAverageSpeed": {
    "1": 40.0,
    "2": 5.0
  },
  "laneCount": 2,
  "lanePopulation": {
    "1": 2,
    "2": 1
  },
  "transitionCount": 1
}
"#;
        assert_eq!(text, expected);
    }
}
