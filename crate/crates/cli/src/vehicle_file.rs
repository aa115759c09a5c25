//! `id,speed,arrival` vehicle files.

use std::collections::HashSet;

use laneplan_core::domain::ParseSpeedError;
use laneplan_core::{Error as ModelError, Speed, Tick, VehicleRecord};

use crate::error::{CliError, Result};

pub const HEADER: [&str; 3] = ["id", "speed", "arrival"];

pub fn parse_vehicles(text: &str) -> Result<Vec<VehicleRecord>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let header = reader
        .headers()
        .map_err(|e| CliError::parse(1, 1, e.to_string()))?
        .clone();
    if header.iter().collect::<Vec<_>>() != HEADER {
        return Err(CliError::parse(1, 1, format!("expected header `{}`", HEADER.join(","))));
    }
    let mut seen = HashSet::new();
    let mut vehicles = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line());
            CliError::parse(line, 1, e.to_string())
        })?;
        let line = record.position().map_or(0, |p| p.line());
        if record.len() == 1 && record[0].is_empty() {
            continue;
        }
        if record.len() != 3 {
            return Err(CliError::parse(line, record.len().min(3) + 1, format!("expected 3 fields, found {}", record.len())));
        }
        let id = &record[0];
        if id.is_empty() {
            return Err(CliError::parse(line, 1, "empty vehicle id"));
        }
        if !seen.insert(id.to_string()) {
            return Err(CliError::parse(line, 1, format!("duplicate vehicle id `{id}`")));
        }
        let speed = match record[1].parse::<Speed>() {
            Ok(s) => s,
            Err(ParseSpeedError::Negative(s)) => {
                let kmh = s.parse::<f64>().unwrap_or(f64::NEG_INFINITY);
                return Err(ModelError::SpeedOutOfModel { kmh }.into());
            }
            Err(e) => return Err(CliError::parse(line, 2, e.to_string())),
        };
        let arrival: Tick = record[2]
            .parse()
            .map_err(|_| CliError::parse(line, 3, format!("invalid arrival tick `{}`", &record[2])))?;
        vehicles.push(VehicleRecord::new(id, speed, arrival)?);
    }
    Ok(vehicles)
}

pub fn write_vehicles(vehicles: &[VehicleRecord]) -> String {
    let mut writer = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    writer.write_record(HEADER).expect("write to memory");
    for v in vehicles {
        writer
            .write_record([v.id(), &v.speed().to_string(), &v.arrival().to_string()])
            .expect("write to memory");
    }
    String::from_utf8(writer.into_inner().expect("flush to memory")).expect("utf-8 input")
}
