//! Census tables of registered vehicles and single-row count files.
//!
//! A census file is comma-separated with a header row; the first column names
//! the city and every further column holds one class count. Besides plain
//! integers a cell may be `-` (not available) or `A` (counted under cars).

use laneplan_core::ClassCountVector;

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cell {
    Count(u64),
    /// `-`
    Missing,
    /// `A`: included in the cars column.
    MergedIntoCars,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRow {
    pub name: String,
    pub cells: Vec<Cell>,
}

impl CensusRow {
    /// A row with any missing cell cannot be sampled.
    pub fn is_usable(&self) -> bool {
        !self.cells.contains(&Cell::Missing)
    }

    /// Indices of columns folded into cars.
    pub fn merged_columns(&self) -> Vec<usize> {
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, c)| **c == Cell::MergedIntoCars)
            .map(|(i, _)| i)
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusTable {
    pub labels: Vec<String>,
    pub rows: Vec<CensusRow>,
}

impl CensusTable {
    /// Looks a row up by 1-based index or by name.
    pub fn find_row(&self, key: &str) -> Option<&CensusRow> {
        match key.trim().parse::<usize>() {
            Ok(i) if i >= 1 => self.rows.get(i - 1),
            _ => self.rows.iter().find(|r| r.name == key.trim()),
        }
    }

    /// Counts of a usable row, merged cells read as zero.
    pub fn counts(&self, row: &CensusRow) -> Result<ClassCountVector> {
        if !row.is_usable() {
            return Err(CliError::RowUnusable(row.name.clone()));
        }
        let counts = row
            .cells
            .iter()
            .map(|c| match c {
                Cell::Count(n) => *n,
                _ => 0,
            })
            .collect();
        Ok(ClassCountVector::new(self.labels.clone(), counts)?)
    }
}

fn reader(text: &str) -> csv::Reader<&[u8]> {
    csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes())
}

fn records(text: &str) -> Result<Vec<(u64, csv::StringRecord)>> {
    let mut out = Vec::new();
    for record in reader(text).records() {
        let record = record.map_err(|e| CliError::parse(e.position().map_or(0, |p| p.line()), 1, e.to_string()))?;
        if record.iter().all(str::is_empty) {
            continue;
        }
        out.push((record.position().map_or(0, |p| p.line()), record));
    }
    if out.is_empty() {
        return Err(CliError::parse(1, 1, "empty input"));
    }
    Ok(out)
}

fn parse_cell(text: &str, line: u64, column: usize) -> Result<Cell> {
    match text {
        "-" => Ok(Cell::Missing),
        "A" => Ok(Cell::MergedIntoCars),
        digits => digits
            .parse()
            .map(Cell::Count)
            .map_err(|_| CliError::parse(line, column, format!("invalid count `{digits}`"))),
    }
}

pub fn parse_census(text: &str) -> Result<CensusTable> {
    let records = records(text)?;
    let (_, header) = &records[0];
    if header.len() < 2 {
        return Err(CliError::parse(1, 1, "header needs a name column and at least one class"));
    }
    let labels: Vec<String> = header.iter().skip(1).map(String::from).collect();
    let mut rows = Vec::new();
    for (line, record) in &records[1..] {
        if record.len() != header.len() {
            return Err(CliError::parse(
                *line,
                record.len().min(header.len()) + 1,
                format!("expected {} columns, found {}", header.len(), record.len()),
            ));
        }
        let cells = record
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, cell)| parse_cell(cell, *line, i + 1))
            .collect::<Result<_>>()?;
        rows.push(CensusRow {
            name: record[0].to_string(),
            cells,
        });
    }
    Ok(CensusTable { labels, rows })
}

/// A header of class labels followed by exactly one row of counts.
pub fn parse_counts(text: &str) -> Result<ClassCountVector> {
    let records = records(text)?;
    let (_, header) = &records[0];
    let Some((line, row)) = records.get(1) else {
        return Err(CliError::parse(2, 1, "missing counts row"));
    };
    if let Some((line, _)) = records.get(2) {
        return Err(CliError::parse(*line, 1, "expected a single counts row"));
    }
    if row.len() != header.len() {
        return Err(CliError::parse(*line, row.len().min(header.len()) + 1, "column count differs from header"));
    }
    let counts = row
        .iter()
        .enumerate()
        .map(|(i, cell)| {
            cell.parse::<u64>()
                .map_err(|_| CliError::parse(*line, i + 1, format!("invalid count `{cell}`")))
        })
        .collect::<Result<_>>()?;
    Ok(ClassCountVector::new(header.iter().map(String::from).collect(), counts)?)
}
