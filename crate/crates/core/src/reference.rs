//! Reference count tables for seven urban vehicle classes.
//!
//! Ten raw count rows, their published reductions to sample sizes
//! 20, 25, 30, 40 and 50 with the published size-biased expectation of each
//! reduced row, and the published standard-deviation columns. The size-50
//! table only survives for the last five classes (LCV through Rickshaw).
//!
//! The standard-deviation columns are kept as data only; they are not derived
//! from the other tables.

/// Class labels in column order.
pub const SAMPLE_LABELS: [&str; 7] = ["Cars", "Motor Cycle", "LCV", "Buses", "Trucks", "Vehicles", "Rickshaw"];

/// Raw counts, one row per sample.
pub const RAW_SAMPLE_COUNTS: [[u64; 7]; 10] = [
    [840, 895, 268, 209, 2855, 3014, 551],
    [1265, 815, 493, 707, 1267, 836, 2363],
    [1004, 464, 188, 583, 373, 118, 2449],
    [4164, 2536, 667, 203, 1012, 126, 9334],
    [3830, 1481, 433, 226, 636, 7, 1541],
    [1757, 3181, 295, 556, 1715, 598, 1780],
    [870, 1606, 286, 333, 2413, 821, 1875],
    [4643, 3470, 1910, 2122, 1155, 167, 4637],
    [662, 554, 319, 527, 768, 35, 2775],
    [746, 695, 270, 194, 486, 237, 1066],
];

/// One published reduced table.
#[derive(Debug, Clone, Copy)]
pub struct ScaledTable {
    pub sample_size: u64,
    /// Index into [`SAMPLE_LABELS`] of the first printed column.
    pub first_column: usize,
    /// Printed cells, `7 - first_column` per row.
    pub rows: [&'static [u64]; 10],
    /// Printed expectation per row.
    pub expectation: [f64; 10],
    /// Decimal places the expectations are printed with (at most).
    pub printed_decimals: u32,
}

pub const SCALED_TABLES: [ScaledTable; 5] = [
    ScaledTable {
        sample_size: 20,
        first_column: 0,
        rows: [
            &[2, 2, 1, 0, 7, 7, 1],
            &[3, 2, 2, 2, 3, 2, 6],
            &[4, 2, 1, 2, 1, 0, 9],
            &[5, 3, 1, 0, 1, 0, 10],
            &[9, 4, 1, 1, 2, 0, 4],
            &[4, 6, 1, 1, 3, 1, 4],
            &[2, 4, 1, 1, 6, 2, 5],
            &[5, 4, 2, 2, 1, 0, 5],
            &[2, 2, 1, 2, 3, 0, 10],
            &[4, 4, 1, 1, 3, 1, 6],
        ],
        expectation: [5.4, 3.5, 5.35, 6.8, 5.95, 4.0, 4.35, 3.75, 6.1, 4.0],
        printed_decimals: 2,
    },
    ScaledTable {
        sample_size: 25,
        first_column: 0,
        rows: [
            &[2, 3, 1, 1, 8, 8, 2],
            &[4, 3, 2, 2, 4, 2, 8],
            &[5, 2, 1, 3, 2, 0, 12],
            &[6, 4, 1, 0, 1, 0, 13],
            &[12, 5, 1, 1, 1, 0, 5],
            &[4, 8, 1, 1, 4, 2, 5],
            &[3, 5, 1, 1, 7, 2, 6],
            &[6, 5, 3, 3, 2, 0, 6],
            &[3, 2, 1, 2, 3, 2, 12],
            &[5, 5, 2, 1, 3, 2, 7],
        ],
        expectation: [5.88, 4.68, 7.48, 8.92, 7.88, 5.08, 5.0, 4.76, 7.0, 4.68],
        printed_decimals: 2,
    },
    ScaledTable {
        sample_size: 30,
        first_column: 0,
        rows: [
            &[3, 3, 1, 1, 10, 10, 2],
            &[5, 3, 2, 3, 5, 3, 9],
            &[6, 3, 1, 3, 2, 1, 14],
            &[7, 4, 1, 0, 2, 0, 16],
            &[14, 5, 2, 1, 2, 0, 6],
            &[5, 10, 1, 2, 5, 2, 5],
            &[3, 6, 1, 1, 9, 3, 7],
            &[8, 6, 3, 4, 1, 0, 8],
            &[4, 3, 2, 3, 3, 0, 15],
            &[6, 6, 2, 2, 3, 2, 9],
        ],
        expectation: [7.47, 5.4, 8.53, 10.87, 8.87, 6.13, 6.2, 6.33, 9.07, 5.8],
        printed_decimals: 2,
    },
    ScaledTable {
        sample_size: 40,
        first_column: 0,
        rows: [
            &[4, 4, 1, 1, 13, 14, 3],
            &[7, 4, 3, 4, 6, 4, 12],
            &[8, 4, 1, 5, 2, 1, 19],
            &[9, 6, 1, 0, 2, 1, 21],
            &[19, 7, 2, 1, 3, 0, 8],
            &[7, 13, 1, 2, 7, 3, 7],
            &[4, 8, 1, 2, 12, 4, 9],
            &[10, 8, 4, 5, 3, 0, 10],
            &[5, 4, 2, 4, 5, 0, 20],
            &[8, 8, 3, 2, 4, 3, 12],
        ],
        expectation: [10.2, 7.15, 11.8, 14.1, 12.2, 8.25, 8.15, 7.85, 12.15, 7.75],
        printed_decimals: 2,
    },
    ScaledTable {
        sample_size: 50,
        first_column: 2,
        rows: [
            &[2, 1, 17, 17, 3],
            &[3, 5, 8, 6, 15],
            &[2, 6, 3, 1, 24],
            &[2, 1, 2, 0, 26],
            &[3, 1, 4, 1, 9],
            &[1, 3, 9, 3, 9],
            &[2, 2, 15, 5, 11],
            &[5, 6, 3, 0, 13],
            &[3, 5, 6, 0, 25],
            &[4, 3, 7, 3, 14],
        ],
        expectation: [12.84, 8.96, 14.84, 17.56, 14.36, 10.36, 10.08, 10.16, 15.12, 9.2],
        printed_decimals: 2,
    },
];

/// Published standard-deviation columns as `(sample_size, values)`.
pub const SD_TABLES: [(u64, [f64; 10]); 5] = [
    (20, [15.47, 16.23, 17.0, 17.96, 18.94, 19.72, 20.71, 21.69, 22.49, 23.28]),
    (25, [13.84, 14.52, 15.2, 16.07, 16.94, 17.64, 18.52, 19.4, 20.11, 20.83]),
    (30, [12.63, 13.25, 13.88, 14.67, 15.46, 16.1, 16.91, 17.71, 18.36, 19.01]),
    (40, [10.94, 11.48, 12.02, 12.7, 13.39, 13.95, 14.64, 15.34, 15.9, 16.46]),
    (50, [9.78, 10.26, 10.75, 11.36, 11.98, 12.47, 13.1, 13.72, 14.22, 14.73]),
];

/// Raw row `row` (0-based) as a labeled count vector.
pub fn raw_sample(row: usize) -> crate::ClassCountVector {
    crate::ClassCountVector::new(sample_labels(), RAW_SAMPLE_COUNTS[row].to_vec())
        .expect("seven labels for seven counts")
}

pub fn sample_labels() -> alloc::vec::Vec<alloc::string::String> {
    SAMPLE_LABELS.iter().map(|&s| s.into()).collect()
}
