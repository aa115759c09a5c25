//! Class-count statistics: size-biased expectation, proportional scaling,
//! dispersion and least-squares trends.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Vehicle counts per named class.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClassCountVector {
    labels: Vec<String>,
    counts: Vec<u64>,
}

impl ClassCountVector {
    pub fn new(labels: Vec<String>, counts: Vec<u64>) -> Result<Self> {
        if labels.len() != counts.len() {
            return Err(Error::Config(alloc::format!(
                "{} labels but {} counts",
                labels.len(),
                counts.len()
            )));
        }
        Ok(ClassCountVector { labels, counts })
    }

    /// Labels `c1..cn` for unlabeled counts.
    pub fn unlabeled(counts: &[u64]) -> Self {
        ClassCountVector {
            labels: (1..=counts.len()).map(|i| alloc::format!("c{i}")).collect(),
            counts: counts.to_vec(),
        }
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, u64)> {
        self.labels.iter().map(String::as_str).zip(self.counts.iter().copied())
    }
}

/// `sum(n_k^2) / sample_size`: the expected size of the class a uniformly
/// chosen vehicle belongs to, when the counts sum to `sample_size`.
pub fn size_biased_expectation(counts: &ClassCountVector, sample_size: u64) -> Result<f64> {
    if sample_size == 0 {
        return Err(Error::InvalidSampleSize);
    }
    let squares: u128 = counts.counts().iter().map(|&n| u128::from(n) * u128::from(n)).sum();
    Ok(squares as f64 / sample_size as f64)
}

/// Rescales raw counts to a target total, rounding each class independently
/// to the nearest integer (halves away from zero). The result may not sum to
/// exactly `target`.
pub fn scale_class_counts(raw: &ClassCountVector, target: u64) -> Result<ClassCountVector> {
    if target == 0 {
        return Err(Error::InvalidSampleSize);
    }
    let total = u128::from(raw.total());
    if total == 0 {
        return Err(Error::DegenerateDistribution("all counts are zero"));
    }
    let target = u128::from(target);
    let counts = raw
        .counts()
        .iter()
        // floor((2 n T + S) / 2S) = round-half-up of n T / S
        .map(|&n| ((2 * u128::from(n) * target + total) / (2 * total)) as u64)
        .collect();
    Ok(ClassCountVector {
        labels: raw.labels.clone(),
        counts,
    })
}

/// Population standard deviation of the counts.
pub fn class_count_sd(counts: &ClassCountVector) -> Result<f64> {
    let values: Vec<f64> = counts.counts().iter().map(|&n| n as f64).collect();
    population_sd(&values).ok_or(Error::DegenerateDistribution("no classes"))
}

pub(crate) fn mean(values: &[f64]) -> Option<f64> {
    if values.is_empty() {
        None
    } else {
        Some(values.iter().sum::<f64>() / values.len() as f64)
    }
}

pub(crate) fn population_sd(values: &[f64]) -> Option<f64> {
    let m = mean(values)?;
    let var = values.iter().map(|v| (v - m) * (v - m)).sum::<f64>() / values.len() as f64;
    Some(libm::sqrt(var))
}

/// Ordinary least-squares line with its coefficient of determination.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Trend {
    pub slope: f64,
    pub intercept: f64,
    /// 1 when `y` has no variance.
    pub r_squared: f64,
}

pub fn linear_trend(points: &[(f64, f64)]) -> Result<Trend> {
    if points.len() < 2 {
        return Err(Error::DegenerateFit);
    }
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let (mut sxx, mut sxy, mut syy) = (0.0, 0.0, 0.0);
    for &(x, y) in points {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
        syy += (y - my) * (y - my);
    }
    if sxx == 0.0 {
        return Err(Error::DegenerateFit);
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let r_squared = if syy == 0.0 { 1.0 } else { (sxy * sxy) / (sxx * syy) };
    Ok(Trend {
        slope,
        intercept,
        r_squared,
    })
}
