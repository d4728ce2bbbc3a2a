//! Minkowski-family distances between normalized player vectors.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::normalize::NormalizedMatrix;

/// Exponent of an L^p distance. Finite, at least 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct MetricChoice(f64);

impl MetricChoice {
    pub const MANHATTAN: MetricChoice = MetricChoice(1.0);
    pub const EUCLIDEAN: MetricChoice = MetricChoice(2.0);

    pub fn new(p: f64) -> Result<Self> {
        if p.is_finite() && p >= 1.0 {
            Ok(Self(p))
        } else {
            Err(Error::InvalidMetric(p))
        }
    }

    pub fn p(self) -> f64 {
        self.0
    }
}

impl Default for MetricChoice {
    fn default() -> Self {
        Self::MANHATTAN
    }
}

impl TryFrom<f64> for MetricChoice {
    type Error = Error;
    fn try_from(p: f64) -> Result<Self> {
        Self::new(p)
    }
}

impl From<MetricChoice> for f64 {
    fn from(m: MetricChoice) -> f64 {
        m.0
    }
}

impl fmt::Display for MetricChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p{}", self.0)
    }
}

/// Accepts `p1`, `p2`, or any `p<x>` / bare `<x>` with x >= 1.
impl FromStr for MetricChoice {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let digits = s.strip_prefix('p').unwrap_or(s);
        let p = digits
            .parse::<f64>()
            .map_err(|_| Error::InvalidMetric(f64::NAN))?;
        Self::new(p)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlayerVector {
    pub player: String,
    pub coords: Vec<f64>,
}

impl PlayerVector {
    pub fn new(player: impl Into<String>, coords: Vec<f64>) -> Self {
        Self {
            player: player.into(),
            coords,
        }
    }
}

/// Compensated (Neumaier) summation.
#[derive(Default)]
struct Accumulator {
    sum: f64,
    carry: f64,
}

impl Accumulator {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn total(&self) -> f64 {
        self.sum + self.carry
    }
}

fn check_dims(a: &[f64], b: &[f64]) -> Result<()> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(())
}

pub fn manhattan(a: &[f64], b: &[f64]) -> Result<f64> {
    check_dims(a, b)?;
    let mut acc = Accumulator::default();
    for (x, y) in a.iter().zip(b) {
        acc.add((x - y).abs());
    }
    Ok(acc.total())
}

pub fn minkowski(a: &[f64], b: &[f64], metric: MetricChoice) -> Result<f64> {
    check_dims(a, b)?;
    let p = metric.p();
    let mut acc = Accumulator::default();
    for (x, y) in a.iter().zip(b) {
        acc.add((x - y).abs().powf(p));
    }
    Ok(acc.total().powf(p.recip()))
}

pub fn minkowski_distance(a: &PlayerVector, b: &PlayerVector, metric: MetricChoice) -> Result<f64> {
    minkowski(&a.coords, &b.coords, metric)
}

pub fn manhattan_distance(a: &PlayerVector, b: &PlayerVector) -> Result<f64> {
    manhattan(&a.coords, &b.coords)
}

/// L^p distance that takes the direct route for p = 1.
pub fn distance(a: &[f64], b: &[f64], metric: MetricChoice) -> Result<f64> {
    if metric == MetricChoice::MANHATTAN {
        manhattan(a, b)
    } else {
        minkowski(a, b, metric)
    }
}

/// Distance from `target` to every other player in the matrix.
pub fn distance_to_target(
    matrix: &NormalizedMatrix,
    target: &str,
    metric: MetricChoice,
) -> Result<BTreeMap<String, f64>> {
    let t = matrix.player_index(target)?;
    let anchor = &matrix.rows()[t];
    matrix
        .players()
        .iter()
        .zip(matrix.rows())
        .enumerate()
        .filter(|&(i, _)| i != t)
        .map(|(_, (name, row))| Ok((name.clone(), distance(anchor, row, metric)?)))
        .collect()
}
