//! Pearson correlation across criteria with two-tailed t-test significance.

use serde::{Deserialize, Serialize};

use crate::dataset::Dataset;
use crate::error::{Error, Result};
use crate::special::student_t_two_tailed;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorrelationCell {
    pub criterion_a: String,
    pub criterion_b: String,
    /// `None` when either column is constant.
    pub rho: Option<f64>,
    pub p_value: Option<f64>,
    pub stars: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorrelationMatrix {
    pub criteria: Vec<String>,
    /// Number of paired observations behind every cell.
    pub samples: usize,
    pub cells: Vec<Vec<CorrelationCell>>,
}

impl CorrelationMatrix {
    pub fn cell(&self, a: &str, b: &str) -> Result<&CorrelationCell> {
        let idx = |name: &str| {
            self.criteria
                .iter()
                .position(|c| c == name)
                .ok_or_else(|| Error::UnknownCriterion(name.to_string()))
        };
        Ok(&self.cells[idx(a)?][idx(b)?])
    }

    fn off_diagonal(&self) -> impl Iterator<Item = &CorrelationCell> {
        self.cells
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().skip(i + 1))
    }
}

fn mean(xs: &[f64]) -> f64 {
    xs.iter().sum::<f64>() / xs.len() as f64
}

/// Sample Pearson correlation coefficient.
pub fn pearson(xs: &[f64], ys: &[f64]) -> Result<f64> {
    if xs.len() != ys.len() {
        return Err(Error::LengthMismatch {
            left: xs.len(),
            right: ys.len(),
        });
    }
    if xs.len() < 3 {
        return Err(Error::InsufficientSamples {
            needed: 3,
            got: xs.len(),
        });
    }
    let (mx, my) = (mean(xs), mean(ys));
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (x, y) in xs.iter().zip(ys) {
        let (dx, dy) = (x - mx, y - my);
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if sxx == 0.0 {
        return Err(Error::ConstantColumn("x".into()));
    }
    if syy == 0.0 {
        return Err(Error::ConstantColumn("y".into()));
    }
    Ok((sxy / (sxx * syy).sqrt()).clamp(-1.0, 1.0))
}

/// p-value of H0: rho = 0 from `t = rho * sqrt((n - 2) / (1 - rho^2))` with
/// n - 2 degrees of freedom. Perfect correlation yields 0.
pub fn two_tailed_p_value(rho: f64, n: usize) -> Result<f64> {
    if n < 3 {
        return Err(Error::InsufficientSamples { needed: 3, got: n });
    }
    let r2 = rho * rho;
    if r2 >= 1.0 {
        return Ok(0.0);
    }
    let df = (n - 2) as f64;
    let t = rho * (df / (1.0 - r2)).sqrt();
    Ok(student_t_two_tailed(t, df))
}

/// `***` at p <= 0.01, `**` at p <= 0.05, `*` at p <= 0.10.
pub fn significance_stars(p: f64) -> &'static str {
    if p <= 0.01 {
        "***"
    } else if p <= 0.05 {
        "**"
    } else if p <= 0.10 {
        "*"
    } else {
        ""
    }
}

/// Correlations between the raw values of every pair of included criteria.
pub fn correlation_matrix(dataset: &Dataset) -> Result<CorrelationMatrix> {
    let criteria: Vec<String> = dataset
        .schema()
        .included_names()
        .into_iter()
        .map(String::from)
        .collect();
    let columns = criteria
        .iter()
        .map(|c| dataset.column(c))
        .collect::<Result<Vec<_>>>()?;
    let n = dataset.players().len();

    let mut cells: Vec<Vec<CorrelationCell>> = Vec::with_capacity(criteria.len());
    for (i, a) in criteria.iter().enumerate() {
        let mut row = Vec::with_capacity(criteria.len());
        for (j, b) in criteria.iter().enumerate() {
            if j < i {
                // mirror the upper triangle so the matrix is exactly symmetric
                let upper: &CorrelationCell = &cells[j][i];
                row.push(CorrelationCell {
                    criterion_a: a.clone(),
                    criterion_b: b.clone(),
                    ..upper.clone()
                });
                continue;
            }
            let rho = if i == j {
                pearson(&columns[i], &columns[j]).ok().map(|_| 1.0)
            } else {
                match pearson(&columns[i], &columns[j]) {
                    Ok(r) => Some(r),
                    Err(Error::ConstantColumn(_)) => None,
                    Err(e) => return Err(e),
                }
            };
            let p_value = rho.map(|r| two_tailed_p_value(r, n)).transpose()?;
            row.push(CorrelationCell {
                criterion_a: a.clone(),
                criterion_b: b.clone(),
                rho,
                p_value,
                stars: p_value.map(significance_stars).unwrap_or("").to_string(),
            });
        }
        cells.push(row);
    }
    Ok(CorrelationMatrix {
        criteria,
        samples: n,
        cells,
    })
}

/// The `k` off-diagonal pairs with the largest |rho|. Undefined cells sort
/// last; equal magnitudes are ordered by pair name.
pub fn top_correlated_pairs(matrix: &CorrelationMatrix, k: usize) -> Result<Vec<CorrelationCell>> {
    let mut pairs: Vec<&CorrelationCell> = matrix.off_diagonal().collect();
    if k > pairs.len() {
        return Err(Error::KOutOfRange {
            k,
            max: pairs.len(),
        });
    }
    let magnitude = |c: &CorrelationCell| c.rho.map_or(-1.0, f64::abs);
    pairs.sort_by(|x, y| {
        magnitude(y)
            .total_cmp(&magnitude(x))
            .then_with(|| (&x.criterion_a, &x.criterion_b).cmp(&(&y.criterion_a, &y.criterion_b)))
    });
    Ok(pairs.into_iter().take(k).cloned().collect())
}

/// Ordinary least-squares line `y = slope * x + intercept`.
pub fn linear_fit(xs: &[f64], ys: &[f64]) -> Result<(f64, f64)> {
    if xs.len() != ys.len() {
        return Err(Error::LengthMismatch {
            left: xs.len(),
            right: ys.len(),
        });
    }
    if xs.len() < 2 {
        return Err(Error::InsufficientSamples {
            needed: 2,
            got: xs.len(),
        });
    }
    let (mx, my) = (mean(xs), mean(ys));
    let (mut sxy, mut sxx) = (0.0, 0.0);
    for (x, y) in xs.iter().zip(ys) {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
    }
    if sxx == 0.0 {
        return Err(Error::ConstantColumn("x".into()));
    }
    let slope = sxy / sxx;
    Ok((slope, my - slope * mx))
}
