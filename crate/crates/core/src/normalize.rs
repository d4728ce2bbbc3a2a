//! Direction-aware min-max scaling onto [0, 1].
//!
//! For a maximization criterion the column maps through
//! `(x - min) / (max - min)`; for a minimization criterion through
//! `(max - x) / (max - min)`. In both cases the best raw value lands on 1 and
//! the worst on 0.

use crate::dataset::{validate, Dataset};
use crate::error::{Error, Result};
use crate::metrics::PlayerVector;
use crate::schema::Direction;

#[derive(Debug, Clone, PartialEq)]
pub struct ColumnExtrema {
    pub criterion: String,
    pub f_min: f64,
    pub f_max: f64,
}

impl ColumnExtrema {
    pub fn is_degenerate(&self) -> bool {
        self.f_max == self.f_min
    }

    /// Scales one raw value. Constant columns map to 0.
    pub fn scale(&self, x: f64, direction: Direction) -> f64 {
        if self.is_degenerate() {
            return 0.0;
        }
        let spread = self.f_max - self.f_min;
        match direction {
            Direction::Maximize => (x - self.f_min) / spread,
            Direction::Minimize => (self.f_max - x) / spread,
        }
    }
}

/// Emitted when a column is constant and cannot be scaled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegenerateColumn(pub String);

#[derive(Debug, Clone, PartialEq)]
pub struct NormalizedMatrix {
    players: Vec<String>,
    criteria: Vec<String>,
    /// Row-major, one row per player.
    values: Vec<Vec<f64>>,
    extrema: Vec<ColumnExtrema>,
    warnings: Vec<DegenerateColumn>,
}

impl NormalizedMatrix {
    pub fn players(&self) -> &[String] {
        &self.players
    }

    pub fn criteria(&self) -> &[String] {
        &self.criteria
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.values
    }

    pub fn extrema(&self) -> &[ColumnExtrema] {
        &self.extrema
    }

    pub fn warnings(&self) -> &[DegenerateColumn] {
        &self.warnings
    }

    pub fn player_index(&self, name: &str) -> Result<usize> {
        self.players
            .iter()
            .position(|p| p == name)
            .ok_or_else(|| Error::UnknownPlayer(name.to_string()))
    }

    pub fn criterion_index(&self, name: &str) -> Result<usize> {
        self.criteria
            .iter()
            .position(|c| c == name)
            .ok_or_else(|| Error::UnknownCriterion(name.to_string()))
    }

    pub fn value(&self, player: &str, criterion: &str) -> Result<f64> {
        Ok(self.values[self.player_index(player)?][self.criterion_index(criterion)?])
    }

    pub fn vector(&self, player: &str) -> Result<PlayerVector> {
        let i = self.player_index(player)?;
        Ok(PlayerVector::new(player, self.values[i].clone()))
    }

    pub fn vectors(&self) -> impl Iterator<Item = PlayerVector> + '_ {
        self.players
            .iter()
            .zip(&self.values)
            .map(|(p, row)| PlayerVector::new(p.clone(), row.clone()))
    }

    pub fn column(&self, criterion: &str) -> Result<Vec<f64>> {
        let j = self.criterion_index(criterion)?;
        Ok(self.values.iter().map(|row| row[j]).collect())
    }
}

/// Exact minimum and maximum of an included raw column.
pub fn column_extrema(dataset: &Dataset, criterion: &str) -> Result<ColumnExtrema> {
    let column = dataset.column(criterion)?;
    let (f_min, f_max) = column
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &x| {
            (lo.min(x), hi.max(x))
        });
    if column.is_empty() {
        return Err(Error::EmptyDataset);
    }
    Ok(ColumnExtrema {
        criterion: criterion.to_string(),
        f_min,
        f_max,
    })
}

/// Scales every included criterion of a valid dataset. Player and criterion
/// order follow the dataset and schema.
pub fn normalize(dataset: &Dataset) -> Result<NormalizedMatrix> {
    let violations = validate(dataset);
    if let Some(first) = violations.first() {
        return Err(Error::Invalid(first.to_string()));
    }

    let specs: Vec<_> = dataset.schema().included().collect();
    let mut extrema = Vec::with_capacity(specs.len());
    let mut warnings = Vec::new();
    for spec in &specs {
        let e = column_extrema(dataset, &spec.name)?;
        if e.is_degenerate() {
            warnings.push(DegenerateColumn(spec.name.clone()));
        }
        extrema.push(e);
    }

    let values = dataset
        .players()
        .iter()
        .map(|p| {
            specs
                .iter()
                .zip(&extrema)
                .map(|(spec, e)| {
                    // presence checked by validate
                    let x = p.values[&spec.name];
                    e.scale(x, spec.direction)
                })
                .collect()
        })
        .collect();

    Ok(NormalizedMatrix {
        players: dataset.players().iter().map(|p| p.name.clone()).collect(),
        criteria: specs.iter().map(|c| c.name.clone()).collect(),
        values,
        extrema,
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::{reference_dataset, PlayerRecord};
    use crate::schema::{CriteriaSchema, CriterionSpec};

    #[test]
    fn goals_per_game_extrema() {
        let e = column_extrema(&reference_dataset(), "Goals pg").unwrap();
        assert_eq!((e.f_min, e.f_max), (0.24, 1.06));
    }

    #[test]
    fn shots_per_game_max_is_ronaldo() {
        let ds = reference_dataset();
        let e = column_extrema(&ds, "SpG").unwrap();
        assert_eq!(e.f_max, 6.8);
        assert_eq!(ds.player("C. Ronaldo").unwrap().value("SpG"), Some(6.8));
    }

    #[test]
    fn extrema_of_unknown_criterion() {
        assert_eq!(
            column_extrema(&reference_dataset(), "Nope").unwrap_err(),
            Error::UnknownCriterion("Nope".into())
        );
    }

    #[test]
    fn scale_endpoints() {
        let e = ColumnExtrema { criterion: "c".into(), f_min: 2.0, f_max: 7.0 };
        assert_eq!(e.scale(7.0, Direction::Maximize), 1.0);
        assert_eq!(e.scale(2.0, Direction::Maximize), 0.0);
        assert_eq!(e.scale(7.0, Direction::Minimize), 0.0);
        assert_eq!(e.scale(2.0, Direction::Minimize), 1.0);
    }

    #[test]
    fn messi_goals_per_game() {
        let m = normalize(&reference_dataset()).unwrap();
        let v = m.value("Messi", "Goals pg").unwrap();
        // (0.95 - 0.24) / (1.06 - 0.24)
        assert!((v - 0.865_853_658_536_585_4).abs() < 1e-12, "{v}");
    }

    #[test]
    fn minimize_direction_best_gets_one() {
        let m = normalize(&reference_dataset()).unwrap();
        // De Bruyne and Dybala have 0 offsides; L. Suarez has the most (2.1)
        assert_eq!(m.value("De Bruyne", "Offside").unwrap(), 1.0);
        assert_eq!(m.value("Dybala", "Offside").unwrap(), 1.0);
        assert_eq!(m.value("L. Suarez", "Offside").unwrap(), 0.0);
    }

    #[test]
    fn constant_column_maps_to_zero_with_warning() {
        let schema = CriteriaSchema::new(vec![
            CriterionSpec::new("A", Direction::Maximize, true),
            CriterionSpec::new("K", Direction::Minimize, true),
        ])
        .unwrap();
        let ds = Dataset::from_parts(
            schema,
            (0..3)
                .map(|i| PlayerRecord::new(format!("p{i}")).with("A", i as f64).with("K", 4.0))
                .collect(),
        );
        let e = column_extrema(&ds, "K").unwrap();
        assert_eq!((e.f_min, e.f_max), (4.0, 4.0));
        let m = normalize(&ds).unwrap();
        assert_eq!(m.column("K").unwrap(), vec![0.0; 3]);
        assert_eq!(m.warnings(), &[DegenerateColumn("K".into())]);
        assert_eq!(m.column("A").unwrap(), vec![0.0, 0.5, 1.0]);
    }

    #[test]
    fn invalid_dataset_refused() {
        let mut players = reference_dataset().players().to_vec();
        players[0].values.insert("SpG".into(), f64::INFINITY);
        let ds = Dataset::from_parts(crate::schema::reference_schema(), players);
        assert!(matches!(normalize(&ds), Err(Error::Invalid(_))));
    }
}
