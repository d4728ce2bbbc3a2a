//! Criteria schema: which statistical columns take part in the comparison and
//! in which direction each one is "better".

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Sample schema file shipped alongside the compiled-in reference schema.
pub const REFERENCE_SCHEMA_JSON: &str = include_str!("../data/reference_schema.json");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    /// Larger raw values are better.
    #[serde(rename = "max")]
    Maximize,
    /// Smaller raw values are better.
    #[serde(rename = "min")]
    Minimize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionSpec {
    pub name: String,
    pub direction: Direction,
    pub included: bool,
}

impl CriterionSpec {
    pub fn new(name: impl Into<String>, direction: Direction, included: bool) -> Self {
        Self {
            name: name.into(),
            direction,
            included,
        }
    }
}

/// Ordered list of criteria with unique, non-empty names.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct CriteriaSchema {
    criteria: Vec<CriterionSpec>,
}

impl CriteriaSchema {
    pub fn new(criteria: Vec<CriterionSpec>) -> Result<Self> {
        let mut seen = HashSet::new();
        for c in &criteria {
            if c.name.trim().is_empty() {
                return Err(Error::Schema("criterion name is empty".into()));
            }
            if !seen.insert(c.name.as_str()) {
                return Err(Error::Schema(format!("duplicate criterion `{}`", c.name)));
            }
        }
        Ok(Self { criteria })
    }

    /// Parses the JSON schema format: an array of
    /// `{"name": .., "direction": "max"|"min", "included": ..}` objects.
    pub fn from_json(text: &str) -> Result<Self> {
        let criteria: Vec<CriterionSpec> =
            serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
        Self::new(criteria)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.criteria).expect("schema serializes")
    }

    pub fn criteria(&self) -> &[CriterionSpec] {
        &self.criteria
    }

    pub fn included(&self) -> impl Iterator<Item = &CriterionSpec> {
        self.criteria.iter().filter(|c| c.included)
    }

    pub fn included_names(&self) -> Vec<&str> {
        self.included().map(|c| c.name.as_str()).collect()
    }

    pub fn get(&self, name: &str) -> Option<&CriterionSpec> {
        self.criteria.iter().find(|c| c.name == name)
    }

    /// Looks up a criterion that takes part in the comparison.
    pub fn included_criterion(&self, name: &str) -> Result<&CriterionSpec> {
        self.get(name)
            .filter(|c| c.included)
            .ok_or_else(|| Error::UnknownCriterion(name.to_string()))
    }
}

/// The 20 Appendix A columns. The three season totals (games, goals,
/// assists) are kept for reference but excluded: they scale with matches
/// played and duplicate the per-game goal and assist rates. The remaining
/// 17 criteria reproduce the published distance table.
pub fn reference_schema() -> CriteriaSchema {
    use Direction::*;
    let spec = |name: &str, direction, included| CriterionSpec::new(name, direction, included);
    CriteriaSchema::new(vec![
        spec("Games", Maximize, false),
        spec("Goals", Maximize, false),
        spec("Assists", Maximize, false),
        spec("SpG", Maximize, true),
        spec("PS%", Maximize, true),
        spec("AerW", Maximize, true),
        spec("Dribbling", Maximize, true),
        spec("Fouled", Maximize, true),
        spec("Offside", Minimize, true),
        spec("Disp", Minimize, true),
        spec("UnschTch", Minimize, true),
        spec("KeyP", Maximize, true),
        spec("AvPasses", Maximize, true),
        spec("Crosses", Maximize, true),
        spec("LongB", Maximize, true),
        spec("ThruB", Maximize, true),
        spec("Tackles", Maximize, true),
        spec("Fouls", Minimize, true),
        spec("Goals pg", Maximize, true),
        spec("As pg", Maximize, true),
    ])
    .expect("reference schema is well formed")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_has_seventeen_included() {
        assert_eq!(reference_schema().included().count(), 17);
    }

    #[test]
    fn reference_has_four_minimization_criteria() {
        let schema = reference_schema();
        let mut mins: Vec<_> = schema
            .included()
            .filter(|c| c.direction == Direction::Minimize)
            .map(|c| c.name.as_str())
            .collect();
        mins.sort_unstable();
        assert_eq!(mins, ["Disp", "Fouls", "Offside", "UnschTch"]);
    }

    #[test]
    fn season_totals_present_but_excluded() {
        let schema = reference_schema();
        for name in ["Games", "Goals", "Assists"] {
            let c = schema.get(name).unwrap();
            assert!(!c.included, "{name}");
        }
        assert_eq!(schema.criteria().len(), 20);
    }

    #[test]
    fn shipped_json_matches_compiled_schema() {
        let parsed = CriteriaSchema::from_json(REFERENCE_SCHEMA_JSON).unwrap();
        assert_eq!(parsed, reference_schema());
        let again = CriteriaSchema::from_json(&parsed.to_json()).unwrap();
        assert_eq!(again, parsed);
    }

    #[test]
    fn duplicate_names_rejected() {
        let err = CriteriaSchema::new(vec![
            CriterionSpec::new("A", Direction::Maximize, true),
            CriterionSpec::new("A", Direction::Minimize, true),
        ])
        .unwrap_err();
        assert!(matches!(err, Error::Schema(_)));
    }

    #[test]
    fn empty_name_rejected() {
        let err = CriteriaSchema::new(vec![CriterionSpec::new(" ", Direction::Maximize, true)]);
        assert!(err.is_err());
    }

    #[test]
    fn bad_direction_rejected() {
        let err = CriteriaSchema::from_json(r#"[{"name":"A","direction":"up","included":true}]"#);
        assert!(matches!(err, Err(Error::Schema(_))));
    }

    #[test]
    fn excluded_criterion_is_not_looked_up() {
        let schema = reference_schema();
        assert!(schema.included_criterion("KeyP").is_ok());
        assert_eq!(
            schema.included_criterion("Games").unwrap_err(),
            Error::UnknownCriterion("Games".into())
        );
    }
}
