//! Raw player × criterion data: CSV ingest, serialization and validation.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::io::{Read, Write};

use crate::error::{Error, Result};
use crate::schema::{reference_schema, CriteriaSchema};

/// Appendix A of the 2017/18 WhoScored extract (29 players, 20 columns).
pub const REFERENCE_CSV: &str = include_str!("../data/appendix_a.csv");

pub const PLAYER_HEADER: &str = "Player";

#[derive(Debug, Clone, PartialEq)]
pub struct PlayerRecord {
    pub name: String,
    /// Raw values keyed by criterion name. Only included criteria are loaded.
    pub values: BTreeMap<String, f64>,
}

impl PlayerRecord {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            values: BTreeMap::new(),
        }
    }

    pub fn with(mut self, criterion: impl Into<String>, value: f64) -> Self {
        self.values.insert(criterion.into(), value);
        self
    }

    pub fn value(&self, criterion: &str) -> Option<f64> {
        self.values.get(criterion).copied()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    schema: CriteriaSchema,
    players: Vec<PlayerRecord>,
}

/// A broken dataset invariant. Reported as a value by [`validate`].
#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    EmptyPlayerName { index: usize },
    DuplicatePlayer { player: String },
    MissingValue { player: String, criterion: String },
    NonFiniteValue { player: String, criterion: String },
    NegativeValue { player: String, criterion: String, value: f64 },
    TooFewPlayers { count: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyPlayerName { index } => write!(f, "player #{index} has an empty name"),
            Violation::DuplicatePlayer { player } => write!(f, "duplicate player `{player}`"),
            Violation::MissingValue { player, criterion } => {
                write!(f, "`{player}` has no value for `{criterion}`")
            }
            Violation::NonFiniteValue { player, criterion } => {
                write!(f, "`{player}` has a non-finite value for `{criterion}`")
            }
            Violation::NegativeValue { player, criterion, value } => {
                write!(f, "`{player}` has negative value {value} for `{criterion}`")
            }
            Violation::TooFewPlayers { count } => {
                write!(f, "need at least 2 players, found {count}")
            }
        }
    }
}

impl Dataset {
    /// Assembles a dataset without checking invariants; see [`validate`].
    pub fn from_parts(schema: CriteriaSchema, players: Vec<PlayerRecord>) -> Self {
        Self { schema, players }
    }

    pub fn schema(&self) -> &CriteriaSchema {
        &self.schema
    }

    pub fn players(&self) -> &[PlayerRecord] {
        &self.players
    }

    pub fn player_names(&self) -> Vec<&str> {
        self.players.iter().map(|p| p.name.as_str()).collect()
    }

    pub fn player(&self, name: &str) -> Result<&PlayerRecord> {
        self.players
            .iter()
            .find(|p| p.name == name)
            .ok_or_else(|| Error::UnknownPlayer(name.to_string()))
    }

    /// Raw values of an included criterion, in player order.
    pub fn column(&self, criterion: &str) -> Result<Vec<f64>> {
        self.schema.included_criterion(criterion)?;
        self.players
            .iter()
            .map(|p| {
                p.value(criterion).ok_or_else(|| {
                    Error::Invalid(format!("`{}` has no value for `{criterion}`", p.name))
                })
            })
            .collect()
    }

    /// Returns a copy with `f` applied to every value of one column.
    pub fn map_column(&self, criterion: &str, f: impl Fn(f64) -> f64) -> Result<Dataset> {
        self.schema.included_criterion(criterion)?;
        let mut out = self.clone();
        for p in &mut out.players {
            if let Some(v) = p.values.get_mut(criterion) {
                *v = f(*v);
            }
        }
        Ok(out)
    }

    /// Returns a copy without the named player.
    pub fn without_player(&self, name: &str) -> Result<Dataset> {
        self.player(name)?;
        let mut out = self.clone();
        out.players.retain(|p| p.name != name);
        Ok(out)
    }

    /// Writes the included criteria back out as CSV. Values use the shortest
    /// decimal text that parses back to the same double.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let names = self.schema.included_names();
        let mut w = csv::Writer::from_writer(out);
        w.write_record(std::iter::once(PLAYER_HEADER).chain(names.iter().copied()))?;
        for p in &self.players {
            let mut row = vec![p.name.clone()];
            for c in &names {
                row.push(p.value(c).map(|v| v.to_string()).unwrap_or_default());
            }
            w.write_record(&row)?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("csv output is utf-8")
    }
}

/// Reads a dataset from CSV. The first header must be `Player`; every
/// included criterion is matched to a column by exact (trimmed) header name,
/// and all other columns are ignored.
pub fn load_dataset<R: Read>(source: R, schema: &CriteriaSchema) -> Result<Dataset> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(source);
    let headers = reader.headers()?.clone();
    if headers.get(0) != Some(PLAYER_HEADER) {
        return Err(Error::Csv(format!(
            "first column must be `{PLAYER_HEADER}`, found `{}`",
            headers.get(0).unwrap_or("")
        )));
    }

    let mut columns = Vec::new();
    for c in schema.included() {
        let idx = headers
            .iter()
            .position(|h| h == c.name)
            .ok_or_else(|| Error::MissingColumn(c.name.clone()))?;
        columns.push((c.name.as_str(), idx));
    }

    let mut players = Vec::new();
    let mut seen = HashSet::new();
    for (i, record) in reader.records().enumerate() {
        let record = record?;
        let row = i + 1;
        let name = record.get(0).unwrap_or("").to_string();
        if name.is_empty() {
            return Err(Error::Csv(format!("row {row}: empty player name")));
        }
        if !seen.insert(name.clone()) {
            return Err(Error::DuplicatePlayer(name));
        }
        let mut player = PlayerRecord::new(name);
        for &(criterion, idx) in &columns {
            let cell = record.get(idx).unwrap_or("");
            let value = cell
                .parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| Error::Parse {
                    row,
                    col: criterion.to_string(),
                    value: cell.to_string(),
                })?;
            player.values.insert(criterion.to_string(), value);
        }
        players.push(player);
    }

    if players.is_empty() {
        return Err(Error::EmptyDataset);
    }
    Ok(Dataset::from_parts(schema.clone(), players))
}

/// The bundled Appendix A data under the reference schema.
pub fn reference_dataset() -> Dataset {
    load_dataset(REFERENCE_CSV.as_bytes(), &reference_schema()).expect("bundled data loads")
}

/// Checks every dataset invariant. An empty result means the dataset is valid.
pub fn validate(dataset: &Dataset) -> Vec<Violation> {
    let mut out = Vec::new();
    let players = dataset.players();
    if players.len() < 2 {
        out.push(Violation::TooFewPlayers { count: players.len() });
    }
    let mut seen = HashSet::new();
    for (index, p) in players.iter().enumerate() {
        if p.name.trim().is_empty() {
            out.push(Violation::EmptyPlayerName { index });
        } else if !seen.insert(p.name.as_str()) {
            out.push(Violation::DuplicatePlayer { player: p.name.clone() });
        }
        for c in dataset.schema().included() {
            let (player, criterion) = (p.name.clone(), c.name.clone());
            match p.value(&c.name) {
                None => out.push(Violation::MissingValue { player, criterion }),
                Some(v) if !v.is_finite() => {
                    out.push(Violation::NonFiniteValue { player, criterion })
                }
                Some(v) if v < 0.0 => out.push(Violation::NegativeValue {
                    player,
                    criterion,
                    value: v,
                }),
                Some(_) => {}
            }
        }
    }
    out
}
