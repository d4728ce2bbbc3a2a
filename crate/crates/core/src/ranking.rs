use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metrics::{distance_to_target, MetricChoice};
use crate::normalize::NormalizedMatrix;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankingEntry {
    pub rank: usize,
    pub player: String,
    pub distance: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimilarityRanking {
    pub target: String,
    pub metric: MetricChoice,
    pub entries: Vec<RankingEntry>,
}

/// Every player except the target, nearest first. Equal distances are
/// ordered by player name so the output is the same on every run.
pub fn rank_by_similarity(
    matrix: &NormalizedMatrix,
    target: &str,
    metric: MetricChoice,
) -> Result<SimilarityRanking> {
    let mut scored: Vec<(String, f64)> = distance_to_target(matrix, target, metric)?
        .into_iter()
        .collect();
    scored.sort_by(|a, b| a.1.total_cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
    let entries = scored
        .into_iter()
        .enumerate()
        .map(|(i, (player, distance))| RankingEntry {
            rank: i + 1,
            player,
            distance,
        })
        .collect();
    Ok(SimilarityRanking {
        target: target.to_string(),
        metric,
        entries,
    })
}

pub fn nearest_k(
    matrix: &NormalizedMatrix,
    target: &str,
    k: usize,
    metric: MetricChoice,
) -> Result<Vec<RankingEntry>> {
    matrix.player_index(target)?;
    let max = matrix.players().len().saturating_sub(1);
    if k == 0 || k > max {
        return Err(Error::KOutOfRange { k, max });
    }
    let mut ranking = rank_by_similarity(matrix, target, metric)?;
    ranking.entries.truncate(k);
    Ok(ranking.entries)
}
