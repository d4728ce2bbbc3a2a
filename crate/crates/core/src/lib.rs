//! Similarity ranking of players from per-game statistics.
//!
//! Raw criteria are min-max scaled onto [0, 1] with the direction of each
//! criterion taken into account, players become points in that space, and
//! similarity to a target player is the Minkowski (by default Manhattan)
//! distance between points. Pearson correlations with t-test significance
//! describe how the criteria move together.
//!
//! ```
//! use simrank::{normalize, rank_by_similarity, reference_dataset, MetricChoice};
//!
//! let matrix = normalize(&reference_dataset()).unwrap();
//! let ranking = rank_by_similarity(&matrix, "Messi", MetricChoice::MANHATTAN).unwrap();
//! assert_eq!(ranking.entries[0].player, "Coutinho");
//! ```

pub mod cli;
pub mod correlation;
pub mod dataset;
pub mod error;
pub mod metrics;
pub mod normalize;
pub mod ranking;
pub mod report;
pub mod schema;
pub mod special;

pub use correlation::{
    correlation_matrix, pearson, top_correlated_pairs, two_tailed_p_value, CorrelationCell,
    CorrelationMatrix,
};
pub use dataset::{load_dataset, reference_dataset, validate, Dataset, PlayerRecord, Violation};
pub use error::{Error, Result};
pub use metrics::{
    distance_to_target, manhattan_distance, minkowski_distance, MetricChoice, PlayerVector,
};
pub use normalize::{column_extrema, normalize, ColumnExtrema, NormalizedMatrix};
pub use ranking::{nearest_k, rank_by_similarity, RankingEntry, SimilarityRanking};
pub use report::{emit_ranking, emit_scatter_svg, scatter_data, Format, ScatterSeries};
pub use schema::{reference_schema, CriteriaSchema, CriterionSpec, Direction};
