//! Human- and machine-readable output: ranking tables, CSV/JSON, normalized
//! matrix dumps, correlation reports and scatter plots.
//!
//! All numbers are written fixed-point with a '.' separator regardless of
//! locale. Text output rounds for display only; CSV and JSON carry the
//! shortest representation that parses back to the same double.

use std::fmt::Write as _;
use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::correlation::{linear_fit, CorrelationCell, CorrelationMatrix};
use crate::dataset::{Dataset, PLAYER_HEADER};
use crate::error::{Error, Result};
use crate::normalize::NormalizedMatrix;
use crate::ranking::{RankingEntry, SimilarityRanking};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Table,
    Csv,
    Json,
}

/// Fixed-point with `decimals` places. Exact binary ties round to even.
pub fn fixed(x: f64, decimals: usize) -> String {
    let s = format!("{x:.decimals$}");
    // never print "-0.000"
    if s.starts_with('-') && s[1..].bytes().all(|b| b == b'0' || b == b'.') {
        s[1..].to_string()
    } else {
        s
    }
}

pub fn emit_ranking(ranking: &SimilarityRanking, format: Format) -> Vec<u8> {
    match format {
        Format::Table => ranking_table(&ranking.entries).into_bytes(),
        Format::Csv => ranking_csv(&ranking.entries),
        Format::Json => {
            let mut out = serde_json::to_vec_pretty(ranking).expect("ranking serializes");
            out.push(b'\n');
            out
        }
    }
}

pub fn ranking_table(entries: &[RankingEntry]) -> String {
    let rank_w = entries
        .iter()
        .map(|e| e.rank.to_string().len())
        .max()
        .unwrap_or(1)
        .max("Rank".len());
    let name_w = entries
        .iter()
        .map(|e| e.player.chars().count())
        .max()
        .unwrap_or(0)
        .max("Player".len());
    let mut s = String::new();
    let _ = writeln!(s, "{:>rank_w$}  {:<name_w$}  {:>8}", "Rank", "Player", "Dist.");
    for e in entries {
        let _ = writeln!(
            s,
            "{:>rank_w$}  {:<name_w$}  {:>8}",
            e.rank,
            e.player,
            fixed(e.distance, 3)
        );
    }
    s
}

pub fn ranking_csv(entries: &[RankingEntry]) -> Vec<u8> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["rank", "player", "distance"]).expect("in-memory write");
    for e in entries {
        w.write_record([e.rank.to_string(), e.player.clone(), e.distance.to_string()])
            .expect("in-memory write");
    }
    w.into_inner().expect("in-memory flush")
}

pub fn parse_ranking_csv(bytes: &[u8]) -> Result<Vec<RankingEntry>> {
    let mut r = csv::Reader::from_reader(bytes);
    let mut out = Vec::new();
    for rec in r.records() {
        let rec = rec?;
        let field = |i: usize| rec.get(i).unwrap_or("");
        let rank = field(0)
            .parse()
            .map_err(|_| Error::Csv(format!("bad rank `{}`", field(0))))?;
        let distance = field(2)
            .parse()
            .map_err(|_| Error::Csv(format!("bad distance `{}`", field(2))))?;
        out.push(RankingEntry {
            rank,
            player: field(1).to_string(),
            distance,
        });
    }
    Ok(out)
}

/// Normalized matrix as CSV with six decimals.
pub fn normalized_csv(matrix: &NormalizedMatrix) -> Vec<u8> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let header = std::iter::once(PLAYER_HEADER).chain(matrix.criteria().iter().map(String::as_str));
    w.write_record(header).expect("in-memory write");
    for (player, row) in matrix.players().iter().zip(matrix.rows()) {
        let cells = std::iter::once(player.clone()).chain(row.iter().map(|v| fixed(*v, 6)));
        w.write_record(cells).expect("in-memory write");
    }
    w.into_inner().expect("in-memory flush")
}

/// Wide correlation matrix (rho at full precision; empty where undefined).
pub fn correlation_csv(matrix: &CorrelationMatrix) -> Vec<u8> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let header = std::iter::once("criterion").chain(matrix.criteria.iter().map(String::as_str));
    w.write_record(header).expect("in-memory write");
    for (name, row) in matrix.criteria.iter().zip(&matrix.cells) {
        let cells = std::iter::once(name.clone())
            .chain(row.iter().map(|c| c.rho.map(|r| r.to_string()).unwrap_or_default()));
        w.write_record(cells).expect("in-memory write");
    }
    w.into_inner().expect("in-memory flush")
}

fn pretty_p(p: f64) -> String {
    if p < 1e-4 {
        format!("{p:.2e}")
    } else {
        fixed(p, 4)
    }
}

pub fn correlation_table(pairs: &[CorrelationCell]) -> String {
    let labels: Vec<String> = pairs
        .iter()
        .map(|c| format!("{} - {}", c.criterion_a, c.criterion_b))
        .collect();
    let w = labels.iter().map(|l| l.chars().count()).max().unwrap_or(0).max(4);
    let mut s = String::new();
    let _ = writeln!(s, "{:>4}  {:<w$}  {:>8}  {:>9}", "Rank", "Pair", "rho", "p-value");
    for (i, (c, label)) in pairs.iter().zip(&labels).enumerate() {
        let rho = c
            .rho
            .map(|r| format!("{}{}", fixed(r, 2), c.stars))
            .unwrap_or_else(|| "n/a".into());
        let p = c.p_value.map(pretty_p).unwrap_or_else(|| "n/a".into());
        let _ = writeln!(s, "{:>4}  {:<w$}  {:>8}  {:>9}", i + 1, label, rho, p);
    }
    s
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScatterPoint {
    pub player: String,
    pub x: f64,
    pub y: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Trend {
    pub slope: f64,
    pub intercept: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScatterSeries {
    pub x_criterion: String,
    pub y_criterion: String,
    pub points: Vec<ScatterPoint>,
    pub trend: Option<Trend>,
}

/// One labeled point per player from the raw values of two criteria, with an
/// optional least-squares trend line.
pub fn scatter_data(dataset: &Dataset, x: &str, y: &str, with_trend: bool) -> Result<ScatterSeries> {
    let xs = dataset.column(x)?;
    let ys = dataset.column(y)?;
    let trend = if with_trend {
        let (slope, intercept) = linear_fit(&xs, &ys)?;
        Some(Trend { slope, intercept })
    } else {
        None
    };
    let points = dataset
        .players()
        .iter()
        .zip(xs.into_iter().zip(ys))
        .map(|(p, (x, y))| ScatterPoint {
            player: p.name.clone(),
            x,
            y,
        })
        .collect();
    Ok(ScatterSeries {
        x_criterion: x.to_string(),
        y_criterion: y.to_string(),
        points,
        trend,
    })
}

pub fn scatter_csv(series: &ScatterSeries) -> Vec<u8> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["player", series.x_criterion.as_str(), series.y_criterion.as_str()])
        .expect("in-memory write");
    for p in &series.points {
        w.write_record([p.player.clone(), p.x.to_string(), p.y.to_string()])
            .expect("in-memory write");
    }
    w.into_inner().expect("in-memory flush")
}

pub fn scatter_table(series: &ScatterSeries) -> String {
    let w = series
        .points
        .iter()
        .map(|p| p.player.chars().count())
        .max()
        .unwrap_or(0)
        .max("Player".len());
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{:<w$}  {:>10}  {:>10}",
        "Player", series.x_criterion, series.y_criterion
    );
    for p in &series.points {
        let _ = writeln!(s, "{:<w$}  {:>10}  {:>10}", p.player, fixed(p.x, 2), fixed(p.y, 2));
    }
    if let Some(t) = series.trend {
        let _ = writeln!(s, "trend: y = {} * x + {}", fixed(t.slope, 4), fixed(t.intercept, 4));
    }
    s
}

fn xml_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for ch in s.chars() {
        match ch {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}

/// Padded `[lo, hi]` for an axis; a zero-width range is widened to 1.
fn axis_range(values: impl Iterator<Item = f64>) -> (f64, f64) {
    let (lo, hi) = values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
        (lo.min(v), hi.max(v))
    });
    if lo == hi {
        return (lo - 0.5, hi + 0.5);
    }
    let pad = (hi - lo) * 0.05;
    (lo - pad, hi + pad)
}

const SVG_WIDTH: f64 = 720.0;
const SVG_HEIGHT: f64 = 540.0;
const MARGIN_LEFT: f64 = 70.0;
const MARGIN_RIGHT: f64 = 30.0;
const MARGIN_TOP: f64 = 40.0;
const MARGIN_BOTTOM: f64 = 60.0;
const TICKS: usize = 5;

/// Renders a standalone SVG scatter plot. Identical input always yields
/// identical bytes.
pub fn emit_scatter_svg<W: Write>(series: &ScatterSeries, mut out: W) -> Result<()> {
    if series.points.is_empty() {
        return Err(Error::EmptySeries);
    }
    let (x_lo, x_hi) = axis_range(series.points.iter().map(|p| p.x));
    let (y_lo, y_hi) = axis_range(series.points.iter().map(|p| p.y));
    let plot_w = SVG_WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = SVG_HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
    let px = |x: f64| MARGIN_LEFT + (x - x_lo) / (x_hi - x_lo) * plot_w;
    let py = |y: f64| MARGIN_TOP + plot_h - (y - y_lo) / (y_hi - y_lo) * plot_h;
    let (x0, x1) = (MARGIN_LEFT, MARGIN_LEFT + plot_w);
    let (y0, y1) = (MARGIN_TOP, MARGIN_TOP + plot_h);
    let xname = xml_escape(&series.x_criterion);
    let yname = xml_escape(&series.y_criterion);

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}" font-family="sans-serif">"#,
        w = SVG_WIDTH,
        h = SVG_HEIGHT
    );
    let _ = writeln!(s, r#"<title>{yname} vs {xname}</title>"#);
    let _ = writeln!(
        s,
        r#"<defs><clipPath id="plot-area"><rect x="{x0:.2}" y="{y0:.2}" width="{plot_w:.2}" height="{plot_h:.2}"/></clipPath></defs>"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);

    // axes
    let _ = writeln!(
        s,
        r#"<g stroke="black" stroke-width="1"><line x1="{x0:.2}" y1="{y1:.2}" x2="{x1:.2}" y2="{y1:.2}"/><line x1="{x0:.2}" y1="{y0:.2}" x2="{x0:.2}" y2="{y1:.2}"/></g>"#
    );
    let _ = writeln!(s, r#"<g font-size="10" fill="black">"#);
    for i in 0..=TICKS {
        let f = i as f64 / TICKS as f64;
        let (xv, yv) = (x_lo + f * (x_hi - x_lo), y_lo + f * (y_hi - y_lo));
        let (tx, ty) = (px(xv), py(yv));
        let _ = writeln!(
            s,
            r#"<line x1="{tx:.2}" y1="{y1:.2}" x2="{tx:.2}" y2="{:.2}" stroke="black"/><text x="{tx:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
            y1 + 5.0,
            y1 + 18.0,
            fixed(xv, 2)
        );
        let _ = writeln!(
            s,
            r#"<line x1="{:.2}" y1="{ty:.2}" x2="{x0:.2}" y2="{ty:.2}" stroke="black"/><text x="{:.2}" y="{:.2}" text-anchor="end">{}</text>"#,
            x0 - 5.0,
            x0 - 8.0,
            ty + 3.5,
            fixed(yv, 2)
        );
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="{:.2}" font-size="13" text-anchor="middle">{xname}</text>"#,
        x0 + plot_w / 2.0,
        SVG_HEIGHT - 15.0
    );
    let _ = writeln!(
        s,
        r#"<text x="18" y="{cy:.2}" font-size="13" text-anchor="middle" transform="rotate(-90 18 {cy:.2})">{yname}</text>"#,
        cy = y0 + plot_h / 2.0
    );

    if let Some(t) = series.trend {
        let _ = writeln!(
            s,
            r#"<line class="trend" x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="blue" stroke-width="1.5" clip-path="url(#plot-area)"/>"#,
            px(x_lo),
            py(t.slope * x_lo + t.intercept),
            px(x_hi),
            py(t.slope * x_hi + t.intercept)
        );
    }

    let _ = writeln!(s, r#"<g class="points" font-size="10">"#);
    for p in &series.points {
        let (cx, cy) = (px(p.x), py(p.y));
        let _ = writeln!(
            s,
            r#"<circle class="marker" cx="{cx:.2}" cy="{cy:.2}" r="3.5" fill="steelblue"/><text x="{:.2}" y="{:.2}">{}</text>"#,
            cx + 5.0,
            cy - 5.0,
            xml_escape(&p.player)
        );
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, "</svg>");
    out.write_all(s.as_bytes())?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::reference_dataset;
    use crate::metrics::MetricChoice;
    use crate::normalize::normalize;
    use crate::ranking::rank_by_similarity;

    fn messi_ranking() -> SimilarityRanking {
        let m = normalize(&reference_dataset()).unwrap();
        rank_by_similarity(&m, "Messi", MetricChoice::MANHATTAN).unwrap()
    }

    #[test]
    fn fixed_rounds_ties_to_even() {
        assert_eq!(fixed(0.125, 2), "0.12");
        assert_eq!(fixed(0.375, 2), "0.38");
        assert_eq!(fixed(2.5, 0), "2");
        assert_eq!(fixed(3.769_4, 3), "3.769");
        assert_eq!(fixed(-0.0001, 3), "0.000");
    }

    #[test]
    fn table_first_row() {
        let text = String::from_utf8(emit_ranking(&messi_ranking(), Format::Table)).unwrap();
        let mut lines = text.lines();
        assert_eq!(
            lines.next().unwrap().split_whitespace().collect::<Vec<_>>(),
            ["Rank", "Player", "Dist."]
        );
        assert_eq!(
            lines.next().unwrap().split_whitespace().collect::<Vec<_>>(),
            ["1", "Coutinho", "3.769"]
        );
        assert_eq!(text.lines().count(), 29);
    }

    #[test]
    fn single_entry_table() {
        let r = SimilarityRanking {
            target: "a".into(),
            metric: MetricChoice::MANHATTAN,
            entries: vec![RankingEntry { rank: 1, player: "b".into(), distance: 0.5 }],
        };
        let text = String::from_utf8(emit_ranking(&r, Format::Table)).unwrap();
        assert_eq!(text.lines().count(), 2);
    }

    #[test]
    fn csv_and_json_round_trip() {
        let r = messi_ranking();
        let back = parse_ranking_csv(&emit_ranking(&r, Format::Csv)).unwrap();
        assert_eq!(back, r.entries);
        let json: SimilarityRanking =
            serde_json::from_slice(&emit_ranking(&r, Format::Json)).unwrap();
        assert_eq!(json, r);
    }

    #[test]
    fn normalized_csv_has_six_decimals() {
        let m = normalize(&reference_dataset()).unwrap();
        let text = String::from_utf8(normalized_csv(&m)).unwrap();
        let messi = text.lines().nth(1).unwrap();
        assert!(messi.starts_with("Messi,0.857143,"), "{messi}");
        assert_eq!(text.lines().count(), 30);
    }

    #[test]
    fn figure_one_series() {
        let s = scatter_data(&reference_dataset(), "Goals pg", "As pg", false).unwrap();
        assert_eq!(s.points.len(), 29);
        assert!(s.trend.is_none());
        let neymar = s.points.iter().find(|p| p.player == "Neymar").unwrap();
        assert_eq!((neymar.x, neymar.y), (1.06, 0.69));
        assert!(s.points.iter().all(|p| p.x <= neymar.x && p.y <= neymar.y));
    }

    #[test]
    fn dribbling_vs_dispossessed_trend_rises() {
        let s = scatter_data(&reference_dataset(), "Dribbling", "Disp", true).unwrap();
        assert!(s.trend.unwrap().slope > 0.0);
    }

    #[test]
    fn diagonal_series() {
        let s = scatter_data(&reference_dataset(), "KeyP", "KeyP", true).unwrap();
        assert!(s.points.iter().all(|p| p.x == p.y));
        let t = s.trend.unwrap();
        assert!((t.slope - 1.0).abs() < 1e-9 && t.intercept.abs() < 1e-9);
    }

    #[test]
    fn scatter_unknown_criterion() {
        let err = scatter_data(&reference_dataset(), "KeyP", "Height", false).unwrap_err();
        assert_eq!(err, Error::UnknownCriterion("Height".into()));
    }

    #[test]
    fn svg_has_one_marker_per_player() {
        let s = scatter_data(&reference_dataset(), "Goals pg", "As pg", false).unwrap();
        let mut buf = Vec::new();
        emit_scatter_svg(&s, &mut buf).unwrap();
        let svg = String::from_utf8(buf.clone()).unwrap();
        assert_eq!(svg.matches(r#"class="marker""#).count(), 29);
        assert!(svg.contains(">C. Ronaldo</text>"));
        assert!(svg.contains(">Goals pg</text>") && svg.contains(">As pg</text>"));
        assert!(!svg.contains(r#"class="trend""#));

        let mut again = Vec::new();
        emit_scatter_svg(&s, &mut again).unwrap();
        assert_eq!(buf, again);
    }

    #[test]
    fn svg_single_point_and_empty() {
        let mut s = ScatterSeries {
            x_criterion: "a".into(),
            y_criterion: "b & c".into(),
            points: vec![ScatterPoint { player: "<p>".into(), x: 1.0, y: 1.0 }],
            trend: None,
        };
        let mut buf = Vec::new();
        emit_scatter_svg(&s, &mut buf).unwrap();
        let svg = String::from_utf8(buf).unwrap();
        assert_eq!(svg.matches("<circle").count(), 1);
        assert!(svg.contains("&lt;p&gt;") && svg.contains("b &amp; c"));
        assert!(!svg.contains("NaN"));

        s.points.clear();
        assert_eq!(emit_scatter_svg(&s, Vec::new()).unwrap_err(), Error::EmptySeries);
    }

    #[test]
    fn svg_with_trend_line() {
        let s = scatter_data(&reference_dataset(), "Dribbling", "Disp", true).unwrap();
        let mut buf = Vec::new();
        emit_scatter_svg(&s, &mut buf).unwrap();
        assert!(String::from_utf8(buf).unwrap().contains(r#"class="trend""#));
    }
}
