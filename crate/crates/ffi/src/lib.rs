//! C ABI over the `simrank` library.
//!
//! Datasets and rankings are opaque heap handles that the caller releases
//! with the matching `_free` function. Every fallible call returns a
//! [`SimrankStatus`]; on failure `simrank_last_error_message` describes the
//! error for the calling thread. Strings are NUL-terminated UTF-8.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use simrank::{
    load_dataset, minkowski_distance, nearest_k, normalize, pearson, rank_by_similarity,
    reference_dataset, reference_schema, two_tailed_p_value, CriteriaSchema, Dataset, Error,
    MetricChoice, NormalizedMatrix, PlayerVector, RankingEntry,
};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SimrankStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    MissingColumn = 4,
    DuplicatePlayer = 5,
    EmptyDataset = 6,
    InvalidSchema = 7,
    InvalidData = 8,
    UnknownCriterion = 9,
    UnknownPlayer = 10,
    InvalidMetric = 11,
    OutOfRange = 12,
    DimensionMismatch = 13,
    ConstantColumn = 14,
    InsufficientSamples = 15,
    Io = 16,
    Panic = 99,
}

impl From<&Error> for SimrankStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::MissingColumn(_) => Self::MissingColumn,
            Error::Parse { .. } | Error::Csv(_) => Self::ParseError,
            Error::DuplicatePlayer(_) => Self::DuplicatePlayer,
            Error::EmptyDataset | Error::EmptySeries => Self::EmptyDataset,
            Error::Schema(_) => Self::InvalidSchema,
            Error::Invalid(_) => Self::InvalidData,
            Error::UnknownCriterion(_) => Self::UnknownCriterion,
            Error::UnknownPlayer(_) => Self::UnknownPlayer,
            Error::InvalidMetric(_) => Self::InvalidMetric,
            Error::KOutOfRange { .. } => Self::OutOfRange,
            Error::DimensionMismatch { .. } | Error::LengthMismatch { .. } => {
                Self::DimensionMismatch
            }
            Error::ConstantColumn(_) => Self::ConstantColumn,
            Error::InsufficientSamples { .. } => Self::InsufficientSamples,
            Error::Io(_) => Self::Io,
        }
    }
}

/// A validated dataset together with its normalized matrix.
pub struct SimrankDataset {
    dataset: Dataset,
    matrix: NormalizedMatrix,
}

/// A similarity ranking; player names are owned by the handle.
pub struct SimrankRanking {
    entries: Vec<RankingEntry>,
    names: Vec<CString>,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = c);
}

struct Failure(SimrankStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(SimrankStatus::from(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> SimrankStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error("");
            SimrankStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(_) => {
            set_last_error("panic inside simrank");
            SimrankStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(SimrankStatus::NullArgument, format!("`{what}` is null"))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(SimrankStatus::InvalidUtf8, format!("`{what}` is not UTF-8")))
}

unsafe fn read_slice<'a>(p: *const f64, len: usize, what: &str) -> Result<&'a [f64], Failure> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

unsafe fn write_out<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

unsafe fn dataset_ref<'a>(ds: *const SimrankDataset) -> Result<&'a SimrankDataset, Failure> {
    ds.as_ref().ok_or_else(|| null("dataset"))
}

fn into_handle(dataset: Dataset) -> Result<*mut SimrankDataset, Failure> {
    let matrix = normalize(&dataset)?;
    Ok(Box::into_raw(Box::new(SimrankDataset { dataset, matrix })))
}

fn into_ranking(entries: Vec<RankingEntry>) -> *mut SimrankRanking {
    let names = entries
        .iter()
        .map(|e| CString::new(e.player.replace('\0', " ")).expect("interior NULs removed"))
        .collect();
    Box::into_raw(Box::new(SimrankRanking { entries, names }))
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next simrank call on the same thread.
#[no_mangle]
pub extern "C" fn simrank_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn simrank_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Loads the bundled reference dataset.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn simrank_dataset_reference(out: *mut *mut SimrankDataset) -> SimrankStatus {
    guard(|| {
        let handle = into_handle(reference_dataset())?;
        write_out(out, handle, "out")
    })
}

/// Loads a dataset from CSV text. `schema_json` may be null to use the
/// reference schema.
///
/// # Safety
/// `csv` and a non-null `schema_json` must be NUL-terminated strings; `out`
/// must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn simrank_dataset_from_csv(
    csv: *const c_char,
    schema_json: *const c_char,
    out: *mut *mut SimrankDataset,
) -> SimrankStatus {
    guard(|| {
        let text = read_str(csv, "csv")?;
        let schema = if schema_json.is_null() {
            reference_schema()
        } else {
            CriteriaSchema::from_json(read_str(schema_json, "schema_json")?)?
        };
        let handle = into_handle(load_dataset(text.as_bytes(), &schema)?)?;
        write_out(out, handle, "out")
    })
}

/// Releases a dataset handle. Null is ignored.
///
/// # Safety
/// `ds` must come from a simrank constructor and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn simrank_dataset_free(ds: *mut SimrankDataset) {
    if !ds.is_null() {
        drop(Box::from_raw(ds));
    }
}

/// Number of players, or 0 for a null handle.
///
/// # Safety
/// `ds` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn simrank_dataset_player_count(ds: *const SimrankDataset) -> usize {
    ds.as_ref().map_or(0, |d| d.dataset.players().len())
}

/// Number of included criteria, or 0 for a null handle.
///
/// # Safety
/// `ds` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn simrank_dataset_criterion_count(ds: *const SimrankDataset) -> usize {
    ds.as_ref().map_or(0, |d| d.matrix.criteria().len())
}

/// Normalized value of one cell, addressed by player and criterion index.
///
/// # Safety
/// `ds` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn simrank_dataset_normalized_value(
    ds: *const SimrankDataset,
    player: usize,
    criterion: usize,
    out: *mut f64,
) -> SimrankStatus {
    guard(|| {
        let d = dataset_ref(ds)?;
        let value = d
            .matrix
            .rows()
            .get(player)
            .and_then(|row| row.get(criterion))
            .copied()
            .ok_or_else(|| {
                Failure(
                    SimrankStatus::OutOfRange,
                    format!("cell ({player}, {criterion}) out of range"),
                )
            })?;
        write_out(out, value, "out")
    })
}

/// Full similarity ranking to `target` under the L^p distance.
///
/// # Safety
/// `ds` must be a live handle, `target` a NUL-terminated string and `out`
/// valid for one write.
#[no_mangle]
pub unsafe extern "C" fn simrank_rank(
    ds: *const SimrankDataset,
    target: *const c_char,
    p: f64,
    out: *mut *mut SimrankRanking,
) -> SimrankStatus {
    guard(|| {
        let d = dataset_ref(ds)?;
        let target = read_str(target, "target")?;
        let ranking = rank_by_similarity(&d.matrix, target, MetricChoice::new(p)?)?;
        write_out(out, into_ranking(ranking.entries), "out")
    })
}

/// The `k` players nearest to `target`.
///
/// # Safety
/// Same requirements as [`simrank_rank`].
#[no_mangle]
pub unsafe extern "C" fn simrank_nearest(
    ds: *const SimrankDataset,
    target: *const c_char,
    k: usize,
    p: f64,
    out: *mut *mut SimrankRanking,
) -> SimrankStatus {
    guard(|| {
        let d = dataset_ref(ds)?;
        let target = read_str(target, "target")?;
        let entries = nearest_k(&d.matrix, target, k, MetricChoice::new(p)?)?;
        write_out(out, into_ranking(entries), "out")
    })
}

/// Number of entries, or 0 for a null handle.
///
/// # Safety
/// `r` must be null or a live ranking handle.
#[no_mangle]
pub unsafe extern "C" fn simrank_ranking_len(r: *const SimrankRanking) -> usize {
    r.as_ref().map_or(0, |r| r.entries.len())
}

/// Rank and distance of entry `index`. Either output pointer may be null.
///
/// # Safety
/// `r` must be a live ranking handle; non-null outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn simrank_ranking_entry(
    r: *const SimrankRanking,
    index: usize,
    rank: *mut usize,
    distance: *mut f64,
) -> SimrankStatus {
    guard(|| {
        let r = r.as_ref().ok_or_else(|| null("ranking"))?;
        let e = r.entries.get(index).ok_or_else(|| {
            Failure(SimrankStatus::OutOfRange, format!("entry {index} out of range"))
        })?;
        if !rank.is_null() {
            rank.write(e.rank);
        }
        if !distance.is_null() {
            distance.write(e.distance);
        }
        Ok(())
    })
}

/// Player name of entry `index`, owned by the ranking; null when out of range.
///
/// # Safety
/// `r` must be null or a live ranking handle.
#[no_mangle]
pub unsafe extern "C" fn simrank_ranking_player(r: *const SimrankRanking, index: usize) -> *const c_char {
    r.as_ref()
        .and_then(|r| r.names.get(index))
        .map_or(ptr::null(), |n| n.as_ptr())
}

/// Releases a ranking handle. Null is ignored.
///
/// # Safety
/// `r` must come from a simrank ranking call and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn simrank_ranking_free(r: *mut SimrankRanking) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// L^p distance between two vectors of length `len`.
///
/// # Safety
/// `a` and `b` must point to `len` readable doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn simrank_minkowski(
    a: *const f64,
    b: *const f64,
    len: usize,
    p: f64,
    out: *mut f64,
) -> SimrankStatus {
    guard(|| {
        let a = PlayerVector::new("a", read_slice(a, len, "a")?.to_vec());
        let b = PlayerVector::new("b", read_slice(b, len, "b")?.to_vec());
        let d = minkowski_distance(&a, &b, MetricChoice::new(p)?)?;
        write_out(out, d, "out")
    })
}

/// Sample Pearson correlation of two series of length `len`.
///
/// # Safety
/// `xs` and `ys` must point to `len` readable doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn simrank_pearson(
    xs: *const f64,
    ys: *const f64,
    len: usize,
    out: *mut f64,
) -> SimrankStatus {
    guard(|| {
        let r = pearson(read_slice(xs, len, "xs")?, read_slice(ys, len, "ys")?)?;
        write_out(out, r, "out")
    })
}

/// Two-tailed p-value of a correlation `rho` over `n` samples.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn simrank_two_tailed_p_value(rho: f64, n: usize, out: *mut f64) -> SimrankStatus {
    guard(|| {
        let p = two_tailed_p_value(rho, n)?;
        write_out(out, p, "out")
    })
}
