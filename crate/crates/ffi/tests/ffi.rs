use std::ffi::{CStr, CString};
use std::ptr;

use simrank_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(simrank_last_error_message()) }
        .to_string_lossy()
        .into_owned()
}

fn reference() -> *mut SimrankDataset {
    let mut ds = ptr::null_mut();
    assert_eq!(unsafe { simrank_dataset_reference(&mut ds) }, SimrankStatus::Ok);
    assert!(!ds.is_null());
    ds
}

#[test]
fn reference_dataset_shape() {
    let ds = reference();
    unsafe {
        assert_eq!(simrank_dataset_player_count(ds), 29);
        assert_eq!(simrank_dataset_criterion_count(ds), 17);
        let mut v = f64::NAN;
        // Messi, Goals pg is the 16th included criterion
        assert_eq!(simrank_dataset_normalized_value(ds, 0, 15, &mut v), SimrankStatus::Ok);
        assert!((v - 0.71 / 0.82).abs() < 1e-12);
        assert_eq!(
            simrank_dataset_normalized_value(ds, 29, 0, &mut v),
            SimrankStatus::OutOfRange
        );
        simrank_dataset_free(ds);
    }
}

#[test]
fn rank_messi_through_the_abi() {
    let ds = reference();
    let target = CString::new("Messi").unwrap();
    let mut r = ptr::null_mut();
    unsafe {
        assert_eq!(simrank_rank(ds, target.as_ptr(), 1.0, &mut r), SimrankStatus::Ok);
        assert_eq!(simrank_ranking_len(r), 28);
        let (mut rank, mut dist) = (0usize, 0.0f64);
        assert_eq!(simrank_ranking_entry(r, 0, &mut rank, &mut dist), SimrankStatus::Ok);
        let name = CStr::from_ptr(simrank_ranking_player(r, 0)).to_str().unwrap();
        assert_eq!((rank, name), (1, "Coutinho"));
        assert!((dist - 3.769).abs() < 0.02);
        assert!(simrank_ranking_player(r, 28).is_null());
        assert_eq!(
            simrank_ranking_entry(r, 28, ptr::null_mut(), ptr::null_mut()),
            SimrankStatus::OutOfRange
        );
        simrank_ranking_free(r);
        simrank_dataset_free(ds);
    }
}

#[test]
fn nearest_ronaldo_through_the_abi() {
    let ds = reference();
    let target = CString::new("C. Ronaldo").unwrap();
    let mut r = ptr::null_mut();
    unsafe {
        assert_eq!(simrank_nearest(ds, target.as_ptr(), 3, 1.0, &mut r), SimrankStatus::Ok);
        let names: Vec<&str> = (0..simrank_ranking_len(r))
            .map(|i| CStr::from_ptr(simrank_ranking_player(r, i)).to_str().unwrap())
            .collect();
        assert_eq!(names, ["Aubameyang", "Kane", "Griezmann"]);
        simrank_ranking_free(r);

        assert_eq!(
            simrank_nearest(ds, target.as_ptr(), 0, 1.0, &mut r),
            SimrankStatus::OutOfRange
        );
        simrank_dataset_free(ds);
    }
}

#[test]
fn errors_map_to_status_codes() {
    let ds = reference();
    let mut r = ptr::null_mut();
    unsafe {
        let nobody = CString::new("Nobody").unwrap();
        assert_eq!(simrank_rank(ds, nobody.as_ptr(), 1.0, &mut r), SimrankStatus::UnknownPlayer);
        assert!(last_error().contains("Nobody"));
        let messi = CString::new("Messi").unwrap();
        assert_eq!(simrank_rank(ds, messi.as_ptr(), 0.5, &mut r), SimrankStatus::InvalidMetric);
        assert_eq!(simrank_rank(ds, ptr::null(), 1.0, &mut r), SimrankStatus::NullArgument);
        assert_eq!(simrank_rank(ds, messi.as_ptr(), 1.0, ptr::null_mut()), SimrankStatus::NullArgument);
        assert_eq!(
            simrank_rank(ptr::null(), messi.as_ptr(), 1.0, &mut r),
            SimrankStatus::NullArgument
        );
        let bad = [0xffu8, 0];
        assert_eq!(
            simrank_rank(ds, bad.as_ptr().cast(), 1.0, &mut r),
            SimrankStatus::InvalidUtf8
        );
        simrank_dataset_free(ds);
        simrank_dataset_free(ptr::null_mut());
        simrank_ranking_free(ptr::null_mut());
        assert_eq!(simrank_dataset_player_count(ptr::null()), 0);
    }
}

#[test]
fn dataset_from_csv_text() {
    let csv = CString::new("Player,Speed,Errors\nA,10,1\nB,8,3\nC,2,0\n").unwrap();
    let schema = CString::new(
        r#"[{"name":"Speed","direction":"max","included":true},{"name":"Errors","direction":"min","included":true}]"#,
    )
    .unwrap();
    let mut ds = ptr::null_mut();
    unsafe {
        assert_eq!(simrank_dataset_from_csv(csv.as_ptr(), schema.as_ptr(), &mut ds), SimrankStatus::Ok);
        assert_eq!(simrank_dataset_criterion_count(ds), 2);
        simrank_dataset_free(ds);

        // reference schema needs the Appendix A columns
        assert_eq!(
            simrank_dataset_from_csv(csv.as_ptr(), ptr::null(), &mut ds),
            SimrankStatus::MissingColumn
        );
        let dup = CString::new("Player,Speed,Errors\nA,1,1\nA,2,2\n").unwrap();
        assert_eq!(
            simrank_dataset_from_csv(dup.as_ptr(), schema.as_ptr(), &mut ds),
            SimrankStatus::DuplicatePlayer
        );
        let empty = CString::new("Player,Speed,Errors\n").unwrap();
        assert_eq!(
            simrank_dataset_from_csv(empty.as_ptr(), schema.as_ptr(), &mut ds),
            SimrankStatus::EmptyDataset
        );
        let junk = CString::new("[{\"name\":1}]").unwrap();
        assert_eq!(
            simrank_dataset_from_csv(csv.as_ptr(), junk.as_ptr(), &mut ds),
            SimrankStatus::InvalidSchema
        );
    }
}

#[test]
fn numeric_helpers() {
    let (a, b) = ([0.0, 0.0], [1.0, 1.0]);
    let mut out = 0.0;
    unsafe {
        assert_eq!(simrank_minkowski(a.as_ptr(), b.as_ptr(), 2, 2.0, &mut out), SimrankStatus::Ok);
        assert!((out - 2f64.sqrt()).abs() < 1e-15);
        assert_eq!(simrank_minkowski(a.as_ptr(), b.as_ptr(), 2, 1.0, &mut out), SimrankStatus::Ok);
        assert_eq!(out, 2.0);

        let xs = [1.0, 2.0, 3.0];
        let ys = [3.0, 2.0, 1.0];
        assert_eq!(simrank_pearson(xs.as_ptr(), ys.as_ptr(), 3, &mut out), SimrankStatus::Ok);
        assert_eq!(out, -1.0);
        let flat = [1.0, 1.0, 1.0];
        assert_eq!(
            simrank_pearson(flat.as_ptr(), ys.as_ptr(), 3, &mut out),
            SimrankStatus::ConstantColumn
        );

        assert_eq!(simrank_two_tailed_p_value(0.0, 29, &mut out), SimrankStatus::Ok);
        assert_eq!(out, 1.0);
        assert_eq!(
            simrank_two_tailed_p_value(0.5, 2, &mut out),
            SimrankStatus::InsufficientSamples
        );
        let v = CStr::from_ptr(simrank_version()).to_str().unwrap();
        assert_eq!(v, env!("CARGO_PKG_VERSION"));
    }
}
