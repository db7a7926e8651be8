use std::path::Path;

use qspectra_core::algebra::{qh_ig2, qh_ig2_from_data, validate_algebra};
use qspectra_core::exactlin::int;
use qspectra_core::Error;

fn shipped() -> &'static Path {
    Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/data"))
}

#[test]
fn shipped_files_match_presentation() {
    for n in 2..=5 {
        let from_file = qh_ig2_from_data(n, shipped()).unwrap();
        assert!(validate_algebra(&from_file).is_valid());
        assert_eq!(from_file, qh_ig2(n).unwrap(), "IG(2,{})", 2 * n);
    }
}

#[test]
fn perturbed_file_is_rejected() {
    let a = qh_ig2(3).unwrap();
    let c = a.structure_constant(1, 1, 3) + int(1);
    let bad = a.with_structure_constant(1, 1, 3, c);
    assert!(!validate_algebra(&bad).is_valid());

    let dir = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(shipped().join("ig_2_6.json")).unwrap();
    // the product e1 * e1 = e1^2 is listed as [1,1,3,1,1]
    let broken = text.replacen("[1,1,3,1,1]", "[1,1,3,2,1]", 1);
    assert_ne!(text, broken);
    std::fs::write(dir.path().join("ig_2_6.json"), broken).unwrap();
    let loaded = qh_ig2_from_data(3, dir.path()).unwrap();
    assert!(!validate_algebra(&loaded).is_valid());

    std::fs::write(dir.path().join("ig_2_8.json"), "{not json").unwrap();
    assert!(matches!(qh_ig2_from_data(4, dir.path()), Err(Error::DataFile { .. })));
}
