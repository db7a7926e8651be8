//! Regenerates the IG(2,2n) structure-constant files in `data/` from the
//! polynomial presentation.

use std::path::Path;

use qspectra_core::algebra::{ig2_data_file_name, qh_ig2, validate_algebra, StructureData};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    std::fs::create_dir_all(&dir)?;
    for n in 2..=5 {
        let a = qh_ig2(n)?;
        assert!(validate_algebra(&a).is_valid());
        let data = StructureData::from_algebra(&a)?;
        let path = dir.join(ig2_data_file_name(n));
        std::fs::write(&path, serde_json::to_string(&data)? + "\n")?;
        println!("{} ({} triples)", path.display(), data.triples.len());
    }
    Ok(())
}
