use std::fs;

use sotype_cli::{cmd_hunt, Cache, Engine, Lookup};
use sotype_core::DEFAULT_CAP;

fn engine(dir: Option<&std::path::Path>) -> Engine {
    Engine::new(DEFAULT_CAP, dir.map(|d| Cache::open(d).unwrap()))
}

#[test]
fn store_then_load_is_identical() {
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::open(dir.path()).unwrap();
    let report = engine(None).report_text("PSL(2,7)").unwrap();
    cache.store(&report).unwrap();
    let bytes = fs::read(cache.path_for("PSL(2,7)")).unwrap();
    match cache.load("PSL(2,7)") {
        Lookup::Hit(loaded) => {
            assert_eq!(loaded, report);
            cache.store(&loaded).unwrap();
            assert_eq!(fs::read(cache.path_for("PSL(2,7)")).unwrap(), bytes);
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn filename_is_the_digest_of_the_normalized_text() {
    let dir = tempfile::tempdir().unwrap();
    let e = engine(Some(dir.path()));
    e.report_text("Q(8)  x F(7,3,2)").unwrap();
    let names: Vec<String> = fs::read_dir(dir.path())
        .unwrap()
        .map(|f| f.unwrap().file_name().into_string().unwrap())
        .collect();
    // sha256("Dic(2) x F(7,3,2)")
    let cache = e.cache().unwrap();
    let expected = cache.path_for("Dic(2) x F(7,3,2)");
    assert_eq!(names, [expected.file_name().unwrap().to_str().unwrap()]);
    assert_eq!(names[0].len(), 64 + ".json".len());
    assert!(names[0]
        .trim_end_matches(".json")
        .chars()
        .all(|c| c.is_ascii_hexdigit()));
}

#[test]
fn missing_key_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::open(dir.path()).unwrap();
    assert!(matches!(cache.load("C(5)"), Lookup::Missing));
}

#[test]
fn corrupt_file_is_recomputed_and_overwritten() {
    let cold = engine(None).report_text("PSL(2,7)").unwrap();
    let dir = tempfile::tempdir().unwrap();
    let e = engine(Some(dir.path()));
    let path = e.cache().unwrap().path_for("PSL(2,7)");
    for garbage in [
        "{ not json".to_string(),
        String::new(),
        serde_json::to_string(&engine(None).report_text("A(5)").unwrap()).unwrap(),
        serde_json::to_string(&{
            let mut r = cold.clone();
            r.order += 1;
            r
        })
        .unwrap(),
    ] {
        fs::write(&path, garbage).unwrap();
        assert!(matches!(
            e.cache().unwrap().load("PSL(2,7)"),
            Lookup::Corrupt(_)
        ));
        assert_eq!(e.report_text("PSL(2,7)").unwrap(), cold);
        assert!(matches!(e.cache().unwrap().load("PSL(2,7)"), Lookup::Hit(ref r) if *r == cold));
    }
}

#[test]
fn cached_results_equal_cold_results() {
    let dir = tempfile::tempdir().unwrap();
    let warm = engine(Some(dir.path()));
    for text in ["C(7) x SL(2,3)", "cex3", "PSU(3,3)"] {
        let cold = engine(None).report_text(text).unwrap();
        assert_eq!(warm.report_text(text).unwrap(), cold);
        assert_eq!(warm.report_text(text).unwrap(), cold);
    }
}

#[test]
fn hunt_ignores_cache_state() {
    let dir = tempfile::tempdir().unwrap();
    let cold = cmd_hunt(&engine(None), 168, 2).unwrap();
    let first = cmd_hunt(&engine(Some(dir.path())), 168, 2).unwrap();
    let second = cmd_hunt(&engine(Some(dir.path())), 168, 2).unwrap();
    fs::remove_dir_all(dir.path()).unwrap();
    let after_delete = cmd_hunt(&engine(Some(dir.path())), 168, 2).unwrap();
    assert_eq!(first, cold);
    assert_eq!(second, cold);
    assert_eq!(after_delete, cold);
}
