use std::fs;

use sprel::records::{load_record, EvalRecordWire};
use sprel::scene::load_scene;
use sprel::{pgm, Error};
use sprel_core::prompt::PhraseLexicon;

fn scene_line(depth: &str) -> String {
    format!(
        r#"{{"image_id":"i","width":4,"height":3,"objects":[{{"label":"car","box":[0,0,2,2],"score":0.9}},{{"label":"bus","box":[0,0,2,3],"score":0.9}}],"depth":"{depth}"}}"#
    )
}

#[test]
fn pgm_depth_resolves_against_the_input_directory() {
    let dir = tempfile::tempdir().unwrap();
    let samples: Vec<u16> = (0..12).map(|i| 1000 * i).collect();
    fs::create_dir(dir.path().join("depth")).unwrap();
    fs::write(
        dir.path().join("depth/i.pgm"),
        pgm::encode16(4, 3, &samples).unwrap(),
    )
    .unwrap();
    let scene = load_scene(&scene_line("depth/i.pgm"), 1, dir.path()).unwrap();
    let d = scene.depth().unwrap();
    assert_eq!(d.get(3, 2), Some(11000.0));
    assert_eq!(scene.objects().len(), 2);
}

#[test]
fn pgm_of_wrong_size_is_a_dimension_mismatch() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(
        dir.path().join("d.pgm"),
        pgm::encode16(5, 3, &[0; 15]).unwrap(),
    )
    .unwrap();
    match load_scene(&scene_line("d.pgm"), 9, dir.path()) {
        Err(Error::DimensionMismatch {
            line: 9,
            width: 4,
            height: 3,
            found_width: 5,
            found_height: 3,
        }) => {}
        other => panic!("{other:?}"),
    }
}

#[test]
fn missing_depth_file_is_a_format_error() {
    let dir = tempfile::tempdir().unwrap();
    match load_scene(&scene_line("nope.pgm"), 2, dir.path()) {
        Err(Error::Format { line: 2, field, .. }) => assert_eq!(field, "depth"),
        other => panic!("{other:?}"),
    }
}

#[test]
fn eval_records_round_trip_through_text() {
    let lex = PhraseLexicon::default();
    let line = r#"{"id":"r1","prompt":"A bench under a tree, a dog next to the tree in a street","scene":{"image_id":"g","width":50,"height":50,"objects":[{"label":"tree","box":[10,0,30,20],"score":0.9}],"context":"street"}}"#;
    let rec = load_record(line, 1, std::path::Path::new("."), &lex).unwrap();
    assert_eq!(rec.prompt.clauses().len(), 2);
    let wire = EvalRecordWire::from_record(&rec, &lex).unwrap();
    let text = serde_json::to_string(&wire).unwrap();
    assert_eq!(
        load_record(&text, 1, std::path::Path::new("."), &lex).unwrap(),
        rec
    );
    assert!(text.contains(r#""prompt":"A bench under a tree, a dog next to the tree in a street""#));
}

#[test]
fn eval_record_errors_locate_the_field() {
    let lex = PhraseLexicon::default();
    let bad_prompt = r#"{"id":"r","prompt":"A photo of a sunset","scene":{"image_id":"g","width":5,"height":5,"objects":[]}}"#;
    match load_record(bad_prompt, 4, std::path::Path::new("."), &lex) {
        Err(Error::Format { line: 4, field, .. }) => assert_eq!(field, "prompt"),
        other => panic!("{other:?}"),
    }
    let bad_box = r#"{"id":"r","prompt":"A bus under a car","scene":{"image_id":"g","width":5,"height":5,"objects":[{"label":"bus","box":[3,0,1,1],"score":1}]}}"#;
    match load_record(bad_box, 5, std::path::Path::new("."), &lex) {
        Err(Error::Format { line: 5, field, .. }) => assert_eq!(field, "scene.objects[0].box"),
        other => panic!("{other:?}"),
    }
}
