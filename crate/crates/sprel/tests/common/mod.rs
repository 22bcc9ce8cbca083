//! Input files for driving the `sprel` binary.
#![allow(dead_code)]

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub const SCENES: &str = r#"{"image_id":"a","width":100,"height":100,"objects":[{"label":"bus","box":[60,10,100,50],"score":0.9},{"label":"car","box":[0,0,40,40],"score":0.9}],"context":"city"}
{"image_id":"b","width":100,"height":100,"objects":[{"label":"tree","box":[30,0,60,30],"score":0.9},{"label":"bench","box":[30,35,60,65],"score":0.8},{"label":"dog","box":[65,35,95,65],"score":0.8},{"label":"cat","box":[0,35,25,65],"score":0.8}],"context":"street"}
{"image_id":"c","width":8,"height":8,"objects":[{"label":"car","box":[0,0,8,6],"score":0.9},{"label":"person","box":[0,1,8,7],"score":0.9}],"depth":"c.pgm","context":"street"}
"#;

pub const PROMPTS: &str = "A bus to the right of a car in a city
A bench under a tree in a street

A market behind a building in a city
A dog next to a bench, a cat on the left of the bench in a street
A streetlight between two streetlights, a bench to the right of the streetlight in a downtown area
";

pub const CAPTIONS: &str = r#"{"id":"1","caption":"a red bus parked on a street downtown","image":"http://x/1.jpg"}
{"id":"2","caption":"a bowl of fruit","image":"http://x/2.jpg"}
{"id":"3","caption":"business trip to the city","image":"http://x/3.jpg"}
{"id":"4","caption":"Fire hydrant in a residential área","image":"http://x/4.jpg"}
"#;

/// Writes the fixture files into `dir` and returns their paths by name.
pub fn write_fixtures(dir: &Path) -> Fixtures {
    let put = |name: &str, body: &[u8]| {
        let p = dir.join(name);
        fs::write(&p, body).unwrap();
        p
    };
    // closeness grows downwards
    let depth: Vec<u16> = (0..64).map(|i| (i / 8) as u16 * 100).collect();
    put("c.pgm", &sprel::pgm::encode16(8, 8, &depth).unwrap());
    let scenes = put("scenes.jsonl", SCENES.as_bytes());
    let prompts = put("prompts.txt", PROMPTS.as_bytes());
    let captions = put("captions.jsonl", CAPTIONS.as_bytes());
    let records = dir.join("records.jsonl");
    let status = sprel(&[
        "stub-gen",
        prompts.to_str().unwrap(),
        "--seed",
        "4",
        "-o",
        records.to_str().unwrap(),
    ]);
    assert!(
        status.status.success(),
        "{}",
        String::from_utf8_lossy(&status.stderr)
    );
    Fixtures {
        scenes,
        prompts,
        captions,
        records,
    }
}

pub struct Fixtures {
    pub scenes: PathBuf,
    pub prompts: PathBuf,
    pub captions: PathBuf,
    pub records: PathBuf,
}

pub fn sprel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sprel"))
        .args(args)
        .env_remove("SPREL_CONFIG")
        .output()
        .unwrap()
}

pub fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}
