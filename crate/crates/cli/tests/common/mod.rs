#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

pub const P4: &str = "n 4\n0 1\n1 2\n2 3\n";
pub const P5: &str = "n 5\n0 1\n1 2\n2 3\n3 4\n";
pub const K13: &str = "# star K_{1,3}\nn 4\n0 1\n0 2\n0 3\n";
pub const TRIANGLE: &str = "n 3\n0 1\n1 2\n0 2\n";

pub struct Fixtures {
    dir: TempDir,
}

impl Fixtures {
    pub fn new() -> Self {
        let dir = tempfile::tempdir().unwrap();
        for (name, text) in [
            ("p4.txt", P4),
            ("p5.txt", P5),
            ("k13.txt", K13),
            ("triangle.txt", TRIANGLE),
        ] {
            std::fs::write(dir.path().join(name), text).unwrap();
        }
        Fixtures { dir }
    }

    pub fn path(&self, name: &str) -> PathBuf {
        self.dir.path().join(name)
    }

    pub fn write(&self, name: &str, text: &str) -> PathBuf {
        let p = self.path(name);
        std::fs::write(&p, text).unwrap();
        p
    }
}

pub fn degchrom<I, S>(args: I) -> Output
where
    I: IntoIterator<Item = S>,
    S: AsRef<std::ffi::OsStr>,
{
    Command::new(env!("CARGO_BIN_EXE_degchrom"))
        .args(args)
        .env_remove("DEGCHROM_THREADS")
        .output()
        .expect("binary runs")
}

pub fn arg(p: &Path) -> String {
    p.display().to_string()
}

pub fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

pub fn json_lines(o: &Output) -> Vec<serde_json::Value> {
    stdout(o)
        .lines()
        .map(|l| serde_json::from_str(l).expect("json line"))
        .collect()
}

pub fn coefficients(v: &serde_json::Value) -> Vec<String> {
    v["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap().to_string())
        .collect()
}
