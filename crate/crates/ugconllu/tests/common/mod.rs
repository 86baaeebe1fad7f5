#![allow(dead_code)]

use std::path::{Path, PathBuf};

use ugconllu::conllu_model::{parse_document, Sentence};

pub fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

pub fn read(rel: &str) -> String {
    std::fs::read_to_string(fixtures().join(rel)).unwrap_or_else(|e| panic!("{rel}: {e}"))
}

pub fn load(rel: &str) -> Vec<Sentence> {
    parse_document(&read(rel)).unwrap_or_else(|e| panic!("{rel}: {e}"))
}

pub fn one(rel: &str) -> Sentence {
    let mut v = load(rel);
    assert_eq!(v.len(), 1, "{rel} should hold one sentence");
    v.remove(0)
}

/// Every `.conllu` file below `dir`, sorted, relative to the fixture root.
pub fn files(dir: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut stack = vec![fixtures().join(dir)];
    while let Some(d) = stack.pop() {
        for e in std::fs::read_dir(&d).unwrap() {
            let p = e.unwrap().path();
            if p.is_dir() {
                stack.push(p);
            } else if p.extension().is_some_and(|x| x == "conllu") {
                out.push(p.strip_prefix(fixtures()).unwrap().to_string_lossy().into_owned());
            }
        }
    }
    out.sort();
    out
}

/// (head, deprel) for every word, the part of a tree the conversions act on.
pub fn arcs(s: &Sentence) -> Vec<(String, usize, String)> {
    s.words()
        .map(|(_, t)| (t.form.clone(), t.head.unwrap_or(usize::MAX), t.deprel.clone()))
        .collect()
}
