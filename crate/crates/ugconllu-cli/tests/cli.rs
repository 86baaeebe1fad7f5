use std::path::{Path, PathBuf};

use ugconllu_cli::{run, Outcome};

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn fx(rel: &str) -> String {
    fixtures().join(rel).display().to_string()
}

fn ugc(args: &[&str]) -> Outcome {
    ugc_env(args, &[])
}

fn ugc_env(args: &[&str], env: &[(&str, &str)]) -> Outcome {
    let env: Vec<(String, String)> = env.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect();
    run(std::iter::once("ugconllu").chain(args.iter().copied()), &env)
}

fn copy_tree(from: &Path, to: &Path) {
    std::fs::create_dir_all(to).unwrap();
    for e in std::fs::read_dir(from).unwrap() {
        let p = e.unwrap().path();
        let dest = to.join(p.file_name().unwrap());
        if p.is_dir() {
            copy_tree(&p, &dest);
        } else {
            std::fs::copy(&p, &dest).unwrap();
        }
    }
}

/// Token rows of a document, without comments.
fn rows(doc: &str) -> Vec<&str> {
    doc.lines().filter(|l| !l.starts_with('#')).collect()
}

#[test]
fn clean_corpus_exits_zero() {
    let out = ugc(&["validate", &fx("figures"), &fx("sud")]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.lines().all(|l| !l.contains("\terror\t")), "{}", out.stdout);
}

#[test]
fn mutant_gives_one_tsv_line() {
    let out = ugc(&["validate", &fx("mutants/R-GOESWITH-01/trigger.conllu")]);
    assert_eq!(out.code, 1);
    let file = fx("mutants/R-GOESWITH-01/trigger.conllu");
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines.len(), 1);
    let cols: Vec<&str> = lines[0].split('\t').collect();
    assert_eq!(cols[..5], [file.as_str(), "gele-bilirim", "2", "R-GOESWITH-01", "error"]);
    assert_eq!(cols.len(), 6);
}

#[test]
fn malformed_file_exits_two() {
    let out = ugc(&["validate", &fx("cli/nine_columns.conllu")]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("line 3"), "{}", out.stderr);
    assert_eq!(ugc(&["validate", "/no/such/path"]).code, 2);
}

#[test]
fn config_errors_exit_three() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.cfg");
    std::fs::write(&bad, "R-NOPE-99 = error\n").unwrap();
    let clean = fx("figures/hashtags.conllu");
    assert_eq!(ugc(&["validate", "--config", bad.to_str().unwrap(), &clean]).code, 3);
    assert_eq!(ugc(&["validate", "--config", "/no/such.cfg", &clean]).code, 3);
    assert_eq!(ugc_env(&["validate", &clean], &[("UGCONLLU_STRICTNESS", "x")]).code, 3);
    assert_eq!(ugc(&["validate", "--lexicon", "/no/such.tsv", &clean]).code, 3);
    assert_eq!(ugc(&["validate", "--jobs", "0", &clean]).code, 3);
    assert_eq!(ugc(&["frobnicate"]).code, 3);
}

#[test]
fn config_file_and_env_change_severities() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("lint.cfg");
    std::fs::write(&cfg, "R-GOESWITH-01 = warning\n").unwrap();
    let mutant = fx("mutants/R-GOESWITH-01/trigger.conllu");
    let out = ugc(&["validate", "--config", cfg.to_str().unwrap(), &mutant]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("\twarning\t"));
    let out = ugc_env(&["validate", &mutant], &[("UGCONLLU_R_GOESWITH_01", "off")]);
    assert_eq!((out.code, out.stdout.as_str()), (0, ""));
}

#[test]
fn strict_flag() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("odd.conllu");
    let text = std::fs::read_to_string(fx("figures/taae_gonna.conllu")).unwrap().replace("\tobj\t", "\tobj:odd\t");
    std::fs::write(&f, text).unwrap();
    assert_eq!(ugc(&["validate", f.to_str().unwrap()]).code, 0);
    let out = ugc(&["validate", "--strict", f.to_str().unwrap()]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("R-VOCAB-01"));
}

#[test]
fn human_format() {
    let out = ugc(&["validate", "--format", "human", &fx("mutants/R-GOESWITH-01/trigger.conllu")]);
    assert!(out.stdout.contains("[gele-bilirim] 2: error R-GOESWITH-01:"), "{}", out.stdout);
    assert!(out.stderr.contains("1 errors, 0 warnings in 1 files"));
}

#[test]
fn directory_walk_is_sorted() {
    let out = ugc(&["validate", &fx("mutants")]);
    let files: Vec<&str> = out.stdout.lines().map(|l| l.split('\t').next().unwrap()).collect();
    let mut sorted = files.clone();
    sorted.sort();
    assert_eq!(files, sorted);
    assert!(files.iter().all(|f| f.ends_with("trigger.conllu")));
}

#[test]
fn fix_splits_emoticons_then_is_a_no_op() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("emo.conllu");
    std::fs::write(&f, "# text = lol :):)\n1\tlol\tlol\tINTJ\t_\t_\t0\troot\t_\t_\n2\t:):)\t:):)\tSYM\t_\t_\t1\tdiscourse\t_\t_\n\n").unwrap();
    let p = f.to_str().unwrap();
    let first = ugc(&["fix", "--in-place", p]);
    assert_eq!(first.code, 0, "{}", first.stderr);
    let fixes: Vec<&str> = first.stdout.lines().filter(|l| l.contains("\tfix\t")).collect();
    assert_eq!(fixes.len(), 1, "{}", first.stdout);
    assert!(fixes[0].ends_with("split into :) + :)"));
    let after = std::fs::read_to_string(&f).unwrap();
    assert_eq!(rows(&after).len(), 4);
    let second = ugc(&["fix", "--in-place", p]);
    assert!(second.stdout.lines().all(|l| !l.contains("\tfix\t")));
    assert!(second.stderr.starts_with("0 fixes applied"));
    assert_eq!(std::fs::read_to_string(&f).unwrap(), after);
}

#[test]
fn fix_leaves_clean_corpus_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    copy_tree(&fixtures().join("figures"), dir.path());
    let out = ugc(&["fix", "--in-place", dir.path().to_str().unwrap()]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    for e in std::fs::read_dir(dir.path()).unwrap() {
        let p = e.unwrap().path();
        let orig = fixtures().join("figures").join(p.file_name().unwrap());
        assert_eq!(std::fs::read(&p).unwrap(), std::fs::read(orig).unwrap(), "{}", p.display());
    }
}

#[test]
fn fix_reports_punctuation_lemma() {
    let out = ugc(&["fix", "--dry-run", &fx("fixable/seeded.conllu")]);
    assert!(out.stdout.lines().any(|l| l.contains("\tfix\t") && l.ends_with("LEMMA -> ?!")), "{}", out.stdout);
}

#[test]
fn fix_to_output_dir_keeps_inputs() {
    let dir = tempfile::tempdir().unwrap();
    let src = fx("fixable");
    let before = std::fs::read(fixtures().join("fixable/seeded.conllu")).unwrap();
    let out = ugc(&["fix", "--out", dir.path().to_str().unwrap(), &src]);
    assert_ne!(out.code, 2, "{}", out.stderr);
    let written = std::fs::read_to_string(dir.path().join("seeded.conllu")).unwrap();
    assert!(written.contains(":)\t:)\tSYM"));
    assert_eq!(std::fs::read(fixtures().join("fixable/seeded.conllu")).unwrap(), before);
    // fixing the output again changes nothing
    let again = ugc(&["fix", "--dry-run", dir.path().join("seeded.conllu").to_str().unwrap()]);
    assert!(again.stderr.starts_with("0 fixes applied"), "{}", again.stderr);
}

#[test]
fn segment_split_and_merge() {
    let out = ugc(&["segment", "split", &fx("figures/sentence_units.conllu")]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("# sent_id = grillo-1\n"));
    assert!(out.stdout.contains("# sent_id = grillo-2\n"));
    let dir = tempfile::tempdir().unwrap();
    let split = dir.path().join("split.conllu");
    std::fs::write(&split, &out.stdout).unwrap();
    let merged = ugc(&["segment", "merge-by-post-id", split.to_str().unwrap()]);
    assert_eq!(merged.stdout, std::fs::read_to_string(fx("figures/sentence_units.conllu")).unwrap());
    let chain = ugc(&["segment", "split", &fx("segment/chain3.conllu")]);
    assert_eq!(chain.stdout.matches("# sent_id = chain-").count(), 3);
    // nothing to split
    let plain = ugc(&["segment", "split", &fx("figures/hashtags.conllu")]);
    assert_eq!(plain.stdout, std::fs::read_to_string(fx("figures/hashtags.conllu")).unwrap());
}

#[test]
fn convert_gonna_and_back() {
    let out = ugc(&["convert", "ud2sud", &fx("sud/gonna_ud_contracted.conllu")]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let want = std::fs::read_to_string(fx("sud/gonna_sud_contracted.conllu")).unwrap();
    assert_eq!(rows(&out.stdout), rows(&want));
    let dir = tempfile::tempdir().unwrap();
    let mid = dir.path().join("mid.conllu");
    std::fs::write(&mid, &out.stdout).unwrap();
    let back = ugc(&["convert", "sud2ud", mid.to_str().unwrap()]);
    assert_eq!(back.stdout, std::fs::read_to_string(fx("sud/gonna_ud_contracted.conllu")).unwrap());
}

#[test]
fn convert_rejects_uncovered_relation() {
    let dir = tempfile::tempdir().unwrap();
    let out = ugc(&["convert", "ud2sud", "--out", dir.path().to_str().unwrap(), &fx("cli/csubj.conllu")]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("\tcsubj\t1\tUnsupportedRelation\terror\t"), "{}", out.stdout);
    assert!(!dir.path().join("csubj.conllu").exists());
}

#[test]
fn convert_with_custom_table() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("t.tsv");
    std::fs::write(&table, "csubj\tsubj\tno\ncop\tcomp:pred\tyes\n").unwrap();
    let out = ugc(&["convert", "ud2sud", "--table", table.to_str().unwrap(), &fx("cli/csubj.conllu")]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert!(out.stdout.contains("\tsubj\t"));
}

#[test]
fn stats_counts() {
    let out = ugc(&["stats", &fx("figures/hashtags.conllu")]);
    assert!(out.stdout.lines().any(|l| l == "hashtags\t3"), "{}", out.stdout);
    let empty = tempfile::tempdir().unwrap();
    let out = ugc(&["stats", empty.path().to_str().unwrap()]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.lines().all(|l| l.ends_with("\t0")), "{}", out.stdout);
    // sumthn and gonna are shipped; the extra file adds want
    let taae = fx("figures/taae_gonna.conllu");
    let out = ugc(&["stats", &taae]);
    assert!(out.stdout.lines().any(|l| l == "lexicon_hits\t2"), "{}", out.stdout);
    let extra = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data/extra.lex");
    let out = ugc(&["stats", "--lexicon", extra.to_str().unwrap(), &taae]);
    assert!(out.stdout.lines().any(|l| l == "lexicon_hits\t3"), "{}", out.stdout);
}

#[test]
fn output_is_independent_of_jobs() {
    let a = ugc(&["validate", "--jobs", "1", &fx("")]);
    let b = ugc(&["validate", "--jobs", "8", &fx("")]);
    assert_eq!(a, b);
    let a = ugc(&["stats", "--jobs", "1", &fx("figures"), &fx("sud")]);
    let b = ugc(&["stats", "--jobs", "8", &fx("figures"), &fx("sud")]);
    assert_eq!(a, b);
}

/// Tallies the raw text line by line, without the library parser.
fn raw_tally(text: &str) -> std::collections::BTreeMap<String, usize> {
    let mut m = std::collections::BTreeMap::new();
    let mut bump = |k: String| *m.entry(k).or_insert(0) += 1;
    for block in text.split("\n\n").filter(|b| !b.trim().is_empty()) {
        bump("sentences".into());
        bump("units".into());
        for l in block.lines().filter(|l| !l.starts_with('#')) {
            let cols: Vec<&str> = l.split('\t').collect();
            if cols[0].contains('-') {
                bump("multiword_tokens".into());
                continue;
            }
            if cols[0].contains('.') {
                continue;
            }
            bump("tokens".into());
            if cols[7] == "parataxis:sentence" {
                bump("units".into());
            }
            for item in cols[9].split('|') {
                for (key, label) in [("NonCan=", "noncan"), ("CSType=", "cstype")] {
                    if let Some(v) = item.strip_prefix(key) {
                        bump(format!("{label}:{v}"));
                    }
                }
            }
        }
    }
    m
}

#[test]
fn stats_agree_with_raw_tally() {
    let mut want = std::collections::BTreeMap::new();
    for dir in ["figures", "sud"] {
        let mut paths: Vec<PathBuf> = std::fs::read_dir(fixtures().join(dir)).unwrap().map(|e| e.unwrap().path()).collect();
        paths.sort();
        for p in paths {
            for (k, v) in raw_tally(&std::fs::read_to_string(p).unwrap()) {
                *want.entry(k).or_insert(0) += v;
            }
        }
    }
    let out = ugc(&["stats", &fx("figures"), &fx("sud")]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let got: std::collections::BTreeMap<&str, usize> = out
        .stdout
        .lines()
        .map(|l| {
            let (k, v) = l.split_once('\t').unwrap();
            (k, v.parse().unwrap())
        })
        .collect();
    for (k, v) in &want {
        assert_eq!(got.get(k.as_str()), Some(v), "{k}");
    }
    for k in got.keys().filter(|k| k.starts_with("noncan:") || k.starts_with("cstype:")) {
        assert!(want.contains_key(*k), "{k} not in raw text");
    }
}
