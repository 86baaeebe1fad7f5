use std::path::PathBuf;

use rayon::prelude::*;
use ugconllu::conllu_model::{parse_document_from, serialize_document, Sentence};
use ugconllu::sud_bridge::{sud_to_ud_with, ud_to_sud_with, ConvertError};
use ugconllu::tree_algebra::{merge_units, split_units};
use ugconllu::ugc_lint::{fix, validate, Diagnostic, Severity};

use crate::args::{Command, ConvertDirection, Format, Output, SegmentDirection};
use crate::files::{collect, write_atomic, write_under, Input};
use crate::stats::Stats;
use crate::{Outcome, Settings, EXIT_ERRORS, EXIT_IO, EXIT_OK};

/// What one worker produced for one file.
#[derive(Default)]
struct FileReport {
    /// Report lines, in order.
    lines: Vec<String>,
    /// Rewritten document, for commands that produce one.
    document: Option<String>,
    /// Parse or IO failures.
    failures: Vec<String>,
    errors: usize,
    warnings: usize,
    fixes: usize,
    stats: Option<Stats>,
}

enum Sink {
    Stdout,
    DryRun,
    InPlace,
    Dir(PathBuf),
}

impl Sink {
    fn new(o: &Output, default: Sink) -> Sink {
        match (&o.out, o.in_place, o.dry_run) {
            (Some(d), _, _) => Sink::Dir(d.clone()),
            (None, true, _) => Sink::InPlace,
            (None, false, true) => Sink::DryRun,
            _ => default,
        }
    }
}

fn line(format: Format, file: &str, sent: Option<&str>, token: &str, rule: &str, sev: &str, msg: &str) -> String {
    let sent = sent.unwrap_or("_");
    match format {
        Format::Tsv => format!("{file}\t{sent}\t{token}\t{rule}\t{sev}\t{msg}"),
        Format::Human => format!("{file} [{sent}] {token}: {sev} {rule}: {msg}"),
    }
}

fn diag_line(format: Format, file: &str, s: &Sentence, d: &Diagnostic) -> String {
    let token = d.token.map_or("_".to_string(), |t| t.to_string());
    let sent = d.sent_id.as_deref().or(s.sent_id());
    line(format, file, sent, &token, d.rule.as_str(), d.severity.as_str(), &d.message)
}

fn load(input: &Input) -> Result<Vec<Sentence>, String> {
    let file = input.display();
    let bytes = std::fs::read(&input.path).map_err(|e| format!("{file}: {e}"))?;
    let text = String::from_utf8(bytes).map_err(|_| format!("{file}: input is not valid UTF-8"))?;
    parse_document_from(&text, Some(&file)).map_err(|e| format!("{file}: {e}"))
}

fn count(report: &mut FileReport, d: &Diagnostic) {
    match d.severity {
        Severity::Error => report.errors += 1,
        Severity::Warning => report.warnings += 1,
        Severity::Info => {}
    }
}

fn validate_file(input: &Input, st: &Settings) -> FileReport {
    let mut r = FileReport::default();
    let file = input.display();
    match load(input) {
        Err(e) => r.failures.push(e),
        Ok(doc) => {
            for s in &doc {
                for d in validate(s, &st.lint) {
                    count(&mut r, &d);
                    r.lines.push(diag_line(st.format, &file, s, &d));
                }
            }
        }
    }
    r
}

fn fix_file(input: &Input, st: &Settings) -> FileReport {
    let mut r = FileReport::default();
    let file = input.display();
    let doc = match load(input) {
        Err(e) => {
            r.failures.push(e);
            return r;
        }
        Ok(d) => d,
    };
    let mut fixed = Vec::with_capacity(doc.len());
    for s in &doc {
        let diags = validate(s, &st.lint);
        let out = fix(s, &diags, &st.lint);
        for a in &out.applied {
            r.fixes += 1;
            r.lines.push(line(
                st.format,
                &file,
                s.sent_id(),
                &a.fix.word().to_string(),
                a.rule.as_str(),
                "fix",
                &a.fix.describe(),
            ));
        }
        for c in &out.conflicts {
            let what: Vec<String> = c.fixes.iter().map(|f| f.describe()).collect();
            let msg = format!("conflicting fixes on {}: {}", c.field, what.join("; "));
            r.lines.push(line(st.format, &file, s.sent_id(), &c.word.to_string(), "-", "conflict", &msg));
        }
        for d in validate(&out.sentence, &st.lint) {
            count(&mut r, &d);
            r.lines.push(diag_line(st.format, &file, &out.sentence, &d));
        }
        fixed.push(out.sentence);
    }
    if r.fixes > 0 {
        r.document = Some(serialize_document(&fixed));
    }
    r
}

/// Sentence id without a trailing `-<n>` unit suffix.
fn post_id(id: &str) -> &str {
    match id.rsplit_once('-') {
        Some((stem, k)) if !stem.is_empty() && !k.is_empty() && k.bytes().all(|b| b.is_ascii_digit()) => stem,
        _ => id,
    }
}

fn segment_file(input: &Input, st: &Settings, dir: SegmentDirection) -> FileReport {
    let mut r = FileReport::default();
    let file = input.display();
    let doc = match load(input) {
        Err(e) => {
            r.failures.push(e);
            return r;
        }
        Ok(d) => d,
    };
    let out: Vec<Sentence> = match dir {
        SegmentDirection::Split => {
            let mut out = Vec::new();
            for s in &doc {
                match split_units(s) {
                    Ok(parts) => out.extend(parts),
                    Err(e) => {
                        r.errors += 1;
                        r.lines.push(line(st.format, &file, s.sent_id(), "_", "segment", "error", &e.to_string()));
                        out.push(s.clone());
                    }
                }
            }
            out
        }
        SegmentDirection::MergeByPostId => {
            // groups keep the position of their first member
            let mut groups: Vec<(Option<String>, Vec<Sentence>)> = Vec::new();
            for s in &doc {
                let key = s.sent_id().map(|id| post_id(id).to_string());
                match groups.iter_mut().find(|(k, _)| key.is_some() && *k == key) {
                    Some((_, g)) => g.push(s.clone()),
                    None => groups.push((key, vec![s.clone()])),
                }
            }
            groups.iter().map(|(_, g)| merge_units(g)).collect()
        }
    };
    r.document = Some(serialize_document(&out));
    r
}

fn convert_file(input: &Input, st: &Settings, dir: ConvertDirection) -> FileReport {
    let mut r = FileReport::default();
    let file = input.display();
    let doc = match load(input) {
        Err(e) => {
            r.failures.push(e);
            return r;
        }
        Ok(d) => d,
    };
    let mut out = Vec::with_capacity(doc.len());
    for s in &doc {
        let res = match dir {
            ConvertDirection::Ud2sud => ud_to_sud_with(s, &st.table),
            ConvertDirection::Sud2ud => sud_to_ud_with(s, &st.table),
        };
        match res {
            Ok(c) => out.push(c),
            Err(e) => {
                r.errors += 1;
                let (token, kind) = match &e {
                    ConvertError::UnsupportedRelation { token, .. } => (token.to_string(), "UnsupportedRelation"),
                    ConvertError::NotATree(_) => ("_".to_string(), "NotATree"),
                    ConvertError::NonTreeResult(_) => ("_".to_string(), "NonTreeResult"),
                };
                r.lines.push(line(st.format, &file, s.sent_id(), &token, kind, "error", &e.to_string()));
            }
        }
    }
    // a partly converted file would mix schemes
    if r.errors == 0 {
        r.document = Some(serialize_document(&out));
    }
    r
}

fn stats_file(input: &Input, st: &Settings) -> FileReport {
    let mut r = FileReport::default();
    match load(input) {
        Err(e) => r.failures.push(e),
        Ok(doc) => r.stats = Some(Stats::file(&doc, &st.lexicon)),
    }
    r
}

pub fn dispatch(cmd: &Command, st: &Settings) -> Outcome {
    let (paths, sink) = match cmd {
        Command::Validate { paths } | Command::Stats { paths } => (paths, Sink::DryRun),
        Command::Fix { paths, output } => (paths, Sink::new(output, Sink::DryRun)),
        Command::Segment { paths, output, .. } | Command::Convert { paths, output, .. } => {
            (paths, Sink::new(output, Sink::Stdout))
        }
    };
    let inputs = match collect(paths) {
        Ok(i) => i,
        Err(e) => {
            return Outcome {
                code: EXIT_IO,
                stderr: format!("{e:#}\n"),
                ..Default::default()
            }
        }
    };
    let work = |input: &Input| -> FileReport {
        let mut r = match cmd {
            Command::Validate { .. } => validate_file(input, st),
            Command::Fix { .. } => fix_file(input, st),
            Command::Segment { direction, .. } => segment_file(input, st, *direction),
            Command::Convert { direction, .. } => convert_file(input, st, *direction),
            Command::Stats { .. } => stats_file(input, st),
        };
        let written = match (&sink, &r.document) {
            (Sink::InPlace, Some(doc)) => write_atomic(&input.path, doc),
            (Sink::Dir(d), Some(doc)) => write_under(d, &input.rel, doc),
            _ => Ok(()),
        };
        if let Err(e) = written {
            r.failures.push(format!("{e:#}"));
        }
        r
    };
    let reports: Vec<FileReport> = st.pool.install(|| inputs.par_iter().map(work).collect());
    assemble(cmd, &sink, st.format, reports)
}

fn assemble(cmd: &Command, sink: &Sink, format: Format, reports: Vec<FileReport>) -> Outcome {
    let mut out = Outcome::default();
    let (mut errors, mut warnings, mut fixes, mut failures) = (0, 0, 0, 0);
    let mut stats = Stats::default();
    let to_stdout = matches!(sink, Sink::Stdout);
    for r in &reports {
        for l in &r.lines {
            let stream = if to_stdout { &mut out.stderr } else { &mut out.stdout };
            stream.push_str(l);
            stream.push('\n');
        }
        if to_stdout {
            if let Some(doc) = &r.document {
                out.stdout.push_str(doc);
            }
        }
        for f in &r.failures {
            out.stderr.push_str(f);
            out.stderr.push('\n');
        }
        errors += r.errors;
        warnings += r.warnings;
        fixes += r.fixes;
        failures += r.failures.len();
        if let Some(s) = &r.stats {
            stats.merge(s);
        }
    }
    match cmd {
        Command::Stats { .. } => out.stdout.push_str(&stats.render(format)),
        Command::Fix { .. } => out.stderr.push_str(&format!(
            "{fixes} fixes applied, {errors} errors and {warnings} warnings remain in {} files\n",
            reports.len()
        )),
        Command::Validate { .. } if format == Format::Human => out.stderr.push_str(&format!(
            "{errors} errors, {warnings} warnings in {} files\n",
            reports.len()
        )),
        _ => {}
    }
    out.code = if failures > 0 {
        EXIT_IO
    } else if errors > 0 {
        EXIT_ERRORS
    } else {
        EXIT_OK
    };
    out
}
