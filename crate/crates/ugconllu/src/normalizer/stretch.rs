use crate::conllu_model::NonCan;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Confidence {
    Certain,
    Heuristic,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormCandidate {
    pub original: String,
    pub candidate: String,
    pub phenomenon: NonCan,
    pub confidence: Confidence,
}

/// Above this many stretched runs only the all-doubled and all-single
/// variants are produced.
const MAX_COMBINED_RUNS: usize = 6;

/// Maximal runs of 3+ identical letters as (char start, length).
fn runs(chars: &[char]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let mut j = i + 1;
        while j < chars.len() && chars[j] == chars[i] {
            j += 1;
        }
        if j - i >= 3 && chars[i].is_alphabetic() {
            out.push((i, j - i));
        }
        i = j;
    }
    out
}

fn render(chars: &[char], runs: &[(usize, usize)], keep: &[usize]) -> String {
    let mut out = String::new();
    let mut i = 0;
    let mut r = 0;
    while i < chars.len() {
        if r < runs.len() && runs[r].0 == i {
            for _ in 0..keep[r] {
                out.push(chars[i]);
            }
            i += runs[r].1;
            r += 1;
        } else {
            out.push(chars[i]);
            i += 1;
        }
    }
    out
}

/// Candidates with every stretched run reduced to two or one letters.
/// The first candidate doubles every run, the last keeps single letters.
pub fn collapse_stretch(form: &str) -> Vec<NormCandidate> {
    let chars: Vec<char> = form.chars().collect();
    let runs = runs(&chars);
    if runs.is_empty() {
        return Vec::new();
    }
    let keeps: Vec<Vec<usize>> = if runs.len() > MAX_COMBINED_RUNS {
        vec![vec![2; runs.len()], vec![1; runs.len()]]
    } else {
        (0..1usize << runs.len())
            .map(|mask| {
                (0..runs.len())
                    .map(|r| if mask >> (runs.len() - 1 - r) & 1 == 1 { 1 } else { 2 })
                    .collect()
            })
            .collect()
    };
    keeps
        .iter()
        .map(|keep| NormCandidate {
            original: form.to_string(),
            candidate: render(&chars, &runs, keep),
            phenomenon: NonCan::Stretch,
            confidence: Confidence::Heuristic,
        })
        .collect()
}
