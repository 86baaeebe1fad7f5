use thiserror::Error;

use super::graph::{build_graph, StructureError};
use crate::conllu_model::{meta_pair, Sentence, Token, TokenId};

pub const SENTENCE_REL: &str = "parataxis:sentence";

/// A `parataxis:sentence` edge, as (head, dependent) word indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnitBoundary {
    pub head: usize,
    pub dependent: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UnitError {
    #[error("sentence is not a tree: {0:?}")]
    NotATree(Vec<StructureError>),
    #[error("unit headed by {} (edge {}->{}) is not a contiguous span", .edge.dependent, .edge.head, .edge.dependent)]
    NonContiguousUnit { edge: UnitBoundary },
}

/// Word indices grouped into sentential units. Unit 0 holds the root.
struct Units {
    /// unit id per word (index 0 unused)
    of: Vec<usize>,
    /// the word heading each unit
    heads: Vec<usize>,
    edges: Vec<Option<UnitBoundary>>,
}

fn assign_units(s: &Sentence) -> Result<Units, UnitError> {
    let g = build_graph(s).map_err(UnitError::NotATree)?;
    let n = g.len();
    let mut of = vec![0usize; n + 1];
    let mut heads = vec![g.root()];
    let mut edges = vec![None];
    // walk top-down so a unit's head is assigned before its members
    let mut order = vec![g.root()];
    let mut k = 0;
    while k < order.len() {
        let w = order[k];
        k += 1;
        for &c in g.children(w) {
            if g.relation(c) == SENTENCE_REL {
                of[c] = heads.len();
                heads.push(c);
                edges.push(Some(UnitBoundary {
                    head: w,
                    dependent: c,
                }));
            } else {
                of[c] = of[w];
            }
            order.push(c);
        }
    }
    // each unit must be a contiguous run, and runs must not interleave
    let mut first = vec![usize::MAX; heads.len()];
    let mut last = vec![0; heads.len()];
    for i in 1..=n {
        first[of[i]] = first[of[i]].min(i);
        last[of[i]] = i;
    }
    for i in 1..=n {
        for u in 0..heads.len() {
            if u != of[i] && first[u] < i && i < last[u] {
                let culprit = if edges[u].is_some() { u } else { of[i] };
                return Err(UnitError::NonContiguousUnit {
                    edge: edges[culprit].expect("non-root unit has an edge"),
                });
            }
        }
    }
    Ok(Units { of, heads, edges })
}

/// Every `parataxis:sentence` edge of the sentence, by dependent index.
pub fn unit_boundaries(s: &Sentence) -> Result<Vec<UnitBoundary>, UnitError> {
    let units = assign_units(s)?;
    let mut out: Vec<UnitBoundary> = units.edges.into_iter().flatten().collect();
    out.sort_by_key(|e| e.dependent);
    Ok(out)
}

fn with_suffix(s: &Sentence, k: usize) -> Vec<String> {
    s.metadata
        .iter()
        .map(|l| match meta_pair(l) {
            Some(("sent_id", v)) => format!("# sent_id = {v}-{k}"),
            _ => l.clone(),
        })
        .collect()
}

/// Splits a sentence at its `parataxis:sentence` edges. Units come out in
/// surface order; a sentence without such edges is returned unchanged.
pub fn split_units(s: &Sentence) -> Result<Vec<Sentence>, UnitError> {
    let units = assign_units(s)?;
    if units.heads.len() == 1 {
        return Ok(vec![s.clone()]);
    }
    let n = units.of.len() - 1;
    // surface order of units, and each word's new index within its unit
    let mut order: Vec<usize> = Vec::new();
    let mut new_index = vec![0usize; n + 1];
    let mut counts = vec![0usize; units.heads.len()];
    for i in 1..=n {
        let u = units.of[i];
        if !order.contains(&u) {
            order.push(u);
        }
        counts[u] += 1;
        new_index[i] = counts[u];
    }
    let mut parts: Vec<Sentence> = order
        .iter()
        .enumerate()
        .map(|(k, _)| Sentence {
            metadata: with_suffix(s, k + 1),
            tokens: Vec::new(),
            source: s.source.clone(),
        })
        .collect();
    let slot = |u: usize| order.iter().position(|&x| x == u).expect("unit in order");

    // empty nodes before word 1 go with the first unit
    let mut current = units.of[1];
    for t in &s.tokens {
        match t.id {
            TokenId::Word(i) => {
                current = units.of[i];
                let mut t = t.clone();
                t.id = TokenId::Word(new_index[i]);
                if units.heads[current] == i {
                    t.head = Some(0);
                    t.deprel = "root".into();
                } else if let Some(h) = t.head {
                    t.head = Some(new_index[h]);
                }
                parts[slot(current)].tokens.push(t);
            }
            TokenId::Range(a, b) => {
                let u = units.of[a];
                if units.of[b] != u {
                    let e = units.edges[units.of[b]].or(units.edges[u]);
                    return Err(UnitError::NonContiguousUnit {
                        edge: e.expect("non-root unit has an edge"),
                    });
                }
                let mut t = t.clone();
                t.id = TokenId::Range(new_index[a], new_index[b]);
                parts[slot(u)].tokens.push(t);
            }
            TokenId::Empty(major, minor) => {
                let mut t = t.clone();
                let m = if major == 0 { 0 } else { new_index[major] };
                t.id = TokenId::Empty(m, minor);
                parts[slot(current)].tokens.push(t);
            }
        }
    }
    for p in &mut parts {
        p.refresh_text();
    }
    Ok(parts)
}

fn strip_unit_suffix(id: &str) -> &str {
    match id.rsplit_once('-') {
        Some((stem, k)) if !stem.is_empty() && k.parse::<usize>().is_ok() => stem,
        _ => id,
    }
}

/// Concatenates sentences into one, attaching the root of every later
/// sentence to the first root with `parataxis:sentence`.
///
/// # Panics
/// On an empty slice.
pub fn merge_units(sentences: &[Sentence]) -> Sentence {
    assert!(!sentences.is_empty(), "merge_units needs at least one sentence");
    if sentences.len() == 1 {
        return sentences[0].clone();
    }
    let first = &sentences[0];
    let mut out = Sentence {
        metadata: first
            .metadata
            .iter()
            .map(|l| match meta_pair(l) {
                Some(("sent_id", v)) => format!("# sent_id = {}", strip_unit_suffix(v)),
                _ => l.clone(),
            })
            .collect(),
        tokens: Vec::new(),
        source: first.source.clone(),
    };
    let mut offset = 0;
    let mut main_root = 0;
    for (k, s) in sentences.iter().enumerate() {
        let shift = |i: usize| i + offset;
        for t in &s.tokens {
            let mut t: Token = t.clone();
            t.id = match t.id {
                TokenId::Word(i) => TokenId::Word(shift(i)),
                TokenId::Range(a, b) => TokenId::Range(shift(a), shift(b)),
                TokenId::Empty(0, m) if k > 0 => TokenId::Empty(offset, m),
                TokenId::Empty(a, m) => TokenId::Empty(if a == 0 { 0 } else { shift(a) }, m),
            };
            if let (TokenId::Word(i), Some(h)) = (t.id, t.head) {
                if h == 0 {
                    if k == 0 {
                        main_root = i;
                    } else {
                        t.head = Some(main_root);
                        t.deprel = SENTENCE_REL.into();
                    }
                } else {
                    t.head = Some(shift(h));
                }
            }
            out.tokens.push(t);
        }
        offset += s.word_count();
    }
    out.refresh_text();
    out
}
