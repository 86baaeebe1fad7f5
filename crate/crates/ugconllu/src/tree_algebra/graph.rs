use std::fmt;

use crate::conllu_model::Sentence;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StructureKind {
    NoRoot,
    MultiRoot,
    Cycle,
    Disconnected,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct StructureError {
    pub kind: StructureKind,
    /// Word indices involved, ascending.
    pub tokens: Vec<usize>,
}

impl fmt::Display for StructureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ids: Vec<String> = self.tokens.iter().map(|t| t.to_string()).collect();
        let what = match self.kind {
            StructureKind::NoRoot => "no root",
            StructureKind::MultiRoot => "multiple roots",
            StructureKind::Cycle => "cycle",
            StructureKind::Disconnected => "not reachable from the root",
        };
        write!(f, "{what}: {}", ids.join(","))
    }
}

/// Tree view over the words of a sentence. Word indices are 1-based.
#[derive(Debug, Clone)]
pub struct DepGraph<'a> {
    sentence: &'a Sentence,
    root: usize,
    heads: Vec<usize>,
    positions: Vec<usize>,
    children: Vec<Vec<usize>>,
}

/// Builds the dependency tree, or every structural problem found.
pub fn build_graph(sentence: &Sentence) -> Result<DepGraph<'_>, Vec<StructureError>> {
    let positions = sentence.word_positions();
    let n = positions.len();
    // heads[i] for word i; usize::MAX marks an unspecified head
    let mut heads = vec![0usize; n + 1];
    for (i, &p) in positions.iter().enumerate() {
        heads[i + 1] = sentence.tokens[p].head.unwrap_or(usize::MAX);
    }
    let mut errors = Vec::new();
    let roots: Vec<usize> = (1..=n).filter(|&i| heads[i] == 0).collect();
    match roots.len() {
        0 => errors.push(StructureError {
            kind: StructureKind::NoRoot,
            tokens: vec![],
        }),
        1 => {}
        _ => errors.push(StructureError {
            kind: StructureKind::MultiRoot,
            tokens: roots.clone(),
        }),
    }

    // 0 unvisited, 1 on the current path, 2 reaches a root, 3 dead end
    let mut state = vec![0u8; n + 1];
    let mut cycles: Vec<usize> = Vec::new();
    for start in 1..=n {
        if state[start] != 0 {
            continue;
        }
        let mut path = Vec::new();
        let mut cur = start;
        let outcome = loop {
            if cur == 0 {
                break 2;
            }
            if cur == usize::MAX || cur > n {
                break 3;
            }
            match state[cur] {
                0 => {
                    state[cur] = 1;
                    path.push(cur);
                    cur = heads[cur];
                }
                1 => {
                    let at = path.iter().position(|&p| p == cur).unwrap_or(0);
                    cycles.extend_from_slice(&path[at..]);
                    break 3;
                }
                s => break s,
            }
        };
        for p in path {
            state[p] = outcome;
        }
    }
    if !cycles.is_empty() {
        cycles.sort_unstable();
        errors.push(StructureError {
            kind: StructureKind::Cycle,
            tokens: cycles.clone(),
        });
    }
    let stranded: Vec<usize> = (1..=n)
        .filter(|&i| state[i] == 3 && !cycles.contains(&i))
        .collect();
    if !stranded.is_empty() {
        errors.push(StructureError {
            kind: StructureKind::Disconnected,
            tokens: stranded,
        });
    }
    if !errors.is_empty() {
        return Err(errors);
    }

    let mut children = vec![Vec::new(); n + 1];
    for i in 1..=n {
        if heads[i] != 0 {
            children[heads[i]].push(i);
        }
    }
    Ok(DepGraph {
        sentence,
        root: roots[0],
        heads,
        positions,
        children,
    })
}

impl<'a> DepGraph<'a> {
    pub fn sentence(&self) -> &'a Sentence {
        self.sentence
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    /// Head of word `i`; 0 for the root.
    pub fn head(&self, i: usize) -> usize {
        self.heads[i]
    }

    /// Dependents of `i` in ascending order; `children(0)` is empty.
    pub fn children(&self, i: usize) -> &[usize] {
        &self.children[i]
    }

    pub fn relation(&self, i: usize) -> &'a str {
        &self.sentence.tokens[self.positions[i - 1]].deprel
    }

    pub fn token(&self, i: usize) -> &'a crate::conllu_model::Token {
        &self.sentence.tokens[self.positions[i - 1]]
    }

    /// Position of word `i` in the sentence's token list.
    pub fn position(&self, i: usize) -> usize {
        self.positions[i - 1]
    }

    /// `i` and all its descendants, ascending.
    pub fn subtree(&self, i: usize) -> Vec<usize> {
        let mut out = vec![i];
        let mut k = 0;
        while k < out.len() {
            out.extend_from_slice(&self.children[out[k]]);
            k += 1;
        }
        out.sort_unstable();
        out
    }

    /// Number of edges between `i` and the root.
    pub fn depth(&self, mut i: usize) -> usize {
        let mut d = 0;
        while self.heads[i] != 0 {
            i = self.heads[i];
            d += 1;
        }
        d
    }

    /// Whether `a` is a proper ancestor of `b`.
    pub fn dominates(&self, a: usize, mut b: usize) -> bool {
        while b != 0 {
            b = self.heads[b];
            if b == a {
                return true;
            }
        }
        false
    }
}
