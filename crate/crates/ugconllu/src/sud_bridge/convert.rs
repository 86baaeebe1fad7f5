use thiserror::Error;

use super::table::{is_passthrough, ConversionTable, INFINITIVAL_MARK};
use crate::conllu_model::{Sentence, Token, TokenId};
use crate::tree_algebra::{build_graph, StructureError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConvertError {
    #[error("input is not a tree: {0:?}")]
    NotATree(Vec<StructureError>),
    #[error("relation `{deprel}` on token {token} is outside the covered inventory")]
    UnsupportedRelation { deprel: String, token: usize },
    #[error("conversion produced a non-tree: {0}")]
    NonTreeResult(String),
}

/// Working copy of the arcs. `fixed[i]` marks labels already in the target
/// scheme; the rest are mapped once the topology is final.
struct Arcs {
    head: Vec<usize>,
    label: Vec<String>,
    fixed: Vec<bool>,
    upos: Vec<String>,
}

impl Arcs {
    fn read(s: &Sentence) -> Result<Self, ConvertError> {
        let g = build_graph(s).map_err(ConvertError::NotATree)?;
        let n = g.len();
        let mut a = Arcs {
            head: vec![0; n + 1],
            label: vec![String::new(); n + 1],
            fixed: vec![false; n + 1],
            upos: vec![String::new(); n + 1],
        };
        for i in 1..=n {
            a.head[i] = g.head(i);
            a.label[i] = g.relation(i).to_string();
            a.upos[i] = g.token(i).upos.clone();
        }
        Ok(a)
    }

    fn children(&self, h: usize) -> Vec<usize> {
        (1..self.head.len()).filter(|&i| self.head[i] == h).collect()
    }

    fn depth(&self, mut i: usize) -> usize {
        let mut d = 0;
        while self.head[i] != 0 {
            i = self.head[i];
            d += 1;
        }
        d
    }

    /// `c` takes over the position of `f`: head, label and fixed flag.
    fn promote(&mut self, c: usize, f: usize) {
        self.head[c] = self.head[f];
        self.label[c] = self.label[f].clone();
        self.fixed[c] = self.fixed[f];
    }

    fn set(&mut self, i: usize, head: usize, label: &str) {
        self.head[i] = head;
        self.label[i] = label.to_string();
        self.fixed[i] = true;
    }

    fn write(&self, s: &Sentence, dropped: &[Option<String>]) -> Result<Sentence, ConvertError> {
        let mut out = s.clone();
        for t in &mut out.tokens {
            if let TokenId::Word(i) = t.id {
                t.head = Some(self.head[i]);
                t.deprel = self.label[i].clone();
                if let Some(d) = &dropped[i] {
                    t.misc.set(DROPPED, d);
                }
            }
        }
        build_graph(&out).map_err(|e| ConvertError::NonTreeResult(format!("{e:?}")))?;
        Ok(out)
    }
}

const DROPPED: &str = "DroppedRel";

fn dropped_rel(t: &Token) -> Option<(&str, &str)> {
    let v = t.get_misc(DROPPED)?;
    // relation labels may contain ':' themselves; the form is the last field
    v.rsplit_once(':')
}

/// The fused word other than `form`, read from `CorrectForm`.
fn other_form(t: &Token, form: &str) -> String {
    let full = t.get_misc("CorrectForm").unwrap_or("");
    let mut words: Vec<&str> = full.split(' ').collect();
    if let Some(k) = words.iter().position(|w| *w == form) {
        words.remove(k);
    }
    words.join(" ")
}

fn unsupported(deprel: &str, token: usize) -> ConvertError {
    ConvertError::UnsupportedRelation {
        deprel: deprel.to_string(),
        token,
    }
}

/// Converts a UD tree to SUD with the default table.
pub fn ud_to_sud(s: &Sentence) -> Result<Sentence, ConvertError> {
    ud_to_sud_with(s, &ConversionTable::default())
}

pub fn ud_to_sud_with(s: &Sentence, table: &ConversionTable) -> Result<Sentence, ConvertError> {
    let mut a = Arcs::read(s)?;
    let n = a.head.len() - 1;
    for i in 1..=n {
        if !is_passthrough(&a.label[i]) && table.row(&a.label[i]).is_none() {
            return Err(unsupported(&a.label[i], i));
        }
    }
    let tok = |i: usize| s.word(i).expect("word exists");
    // a subject fused with a copula or auxiliary heads like that function word
    let pronoun_flip: Vec<Option<(String, String)>> = (0..=n)
        .map(|i| {
            if i == 0 || a.label[i] != "nsubj" {
                return None;
            }
            let (rel, form) = dropped_rel(tok(i))?;
            table
                .is_flip(rel)
                .then(|| (rel.to_string(), other_form(tok(i), form)))
        })
        .collect();
    let mut dropped: Vec<Option<String>> = vec![None; n + 1];
    let flip_rel = |a: &Arcs, d: usize| -> Option<String> {
        if a.fixed[d] {
            return None;
        }
        if table.is_flip(&a.label[d]) {
            return Some(a.label[d].clone());
        }
        pronoun_flip[d].as_ref().map(|(r, _)| r.clone())
    };

    let mut heads: Vec<usize> = (1..=n)
        .filter(|&c| a.children(c).iter().any(|&d| flip_rel(&a, d).is_some()))
        .collect();
    heads.sort_by_key(|&c| (std::cmp::Reverse(a.depth(c)), c));
    for mut c in heads {
        loop {
            let flips: Vec<usize> = a
                .children(c)
                .into_iter()
                .filter(|&d| flip_rel(&a, d).is_some())
                .collect();
            let Some(&f) = flips.iter().min_by_key(|&&d| (d.abs_diff(c), d)) else {
                break;
            };
            let rel = flip_rel(&a, f).expect("flip dependent");
            let row = table.row(&rel).expect("flip row");
            let c_label = a.label[c].clone();
            a.promote(f, c);
            if rel == "mark" && c_label == "xcomp" && !a.fixed[c] {
                a.fixed[f] = true;
                a.label[f] = INFINITIVAL_MARK.to_string();
            }
            let sud = row.sud.clone();
            a.set(c, f, &sud);
            if let Some((_, other)) = &pronoun_flip[f] {
                dropped[f] = Some(format!("subj:{other}"));
            }
            for d in a.children(c) {
                if d != f && (a.label[d] == "nsubj" || flip_rel(&a, d).is_some()) {
                    a.head[d] = f;
                }
            }
            c = f;
        }
    }
    for i in 1..=n {
        if a.fixed[i] {
            continue;
        }
        if let Some(r) = table.row(&a.label[i]) {
            a.label[i] = r.sud.clone();
        }
        a.fixed[i] = true;
    }
    for i in 1..=n {
        if dropped[i].is_none() {
            if let Some((rel, form)) = dropped_rel(tok(i)) {
                let new = match rel {
                    "mark" => INFINITIVAL_MARK.to_string(),
                    r => match table.row(r) {
                        Some(row) if !row.flip => row.sud.clone(),
                        _ => r.to_string(),
                    },
                };
                dropped[i] = Some(format!("{new}:{form}"));
            }
        }
    }
    a.write(s, &dropped)
}

/// Converts a SUD tree back to UD with the default table.
pub fn sud_to_ud(s: &Sentence) -> Result<Sentence, ConvertError> {
    sud_to_ud_with(s, &ConversionTable::default())
}

/// The UD function relation for a SUD arc `h -> d`, if it is a flipped one.
fn unflip_rel(a: &Arcs, h: usize, d: usize, subj_fused: bool) -> Option<&'static str> {
    if a.fixed[d] || h == 0 {
        return None;
    }
    let head_upos = a.upos[h].as_str();
    let aux_like = head_upos == "AUX" || subj_fused;
    match a.label[d].as_str() {
        "comp:pred" => Some("cop"),
        "comp:aux" => Some("aux"),
        "comp:obj@x" if aux_like => Some("aux"),
        "comp:obj@x"
            if (!a.fixed[h] && a.label[h] == INFINITIVAL_MARK)
                || head_upos == "SCONJ"
                || head_upos == "PART" =>
        {
            Some("mark")
        }
        "comp:obj" if head_upos == "ADP" => Some("case"),
        "comp:obj" if aux_like => Some("aux"),
        _ => None,
    }
}

fn is_function(rel: &str) -> bool {
    matches!(rel, "aux" | "cop" | "case" | "mark")
}

pub fn sud_to_ud_with(s: &Sentence, table: &ConversionTable) -> Result<Sentence, ConvertError> {
    let mut a = Arcs::read(s)?;
    let n = a.head.len() - 1;
    for i in 1..=n {
        if !table.knows_sud(&a.label[i]) && a.label[i] != "comp:aux" {
            return Err(unsupported(&a.label[i], i));
        }
    }
    let tok = |i: usize| s.word(i).expect("word exists");
    let subj_fused: Vec<Option<String>> = (0..=n)
        .map(|i| {
            if i == 0 {
                return None;
            }
            let (rel, form) = dropped_rel(tok(i))?;
            (rel == "subj").then(|| other_form(tok(i), form))
        })
        .collect();
    let mut dropped: Vec<Option<String>> = vec![None; n + 1];

    let mut queue: Vec<usize> = a.children(0);
    let mut k = 0;
    while k < queue.len() {
        let mut x = queue[k];
        k += 1;
        loop {
            let found = a
                .children(x)
                .into_iter()
                .filter_map(|c| unflip_rel(&a, x, c, subj_fused[x].is_some()).map(|r| (c, r)))
                .min_by_key(|&(c, _)| (c.abs_diff(x), c));
            let Some((c, rel)) = found else { break };
            let x_was_mark = !a.fixed[x] && a.label[x] == INFINITIVAL_MARK;
            a.promote(c, x);
            if rel == "mark" && x_was_mark {
                a.fixed[c] = true;
                a.label[c] = "xcomp".to_string();
            }
            match &subj_fused[x] {
                Some(other) => {
                    a.set(x, c, "nsubj");
                    dropped[x] = Some(format!("{rel}:{other}"));
                }
                None => a.set(x, c, rel),
            }
            for d in a.children(x) {
                let moves = if a.fixed[d] {
                    is_function(&a.label[d])
                } else {
                    a.label[d] == "subj"
                };
                if moves {
                    a.head[d] = c;
                }
            }
            x = c;
        }
        queue.extend(a.children(x));
    }

    for i in 1..=n {
        if a.fixed[i] {
            continue;
        }
        let label = a.label[i].clone();
        let cands = table.ud_candidates(&label);
        let ud = match cands.len() {
            0 => label,
            1 => cands[0].to_string(),
            _ => pick(&a, i, &cands).to_string(),
        };
        a.label[i] = ud;
        a.fixed[i] = true;
    }
    for i in 1..=n {
        if dropped[i].is_none() {
            if let Some((rel, form)) = dropped_rel(tok(i)) {
                let new = if rel == INFINITIVAL_MARK {
                    "mark".to_string()
                } else {
                    match table.ud_candidates(rel).as_slice() {
                        [only] => only.to_string(),
                        _ => rel.to_string(),
                    }
                };
                dropped[i] = Some(format!("{new}:{form}"));
            }
        }
    }
    a.write(s, &dropped)
}

/// Chooses among UD relations sharing one SUD label, by part of speech.
fn pick<'a>(a: &Arcs, i: usize, cands: &[&'a str]) -> &'a str {
    let dep = a.upos[i].as_str();
    let head = if a.head[i] == 0 { "" } else { a.upos[a.head[i]].as_str() };
    let prefer: &[&str] = match dep {
        "VERB" => &["ccomp", "xcomp", "obj", "obl"],
        "ADJ" => &["amod", "obj", "obl"],
        _ if matches!(head, "NOUN" | "PROPN" | "PRON") => &["nmod", "obj", "obl"],
        _ => &["obj", "obl"],
    };
    prefer
        .iter()
        .find_map(|p| cands.iter().find(|c| *c == p))
        .copied()
        .unwrap_or(cands[0])
}
