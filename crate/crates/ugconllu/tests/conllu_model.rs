mod common;

use common::{files, one, read};
use proptest::prelude::*;
use ugconllu::conllu_model::{
    get_feat, get_misc, parse_bytes, parse_document, serialize_document, Feats, Misc, ParseErrorKind,
    Sentence, Token, TokenId,
};

fn kind(input: &str) -> ParseErrorKind {
    parse_document(input).unwrap_err().kind
}

const ROW: &str = "1\thi\thi\tINTJ\t_\t_\t0\troot\t_\t_\n";

#[test]
fn oversplit_fixture_fields() {
    let s = one("figures/oversplit.conllu");
    let w1 = s.word(1).unwrap();
    let w2 = s.word(2).unwrap();
    assert_eq!((w1.form.as_str(), w1.lemma.as_str(), w1.upos.as_str()), ("gele", "gel", "VERB"));
    assert_eq!((w2.form.as_str(), w2.lemma.as_str(), w2.upos.as_str()), ("bilirim", "_", "X"));
    assert_eq!(s.sent_id(), Some("gele-bilirim"));
}

#[test]
fn empty_input_has_no_sentences() {
    assert_eq!(parse_document("").unwrap(), vec![]);
}

#[test]
fn head_out_of_range() {
    let mut doc = String::new();
    for i in 1..=5 {
        let (h, rel) = if i == 1 { ("0", "root") } else if i == 3 { ("9", "dep") } else { ("1", "dep") };
        doc.push_str(&format!("{i}\tw\tw\tX\t_\t_\t{h}\t{rel}\t_\t_\n"));
    }
    doc.push('\n');
    let e = parse_document(&doc).unwrap_err();
    assert_eq!(e.kind, ParseErrorKind::HeadOutOfRange { head: 9, words: 5 });
    assert_eq!(e.line, 3);
}

#[test]
fn malformed_rows_are_errors() {
    assert_eq!(kind(&read("cli/nine_columns.conllu")), ParseErrorKind::FieldCount(9));
    assert!(matches!(kind("x\thi\thi\tINTJ\t_\t_\t0\troot\t_\t_\n\n"), ParseErrorKind::BadId(_)));
    assert!(matches!(kind("01\thi\thi\tINTJ\t_\t_\t0\troot\t_\t_\n\n"), ParseErrorKind::BadId(_)));
    assert!(matches!(kind("1\thi\thi\tINTJ\t_\t_\tx\troot\t_\t_\n\n"), ParseErrorKind::BadHead(_)));
    assert_eq!(kind(&format!("{ROW}{ROW}\n")), ParseErrorKind::DuplicateIndex(1));
    assert_eq!(
        kind("1\thi\thi\tINTJ\t_\t_\t0\troot\t_\t_\n3\tx\tx\tX\t_\t_\t1\tdep\t_\t_\n\n"),
        ParseErrorKind::NonConsecutive { expected: 2, found: 3 }
    );
    assert_eq!(
        kind("1\thi\thi\tINTJ\t_\t_\t1\troot\t_\t_\n\n"),
        ParseErrorKind::RootMismatch(1)
    );
    assert!(matches!(kind("1\thi\thi\tINTJ\t_\tB=1|A=2\t0\troot\t_\t_\n\n"), ParseErrorKind::Feats(_)));
    assert!(matches!(kind("1\thi\thi\tINTJ\t_\t_\t0\troot\t_\ta||b\n\n"), ParseErrorKind::Misc(_)));
    assert_eq!(kind(ROW), ParseErrorKind::MissingBlankLine);
    assert_eq!(kind(&format!("{ROW}\n\n")), ParseErrorKind::MissingBlankLine);
    assert_eq!(kind("# text = a\n# text = b\n1\ta\ta\tX\t_\t_\t0\troot\t_\t_\n\n"), ParseErrorKind::DuplicateMeta("text".into()));
    assert_eq!(kind(&format!("{ROW}# late\n\n")), ParseErrorKind::CommentAfterTokens);
    assert_eq!(kind("# only a comment\n\n"), ParseErrorKind::EmptySentence);
    assert_eq!(parse_bytes(b"\xff\n\n").unwrap_err().kind, ParseErrorKind::NotUtf8);
}

#[test]
fn multiword_ranges() {
    let two = "1\tdu\tde\tADP\t_\t_\t0\troot\t_\t_\n2\tx\tle\tDET\t_\t_\t1\tdet\t_\t_\n";
    let ok = format!("1-2\tdu\t_\t_\t_\t_\t_\t_\t_\t_\n{two}\n");
    let s = &parse_document(&ok).unwrap()[0];
    assert_eq!(s.tokens[0].id, TokenId::Range(1, 2));
    assert_eq!(s.word_count(), 2);
    let overlap = format!("1-2\tdu\t_\t_\t_\t_\t_\t_\t_\t_\n1-2\tdu\t_\t_\t_\t_\t_\t_\t_\t_\n{two}\n");
    assert!(matches!(kind(&overlap), ParseErrorKind::OverlappingRange(_)));
    let beyond = format!("1-3\tdu\t_\t_\t_\t_\t_\t_\t_\t_\n{two}\n");
    assert!(matches!(kind(&beyond), ParseErrorKind::RangeOutOfBounds(_)));
    let annotated = format!("1-2\tdu\tde\t_\t_\t_\t_\t_\t_\t_\n{two}\n");
    assert!(matches!(kind(&annotated), ParseErrorKind::RangeColumns(_)));
}

#[test]
fn empty_nodes_are_kept() {
    let doc = "1\ta\ta\tX\t_\t_\t0\troot\t_\t_\n1.1\tb\tb\tX\t_\t_\t_\t_\t0:root\t_\n2\tc\tc\tX\t_\t_\t1\tdep\t_\t_\n\n";
    let s = parse_document(doc).unwrap();
    assert_eq!(s[0].tokens[1].id, TokenId::Empty(1, 1));
    assert_eq!(serialize_document(&s), doc);
}

#[test]
fn crlf_is_normalized() {
    let doc = "# text = hi\r\n1\thi\thi\tINTJ\t_\t_\t0\troot\t_\t_\r\n\r\n";
    let s = parse_document(doc).unwrap();
    assert_eq!(serialize_document(&s), doc.replace("\r\n", "\n"));
}

#[test]
fn every_fixture_round_trips() {
    let all = files("");
    assert!(all.len() > 80);
    for f in all {
        let text = read(&f);
        let Ok(doc) = parse_document(&text) else {
            assert_eq!(f, "cli/nine_columns.conllu");
            continue;
        };
        assert_eq!(serialize_document(&doc), text, "{f}");
    }
}

#[test]
fn feats_serialize_sorted() {
    let mut t = Token::word(1, "u");
    t.feats = [("Typo", "Yes"), ("Abbr", "Yes")].into_iter().collect();
    assert_eq!(t.feats.to_string(), "Abbr=Yes|Typo=Yes");
    t.feats = Feats::new();
    assert_eq!(t.feats.to_string(), "_");
    // case-insensitive order
    let f: Feats = [("lower", "1"), ("Upper", "2"), ("Abbr", "Yes")].into_iter().collect();
    assert_eq!(f.to_string(), "Abbr=Yes|lower=1|Upper=2");
}

#[test]
fn equal_sentences_serialize_identically() {
    let mk = |order: &[(&str, &str)]| {
        let mut t = Token::word(1, "u");
        t.head = Some(0);
        t.deprel = "root".into();
        t.feats = order.iter().copied().collect();
        Sentence::new(vec![t])
    };
    let a = mk(&[("Typo", "Yes"), ("Abbr", "Yes")]);
    let b = mk(&[("Abbr", "Yes"), ("Typo", "Yes")]);
    assert_eq!(a, b);
    assert_eq!(serialize_document(&[a]), serialize_document(&[b]));
}

#[test]
fn misc_lookup() {
    let mut t = Token::word(1, "x");
    t.misc = Misc::parse("CSType=INTRA|LangID=EN").unwrap();
    assert_eq!(get_misc(&t, "LangID"), Some("EN"));
    assert_eq!(get_misc(&t, "langid"), None);
    assert_eq!(get_misc(&t, "Foreign"), None);
    t.misc = Misc::parse("SpaceAfter=No").unwrap();
    assert_eq!(get_misc(&t, "SpaceAfter"), Some("No"));
    t.misc = Misc::parse("Flag|B=1").unwrap();
    assert!(t.misc.contains("Flag"));
    assert_eq!(t.misc.to_string(), "Flag|B=1");
    assert_eq!(get_feat(&t, "Typo"), None);
}

#[test]
fn parsed_heads_index_words() {
    for f in files("figures").into_iter().chain(files("sud")) {
        for s in common::load(&f) {
            let n = s.word_count();
            for (_, t) in s.words() {
                assert!(t.head.is_some_and(|h| h <= n), "{f}");
            }
        }
    }
}

// Random valid sentences, rendered straight to text so the serializer is not
// its own oracle.

const FEAT_KEYS: &[&str] = &["Abbr", "Case", "Foreign", "Number", "Person", "Typo", "VerbForm"];
const RELS: &[&str] = &["nsubj", "obj", "discourse", "parataxis:hashtag", "punct", "det"];
const FORM_CHARS: &str = "abcdefgzüé#@:)<3♥😀.?!-";

fn field() -> impl Strategy<Value = String> {
    prop::collection::vec(prop::sample::select(FORM_CHARS.chars().collect::<Vec<_>>()), 1..6)
        .prop_map(|v| v.into_iter().collect())
}

fn feats_col() -> impl Strategy<Value = String> {
    prop::sample::subsequence(FEAT_KEYS.to_vec(), 0..4).prop_map(|ks| {
        if ks.is_empty() {
            return "_".to_string();
        }
        ks.iter().map(|k| format!("{k}=Yes")).collect::<Vec<_>>().join("|")
    })
}

fn misc_col() -> impl Strategy<Value = String> {
    let entry = prop_oneof![
        Just("SpaceAfter=No".to_string()),
        Just("NonCan=Stretch".to_string()),
        Just("Flag".to_string()),
        "[A-Z][a-z]{1,5}=[a-z0-9]{1,4}",
    ];
    prop::collection::vec(entry, 0..4).prop_map(|v| if v.is_empty() { "_".into() } else { v.join("|") })
}

fn sentence_text() -> impl Strategy<Value = String> {
    (1usize..12)
        .prop_flat_map(|n| {
            (
                Just(n),
                0..n,
                prop::collection::vec(any::<prop::sample::Index>(), n),
                prop::collection::vec((field(), field(), feats_col(), misc_col(), prop::sample::select(RELS)), n),
                prop::option::of("[a-z0-9-]{1,8}"),
                any::<bool>(),
            )
        })
        .prop_map(|(n, root, picks, cols, sent_id, comment)| {
            let mut out = String::new();
            if comment {
                out.push_str("# newdoc\n");
            }
            if let Some(id) = sent_id {
                out.push_str(&format!("# sent_id = {id}\n"));
            }
            // every non-root word attaches to a word of lower rank, so the result is a tree
            let rank: Vec<usize> = (0..n).map(|i| (i + n - root) % n).collect();
            for (i, (form, lemma, feats, misc, rel)) in cols.into_iter().enumerate() {
                let (head, rel) = if i == root {
                    (0, "root")
                } else {
                    let lower: Vec<usize> = (0..n).filter(|&j| rank[j] < rank[i]).collect();
                    (picks[i].get(&lower) + 1, rel)
                };
                out.push_str(&format!(
                    "{}\t{form}\t{lemma}\tX\t_\t{feats}\t{head}\t{rel}\t_\t{misc}\n",
                    i + 1
                ));
            }
            out.push('\n');
            out
        })
}

fn document() -> impl Strategy<Value = String> {
    prop::collection::vec(sentence_text(), 1..4).prop_map(|v| v.concat())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn random_documents_round_trip(doc in document()) {
        let parsed = parse_document(&doc).unwrap();
        prop_assert_eq!(serialize_document(&parsed), doc);
    }
}
