mod common;

use common::{arcs, files, load, one, read};
use ugconllu::conllu_model::{parse_document, Sentence};
use ugconllu::sud_bridge::{
    classify_fusion, contract_span, is_passthrough, sud_to_ud, sud_to_ud_with, ud_to_sud, ConversionTable,
    ConvertError, Framework, FusionCase, FusionError, TableError,
};

fn sud(name: &str) -> Sentence {
    one(&format!("sud/{name}.conllu"))
}

/// The uncontracted UD/SUD pairs plus the longer sentence.
const PAIRS: &[(&str, &str)] = &[
    ("gonna_ud_uncontracted", "gonna_sud_uncontracted"),
    ("im_ud_uncontracted", "im_sud_uncontracted"),
    ("iam_ud_uncontracted", "iam_sud_uncontracted"),
    ("nico_ud", "nico_sud"),
];

/// Contracted pairs: the fused token carries its dropped relation in MISC.
const CONTRACTED: &[(&str, &str)] = &[
    ("gonna_ud_contracted", "gonna_sud_contracted"),
    ("im_ud_contracted", "im_sud_contracted"),
    ("iam_ud_contracted", "iam_sud_contracted"),
];

#[test]
fn ud_to_sud_reproduces_the_sud_trees() {
    for (u, s) in PAIRS {
        let got = ud_to_sud(&sud(u)).unwrap();
        assert_eq!(arcs(&got), arcs(&sud(s)), "{u}");
        assert_eq!(got.tokens, sud(s).tokens, "{u}");
    }
}

#[test]
fn sud_to_ud_inverts() {
    for (u, s) in PAIRS {
        let got = sud_to_ud(&sud(s)).unwrap();
        assert_eq!(arcs(&got), arcs(&sud(u)), "{s}");
        assert_eq!(got.tokens, sud(u).tokens, "{s}");
    }
}

#[test]
fn contracted_trees_convert_both_ways() {
    // the fused I'm is a pronoun in one figure and an auxiliary in the other,
    // so only the arcs and the dropped relations are compared
    let dropped = |s: &Sentence| -> Vec<Option<String>> {
        s.words().map(|(_, t)| t.get_misc("DroppedRel").map(str::to_string)).collect()
    };
    for (u, s) in CONTRACTED {
        let got = ud_to_sud(&sud(u)).unwrap();
        assert_eq!((arcs(&got), dropped(&got)), (arcs(&sud(s)), dropped(&sud(s))), "{u}");
        let got = sud_to_ud(&sud(s)).unwrap();
        assert_eq!((arcs(&got), dropped(&got)), (arcs(&sud(u)), dropped(&sud(u))), "{s}");
    }
}

#[test]
fn round_trips_on_fixtures() {
    for f in files("sud") {
        // the idk SUD trees use comp:aux, which has no way back to the UD objects
        if f.contains("idk_sud") {
            continue;
        }
        for s in load(&f) {
            let back = if f.contains("_sud") {
                ud_to_sud(&sud_to_ud(&s).unwrap()).unwrap()
            } else {
                sud_to_ud(&ud_to_sud(&s).unwrap()).unwrap()
            };
            assert_eq!(back, s, "{f}");
        }
    }
}

#[test]
fn idk_sud_trees() {
    // the uncontracted figure labels `what` with the UD `obj`
    let unc = load("sud/idk_sud_uncontracted.conllu");
    assert_eq!(
        sud_to_ud(&unc[0]),
        Err(ConvertError::UnsupportedRelation { deprel: "obj".into(), token: 5 })
    );
    // comp:aux reads as an auxiliary chain, so the contracted tree does not
    // come back as the UD figure; that reanalysis is left to the annotator
    let con = load("sud/idk_sud_contracted.conllu");
    let ud = load("sud/idk_ud_contracted.conllu");
    let got = sud_to_ud(&con[0]).unwrap();
    assert_eq!(got.word(4).unwrap().deprel, "root");
    assert_ne!(arcs(&got), arcs(&ud[0]));
}

#[test]
fn contraction_reproduces_the_contracted_fixtures() {
    let cases: &[(&str, &[usize], &str, Option<usize>, &str)] = &[
        ("gonna_ud_uncontracted", &[3, 4], "gonna", None, "gonna_ud_contracted"),
        ("gonna_sud_uncontracted", &[3, 4], "gonna", None, "gonna_sud_contracted"),
        ("im_ud_uncontracted", &[3, 4], "im", Some(3), "im_ud_contracted"),
        ("im_ud_uncontracted", &[3, 4], "im", None, "im_ud_contracted"),
        ("im_sud_uncontracted", &[3, 4], "im", None, "im_sud_contracted"),
        ("iam_ud_uncontracted", &[1, 2], "I'm", None, "iam_ud_contracted"),
        ("iam_sud_uncontracted", &[1, 2], "I'm", None, "iam_sud_contracted"),
    ];
    for (from, span, form, primary, to) in cases {
        let got = contract_span(&sud(from), span, form, *primary).unwrap();
        let want = sud(to);
        assert_eq!((&got.metadata, &got.tokens), (&want.metadata, &want.tokens), "{from}");
    }
}

#[test]
fn fusion_cases() {
    let cases = [
        ("gonna_ud_uncontracted", [3, 4], Framework::Ud, FusionCase::HeadAndGrandchild),
        ("gonna_sud_uncontracted", [3, 4], Framework::Sud, FusionCase::Gov),
        ("iam_ud_uncontracted", [1, 2], Framework::Ud, FusionCase::SharedDependents),
        ("iam_sud_uncontracted", [1, 2], Framework::Sud, FusionCase::Gov),
        ("im_ud_uncontracted", [3, 4], Framework::Ud, FusionCase::SharedDependents),
        ("im_sud_uncontracted", [3, 4], Framework::Sud, FusionCase::HeadAndGrandchild),
    ];
    for (f, span, fw, case) in cases {
        assert_eq!(classify_fusion(&sud(f), &span, fw), case, "{f}");
    }
    // Er ging: subject and verb, a plain governor
    assert_eq!(classify_fusion(&sud("im_ud_uncontracted"), &[1, 2], Framework::Ud), FusionCase::Gov);
    // ging in: the preposition hangs off ging's object
    assert_eq!(classify_fusion(&sud("im_ud_uncontracted"), &[2, 3], Framework::Ud), FusionCase::HeadAndGrandchild);
    assert_eq!(classify_fusion(&sud("im_ud_uncontracted"), &[4, 5], Framework::Ud), FusionCase::SharedDependents);
}

fn tree(rows: &[(&str, &str, usize, &str)]) -> Sentence {
    let mut text = String::new();
    for (i, (form, upos, head, rel)) in rows.iter().enumerate() {
        text.push_str(&format!("{}\t{form}\t{form}\t{upos}\t_\t_\t{head}\t{rel}\t_\t_\n", i + 1));
    }
    text.push('\n');
    parse_document(&text).unwrap().remove(0)
}

#[test]
fn contraction_errors() {
    let s = sud("im_ud_uncontracted");
    assert!(matches!(contract_span(&s, &[3, 5], "x", None), Err(FusionError::NonAdjacentSpan(_))));
    assert!(matches!(contract_span(&s, &[3], "x", None), Err(FusionError::NonAdjacentSpan(_))));
    assert!(matches!(contract_span(&s, &[6, 7], "x", None), Err(FusionError::NonAdjacentSpan(_))));
    // two adjectives sharing a head: no pronoun or adposition to keep
    let adj = tree(&[("big", "ADJ", 3, "amod"), ("red", "ADJ", 3, "amod"), ("car", "NOUN", 0, "root")]);
    assert!(matches!(contract_span(&adj, &[1, 2], "bigred", None), Err(FusionError::UnresolvedPrimary(_))));
    assert!(contract_span(&adj, &[1, 2], "bigred", Some(2)).is_ok());
    // a and c hang off different heads
    let far = tree(&[("a", "X", 3, "dep"), ("b", "X", 4, "dep"), ("c", "X", 0, "root"), ("d", "X", 3, "dep")]);
    assert_eq!(classify_fusion(&far, &[1, 2], Framework::Ud), FusionCase::Unrelated);
    assert!(matches!(contract_span(&far, &[1, 2], "ab", None), Err(FusionError::Unrelated(_))));
    let ranged = parse_document(
        "1-2\tdu\t_\t_\t_\t_\t_\t_\t_\t_\n1\tde\tde\tADP\t_\t_\t3\tcase\t_\t_\n2\tle\tle\tDET\t_\t_\t3\tdet\t_\t_\n3\tpain\tpain\tNOUN\t_\t_\t0\troot\t_\t_\n\n",
    )
    .unwrap()
    .remove(0);
    assert!(matches!(contract_span(&ranged, &[2, 3], "x", None), Err(FusionError::OverlapsMultiword(_))));
    let cyc = tree(&[("a", "X", 2, "dep"), ("b", "X", 1, "dep"), ("c", "X", 0, "root")]);
    assert_eq!(contract_span(&cyc, &[1, 2], "ab", None), Err(FusionError::NotATree));
}

#[test]
fn contraction_renumbers_later_words() {
    let s = sud("im_ud_uncontracted");
    let got = contract_span(&s, &[3, 4], "im", None).unwrap();
    assert_eq!(got.word_count(), 5);
    assert_eq!(got.text(), Some("Er ging im gleichen Augenblick"));
    assert_eq!(got.word(4).unwrap().head, Some(5));
}

#[test]
fn uncovered_relation_is_rejected() {
    let s = one("cli/csubj.conllu");
    match ud_to_sud(&s) {
        Err(ConvertError::UnsupportedRelation { deprel, .. }) => assert_eq!(deprel, "csubj"),
        other => panic!("{other:?}"),
    }
    let odd = tree(&[("a", "X", 0, "root"), ("b", "X", 1, "comp:weird")]);
    assert!(matches!(sud_to_ud(&odd), Err(ConvertError::UnsupportedRelation { .. })));
}

#[test]
fn passthrough_only_tree_is_unchanged() {
    let s = tree(&[("Hi", "INTJ", 0, "root"), ("!", "PUNCT", 1, "punct")]);
    assert_eq!(ud_to_sud(&s).unwrap(), s);
    assert_eq!(sud_to_ud(&s).unwrap(), s);
    assert!(is_passthrough("parataxis:hashtag"));
    assert!(is_passthrough("discourse"));
    assert!(!is_passthrough("nsubj"));
}

#[test]
fn non_tree_input_is_rejected() {
    let s = tree(&[("a", "X", 2, "dep"), ("b", "X", 1, "dep"), ("c", "X", 0, "root")]);
    assert!(matches!(ud_to_sud(&s), Err(ConvertError::NotATree(_))));
}

#[test]
fn custom_table() {
    let table = ConversionTable::parse("nsubj\tsubj\tno\nobj\tcomp:obj\tno\n").unwrap();
    let s = tree(&[("I", "PRON", 2, "subj"), ("see", "VERB", 0, "root"), ("it", "PRON", 2, "comp:obj")]);
    let ud = sud_to_ud_with(&s, &table).unwrap();
    let rels: Vec<_> = ud.words().map(|(_, t)| t.deprel.clone()).collect();
    assert_eq!(rels, ["nsubj", "root", "obj"]);
    assert!(matches!(ConversionTable::parse("nsubj\tsubj\n"), Err(TableError::Syntax { .. })));
    assert!(matches!(ConversionTable::parse("nsubj\tsubj\tmaybe\n"), Err(TableError::Syntax { .. })));
    assert!(ConversionTable::load(std::path::Path::new("/nonexistent/table.tsv")).is_err());
}

#[test]
fn conversion_keeps_non_arc_columns() {
    let s = sud("nico_ud");
    let got = ud_to_sud(&s).unwrap();
    for ((_, a), (_, b)) in s.words().zip(got.words()) {
        assert_eq!((&a.form, &a.lemma, &a.upos, &a.feats, &a.deps), (&b.form, &b.lemma, &b.upos, &b.feats, &b.deps));
    }
    assert_eq!(got.metadata, s.metadata);
    assert!(!read("sud/nico_ud.conllu").is_empty());
}
