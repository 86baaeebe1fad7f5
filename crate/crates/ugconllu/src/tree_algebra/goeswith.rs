use std::collections::BTreeMap;

use super::graph::DepGraph;

/// A word written with internal whitespace: the first part heads the rest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoeswithSpan {
    pub head: usize,
    /// Ascending.
    pub members: Vec<usize>,
    /// Head and members form one run of consecutive indices.
    pub contiguous: bool,
    /// The head precedes every member.
    pub head_first: bool,
}

/// Groups maximal `goeswith` chains under the first non-`goeswith` ancestor.
pub fn goeswith_spans(g: &DepGraph<'_>) -> Vec<GoeswithSpan> {
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 1..=g.len() {
        if g.relation(i) != "goeswith" {
            continue;
        }
        let mut h = g.head(i);
        while h != 0 && g.relation(h) == "goeswith" {
            h = g.head(h);
        }
        if h != 0 {
            groups.entry(h).or_default().push(i);
        }
    }
    groups
        .into_iter()
        .map(|(head, members)| {
            let lo = head.min(members[0]);
            let hi = head.max(*members.last().expect("non-empty"));
            GoeswithSpan {
                contiguous: hi - lo == members.len(),
                head_first: head < members[0],
                head,
                members,
            }
        })
        .collect()
}
