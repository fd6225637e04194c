/// The shipped example presentations, by name.
pub const CORPUS: &[(&str, &str)] = &[
    ("trunc2", include_str!("../../corpus/trunc2.alg")),
    ("trunc3", include_str!("../../corpus/trunc3.alg")),
    ("trunc4", include_str!("../../corpus/trunc4.alg")),
    ("poly2", include_str!("../../corpus/poly2.alg")),
    ("free2", include_str!("../../corpus/free2.alg")),
    ("mixed", include_str!("../../corpus/mixed.alg")),
    ("weighted", include_str!("../../corpus/weighted.alg")),
    ("nonkoszul", include_str!("../../corpus/nonkoszul.alg")),
    ("sym_2_1", include_str!("../../corpus/sym_2_1.alg")),
];

pub fn corpus_text(name: &str) -> Option<&'static str> {
    CORPUS.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

/// Whether the shipped algebra is expected to be reported multi-Koszul.
pub fn expected_multikoszul(name: &str) -> bool {
    name != "nonkoszul"
}
