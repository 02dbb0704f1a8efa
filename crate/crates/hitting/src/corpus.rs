//! Sentence corpora as spanning-tree hitting set instances.
//!
//! Each sentence becomes the vertex subset of its distinct tokens over a
//! graph whose edges are the co-occurring token pairs. A solution is an
//! induced "grammar" edge set; extracting a spanning tree per sentence gives
//! its undirected dependency parse.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use hitting_core::instance::SolverReport;
use hitting_core::{ConnectivityPolicy, Graph, GreedyOptions, SearchBudget, SthsInstance};
use serde::Serialize;

use crate::{Error, Result};

/// Appended to every sentence with [`CorpusOptions::root_token`].
pub const ROOT_TOKEN: &str = "<root>";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RepeatedWords {
    /// Drop sentences that repeat a token.
    #[default]
    Skip,
    /// Keep the first occurrence of each token.
    Dedupe,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorpusOptions {
    pub lowercase: bool,
    pub strip_punctuation: bool,
    pub repeated: RepeatedWords,
    pub root_token: bool,
}

impl Default for CorpusOptions {
    fn default() -> Self {
        CorpusOptions {
            lowercase: true,
            strip_punctuation: true,
            repeated: RepeatedWords::Skip,
            root_token: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corpus {
    /// Distinct tokens of each kept sentence, in original order.
    pub sentences: Vec<Vec<String>>,
    pub lexicon: BTreeSet<String>,
    /// Sentences dropped for repeating a token.
    pub skipped: usize,
}

fn normalize(raw: &str, options: &CorpusOptions) -> Option<String> {
    let token = if options.strip_punctuation {
        raw.trim_matches(|c: char| !c.is_alphanumeric())
    } else {
        raw
    };
    if token.is_empty() {
        return None;
    }
    Some(if options.lowercase {
        token.to_lowercase()
    } else {
        token.to_owned()
    })
}

impl Corpus {
    /// One sentence per line; blank lines are ignored.
    pub fn parse(text: &str, options: CorpusOptions) -> Result<Self> {
        let mut sentences = Vec::new();
        let mut skipped = 0;
        for line in text.lines() {
            let tokens: Vec<String> = line
                .split_whitespace()
                .filter_map(|t| normalize(t, &options))
                .collect();
            if tokens.is_empty() {
                continue;
            }
            let mut seen = BTreeSet::new();
            let mut distinct: Vec<String> = tokens
                .iter()
                .filter(|t| seen.insert(t.as_str()))
                .cloned()
                .collect();
            if distinct.len() != tokens.len() && options.repeated == RepeatedWords::Skip {
                skipped += 1;
                continue;
            }
            if options.root_token {
                distinct.push(ROOT_TOKEN.to_owned());
            }
            sentences.push(distinct);
        }
        if sentences.is_empty() {
            return Err(Error::Input(format!(
                "corpus is empty after filtering ({skipped} sentence(s) skipped)"
            )));
        }
        let lexicon = sentences.iter().flatten().cloned().collect();
        Ok(Corpus {
            sentences,
            lexicon,
            skipped,
        })
    }

    pub fn load(path: &Path, options: CorpusOptions) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_owned(),
            source,
        })?;
        Self::parse(&text, options)
    }

    /// Vertices are the lexicon, edges every co-occurring token pair with
    /// weight 1, subsets the sentences.
    pub fn to_instance(&self) -> SthsInstance {
        let mut builder =
            Graph::builder(self.lexicon.iter().cloned()).expect("lexicon tokens are distinct");
        let index: BTreeMap<&str, usize> = self
            .lexicon
            .iter()
            .enumerate()
            .map(|(i, t)| (t.as_str(), i))
            .collect();
        let subsets: Vec<Vec<usize>> = self
            .sentences
            .iter()
            .map(|s| s.iter().map(|t| index[t.as_str()]).collect())
            .collect();
        for subset in &subsets {
            for (i, &a) in subset.iter().enumerate() {
                for &b in &subset[i + 1..] {
                    builder.add_edge(a, b, 1.0).expect("distinct tokens");
                }
            }
        }
        SthsInstance::new(builder.build(), subsets)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SolverKind {
    #[default]
    Greedy,
    Exact,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SentenceParse {
    pub tokens: Vec<String>,
    pub edges: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ParseStats {
    pub solver: &'static str,
    #[serde(rename = "R0")]
    pub r0: usize,
    pub harmonic_bound: f64,
    pub steps: usize,
    pub optimal: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ParseOutput {
    pub sentences: Vec<SentenceParse>,
    /// Union of all parse edges, sorted.
    pub grammar: Vec<(String, String)>,
    pub stats: ParseStats,
}

impl ParseOutput {
    /// One line per sentence: `a-b, c-d`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for s in &self.sentences {
            let pairs: Vec<String> = s.edges.iter().map(|(a, b)| format!("{a}-{b}")).collect();
            let _ = writeln!(out, "{}", pairs.join(", "));
        }
        out
    }
}

fn grammar_of(sentences: &[SentenceParse]) -> Vec<(String, String)> {
    let set: BTreeSet<(String, String)> = sentences
        .iter()
        .flat_map(|s| &s.edges)
        .map(|(a, b)| {
            if a <= b {
                (a.clone(), b.clone())
            } else {
                (b.clone(), a.clone())
            }
        })
        .collect();
    set.into_iter().collect()
}

/// Solves the corpus instance and reports one spanning tree per sentence.
pub fn induce(
    corpus: &Corpus,
    solver: SolverKind,
    greedy: GreedyOptions,
    budget: SearchBudget,
) -> Result<ParseOutput> {
    // sentence subsets induce cliques, so they are always connected
    let validated = corpus
        .to_instance()
        .validate(ConnectivityPolicy::RequireConnected)?;
    let solution = match solver {
        SolverKind::Greedy => validated.solve_greedy(false, greedy)?,
        SolverKind::Exact => validated.solve_exact(false, budget)?,
    };
    let graph = validated.graph();
    let sentences: Vec<SentenceParse> = corpus
        .sentences
        .iter()
        .zip(&solution.trees)
        .map(|(tokens, tree)| SentenceParse {
            tokens: tokens.clone(),
            edges: tree
                .iter()
                .map(|&e| {
                    let (a, b) = graph.edge_labels(e);
                    (a.to_owned(), b.to_owned())
                })
                .collect(),
        })
        .collect();
    let r0 = validated.total_rank();
    let stats = match &solution.report {
        SolverReport::Greedy(report) => ParseStats {
            solver: "greedy",
            r0,
            harmonic_bound: report.harmonic_bound,
            steps: report.steps.len(),
            optimal: None,
        },
        SolverReport::Exact(result) => ParseStats {
            solver: "exact",
            r0,
            harmonic_bound: hitting_core::greedy::harmonic(r0),
            steps: 0,
            optimal: Some(result.is_optimal()),
        },
    };
    let grammar = grammar_of(&sentences);
    Ok(ParseOutput {
        sentences,
        grammar,
        stats,
    })
}

/// Links consecutive tokens of every sentence into a path.
pub fn adjacency_baseline(corpus: &Corpus) -> ParseOutput {
    let sentences: Vec<SentenceParse> = corpus
        .sentences
        .iter()
        .map(|tokens| SentenceParse {
            tokens: tokens.clone(),
            edges: tokens
                .windows(2)
                .map(|w| (w[0].clone(), w[1].clone()))
                .collect(),
        })
        .collect();
    let r0 = sentences.iter().map(|s| s.edges.len()).sum();
    let grammar = grammar_of(&sentences);
    ParseOutput {
        stats: ParseStats {
            solver: "adjacency",
            r0,
            harmonic_bound: hitting_core::greedy::harmonic(r0),
            steps: 0,
            optimal: None,
        },
        sentences,
        grammar,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs(items: &[(&str, &str)]) -> Vec<(String, String)> {
        items
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect()
    }

    #[test]
    fn normalizes_question() {
        let c = Corpus::parse("Is that a woof?\n\n", CorpusOptions::default()).unwrap();
        assert_eq!(c.sentences, [["is", "that", "a", "woof"]]);
    }

    #[test]
    fn repeated_words_policy() {
        let text = "I know that you know\nyou know";
        let skip = Corpus::parse(text, CorpusOptions::default()).unwrap();
        assert_eq!(skip.sentences.len(), 1);
        assert_eq!(skip.skipped, 1);
        let dedupe = Corpus::parse(
            text,
            CorpusOptions {
                repeated: RepeatedWords::Dedupe,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(dedupe.sentences[0], ["i", "know", "that", "you"]);
        assert!(Corpus::parse("a a\n", CorpusOptions::default()).is_err());
        assert!(Corpus::parse("\n  \n", CorpusOptions::default()).is_err());
    }

    #[test]
    fn case_punctuation_and_root_flags() {
        let opts = CorpusOptions {
            lowercase: false,
            strip_punctuation: false,
            root_token: true,
            ..Default::default()
        };
        let c = Corpus::parse("Hi there.", opts).unwrap();
        assert_eq!(c.sentences[0], ["Hi", "there.", ROOT_TOKEN]);
    }

    #[test]
    fn shared_pairs_across_sentences() {
        let text = "Her immediate predecessor suffered a nervous breakdown.\n\
                    Her predecessor suffered a stroke.\n\
                    It is a nervous breakdown.";
        let c = Corpus::parse(text, CorpusOptions::default()).unwrap();
        let inst = c.to_instance();
        assert_eq!(inst.subsets.len(), 3);
        let g = &inst.graph;
        let count = |a: &str, b: &str| {
            let (a, b) = (g.vertex_index(a).unwrap(), g.vertex_index(b).unwrap());
            inst.subsets
                .iter()
                .filter(|s| s.contains(&a) && s.contains(&b))
                .count()
        };
        assert_eq!(count("nervous", "breakdown"), 2);
        assert_eq!(count("her", "predecessor"), 2);
        assert_eq!(count("a", "suffered"), 2);
        assert_eq!(count("stroke", "it"), 0);
        assert!(g
            .edge_index(
                g.vertex_index("stroke").unwrap(),
                g.vertex_index("it").unwrap()
            )
            .is_none());
    }

    #[test]
    fn toy_corpus_grammar() {
        let c = Corpus::parse("a b\nb c\na b c", CorpusOptions::default()).unwrap();
        for solver in [SolverKind::Greedy, SolverKind::Exact] {
            let out = induce(
                &c,
                solver,
                GreedyOptions::default(),
                SearchBudget::default(),
            )
            .unwrap();
            assert_eq!(out.grammar, pairs(&[("a", "b"), ("b", "c")]));
            assert_eq!(out.sentences[2].edges, pairs(&[("a", "b"), ("b", "c")]));
        }
    }

    #[test]
    fn duplicate_sentences_do_not_change_optimum() {
        let once = Corpus::parse("a b c\nc d", CorpusOptions::default()).unwrap();
        let twice = Corpus::parse("a b c\nc d\na b c", CorpusOptions::default()).unwrap();
        let size = |c: &Corpus| {
            induce(
                c,
                SolverKind::Exact,
                GreedyOptions::default(),
                SearchBudget::default(),
            )
            .unwrap()
            .grammar
            .len()
        };
        assert_eq!(size(&once), size(&twice));
    }

    #[test]
    fn single_sentence_gets_a_spanning_tree() {
        let c = Corpus::parse("Is that a woof?", CorpusOptions::default()).unwrap();
        let out = induce(
            &c,
            SolverKind::Greedy,
            GreedyOptions::default(),
            SearchBudget::default(),
        )
        .unwrap();
        assert_eq!(out.sentences[0].edges.len(), 3);
        let one = Corpus::parse("hello", CorpusOptions::default()).unwrap();
        let out = induce(
            &one,
            SolverKind::Greedy,
            GreedyOptions::default(),
            SearchBudget::default(),
        )
        .unwrap();
        assert!(out.sentences[0].edges.is_empty());
    }

    #[test]
    fn baseline_paths() {
        let c = Corpus::parse("Is that a woof?", CorpusOptions::default()).unwrap();
        let out = adjacency_baseline(&c);
        assert_eq!(
            out.sentences[0].edges,
            pairs(&[("is", "that"), ("that", "a"), ("a", "woof")])
        );
        assert_eq!(out.to_text(), "is-that, that-a, a-woof\n");
        let dedupe = CorpusOptions {
            repeated: RepeatedWords::Dedupe,
            ..Default::default()
        };
        let out = adjacency_baseline(&Corpus::parse("a b a\nword", dedupe).unwrap());
        assert_eq!(out.sentences[0].edges, pairs(&[("a", "b")]));
        assert!(out.sentences[1].edges.is_empty());
    }
}
