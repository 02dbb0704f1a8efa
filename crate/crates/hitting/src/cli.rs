//! `hitting` command line.
//!
//! Exit status: 0 on success, 1 for invalid or infeasible input (including
//! usage errors), 2 for internal errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use hitting_core::greedy::Scan;
use hitting_core::random::{generate_random_instance, RandomInstanceParams};
use hitting_core::reductions::{
    brute_force_vertex_cover, check_certificate, reduce_hitting_set_weighted,
    reduce_vertex_cover_unweighted, CertificateCheck, Identity, ReductionCertificate,
    ReductionSource, MAX_SOURCE_BRUTE_FORCE,
};
use hitting_core::{ConnectivityPolicy, GreedyOptions, ProfitEvaluation, SearchBudget, TieBreak};
use serde_json::{json, Value};

use crate::corpus::{adjacency_baseline, induce, Corpus, CorpusOptions, RepeatedWords, SolverKind};
use crate::format::{
    read_json, solution_json, to_stable_json, HittingSetFile, InstanceFile, SolutionEdges,
};
use crate::{Error, Result};

pub const DEFAULT_SEED: u64 = 1;

#[derive(Debug, Parser)]
#[command(
    name = "hitting",
    version,
    about = "Minimum spanning-tree hitting sets: greedy, exact, corpus induction"
)]
pub struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Whether every subset must induce a connected subgraph.
    #[arg(long, global = true, value_enum, default_value_t = Policy::RequireConnected)]
    pub policy: Policy,
    /// Which element wins among equal greedy scores.
    #[arg(long, global = true, value_enum, default_value_t = Tie::Lowest)]
    pub tie_break: Tie,
    /// `ratio` selects by profit per unit edge weight (and exact minimises
    /// weight); `unit` ignores edge weights.
    #[arg(long, global = true, value_enum, default_value_t = WeightRule::Ratio)]
    pub weighted_rule: WeightRule,
    /// Write the result here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Policy {
    RequireConnected,
    AllowForest,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Tie {
    Lowest,
    Highest,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WeightRule {
    Ratio,
    Unit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Repeated {
    Skip,
    Dedupe,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Solver {
    Greedy,
    Exact,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReduceFrom {
    HittingSet,
    VertexCover,
}

#[derive(Debug, Args)]
pub struct BudgetArgs {
    #[arg(long, default_value_t = SearchBudget::default().max_nodes)]
    pub max_nodes: u64,
    #[arg(long, default_value_t = SearchBudget::default().max_ground)]
    pub max_ground: usize,
}

impl BudgetArgs {
    fn budget(&self) -> SearchBudget {
        SearchBudget {
            max_ground: self.max_ground,
            max_nodes: self.max_nodes,
        }
    }
}

#[derive(Debug, Args)]
pub struct CorpusArgs {
    pub corpus: PathBuf,
    #[arg(long)]
    pub keep_case: bool,
    #[arg(long)]
    pub keep_punctuation: bool,
    #[arg(long, value_enum, default_value_t = Repeated::Skip)]
    pub repeated: Repeated,
    /// Append an explicit root token to every sentence.
    #[arg(long)]
    pub root_token: bool,
}

impl CorpusArgs {
    fn load(&self) -> Result<Corpus> {
        let corpus = Corpus::load(
            &self.corpus,
            CorpusOptions {
                lowercase: !self.keep_case,
                strip_punctuation: !self.keep_punctuation,
                repeated: match self.repeated {
                    Repeated::Skip => RepeatedWords::Skip,
                    Repeated::Dedupe => RepeatedWords::Dedupe,
                },
                root_token: self.root_token,
            },
        )?;
        if corpus.skipped > 0 {
            eprintln!(
                "warning: skipped {} sentence(s) with repeated words",
                corpus.skipped
            );
        }
        Ok(corpus)
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Greedy solution of an instance file.
    Solve {
        instance: PathBuf,
        /// Rescan every candidate each step instead of the lazy heap.
        #[arg(long)]
        naive: bool,
        /// Recompute ranks from scratch instead of incremental union-find.
        #[arg(long)]
        fresh: bool,
    },
    /// Exact optimum of a small instance.
    Exact {
        instance: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Induce one undirected dependency tree per corpus sentence.
    Induce {
        #[command(flatten)]
        corpus: CorpusArgs,
        #[arg(long, value_enum, default_value_t = Solver::Greedy)]
        solver: Solver,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Parse each sentence as the path of adjacent words.
    Baseline {
        #[command(flatten)]
        corpus: CorpusArgs,
    },
    /// Build a hardness gadget instance with its optimum identity.
    Reduce {
        source: PathBuf,
        #[arg(long, value_enum)]
        from: ReduceFrom,
        /// Also write the bare gadget instance here.
        #[arg(long)]
        instance_output: Option<PathBuf>,
        /// Solve both sides exactly and check the identity.
        #[arg(long)]
        check: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Check that a solution contains a spanning tree for every subset.
    Verify {
        instance: PathBuf,
        solution: PathBuf,
    },
    /// Random instance with connected subsets.
    Gen {
        #[arg(long, default_value_t = 6)]
        vertices: usize,
        #[arg(long, default_value_t = 4)]
        subsets: usize,
        #[arg(long, default_value_t = 2)]
        min_size: usize,
        #[arg(long, default_value_t = 4)]
        max_size: usize,
        #[arg(long, default_value_t = 0.8)]
        density: f64,
    },
}

/// Rendered output plus the exit status it implies.
pub struct Outcome {
    pub text: String,
    pub status: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, status: 0 }
    }
}

impl Cli {
    fn policy(&self) -> ConnectivityPolicy {
        match self.policy {
            Policy::RequireConnected => ConnectivityPolicy::RequireConnected,
            Policy::AllowForest => ConnectivityPolicy::AllowForest,
        }
    }

    fn greedy_options(&self) -> GreedyOptions {
        GreedyOptions {
            tie_break: match self.tie_break {
                Tie::Lowest => TieBreak::LowestIndex,
                Tie::Highest => TieBreak::HighestIndex,
            },
            ..Default::default()
        }
    }

    fn load_instance(&self, path: &Path) -> Result<hitting_core::ValidatedInstance> {
        let file: InstanceFile = read_json(path)?;
        let validated = file.to_instance()?.validate(self.policy())?;
        for warning in validated.warnings() {
            eprintln!("warning: {warning}");
        }
        Ok(validated)
    }

    fn weighted(&self, validated: &hitting_core::ValidatedInstance) -> bool {
        self.weighted_rule == WeightRule::Ratio && !validated.graph().is_unweighted()
    }

    pub fn run(&self) -> Result<Outcome> {
        match &self.command {
            Command::Solve {
                instance,
                naive,
                fresh,
            } => {
                let validated = self.load_instance(instance)?;
                let options = GreedyOptions {
                    scan: if *naive { Scan::Naive } else { Scan::Lazy },
                    evaluation: if *fresh {
                        ProfitEvaluation::Fresh
                    } else {
                        ProfitEvaluation::Incremental
                    },
                    ..self.greedy_options()
                };
                let solution = validated.solve_greedy(self.weighted(&validated), options)?;
                Ok(Outcome::ok(self.render_solution(
                    &validated,
                    &solution_json(&validated, &solution),
                )))
            }
            Command::Exact { instance, budget } => {
                let validated = self.load_instance(instance)?;
                let solution = validated.solve_exact(self.weighted(&validated), budget.budget())?;
                Ok(Outcome::ok(self.render_solution(
                    &validated,
                    &solution_json(&validated, &solution),
                )))
            }
            Command::Induce {
                corpus,
                solver,
                budget,
            } => {
                let corpus = corpus.load()?;
                let kind = match solver {
                    Solver::Greedy => SolverKind::Greedy,
                    Solver::Exact => SolverKind::Exact,
                };
                let parses = induce(&corpus, kind, self.greedy_options(), budget.budget())?;
                Ok(Outcome::ok(match self.format {
                    Format::Json => to_stable_json(&parses),
                    Format::Text => parses.to_text(),
                }))
            }
            Command::Baseline { corpus } => {
                let parses = adjacency_baseline(&corpus.load()?);
                Ok(Outcome::ok(match self.format {
                    Format::Json => to_stable_json(&parses),
                    Format::Text => parses.to_text(),
                }))
            }
            Command::Reduce {
                source,
                from,
                instance_output,
                check,
                budget,
            } => self.reduce(
                source,
                *from,
                instance_output.as_ref(),
                *check,
                budget.budget(),
            ),
            Command::Verify { instance, solution } => {
                let validated = self.load_instance(instance)?;
                let edges = read_json::<SolutionEdges>(solution)?.resolve(validated.graph())?;
                let report = validated.verify(&edges)?;
                let graph = validated.graph();
                let deficits: Vec<Value> = report
                    .deficits
                    .iter()
                    .map(|d| {
                        let labels: Vec<&str> = validated.instance().subsets[d.matroid]
                            .iter()
                            .map(|&v| graph.label(v))
                            .collect();
                        json!({"subset": d.matroid, "vertices": labels, "missing": d.missing})
                    })
                    .collect();
                let text = match self.format {
                    Format::Json => to_stable_json(
                        &json!({"feasible": report.feasible(), "deficits": deficits}),
                    ),
                    Format::Text if report.feasible() => "feasible\n".to_owned(),
                    Format::Text => {
                        let mut out = String::from("infeasible\n");
                        for d in &deficits {
                            out.push_str(&format!(
                                "subset {} {} missing {}\n",
                                d["subset"], d["vertices"], d["missing"]
                            ));
                        }
                        out
                    }
                };
                Ok(Outcome {
                    text,
                    status: if report.feasible() { 0 } else { 1 },
                })
            }
            Command::Gen {
                vertices,
                subsets,
                min_size,
                max_size,
                density,
            } => {
                let params = RandomInstanceParams {
                    seed: self.seed,
                    vertices: *vertices,
                    subsets: *subsets,
                    min_subset: *min_size,
                    max_subset: *max_size,
                    edge_density: *density,
                };
                let instance = generate_random_instance(&params)?;
                Ok(Outcome::ok(to_stable_json(&InstanceFile::from_instance(
                    &instance,
                ))))
            }
        }
    }

    fn render_solution(
        &self,
        validated: &hitting_core::ValidatedInstance,
        value: &Value,
    ) -> String {
        match self.format {
            Format::Json => to_stable_json(value),
            Format::Text => {
                let pairs = |v: &Value| -> String {
                    v.as_array()
                        .into_iter()
                        .flatten()
                        .map(|p| {
                            format!(
                                "{}-{}",
                                p[0].as_str().unwrap_or(""),
                                p[1].as_str().unwrap_or("")
                            )
                        })
                        .collect::<Vec<_>>()
                        .join(", ")
                };
                let mut out = format!(
                    "size {} weight {} R0 {}\nedges: {}\n",
                    value["size"],
                    value["weight"],
                    validated.total_rank(),
                    pairs(&value["edges"])
                );
                for (i, tree) in value["trees"].as_array().into_iter().flatten().enumerate() {
                    out.push_str(&format!("tree {i}: {}\n", pairs(tree)));
                }
                out
            }
        }
    }

    fn reduce(
        &self,
        source: &Path,
        from: ReduceFrom,
        instance_output: Option<&PathBuf>,
        check: bool,
        budget: SearchBudget,
    ) -> Result<Outcome> {
        let cert = match from {
            ReduceFrom::HittingSet => {
                reduce_hitting_set_weighted(&read_json::<HittingSetFile>(source)?.to_instance()?)?
            }
            ReduceFrom::VertexCover => {
                reduce_vertex_cover_unweighted(&read_json::<InstanceFile>(source)?.graph()?)?
            }
        };
        let instance_file = InstanceFile::from_instance(&cert.instance);
        if let Some(path) = instance_output {
            write_file(path, &to_stable_json(&instance_file))?;
        }
        let mut certificate = certificate_json(&cert)?;
        let mut status = 0;
        if check {
            let verdict = match check_certificate(&cert, budget)? {
                CertificateCheck::Holds { gadget_optimum, .. } => {
                    json!({"result": "holds", "gadget_optimum": gadget_optimum})
                }
                CertificateCheck::Fails {
                    gadget_optimum,
                    predicted,
                    ..
                } => {
                    status = 1;
                    json!({"result": "fails", "gadget_optimum": gadget_optimum, "predicted_optimum": predicted})
                }
                CertificateCheck::Inconclusive => json!({"result": "inconclusive"}),
            };
            certificate["check"] = verdict;
        }
        let text = to_stable_json(&json!({"certificate": certificate, "instance": instance_file}));
        Ok(Outcome { text, status })
    }
}

fn certificate_json(cert: &ReductionCertificate) -> Result<Value> {
    let (identity, params) = match cert.identity {
        Identity::WeightedHittingSet { n } => ("h = h' * n^3 + C(n, 2)", json!({"n": n})),
        Identity::VertexCover { source_edges } => {
            ("h = c + |E'|", json!({"source_edges": source_edges}))
        }
    };
    let source_optimum = match &cert.source {
        ReductionSource::HittingSet(hs) if hs.universe().len() <= MAX_SOURCE_BRUTE_FORCE => {
            Some(hs.brute_force_optimum()?.len())
        }
        ReductionSource::VertexCover(g) if g.vertex_count() <= MAX_SOURCE_BRUTE_FORCE => {
            Some(brute_force_vertex_cover(g)?)
        }
        _ => None,
    };
    Ok(json!({
        "apex": cert.apex,
        "identity": identity,
        "parameters": params,
        "weighted": cert.weighted,
        "source_optimum": source_optimum,
        "predicted_optimum": source_optimum.map(|s| cert.identity.predict(s)),
    }))
}

fn write_file(path: &PathBuf, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|source| Error::Io {
        path: path.clone(),
        source,
    })
}

/// Parses `args`, runs the command and returns the exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match cli.run() {
        Ok(outcome) => {
            let written = match &cli.output {
                Some(path) => write_file(path, &outcome.text),
                None => std::io::stdout()
                    .write_all(outcome.text.as_bytes())
                    .map_err(|source| Error::Io {
                        path: PathBuf::from("<stdout>"),
                        source,
                    }),
            };
            match written {
                Ok(()) => outcome.status,
                Err(e) => {
                    eprintln!("error: {e}");
                    e.exit_code()
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
