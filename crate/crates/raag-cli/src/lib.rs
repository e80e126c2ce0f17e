//! Command-line front end: parse a graph, run an analysis, emit a
//! human-readable summary or a schema-versioned JSON report.
//!
//! Exit codes: 0 success, 1 input error, 2 verification failure.

pub mod report;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use raag_core::dichotomy::{
    certify_f2_retraction, certify_ping_pong, classify, nilpotence_witness_check,
    verify_lemma_commutations, verify_sol_example, Certificate, ClassifyParams, Verdict,
};
use raag_core::graph::{classify_special, depth_report, enumerate_nonisomorphic, gamma_k, Graph};
use report::ReportDocument;
use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Debug, Parser)]
#[command(
    name = "raag",
    version,
    about = "Dichotomy analysis for outer automorphism groups of right-angled Artin groups",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GraphInput {
    /// Graph file in adjacency-list format; `-` or absent reads stdin.
    file: Option<String>,
    /// Accept the empty graph instead of treating it as an input error.
    #[arg(long)]
    allow_empty: bool,
}

#[derive(Debug, Args)]
struct AnalysisFlags {
    /// Grid bound for the ping-pong cross-check.
    #[arg(long, default_value_t = 50)]
    grid: i64,
    /// Word-length bound for the retraction certificate.
    #[arg(long, default_value_t = 6)]
    words: usize,
    /// Search radius for bounded inner-detection.
    #[arg(long, default_value_t = 4)]
    inner_radius: usize,
}

impl AnalysisFlags {
    fn params(&self) -> ClassifyParams {
        ClassifyParams {
            grid_bound: self.grid,
            word_length: self.words,
            inner_radius: self.inner_radius,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify the graph: free subgroup or virtually nilpotent, with certificates.
    Analyze {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        flags: AnalysisFlags,
        /// Emit the structured JSON report instead of the summary.
        #[arg(long)]
        json: bool,
    },
    /// Per-vertex domination and star-separation depth table.
    Depth {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        json: bool,
    },
    /// Produce the verdict witness and re-verify its certificate.
    Witness {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        flags: AnalysisFlags,
        #[arg(long)]
        json: bool,
    },
    /// Machine-verify the commutation lemmas on the graph.
    VerifyLemmas {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value_t = 4)]
        inner_radius: usize,
        #[arg(long)]
        json: bool,
    },
    /// Verify the solvable three-vertex example end to end.
    VerifySol {
        #[arg(long)]
        json: bool,
    },
    /// Emit the depth-k family graph in adjacency-list format.
    GammaK {
        #[arg(long)]
        k: usize,
    },
    /// Classify all non-isomorphic graphs with up to max-n vertices.
    Census {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[command(flatten)]
        flags: AnalysisFlags,
        #[arg(long)]
        json: bool,
    },
}

pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

fn ok(stdout: String) -> Outcome {
    Outcome {
        stdout,
        stderr: String::new(),
        code: 0,
    }
}

fn input_error(msg: String) -> Outcome {
    Outcome {
        stdout: String::new(),
        stderr: format!("error: {msg}\n"),
        code: 1,
    }
}

fn verification_failure(stdout: String, msg: String) -> Outcome {
    Outcome {
        stdout,
        stderr: format!("verification failure: {msg}\n"),
        code: 2,
    }
}

/// Runs one invocation. `read_stdin` is only called when a command actually
/// consumes the standard input.
pub fn execute(argv: &[String], read_stdin: &dyn Fn() -> std::io::Result<String>) -> Outcome {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let rendered = err.render().to_string();
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ok(rendered),
                _ => Outcome {
                    stdout: String::new(),
                    stderr: rendered,
                    code: 1,
                },
            };
        }
    };
    match cli.command {
        Command::Analyze { input, flags, json } => {
            with_graph(&input, read_stdin, |g| analyze_cmd(g, &flags, json))
        }
        Command::Depth { input, json } => with_graph(&input, read_stdin, |g| depth_cmd(g, json)),
        Command::Witness { input, flags, json } => {
            with_graph(&input, read_stdin, |g| witness_cmd(g, &flags, json))
        }
        Command::VerifyLemmas {
            input,
            inner_radius,
            json,
        } => with_graph(&input, read_stdin, |g| lemmas_cmd(g, inner_radius, json)),
        Command::VerifySol { json } => sol_cmd(json),
        Command::GammaK { k } => ok(gamma_k(k).to_text()),
        Command::Census { max_n, flags, json } => census_cmd(max_n, &flags, json),
    }
}

fn with_graph(
    input: &GraphInput,
    read_stdin: &dyn Fn() -> std::io::Result<String>,
    f: impl FnOnce(Arc<Graph>) -> Outcome,
) -> Outcome {
    let text = match input.file.as_deref() {
        Some("-") | None => match read_stdin() {
            Ok(t) => t,
            Err(e) => return input_error(format!("cannot read stdin: {e}")),
        },
        Some(path) => match std::fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) => return input_error(format!("cannot read `{path}`: {e}")),
        },
    };
    let graph = match Graph::parse(&text) {
        Ok(g) => g,
        Err(e) => return input_error(e.to_string()),
    };
    if graph.vertex_count() == 0 && !input.allow_empty {
        return input_error(
            "input describes the empty graph (pass --allow-empty to accept)".into(),
        );
    }
    f(Arc::new(graph))
}

fn analyze_cmd(g: Arc<Graph>, flags: &AnalysisFlags, json: bool) -> Outcome {
    let report = match classify(&g, &flags.params()) {
        Ok(r) => r,
        Err(e) => return verification_failure(String::new(), e.to_string()),
    };
    if json {
        let doc = ReportDocument::new("analyze", Some(&g), report::analyze_payload(&g, &report));
        return ok(doc.to_json() + "\n");
    }
    let mut out = String::new();
    out.push_str(&format!(
        "graph: {} vertices, {} edges\n",
        g.vertex_count(),
        g.edge_count()
    ));
    out.push_str(&format!("verdict: {}\n", report.verdict.as_str()));
    if let Some(class) = report.nilpotence_class {
        out.push_str(&format!("nilpotence class: {class}\n"));
    }
    if let Some(w) = &report.free_witness {
        out.push_str(&format!(
            "free witness: {} and {}\n",
            w.generators.0.render(&g),
            w.generators.1.render(&g)
        ));
        match &w.certificate {
            Certificate::PingPong(c) => out.push_str(&format!(
                "certificate: ping-pong on ({}, {}), matrices {:?} and {:?}, grid {}\n",
                g.name(c.x),
                g.name(c.y),
                c.matrix_xy,
                c.matrix_yx,
                c.grid_bound
            )),
            Certificate::Retraction(c) => out.push_str(&format!(
                "certificate: F2 retraction at {}, {} words of length <= {} checked\n",
                g.name(c.base),
                c.transcript.len(),
                c.tested_length
            )),
        }
    }
    let pairs: Vec<String> = report
        .equivalent_pairs
        .iter()
        .map(|&(x, y)| format!("{{{} {}}}", g.name(x), g.name(y)))
        .collect();
    out.push_str(&format!(
        "equivalent pairs: {}\n",
        if pairs.is_empty() {
            "none".to_owned()
        } else {
            pairs.join(" ")
        }
    ));
    out.push_str(&format!(
        "separating intersection of links: {}\n",
        report
            .sil
            .as_ref()
            .map_or("none".to_owned(), |s| s.render(&g))
    ));
    out.push_str(&format!("depth: {}\n", report.depth.graph_depth));
    out.push_str(&format!(
        "flags: out_finite={} virtually_abelian={}\n",
        report.special.out_finite, report.special.virtually_abelian
    ));
    ok(out)
}

fn depth_cmd(g: Arc<Graph>, json: bool) -> Outcome {
    let report = depth_report(&g);
    if json {
        let doc = ReportDocument::new("depth", Some(&g), report::depth_payload(&g, &report));
        return ok(doc.to_json() + "\n");
    }
    let mut out = String::new();
    out.push_str("vertex  dom  star-sep  depth  chain\n");
    for vd in &report.per_vertex {
        out.push_str(&format!(
            "{:<7} {:<4} {:<9} {:<6} {}\n",
            g.name(vd.vertex),
            vd.domination_depth,
            vd.star_separation_depth,
            vd.depth,
            vd.domination_chain.render(&g)
        ));
    }
    out.push_str(&format!("graph depth: {}\n", report.graph_depth));
    ok(out)
}

fn witness_cmd(g: Arc<Graph>, flags: &AnalysisFlags, json: bool) -> Outcome {
    let params = flags.params();
    let report = match classify(&g, &params) {
        Ok(r) => r,
        Err(e) => return verification_failure(String::new(), e.to_string()),
    };
    let reverified;
    let mut check_payload = None;
    let mut human = String::new();
    match report.verdict {
        Verdict::Free => {
            let w = report
                .free_witness
                .as_ref()
                .expect("free verdict has a witness");
            reverified = match &w.certificate {
                Certificate::PingPong(c) => certify_ping_pong(c),
                Certificate::Retraction(_) => certify_f2_retraction(&g, w, params.word_length),
            };
            human.push_str(&format!(
                "free witness: {} and {}\ncertificate re-verified: {}\n",
                w.generators.0.render(&g),
                w.generators.1.render(&g),
                reverified
            ));
        }
        Verdict::VirtuallyNilpotent => {
            let data = report
                .nilpotency
                .as_ref()
                .expect("nilpotent verdict has data");
            let check = match nilpotence_witness_check(&g, data, params.inner_radius) {
                Ok(c) => c,
                Err(e) => return verification_failure(String::new(), e.to_string()),
            };
            reverified = check.passed;
            human.push_str(&format!("nilpotence class: {}\n", data.class));
            human.push_str(&format!(
                "witness chain: {}\n",
                data.witness_chain
                    .iter()
                    .rev()
                    .map(|&v| g.name(v).to_owned())
                    .collect::<Vec<_>>()
                    .join(" >= ")
            ));
            for alpha in &data.witness_alphas {
                human.push_str(&format!("  generator {}\n", alpha.render(&g)));
            }
            for note in &check.notes {
                human.push_str(&format!("  {note}\n"));
            }
            human.push_str(&format!("witness check passed: {}\n", check.passed));
            check_payload = Some(report::witness_check_payload(&check));
        }
    }
    if json {
        let payload = report::WitnessCommandPayload {
            analyze: report::analyze_payload(&g, &report),
            certificate_reverified: reverified,
            witness_check: check_payload,
        };
        let doc = ReportDocument::new("witness", Some(&g), payload);
        let body = doc.to_json() + "\n";
        return if reverified {
            ok(body)
        } else {
            verification_failure(body, "witness re-verification failed".into())
        };
    }
    if reverified {
        ok(human)
    } else {
        verification_failure(human, "witness re-verification failed".into())
    }
}

fn lemmas_cmd(g: Arc<Graph>, inner_radius: usize, json: bool) -> Outcome {
    let report = match verify_lemma_commutations(&g, inner_radius) {
        Ok(r) => r,
        Err(e) => return verification_failure(String::new(), e.to_string()),
    };
    let failures = report.failure_count();
    let body = if json {
        ReportDocument::new("verify-lemmas", Some(&g), report::lemma_payload(&report)).to_json()
            + "\n"
    } else {
        let mut out = String::new();
        out.push_str(&format!(
            "sil-free: {} (exact-commutation lemma applies)\n",
            report.sil_free
        ));
        out.push_str(&format!(
            "both conditions fail: {} (commutator-identity lemma applies)\n",
            report.both_conditions_fail
        ));
        out.push_str(&format!(
            "pairs checked: {} exact, {} outer, {} commutator identities\n",
            report.general_pairs, report.commute_pairs, report.steinberg_instances
        ));
        for id in &report.steinberg_identities {
            out.push_str(&format!("  identity: {id}\n"));
        }
        for f in report
            .general_failures
            .iter()
            .chain(&report.commute_failures)
            .chain(&report.steinberg_failures)
        {
            out.push_str(&format!("  FAILURE: {f}\n"));
        }
        out.push_str(&format!("failures: {failures}\n"));
        out
    };
    if failures == 0 {
        ok(body)
    } else {
        verification_failure(body, format!("{failures} lemma verification failures"))
    }
}

fn sol_cmd(json: bool) -> Outcome {
    let report = match verify_sol_example() {
        Ok(r) => r,
        Err(e) => return verification_failure(String::new(), e.to_string()),
    };
    let body = if json {
        ReportDocument::new("verify-sol", None, report::sol_payload(&report)).to_json() + "\n"
    } else {
        let mut out = String::new();
        for (name, okay) in &report.checks {
            out.push_str(&format!(
                "[{}] {}\n",
                if *okay { "ok" } else { "FAIL" },
                name
            ));
        }
        out.push_str(&format!(
            "action matrix: {:?}, trace {}\n",
            report.action_matrix, report.trace
        ));
        out.push_str(&format!("passed: {}\n", report.passed));
        out
    };
    if report.passed {
        ok(body)
    } else {
        verification_failure(body, "sol example checks failed".into())
    }
}

fn census_cmd(max_n: usize, flags: &AnalysisFlags, json: bool) -> Outcome {
    if max_n == 0 || max_n > 7 {
        return input_error("census supports 1 <= max-n <= 7".into());
    }
    let params = flags.params();
    let mut rows = Vec::new();
    for n in 1..=max_n {
        let graphs: Vec<Graph> = enumerate_nonisomorphic(n)
            .unwrap()
            .into_iter()
            .filter(|g| g.vertex_count() == n)
            .collect();
        let mut free = 0;
        let mut nilpotent = 0;
        let mut class_counts: BTreeMap<usize, usize> = BTreeMap::new();
        let mut out_finite = 0;
        let mut virtually_abelian = 0;
        let total = graphs.len();
        for g in graphs {
            let g = Arc::new(g);
            let report = match classify(&g, &params) {
                Ok(r) => r,
                Err(e) => return verification_failure(String::new(), e.to_string()),
            };
            match report.verdict {
                Verdict::Free => free += 1,
                Verdict::VirtuallyNilpotent => {
                    nilpotent += 1;
                    *class_counts
                        .entry(report.nilpotence_class.unwrap())
                        .or_default() += 1;
                }
            }
            let flags = classify_special(&g);
            out_finite += usize::from(flags.out_finite);
            virtually_abelian += usize::from(flags.virtually_abelian);
        }
        rows.push(report::CensusRow {
            vertices: n,
            graphs: total,
            free,
            virtually_nilpotent: nilpotent,
            class_counts: class_counts.into_iter().collect(),
            out_finite,
            virtually_abelian,
        });
    }
    if json {
        let payload = report::CensusPayload { max_n, rows };
        return ok(ReportDocument::new("census", None, payload).to_json() + "\n");
    }
    let mut out = String::new();
    out.push_str("n  graphs  free  nilpotent  classes            finite  vabelian\n");
    for row in &rows {
        let classes: Vec<String> = row
            .class_counts
            .iter()
            .map(|(c, k)| format!("{c}:{k}"))
            .collect();
        out.push_str(&format!(
            "{:<2} {:<7} {:<5} {:<10} {:<18} {:<7} {}\n",
            row.vertices,
            row.graphs,
            row.free,
            row.virtually_nilpotent,
            classes.join(" "),
            row.out_finite,
            row.virtually_abelian
        ));
    }
    ok(out)
}
