//! Serializable report documents. Field order is fixed by struct order and
//! the schema version is bumped on any payload change, so identical inputs
//! produce byte-identical reports.

use raag_core::dichotomy::{
    Certificate, DichotomyReport, FreeWitness, FreeWitnessKind, LemmaReport, NilpotencyData,
    SolReport, WitnessCheck, WitnessKind,
};
use raag_core::graph::{DepthReport, Graph, SilWitness};
use serde::Serialize;

pub const SCHEMA_VERSION: &str = "1.0.0";

#[derive(Serialize)]
pub struct ReportDocument<T: Serialize> {
    pub schema_version: &'static str,
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph: Option<String>,
    pub payload: T,
}

impl<T: Serialize> ReportDocument<T> {
    pub fn new(command: &'static str, graph: Option<&Graph>, payload: T) -> Self {
        ReportDocument {
            schema_version: SCHEMA_VERSION,
            command,
            graph: graph.map(Graph::to_text),
            payload,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

#[derive(Serialize)]
pub struct DepthPayload {
    pub graph_depth: usize,
    pub per_vertex: Vec<VertexDepthRow>,
}

#[derive(Serialize)]
pub struct VertexDepthRow {
    pub vertex: String,
    pub domination_depth: usize,
    pub star_separation_depth: usize,
    pub depth: usize,
    pub domination_chain: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub star_separation_chain: Option<Vec<String>>,
}

pub fn depth_payload(g: &Graph, report: &DepthReport) -> DepthPayload {
    DepthPayload {
        graph_depth: report.graph_depth,
        per_vertex: report
            .per_vertex
            .iter()
            .map(|vd| VertexDepthRow {
                vertex: g.name(vd.vertex).to_owned(),
                domination_depth: vd.domination_depth,
                star_separation_depth: vd.star_separation_depth,
                depth: vd.depth,
                domination_chain: vd
                    .domination_chain
                    .vertices
                    .iter()
                    .map(|&v| g.name(v).to_owned())
                    .collect(),
                star_separation_chain: vd
                    .star_separation_chain
                    .as_ref()
                    .map(|c| c.vertices.iter().map(|&v| g.name(v).to_owned()).collect()),
            })
            .collect(),
    }
}

#[derive(Serialize)]
pub struct CertificatePayload {
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ping_pong: Option<PingPongPayload>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub retraction: Option<RetractionPayload>,
}

#[derive(Serialize)]
pub struct PingPongPayload {
    pub x: String,
    pub y: String,
    pub matrix_xy: [[i64; 2]; 2],
    pub matrix_yx: [[i64; 2]; 2],
    pub grid_bound: i64,
}

#[derive(Serialize)]
pub struct RetractionPayload {
    pub base: String,
    pub multipliers: [String; 2],
    pub regions: [Vec<String>; 2],
    pub tested_length: usize,
    pub words_checked: usize,
    pub transcript: Vec<[String; 2]>,
}

#[derive(Serialize)]
pub struct FreeWitnessPayload {
    pub kind: &'static str,
    pub generators: [String; 2],
    pub certificate: CertificatePayload,
}

pub fn witness_payload(g: &Graph, w: &FreeWitness) -> FreeWitnessPayload {
    let names = |set: &raag_core::VertexSet| -> Vec<String> {
        set.iter().map(|&v| g.name(v).to_owned()).collect()
    };
    let certificate = match &w.certificate {
        Certificate::PingPong(c) => CertificatePayload {
            kind: "ping-pong",
            ping_pong: Some(PingPongPayload {
                x: g.name(c.x).to_owned(),
                y: g.name(c.y).to_owned(),
                matrix_xy: c.matrix_xy,
                matrix_yx: c.matrix_yx,
                grid_bound: c.grid_bound,
            }),
            retraction: None,
        },
        Certificate::Retraction(c) => CertificatePayload {
            kind: "f2-retraction",
            ping_pong: None,
            retraction: Some(RetractionPayload {
                base: g.name(c.base).to_owned(),
                multipliers: [
                    g.name(c.multipliers.0).to_owned(),
                    g.name(c.multipliers.1).to_owned(),
                ],
                regions: [names(&c.regions.0), names(&c.regions.1)],
                tested_length: c.tested_length,
                words_checked: c.transcript.len(),
                transcript: c
                    .transcript
                    .iter()
                    .map(|t| [t.word.clone(), t.conjugator.clone()])
                    .collect(),
            }),
        },
    };
    FreeWitnessPayload {
        kind: match w.kind {
            FreeWitnessKind::DominationPair => "domination-pair",
            FreeWitnessKind::Sil => "sil",
        },
        generators: [w.generators.0.render(g), w.generators.1.render(g)],
        certificate,
    }
}

#[derive(Serialize)]
pub struct NilpotencyPayload {
    pub class: usize,
    pub filtration: Vec<Vec<String>>,
    pub witness_chain: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_kind: Option<String>,
    pub witness_alphas: Vec<String>,
}

pub fn nilpotency_payload(g: &Graph, data: &NilpotencyData) -> NilpotencyPayload {
    NilpotencyPayload {
        class: data.class,
        filtration: data
            .filtration
            .iter()
            .map(|level| level.iter().map(|s| s.render(g)).collect())
            .collect(),
        witness_chain: data
            .witness_chain
            .iter()
            .map(|&v| g.name(v).to_owned())
            .collect(),
        witness_kind: data.witness_kind.as_ref().map(|k| match k {
            WitnessKind::Transvection { bottom_target } => {
                format!("transvection onto {}", g.name(*bottom_target))
            }
            WitnessKind::PartialConjugation { region1, region2 } => format!(
                "partial conjugation of {} against {}",
                g.render_set(region1),
                g.render_set(region2)
            ),
        }),
        witness_alphas: data.witness_alphas.iter().map(|s| s.render(g)).collect(),
    }
}

#[derive(Serialize)]
pub struct AnalyzePayload {
    pub verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nilpotence_class: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub free_witness: Option<FreeWitnessPayload>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nilpotency: Option<NilpotencyPayload>,
    pub equivalent_pairs: Vec<[String; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sil: Option<String>,
    pub depth: DepthPayload,
    pub out_finite: bool,
    pub virtually_abelian: bool,
}

pub fn analyze_payload(g: &Graph, report: &DichotomyReport) -> AnalyzePayload {
    AnalyzePayload {
        verdict: report.verdict.as_str(),
        nilpotence_class: report.nilpotence_class,
        free_witness: report.free_witness.as_ref().map(|w| witness_payload(g, w)),
        nilpotency: report.nilpotency.as_ref().map(|n| nilpotency_payload(g, n)),
        equivalent_pairs: report
            .equivalent_pairs
            .iter()
            .map(|&(x, y)| [g.name(x).to_owned(), g.name(y).to_owned()])
            .collect(),
        sil: report.sil.as_ref().map(|s| s.render(g)),
        depth: depth_payload(g, &report.depth),
        out_finite: report.special.out_finite,
        virtually_abelian: report.special.virtually_abelian,
    }
}

#[derive(Serialize)]
pub struct WitnessCommandPayload {
    pub analyze: AnalyzePayload,
    pub certificate_reverified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_check: Option<WitnessCheckPayload>,
}

#[derive(Serialize)]
pub struct WitnessCheckPayload {
    pub passed: bool,
    pub notes: Vec<String>,
}

pub fn witness_check_payload(check: &WitnessCheck) -> WitnessCheckPayload {
    WitnessCheckPayload {
        passed: check.passed,
        notes: check.notes.clone(),
    }
}

#[derive(Serialize)]
pub struct LemmaPayload {
    pub sil_free: bool,
    pub both_conditions_fail: bool,
    pub general_pairs: usize,
    pub commute_pairs: usize,
    pub steinberg_instances: usize,
    pub failures: Vec<String>,
    pub steinberg_identities: Vec<String>,
}

pub fn lemma_payload(report: &LemmaReport) -> LemmaPayload {
    let mut failures = Vec::new();
    failures.extend(report.general_failures.iter().cloned());
    failures.extend(report.commute_failures.iter().cloned());
    failures.extend(report.steinberg_failures.iter().cloned());
    LemmaPayload {
        sil_free: report.sil_free,
        both_conditions_fail: report.both_conditions_fail,
        general_pairs: report.general_pairs,
        commute_pairs: report.commute_pairs,
        steinberg_instances: report.steinberg_instances,
        failures,
        steinberg_identities: report.steinberg_identities.clone(),
    }
}

#[derive(Serialize)]
pub struct SolPayload {
    pub checks: Vec<SolCheckRow>,
    pub action_matrix: [[i64; 2]; 2],
    pub trace: i64,
    pub passed: bool,
}

#[derive(Serialize)]
pub struct SolCheckRow {
    pub name: String,
    pub passed: bool,
}

pub fn sol_payload(report: &SolReport) -> SolPayload {
    SolPayload {
        checks: report
            .checks
            .iter()
            .map(|(name, ok)| SolCheckRow {
                name: name.clone(),
                passed: *ok,
            })
            .collect(),
        action_matrix: report.action_matrix,
        trace: report.trace,
        passed: report.passed,
    }
}

#[derive(Serialize)]
pub struct CensusPayload {
    pub max_n: usize,
    pub rows: Vec<CensusRow>,
}

#[derive(Serialize)]
pub struct CensusRow {
    pub vertices: usize,
    pub graphs: usize,
    pub free: usize,
    pub virtually_nilpotent: usize,
    /// (nilpotence class, count) in increasing class order.
    pub class_counts: Vec<(usize, usize)>,
    pub out_finite: usize,
    pub virtually_abelian: usize,
}

pub fn render_sil(g: &Graph, sil: &SilWitness) -> String {
    sil.render(g)
}
