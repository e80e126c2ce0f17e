//! Top-level classifier: free versus virtually nilpotent, with certified
//! witnesses either way.

mod lemmas;
mod nilpotent;
mod pingpong;
mod retraction;
mod sol;

pub use lemmas::{verify_lemma_commutations, LemmaReport};
pub use nilpotent::{
    filtration_is_complete, nilpotence_witness_check, nilpotent_generators,
    verify_filtration_grading, verify_iterated_commutators, GradingReport, NilpotencyData,
    WitnessCheck, WitnessKind,
};
pub use pingpong::{certify_ping_pong, free_witness_from_domination_pair, PingPongCertificate};
pub use retraction::{
    certify_f2_retraction, free_witness_from_sil, RetractionCertificate, TranscriptEntry,
};
pub use sol::{verify_sol_example, SolReport};

use crate::auto::{AutError, GeneratorSpec};
use crate::graph::{
    classify_special, depth_report, find_sil, DepthReport, Graph, GraphError, SilWitness,
    SpecialFlags, VertexId,
};
use crate::words::WordError;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DichotomyError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
    #[error("certificate failure (internal inconsistency): {0}")]
    CertificateFailure(String),
    #[error(transparent)]
    Aut(#[from] AutError),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Free,
    VirtuallyNilpotent,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Free => "free",
            Verdict::VirtuallyNilpotent => "virtually_nilpotent",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FreeWitnessKind {
    DominationPair,
    Sil,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    PingPong(PingPongCertificate),
    Retraction(RetractionCertificate),
}

/// A certified free subgroup: two generator specs plus the verification data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeWitness {
    pub kind: FreeWitnessKind,
    pub generators: (GeneratorSpec, GeneratorSpec),
    pub certificate: Certificate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassifyParams {
    /// Grid bound for the ping-pong cross-validation.
    pub grid_bound: i64,
    /// Word length bound for the retraction certificate.
    pub word_length: usize,
    /// Radius for bounded inner-detection.
    pub inner_radius: usize,
}

impl Default for ClassifyParams {
    fn default() -> ClassifyParams {
        ClassifyParams {
            grid_bound: 50,
            word_length: 6,
            inner_radius: 4,
        }
    }
}

#[derive(Debug, Clone)]
pub struct DichotomyReport {
    pub verdict: Verdict,
    pub nilpotence_class: Option<usize>,
    pub free_witness: Option<FreeWitness>,
    pub nilpotency: Option<NilpotencyData>,
    pub depth: DepthReport,
    pub special: SpecialFlags,
    /// Condition diagnostics, reported for every verdict.
    pub equivalent_pairs: Vec<(VertexId, VertexId)>,
    pub sil: Option<SilWitness>,
}

/// Checks condition (1) then (2) in canonical order, builds and certifies a
/// free witness on success, and otherwise assembles the nilpotent data with
/// class equal to the graph depth.
pub fn classify(
    g: &Arc<Graph>,
    params: &ClassifyParams,
) -> Result<DichotomyReport, DichotomyError> {
    let equivalent_pairs = g.domination_equivalent_pairs();
    let sil = find_sil(g);
    let depth = depth_report(g);
    let special = classify_special(g);
    if let Some(&(x, y)) = equivalent_pairs.first() {
        let witness = free_witness_from_domination_pair(g, x, y, params.grid_bound)?;
        return Ok(DichotomyReport {
            verdict: Verdict::Free,
            nilpotence_class: None,
            free_witness: Some(witness),
            nilpotency: None,
            depth,
            special,
            equivalent_pairs,
            sil,
        });
    }
    if let Some(sil_witness) = sil.clone() {
        let witness = free_witness_from_sil(g, &sil_witness, params.word_length)?;
        return Ok(DichotomyReport {
            verdict: Verdict::Free,
            nilpotence_class: None,
            free_witness: Some(witness),
            nilpotency: None,
            depth,
            special,
            equivalent_pairs,
            sil,
        });
    }
    let nilpotency = nilpotent_generators(g)?;
    debug_assert_eq!(nilpotency.class, depth.graph_depth);
    Ok(DichotomyReport {
        verdict: Verdict::VirtuallyNilpotent,
        nilpotence_class: Some(nilpotency.class),
        free_witness: None,
        nilpotency: Some(nilpotency),
        depth,
        special,
        equivalent_pairs,
        sil: None,
    })
}
