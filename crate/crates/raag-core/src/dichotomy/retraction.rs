//! Freeness certificate from a separating intersection of links: the two
//! partial conjugations both fix the link pair, so conjugator extraction on
//! the base vertex retracts the generated subgroup onto the free group on
//! the multipliers. Injectivity is verified word by word up to a length
//! bound, with the conjugator transcript retained as the certificate.

use super::{Certificate, DichotomyError, FreeWitness, FreeWitnessKind};
use crate::auto::{compose, make_generator, Automorphism, GeneratorSpec};
use crate::graph::{Graph, SilWitness, VertexId, VertexSet};
use crate::words::{extract_conjugator, normal_form, GroupElement, Letter, Word};
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RetractionCertificate {
    /// The vertex inside the separated component whose conjugators are read.
    pub base: VertexId,
    /// The SIL pair, renamed per the construction: both fixed by both
    /// generators.
    pub multipliers: (VertexId, VertexId),
    /// Conjugated regions: the components of the base vertex in the two
    /// link complements.
    pub regions: (VertexSet, VertexSet),
    pub tested_length: usize,
    /// One entry per tested reduced word: the word in the multipliers and
    /// the extracted conjugator, which must agree letter for letter.
    pub transcript: Vec<TranscriptEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranscriptEntry {
    pub word: String,
    pub conjugator: String,
}

/// Builds the two partial conjugations prescribed by a SIL and certifies
/// the retraction up to the word-length bound.
pub fn free_witness_from_sil(
    g: &Arc<Graph>,
    sil: &SilWitness,
    word_length: usize,
) -> Result<FreeWitness, DichotomyError> {
    sil.validate(g)?;
    let y = sil.x;
    let z = sil.y;
    let base = sil.component.as_slice()[0];
    let region_y = component_of(g, base, &g.link(y)?).ok_or_else(|| {
        DichotomyError::InvalidWitness("base vanished from lk(y) complement".into())
    })?;
    let region_z = component_of(g, base, &g.link(z)?).ok_or_else(|| {
        DichotomyError::InvalidWitness("base vanished from lk(z) complement".into())
    })?;
    // the SIL hypotheses force the two regions apart
    if region_y.contains(z) || region_z.contains(y) {
        return Err(DichotomyError::InvalidWitness(
            "SIL regions swallow the opposite multiplier".into(),
        ));
    }
    if region_y.contains(y) || region_z.contains(z) {
        return Err(DichotomyError::InvalidWitness(
            "region contains its own multiplier".into(),
        ));
    }
    let spec_y = GeneratorSpec::partial_conjugation(y, region_y.clone());
    let spec_z = GeneratorSpec::partial_conjugation(z, region_z.clone());
    let transcript = run_retraction(g, base, (y, z), (&spec_y, &spec_z), word_length)
        .map_err(DichotomyError::CertificateFailure)?;
    let certificate = RetractionCertificate {
        base,
        multipliers: (y, z),
        regions: (region_y, region_z),
        tested_length: word_length,
        transcript,
    };
    Ok(FreeWitness {
        kind: FreeWitnessKind::Sil,
        generators: (spec_y, spec_z),
        certificate: Certificate::Retraction(certificate),
    })
}

fn component_of(g: &Graph, v: VertexId, removed: &VertexSet) -> Option<VertexSet> {
    g.components_excluding(removed)
        .into_iter()
        .find(|c| c.contains(v))
}

/// Walks every reduced word of length 1..=bound in the two generators and
/// their inverses, extracting the base vertex's conjugator after each
/// composite; entries record the expected and extracted words.
fn run_retraction(
    g: &Arc<Graph>,
    base: VertexId,
    multipliers: (VertexId, VertexId),
    specs: (&GeneratorSpec, &GeneratorSpec),
    bound: usize,
) -> Result<Vec<TranscriptEntry>, String> {
    let auts = [
        make_generator(g, specs.0).map_err(|e| e.to_string())?,
        make_generator(g, &specs.0.inverse_spec()).map_err(|e| e.to_string())?,
        make_generator(g, specs.1).map_err(|e| e.to_string())?,
        make_generator(g, &specs.1.inverse_spec()).map_err(|e| e.to_string())?,
    ];
    let letters = [
        Letter::pos(multipliers.0),
        Letter::neg(multipliers.0),
        Letter::pos(multipliers.1),
        Letter::neg(multipliers.1),
    ];
    let mut transcript = Vec::new();
    let mut stack: Vec<(Automorphism, Vec<usize>)> =
        vec![(Automorphism::identity(g.clone()), Vec::new())];
    while let Some((aut, word)) = stack.pop() {
        if !word.is_empty() {
            let image = aut
                .apply(&Word::new(vec![Letter::pos(base)]))
                .map_err(|e| e.to_string())?;
            let expected_letters: Vec<Letter> = word.iter().map(|&i| letters[i]).collect();
            let expected =
                normal_form(g.clone(), &Word::new(expected_letters)).map_err(|e| e.to_string())?;
            let word_text = expected.as_word().render(g);
            let extracted: GroupElement = extract_conjugator(g, base, &image)
                .ok_or_else(|| format!("word `{word_text}` does not conjugate the base vertex"))?;
            if extracted != expected {
                return Err(format!(
                    "word `{}` extracts conjugator `{}` instead of itself",
                    word_text,
                    extracted.as_word().render(g)
                ));
            }
            transcript.push(TranscriptEntry {
                word: word_text,
                conjugator: extracted.as_word().render(g),
            });
        }
        if word.len() < bound {
            // push in reverse so the stack pops generators in order
            for next in (0..4usize).rev() {
                if let Some(&last) = word.last() {
                    if next ^ 1 == last {
                        continue; // free reduction: skip s s^-1
                    }
                }
                let composite = compose(&aut, &auts[next]).map_err(|e| e.to_string())?;
                let mut extended = word.clone();
                extended.push(next);
                stack.push((composite, extended));
            }
        }
    }
    Ok(transcript)
}

/// Re-verifies a SIL witness's retraction certificate from scratch. Returns
/// false on any mismatch rather than erroring, so tampered witnesses are
/// reported as failures.
pub fn certify_f2_retraction(g: &Arc<Graph>, witness: &FreeWitness, bound: usize) -> bool {
    let Certificate::Retraction(cert) = &witness.certificate else {
        return false;
    };
    run_retraction(
        g,
        cert.base,
        cert.multipliers,
        (&witness.generators.0, &witness.generators.1),
        bound,
    )
    .is_ok()
}
