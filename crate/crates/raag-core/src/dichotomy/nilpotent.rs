//! The nilpotent side of the dichotomy: the filtration S_1 ⊆ ... ⊆ S_k of
//! transvections and partial conjugations graded by depth gaps, the witness
//! chain whose iterated commutator realizes the nilpotence class lower
//! bound, and the machine checks for both.

use super::DichotomyError;
use crate::auto::{
    abelianization_matrix, aut_pow, certify_not_inner, certify_partial_conjugation_nontrivial,
    commutator, equal_in_aut, equal_in_out, is_inner, make_generator, Automorphism, GeneratorSpec,
    InnerVerdict, Side,
};
use crate::graph::{
    depth_report, domination_depth_chain, find_sil, star_separation_chain, DepthReport, Graph,
    VertexId, VertexSet,
};
use crate::words::{Letter, Sign};
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessKind {
    /// The chain extends below by a dominated vertex x_0.
    Transvection { bottom_target: VertexId },
    /// The chain bottom's star cuts off two components that escape the top's star.
    PartialConjugation {
        region1: VertexSet,
        region2: VertexSet,
    },
}

#[derive(Debug, Clone)]
pub struct NilpotencyData {
    /// Equals the graph depth.
    pub class: usize,
    /// S_1 ⊆ S_2 ⊆ ... ⊆ S_k, each without the implicit identity.
    pub filtration: Vec<Vec<GeneratorSpec>>,
    /// The witness chain x_1, ..., x_k bottom-up; empty when class is 0.
    pub witness_chain: Vec<VertexId>,
    pub witness_kind: Option<WitnessKind>,
    /// α_1, ..., α_k: the bottom generator then the chain transvections.
    pub witness_alphas: Vec<GeneratorSpec>,
}

/// Every transvection (both sides, both multiplier signs) and every
/// out-nontrivial single-component partial conjugation (both signs), in
/// canonical order.
fn generator_pool(g: &Graph) -> Vec<GeneratorSpec> {
    let mut pool = Vec::new();
    for x in g.vertices() {
        let comps = g.components_excluding(&g.star(x).unwrap());
        if comps.len() < 2 {
            continue;
        }
        for comp in comps {
            for sign in [Sign::Pos, Sign::Neg] {
                pool.push(GeneratorSpec::PartialConjugation {
                    multiplier: Letter { vertex: x, sign },
                    region: comp.clone(),
                });
            }
        }
    }
    for side in [Side::Right, Side::Left] {
        for x in g.vertices() {
            for y in g.vertices() {
                if x != y && g.dominates(x, y).unwrap() {
                    for sign in [Sign::Pos, Sign::Neg] {
                        pool.push(GeneratorSpec::Transvection {
                            multiplier: Letter { vertex: x, sign },
                            target: y,
                            side,
                        });
                    }
                }
            }
        }
    }
    pool
}

fn spec_in_level(spec: &GeneratorSpec, depths: &DepthReport, threshold: usize) -> bool {
    match spec {
        GeneratorSpec::Transvection {
            multiplier, target, ..
        } => {
            let dx = depths.depth_of(multiplier.vertex);
            let dy = depths.depth_of(*target);
            dx >= dy && dx - dy >= threshold
        }
        GeneratorSpec::PartialConjugation { multiplier, .. } => {
            depths.depth_of(multiplier.vertex) >= threshold
        }
        _ => false,
    }
}

/// Builds the filtration and the lower-bound witness chain. Callers must
/// have already ruled out both freeness conditions.
pub fn nilpotent_generators(g: &Arc<Graph>) -> Result<NilpotencyData, DichotomyError> {
    if !g.domination_equivalent_pairs().is_empty() {
        return Err(DichotomyError::Precondition(
            "graph has a domination-equivalent pair".into(),
        ));
    }
    if find_sil(g).is_some() {
        return Err(DichotomyError::Precondition(
            "graph has a separating intersection of links".into(),
        ));
    }
    let depths = depth_report(g);
    let k = depths.graph_depth;
    let pool = generator_pool(g);
    let filtration: Vec<Vec<GeneratorSpec>> = (1..=k)
        .map(|i| {
            pool.iter()
                .filter(|s| spec_in_level(s, &depths, k - i + 1))
                .cloned()
                .collect()
        })
        .collect();
    if k == 0 {
        return Ok(NilpotencyData {
            class: 0,
            filtration,
            witness_chain: Vec::new(),
            witness_kind: None,
            witness_alphas: Vec::new(),
        });
    }
    let top = g
        .vertices()
        .find(|&v| depths.depth_of(v) == k)
        .expect("some vertex realizes the graph depth");
    let (chain, kind) = if depths.per_vertex[top].domination_depth == k {
        let full = domination_depth_chain(g, top)?.vertices;
        debug_assert_eq!(full.len(), k + 1);
        let bottom_target = full[0];
        (
            full[1..].to_vec(),
            WitnessKind::Transvection { bottom_target },
        )
    } else {
        let chain = star_separation_chain(g, top)?
            .expect("star-separation depth k > 0 has a realizing chain")
            .vertices;
        debug_assert_eq!(chain.len(), k);
        let star_top = g.star(top)?;
        let mut escaping = g
            .components_excluding(&g.star(chain[0])?)
            .into_iter()
            .filter(|c| !c.is_subset(&star_top));
        let region1 = escaping
            .next()
            .expect("chain condition provides two components");
        let region2 = escaping
            .next()
            .expect("chain condition provides two components");
        (chain, WitnessKind::PartialConjugation { region1, region2 })
    };
    let mut alphas = Vec::with_capacity(k);
    match &kind {
        WitnessKind::Transvection { bottom_target } => {
            alphas.push(GeneratorSpec::right_transvection(chain[0], *bottom_target));
        }
        WitnessKind::PartialConjugation { region1, .. } => {
            alphas.push(GeneratorSpec::partial_conjugation(
                chain[0],
                region1.clone(),
            ));
        }
    }
    for i in 1..k {
        alphas.push(GeneratorSpec::right_transvection(chain[i], chain[i - 1]));
    }
    Ok(NilpotencyData {
        class: k,
        filtration,
        witness_chain: chain,
        witness_kind: Some(kind),
        witness_alphas: alphas,
    })
}

/// Whether S_k contains every legal transvection and partial conjugation,
/// as the grading argument requires.
pub fn filtration_is_complete(g: &Graph, data: &NilpotencyData) -> bool {
    let pool = generator_pool(g);
    match data.filtration.last() {
        Some(top) => pool.iter().all(|s| top.contains(s)),
        None => pool.is_empty(),
    }
}

#[derive(Debug, Clone)]
pub struct WitnessCheck {
    pub passed: bool,
    pub notes: Vec<String>,
}

fn iterated_commutator(auts: &[Automorphism]) -> Result<Automorphism, DichotomyError> {
    let mut acc = auts[0].clone();
    for a in &auts[1..] {
        acc = commutator(&acc, a)?;
    }
    Ok(acc)
}

/// Matches `target` against `candidate` first exactly in Aut, then in Out.
fn out_matches(
    target: &Automorphism,
    candidate: &Automorphism,
    radius: usize,
) -> Result<Option<&'static str>, DichotomyError> {
    if equal_in_aut(target, candidate) {
        return Ok(Some("exact in Aut"));
    }
    if equal_in_out(target, candidate, radius)?.is_inner() {
        return Ok(Some("equal in Out"));
    }
    Ok(None)
}

/// Certifies an automorphism nontrivial in the outer group, conclusively.
fn out_nontrivial(
    aut: &Automorphism,
    radius: usize,
) -> Result<Result<String, String>, DichotomyError> {
    if let Some(reason) = certify_not_inner(aut) {
        return Ok(Ok(reason));
    }
    Ok(match is_inner(aut, radius)? {
        InnerVerdict::Inner(w) => Err(format!("inner with witness {w}")),
        InnerVerdict::NotInnerWithin(_) => Ok("bounded search obstruction".to_owned()),
        InnerVerdict::Unknown => Err("inconclusive within radius".to_owned()),
    })
}

/// Computes the iterated commutator of the witness chain, matches it
/// against the predicted generator shape, certifies that generator
/// nontrivial in Out, and repeats the computation with squared exponents.
pub fn nilpotence_witness_check(
    g: &Arc<Graph>,
    data: &NilpotencyData,
    radius: usize,
) -> Result<WitnessCheck, DichotomyError> {
    let mut notes = Vec::new();
    let k = data.class;
    if k == 0 {
        notes.push("depth 0: nothing to witness".to_owned());
        return Ok(WitnessCheck {
            passed: true,
            notes,
        });
    }
    let alphas: Vec<Automorphism> = data
        .witness_alphas
        .iter()
        .map(|s| make_generator(g, s))
        .collect::<Result<_, _>>()?;
    let gamma = iterated_commutator(&alphas)?;
    let top = *data.witness_chain.last().expect("class > 0 has a chain");
    let mut passed = true;

    let candidates: Vec<GeneratorSpec> = match data.witness_kind.as_ref().expect("class > 0") {
        WitnessKind::Transvection { bottom_target } => [Sign::Pos, Sign::Neg]
            .into_iter()
            .flat_map(|sign| {
                [Side::Right, Side::Left]
                    .into_iter()
                    .map(move |side| GeneratorSpec::Transvection {
                        multiplier: Letter { vertex: top, sign },
                        target: *bottom_target,
                        side,
                    })
            })
            .collect(),
        WitnessKind::PartialConjugation { region1, .. } => {
            let star_top = g.star(top)?;
            let region = region1.difference(&star_top);
            if region.is_empty() {
                notes.push("predicted region Y1 \\ st(top) is empty".to_owned());
                return Ok(WitnessCheck {
                    passed: false,
                    notes,
                });
            }
            [Sign::Pos, Sign::Neg]
                .into_iter()
                .map(|sign| GeneratorSpec::PartialConjugation {
                    multiplier: Letter { vertex: top, sign },
                    region: region.clone(),
                })
                .collect()
        }
    };

    let mut matched = None;
    for cand in &candidates {
        if cand.validate(g).is_err() {
            continue;
        }
        let cand_aut = make_generator(g, cand)?;
        if let Some(how) = out_matches(&gamma, &cand_aut, radius)? {
            matched = Some((cand.clone(), how));
            break;
        }
    }
    match matched {
        Some((cand, how)) => {
            notes.push(format!("iterated commutator = {} ({how})", cand.render(g)));
            let nontrivial = match &cand {
                GeneratorSpec::Transvection { .. } => {
                    let aut = make_generator(g, &cand)?;
                    !abelianization_matrix(&aut).is_identity()
                }
                GeneratorSpec::PartialConjugation { multiplier, region } => {
                    certify_partial_conjugation_nontrivial(g, *multiplier, region)?
                }
                _ => false,
            };
            if !nontrivial {
                notes.push("matched generator is trivial in Out".to_owned());
                passed = false;
            }
        }
        None => {
            notes.push("iterated commutator matches no predicted generator".to_owned());
            passed = false;
        }
    }

    // lower-bound argument with exponents a_i = 2
    let squared: Vec<Automorphism> = alphas
        .iter()
        .map(|a| aut_pow(a, 2))
        .collect::<Result<_, _>>()?;
    let delta = iterated_commutator(&squared)?;
    match out_nontrivial(&delta, radius)? {
        Ok(reason) => notes.push(format!("squared-exponent commutator nontrivial: {reason}")),
        Err(reason) => {
            notes.push(format!(
                "squared-exponent commutator check failed: {reason}"
            ));
            passed = false;
        }
    }
    Ok(WitnessCheck { passed, notes })
}

#[derive(Debug, Clone)]
pub struct GradingReport {
    pub pairs_checked: usize,
    pub violations: Vec<String>,
    /// Commutator identities discovered: which S level absorbed each
    /// nontrivial commutator.
    pub memberships: Vec<String>,
}

/// Verifies [S_i, S_j] ⊆ S_{i+j-k-1} up to outer equality: every commutator
/// is trivial in Out or, when i + j > k + 1, matches a member of the
/// predicted level.
pub fn verify_filtration_grading(
    g: &Arc<Graph>,
    data: &NilpotencyData,
    radius: usize,
) -> Result<GradingReport, DichotomyError> {
    let k = data.class;
    let mut report = GradingReport {
        pairs_checked: 0,
        violations: Vec::new(),
        memberships: Vec::new(),
    };
    if k == 0 {
        return Ok(report);
    }
    let level_auts: Vec<Vec<(GeneratorSpec, Automorphism)>> = data
        .filtration
        .iter()
        .map(|level| {
            level
                .iter()
                .map(|s| make_generator(g, s).map(|a| (s.clone(), a)))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<_, _>>()?;
    for i in 1..=k {
        for j in 1..=k {
            for (sa, a) in &level_auts[i - 1] {
                for (sb, b) in &level_auts[j - 1] {
                    report.pairs_checked += 1;
                    let kappa = commutator(a, b)?;
                    if kappa.is_identity() {
                        continue;
                    }
                    let conclusively_not_inner = certify_not_inner(&kappa).is_some();
                    if !conclusively_not_inner && is_inner(&kappa, radius)?.is_inner() {
                        continue;
                    }
                    let label = format!("[{}, {}] (S_{i} x S_{j})", sa.render(g), sb.render(g));
                    if i + j <= k + 1 {
                        report
                            .violations
                            .push(format!("{label} must be trivial in Out but is not"));
                        continue;
                    }
                    let target = i + j - k - 1;
                    let mut member = None;
                    for (sm, m) in &level_auts[target - 1] {
                        if out_matches(&kappa, m, radius)?.is_some() {
                            member = Some(sm.clone());
                            break;
                        }
                    }
                    match member {
                        Some(m) => report
                            .memberships
                            .push(format!("{label} = {} in S_{target}", m.render(g))),
                        None => report
                            .violations
                            .push(format!("{label} missing from S_{target}")),
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Checks that iterated commutators of length class+1 drawn from S_k are
/// trivial in Out. Enumerates every tuple when the count fits the budget,
/// otherwise samples deterministically by striding the tuple index space.
pub fn verify_iterated_commutators(
    g: &Arc<Graph>,
    data: &NilpotencyData,
    radius: usize,
    budget: usize,
) -> Result<(usize, Vec<String>), DichotomyError> {
    let k = data.class;
    let Some(top_level) = data.filtration.last() else {
        return Ok((0, Vec::new()));
    };
    let auts: Vec<Automorphism> = top_level
        .iter()
        .map(|s| make_generator(g, s))
        .collect::<Result<_, _>>()?;
    let m = auts.len();
    if m == 0 {
        return Ok((0, Vec::new()));
    }
    let tuple_len = k + 1;
    let total = m.checked_pow(tuple_len as u32).unwrap_or(usize::MAX);
    let stride = total.div_ceil(budget).max(1);
    let mut checked = 0;
    let mut violations = Vec::new();
    let mut index = 0usize;
    while index < total {
        let mut rest = index;
        let tuple: Vec<&Automorphism> = (0..tuple_len)
            .map(|_| {
                let pick = &auts[rest % m];
                rest /= m;
                pick
            })
            .collect();
        let mut acc = tuple[0].clone();
        for a in &tuple[1..] {
            acc = commutator(&acc, a)?;
        }
        checked += 1;
        let trivial = acc.is_identity()
            || (certify_not_inner(&acc).is_none() && is_inner(&acc, radius)?.is_inner());
        if !trivial {
            violations.push(format!(
                "tuple #{index} has a nontrivial iterated commutator"
            ));
        }
        index += stride;
    }
    Ok((checked, violations))
}
