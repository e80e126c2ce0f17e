//! Machine verification of the three commutation lemmas on a concrete graph:
//! exact commutation of multiplier-fixing pairs when no SIL exists, outer
//! commutation of partial conjugations with explicitly constructed inner
//! witnesses, and the commutator identities that send transvection pairs to
//! a generator with the outer multiplier.

use super::DichotomyError;
use crate::auto::{
    commutator, enumerate_laurence_generators, equal_in_aut, invert_aut, make_generator,
    Automorphism, GeneratorSpec, Side,
};
use crate::graph::{find_sil, Graph, VertexId, VertexSet};
use crate::words::{GroupElement, Letter, Sign};
use std::sync::Arc;

#[derive(Debug, Clone)]
pub struct LemmaReport {
    pub sil_free: bool,
    pub both_conditions_fail: bool,
    pub general_pairs: usize,
    pub general_failures: Vec<String>,
    pub commute_pairs: usize,
    pub commute_failures: Vec<String>,
    pub steinberg_instances: usize,
    pub steinberg_failures: Vec<String>,
    /// The discovered commutator identities, one per Steinberg instance.
    pub steinberg_identities: Vec<String>,
}

impl LemmaReport {
    pub fn failure_count(&self) -> usize {
        self.general_failures.len() + self.commute_failures.len() + self.steinberg_failures.len()
    }
}

fn multiplier_vertex(spec: &GeneratorSpec) -> Option<VertexId> {
    match spec {
        GeneratorSpec::PartialConjugation { multiplier, .. }
        | GeneratorSpec::Transvection { multiplier, .. } => Some(multiplier.vertex),
        _ => None,
    }
}

fn fixes_vertex(aut: &Automorphism, v: VertexId) -> bool {
    aut.image_of(v).letters() == [Letter::pos(v)]
}

/// Region complement within the star complement of the multiplier.
fn flip_region(g: &Graph, multiplier: VertexId, region: &VertexSet) -> VertexSet {
    let star = g.star(multiplier).unwrap();
    let all: VertexSet = g.vertices().filter(|v| !star.contains(*v)).collect();
    all.difference(region)
}

/// Splits a partial conjugation as adjusted ∘ conj(p): when the adjusted
/// form must fix `avoid`, the region flips to its complement and p is the
/// multiplier letter; otherwise the spec is returned untouched with p = 1.
fn inner_adjust(
    g: &Arc<Graph>,
    spec: &GeneratorSpec,
    avoid: VertexId,
) -> Result<(Automorphism, GroupElement), DichotomyError> {
    match spec {
        GeneratorSpec::PartialConjugation { multiplier, region } if region.contains(avoid) => {
            let flipped = GeneratorSpec::PartialConjugation {
                multiplier: multiplier.inverse(),
                region: flip_region(g, multiplier.vertex, region),
            };
            let p = GroupElement::generator(g.clone(), *multiplier)?;
            Ok((make_generator(g, &flipped)?, p))
        }
        _ => Ok((make_generator(g, spec)?, GroupElement::identity(g.clone()))),
    }
}

/// Verifies the full lemma battery on one graph; hypotheses that the graph
/// does not satisfy simply yield zero applicable pairs.
pub fn verify_lemma_commutations(
    g: &Arc<Graph>,
    radius: usize,
) -> Result<LemmaReport, DichotomyError> {
    let sil_free = find_sil(g).is_none();
    let both_conditions_fail = sil_free && g.domination_equivalent_pairs().is_empty();
    let mut report = LemmaReport {
        sil_free,
        both_conditions_fail,
        general_pairs: 0,
        general_failures: Vec::new(),
        commute_pairs: 0,
        commute_failures: Vec::new(),
        steinberg_instances: 0,
        steinberg_failures: Vec::new(),
        steinberg_identities: Vec::new(),
    };
    let moving: Vec<(GeneratorSpec, Automorphism)> = enumerate_laurence_generators(g)?
        .into_iter()
        .filter(|s| {
            matches!(
                s,
                GeneratorSpec::PartialConjugation { .. } | GeneratorSpec::Transvection { .. }
            )
        })
        .map(|s| make_generator(g, &s).map(|a| (s, a)))
        .collect::<Result<_, _>>()?;

    if sil_free {
        check_general_commutation(g, &moving, &mut report)?;
        check_outer_commutation(g, &moving, &mut report)?;
    }
    if both_conditions_fail {
        check_steinberg(g, &moving, radius, &mut report)?;
    }
    Ok(report)
}

/// Partial conjugations and transvections that fix each other's multipliers
/// commute exactly in Aut.
fn check_general_commutation(
    g: &Arc<Graph>,
    moving: &[(GeneratorSpec, Automorphism)],
    report: &mut LemmaReport,
) -> Result<(), DichotomyError> {
    for (i, (sa, a)) in moving.iter().enumerate() {
        for (sb, b) in moving.iter().skip(i + 1) {
            let (Some(x), Some(y)) = (multiplier_vertex(sa), multiplier_vertex(sb)) else {
                continue;
            };
            if !fixes_vertex(a, y) || !fixes_vertex(b, x) {
                continue;
            }
            report.general_pairs += 1;
            if !commutator(a, b)?.is_identity() {
                report.general_failures.push(format!(
                    "[{}, {}] is not the identity",
                    sa.render(g),
                    sb.render(g)
                ));
            }
        }
    }
    Ok(())
}

/// A partial conjugation commutes in Out with any partial conjugation and
/// with any transvection fixing its multiplier. The inner witness comes from
/// the proof: adjust each factor by conjugation with its own multiplier so
/// the adjusted pair commutes exactly, then the commutator is conjugation by
/// q · adjusted_b^-1(p) · adjusted_a^-1(q^-1) · p^-1.
fn check_outer_commutation(
    g: &Arc<Graph>,
    moving: &[(GeneratorSpec, Automorphism)],
    report: &mut LemmaReport,
) -> Result<(), DichotomyError> {
    for (sa, a) in moving {
        let GeneratorSpec::PartialConjugation { multiplier: ma, .. } = sa else {
            continue;
        };
        let x = ma.vertex;
        for (sb, b) in moving {
            if sa == sb {
                continue;
            }
            let qualifies = match sb {
                GeneratorSpec::PartialConjugation { .. } => true,
                GeneratorSpec::Transvection { target, .. } => {
                    // the lemma needs the transvection to fix the multiplier
                    *target != x
                }
                _ => false,
            };
            let Some(y) = multiplier_vertex(sb) else {
                continue;
            };
            if !qualifies {
                continue;
            }
            report.commute_pairs += 1;
            let (a_hat, p) = inner_adjust(g, sa, y)?;
            let (b_hat, q) = inner_adjust(g, sb, x)?;
            if !commutator(&a_hat, &b_hat)?.is_identity() {
                report.commute_failures.push(format!(
                    "adjusted [{}, {}] is not the identity in Aut",
                    sa.render(g),
                    sb.render(g)
                ));
                continue;
            }
            let witness = q
                .mul(&invert_aut(&b_hat).apply_element(&p)?)?
                .mul(&invert_aut(&a_hat).apply_element(&q.inverse())?)?
                .mul(&p.inverse())?;
            let kappa = commutator(a, b)?;
            let mut ok = true;
            for v in g.vertices() {
                let gen = GroupElement::generator(g.clone(), Letter::pos(v)).unwrap();
                if *kappa.image_of(v) != gen.conjugate_by(&witness)? {
                    ok = false;
                    break;
                }
            }
            if !ok {
                report.commute_failures.push(format!(
                    "[{}, {}] is not conjugation by the constructed witness `{}`",
                    sa.render(g),
                    sb.render(g),
                    witness
                ));
            }
        }
    }
    Ok(())
}

fn signed(aut: &Automorphism, sign: Sign) -> Automorphism {
    match sign {
        Sign::Pos => aut.clone(),
        Sign::Neg => invert_aut(aut),
    }
}

/// When both dichotomy conditions fail, any commutator of a transvection
/// (or its inverse) with a multiplier-matched generator (or its inverse) is
/// again a transvection or partial conjugation whose multiplier is the
/// outer one. The expected generator is computed, not assumed, and recorded.
fn check_steinberg(
    g: &Arc<Graph>,
    moving: &[(GeneratorSpec, Automorphism)],
    radius: usize,
    report: &mut LemmaReport,
) -> Result<(), DichotomyError> {
    for (sa, a) in moving {
        let GeneratorSpec::Transvection {
            multiplier: ma,
            target: y,
            ..
        } = sa
        else {
            continue;
        };
        let x = ma.vertex;
        for (sb, b) in moving {
            if multiplier_vertex(sb) != Some(*y) || sa == sb {
                continue;
            }
            if let GeneratorSpec::Transvection { target, .. } = sb {
                if *target == x {
                    // would force x ~ y, excluded by the failed conditions
                    continue;
                }
            }
            let candidates = steinberg_candidates(g, x, sb);
            for alpha_sign in [Sign::Pos, Sign::Neg] {
                for beta_sign in [Sign::Pos, Sign::Neg] {
                    for flip_order in [false, true] {
                        let u = signed(a, alpha_sign);
                        let v = signed(b, beta_sign);
                        let gamma = if flip_order {
                            commutator(&v, &u)?
                        } else {
                            commutator(&u, &v)?
                        };
                        report.steinberg_instances += 1;
                        let label = format!(
                            "[{}{}, {}{}]{}",
                            sa.render(g),
                            exp(alpha_sign),
                            sb.render(g),
                            exp(beta_sign),
                            if flip_order { " reversed" } else { "" },
                        );
                        match identify(g, &gamma, &candidates, radius)? {
                            Some(found) => report
                                .steinberg_identities
                                .push(format!("{label} = {found}")),
                            None => report
                                .steinberg_failures
                                .push(format!("{label} matches no predicted generator")),
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn exp(sign: Sign) -> &'static str {
    match sign {
        Sign::Pos => "",
        Sign::Neg => "^-1",
    }
}

/// The predicted shapes: a transvection on the same target, or a partial
/// conjugation on the region pushed outside the new multiplier's star.
fn steinberg_candidates(g: &Arc<Graph>, x: VertexId, beta: &GeneratorSpec) -> Vec<GeneratorSpec> {
    let mut out = Vec::new();
    match beta {
        GeneratorSpec::Transvection { target, .. } => {
            for sign in [Sign::Pos, Sign::Neg] {
                for side in [Side::Right, Side::Left] {
                    out.push(GeneratorSpec::Transvection {
                        multiplier: Letter { vertex: x, sign },
                        target: *target,
                        side,
                    });
                }
            }
        }
        GeneratorSpec::PartialConjugation { multiplier, region } => {
            let star_x = g.star(x).unwrap();
            let mut regions = vec![region.difference(&star_x)];
            let flipped = flip_region(g, multiplier.vertex, region).difference(&star_x);
            if !regions.contains(&flipped) {
                regions.push(flipped);
            }
            for region in regions {
                if region.is_empty() {
                    continue;
                }
                for sign in [Sign::Pos, Sign::Neg] {
                    out.push(GeneratorSpec::PartialConjugation {
                        multiplier: Letter { vertex: x, sign },
                        region: region.clone(),
                    });
                }
            }
        }
        _ => {}
    }
    out.retain(|spec| spec.validate(g).is_ok());
    out
}

fn identify(
    g: &Arc<Graph>,
    gamma: &Automorphism,
    candidates: &[GeneratorSpec],
    radius: usize,
) -> Result<Option<String>, DichotomyError> {
    if gamma.is_identity() {
        return Ok(Some("identity".to_owned()));
    }
    for cand in candidates {
        let cand_aut = make_generator(g, cand)?;
        if equal_in_aut(gamma, &cand_aut) {
            return Ok(Some(format!("{} (exact in Aut)", cand.render(g))));
        }
        if crate::auto::equal_in_out(gamma, &cand_aut, radius)?.is_inner() {
            return Ok(Some(format!("{} (in Out)", cand.render(g))));
        }
    }
    // a trivial outer class also satisfies the lemma's conclusion
    if crate::auto::is_inner(gamma, radius)?.is_inner() {
        return Ok(Some("inner (trivial in Out)".to_owned()));
    }
    Ok(None)
}
