//! The four sufficient freeness conditions with their reductions to a
//! domination-equivalent pair or a separating intersection of links, plus the
//! finite / virtually-abelian special-case flags.

use super::depth::depth_report;
use super::sil::{find_sil, SilWitness};
use super::{Graph, VertexId, VertexSet};

/// How a satisfied condition reduces to one of the two dichotomy triggers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reduction {
    EquivalentPair { x: VertexId, y: VertexId },
    Sil(SilWitness),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorollaryCondition {
    pub tag: &'static str,
    pub witness: String,
    pub reduction: Reduction,
}

impl Reduction {
    pub fn render(&self, g: &Graph) -> String {
        match self {
            Reduction::EquivalentPair { x, y } => {
                format!("equivalent pair {{{} {}}}", g.name(*x), g.name(*y))
            }
            Reduction::Sil(sil) => sil.render(g),
        }
    }
}

/// Checks the four sufficient conditions and, for each satisfied one,
/// produces both a witness and the reduction its proof prescribes.
pub fn corollary_conditions(g: &Graph) -> Vec<CorollaryCondition> {
    let mut out = Vec::new();
    if let Some(c) = disconnected_condition(g) {
        out.push(c);
    }
    if let Some(c) = cut_vertex_condition(g) {
        out.push(c);
    }
    if let Some(c) = nonadjacent_domination_condition(g) {
        out.push(c);
    }
    if let Some(c) = domination_triple_condition(g) {
        out.push(c);
    }
    out
}

fn is_clique(g: &Graph, set: &VertexSet) -> bool {
    let vs = set.as_slice();
    for (i, &a) in vs.iter().enumerate() {
        for &b in &vs[i + 1..] {
            if !g.adjacent(a, b) {
                return false;
            }
        }
    }
    true
}

fn disconnected_condition(g: &Graph) -> Option<CorollaryCondition> {
    let comps = g.components();
    if comps.len() < 2 {
        return None;
    }
    let witness = format!(
        "components: {}",
        comps
            .iter()
            .map(|c| g.render_set(c))
            .collect::<Vec<_>>()
            .join(" ")
    );
    // Edgeless, or all components complete: two vertices of one component
    // (or any two vertices at all) are domination equivalent.
    if comps.iter().all(|c| is_clique(g, c)) {
        let reduction = if let Some(big) = comps.iter().find(|c| c.len() >= 2) {
            Reduction::EquivalentPair {
                x: big.as_slice()[0],
                y: big.as_slice()[1],
            }
        } else {
            // edgeless with >= 2 vertices
            Reduction::EquivalentPair { x: 0, y: 1 }
        };
        return Some(CorollaryCondition {
            tag: "disconnected",
            witness,
            reduction,
        });
    }
    // Some component holds a non-adjacent pair x, y; lk(x) ∩ lk(y) then cuts
    // them off from every other component.
    for comp in &comps {
        let vs = comp.as_slice();
        for (i, &x) in vs.iter().enumerate() {
            for &y in &vs[i + 1..] {
                if g.adjacent(x, y) {
                    continue;
                }
                let z = g
                    .vertices()
                    .find(|v| !comp.contains(*v))
                    .expect("another component exists");
                let common = g.link(x).unwrap().intersection(&g.link(y).unwrap());
                let component = g
                    .components_excluding(&common)
                    .into_iter()
                    .find(|c| c.contains(z))
                    .expect("z survives the cut");
                let sil = SilWitness { x, y, component };
                sil.validate(g)
                    .expect("disconnected reduction always yields a SIL");
                return Some(CorollaryCondition {
                    tag: "disconnected",
                    witness,
                    reduction: Reduction::Sil(sil),
                });
            }
        }
    }
    unreachable!("non-complete component must contain a non-adjacent pair")
}

fn cut_vertex_condition(g: &Graph) -> Option<CorollaryCondition> {
    let base_count = g.components().len();
    for z in g.vertices() {
        let comps = g.components_excluding(&VertexSet::from_sorted(vec![z]));
        if comps.len() < 3 || comps.len() <= base_count {
            continue;
        }
        // pick neighbors of z in two different components; any third
        // component avoids both, and lk(x) ∩ lk(y) = {z}
        let mut hits = comps
            .iter()
            .filter_map(|c| c.iter().copied().find(|&v| g.adjacent(z, v)));
        let x = hits.next()?;
        let y = hits.next()?;
        let third = comps.iter().find(|c| !c.contains(x) && !c.contains(y))?;
        let sil = SilWitness {
            x,
            y,
            component: third.clone(),
        };
        if sil.validate(g).is_err() {
            continue;
        }
        return Some(CorollaryCondition {
            tag: "cut-vertex",
            witness: format!(
                "cut vertex {} splits into {} components",
                g.name(z),
                comps.len()
            ),
            reduction: Reduction::Sil(sil),
        });
    }
    None
}

fn nonadjacent_domination_condition(g: &Graph) -> Option<CorollaryCondition> {
    for x in g.vertices() {
        for y in g.vertices() {
            if x == y || g.adjacent(x, y) || !g.dominates(x, y).unwrap() {
                continue;
            }
            if let Ok(sil) = super::sil::sil_from_nonadjacent_domination(g, x, y) {
                return Some(CorollaryCondition {
                    tag: "nonadjacent-domination",
                    witness: format!(
                        "{} >= {} with separating st({})",
                        g.name(x),
                        g.name(y),
                        g.name(y)
                    ),
                    reduction: Reduction::Sil(sil),
                });
            }
        }
    }
    None
}

fn domination_triple_condition(g: &Graph) -> Option<CorollaryCondition> {
    for x in g.vertices() {
        for y in g.vertices() {
            for z in g.vertices() {
                if x == y || y == z || x == z {
                    continue;
                }
                if g.adjacent(x, y) || g.adjacent(y, z) || g.adjacent(x, z) {
                    continue;
                }
                if !(g.dominates(x, y).unwrap() && g.dominates(y, z).unwrap()) {
                    continue;
                }
                // y >= z makes z isolated in the star complement of y,
                // so st(y) separates z from x.
                let sil = super::sil::sil_from_nonadjacent_domination(g, x, y)
                    .expect("triple condition implies the domination reduction");
                return Some(CorollaryCondition {
                    tag: "domination-triple",
                    witness: format!(
                        "{} >= {} >= {} pairwise non-adjacent",
                        g.name(x),
                        g.name(y),
                        g.name(z)
                    ),
                    reduction: Reduction::Sil(sil),
                });
            }
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpecialFlags {
    /// No distinct dominating pair and no separating star: the outer
    /// automorphism group is finite.
    pub out_finite: bool,
    /// Both dichotomy conditions fail and the depth is at most one.
    pub virtually_abelian: bool,
}

pub fn classify_special(g: &Graph) -> SpecialFlags {
    let any_domination = g
        .vertices()
        .any(|x| g.vertices().any(|y| x != y && g.dominates(x, y).unwrap()));
    let any_star_separates = g
        .vertices()
        .any(|x| g.components_excluding(&g.star(x).unwrap()).len() >= 2);
    let out_finite = !any_domination && !any_star_separates;
    let both_fail = g.domination_equivalent_pairs().is_empty() && find_sil(g).is_none();
    let virtually_abelian = both_fail && depth_report(g).graph_depth <= 1;
    SpecialFlags {
        out_finite,
        virtually_abelian,
    }
}
