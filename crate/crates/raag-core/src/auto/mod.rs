//! Executable automorphisms of the right-angled Artin group: the four
//! generator families (inversions, graphic automorphisms, partial
//! conjugations, transvections), application to words, composition,
//! commutators, the abelianized action, and inner-detection.

mod inner;

pub use inner::{certify_not_inner, equal_in_out, is_inner, InnerVerdict};

use crate::graph::{self, Graph, GraphError, VertexId, VertexSet};
use crate::matrix::IntegerMatrix;
use crate::words::{
    concat_reduce, invert, normal_form, GroupElement, Letter, Sign, Word, WordError,
};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AutError {
    #[error("illegal generator spec: {0}")]
    IllegalSpec(String),
    #[error("automorphisms belong to different ambient graphs")]
    AmbientMismatch,
    #[error("graph has {actual} vertices, exceeding the bound {bound}")]
    SizeBound { actual: usize, bound: usize },
    #[error("invalid automorphism: {0}")]
    InvalidAutomorphism(String),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Right,
    Left,
}

/// Tagged description of a Laurence generator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GeneratorSpec {
    Inversion {
        vertex: VertexId,
    },
    Graphic {
        perm: Vec<VertexId>,
    },
    PartialConjugation {
        multiplier: Letter,
        region: VertexSet,
    },
    Transvection {
        multiplier: Letter,
        target: VertexId,
        side: Side,
    },
}

impl GeneratorSpec {
    pub fn right_transvection(multiplier: VertexId, target: VertexId) -> GeneratorSpec {
        GeneratorSpec::Transvection {
            multiplier: Letter::pos(multiplier),
            target,
            side: Side::Right,
        }
    }

    pub fn partial_conjugation(multiplier: VertexId, region: VertexSet) -> GeneratorSpec {
        GeneratorSpec::PartialConjugation {
            multiplier: Letter::pos(multiplier),
            region,
        }
    }

    /// Validates the structural invariants against the host graph.
    pub fn validate(&self, g: &Graph) -> Result<(), AutError> {
        let n = g.vertex_count();
        match self {
            GeneratorSpec::Inversion { vertex } => {
                if *vertex >= n {
                    return Err(AutError::IllegalSpec(format!("unknown vertex #{vertex}")));
                }
            }
            GeneratorSpec::Graphic { perm } => {
                if perm.len() != n {
                    return Err(AutError::IllegalSpec("permutation length mismatch".into()));
                }
                let mut seen = vec![false; n];
                for &img in perm {
                    if img >= n || seen[img] {
                        return Err(AutError::IllegalSpec("not a permutation".into()));
                    }
                    seen[img] = true;
                }
                for i in 0..n {
                    for j in (i + 1)..n {
                        if g.adjacent(i, j) != g.adjacent(perm[i], perm[j]) {
                            return Err(AutError::IllegalSpec(
                                "permutation does not preserve adjacency".into(),
                            ));
                        }
                    }
                }
            }
            GeneratorSpec::PartialConjugation { multiplier, region } => {
                let x = multiplier.vertex;
                if x >= n {
                    return Err(AutError::IllegalSpec(format!("unknown vertex #{x}")));
                }
                if region.is_empty() {
                    return Err(AutError::IllegalSpec("empty conjugation region".into()));
                }
                validate_region(g, x, region)?;
            }
            GeneratorSpec::Transvection {
                multiplier, target, ..
            } => {
                let x = multiplier.vertex;
                if x >= n || *target >= n {
                    return Err(AutError::IllegalSpec("unknown vertex".into()));
                }
                if x == *target {
                    return Err(AutError::IllegalSpec(
                        "transvection multiplier equals its target".into(),
                    ));
                }
                if !g.dominates(x, *target)? {
                    return Err(AutError::IllegalSpec(format!(
                        "transvection requires {} >= {}",
                        g.name(x),
                        g.name(*target)
                    )));
                }
            }
        }
        Ok(())
    }

    /// Whether a partial conjugation represents a nontrivial outer class:
    /// the region and the rest beyond the multiplier's star are both
    /// nonempty. Other generator kinds return true.
    pub fn is_out_nontrivial(&self, g: &Graph) -> bool {
        match self {
            GeneratorSpec::PartialConjugation { multiplier, region } => {
                if region.is_empty() {
                    return false;
                }
                let star = g.star(multiplier.vertex).unwrap();

                (0..g.vertex_count()).any(|v| !star.contains(v) && !region.contains(v))
            }
            _ => true,
        }
    }

    /// Report syntax: `inv v`, `graphic (cycles)`, `pc x {region}`,
    /// `tv x -> y [left]`, with `x^-1` for inverted multipliers.
    pub fn render(&self, g: &Graph) -> String {
        match self {
            GeneratorSpec::Inversion { vertex } => format!("inv {}", g.name(*vertex)),
            GeneratorSpec::Graphic { perm } => {
                format!("graphic {}", graph::render_permutation(g, perm))
            }
            GeneratorSpec::PartialConjugation { multiplier, region } => {
                format!("pc {} {}", multiplier.render(g), g.render_set(region))
            }
            GeneratorSpec::Transvection {
                multiplier,
                target,
                side,
            } => {
                let suffix = match side {
                    Side::Right => "",
                    Side::Left => " left",
                };
                format!(
                    "tv {} -> {}{}",
                    multiplier.render(g),
                    g.name(*target),
                    suffix
                )
            }
        }
    }

    /// The spec of the inverse automorphism.
    pub fn inverse_spec(&self) -> GeneratorSpec {
        match self {
            GeneratorSpec::Inversion { vertex } => GeneratorSpec::Inversion { vertex: *vertex },
            GeneratorSpec::Graphic { perm } => GeneratorSpec::Graphic {
                perm: graph::invert_permutation(perm),
            },
            GeneratorSpec::PartialConjugation { multiplier, region } => {
                GeneratorSpec::PartialConjugation {
                    multiplier: multiplier.inverse(),
                    region: region.clone(),
                }
            }
            GeneratorSpec::Transvection {
                multiplier,
                target,
                side,
            } => GeneratorSpec::Transvection {
                multiplier: multiplier.inverse(),
                target: *target,
                side: *side,
            },
        }
    }
}

/// The region must be a union of connected components of the complement of
/// the multiplier's star.
fn validate_region(g: &Graph, x: VertexId, region: &VertexSet) -> Result<(), AutError> {
    let star = g.star(x)?;
    if !region.is_disjoint(&star) {
        return Err(AutError::IllegalSpec("region meets st(multiplier)".into()));
    }
    for comp in g.components_excluding(&star) {
        let inter = comp.intersection(region);
        if !inter.is_empty() && inter != comp {
            return Err(AutError::IllegalSpec(
                "region is not a union of components of the star complement".into(),
            ));
        }
    }
    Ok(())
}

/// An automorphism given by generator images, with a verified inverse.
#[derive(Debug, Clone)]
pub struct Automorphism {
    graph: Arc<Graph>,
    images: Vec<GroupElement>,
    inverse_images: Vec<GroupElement>,
}

impl PartialEq for Automorphism {
    fn eq(&self, other: &Self) -> bool {
        self.images == other.images
    }
}

impl Eq for Automorphism {}

fn substitute(
    map: &[GroupElement],
    graph: &Arc<Graph>,
    letters: &[Letter],
) -> Result<GroupElement, WordError> {
    let mut acc = GroupElement::identity(graph.clone());
    for l in letters {
        if l.vertex >= map.len() {
            return Err(WordError::ForeignLetter(l.vertex));
        }
        let piece = match l.sign {
            Sign::Pos => map[l.vertex].clone(),
            Sign::Neg => invert(&map[l.vertex]),
        };
        acc = concat_reduce(&acc, &piece)?;
    }
    Ok(acc)
}

impl Automorphism {
    pub fn identity(graph: Arc<Graph>) -> Automorphism {
        let images: Vec<GroupElement> = graph
            .vertices()
            .map(|v| GroupElement::generator(graph.clone(), Letter::pos(v)).unwrap())
            .collect();
        Automorphism {
            graph,
            images: images.clone(),
            inverse_images: images,
        }
    }

    /// Builds and verifies: the images must preserve every edge relation and
    /// the two maps must invert each other on every generator.
    pub fn new(
        graph: Arc<Graph>,
        images: Vec<GroupElement>,
        inverse_images: Vec<GroupElement>,
    ) -> Result<Automorphism, AutError> {
        let n = graph.vertex_count();
        if images.len() != n || inverse_images.len() != n {
            return Err(AutError::InvalidAutomorphism(
                "one image per vertex required".into(),
            ));
        }
        for u in 0..n {
            for v in (u + 1)..n {
                if graph.adjacent(u, v) {
                    let uv = concat_reduce(&images[u], &images[v])?;
                    let vu = concat_reduce(&images[v], &images[u])?;
                    if uv != vu {
                        return Err(AutError::InvalidAutomorphism(format!(
                            "images of adjacent {} and {} do not commute",
                            graph.name(u),
                            graph.name(v)
                        )));
                    }
                }
            }
        }
        let aut = Automorphism {
            graph: graph.clone(),
            images,
            inverse_images,
        };
        for v in 0..n {
            let gen = GroupElement::generator(graph.clone(), Letter::pos(v)).unwrap();
            let round = substitute(&aut.inverse_images, &graph, aut.images[v].letters())?;
            let round_back = substitute(&aut.images, &graph, aut.inverse_images[v].letters())?;
            if round != gen || round_back != gen {
                return Err(AutError::InvalidAutomorphism(format!(
                    "maps do not invert each other at {}",
                    graph.name(v)
                )));
            }
        }
        Ok(aut)
    }

    fn from_parts(
        graph: Arc<Graph>,
        images: Vec<GroupElement>,
        inverse_images: Vec<GroupElement>,
    ) -> Automorphism {
        Automorphism {
            graph,
            images,
            inverse_images,
        }
    }

    pub fn graph(&self) -> &Arc<Graph> {
        &self.graph
    }

    pub fn image_of(&self, v: VertexId) -> &GroupElement {
        &self.images[v]
    }

    pub fn is_identity(&self) -> bool {
        self.graph
            .vertices()
            .all(|v| self.images[v].letters() == [Letter::pos(v)])
    }

    /// Substitutes images letterwise and normalizes.
    pub fn apply(&self, w: &Word) -> Result<GroupElement, AutError> {
        Ok(substitute(&self.images, &self.graph, &w.letters)?)
    }

    pub fn apply_element(&self, e: &GroupElement) -> Result<GroupElement, AutError> {
        if !crate::words::same_graph(self.graph(), e.graph()) {
            return Err(AutError::AmbientMismatch);
        }
        Ok(substitute(&self.images, &self.graph, e.letters())?)
    }

    pub fn render(&self) -> String {
        let pieces: Vec<String> = self
            .graph
            .vertices()
            .map(|v| format!("{} -> {}", self.graph.name(v), self.images[v]))
            .collect();
        pieces.join(", ")
    }
}

/// Builds the automorphism a generator spec describes, with its verified
/// inverse.
pub fn make_generator(graph: &Arc<Graph>, spec: &GeneratorSpec) -> Result<Automorphism, AutError> {
    spec.validate(graph)?;
    let build = |s: &GeneratorSpec| -> Vec<GroupElement> {
        graph
            .vertices()
            .map(|v| {
                let letters = match s {
                    GeneratorSpec::Inversion { vertex } => {
                        if v == *vertex {
                            vec![Letter::neg(v)]
                        } else {
                            vec![Letter::pos(v)]
                        }
                    }
                    GeneratorSpec::Graphic { perm } => vec![Letter::pos(perm[v])],
                    GeneratorSpec::PartialConjugation { multiplier, region } => {
                        if region.contains(v) {
                            vec![multiplier.inverse(), Letter::pos(v), *multiplier]
                        } else {
                            vec![Letter::pos(v)]
                        }
                    }
                    GeneratorSpec::Transvection {
                        multiplier,
                        target,
                        side,
                    } => {
                        if v == *target {
                            match side {
                                Side::Right => vec![Letter::pos(v), *multiplier],
                                Side::Left => vec![*multiplier, Letter::pos(v)],
                            }
                        } else {
                            vec![Letter::pos(v)]
                        }
                    }
                };
                normal_form(graph.clone(), &Word::new(letters)).expect("generator images are valid")
            })
            .collect()
    };
    let images = build(spec);
    let inverse_images = build(&spec.inverse_spec());
    Automorphism::new(graph.clone(), images, inverse_images)
}

pub const DEFAULT_GENERATOR_BOUND: usize = 10;

/// The Laurence generators in canonical order: inversions, graphic
/// automorphisms, partial conjugations by single components (only those
/// representing nontrivial outer classes), then right and left
/// transvections. Multipliers are listed positively; inverses are group
/// inverses, not separate entries.
pub fn enumerate_laurence_generators(g: &Graph) -> Result<Vec<GeneratorSpec>, AutError> {
    enumerate_laurence_generators_with_bound(g, DEFAULT_GENERATOR_BOUND)
}

pub fn enumerate_laurence_generators_with_bound(
    g: &Graph,
    bound: usize,
) -> Result<Vec<GeneratorSpec>, AutError> {
    let n = g.vertex_count();
    if n > bound {
        return Err(AutError::SizeBound { actual: n, bound });
    }
    let mut out = Vec::new();
    for v in g.vertices() {
        out.push(GeneratorSpec::Inversion { vertex: v });
    }
    for perm in graph::enumerate_graph_symmetries_with_bound(g, bound)? {
        out.push(GeneratorSpec::Graphic { perm });
    }
    for x in g.vertices() {
        let comps = g.components_excluding(&g.star(x)?);
        if comps.len() < 2 {
            // a single component would be conjugation by x itself
            continue;
        }
        for comp in comps {
            out.push(GeneratorSpec::PartialConjugation {
                multiplier: Letter::pos(x),
                region: comp,
            });
        }
    }
    for side in [Side::Right, Side::Left] {
        for x in g.vertices() {
            for y in g.vertices() {
                if x != y && g.dominates(x, y)? {
                    out.push(GeneratorSpec::Transvection {
                        multiplier: Letter::pos(x),
                        target: y,
                        side,
                    });
                }
            }
        }
    }
    Ok(out)
}

/// (a ∘ b)(v) = a(b(v)).
pub fn compose(a: &Automorphism, b: &Automorphism) -> Result<Automorphism, AutError> {
    if !crate::words::same_graph(a.graph(), b.graph()) {
        return Err(AutError::AmbientMismatch);
    }
    let images = b
        .images
        .iter()
        .map(|e| substitute(&a.images, &a.graph, e.letters()))
        .collect::<Result<Vec<_>, _>>()?;
    let inverse_images = a
        .inverse_images
        .iter()
        .map(|e| substitute(&b.inverse_images, &b.graph, e.letters()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Automorphism::from_parts(
        a.graph.clone(),
        images,
        inverse_images,
    ))
}

pub fn invert_aut(a: &Automorphism) -> Automorphism {
    Automorphism::from_parts(a.graph.clone(), a.inverse_images.clone(), a.images.clone())
}

pub fn equal_in_aut(a: &Automorphism, b: &Automorphism) -> bool {
    crate::words::same_graph(a.graph(), b.graph()) && a.images == b.images
}

/// The repo-wide commutator convention: [a, b] = a^-1 b^-1 a b.
pub fn commutator(a: &Automorphism, b: &Automorphism) -> Result<Automorphism, AutError> {
    let ai = invert_aut(a);
    let bi = invert_aut(b);
    compose(&compose(&compose(&ai, &bi)?, a)?, b)
}

pub fn aut_pow(a: &Automorphism, k: u32) -> Result<Automorphism, AutError> {
    let mut out = Automorphism::identity(a.graph.clone());
    for _ in 0..k {
        out = compose(&out, a)?;
    }
    Ok(out)
}

/// Column v is the exponent-sum vector of the image of v; functorial under
/// composition.
pub fn abelianization_matrix(aut: &Automorphism) -> IntegerMatrix {
    let n = aut.graph.vertex_count();
    let mut m = IntegerMatrix::zero(n);
    for v in 0..n {
        for (row, count) in aut.images[v].exponent_vector().into_iter().enumerate() {
            m.set(row, v, count);
        }
    }
    m
}

/// True exactly when the region and the leftover beyond the star are both
/// nonempty, which certifies the partial conjugation is not inner.
pub fn certify_partial_conjugation_nontrivial(
    g: &Graph,
    multiplier: Letter,
    region: &VertexSet,
) -> Result<bool, AutError> {
    if multiplier.vertex >= g.vertex_count() {
        return Err(AutError::IllegalSpec("unknown multiplier vertex".into()));
    }
    validate_region(g, multiplier.vertex, region)?;
    if region.is_empty() {
        return Ok(false);
    }
    let star = g.star(multiplier.vertex)?;
    let leftover = g
        .vertices()
        .any(|v| !star.contains(v) && !region.contains(v));
    Ok(leftover)
}
