//! Domination depth, star-separation depth, and the per-vertex depth report.
//!
//! Chains are sequences of distinct vertices, each dominating its predecessor,
//! so the longest-chain searches run over simple paths in the domination
//! digraph and terminate even when domination-equivalent cycles exist.

use super::{Graph, GraphError, VertexId, VertexSet};
use std::collections::HashMap;

/// A domination chain x_1, ..., x_m with x_{i+1} ≥ x_i, all distinct.
/// Stored bottom-up; the dominant member is the last entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominationChain {
    pub vertices: Vec<VertexId>,
}

impl DominationChain {
    pub fn length(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn validate(&self, g: &Graph) -> Result<(), GraphError> {
        let mut seen = VertexSet::empty();
        for w in self.vertices.windows(2) {
            if !g.dominates(w[1], w[0])? {
                return Err(GraphError::Precondition(format!(
                    "{} does not dominate {}",
                    g.name(w[1]),
                    g.name(w[0])
                )));
            }
        }
        for &v in &self.vertices {
            if seen.contains(v) {
                return Err(GraphError::Precondition(
                    "chain vertices must be distinct".into(),
                ));
            }
            seen = seen.union(&VertexSet::from_sorted(vec![v]));
        }
        Ok(())
    }

    pub fn render(&self, g: &Graph) -> String {
        self.vertices
            .iter()
            .rev()
            .map(|&v| g.name(v).to_owned())
            .collect::<Vec<_>>()
            .join(" >= ")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexDepth {
    pub vertex: VertexId,
    pub domination_depth: usize,
    pub star_separation_depth: usize,
    pub depth: usize,
    /// Longest chain with this vertex dominant, bottom-up.
    pub domination_chain: DominationChain,
    /// Chain realising the star-separation depth, when nonzero.
    pub star_separation_chain: Option<DominationChain>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DepthReport {
    pub per_vertex: Vec<VertexDepth>,
    pub graph_depth: usize,
}

// The chain search tracks visited vertices in a u64 mask.
fn check_chain_searchable(g: &Graph) -> Result<(), GraphError> {
    if g.vertex_count() > 64 {
        return Err(GraphError::SizeBoundExceeded {
            actual: g.vertex_count(),
            bound: 64,
        });
    }
    Ok(())
}

fn strict_dominated_by(g: &Graph, top: VertexId) -> Vec<VertexId> {
    g.vertices()
        .filter(|&u| u != top && g.dominates(top, u).unwrap())
        .collect()
}

/// Longest simple downward path in the domination digraph starting at `top`,
/// optionally required to end exactly at `bottom`. Returns (length, chain
/// bottom-up) with canonical tie-breaking: the first maximal chain found when
/// candidates are explored in vertex order.
type ChainMemo = HashMap<(VertexId, u64, Option<VertexId>), Option<(usize, Vec<VertexId>)>>;

fn longest_chain_down(
    g: &Graph,
    top: VertexId,
    bottom: Option<VertexId>,
    visited: u64,
    memo: &mut ChainMemo,
) -> Option<(usize, Vec<VertexId>)> {
    if let Some(hit) = memo.get(&(top, visited, bottom)) {
        return hit.clone();
    }
    let mut best: Option<(usize, Vec<VertexId>)> = match bottom {
        Some(b) if b != top => None,
        _ => Some((0, vec![top])),
    };
    for u in strict_dominated_by(g, top) {
        if visited >> u & 1 == 1 {
            continue;
        }
        if let Some((len, mut chain)) = longest_chain_down(g, u, bottom, visited | 1 << u, memo) {
            let cand = len + 1;
            if best.as_ref().is_none_or(|(b, _)| cand > *b) {
                chain.push(top);
                best = Some((cand, chain));
            }
        }
    }
    memo.insert((top, visited, bottom), best.clone());
    best
}

/// Length of the longest domination chain with `x` as the dominant member.
pub fn domination_depth(g: &Graph, x: VertexId) -> Result<usize, GraphError> {
    Ok(domination_depth_chain(g, x)?.length())
}

pub fn domination_depth_chain(g: &Graph, x: VertexId) -> Result<DominationChain, GraphError> {
    if x >= g.vertex_count() {
        return Err(GraphError::UnknownVertex(format!("#{x}")));
    }
    check_chain_searchable(g)?;
    let mut memo = ChainMemo::new();
    let (_, chain) = longest_chain_down(g, x, None, 1 << x, &mut memo)
        .expect("unconstrained search always yields the singleton chain");
    Ok(DominationChain { vertices: chain })
}

/// Whether the chain bottom `b` star-separates in a way the top `x` preserves:
/// the star complement of `b` has two components, neither inside st(x).
fn star_separation_condition(g: &Graph, bottom: VertexId, top: VertexId) -> bool {
    let star_top = g.star(top).unwrap();
    let comps = g.components_excluding(&g.star(bottom).unwrap());
    comps.iter().filter(|c| !c.is_subset(&star_top)).count() >= 2
}

/// One plus the longest star-separation-preserving chain dominated by `x`;
/// zero when no qualifying chain exists.
pub fn star_separation_depth(g: &Graph, x: VertexId) -> Result<usize, GraphError> {
    Ok(star_separation_chain(g, x)?.map_or(0, |c| c.length() + 1))
}

pub fn star_separation_chain(
    g: &Graph,
    x: VertexId,
) -> Result<Option<DominationChain>, GraphError> {
    if x >= g.vertex_count() {
        return Err(GraphError::UnknownVertex(format!("#{x}")));
    }
    check_chain_searchable(g)?;
    let mut best: Option<(usize, Vec<VertexId>)> = None;
    for bottom in g.vertices() {
        if !star_separation_condition(g, bottom, x) {
            continue;
        }
        let mut memo = ChainMemo::new();
        if let Some((len, chain)) = longest_chain_down(g, x, Some(bottom), 1 << x, &mut memo) {
            if best.as_ref().is_none_or(|(b, _)| len > *b) {
                best = Some((len, chain));
            }
        }
    }
    Ok(best.map(|(_, vertices)| DominationChain { vertices }))
}

/// Per-vertex and whole-graph depth, with the realising chains.
pub fn depth_report(g: &Graph) -> DepthReport {
    let mut per_vertex = Vec::with_capacity(g.vertex_count());
    let mut graph_depth = 0;
    for v in g.vertices() {
        let domination_chain = domination_depth_chain(g, v).unwrap();
        let dd = domination_chain.length();
        let ss_chain = star_separation_chain(g, v).unwrap();
        let sd = ss_chain.as_ref().map_or(0, |c| c.length() + 1);
        let depth = dd.max(sd);
        graph_depth = graph_depth.max(depth);
        per_vertex.push(VertexDepth {
            vertex: v,
            domination_depth: dd,
            star_separation_depth: sd,
            depth,
            domination_chain,
            star_separation_chain: ss_chain,
        });
    }
    DepthReport {
        per_vertex,
        graph_depth,
    }
}

impl DepthReport {
    pub fn depth_of(&self, v: VertexId) -> usize {
        self.per_vertex[v].depth
    }
}

#[cfg(test)]
mod tests {
    use super::super::families::gamma_k;
    use super::super::testutil::*;
    use super::*;

    #[test]
    fn domination_depth_gamma2() {
        let g = gamma_k(2);
        let v = |n: &str| g.vertex(n).unwrap();
        assert_eq!(domination_depth(&g, v("x2")).unwrap(), 2);
        assert_eq!(domination_depth(&g, v("x1")).unwrap(), 1);
        assert_eq!(domination_depth(&g, v("x0")).unwrap(), 0);
    }

    #[test]
    fn domination_depth_path4() {
        let g = path(&["a", "b", "c", "d"]);
        assert_eq!(domination_depth(&g, g.vertex("b").unwrap()).unwrap(), 1);
    }

    #[test]
    fn singleton_depth_zero() {
        let g = Graph::new(&["v"], &[]).unwrap();
        assert_eq!(domination_depth(&g, 0).unwrap(), 0);
        assert_eq!(star_separation_depth(&g, 0).unwrap(), 0);
    }

    #[test]
    fn star_separation_path5() {
        let g = path(&["a", "b", "c", "d", "e"]);
        let v = |n: &str| g.vertex(n).unwrap();
        assert_eq!(star_separation_depth(&g, v("c")).unwrap(), 1);
        let chain = star_separation_chain(&g, v("c")).unwrap().unwrap();
        assert_eq!(chain.vertices, vec![v("c")]);
    }

    #[test]
    fn star_separation_zero_cases() {
        let g = path(&["a", "b", "c", "d"]);
        for v in g.vertices() {
            assert_eq!(star_separation_depth(&g, v).unwrap(), 0);
        }
        for k in 1..=4 {
            let g = gamma_k(k);
            for v in g.vertices() {
                assert_eq!(
                    star_separation_depth(&g, v).unwrap(),
                    0,
                    "gamma_{k} vertex {v}"
                );
            }
        }
    }

    #[test]
    fn depth_report_examples() {
        for k in 0..=6 {
            assert_eq!(depth_report(&gamma_k(k)).graph_depth, k, "gamma_{k}");
        }
        assert_eq!(
            depth_report(&path(&["a", "b", "c", "d", "e"])).graph_depth,
            1
        );
        assert_eq!(
            depth_report(&Graph::new(&["v"], &[]).unwrap()).graph_depth,
            0
        );
        assert_eq!(
            depth_report(&Graph::new::<&str>(&[], &[]).unwrap()).graph_depth,
            0
        );
    }

    #[test]
    fn chains_validate() {
        let g = gamma_k(3);
        let report = depth_report(&g);
        for vd in &report.per_vertex {
            vd.domination_chain.validate(&g).unwrap();
            if let Some(c) = &vd.star_separation_chain {
                c.validate(&g).unwrap();
            }
            assert_eq!(vd.depth, vd.domination_depth.max(vd.star_separation_depth));
        }
    }

    #[test]
    fn depth_handles_equivalence_cycles() {
        // Complete graph: all vertices mutually dominating; chains stay simple.
        let g = complete(&["a", "b", "c", "d"]);
        for v in g.vertices() {
            assert_eq!(domination_depth(&g, v).unwrap(), 3);
        }
    }
}
