//! Enumeration of graph symmetries (adjacency-preserving vertex permutations).

use super::{Graph, GraphError, VertexId};

pub const DEFAULT_SYMMETRY_BOUND: usize = 10;

/// All adjacency-preserving permutations of the vertices, identity first,
/// in lexicographic order of the image vectors.
pub fn enumerate_graph_symmetries(g: &Graph) -> Result<Vec<Vec<VertexId>>, GraphError> {
    enumerate_graph_symmetries_with_bound(g, DEFAULT_SYMMETRY_BOUND)
}

pub fn enumerate_graph_symmetries_with_bound(
    g: &Graph,
    bound: usize,
) -> Result<Vec<Vec<VertexId>>, GraphError> {
    let n = g.vertex_count();
    if n > bound {
        return Err(GraphError::SizeBoundExceeded { actual: n, bound });
    }
    let degrees: Vec<usize> = (0..n)
        .map(|v| (0..n).filter(|&u| g.adjacent(v, u)).count())
        .collect();
    let mut image: Vec<VertexId> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    let mut out = Vec::new();
    search(g, &degrees, &mut image, &mut used, &mut out);
    out.sort_unstable();
    debug_assert!(out.is_empty() || out[0] == (0..n).collect::<Vec<_>>());
    Ok(out)
}

fn search(
    g: &Graph,
    degrees: &[usize],
    image: &mut Vec<VertexId>,
    used: &mut [bool],
    out: &mut Vec<Vec<VertexId>>,
) {
    let n = g.vertex_count();
    let v = image.len();
    if v == n {
        out.push(image.clone());
        return;
    }
    for w in 0..n {
        if used[w] || degrees[v] != degrees[w] {
            continue;
        }
        // adjacency with all previously assigned vertices must be preserved
        if (0..v).any(|u| g.adjacent(v, u) != g.adjacent(w, image[u])) {
            continue;
        }
        used[w] = true;
        image.push(w);
        search(g, degrees, image, used, out);
        image.pop();
        used[w] = false;
    }
}

/// Composes two permutations: the result maps v to `outer[inner[v]]`.
pub fn compose_permutations(outer: &[VertexId], inner: &[VertexId]) -> Vec<VertexId> {
    inner.iter().map(|&v| outer[v]).collect()
}

/// Inverse permutation.
pub fn invert_permutation(perm: &[VertexId]) -> Vec<VertexId> {
    let mut inv = vec![0; perm.len()];
    for (v, &w) in perm.iter().enumerate() {
        inv[w] = v;
    }
    inv
}

/// Cycle notation for reports; fixed points omitted, `()` for the identity.
pub fn render_permutation(g: &Graph, perm: &[VertexId]) -> String {
    let n = perm.len();
    let mut seen = vec![false; n];
    let mut out = String::new();
    for start in 0..n {
        if seen[start] || perm[start] == start {
            seen[start] = true;
            continue;
        }
        let mut cycle = Vec::new();
        let mut v = start;
        while !seen[v] {
            seen[v] = true;
            cycle.push(g.name(v));
            v = perm[v];
        }
        out.push('(');
        out.push_str(&cycle.join(" "));
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::families::gamma_k;
    use super::super::testutil::*;
    use super::*;

    #[test]
    fn path3_symmetries() {
        let g = path(&["a", "b", "c"]);
        let syms = enumerate_graph_symmetries(&g).unwrap();
        assert_eq!(syms, vec![vec![0, 1, 2], vec![2, 1, 0]]);
    }

    #[test]
    fn triangle_symmetries() {
        let g = complete(&["a", "b", "c"]);
        assert_eq!(enumerate_graph_symmetries(&g).unwrap().len(), 6);
    }

    #[test]
    fn gamma2_symmetries() {
        let g = gamma_k(2);
        let syms = enumerate_graph_symmetries(&g).unwrap();
        // identity and the swap x_i <-> y_i
        assert_eq!(syms.len(), 2);
        assert_eq!(syms[0], (0..6).collect::<Vec<_>>());
        assert_eq!(syms[1], vec![3, 4, 5, 0, 1, 2]);
    }

    #[test]
    fn closure_under_composition_and_inverse() {
        for g in [
            path(&["a", "b", "c", "d"]),
            cycle(&["a", "b", "c", "d", "e"]),
            spider3(),
        ] {
            let syms = enumerate_graph_symmetries(&g).unwrap();
            for p in &syms {
                assert!(syms.contains(&invert_permutation(p)));
                for q in &syms {
                    assert!(syms.contains(&compose_permutations(p, q)));
                }
            }
        }
    }

    #[test]
    fn bound_enforced() {
        let names: Vec<String> = (0..11).map(|i| format!("v{i}")).collect();
        let g = Graph::new(&names, &[]).unwrap();
        assert!(matches!(
            enumerate_graph_symmetries(&g),
            Err(GraphError::SizeBoundExceeded { .. })
        ));
    }

    #[test]
    fn render_cycles() {
        let g = path(&["a", "b", "c"]);
        let syms = enumerate_graph_symmetries(&g).unwrap();
        assert_eq!(render_permutation(&g, &syms[0]), "()");
        assert_eq!(render_permutation(&g, &syms[1]), "(a c)");
    }
}
