//! Exhaustive enumeration of small graphs up to isomorphism, used by the
//! census command and the oracle-driven test suites.
//!
//! A graph on n vertices is keyed by its edge indicators in colex pair order
//! (0,1), (0,2), (1,2), (0,3), ..., packed with the first pair most
//! significant. The canonical form is the minimum key over all vertex
//! permutations, found by branch and bound: assigning vertices to positions
//! 0..k determines exactly the leading C(k,2) bits of the key, so a partial
//! assignment worse than the incumbent can be cut immediately.

use super::{Graph, GraphError};

/// Adjacency matrix as row bitmasks, the working form for canonicalization.
#[derive(Clone)]
struct AdjRows {
    n: usize,
    rows: Vec<u64>,
}

impl AdjRows {
    fn has(&self, i: usize, j: usize) -> bool {
        self.rows[i] >> j & 1 == 1
    }

    fn add(&mut self, i: usize, j: usize) {
        self.rows[i] |= 1 << j;
        self.rows[j] |= 1 << i;
    }
}

fn total_bits(n: usize) -> u32 {
    (n * (n - 1) / 2) as u32
}

/// Minimum colex key over all relabelings.
fn canonical_key(adj: &AdjRows) -> u64 {
    let n = adj.n;
    if n <= 1 {
        return 0;
    }
    // start with the identity labeling as the incumbent
    let mut best = full_key(adj, &(0..n).collect::<Vec<_>>());
    let mut perm = Vec::with_capacity(n);
    let mut used = vec![false; n];
    canon_search(adj, &mut perm, &mut used, 0, &mut best);
    best
}

fn full_key(adj: &AdjRows, perm: &[usize]) -> u64 {
    let mut key = 0u64;
    for j in 1..adj.n {
        for i in 0..j {
            key = key << 1 | u64::from(adj.has(perm[i], perm[j]));
        }
    }
    key
}

fn canon_search(
    adj: &AdjRows,
    perm: &mut Vec<usize>,
    used: &mut [bool],
    partial: u64,
    best: &mut u64,
) {
    let n = adj.n;
    let k = perm.len();
    if k == n {
        if partial < *best {
            *best = partial;
        }
        return;
    }
    for cand in 0..n {
        if used[cand] {
            continue;
        }
        // bits contributed by pairs (0,k)..(k-1,k), first pair most significant
        let mut block = 0u64;
        for &placed in perm.iter() {
            block = block << 1 | u64::from(adj.has(placed, cand));
        }
        let extended = partial << k | block;
        let determined = total_bits(k + 1);
        if extended > *best >> (total_bits(n) - determined) {
            continue;
        }
        perm.push(cand);
        used[cand] = true;
        canon_search(adj, perm, used, extended, best);
        used[cand] = false;
        perm.pop();
    }
}

fn key_to_graph(n: usize, key: u64) -> Graph {
    let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let mut edges: Vec<(String, String)> = Vec::new();
    let mut shift = total_bits(n);
    for j in 1..n {
        for i in 0..j {
            shift -= 1;
            if key >> shift & 1 == 1 {
                edges.push((format!("v{i}"), format!("v{j}")));
            }
        }
    }
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let edge_refs: Vec<(&str, &str)> = edges
        .iter()
        .map(|(a, b)| (a.as_str(), b.as_str()))
        .collect();
    Graph::new(&refs, &edge_refs).unwrap()
}

/// All non-isomorphic graphs on exactly `n` vertices as canonical keys in
/// increasing order, built by augmenting the (n-1)-vertex list.
pub(crate) fn canonical_keys(n: usize) -> Vec<u64> {
    assert!(n <= 8, "graph enumeration is desk scale only");
    if n == 0 {
        return vec![0];
    }
    let mut current: Vec<AdjRows> = vec![AdjRows {
        n: 1,
        rows: vec![0],
    }];
    for m in 2..=n {
        let mut keys: Vec<u64> = Vec::new();
        for small in &current {
            for attach in 0u64..(1 << (m - 1)) {
                let mut adj = AdjRows {
                    n: m,
                    rows: small.rows.clone(),
                };
                adj.rows.push(0);
                for i in 0..(m - 1) {
                    if attach >> i & 1 == 1 {
                        adj.add(i, m - 1);
                    }
                }
                keys.push(canonical_key(&adj));
            }
        }
        keys.sort_unstable();
        keys.dedup();
        if m == n {
            return keys;
        }
        current = keys
            .iter()
            .map(|&key| {
                let g = key_to_graph(m, key);
                let mut adj = AdjRows {
                    n: m,
                    rows: vec![0; m],
                };
                for i in 0..m {
                    for j in (i + 1)..m {
                        if g.adjacent(i, j) {
                            adj.add(i, j);
                        }
                    }
                }
                adj
            })
            .collect();
    }
    vec![0]
}

/// All non-isomorphic graphs with 1..=max_n vertices, in (n, key) order.
pub fn enumerate_nonisomorphic(max_n: usize) -> Result<Vec<Graph>, GraphError> {
    if max_n > 8 {
        return Err(GraphError::SizeBoundExceeded {
            actual: max_n,
            bound: 8,
        });
    }
    let mut out = Vec::new();
    for n in 1..=max_n {
        for key in canonical_keys(n) {
            out.push(key_to_graph(n, key));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_known_sequence() {
        // Non-isomorphic simple graphs on 1..=7 vertices.
        let expected = [1usize, 2, 4, 11, 34, 156, 1044];
        for (i, &want) in expected.iter().enumerate() {
            assert_eq!(canonical_keys(i + 1).len(), want, "n = {}", i + 1);
        }
    }

    #[test]
    fn canonical_key_is_isomorphism_invariant() {
        // relabeling a path must not change its canonical key
        let mut a = AdjRows {
            n: 4,
            rows: vec![0; 4],
        };
        a.add(0, 1);
        a.add(1, 2);
        a.add(2, 3);
        let mut b = AdjRows {
            n: 4,
            rows: vec![0; 4],
        };
        b.add(2, 0);
        b.add(0, 3);
        b.add(3, 1);
        assert_eq!(canonical_key(&a), canonical_key(&b));
    }

    #[test]
    fn orbit_counting_identity() {
        // sum over canonical graphs of n!/|Aut| = number of labeled graphs
        use super::super::symmetry::enumerate_graph_symmetries;
        for n in 1..=6usize {
            let factorial: usize = (1..=n).product();
            let mut labeled = 0usize;
            for key in canonical_keys(n) {
                let g = key_to_graph(n, key);
                let aut = enumerate_graph_symmetries(&g).unwrap().len();
                labeled += factorial / aut;
            }
            assert_eq!(labeled, 1usize << (n * (n - 1) / 2), "n = {n}");
        }
    }
}
