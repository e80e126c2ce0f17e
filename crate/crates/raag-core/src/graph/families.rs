//! Named graph families with prescribed depth behaviour.

use super::Graph;

/// The depth-k family: for k = 0 a single vertex; for k > 0 vertices
/// x_0..x_k and y_0..y_k, cliques on the x side and the y side, and a
/// cross edge x_i - y_j exactly when i + j > k.
pub fn gamma_k(k: usize) -> Graph {
    if k == 0 {
        return Graph::new(&["x0"], &[]).unwrap();
    }
    let mut names: Vec<String> = (0..=k).map(|i| format!("x{i}")).collect();
    names.extend((0..=k).map(|i| format!("y{i}")));
    let mut edges: Vec<(String, String)> = Vec::new();
    for i in 0..=k {
        for j in (i + 1)..=k {
            edges.push((format!("x{i}"), format!("x{j}")));
            edges.push((format!("y{i}"), format!("y{j}")));
        }
    }
    for i in 0..=k {
        for j in 0..=k {
            if i + j > k {
                edges.push((format!("x{i}"), format!("y{j}")));
            }
        }
    }
    Graph::new(&names, &edges).unwrap()
}
