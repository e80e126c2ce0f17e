//! The three-vertex example with a single edge: transvections onto the
//! isolated vertex generate a rank-two abelian group, and the product of the
//! two edge transvections acts on it hyperbolically. The resulting solvable
//! subgroup is certified not virtually nilpotent by the trace of the action.

use super::DichotomyError;
use crate::auto::{
    abelianization_matrix, aut_pow, commutator, compose, equal_in_aut, invert_aut, make_generator,
    Automorphism, GeneratorSpec,
};
use crate::graph::Graph;
use std::sync::Arc;

#[derive(Debug, Clone)]
pub struct SolReport {
    pub checks: Vec<(String, bool)>,
    /// The action of conjugation by gamma on the free-abelian pair (alpha, beta).
    pub action_matrix: [[i64; 2]; 2],
    pub trace: i64,
    pub passed: bool,
}

fn conjugate(outer: &Automorphism, inner: &Automorphism) -> Result<Automorphism, DichotomyError> {
    Ok(compose(&compose(outer, inner)?, &invert_aut(outer))?)
}

/// Reads off the (alpha, beta) exponents from the image of the isolated
/// vertex: an element alpha^p beta^q sends c to c a^p b^q.
fn exponents_of(g: &Arc<Graph>, aut: &Automorphism) -> (i64, i64) {
    let c = g.vertex("c").unwrap();
    let vec = aut.image_of(c).exponent_vector();
    (vec[g.vertex("a").unwrap()], vec[g.vertex("b").unwrap()])
}

/// Runs the five checks of the solvable example end to end.
pub fn verify_sol_example() -> Result<SolReport, DichotomyError> {
    let g = Arc::new(Graph::new(&["a", "b", "c"], &[("a", "b")]).unwrap());
    let a = g.vertex("a").unwrap();
    let b = g.vertex("b").unwrap();
    let c = g.vertex("c").unwrap();
    let alpha = make_generator(&g, &GeneratorSpec::right_transvection(a, c))?;
    let beta = make_generator(&g, &GeneratorSpec::right_transvection(b, c))?;
    let gamma = compose(
        &make_generator(&g, &GeneratorSpec::right_transvection(a, b))?,
        &make_generator(&g, &GeneratorSpec::right_transvection(b, a))?,
    )?;
    let mut checks = Vec::new();

    let commute = commutator(&alpha, &beta)?.is_identity();
    checks.push(("alpha and beta commute in Aut".to_owned(), commute));

    let conj_alpha = conjugate(&gamma, &alpha)?;
    let alpha2_beta = compose(&aut_pow(&alpha, 2)?, &beta)?;
    let rel1 = equal_in_aut(&conj_alpha, &alpha2_beta);
    let conj_beta = conjugate(&gamma, &beta)?;
    let alpha_beta = compose(&alpha, &beta)?;
    let rel2 = equal_in_aut(&conj_beta, &alpha_beta);
    checks.push((
        "conjugation relations hold exactly: g a g^-1 = a^2 b and g b g^-1 = a b".to_owned(),
        rel1 && rel2,
    ));

    let col_alpha = exponents_of(&g, &conj_alpha);
    let col_beta = exponents_of(&g, &conj_beta);
    let action_matrix = [[col_alpha.0, col_beta.0], [col_alpha.1, col_beta.1]];
    let matrix_ok = action_matrix == [[2, 1], [1, 1]];
    checks.push((
        "induced action on <alpha, beta> is [[2,1],[1,1]]".to_owned(),
        matrix_ok,
    ));

    let trace = action_matrix[0][0] + action_matrix[1][1];
    let det = action_matrix[0][0] * action_matrix[1][1] - action_matrix[0][1] * action_matrix[1][0];
    let hyperbolic = trace.abs() > 2 && det == 1;
    checks.push((
        "action is hyperbolic (|trace| > 2, det 1): not virtually nilpotent".to_owned(),
        hyperbolic,
    ));

    let not_inner = [&alpha, &beta, &gamma]
        .iter()
        .all(|aut| !abelianization_matrix(aut).is_identity());
    checks.push((
        "no generator is inner (abelianization obstruction)".to_owned(),
        not_inner,
    ));

    let passed = checks.iter().all(|(_, ok)| *ok);
    Ok(SolReport {
        checks,
        action_matrix,
        trace,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_five_checks_pass() {
        let report = verify_sol_example().unwrap();
        assert!(report.passed, "{:?}", report.checks);
        assert_eq!(report.checks.len(), 5);
        assert_eq!(report.action_matrix, [[2, 1], [1, 1]]);
        assert_eq!(report.trace, 3);
    }

    #[test]
    fn relations_fail_for_wrong_gamma_order_is_not_a_concern() {
        // the composite is taken in the order that realizes the stated
        // relations; this pins the convention
        let report = verify_sol_example().unwrap();
        let (_, rel_ok) = &report.checks[1];
        assert!(rel_ok);
    }
}
