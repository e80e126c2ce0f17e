//! Freeness certificate from a domination-equivalent pair: the squared
//! transvections act on the span of the pair's homology classes by unipotent
//! matrices that shuttle the two cones |a| > |b| and |b| > |a| into each
//! other, which is the table-tennis criterion.

use super::{Certificate, DichotomyError, FreeWitness, FreeWitnessKind};
use crate::auto::{abelianization_matrix, aut_pow, make_generator, GeneratorSpec};
use crate::graph::{Graph, VertexId};
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PingPongCertificate {
    pub x: VertexId,
    pub y: VertexId,
    /// Action of the squared transvection with multiplier x on span([x], [y]),
    /// rows and columns ordered (x, y).
    pub matrix_xy: [[i64; 2]; 2],
    /// Action of the squared transvection with multiplier y.
    pub matrix_yx: [[i64; 2]; 2],
    pub grid_bound: i64,
}

/// Builds the witness for a domination-equivalent pair and certifies it.
pub fn free_witness_from_domination_pair(
    g: &Arc<Graph>,
    x: VertexId,
    y: VertexId,
    grid_bound: i64,
) -> Result<FreeWitness, DichotomyError> {
    if x == y || !(g.dominates(x, y)? && g.dominates(y, x)?) {
        return Err(DichotomyError::Precondition(format!(
            "vertices #{x} and #{y} are not domination equivalent"
        )));
    }
    let spec_xy = GeneratorSpec::right_transvection(x, y);
    let spec_yx = GeneratorSpec::right_transvection(y, x);
    let t_xy = make_generator(g, &spec_xy)?;
    let t_yx = make_generator(g, &spec_yx)?;
    let m_xy = abelianization_matrix(&aut_pow(&t_xy, 2)?);
    let m_yx = abelianization_matrix(&aut_pow(&t_yx, 2)?);
    // the squared transvections only touch the (x, y) block
    for (full, label) in [(&m_xy, "xy"), (&m_yx, "yx")] {
        for row in 0..full.size() {
            for col in 0..full.size() {
                let expected = i64::from(row == col);
                if (row == x || row == y) && (col == x || col == y) {
                    continue;
                }
                if full.get(row, col) != expected {
                    return Err(DichotomyError::CertificateFailure(format!(
                        "squared transvection {label} moves homology outside the pair span"
                    )));
                }
            }
        }
    }
    let certificate = PingPongCertificate {
        x,
        y,
        matrix_xy: m_xy.restrict_2x2(x, y),
        matrix_yx: m_yx.restrict_2x2(x, y),
        grid_bound,
    };
    if !certify_ping_pong(&certificate) {
        return Err(DichotomyError::CertificateFailure(
            "ping-pong certificate failed on a freshly built witness".into(),
        ));
    }
    Ok(FreeWitness {
        kind: FreeWitnessKind::DominationPair,
        generators: (spec_xy, spec_yx),
        certificate: Certificate::PingPong(certificate),
    })
}

/// The inequality argument on the unipotent form: for `[[1, c], [0, 1]]`
/// with |c| >= 2 and |b| > |a|, the image satisfies
/// |a + cb| >= |c||b| - |a| >= 2|b| - |a| > |b|, and symmetrically for the
/// lower-triangular partner. The structural check encodes exactly the
/// hypotheses that derivation needs.
pub(crate) fn symbolic_ping_pong_check(m_xy: &[[i64; 2]; 2], m_yx: &[[i64; 2]; 2]) -> bool {
    let upper_ok = m_xy[0][0] == 1 && m_xy[1][1] == 1 && m_xy[1][0] == 0 && m_xy[0][1].abs() >= 2;
    let lower_ok = m_yx[0][0] == 1 && m_yx[1][1] == 1 && m_yx[0][1] == 0 && m_yx[1][0].abs() >= 2;
    upper_ok && lower_ok
}

/// Exhaustive check on the integer grid 0 < max(|a|, |b|) <= N that the two
/// matrices map the cone |b| > |a| into |a| > |b| and back.
pub(crate) fn grid_ping_pong_check(cert: &PingPongCertificate) -> bool {
    let n = cert.grid_bound;
    for a in -n..=n {
        for b in -n..=n {
            if a == 0 && b == 0 {
                continue;
            }
            if b.abs() > a.abs() {
                let (ia, ib) = apply(&cert.matrix_xy, a, b);
                if ia.abs() <= ib.abs() {
                    return false;
                }
            }
            if a.abs() > b.abs() {
                let (ia, ib) = apply(&cert.matrix_yx, a, b);
                if ib.abs() <= ia.abs() {
                    return false;
                }
            }
        }
    }
    true
}

fn apply(m: &[[i64; 2]; 2], a: i64, b: i64) -> (i64, i64) {
    (m[0][0] * a + m[0][1] * b, m[1][0] * a + m[1][1] * b)
}

/// The symbolic step is the proof; the grid run cross-validates it.
pub fn certify_ping_pong(cert: &PingPongCertificate) -> bool {
    symbolic_ping_pong_check(&cert.matrix_xy, &cert.matrix_yx) && grid_ping_pong_check(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::testutil::*;

    #[test]
    fn edgeless_pair_matrices() {
        let g = Arc::new(Graph::new(&["x", "y"], &[]).unwrap());
        let w = free_witness_from_domination_pair(&g, 0, 1, 50).unwrap();
        match &w.certificate {
            Certificate::PingPong(cert) => {
                assert_eq!(cert.matrix_xy, [[1, 2], [0, 1]]);
                assert_eq!(cert.matrix_yx, [[1, 0], [2, 1]]);
                assert!(certify_ping_pong(cert));
            }
            other => panic!("expected ping-pong certificate, got {other:?}"),
        }
    }

    #[test]
    fn path3_endpoint_pair() {
        let g = Arc::new(path(&["a", "b", "c"]));
        let w = free_witness_from_domination_pair(&g, 0, 2, 50).unwrap();
        match &w.certificate {
            Certificate::PingPong(cert) => {
                assert_eq!(cert.matrix_xy, [[1, 2], [0, 1]]);
                assert_eq!(cert.matrix_yx, [[1, 0], [2, 1]]);
            }
            other => panic!("unexpected certificate {other:?}"),
        }
    }

    #[test]
    fn adjacent_equivalent_pair_works() {
        // the triangle has all pairs equivalent and adjacent
        let g = Arc::new(complete(&["a", "b", "c"]));
        let w = free_witness_from_domination_pair(&g, 0, 1, 20).unwrap();
        match &w.certificate {
            Certificate::PingPong(cert) => assert!(certify_ping_pong(cert)),
            other => panic!("unexpected certificate {other:?}"),
        }
    }

    #[test]
    fn non_equivalent_pair_rejected() {
        let g = Arc::new(path(&["a", "b", "c"]));
        assert!(free_witness_from_domination_pair(&g, 0, 1, 10).is_err());
    }

    #[test]
    fn tampered_matrix_fails() {
        let cert = PingPongCertificate {
            x: 0,
            y: 1,
            matrix_xy: [[1, 1], [0, 1]], // off-diagonal 1 instead of 2
            matrix_yx: [[1, 0], [2, 1]],
            grid_bound: 50,
        };
        assert!(!symbolic_ping_pong_check(&cert.matrix_xy, &cert.matrix_yx));
        // (0, 1) maps to (1, 1), which lands in neither cone
        assert!(!grid_ping_pong_check(&cert));
        assert!(!certify_ping_pong(&cert));
    }

    #[test]
    fn zero_grid_is_decided_symbolically() {
        let cert = PingPongCertificate {
            x: 0,
            y: 1,
            matrix_xy: [[1, 2], [0, 1]],
            matrix_yx: [[1, 0], [2, 1]],
            grid_bound: 0,
        };
        assert!(certify_ping_pong(&cert));
    }
}
