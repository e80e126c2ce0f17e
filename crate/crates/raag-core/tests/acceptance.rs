//! Acceptance suite: one test per criterion, each printing a PASS line.
//! Everything is oracle- or property-based and runs at desk scale.

use raag_core::dichotomy::{
    certify_f2_retraction, certify_ping_pong, classify, filtration_is_complete,
    nilpotence_witness_check, nilpotent_generators, verify_filtration_grading,
    verify_iterated_commutators, verify_lemma_commutations, verify_sol_example, Certificate,
    ClassifyParams, DichotomyReport, PingPongCertificate, Verdict,
};
use raag_core::graph::{
    classify_special, depth_report, enumerate_nonisomorphic, find_sil, gamma_k, Graph, SilWitness,
};
use raag_core::words::{equal, Letter, Sign, Word};
use std::collections::{HashSet, VecDeque};
use std::sync::{Arc, OnceLock};

fn params() -> ClassifyParams {
    ClassifyParams::default() // grid 50, words 6, inner radius 4
}

fn census() -> &'static Vec<(Arc<Graph>, DichotomyReport)> {
    static CENSUS: OnceLock<Vec<(Arc<Graph>, DichotomyReport)>> = OnceLock::new();
    CENSUS.get_or_init(|| {
        enumerate_nonisomorphic(7)
            .unwrap()
            .into_iter()
            .map(|g| {
                let g = Arc::new(g);
                let report = classify(&g, &params()).expect("classification is total");
                (g, report)
            })
            .collect()
    })
}

fn sil_oracle(g: &Graph) -> Option<SilWitness> {
    let n = g.vertex_count();
    for x in 0..n {
        for y in (x + 1)..n {
            if g.adjacent(x, y) {
                continue;
            }
            let common = g.link(x).unwrap().intersection(&g.link(y).unwrap());
            for comp in g.components_excluding(&common) {
                if !comp.contains(x) && !comp.contains(y) {
                    return Some(SilWitness {
                        x,
                        y,
                        component: comp,
                    });
                }
            }
        }
    }
    None
}

fn pair_oracle(g: &Graph) -> bool {
    g.vertices().any(|x| {
        g.vertices()
            .any(|y| x != y && g.dominates(x, y).unwrap() && g.dominates(y, x).unwrap())
    })
}

#[test]
fn criterion_1_gamma_family() {
    for k in 0..=5 {
        let g = Arc::new(gamma_k(k));
        let report = classify(&g, &params()).unwrap();
        assert_eq!(report.verdict, Verdict::VirtuallyNilpotent, "gamma_{k}");
        assert_eq!(report.nilpotence_class, Some(k), "gamma_{k}");
        let data = report.nilpotency.expect("nilpotent verdict carries data");
        let check = nilpotence_witness_check(&g, &data, params().inner_radius).unwrap();
        assert!(check.passed, "gamma_{k}: {:?}", check.notes);
    }
    println!("acceptance criterion 1 (gamma_k family, classes 0..=5 with witness checks): PASS");
}

#[test]
fn criterion_2_dichotomy_oracle_equivalence() {
    let mut free = 0;
    let mut nilpotent = 0;
    for (g, report) in census() {
        let expected_free = pair_oracle(g) || sil_oracle(g).is_some();
        assert_eq!(
            report.verdict == Verdict::Free,
            expected_free,
            "graph {}",
            g.to_text()
        );
        assert_eq!(find_sil(g), sil_oracle(g), "graph {}", g.to_text());
        match report.verdict {
            Verdict::Free => free += 1,
            Verdict::VirtuallyNilpotent => {
                nilpotent += 1;
                assert_eq!(report.nilpotence_class, Some(report.depth.graph_depth));
            }
        }
        if report.special.out_finite {
            assert_eq!(report.nilpotence_class, Some(0), "graph {}", g.to_text());
        }
        if report.special.virtually_abelian {
            assert!(
                report.nilpotence_class.unwrap_or(0) <= 1,
                "graph {}",
                g.to_text()
            );
        }
    }
    assert_eq!(free + nilpotent, 1 + 2 + 4 + 11 + 34 + 156 + 1044);
    println!(
        "acceptance criterion 2 (verdict and SIL oracle agreement on all {} graphs <= 7 vertices, {} free / {} nilpotent): PASS",
        free + nilpotent, free, nilpotent
    );
}

// word-problem oracle: closure under commuting swaps and free cancellations
fn closure(g: &Graph, start: &[Letter]) -> HashSet<Vec<Letter>> {
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.to_vec());
    queue.push_back(start.to_vec());
    while let Some(word) = queue.pop_front() {
        for i in 0..word.len().saturating_sub(1) {
            let (a, b) = (word[i], word[i + 1]);
            if g.adjacent(a.vertex, b.vertex) {
                let mut s = word.clone();
                s.swap(i, i + 1);
                if seen.insert(s.clone()) {
                    queue.push_back(s);
                }
            }
            if a.vertex == b.vertex && a.sign != b.sign {
                let mut c = word.clone();
                c.drain(i..=i + 1);
                if seen.insert(c.clone()) {
                    queue.push_back(c);
                }
            }
        }
    }
    seen
}

fn oracle_equal(g: &Graph, w1: &[Letter], w2: &[Letter]) -> bool {
    let min = |cl: HashSet<Vec<Letter>>| {
        cl.into_iter()
            .min_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)))
            .unwrap()
    };
    min(closure(g, w1)) == min(closure(g, w2))
}

struct Rng(u64);

impl Rng {
    fn next_u64(&mut self) -> u64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.0
    }

    fn below(&mut self, bound: usize) -> usize {
        (self.next_u64() >> 16) as usize % bound
    }
}

#[test]
fn criterion_3_word_problem_oracle() {
    let graphs: Vec<Arc<Graph>> = enumerate_nonisomorphic(5)
        .unwrap()
        .into_iter()
        .map(Arc::new)
        .collect();
    let mut rng = Rng(0x1ab);
    let mut checked = 0usize;
    let mut mismatches = 0usize;
    while checked < 10_000 {
        let g = &graphs[rng.below(graphs.len())];
        let sample = |rng: &mut Rng| -> Vec<Letter> {
            let len = rng.below(7);
            (0..len)
                .map(|_| Letter {
                    vertex: rng.below(g.vertex_count()),
                    sign: if rng.below(2) == 0 {
                        Sign::Pos
                    } else {
                        Sign::Neg
                    },
                })
                .collect()
        };
        let w1 = sample(&mut rng);
        let w2 = sample(&mut rng);
        let ours = equal(g, &Word::new(w1.clone()), &Word::new(w2.clone())).unwrap();
        if ours != oracle_equal(g, &w1, &w2) {
            mismatches += 1;
        }
        checked += 1;
    }
    assert_eq!(mismatches, 0);
    println!("acceptance criterion 3 (word problem vs rewriting oracle, {checked} pairs, 0 mismatches): PASS");
}

#[test]
fn criterion_4_lemma_machine_verification() {
    let mut sil_free_graphs = 0;
    let mut both_fail_graphs = 0;
    let mut general = 0;
    let mut commute = 0;
    let mut steinberg = 0;
    for g in enumerate_nonisomorphic(6).unwrap() {
        let g = Arc::new(g);
        let report = verify_lemma_commutations(&g, params().inner_radius).unwrap();
        assert_eq!(
            report.failure_count(),
            0,
            "graph {} report {:?}",
            g.to_text(),
            report
        );
        if report.sil_free {
            sil_free_graphs += 1;
            general += report.general_pairs;
            commute += report.commute_pairs;
        }
        if report.both_conditions_fail {
            both_fail_graphs += 1;
            steinberg += report.steinberg_instances;
        }
    }
    assert!(general > 0 && commute > 0 && steinberg > 0);
    println!(
        "acceptance criterion 4 (lemma verification: {sil_free_graphs} SIL-free graphs, {general} exact-commutation pairs, {commute} outer-commutation pairs, {both_fail_graphs} fully-nilpotent graphs, {steinberg} commutator-identity instances, 0 failures): PASS"
    );
}

#[test]
fn criterion_5_freeness_certificates() {
    let mut pingpong = 0;
    let mut retraction = 0;
    for (g, report) in census() {
        if report.verdict != Verdict::Free {
            continue;
        }
        let witness = report
            .free_witness
            .as_ref()
            .expect("free verdict carries a witness");
        match &witness.certificate {
            Certificate::PingPong(cert) => {
                assert!(certify_ping_pong(cert), "graph {}", g.to_text());
                pingpong += 1;
            }
            Certificate::Retraction(_) => {
                assert!(
                    certify_f2_retraction(g, witness, params().word_length),
                    "graph {}",
                    g.to_text()
                );
                retraction += 1;
            }
        }
    }
    assert!(pingpong > 0 && retraction > 0);

    // perturbation: tampered matrix
    let tampered = PingPongCertificate {
        x: 0,
        y: 1,
        matrix_xy: [[1, 1], [0, 1]],
        matrix_yx: [[1, 0], [2, 1]],
        grid_bound: 50,
    };
    assert!(!certify_ping_pong(&tampered));

    // perturbation: commuting-generator substitution
    let star = Arc::new(Graph::parse("c: x y z\nx: c\ny: c\nz: c\n").unwrap());
    let sil = find_sil(&star).unwrap();
    let mut witness = raag_core::dichotomy::free_witness_from_sil(&star, &sil, 2).unwrap();
    witness.generators.1 = witness.generators.0.inverse_spec();
    assert!(!certify_f2_retraction(&star, &witness, 2));

    println!(
        "acceptance criterion 5 (certificates re-verified: {pingpong} ping-pong, {retraction} retraction; both perturbations rejected): PASS"
    );
}

#[test]
fn criterion_6_filtration_grading() {
    let mut graphs = 0;
    let mut pairs = 0;
    let mut tuples = 0;
    for g in enumerate_nonisomorphic(6).unwrap() {
        let g = Arc::new(g);
        if !g.domination_equivalent_pairs().is_empty() || find_sil(&g).is_some() {
            continue;
        }
        graphs += 1;
        let data = nilpotent_generators(&g).unwrap();
        assert!(filtration_is_complete(&g, &data), "graph {}", g.to_text());
        let grading = verify_filtration_grading(&g, &data, params().inner_radius).unwrap();
        assert!(
            grading.violations.is_empty(),
            "graph {} violations {:?}",
            g.to_text(),
            grading.violations
        );
        pairs += grading.pairs_checked;
        let (checked, violations) =
            verify_iterated_commutators(&g, &data, params().inner_radius, 256).unwrap();
        assert!(
            violations.is_empty(),
            "graph {} {:?}",
            g.to_text(),
            violations
        );
        tuples += checked;
    }
    assert!(graphs > 0 && pairs > 0 && tuples > 0);
    println!(
        "acceptance criterion 6 (filtration grading on {graphs} qualifying graphs, {pairs} bracket pairs, {tuples} iterated commutators, 0 violations): PASS"
    );
}

#[test]
fn criterion_7_sol_example() {
    let report = verify_sol_example().unwrap();
    for (name, ok) in &report.checks {
        assert!(ok, "sol check failed: {name}");
    }
    assert_eq!(report.checks.len(), 5);
    assert_eq!(report.action_matrix, [[2, 1], [1, 1]]);
    assert_eq!(report.trace, 3);
    println!("acceptance criterion 7 (sol example: 5/5 checks, matrix [[2,1],[1,1]], |trace| 3 > 2): PASS");
}

#[test]
fn criterion_8_special_case_flags() {
    let pentagon = Graph::parse("a: b e\nb: a c\nc: b d\nd: c e\ne: d a\n").unwrap();
    let flags = classify_special(&pentagon);
    assert!(flags.out_finite);
    // cross-check: finite forces depth 0 and no freeness trigger
    assert_eq!(depth_report(&pentagon).graph_depth, 0);
    assert!(find_sil(&pentagon).is_none());
    assert!(pentagon.domination_equivalent_pairs().is_empty());

    let p4 = Arc::new(Graph::parse("a: b\nb: a c\nc: b d\nd: c\n").unwrap());
    let flags = classify_special(&p4);
    assert!(flags.virtually_abelian);
    assert!(!flags.out_finite);
    let report = classify(&p4, &params()).unwrap();
    assert_eq!(report.verdict, Verdict::VirtuallyNilpotent);
    assert_eq!(report.nilpotence_class, Some(1));
    assert_eq!(depth_report(&p4).graph_depth, 1);

    println!("acceptance criterion 8 (pentagon finite, P4 virtually abelian of class 1, cross-checked): PASS");
}
