//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line (run with `--nocapture` to see them). The corpus of all connected
//! graphs on up to 8 vertices is generated once and shared; the 8-vertex
//! slice goes through a file on disk, mirroring how an externally
//! generated list would be supplied.

mod common;

use std::sync::OnceLock;
use std::time::Instant;

use factorlab_core::factor::{
    check_t_bound, extract_long_path_witness, extract_p4_witness, find_barrier,
    find_biased_barrier, has_two_factor, verify_biased_barrier_properties, FactorError,
};
use factorlab_core::families::catalog;
use factorlab_core::forbidden::{
    find_induced, find_induced_bruteforce, is_r_free, LinearForestPattern,
};
use factorlab_core::graph::Graph;
use factorlab_core::graph6::{encode_graph6, parse_graph6};
use factorlab_core::harness::{enumerate_small_graphs, scan, ClauseSpec};
use factorlab_core::toughness::{toughness, toughness_naive, Rational};

fn conclude(criterion: &str, pass: bool, detail: String) {
    println!(
        "[{}] {criterion}: {detail}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "{criterion}: {detail}");
}

/// All connected graphs on 1..=8 vertices, up to isomorphism. Sizes up to
/// 7 come from the public enumeration; the 11117 graphs on 8 vertices are
/// generated once into a graph6 file and read back from it.
fn corpus() -> &'static Vec<Graph> {
    static CORPUS: OnceLock<Vec<Graph>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        let mut graphs = Vec::new();
        for n in 1..=7 {
            for line in enumerate_small_graphs(n).unwrap() {
                graphs.push(parse_graph6(&line).unwrap());
            }
        }
        let path = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("connected8.g6");
        if !path.exists() {
            let lines: Vec<String> =
                factorlab_core::harness::enumerate::connected_graphs_up_to_iso(8)
                    .iter()
                    .map(encode_graph6)
                    .collect();
            std::fs::write(&path, lines.join("\n")).unwrap();
        }
        let eight: Vec<Graph> = std::fs::read_to_string(&path)
            .unwrap()
            .lines()
            .map(|l| parse_graph6(l).unwrap())
            .collect();
        assert_eq!(eight.len(), 11117, "connected graphs on 8 vertices");
        graphs.extend(eight);
        graphs
    })
}

#[test]
fn criterion_1_toughness_table() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for row in catalog() {
        let got = toughness(&row.instance.graph);
        if got != row.toughness {
            failures.push(format!(
                "{}: got {got}, want {}",
                row.instance.name, row.toughness
            ));
        }
    }
    let elapsed = start.elapsed();
    conclude(
        "criterion 1 (toughness table, exact rationals)",
        failures.is_empty() && elapsed.as_secs() < 10,
        format!(
            "{} family instances in {:.2}s{}",
            catalog().len(),
            elapsed.as_secs_f64(),
            if failures.is_empty() {
                String::new()
            } else {
                format!("; {failures:?}")
            }
        ),
    );
}

#[test]
fn criterion_2_r_freeness_table() {
    let mut failures = Vec::new();
    let mut checked = 0;
    let mut check = |name: &str, g: &Graph, pattern: &str, want_free: bool| {
        checked += 1;
        let p = LinearForestPattern::parse(pattern).unwrap();
        if is_r_free(g, &p) != want_free {
            failures.push(format!("{name} vs {pattern}"));
        }
    };
    let by_name = |name: &str| -> Graph {
        catalog()
            .into_iter()
            .find(|r| r.instance.name == name)
            .unwrap_or_else(|| panic!("{name} missing from catalog"))
            .instance
            .graph
    };
    for i in 0..=4 {
        check(&format!("H{i}"), &by_name(&format!("H{i}")), "P2+3P1", true);
    }
    check("H1", &by_name("H1"), "P3+2P1", true);
    for pat in ["P3+4P1", "P2+5P1", "6P1"] {
        check("H5(p=5)", &by_name("H5(p=5)"), pat, true);
    }
    for i in 6..=11 {
        check(&format!("H{i}"), &by_name(&format!("H{i}")), "P2+5P1", true);
    }
    for p in 3..=8 {
        let name = format!("H12(p={p})");
        check(&name, &by_name(&name), "5P1", true);
        check(&name, &by_name(&name), "P4+2P1", true);
    }
    for n in 2..=6u64 {
        let name = format!("K{{{n},{}}}", n - 1);
        check(&name, &by_name(&name), "P4", true);
    }
    conclude(
        "criterion 2 (forbidden-pattern table)",
        failures.is_empty(),
        format!(
            "{checked} freeness claims{}",
            if failures.is_empty() {
                String::new()
            } else {
                format!("; failed: {failures:?}")
            }
        ),
    );
}

#[test]
fn criterion_3_no_two_factor_with_certificates() {
    let mut failures = Vec::new();
    let mut lines = Vec::new();
    for row in catalog() {
        let g = &row.instance.graph;
        let by_matching = has_two_factor(g);
        let barrier = find_barrier(g);
        match (&barrier, by_matching) {
            (Some(b), false) if b.delta <= -2 => {
                lines.push(format!("  {}: {}", row.instance.name, b));
            }
            _ => failures.push(row.instance.name.clone()),
        }
    }
    conclude(
        "criterion 3 (2-factor nonexistence, dual deciders + certificates)",
        failures.is_empty(),
        format!("{} instances certified", lines.len()),
    );
    for line in lines {
        println!("{line}");
    }
}

#[test]
fn criterion_4_tutte_equivalence_corpus() {
    let start = Instant::now();
    let mut disagreements = Vec::new();
    for g in corpus() {
        let by_matching = has_two_factor(g);
        let by_barrier = find_barrier(g).is_none();
        if by_matching != by_barrier {
            disagreements.push(encode_graph6(g));
        }
    }
    let elapsed = start.elapsed();
    conclude(
        "criterion 4 (matching vs barrier enumeration, all connected n <= 8)",
        disagreements.is_empty() && elapsed.as_secs() < 600,
        format!(
            "{} graphs in {:.2}s{}",
            corpus().len(),
            elapsed.as_secs_f64(),
            if disagreements.is_empty() {
                String::new()
            } else {
                format!("; disagree: {disagreements:?}")
            }
        ),
    );
}

#[test]
fn criterion_5_lemma_suite_on_corpus() {
    let mut failures = Vec::new();
    let mut no_factor = 0usize;
    let mut p4_witnesses = 0usize;
    let mut long_witnesses = 0usize;
    for g in corpus() {
        if has_two_factor(g) {
            continue;
        }
        no_factor += 1;
        let id = encode_graph6(g);
        let pair = match find_biased_barrier(g) {
            Some(p) => p,
            None => {
                failures.push(format!("{id}: no barrier despite no 2-factor"));
                continue;
            }
        };
        let report = verify_biased_barrier_properties(g, &pair);
        if !report.all_pass() {
            failures.push(format!("{id}: structure clauses failed"));
        }
        if !check_t_bound(&pair) {
            failures.push(format!("{id}: size bound |T| >= |S| + sum k|C| + 1 failed"));
        }
        let tau = toughness(g);
        if g.n() >= 3 && tau >= Rational::ONE && !tau.is_infinite() {
            // at least 1-tough without a 2-factor: some odd component has
            // >= 3 edges to T, and a nonempty C_1 bounds |S| from below
            if pair.nontrivial_odd_components().is_empty() {
                failures.push(format!("{id}: no odd component with >= 3 edges to T"));
            }
            if pair.odd_classes.get(&0).is_some_and(|c| !c.is_empty())
                && tau
                    .scale(2)
                    .cmp_fraction(pair.s.len() as u64 + 1, 1)
                    .is_gt()
            {
                failures.push(format!("{id}: 2 tau > |S| + 1 with C_1 nonempty"));
            }
        }
        match extract_p4_witness(g, &pair) {
            Ok(w) => {
                p4_witnesses += 1;
                if !w.is_valid(g) || w.singletons.len() + 2 != pair.t.len() {
                    failures.push(format!("{id}: bad P4 witness"));
                }
            }
            Err(FactorError::NoNontrivialOddComponent) => {}
            Err(e) => failures.push(format!("{id}: p4 witness error {e:?}")),
        }
        match extract_long_path_witness(g, &pair, None) {
            Ok(w) => {
                long_witnesses += 1;
                if !w.is_valid(g) || w.path.len() < 7 || w.singletons.len() + 3 != pair.t.len() {
                    failures.push(format!("{id}: bad long-path witness"));
                }
            }
            Err(FactorError::NoSpreadVertex) => {}
            Err(e) => failures.push(format!("{id}: long witness error {e:?}")),
        }
    }
    conclude(
        "criterion 5 (biased-barrier lemma suite on the no-2-factor corpus)",
        failures.is_empty(),
        format!(
            "{no_factor} graphs; {p4_witnesses} P4 witnesses, {long_witnesses} long-path witnesses{}",
            if failures.is_empty() { String::new() } else { format!("; first failures: {:?}", &failures[..failures.len().min(5)]) }
        ),
    );
}

#[test]
fn criterion_6_theorem_scans_find_no_counterexamples() {
    let lines: Vec<String> = corpus()
        .iter()
        .filter(|g| g.n() >= 3)
        .map(encode_graph6)
        .collect();
    let clauses = vec![
        ClauseSpec::five_vertex("P4+P1").unwrap(),
        ClauseSpec::five_vertex("P3+2P1").unwrap(),
        ClauseSpec::five_vertex("P2+3P1").unwrap(),
        ClauseSpec::above_one("6P1").unwrap(),
        ClauseSpec::three_halves("3P2+P1"),
    ];
    let mut failures = Vec::new();
    let mut summary = Vec::new();
    for clause in &clauses {
        let report = scan(lines.iter().cloned(), clause);
        summary.push(format!(
            "  {clause}: consistent={} unmet={} counterexamples={}",
            report.consistent, report.hypothesis_unmet, report.counterexamples
        ));
        if report.counterexamples != 0 || report.parse_errors != 0 {
            failures.push(format!("{clause}: {:?}", report.counterexample_lines));
        }
    }
    conclude(
        "criterion 6 (exhaustive clause scans, connected 3 <= n <= 8)",
        failures.is_empty(),
        format!(
            "{} clauses, {} graphs each{}",
            clauses.len(),
            lines.len(),
            if failures.is_empty() {
                String::new()
            } else {
                format!("; {failures:?}")
            }
        ),
    );
    for line in summary {
        println!("{line}");
    }
}

#[test]
fn criterion_7_property_suites() {
    // forbidden-search oracle equivalence: n <= 10, all 33 linear forest
    // patterns on 5..7 vertices, 500 random graphs
    let mut rng = common::Rng::new(0x2fac70);
    let patterns: Vec<LinearForestPattern> = (5..=7)
        .flat_map(LinearForestPattern::all_with_total)
        .collect();
    assert_eq!(patterns.len(), 33);
    let mut forbidden_fail = 0usize;
    for i in 0..500 {
        let n = 1 + rng.below(10);
        let g = common::random_graph(&mut rng, n, 20 + (i as u64 % 7) * 10);
        for p in &patterns {
            if find_induced(&g, p).is_some() != find_induced_bruteforce(&g, p) {
                forbidden_fail += 1;
            }
        }
    }

    // toughness vs the unpruned enumerator: n <= 9, 500 random graphs
    let mut toughness_fail = 0usize;
    for i in 0..500 {
        let n = 1 + rng.below(9);
        let g = common::random_graph(&mut rng, n, 20 + (i as u64 % 8) * 10);
        if toughness(&g) != toughness_naive(&g) {
            toughness_fail += 1;
        }
    }

    // graph6 round trip: n <= 12, 1000 random graphs
    let mut roundtrip_fail = 0usize;
    for i in 0..1000 {
        let n = rng.below(13);
        let g = common::random_graph(&mut rng, n, 10 + (i as u64 % 9) * 10);
        if parse_graph6(&encode_graph6(&g)).as_ref() != Ok(&g) {
            roundtrip_fail += 1;
        }
    }

    conclude(
        "criterion 7 (randomized property suites)",
        forbidden_fail == 0 && toughness_fail == 0 && roundtrip_fail == 0,
        format!(
            "forbidden oracle 500x33: {forbidden_fail} fail; toughness naive 500: {toughness_fail} fail; graph6 round-trip 1000: {roundtrip_fail} fail"
        ),
    );
}
