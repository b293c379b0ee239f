//! Acceptance suite. Each test covers one criterion over the full default
//! sweep (group order up to 400) and prints a single PASS line with the case
//! count; failures list the offending cases before panicking.

use std::process::Command;
use std::time::Instant;

use supercomm::graph::{generalized_composition, Graph};
use supercomm::group::enumerate_group;
use supercomm::structure::{recognize_form, CliqueJoinForm, RecognizeError};
use supercomm::zagreb::{edge_count_form, hansen_check, m1, m2, zagreb_closed_form};
use supercomm::{Family, FamilySpec, Group, Relation};
use supercomm_cli::verify::{run_sweep, SweepOptions};

fn full_sweep() -> Vec<supercomm_cli::verify::VerificationRecord> {
    run_sweep(&SweepOptions::default()).expect("sweep enumerates")
}

fn report(criterion: &str, cases: usize, failures: &[String]) {
    if failures.is_empty() {
        println!("acceptance {criterion}: PASS ({cases} cases)");
    } else {
        println!("acceptance {criterion}: FAIL ({} of {cases} cases)", failures.len());
        for f in failures.iter().take(25) {
            println!("  {f}");
        }
    }
    assert!(failures.is_empty(), "{criterion}: {} failures", failures.len());
}

#[test]
fn criterion_1_structure_theorems_across_the_sweep() {
    let start = Instant::now();
    let records = full_sweep();
    let mut cases = 0;
    let mut failures = Vec::new();
    for r in &records {
        if r.predicted_form == "not-in-catalog" {
            continue;
        }
        cases += 1;
        if !r.forms_match {
            failures.push(format!(
                "{}({}) {}: predicted {} observed {}",
                r.family, r.params, r.relation, r.predicted_form, r.observed_form
            ));
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 60, "sweep took {elapsed:?}");
    report("1 (structure theorems, |G| <= 400)", cases, &failures);
}

#[test]
fn criterion_2_zagreb_polynomials_across_the_sweep() {
    let records = full_sweep();
    let mut cases = 0;
    let mut failures = Vec::new();
    for r in &records {
        let Some(paper) = r.paper else { continue };
        cases += 1;
        if !(paper.m1 == r.m1
            && paper.m2 == r.m2
            && paper.v == r.v as i128
            && paper.e == r.e as i128)
        {
            failures.push(format!(
                "{}({}) {}: polynomial ({}, {}, {}, {}) direct ({}, {}, {}, {})",
                r.family, r.params, r.relation, paper.m1, paper.m2, paper.v, paper.e,
                r.m1, r.m2, r.v, r.e
            ));
        }
    }
    report("2 (Zagreb polynomial reproduction)", cases, &failures);
}

#[test]
fn criterion_3_closed_form_equals_direct_on_the_parameter_grid() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut cases = 0;
    for a in 1..=12usize {
        for b in 1..=12usize {
            for c in 1..=12usize {
                for d in 1..=12usize {
                    cases += 1;
                    // direct route: build d copies of K_b, then K_c, join K_a on
                    let mut rest = Graph::edgeless(0);
                    for _ in 0..d {
                        rest = rest.disjoint_union(&Graph::complete(b));
                    }
                    rest = rest.disjoint_union(&Graph::complete(c));
                    let graph = Graph::complete(a).join(&rest);
                    let direct = (m1(&graph), m2(&graph));

                    // closed form via the canonical shape
                    let mut parts = vec![b; d];
                    parts.push(c);
                    let form = CliqueJoinForm::new(a, parts);
                    let closed = zagreb_closed_form(&form);

                    // five-term expansion, kept independent of both routes
                    let (ai, bi, ci, di) = (a as i128, b as i128, c as i128, d as i128);
                    let total = ai + di * bi + ci;
                    let lemma_m1 = ai * (total - 1).pow(2)
                        + di * bi * (ai + bi - 1).pow(2)
                        + ci * (ai + ci - 1).pow(2);
                    let lemma_m2 = ai * (ai - 1) * (total - 1).pow(2) / 2
                        + di * ai * bi * (total - 1) * (ai + bi - 1)
                        + ai * ci * (total - 1) * (ai + ci - 1)
                        + di * bi * (bi - 1) * (ai + bi - 1).pow(2) / 2
                        + ci * (ci - 1) * (ai + ci - 1).pow(2) / 2;

                    if direct != closed || closed != (lemma_m1, lemma_m2) {
                        failures.push(format!(
                            "a={a} b={b} c={c} d={d}: direct {direct:?} closed {closed:?} lemma ({lemma_m1}, {lemma_m2})"
                        ));
                    }
                    if graph.n_edges() as i128 != edge_count_form(&form) {
                        failures.push(format!("a={a} b={b} c={c} d={d}: edge count"));
                    }
                }
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 30, "grid took {elapsed:?}");
    report("3 (closed-form Zagreb equivalence on [1,12]^4)", cases, &failures);
}

#[test]
fn criterion_4_conjecture_holds_with_equality_exactly_on_complete_graphs() {
    let records = full_sweep();
    let mut failures = Vec::new();
    for r in &records {
        let complete = r.observed_form == format!("K_{}", r.v);
        if !r.conjecture_holds {
            failures.push(format!("{}({}) {}: inequality fails", r.family, r.params, r.relation));
        }
        if complete && r.margin_numerator != 0 {
            failures.push(format!(
                "{}({}) {}: complete graph with margin {}",
                r.family, r.params, r.relation, r.margin_numerator
            ));
        }
        if !complete && r.margin_numerator <= 0 {
            failures.push(format!(
                "{}({}) {}: non-complete graph with margin {}",
                r.family, r.params, r.relation, r.margin_numerator
            ));
        }
    }
    let mut cases = records.len();

    // the known counterexample: a 5-star next to a triangle
    cases += 1;
    let mut star = Graph::edgeless(6);
    for leaf in 1..6 {
        star.add_edge(0, leaf);
    }
    let counterexample = star.disjoint_union(&Graph::complete(3));
    let report_ce = hansen_check(&counterexample);
    if report_ce.margin_numerator != -3 || report_ce.holds {
        failures.push(format!(
            "counterexample margin {} (want -3, failing)",
            report_ce.margin_numerator
        ));
    }
    report("4 (Hansen-Vukicevic margins)", cases, &failures);
}

#[test]
fn criterion_5_composition_forms_match_the_join_forms() {
    let mut failures = Vec::new();
    let mut cases = 0;
    for n in 3..=12usize {
        // dihedral: host is the class-adjacency pattern, parts blow the
        // classes up (center, rotation pairs, reflection classes)
        let (host, parts) = if n % 2 == 1 {
            let host = Graph::complete(1)
                .join(&Graph::complete((n - 1) / 2).disjoint_union(&Graph::complete(1)));
            let mut parts = vec![Graph::complete(1)];
            parts.extend(std::iter::repeat_with(|| Graph::complete(2)).take((n - 1) / 2));
            parts.push(Graph::complete(n));
            (host, parts)
        } else {
            let reflections = if (n / 2) % 2 == 0 {
                Graph::edgeless(2)
            } else {
                Graph::complete(2)
            };
            let host = Graph::complete(2)
                .join(&Graph::complete(n / 2 - 1).disjoint_union(&reflections));
            let mut parts = vec![Graph::complete(1), Graph::complete(1)];
            parts.extend(std::iter::repeat_with(|| Graph::complete(2)).take(n / 2 - 1));
            parts.push(Graph::complete(n / 2));
            parts.push(Graph::complete(n / 2));
            (host, parts)
        };
        let composed = generalized_composition(&host, &parts).unwrap();
        let spec = FamilySpec::new(Family::Dihedral, &[n as u64]).unwrap();
        let want = supercomm::structure::predicted_form(&spec, Relation::Conjugacy).unwrap();
        cases += 1;
        match recognize_form(&composed) {
            Ok(got) if got == want => {}
            other => failures.push(format!("dihedral n={n}: {other:?} want {want}")),
        }

        // quaternion
        let reflections = if n % 2 == 0 {
            Graph::edgeless(2)
        } else {
            Graph::complete(2)
        };
        let host =
            Graph::complete(2).join(&Graph::complete(n - 1).disjoint_union(&reflections));
        let mut parts = vec![Graph::complete(1), Graph::complete(1)];
        parts.extend(std::iter::repeat_with(|| Graph::complete(2)).take(n - 1));
        parts.push(Graph::complete(n));
        parts.push(Graph::complete(n));
        let composed = generalized_composition(&host, &parts).unwrap();
        let spec = FamilySpec::new(Family::Quaternion, &[n as u64]).unwrap();
        let want = supercomm::structure::predicted_form(&spec, Relation::Conjugacy).unwrap();
        cases += 1;
        match recognize_form(&composed) {
            Ok(got) if got == want => {}
            other => failures.push(format!("quaternion n={n}: {other:?} want {want}")),
        }
    }
    report("5 (generalized composition cross-check, n = 3..12)", cases, &failures);
}

/// Conjugacy class size multisets, ascending, as the structure proofs list
/// them per parity case.
fn expected_conjugacy_sizes(family: Family, m: u64, n: u64) -> Vec<usize> {
    let n = n as usize;
    let m = m as usize;
    let mut sizes = match family {
        Family::Dihedral => {
            if n % 2 == 1 {
                let mut s = vec![1];
                s.extend(vec![2; (n - 1) / 2]);
                s.push(n);
                s
            } else {
                let mut s = vec![1, 1];
                s.extend(vec![2; n / 2 - 1]);
                s.extend([n / 2, n / 2]);
                s
            }
        }
        Family::Quaternion => {
            let mut s = vec![1, 1];
            s.extend(vec![2; n - 1]);
            s.extend([n, n]);
            s
        }
        Family::V8n | Family::SemiDihedral => {
            // V8n at even n matches SemiDihedral at odd n and vice versa
            let four_singletons = (family == Family::V8n) == n.is_multiple_of(2);
            if four_singletons {
                let mut s = vec![1; 4];
                s.extend(vec![2; 2 * n - 2]);
                s.extend(vec![n; 4]);
                s
            } else {
                let mut s = vec![1; 2];
                s.extend(vec![2; 2 * n - 1]);
                s.extend(vec![2 * n; 2]);
                s
            }
        }
        Family::QuasiDihedral => {
            return expected_conjugacy_sizes(Family::SemiDihedral, 0, 1 << (m - 3));
        }
        Family::U6n => {
            let mut s = vec![1; n];
            s.extend(vec![2; n]);
            s.extend(vec![3; n]);
            s
        }
        Family::M2mn => {
            if m % 2 == 1 {
                let mut s = vec![1; n];
                s.extend(vec![2; n * (m - 1) / 2]);
                s.extend(vec![m; n]);
                s
            } else {
                let mut s = vec![1; 2 * n];
                s.extend(vec![2; n * (m / 2 - 1)]);
                s.extend(vec![m / 2; 2 * n]);
                s
            }
        }
    };
    sizes.sort_unstable();
    sizes
}

#[test]
fn criterion_6_group_theory_oracles() {
    let specs: Vec<FamilySpec> = [
        (Family::Dihedral, vec![3]),
        (Family::Dihedral, vec![5]),
        (Family::Dihedral, vec![4]),
        (Family::Dihedral, vec![6]),
        (Family::Quaternion, vec![2]),
        (Family::Quaternion, vec![4]),
        (Family::Quaternion, vec![3]),
        (Family::Quaternion, vec![5]),
        (Family::V8n, vec![2]),
        (Family::V8n, vec![4]),
        (Family::V8n, vec![3]),
        (Family::V8n, vec![5]),
        (Family::SemiDihedral, vec![2]),
        (Family::SemiDihedral, vec![4]),
        (Family::SemiDihedral, vec![3]),
        (Family::SemiDihedral, vec![5]),
        (Family::QuasiDihedral, vec![4]),
        (Family::QuasiDihedral, vec![5]),
        (Family::U6n, vec![1]),
        (Family::U6n, vec![2]),
        (Family::M2mn, vec![3, 1]),
        (Family::M2mn, vec![5, 1]),
        (Family::M2mn, vec![3, 2]),
        (Family::M2mn, vec![6, 1]),
        (Family::M2mn, vec![10, 1]),
        (Family::M2mn, vec![6, 2]),
        (Family::M2mn, vec![8, 1]),
        (Family::M2mn, vec![12, 1]),
        (Family::M2mn, vec![8, 2]),
    ]
    .into_iter()
    .map(|(f, p)| FamilySpec::new(f, &p).unwrap())
    .collect();

    let mut failures = Vec::new();
    for spec in &specs {
        let group: Group =
            match enumerate_group(&spec.presentation(), Some(spec.expected_order() as usize)) {
                Ok(g) => g,
                Err(e) => {
                    failures.push(format!("{spec}: {e}"));
                    continue;
                }
            };
        if let Err(e) = group.check_axioms() {
            failures.push(format!("{spec}: {e}"));
        }
        let conj = group.conjugacy_partition();
        let n = group.size();
        let sizes = conj.block_sizes();
        if sizes.iter().sum::<usize>() != n || sizes.iter().any(|&s| !n.is_multiple_of(s)) {
            failures.push(format!("{spec}: class equation violated ({sizes:?})"));
        }
        let mut singletons: Vec<usize> = conj
            .blocks()
            .iter()
            .filter(|b| b.len() == 1)
            .map(|b| b[0])
            .collect();
        singletons.sort_unstable();
        if singletons != group.center() {
            failures.push(format!("{spec}: center differs from singleton classes"));
        }
        let eq = group.equality_partition();
        let ord = group.order_partition();
        if !eq.refines(&conj) || !conj.refines(&ord) {
            failures.push(format!("{spec}: refinement chain broken"));
        }
        let m = if spec.family() == Family::M2mn || spec.family() == Family::QuasiDihedral {
            spec.m()
        } else {
            0
        };
        let want = expected_conjugacy_sizes(spec.family(), m, spec.n());
        if sizes != want {
            failures.push(format!("{spec}: classes {sizes:?} want {want:?}"));
        }
    }
    report("6 (class equation, center, refinement, class multisets)", specs.len(), &failures);
}

#[test]
fn criterion_7_recognition_round_trip_and_rejections() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut cases = 0;

    // every multiset of up to 6 parts with sizes in 1..=12, dominant part up
    // to 12
    fn multisets(k: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 0 {
            out.push(current.clone());
            return;
        }
        for p in 1..=max {
            current.push(p);
            multisets(k - 1, p, current, out);
            current.pop();
        }
    }
    let mut all_parts = vec![Vec::new()];
    for k in 2..=6usize {
        multisets(k, 12, &mut Vec::new(), &mut all_parts);
    }
    for a in 0..=12usize {
        for parts in &all_parts {
            let form = CliqueJoinForm::new(a, parts.clone());
            if form.total() == 0 {
                continue;
            }
            cases += 1;
            match recognize_form(&form.build()) {
                Ok(got) if got == form => {}
                other => failures.push(format!("a={a} parts={parts:?}: {other:?}")),
            }
        }
    }

    let mut c5 = Graph::edgeless(5);
    for v in 0..5 {
        c5.add_edge(v, (v + 1) % 5);
    }
    let mut petersen = Graph::edgeless(10);
    for v in 0..5 {
        petersen.add_edge(v, (v + 1) % 5);
        petersen.add_edge(v, v + 5);
        petersen.add_edge(v + 5, (v + 2) % 5 + 5);
    }
    cases += 2;
    if !matches!(recognize_form(&c5), Err(RecognizeError::NotCliqueJoin { .. })) {
        failures.push("C_5 not rejected".into());
    }
    if !matches!(recognize_form(&petersen), Err(RecognizeError::NotCliqueJoin { .. })) {
        failures.push("Petersen graph not rejected".into());
    }

    let elapsed = start.elapsed();
    println!("  round-trip grid took {elapsed:?}");
    report("7 (recognize . build = id; C_5 and Petersen rejected)", cases, &failures);
}

#[test]
fn criterion_8_cli_contract() {
    let mut failures = Vec::new();
    let bin = env!("CARGO_BIN_EXE_supercomm");
    let tmp = std::env::temp_dir();
    let out1 = tmp.join(format!("supercomm-accept-{}-1.csv", std::process::id()));
    let out2 = tmp.join(format!("supercomm-accept-{}-2.csv", std::process::id()));

    for out in [&out1, &out2] {
        let status = Command::new(bin)
            .args(["verify", "--family", "all", "--relation", "all"])
            .arg("--out")
            .arg(out)
            .status()
            .expect("binary runs");
        if status.code() != Some(0) {
            failures.push(format!("verify exited {:?}", status.code()));
        }
    }
    let csv1 = std::fs::read(&out1).expect("first report");
    let csv2 = std::fs::read(&out2).expect("second report");
    if csv1 != csv2 {
        failures.push("verify CSV is not byte-identical across runs".into());
    }
    let _ = std::fs::remove_file(&out1);
    let _ = std::fs::remove_file(&out2);

    let fixture = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/k15_k3.edges");
    let output = Command::new(bin)
        .args(["check-graph", fixture])
        .output()
        .expect("binary runs");
    if output.status.code() != Some(1) {
        failures.push(format!(
            "check-graph on the counterexample exited {:?}, want 1",
            output.status.code()
        ));
    }
    let stdout = String::from_utf8_lossy(&output.stdout);
    if !stdout.contains("\"margin_numerator\": \"-3\"") {
        failures.push(format!("check-graph output missing margin -3: {stdout}"));
    }
    report("8 (CLI contract)", 3, &failures);
}
