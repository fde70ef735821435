//! Acceptance criteria. Each test prints one `criterion N: PASS|FAIL|SKIP`
//! line (run with `--nocapture` to see them) and fails on FAIL.
//!
//! Criterion 7 needs the public Jazz musicians edge list, which is not
//! bundled; point `GRAVRANK_JAZZ_EDGES` at it to run that criterion.

mod common;

use std::time::{Duration, Instant};

use gravrank::centrality::{self, EffgPeers, Measure, MeasureOptions, Ranking};
use gravrank::effective::{effective_distance_matrix, effective_distances};
use gravrank::epidemics::{simulate_si, spreading_power, top_k_infection_curves, SiConfig};
use gravrank::evaluation::{kendall_tau, top_k_overlap, TauConvention};
use gravrank::stats::topology_stats;
use gravrank::{DistanceMatrix, Graph, NodeId, ParseOptions};
use rand::Rng;

fn report(criterion: u32, failures: &[String], summary: &str) {
    if failures.is_empty() {
        println!("criterion {criterion}: PASS ({summary})");
    } else {
        println!("criterion {criterion}: FAIL ({summary})");
        for f in failures {
            println!("    - {f}");
        }
        panic!("criterion {criterion} failed: {}", failures.join("; "));
    }
}

fn check(failures: &mut Vec<String>, ok: bool, what: impl FnOnce() -> String) {
    if !ok {
        failures.push(what());
    }
}

#[test]
fn criterion_1_worked_example() {
    let start = Instant::now();
    let g = common::worked_example();
    let node = |label: &str| g.node_by_label(label).unwrap();
    let mut failures = Vec::new();

    let degrees: Vec<usize> = (1..=7).map(|l| g.deg(node(&l.to_string()))).collect();
    check(&mut failures, degrees == [6, 2, 2, 3, 4, 2, 1], || {
        format!("degrees {degrees:?}")
    });

    let row = effective_distances(&g, node("2")).unwrap();
    let table = [2.0, f64::INFINITY, 4.0, 4.0, 2.0, 4.5850, 4.5850];
    for (label, want) in (1..=7).zip(table) {
        let got = row.dist[node(&label.to_string()).index()];
        let ok = if want.is_infinite() {
            got.is_infinite()
        } else {
            (got - want).abs() <= 1e-3
        };
        check(&mut failures, ok, || format!("D(2->{label}) = {got}, want {want}"));
    }

    let d = effective_distance_matrix(&g);
    let d27 = d.get(node("2"), node("7"));
    let d72 = d.get(node("7"), node("2"));
    check(&mut failures, (d27 - 4.5850).abs() <= 1e-3, || format!("D(2->7) = {d27}"));
    check(&mut failures, (d72 - 3.5850).abs() <= 1e-3, || format!("D(7->2) = {d72}"));

    let listed = [6.5358, 5.9104, 5.9104, 6.0704, 6.2865, 5.5981, 1.0115];
    let effg = centrality::effg_centrality(&g, &d).unwrap();
    for (label, want) in (1..=7).zip(listed) {
        let got = effg.score(node(&label.to_string()));
        check(&mut failures, (got - want).abs() <= 1e-3, || {
            format!("EffG({label}) = {got:.4}, want {want}")
        });
    }

    // Informational: the score list is reproduced in full when peers at
    // effective distance exactly 1 are left out of the sum.
    let skipped = centrality::effg_centrality_with(&g, &d, EffgPeers::SkipUnitDistance).unwrap();
    let all_match = (1..=7)
        .zip(listed)
        .all(|(l, want)| (skipped.score(node(&l.to_string())) - want).abs() <= 1e-3);
    println!(
        "criterion 1 (info): EffG with unit-distance peers skipped matches all seven listed scores: {all_match}"
    );

    let elapsed = start.elapsed();
    check(&mut failures, elapsed < Duration::from_secs(1), || {
        format!("runtime {elapsed:?}")
    });
    report(1, &failures, &format!("runtime {elapsed:?}"));
}

#[test]
fn criterion_2_effective_distance_oracle() {
    let mut rng = common::rng(0xED);
    let mut failures = Vec::new();
    let mut compared = 0usize;
    for trial in 0..200 {
        let n = rng.random_range(2..=8);
        let p = rng.random_range(0.0..0.7);
        let g = common::random_connected_graph(&mut rng, n, p);
        let d = effective_distance_matrix(&g);
        for s in 0..n {
            let oracle = common::brute_effective_distances(&g, s);
            for t in 0..n {
                let got = d.get(NodeId::from(s), NodeId::from(t));
                let want = oracle[t];
                compared += 1;
                let ok = if want.is_infinite() {
                    got.is_infinite()
                } else {
                    (got - want).abs() <= 1e-9
                };
                check(&mut failures, ok, || {
                    format!("trial {trial}: D({s}->{t}) = {got}, oracle {want}")
                });
            }
        }
    }
    report(2, &failures, &format!("200 graphs, {compared} ordered pairs"));
}

#[test]
fn criterion_3_betweenness_oracle() {
    let mut rng = common::rng(0xBC);
    let mut failures = Vec::new();
    for trial in 0..200 {
        let n = rng.random_range(1..=8);
        let p = rng.random_range(0.0..1.0);
        let g = common::random_graph(&mut rng, n, p);
        let fast = centrality::betweenness_centrality(&g).scores;
        let slow = common::brute_betweenness(&g);
        let worst = fast
            .iter()
            .zip(&slow)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        check(&mut failures, worst <= 1e-9, || {
            format!("trial {trial}: {fast:?} vs {slow:?}")
        });
    }
    report(3, &failures, "200 graphs");
}

#[test]
fn criterion_4_kendall_oracle() {
    let mut rng = common::rng(0x7A);
    let mut failures = Vec::new();
    for trial in 0..500 {
        let n = rng.random_range(2..=50);
        // a third of the sequences draw from a handful of values to force ties
        let coarse = trial % 3 == 0;
        let draw = |rng: &mut rand_chacha::ChaCha8Rng| {
            if coarse {
                rng.random_range(0..5) as f64
            } else {
                rng.random_range(-1.0..1.0)
            }
        };
        let x: Vec<f64> = (0..n).map(|_| draw(&mut rng)).collect();
        let y: Vec<f64> = (0..n).map(|_| draw(&mut rng)).collect();
        let (c, d) = common::brute_kendall_counts(&x, &y);
        let pairs = (n * (n - 1) / 2) as u64;
        for (conv, denom) in [
            (TauConvention::Standard, pairs),
            (TauConvention::PaperEq11, 2 * pairs),
        ] {
            let got = kendall_tau(&x, &y, conv).unwrap();
            let want = (c as f64 - d as f64) / denom as f64;
            check(
                &mut failures,
                got.concordant == c && got.discordant == d && got.tau == want,
                || format!("trial {trial} {conv:?}: {got:?}, oracle c={c} d={d} tau={want}"),
            );
        }
    }
    report(4, &failures, "500 sequence pairs, both conventions, exact");
}

#[test]
fn criterion_5_si_properties() {
    let mut failures = Vec::new();
    let g = common::worked_example();
    let seeds = [NodeId(6)];

    let zero = simulate_si(&g, &seeds, &SiConfig { beta: 0.0, ..Default::default() }).unwrap();
    check(&mut failures, zero.f_curve.iter().all(|&f| f == 1.0), || {
        format!("beta=0 curve {:?}", zero.f_curve)
    });

    // node 7's eccentricity is 2
    let full = simulate_si(&g, &seeds, &SiConfig { beta: 1.0, t_max: 6, ..Default::default() }).unwrap();
    check(&mut failures, full.f_curve[2..].iter().all(|&f| f == 7.0), || {
        format!("beta=1 curve {:?}", full.f_curve)
    });
    check(&mut failures, full.f_curve[1] < 7.0, || "beta=1 saturated before the eccentricity".into());

    let mut rng = common::rng(0x51);
    for trial in 0..20 {
        let h = common::random_connected_graph(&mut rng, 30, 0.08);
        let cfg = SiConfig {
            beta: rng.random_range(0.05..0.95),
            t_max: 15,
            runs: 20,
            seed: trial,
            ..Default::default()
        };
        let a = simulate_si(&h, &[NodeId(0), NodeId(5)], &cfg).unwrap();
        for curve in &a.per_run_curves {
            check(&mut failures, curve.windows(2).all(|w| w[0] <= w[1]), || {
                format!("trial {trial}: decreasing run {curve:?}")
            });
        }
        let b = simulate_si(&h, &[NodeId(0), NodeId(5)], &cfg).unwrap();
        check(&mut failures, a == b, || format!("trial {trial}: outcomes differ between runs"));
    }

    let star_edges: Vec<_> = (1..=10).map(|l| (0, l)).collect();
    let star = Graph::from_index_edges(11, &star_edges).unwrap();
    let cfg = SiConfig { beta: 0.5, t_max: 1, runs: 10_000, seed: 2024, ..Default::default() };
    let out = simulate_si(&star, &[NodeId(0)], &cfg).unwrap();
    let se = out.std_error_at(1);
    check(&mut failures, (out.f_curve[1] - 6.0).abs() <= 3.0 * se, || {
        format!("star F(1) = {} with standard error {se}", out.f_curve[1])
    });

    report(5, &failures, &format!("star F(1) = {:.4} ± {:.4}", out.f_curve[1], se));
}

#[test]
fn criterion_6_hop_substitution_reproduces_gravity() {
    let mut rng = common::rng(0x66);
    let mut failures = Vec::new();
    let mut worst = 0.0f64;
    for trial in 0..100 {
        let n = rng.random_range(1..=40);
        let p = rng.random_range(0.0..0.4);
        let g = common::random_graph(&mut rng, n, p);
        let via_hops = centrality::effg_centrality(&g, &DistanceMatrix::hops(&g)).unwrap();
        let gm = centrality::gravity_centrality(&g);
        for (a, b) in via_hops.scores.iter().zip(&gm.scores) {
            worst = worst.max((a - b).abs());
            check(&mut failures, (a - b).abs() <= 1e-12, || format!("trial {trial}: {a} vs {b}"));
        }
    }
    report(6, &failures, &format!("100 graphs, max |diff| {worst:e}"));
}

#[test]
fn criterion_7_jazz_dataset() {
    let Ok(path) = std::env::var("GRAVRANK_JAZZ_EDGES") else {
        println!("criterion 7: SKIP (set GRAVRANK_JAZZ_EDGES to the Jazz edge list to run)");
        return;
    };
    let text = std::fs::read_to_string(&path).expect("reading Jazz edge list");
    let opts = ParseOptions { ignore_extra_columns: true };
    let (g, _) = Graph::parse_edge_list(&text, &opts).expect("parsing Jazz edge list");
    let mut failures = Vec::new();

    let stats = topology_stats(&g).unwrap();
    check(&mut failures, stats.n == 198 && stats.m == 2472, || {
        format!("n={} m={}", stats.n, stats.m)
    });
    check(&mut failures, (stats.avg_degree - 27.6970).abs() <= 1e-3, || {
        format!("<k> = {}", stats.avg_degree)
    });

    let opts = MeasureOptions::default();
    let rankings: Vec<(Measure, Ranking)> = Measure::ALL
        .iter()
        .map(|&m| (m, centrality::compute(&g, m, &opts).unwrap().rank()))
        .collect();
    let effg = &rankings.iter().find(|(m, _)| *m == Measure::Effg).unwrap().1;

    let truth_cfg = SiConfig { beta: 0.2, t_max: 20, runs: 50, ..Default::default() };
    let si_rank = Ranking::from_scores(&spreading_power(&g, &truth_cfg).unwrap());
    let expected = [
        ("dc", 18usize),
        ("cc", 17),
        ("bc", 10),
        ("pagerank", 14),
        ("ec", 17),
        ("si", 17),
        ("gm", 4),
    ];
    for (name, want) in expected {
        let other = if name == "si" {
            &si_rank
        } else {
            &rankings.iter().find(|(m, _)| m.name() == name).unwrap().1
        };
        let shared = top_k_overlap(effg, other, 20).unwrap().shared;
        println!("criterion 7 (info): top-20 overlap effg vs {name}: {shared} (table {want})");
        check(&mut failures, shared.abs_diff(want) <= 2, || {
            format!("overlap with {name} = {shared}, want {want} ± 2")
        });
    }

    let start = Instant::now();
    let named: Vec<(&str, &Ranking)> = rankings.iter().map(|(m, r)| (m.name(), r)).collect();
    let curves = top_k_infection_curves(&g, &named, 100, &truth_cfg).unwrap();
    let elapsed = start.elapsed();
    let mut finals: Vec<f64> = curves.iter().map(|(_, o)| o.final_mean).collect();
    let effg_final = curves.iter().find(|(n, _)| n == "effg").unwrap().1.final_mean;
    finals.sort_by(f64::total_cmp);
    let median = finals[finals.len() / 2];
    check(&mut failures, effg_final >= median, || {
        format!("EffG F(20) = {effg_final} below median {median}")
    });
    check(&mut failures, elapsed < Duration::from_secs(60), || format!("spread took {elapsed:?}"));
    report(7, &failures, &format!("EffG F(20) = {effg_final:.2}, median {median:.2}"));
}

#[test]
fn criterion_8_full_scale_figures() {
    println!("criterion 8: N/A (full-scale figure reproduction is outside the acceptance gate)");
}
