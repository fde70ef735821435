//! Subcommand bodies: load the graph, run the library, write the tables.

use std::collections::BTreeMap;
use std::fs;

use gravrank::centrality::{self, effg_centrality_with, Measure};
use gravrank::effective::effective_distance_matrix;
use gravrank::epidemics::{spreading_power, top_k_infection_curves};
use gravrank::evaluation::{kendall_tau, rank_vs_spread, tau_vs_beta_sweep, top_k_overlap, TauRow};
use gravrank::stats::topology_stats;
use gravrank::{DistanceMatrix, Graph, ParseOptions, Ranking, ScoreVector};
use serde::Serialize;

use crate::config::{ExperimentConfig, Reference};
use crate::output::{cell, num, OutputDir};
use crate::{CliError, Format};

fn load(cfg: &ExperimentConfig) -> Result<Graph, CliError> {
    let text = fs::read_to_string(&cfg.input)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", cfg.input.display())))?;
    let opts = ParseOptions {
        ignore_extra_columns: cfg.ignore_extra_columns,
    };
    let (g, report) = Graph::parse_edge_list(&text, &opts)
        .map_err(|e| CliError::Usage(format!("{}: {e}", cfg.input.display())))?;
    if report.self_loops_dropped > 0 || report.duplicates_merged > 0 {
        log::warn!(
            "{}: dropped {} self-loop(s), merged {} duplicate edge(s)",
            cfg.input.display(),
            report.self_loops_dropped,
            report.duplicates_merged
        );
    }
    log::info!("loaded {} nodes, {} edges", g.node_count(), g.edge_count());
    Ok(g)
}

/// Scores for every requested measure, in request order. The effective-distance
/// matrix is returned when it was built (EffG requested or a dump asked for).
fn score_all(
    g: &Graph,
    measures: &[Measure],
    cfg: &ExperimentConfig,
    need_matrix: bool,
) -> Result<(Vec<ScoreVector>, Option<DistanceMatrix>), CliError> {
    let opts = cfg.measure_options.unwrap_or_default();
    let matrix = (need_matrix || measures.contains(&Measure::Effg)).then(|| effective_distance_matrix(g));
    let mut out = Vec::with_capacity(measures.len());
    for &m in measures {
        let scores = match (m, &matrix) {
            (Measure::Effg, Some(d)) => effg_centrality_with(g, d, opts.effg_peers)?,
            _ => centrality::compute(g, m, &opts)?,
        };
        if let Some(c) = &scores.convergence {
            log::info!("{}: {} iterations, residual {:e}", m.name(), c.iterations, c.residual);
        }
        out.push(scores);
    }
    Ok((out, matrix))
}

pub fn stats(cfg: &ExperimentConfig) -> Result<(), CliError> {
    let g = load(cfg)?;
    let s = topology_stats(&g)?;
    let dir = OutputDir::create(cfg)?;
    match cfg.format {
        Format::Csv => {
            let opt = |x: Option<f64>| x.map_or_else(|| "nan".to_owned(), num);
            dir.write_csv(
                "stats.csv",
                &["n", "m", "avg_degree", "avg_distance", "unreachable_fraction", "clustering", "assortativity"],
                [vec![
                    s.n.to_string(),
                    s.m.to_string(),
                    num(s.avg_degree),
                    num(s.avg_distance),
                    num(s.unreachable_fraction),
                    num(s.clustering),
                    opt(s.assortativity),
                ]],
            )?;
        }
        Format::Json => {
            dir.write_json("stats.json", &Report { config: cfg, result: &s })?;
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct Report<'a, T: Serialize> {
    config: &'a ExperimentConfig,
    result: &'a T,
}

#[derive(Serialize)]
struct NodeScore<'a> {
    node: &'a str,
    score: f64,
    rank: usize,
}

pub fn rank(cfg: &ExperimentConfig) -> Result<(), CliError> {
    let g = load(cfg)?;
    let (scores, matrix) = score_all(&g, &cfg.measures, cfg, cfg.dump_distances)?;
    let dir = OutputDir::create(cfg)?;
    match cfg.format {
        Format::Csv => {
            for s in &scores {
                let ranking = s.rank();
                let rows = ranking.order().iter().enumerate().map(|(pos, &v)| {
                    vec![cell(g.label(v)), num(s.score(v)), (pos + 1).to_string()]
                });
                dir.write_csv(&format!("rank_{}.csv", s.measure.name()), &["node_label", "score", "rank"], rows)?;
            }
        }
        Format::Json => {
            let mut map: BTreeMap<&str, Vec<NodeScore>> = BTreeMap::new();
            for s in &scores {
                let ranking = s.rank();
                let rows = ranking
                    .order()
                    .iter()
                    .enumerate()
                    .map(|(pos, &v)| NodeScore {
                        node: g.label(v),
                        score: s.score(v),
                        rank: pos + 1,
                    })
                    .collect();
                map.insert(s.measure.name(), rows);
            }
            dir.write_json("scores.json", &Report { config: cfg, result: &map })?;
        }
    }
    if cfg.dump_distances {
        if let Some(d) = &matrix {
            dir.write_with("effective_distances.csv", |w| d.write_csv(&g, w))?;
        }
    }
    Ok(())
}

pub fn spread(cfg: &ExperimentConfig) -> Result<(), CliError> {
    let si = cfg.si.expect("spread config carries SI parameters");
    let k = cfg.k.expect("spread config carries k");
    let g = load(cfg)?;
    if k > g.node_count() {
        return Err(CliError::Usage(format!(
            "--k {k} exceeds the node count {}",
            g.node_count()
        )));
    }
    let (scores, _) = score_all(&g, &cfg.measures, cfg, false)?;
    let rankings: Vec<Ranking> = scores.iter().map(ScoreVector::rank).collect();
    let named: Vec<(&str, &Ranking)> = scores
        .iter()
        .zip(&rankings)
        .map(|(s, r)| (s.measure.name(), r))
        .collect();
    let curves = top_k_infection_curves(&g, &named, k, &si)?;
    let dir = OutputDir::create(cfg)?;
    match cfg.format {
        Format::Csv => {
            let header: Vec<String> = std::iter::once("t".to_owned())
                .chain(curves.iter().map(|(name, _)| format!("F_{name}")))
                .collect();
            let header: Vec<&str> = header.iter().map(String::as_str).collect();
            let rows = (0..=si.t_max).map(|t| {
                std::iter::once(t.to_string())
                    .chain(curves.iter().map(|(_, o)| num(o.f_curve[t])))
                    .collect()
            });
            dir.write_csv("spread.csv", &header, rows)?;
        }
        Format::Json => {
            let map: BTreeMap<&str, _> = curves.iter().map(|(n, o)| (n.as_str(), o)).collect();
            dir.write_json("spread.json", &Report { config: cfg, result: &map })?;
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct OverlapRow<'a> {
    measure_a: &'a str,
    measure_b: &'a str,
    k: usize,
    shared: usize,
}

#[derive(Serialize)]
struct SpreadEntry<'a> {
    rank: usize,
    node: &'a str,
    mean_final: f64,
}

#[derive(Serialize)]
struct Evaluation<'a> {
    tau: &'a [TauRow],
    overlap: &'a [OverlapRow<'a>],
    rank_vs_spread: BTreeMap<&'a str, Vec<SpreadEntry<'a>>>,
}

pub fn evaluate(cfg: &ExperimentConfig) -> Result<(), CliError> {
    let sweep_si = cfg.si.expect("evaluate config carries sweep parameters");
    let spread_si = cfg.spread_si.expect("evaluate config carries spread parameters");
    let grid = cfg.beta_grid.as_deref().expect("evaluate config carries a beta grid");
    let k = cfg.k.expect("evaluate config carries k");
    let convention = cfg.tau_convention.unwrap_or_default();
    let reference = cfg.reference.expect("evaluate config carries a reference");
    let overlap_ref = cfg.overlap_reference.expect("evaluate config carries an overlap reference");

    let g = load(cfg)?;
    if k > g.node_count() {
        return Err(CliError::Usage(format!(
            "--k {k} exceeds the node count {}",
            g.node_count()
        )));
    }

    // Measures needed beyond the requested ones (references), scored once.
    let mut all = cfg.measures.clone();
    for extra in [Some(overlap_ref), match reference {
        Reference::Measure(m) => Some(m),
        Reference::Si => None,
    }]
    .into_iter()
    .flatten()
    {
        if !all.contains(&extra) {
            all.push(extra);
        }
    }
    let (scores, _) = score_all(&g, &all, cfg, false)?;
    let by_measure = |m: Measure| scores.iter().find(|s| s.measure == m).expect("scored above");
    let requested: Vec<&ScoreVector> = cfg.measures.iter().map(|&m| by_measure(m)).collect();

    // Kendall tau against the reference, one row per (beta, measure).
    let named: Vec<(&str, &[f64])> = requested
        .iter()
        .map(|s| (s.measure.name(), s.scores.as_slice()))
        .collect();
    let tau_rows = match reference {
        Reference::Si => tau_vs_beta_sweep(&g, &named, grid, &sweep_si, convention)?,
        Reference::Measure(m) => {
            let reference_scores = &by_measure(m).scores;
            let mut rows = Vec::with_capacity(grid.len() * named.len());
            for &beta in grid {
                for (name, s) in &named {
                    rows.push(TauRow {
                        measure: (*name).to_owned(),
                        beta,
                        comparison: kendall_tau(s, reference_scores, convention)?,
                    });
                }
            }
            rows
        }
    };

    // Top-k overlap of every ranking (including the SI ground truth) with the reference ranking.
    let si_scores = spreading_power(&g, &spread_si)?;
    let si_ranking = Ranking::from_scores(&si_scores);
    let ref_ranking = by_measure(overlap_ref).rank();
    let rankings: Vec<(&str, Ranking)> = requested
        .iter()
        .map(|s| (s.measure.name(), s.rank()))
        .collect();
    let mut overlap = Vec::with_capacity(rankings.len() + 1);
    for (name, r) in rankings.iter().map(|(n, r)| (*n, r)).chain([("si", &si_ranking)]) {
        let report = top_k_overlap(r, &ref_ranking, k)?;
        overlap.push(OverlapRow {
            measure_a: name,
            measure_b: overlap_ref.name(),
            k: report.k,
            shared: report.shared,
        });
    }

    // Mean single-seed outbreak size listed in each measure's rank order.
    let mut spread_tables: BTreeMap<&str, Vec<SpreadEntry>> = BTreeMap::new();
    let mut spread_order: Vec<&str> = Vec::new();
    for (name, r) in &rankings {
        let rows = rank_vs_spread(&g, r, &spread_si)?
            .into_iter()
            .map(|row| SpreadEntry {
                rank: row.rank,
                node: g.label(row.node),
                mean_final: row.mean_final,
            })
            .collect();
        spread_tables.insert(name, rows);
        spread_order.push(name);
    }

    let dir = OutputDir::create(cfg)?;
    match cfg.format {
        Format::Csv => {
            dir.write_csv(
                "tau_sweep.csv",
                &["measure", "beta", "tau", "concordant", "discordant"],
                tau_rows.iter().map(|r| {
                    vec![
                        r.measure.clone(),
                        num(r.beta),
                        num(r.comparison.tau),
                        r.comparison.concordant.to_string(),
                        r.comparison.discordant.to_string(),
                    ]
                }),
            )?;
            dir.write_csv(
                "overlap.csv",
                &["measure_a", "measure_b", "k", "shared"],
                overlap.iter().map(|o| {
                    vec![o.measure_a.to_owned(), o.measure_b.to_owned(), o.k.to_string(), o.shared.to_string()]
                }),
            )?;
            for name in spread_order {
                dir.write_csv(
                    &format!("rank_vs_spread_{name}.csv"),
                    &["rank", "node_label", "mean_final"],
                    spread_tables[name]
                        .iter()
                        .map(|e| vec![e.rank.to_string(), cell(e.node), num(e.mean_final)]),
                )?;
            }
        }
        Format::Json => {
            let result = Evaluation {
                tau: &tau_rows,
                overlap: &overlap,
                rank_vs_spread: spread_tables,
            };
            dir.write_json("evaluation.json", &Report { config: cfg, result: &result })?;
        }
    }
    Ok(())
}
