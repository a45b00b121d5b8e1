//! Acceptance gate. Runs every criterion, prints one PASS/FAIL line each, and
//! exits non-zero if any failed. Built with `harness = false` so the lines
//! always reach the terminal.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use halin_core::absorb::{absorb, check_absorb_preconditions, AbsorbInstance};
use halin_core::generate::{gnp, random_balanced_bipartite, random_capped_complement, random_halin};
use halin_core::graph::{common_neighbor_lower_bound, common_neighbors};
use halin_core::ladder_finder::{find_spanning_ladders, Bipartition, LadderRequest};
use halin_core::search::{dirac_experiment, find_spanning_halin, sharpness_probe, ExperimentConfig, SearchBudget};
use halin_core::templates::{
    admissible_attachments, build_template, halin_constructible_vertices, merge, TemplateKind,
};
use halin_core::verify::{check_halin_properties, verify_halin, HalinCertificate, Mode};
use halin_core::{Graph, VertexSet};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Vertex count of each template straight from its definition: the ladder
/// plus the marked vertices x, y and whichever of z, w, u the kind uses.
fn expected_order(kind: TemplateKind, n: usize) -> usize {
    2 * n
        + match kind {
            TemplateKind::H1 => 2,
            TemplateKind::H2 => 3,
            TemplateKind::H3 => 3,
            TemplateKind::H4 => 4,
            TemplateKind::H5 => 5,
        }
}

fn template_sweep() -> Outcome {
    let mut checked = 0;
    for kind in TemplateKind::ALL {
        for n in 1..=15 {
            let ats = admissible_attachments(kind, n);
            let choices: Vec<_> = if kind.needs_attachment() {
                ats.into_iter().map(Some).collect()
            } else {
                vec![None]
            };
            for at in choices {
                let t = build_template(kind, n, at).map_err(|e| format!("{kind} n={n} {at:?}: {e}"))?;
                ensure(t.host.n() == expected_order(kind, n), || format!("{kind} n={n}: {} vertices", t.host.n()))?;
                verify_halin(&t.host, &t.certificate, Mode::Exact).map_err(|f| format!("{kind} n={n} {at:?}: {f}"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} templates verified"))
}

fn absorbing() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut runs = 0;
    for (r, order) in [(1, 6), (2, 14)] {
        let inst = AbsorbInstance::with_targets(Graph::complete(7 * r + 30), (0..r).collect()).unwrap();
        let out = absorb(&inst).map_err(|e| e.to_string())?;
        ensure(out.ladder.order() == order, || format!("r={r} fixture has order {}", out.ladder.order()))?;
        runs += 1;
    }
    while runs < 200 {
        let r = rng.gen_range(1..=6);
        let s = rng.gen_range(7 * r + 6..=200);
        // Each vertex misses at most `cap` others, so any three share at
        // least s - 3(cap + 1) >= 7r helpers.
        let cap = (s - 7 * r) / 3 - 1;
        let g = random_capped_complement(s + r, cap, &mut rng);
        let mut ids: Vec<usize> = (0..s + r).collect();
        ids.shuffle(&mut rng);
        let targets = VertexSet::new(ids[..r].iter().copied());
        let inst = AbsorbInstance::with_targets(g.clone(), targets.clone()).unwrap();
        check_absorb_preconditions(&inst).map_err(|v| format!("generated instance violates {v}"))?;
        let out = absorb(&inst).map_err(|e| e.to_string())?;
        ensure(out.ladder.order() == 8 * r - 2, || format!("order {} for r={r}", out.ladder.order()))?;
        ensure(is_ladder_in(&g, out.ladder.a_side(), out.ladder.b_side()), || "ladder fails validation".into())?;
        ensure(targets.iter().all(|w| out.ladder.contains(w)), || "a target is missing".into())?;
        runs += 1;
    }
    Ok(format!("{runs}/200 absorptions of order 8r-2"))
}

fn disjoint_rungs(g: &Graph, parts: &Bipartition, k: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    let mut pool: Vec<(usize, usize)> = g.edges().filter_map(|e| parts.orient(e)).collect();
    pool.shuffle(rng);
    let mut out: Vec<(usize, usize)> = Vec::new();
    for e in pool {
        if out.iter().all(|f| f.0 != e.0 && f.1 != e.1) {
            out.push(e);
            if out.len() == k {
                break;
            }
        }
    }
    out
}

fn ladder_regime() -> Outcome {
    let mut single = 0;
    let mut split = 0;
    for seed in 0..100u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = rng.gen_range(8usize..=64);
        let min_degree = (7 * m).div_ceil(8) + 1;
        let (g, u) = random_balanced_bipartite(m, min_degree, &mut rng);
        ensure(g.min_degree() >= min_degree, || format!("seed {seed}: degree too low"))?;
        let parts = Bipartition::from_classes(2 * m, &u).unwrap();
        let named = disjoint_rungs(&g, &parts, 4, &mut rng);

        let req = LadderRequest {
            base: g.clone(),
            parts: parts.clone(),
            first_rung: named[0],
            last_rung: named[1],
            forced: Vec::new(),
            seed,
        };
        let ls = find_spanning_ladders(&req).map_err(|e| format!("seed {seed} m={m}: {e}"))?;
        ensure(ls.len() == 1 && ls[0].order() == 2 * m, || format!("seed {seed}: not one spanning ladder"))?;
        let l = &ls[0];
        ensure(is_ladder_in(&g, l.a_side(), l.b_side()), || format!("seed {seed}: invalid ladder"))?;
        let ends = (l.first_rung().unwrap(), l.last_rung().unwrap());
        ensure((ends.0.a, ends.0.b) == named[0] && (ends.1.a, ends.1.b) == named[1], || format!("seed {seed}: wrong end rungs"))?;
        single += 1;

        let req = LadderRequest {
            forced: vec![(named[2], named[3])],
            ..req
        };
        let ls = find_spanning_ladders(&req).map_err(|e| format!("seed {seed} m={m} forced: {e}"))?;
        ensure(ls.len() == 2, || format!("seed {seed}: {} ladders", ls.len()))?;
        let mut all: Vec<usize> = ls.iter().flat_map(|l| l.vertices().collect::<Vec<_>>()).collect();
        all.sort_unstable();
        all.dedup();
        ensure(all.len() == 2 * m && ls[0].order() + ls[1].order() == 2 * m, || format!("seed {seed}: not a disjoint cover"))?;
        for l in &ls {
            ensure(is_ladder_in(&g, l.a_side(), l.b_side()), || format!("seed {seed}: invalid split ladder"))?;
        }
        let close = ls[0].last_rung().unwrap();
        let open = ls[1].first_rung().unwrap();
        ensure((close.a, close.b) == named[2] && (open.a, open.b) == named[3], || format!("seed {seed}: split at the wrong rungs"))?;
        split += 1;
    }
    Ok(format!("single {single}/100, split {split}/100"))
}

fn classical_properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let (mut ham, mut hc, mut almost) = (0, 0, 0);
    for i in 0..100 {
        let (g, cert) = random_halin(14, &mut rng);
        let r = check_halin_properties(&g, &cert).map_err(|e| format!("graph {i}: {e}"))?;
        ham += r.hamiltonian as usize;
        hc += r.hamiltonian_connected as usize;
        let missing_even = r.missing_lengths.iter().all(|l| l % 2 == 0);
        almost += (r.almost_pancyclic && missing_even) as usize;
    }
    ensure(ham == 100 && hc == 100 && almost == 100, || {
        format!("hamiltonian {ham}/100, hamiltonian-connected {hc}/100, almost pancyclic {almost}/100")
    })?;
    for k in 4..=10 {
        let w = Graph::wheel(k);
        let cert = HalinCertificate {
            tree_edges: (1..=k).map(|i| (0, i)).collect(),
            leaf_cycle: (1..=k).collect(),
        };
        let r = check_halin_properties(&w, &cert).map_err(|e| e.to_string())?;
        ensure(r.pancyclic, || format!("W{k} misses {:?}", r.missing_lengths))?;
    }
    Ok("hamiltonian 100/100, hamiltonian-connected 100/100, almost pancyclic 100/100, W4..W10 pancyclic".into())
}

fn sharpness() -> Outcome {
    let budget = SearchBudget::default();
    for n in [4, 6, 8, 10] {
        let none = sharpness_probe(n, &budget).map_err(|e| format!("n={n}: {e}"))?;
        ensure(none, || format!("K_{{{0},{0}}} has a spanning Halin subgraph", n / 2))?;
    }
    Ok("K_{n/2,n/2} has none for n = 4, 6, 8, 10".into())
}

fn dirac_probe() -> Outcome {
    let config = ExperimentConfig {
        orders: 5..=8,
        samples_per_n: 200,
        exhaustive_up_to: 6,
        include_probes: false,
        budget: SearchBudget {
            seed: 6,
            ..SearchBudget::default()
        },
    };
    let report = dirac_experiment(&config).map_err(|e| e.to_string())?;
    let mut notes = Vec::new();
    for row in &report.rows {
        ensure(row.sampled == row.succeeded + row.failed + row.timed_out, || "tally mismatch".into())?;
        if row.n <= 6 {
            ensure(row.succeeded == row.sampled, || format!("n={}: {}/{} succeeded", row.n, row.succeeded, row.sampled))?;
        }
        notes.push(format!("n={} {}/{}", row.n, row.succeeded, row.sampled));
    }
    for w in &report.witnesses {
        println!("    witness n={} edges {:?}", w.n(), w.edges().collect::<Vec<_>>());
    }
    Ok(notes.join(", "))
}

fn merges() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let pick_kind = |rng: &mut ChaCha8Rng| if rng.gen_bool(0.5) { TemplateKind::H1 } else { TemplateKind::H2 };
    for i in 0..50 {
        let t1 = build_template(pick_kind(&mut rng), rng.gen_range(1..=6), None).unwrap();
        let t2 = build_template(pick_kind(&mut rng), rng.gen_range(1..=6), None).unwrap();
        let c1 = halin_constructible_vertices(&t1);
        let c2 = halin_constructible_vertices(&t2);
        let u1 = c1.as_slice()[rng.gen_range(0..c1.len())];
        let u2 = c2.as_slice()[rng.gen_range(0..c2.len())];
        let m = merge(&t1, &t2, u1, u2).map_err(|e| format!("merge {i}: {e}"))?;
        ensure(m.halin.n() == t1.host.n() + t2.host.n(), || format!("merge {i}: wrong order"))?;
        verify_halin(&m.halin, &m.certificate, Mode::Exact).map_err(|f| format!("merge {i}: {f}"))?;
        let tree = tree_lists(m.halin.n(), &m.certificate.tree_edges);
        ensure(planar_by_crossings(&tree, &m.certificate.leaf_cycle), || format!("merge {i}: leaf order crosses"))?;
    }
    Ok("50/50 merges verify".into())
}

fn oracle_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut yes = 0;
    for i in 0..100 {
        let n = rng.gen_range(4..=8);
        let g = gnp(n, rng.gen_range(0.45..0.95), &mut rng);
        let found = find_spanning_halin(&g, &SearchBudget::default()).map_err(|e| e.to_string())?;
        let oracle = naive_spanning_halin(&g);
        ensure(found.is_found() == oracle, || format!("graph {i} n={n}: search {found:?}, oracle {oracle}"))?;
        yes += oracle as usize;
    }
    Ok(format!("100/100 agree ({yes} with a spanning Halin subgraph)"))
}

fn common_neighbour_bound() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for i in 0..500 {
        let n = rng.gen_range(2..=12);
        let g = gnp(n, rng.gen_range(0.1..0.95), &mut rng);
        let mut ids: Vec<usize> = (0..n).collect();
        ids.shuffle(&mut rng);
        let u: Vec<usize> = ids[..rng.gen_range(1..=n.min(5))].to_vec();
        let s: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.75)).collect();
        let bound = common_neighbor_lower_bound(&g, &VertexSet::new(u.clone()), &VertexSet::new(s.clone()))
            .map_err(|e| e.to_string())?;
        let common = common_neighbors(&g, &VertexSet::new(u.clone()), &VertexSet::new(s.clone())).unwrap();
        ensure(bound == brute_bound(&g, &u, &s), || format!("triple {i}: bound formula differs"))?;
        ensure(common.len() == brute_common(&g, &u, &s).len(), || format!("triple {i}: common set differs"))?;
        ensure(bound <= common.len(), || format!("triple {i}: bound {bound} > {}", common.len()))?;
    }
    Ok("500/500".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, Duration, fn() -> Outcome); 9] = [
        ("template validity sweep", Duration::from_secs(10), template_sweep),
        ("absorbing fidelity", Duration::from_secs(10), absorbing),
        ("ladder-finder regime", Duration::from_secs(60), ladder_regime),
        ("classical Halin properties", Duration::from_secs(300), classical_properties),
        ("sharpness", Duration::from_secs(60), sharpness),
        ("Dirac desk probe", Duration::from_secs(600), dirac_probe),
        ("merge correctness", Duration::from_secs(5), merges),
        ("oracle equivalence", Duration::from_secs(300), oracle_equivalence),
        ("common-neighbour bound", Duration::from_secs(5), common_neighbour_bound),
    ];
    let mut failures = 0;
    for (i, (name, limit, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(_) if elapsed > limit => Err(format!("took {elapsed:.2?}, limit {limit:?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail} ({elapsed:.2?})", i + 1),
            Err(detail) => {
                failures += 1;
                println!("criterion {}: FAIL {name}: {detail} ({elapsed:.2?})", i + 1);
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
