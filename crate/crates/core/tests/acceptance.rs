//! One line per criterion; exits nonzero if any fails. Every check is exact.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use sdgraph::alternating::{
    extract_blossom_from_closed_walk, walk_exists, AlternatingWalk, WalkClass,
};
use sdgraph::configurations::{
    exists_jposy, find_flowers, find_posies, find_tposies, is_jflower, Blossom, BlossomIndex,
    Jflower,
};
use sdgraph::enumerate::{all_graphs, connected_graphs_up_to};
use sdgraph::fixtures::named_fixture;
use sdgraph::ke::{independence_number, is_ke_direct, is_ke_sterboul, is_ke_tposy};
use sdgraph::matching::{enumerate_maximum_matchings, matching_number};
use sdgraph::verify::{
    conjecture_scan_graphs, ear_tposy_suite, tposy_base_graphs, verify_graphs, Check,
    ConjectureClass,
};
use sdgraph::{Graph, Limits, VertexId};

const SEED: u64 = 0x5eed_2024;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn c1(corpus: &[Graph], l: &Limits) -> Outcome {
    let r = verify_graphs(corpus, &[Check::Main], l).unwrap();
    outcome(
        corpus.len() == 996 && r.passed(),
        format!(
            "{} connected graphs of order <= 7, {} with V_T != V_ESG or != V_J",
            corpus.len(),
            r.counterexamples.len()
        ),
    )
}

fn c2(corpus: &[Graph], l: &Limits) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut graphs = corpus.to_vec();
    for _ in 0..1000 {
        let n = rng.gen_range(8..=10);
        let p = rng.gen_range(0.2..=0.6);
        graphs.push(common::random_connected_graph(&mut rng, n, p));
    }
    let disagree = graphs
        .par_iter()
        .filter(|g| {
            let d = is_ke_direct(g, l).unwrap();
            let s = is_ke_sterboul(g, l).unwrap();
            let t = is_ke_tposy(g, l).unwrap();
            d.is_ke != s.is_ke || d.is_ke != t.is_ke || s.uniform != Some(true)
        })
        .count();
    outcome(
        disagree == 0,
        format!(
            "{} graphs, {disagree} disagreements between the three KE tests",
            graphs.len()
        ),
    )
}

fn c3(corpus: &[Graph], l: &Limits) -> Outcome {
    let (pairs, bad) = corpus
        .par_iter()
        .map(|g| {
            let ke = is_ke_direct(g, l).unwrap().is_ke;
            let ms = enumerate_maximum_matchings(g, l).unwrap();
            let bad = ms.iter().filter(|m| ke && exists_jposy(g, m)).count();
            (ms.len(), bad)
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    outcome(
        bad == 0,
        format!("{pairs} (graph, maximum matching) pairs, {bad} KE graphs with a Jposy"),
    )
}

fn c4(l: &Limits) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 4);
    let (mut walks, mut failures, mut longest) = (0, 0, 0);
    while walks < 1000 {
        let n = rng.gen_range(3..=8);
        let p = rng.gen_range(0.3..=0.8);
        let g = common::random_graph(&mut rng, n, p);
        let ms = enumerate_maximum_matchings(&g, l).unwrap();
        let m = &ms[rng.gen_range(0..ms.len())];
        let Some(w) = common::random_closed_odd_walk(&mut rng, &g, m, 60) else {
            continue;
        };
        walks += 1;
        longest = longest.max(w.len() - 1);
        let ok = AlternatingWalk::new(&g, m, w).ok().and_then(|w| {
            let b = extract_blossom_from_closed_walk(&g, m, &w).ok()?;
            (b.validate(&g, m).is_ok() && b.vertex_set().is_subset(w.vertex_set())).then_some(())
        });
        if ok.is_none() {
            failures += 1;
        }
    }
    outcome(
        failures == 0,
        format!("{walks} closed odd alternating walks (up to {longest} edges), {failures} without a valid blossom"),
    )
}

fn c5(l: &Limits) -> Outcome {
    let bases = tposy_base_graphs(12).unwrap();
    let r = ear_tposy_suite(&bases, l).unwrap();
    outcome(
        r.passed(),
        format!(
            "{} base graphs, {} graph+ear instances, {} with a vertex on no Tposy",
            r.base_graphs,
            r.instances,
            r.failures.len()
        ),
    )
}

fn same_path(a: &[VertexId], b: &[VertexId]) -> bool {
    a == b || a.iter().rev().eq(b.iter())
}

fn c6() -> Outcome {
    let mut missing = Vec::new();

    let f = named_fixture("edmonds_fig1").unwrap();
    let idx = BlossomIndex::new(&f.graph, &f.matching);
    if idx.bases().to_vec() != vec![0, 2] {
        missing.push("edmonds_fig1 blossom bases");
    }
    if !find_flowers(&f.graph, &f.matching)
        .iter()
        .any(|x| x.blossom.base() == 2 && same_path(&x.stem, &[0, 1, 2]))
    {
        missing.push("edmonds_fig1 flower with stem 0,1,2");
    }

    let f = named_fixture("posy_fig5").unwrap();
    let b = |c: &[VertexId]| Blossom::new(&f.graph, &f.matching, c.to_vec()).unwrap();
    let pair = BTreeSet::from([
        b(&[9, 5, 4]).cycle().to_vec(),
        b(&[1, 2, 3, 4, 5]).cycle().to_vec(),
    ]);
    let has = |b1: &Blossom, b2: &Blossom, link: &[VertexId], want: &[VertexId]| {
        BTreeSet::from([b1.cycle().to_vec(), b2.cycle().to_vec()]) == pair && same_path(link, want)
    };
    if !find_posies(&f.graph, &f.matching)
        .iter()
        .any(|p| has(&p.blossom1, &p.blossom2, &p.link, &[9, 8, 5, 4, 3, 2, 0, 1]))
    {
        missing.push("posy_fig5 posy link 9,8,5,4,3,2,0,1");
    }
    if !find_tposies(&f.graph, &f.matching)
        .iter()
        .any(|t| has(&t.blossom1, &t.blossom2, &t.link, &[9, 8, 7, 6, 0, 1]))
    {
        missing.push("posy_fig5 Tposy link 9,8,7,6,0,1");
    }

    let f = named_fixture("jflower_fig4").unwrap();
    let j = Jflower {
        blossom: Blossom::new(&f.graph, &f.matching, vec![0, 1, 2, 3, 4]).unwrap(),
        walk: vec![
            0, 5, 9, 10, 14, 13, 9, 10, 14, 13, 9, 10, 6, 7, 8, 11, 7, 6, 1, 2, 12,
        ],
    };
    if !is_jflower(&f.graph, &f.matching, &j) {
        missing.push("jflower_fig4 21-vertex walk");
    }

    outcome(
        missing.is_empty(),
        if missing.is_empty() {
            "blossom bases, flower stem, posy and Tposy links, Jflower walk all reproduced".into()
        } else {
            format!("not reproduced: {}", missing.join("; "))
        },
    )
}

fn c7(corpus8: &[Graph], l: &Limits) -> Outcome {
    let r = verify_graphs(corpus8, &[Check::Corollary], l).unwrap();
    let t = r
        .tallies
        .get(&Check::Corollary)
        .copied()
        .unwrap_or_default();
    outcome(
        r.passed(),
        format!(
            "{} connected graphs of order <= 8 with a perfect matching, {} counterexamples",
            t.checked, t.counterexamples
        ),
    )
}

fn c8(corpus9: &[Graph], l: &Limits) -> Outcome {
    let r = conjecture_scan_graphs(corpus9, 9, l).unwrap();
    let count = |c| r.counts.get(&c).copied().unwrap_or(0);
    let even_bad: Vec<_> = r.even_counterexamples().map(|x| x.graph6.clone()).collect();
    outcome(
        r.odd_failures.is_empty(),
        format!(
            "even Hamiltonian (exploratory): {} graphs, KE {}, SD {}, neither {}{}; odd Hamiltonian: {} checked, {} not SD",
            r.even.len(),
            count(ConjectureClass::Ke),
            count(ConjectureClass::Sd),
            count(ConjectureClass::Counterexample),
            if even_bad.is_empty() { String::new() } else { format!(" {even_bad:?}") },
            r.odd_checked,
            r.odd_failures.len()
        ),
    )
}

fn c9(l: &Limits) -> Outcome {
    let upto = |k: usize| -> Vec<Graph> { (1..=k).flat_map(|n| all_graphs(n).unwrap()).collect() };
    let small = upto(6);
    let walk_bad = small
        .par_iter()
        .map(|g| {
            let mut bad = 0;
            for m in enumerate_maximum_matchings(g, l).unwrap() {
                for from in g.vertices() {
                    for (first, cls) in [
                        (true, [WalkClass::Mm, WalkClass::Mn]),
                        (false, [WalkClass::Nm, WalkClass::Nn]),
                    ] {
                        let ends = common::bounded_walk_ends(g, &m, from, first, 4 * g.order());
                        for to in g.vertices() {
                            for (c, last) in cls.into_iter().zip([true, false]) {
                                if walk_exists(g, &m, from, to, c) != ends.contains(&(to, last)) {
                                    bad += 1;
                                }
                            }
                        }
                    }
                }
            }
            bad
        })
        .sum::<usize>();
    let seven = upto(7);
    let mu_bad = seven
        .par_iter()
        .filter(|g| matching_number(g) != common::brute_matching_number(g))
        .count();
    let alpha_bad = seven
        .par_iter()
        .filter(|g| independence_number(g, l).unwrap() != common::brute_alpha(g))
        .count();
    outcome(
        walk_bad + mu_bad + alpha_bad == 0,
        format!(
            "walk existence on {} graphs (n <= 6): {walk_bad} mismatches; matching number and alpha on {} graphs (n <= 7): {mu_bad} and {alpha_bad} mismatches",
            small.len(),
            seven.len()
        ),
    )
}

fn main() -> ExitCode {
    let l = Limits::default();
    let start = Instant::now();
    let corpus9 = connected_graphs_up_to(9).unwrap();
    let corpus8: Vec<Graph> = corpus9.iter().filter(|g| g.order() <= 8).cloned().collect();
    let corpus7: Vec<Graph> = corpus9.iter().filter(|g| g.order() <= 7).cloned().collect();
    println!(
        "corpus: {} connected graphs of order <= 9 generated in {:.1}s",
        corpus9.len(),
        start.elapsed().as_secs_f64()
    );

    let criteria: [(usize, Box<dyn Fn() -> Outcome>); 9] = [
        (1, Box::new(|| c1(&corpus7, &l))),
        (2, Box::new(|| c2(&corpus7, &l))),
        (3, Box::new(|| c3(&corpus7, &l))),
        (4, Box::new(|| c4(&l))),
        (5, Box::new(|| c5(&l))),
        (6, Box::new(c6)),
        (7, Box::new(|| c7(&corpus8, &l))),
        (8, Box::new(|| c8(&corpus9, &l))),
        (9, Box::new(|| c9(&l))),
    ];
    let mut failed = 0;
    for (i, run) in &criteria {
        let t = Instant::now();
        let o = run();
        failed += usize::from(!o.pass);
        println!(
            "criterion {i}: {} ({:.1}s) {}",
            if o.pass { "PASS" } else { "FAIL" },
            t.elapsed().as_secs_f64(),
            o.detail
        );
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
